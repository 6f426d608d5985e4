#include "picard/root_datum.hpp"

#include <algorithm>
#include <stdexcept>

namespace picard {

namespace {

const Rational kHalf(1, 2);

RootVector make(Rational ax, Rational bx, Rational ay, Rational by) {
    return {QSqrt3(ax, bx), QSqrt3(ay, by)};
}

} // namespace

const char* root_name(RootLabel r) {
    switch (r) {
        case RootLabel::alpha1: return "alpha1";
        case RootLabel::alpha2: return "alpha2";
        case RootLabel::alpha: return "alpha";
        case RootLabel::minus_alpha1: return "-alpha1";
        case RootLabel::minus_alpha2: return "-alpha2";
        case RootLabel::minus_alpha: return "-alpha";
    }
    throw std::invalid_argument("root_name");
}

RootLabel root_negate(RootLabel r) {
    switch (r) {
        case RootLabel::alpha1: return RootLabel::minus_alpha1;
        case RootLabel::alpha2: return RootLabel::minus_alpha2;
        case RootLabel::alpha: return RootLabel::minus_alpha;
        case RootLabel::minus_alpha1: return RootLabel::alpha1;
        case RootLabel::minus_alpha2: return RootLabel::alpha2;
        case RootLabel::minus_alpha: return RootLabel::alpha;
    }
    throw std::invalid_argument("root_negate");
}

RootVector root_vector(RootLabel r) {
    switch (r) {
        case RootLabel::alpha1: return make(2, 0, 0, 0);
        case RootLabel::alpha2: return make(-1, 0, 0, 1);
        case RootLabel::alpha: return make(1, 0, 0, 1);
        default: return -root_vector(root_negate(r));
    }
}

RootVector coroot_vector(RootLabel r) {
    switch (r) {
        case RootLabel::alpha1: return make(1, 0, 0, 0);
        case RootLabel::alpha2: return make(-kHalf, 0, 0, kHalf);
        case RootLabel::alpha: return make(kHalf, 0, 0, kHalf);
        default: return -coroot_vector(root_negate(r));
    }
}

Rational pairing(const RootVector& root, const RootVector& coroot) {
    QSqrt3 dot = root.x * coroot.x + root.y * coroot.y;
    if (!dot.is_rational())
        throw std::logic_error("pairing: sqrt(3) part failed to cancel (corrupted root table)");
    return dot.a();
}

RootVector WeylElement::apply(const RootVector& v) const {
    RootVector r = v;
    // word applied right to left: s_w1 s_w2 ... s_wk (v) evaluates innermost last
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        RootLabel lab = *it == Reflection::s_alpha1   ? RootLabel::alpha1
                        : *it == Reflection::s_alpha2 ? RootLabel::alpha2
                                                      : RootLabel::alpha;
        Rational k = pairing(r, coroot_vector(lab));
        RootVector root = root_vector(lab);
        QSqrt3 kk(k);
        r = {r.x - kk * root.x, r.y - kk * root.y};
    }
    return r;
}

bool WeylElement::operator==(const WeylElement& o) const {
    // equality as transformations: compare the action on both simple roots
    for (RootLabel lab : {RootLabel::alpha1, RootLabel::alpha2})
        if (!(apply(root_vector(lab)) == o.apply(root_vector(lab)))) return false;
    return true;
}

int weyl_det(const WeylElement& w) { return w.det(); }

std::vector<WeylElement> weyl_group_elements() {
    std::vector<WeylElement> out;
    auto contains = [&](const WeylElement& w) {
        return std::any_of(out.begin(), out.end(), [&](const WeylElement& e) { return e == w; });
    };
    std::vector<WeylElement> frontier = {WeylElement{}};
    out.push_back(WeylElement{});
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const auto& w : frontier)
            for (Reflection s : {Reflection::s_alpha1, Reflection::s_alpha2, Reflection::s_alpha}) {
                WeylElement e = w;
                e.word.insert(e.word.begin(), s);
                if (!contains(e)) {
                    out.push_back(e);
                    next.push_back(e);
                }
            }
        frontier = std::move(next);
    }
    return out;
}

int qplus_sign(RootLabel nu) {
    // Q+_nu = {alphav} iff nu(alphav) > 0
    Rational p = pairing(root_vector(nu), coroot_vector(RootLabel::alpha));
    if (p.sign() > 0) return 1;
    if (p.sign() < 0) return -1;
    throw std::logic_error("qplus_sign: root orthogonal to alphav");
}

int cbar(RootLabel nu, Chamber chamber) {
    int positive = qplus_sign(nu); // +1 on {a1, a2, a}, -1 on the negatives
    if (chamber == Chamber::pos) return positive > 0 ? 0 : 2;
    return positive > 0 ? 2 : 0;
}

WeylElement omega_for(RootLabel nu) {
    using R = Reflection;
    switch (nu) {
        case RootLabel::alpha1: return {{R::s_alpha, R::s_alpha2, R::s_alpha1}};
        case RootLabel::alpha2: return {{R::s_alpha1}};
        case RootLabel::alpha: return {{}};
        case RootLabel::minus_alpha1: return {{R::s_alpha2, R::s_alpha}};
        case RootLabel::minus_alpha2: return {{R::s_alpha1, R::s_alpha}};
        case RootLabel::minus_alpha: return {{R::s_alpha}};
    }
    throw std::invalid_argument("omega_for");
}

int omega_det(RootLabel nu) { return omega_for(nu).det(); }

std::string Cocharacter::str() const {
    return "(" + std::to_string(sim) + ",(" + std::to_string(gl[0]) + "," +
           std::to_string(gl[1]) + "," + std::to_string(gl[2]) + "))";
}

Cocharacter mu() { return Cocharacter{1, {1, 1, 0}}; }

std::vector<Cocharacter> weyl_orbit(const Cocharacter& c) {
    std::array<int, 3> g = c.gl;
    std::sort(g.begin(), g.end(), std::greater<int>());
    std::vector<Cocharacter> out;
    // all six permutations, deduplicated, then arranged so that the orbit of
    // mu comes out in display order (110), (101), (011)
    do {
        Cocharacter e{c.sim, g};
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    } while (std::prev_permutation(g.begin(), g.end()));
    return out;
}

std::string SignedCocharacter::str() const {
    return "(" + std::to_string(z) + "," + std::to_string(z1) + ",(" +
           std::to_string(z2[0]) + "," + std::to_string(z2[1]) + "))";
}

SignedCocharacter transfer_cochar(const Cocharacter& nu) {
    // The three-row transfer table:
    //   (1,(1,1,0)) -> (1,1,(-1,0))   sign -1   (one sign-carrying factor)
    //   (1,(1,0,1)) -> (1,1,(0,-1))   sign -1
    //   (1,(0,1,1)) -> (1,0,(-1,-1))  sign +1   (two sign-carrying factors)
    if (nu == Cocharacter{1, {1, 1, 0}}) return {-1, 1, 1, {-1, 0}};
    if (nu == Cocharacter{1, {1, 0, 1}}) return {-1, 1, 1, {0, -1}};
    if (nu == Cocharacter{1, {0, 1, 1}}) return {+1, 1, 0, {-1, -1}};
    throw std::invalid_argument("transfer_cochar: " + nu.str() + " is not in the orbit of mu");
}

const char* lambda_name(LambdaTag t) {
    switch (t) {
        case LambdaTag::minus_alpha_half: return "-a/2";
        case LambdaTag::alpha_half: return "a/2";
        case LambdaTag::minus_alpha: return "-a";
        case LambdaTag::alpha: return "a";
    }
    throw std::invalid_argument("lambda_name");
}

std::array<Rational, 3> lambda_triple(LambdaTag t) {
    switch (t) {
        case LambdaTag::minus_alpha_half: return {Rational(0), -kHalf, kHalf};
        case LambdaTag::alpha_half: return {Rational(0), kHalf, -kHalf};
        case LambdaTag::minus_alpha: return {Rational(0), Rational(-1), Rational(1)};
        case LambdaTag::alpha: return {Rational(0), Rational(1), Rational(-1)};
    }
    throw std::invalid_argument("lambda_triple");
}

std::array<int, 3> lambda_fourier_triple(LambdaTag t) {
    switch (t) {
        case LambdaTag::minus_alpha_half: return {1, 0, -1};
        case LambdaTag::alpha_half: return {-1, 0, 1};
        case LambdaTag::minus_alpha: return {2, 0, -2};
        case LambdaTag::alpha: return {-2, 0, 2};
    }
    throw std::invalid_argument("lambda_fourier_triple");
}

LambdaTag lambda_mirror(LambdaTag t) {
    switch (t) {
        case LambdaTag::minus_alpha_half: return LambdaTag::alpha_half;
        case LambdaTag::alpha_half: return LambdaTag::minus_alpha_half;
        case LambdaTag::minus_alpha: return LambdaTag::alpha;
        case LambdaTag::alpha: return LambdaTag::minus_alpha;
    }
    throw std::invalid_argument("lambda_mirror");
}

int lambda_weight(LambdaTag t) {
    auto tr = lambda_triple(t);
    Rational w = -(tr[1] - tr[2]); // X = (y, x, -x)
    if (!w.is_integer()) throw std::logic_error("lambda_weight: non-integer");
    return (int)w.num();
}

int lambda_ex_exponent(LambdaTag t) {
    // The Fourier triple pairs against (x1, x2, x3) with x3 = -x1 on the
    // relevant line, and EX stands for e^{x1 - x3}: exponent is -f0.
    auto f = lambda_fourier_triple(t);
    return -f[0];
}

LambdaTag lambda_from_ex_exponent(int k) {
    for (LambdaTag t : kAllLambda)
        if (lambda_ex_exponent(t) == k) return t;
    throw std::domain_error("lambda_from_ex_exponent: no tag with exponent " +
                            std::to_string(k));
}

Rational lambda_nu_pairing(LambdaTag t, const Rational& nu_x) {
    auto tr = lambda_triple(t);
    // dot of (0, L2, L3) with (0, c, -c)
    return tr[1] * nu_x + tr[2] * (-nu_x);
}

Rational nu_t_x(const Cocharacter& nu) {
    if (nu == Cocharacter{1, {1, 1, 0}}) return kHalf;
    if (nu == Cocharacter{1, {1, 0, 1}}) return -kHalf;
    if (nu == Cocharacter{1, {0, 1, 1}}) return Rational(0);
    throw std::invalid_argument("nu_t_x: " + nu.str() + " is not in the orbit of mu");
}

} // namespace picard
