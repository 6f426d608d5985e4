#include "picard/arch_characters.hpp"

#include <stdexcept>

namespace picard {

namespace {

// chamber sign epsilon_R(X) = (-1)^{|R+_X \cap (-R+)|}
int chamber_sign(Chamber c) { return c == Chamber::pos ? 1 : -1; }

// exponential e^{nu(X)} of a root as a monomial in EX (e^x) and U (e^{i theta}):
// alpha1 |-> EX U, alpha2 |-> EX U^{-1}, alpha |-> EX^2.
LaurentPoly root_exponential(RootLabel nu) {
    switch (nu) {
        case RootLabel::alpha1: return LaurentPoly::gen(Gen::EX, 1) * LaurentPoly::gen(Gen::U, 1);
        case RootLabel::alpha2: return LaurentPoly::gen(Gen::EX, 1) * LaurentPoly::gen(Gen::U, -1);
        case RootLabel::alpha: return LaurentPoly::gen(Gen::EX, 2);
        default: return LaurentPoly::power(root_exponential(root_negate(nu)), -1);
    }
}

// H-side highest weights lambda = Lambda + rho_B as exponentials:
//   rho+ : EX U^{-1} MINV,  rho- : EX U MINV,  rho0 : EX^2 MINV.
LaurentPoly h_weight(Packet p) {
    LaurentPoly m = LaurentPoly::gen(Gen::MINV, 1);
    switch (p) {
        case Packet::H_rho_plus:
            return LaurentPoly::gen(Gen::EX, 1) * LaurentPoly::gen(Gen::U, -1) * m;
        case Packet::H_rho_minus:
            return LaurentPoly::gen(Gen::EX, 1) * LaurentPoly::gen(Gen::U, 1) * m;
        case Packet::H_rho_zero: return LaurentPoly::gen(Gen::EX, 2) * m;
        default: throw std::invalid_argument("h_weight: not an H packet");
    }
}

// reflection through the real root: EX -> EX^{-1}, U -> U^{-1}, MINV fixed
LaurentPoly reflect(const LaurentPoly& p) {
    return p.map_exponent(Gen::EX, -1).map_exponent(Gen::U, -1);
}

int ex_exponent_sign(const LaurentPoly& mono) {
    return mono.terms().begin()->first[(int)Gen::EX] > 0 ? 1 : -1;
}

// cbar for an exponential weight: 0 when the weight points into the chamber,
// 2 when it points out. Same dichotomy as the root table.
int cbar_weight(const LaurentPoly& weight, Chamber chamber) {
    int s = ex_exponent_sign(weight);
    if (chamber == Chamber::pos) return s > 0 ? 0 : 2;
    return s > 0 ? 2 : 0;
}

} // namespace

Side packet_side(Packet p) { return p == Packet::G_Pi ? Side::G : Side::H; }

const char* packet_name(Packet p) {
    switch (p) {
        case Packet::G_Pi: return "Pi";
        case Packet::H_rho_plus: return "rho+";
        case Packet::H_rho_minus: return "rho-";
        case Packet::H_rho_zero: return "rho0";
    }
    throw std::invalid_argument("packet_name");
}

std::string TorusCharacterLabel::str() const {
    std::string s;
    if (u_exp == 1) s = "e^{i(theta1+theta3)}";
    else if (u_exp == -1) s = "e^{-i(theta1+theta3)}";
    else if (u_exp != 0) s = "e^{" + std::to_string(u_exp) + "i(theta1+theta3)}";
    if (mu_inv) s += s.empty() ? "mu^{-1}" : " mu^{-1}";
    if (s.empty()) s = "1";
    return s;
}

const char* parabolic_name(Parabolic p) { return p == Parabolic::Pu ? "Pu" : "Pd"; }

LaurentPoly stable_character(Packet p, Chamber chamber) {
    if (p == Packet::G_Pi) {
        // (-1)^{q} = 1, q = 2. Sum det(omega) cbar(Q+_nu, R+_X) e^{nu(X)} over
        // the six roots, times the chamber sign.
        LaurentPoly sum;
        for (RootLabel nu : kAllRoots) {
            int c = cbar(nu, chamber);
            if (c == 0) continue;
            sum += root_exponential(nu).scale(Rational(omega_det(nu) * c));
        }
        return sum.scale(Rational(chamber_sign(chamber)));
    }
    // H side: q = 1, Weyl group {1, s_alpha}, weights lambda and s_alpha(lambda).
    LaurentPoly lam = h_weight(p);
    LaurentPoly ref = reflect(lam);
    LaurentPoly sum = lam.scale(Rational(cbar_weight(lam, chamber)));
    sum += ref.scale(Rational(-cbar_weight(ref, chamber))); // det(s_alpha) = -1
    return sum.scale(Rational(-chamber_sign(chamber)));     // (-1)^{q(H)} = -1
}

int epsilon(Side side) { return side == Side::G ? 1 : -1; }

LaurentPoly test_character(TestObject obj, Chamber chamber) {
    if (obj == TestObject::G)
        return stable_character(Packet::G_Pi, chamber).scale(Rational(epsilon(Side::G)));
    LaurentPoly combo = stable_character(Packet::H_rho_plus, chamber) +
                        stable_character(Packet::H_rho_minus, chamber) -
                        stable_character(Packet::H_rho_zero, chamber);
    return combo.scale(Rational(epsilon(Side::H)));
}

std::vector<CDEntry> read_off_cd(TestObject obj, Chamber chamber) {
    LaurentPoly phi = test_character(obj, chamber);
    std::map<TorusCharacterLabel, LaurentPoly> buckets;
    for (const auto& [e, c] : phi.terms()) {
        for (int i = 0; i < kGenCount; ++i) {
            Gen g = (Gen)i;
            if (g == Gen::U || g == Gen::MINV || g == Gen::EX) continue;
            if (e[i] != 0)
                throw std::logic_error("read_off_cd: monomial leaves the gamma x EX span");
        }
        TorusCharacterLabel lab{e[(int)Gen::U], e[(int)Gen::MINV] != 0};
        if (e[(int)Gen::MINV] != 0 && e[(int)Gen::MINV] != 1)
            throw std::logic_error("read_off_cd: unexpected mu-power");
        buckets[lab] += LaurentPoly::gen(Gen::EX, e[(int)Gen::EX], c);
    }
    std::vector<CDEntry> out;
    for (auto& [lab, val] : buckets) out.push_back({lab, val});
    return out;
}

Chamber parabolic_chamber(Parabolic p) {
    return p == Parabolic::Pu ? Chamber::pos : Chamber::neg;
}

std::vector<DEntry> fourier_d(TestObject obj, Parabolic parabolic) {
    std::vector<DEntry> out;
    for (const auto& cd : read_off_cd(obj, parabolic_chamber(parabolic))) {
        if (cd.value.size() != 1)
            throw std::logic_error("fourier_d: coefficient is not a single exponential");
        const auto& [e, c] = *cd.value.terms().begin();
        LambdaTag tag = lambda_from_ex_exponent(e[(int)Gen::EX]);
        if (!c.is_integer())
            throw std::logic_error("fourier_d: non-integer coefficient");
        out.push_back({cd.character, parabolic, tag, (int)c.num()});
    }
    return out;
}

} // namespace picard
