#pragma once

#include <array>
#include <map>
#include <initializer_list>
#include <stdexcept>

#include "picard/rational.hpp"

namespace picard {

// The fixed generator alphabet. Every value the engine manipulates is a
// Laurent polynomial over exactly these eight symbols:
//
//   PH   = p^{j/2}             (so p^j = PH^2, p^{3j/2} = PH^3)
//   T0   = t^j                 Satake parameter, similitude slot
//   T1,T2,T3 = t_1^j,t_2^j,t_3^j
//   U    = e^{i theta}         compact torus character
//   MINV = mu(gamma)^{-1}
//   EX   = e^{x}               split torus coordinate
//
// The alphabet is closed: no operation introduces new generators, and all
// exponents are plain integers (half powers of p^j live in PH).
enum class Gen : int { PH = 0, T0, T1, T2, T3, U, MINV, EX };

inline constexpr int kGenCount = 8;
inline constexpr std::array<const char*, kGenCount> kGenNames =
    {"PH", "T0", "T1", "T2", "T3", "U", "MINV", "EX"};

using ExpVec = std::array<int, kGenCount>;

inline constexpr ExpVec kZeroExp = {0, 0, 0, 0, 0, 0, 0, 0};

// Canonical term order: descending lexicographic comparison taken over the
// generators in the sequence T0,T1,T2,T3,EX,U,MINV,PH. This is the order in
// which terms serialize and print; it matches the display conventions used
// throughout (Satake monomials lead, then the split coordinate, then the
// compact character, with p-powers breaking no tie that matters).
struct TermOrder {
    static constexpr std::array<Gen, kGenCount> sequence = {
        Gen::T0, Gen::T1, Gen::T2, Gen::T3, Gen::EX, Gen::U, Gen::MINV, Gen::PH};
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        for (Gen g : sequence) {
            int ea = a[(int)g], eb = b[(int)g];
            if (ea != eb) return ea > eb;
        }
        return false;
    }
};

// Exact Laurent polynomial in canonical form: at most one term per exponent
// vector, no zero coefficients stored. Equality is structural equality.
class LaurentPoly {
public:
    using TermMap = std::map<ExpVec, Rational, TermOrder>;

    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly constant(const Rational& c) { return monomial(c, kZeroExp); }
    static LaurentPoly one() { return constant(Rational(1)); }

    static LaurentPoly monomial(const Rational& coeff, const ExpVec& exps) {
        LaurentPoly p;
        if (!coeff.is_zero()) p.terms_[exps] = coeff;
        return p;
    }

    // c * g^e, e.g. gen(Gen::EX, -2)
    static LaurentPoly gen(Gen g, int e = 1, const Rational& c = Rational(1)) {
        ExpVec v = kZeroExp;
        v[(int)g] = e;
        return monomial(c, v);
    }

    // c * product of generators at exponent 1, e.g. mono({T0,T1,T2})
    static LaurentPoly mono(std::initializer_list<Gen> gens, const Rational& c = Rational(1)) {
        ExpVec v = kZeroExp;
        for (Gen g : gens) v[(int)g] += 1;
        return monomial(c, v);
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) {
                ExpVec e;
                for (int i = 0; i < kGenCount; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scale(const Rational& c) const {
        LaurentPoly r;
        if (c.is_zero()) return r;
        for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
        return r;
    }

    // Substitute g^e -> g^(m*e). Used for chamber reflection (m = -1).
    LaurentPoly map_exponent(Gen g, int m) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) {
            ExpVec v = e;
            v[(int)g] *= m;
            r.add_term(v, c);
        }
        return r;
    }

    // Swap the exponents of two generators in every term.
    LaurentPoly swap_gens(Gen a, Gen b) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) {
            ExpVec v = e;
            std::swap(v[(int)a], v[(int)b]);
            r.add_term(v, c);
        }
        return r;
    }

    // Substitute a whole polynomial for one generator; the generator must
    // occur with nonnegative exponents unless the replacement is a monomial.
    LaurentPoly substitute(Gen g, const LaurentPoly& value) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) {
            int k = e[(int)g];
            ExpVec rest = e;
            rest[(int)g] = 0;
            LaurentPoly term = monomial(c, rest);
            if (k != 0) term *= power(value, k);
            r += term;
        }
        return r;
    }

    Rational coeff(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    static LaurentPoly power(const LaurentPoly& base, int k) {
        if (k == 0) return one();
        if (k < 0) {
            if (base.size() != 1)
                throw std::domain_error("LaurentPoly: negative power of a non-monomial");
            const auto& [e, c] = *base.terms_.begin();
            ExpVec inv;
            for (int i = 0; i < kGenCount; ++i) inv[i] = -e[i];
            return power(monomial(Rational(1) / c, inv), -k);
        }
        LaurentPoly r = one();
        for (int i = 0; i < k; ++i) r *= base;
        return r;
    }

private:
    TermMap terms_;

    void add_term(const ExpVec& e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
};

inline LaurentPoly operator*(const Rational& c, const LaurentPoly& p) { return p.scale(c); }

} // namespace picard
