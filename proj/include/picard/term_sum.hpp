#pragma once

#include <optional>
#include <string>
#include <vector>

#include "picard/arch_characters.hpp"
#include "picard/hecke_local.hpp"
#include "picard/laurent.hpp"

namespace picard {

// The currency of the stabilization: formal linear combinations of
// (exact Laurent coefficient) x (opaque spectral trace) x (optional
// constrained lattice sum).

struct SpectralSymbol {
    enum class Kind { IndT, IndP };

    Kind kind = Kind::IndP;
    Parabolic parabolic = Parabolic::Pu; // IndP only
    LambdaTag lambda = LambdaTag::minus_alpha_half;
    Level level = Level::pq;
    TorusCharacterLabel family;
    Side side = Side::G; // combined sums are keyed to G

    bool operator==(const SpectralSymbol& o) const;
    std::string str() const;
};

// canonical comparison key over (family, kind, parabolic, level, lambda, side)
bool symbol_less(const SpectralSymbol& a, const SpectralSymbol& b);

// the associate symbol across the parabolic pair: IndP(Pu, L) <-> IndP(Pd, -L)
SpectralSymbol associate(const SpectralSymbol& s);

struct TermSum {
    struct Term {
        LaurentPoly coeff;
        SpectralSymbol symbol;
        std::optional<RestrictedSum> rsum;
    };

    std::vector<Term> terms; // canonical order, like terms merged

    void add(Term t);            // merge into canonical position
    void add(const TermSum& o);
    TermSum scale(const Rational& c) const;
    void normalize();            // drop zero coefficients, sort, merge

    bool has_restricted_terms() const;
    bool operator==(const TermSum& o) const;

    std::string to_json() const;
    std::string to_text() const;
    static TermSum from_json(const std::string& text);
};

std::string rsum_to_json_string(const RestrictedSum& r);

} // namespace picard
