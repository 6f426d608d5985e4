#pragma once

#include <optional>
#include <string>
#include <vector>

#include "picard/arch_characters.hpp"
#include "picard/laurent.hpp"
#include "picard/root_datum.hpp"

namespace picard {

// The unramified computations at p: cocharacters evaluated on the Satake
// parameter, the p-power weights p^{j(Lambda(nu)+1)}, the six full sums per
// side and the eighteen constrained sums per side, kept as formal objects.

// ---- Satake monomials ---------------------------------------------------------

struct SatakeMonomial {
    int sign = 1;
    ExpVec exps = kZeroExp; // over T0..T3 only

    LaurentPoly poly() const { return LaurentPoly::monomial(Rational(sign), exps); }
    bool operator==(const SatakeMonomial& o) const { return sign == o.sign && exps == o.exps; }
};

SatakeMonomial satake_eval(const Cocharacter& nu);
SatakeMonomial satake_eval(const SignedCocharacter& nu);

// ---- restricted sums ------------------------------------------------------------

enum class SumDomain {
    upper,     // x > cut * j log p
    lower,     // x < cut * j log p
    full,      // all of the lattice
    abs_upper, // e^{|w x|} over x > 0
    abs_lower, // e^{|w x|} over x < 0
    abs_full   // e^{|w x|} over x != 0
};

const char* domain_name(SumDomain d);

enum class Level { pq, p };
const char* level_name(Level l);

// A formal weighted sum over the constrained lattice direction. The kernel
// is never evaluated; weight and domain are all the rewriting ever touches.
struct RestrictedSum {
    int weight = 0;        // w in e^{w x} (absolute value applies on abs domains)
    SumDomain domain = SumDomain::full;
    Rational cut;          // c in x >< c j log p; 0 for full/abs domains
    Level level = Level::pq;
    std::string rep;       // opaque kernel tag

    bool operator==(const RestrictedSum& o) const {
        return weight == o.weight && domain == o.domain && cut == o.cut && level == o.level &&
               rep == o.rep;
    }
    std::string str() const;
};

// ---- case identifiers -----------------------------------------------------------

// The 48 labels: per side, six letters A..F; "1" is the full sum, "2.1-2.3"
// the constrained sums. C and D duplicate A and B (stored as aliases).
struct CaseId {
    Side side = Side::G;
    char letter = 'A'; // 'A'..'F'
    int series = 1;    // 1 or 2
    int row = 0;       // 1..3 for the 2-series, 0 for the 1-series

    bool operator==(const CaseId& o) const {
        return side == o.side && letter == o.letter && series == o.series && row == o.row;
    }
    std::string str() const; // "A1", "H-F2.3", ...
};

std::optional<CaseId> parse_case_id(const std::string& s);
std::vector<CaseId> all_case_ids(); // 48 labels in display order

// A resolved row of the local-sum index.
struct CaseRow {
    CaseId id;              // the row's own label
    CaseId alias_of;        // primary label (C rows point at A, D at B)
    Parabolic parabolic = Parabolic::Pu;
    LambdaTag lambda = LambdaTag::minus_alpha_half;
    Cocharacter nu;              // orbit member (G coordinates)
    Rational nu_t;               // the x-part of nu_T as listed on this row
    Rational transcribed_cut;    // cut as printed (H-B2.2 deviates, flagged)
    int weight = 0;              // w in e^{w x}
    SumDomain direction = SumDomain::upper;
    int ppower = 0;              // PH exponent 2(Lambda(nu_T)+1) from this row
    SatakeMonomial monomial;     // side-appropriate evaluation
};

// The full 36-item index: 12 one-series entries (counting the C/D aliases,
// each carrying its leading orbit line) and 24 unique two-series rows.
// Alias labels resolve to their primary row but keep their own printed cut.
std::vector<CaseRow> case_table();
CaseRow case_row(const CaseId& id);

// The three orbit lines of a one-series label, in display order.
std::vector<CaseRow> one_series_lines(const CaseId& id);

// Full sum: sum over the orbit of PH^{2(Lambda(nu_T)+1)} * satake_eval(nu).
LaurentPoly full_sum(const CaseId& id);

// The transcribed triple of a constrained-sum label.
struct RestrictedCase {
    SatakeMonomial monomial;
    int ppower; // PH exponent of the matching full-sum term
    RestrictedSum sum;
};
RestrictedCase restricted_sum(const CaseId& id);

// Kernel tags per side.
std::string kernel_tag(Side side);

} // namespace picard
