#pragma once

#include <vector>

#include "picard/term_sum.hpp"

namespace picard {

// The stabilization pipeline: assemble the three major sums per side from
// the d-coefficients and the local-sum tables, glue the constrained sums,
// collapse the parabolic pairs, and combine the two sides so that every
// constrained term cancels. The end product is the closed-form spectral
// expression, certified against its transcription.

// ---- rewrite bookkeeping ------------------------------------------------------

// A term in table shape: rational x PH-power x T-monomial x constrained sum.
struct RowTerm {
    Rational q;
    int ph = 0;
    ExpVec tmono = kZeroExp;
    SpectralSymbol symbol;
    RestrictedSum rs;

    TermSum::Term term() const;
    bool operator==(const RowTerm& o) const;
};

struct RuleInstance {
    enum class Kind { R1, R2, R3 };
    Kind kind;
    std::vector<RowTerm> before;
    std::vector<RowTerm> after;
};

struct RewriteTrace {
    std::vector<RuleInstance> instances;
};

// ---- pipeline -------------------------------------------------------------------

enum class Stage { open, glued, merged, combined };
const char* stage_name(Stage s);

// Opening form of major sum k (1,2,3) for one side, per the term shape of
// the spectral expansion: d-coefficient x parabolic trace x p-power x Satake
// monomial x constrained lattice sum.
TermSum assemble_major_sum(Side side, int k);

// Applies, to fixpoint and deterministically, the three rewrite rules:
//   R2  Weyl rebalance: the innermost half-line row of a bracket is replaced
//       by its orbit partner (PH exponent reflected through PH^2, monomial
//       swapped along the T1 pairing, domain mirrored, weight kept);
//   R1  complementary half-lines at one nonzero cut merge to the full line;
//   R3  an outward-weighted half-line at cut zero takes the |x| form.
// Signals if the bracket fails to reach the expected normal form.
TermSum rewrite_glue(const TermSum& ts, RewriteTrace* trace = nullptr);

// Full-domain parabolic terms absorb their lattice sum into the level-p
// torus trace; matched |x| half-line pairs join into one full |x| term.
// Signals if a parabolic symbol survives.
TermSum merge_pu_pd(const TermSum& ts);

// Identify the endoscopic families with the base-change ones (mu^{-1} c <->
// c), identify the torus traces, and add. Signals if any constrained term
// survives with a nonzero coefficient.
TermSum match_families(const TermSum& g, const TermSum& h);

// Convenience: the pipeline stage for one (side, k); combined takes both sides.
TermSum major_sum_stage(Side side, int k, Stage stage, RewriteTrace* trace = nullptr);
TermSum combined_sum(int k, RewriteTrace* trace = nullptr);

// One half of the sum of the three combined sums, verified against the
// transcribed closed form before returning.
TermSum theorem_7_1();

// The transcription it is checked against.
TermSum theorem_7_1_transcribed();

// ---- constant ledger ------------------------------------------------------------

struct ConstantLedger {
    Rational tau_G, tau_H;  // Tamagawa numbers 1, 2
    Rational d_G, d_H;      // 2^{n-1} = 4 for n = 3
    Rational C_G, C_H;      // 1/4
    Rational J_Z;           // 4
    int dim_a_G;            // 2
    Rational tau_G0;        // 1

    Rational weight_G() const { return C_G * d_G / tau_G; } // 1
    Rational weight_H() const { return C_H * d_H / tau_H; } // 1/2
};

// Exact values with the defining identity C = tau(G0) J_Z / (2^dim * d)
// re-derived and checked.
ConstantLedger constant_ledger();

} // namespace picard
