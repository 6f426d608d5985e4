#include "picard/eval_model.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace picard {

namespace {

struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x2545f4914f6cdd1dull) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    int range(int lo, int hi) { return lo + (int)(next() % (std::uint64_t)(hi - lo + 1)); }
};

// one family member: Satake values and a lattice kernel
struct Member {
    std::array<Rational, 4> tau; // values of T0..T3
    std::map<int, Rational> kernel;
};

struct Family {
    Member m[2];                       // m[1] is the Weyl partner of m[0]
    std::array<Rational, 2> sym_base;  // trace value of the Pu bracket per member

    // trace value of a symbol at a member: associate brackets cross members
    Rational symval(const SpectralSymbol& s, int i) const {
        if (s.kind == SpectralSymbol::Kind::IndP && s.parabolic == Parabolic::Pd)
            return sym_base[1 - i];
        return sym_base[i];
    }
};

Family random_family(Rng& rng, int N) {
    Family f;
    for (auto& t : f.m[0].tau) t = Rational(rng.range(1, 6), rng.range(1, 3));
    f.m[1].tau = f.m[0].tau;
    std::swap(f.m[1].tau[2], f.m[1].tau[3]); // T2 <-> T3
    for (int x = -N; x <= N; ++x) {
        Rational v(rng.range(-2, 2));
        if (!v.is_zero()) f.m[0].kernel[x] = v;
    }
    for (const auto& [x, v] : f.m[0].kernel) f.m[1].kernel[-x] = v;
    f.sym_base = {Rational(rng.range(1, 5)), Rational(rng.range(1, 5))};
    return f;
}

Rational mono_eval(const ExpVec& e, const std::array<Rational, 4>& tau) {
    Rational v(1);
    for (int i = 0; i < 4; ++i) {
        int k = e[(int)Gen::T0 + i];
        for (int r = 0; r < k; ++r) v *= tau[i];
        for (int r = 0; r > k; --r) v /= tau[i];
    }
    return v;
}

bool in_domain(const RestrictedSum& rs, int x, int span) {
    // cut * span is never a lattice point for the half cuts (span odd)
    switch (rs.domain) {
        case SumDomain::upper: return Rational(2 * x) > rs.cut * Rational(2 * span);
        case SumDomain::lower: return Rational(2 * x) < rs.cut * Rational(2 * span);
        case SumDomain::full: return true;
        case SumDomain::abs_upper: return x > 0;
        case SumDomain::abs_lower: return x < 0;
        case SumDomain::abs_full: return x != 0;
    }
    return false;
}

int exponent_at(const RestrictedSum& rs, int x) {
    switch (rs.domain) {
        case SumDomain::abs_upper:
        case SumDomain::abs_lower:
        case SumDomain::abs_full: return rs.weight * (x < 0 ? -x : x);
        default: return rs.weight * x;
    }
}

// exact value of a row over the family: a Laurent polynomial in PH and EX
LaurentPoly family_value(const RowTerm& row, const Family& f, int N, int span) {
    LaurentPoly total;
    for (int i = 0; i < 2; ++i) {
        Rational scalar = f.symval(row.symbol, i) * row.q * mono_eval(row.tmono, f.m[i].tau);
        LaurentPoly lattice;
        for (const auto& [x, v] : f.m[i].kernel) {
            if (x < -N || x > N || !in_domain(row.rs, x, span)) continue;
            lattice += LaurentPoly::gen(Gen::EX, exponent_at(row.rs, x), v);
        }
        total += LaurentPoly::gen(Gen::PH, row.ph, scalar) * lattice;
    }
    return total;
}

LaurentPoly family_value(const std::vector<RowTerm>& rows, const Family& f, int N, int span) {
    LaurentPoly total;
    for (const auto& r : rows) total += family_value(r, f, N, span);
    return total;
}

// Weyl transport of a row to the associate bracket: the kernel-sound half
// of the rebalance rule.
RowTerm transport(const RowTerm& row) {
    RowTerm t = row;
    t.symbol = associate(row.symbol);
    ExpVec e = row.tmono;
    std::swap(e[(int)Gen::T2], e[(int)Gen::T3]);
    t.tmono = e;
    t.rs.domain = row.rs.domain == SumDomain::upper ? SumDomain::lower : SumDomain::upper;
    t.rs.cut = -row.rs.cut;
    t.rs.weight = -row.rs.weight;
    return t;
}

bool check_r2_structural(const RowTerm& before, const RowTerm& after) {
    if (after.q != before.q) return false;
    if (after.ph != 4 - before.ph) return false;
    ExpVec e = before.tmono;
    std::swap(e[(int)Gen::T2], e[(int)Gen::T3]);
    if (!(after.tmono == e)) return false;
    if (after.rs.cut != -before.rs.cut) return false;
    if (after.rs.weight != before.rs.weight) return false;
    bool mirrored = (before.rs.domain == SumDomain::upper && after.rs.domain == SumDomain::lower) ||
                    (before.rs.domain == SumDomain::lower && after.rs.domain == SumDomain::upper);
    if (!mirrored) return false;
    // weight law: the exponent pair reflects through PH^2
    Rational nu_t = before.symbol.side == Side::G ? before.rs.cut : -before.rs.cut;
    Rational law = Rational(2) * (lambda_nu_pairing(before.symbol.lambda, nu_t) + Rational(1));
    if (Rational(before.ph) != law) return false;
    return before.ph + after.ph == 4;
}

} // namespace

bool check_rule_instance(const RuleInstance& inst, const ModelParams& params) {
    Rng rng(params.seed);
    Family f = random_family(rng, params.N);
    switch (inst.kind) {
        case RuleInstance::Kind::R1:
        case RuleInstance::Kind::R3: {
            LaurentPoly lhs = family_value(inst.before, f, params.N, params.span);
            LaurentPoly rhs = family_value(inst.after, f, params.N, params.span);
            return lhs == rhs;
        }
        case RuleInstance::Kind::R2: {
            if (inst.before.size() != 1 || inst.after.size() != 1) return false;
            if (!check_r2_structural(inst.before[0], inst.after[0])) return false;
            LaurentPoly lhs = family_value(inst.before[0], f, params.N, params.span);
            LaurentPoly rhs = family_value(transport(inst.before[0]), f, params.N, params.span);
            return lhs == rhs;
        }
    }
    return false;
}

SoundnessReport run_soundness_suite(int kernels_per_size, std::uint64_t seed) {
    RewriteTrace trace;
    for (int k = 1; k <= 3; ++k) combined_sum(k, &trace);

    SoundnessReport report;
    report.instances = (int)trace.instances.size();
    Rng seeds(seed);
    for (const auto& inst : trace.instances)
        for (int N : {2, 4, 8})
            for (int i = 0; i < kernels_per_size; ++i) {
                ModelParams p;
                p.N = N;
                p.span = N == 2 ? 1 : 5; // odd span below the truncation
                p.seed = seeds.next();
                ++report.kernel_checks;
                if (!check_rule_instance(inst, p)) ++report.failures;
            }
    return report;
}

} // namespace picard
