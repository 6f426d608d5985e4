#include "picard/stabilizer.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace picard {

namespace {

const Rational kHalf(1, 2);

ExpVec sigma_swap(const ExpVec& e) {
    ExpVec v = e;
    std::swap(v[(int)Gen::T2], v[(int)Gen::T3]);
    return v;
}

char letter_for(Side side, int k, Parabolic p) {
    // G: (A,B), (C,D), (E,F); H mirrors with the H- prefix handled by side
    static const char grid[3][2] = {{'A', 'B'}, {'C', 'D'}, {'E', 'F'}};
    (void)side;
    return grid[k - 1][p == Parabolic::Pu ? 0 : 1];
}

TorusCharacterLabel family_for(Side side, int k) {
    int u = k == 1 ? -1 : (k == 2 ? 1 : 0);
    return {u, side == Side::H};
}

int d_coefficient(Side side, int k, Parabolic p) {
    TestObject obj = side == Side::G ? TestObject::G : TestObject::H_combination;
    TorusCharacterLabel family = family_for(side, k);
    for (const DEntry& e : fourier_d(obj, p))
        if (e.character == family) return e.value;
    throw std::logic_error("d_coefficient: family not found");
}

RowTerm decompose(const TermSum::Term& t) {
    if (!t.rsum) throw std::logic_error("rewrite: term without a constrained sum");
    if (t.coeff.size() != 1) throw std::logic_error("rewrite: coefficient is not a monomial");
    const auto& [e, q] = *t.coeff.terms().begin();
    RowTerm r;
    r.q = q;
    r.ph = e[(int)Gen::PH];
    r.tmono = e;
    r.tmono[(int)Gen::PH] = 0;
    for (Gen g : {Gen::U, Gen::MINV, Gen::EX})
        if (e[(int)g] != 0) throw std::logic_error("rewrite: coefficient outside the p-T span");
    r.symbol = t.symbol;
    r.rs = *t.rsum;
    return r;
}

bool same_symbol(const SpectralSymbol& a, const SpectralSymbol& b) { return a == b; }

} // namespace

TermSum::Term RowTerm::term() const {
    ExpVec e = tmono;
    e[(int)Gen::PH] = ph;
    return {LaurentPoly::monomial(q, e), symbol, rs};
}

bool RowTerm::operator==(const RowTerm& o) const {
    return q == o.q && ph == o.ph && tmono == o.tmono && same_symbol(symbol, o.symbol) &&
           rs == o.rs;
}

const char* stage_name(Stage s) {
    switch (s) {
        case Stage::open: return "open";
        case Stage::glued: return "glued";
        case Stage::merged: return "merged";
        case Stage::combined: return "combined";
    }
    throw std::invalid_argument("stage_name");
}

TermSum assemble_major_sum(Side side, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("assemble_major_sum: k out of range");
    TermSum out;
    TorusCharacterLabel family = family_for(side, k);
    for (Parabolic p : {Parabolic::Pu, Parabolic::Pd}) {
        char letter = letter_for(side, k, p);
        CaseId one{side, letter, 1, 0};
        int d = d_coefficient(side, k, p);
        auto lines = one_series_lines(one);
        for (int row = 1; row <= 3; ++row) {
            CaseRow two = case_row(CaseId{side, letter, 2, row});
            SpectralSymbol sym;
            sym.kind = SpectralSymbol::Kind::IndP;
            sym.parabolic = p;
            sym.lambda = two.lambda;
            sym.level = Level::pq;
            sym.family = family;
            sym.side = side;

            RowTerm r;
            r.q = Rational(d * lines[row - 1].monomial.sign);
            r.ph = lines[row - 1].ppower; // the full-sum p-power pairs with this row
            r.tmono = lines[row - 1].monomial.exps;
            r.symbol = sym;
            r.rs.weight = two.weight;
            r.rs.domain = two.direction;
            r.rs.cut = two.nu_t; // the displayed cut (self-consistent value)
            r.rs.level = Level::pq;
            r.rs.rep = kernel_tag(side);
            out.add(r.term());
        }
    }
    return out;
}

TermSum rewrite_glue(const TermSum& ts, RewriteTrace* trace) {
    // bucket the rows by bracket
    std::vector<std::pair<SpectralSymbol, std::vector<RowTerm>>> groups;
    for (const auto& t : ts.terms) {
        RowTerm r = decompose(t);
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return same_symbol(g.first, r.symbol); });
        if (it == groups.end())
            groups.push_back({r.symbol, {r}});
        else
            it->second.push_back(r);
    }

    TermSum out;
    for (auto& [sym, rows] : groups) {
        bool upper = rows.front().rs.domain == SumDomain::upper;
        for (const auto& r : rows)
            if ((r.rs.domain == SumDomain::upper) != upper)
                throw std::logic_error("rewrite: mixed directions inside one bracket");

        // R2 on the innermost half-line (cut +1/2 upper, -1/2 lower)
        Rational inner_cut = upper ? kHalf : -kHalf;
        auto inner =
            std::find_if(rows.begin(), rows.end(), [&](const RowTerm& r) { return r.rs.cut == inner_cut; });
        if (inner == rows.end()) throw std::logic_error("rewrite: no innermost row in bracket");

        RowTerm moved = *inner;
        moved.ph = 4 - inner->ph;
        moved.tmono = sigma_swap(inner->tmono);
        moved.rs.domain = upper ? SumDomain::lower : SumDomain::upper;
        moved.rs.cut = -inner->rs.cut;
        if (trace) trace->instances.push_back({RuleInstance::Kind::R2, {*inner}, {moved}});
        *inner = moved;

        // R1: the moved row now complements the partner at the same cut
        auto partner = std::find_if(rows.begin(), rows.end(), [&](const RowTerm& r) {
            return !(r == moved) && r.rs.cut == moved.rs.cut &&
                   r.rs.domain != moved.rs.domain && r.rs.domain != SumDomain::full;
        });
        if (partner == rows.end() || partner->q != moved.q || partner->ph != moved.ph ||
            !(partner->tmono == moved.tmono) || partner->rs.weight != moved.rs.weight)
            throw std::logic_error("rewrite: half-line partner missing, bracket not in normal form");

        RowTerm fused = *partner;
        fused.rs.domain = SumDomain::full;
        fused.rs.cut = Rational(0);
        if (trace) trace->instances.push_back({RuleInstance::Kind::R1, {moved, *partner}, {fused}});
        *partner = fused;
        rows.erase(std::find_if(rows.begin(), rows.end(),
                                [&](const RowTerm& r) { return r == moved; }));

        // R3 on the cut-zero row
        for (auto& r : rows) {
            if (r.rs.domain == SumDomain::full || r.rs.cut != Rational(0)) continue;
            bool outward = (r.rs.domain == SumDomain::upper && r.rs.weight > 0) ||
                           (r.rs.domain == SumDomain::lower && r.rs.weight < 0);
            if (!outward) throw std::logic_error("rewrite: inward half-line at cut zero");
            RowTerm absform = r;
            absform.rs.domain =
                r.rs.domain == SumDomain::upper ? SumDomain::abs_upper : SumDomain::abs_lower;
            absform.rs.weight = std::abs(r.rs.weight);
            if (trace) trace->instances.push_back({RuleInstance::Kind::R3, {r}, {absform}});
            r = absform;
        }

        for (const auto& r : rows) {
            if (r.rs.domain != SumDomain::full && r.rs.domain != SumDomain::abs_upper &&
                r.rs.domain != SumDomain::abs_lower)
                throw std::logic_error("rewrite: bracket failed to reach normal form");
            out.add(r.term());
        }
    }
    return out;
}

TermSum merge_pu_pd(const TermSum& ts) {
    TermSum out;
    std::vector<TermSum::Term> abs_terms;
    for (const auto& t : ts.terms) {
        if (!t.rsum) {
            out.add(t);
            continue;
        }
        SpectralSymbol sym = t.symbol;
        if (sym.kind == SpectralSymbol::Kind::IndP) {
            if (sym.parabolic == Parabolic::Pd) sym.lambda = lambda_mirror(sym.lambda);
            sym.kind = SpectralSymbol::Kind::IndT;
        }
        if (t.rsum->domain == SumDomain::full) {
            // the full-line lattice sum against the parabolic trace is the
            // level-p torus trace
            sym.level = Level::p;
            out.add({t.coeff, sym, std::nullopt});
        } else if (t.rsum->domain == SumDomain::abs_upper ||
                   t.rsum->domain == SumDomain::abs_lower) {
            TermSum::Term u = t;
            u.symbol = sym;
            abs_terms.push_back(std::move(u));
        } else {
            throw std::logic_error("merge_pu_pd: input not in post-rewrite form");
        }
    }

    // |x| halves concatenate: one upper and one lower with equal payloads
    while (!abs_terms.empty()) {
        TermSum::Term a = abs_terms.back();
        abs_terms.pop_back();
        auto match = std::find_if(abs_terms.begin(), abs_terms.end(), [&](const TermSum::Term& b) {
            return b.symbol == a.symbol && b.coeff == a.coeff &&
                   b.rsum->weight == a.rsum->weight && b.rsum->domain != a.rsum->domain;
        });
        if (match == abs_terms.end())
            throw std::logic_error("merge_pu_pd: unmatched |x| half-line");
        TermSum::Term fused = a;
        fused.rsum->domain = SumDomain::abs_full;
        abs_terms.erase(match);
        out.add(fused);
    }
    for (const auto& t : out.terms)
        if (t.symbol.kind == SpectralSymbol::Kind::IndP)
            throw std::logic_error("merge_pu_pd: parabolic symbol survived the merge");
    return out;
}

TermSum match_families(const TermSum& g, const TermSum& h) {
    TermSum out = g;
    for (TermSum::Term t : h.terms) {
        // the family dictionary: mu^{-1} c on the endoscopic side matches c
        t.symbol.family.mu_inv = false;
        t.symbol.side = Side::G;
        if (t.rsum) t.rsum->rep = kernel_tag(Side::G);
        out.add(t);
    }
    for (const auto& t : out.terms)
        if (t.rsum)
            throw std::logic_error("match_families: constrained term survived: " +
                                   t.symbol.str());
    return out;
}

TermSum major_sum_stage(Side side, int k, Stage stage, RewriteTrace* trace) {
    TermSum open = assemble_major_sum(side, k);
    if (stage == Stage::open) return open;
    TermSum glued = rewrite_glue(open, trace);
    if (stage == Stage::glued) return glued;
    TermSum merged = merge_pu_pd(glued);
    if (stage == Stage::merged) return merged;
    throw std::invalid_argument("major_sum_stage: combined is a two-sided stage");
}

TermSum combined_sum(int k, RewriteTrace* trace) {
    return match_families(major_sum_stage(Side::G, k, Stage::merged, trace),
                          major_sum_stage(Side::H, k, Stage::merged, trace));
}

TermSum theorem_7_1_transcribed() {
    LaurentPoly pair = LaurentPoly::mono({Gen::T0, Gen::T1, Gen::T2}) +
                       LaurentPoly::mono({Gen::T0, Gen::T1, Gen::T3});
    LaurentPoly half_coeff =
        (LaurentPoly::gen(Gen::PH, 3) + LaurentPoly::gen(Gen::PH, 1)) * pair;
    LaurentPoly third_coeff =
        (LaurentPoly::gen(Gen::PH, 4, Rational(-1)) + LaurentPoly::constant(Rational(-1))) * pair;

    TermSum out;
    for (int u : {1, -1}) {
        SpectralSymbol sym;
        sym.kind = SpectralSymbol::Kind::IndT;
        sym.lambda = LambdaTag::minus_alpha_half;
        sym.level = Level::p;
        sym.family = {u, false};
        sym.side = Side::G;
        out.add({half_coeff, sym, std::nullopt});
    }
    SpectralSymbol sym;
    sym.kind = SpectralSymbol::Kind::IndT;
    sym.lambda = LambdaTag::minus_alpha;
    sym.level = Level::p;
    sym.family = {0, false};
    sym.side = Side::G;
    out.add({third_coeff, sym, std::nullopt});
    return out;
}

TermSum theorem_7_1() {
    TermSum total;
    for (int k = 1; k <= 3; ++k) total.add(combined_sum(k));
    TermSum half = total.scale(kHalf);
    if (!(half == theorem_7_1_transcribed()))
        throw std::logic_error("theorem_7_1: computed expression differs from the transcription");
    return half;
}

ConstantLedger constant_ledger() {
    ConstantLedger c;
    c.tau_G = Rational(1);
    c.tau_H = Rational(2);
    c.d_G = Rational(4); // 2^{n-1}, n = 3
    c.d_H = Rational(4);
    c.J_Z = Rational(4);
    c.dim_a_G = 2;
    c.tau_G0 = Rational(1);
    // C = tau(G0) J_Z / (2^dim d)
    Rational two_pow(1);
    for (int i = 0; i < c.dim_a_G; ++i) two_pow *= Rational(2);
    c.C_G = c.tau_G0 * c.J_Z / (two_pow * c.d_G);
    c.C_H = c.tau_G0 * c.J_Z / (two_pow * c.d_H);
    if (c.C_G != Rational(1, 4) || c.C_H != Rational(1, 4))
        throw std::logic_error("constant_ledger: defining identity failed");
    return c;
}

} // namespace picard
