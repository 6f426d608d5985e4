#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>
#include <utility>

#include "picard/laurent.hpp"
#include "picard/laurent_io.hpp"

using namespace picard;

namespace {

// ---- independent oracles ---------------------------------------------------
// A polynomial as an unnormalized list of (exps, coeff) pairs; addition is
// concatenation, multiplication is full pairwise expansion. Collapsing to a
// canonical map happens only at comparison time, by a different code path
// than LaurentPoly's incremental add_term.

using FlatPoly = std::vector<std::pair<ExpVec, Rational>>;

FlatPoly flat_of(const LaurentPoly& p) {
    FlatPoly f;
    for (const auto& [e, c] : p.terms()) f.emplace_back(e, c);
    return f;
}

FlatPoly flat_add(const FlatPoly& a, const FlatPoly& b) {
    FlatPoly r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

FlatPoly flat_mul(const FlatPoly& a, const FlatPoly& b) {
    FlatPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            ExpVec e;
            for (int i = 0; i < kGenCount; ++i) e[i] = ea[i] + eb[i];
            r.emplace_back(e, ca * cb);
        }
    return r;
}

// Collapse by sorting on the raw array order (not TermOrder) and summing.
std::vector<std::pair<ExpVec, Rational>> flat_canonical(FlatPoly f) {
    std::sort(f.begin(), f.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::pair<ExpVec, Rational>> out;
    for (const auto& [e, c] : f) {
        if (!out.empty() && out.back().first == e)
            out.back().second += c;
        else
            out.emplace_back(e, c);
    }
    std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
    return out;
}

bool agrees(const LaurentPoly& p, const FlatPoly& f) {
    return flat_canonical(flat_of(p)) == flat_canonical(f);
}

// ---- deterministic pseudo-random inputs ------------------------------------

struct Rng {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    int range(int lo, int hi) { return lo + (int)(next() % (std::uint64_t)(hi - lo + 1)); }
    Rational coeff() {
        int n = range(-5, 5);
        if (n == 0) n = 1;
        return Rational(n, range(1, 4));
    }
    ExpVec exps() {
        ExpVec e;
        for (int i = 0; i < kGenCount; ++i) e[i] = range(-3, 3);
        return e;
    }
    LaurentPoly poly(int nterms) {
        LaurentPoly p;
        for (int i = 0; i < nterms; ++i) p += LaurentPoly::monomial(coeff(), exps());
        return p;
    }
};

} // namespace

TEST_CASE("addition: factoring identity from the final spectral expression") {
    // 2 PH^3 T0T1T3 + 2 PH T0T1T3 = 2(PH^3 + PH) T0T1T3
    auto a = LaurentPoly::mono({Gen::T0, Gen::T1, Gen::T3}, Rational(2)) *
             LaurentPoly::gen(Gen::PH, 3);
    auto b = LaurentPoly::mono({Gen::T0, Gen::T1, Gen::T3}, Rational(2)) *
             LaurentPoly::gen(Gen::PH, 1);
    auto expect = (LaurentPoly::gen(Gen::PH, 3) + LaurentPoly::gen(Gen::PH, 1)) *
                  LaurentPoly::mono({Gen::T0, Gen::T1, Gen::T3}, Rational(2));
    CHECK(a + b == expect);
}

TEST_CASE("addition: identity and cancellation") {
    Rng rng;
    auto p = rng.poly(8);
    CHECK(p + LaurentPoly::zero() == p);
    CHECK(p - p == LaurentPoly::zero());
    CHECK((p - p).is_zero());
}

TEST_CASE("addition is commutative (merge oracle, 1000 cases)") {
    Rng rng;
    for (int i = 0; i < 1000; ++i) {
        auto p = rng.poly(20), q = rng.poly(20);
        CHECK(p + q == q + p);
        CHECK(agrees(p + q, flat_add(flat_of(p), flat_of(q))));
    }
}

TEST_CASE("multiplication: unramified local sum expansion") {
    // PH^2 (PH^-1 T0T1T2 + PH T0T1T3 + T0T2T3)
    //   = PH T0T1T2 + PH^3 T0T1T3 + PH^2 T0T2T3
    auto inner = LaurentPoly::mono({Gen::T0, Gen::T1, Gen::T2}) * LaurentPoly::gen(Gen::PH, -1) +
                 LaurentPoly::mono({Gen::T0, Gen::T1, Gen::T3}) * LaurentPoly::gen(Gen::PH, 1) +
                 LaurentPoly::mono({Gen::T0, Gen::T2, Gen::T3});
    auto prod = LaurentPoly::gen(Gen::PH, 2) * inner;
    auto expect = LaurentPoly::mono({Gen::T0, Gen::T1, Gen::T2}) * LaurentPoly::gen(Gen::PH, 1) +
                  LaurentPoly::mono({Gen::T0, Gen::T1, Gen::T3}) * LaurentPoly::gen(Gen::PH, 3) +
                  LaurentPoly::mono({Gen::T0, Gen::T2, Gen::T3}) * LaurentPoly::gen(Gen::PH, 2);
    CHECK(prod == expect);
}

TEST_CASE("multiplicative identity") {
    Rng rng;
    auto p = rng.poly(10);
    CHECK(p * LaurentPoly::one() == p);
    CHECK(LaurentPoly::one() * p == p);
}

TEST_CASE("ring laws against the expansion oracle (1000 cases)") {
    Rng rng;
    for (int i = 0; i < 1000; ++i) {
        auto p = rng.poly(6), q = rng.poly(6), r = rng.poly(6);
        // distributivity
        CHECK((p + q) * r == p * r + q * r);
        CHECK(agrees((p + q) * r, flat_mul(flat_add(flat_of(p), flat_of(q)), flat_of(r))));
        // commutativity and associativity
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK((p + q) + r == p + (q + r));
    }
}

TEST_CASE("scale: the one-half rescaling of the combined sums") {
    // (1/2) * 2 PH^2 (PH + PH^-1) S = (PH^3 + PH) S  for S = T0T1T3
    auto s = LaurentPoly::mono({Gen::T0, Gen::T1, Gen::T3});
    auto p = LaurentPoly::gen(Gen::PH, 2, Rational(2)) *
             (LaurentPoly::gen(Gen::PH, 1) + LaurentPoly::gen(Gen::PH, -1)) * s;
    auto expect = (LaurentPoly::gen(Gen::PH, 3) + LaurentPoly::gen(Gen::PH, 1)) * s;
    CHECK(p.scale(Rational(1, 2)) == expect);
}

TEST_CASE("scale: annihilation and inverse scaling") {
    Rng rng;
    auto p = rng.poly(12);
    CHECK(p.scale(Rational(0)).is_zero());
    CHECK(p.scale(Rational(3)).scale(Rational(1, 3)) == p);
}

TEST_CASE("canonicalization is idempotent and drops zero coefficients") {
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        auto p = rng.poly(15);
        // re-normalizing term by term reproduces p exactly
        LaurentPoly q;
        for (const auto& [e, c] : p.terms()) q += LaurentPoly::monomial(c, e);
        CHECK(q == p);
        for (const auto& [e, c] : p.terms()) CHECK(!c.is_zero());
    }
}

TEST_CASE("latex emission: stable character display") {
    // 2 EX^-1 U + 2 EX^-1 U^-1 - 2 EX^-2
    auto p = LaurentPoly::gen(Gen::EX, -1, Rational(2)) * LaurentPoly::gen(Gen::U, 1) +
             LaurentPoly::gen(Gen::EX, -1, Rational(2)) * LaurentPoly::gen(Gen::U, -1) +
             LaurentPoly::gen(Gen::EX, -2, Rational(-2));
    CHECK(emit(p, "latex") == "2(e^{-x}e^{i\\theta}+e^{-x}e^{-i\\theta}-e^{-2x})");
}

TEST_CASE("latex emission: local sum display") {
    auto p = LaurentPoly::mono({Gen::T0, Gen::T1, Gen::T2}) * LaurentPoly::gen(Gen::PH, 1) +
             LaurentPoly::mono({Gen::T0, Gen::T1, Gen::T3}) * LaurentPoly::gen(Gen::PH, 3) +
             LaurentPoly::mono({Gen::T0, Gen::T2, Gen::T3}) * LaurentPoly::gen(Gen::PH, 2);
    CHECK(emit(p, "latex") ==
          "p^{j/2}(t\\,t_1\\,t_2)^j+p^{3j/2}(t\\,t_1\\,t_3)^j+p^{j}(t\\,t_2\\,t_3)^j");
}

TEST_CASE("json emission of zero polynomial") {
    CHECK(emit(LaurentPoly::zero(), "json") == "{\"terms\":[]}");
}

TEST_CASE("emit rejects unknown format") {
    CHECK_THROWS_AS(emit(LaurentPoly::one(), "yaml"), std::invalid_argument);
}

TEST_CASE("json round-trip on random polynomials (1000 cases)") {
    Rng rng;
    for (int i = 0; i < 1000; ++i) {
        auto p = rng.poly(rng.range(0, 12));
        CHECK(parse_json(emit_json(p)) == p);
    }
}

TEST_CASE("serialization is injective on canonical forms") {
    Rng rng;
    for (int i = 0; i < 300; ++i) {
        auto p = rng.poly(5), q = rng.poly(5);
        if (p != q) CHECK(emit_json(p) != emit_json(q));
    }
}

TEST_CASE("canonical term order matches the display conventions") {
    // Satake monomials lead in T-descending order, p-powers never reorder them.
    auto p = LaurentPoly::mono({Gen::T0, Gen::T2, Gen::T3}) * LaurentPoly::gen(Gen::PH, 2) +
             LaurentPoly::mono({Gen::T0, Gen::T1, Gen::T2}) * LaurentPoly::gen(Gen::PH, 1) +
             LaurentPoly::mono({Gen::T0, Gen::T1, Gen::T3}) * LaurentPoly::gen(Gen::PH, 3);
    std::vector<ExpVec> order;
    for (const auto& [e, c] : p.terms()) order.push_back(e);
    REQUIRE(order.size() == 3);
    CHECK(order[0][(int)Gen::T2] == 1); // T0T1T2 first
    CHECK(order[1][(int)Gen::T3] == 1); // T0T1T3 second
    CHECK(order[2][(int)Gen::T1] == 0); // T0T2T3 last
}
