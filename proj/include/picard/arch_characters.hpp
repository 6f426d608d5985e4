#pragma once

#include <utility>
#include <vector>

#include "picard/laurent.hpp"
#include "picard/root_datum.hpp"

namespace picard {

// Computations at the archimedean place: stable discrete-series characters
// on the diagonal torus for both groups and both chambers, the base-change
// signs, the exponential-coefficient extraction and the Fourier coefficients
// d indexed by spectral parameters.

// ---- packets ----------------------------------------------------------------

enum class Packet { G_Pi, H_rho_plus, H_rho_minus, H_rho_zero };

Side packet_side(Packet p);
const char* packet_name(Packet p); // "Pi", "rho+", "rho-", "rho0"

// The test object on each side: the single pseudocoefficient on the G side,
// the combination rho+ + rho- - rho0 on the H side.
enum class TestObject { G, H_combination };

// ---- torus characters --------------------------------------------------------

// gamma-dependent part of a term: U^uExp, with mu(gamma)^{-1} present on the
// H side only.
struct TorusCharacterLabel {
    int u_exp = 0;
    bool mu_inv = false;

    bool operator==(const TorusCharacterLabel& o) const {
        return u_exp == o.u_exp && mu_inv == o.mu_inv;
    }
    bool operator<(const TorusCharacterLabel& o) const {
        // display order: nonzero compact characters first (descending), then
        // the constant character -- U^1, U^-1, 1
        auto key = [](const TorusCharacterLabel& l) {
            return std::pair<int, int>(l.u_exp == 0 ? 1 : 0, -l.u_exp);
        };
        if (key(*this) != key(o)) return key(*this) < key(o);
        return mu_inv < o.mu_inv;
    }
    std::string str() const;
};

struct CDEntry {
    TorusCharacterLabel character;
    LaurentPoly value; // single term, coefficient +-2, pure EX power
};

enum class Parabolic { Pu, Pd };
const char* parabolic_name(Parabolic p);

struct DEntry {
    TorusCharacterLabel character;
    Parabolic parabolic;
    LambdaTag lambda;
    int value; // +-2
};

// ---- operations ---------------------------------------------------------------

// Stable character on the given chamber, assembled from the character
// formula: the sign (-1)^q, the chamber sign, and the det/cbar-weighted sum
// of root exponentials (G side) or of the reflected highest-weight pair
// (H side). Values are exact polynomials in EX, U, MINV.
LaurentPoly stable_character(Packet p, Chamber chamber);

// (-1)^q with q = 2 for G and q = 1 for H.
int epsilon(Side side);

// The test-object character: epsilon * Phi for G, epsilon * (Phi+ + Phi- -
// Phi0) for the H combination.
LaurentPoly test_character(TestObject obj, Chamber chamber);

// Decompose the test-object character over torus-character monomials and
// return the EX cofactors. Reconstruction is exact; a monomial mixing the
// gamma part with anything outside EX signals table corruption.
std::vector<CDEntry> read_off_cd(TestObject obj, Chamber chamber);

// Rewrite each exponential coefficient c * EX^k as the coefficient c sitting
// at the spectral parameter whose exponential form is EX^k on the chamber of
// the given parabolic (Pu <-> x > 0, Pd <-> x < 0). Exponents outside
// {+-1, +-2} have no parameter and throw.
std::vector<DEntry> fourier_d(TestObject obj, Parabolic parabolic);

Chamber parabolic_chamber(Parabolic p);

} // namespace picard
