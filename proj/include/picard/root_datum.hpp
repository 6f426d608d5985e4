#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "picard/qsqrt3.hpp"
#include "picard/rational.hpp"

namespace picard {

// Root-datum bookkeeping for the similitude unitary group of signature (2,1)
// and its endoscopic partner G(U(1) x U(1,1)): the six roots/coroots in fixed
// plane coordinates, the rank-two Weyl group, the half-line coefficient
// tables and the cocharacter lattice with its orbit and signed transfer.

// ---- roots -----------------------------------------------------------------

enum class RootLabel { alpha1, alpha2, alpha, minus_alpha1, minus_alpha2, minus_alpha };

inline constexpr std::array<RootLabel, 6> kAllRoots = {
    RootLabel::alpha1,       RootLabel::alpha2,       RootLabel::alpha,
    RootLabel::minus_alpha1, RootLabel::minus_alpha2, RootLabel::minus_alpha};

const char* root_name(RootLabel r);
RootLabel root_negate(RootLabel r);

struct RootVector {
    QSqrt3 x, y;

    RootVector operator-() const { return {-x, -y}; }
    RootVector operator+(const RootVector& o) const { return {x + o.x, y + o.y}; }
    RootVector operator-(const RootVector& o) const { return {x - o.x, y - o.y}; }
    bool operator==(const RootVector& o) const { return x == o.x && y == o.y; }
    bool is_zero() const { return x.is_zero() && y.is_zero(); }
};

// The stored tables: alpha1 = (2,0), alpha2 = (-1,sqrt 3), alpha = (1,sqrt 3)
// and the coroots alpha1v = (1,0), alpha2v = (1/2)(-1,sqrt 3),
// alphav = (1/2)(1,sqrt 3).
RootVector root_vector(RootLabel r);
RootVector coroot_vector(RootLabel r); // coroot attached to the same label

// Exact dot product in the fixed coordinates. The sqrt(3) component must
// cancel; if it does not, the stored tables are corrupt and this throws.
Rational pairing(const RootVector& root, const RootVector& coroot);

// ---- Weyl group ------------------------------------------------------------

enum class Reflection { s_alpha1, s_alpha2, s_alpha };

struct WeylElement {
    std::vector<Reflection> word; // applied right to left

    int det() const { return word.size() % 2 == 0 ? 1 : -1; }
    RootVector apply(const RootVector& v) const;
    bool operator==(const WeylElement& o) const;
};

int weyl_det(const WeylElement& w);

// All six elements of the group generated by the reflections, as reduced
// actions (enumerated by closure on the root set).
std::vector<WeylElement> weyl_group_elements();

// ---- half-line coefficient table -------------------------------------------

enum class Chamber { pos, neg }; // x > 0 / x < 0

// Q+_nu = { alphav in R^v : nu(alphav) > 0 }, R^v = {alphav, -alphav}.
// Returns the singleton's label sign: +1 for {alphav}, -1 for {-alphav}.
int qplus_sign(RootLabel nu);

// The jump coefficients c-bar(Q+_nu, R+_X): 0 on the positive roots and 2 on
// the negative ones for x > 0, swapped on the other chamber.
int cbar(RootLabel nu, Chamber chamber);

// The Weyl elements and dets tabulated in the character computation:
// which omega carries alpha to each root, and det(omega).
WeylElement omega_for(RootLabel nu);
int omega_det(RootLabel nu);

// ---- cocharacter lattice ----------------------------------------------------

// Element (sim,(g1,g2,g3)) of the cocharacter lattice Z x Z^3.
struct Cocharacter {
    int sim = 0;
    std::array<int, 3> gl{};

    bool operator==(const Cocharacter& o) const { return sim == o.sim && gl == o.gl; }
    bool operator<(const Cocharacter& o) const {
        if (sim != o.sim) return sim < o.sim;
        return gl < o.gl;
    }
    std::string str() const;
};

// The Shimura cocharacter (1,(1,1,0)).
Cocharacter mu();

// Orbit under permutations of the gl triple, deduplicated, in a fixed order
// (the display order: (1,(1,1,0)), (1,(1,0,1)), (1,(0,1,1)) for mu).
std::vector<Cocharacter> weyl_orbit(const Cocharacter& c);

// Signed endoscopic transfer. The base stores the verbatim display tuple
// (z, z1, (z2, z3)) whose negative slots mark sign-carrying factors; sign is
// the product of slot signs.
struct SignedCocharacter {
    int sign = 1;
    int z = 0, z1 = 0;
    std::array<int, 2> z2{};
    std::string str() const;
};

SignedCocharacter transfer_cochar(const Cocharacter& nu); // throws outside the orbit

// ---- Lambda tags -------------------------------------------------------------

enum class Side { G, H };

// The four spectral parameters that occur, named by their local-sum labels.
// Each tag carries both coordinate forms found in the source displays: the
// local-sum triple (paired against nu_T) and the Fourier-coefficient triple
// (whose exponential form indexes the d's). The two conventions differ by a
// flagged sign/scale mismatch and are never converted into one another.
enum class LambdaTag { minus_alpha_half, alpha_half, minus_alpha, alpha };

inline constexpr std::array<LambdaTag, 4> kAllLambda = {
    LambdaTag::minus_alpha_half, LambdaTag::alpha_half, LambdaTag::minus_alpha,
    LambdaTag::alpha};

const char* lambda_name(LambdaTag t);          // "-a/2", "a/2", "-a", "a"
std::array<Rational, 3> lambda_triple(LambdaTag t);   // (0,-1/2,1/2) etc.
std::array<int, 3> lambda_fourier_triple(LambdaTag t); // (1,0,-1) etc.
LambdaTag lambda_mirror(LambdaTag t); // -a/2 <-> a/2, -a <-> a

// Weight of e^{w x} determined by the triple against X = (y, x, -x):
// w = -(L2 - L3). Values: +1, -1, +2, -2.
int lambda_weight(LambdaTag t);

// EX-exponent k with e^{-Lambda(X)} = EX^k for the Fourier triple.
int lambda_ex_exponent(LambdaTag t);
LambdaTag lambda_from_ex_exponent(int k); // throws if |k| not in {1,2}

// Pairing Lambda(nu_T) used in the p-power weights: the plain dot product of
// the local-sum triple with the nu_T triple (0, c, -c).
Rational lambda_nu_pairing(LambdaTag t, const Rational& nu_x);

// nu_T^G of an orbit member in display-row order: (1,(1,1,0)) -> 1/2,
// (1,(1,0,1)) -> -1/2, (1,(0,1,1)) -> 0. Shared by both sides' full sums.
Rational nu_t_x(const Cocharacter& nu);

} // namespace picard
