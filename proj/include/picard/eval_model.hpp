#pragma once

#include <cstdint>

#include "picard/stabilizer.hpp"

namespace picard {

// Truncated-lattice evaluation model for the rewrite rules. A rule instance
// is checked by evaluating both sides exactly over a two-member Weyl-closed
// family: the partner member carries the swapped Satake values, the
// reflected kernel, and the crossed parabolic trace values. Kernels are
// random finitely-supported rational functions on the integer lattice
// [-N, N]; the scale of j log p maps to an odd lattice span so the half
// cuts never land on a lattice point. All arithmetic is exact.

struct ModelParams {
    int N = 8;           // lattice truncation
    int span = 5;        // j log p in lattice units (odd)
    std::uint64_t seed = 1;
};

// Exact check of one rule instance.
//   R1, R3: both sides evaluate equal for every kernel.
//   R2: the kernel-checkable content is the Weyl transport of the row to the
//       associate bracket (monomial swapped, domain mirrored, weight
//       negated); the p-power rebalance is verified structurally against
//       the weight law (exponents summing to 4, mirrored cuts).
bool check_rule_instance(const RuleInstance& inst, const ModelParams& params);

struct SoundnessReport {
    int instances = 0;
    int kernel_checks = 0;
    int failures = 0;
};

// Runs every rule instance of the three combined sums through the model for
// each lattice size in {2,4,8} with `kernels_per_size` random kernels each.
SoundnessReport run_soundness_suite(int kernels_per_size, std::uint64_t seed = 7);

} // namespace picard
