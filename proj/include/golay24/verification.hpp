// End-to-end verification: every claim the construction rests on, checked
// against frozen reference data and exhaustive enumeration. The CLI's
// `verify` subcommand and the acceptance suite are thin wrappers over
// run_full_verification().

#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "golay24/report.hpp"

namespace golay24 {

/// The twelve reference generator rows (leftmost character = label 1),
/// frozen as data so the derived matrix can be compared bit-for-bit.
const std::array<std::string_view, 12>& reference_generator_rows();

/// Reference weight distribution of the [24,12,8] code:
/// counts 1, 759, 2576, 759, 1 at weights 0, 8, 12, 16, 24.
const std::array<std::uint64_t, 25>& reference_weight_counts();

/// Runs every check: group identities, coset actions, both labelings and
/// their residue structure, the three permutation tables, the subset
/// family, the generator matrix against the reference rows, the weight
/// enumerator, the Golay certificate, MacWilliams self-consistency, and
/// the decoder over all error patterns of weight <= 3.
Report run_full_verification();

}  // namespace golay24
