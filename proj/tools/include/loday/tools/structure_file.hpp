#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "loday/identities.hpp"
#include "loday/odd_jacobi.hpp"

namespace loday::tools {

struct CheckSpec {
  IdentityId id{};
  VerifyOptions options{};
};

struct StructureFile {
  OddJacobiStructure structure;
  /// Empty means structure conditions only.
  std::vector<CheckSpec> checks;
};

/// Full catalog at 100 trials, degree <= 3, coefficients <= 5, seed 0.
std::vector<CheckSpec> default_checks();

/// Document layout:
///   {"coordinates": [{"name", "parity": "even"|"odd", "weight"}...],
///    "structure": {"S": expr, "Q": {coordinate: expr...}},
///    "checks": [{"id", "trials", "max_degree", "max_coeff", "seed"}...]}
/// S is written over the lifted chart, whose momenta are named p_<name>.
/// A missing "checks" section selects default_checks(). Throws FormatError
/// with a JSON pointer for layout problems and for expressions that fail to
/// parse or elaborate.
StructureFile parse_structure(std::string_view text);

/// Throws UsageError if the file cannot be read.
StructureFile load_structure(const std::filesystem::path& path);

}  // namespace loday::tools
