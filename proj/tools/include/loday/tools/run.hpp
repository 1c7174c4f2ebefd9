#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "loday/odd_jacobi.hpp"
#include "loday/tools/structure_file.hpp"

namespace loday::tools {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

struct RunReport {
  std::string model;
  StructureReport structure;
  std::vector<CheckReport> checks;
  int exit_code = exit_ok;
};

/// Command-line overrides applied on top of a file's check list.
struct RunOverrides {
  std::optional<std::vector<IdentityId>> only;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> trials;
};

/// Applies overrides; --only keeps the file's settings for listed ids and
/// uses defaults for ids the file does not mention. Result is in catalog order.
std::vector<CheckSpec> select_checks(const std::vector<CheckSpec>& file_checks, const RunOverrides& o);

/// check_structure first; identities run only on a valid structure. Exit 0
/// iff everything succeeded (expected-fail-confirmed counts as success).
RunReport run_checks(const OddJacobiStructure& J, const std::vector<CheckSpec>& checks);

enum class Format { Text, Json };

void emit_report(std::ostream& os, const RunReport& r, Format f);

}  // namespace loday::tools
