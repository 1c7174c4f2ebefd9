#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loday/loday_bracket.hpp"
#include "loday/odd_jacobi.hpp"

namespace loday {

enum class IdentityId {
  JacobiLoday,
  LeftLeibniz,
  Symmetrization,
  SkewsymmetryProbe,
  CentreTriviality,
  OddJacobiAxioms,
  Bihamiltonian,
  MasterEquation,
  QYCommute,
  YIsJacobi,
  YMorphism,
  MixedComm,
  YOfOddBracket,
  NestedCorollary,
  YProduct,
  RightLeibnizDefect,
  CartanTable,
  StarAssociative,
  StarCommIsBracket,
  GenLeibniz,
  DerivedLeibniz,
  StarHam,
  SchoutenTrivial,
  OddBracketCoords,
  LodayBracketCoords,
  BracketWeights,
  ReferenceDisplays,
};

struct CatalogEntry {
  IdentityId id;
  std::string_view name;
  std::string_view statement;
};

/// All identities in report order.
std::span<const CatalogEntry> catalog();
const CatalogEntry& catalog_entry(IdentityId id);
std::string_view to_string(IdentityId id);
/// Throws UsageError on an unknown name.
IdentityId parse_identity(std::string_view name);

struct SamplerOptions {
  unsigned max_degree = 3;
  unsigned max_coeff = 5;
  unsigned max_terms = 4;
  bool weight_homogeneous = false;
};

struct VerifyOptions {
  unsigned trials = 100;
  SamplerOptions sampler{};
  std::uint64_t seed = 0;
};

/// Random parity-homogeneous polynomials over a chart. Draws use raw engine
/// output reduced by modulo so that a seed reproduces the same polynomials
/// on every platform.
class PolynomialSampler {
 public:
  PolynomialSampler(ChartPtr chart, SamplerOptions opts, std::uint64_t seed);

  const ChartPtr& chart() const noexcept { return chart_; }
  std::mt19937_64& engine() noexcept { return rng_; }

  std::uint64_t below(std::uint64_t n);
  /// Even when the chart has no odd coordinates, otherwise a coin flip.
  Parity parity();
  /// Nonzero polynomial of the given parity; with weight_homogeneous set, all
  /// terms share one weight. Throws UsageError if no monomial of that parity
  /// exists within the degree bound.
  SuperPolynomial sample(Parity p);
  SuperPolynomial sample() { return sample(parity()); }
  /// Random element of ker(Q) within the degree bound (may be zero only if
  /// the kernel is zero).
  SuperPolynomial sample_closed(const VectorField& Q, Parity p);

 private:
  Monomial random_monomial();
  ChartPtr chart_;
  SamplerOptions opts_;
  std::mt19937_64 rng_;
  std::vector<Monomial> even_, odd_;
};

/// Fixed trial -> subseed mapping.
std::uint64_t trial_seed(std::uint64_t seed, IdentityId id, unsigned trial);

enum class CheckStatus { Pass, Fail, ExpectedFailConfirmed };
std::string_view to_string(CheckStatus s);
/// Pass and ExpectedFailConfirmed both count as success.
inline bool succeeded(CheckStatus s) noexcept { return s != CheckStatus::Fail; }

struct Witness {
  std::string label;
  std::vector<SuperPolynomial> inputs;
  /// Vector-field defects are stored as their symbols.
  SuperPolynomial defect;
};

struct CheckReport {
  IdentityId id{};
  unsigned trials = 0;
  CheckStatus status = CheckStatus::Pass;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
  /// Known discrepancies between a displayed formula and the normative computation.
  std::vector<std::string> flags;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t max_witnesses = 3;

/// Runs one catalog identity. Requires check_structure(J).valid(); throws
/// StructureError otherwise.
CheckReport verify_identity(const OddJacobiStructure& J, IdentityId id, const VerifyOptions& opts = {});

/// Weight of a weight-homogeneous nonzero function, otherwise nullopt.
std::optional<int> weight_of(const SuperPolynomial& f);

/// Weight shifts of [[,]] and {,} implied by the weights of S and the symbol
/// of Q, if both are homogeneous and compatible.
struct BracketShifts {
  int odd_bracket;
  int loday_bracket;
};
std::optional<BracketShifts> bracket_shifts(const OddJacobiStructure& J);

}  // namespace loday
