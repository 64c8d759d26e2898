#pragma once

// Sweeps of theorem certifications over bigrades, with a time budget and seeded
// random round-trip samples.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hfischer/json_io.hpp"

namespace hfischer {

/// An operator identity lhs = rhs, with the right side given in literal form.
struct OperatorIdentity {
  std::string name;
  OperatorSpec lhs;
  PolyMap rhs;
};

/// The nine anticommutator relations between dplus, dminus, x^ and x.
std::vector<OperatorIdentity> anticommutator_relations();

/// Checks every identity column by column on the monomial basis of P^s_k.
TheoremReport check_identities(const std::string& theorem, const std::vector<OperatorIdentity>& identities, int m,
                               int s, int k);

/// Bihomogeneous (per grade in S) polynomial of degree k with small random rational
/// coefficients on every basis monomial, roughly half of them zero.
CliffordPoly random_poly(int m, GradeSet grades, int k, std::mt19937_64& rng);

inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr int kMaxDegree = 8;

struct VerifyOptions {
  int m = 3;
  int k_max = 4;
  std::vector<std::string> theorems{"all"};
  double budget_seconds = 0;  // 0 disables the budget
  unsigned threads = 0;       // 0 picks the hardware concurrency
  std::uint64_t seed = kDefaultSeed;
  int samples = 2;            // random round trips per bigrade for h and classical
};

struct VerifyOutcome {
  VerifyOptions options;
  std::vector<std::string> theorems;  // expanded selection
  std::vector<TheoremReport> reports;  // sorted by (theorem, m, S, k)
  std::size_t skipped = 0;
  bool budget_exceeded = false;

  std::size_t failures() const;
  bool ok() const { return failures() == 0 && !budget_exceeded; }
};

/// lemma, h, homma, monogenic, mt, infra, infra-harmonic, classical, two-sided.
const std::vector<std::string>& theorem_names();

/// Throws std::invalid_argument on unknown theorem names or out-of-range m / k_max.
VerifyOutcome verify_report(const VerifyOptions& options);

Json to_json(const VerifyOutcome& outcome);

}  // namespace hfischer
