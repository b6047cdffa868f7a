#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "adapted/invariants.hpp"

namespace adapted {

enum class Stage { presentation, basis, action, intersection, canonical, symplectic, verify };
enum class Format { text, json, csv };

struct JobSpec {
  PrimeOrderData data;
  std::vector<Stage> stages;
  Format format = Format::text;
};

struct VerifyCheck {
  std::string name;
  bool pass;
};

/// The full invariant suite for one automorphism class: count identities,
/// matrix identities, relator structure, rewriting round trips and the
/// symplectic normalization. Deterministic.
std::vector<VerifyCheck> verify_battery(const PrimeOrderData& d, unsigned sample_words = 25);

/// Executes the requested stages in pipeline order and writes the documents.
/// Returns 0 on success, 2 when a verify stage found a violated invariant.
int run_job(const JobSpec& spec, std::ostream& out);

struct SweepReport {
  i64 cases = 0;
  i64 passed = 0;
  std::vector<std::string> failures;
};

/// Runs verify_battery over every conjugacy class with prime p <= p_max,
/// t <= t_max (including t = 0), g0 <= g0_max and derived genus >= 2;
/// n-vectors are enumerated up to symmetry.
SweepReport sweep(i64 p_max, i64 t_max, i64 g0_max, std::ostream* progress = nullptr);

}  // namespace adapted
