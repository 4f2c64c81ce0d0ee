#pragma once

// The identity suite: kernel, factorization, closed-form states and energies,
// alpha = 2 recovery, nodes, and the numeric-layer residuals, collected into a
// structured report.

#include <string>
#include <vector>

#include "fracosc/spectral.hpp"

namespace fracosc {

inline constexpr const char* kEngineVersion = "1.0.0";

// The alpha values every identity is checked at.
std::vector<double> alpha_sweep();

struct CheckRecord {
  std::string name;
  double alpha = 0.0;
  int n = -1;  // -1 when not applicable
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct E2Divergence {
  double alpha = 0.0;
  double max_abs = 0.0;  // max |printed - canonical| over the probe grid
  double k_at_max = 0.0;
  double at_k1 = 0.0;    // |printed - canonical| at k = 1
};

struct VerificationReport {
  std::vector<CheckRecord> records;
  std::vector<E2Divergence> e2_divergence;
  bool overall_pass = false;
  std::string engine_version = kEngineVersion;
  std::string timestamp;
};

struct VerifyOptions {
  double k_max = kDefaultKMax;
  int points = kDefaultGridPoints;
  // When >= 0, replaces every residual tolerance (0 makes everything fail).
  double tol_override = -1.0;
  int random_members_per_alpha = 50;
  unsigned seed = 12345;
};

VerificationReport run_verification(const VerifyOptions& opt = {});

// Deterministic random family member for the factorization property checks.
PowerExpFunction random_family_member(double alpha, unsigned seed, int max_terms = 6);

}  // namespace fracosc
