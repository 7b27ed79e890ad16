#pragma once

// Bundle manifolds B(d,k,g;e): the circle bundle with Euler-class tag e over
// the mapping torus of monodromy_word(d, k, g).

#include <map>
#include <string>
#include <vector>

#include "geographer/certificate.hpp"
#include "geographer/circle_bundle.hpp"

namespace geographer {

struct BundleManifoldSpec {
  int d = 0;
  int k = 0;
  int g = 1;
  EulerClassSpec euler;

  /// Throws InvalidParameter naming the violated constraint.
  void validate() const;
  std::string name() const;
};

BundleManifoldSpec bundle_spec(int d, int k, int g, int tag);

/// Everything computed on the way to a certificate.
struct BundleAnalysis {
  BundleManifoldSpec spec;
  IntMatrix monodromy;
  WangData wang;
  EulerClass euler;
  PairingMatrix pairing;
  InvariantCertificate certificate;
};

/// Runs the full pipeline and cross-checks every closed form against its
/// computed counterpart; throws ConsistencyError on disagreement.
BundleAnalysis analyze(const BundleManifoldSpec& spec);
InvariantCertificate construct(const BundleManifoldSpec& spec);

/// Coefficient of the fiber torus T in PD(K) for B(d,k,g;0): 2g - 2.
Int canonical_class(int g);

struct GridFailure {
  int d = 0;
  int k = 0;
  int g = 0;
  EulerTag e = EulerTag::Zero;
  std::string reason;
};

struct GridReport {
  std::size_t cases = 0;
  /// Check name -> number of cases that passed it.
  std::map<std::string, std::size_t> passes;
  std::vector<GridFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Every (d, k, g, e) with 0 <= d <= k <= g <= grid_max, g >= 1 and a legal tag.
std::vector<BundleManifoldSpec> bundle_grid(int grid_max);

/// Degeneracy oracle vs closed form, Gysin b1 vs closed form, skewness and
/// even rank of Q, rank Q = b1 - degeneracy, nullity bounds and
/// 2 chi + 3 sigma = 0 over bundle_grid(grid_max).
GridReport verify_bundle_grid(int grid_max, PairingMutation mutation = PairingMutation::None);

}  // namespace geographer
