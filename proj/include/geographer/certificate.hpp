#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geographer/int_matrix.hpp"

namespace geographer {

enum class KodairaDimension { NegativeInfinity, Zero, One, Two };

std::string to_string(KodairaDimension k);
KodairaDimension kodaira_from_string(const std::string& s);

/// Kodaira dimension of a minimal symplectic 4-manifold from the signs of
/// K^2 and K.[omega]. std::nullopt when (K^2 > 0, K.[omega] = 0), which no
/// minimal symplectic manifold attains.
std::optional<KodairaDimension> kodaira_classify(Int k_squared, Int k_dot_omega);

struct IdentityCheck {
  std::string name;
  bool passed = false;
  friend bool operator==(const IdentityCheck&, const IdentityCheck&) = default;
};

/// K.[omega] is a positive multiple of the symplectic area of a torus whose
/// area is not fixed; only the multiple and the sign are recorded. When the
/// multiple is unknown the sign is taken from the cited source in `basis`.
struct CanonicalPairing {
  std::optional<Int> torus_multiple;
  int sign = 0;
  std::string basis;
  friend bool operator==(const CanonicalPairing&, const CanonicalPairing&) = default;
};

struct Minimality {
  bool minimal = false;
  std::string basis;
  friend bool operator==(const Minimality&, const Minimality&) = default;
};

struct InvariantCertificate {
  std::string manifold;
  Int sigma = 0;
  Int chi = 0;
  Int b1 = 0;
  Int b_plus = 0;
  Int b_minus = 0;
  Int k_squared = 0;
  CanonicalPairing k_dot_omega;
  KodairaDimension kappa = KodairaDimension::One;
  Int degeneracy = 0;
  /// b1 - rank Q when the pairing matrix was assembled.
  std::optional<Int> degeneracy_oracle;
  std::optional<Int> nullity;
  Minimality minimal;
  std::vector<IdentityCheck> checks;
  std::map<std::string, std::string> citations;

  bool all_checks_pass() const;
  void add_check(std::string name, bool passed) { checks.push_back({std::move(name), passed}); }
  friend bool operator==(const InvariantCertificate&, const InvariantCertificate&) = default;
};

/// Raised when two independent derivations of the same invariant disagree.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Adds the identities shared by every certificate (sigma = b+ - b-,
/// chi = 2 - 2 b1 + b2, 2 chi + 3 sigma = K^2) and throws ConsistencyError if
/// any recorded check failed.
void seal(InvariantCertificate& cert);

}  // namespace geographer
