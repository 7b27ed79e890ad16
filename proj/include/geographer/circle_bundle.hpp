#pragma once

// Circle bundles M -> Y over a mapping torus whose Euler class vanishes on
// the fiber. M carries omega = pi^*Omega + pi^*theta ^ eta, and this module
// computes its first Betti number (Gysin), the pairing
// Q(a, b) = <a u b u [omega], [M]> on H^1(M), and the degeneracy and nullity.

#include <optional>
#include <string>
#include <vector>

#include "geographer/mapping_torus.hpp"

namespace geographer {

/// 0: zero class. 1: a single basis class alpha_i ^ theta from the twisted
/// block (1 <= i <= d). 2: a primitive class in the span of the untwisted
/// block (d < i <= k).
enum class EulerTag : int { Zero = 0, One = 1, Two = 2 };

EulerTag euler_tag_from_int(int tag);

struct EulerClassSpec {
  EulerTag tag = EulerTag::Zero;
  /// Coefficients over the mu-image basis; a default class is chosen when absent.
  std::optional<IntVector> coefficients;
  /// Coefficient of Omega. Must be zero for a fiber-trivial class.
  Int omega_coefficient = 0;
};

struct EulerClass {
  EulerTag tag = EulerTag::Zero;
  IntVector coefficients;
  /// "none", "twisted" (1 <= i <= d) or "untwisted" (d < i <= k).
  std::string block;

  bool is_zero() const { return tag == EulerTag::Zero; }
};

/// Checks a class against the mu-image basis of the monodromy_word(d, k, g)
/// mapping torus, whose first d basis vectors form the twisted block and the
/// next 2(k - d) the untwisted block. Throws InvalidParameter on violation.
EulerClass validate_euler_class(const WangData& y, const EulerClassSpec& spec, int d, int k);

int bundle_b1(const WangData& y, const EulerClass& e);

/// Test-only corruptions of the pairing rules, used to show the
/// verification grid notices a broken pairing.
enum class PairingMutation { None, SignFlip };

struct PairingMatrix {
  IntMatrix q;
  std::vector<std::string> labels;
};

/// Pairing on the H^1(M) basis (theta, lifts of `invariant_basis`, eta when e = 0):
///   lift u, lift v -> u^T J v   (fiber integration of u ^ v ^ theta ^ eta)
///   theta, anything -> 0        (theta restricts to zero on the fiber)
///   eta, theta -> -1, theta, eta -> 1, eta, lift -> 0 (lifts vanish on t)
PairingMatrix lefschetz_pairing(const WangData& y, const EulerClass& e, const IntMatrix& invariant_basis,
                                const IntMatrix& intersection, PairingMutation mutation = PairingMutation::None);

/// b1 - rank(Q).
int degeneracy_oracle(const IntMatrix& q, int b1);

int degeneracy_closed_form(int d, int k, EulerTag e);
int nullity_closed_form(int d, int k, EulerTag e);

struct NullityCheck {
  bool passed = false;
  int nullity = 0;
  int degeneracy = 0;
  std::string detail;
};

/// The two structural facts about the nullity that can be checked without the
/// full cup-product ring: it vanishes for product bundles (e = 0) and it never
/// exceeds the degeneracy, here computed by the pairing oracle.
NullityCheck nullity_necessary_check(const WangData& y, const EulerClass& e, const IntMatrix& intersection, int d,
                                     int k);

/// Throws InvalidParameter unless (d, k, e) is a legal combination.
void require_valid_parameters(int d, int k, EulerTag e);

}  // namespace geographer
