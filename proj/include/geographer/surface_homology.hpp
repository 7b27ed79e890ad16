#pragma once

// Homology of a closed genus-g surface in the symplectic basis
// (a_1, b_1, ..., a_g, b_g) and the action of Dehn-twist words on it.
//
// Coordinates: index 2(i-1) is a_i (or its dual alpha_i), index 2(i-1)+1 is b_i
// (or beta_i). The monodromy is carried as the pullback phi^* on H^1 in the
// dual basis; the homology action phi_* is its transpose.

#include <stdexcept>
#include <string>
#include <vector>

#include "geographer/int_matrix.hpp"

namespace geographer {

class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SymplecticBasis {
  int genus = 0;
  std::vector<std::string> labels;
  IntMatrix intersection_form;
};

/// 2g x 2g block-diagonal form with J(a_i, b_i) = 1, J(b_i, a_i) = -1.
/// Throws InvalidParameter for g < 1.
IntMatrix intersection_form(int genus);
SymplecticBasis symplectic_basis(int genus);

struct HomologyClass {
  IntVector coefficients;

  int genus() const { return static_cast<int>(coefficients.size() / 2); }
  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

/// The basis curve a_i (1-based handle index).
HomologyClass curve_a(int handle, int genus);
/// The basis curve b_i (1-based handle index).
HomologyClass curve_b(int handle, int genus);

/// Label such as "a2" for basis curves, or the coefficient vector otherwise.
std::string describe(const HomologyClass& c);

struct TwistLetter {
  HomologyClass curve;
  Int exponent = 1;
  friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

/// Letters are written left to right and act on the left: the leftmost
/// letter is applied last.
struct TwistWord {
  std::vector<TwistLetter> letters;

  TwistWord inverse() const;
  std::string to_string() const;
  friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

/// phi^* on H^1(Sigma; Z) in the dual basis (alpha_1, beta_1, ...).
struct MonodromyMatrix {
  IntMatrix entries;

  int genus() const { return static_cast<int>(entries.rows() / 2); }
  /// phi_* on H_1, the transpose of phi^*.
  IntMatrix homology_action() const { return entries.transpose(); }
  friend bool operator==(const MonodromyMatrix&, const MonodromyMatrix&) = default;
};

/// Cohomology action of T_c^exponent. The homology action is
/// x -> x + exponent * J(c, x) c, so the twist along a_i pulls back
/// alpha_i to alpha_i + beta_i and fixes every other dual basis class.
MonodromyMatrix twist_transvection(const HomologyClass& curve, int genus, Int exponent = 1);

MonodromyMatrix compose_word(const TwistWord& word, int genus);

/// The bundle-manifold monodromy for 0 <= d <= k <= g:
///   (T_{b_g} T_{a_g}^{-1}) ... (T_{b_{k+1}} T_{a_{k+1}}^{-1}) T_{a_d} ... T_{a_1}
TwistWord monodromy_word(int d, int k, int genus);

/// Saturated integral basis (as columns) of ker(M - I).
IntMatrix invariant_subspace(const MonodromyMatrix& m);

/// M^T J M == J and det M == 1.
bool is_symplectic(const MonodromyMatrix& m);

}  // namespace geographer
