#pragma once

// Cohomology of the mapping torus Y = Sigma x [0,1] / (x,1) ~ (phi(x),0)
// through the Wang sequence
//   0 -> Z -> H^1(Y) -> ker(phi^* - 1) -> 0
//   coker(phi^* - 1) --mu--> H^2(Y) -> H^2(Sigma) = Z -> 0.
//
// H^1(Y) is spanned by theta (pulled back from the circle) and lifts of the
// invariant classes. The lifts are normalized to vanish on the section t
// through a fixed point, which removes the theta-multiple ambiguity.
// H^2(Y) is spanned by Omega (restricting to the fiber volume class) and the
// mu-image classes x ^ theta for x in a basis of the free part of
// coker(phi^* - 1).

#include <span>
#include <string>
#include <vector>

#include "geographer/surface_homology.hpp"

namespace geographer {

class MappingTorus {
 public:
  MappingTorus(TwistWord word, int genus);

  int genus() const { return genus_; }
  const TwistWord& word() const { return word_; }
  const MonodromyMatrix& monodromy() const { return monodromy_; }

 private:
  int genus_;
  TwistWord word_;
  MonodromyMatrix monodromy_;
};

struct WangData {
  int b1 = 0;
  int b2 = 0;
  /// Columns: saturated basis of ker(phi^* - 1) in H^1(Sigma).
  IntMatrix invariant_basis;
  /// "theta" followed by one label per invariant basis column.
  std::vector<std::string> h1_labels;
  /// Columns: representatives in H^1(Sigma) of the mu-image basis.
  IntMatrix mu_basis;
  /// "Omega" followed by one label per mu basis column.
  std::vector<std::string> h2_labels;
  /// Smith invariants of phi^* - 1 (nonzero ones only).
  std::vector<Int> elementary_divisors;
  /// The elementary divisors greater than one: torsion of coker(phi^* - 1).
  std::vector<Int> torsion;

  std::size_t mu_rank() const { return mu_basis.cols(); }
};

WangData wang_cohomology(const MappingTorus& y);

/// Columns: representatives of the free basis of im(mu) in H^2(Y).
IntMatrix mu_image(const MappingTorus& y);

/// Multiple of the fiber volume class obtained by restricting an H^2(Y)
/// class, given in the (Omega, mu_1, ..., mu_r) basis, to a fiber.
Int restriction_to_fiber(const WangData& data, std::span<const Int> h2_class);

/// Name of a cohomology vector of Sigma: "alpha3", "beta1", or its coefficients.
std::string cohomology_label(std::span<const Int> v);

}  // namespace geographer
