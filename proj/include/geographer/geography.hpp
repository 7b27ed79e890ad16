#pragma once

// Realization of (signature, b1, degeneracy) triples by minimal symplectic
// 4-manifolds with kappa = 1.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "geographer/fiber_sum.hpp"

namespace geographer {

struct Triple {
  Int a = 0;  // signature
  Int b = 0;  // first Betti number
  Int c = 0;  // degeneracy (or nullity)
  friend bool operator==(const Triple&, const Triple&) = default;
  std::string to_string() const;
};

/// a a non-positive multiple of 8, 0 <= c <= b, b - c even, b >= max(0, 2 + a/4).
bool is_admissible(const Triple& t);
/// As is_admissible, without the parity condition and with c != b - 1.
bool is_null_admissible(const Triple& t);

/// First violated admissibility condition, or empty.
std::string admissibility_violation(const Triple& t);
std::string null_admissibility_violation(const Triple& t);

enum class BundleFamily { B0, B1, B2 };
std::string to_string(BundleFamily f);

/// Members of the one-parameter bundle families used for signature zero.
struct FamilyRecipe {
  BundleFamily family = BundleFamily::B0;
  int index = 0;
  BundleManifoldSpec spec;
};
struct BundleRecipe {
  BundleManifoldSpec spec;
};
struct FiberSumRecipe {
  int n = 2, d = 0, k = 0, g = 2;
};
struct DolgachevSumRecipe {
  int p = 2, q = 3, d = 0, k = 0, g = 2;
};
struct EllipticRecipe {
  int n = 2;
};
struct DolgachevRecipe {
  int p = 2, q = 3;
};

using RecipeVariant =
    std::variant<FamilyRecipe, BundleRecipe, FiberSumRecipe, DolgachevSumRecipe, EllipticRecipe, DolgachevRecipe>;

struct Recipe {
  RecipeVariant variant;
  InvariantCertificate certificate;
  Triple realized;

  /// e.g. "B_1(1) = B(3,3,3;1)", "E(2,1,2,2)", "E(1)_{2,3}#B(0,0,2;0)".
  std::string describe() const;
  std::string kind() const;
};

class InadmissibleTriple : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

struct RealizeOptions {
  /// Exact genus to use; must be at least max(k, 2) for the chosen recipe.
  std::optional<int> genus;
  /// Default genus is max(k, minimum_genus).
  int minimum_genus = 2;
};

/// Deterministic recipe for an admissible triple; the certificate is
/// recomputed and compared with the target before returning.
Recipe realize(const Triple& t, const RealizeOptions& options = {});

struct OpenCase {
  Triple triple;
  std::string question;
  std::string note;
};

using NullRealization = std::variant<Recipe, OpenCase>;

/// Realizes a null-admissible triple (signature, b1, nullity) when a known
/// construction has that nullity, and returns OpenCase otherwise.
NullRealization realize_null(const Triple& t, const RealizeOptions& options = {});

struct RealizedTriple {
  Triple triple;
  Recipe recipe;
};

/// All admissible triples with sigma_min <= a <= 0 and b <= b1_max, ordered by
/// a descending, then b, then c, each realized and verified.
std::vector<RealizedTriple> enumerate_region(Int sigma_min, Int b1_max, const RealizeOptions& options = {});

/// Simply connected examples with b1 = 0: E(-sigma/8) for sigma <= -16 and the
/// Dolgachev surface E(1)_{2,3} for sigma = -8.
Recipe simply_connected_geography(Int sigma);

}  // namespace geographer
