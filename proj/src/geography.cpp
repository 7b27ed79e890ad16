#include "geographer/geography.hpp"

#include <algorithm>

namespace geographer {

std::string Triple::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

namespace {

std::string common_violation(const Triple& t) {
  if (t.a > 0 || t.a % 8 != 0) return "signature must be a non-positive multiple of 8";
  if (t.c < 0) return "third entry must be non-negative";
  if (t.c > t.b) return "third entry must not exceed b1";
  if (t.b < std::max<Int>(0, 2 + t.a / 4)) return "b1 must be at least max(0, 2 + signature/4)";
  return {};
}

}  // namespace

std::string admissibility_violation(const Triple& t) {
  std::string why = common_violation(t);
  if (why.empty() && (t.b - t.c) % 2 != 0) why = "b1 - degeneracy must be even";
  return why;
}

std::string null_admissibility_violation(const Triple& t) {
  std::string why = common_violation(t);
  if (why.empty() && t.c == t.b - 1) why = "nullity b1 - 1 is impossible";
  return why;
}

bool is_admissible(const Triple& t) { return admissibility_violation(t).empty(); }
bool is_null_admissible(const Triple& t) { return null_admissibility_violation(t).empty(); }

std::string to_string(BundleFamily f) {
  switch (f) {
    case BundleFamily::B0: return "B_0";
    case BundleFamily::B1: return "B_1";
    case BundleFamily::B2: return "B_2";
  }
  return "?";
}

std::string Recipe::describe() const {
  struct Visitor {
    std::string operator()(const FamilyRecipe& r) const {
      return to_string(r.family) + "(" + std::to_string(r.index) + ") = " + r.spec.name();
    }
    std::string operator()(const BundleRecipe& r) const { return r.spec.name(); }
    std::string operator()(const FiberSumRecipe& r) const {
      return FiberSumSpec{EllipticSurface{r.n}, r.d, r.k, r.g}.name();
    }
    std::string operator()(const DolgachevSumRecipe& r) const {
      return FiberSumSpec{DolgachevSurface{r.p, r.q}, r.d, r.k, r.g}.name();
    }
    std::string operator()(const EllipticRecipe& r) const { return name(EllipticSurface{r.n}); }
    std::string operator()(const DolgachevRecipe& r) const { return name(DolgachevSurface{r.p, r.q}); }
  };
  return std::visit(Visitor{}, variant);
}

std::string Recipe::kind() const {
  static constexpr const char* kinds[] = {"bundle_family", "bundle", "fiber_sum", "dolgachev_sum", "elliptic",
                                          "dolgachev"};
  return kinds[variant.index()];
}

namespace {

int pick_genus(int k, const RealizeOptions& options) {
  const int required = std::max(k, 2);
  if (options.genus) {
    if (*options.genus < required)
      throw InvalidParameter("genus " + std::to_string(*options.genus) + " is below max(k, 2) = " +
                             std::to_string(required));
    return *options.genus;
  }
  return std::max(required, options.minimum_genus);
}

Recipe finish(RecipeVariant variant, InvariantCertificate cert, const Triple& target, Int third) {
  Recipe recipe{std::move(variant), std::move(cert), Triple{0, 0, 0}};
  const InvariantCertificate& c = recipe.certificate;
  recipe.realized = Triple{c.sigma, c.b1, third};
  if (!(recipe.realized == target))
    throw ConsistencyError(recipe.describe() + " realizes " + recipe.realized.to_string() + ", not " +
                           target.to_string());
  if (c.kappa != KodairaDimension::One) throw ConsistencyError(recipe.describe() + " does not have Kodaira dimension 1");
  if (!c.minimal.minimal) throw ConsistencyError(recipe.describe() + " is not certified minimal");
  if (2 * c.chi + 3 * c.sigma != 0) throw ConsistencyError(recipe.describe() + " violates 2 chi + 3 sigma = 0");
  if (!c.all_checks_pass()) throw ConsistencyError(recipe.describe() + " has a failing identity check");
  return recipe;
}

Recipe realize_family(BundleFamily family, int index, int d, int k, int tag, const Triple& t,
                      const RealizeOptions& options) {
  const BundleManifoldSpec spec = bundle_spec(d, k, pick_genus(k, options), tag);
  InvariantCertificate cert = construct(spec);
  const Int degeneracy = cert.degeneracy;
  return finish(FamilyRecipe{family, index, spec}, std::move(cert), t, degeneracy);
}

Recipe realize_negative(const Triple& t, int d, int k, const RealizeOptions& options) {
  const int g = pick_genus(k, options);
  if (t.a == -8) {
    const DolgachevSumRecipe r{2, 3, d, k, g};
    InvariantCertificate cert = fiber_sum_invariants(FiberSumSpec{DolgachevSurface{r.p, r.q}, d, k, g});
    const Int third = cert.degeneracy;
    return finish(r, std::move(cert), t, third);
  }
  const FiberSumRecipe r{static_cast<int>(-t.a / 8), d, k, g};
  InvariantCertificate cert = fiber_sum_invariants(FiberSumSpec{EllipticSurface{r.n}, d, k, g});
  const Int third = cert.degeneracy;
  return finish(r, std::move(cert), t, third);
}

}  // namespace

Recipe realize(const Triple& t, const RealizeOptions& options) {
  if (const std::string why = admissibility_violation(t); !why.empty()) throw InadmissibleTriple(why);
  const int b = static_cast<int>(t.b);
  const int c = static_cast<int>(t.c);

  if (t.a < 0) return realize_negative(t, c, (b + c) / 2, options);

  if (b % 2 == 0) {
    const int l = b / 2;
    if (c < b) {
      const int i = c / 2;
      return realize_family(BundleFamily::B0, i, 2 * i, l - 1 + i, 0, t, options);
    }
    const int i = l - 1;
    return realize_family(BundleFamily::B1, i, 2 * i + 1, l + i, 1, t, options);
  }
  const int l = (b - 1) / 2;
  if (c == b) return realize_family(BundleFamily::B1, l, 2 * l, 2 * l, 1, t, options);
  const int i = (c - 1) / 2;
  return realize_family(BundleFamily::B2, i, 2 * i, l + i, 2, t, options);
}

NullRealization realize_null(const Triple& t, const RealizeOptions& options) {
  if (const std::string why = null_admissibility_violation(t); !why.empty()) throw InadmissibleTriple(why);

  if (t.a == 0) {
    for (int tag = 0; tag <= 2; ++tag)
      for (int k = 0; k <= t.b; ++k)
        for (int d = 0; d <= k; ++d) {
          const EulerTag e = euler_tag_from_int(tag);
          if ((e == EulerTag::One && d == 0) || (e == EulerTag::Two && d == k)) continue;
          const int b1 = e == EulerTag::Zero ? 2 * k - d + 2 : 2 * k - d + 1;
          if (b1 != t.b || nullity_closed_form(d, k, e) != t.c) continue;
          const BundleManifoldSpec spec = bundle_spec(d, k, pick_genus(k, options), tag);
          InvariantCertificate cert = construct(spec);
          const Int nullity = *cert.nullity;
          return finish(BundleRecipe{spec}, std::move(cert), t, nullity);
        }
  } else if (t.c == 0 && t.b % 2 == 0) {
    // degeneracy 0 forces nullity 0
    Recipe r = realize_negative(Triple{t.a, t.b, 0}, 0, static_cast<int>(t.b / 2), options);
    if (r.certificate.nullity != Int{0}) throw ConsistencyError(r.describe() + ": nullity not pinned to 0");
    return r;
  }

  OpenCase open{t,
                "open: no construction is known of a minimal symplectic 4-manifold with signature " +
                    std::to_string(t.a) + ", b1 = " + std::to_string(t.b) + " and nullity " + std::to_string(t.c),
                "no bundle manifold or fiber sum with known nullity matches"};
  if (t == Triple{0, 3, 1})
    open.note =
        "a realization needs a basis x, y, z of H^1 with x u y != 0 and all other products of basis classes "
        "zero; no bundle manifold has this ring";
  return open;
}

std::vector<RealizedTriple> enumerate_region(Int sigma_min, Int b1_max, const RealizeOptions& options) {
  if (sigma_min > 0) throw InvalidParameter("sigma-min must be non-positive");
  if (b1_max < 0) throw InvalidParameter("b1-max must be non-negative");
  std::vector<RealizedTriple> out;
  for (Int a = 0; a >= sigma_min; a -= 8)
    for (Int b = 0; b <= b1_max; ++b)
      for (Int c = 0; c <= b; ++c) {
        const Triple t{a, b, c};
        if (is_admissible(t)) out.push_back({t, realize(t, options)});
      }
  return out;
}

Recipe simply_connected_geography(Int sigma) {
  if (sigma >= 0 || sigma % 8 != 0) throw InvalidParameter("signature must be a negative multiple of 8");
  if (sigma == -8) {
    InvariantCertificate cert = elliptic_invariants(DolgachevSurface{2, 3});
    return Recipe{DolgachevRecipe{2, 3}, std::move(cert), Triple{sigma, 0, 0}};
  }
  const int n = static_cast<int>(-sigma / 8);
  InvariantCertificate cert = elliptic_invariants(EllipticSurface{n});
  return Recipe{EllipticRecipe{n}, std::move(cert), Triple{sigma, 0, 0}};
}

}  // namespace geographer
