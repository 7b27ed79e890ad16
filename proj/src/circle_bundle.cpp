#include "geographer/circle_bundle.hpp"

#include <algorithm>

namespace geographer {

EulerTag euler_tag_from_int(int tag) {
  switch (tag) {
    case 0: return EulerTag::Zero;
    case 1: return EulerTag::One;
    case 2: return EulerTag::Two;
    default: throw InvalidParameter("Euler class tag must be 0, 1 or 2");
  }
}

void require_valid_parameters(int d, int k, EulerTag e) {
  if (d < 0 || d > k) throw InvalidParameter("parameters must satisfy 0 <= d <= k");
  if (e == EulerTag::One && d == 0) throw InvalidParameter("Euler tag 1 requires d != 0");
  if (e == EulerTag::Two && d == k) throw InvalidParameter("Euler tag 2 requires d != k");
}

EulerClass validate_euler_class(const WangData& y, const EulerClassSpec& spec, int d, int k) {
  require_valid_parameters(d, k, spec.tag);
  const std::size_t r = y.mu_rank();
  if (r != static_cast<std::size_t>(2 * k - d))
    throw InvalidParameter("mu-image rank " + std::to_string(r) + " does not match 2k - d for the given d, k");
  if (spec.omega_coefficient != 0) throw InvalidParameter("Euler class must restrict to zero on the fiber");

  const auto twisted = static_cast<std::size_t>(d);
  EulerClass out{spec.tag, IntVector(r, 0), "none"};
  if (spec.coefficients) {
    if (spec.coefficients->size() != r)
      throw InvalidParameter("Euler class needs " + std::to_string(r) + " mu-image coefficients");
    out.coefficients = *spec.coefficients;
  } else if (spec.tag == EulerTag::One) {
    out.coefficients[0] = 1;
  } else if (spec.tag == EulerTag::Two) {
    out.coefficients[twisted] = 1;
  }

  const bool zero = std::all_of(out.coefficients.begin(), out.coefficients.end(), [](Int x) { return x == 0; });
  switch (spec.tag) {
    case EulerTag::Zero:
      if (!zero) throw InvalidParameter("Euler tag 0 requires the zero class");
      break;
    case EulerTag::One: {
      std::size_t ones = 0, where = r;
      for (std::size_t i = 0; i < r; ++i) {
        if (out.coefficients[i] == 1) {
          ++ones;
          where = i;
        } else if (out.coefficients[i] != 0) {
          ones = 2;
        }
      }
      if (ones != 1 || where >= twisted)
        throw InvalidParameter("Euler tag 1 requires a single twisted-block basis class alpha_i ^ theta, i <= d");
      out.block = "twisted";
      break;
    }
    case EulerTag::Two:
      for (std::size_t i = 0; i < twisted; ++i)
        if (out.coefficients[i] != 0)
          throw InvalidParameter("Euler tag 2 requires a class in the untwisted block d < i <= k");
      if (!is_primitive(out.coefficients)) throw InvalidParameter("Euler tag 2 requires a primitive class");
      out.block = "untwisted";
      break;
  }
  return out;
}

int bundle_b1(const WangData& y, const EulerClass& e) {
  // Gysin: 0 -> H^1(Y) -> H^1(M) -> H^0(Y) --u e--> H^2(Y); cup with a
  // non-torsion e is injective on H^0.
  return y.b1 + (e.is_zero() ? 1 : 0);
}

PairingMatrix lefschetz_pairing(const WangData& y, const EulerClass& e, const IntMatrix& invariant_basis,
                                const IntMatrix& intersection, PairingMutation mutation) {
  (void)y;
  const std::size_t lifts = invariant_basis.cols();
  const std::size_t n = 1 + lifts + (e.is_zero() ? 1 : 0);
  PairingMatrix out{IntMatrix(n, n), {"theta"}};

  const IntMatrix restricted = invariant_basis.transpose() * intersection * invariant_basis;
  for (std::size_t i = 0; i < lifts; ++i) {
    out.labels.push_back("lift " + cohomology_label(invariant_basis.column(i)));
    for (std::size_t j = 0; j < lifts; ++j) out.q(1 + i, 1 + j) = restricted(i, j);
  }
  if (e.is_zero()) {
    const std::size_t eta = n - 1;
    out.labels.push_back("eta");
    out.q(0, eta) = 1;
    out.q(eta, 0) = -1;
  }

  if (mutation == PairingMutation::SignFlip) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (out.q(i, j) != 0) {
          out.q(i, j) = -out.q(i, j);
          return out;
        }
  }
  return out;
}

int degeneracy_oracle(const IntMatrix& q, int b1) { return b1 - static_cast<int>(rank(q)); }

int degeneracy_closed_form(int d, int k, EulerTag e) {
  require_valid_parameters(d, k, e);
  return e == EulerTag::Zero ? d : d + 1;
}

int nullity_closed_form(int d, int k, EulerTag e) {
  require_valid_parameters(d, k, e);
  if (e == EulerTag::Zero) return 0;
  return d == k ? d + 1 : d;
}

NullityCheck nullity_necessary_check(const WangData& y, const EulerClass& e, const IntMatrix& intersection, int d,
                                     int k) {
  NullityCheck check;
  check.nullity = nullity_closed_form(d, k, e.tag);
  const PairingMatrix q = lefschetz_pairing(y, e, y.invariant_basis, intersection);
  check.degeneracy = degeneracy_oracle(q.q, bundle_b1(y, e));
  const bool product_ok = !e.is_zero() || check.nullity == 0;
  const bool bound_ok = check.nullity >= 0 && check.nullity <= check.degeneracy;
  check.passed = product_ok && bound_ok;
  if (!product_ok) check.detail = "nullity of a product bundle must vanish";
  else if (!bound_ok) check.detail = "nullity exceeds the degeneracy";
  else check.detail = "nullity " + std::to_string(check.nullity) + " <= degeneracy " + std::to_string(check.degeneracy);
  return check;
}

}  // namespace geographer
