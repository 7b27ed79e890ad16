#include "geographer/mapping_torus.hpp"

#include <sstream>

namespace geographer {

MappingTorus::MappingTorus(TwistWord word, int genus)
    : genus_(genus), word_(std::move(word)), monodromy_(compose_word(word_, genus)) {}

std::string cohomology_label(std::span<const Int> v) {
  std::size_t nonzero = 0, where = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      ++nonzero;
      where = i;
    }
  if (nonzero == 1 && v[where] == 1)
    return std::string(where % 2 == 0 ? "alpha" : "beta") + std::to_string(where / 2 + 1);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

WangData wang_cohomology(const MappingTorus& y) {
  const IntMatrix& m = y.monodromy().entries;
  const IntMatrix shifted = m - IntMatrix::identity(m.rows());

  WangData data;
  data.invariant_basis = kernel_basis(shifted);
  data.mu_basis = cokernel_free_basis(shifted);
  data.b1 = 1 + static_cast<int>(data.invariant_basis.cols());
  data.b2 = 1 + static_cast<int>(data.mu_basis.cols());

  data.h1_labels.push_back("theta");
  for (const auto& col : data.invariant_basis.columns()) data.h1_labels.push_back("lift " + cohomology_label(col));
  data.h2_labels.push_back("Omega");
  for (const auto& col : data.mu_basis.columns()) data.h2_labels.push_back(cohomology_label(col) + "^theta");

  data.elementary_divisors = elementary_divisors(shifted);
  for (Int e : data.elementary_divisors)
    if (e > 1) data.torsion.push_back(e);
  return data;
}

IntMatrix mu_image(const MappingTorus& y) {
  const IntMatrix& m = y.monodromy().entries;
  return cokernel_free_basis(m - IntMatrix::identity(m.rows()));
}

Int restriction_to_fiber(const WangData& data, std::span<const Int> h2_class) {
  if (h2_class.size() != 1 + data.mu_rank())
    throw InvalidParameter("H^2(Y) class must have " + std::to_string(1 + data.mu_rank()) + " coefficients");
  // mu-image classes x ^ theta vanish on the fiber since theta does
  return h2_class[0];
}

}  // namespace geographer
