#include "geographer/surface_homology.hpp"

#include <sstream>

namespace geographer {

namespace {

void require_genus(int genus) {
  if (genus < 1) throw InvalidParameter("genus must be at least 1");
}

void require_handle(int handle, int genus) {
  require_genus(genus);
  if (handle < 1 || handle > genus) throw InvalidParameter("handle index out of range");
}

void require_curve(const HomologyClass& c, int genus) {
  if (c.coefficients.size() != static_cast<std::size_t>(2 * genus))
    throw InvalidParameter("curve class has the wrong length for this genus");
  if (!is_primitive(c.coefficients)) throw InvalidParameter("twist curve class must be primitive");
}

}  // namespace

IntMatrix intersection_form(int genus) {
  require_genus(genus);
  const auto n = static_cast<std::size_t>(2 * genus);
  IntMatrix j(n, n);
  for (std::size_t i = 0; i < n; i += 2) {
    j(i, i + 1) = 1;
    j(i + 1, i) = -1;
  }
  return j;
}

SymplecticBasis symplectic_basis(int genus) {
  SymplecticBasis basis{genus, {}, intersection_form(genus)};
  for (int i = 1; i <= genus; ++i) {
    basis.labels.push_back("a" + std::to_string(i));
    basis.labels.push_back("b" + std::to_string(i));
  }
  return basis;
}

HomologyClass curve_a(int handle, int genus) {
  require_handle(handle, genus);
  HomologyClass c{IntVector(static_cast<std::size_t>(2 * genus), 0)};
  c.coefficients[static_cast<std::size_t>(2 * (handle - 1))] = 1;
  return c;
}

HomologyClass curve_b(int handle, int genus) {
  require_handle(handle, genus);
  HomologyClass c{IntVector(static_cast<std::size_t>(2 * genus), 0)};
  c.coefficients[static_cast<std::size_t>(2 * (handle - 1) + 1)] = 1;
  return c;
}

std::string describe(const HomologyClass& c) {
  std::size_t nonzero = 0, where = 0;
  for (std::size_t i = 0; i < c.coefficients.size(); ++i)
    if (c.coefficients[i] != 0) {
      ++nonzero;
      where = i;
    }
  if (nonzero == 1 && c.coefficients[where] == 1)
    return std::string(where % 2 == 0 ? "a" : "b") + std::to_string(where / 2 + 1);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.coefficients.size(); ++i) os << (i ? "," : "") << c.coefficients[i];
  os << ')';
  return os.str();
}

TwistWord TwistWord::inverse() const {
  TwistWord inv;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) inv.letters.push_back({it->curve, -it->exponent});
  return inv;
}

std::string TwistWord::to_string() const {
  if (letters.empty()) return "id";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    os << (i ? " " : "") << "T_" << describe(letters[i].curve);
    if (letters[i].exponent != 1) os << "^" << letters[i].exponent;
  }
  return os.str();
}

MonodromyMatrix twist_transvection(const HomologyClass& curve, int genus, Int exponent) {
  require_genus(genus);
  require_curve(curve, genus);
  if (exponent == 0) throw InvalidParameter("twist exponent must be nonzero");
  // homology: H = I + e c c^T J; cohomology pullback is H^T = I - e J c c^T
  const IntMatrix j = intersection_form(genus);
  const IntVector jc = j * std::span<const Int>(curve.coefficients);
  const auto n = static_cast<std::size_t>(2 * genus);
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = checked_sub(m(r, c), checked_mul(exponent, checked_mul(jc[r], curve.coefficients[c])));
  return {m};
}

MonodromyMatrix compose_word(const TwistWord& word, int genus) {
  require_genus(genus);
  for (const auto& letter : word.letters) {
    require_curve(letter.curve, genus);
    if (letter.exponent == 0) throw InvalidParameter("twist exponent must be nonzero");
  }
  // phi = L_1 ... L_n acting on the left, so phi^* = L_n^* ... L_1^*
  IntMatrix result = IntMatrix::identity(static_cast<std::size_t>(2 * genus));
  for (const auto& letter : word.letters)
    result = twist_transvection(letter.curve, genus, letter.exponent).entries * result;
  return {result};
}

TwistWord monodromy_word(int d, int k, int genus) {
  require_genus(genus);
  if (d < 0 || d > k || k > genus) throw InvalidParameter("monodromy parameters must satisfy 0 <= d <= k <= g");
  TwistWord w;
  for (int i = genus; i > k; --i) {
    w.letters.push_back({curve_b(i, genus), 1});
    w.letters.push_back({curve_a(i, genus), -1});
  }
  for (int i = d; i >= 1; --i) w.letters.push_back({curve_a(i, genus), 1});
  return w;
}

IntMatrix invariant_subspace(const MonodromyMatrix& m) {
  const IntMatrix shifted = m.entries - IntMatrix::identity(m.entries.rows());
  return kernel_basis(shifted);
}

bool is_symplectic(const MonodromyMatrix& m) {
  if (!m.entries.is_square() || m.entries.rows() % 2 != 0 || m.entries.rows() == 0) return false;
  const IntMatrix j = intersection_form(m.genus());
  return m.entries.transpose() * j * m.entries == j && determinant(m.entries) == 1;
}

}  // namespace geographer
