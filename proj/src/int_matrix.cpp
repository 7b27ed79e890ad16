#include "geographer/int_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace geographer {

Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw ArithmeticOverflow("int64 overflow in addition");
  return out;
}

Int checked_sub(Int a, Int b) {
  Int out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw ArithmeticOverflow("int64 overflow in subtraction");
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflow("int64 overflow in multiplication");
  return out;
}

namespace {

__extension__ using Wide = __int128;

Int abs_checked(Int v) {
  if (v == INT64_MIN) throw ArithmeticOverflow("int64 overflow in abs");
  return v < 0 ? -v : v;
}

// floor(a / b) for b > 0
Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

}  // namespace

Int content(std::span<const Int> v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, abs_checked(x));
  return g;
}

bool is_primitive(std::span<const Int> v) { return content(v) == 1; }

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntMatrix::columns() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw std::out_of_range("column block out of range");
  IntMatrix m(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, first + c);
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Int x) { return x == 0; });
}

bool IntMatrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

void IntMatrix::swap_columns(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_column_multiple(std::size_t j, std::size_t i, Int factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, j) = checked_add((*this)(r, j), checked_mul(factor, (*this)(r, i)));
}

void IntMatrix::negate_column(std::size_t j) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = checked_sub(0, (*this)(r, j));
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::add_row_multiple(std::size_t j, std::size_t i, Int factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(j, c) = checked_add((*this)(j, c), checked_mul(factor, (*this)(i, c)));
}

void IntMatrix::negate_row(std::size_t j) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(j, c) = checked_sub(0, (*this)(j, c));
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
    }
  return out;
}

IntVector operator*(const IntMatrix& a, std::span<const Int> v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  IntVector out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      out[i] = checked_add(out[i], checked_mul(a(i, k), v[k]));
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("sum shape mismatch");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = checked_add(a(i, j), b(i, j));
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("difference shape mismatch");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = checked_sub(a(i, j), b(i, j));
  return out;
}

IntMatrix scaled(const IntMatrix& a, Int factor) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = checked_mul(a(i, j), factor);
  return out;
}

std::size_t rank(const IntMatrix& a) {
  IntMatrix m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(r, pivot);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Int lead = m(i, c);
      if (lead == 0) continue;
      const Int p = m(r, c);
      const Int g = std::gcd(abs_checked(p), abs_checked(lead));
      // row_i = (p/g) row_i - (lead/g) row_r, then strip the row content
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) = checked_sub(checked_mul(p / g, m(i, j)), checked_mul(lead / g, m(r, j)));
      const IntVector row_i = m.row(i);
      const Int g_row = content(row_i);
      if (g_row > 1)
        for (std::size_t j = c; j < m.cols(); ++j) m(i, j) /= g_row;
    }
    ++r;
  }
  return r;
}

Int determinant(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        const Wide num = static_cast<Wide>(m(i, j)) * m(k, k) - static_cast<Wide>(m(i, k)) * m(k, j);
        const Wide q = num / previous;
        if (q > INT64_MAX || q < INT64_MIN) throw ArithmeticOverflow("int64 overflow in determinant");
        m(i, j) = static_cast<Int>(q);
      }
    previous = m(k, k);
  }
  return checked_mul(sign, m(n - 1, n - 1));
}

ColumnEchelon column_echelon(const IntMatrix& a) {
  ColumnEchelon out{a, IntMatrix::identity(a.cols()), 0};
  IntMatrix& r = out.reduced;
  IntMatrix& u = out.transform;
  std::size_t p = 0;
  for (std::size_t row = 0; row < r.rows() && p < r.cols(); ++row) {
    for (std::size_t j = p + 1; j < r.cols(); ++j) {
      while (r(row, j) != 0) {
        const Int q = r(row, p) / r(row, j);
        r.add_column_multiple(p, j, -q);
        u.add_column_multiple(p, j, -q);
        r.swap_columns(p, j);
        u.swap_columns(p, j);
      }
    }
    if (r(row, p) == 0) continue;
    if (r(row, p) < 0) {
      r.negate_column(p);
      u.negate_column(p);
    }
    for (std::size_t q = 0; q < p; ++q) {
      const Int f = floor_div(r(row, q), r(row, p));
      r.add_column_multiple(q, p, -f);
      u.add_column_multiple(q, p, -f);
    }
    ++p;
  }
  out.rank = p;
  return out;
}

IntMatrix row_hermite_basis(const IntMatrix& b) {
  const ColumnEchelon e = column_echelon(b.transpose());
  return e.reduced.column_block(0, e.rank).transpose();
}

IntMatrix kernel_basis(const IntMatrix& a) {
  const ColumnEchelon e = column_echelon(a);
  const std::size_t n = a.cols();
  if (e.rank == n) return IntMatrix(n, 0);
  const IntMatrix raw = e.transform.column_block(e.rank, n - e.rank);
  return row_hermite_basis(raw.transpose()).transpose();
}

IntMatrix cokernel_free_basis(const IntMatrix& a) {
  const std::size_t m = a.rows();
  // Integer functionals vanishing on im(a); saturated, so they identify
  // Z^m / sat(im a) with Z^r.
  const IntMatrix functionals = kernel_basis(a.transpose()).transpose();
  const std::size_t r = functionals.rows();
  if (r == 0) return IntMatrix(m, 0);

  std::vector<std::size_t> chosen;
  for (std::size_t j = 0; j < m && chosen.size() < r; ++j) {
    std::vector<IntVector> cols;
    for (std::size_t c : chosen) cols.push_back(functionals.column(c));
    cols.push_back(functionals.column(j));
    if (rank(IntMatrix::from_columns(r, cols)) == cols.size()) chosen.push_back(j);
  }
  std::vector<IntVector> minor_cols;
  for (std::size_t c : chosen) minor_cols.push_back(functionals.column(c));
  const Int det = determinant(IntMatrix::from_columns(r, minor_cols));
  if (det == 1 || det == -1) {
    IntMatrix reps(m, r);
    for (std::size_t i = 0; i < r; ++i) reps(chosen[i], i) = 1;
    return reps;
  }

  // functionals * U = [L | 0] with L unit lower triangular.
  const ColumnEchelon e = column_echelon(functionals);
  IntMatrix inverse(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      Int acc = (i == j) ? 1 : 0;
      for (std::size_t k = 0; k < i; ++k) acc = checked_sub(acc, checked_mul(e.reduced(i, k), inverse(k, j)));
      if (e.reduced(i, i) != 1) throw std::logic_error("cokernel functionals are not saturated");
      inverse(i, j) = acc;
    }
  }
  return e.transform.column_block(0, r) * inverse;
}

std::vector<Int> elementary_divisors(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::vector<Int> out;
  for (std::size_t t = 0; t < limit; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pi = m.rows(), pj = m.cols();
    Int best = 0;
    for (std::size_t i = t; i < m.rows(); ++i)
      for (std::size_t j = t; j < m.cols(); ++j)
        if (m(i, j) != 0 && (best == 0 || abs_checked(m(i, j)) < best)) {
          best = abs_checked(m(i, j));
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    m.swap_rows(t, pi);
    m.swap_columns(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m(i, t) == 0) continue;
        m.add_row_multiple(i, t, -(m(i, t) / m(t, t)));
        if (m(i, t) != 0) {
          m.swap_rows(i, t);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m(t, j) == 0) continue;
        m.add_column_multiple(j, t, -(m(t, j) / m(t, t)));
        if (m(t, j) != 0) {
          m.swap_columns(j, t);
          clean = false;
        }
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (m(i, j) % m(t, t) != 0) {
            m.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.push_back(abs_checked(m(t, t)));
  }
  return out;
}

}  // namespace geographer
