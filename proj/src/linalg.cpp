#include "bhk/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <ranges>
#include <optional>
#include <sstream>
#include <utility>

namespace bhk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::SingularMatrix: return "SingularMatrix";
  case ErrorCode::NoPositiveWeights: return "NoPositiveWeights";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::ShapeError: return "ShapeError";
  case ErrorCode::NotInvertibleShape: return "NotInvertibleShape";
  case ErrorCode::NotSubgroup: return "NotSubgroup";
  case ErrorCode::JMismatch: return "JMismatch";
  case ErrorCode::TooLarge: return "TooLarge";
  case ErrorCode::InvarianceViolation: return "InvarianceViolation";
  case ErrorCode::DegenerateConfig: return "DegenerateConfig";
  case ErrorCode::ResourceLimit: return "ResourceLimit";
  case ErrorCode::NotGorenstein: return "NotGorenstein";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Matrix basics

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ == 0 ? 0 : init.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_)
      throw Error(ErrorCode::ShapeError, "ragged matrix literal");
    for (long v : r)
      data_.emplace_back(v);
  }
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_)
      throw Error(ErrorCode::ShapeError, "ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

template <class T> void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap((*this)(a, c), (*this)(b, c));
}

template <class T> void Matrix<T>::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t r = 0; r < rows_; ++r)
    std::swap((*this)(r, a), (*this)(r, b));
}

template <class T> Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

template <class T> bool Matrix<T>::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const T& v) { return sgn(v) == 0; });
}

template class Matrix<Integer>;
template class Matrix<Rational>;

namespace {

template <class T> Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::ShapeError, "matrix product dimension mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

} // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  return multiply(a, b);
}
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  return multiply(a, b);
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(r, c) = m(r, c);
  return out;
}

IntVector row_times(std::span<const Integer> v, const IntMatrix& m) {
  if (v.size() != m.rows())
    throw Error(ErrorCode::ShapeError, "vector/matrix dimension mismatch");
  IntVector out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (sgn(v[r]) == 0)
      continue;
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[c] += v[r] * m(r, c);
  }
  return out;
}

RatVector row_times(std::span<const Rational> v, const RatMatrix& m) {
  if (v.size() != m.rows())
    throw Error(ErrorCode::ShapeError, "vector/matrix dimension mismatch");
  RatVector out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (sgn(v[r]) == 0)
      continue;
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[c] += v[r] * m(r, c);
  }
  return out;
}

RatVector times_column(const RatMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols())
    throw Error(ErrorCode::ShapeError, "matrix/vector dimension mismatch");
  RatVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[r] += m(r, c) * v[c];
  return out;
}

// ---------------------------------------------------------------------------
// Normal forms

namespace {

// Extended gcd with g = s*a + t*b >= 0.
// When a | b this returns (s, t) = (1, 0) so the pivot row is kept and the
// elimination cannot cycle between equal-magnitude entries.
void xgcd(const Integer& a, const Integer& b, Integer& g, Integer& s,
          Integer& t) {
  if (sgn(a) != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    g = a;
    s = 1;
    t = 0;
    return;
  }
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
}

// Replace rows (i, j) of m by (s*ri + t*rj, -b/g*ri + a/g*rj). The 2x2
// transform has determinant 1.
void combine_rows(IntMatrix& m, std::size_t i, std::size_t j,
                  const Integer& s, const Integer& t, const Integer& p,
                  const Integer& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer ri = m(i, c);
    Integer rj = m(j, c);
    m(i, c) = s * ri + t * rj;
    m(j, c) = p * ri + q * rj;
  }
}

void combine_cols(IntMatrix& m, std::size_t i, std::size_t j,
                  const Integer& s, const Integer& t, const Integer& p,
                  const Integer& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer ci = m(r, i);
    Integer cj = m(r, j);
    m(r, i) = s * ci + t * cj;
    m(r, j) = p * ci + q * cj;
  }
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src,
                      const Integer& factor) {
  if (sgn(factor) == 0)
    return;
  for (std::size_t c = 0; c < m.cols(); ++c)
    m(dst, c) += factor * m(src, c);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    m(r, c) = -m(r, c);
}

// floor division for the above-pivot reduction into [0, pivot).
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

HermiteForm hermite_normal_form(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // Fold every lower entry of this column into the pivot with gcd steps.
    for (std::size_t r = pivot_row + 1; r < h.rows(); ++r) {
      if (sgn(h(r, col)) == 0)
        continue;
      Integer a = h(pivot_row, col);
      Integer b = h(r, col);
      Integer g, s, t;
      xgcd(a, b, g, s, t);
      Integer p = -b / g;
      Integer q = a / g;
      combine_rows(h, pivot_row, r, s, t, p, q);
      combine_rows(u, pivot_row, r, s, t, p, q);
    }
    if (sgn(h(pivot_row, col)) == 0)
      continue;
    if (sgn(h(pivot_row, col)) < 0) {
      negate_row(h, pivot_row);
      negate_row(u, pivot_row);
    }
    const Integer pivot = h(pivot_row, col);
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer f = -floor_div(h(r, col), pivot);
      add_row_multiple(h, r, pivot_row, f);
      add_row_multiple(u, r, pivot_row, f);
    }
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

IntVector SmithForm::diagonal() const {
  IntVector out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    out.push_back(D(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm out{m, IntMatrix::identity(m.rows()),
                IntMatrix::identity(m.cols()), IntMatrix::identity(m.cols())};
  IntMatrix& d = out.D;
  IntMatrix& u = out.U;
  IntMatrix& v = out.V;
  IntMatrix& vinv = out.V_inverse;
  const std::size_t n = std::min(d.rows(), d.cols());

  // Column operation on V corresponds to the inverse row operation on V^-1:
  // D <- D*E, V <- V*E, Vinv <- E^-1 * Vinv.
  auto col_combine = [&](std::size_t i, std::size_t j, const Integer& s,
                         const Integer& t, const Integer& p,
                         const Integer& q) {
    combine_cols(d, i, j, s, t, p, q);
    combine_cols(v, i, j, s, t, p, q);
    // E = [[s, p], [t, q]] acting on columns (i, j); det 1, so
    // E^-1 = [[q, -p], [-t, s]] acting on rows (i, j).
    combine_rows(vinv, i, j, q, -p, -t, s);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    d.swap_cols(i, j);
    v.swap_cols(i, j);
    vinv.swap_rows(i, j);
  };

  for (std::size_t t = 0; t < n; ++t) {
    // Pick the smallest nonzero entry of the trailing block as pivot.
    bool found = false;
    std::size_t pr = t, pc = t;
    for (std::size_t r = t; r < d.rows(); ++r)
      for (std::size_t c = t; c < d.cols(); ++c)
        if (sgn(d(r, c)) != 0 &&
            (!found || abs(d(r, c)) < abs(d(pr, pc)))) {
          found = true;
          pr = r;
          pc = c;
        }
    if (!found)
      break;
    d.swap_rows(t, pr);
    u.swap_rows(t, pr);
    col_swap(t, pc);

    for (;;) {
      bool dirty = false;
      for (std::size_t r = t + 1; r < d.rows(); ++r) {
        if (sgn(d(r, t)) == 0)
          continue;
        Integer a = d(t, t), b = d(r, t), g, s, x;
        xgcd(a, b, g, s, x);
        Integer p = -b / g, q = a / g;
        combine_rows(d, t, r, s, x, p, q);
        combine_rows(u, t, r, s, x, p, q);
      }
      for (std::size_t c = t + 1; c < d.cols(); ++c) {
        if (sgn(d(t, c)) == 0)
          continue;
        Integer a = d(t, t), b = d(t, c), g, s, x;
        xgcd(a, b, g, s, x);
        Integer p = -b / g, q = a / g;
        col_combine(t, c, s, x, p, q);
        dirty = true;
      }
      if (dirty)
        dirty = std::ranges::any_of(
            std::views::iota(t + 1, d.rows()),
            [&](std::size_t r) { return sgn(d(r, t)) != 0; });
      if (!dirty) {
        // Divisibility: fold any offending row into the pivot row.
        std::optional<std::size_t> offending;
        for (std::size_t r = t + 1; r < d.rows() && !offending; ++r)
          for (std::size_t c = t + 1; c < d.cols(); ++c)
            if (!mpz_divisible_p(d(r, c).get_mpz_t(), d(t, t).get_mpz_t())) {
              offending = r;
              break;
            }
        if (!offending)
          break;
        add_row_multiple(d, t, *offending, 1);
        add_row_multiple(u, t, *offending, 1);
      }
    }
    if (sgn(d(t, t)) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Determinants, inverses, solves

Integer determinant(const IntMatrix& m) {
  if (!m.square())
    throw Error(ErrorCode::ShapeError, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  // Fraction-free Bareiss elimination.
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && sgn(a(swap, k)) == 0)
        ++swap;
      if (swap == n)
        return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& m) {
  if (!m.square())
    throw Error(ErrorCode::ShapeError, "determinant of non-square matrix");
  RatMatrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(a(piv, k)) == 0)
      ++piv;
    if (piv == n)
      return 0;
    if (piv != k) {
      a.swap_rows(piv, k);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0)
        continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j)
        a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

RatMatrix rational_inverse(const RatMatrix& m) {
  if (!m.square())
    throw Error(ErrorCode::ShapeError, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(a(piv, k)) == 0)
      ++piv;
    if (piv == n)
      throw Error(ErrorCode::SingularMatrix, "matrix has determinant 0");
    a.swap_rows(piv, k);
    inv.swap_rows(piv, k);
    Rational p = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= p;
      inv(k, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || sgn(a(i, k)) == 0)
        continue;
      Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

RatMatrix rational_inverse(const IntMatrix& m) {
  return rational_inverse(to_rational(m));
}

RatVector solve(const RatMatrix& m, std::span<const Rational> rhs) {
  return times_column(rational_inverse(m), rhs);
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && sgn(a(piv, c)) == 0)
      ++piv;
    if (piv == a.rows())
      continue;
    a.swap_rows(piv, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (sgn(a(i, c)) == 0)
        continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Lattices and quotients

AbelianQuotient cokernel(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  const std::size_t k = m.cols();
  AbelianQuotient out;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < k; ++i) {
    Integer di = i < std::min(m.rows(), m.cols()) ? snf.D(i, i) : Integer(0);
    if (di == 1)
      continue;
    out.invariant_factors.push_back(di);
    kept.push_back(i);
  }
  // Row lattice L = Z^r D V^-1, so rows of V^-1 generate the quotient.
  out.generator_lifts = IntMatrix(kept.size(), k);
  for (std::size_t g = 0; g < kept.size(); ++g)
    for (std::size_t c = 0; c < k; ++c)
      out.generator_lifts(g, c) = snf.V_inverse(kept[g], c);
  return out;
}

Integer AbelianQuotient::order() const {
  Integer o = 1;
  for (const auto& f : invariant_factors)
    o *= f;
  return o;
}

std::string AbelianQuotient::to_string() const {
  if (invariant_factors.empty())
    return "trivial";
  std::ostringstream os;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i)
      os << " x ";
    if (invariant_factors[i] == 0)
      os << "Z";
    else
      os << "Z_" << invariant_factors[i].get_str();
  }
  return os.str();
}

IntMatrix left_kernel_lattice(const IntMatrix& m) {
  HermiteForm hf = hermite_normal_form(m);
  IntMatrix out(m.rows() - hf.rank, m.rows());
  for (std::size_t r = hf.rank; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.rows(); ++c)
      out(r - hf.rank, c) = hf.U(r, c);
  return out;
}

IntMatrix lattice_basis(const IntMatrix& m) {
  HermiteForm hf = hermite_normal_form(m);
  IntMatrix out(hf.rank, m.cols());
  for (std::size_t r = 0; r < hf.rank; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(r, c) = hf.H(r, c);
  return out;
}

std::optional<IntVector> lattice_coordinates(const IntMatrix& h,
                                             std::span<const Integer> v) {
  IntVector rest(v.begin(), v.end());
  IntVector coords(h.rows());
  std::size_t col = 0;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    while (col < h.cols() && sgn(h(r, col)) == 0) {
      if (sgn(rest[col]) != 0)
        return std::nullopt;
      ++col;
    }
    if (col == h.cols())
      break;
    if (!mpz_divisible_p(rest[col].get_mpz_t(), h(r, col).get_mpz_t()))
      return std::nullopt;
    coords[r] = rest[col] / h(r, col);
    for (std::size_t c = col; c < h.cols(); ++c)
      rest[c] -= coords[r] * h(r, c);
    ++col;
  }
  for (const auto& x : rest)
    if (sgn(x) != 0)
      return std::nullopt;
  return coords;
}

// ---------------------------------------------------------------------------
// Weights

Integer WeightSystem::weight_sum() const {
  Integer s = 0;
  for (const auto& x : q)
    s += x;
  return s;
}

std::string WeightSystem::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < q.size(); ++i)
    os << (i ? "," : "") << q[i].get_str();
  os << "; d=" << d.get_str() << ")";
  return os.str();
}

WeightSystem positive_weight_solve(const IntMatrix& a) {
  if (!a.square())
    throw Error(ErrorCode::ShapeError, "weight solve needs a square matrix");
  if (a.rows() == 0)
    return {{}, 1};
  RatVector ones(a.rows(), Rational(1));
  RatVector sol = solve(to_rational(a), ones);
  for (const auto& x : sol)
    if (sgn(x) <= 0)
      throw Error(ErrorCode::NoPositiveWeights,
                  "rational weight solution has a non-positive entry");
  Integer scale = lcm_of_denominators(sol);
  IntVector q;
  for (const auto& x : sol)
    q.push_back(Integer(x * scale));
  Integer g = gcd_of(q);
  for (auto& x : q)
    x /= g;
  return {q, scale / g};
}

Integer gcd_of(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values)
    g = gcd(g, v);
  return g;
}

Integer lcm_of_denominators(std::span<const Rational> values) {
  Integer l = 1;
  for (const auto& v : values)
    l = lcm(l, v.get_den());
  return l;
}

Rational frac(const Rational& x) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational r = x - Rational(fl);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Text format

IntMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Integer>> rows;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos)
      line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    std::vector<Integer> row;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      if (line[j] == '-' || line[j] == '+')
        ++j;
      std::size_t digits = j;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j])))
        ++j;
      if (j == digits)
        throw ParseError(line_start + i, "expected an integer");
      if (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
        throw ParseError(line_start + j, "unexpected character in matrix");
      std::string token(line.substr(i, j - i));
      if (token.front() == '+')
        token.erase(0, 1);
      row.emplace_back(token);
      i = j;
    }
    if (!row.empty())
      rows.push_back(std::move(row));
    if (line_end == text.size())
      break;
    line_start = line_end + 1;
  }
  for (const auto& r : rows)
    if (r.size() != rows.front().size())
      throw Error(ErrorCode::ShapeError, "matrix rows have different lengths");
  return IntMatrix::from_rows(rows);
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      os << (c ? " " : "") << m(r, c).get_str();
    os << "\n";
  }
  return os.str();
}

} // namespace bhk
