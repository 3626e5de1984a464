#include "strucvote/linalg.hpp"

#include <string>
#include <utility>

#include "strucvote/errors.hpp"

namespace strucvote
{

namespace
{

void require_same_size(RatVector const &a, RatVector const &b)
{
  if (a.size() != b.size()) {
    throw DimensionMismatch("vector dimensions differ: " + std::to_string(a.size()) +
                            " vs " + std::to_string(b.size()));
  }
}

// Gaussian elimination in place. With full_reduction the result is the
// reduced row echelon form, otherwise only the rows below each pivot are
// cleared (enough for rank).
std::vector<std::size_t> eliminate(RatMatrix &m, bool full_reduction)
{
  std::vector<std::size_t> pivots;
  std::size_t const rows = m.rows();
  std::size_t const cols = m.cols();

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t found = pivot_row;
    while (found < rows && m(found, col).is_zero())
      ++found;
    if (found == rows)
      continue;

    m.swap_rows(pivot_row, found);

    Rational const inverse = Rational(1) / m(pivot_row, col);
    for (std::size_t c = col; c < cols; ++c)
      m(pivot_row, c) *= inverse;

    std::size_t const first = full_reduction ? 0 : pivot_row + 1;
    for (std::size_t r = first; r < rows; ++r) {
      if (r == pivot_row || m(r, col).is_zero())
        continue;
      Rational const factor = m(r, col);
      for (std::size_t c = col; c < cols; ++c)
        m(r, c).sub_product(factor, m(pivot_row, c));
    }

    pivots.push_back(col);
    ++pivot_row;
  }

  return pivots;
}

} // anonymous namespace

bool RatVector::is_zero() const
{
  for (auto const &x : entries_) {
    if (!x.is_zero())
      return false;
  }
  return true;
}

Rational RatVector::sum() const
{
  Rational total;
  for (auto const &x : entries_)
    total += x;
  return total;
}

RatVector &RatVector::operator+=(RatVector const &rhs)
{
  require_same_size(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] += rhs.entries_[i];
  return *this;
}

RatVector &RatVector::operator-=(RatVector const &rhs)
{
  require_same_size(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] -= rhs.entries_[i];
  return *this;
}

RatVector &RatVector::operator*=(Rational const &scalar)
{
  for (auto &x : entries_)
    x *= scalar;
  return *this;
}

void RatVector::add_scaled(Rational const &scalar, RatVector const &v)
{
  require_same_size(*this, v);
  if (scalar.is_zero())
    return;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i].add_product(scalar, v.entries_[i]);
}

RatVector operator+(RatVector lhs, RatVector const &rhs)
{
  return lhs += rhs;
}

RatVector operator-(RatVector lhs, RatVector const &rhs)
{
  return lhs -= rhs;
}

RatVector operator*(Rational const &scalar, RatVector v)
{
  return v *= scalar;
}

Rational dot(RatVector const &a, RatVector const &b)
{
  require_same_size(a, b);
  Rational total;
  for (std::size_t i = 0; i < a.size(); ++i)
    total.add_product(a[i], b[i]);
  return total;
}

RatMatrix RatMatrix::identity(std::size_t n)
{
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(std::span<RatVector const> rows)
{
  if (rows.empty())
    return {};

  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_size(rows[r], rows.front());
    for (std::size_t c = 0; c < m.cols(); ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(std::span<RatVector const> columns)
{
  if (columns.empty())
    return {};

  RatMatrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require_same_size(columns[c], columns.front());
    for (std::size_t r = 0; r < m.rows(); ++r)
      m(r, c) = columns[c][r];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t r) const
{
  RatVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    v[c] = (*this)(r, c);
  return v;
}

RatVector RatMatrix::column(std::size_t c) const
{
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transposed() const
{
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  }
  return t;
}

void RatMatrix::swap_rows(std::size_t a, std::size_t b)
{
  if (a == b)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap(entries_[a * cols_ + c], entries_[b * cols_ + c]);
}

RatVector operator*(RatMatrix const &m, RatVector const &v)
{
  if (m.cols() != v.size()) {
    throw DimensionMismatch("matrix has " + std::to_string(m.cols()) +
                            " columns but vector has dimension " + std::to_string(v.size()));
  }

  RatVector result(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      result[r].add_product(m(r, c), v[c]);
  }
  return result;
}

RatMatrix operator*(RatMatrix const &a, RatMatrix const &b)
{
  if (a.cols() != b.rows())
    throw DimensionMismatch("matrix product with incompatible shapes");

  RatMatrix result(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        result(i, j).add_product(a(i, k), b(k, j));
    }
  }
  return result;
}

RowEchelon row_reduce(RatMatrix m)
{
  auto pivots = eliminate(m, true);
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(RatMatrix const &m)
{
  RatMatrix work = m;
  return eliminate(work, false).size();
}

std::vector<RatVector> nullspace(RatMatrix const &m)
{
  RowEchelon const echelon = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : echelon.pivots)
    is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;

    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < echelon.pivots.size(); ++i)
      v[echelon.pivots[i]] = -echelon.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatVector> row_space_basis(RatMatrix const &m)
{
  RowEchelon const echelon = row_reduce(m);
  std::vector<RatVector> basis;
  for (std::size_t i = 0; i < echelon.rank(); ++i)
    basis.push_back(echelon.reduced.row(i));
  return basis;
}

std::vector<RatVector> column_space_basis(RatMatrix const &m)
{
  RatMatrix work = m;
  auto const pivots = eliminate(work, false);

  std::vector<RatVector> basis;
  for (auto p : pivots)
    basis.push_back(m.column(p));
  return basis;
}

std::optional<RatVector> try_solve(RatMatrix const &m, RatVector const &b)
{
  if (b.size() != m.rows()) {
    throw DimensionMismatch("right-hand side has dimension " + std::to_string(b.size()) +
                            " but matrix has " + std::to_string(m.rows()) + " rows");
  }

  RatMatrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      augmented(r, c) = m(r, c);
    augmented(r, m.cols()) = b[r];
  }

  RowEchelon const echelon = row_reduce(std::move(augmented));
  if (!echelon.pivots.empty() && echelon.pivots.back() == m.cols())
    return std::nullopt;

  RatVector x(m.cols());
  for (std::size_t i = 0; i < echelon.pivots.size(); ++i)
    x[echelon.pivots[i]] = echelon.reduced(i, m.cols());
  return x;
}

RatVector solve(RatMatrix const &m, RatVector const &b)
{
  auto x = try_solve(m, b);
  if (!x)
    throw InconsistentSystem("linear system has no solution");
  return std::move(*x);
}

RatVector project_onto_span(std::span<RatVector const> basis, RatVector const &v)
{
  for (auto const &b : basis)
    require_same_size(b, v);

  if (basis.empty())
    return RatVector(v.size());

  // An independent spanning set for the same subspace makes the normal
  // equations nonsingular.
  auto const rows = row_space_basis(RatMatrix::from_rows(basis));
  if (rows.empty())
    return RatVector(v.size());

  std::size_t const r = rows.size();
  RatMatrix gram(r, r);
  RatVector rhs(r);
  for (std::size_t i = 0; i < r; ++i) {
    rhs[i] = dot(rows[i], v);
    for (std::size_t j = i; j < r; ++j) {
      gram(i, j) = dot(rows[i], rows[j]);
      gram(j, i) = gram(i, j);
    }
  }

  RatVector const coefficients = solve(gram, rhs);

  RatVector projection(v.size());
  for (std::size_t i = 0; i < r; ++i)
    projection.add_scaled(coefficients[i], rows[i]);
  return projection;
}

std::size_t span_dimension(std::span<RatVector const> vectors)
{
  if (vectors.empty())
    return 0;
  return rank(RatMatrix::from_rows(vectors));
}

bool in_span(std::span<RatVector const> basis, RatVector const &v)
{
  std::vector<RatVector> extended(basis.begin(), basis.end());
  std::size_t const before = span_dimension(extended);
  extended.push_back(v);
  return span_dimension(extended) == before;
}

} // namespace strucvote
