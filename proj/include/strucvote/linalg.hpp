#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "strucvote/rational.hpp"

/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra over the rationals.
 *
 * Elimination always pivots on the first nonzero entry in column order, so
 * every basis returned here is a deterministic function of the input.
 */

namespace strucvote
{

class RatVector
{
public:
  RatVector() = default;
  explicit RatVector(std::size_t dim) : entries_(dim) {}
  RatVector(std::initializer_list<Rational> entries) : entries_(entries) {}
  explicit RatVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }

  Rational &operator[](std::size_t i) { return entries_[i]; }
  Rational const &operator[](std::size_t i) const { return entries_[i]; }

  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  std::vector<Rational> const &entries() const { return entries_; }

  bool is_zero() const;
  Rational sum() const;

  RatVector &operator+=(RatVector const &rhs);
  RatVector &operator-=(RatVector const &rhs);
  RatVector &operator*=(Rational const &scalar);

  /// this += scalar * v
  void add_scaled(Rational const &scalar, RatVector const &v);

  friend bool operator==(RatVector const &, RatVector const &) = default;

private:
  std::vector<Rational> entries_;
};

RatVector operator+(RatVector lhs, RatVector const &rhs);
RatVector operator-(RatVector lhs, RatVector const &rhs);
RatVector operator*(Rational const &scalar, RatVector v);

Rational dot(RatVector const &a, RatVector const &b);

/// Row-major dense matrix.
class RatMatrix
{
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(std::span<RatVector const> rows);
  static RatMatrix from_columns(std::span<RatVector const> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  Rational const &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector column(std::size_t c) const;
  RatMatrix transposed() const;

  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(RatMatrix const &, RatMatrix const &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RatVector operator*(RatMatrix const &m, RatVector const &v);
RatMatrix operator*(RatMatrix const &a, RatMatrix const &b);

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon
{
  RatMatrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

RowEchelon row_reduce(RatMatrix m);

std::size_t rank(RatMatrix const &m);

/// Basis of the right nullspace, one vector per free column.
std::vector<RatVector> nullspace(RatMatrix const &m);

/// Nonzero rows of the reduced row echelon form.
std::vector<RatVector> row_space_basis(RatMatrix const &m);

/// The pivot columns of m itself (a subset of the original columns).
std::vector<RatVector> column_space_basis(RatMatrix const &m);

/// Particular solution with all free variables zero, or nullopt when b is
/// outside the column space.
std::optional<RatVector> try_solve(RatMatrix const &m, RatVector const &b);

/// As try_solve, but throws InconsistentSystem instead of returning nullopt.
RatVector solve(RatMatrix const &m, RatVector const &b);

/// Orthogonal projection of v onto span(basis). The spanning set may be
/// redundant or empty.
RatVector project_onto_span(std::span<RatVector const> basis, RatVector const &v);

std::size_t span_dimension(std::span<RatVector const> vectors);

bool in_span(std::span<RatVector const> basis, RatVector const &v);

} // namespace strucvote
