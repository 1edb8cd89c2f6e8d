#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ck/ring.hpp"

namespace ck {

// Permutation of {1,...,n} with its sign (-1)^inversions kept in sync.
class Permutation {
 public:
  static Permutation identity(int n);
  static Permutation from_images(std::vector<int> images);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const;  // 1-based
  int sign() const { return sign_; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  // Advance to the lexicographic successor, updating the sign from the
  // transpositions performed; false once the last permutation is reached.
  bool next_lex();

 private:
  Permutation(std::vector<int> images, int sign)
      : images_(std::move(images)), sign_(sign) {}

  std::vector<int> images_;
  int sign_;
};

// Dense matrix over one ring. The API is 1-based, matching the usual
// {1,...,n} index conventions; matrices are immutable after construction.
class Matrix {
 public:
  Matrix(RingPtr ring, int rows, int cols);  // zero-filled

  static Matrix build(const RingPtr& ring, int rows, int cols,
                      const std::function<RingValue(int, int)>& entry);
  static Matrix identity(const RingPtr& ring, int n);
  static Matrix from_ints(const RingPtr& ring,
                          const std::vector<std::vector<long long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const RingPtr& ring() const { return ring_; }
  const RingValue& at(int i, int j) const;  // 1-based

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) {
    return !(a == b);
  }

  // Rows of space-separated entries (the file format's body for integers).
  std::string str() const;

 private:
  RingPtr ring_;
  int rows_;
  int cols_;
  std::vector<RingValue> entries_;
};

Matrix multiply(const Matrix& lhs, const Matrix& rhs);

// Signed sum over all n! permutations; exact in any ring. The 0x0 matrix
// has determinant one (the empty permutation). n is capped by
// bounds::max_n() to keep the oracle's factorial cost in check.
RingValue leibniz_det(const Matrix& a);

// Entrywise row scaling (b_i * a_ij); det scales by the product of the b_i.
Matrix scale_rows(const Matrix& a, const std::vector<RingValue>& factors);

// For a square matrix whose last column is zero above the diagonal entry:
// det = a_nn * det(leading (n-1)x(n-1) minor).
RingValue last_column_reduction(const Matrix& a);

// Requires a*v = 0 (throws otherwise); reports whether det(a)*v = 0.
// Always true; exists as an executable property, not a computation.
bool kernel_scaling_check(const Matrix& a, const Matrix& v);

// One pivotal condensation step: the (n-1)x(n-1) matrix of 2x2 minors
// against the (n,n) pivot, plus the scale factor a_nn^(n-2) satisfying
// det(condensed) = factor * det(a).
std::pair<Matrix, RingValue> chio_condense(const Matrix& a);

// Determinant by repeated condensation over an integral domain. Each step
// divides out the pivot power exactly; zero pivots are repaired by a
// row+column swap with sign tracking, and an all-zero matrix yields 0.
RingValue chio_det(const Matrix& a);

// Matrix file format: optional '#' comment lines, a "rows cols" header
// line, then one whitespace-separated line of integers per row.
Matrix read_matrix(std::istream& in, const RingPtr& ring);
Matrix read_matrix_file(const std::string& path, const RingPtr& ring);

}  // namespace ck
