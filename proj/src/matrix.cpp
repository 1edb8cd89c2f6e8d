#include "ck/matrix.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "ck/bounds.hpp"

namespace ck {

// -------------------------------------------------------------- Permutation

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("permutation: negative size");
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  return Permutation(std::move(images), +1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(n, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v - 1]) {
      throw std::invalid_argument("permutation: images are not a bijection");
    }
    seen[v - 1] = true;
  }
  int inversions = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (images[i] > images[j]) ++inversions;
    }
  }
  return Permutation(std::move(images), inversions % 2 == 0 ? +1 : -1);
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > n()) throw std::out_of_range("permutation: index");
  return images_[i - 1];
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

bool Permutation::next_lex() {
  const int size = n();
  int i = size - 1;
  while (i > 0 && images_[i - 1] > images_[i]) --i;
  if (i <= 0) return false;
  int j = size - 1;
  while (images_[j] < images_[i - 1]) --j;
  std::swap(images_[i - 1], images_[j]);
  sign_ = -sign_;
  // Reversing a suffix of length L applies floor(L/2) transpositions.
  std::reverse(images_.begin() + i, images_.end());
  if (((size - i) / 2) % 2 == 1) sign_ = -sign_;
  return true;
}

// ------------------------------------------------------------------- Matrix

Matrix::Matrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("matrix: negative dimension");
  }
  entries_.assign(static_cast<std::size_t>(rows) * cols, ring_->zero());
}

Matrix Matrix::build(const RingPtr& ring, int rows, int cols,
                     const std::function<RingValue(int, int)>& entry) {
  Matrix m(ring, rows, cols);
  std::size_t k = 0;
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      RingValue v = entry(i, j);
      if (!ring->same_ring(*v.ring())) {
        throw std::invalid_argument("matrix: entry from a different ring");
      }
      m.entries_[k++] = std::move(v);
    }
  }
  return m;
}

Matrix Matrix::identity(const RingPtr& ring, int n) {
  return build(ring, n, n, [&](int i, int j) {
    return i == j ? ring->one() : ring->zero();
  });
}

Matrix Matrix::from_ints(const RingPtr& ring,
                         const std::vector<std::vector<long long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) {
      throw std::invalid_argument("matrix: ragged rows");
    }
  }
  return build(ring, r, c, [&](int i, int j) {
    return ring->from_int(rows[i - 1][j - 1]);
  });
}

const RingValue& Matrix::at(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw std::out_of_range("matrix: index out of range");
  }
  return entries_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)];
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (!a.ring_->same_ring(*b.ring_)) return false;
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    if (a.entries_[k] != b.entries_[k]) return false;
  }
  return true;
}

std::string Matrix::str() const {
  std::string out;
  for (int i = 1; i <= rows_; ++i) {
    for (int j = 1; j <= cols_; ++j) {
      if (j > 1) out += ' ';
      out += at(i, j).str();
    }
    out += '\n';
  }
  return out;
}

// --------------------------------------------------------------- operations

Matrix multiply(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw std::invalid_argument("multiply: inner dimensions differ");
  }
  if (!lhs.ring()->same_ring(*rhs.ring())) {
    throw std::invalid_argument("multiply: ring mismatch");
  }
  return Matrix::build(lhs.ring(), lhs.rows(), rhs.cols(), [&](int i, int j) {
    RingValue sum = lhs.ring()->zero();
    for (int k = 1; k <= lhs.cols(); ++k) {
      sum = sum + lhs.at(i, k) * rhs.at(k, j);
    }
    return sum;
  });
}

RingValue leibniz_det(const Matrix& a) {
  if (!a.is_square()) {
    throw std::invalid_argument("leibniz_det: matrix is not square");
  }
  const int n = a.rows();
  if (n > bounds::max_n()) {
    throw std::invalid_argument("leibniz_det: n exceeds the oracle bound");
  }
  RingValue sum = a.ring()->zero();
  Permutation sigma = Permutation::identity(n);
  do {
    RingValue product = a.ring()->one();
    for (int i = 1; i <= n; ++i) product = product * a.at(i, sigma(i));
    sum = sigma.sign() > 0 ? sum + product : sum - product;
  } while (sigma.next_lex());
  return sum;
}

Matrix scale_rows(const Matrix& a, const std::vector<RingValue>& factors) {
  if (static_cast<int>(factors.size()) != a.rows()) {
    throw std::invalid_argument("scale_rows: one factor per row required");
  }
  return Matrix::build(a.ring(), a.rows(), a.cols(), [&](int i, int j) {
    return factors[i - 1] * a.at(i, j);
  });
}

RingValue last_column_reduction(const Matrix& a) {
  if (!a.is_square() || a.rows() < 1) {
    throw std::invalid_argument("last_column_reduction: need square, n >= 1");
  }
  const int n = a.rows();
  for (int i = 1; i < n; ++i) {
    if (!a.at(i, n).is_zero()) {
      throw std::invalid_argument(
          "last_column_reduction: last column not zero above the corner");
    }
  }
  const Matrix minor = Matrix::build(
      a.ring(), n - 1, n - 1, [&](int i, int j) { return a.at(i, j); });
  return a.at(n, n) * leibniz_det(minor);
}

bool kernel_scaling_check(const Matrix& a, const Matrix& v) {
  if (!a.is_square() || v.rows() != a.rows() || v.cols() != 1) {
    throw std::invalid_argument("kernel_scaling_check: shape mismatch");
  }
  const Matrix av = multiply(a, v);
  for (int i = 1; i <= av.rows(); ++i) {
    if (!av.at(i, 1).is_zero()) {
      throw std::invalid_argument("kernel_scaling_check: a*v is not zero");
    }
  }
  const RingValue det = leibniz_det(a);
  for (int i = 1; i <= v.rows(); ++i) {
    if (!(det * v.at(i, 1)).is_zero()) return false;
  }
  return true;
}

std::pair<Matrix, RingValue> chio_condense(const Matrix& a) {
  if (!a.is_square() || a.rows() < 2) {
    throw std::invalid_argument("chio_condense: need square, n >= 2");
  }
  const int n = a.rows();
  Matrix condensed =
      Matrix::build(a.ring(), n - 1, n - 1, [&](int i, int j) {
        return a.at(i, j) * a.at(n, n) - a.at(i, n) * a.at(n, j);
      });
  RingValue factor = a.at(n, n).pow(static_cast<std::uint64_t>(n - 2));
  return {std::move(condensed), std::move(factor)};
}

namespace {

// Swap row pi with row n and column pj with column n, returning the new
// matrix and the determinant's sign change.
std::pair<Matrix, int> move_pivot_to_corner(const Matrix& a, int pi, int pj) {
  const int n = a.rows();
  int sign = +1;
  if (pi != n) sign = -sign;
  if (pj != n) sign = -sign;
  auto remap = [n](int k, int p) { return k == n ? p : (k == p ? n : k); };
  Matrix moved = Matrix::build(a.ring(), n, n, [&](int i, int j) {
    return a.at(remap(i, pi), remap(j, pj));
  });
  return {std::move(moved), sign};
}

RingValue chio_det_rec(const Matrix& a) {
  const int n = a.rows();
  if (n == 0) return a.ring()->one();
  if (n == 1) return a.at(1, 1);
  // Scan columns from the last, rows from the last, so a nonzero (n,n)
  // pivot needs no swap.
  int pi = 0;
  int pj = 0;
  for (int j = n; j >= 1 && pi == 0; --j) {
    for (int i = n; i >= 1; --i) {
      if (!a.at(i, j).is_zero()) {
        pi = i;
        pj = j;
        break;
      }
    }
  }
  if (pi == 0) return a.ring()->zero();
  auto [moved, sign] = move_pivot_to_corner(a, pi, pj);
  auto [condensed, factor] = chio_condense(moved);
  const RingValue sub_det = chio_det_rec(condensed);
  // det(condensed) = pivot^(n-2) * det(moved); the quotient is exact in an
  // integral domain.
  auto quotient = exact_divide(sub_det, factor);
  if (!quotient) {
    throw std::logic_error("chio_det: condensation identity violated");
  }
  return sign > 0 ? *quotient : -*quotient;
}

}  // namespace

RingValue chio_det(const Matrix& a) {
  if (!a.is_square()) {
    throw std::invalid_argument("chio_det: matrix is not square");
  }
  if (!a.ring()->is_integral_domain()) {
    throw std::domain_error("chio_det: " + a.ring()->description() +
                            " is not an integral domain");
  }
  return chio_det_rec(a);
}

// ------------------------------------------------------------------ file IO

namespace {

// Next line that is neither blank nor a '#' comment.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

mpz_class parse_integer(const std::string& tok) {
  mpz_class v;
  if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0) {
    throw std::invalid_argument("matrix file: bad integer '" + tok + "'");
  }
  return v;
}

int parse_dimension(const std::string& tok) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("matrix file: bad dimension '" + tok + "'");
  }
  if (used != tok.size() || v < 0) {
    throw std::invalid_argument("matrix file: bad dimension '" + tok + "'");
  }
  return v;
}

}  // namespace

Matrix read_matrix(std::istream& in, const RingPtr& ring) {
  std::string line;
  if (!next_content_line(in, line)) {
    throw std::invalid_argument("matrix file: missing header line");
  }
  const auto header = tokens_of(line);
  if (header.size() != 2) {
    throw std::invalid_argument("matrix file: header must be 'rows cols'");
  }
  const int rows = parse_dimension(header[0]);
  const int cols = parse_dimension(header[1]);
  std::vector<RingValue> entries;
  entries.reserve(static_cast<std::size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i) {
    if (!next_content_line(in, line)) {
      throw std::invalid_argument("matrix file: missing row " +
                                  std::to_string(i + 1));
    }
    const auto toks = tokens_of(line);
    if (static_cast<int>(toks.size()) != cols) {
      throw std::invalid_argument("matrix file: row " + std::to_string(i + 1) +
                                  " has " + std::to_string(toks.size()) +
                                  " entries, expected " +
                                  std::to_string(cols));
    }
    for (const auto& tok : toks) {
      entries.push_back(ring->from_integer(parse_integer(tok)));
    }
  }
  std::size_t k = 0;
  return Matrix::build(ring, rows, cols,
                       [&](int, int) { return entries[k++]; });
}

Matrix read_matrix_file(const std::string& path, const RingPtr& ring) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open matrix file: " + path);
  }
  return read_matrix(in, ring);
}

}  // namespace ck
