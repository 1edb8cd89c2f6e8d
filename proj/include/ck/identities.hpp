#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ck/funcmap.hpp"
#include "ck/matrix.hpp"

namespace ck {

// One verified identity instance: both sides computed independently and
// compared exactly. verdict is true iff lhs == rhs.
struct CondensationReport {
  std::string theorem;
  int n;
  std::string ring_desc;
  std::optional<EndoMap> map;
  RingValue lhs;
  RingValue rhs;
  bool verdict;
};

CondensationReport make_report(std::string theorem, int n,
                               std::optional<EndoMap> map, RingValue lhs,
                               RingValue rhs);

// "<theorem> n=<n> f=<images or -> ok|FAIL", plus both sides on failure.
std::string report_line(const CondensationReport& report);

// Product of the entries b(i, f(i)) for i = 1..n-1.
RingValue weight_of(const EndoMap& f, const Matrix& b);

// a(n,n)^(|f^-1(n)|-2) times the product of a(f(i), n) over the i < n with
// f(i) != n. Defined for n-potent f and n >= 2 (then |f^-1(n)| >= 2).
RingValue abut_of(const EndoMap& f, const Matrix& a);

// The (n-1)x(n-1) matrix with entries a(i,j)a(f(i),n) - a(i,n)a(f(i),j)
// for an n-fixing map f. With f constant at n this is the Chio
// condensation matrix.
Matrix map_condensation(const EndoMap& f, const Matrix& a);

// With c = b*a: the (n-1)x(n-1) matrix a(i,j)c(i,n) - a(i,n)c(i,j).
Matrix product_condensation(const Matrix& a, const Matrix& b);

// The 0/±1 matrix with entries d(i,j) - (1 - d(i,n)) d(f(i),j) (d the
// Kronecker delta). Its determinant is 1 when f is n-potent and 0 when it
// is not, which is what drives the condensation identities.
Matrix potency_matrix(const EndoMap& f, const RingPtr& ring = integers());

// Column vector with entry i equal to 0 if f^(n-1)(i) = n and 1 otherwise;
// annihilated by the potency matrix. Requires f(n) = n.
Matrix potency_kernel_vector(const EndoMap& f,
                             const RingPtr& ring = integers());

// The 0/1 matrix with ones on the diagonal and in the last column. Its
// determinant is 1, and every abutment over it is 1; substituting it turns
// the general condensation identity into the matrix-tree theorem.
Matrix unit_column_matrix(int n, const RingPtr& ring = integers());

// det(chio_condense(a)) vs a(n,n)^(n-2) * det(a), both via the Leibniz
// oracle (never via chio_det, which must stay independently checkable).
CondensationReport verify_chio(const Matrix& a);

// det(map_condensation(f, a)) vs 0 (f not n-potent) or abut * det(a)
// (f n-potent, n >= 2; n = 1 is rejected since abut is undefined there).
CondensationReport verify_chio_gen(const EndoMap& f, const Matrix& a);

// det(product_condensation(a, b)) vs the weighted sum of weight*abut over
// all n-potent maps, times det(a).
CondensationReport verify_supergen(const Matrix& a, const Matrix& b);

// n x n matrix of indeterminates <prefix><i>_<j> over a fresh polynomial
// ring; the symbolic certificates run on these.
Matrix generic_matrix(int n, const std::string& prefix = "x");

// Two generic matrices (x- and y-indeterminates) over one shared ring.
std::pair<Matrix, Matrix> generic_matrix_pair(int n);

}  // namespace ck
