#include "ck/identities.hpp"

#include <stdexcept>

namespace ck {

CondensationReport make_report(std::string theorem, int n,
                               std::optional<EndoMap> map, RingValue lhs,
                               RingValue rhs) {
  const bool verdict = lhs == rhs;
  return CondensationReport{std::move(theorem),
                            n,
                            lhs.ring()->description(),
                            std::move(map),
                            std::move(lhs),
                            std::move(rhs),
                            verdict};
}

std::string report_line(const CondensationReport& report) {
  std::string line = report.theorem + " n=" + std::to_string(report.n) +
                     " f=" + (report.map ? report.map->str() : "-") +
                     (report.verdict ? " ok" : " FAIL");
  if (!report.verdict) {
    line += " lhs=" + report.lhs.str() + " rhs=" + report.rhs.str();
  }
  return line;
}

namespace {

void require_square_of(const EndoMap& f, const Matrix& a, const char* who) {
  if (!a.is_square() || a.rows() != f.n()) {
    throw std::invalid_argument(std::string(who) +
                                ": matrix size does not match the map");
  }
}

}  // namespace

RingValue weight_of(const EndoMap& f, const Matrix& b) {
  require_square_of(f, b, "weight_of");
  const int n = f.n();
  RingValue product = b.ring()->one();
  for (int i = 1; i < n; ++i) product = product * b.at(i, f(i));
  return product;
}

RingValue abut_of(const EndoMap& f, const Matrix& a) {
  require_square_of(f, a, "abut_of");
  const int n = f.n();
  if (n < 2) throw std::invalid_argument("abut_of: requires n >= 2");
  if (!f.fixes_n() || !is_n_potent(f)) {
    throw std::invalid_argument("abut_of: map is not n-potent");
  }
  const int preimages = preimage_count_of_n(f);
  if (preimages < 2) {
    throw std::logic_error("abut_of: n-potent map with |f^-1(n)| < 2");
  }
  RingValue result =
      a.at(n, n).pow(static_cast<std::uint64_t>(preimages - 2));
  for (int i = 1; i < n; ++i) {
    if (f(i) != n) result = result * a.at(f(i), n);
  }
  return result;
}

Matrix map_condensation(const EndoMap& f, const Matrix& a) {
  require_square_of(f, a, "map_condensation");
  if (!f.fixes_n()) {
    throw std::invalid_argument("map_condensation: map does not fix n");
  }
  const int n = f.n();
  return Matrix::build(a.ring(), n - 1, n - 1, [&](int i, int j) {
    return a.at(i, j) * a.at(f(i), n) - a.at(i, n) * a.at(f(i), j);
  });
}

Matrix product_condensation(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw std::invalid_argument("product_condensation: need same-size square");
  }
  const int n = a.rows();
  if (n < 2) throw std::invalid_argument("product_condensation: need n >= 2");
  const Matrix c = multiply(b, a);
  return Matrix::build(a.ring(), n - 1, n - 1, [&](int i, int j) {
    return a.at(i, j) * c.at(i, n) - a.at(i, n) * c.at(i, j);
  });
}

Matrix potency_matrix(const EndoMap& f, const RingPtr& ring) {
  const int n = f.n();
  const RingValue one = ring->one();
  const RingValue zero = ring->zero();
  return Matrix::build(ring, n, n, [&](int i, int j) {
    RingValue v = i == j ? one : zero;
    if (i != n && f(i) == j) v = v - one;
    return v;
  });
}

Matrix potency_kernel_vector(const EndoMap& f, const RingPtr& ring) {
  const int n = f.n();
  if (!f.fixes_n()) {
    throw std::invalid_argument("potency_kernel_vector: map does not fix n");
  }
  return Matrix::build(ring, n, 1, [&](int i, int) {
    return iterate(f, i, n - 1) == n ? ring->zero() : ring->one();
  });
}

Matrix unit_column_matrix(int n, const RingPtr& ring) {
  if (n < 1) throw std::invalid_argument("unit_column_matrix: need n >= 1");
  return Matrix::build(ring, n, n, [&](int i, int j) {
    return (i == j || j == n) ? ring->one() : ring->zero();
  });
}

CondensationReport verify_chio(const Matrix& a) {
  auto [condensed, factor] = chio_condense(a);
  RingValue lhs = leibniz_det(condensed);
  RingValue rhs = factor * leibniz_det(a);
  return make_report("chio", a.rows(), std::nullopt, std::move(lhs),
                     std::move(rhs));
}

CondensationReport verify_chio_gen(const EndoMap& f, const Matrix& a) {
  require_square_of(f, a, "verify_chio_gen");
  if (!f.fixes_n()) {
    throw std::invalid_argument("verify_chio_gen: map does not fix n");
  }
  const int n = f.n();
  RingValue lhs = leibniz_det(map_condensation(f, a));
  RingValue rhs = a.ring()->zero();
  if (is_n_potent(f)) {
    if (n < 2) {
      throw std::invalid_argument(
          "verify_chio_gen: the n-potent branch requires n >= 2");
    }
    rhs = abut_of(f, a) * leibniz_det(a);
  }
  return make_report("chio-gen", n, f, std::move(lhs), std::move(rhs));
}

CondensationReport verify_supergen(const Matrix& a, const Matrix& b) {
  const int n = a.rows();
  RingValue lhs = leibniz_det(product_condensation(a, b));
  RingValue sum = a.ring()->zero();
  for (const EndoMap& f : enumerate_n_potent(n)) {
    sum = sum + weight_of(f, b) * abut_of(f, a);
  }
  RingValue rhs = sum * leibniz_det(a);
  return make_report("supergen", n, std::nullopt, std::move(lhs),
                     std::move(rhs));
}

Matrix generic_matrix(int n, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      names.push_back(prefix + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  const auto ring = polynomials(std::move(names));
  return Matrix::build(ring, n, n, [&](int i, int j) {
    return ring->indeterminate(static_cast<std::size_t>(i - 1) * n + (j - 1));
  });
}

std::pair<Matrix, Matrix> generic_matrix_pair(int n) {
  std::vector<std::string> names;
  names.reserve(2 * static_cast<std::size_t>(n) * n);
  for (const char* prefix : {"x", "y"}) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        names.push_back(prefix + std::to_string(i) + "_" + std::to_string(j));
      }
    }
  }
  const auto ring = polynomials(std::move(names));
  const auto entry_at = [&](std::size_t base, int i, int j) {
    return ring->indeterminate(base + static_cast<std::size_t>(i - 1) * n +
                               (j - 1));
  };
  Matrix a = Matrix::build(
      ring, n, n, [&](int i, int j) { return entry_at(0, i, j); });
  const std::size_t y_base = static_cast<std::size_t>(n) * n;
  Matrix b = Matrix::build(
      ring, n, n, [&](int i, int j) { return entry_at(y_base, i, j); });
  return {std::move(a), std::move(b)};
}

}  // namespace ck
