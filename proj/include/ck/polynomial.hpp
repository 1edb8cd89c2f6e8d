#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ck {

// Exponent vector; one entry per indeterminate of the owning ring.
using Monomial = std::vector<std::uint32_t>;

// Graded lexicographic order: total degree first, then lexicographic on
// the declared indeterminate order.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial with integer coefficients. Canonical form
// stores no zero coefficients, so structural equality is ring equality.
class Polynomial {
 public:
  explicit Polynomial(std::size_t n_vars) : n_vars_(n_vars) {}

  static Polynomial constant(std::size_t n_vars, mpz_class value);
  static Polynomial variable(std::size_t n_vars, std::size_t index);

  std::size_t n_vars() const { return n_vars_; }
  bool is_zero() const { return terms_.empty(); }

  Polynomial add(const Polynomial& other) const;
  Polynomial sub(const Polynomial& other) const;
  Polynomial mul(const Polynomial& other) const;
  Polynomial neg() const;

  // Quotient q with q * divisor == *this when one exists in Z[x...].
  std::optional<Polynomial> exact_divide(const Polynomial& divisor) const;

  bool operator==(const Polynomial& other) const;

  // Terms in descending grlex order, e.g. "3*x1_2*x2_1^2 - x3_3".
  std::string str(const std::vector<std::string>& names) const;

  const std::map<Monomial, mpz_class, GrlexLess>& terms() const {
    return terms_;
  }

 private:
  void add_term(const Monomial& monomial, const mpz_class& coefficient);

  std::size_t n_vars_;
  std::map<Monomial, mpz_class, GrlexLess> terms_;
};

}  // namespace ck
