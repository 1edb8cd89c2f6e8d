#include "ck/polynomial.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace ck {

namespace {

std::uint64_t total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

}  // namespace

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Polynomial Polynomial::constant(std::size_t n_vars, mpz_class value) {
  Polynomial p(n_vars);
  p.add_term(Monomial(n_vars, 0), value);
  return p;
}

Polynomial Polynomial::variable(std::size_t n_vars, std::size_t index) {
  if (index >= n_vars) {
    throw std::out_of_range("polynomial: variable index out of range");
  }
  Polynomial p(n_vars);
  Monomial m(n_vars, 0);
  m[index] = 1;
  p.add_term(m, 1);
  return p;
}

void Polynomial::add_term(const Monomial& monomial,
                          const mpz_class& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::add(const Polynomial& other) const {
  Polynomial result = *this;
  for (const auto& [m, c] : other.terms_) result.add_term(m, c);
  return result;
}

Polynomial Polynomial::sub(const Polynomial& other) const {
  Polynomial result = *this;
  for (const auto& [m, c] : other.terms_) result.add_term(m, -c);
  return result;
}

Polynomial Polynomial::neg() const {
  Polynomial result(n_vars_);
  for (const auto& [m, c] : terms_) result.terms_.emplace(m, -c);
  return result;
}

Polynomial Polynomial::mul(const Polynomial& other) const {
  Polynomial result(n_vars_);
  Monomial product(n_vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      for (std::size_t i = 0; i < n_vars_; ++i) product[i] = ma[i] + mb[i];
      result.add_term(product, ca * cb);
    }
  }
  return result;
}

std::optional<Polynomial> Polynomial::exact_divide(
    const Polynomial& divisor) const {
  if (divisor.is_zero()) {
    throw std::invalid_argument("polynomial: division by zero");
  }
  // Strip leading terms: if r = q * d then LT(r) = LT(q) * LT(d), so each
  // round either peels off one term of the quotient or proves that no
  // exact quotient exists.
  const auto& [lead_mono, lead_coef] = *divisor.terms_.rbegin();
  Polynomial remainder = *this;
  Polynomial quotient(n_vars_);
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = *remainder.terms_.rbegin();
    Monomial qm(n_vars_);
    for (std::size_t i = 0; i < n_vars_; ++i) {
      if (rm[i] < lead_mono[i]) return std::nullopt;
      qm[i] = rm[i] - lead_mono[i];
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_coef.get_mpz_t())) {
      return std::nullopt;
    }
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), lead_coef.get_mpz_t());
    Polynomial step(n_vars_);
    step.add_term(qm, qc);
    quotient = quotient.add(step);
    remainder = remainder.sub(step.mul(divisor));
  }
  return quotient;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return n_vars_ == other.n_vars_ && terms_ == other.terms_;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (names.size() != n_vars_) {
    throw std::invalid_argument("polynomial: wrong number of variable names");
  }
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const mpz_class& c = it->second;
    const bool negative = c < 0;
    const mpz_class magnitude = abs(c);
    std::string body;
    for (std::size_t i = 0; i < n_vars_; ++i) {
      const auto e = it->first[i];
      if (e == 0) continue;
      if (!body.empty()) body += '*';
      body += names[i];
      if (e > 1) {
        body += '^';
        body += std::to_string(e);
      }
    }
    std::string term;
    if (body.empty()) {
      term = magnitude.get_str();
    } else if (magnitude == 1) {
      term = body;
    } else {
      term = magnitude.get_str() + "*" + body;
    }
    if (first) {
      out += negative ? "-" + term : term;
      first = false;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
  }
  return out;
}

}  // namespace ck
