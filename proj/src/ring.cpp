#include "ck/ring.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>

namespace ck {

namespace {

const mpz_class& as_int(const RingPayload& p) {
  return std::get<mpz_class>(p);
}

const Polynomial& as_poly(const RingPayload& p) {
  return std::get<Polynomial>(p);
}

bool is_prime_by_trial_division(unsigned long m) {
  if (m < 2) return false;
  for (unsigned long d = 2; d * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------- RingValue

RingValue::RingValue(RingPtr ring, RingPayload payload)
    : ring_(std::move(ring)), payload_(std::move(payload)) {}

bool RingValue::is_zero() const { return *this == ring_->zero(); }

bool RingValue::is_one() const { return *this == ring_->one(); }

RingValue RingValue::pow(std::uint64_t exponent) const {
  RingValue result = ring_->one();
  RingValue base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string RingValue::str() const { return ring_->str_impl(payload_); }

RingValue operator+(const RingValue& a, const RingValue& b) {
  return a.ring()->add(a, b);
}

RingValue operator-(const RingValue& a, const RingValue& b) {
  return a.ring()->sub(a, b);
}

RingValue operator*(const RingValue& a, const RingValue& b) {
  return a.ring()->mul(a, b);
}

RingValue RingValue::operator-() const { return ring_->neg(*this); }

bool operator==(const RingValue& a, const RingValue& b) {
  return a.ring()->equal(a, b);
}

std::ostream& operator<<(std::ostream& os, const RingValue& v) {
  return os << v.str();
}

// --------------------------------------------------------------------- Ring

RingValue Ring::make(Payload payload) const {
  return RingValue(shared_from_this(), std::move(payload));
}

void Ring::require_mine(const RingValue& v) const {
  if (!same_ring(*v.ring())) {
    throw std::invalid_argument("ring mismatch: value from " +
                                v.ring()->description() + " used in " +
                                description());
  }
}

void Ring::require_same(const RingValue& a, const RingValue& b) const {
  require_mine(a);
  require_mine(b);
}

RingValue Ring::zero() const { return from_int(0); }

RingValue Ring::one() const { return from_int(1); }

RingValue Ring::from_int(long long v) const {
  return from_integer(mpz_class(static_cast<long>(v)));
}

RingValue Ring::from_integer(const mpz_class& v) const {
  return make(from_integer_impl(v));
}

RingValue Ring::add(const RingValue& a, const RingValue& b) const {
  require_same(a, b);
  return make(add_impl(a.payload_, b.payload_));
}

RingValue Ring::sub(const RingValue& a, const RingValue& b) const {
  require_same(a, b);
  return make(sub_impl(a.payload_, b.payload_));
}

RingValue Ring::mul(const RingValue& a, const RingValue& b) const {
  require_same(a, b);
  return make(mul_impl(a.payload_, b.payload_));
}

RingValue Ring::neg(const RingValue& a) const {
  require_mine(a);
  return make(neg_impl(a.payload_));
}

bool Ring::equal(const RingValue& a, const RingValue& b) const {
  require_same(a, b);
  return equal_impl(a.payload_, b.payload_);
}

std::optional<RingValue> Ring::exact_divide(const RingValue& a,
                                            const RingValue& b) const {
  require_same(a, b);
  auto q = exact_divide_impl(a.payload_, b.payload_);
  if (!q) return std::nullopt;
  return make(std::move(*q));
}

// -------------------------------------------------------------- IntegerRing

bool IntegerRing::same_ring(const Ring& other) const {
  return dynamic_cast<const IntegerRing*>(&other) != nullptr;
}

Ring::Payload IntegerRing::from_integer_impl(const mpz_class& v) const {
  return v;
}

Ring::Payload IntegerRing::add_impl(const Payload& a, const Payload& b) const {
  return mpz_class(as_int(a) + as_int(b));
}

Ring::Payload IntegerRing::sub_impl(const Payload& a, const Payload& b) const {
  return mpz_class(as_int(a) - as_int(b));
}

Ring::Payload IntegerRing::mul_impl(const Payload& a, const Payload& b) const {
  return mpz_class(as_int(a) * as_int(b));
}

Ring::Payload IntegerRing::neg_impl(const Payload& a) const {
  return mpz_class(-as_int(a));
}

bool IntegerRing::equal_impl(const Payload& a, const Payload& b) const {
  return as_int(a) == as_int(b);
}

std::optional<Ring::Payload> IntegerRing::exact_divide_impl(
    const Payload& a, const Payload& b) const {
  const mpz_class& num = as_int(a);
  const mpz_class& den = as_int(b);
  if (den == 0) throw std::invalid_argument("exact_divide: division by zero");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return std::nullopt;
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Payload(q);
}

std::string IntegerRing::str_impl(const Payload& a) const {
  return as_int(a).get_str();
}

// ------------------------------------------------------------------ ModRing

ModRing::ModRing(unsigned long modulus)
    : modulus_(modulus),
      modulus_z_(mpz_class(modulus)),
      prime_(is_prime_by_trial_division(modulus)) {
  if (modulus < 2) {
    throw std::invalid_argument("Z/m requires m >= 2");
  }
}

std::string ModRing::description() const {
  return "Z/" + std::to_string(modulus_);
}

bool ModRing::same_ring(const Ring& other) const {
  const auto* m = dynamic_cast<const ModRing*>(&other);
  return m != nullptr && m->modulus_ == modulus_;
}

mpz_class ModRing::reduce(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus_z_.get_mpz_t());
  return r;
}

Ring::Payload ModRing::from_integer_impl(const mpz_class& v) const {
  return reduce(v);
}

Ring::Payload ModRing::add_impl(const Payload& a, const Payload& b) const {
  return reduce(as_int(a) + as_int(b));
}

Ring::Payload ModRing::sub_impl(const Payload& a, const Payload& b) const {
  return reduce(as_int(a) - as_int(b));
}

Ring::Payload ModRing::mul_impl(const Payload& a, const Payload& b) const {
  return reduce(as_int(a) * as_int(b));
}

Ring::Payload ModRing::neg_impl(const Payload& a) const {
  return reduce(-as_int(a));
}

bool ModRing::equal_impl(const Payload& a, const Payload& b) const {
  return as_int(a) == as_int(b);
}

std::optional<Ring::Payload> ModRing::exact_divide_impl(
    const Payload& a, const Payload& b) const {
  if (!prime_) {
    throw std::domain_error(description() + " is not an integral domain");
  }
  const mpz_class& den = as_int(b);
  if (den == 0) throw std::invalid_argument("exact_divide: division by zero");
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus_z_.get_mpz_t()) ==
      0) {
    throw std::logic_error("mod ring: nonzero element without inverse");
  }
  return Payload(reduce(as_int(a) * inv));
}

std::string ModRing::str_impl(const Payload& a) const {
  return as_int(a).get_str();
}

// ----------------------------------------------------------- PolynomialRing

PolynomialRing::PolynomialRing(std::vector<std::string> indeterminates)
    : names_(std::move(indeterminates)) {
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) {
    throw std::invalid_argument("polynomial ring: duplicate indeterminate");
  }
}

const std::string& PolynomialRing::var_name(std::size_t index) const {
  if (index >= names_.size()) {
    throw std::out_of_range("polynomial ring: no such indeterminate");
  }
  return names_[index];
}

RingValue PolynomialRing::indeterminate(std::size_t index) const {
  if (index >= names_.size()) {
    throw std::out_of_range("polynomial ring: no such indeterminate");
  }
  return make(Polynomial::variable(names_.size(), index));
}

std::string PolynomialRing::description() const {
  std::string out = "Z[";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i > 0) out += ',';
    out += names_[i];
  }
  out += ']';
  return out;
}

bool PolynomialRing::same_ring(const Ring& other) const {
  const auto* p = dynamic_cast<const PolynomialRing*>(&other);
  return p != nullptr && p->names_ == names_;
}

Ring::Payload PolynomialRing::from_integer_impl(const mpz_class& v) const {
  return Polynomial::constant(names_.size(), v);
}

Ring::Payload PolynomialRing::add_impl(const Payload& a,
                                       const Payload& b) const {
  return as_poly(a).add(as_poly(b));
}

Ring::Payload PolynomialRing::sub_impl(const Payload& a,
                                       const Payload& b) const {
  return as_poly(a).sub(as_poly(b));
}

Ring::Payload PolynomialRing::mul_impl(const Payload& a,
                                       const Payload& b) const {
  return as_poly(a).mul(as_poly(b));
}

Ring::Payload PolynomialRing::neg_impl(const Payload& a) const {
  return as_poly(a).neg();
}

bool PolynomialRing::equal_impl(const Payload& a, const Payload& b) const {
  return as_poly(a) == as_poly(b);
}

std::optional<Ring::Payload> PolynomialRing::exact_divide_impl(
    const Payload& a, const Payload& b) const {
  auto q = as_poly(a).exact_divide(as_poly(b));
  if (!q) return std::nullopt;
  return Payload(std::move(*q));
}

std::string PolynomialRing::str_impl(const Payload& a) const {
  return as_poly(a).str(names_);
}

// ---------------------------------------------------------------- factories

std::shared_ptr<const IntegerRing> integers() {
  static const auto instance = std::make_shared<const IntegerRing>();
  return instance;
}

std::shared_ptr<const ModRing> integers_mod(unsigned long modulus) {
  return std::make_shared<const ModRing>(modulus);
}

std::shared_ptr<const PolynomialRing> polynomials(
    std::vector<std::string> indeterminates) {
  return std::make_shared<const PolynomialRing>(std::move(indeterminates));
}

}  // namespace ck
