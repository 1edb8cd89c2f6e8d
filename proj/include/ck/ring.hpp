#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ck/polynomial.hpp"

namespace ck {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Internal storage for a ring element: integers and residues share the
// mpz representation, polynomials carry their term map.
using RingPayload = std::variant<mpz_class, Polynomial>;

// Element of one ring instance. Values are immutable, know their ring, and
// compare with exact equality; no floating point exists anywhere below.
// Combining values from different rings throws std::invalid_argument.
class RingValue {
 public:
  const RingPtr& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;

  // Nonnegative power by repeated squaring; pow(0) is one (also for zero).
  RingValue pow(std::uint64_t exponent) const;

  std::string str() const;

  friend RingValue operator+(const RingValue& a, const RingValue& b);
  friend RingValue operator-(const RingValue& a, const RingValue& b);
  friend RingValue operator*(const RingValue& a, const RingValue& b);
  RingValue operator-() const;
  friend bool operator==(const RingValue& a, const RingValue& b);
  friend bool operator!=(const RingValue& a, const RingValue& b) {
    return !(a == b);
  }

 private:
  friend class Ring;
  RingValue(RingPtr ring, RingPayload payload);

  RingPtr ring_;
  RingPayload payload_;
};

std::ostream& operator<<(std::ostream& os, const RingValue& v);

// A commutative ring with exact arithmetic. Concrete rings: integers,
// integers modulo m, multivariate polynomials over the integers.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  virtual ~Ring() = default;

  RingValue zero() const;
  RingValue one() const;
  RingValue from_int(long long v) const;
  RingValue from_integer(const mpz_class& v) const;

  virtual bool is_integral_domain() const = 0;
  virtual std::string description() const = 0;
  virtual bool same_ring(const Ring& other) const = 0;

  RingValue add(const RingValue& a, const RingValue& b) const;
  RingValue sub(const RingValue& a, const RingValue& b) const;
  RingValue mul(const RingValue& a, const RingValue& b) const;
  RingValue neg(const RingValue& a) const;
  bool equal(const RingValue& a, const RingValue& b) const;

  // Quotient q with q*b == a, when such q exists in this ring; nullopt
  // otherwise. Throws on b == 0 and on rings that are not integral
  // domains (composite modulus).
  std::optional<RingValue> exact_divide(const RingValue& a,
                                        const RingValue& b) const;

 protected:
  using Payload = RingPayload;

  virtual Payload from_integer_impl(const mpz_class& v) const = 0;
  virtual Payload add_impl(const Payload& a, const Payload& b) const = 0;
  virtual Payload sub_impl(const Payload& a, const Payload& b) const = 0;
  virtual Payload mul_impl(const Payload& a, const Payload& b) const = 0;
  virtual Payload neg_impl(const Payload& a) const = 0;
  virtual bool equal_impl(const Payload& a, const Payload& b) const = 0;
  virtual std::optional<Payload> exact_divide_impl(const Payload& a,
                                                   const Payload& b) const = 0;
  virtual std::string str_impl(const Payload& a) const = 0;

  RingValue make(Payload payload) const;
  void require_mine(const RingValue& v) const;
  void require_same(const RingValue& a, const RingValue& b) const;

  friend class RingValue;
};

inline std::optional<RingValue> exact_divide(const RingValue& a,
                                             const RingValue& b) {
  return a.ring()->exact_divide(a, b);
}

class IntegerRing final : public Ring {
 public:
  bool is_integral_domain() const override { return true; }
  std::string description() const override { return "Z"; }
  bool same_ring(const Ring& other) const override;

 protected:
  Payload from_integer_impl(const mpz_class& v) const override;
  Payload add_impl(const Payload& a, const Payload& b) const override;
  Payload sub_impl(const Payload& a, const Payload& b) const override;
  Payload mul_impl(const Payload& a, const Payload& b) const override;
  Payload neg_impl(const Payload& a) const override;
  bool equal_impl(const Payload& a, const Payload& b) const override;
  std::optional<Payload> exact_divide_impl(const Payload& a,
                                           const Payload& b) const override;
  std::string str_impl(const Payload& a) const override;
};

// Z/m for m >= 2. Values are stored reduced to [0, m). exact_divide is
// available only when m is prime (checked by trial division on
// construction; the moduli in use are small).
class ModRing final : public Ring {
 public:
  explicit ModRing(unsigned long modulus);

  unsigned long modulus() const { return modulus_; }
  bool modulus_is_prime() const { return prime_; }
  bool is_integral_domain() const override { return prime_; }
  std::string description() const override;
  bool same_ring(const Ring& other) const override;

 protected:
  Payload from_integer_impl(const mpz_class& v) const override;
  Payload add_impl(const Payload& a, const Payload& b) const override;
  Payload sub_impl(const Payload& a, const Payload& b) const override;
  Payload mul_impl(const Payload& a, const Payload& b) const override;
  Payload neg_impl(const Payload& a) const override;
  bool equal_impl(const Payload& a, const Payload& b) const override;
  std::optional<Payload> exact_divide_impl(const Payload& a,
                                           const Payload& b) const override;
  std::string str_impl(const Payload& a) const override;

 private:
  mpz_class reduce(const mpz_class& v) const;

  unsigned long modulus_;
  mpz_class modulus_z_;
  bool prime_;
};

// Z[x1,...,xk] with a fixed, ordered list of indeterminate names.
class PolynomialRing final : public Ring {
 public:
  explicit PolynomialRing(std::vector<std::string> indeterminates);

  std::size_t n_vars() const { return names_.size(); }
  const std::string& var_name(std::size_t index) const;
  RingValue indeterminate(std::size_t index) const;

  bool is_integral_domain() const override { return true; }
  std::string description() const override;
  bool same_ring(const Ring& other) const override;

 protected:
  Payload from_integer_impl(const mpz_class& v) const override;
  Payload add_impl(const Payload& a, const Payload& b) const override;
  Payload sub_impl(const Payload& a, const Payload& b) const override;
  Payload mul_impl(const Payload& a, const Payload& b) const override;
  Payload neg_impl(const Payload& a) const override;
  bool equal_impl(const Payload& a, const Payload& b) const override;
  std::optional<Payload> exact_divide_impl(const Payload& a,
                                           const Payload& b) const override;
  std::string str_impl(const Payload& a) const override;

 private:
  std::vector<std::string> names_;
};

std::shared_ptr<const IntegerRing> integers();
std::shared_ptr<const ModRing> integers_mod(unsigned long modulus);
std::shared_ptr<const PolynomialRing> polynomials(
    std::vector<std::string> indeterminates);

}  // namespace ck
