// Exact scalars: prime fields F_p (odd p, runtime modulus) and arbitrary
// precision rationals, behind one small field-object interface. Elements are
// plain value types; every operation goes through the field object, so a
// modulus mismatch is detected instead of silently producing garbage.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ilab {

// Error categories double as CLI exit codes.
enum class errc : int {
  validation = 1,
  undecidable = 2,
  io = 3,
  usage = 64,
  internal = 70,
};

class error : public std::runtime_error {
 public:
  error(errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

inline bool is_prime_u64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// F_p with p an odd prime. Values are canonical residues in [0, p).
// Products are formed on int64, so p must stay below 2^31.
struct PrimeField {
  using value_type = std::int64_t;

  std::int64_t p{0};

  PrimeField() = default;
  explicit PrimeField(std::int64_t prime) : p(prime) {
    if (prime < 3 || prime % 2 == 0 || !is_prime_u64(prime))
      fail(errc::validation, "field modulus must be an odd prime, got " + std::to_string(prime));
    if (prime > (std::int64_t(1) << 31))
      fail(errc::validation, "field modulus too large: " + std::to_string(prime));
  }

  bool same(const PrimeField& o) const { return p == o.p; }
  std::string name() const { return "F_" + std::to_string(p); }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t a) const {
    value_type r = a % p;
    return r < 0 ? r + p : r;
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool eq(value_type a, value_type b) const { return a == b; }
  value_type add(value_type a, value_type b) const {
    value_type r = a + b;
    return r >= p ? r - p : r;
  }
  value_type sub(value_type a, value_type b) const {
    value_type r = a - b;
    return r < 0 ? r + p : r;
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p; }
  value_type inv(value_type a) const {
    if (a == 0) fail(errc::validation, "division by zero in " + name());
    // extended Euclid
    std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1, s2 = s0 - q * s1;
      r0 = r1; r1 = r2; s0 = s1; s1 = s2;
    }
    return from_int(s0);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  std::string str(value_type a) const { return std::to_string(a); }
};

// Exact rationals via GMP. mpq_class construction from a fraction does not
// canonicalize, so from_fraction does it explicitly; arithmetic on canonical
// operands stays canonical.
struct RationalField {
  using value_type = mpq_class;

  bool same(const RationalField&) const { return true; }
  std::string name() const { return "Q"; }

  value_type zero() const { return mpq_class(0); }
  value_type one() const { return mpq_class(1); }
  value_type from_int(std::int64_t a) const { return mpq_class(static_cast<long>(a)); }
  value_type from_fraction(std::int64_t num, std::int64_t den) const {
    if (den == 0) fail(errc::validation, "division by zero in Q");
    value_type q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool eq(const value_type& a, const value_type& b) const { return cmp(a, b) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) fail(errc::validation, "division by zero in Q");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }
  std::string str(const value_type& a) const { return a.get_str(); }
};

template <class F>
inline void check_same_field(const F& a, const F& b, const char* where) {
  if (!a.same(b))
    fail(errc::validation,
         std::string(where) + ": mixed fields " + a.name() + " vs " + b.name());
}

}  // namespace ilab
