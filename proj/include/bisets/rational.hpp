#pragma once

/// \file
/// Exact rational numbers with an inline 64-bit representation. Values whose
/// reduced numerator and denominator fit in int64 never touch the heap; larger
/// ones are held as a GMP rational. Results are always canonical (reduced,
/// positive denominator, and small whenever they fit), so equality is
/// representation equality.

#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "bisets/error.hpp"

namespace bisets {

class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t n) : num_(n) {  // NOLINT(google-explicit-constructor)
    if (n == kMin) big_ = std::make_unique<mpq_class>(mpz_from(n));
  }
  explicit Rational(const mpq_class& q) { assign(q); }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  [[nodiscard]] bool is_small() const { return !big_; }
  [[nodiscard]] int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }
  [[nodiscard]] bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }

  [[nodiscard]] mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_from(num_), mpz_from(den_));
    return q;
  }

  [[nodiscard]] std::string str() const {
    if (big_) return big_->get_str();
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Residue modulo a prime p < 2^32, or nullopt if p divides the denominator.
  [[nodiscard]] std::optional<std::uint64_t> mod(std::uint64_t p) const {
    std::uint64_t n, d;
    if (big_) {
      mpz_class pz(static_cast<unsigned long>(p));
      mpz_class a = big_->get_num() % pz, b = big_->get_den() % pz;
      if (a < 0) a += pz;
      n = a.get_ui();
      d = b.get_ui();
    } else {
      const auto sp = static_cast<std::int64_t>(p);
      n = static_cast<std::uint64_t>(((num_ % sp) + sp) % sp);
      d = static_cast<std::uint64_t>(den_ % sp);
    }
    if (d == 0) return std::nullopt;
    std::uint64_t inv = 1, b = d, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return n * inv % p;
  }

  friend Rational operator-(const Rational& a) {
    if (a.big_) return Rational(mpq_class(-*a.big_));
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != kMin) return Rational(s);
    }
    const i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    const i128 d = static_cast<i128>(a.den_) * b.den_;
    return from_wide(n, d);
  }

  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s;
      if (!__builtin_mul_overflow(a.num_, b.num_, &s) && s != kMin) return Rational(s);
    }
    return from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
  }

  [[nodiscard]] Rational inverse() const {
    if (sign() == 0) throw AssertionFailure("inverse of zero");
    if (big_) return Rational(mpq_class(1 / *big_));
    Rational r;
    r.num_ = num_ > 0 ? den_ : -den_;
    r.den_ = num_ > 0 ? num_ : -num_;
    return r;
  }

  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  using i128 = __int128;
  using u128 = unsigned __int128;
  static constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
  static constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

  static mpz_class mpz_from(std::int64_t v) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
  }

  static mpz_class mpz_from_wide(u128 v) {
    mpz_class z;
    const std::uint64_t parts[2] = {static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(v >> 64)};
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, parts);
    return z;
  }

  static u128 gcd_wide(u128 a, u128 b) {
    while (b) {
      if ((a >> 64) == 0 && (b >> 64) == 0) return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
      u128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  /// n / d with d > 0.
  static Rational from_wide(i128 n, i128 d) {
    const bool neg = n < 0;
    u128 un = neg ? static_cast<u128>(-n) : static_cast<u128>(n);
    u128 ud = static_cast<u128>(d);
    if (un == 0) return Rational();
    const u128 g = gcd_wide(un, ud);
    un /= g;
    ud /= g;
    if (un <= static_cast<u128>(kMax) && ud <= static_cast<u128>(kMax)) {
      Rational r;
      r.num_ = neg ? -static_cast<std::int64_t>(un) : static_cast<std::int64_t>(un);
      r.den_ = static_cast<std::int64_t>(ud);
      return r;
    }
    mpz_class zn = mpz_from_wide(un);
    if (neg) zn = -zn;
    Rational r;
    r.big_ = std::make_unique<mpq_class>(zn, mpz_from_wide(ud));
    return r;
  }

  void assign(mpq_class q) {
    q.canonicalize();
    const auto& n = q.get_num();
    const auto& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && sizeof(long) == 8) {
      const auto ln = n.get_si();
      if (ln != kMin) {
        num_ = ln;
        den_ = d.get_si();
        big_.reset();
        return;
      }
    }
    big_ = std::make_unique<mpq_class>(std::move(q));
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace bisets
