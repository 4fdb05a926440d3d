#pragma once

/// \file
/// Exact coefficient fields: the rationals and prime fields F_p.
///
/// Fields are small value objects passed alongside the data they act on, in
/// the style of FFLAS/LinBox field wrappers: `F.add(a, b)`, `F.inv(a)`, ...
/// All linear algebra in this library is templated on such a field type.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "bisets/error.hpp"
#include "bisets/rational.hpp"

namespace bisets {

enum class FieldKind { rational, prime };

/// Runtime description of a coefficient field, as parsed from "Q" or "F<p>".
struct FieldTag {
  FieldKind kind = FieldKind::rational;
  std::uint32_t p = 0;

  [[nodiscard]] std::string name() const {
    return kind == FieldKind::rational ? "Q" : "F" + std::to_string(p);
  }
  [[nodiscard]] std::uint32_t characteristic() const { return kind == FieldKind::rational ? 0 : p; }

  friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Parses "Q", "F<p>" or "GF<p>" (p prime, p < 2^16).
inline FieldTag parse_field(const std::string& text) {
  if (text == "Q" || text == "QQ") return {FieldKind::rational, 0};
  std::string digits;
  if (text.rfind("GF", 0) == 0) digits = text.substr(2);
  else if (text.rfind("Fp", 0) == 0) digits = text.substr(2);
  else if (text.rfind('F', 0) == 0) digits = text.substr(1);
  else throw SpecError("unknown field '" + text + "' (expected Q or F<p>)");
  if (digits.empty() || digits.size() > 5 || digits.find_first_not_of("0123456789") != std::string::npos)
    throw SpecError("malformed field '" + text + "'");
  auto p = static_cast<std::uint32_t>(std::stoul(digits));
  if (!is_prime(p) || p >= (1u << 16)) throw SpecError("field characteristic must be a prime below 65536: '" + text + "'");
  return {FieldKind::prime, p};
}

/// The rational numbers. Values are canonical, so equality is exact comparison.
class Rationals {
 public:
  using value_type = Rational;

  [[nodiscard]] value_type zero() const { return {}; }
  [[nodiscard]] value_type one() const { return value_type(1); }
  [[nodiscard]] value_type from_int(long v) const { return value_type(static_cast<std::int64_t>(v)); }

  [[nodiscard]] value_type add(const value_type& a, const value_type& b) const { return a + b; }
  [[nodiscard]] value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  [[nodiscard]] value_type neg(const value_type& a) const { return -a; }
  [[nodiscard]] value_type inv(const value_type& a) const { return a.inverse(); }
  [[nodiscard]] value_type div(const value_type& a, const value_type& b) const { return a / b; }

  /// y += a * x
  void axpy_in(value_type& y, const value_type& a, const value_type& x) const {
    if (a.sign() == 0 || x.sign() == 0) return;
    y += a * x;
  }

  [[nodiscard]] bool is_zero(const value_type& a) const { return a.sign() == 0; }
  [[nodiscard]] bool is_one(const value_type& a) const { return a.is_one(); }
  [[nodiscard]] bool equal(const value_type& a, const value_type& b) const { return a == b; }

  [[nodiscard]] std::string format(const value_type& a) const { return a.str(); }
  [[nodiscard]] FieldTag tag() const { return {FieldKind::rational, 0}; }
  [[nodiscard]] std::uint32_t characteristic() const { return 0; }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// The prime field Z/pZ with residues stored in 0..p-1.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  PrimeField() = default;  // F_2; placeholder for default-constructed containers
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= (1u << 16)) throw SpecError("PrimeField: modulus must be a prime below 65536");
  }

  [[nodiscard]] std::uint32_t modulus() const { return p_; }

  [[nodiscard]] value_type zero() const { return 0; }
  [[nodiscard]] value_type one() const { return 1; }
  [[nodiscard]] value_type from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }

  [[nodiscard]] value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  [[nodiscard]] value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  [[nodiscard]] value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  [[nodiscard]] value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] value_type inv(value_type a) const {
    if (a == 0) throw AssertionFailure("inverse of zero in F_" + std::to_string(p_));
    // extended Euclid on (a, p)
    long t = 0, new_t = 1;
    long r = p_, new_r = a;
    while (new_r != 0) {
      long q = r / new_r;
      long tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return from_int(t);
  }
  [[nodiscard]] value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  void axpy_in(value_type& y, value_type a, value_type x) const {
    y = static_cast<value_type>((y + static_cast<std::uint64_t>(a) * x) % p_);
  }

  [[nodiscard]] bool is_zero(value_type a) const { return a == 0; }
  [[nodiscard]] bool is_one(value_type a) const { return a == 1; }
  [[nodiscard]] bool equal(value_type a, value_type b) const { return a == b; }

  [[nodiscard]] std::string format(value_type a) const { return std::to_string(a); }
  [[nodiscard]] FieldTag tag() const { return {FieldKind::prime, p_}; }
  [[nodiscard]] std::uint32_t characteristic() const { return p_; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_ = 2;
};

/// Invokes `fn(field)` with the concrete field described by `tag`.
template <class Fn>
decltype(auto) with_field(const FieldTag& tag, Fn&& fn) {
  if (tag.kind == FieldKind::rational) return fn(Rationals{});
  return fn(PrimeField(tag.p));
}

}  // namespace bisets
