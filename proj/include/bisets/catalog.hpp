#pragma once

/// \file
/// The small-group catalog: "C<n>", "S<n>" (n <= 5), "D<n>" (order 2n), "Q8",
/// and products "A x B x ...".

#include <array>
#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "bisets/error.hpp"
#include "bisets/group.hpp"
#include "bisets/product.hpp"

namespace bisets {

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

inline std::size_t parse_count(const std::string& digits, const std::string& token) {
  if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string::npos)
    throw SpecError("malformed group token '" + token + "'");
  auto n = std::stoul(digits);
  if (n == 0) throw SpecError("group token '" + token + "' has parameter 0");
  return n;
}

using Perm = std::vector<std::uint8_t>;

inline Perm compose(const Perm& p, const Perm& q) {  // p after q
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline Group cyclic(std::size_t n, std::size_t cap) {
  if (n > cap) throw SpecError("C" + std::to_string(n) + " exceeds the order cap");
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>((a + b) % n);
  return Group("C" + std::to_string(n), n, std::move(table));
}

inline Group symmetric(std::size_t n, std::size_t cap) {
  if (n > 5) throw SpecError("S" + std::to_string(n) + ": only S1..S5 are in the catalog");
  Perm id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<std::uint8_t>(i);
  std::vector<Perm> gens;
  if (n >= 2) {
    Perm transposition = id;
    std::swap(transposition[0], transposition[1]);
    Perm cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint8_t>((i + 1) % n);
    gens = {transposition, cycle};
  }
  return group_from_generators("S" + std::to_string(n), id, gens, compose, cap);
}

inline Group dihedral(std::size_t n, std::size_t cap) {
  // (k, f) stands for r^k s^f with s r s = r^-1.
  using RS = std::array<std::size_t, 2>;
  auto mul = [n](const RS& a, const RS& b) {
    std::size_t k = a[1] ? (a[0] + n - b[0]) % n : (a[0] + b[0]) % n;
    return RS{k, a[1] ^ b[1]};
  };
  std::vector<RS> gens;
  if (n > 1) gens.push_back({1, 0});
  gens.push_back({0, 1});
  return group_from_generators("D" + std::to_string(n), RS{0, 0}, gens, mul, cap);
}

inline Group quaternion8(std::size_t cap) {
  using Quat = std::array<int, 4>;  // a + bi + cj + dk
  auto mul = [](const Quat& p, const Quat& q) {
    return Quat{p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
                p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
                p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
                p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
  };
  return group_from_generators("Q8", Quat{1, 0, 0, 0}, {Quat{0, 1, 0, 0}, Quat{0, 0, 1, 0}}, mul, cap);
}

inline GroupPtr build_atom(const std::string& token, std::size_t cap) {
  if (token == "Q8") return std::make_shared<const Group>(quaternion8(cap));
  if (token.size() < 2) throw SpecError("malformed group token '" + token + "'");
  const auto n = parse_count(token.substr(1), token);
  switch (token[0]) {
    case 'C': return std::make_shared<const Group>(cyclic(n, cap));
    case 'S': return std::make_shared<const Group>(symmetric(n, cap));
    case 'D': return std::make_shared<const Group>(dihedral(n, cap));
    default: throw SpecError("unknown group token '" + token + "'");
  }
}

}  // namespace detail

/// Builds a catalog group. Atoms number their elements breadth-first from the
/// generators (identity 0, generators next); a product "A x B" numbers (a, b)
/// as a * |B| + b, matching ProductGroup.
inline GroupPtr build_group(const std::string& spec, std::size_t order_cap = 1024) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : spec) {
    if (ch == 'x' || ch == '*') {
      tokens.push_back(detail::trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  tokens.push_back(detail::trim(cur));
  for (const auto& t : tokens)
    if (t.empty()) throw SpecError("malformed group spec '" + spec + "'");
  GroupPtr g = detail::build_atom(tokens[0], order_cap);
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    auto next = detail::build_atom(tokens[i], order_cap);
    g = direct_product(g, next, order_cap)->group();
  }
  return g;
}

}  // namespace bisets
