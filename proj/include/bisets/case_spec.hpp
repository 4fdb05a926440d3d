#pragma once

/// \file
/// Text forms of theorem cases, as accepted by the command-line driver.
///
/// Subgroups of a product A x B: "full", "trivial", "diag" (A = B only), or a
/// generator list "[(a,b),(c,d),...]" of element-id pairs (brackets optional;
/// "[]" is the trivial subgroup). Modules: "trivial",
/// "perm", "regular", or "random:<seed>" (a random representation whose
/// dimension stays within the dimension cap).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bisets/catalog.hpp"
#include "bisets/error.hpp"
#include "bisets/field.hpp"
#include "bisets/product.hpp"
#include "bisets/rep.hpp"
#include "bisets/sweep.hpp"
#include "bisets/theorem.hpp"

namespace bisets {

struct CaseSpec {
  std::string k = "C2", h = "C2", g = "C2";
  std::string y = "diag", x = "diag";
  std::string n = "trivial", m = "trivial";
  std::size_t dim_cap = 6;
};

inline std::vector<std::pair<Elem, Elem>> parse_generator_pairs(const std::string& text) {
  std::vector<std::pair<Elem, Elem>> out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto number = [&]() -> Elem {
    skip_space();
    const auto start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || i - start > 6) throw SpecError("malformed generator list '" + text + "'");
    return static_cast<Elem>(std::stoul(text.substr(start, i - start)));
  };
  auto expect = [&](char ch) {
    skip_space();
    if (i >= text.size() || text[i] != ch) throw SpecError("malformed generator list '" + text + "'");
    ++i;
  };
  skip_space();
  while (i < text.size()) {
    expect('(');
    const auto a = number();
    expect(',');
    const auto b = number();
    expect(')');
    out.emplace_back(a, b);
    skip_space();
    if (i < text.size()) expect(',');
    skip_space();
  }
  return out;
}

inline ProductSubgroup parse_product_subgroup(const std::string& text, const ProductGroupPtr& ambient) {
  if (text == "full") return ProductSubgroup::whole(ambient);
  if (text == "trivial") return ProductSubgroup::trivial(ambient);
  if (text == "diag") {
    if (!ambient->left()->same_table(*ambient->right()))
      throw SpecError("'diag' needs equal factors, got " + ambient->group()->name());
    return ProductSubgroup::diagonal(ambient);
  }
  auto body = detail::trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw SpecError("malformed generator list '" + text + "'");
    body = detail::trim(body.substr(1, body.size() - 2));
  }
  if (!body.empty() && body.front() != '(')
    throw SpecError("unknown subgroup '" + text + "' (expected full, trivial, diag or [(a,b),...])");
  return ProductSubgroup::generated(ambient, parse_generator_pairs(body));
}

template <class F>
Rep<F> parse_module(const std::string& text, const ProductSubgroup& s, const F& field, std::size_t dim_cap) {
  if (text.rfind("random:", 0) == 0) {
    const auto digits = text.substr(7);
    if (digits.empty() || digits.size() > 19 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw SpecError("malformed module seed in '" + text + "'");
    return random_rep(s.subgroup().as_group(), dim_cap, std::stoull(digits), field);
  }
  return catalog_module(text, s.subgroup(), field);
}

template <class F>
TheoremCase<F> build_case(const CaseSpec& spec, const F& field) {
  auto kg = build_group(spec.k), hg = build_group(spec.h), gg = build_group(spec.g);
  auto kh = direct_product(kg, hg);
  auto hgp = direct_product(hg, gg);
  auto y = parse_product_subgroup(spec.y, kh);
  auto x = parse_product_subgroup(spec.x, hgp);
  auto n = parse_module(spec.n, y, field, spec.dim_cap);
  auto m = parse_module(spec.m, x, field, spec.dim_cap);
  return TheoremCase<F>(std::move(y), std::move(x), std::move(n), std::move(m), direct_product(kg, gg));
}

}  // namespace bisets
