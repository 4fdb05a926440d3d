#pragma once

/// \file
/// Classical Mackey formula as a regression oracle for K = G = 1.
///
/// With trivial outer groups, Y = 1 x B and X = A x 1 for subgroups A, B of H,
/// both sides of the theorem are plain vector spaces and
///
///   dim Ind_B N ⊗_{RH} Ind_A M = dim N ⊗_{RB} Res_B Ind_A M
///                              = Σ_{t ∈ B\H/A} dim N ⊗_{R(B ∩ tAt^-1)} tM.
///
/// Everything here is computed from traces and brute-force coset enumeration
/// over Q, without the induction or tensor code used by the theorem sides.

#include <algorithm>
#include <vector>

#include "bisets/error.hpp"
#include "bisets/field.hpp"
#include "bisets/theorem.hpp"

namespace bisets {

struct MackeyOracle {
  std::vector<Elem> reps;              // minimum element of each double coset B t A
  std::vector<Rational> summand_dims;  // dim N ⊗_{B ∩ tAt^-1} tM per rep
  Rational double_coset_sum;           // Σ summand_dims
  Rational res_ind_dim;                // dim N ⊗_B Res_B Ind_A M
  Rational tensor_dim;                 // dim Ind_B N ⊗_H Ind_A M from induced characters
};

inline bool outer_groups_trivial(const TheoremCase<Rationals>& c) {
  return c.y.ambient()->left()->order() == 1 && c.x.ambient()->right()->order() == 1;
}

inline MackeyOracle classical_mackey(const TheoremCase<Rationals>& c) {
  if (!outer_groups_trivial(c)) throw SpecError("classical_mackey: K and G must be trivial");
  const Group& h = *c.h_group();
  const std::size_t order = h.order();
  // with K = G = 1 the composite id of (1, b) and of (a, 1) is the H element itself
  std::vector<char> in_b(order, 0), in_a(order, 0);
  std::vector<Rational> chi_n(order), chi_m(order);
  for (auto e : c.y.elements()) {
    in_b[e] = 1;
    chi_n[e] = c.n.image(c.y.subgroup().local(e)).trace();
  }
  for (auto e : c.x.elements()) {
    in_a[e] = 1;
    chi_m[e] = c.m.image(c.x.subgroup().local(e)).trace();
  }
  auto conj = [&](Elem x, Elem g) { return h.mul(h.mul(h.inv(x), g), x); };  // x^-1 g x

  auto induced = [&](const std::vector<char>& in, const std::vector<Rational>& chi, std::size_t sub_order) {
    std::vector<Rational> out(order);
    for (Elem g = 0; g < order; ++g) {
      Rational s;
      for (Elem x = 0; x < order; ++x) {
        const Elem y = conj(x, g);
        if (in[y]) s += chi[y];
      }
      out[g] = s / Rational(static_cast<std::int64_t>(sub_order));
    }
    return out;
  };
  const auto chi_ind_n = induced(in_b, chi_n, c.y.size());
  const auto chi_ind_m = induced(in_a, chi_m, c.x.size());

  MackeyOracle out;
  {
    Rational s;
    for (Elem g = 0; g < order; ++g) s += chi_ind_n[g] * chi_ind_m[g];
    out.tensor_dim = s / Rational(static_cast<std::int64_t>(order));
  }
  {
    Rational s;
    for (auto b : c.y.elements()) s += chi_n[b] * chi_ind_m[b];
    out.res_ind_dim = s / Rational(static_cast<std::int64_t>(c.y.size()));
  }

  std::vector<char> seen(order, 0);
  for (Elem t = 0; t < order; ++t) {
    if (seen[t]) continue;
    for (auto b : c.y.elements())
      for (auto a : c.x.elements()) seen[h.mul(h.mul(b, t), a)] = 1;
    out.reps.push_back(t);
    // L = B ∩ tAt^-1 acts on N ⊗ tM by (1, l) on N and (t^-1 l t, 1) on M
    Rational s;
    std::int64_t l_order = 0;
    for (auto l : c.y.elements()) {
      const Elem lt = conj(t, l);
      if (!in_a[lt]) continue;
      ++l_order;
      s += chi_n[l] * chi_m[lt];
    }
    out.summand_dims.push_back(s / Rational(l_order));
    out.double_coset_sum += out.summand_dims.back();
  }
  return out;
}

struct MackeyComparison {
  bool oracle_consistent = false;  // the three oracle dimensions agree
  bool reps_match = false;
  bool summands_match = false;
  bool characters_match = false;  // LHS and RHS characters equal the oracle dimension
  std::string detail;
  [[nodiscard]] bool ok() const { return oracle_consistent && reps_match && summands_match && characters_match; }
};

/// Runs verify_theorem_case in char mode and compares it with the oracle.
inline MackeyComparison compare_with_mackey(const TheoremCase<Rationals>& c) {
  MackeyComparison out;
  const auto oracle = classical_mackey(c);
  const auto result = verify_theorem_case(c, {});
  out.oracle_consistent = oracle.tensor_dim == oracle.res_ind_dim && oracle.res_ind_dim == oracle.double_coset_sum;
  std::vector<Elem> reps;
  for (const auto& s : result.summands) reps.push_back(s.t);
  out.reps_match = reps == oracle.reps;
  out.summands_match = out.reps_match;
  for (std::size_t i = 0; out.summands_match && i < reps.size(); ++i)
    out.summands_match = Rational(static_cast<std::int64_t>(result.summands[i].dim)) == oracle.summand_dims[i];
  const std::vector<std::string> expected{oracle.double_coset_sum.str()};
  out.characters_match = result.pass && result.lhs_character == expected && result.rhs_character == expected;
  if (!result.error.empty()) out.detail = result.error;
  return out;
}

}  // namespace bisets
