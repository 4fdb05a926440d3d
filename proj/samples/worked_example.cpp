// K = H = G = C2, X = Y = diagonal, trivial modules over Q.
#include <iostream>

#include "bisets/bisets.hpp"

using namespace bisets;

int main() {
  const Rationals q;
  CaseSpec spec;  // defaults: C2, diag, trivial
  auto c = build_case(spec, q);

  auto lhs = theorem_lhs(c);
  auto rhs = theorem_rhs(c);
  std::cout << "dim LHS = " << lhs.module.dim() << ", dim RHS = " << rhs.module.dim() << '\n';

  auto chi = character(lhs.module.rep);
  std::cout << "character on classes of C2 x C2:";
  for (const auto& v : chi.formatted()) std::cout << ' ' << v;
  std::cout << '\n';

  for (const auto& s : rhs.summands)
    std::cout << "t = " << s.t << ": |Z| = " << s.z.size() << ", |middle| = " << s.middle.size()
              << ", dim = " << s.w.dim() << '\n';

  auto iso = find_intertwiner_iso(lhs.module.rep, rhs.module);
  std::cout << "intertwiner search: " << to_string(iso.status) << '\n';
  auto chain = chain_isomorphism(c, lhs, rhs);
  std::cout << "chain isomorphism: " << (chain.ok() ? "verified" : "failed") << '\n';
  return iso.status == IsoStatus::found && chain.ok() ? 0 : 1;
}
