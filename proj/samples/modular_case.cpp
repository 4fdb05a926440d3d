// K = C3, H = S3, G = C2 over F3 with a random module: characters are not
// decisive here, so the isomorphism is constructed.
#include <iostream>

#include "bisets/bisets.hpp"

using namespace bisets;

int main() {
  const PrimeField f3(3);
  CaseSpec spec;
  spec.k = "C3";
  spec.h = "S3";
  spec.g = "C2";
  spec.y = "full";
  spec.x = "[(1,1)]";
  spec.n = "random:7";
  spec.m = "regular";
  auto c = build_case(spec, f3);

  CaseOptions opt;
  opt.modes = {Mode::character, Mode::constructive, Mode::chain};
  auto r = verify_theorem_case(c, opt);
  std::cout << "dim LHS = " << r.lhs_dim << ", dim RHS = " << r.rhs_dim << ", summands = " << r.summands.size()
            << '\n';
  for (const auto& v : r.verdicts) std::cout << to_string(v.mode) << ": " << (v.pass ? "pass" : "FAIL") << " ("
                                             << v.detail << ")\n";
  if (!r.error.empty()) std::cout << "error: " << r.error << '\n';
  return r.pass ? 0 : 1;
}
