// Acceptance run: one PASS/FAIL line per criterion. With arguments, only the
// listed criteria run (e.g. `acceptance 1 7`). Exit status is 0 iff every
// criterion that ran passed.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "bisets/bisets.hpp"

using namespace bisets;

namespace {

// Pinned thresholds.
constexpr std::size_t kMinSweepCases = 500;
constexpr double kSweepBudgetSeconds = 600.0;
constexpr std::size_t kSubsamplePermille = 100;
constexpr double kWorkedExampleBudgetSeconds = 1.0;
constexpr std::uint64_t kSeed = 0x5eed;

const std::vector<std::string> kSweepGroups{"C2", "C3", "C4", "C2xC2", "S3"};
const std::vector<std::string> kSmallH{"C1", "C2",  "C3",  "C4",      "C2xC2", "C5", "C6",
                                       "S3", "C7", "C8", "C2xC4", "C2xC2xC2", "D4", "Q8"};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

SweepSpec theorem_sweep() {
  SweepSpec s;
  s.groups = kSweepGroups;
  s.max_index = 12;
  s.dim_cap = 6;
  return s;
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(s < 10 ? 3 : 1);
  o << s << " s";
  return o.str();
}

// Runs a sweep; `check` returns true on success. Returns (cases, failures, first failure).
template <class F>
std::tuple<std::size_t, std::size_t, std::string> run_sweep(
    const SweepSpec& spec, const F& field,
    const std::function<bool(const SweepCaseInfo&, const TheoremCase<F>&)>& check) {
  SweepEnumerator<F> en(spec, field);
  std::size_t cases = 0, failed = 0;
  std::string first;
  en.for_each([&](const SweepCaseInfo& info, const TheoremCase<F>& c) {
    ++cases;
    if (!check(info, c)) {
      if (failed++ == 0)
        first = "case " + std::to_string(info.index) + " (" + info.k + "," + info.h + "," + info.g + "," + info.n + "," +
                info.m + ")";
    }
    return true;
  });
  return {cases, failed, first};
}

std::string tally(std::size_t cases, std::size_t failed, const std::string& first) {
  std::string s = std::to_string(cases - failed) + "/" + std::to_string(cases) + " pass";
  if (failed) s += ", first failure " + first;
  return s;
}

template <class F>
bool verify_with(const TheoremCase<F>& c, std::size_t index, std::vector<Mode> modes) {
  CaseOptions opt;
  opt.modes = std::move(modes);
  opt.seed = case_seed(kSeed, index);
  return verify_theorem_case(c, opt).pass;
}

Outcome criterion1() {
  const auto t0 = Clock::now();
  std::size_t sampled = 0;
  auto [cases, failed, first] =
      run_sweep<Rationals>(theorem_sweep(), Rationals{}, [&](const SweepCaseInfo& info, const TheoremCase<Rationals>& c) {
        std::vector<Mode> modes{Mode::character};
        if (subsample_selected(kSeed, info.index, kSubsamplePermille)) {
          ++sampled;
          modes.push_back(Mode::constructive);
        }
        return verify_with(c, info.index, modes);
      });
  const double secs = since(t0);
  const bool ok = failed == 0 && cases >= kMinSweepCases && secs < kSweepBudgetSeconds;
  return {ok, tally(cases, failed, first) + " over Q (char on all, constructive on " + std::to_string(sampled) +
                  "), need >= " + std::to_string(kMinSweepCases) + " cases in < " + fmt_seconds(kSweepBudgetSeconds) +
                  ", took " + fmt_seconds(secs)};
}

Outcome criterion2() {
  std::string detail;
  bool ok = true;
  for (std::uint32_t p : {2u, 3u}) {
    const auto t0 = Clock::now();
    auto [cases, failed, first] = run_sweep<PrimeField>(
        theorem_sweep(), PrimeField(p), [](const SweepCaseInfo& info, const TheoremCase<PrimeField>& c) {
          return verify_with(c, info.index, {Mode::constructive});
        });
    ok = ok && failed == 0 && cases > 0;
    if (!detail.empty()) detail += "; ";
    detail += "F" + std::to_string(p) + " constructive " + tally(cases, failed, first) + " in " + fmt_seconds(since(t0));
  }
  return {ok, detail};
}

Outcome criterion3() {
  const auto t0 = Clock::now();
  auto [cases, failed, first] = run_sweep<Rationals>(
      theorem_sweep(), Rationals{}, [](const SweepCaseInfo&, const TheoremCase<Rationals>& c) {
        try {
          auto nf = functor_from_module(transitive_biset(c.y), c.n);
          auto mf = functor_from_module(transitive_biset(c.x), c.m);
          return check_lemma(nf, mf, c.kg, RelationSpan::generators).ok();
        } catch (const AssertionFailure&) {
          return false;
        }
      });
  return {failed == 0 && cases > 0,
          "alpha*beta = id, beta*alpha = id, alpha and beta equivariant: " + tally(cases, failed, first) + " in " +
              fmt_seconds(since(t0))};
}

template <class F>
std::tuple<std::size_t, std::size_t> corollary_pairs(const F& field) {
  std::set<std::tuple<std::string, std::string, std::vector<Elem>, std::string>> seen;
  std::size_t pairs = 0, failed = 0;
  SweepEnumerator<F> en(theorem_sweep(), field);
  en.for_each([&](const SweepCaseInfo& info, const TheoremCase<F>& c) {
    if (!seen.emplace(info.h, info.g, info.x, info.m).second) return true;
    ++pairs;
    bool ok = false;
    try {
      ok = check_corollary(c.x, c.m).ok();
    } catch (const AssertionFailure&) {
    }
    if (!ok) ++failed;
    return true;
  });
  return {pairs, failed};
}

Outcome criterion4() {
  std::string detail = "explicit intertwiner Ind_X M -> Sigma(M~)";
  bool ok = true;
  auto add = [&](const char* name, std::tuple<std::size_t, std::size_t> r) {
    const auto [pairs, failed] = r;
    ok = ok && failed == 0 && pairs > 0;
    detail += "; " + std::string(name) + " " + std::to_string(pairs - failed) + "/" + std::to_string(pairs) + " (X, M)";
  };
  add("Q", corollary_pairs(Rationals{}));
  add("F2", corollary_pairs(PrimeField(2)));
  add("F3", corollary_pairs(PrimeField(3)));
  return {ok, detail};
}

Outcome criterion5() {
  SweepSpec s;
  s.groups = kSmallH;
  s.outer_left = s.outer_right = {"C1", "C2"};
  s.max_index = 1024;  // every subgroup
  s.dim_cap = 4;
  const auto t0 = Clock::now();
  std::size_t orbit_bad = 0, stab_bad = 0, dim_bad = 0;
  auto [cases, failed, first] =
      run_sweep<Rationals>(s, Rationals{}, [&](const SweepCaseInfo&, const TheoremCase<Rationals>& c) {
        auto sc = check_structure(c);
        orbit_bad += sc.orbits != sc.double_cosets;
        stab_bad += !sc.stabilizers_match;
        dim_bad += !sc.component_dims_match;
        return sc.ok();
      });
  return {failed == 0 && cases > 0,
          "|H| <= 8, K,G in {C1,C2}, all subgroups: " + tally(cases, failed, first) + " (orbit count mismatches " +
              std::to_string(orbit_bad) + ", stabilizer " + std::to_string(stab_bad) + ", component dim " +
              std::to_string(dim_bad) + ") in " + fmt_seconds(since(t0))};
}

Outcome criterion6() {
  SweepSpec s;
  s.groups = kSmallH;
  s.outer_left = s.outer_right = {"C1"};
  s.max_index = 64;
  s.dim_cap = 8;
  const auto t0 = Clock::now();
  auto [cases, failed, first] =
      run_sweep<Rationals>(s, Rationals{}, [](const SweepCaseInfo&, const TheoremCase<Rationals>& c) {
        return compare_with_mackey(c).ok();
      });
  return {failed == 0 && cases > 0, "K = G = 1, |H| <= 8, characters against the Res/Ind double coset formula: " +
                                        tally(cases, failed, first) + " in " + fmt_seconds(since(t0))};
}

Outcome criterion7() {
  const std::vector<std::string> stated{"2", "0", "0", "0"};
  const auto t0 = Clock::now();
  auto c = build_case(CaseSpec{}, Rationals{});
  CaseOptions opt;
  opt.modes = {Mode::character, Mode::constructive};
  const auto r = verify_theorem_case(c, opt);
  const double secs = since(t0);

  // independent count: fixed points of x -> h x g^-1 on C2, per class of C2 x C2
  std::vector<std::string> fixed;
  const auto& kg = *c.kg;
  for (const auto& cls : conjugacy_classes(*kg.group())) {
    const auto h = kg.first(cls.front()), g = kg.second(cls.front());
    int n = 0;
    for (Elem x = 0; x < 2; ++x) n += kg.left()->mul(h, kg.left()->mul(x, kg.left()->inv(g))) == x;
    fixed.push_back(std::to_string(n));
  }
  auto show = [](const std::vector<std::string>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s + ")";
  };
  const bool dims = r.lhs_dim == 2 && r.rhs_dim == 2;
  const bool iso = r.verdicts.size() == 2 && r.verdicts[1].pass;
  const bool chars = r.lhs_character == stated && r.rhs_character == stated;
  const bool fast = secs < kWorkedExampleBudgetSeconds;
  std::string detail = "dims " + std::to_string(r.lhs_dim) + "/" + std::to_string(r.rhs_dim) + ", character " +
                       show(r.lhs_character) + " vs stated " + show(stated) + ", fixed-point count " + show(fixed) +
                       ", constructive iso " + (iso ? "found" : "not found") + ", " + fmt_seconds(secs) + " (< " +
                       fmt_seconds(kWorkedExampleBudgetSeconds) + ")";
  if (!chars && r.lhs_character == fixed)
    detail += "; the stated vector has inner product 1/2 with the trivial character, so no module has it";
  return {dims && chars && iso && fast, detail};
}

Outcome criterion8() {
  SweepSpec s;
  s.groups = {"C2", "C3", "S3"};
  s.max_index = 12;
  s.dim_cap = 6;
  std::size_t transport_cases = 0, transport_silent = 0, table_cases = 0, table_silent = 0, table_skipped = 0;
  auto probe = [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    SweepEnumerator<F> en(s, field);
    en.for_each([&](const SweepCaseInfo&, const TheoremCase<F>& c) {
      CaseOptions opt;
      opt.modes = {Mode::chain};
      opt.corrupt.transport = true;
      ++transport_cases;
      if (verify_theorem_case(c, opt).pass) ++transport_silent;
      if (transitive_biset(c.y).biset->size() < 2 && transitive_biset(c.x).biset->size() < 2) {
        ++table_skipped;  // no entry to redirect
        return true;
      }
      opt.corrupt = {};
      opt.corrupt.action_table = true;
      ++table_cases;
      if (verify_theorem_case(c, opt).pass) ++table_silent;
      return true;
    });
  };
  probe(Rationals{});
  probe(PrimeField(2));
  // the hooks fire where they should: functoriality and biset validation
  auto c = build_case(CaseSpec{}, Rationals{});
  auto mf = functor_from_module(transitive_biset(c.x), c.m);
  bool functoriality_caught = false, validation_caught = false;
  try {
    corrupt_transport(mf).check_functoriality();
  } catch (const AssertionFailure&) {
    functoriality_caught = true;
  }
  try {
    corrupt_biset(*transitive_biset(c.x).biset);
  } catch (const AssertionFailure&) {
    validation_caught = true;
  }
  const bool ok = transport_silent == 0 && table_silent == 0 && transport_cases > 0 && table_cases > 0 &&
                  functoriality_caught && validation_caught;
  return {ok, "corrupted transport: " + std::to_string(transport_cases - transport_silent) + "/" +
                  std::to_string(transport_cases) + " fail; corrupted action table: " +
                  std::to_string(table_cases - table_silent) + "/" + std::to_string(table_cases) + " fail (" +
                  std::to_string(table_skipped) + " one-point cases have no entry to corrupt); functoriality assertion " +
                  (functoriality_caught ? "raised" : "silent") + ", biset validation " +
                  (validation_caught ? "raised" : "silent")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7, criterion8};
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    const int n = std::atoi(argv[i]);
    if (n < 1 || n > static_cast<int>(criteria.size())) {
      std::cerr << "usage: acceptance [criterion ...]  (1-" << criteria.size() << ")\n";
      return 2;
    }
    selected.insert(n);
  }
  bool all = true;
  for (int n = 1; n <= static_cast<int>(criteria.size()); ++n) {
    if (!selected.empty() && !selected.count(n)) continue;
    Outcome o;
    try {
      o = criteria[n - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
