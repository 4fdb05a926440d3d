// bisets: verify, sweep and inspect the Mackey-type bimodule isomorphism.
//
// Exit codes: 0 pass, 1 verified failure, 2 usage error.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bisets/bisets.hpp"

namespace {

using namespace bisets;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto t = detail::trim(item);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

std::vector<Mode> parse_modes(const std::string& text) {
  std::vector<Mode> out;
  for (const auto& m : split_list(text)) out.push_back(parse_mode(m));
  if (out.empty()) throw SpecError("no mode given");
  return out;
}

void write_file(const std::filesystem::path& path, const Json& j) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw SpecError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

std::string case_file_name(std::size_t index) {
  std::string digits = std::to_string(index);
  if (digits.size() < 7) digits.insert(0, 7 - digits.size(), '0');
  return "case-" + digits + ".json";
}

// ---- verify ----

struct VerifyArgs {
  CaseSpec spec;
  std::string field = "Q";
  std::string modes = "char";
  std::uint64_t seed = 0x5eed;
  std::string out_dir;
  std::string corrupt;
  bool timings = false;
};

template <class F>
int run_verify(const VerifyArgs& a, const F& field) {
  const auto c = build_case(a.spec, field);
  CaseOptions opt;
  opt.modes = parse_modes(a.modes);
  opt.seed = a.seed;
  if (a.corrupt == "transport") opt.corrupt.transport = true;
  else if (a.corrupt == "action-table") opt.corrupt.action_table = true;
  else if (!a.corrupt.empty()) throw SpecError("unknown corruption '" + a.corrupt + "' (expected transport or action-table)");
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = verify_theorem_case(c, opt);
  ReportContext ctx{a.seed, opt.modes, std::nullopt};
  if (a.timings) ctx.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  auto info = describe_case(c, a.spec.k, a.spec.h, a.spec.g, a.spec.n, a.spec.m);
  const auto j = case_report(info, c, r, ctx);
  std::cout << j.dump(2) << '\n';
  if (!a.out_dir.empty()) write_file(std::filesystem::path(a.out_dir) / "report.json", j);
  return r.pass ? kPass : kFail;
}

// ---- sweep ----

struct SweepArgs {
  std::string groups;
  std::string fields = "Q";
  std::string modes = "char";
  std::string subsample_modes;
  std::size_t subsample_permille = 100;
  std::string modules = "trivial,perm,regular";
  std::uint64_t seed = 0x5eed;
  std::string out_dir;
  std::size_t max_index = 12;
  std::size_t dim_cap = 6;
  std::size_t case_cap = 0;
  std::size_t max_product_order = 0;
  bool timings = false;
  bool progress = false;
};

template <class F>
Json run_sweep_field(const SweepArgs& a, const SweepSpec& spec, const F& field, bool& all_pass) {
  SweepEnumerator<F> e(spec, field);
  const auto modes = parse_modes(a.modes);
  const auto extra = a.subsample_modes.empty() ? std::vector<Mode>{} : parse_modes(a.subsample_modes);
  if (a.subsample_permille > 1000) throw SpecError("--subsample-permille must be at most 1000");
  const std::string tag = field.tag().name();
  std::size_t cases = 0, passed = 0, sampled = 0;
  std::vector<std::size_t> failures;
  const auto t0 = std::chrono::steady_clock::now();
  e.for_each([&](const SweepCaseInfo& info, const TheoremCase<F>& c) {
    CaseOptions opt;
    opt.modes = modes;
    opt.seed = case_seed(a.seed, info.index);
    if (!extra.empty() && subsample_selected(a.seed, info.index, a.subsample_permille)) {
      ++sampled;
      for (auto m : extra)
        if (std::find(opt.modes.begin(), opt.modes.end(), m) == opt.modes.end()) opt.modes.push_back(m);
    }
    const auto c0 = std::chrono::steady_clock::now();
    const auto r = verify_theorem_case(c, opt);
    ++cases;
    if (r.pass) ++passed;
    else failures.push_back(info.index);
    if (!a.out_dir.empty()) {
      ReportContext ctx{opt.seed, opt.modes, std::nullopt};
      if (a.timings) ctx.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - c0).count();
      write_file(std::filesystem::path(a.out_dir) / tag / case_file_name(info.index), case_report(info, c, r, ctx));
    }
    if (a.progress && cases % 10000 == 0) std::cerr << tag << ": " << cases << " cases\n";
    return true;
  });
  all_pass = all_pass && failures.empty();
  const auto sk = e.skipped();
  Json j;
  j["field"] = tag;
  j["cases"] = cases;
  j["passed"] = passed;
  j["failed"] = failures.size();
  j["subsampled"] = sampled;
  constexpr std::size_t kListed = 100;
  Json fl = Json::array();
  for (std::size_t i = 0; i < failures.size() && i < kListed; ++i) fl.push_back(failures[i]);
  j["failures"] = fl;
  j["skipped"] = {{"subgroups_over_index", sk.subgroups_over_index},
                  {"modules_over_dim_cap", sk.modules_over_dim_cap},
                  {"products_over_order", sk.products_over_order}};
  if (a.timings) j["timings"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
  return j;
}

int run_sweep(const SweepArgs& a) {
  SweepSpec spec;
  spec.groups = split_list(a.groups);
  spec.max_index = a.max_index;
  spec.dim_cap = a.dim_cap;
  spec.modules = split_list(a.modules);
  spec.case_cap = a.case_cap;
  spec.max_product_order = a.max_product_order;
  const auto fields = split_list(a.fields);
  if (fields.empty()) throw SpecError("no field given");
  std::vector<FieldTag> tags;
  for (const auto& f : fields) tags.push_back(parse_field(f));
  parse_modes(a.modes);
  if (!a.subsample_modes.empty()) parse_modes(a.subsample_modes);

  Json summary;
  summary["schema"] = kSweepSummarySchema;
  summary["spec"] = {{"groups", spec.groups},
                     {"fields", fields},
                     {"modules", spec.modules},
                     {"modes", split_list(a.modes)},
                     {"subsample_modes", split_list(a.subsample_modes)},
                     {"subsample_permille", a.subsample_permille},
                     {"max_index", spec.max_index},
                     {"dim_cap", spec.dim_cap},
                     {"case_cap", spec.case_cap},
                     {"max_product_order", spec.max_product_order},
                     {"seed", a.seed}};
  bool all_pass = true;
  Json per_field = Json::array();
  std::size_t total = 0, passed = 0;
  for (const auto& tag : tags) {
    auto j = with_field(tag, [&](const auto& f) { return run_sweep_field(a, spec, f, all_pass); });
    total += j["cases"].get<std::size_t>();
    passed += j["passed"].get<std::size_t>();
    per_field.push_back(std::move(j));
  }
  summary["results"] = per_field;
  summary["cases"] = total;
  summary["passed"] = passed;
  summary["pass"] = all_pass;
  std::cout << summary.dump(2) << '\n';
  if (!a.out_dir.empty()) write_file(std::filesystem::path(a.out_dir) / "summary.json", summary);
  return all_pass ? kPass : kFail;
}

// ---- inspect ----

struct InspectArgs {
  std::string kind;
  std::string object;
  CaseSpec spec;
};

int run_inspect(const InspectArgs& a) {
  Json j;
  if (a.kind == "group") {
    if (a.object.empty()) throw SpecError("inspect group needs a group spec, e.g. 'inspect group S3'");
    j = group_inspect(build_group(a.object));
  } else if (a.kind == "subgroup") {
    auto amb = direct_product(build_group(a.spec.h), build_group(a.spec.g));
    j = subgroup_inspect(parse_product_subgroup(a.spec.x, amb));
  } else if (a.kind == "compose") {
    auto k = build_group(a.spec.k), h = build_group(a.spec.h), g = build_group(a.spec.g);
    auto y = parse_product_subgroup(a.spec.y, direct_product(k, h));
    auto x = parse_product_subgroup(a.spec.x, direct_product(h, g));
    j = compose_inspect(y, x, direct_product(k, g));
  } else {
    throw SpecError("unknown inspect kind '" + a.kind + "' (expected group, subgroup or compose)");
  }
  std::cout << j.dump(2) << '\n';
  return kPass;
}

void add_case_options(CLI::App* cmd, CaseSpec& s, bool with_modules) {
  cmd->add_option("--k", s.k, "group K")->capture_default_str();
  cmd->add_option("--h", s.h, "group H")->capture_default_str();
  cmd->add_option("--g", s.g, "group G")->capture_default_str();
  cmd->add_option("--y", s.y, "Y <= K x H: full, trivial, diag or (a,b),...")->capture_default_str();
  cmd->add_option("--x", s.x, "X <= H x G: full, trivial, diag or (a,b),...")->capture_default_str();
  if (with_modules) {
    cmd->add_option("--n", s.n, "module N of Y: trivial, perm, regular or random:<seed>")->capture_default_str();
    cmd->add_option("--m", s.m, "module M of X: trivial, perm, regular or random:<seed>")->capture_default_str();
    cmd->add_option("--dim-cap", s.dim_cap, "dimension budget for random modules")->capture_default_str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify the Mackey-type isomorphism for tensor products of induced bimodules."};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "verify one case and print its report");
  add_case_options(verify, va.spec, true);
  verify->add_option("--field", va.field, "Q or F<p>")->capture_default_str();
  verify->add_option("--mode", va.modes, "comma list of char, constructive, chain")->capture_default_str();
  verify->add_option("--seed", va.seed, "seed for the intertwiner search")->capture_default_str();
  verify->add_option("--out-dir", va.out_dir, "also write report.json here");
  verify->add_option("--corrupt", va.corrupt, "test hook: transport or action-table");
  verify->add_flag("--timings", va.timings, "include wall-clock timings (breaks byte-identical output)");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "verify every catalog case and print a summary");
  sweep->add_option("--groups", sa.groups, "comma list of groups (K, H, G all range over it)")->required();
  sweep->add_option("--field", sa.fields, "comma list of fields")->capture_default_str();
  sweep->add_option("--mode", sa.modes, "modes run on every case")->capture_default_str();
  sweep->add_option("--subsample-mode", sa.subsample_modes, "modes run on a deterministic subsample");
  sweep->add_option("--subsample-permille", sa.subsample_permille, "subsample size per thousand")->capture_default_str();
  sweep->add_option("--modules", sa.modules, "comma list of catalog modules")->capture_default_str();
  sweep->add_option("--seed", sa.seed, "seed for subsampling and searches")->capture_default_str();
  sweep->add_option("--out-dir", sa.out_dir, "write per-case reports and summary.json here");
  sweep->add_option("--max-index", sa.max_index, "largest subgroup index")->capture_default_str();
  sweep->add_option("--dim-cap", sa.dim_cap, "largest catalog module dimension")->capture_default_str();
  sweep->add_option("--case-cap", sa.case_cap, "stop after this many cases (0: all)")->capture_default_str();
  sweep->add_option("--max-product-order", sa.max_product_order, "skip larger products (0: no limit)")
      ->capture_default_str();
  sweep->add_flag("--timings", sa.timings, "include wall-clock timings (breaks byte-identical output)");
  sweep->add_flag("--progress", sa.progress, "report progress on stderr");

  InspectArgs ia;
  auto* inspect = app.add_subcommand("inspect", "dump a group, a product subgroup or a composed biset");
  inspect->add_option("kind", ia.kind, "group, subgroup or compose")->required();
  inspect->add_option("object", ia.object, "group spec for 'inspect group'");
  add_case_options(inspect, ia.spec, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (verify->parsed())
      return with_field(parse_field(va.field), [&](const auto& f) { return run_verify(va, f); });
    if (sweep->parsed()) return run_sweep(sa);
    return run_inspect(ia);
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const StructureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
