// binform: command-line front end for numerical types of subspaces of binary
// forms, Grassmannian strata, and rational curves with prescribed splitting
// type of the restricted tangent bundle.
//
// Exit status: 0 success, 1 mathematical verification failure, 2 usage or
// input error. Diagnostics go to stderr; results (canonical JSON with sorted
// keys, or TSV) go to stdout.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include "binform/json.hpp"
#include "binform/verify.hpp"

namespace {

using namespace binform;

constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct InputSource {
  std::string path;
  std::string inline_json;
};

void add_input_options(CLI::App *cmd, InputSource &src) {
  cmd->add_option("-i,--input", src.path,
                  "JSON file holding a FormSubspace (default: stdin)");
  cmd->add_option("--json", src.inline_json, "inline FormSubspace JSON");
}

Json read_input(const InputSource &src) {
  std::string text;
  if (!src.inline_json.empty()) {
    text = src.inline_json;
  } else if (!src.path.empty() && src.path != "-") {
    std::ifstream in(src.path);
    if (!in)
      throw InvalidArgument("cannot open input file '" + src.path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &ex) {
    throw InvalidArgument(std::string("input is not valid JSON: ") + ex.what());
  }
}

void emit(const Json &j) { std::cout << j.dump(2) << '\n'; }

std::vector<int> parse_int_list(const std::string &text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    } catch (const std::exception &) {
      throw InvalidArgument("malformed integer list '" + text + "'");
    }
  }
  if (out.empty())
    throw InvalidArgument("empty integer list");
  return out;
}

int cmd_classify(const InputSource &src) {
  const FormSubspace t = subspace_from_json(read_input(src));
  const TypeProfile p = type_profile(t);
  const auto indices = kronecker_left_indices(pencil_of(t));
  const bool agrees = indices == expected_left_indices(p.type);
  Json out = to_json(p.type);
  out["degree"] = t.degree;
  out["dim"] = t.dim();
  out["profile"] = p.dims;
  out["kronecker_left_indices"] = indices;
  out["kronecker_agrees"] = agrees;
  out["c_generated_part"] = to_json(c_generated_part(p));
  emit(out);
  if (!agrees) {
    std::cerr << "classify: Kronecker left indices disagree with the type\n";
    return kExitVerification;
  }
  return 0;
}

int cmd_strata(int d, int e, const std::string &format) {
  const auto rows = strata_table(d, e);
  if (format == "tsv") {
    std::cout << "tau\tdim\tdim_G\tdim_VT\tcodim\tis_generic\n";
    for (const auto &r : rows)
      std::cout << to_string(r.tau) << '\t' << r.tau.dim() << '\t' << r.dim_G
                << '\t' << r.dim_VT << '\t' << r.codim << '\t'
                << (r.is_generic ? "true" : "false") << '\n';
    return 0;
  }
  Json table = Json::array();
  for (const auto &r : rows)
    table.push_back(to_json(r));
  emit({{"d", d},
        {"e", e},
        {"grassmannian_dim", grassmannian_dim(d, e)},
        {"generic", to_json(generic_type(d, e))},
        {"strata", table}});
  return 0;
}

int cmd_splitting(const InputSource &src) {
  const FormSubspace t = subspace_from_json(read_input(src));
  const NumericalType tau = numerical_type(t);
  const CohomologyProfile prof = cohomology_profile(t);
  const SplittingType from_type = splitting_from_type(tau, t.degree);
  const SplittingType from_coh = splitting_from_cohomology(prof);
  const bool agree = from_type == from_coh;
  emit({{"type", to_json(tau)},
        {"profile", to_json(prof)},
        {"from_type", to_json(from_type)},
        {"from_cohomology", to_json(from_coh)},
        {"agree", agree}});
  if (!agree) {
    std::cerr << "splitting: the two routes disagree\n";
    return kExitVerification;
  }
  return 0;
}

int cmd_construct(int d, const std::string &twists, std::uint64_t seed,
                  int budget) {
  std::vector<int> values = parse_int_list(twists);
  std::sort(values.begin(), values.end(), std::greater<>());
  const SplittingType target{d, values};
  Rng rng = sub_rng(seed, 0);
  const ConstructedCurve built = construct_with_splitting(target, rng, budget);
  Json out = to_json(built.curve);
  out["type"] = to_json(built.type);
  out["splitting"] = to_json(target);
  out["profile"] = to_json(built.profile);
  out["seed"] = seed;
  emit(out);
  return 0;
}

int cmd_sample(int d, int e, int n, std::uint64_t seed, int jobs) {
  if (e < -1 || e >= d)
    throw InvalidArgument("sample: need -1 <= e <= d - 1");
  if (n < 0)
    throw InvalidArgument("sample: n must be >= 0");
  jobs = std::max(1, jobs);
  auto worker = [&](int first, int stride) {
    std::map<NumericalType, long> counts;
    for (int i = first; i < n; i += stride) {
      Rng rng = sub_rng(seed, static_cast<std::uint64_t>(i));
      const auto t = random_subspace(d, static_cast<std::size_t>(e + 1), rng);
      ++counts[numerical_type(t)];
    }
    return counts;
  };
  std::vector<std::future<std::map<NumericalType, long>>> parts;
  for (int w = 0; w < jobs; ++w)
    parts.push_back(std::async(jobs > 1 ? std::launch::async
                                        : std::launch::deferred,
                               worker, w, jobs));
  std::map<NumericalType, long> counts;
  for (auto &p : parts)
    for (const auto &[tau, c] : p.get())
      counts[tau] += c;
  Json freq = Json::array();
  for (const auto &[tau, c] : counts)
    freq.push_back({{"type", to_json(tau)}, {"count", c}});
  emit({{"d", d},
        {"e", e},
        {"n", n},
        {"seed", seed},
        {"generic", to_json(generic_type(d, e))},
        {"frequencies", freq}});
  return 0;
}

int cmd_verify(const VerifyOptions &opt, const std::string &format) {
  const VerifyReport report = run_verification(opt);
  if (format == "json") {
    Json checks = Json::array();
    for (const auto &c : report.checks)
      checks.push_back({{"name", c.name},
                        {"trials", c.trials},
                        {"failures", c.failures},
                        {"first_failure", c.first_failure}});
    emit({{"d_min", opt.d_min},
          {"d_max", opt.d_max},
          {"seed", opt.seed},
          {"samples", opt.samples},
          {"ok", report.ok()},
          {"checks", checks}});
  } else {
    std::cout << report.to_text();
  }
  if (!report.ok()) {
    std::cerr << "verify: invariant failures present\n";
    return kExitVerification;
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Numerical types of subspaces of binary forms and rational "
               "curves with prescribed restricted tangent bundle"};
  app.require_subcommand(1);

  std::uint64_t seed = kDefaultSeed;
  int d = 0;
  int e = 0;

  InputSource classify_src;
  auto *classify = app.add_subcommand(
      "classify", "numerical type, d^{-h} profile and Kronecker cross-check");
  add_input_options(classify, classify_src);

  std::string strata_format = "json";
  auto *strata = app.add_subcommand("strata", "table of strata of Gr(e+1, S^dU)");
  strata->add_option("--d", d, "degree")->required();
  strata->add_option("--e", e, "projective dimension of the subspaces")->required();
  strata->add_option("--format", strata_format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));

  auto *generic = app.add_subcommand("generic-type", "generic numerical type");
  generic->add_option("--d", d, "degree")->required();
  generic->add_option("--e", e, "projective dimension")->required();

  std::string type_text;
  auto *fixture = app.add_subcommand("fixture", "monomial subspace of a type");
  fixture->add_option("--d", d, "degree")->required();
  fixture->add_option("--type", type_text, "a,b1,b2,...")->required();

  InputSource splitting_src;
  auto *splitting = app.add_subcommand(
      "splitting", "restricted tangent bundle splitting via both routes");
  add_input_options(splitting, splitting_src);

  std::string twists;
  int budget = kDefaultRetryBudget;
  auto *construct = app.add_subcommand(
      "construct", "rational curve with a prescribed splitting type");
  construct->add_option("--d", d, "degree")->required();
  construct->add_option("--splitting", twists, "a1,a2,...")->required();
  construct->add_option("--seed", seed, "random seed");
  construct->add_option("--retry-budget", budget, "draws before giving up");

  int n = 100;
  int jobs = 1;
  auto *sample = app.add_subcommand("sample", "type frequencies of random subspaces");
  sample->add_option("--d", d, "degree")->required();
  sample->add_option("--e", e, "projective dimension")->required();
  sample->add_option("--n", n, "number of random subspaces");
  sample->add_option("--seed", seed, "random seed");
  sample->add_option("--jobs", jobs, "worker threads");

  VerifyOptions vopt;
  std::string verify_format = "text";
  auto *verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--d-min", vopt.d_min, "smallest degree");
  verify->add_option("--d-max", vopt.d_max, "largest degree");
  verify->add_option("--samples", vopt.samples, "random trials per case");
  verify->add_option("--seed", vopt.seed, "random seed");
  verify->add_option("--jobs", vopt.jobs, "worker threads");
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp &ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError &ex) {
    app.exit(ex);
    return kExitUsage;
  }

  try {
    if (*classify)
      return cmd_classify(classify_src);
    if (*strata)
      return cmd_strata(d, e, strata_format);
    if (*generic) {
      emit(to_json(generic_type(d, e)));
      return 0;
    }
    if (*fixture) {
      emit(to_json(monomial_fixture(d, parse_numerical_type(type_text))));
      return 0;
    }
    if (*splitting)
      return cmd_splitting(splitting_src);
    if (*construct)
      return cmd_construct(d, twists, seed, budget);
    if (*sample)
      return cmd_sample(d, e, n, seed, jobs);
    if (*verify) {
      return cmd_verify(vopt, verify_format);
    }
  } catch (const InvalidArgument &ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const InternalInconsistency &ex) {
    std::cerr << "verification failure: " << ex.what() << '\n';
    return kExitVerification;
  } catch (const BudgetExhausted &ex) {
    std::cerr << "verification failure: " << ex.what() << '\n';
    return kExitVerification;
  }
  return kExitUsage;
}
