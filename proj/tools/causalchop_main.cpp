// causalchop: exact posteriority, string chopping and Wick expansion CLI.
//
// Exit codes: 0 ok, 1 usage/parse error, 2 configuration on the string
// diagonal, 3 refinement limit exceeded, 4 verification/comparison failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "causalchop/json_io.hpp"
#include "causalchop/stratum.hpp"

namespace cc = causalchop;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDiagonal = 2;
constexpr int kExitRefinement = 3;
constexpr int kExitVerification = 4;

struct CommonOpts {
  std::string input;
  std::string output;
  int refine_limit = -1;
  int jobs = -1;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool input_required = true) {
  auto* in = cmd->add_option("--input", o.input, "input JSON path");
  if (input_required) in->required();
  cmd->add_option("--output", o.output, "output path (default: stdout)");
  cmd->add_option("--refine-limit", o.refine_limit, "bisection rounds per segment");
  cmd->add_option("--jobs", o.jobs, "kernel concurrency width");
  cmd->add_option_function<std::uint64_t>(
      "--seed",
      [&o](const std::uint64_t& v) {
        o.seed = v;
        o.seed_set = true;
      },
      "seed for randomized self-test corpora");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cc::ParseError("cannot open input file '" + path + "'", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

cc::ConfigFile load_config(const CommonOpts& o) {
  cc::ConfigFile cfg = cc::parse_config(slurp(o.input));
  if (o.refine_limit > 0) cfg.options.refine_limit = o.refine_limit;
  if (o.jobs > 0) {
    cfg.options.jobs = o.jobs;
  } else if (const char* env = std::getenv("CAUSALCHOP_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) cfg.options.jobs = j;
  }
  if (o.seed_set) cfg.options.seed = o.seed;
  return cfg;
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(o.output);
  out << text << "\n";
}

// The run report wraps every command's outputs. Wall time goes to stderr so
// reports stay byte-identical across runs.
std::string wrap_report(const std::string& command, const std::string& input_text,
                        ojson outputs, const std::string& verification) {
  ojson rep;
  rep["command"] = command;
  rep["input_hash"] = cc::fnv1a_hex(input_text);
  rep["outputs"] = std::move(outputs);
  rep["verification"] = verification;
  return rep.dump(2);
}

int cmd_classify(const CommonOpts& o) {
  const std::string text = slurp(o.input);
  const cc::ConfigFile cfg = load_config(o);
  ojson out;
  ojson dirs = ojson::array();
  for (const auto& s : cfg.strings)
    dirs.push_back(cc::to_string(cc::causal_class(s.dir)));
  out["direction_classes"] = std::move(dirs);
  const size_t n = cfg.strings.size();
  ojson spans = ojson::array();
  ojson comp = ojson::array();
  for (size_t i = 0; i < n; ++i) {
    ojson span_row = ojson::array();
    ojson comp_row = ojson::array();
    for (size_t j = 0; j < n; ++j) {
      if (i == j) {
        span_row.push_back(nullptr);
        comp_row.push_back(nullptr);
        continue;
      }
      span_row.push_back(cc::to_string(cc::span_class(cfg.strings[i].dir, cfg.strings[j].dir)));
      if (cc::strings_disjoint(cfg.strings[i], cfg.strings[j]))
        comp_row.push_back(cc::to_string(cc::compare(cc::Region::whole(cfg.strings[i]),
                                                     cc::Region::whole(cfg.strings[j]))));
      else
        comp_row.push_back("Intersecting");
    }
    spans.push_back(std::move(span_row));
    comp.push_back(std::move(comp_row));
  }
  out["span_classes"] = std::move(spans);
  out["compare_matrix"] = std::move(comp);
  emit(o, wrap_report("classify", text, std::move(out), "None"));
  return kExitOk;
}

int cmd_chop(const CommonOpts& o, int pair_i, int pair_j, bool all) {
  const std::string text = slurp(o.input);
  const cc::ConfigFile cfg = load_config(o);
  if (all) {
    cc::ChopOptions opts;
    opts.refine_limit = cfg.options.refine_limit;
    opts.jobs = cfg.options.jobs;
    const auto [chopping, table] = cc::chop_n(cfg.strings, opts);
    const cc::VerifyReport report = cc::verify_chopping(cfg.strings, chopping, table);
    emit(o, cc::chopping_certificate_json(cfg, chopping, table, report));
    return report.pass ? kExitOk : kExitVerification;
  }
  if (pair_i < 0 || pair_j < 0 || pair_i == pair_j ||
      pair_i >= static_cast<int>(cfg.strings.size()) ||
      pair_j >= static_cast<int>(cfg.strings.size()))
    throw CLI::ValidationError("--pair", "need two distinct string indices in range");
  const cc::TwoChopResult res =
      cc::chop_two(cfg.strings[static_cast<size_t>(pair_i)],
                   cfg.strings[static_cast<size_t>(pair_j)]);
  emit(o, cc::two_chop_json(cfg, pair_i, pair_j, res));
  return kExitOk;
}

int cmd_wick(const CommonOpts& o, const std::string& mode) {
  const std::string text = slurp(o.input);
  const cc::ConfigFile cfg = load_config(o);
  cc::ChopOptions opts;
  opts.refine_limit = cfg.options.refine_limit;
  opts.jobs = cfg.options.jobs;
  if (mode == "closed") {
    emit(o, cc::expression_to_json(cc::t_product_closed(cfg.strings)));
    return kExitOk;
  }
  if (mode == "recursive") {
    emit(o, cc::expression_to_json(cc::t_product_recursive(cfg.strings, opts)));
    return kExitOk;
  }
  if (mode != "compare")
    throw CLI::ValidationError("--mode", "expected closed|recursive|compare");
  const cc::WickExpression closed = cc::t_product_closed(cfg.strings);
  const cc::WickExpression recursive = cc::t_product_recursive(cfg.strings, opts);
  const bool equal = closed == recursive;
  ojson out;
  out["equal"] = equal;
  out["closed"] = ojson::parse(cc::expression_to_json(closed));
  out["recursive"] = ojson::parse(cc::expression_to_json(recursive));
  emit(o, wrap_report("wick", text, std::move(out), equal ? "Pass" : "Fail"));
  return equal ? kExitOk : kExitVerification;
}

int cmd_stratum(const CommonOpts& o, int pair_i, int pair_j) {
  const std::string text = slurp(o.input);
  const cc::ConfigFile cfg = load_config(o);
  if (cfg.strings.size() < 2)
    throw CLI::ValidationError("stratum", "need at least two strings");
  if (pair_i < 0) pair_i = 0;
  if (pair_j < 0) pair_j = 1;
  const auto& a = cfg.strings[static_cast<size_t>(pair_i)];
  const auto& b = cfg.strings[static_cast<size_t>(pair_j)];
  const cc::Stratum s = cc::stratum(a.base, a.dir, b.base, b.dir);
  ojson out;
  out["stratum"] = cc::to_string(s);
  if (const auto codim = cc::stratum_codimension(s))
    out["codimension"] = *codim;
  else
    out["codimension"] = nullptr;
  emit(o, wrap_report("stratum", text, std::move(out), "None"));
  return kExitOk;
}

int cmd_verify(const CommonOpts& o) {
  const std::string text = slurp(o.input);
  const cc::ChoppingCertificate cert = cc::parse_chopping_certificate(text);
  const cc::VerifyReport report =
      cc::verify_chopping(cert.config.strings, cert.chopping, cert.table);
  ojson out;
  out["pass"] = report.pass;
  out["structural_errors"] = report.structural_errors;
  int failed = 0;
  for (const auto& c : report.checks)
    if (!c.pass) ++failed;
  out["failed_tuples"] = failed;
  out["checked_tuples"] = report.checks.size();
  emit(o, wrap_report("verify", text, std::move(out), report.pass ? "Pass" : "Fail"));
  return report.pass ? kExitOk : kExitVerification;
}

int cmd_selftest(const CommonOpts& o) {
  // Deterministic end-to-end exercise of the kernel on built-in fixtures.
  using cc::ExactVector;
  using cc::Rational;
  using cc::Region;
  using cc::StringGeom;
  auto V = [](std::initializer_list<long> xs) {
    std::vector<Rational> c;
    for (long x : xs) c.emplace_back(x);
    return ExactVector(std::move(c));
  };
  bool pass = true;
  std::vector<std::string> lines;
  auto check = [&](bool ok, const std::string& what) {
    lines.push_back(std::string(ok ? "pass " : "FAIL ") + what);
    pass = pass && ok;
  };

  const StringGeom s(V({2, 0, 0, 1}), V({-3, 0, 5, 0}));
  const StringGeom sp(V({0, 0, 0, 0}), V({0, 0, 1, 0}));
  check(cc::compare(Region::whole(s), Region::whole(sp)) ==
            cc::CompareResult::Incomparable,
        "incomparable fixture");
  const cc::TwoChopResult two = cc::chop_two(s, sp);
  check(two.needs_cut() && two.cut->cut == Rational(1, 2), "two-string cut at 1/2");

  const std::vector<StringGeom> cyc = {StringGeom(V({0, 0, 0}), V({1, 4, 0})),
                                       StringGeom(V({0, 4, 0}), V({1, -2, 3})),
                                       StringGeom(V({0, 2, 3}), V({1, -2, -3}))};
  check(!cc::latest_member({Region::whole(cyc[0]), Region::whole(cyc[1]),
                            Region::whole(cyc[2])})
             .has_value(),
        "cyclic triple has no latest member");
  const auto [chopping, table] = cc::chop_n(cyc);
  check(cc::verify_chopping(cyc, chopping, table).pass, "cyclic triple certificate");
  check(cc::t_product_recursive(cyc) == cc::t_product_closed(cyc),
        "Wick uniqueness on the cyclic triple");
  check(cc::enumerate_graphs(5).size() == 26, "involution count I(5)");

  ojson out;
  out["checks"] = lines;
  emit(o, wrap_report("selftest", "", std::move(out), pass ? "Pass" : "Fail"));
  return pass ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Minkowski posteriority, string chopping and Wick expansions"};
  app.require_subcommand(1);

  CommonOpts classify_o, chop_o, wick_o, stratum_o, verify_o, selftest_o;
  std::vector<int> chop_pair;
  bool chop_all = false;
  std::vector<int> stratum_pair;
  std::string wick_mode = "closed";

  auto* classify = app.add_subcommand("classify", "causal/span classes and compare matrix");
  add_common(classify, classify_o);

  auto* chop = app.add_subcommand("chop", "chopping certificates");
  add_common(chop, chop_o);
  auto* pair_opt = chop->add_option("--pair", chop_pair, "two string indices")
                       ->expected(2);
  auto* all_opt = chop->add_flag("--all", chop_all, "chop the whole configuration");
  pair_opt->excludes(all_opt);

  auto* wick = app.add_subcommand("wick", "time-ordered Wick expansions");
  add_common(wick, wick_o);
  wick->add_option("--mode", wick_mode, "closed|recursive|compare");

  auto* strat = app.add_subcommand("stratum", "string-diagonal stratum of a pair");
  add_common(strat, stratum_o);
  strat->add_option("--pair", stratum_pair, "two string indices")->expected(2);

  auto* verify = app.add_subcommand("verify", "re-verify a chopping certificate");
  add_common(verify, verify_o);

  auto* selftest = app.add_subcommand("selftest", "run the built-in fixture suite");
  add_common(selftest, selftest_o, false);

  const auto started = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    app.parse(argc, argv);
    if (classify->parsed()) code = cmd_classify(classify_o);
    if (chop->parsed())
      code = cmd_chop(chop_o, chop_pair.size() == 2 ? chop_pair[0] : -1,
                      chop_pair.size() == 2 ? chop_pair[1] : -1, chop_all);
    if (wick->parsed()) code = cmd_wick(wick_o, wick_mode);
    if (strat->parsed())
      code = cmd_stratum(stratum_o, stratum_pair.size() == 2 ? stratum_pair[0] : -1,
                         stratum_pair.size() == 2 ? stratum_pair[1] : -1);
    if (verify->parsed()) code = cmd_verify(verify_o);
    if (selftest->parsed()) code = cmd_selftest(selftest_o);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const cc::OnDiagonal& e) {
    std::cerr << "error: " << e.what() << " (strings " << e.i << ", " << e.j << ")\n";
    return kExitDiagonal;
  } catch (const cc::RefinementLimitExceeded& e) {
    std::cerr << "error: " << e.what() << " (tuple";
    for (int a : e.tuple) std::cerr << " " << a;
    std::cerr << ")\n";
    return kExitRefinement;
  } catch (const cc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  std::cerr << "wall_time_ms " << elapsed.count() << "\n";
  return code;
}
