// Command-line front end: exact invariants, pair verification, sweeps.
// Exit codes: 0 checks hold, 2 a verified claim failed, 1 operational error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boxdom/bounds.hpp"
#include "boxdom/error.hpp"
#include "boxdom/graph6.hpp"
#include "boxdom/harness.hpp"
#include "boxdom/labeling.hpp"
#include "boxdom/product.hpp"
#include "boxdom/rational.hpp"
#include "boxdom/solver.hpp"

namespace {

using njson = nlohmann::ordered_json;
using namespace boxdom;

constexpr int kOk = 0;
constexpr int kOperational = 1;
constexpr int kFalsified = 2;

std::string ints_str(const std::vector<int>& v) {
  std::string s;
  for (int x : v) {
    if (!s.empty()) s += ' ';
    s += std::to_string(x);
  }
  return s;
}

std::string pairs_str(const ProductGraph& pr, const VertexSet& d) {
  std::string s;
  d.for_each([&](int v) {
    auto [gv, hv] = pr.coord(v);
    if (!s.empty()) s += ' ';
    s += '(' + std::to_string(gv) + ',' + std::to_string(hv) + ')';
  });
  return s;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* pass_fail(bool b) { return b ? "pass" : "FAIL"; }

njson opt_json(const std::optional<int>& v) {
  if (v) return *v;
  return nullptr;
}

SolveOptions budgeted(int budget_ms) {
  SolveOptions opt;
  opt.budget = std::chrono::milliseconds(budget_ms);
  return opt;
}

struct GlobalFlags {
  std::string format = "text";
  int budget_ms = 10000;
  uint64_t seed = 0;
  std::string policy = "deterministic";
};

// ---- gamma ----------------------------------------------------------------

int cmd_gamma(const std::string& arg, const GlobalFlags& fl) {
  Graph g = parse_graph_arg(arg);
  VertexSet d = min_dominating_set(g, budgeted(fl.budget_ms));
  std::string g6 = emit_graph6(g);
  if (fl.format == "json") {
    njson j{{"schema", 1},
            {"graph6", g6},
            {"order", g.order()},
            {"gamma", d.count()},
            {"witness", d.to_vector()}};
    std::cout << j.dump(2) << "\n";
  } else if (fl.format == "csv") {
    std::cout << "graph6,order,gamma,witness\n"
              << csv_escape(g6) << ',' << g.order() << ',' << d.count() << ','
              << csv_escape(ints_str(d.to_vector())) << "\n";
  } else {
    std::cout << "graph = " << g6 << " (order " << g.order() << ")\n"
              << "gamma = " << d.count() << "\n"
              << "witness = " << ints_str(d.to_vector()) << "\n";
  }
  return kOk;
}

// ---- gamma-sets -----------------------------------------------------------

int cmd_gamma_sets(const std::string& arg, const GlobalFlags& fl) {
  Graph g = parse_graph_arg(arg);
  std::vector<VertexSet> sets;
  enumerate_gamma_sets(
      g,
      [&](const VertexSet& s) {
        sets.push_back(s);
        return true;
      },
      budgeted(fl.budget_ms));
  int gamma = sets.empty() ? 0 : sets.front().count();
  if (fl.format == "json") {
    njson j{{"schema", 1},
            {"graph6", emit_graph6(g)},
            {"gamma", gamma},
            {"count", sets.size()},
            {"sets", njson::array()}};
    for (const auto& s : sets) j["sets"].push_back(s.to_vector());
    std::cout << j.dump(2) << "\n";
  } else if (fl.format == "csv") {
    std::cout << "set\n";
    for (const auto& s : sets)
      std::cout << csv_escape(ints_str(s.to_vector())) << "\n";
  } else {
    std::cout << "gamma = " << gamma << ", " << sets.size() << " set"
              << (sets.size() == 1 ? "" : "s") << "\n";
    for (const auto& s : sets) std::cout << ints_str(s.to_vector()) << "\n";
  }
  return kOk;
}

// ---- power ----------------------------------------------------------------

int cmd_power(const std::string& arg, const GlobalFlags& fl) {
  Graph g = parse_graph_arg(arg);
  PowerReport rep = power_report(g);
  if (fl.format == "json") {
    njson j{{"schema", 1},
            {"graph6", emit_graph6(g)},
            {"order", g.order()},
            {"gamma", rep.gamma},
            {"num_gamma_sets", rep.num_gamma_sets},
            {"witness", rep.witness_set.to_vector()},
            {"pi_closed", rep.power_closed},
            {"pi_open", rep.power_open},
            {"agree", rep.agree}};
    std::cout << j.dump(2) << "\n";
  } else if (fl.format == "csv") {
    std::cout << "graph6,order,gamma,num_gamma_sets,witness,pi_closed,pi_open,"
                 "agree\n"
              << csv_escape(emit_graph6(g)) << ',' << g.order() << ','
              << rep.gamma << ',' << rep.num_gamma_sets << ','
              << csv_escape(ints_str(rep.witness_set.to_vector())) << ','
              << rep.power_closed << ',' << rep.power_open << ','
              << (rep.agree ? "true" : "false") << "\n";
  } else {
    std::cout << "graph = " << emit_graph6(g) << " (order " << g.order()
              << ")\n"
              << "gamma = " << rep.gamma << " (" << rep.num_gamma_sets
              << " gamma-sets)\n"
              << "pi_closed = " << rep.power_closed << " (witness "
              << ints_str(rep.witness_set.to_vector()) << ")\n"
              << "pi_open = " << rep.power_open << "\n"
              << "agree = " << yes_no(rep.agree) << "\n";
  }
  return kOk;
}

// ---- product-gamma --------------------------------------------------------

int cmd_product_gamma(const std::string& ag, const std::string& ah,
                      const GlobalFlags& fl) {
  Graph g = parse_graph_arg(ag);
  Graph h = parse_graph_arg(ah);
  ProductGraph pr(g, h);
  VertexSet d = min_dominating_set(pr.base(), budgeted(fl.budget_ms));
  if (fl.format == "json") {
    njson witness = njson::array();
    d.for_each([&](int v) {
      auto [gv, hv] = pr.coord(v);
      witness.push_back({gv, hv});
    });
    njson j{{"schema", 1},
            {"g_graph6", emit_graph6(g)},
            {"h_graph6", emit_graph6(h)},
            {"product_order", pr.base().order()},
            {"gamma", d.count()},
            {"witness", witness}};
    std::cout << j.dump(2) << "\n";
  } else if (fl.format == "csv") {
    std::cout << "g_graph6,h_graph6,product_order,gamma,witness\n"
              << csv_escape(emit_graph6(g)) << ',' << csv_escape(emit_graph6(h))
              << ',' << pr.base().order() << ',' << d.count() << ','
              << csv_escape(pairs_str(pr, d)) << "\n";
  } else {
    std::cout << "G = " << emit_graph6(g) << ", H = " << emit_graph6(h)
              << ", product order " << pr.base().order() << "\n"
              << "gamma = " << d.count() << "\n"
              << "witness = " << pairs_str(pr, d) << "\n";
  }
  return kOk;
}

// ---- verify ---------------------------------------------------------------

njson record_json(const InstanceRecord& r) {
  njson j;
  j["schema"] = 1;
  j["g_graph6"] = r.g6_g;
  j["h_graph6"] = r.g6_h;
  j["status"] = status_name(r.status);
  j["gamma_g"] = opt_json(r.gamma_g);
  j["gamma_h"] = opt_json(r.gamma_h);
  j["pi_closed"] = opt_json(r.pi_closed);
  j["pi_open"] = opt_json(r.pi_open);
  j["delta_g"] = opt_json(r.delta_g);
  j["gamma_product"] = opt_json(r.gamma_product);
  if (r.bound) {
    const BoundReport& b = *r.bound;
    bool have = r.gamma_product.has_value();
    auto one = [&](const Rat& rhs, bool holds) {
      njson o{{"rhs", rat_str(rhs)}};
      o["holds"] = have ? njson(holds) : njson(nullptr);
      return o;
    };
    j["bounds"] = njson{{"vizing", one(b.vizing_rhs, b.vizing_holds)},
                        {"suen_tarr", one(b.suen_tarr_rhs, b.suen_tarr_holds)},
                        {"pi_bound", one(b.pi_bound_rhs, b.pi_bound_holds)},
                        {"gamma_bound",
                         one(b.gamma_bound_rhs, b.gamma_bound_holds)},
                        {"delta_bound",
                         one(b.delta_bound_rhs, b.delta_bound_holds)}};
    j["improves_suen_tarr"] = b.improves_suen_tarr;
  } else {
    j["bounds"] = nullptr;
    j["improves_suen_tarr"] = nullptr;
  }
  auto opt_bool = [](const std::optional<bool>& v) {
    return v ? njson(*v) : njson(nullptr);
  };
  j["claim1"] = opt_bool(r.claim1);
  j["claim2"] = opt_bool(r.claim2);
  j["projection_all"] = opt_bool(r.projection_all);
  if (r.eq3) {
    j["eq3"] = njson{{"count_lb", r.eq3->count_lb},
                     {"count_identity", r.eq3->count_identity},
                     {"label_cap", r.eq3->label_cap},
                     {"profile_feasible", r.eq3->profile_feasible}};
  } else {
    j["eq3"] = nullptr;
  }
  j["max_label_size"] = opt_json(r.max_label);
  j["conflicts"] = opt_json(r.conflict_count);
  j["falsification"] = r.falsification();
  j["failed_checks"] = r.failed_checks();
  if (auto t = r.tightness()) j["pi_bound_tightness"] = *t;
  return j;
}

void print_record_text(const InstanceRecord& r) {
  std::cout << "G = " << r.g6_g;
  if (r.gamma_g)
    std::cout << "  gamma " << *r.gamma_g << "  pi_closed "
              << (r.pi_closed ? std::to_string(*r.pi_closed) : "?")
              << "  pi_open "
              << (r.pi_open ? std::to_string(*r.pi_open) : "?") << "  delta "
              << (r.delta_g ? std::to_string(*r.delta_g) : "?");
  std::cout << "\nH = " << r.g6_h;
  if (r.gamma_h) std::cout << "  gamma " << *r.gamma_h;
  std::cout << "\nstatus = " << status_name(r.status) << "\n";
  if (r.gamma_product)
    std::cout << "gamma(G box H) = " << *r.gamma_product << "\n";
  if (r.bound) {
    const BoundReport& b = *r.bound;
    bool have = r.gamma_product.has_value();
    auto row = [&](const char* name, const Rat& rhs, bool holds) {
      std::cout << "  " << name;
      for (std::size_t i = std::string(name).size(); i < 14; ++i)
        std::cout << ' ';
      std::cout << rat_str(rhs);
      if (have) std::cout << "  holds: " << yes_no(holds);
      std::cout << "\n";
    };
    std::cout << "bounds (rhs <= gamma of the product?):\n";
    row("vizing", b.vizing_rhs, b.vizing_holds);
    row("suen-tarr", b.suen_tarr_rhs, b.suen_tarr_holds);
    row("pi-bound", b.pi_bound_rhs, b.pi_bound_holds);
    row("gamma-bound", b.gamma_bound_rhs, b.gamma_bound_holds);
    row("delta-bound", b.delta_bound_rhs, b.delta_bound_holds);
    std::cout << "  improves suen-tarr: " << yes_no(b.improves_suen_tarr)
              << "\n";
  }
  if (r.claim1 || r.claim2 || r.projection_all || r.eq3) {
    std::cout << "checks:\n";
    auto line = [](const char* name, bool ok) {
      std::cout << "  " << name;
      for (std::size_t i = std::string(name).size(); i < 22; ++i)
        std::cout << ' ';
      std::cout << pass_fail(ok) << "\n";
    };
    if (r.claim1) line("claim1", *r.claim1);
    if (r.claim2) line("claim2", *r.claim2);
    if (r.projection_all) line("projections", *r.projection_all);
    if (r.eq3) {
      line("eq3 count lb", r.eq3->count_lb);
      line("eq3 count identity", r.eq3->count_identity);
      line("eq3 label cap", r.eq3->label_cap);
      line("eq3 profile feasible", r.eq3->profile_feasible);
    }
    if (r.conflict_count)
      std::cout << "  conflicts            " << *r.conflict_count << "\n";
    if (r.max_label)
      std::cout << "  max label size       " << *r.max_label << "\n";
  }
  if (auto t = r.tightness())
    std::cout << "pi-bound tightness = " << *t << " (0 means tight)\n";
  if (!r.pipeline_complete()) {
    std::cout << "verdict: pipeline incomplete (" << status_name(r.status)
              << ")\n";
  } else if (r.falsification()) {
    std::cout << "verdict: FALSIFIED (";
    bool first = true;
    for (const auto& c : r.failed_checks()) {
      if (!first) std::cout << ", ";
      std::cout << c;
      first = false;
    }
    std::cout << ")\n";
  } else {
    std::cout << "verdict: all checks hold\n";
  }
}

int record_exit(const InstanceRecord& r) {
  if (!r.pipeline_complete()) return kOperational;
  return r.falsification() ? kFalsified : kOk;
}

int cmd_verify(const std::string& ag, const std::string& ah,
               const GlobalFlags& fl) {
  Graph g = parse_graph_arg(ag);
  Graph h = parse_graph_arg(ah);
  RunOptions opt;
  opt.budget_ms = fl.budget_ms;
  opt.policy = parse_policy(fl.policy);
  opt.seed = fl.seed;
  InstanceRecord rec = run_instance(g, h, opt);
  if (fl.format == "json")
    std::cout << record_json(rec).dump(2) << "\n";
  else if (fl.format == "csv")
    std::cout << to_csv({rec});
  else
    print_record_text(rec);
  return record_exit(rec);
}

// ---- trace ----------------------------------------------------------------

int cmd_trace(const std::string& ag, const std::string& ah,
              const std::string& out_path, const GlobalFlags& fl) {
  Graph g = parse_graph_arg(ag);
  Graph h = parse_graph_arg(ah);
  RunOptions opt;
  opt.budget_ms = fl.budget_ms;
  opt.policy = parse_policy(fl.policy);
  opt.seed = fl.seed;
  opt.always_trace = true;
  InstanceRecord rec = run_instance(g, h, opt);
  if (rec.trace.empty()) {
    std::cerr << "error: no trace produced (status " << status_name(rec.status)
              << ")\n";
    return kOperational;
  }
  if (out_path == "-") {
    std::cout << rec.trace;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return kOperational;
    }
    f << rec.trace;
    std::cout << "trace written to " << out_path << "\n";
  }
  // The verdict goes to stderr so `trace G H > file.json` stays pure JSON.
  if (rec.falsification()) {
    std::cerr << "verdict: FALSIFIED (";
    bool first = true;
    for (const auto& c : rec.failed_checks()) {
      if (!first) std::cerr << ", ";
      std::cerr << c;
      first = false;
    }
    std::cerr << ")\n";
    return kFalsified;
  }
  std::cerr << "verdict: all checks hold\n";
  return kOk;
}

// ---- sweep ----------------------------------------------------------------

int cmd_sweep(SweepConfig cfg, const GlobalFlags& fl) {
  SweepResult res = run_sweep(cfg);
  write_sweep_outputs(cfg, res);
  if (fl.format == "json") {
    std::cout << res.json;
  } else {
    int ok = 0, timeout = 0, skipped = 0;
    for (const auto& r : res.records) {
      if (r.status == InstanceStatus::ok) ++ok;
      else if (r.status == InstanceStatus::timeout) ++timeout;
      else ++skipped;
    }
    std::cout << "instances " << res.records.size() << ": " << ok << " ok, "
              << timeout << " timeout, " << skipped << " skipped; "
              << "falsifications " << res.falsifications << "\n"
              << "wrote " << cfg.csv_out << " and " << cfg.json_out << "\n";
  }
  return res.falsifications > 0 ? kFalsified : kOk;
}

// ---- prop1 ----------------------------------------------------------------

int cmd_prop1(int n, const GlobalFlags& fl) {
  Prop1Result closed = prop1_max(n);
  bool witness_ok = profile_feasible(closed.witness) &&
                    profile_objective(closed.witness) == closed.value;
  std::optional<Prop1Result> oracle;
  if (n <= 8) oracle = prop1_oracle(n);
  bool agree = !oracle || oracle->value == closed.value;
  auto profile_strs = [](const Profile& t) {
    std::vector<std::string> out;
    out.reserve(t.size());
    for (const Rat& x : t) out.push_back(rat_str(x));
    return out;
  };
  if (fl.format == "json") {
    njson j{{"schema", 1},
            {"n", n},
            {"max", rat_str(closed.value)},
            {"witness", profile_strs(closed.witness)},
            {"witness_feasible", witness_ok}};
    j["oracle_max"] = oracle ? njson(rat_str(oracle->value)) : njson(nullptr);
    j["agree"] = oracle ? njson(agree) : njson(nullptr);
    if (n >= 3) {
      Profile ray = prop1_unbounded_ray(n);
      j["relaxation_ray"] = profile_strs(ray);
      j["ray_certifies_unbounded"] = is_unbounded_ray(ray);
    }
    std::cout << j.dump(2) << "\n";
  } else if (fl.format == "csv") {
    std::cout << "n,max,oracle_max,agree\n"
              << n << ',' << rat_str(closed.value) << ','
              << (oracle ? rat_str(oracle->value) : "") << ','
              << (oracle ? (agree ? "true" : "false") : "") << "\n";
  } else {
    std::cout << "n = " << n << "\n"
              << "max = " << rat_str(closed.value) << "\n"
              << "witness = ";
    bool first = true;
    for (const Rat& x : closed.witness) {
      if (!first) std::cout << ' ';
      std::cout << rat_str(x);
      first = false;
    }
    std::cout << "\nwitness feasible = " << yes_no(witness_ok) << "\n";
    if (oracle)
      std::cout << "oracle max = " << rat_str(oracle->value)
                << " (agree: " << yes_no(agree) << ")\n";
    else
      std::cout << "oracle skipped (n > 8)\n";
    if (n >= 3) {
      Profile ray = prop1_unbounded_ray(n);
      std::cout << "without t >= 0 the program is unbounded; ray =";
      for (const Rat& x : ray) std::cout << ' ' << rat_str(x);
      std::cout << " (certifies: " << yes_no(is_unbounded_ray(ray)) << ")\n";
    }
  }
  return (witness_ok && agree) ? kOk : kFalsified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"domination workbench for Cartesian products"};
  app.require_subcommand(1);

  GlobalFlags fl;
  auto* o_format =
      app.add_option("--format", fl.format, "output format (text, json, csv)")
          ->check(CLI::IsMember({"text", "json", "csv"}));
  auto* o_budget = app.add_option("--budget-ms", fl.budget_ms,
                                  "budget per exact computation, milliseconds")
                       ->check(CLI::PositiveNumber);
  auto* o_seed =
      app.add_option("--seed", fl.seed, "seed for the seeded-random policy");
  auto* o_policy =
      app.add_option("--policy", fl.policy,
                     "label alteration policy (deterministic, seeded-random)")
          ->check(CLI::IsMember(
              {"deterministic", "seeded-random", "seeded_random"}));
  (void)o_format;

  std::string arg_g, arg_h, cfg_path, out_path = "-";
  std::string csv_path, json_path;
  int prop1_n = 2, parallelism = 0;

  auto* c_gamma =
      app.add_subcommand("gamma", "exact domination number of one graph");
  c_gamma->add_option("graph", arg_g, "graph6 string or family token (P4, C6, "
                                      "K5, S3, g6:...)")
      ->required();

  auto* c_sets =
      app.add_subcommand("gamma-sets", "all minimum dominating sets");
  c_sets->add_option("graph", arg_g, "graph6 string or family token")
      ->required();

  auto* c_power = app.add_subcommand(
      "power", "gamma, closed and open power, lex-least minimum-allegiance "
               "witness");
  c_power->add_option("graph", arg_g, "graph6 string or family token")
      ->required();

  auto* c_prod = app.add_subcommand("product-gamma",
                                    "exact gamma of the Cartesian product");
  c_prod->add_option("G", arg_g, "first factor")->required();
  c_prod->add_option("H", arg_h, "second factor")->required();

  auto* c_verify = app.add_subcommand(
      "verify", "full pipeline on one pair: labeling, claims, bounds");
  c_verify->add_option("G", arg_g, "first factor")->required();
  c_verify->add_option("H", arg_h, "second factor")->required();

  auto* c_trace = app.add_subcommand(
      "trace", "run one pair and write the labeling trace JSON");
  c_trace->add_option("G", arg_g, "first factor")->required();
  c_trace->add_option("H", arg_h, "second factor")->required();
  c_trace->add_option("--out", out_path, "output path, - for stdout");

  auto* c_sweep =
      app.add_subcommand("sweep", "run a configured corpus sweep");
  c_sweep->add_option("--config", cfg_path, "sweep config file")
      ->required()
      ->check(CLI::ExistingFile);
  auto* o_csv = c_sweep->add_option("--csv", csv_path, "override csv_out");
  auto* o_json = c_sweep->add_option("--json", json_path, "override json_out");
  auto* o_par = c_sweep->add_option("--parallelism", parallelism,
                                    "worker threads (0: hardware)");

  auto* c_prop1 = app.add_subcommand(
      "prop1", "profile maximization: closed form vs vertex enumeration");
  c_prop1->add_option("--n", prop1_n, "number of profile coordinates")
      ->required()
      ->check(CLI::Range(2, 1 << 20));

  for (auto* sub : {c_gamma, c_sets, c_power, c_prod, c_verify, c_trace,
                    c_sweep, c_prop1})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kOperational;
  }

  try {
    if (c_gamma->parsed()) return cmd_gamma(arg_g, fl);
    if (c_sets->parsed()) return cmd_gamma_sets(arg_g, fl);
    if (c_power->parsed()) return cmd_power(arg_g, fl);
    if (c_prod->parsed()) return cmd_product_gamma(arg_g, arg_h, fl);
    if (c_verify->parsed()) return cmd_verify(arg_g, arg_h, fl);
    if (c_trace->parsed()) return cmd_trace(arg_g, arg_h, out_path, fl);
    if (c_sweep->parsed()) {
      SweepConfig cfg = parse_config_file(cfg_path);
      apply_env_overrides(cfg);
      if (o_budget->count()) cfg.budget_ms = fl.budget_ms;
      if (o_seed->count()) cfg.seed = fl.seed;
      if (o_policy->count()) cfg.policy = parse_policy(fl.policy);
      if (o_csv->count()) cfg.csv_out = csv_path;
      if (o_json->count()) cfg.json_out = json_path;
      if (o_par->count()) cfg.parallelism = parallelism;
      return cmd_sweep(cfg, fl);
    }
    if (c_prop1->parsed()) return cmd_prop1(prop1_n, fl);
  } catch (const TimeoutError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOperational;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOperational;
  }
  return kOperational;
}
