#include "boxdom/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "boxdom/decomposition.hpp"
#include "boxdom/error.hpp"
#include "boxdom/families.hpp"
#include "boxdom/graph6.hpp"
#include "boxdom/product.hpp"
#include "boxdom/solver.hpp"

namespace boxdom {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    std::string t = trim(cur);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

long parse_long(const std::string& v, const std::string& what) {
  try {
    size_t used = 0;
    long x = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ArgumentError(what + ": not an integer: '" + v + "'");
  }
}

}  // namespace

SweepConfig parse_config_text(const std::string& text,
                              const std::string& origin) {
  SweepConfig cfg;
  bool have_source = false, have_hlist = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ArgumentError(origin + ":" + std::to_string(lineno) +
                          ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    if (key == "source") {
      cfg.source = val;
      have_source = true;
    } else if (key == "h_list") {
      cfg.h_list = val;
      have_hlist = true;
    } else if (key == "max_product_order") {
      cfg.max_product_order = int(parse_long(val, key));
    } else if (key == "budget_ms") {
      cfg.budget_ms = int(parse_long(val, key));
    } else if (key == "seed") {
      cfg.seed = uint64_t(parse_long(val, key));
    } else if (key == "policy") {
      cfg.policy = parse_policy(val);
    } else if (key == "csv_out") {
      cfg.csv_out = val;
    } else if (key == "json_out") {
      cfg.json_out = val;
    } else if (key == "parallelism") {
      cfg.parallelism = int(parse_long(val, key));
    } else {
      throw ArgumentError(origin + ":" + std::to_string(lineno) +
                          ": unknown key '" + key + "'");
    }
  }
  if (!have_source) throw ArgumentError(origin + ": missing key 'source'");
  if (!have_hlist) throw ArgumentError(origin + ": missing key 'h_list'");
  if (cfg.budget_ms <= 0) throw ArgumentError("budget_ms must be positive");
  if (cfg.max_product_order < 1 ||
      cfg.max_product_order > VertexSet::kMaxBits)
    throw ArgumentError("max_product_order must be in [1, " +
                        std::to_string(VertexSet::kMaxBits) + "]");
  if (cfg.parallelism < 0)
    throw ArgumentError("parallelism must be nonnegative");
  return cfg;
}

SweepConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

void apply_env_overrides(SweepConfig& cfg) {
  if (const char* v = std::getenv("BOXDOM_BUDGET_MS")) {
    cfg.budget_ms = int(parse_long(v, "BOXDOM_BUDGET_MS"));
    if (cfg.budget_ms <= 0)
      throw ArgumentError("BOXDOM_BUDGET_MS must be positive");
  }
  if (const char* v = std::getenv("BOXDOM_PARALLELISM")) {
    cfg.parallelism = int(parse_long(v, "BOXDOM_PARALLELISM"));
    if (cfg.parallelism < 0)
      throw ArgumentError("BOXDOM_PARALLELISM must be nonnegative");
  }
}

std::vector<Graph> expand_source(const std::string& source) {
  std::string s = trim(source);
  if (s.rfind("corpus:", 0) == 0) return read_graph6_file(s.substr(7));
  std::vector<Graph> out;
  for (const std::string& tok : split_list(s))
    out.push_back(parse_graph_arg(tok));
  return out;
}

Graph parse_graph_arg(const std::string& arg) {
  try {
    return parse_graph_token(arg);
  } catch (const ArgumentError&) {
    // Not a family token; fall through to raw graph6.
  }
  return parse_graph6(arg);
}

const char* status_name(InstanceStatus s) {
  switch (s) {
    case InstanceStatus::ok: return "ok";
    case InstanceStatus::timeout: return "timeout";
    default: return "skipped";
  }
}

bool InstanceRecord::falsification() const {
  return !failed_checks().empty();
}

std::vector<std::string> InstanceRecord::failed_checks() const {
  std::vector<std::string> out;
  if (claim1 && !*claim1) out.push_back("claim1");
  if (claim2 && !*claim2) out.push_back("claim2");
  if (projection_all && !*projection_all) out.push_back("projection");
  if (eq3) {
    if (!eq3->count_lb) out.push_back("eq3_count_lb");
    if (!eq3->count_identity) out.push_back("eq3_count_identity");
    if (!eq3->label_cap) out.push_back("eq3_label_cap");
    if (!eq3->profile_feasible) out.push_back("eq3_profile_feasible");
  }
  if (conflict_count && *conflict_count > 0) out.push_back("conflicts");
  return out;
}

std::optional<int> InstanceRecord::tightness() const {
  if (!gamma_product || !bound) return std::nullopt;
  return int(Int(*gamma_product) - rat_ceil(bound->pi_bound_rhs));
}

namespace {

std::chrono::steady_clock::duration remaining_or_throw(
    std::chrono::steady_clock::time_point deadline) {
  auto left = deadline - std::chrono::steady_clock::now();
  if (left <= std::chrono::steady_clock::duration::zero())
    throw TimeoutError("instance budget exhausted", 0, 0);
  return left;
}

SolveOptions solve_budget(std::chrono::steady_clock::time_point deadline) {
  SolveOptions opt;
  opt.budget = std::chrono::duration_cast<std::chrono::milliseconds>(
                   remaining_or_throw(deadline)) +
               std::chrono::milliseconds(1);
  return opt;
}

}  // namespace

InstanceRecord run_instance(const Graph& g, const Graph& h,
                            const RunOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  auto deadline = t0 + std::chrono::milliseconds(opt.budget_ms);
  InstanceRecord rec;
  rec.g6_g = emit_graph6(g);
  rec.g6_h = emit_graph6(h);
  auto stamp = [&] {
    rec.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  };

  if (long(g.order()) * long(h.order()) > opt.max_product_order) {
    rec.status = InstanceStatus::skipped;
    stamp();
    return rec;
  }

  try {
    PowerReport pr = power_report(g);
    rec.gamma_g = pr.gamma;
    rec.pi_closed = pr.power_closed;
    rec.pi_open = pr.power_open;
    rec.delta_g = g.max_degree();
    rec.gamma_h = domination_number(h, solve_budget(deadline));
    rec.bound = bounds(pr.gamma, *rec.gamma_h, pr.power_closed,
                       g.max_degree());

    ProductGraph prod(g, h);
    int gamma_p = domination_number(prod.base(), solve_budget(deadline));
    rec.gamma_product = gamma_p;
    apply_product(*rec.bound, gamma_p);
    DominatingSet d = min_dominating_set(prod.base(), solve_budget(deadline));

    LabelingOptions lopt;
    lopt.policy = opt.policy;
    lopt.seed = opt.seed;
    Certificate cert =
        certify(prod, d, gamma_p, *rec.gamma_h, pr.power_closed, lopt);
    rec.claim1 = cert.claim1;
    rec.claim2 = cert.claim2;
    rec.projection_all = cert.projection_all;
    rec.eq3 = cert.eq3;
    rec.max_label = cert.hist.max_size;
    rec.conflict_count = int(cert.lab.conflicts.size());
    rec.status = InstanceStatus::ok;

    if (opt.always_trace ||
        (opt.trace_on_falsification && rec.falsification()))
      rec.trace = trace_json(cert.lab, opt.policy, opt.seed, *rec.gamma_h,
                             pr.power_closed);
  } catch (const TimeoutError&) {
    rec.status = InstanceStatus::timeout;
  }
  stamp();
  return rec;
}

const char* const kCsvHeader =
    "g_id,h_id,g_graph6,h_graph6,status,gamma_g,gamma_h,pi_closed,pi_open,"
    "delta_g,gamma_product,vizing_rhs,suen_tarr_rhs,pi_bound_rhs,"
    "gamma_bound_rhs,delta_bound_rhs,vizing_holds,suen_tarr_holds,"
    "pi_bound_holds,gamma_bound_holds,delta_bound_holds,improves_suen_tarr,"
    "claim1,claim2,projection_all,eq3_count_lb,eq3_count_identity,"
    "eq3_label_cap,eq3_profile_feasible,max_label_size,conflicts";

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string opt_int(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "";
}

std::string bstr(bool b) { return b ? "true" : "false"; }

std::string opt_bool(const std::optional<bool>& v) {
  return v ? bstr(*v) : "";
}

}  // namespace

std::string to_csv(const std::vector<InstanceRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const InstanceRecord& r : records) {
    std::vector<std::string> f;
    f.push_back(std::to_string(r.g_id));
    f.push_back(std::to_string(r.h_id));
    f.push_back(r.g6_g);
    f.push_back(r.g6_h);
    f.push_back(status_name(r.status));
    f.push_back(opt_int(r.gamma_g));
    f.push_back(opt_int(r.gamma_h));
    f.push_back(opt_int(r.pi_closed));
    f.push_back(opt_int(r.pi_open));
    f.push_back(opt_int(r.delta_g));
    f.push_back(opt_int(r.gamma_product));
    if (r.bound) {
      f.push_back(rat_str(r.bound->vizing_rhs));
      f.push_back(rat_str(r.bound->suen_tarr_rhs));
      f.push_back(rat_str(r.bound->pi_bound_rhs));
      f.push_back(rat_str(r.bound->gamma_bound_rhs));
      f.push_back(rat_str(r.bound->delta_bound_rhs));
      if (r.gamma_product) {
        f.push_back(bstr(r.bound->vizing_holds));
        f.push_back(bstr(r.bound->suen_tarr_holds));
        f.push_back(bstr(r.bound->pi_bound_holds));
        f.push_back(bstr(r.bound->gamma_bound_holds));
        f.push_back(bstr(r.bound->delta_bound_holds));
      } else {
        f.insert(f.end(), 5, "");
      }
      f.push_back(bstr(r.bound->improves_suen_tarr));
    } else {
      f.insert(f.end(), 11, "");
    }
    f.push_back(opt_bool(r.claim1));
    f.push_back(opt_bool(r.claim2));
    f.push_back(opt_bool(r.projection_all));
    if (r.eq3) {
      f.push_back(bstr(r.eq3->count_lb));
      f.push_back(bstr(r.eq3->count_identity));
      f.push_back(bstr(r.eq3->label_cap));
      f.push_back(bstr(r.eq3->profile_feasible));
    } else {
      f.insert(f.end(), 4, "");
    }
    f.push_back(opt_int(r.max_label));
    f.push_back(opt_int(r.conflict_count));

    for (size_t i = 0; i < f.size(); ++i)
      out << (i ? "," : "") << csv_field(f[i]);
    out << "\n";
  }
  return out.str();
}

std::string summary_json(const SweepConfig& cfg,
                         const std::vector<InstanceRecord>& records) {
  using njson = nlohmann::ordered_json;
  njson j;
  j["schema"] = 1;
  njson cj;
  cj["source"] = cfg.source;
  cj["h_list"] = cfg.h_list;
  cj["max_product_order"] = cfg.max_product_order;
  cj["budget_ms"] = cfg.budget_ms;
  cj["seed"] = cfg.seed;
  cj["policy"] = policy_name(cfg.policy);
  j["config"] = cj;

  int ok = 0, timeout = 0, skipped = 0;
  for (const InstanceRecord& r : records) {
    if (r.status == InstanceStatus::ok) ++ok;
    else if (r.status == InstanceStatus::timeout) ++timeout;
    else ++skipped;
  }
  njson inst;
  inst["total"] = records.size();
  inst["ok"] = ok;
  inst["timeout"] = timeout;
  inst["skipped"] = skipped;
  j["instances"] = inst;

  auto bound_counts = [&](auto get) {
    int holds = 0, fails = 0;
    for (const InstanceRecord& r : records) {
      if (!r.pipeline_complete() || !r.bound) continue;
      (get(*r.bound) ? holds : fails)++;
    }
    njson b;
    b["holds"] = holds;
    b["fails"] = fails;
    return b;
  };
  njson bj;
  bj["vizing"] = bound_counts([](const BoundReport& b) { return b.vizing_holds; });
  bj["suen_tarr"] =
      bound_counts([](const BoundReport& b) { return b.suen_tarr_holds; });
  bj["pi_bound"] =
      bound_counts([](const BoundReport& b) { return b.pi_bound_holds; });
  bj["gamma_bound"] =
      bound_counts([](const BoundReport& b) { return b.gamma_bound_holds; });
  bj["delta_bound"] =
      bound_counts([](const BoundReport& b) { return b.delta_bound_holds; });
  j["bounds"] = bj;

  int c1f = 0, c2f = 0, pf = 0, e3f = 0, confl_inst = 0, confl_total = 0;
  int max_label = 0;
  std::optional<int> max_pi_minus_delta;
  for (const InstanceRecord& r : records) {
    if (!r.pipeline_complete()) continue;
    if (r.claim1 && !*r.claim1) ++c1f;
    if (r.claim2 && !*r.claim2) ++c2f;
    if (r.projection_all && !*r.projection_all) ++pf;
    if (r.eq3 && !r.eq3->all()) ++e3f;
    if (r.conflict_count && *r.conflict_count > 0) {
      ++confl_inst;
      confl_total += *r.conflict_count;
    }
    if (r.max_label) max_label = std::max(max_label, *r.max_label);
    if (r.pi_closed && r.delta_g) {
      int d = *r.pi_closed - *r.delta_g;
      if (!max_pi_minus_delta || d > *max_pi_minus_delta)
        max_pi_minus_delta = d;
    }
  }
  njson claims;
  claims["claim1_fails"] = c1f;
  claims["claim2_fails"] = c2f;
  claims["projection_fails"] = pf;
  claims["eq3_fails"] = e3f;
  claims["conflict_instances"] = confl_inst;
  claims["conflicts_total"] = confl_total;
  j["claims"] = claims;
  j["max_label_size"] = max_label;
  if (max_pi_minus_delta)
    j["max_pi_minus_delta"] = *max_pi_minus_delta;
  else
    j["max_pi_minus_delta"] = nullptr;

  // Distinct G's whose two power definitions disagree, in source order.
  njson disagreements = njson::array();
  std::map<int, const InstanceRecord*> by_g;
  for (const InstanceRecord& r : records)
    if (r.pi_closed && r.pi_open && *r.pi_closed != *r.pi_open)
      by_g.emplace(r.g_id, &r);
  for (const auto& [gid, r] : by_g) {
    njson d;
    d["g_id"] = gid;
    d["g_graph6"] = r->g6_g;
    d["pi_closed"] = *r->pi_closed;
    d["pi_open"] = *r->pi_open;
    disagreements.push_back(d);
  }
  j["power_disagreements"] = disagreements;

  std::map<int, int> tightness;
  for (const InstanceRecord& r : records) {
    if (!r.pipeline_complete()) continue;
    if (std::optional<int> t = r.tightness()) tightness[*t]++;
  }
  njson th = njson::object();
  for (const auto& [t, count] : tightness) th[std::to_string(t)] = count;
  j["tightness_histogram"] = th;

  njson fals = njson::array();
  for (const InstanceRecord& r : records) {
    if (!r.falsification()) continue;
    njson fj;
    fj["g_id"] = r.g_id;
    fj["h_id"] = r.h_id;
    fj["checks"] = r.failed_checks();
    fals.push_back(fj);
  }
  j["falsifications"] = fals;

  return j.dump(2) + "\n";
}

SweepResult run_sweep(const SweepConfig& cfg) {
  std::vector<Graph> sources = expand_source(cfg.source);
  std::vector<Graph> hs;
  for (const std::string& tok : split_list(cfg.h_list))
    hs.push_back(parse_graph_arg(tok));

  struct Job {
    int g_id, h_id;
    const Graph *g, *h;
  };
  std::vector<Job> jobs;
  for (size_t gi = 0; gi < sources.size(); ++gi)
    for (size_t hi = 0; hi < hs.size(); ++hi)
      jobs.push_back({int(gi), int(hi), &sources[gi], &hs[hi]});

  SweepResult result;
  result.records.resize(jobs.size());

  int workers = cfg.parallelism > 0
                    ? cfg.parallelism
                    : int(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min(workers, int(std::max<size_t>(jobs.size(), 1)));

  std::atomic<size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr first_error;

  auto work = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      const Job& job = jobs[i];
      try {
        RunOptions opt;
        opt.budget_ms = cfg.budget_ms;
        opt.max_product_order = cfg.max_product_order;
        opt.policy = cfg.policy;
        // Per-instance seed: fixed mix of the sweep seed and the pair ids,
        // so results are independent of worker scheduling.
        SplitMix64 mix(cfg.seed ^ (uint64_t(job.g_id) << 32) ^
                       uint64_t(job.h_id));
        opt.seed = mix.next();
        InstanceRecord rec = run_instance(*job.g, *job.h, opt);
        rec.g_id = job.g_id;
        rec.h_id = job.h_id;
        result.records[i] = std::move(rec);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(size_t(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);

  result.csv = to_csv(result.records);
  result.json = summary_json(cfg, result.records);
  for (const InstanceRecord& r : result.records)
    if (r.falsification()) ++result.falsifications;
  return result;
}

void write_sweep_outputs(const SweepConfig& cfg, const SweepResult& result) {
  auto write = [](const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ArgumentError("cannot write output file: " + path);
    out << content;
  };
  write(cfg.csv_out, result.csv);
  write(cfg.json_out, result.json);
  std::filesystem::path dir =
      std::filesystem::path(cfg.csv_out).parent_path();
  for (const InstanceRecord& r : result.records) {
    if (r.trace.empty()) continue;
    std::filesystem::path p =
        dir / ("falsification_" + std::to_string(r.g_id) + "_" +
               std::to_string(r.h_id) + ".json");
    write(p.string(), r.trace);
  }
}

}  // namespace boxdom
