#include "sling/experiment.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sling/estimate.hpp"
#include "sling/libsvm.hpp"
#include "sling/mpscgs.hpp"
#include "sling/robust_multiclass.hpp"
#include "sling/spfw.hpp"
#include "sling/synthetic_saddle.hpp"
#include "sling/trace_io.hpp"

namespace sling {
namespace {

const std::set<std::string> kKnownKeys = {
    "solver", "problem", "iters", "seed",  "out",   "format", "scale",
    "warm_start", "data", "tau",  "lambda", "dx",   "dy",     "kappa",
    "sigma"};

Vec start_point(const FeasibleSet& set) {
  // barycenter for the simplex, center/zero otherwise: a neutral start
  if (set.kind() == SetKind::Simplex)
    return Vec(set.dim(), 1.0 / static_cast<double>(set.dim()));
  return set.canonical_point();
}

struct BuiltProblem {
  std::unique_ptr<SaddleProblem> problem;
  nlohmann::json manifest_extras;
};

BuiltProblem build_problem(const RunConfig& cfg, RngState& rng) {
  const std::string kind = cfg.get("problem");
  BuiltProblem out;
  if (kind == "synthetic") {
    const double kappa = cfg.get_num("kappa", 10.0);
    if (kappa < 1.0) throw ArgumentError("config: kappa must be >= 1");
    const auto dx = static_cast<std::size_t>(cfg.get_num("dx", 20));
    const auto dy = static_cast<std::size_t>(cfg.get_num("dy", 10));
    const double sigma = cfg.get_num("sigma", 0.0);
    out.problem = std::make_unique<SyntheticSaddle>(
        synthetic_make(static_cast<std::uint64_t>(cfg.get_num("seed", 1)), dx, dy,
                       kappa, sigma));
    out.manifest_extras = {{"dx", dx}, {"dy", dy}, {"target_kappa", kappa}, {"sigma", sigma}};
    return out;
  }
  if (kind == "robust_mc") {
    const std::string path = cfg.get("data");
    if (path.empty()) throw ArgumentError("config: robust_mc requires data=<libsvm file>");
    Dataset data = parse_libsvm_file(path);
    const double tau = cfg.get_num("tau", 10.0);
    double lambda;
    const std::string lam = cfg.get("lambda", "auto");
    if (lam == "auto")
      lambda = 1.0 / static_cast<double>(data.n());  // the experiment-section setting
    else
      lambda = cfg.get_num("lambda", 0.0);
    nlohmann::json label_map = nlohmann::json::array();
    for (std::size_t i = 0; i < data.class_values.size(); ++i)
      label_map.push_back({{"raw", data.class_values[i]}, {"id", i}});
    auto rmc = std::make_unique<RobustMulticlass>(std::move(data), tau, lambda);
    const ProblemConstants est = estimate_constants(*rmc, 30, rng);
    rmc->set_smoothness(est.smoothness, est.noise_bound);
    out.manifest_extras = {{"data", path},
                           {"tau", tau},
                           {"lambda", lambda},
                           {"n", rmc->data().n()},
                           {"d", rmc->data().d()},
                           {"h", rmc->data().h()},
                           {"label_map", label_map}};
    out.problem = std::move(rmc);
    return out;
  }
  throw ArgumentError("config: unknown problem '" + kind +
                      "' (valid: synthetic, robust_mc)");
}

std::vector<TraceRecord> run_spfw(const SaddleProblem& f, std::int64_t iters,
                                  OracleCounters& counters, const TraceSink& sink) {
  using clock = std::chrono::steady_clock;
  std::int64_t active_ns = 0;
  auto t0 = clock::now();
  Vec x = start_point(f.set_x());
  Vec y = start_point(f.set_y());
  std::vector<TraceRecord> trace;
  for (std::int64_t k = 0; k < iters; ++k) {
    spfw_step(f, x, y, k, counters);
    active_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0).count();
    TraceRecord rec;
    rec.k = k + 1;
    rec.wall_ms = static_cast<double>(active_ns) * 1e-6;
    OracleCounters scratch;
    rec.fw_gap = fw_gap(f, x, y, scratch);
    rec.theory_bound = std::nan("");  // no published rate
    rec.counters = counters;
    if (sink) sink(rec);
    trace.push_back(rec);
    t0 = clock::now();
  }
  return trace;
}

nlohmann::json constants_json(const ProblemConstants& c) {
  return {{"smoothness", c.smoothness},
          {"strong_concavity", c.strong_concavity},
          {"kappa", c.kappa()},
          {"sigma", c.noise_bound},
          {"diameter_x", c.diameter_x},
          {"diameter_y", c.diameter_y}};
}

}  // namespace

RunConfig RunConfig::parse(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto strip = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      const auto b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    const std::string stripped = strip(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ParseError("config: expected key=value", lineno);
    const std::string key = strip(stripped.substr(0, eq));
    const std::string value = strip(stripped.substr(eq + 1));
    if (!kKnownKeys.count(key))
      throw ArgumentError("config: unknown key '" + key + "'");
    cfg.values[key] = value;
  }
  return cfg;
}

RunConfig RunConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("config: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string RunConfig::get(const std::string& key, const std::string& fallback) const {
  const auto it = values.find(key);
  return it == values.end() ? fallback : it->second;
}

double RunConfig::get_num(const std::string& key, double fallback) const {
  const auto it = values.find(key);
  if (it == values.end()) return fallback;
  try {
    std::size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw ArgumentError("config: key '" + key + "' is not a number: " + it->second);
  }
}

int run_experiment(const std::string& config_path, bool verbose, std::ostream& log) {
  try {
    const RunConfig cfg = RunConfig::parse_file(config_path);
    const std::string solver = cfg.get("solver");
    const std::string out_path = cfg.get("out");
    if (out_path.empty()) throw ArgumentError("config: out=<trace path> is required");
    const auto iters = static_cast<std::int64_t>(cfg.get_num("iters", 0));
    if (iters <= 0) throw ArgumentError("config: iters must be positive");
    const auto seed = static_cast<std::uint64_t>(cfg.get_num("seed", 1));
    const double scale = cfg.get_num("scale", 1.0);
    if (scale <= 0.0) throw ArgumentError("config: scale must be positive");
    const bool warm_start = cfg.get_num("warm_start", 0) != 0;
    const std::string fmt_name = cfg.get("format", "csv");
    if (fmt_name != "csv" && fmt_name != "json")
      throw ArgumentError("config: format must be csv or json");
    const TraceFormat fmt = fmt_name == "csv" ? TraceFormat::Csv : TraceFormat::Json;

    RngState rng(seed);
    BuiltProblem built = build_problem(cfg, rng);
    const SaddleProblem& f = *built.problem;
    const ProblemConstants& c = f.constants();

    TraceSink sink;
    if (verbose)
      sink = [&log](const TraceRecord& r) {
        log << "k=" << r.k << " fw_gap=" << r.fw_gap << " wall_ms=" << r.wall_ms
            << " lo=" << r.counters.lo << "\n";
      };

    OracleCounters counters;
    std::vector<TraceRecord> trace;
    nlohmann::json schedule_json;
    std::vector<std::string> deviations;
    if (warm_start) deviations.push_back("warm_start_y");
    if (scale != 1.0) deviations.push_back("scale=" + std::to_string(scale));

    if (solver == "mpcgs") {
      const MpcgsSchedule sched = MpcgsSchedule::from(c, iters);
      trace = mpcgs_solve(f, start_point(f.set_x()), start_point(f.set_y()), sched,
                          counters, sink, warm_start)
                  .trace;
      nlohmann::json per_k = nlohmann::json::array();
      for (std::int64_t k = 1; k <= iters; ++k)
        per_k.push_back({{"k", k},
                         {"gamma", sched.mixing(k)},
                         {"alpha", sched.prox_weight(k)},
                         {"zeta", sched.cndg_tol(k)},
                         {"eps", sched.inner_accuracy(k)}});
      schedule_json = {{"per_k", per_k}};
    } else if (solver == "mpscgs") {
      const MpscgsSchedule sched = MpscgsSchedule::from(c, iters, scale);
      RngState solver_rng = rng.split(2);
      trace = mpscgs_solve(f, start_point(f.set_x()), start_point(f.set_y()), sched,
                           solver_rng, counters, sink)
                  .trace;
      nlohmann::json per_k = nlohmann::json::array();
      for (std::int64_t k = 1; k <= iters; ++k)
        per_k.push_back({{"k", k},
                         {"gamma", sched.mixing(k)},
                         {"alpha", sched.prox_weight(k)},
                         {"zeta", sched.cndg_tol(k)},
                         {"eps", sched.inner_accuracy(k)},
                         {"P", sched.batch_size(k)}});
      schedule_json = {{"per_k", per_k}, {"scale", scale}};
    } else if (solver == "spfw") {
      trace = run_spfw(f, iters, counters, sink);
      schedule_json = {{"step", "2/(k+2)"}};
    } else {
      throw ArgumentError("config: unknown solver '" + solver +
                          "' (valid: mpcgs, mpscgs, spfw)");
    }

    std::ofstream out(out_path);
    if (!out) throw ArgumentError("config: cannot write " + out_path);
    write_trace(trace, fmt, out);

    nlohmann::json manifest = {
        {"solver", solver},
        {"problem", cfg.get("problem")},
        {"iters", iters},
        {"seed", seed},
        {"scale", scale},
        {"warm_start", warm_start},
        {"kernels", kernels().name},
        {"constants", constants_json(c)},
        {"schedule", schedule_json},
        {"problem_params", built.manifest_extras},
        {"deviations", deviations},
        {"trace", out_path},
        {"format", fmt_name},
    };
    std::ofstream mout(out_path + ".manifest.json");
    if (!mout) throw ArgumentError("config: cannot write manifest next to " + out_path);
    mout << manifest.dump(2) << "\n";

    log << "wrote " << trace.size() << " records to " << out_path << "\n";
    return 0;
  } catch (const NumericError& e) {
    log << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return 2;
  }
}

int bound_table(const std::string& trace_path, std::ostream& out) {
  try {
    std::ifstream in(trace_path);
    if (!in) throw ArgumentError("bound-table: cannot open " + trace_path);
    const std::vector<TraceRecord> trace = read_trace_csv(in);
    std::int64_t with_bound = 0, pass = 0;
    std::vector<std::int64_t> failing;
    for (const TraceRecord& r : trace) {
      if (std::isnan(r.theory_bound)) continue;
      ++with_bound;
      const bool ok = r.fw_gap <= r.theory_bound;
      pass += ok ? 1 : 0;
      if (!ok) failing.push_back(r.k);
      out << "k=" << r.k << " fw_gap=" << r.fw_gap << " bound=" << r.theory_bound
          << (ok ? "  ok" : "  ABOVE BOUND") << "\n";
    }
    if (with_bound == 0) {
      out << "no bound recorded\n";
      return 0;
    }
    out << (failing.empty() ? "PASS " : "FAIL ") << pass << "/" << with_bound << "\n";
    if (!failing.empty()) {
      out << "failing k:";
      for (std::int64_t k : failing) out << " " << k;
      out << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace sling
