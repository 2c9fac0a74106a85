#include "eirq/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

#include "eirq/axioms.hpp"
#include "eirq/calculus.hpp"
#include "eirq/carriers.hpp"
#include "eirq/division.hpp"
#include "eirq/emergent.hpp"
#include "eirq/sampling.hpp"

namespace eirq {

namespace {

using nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();
// finite-level round trips are held to this whatever the run tolerance
constexpr double kInvolutionTol = 1e-12;
// criterion for u o_k^x v -> u +^x v at k = 30
constexpr double kLoopLimitTol = 1e-6;
constexpr long kLoopLimitLevel = 30;

template <class T>
T get_as(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

double default_tol(const std::string& experiment) {
  if (experiment == "axioms") return 1e-9;
  if (experiment == "converge") return 1e-7;
  if (experiment == "reconstruct") return 1e-8;
  if (experiment == "symmetric") return 1e-8;
  if (experiment == "derivative") return 1e-7;
  return 1e-10;  // divide
}

double default_radius(const std::string& carrier) { return carrier == "euclidean" ? 10.0 : 1.0; }

LimitConfig limit_config(const ExperimentConfig& cfg, const Irq& irq) {
  LimitConfig lc;
  lc.max_k = cfg.max_k;
  lc.cauchy_window = cfg.cauchy_window;
  if (cfg.limit_tol) {
    lc.tol = *cfg.limit_tol;
  } else {
    // roundoff floor of a step-m Carnot iterate is ~1e-34^(1/(m+1))
    const GroupIrq* g = irq.as_group_irq();
    lc.tol = g && g->group().grading().step() >= 3 ? 3e-8 : 1e-10;
  }
  return lc;
}

ReportRow row_from(const ExperimentConfig& cfg, const AxiomReport& r, std::optional<double> rate = std::nullopt) {
  return {cfg.experiment, cfg.carrier, r.identity, r.k, r.samples, r.max_residual, rate, r.passed};
}

std::optional<DivisionMethod> preferred_method(const Irq& irq) {
  const Element e = irq.base_point();
  if (irq.is_uniform()) {
    const GroupIrq* g = irq.as_group_irq();
    if (g && g->is_morphism() && !irq.divide_closed_form(1, e, e)) return DivisionMethod::truncated_product();
    if (irq.divide_closed_form(1, e, e)) return DivisionMethod::closed_form();
    if (irq.chart()) return DivisionMethod::fixed_point();
  }
  return std::nullopt;
}

std::vector<DivisionMethod> supported_methods(const Irq& irq) {
  std::vector<DivisionMethod> out;
  if (!irq.is_uniform()) return out;
  const Element e = irq.base_point();
  if (irq.divide_closed_form(1, e, e)) out.push_back(DivisionMethod::closed_form());
  const GroupIrq* g = irq.as_group_irq();
  if (g && g->is_morphism()) out.push_back(DivisionMethod::truncated_product());
  if (irq.chart()) out.push_back(DivisionMethod::fixed_point());
  return out;
}

void require_uniform(const Irq& irq, const std::string& experiment) {
  if (!irq.is_uniform())
    throw ConfigError("experiment '" + experiment + "' needs a uniform carrier; " + irq.name() + " is not");
}

double mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

std::vector<ReportRow> run_axioms(const ExperimentConfig& cfg, const Irq& irq, double tol, double radius,
                                  Execution exec) {
  std::vector<ReportRow> rows;
  for (const auto& r : check_irq_axioms(irq, cfg.seed, cfg.samples, radius, tol, exec)) rows.push_back(row_from(cfg, r));
  return rows;
}

std::vector<ReportRow> run_converge(const ExperimentConfig& cfg, const Irq& irq, double tol, double radius,
                                    Execution exec) {
  require_uniform(irq, cfg.experiment);
  const LimitConfig lc = limit_config(cfg, irq);
  const GroupIrq* g = irq.as_group_irq();
  const bool oracle = g && g->is_morphism();
  const auto tuples = sample_tuples(irq, cfg.seed, cfg.samples, radius, 3);
  std::vector<ReportRow> rows;
  const std::pair<LimitKind, const char*> kinds[] = {
      {LimitKind::sum, "5.1-sum"}, {LimitKind::difference, "5.1-difference"}, {LimitKind::inverse, "5.1-inverse"}};
  for (const auto& [kind, name] : kinds) {
    const UniformityAudit audit = audit_uniformity(irq, kind, cfg.seed, cfg.samples, radius, lc, exec);
    std::vector<double> residuals;
    std::vector<double> rates;
    for (std::size_t i = 0; i < audit.results.size(); ++i) {
      const auto& res = audit.results[i];
      if (!res.report.converged) {
        residuals.push_back(kInf);
        continue;
      }
      rates.push_back(res.report.estimated_rate);
      if (oracle) {
        // u x^-1 v, x u^-1 v, x u^-1 x
        const auto& [x, u, v] = std::tie(tuples[i][0], tuples[i][1], tuples[i][2]);
        Element expect;
        switch (kind) {
          case LimitKind::sum:
            expect = g->multiply(g->multiply(u, g->invert(x)), v);
            break;
          case LimitKind::difference:
            expect = g->multiply(g->multiply(x, g->invert(u)), v);
            break;
          case LimitKind::inverse:
            expect = g->multiply(g->multiply(x, g->invert(u)), x);
            break;
        }
        residuals.push_back(to_double(irq.chart_distance(res.value, expect)));
      } else {
        residuals.push_back(res.report.residual_trail.empty() ? 0.0 : res.report.residual_trail.back());
      }
    }
    ReportRow row{cfg.experiment, cfg.carrier, name, audit.max_stop_k, residuals.size(),
                  max_residual(residuals), mean(rates), false};
    row.passed = audit.all_converged && row.max_residual <= tol;
    rows.push_back(row);
  }
  return rows;
}

std::vector<ReportRow> run_reconstruct(const ExperimentConfig& cfg, const Irq& irq, double tol, double radius,
                                       Execution exec) {
  require_uniform(irq, cfg.experiment);
  std::vector<ReportRow> rows;
  const AxiomReport dist = check_distributive(irq, cfg.seed, cfg.samples, radius, 1e-9, exec);
  rows.push_back(row_from(cfg, dist));
  if (!dist.passed) return rows;
  const LimitConfig lc = limit_config(cfg, irq);
  for (const auto& r : check_reconstruction(irq, irq.base_point(), lc, cfg.seed, cfg.samples, radius, tol, exec))
    rows.push_back(row_from(cfg, r));
  return rows;
}

std::vector<ReportRow> run_symmetric(const ExperimentConfig& cfg, const Irq& irq, double tol, double radius,
                                     Execution exec) {
  std::vector<ReportRow> rows;
  rows.push_back(row_from(cfg, check_t_involution(irq, cfg.seed, cfg.samples, radius, kInvolutionTol, exec)));
  const auto method = preferred_method(irq);
  if (!method) return rows;
  const LimitConfig lc = limit_config(cfg, irq);
  for (const auto& r : check_loos_axioms(irq, lc, cfg.seed, cfg.samples, tol, *method, {}, exec))
    rows.push_back(row_from(cfg, r));
  // metric preservation and k-independence are properties of Riemannian
  // symmetric spaces
  if (cfg.carrier == "hyperbolic" || cfg.carrier == "euclidean")
    for (const auto& r : check_symmetric_extras(irq, lc, cfg.seed, cfg.samples, radius, tol, *method, {}, exec))
      rows.push_back(row_from(cfg, r));
  return rows;
}

// Tf against an oracle over seeded (x, u) pairs
ReportRow derivative_row(const ExperimentConfig& cfg, const std::string& name, const MapBetweenCarriers& map,
                         const std::function<Element(const Element&, const Element&)>& oracle,
                         const std::optional<Element>& fixed_x, const LimitConfig& lc, double tol, double radius,
                         Execution exec) {
  const auto tuples = sample_tuples(map.source(), cfg.seed, cfg.samples, radius, 2);
  struct Out {
    double residual = kInf;
    double rate = 0.0;
    long stop_k = 0;
    bool converged = false;
  };
  const auto outs = map_indices(
      tuples.size(),
      [&](std::size_t i) {
        const Element x = fixed_x ? *fixed_x : tuples[i][0];
        const Element& u = tuples[i][1];
        Out o;
        try {
          const LimitResult r = derivative(map, x, u, lc);
          const double d = to_double(map.target().chart_distance(r.value, oracle(x, u)));
          o = {d == d ? d : kInf, r.report.estimated_rate, r.report.stop_k, true};
        } catch (const NonConvergence& nc) {
          o.stop_k = nc.report().stop_k;
        } catch (const Error&) {
        }
        return o;
      },
      exec);
  std::vector<double> residuals, rates;
  long stop = 0;
  for (const auto& o : outs) {
    residuals.push_back(o.residual);
    if (o.converged) rates.push_back(o.rate);
    stop = std::max(stop, o.stop_k);
  }
  ReportRow row{cfg.experiment, cfg.carrier, name, stop, residuals.size(), max_residual(residuals), mean(rates), false};
  row.passed = row.max_residual <= tol;
  return row;
}

std::vector<ReportRow> run_derivative(const ExperimentConfig& cfg, const IrqPtr& irq, double tol, double radius,
                                      Execution exec) {
  require_uniform(*irq, cfg.experiment);
  const LimitConfig lc = limit_config(cfg, *irq);
  std::vector<ReportRow> rows;
  const Element e = irq->base_point();

  const MapBetweenCarriers identity(irq, irq, [](const Element& p) { return p; });
  rows.push_back(derivative_row(
      cfg, "5.2-Tf-identity", identity, [](const Element&, const Element& u) { return u; }, std::nullopt, lc, tol,
      radius, exec));

  if (cfg.carrier == "euclidean") {
    const std::size_t d = irq->carrier().size;
    Rng rng(cfg.seed ^ 0xa11ce);
    std::vector<Real> a(d * d);
    for (auto& v : a) v = Real(rng.uniform(-1.0, 1.0));
    auto apply = [a, d](const Point& p) {
      Point out(d, Real(0));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out[i] += a[i * d + j] * p[j];
      return out;
    };
    const MapBetweenCarriers linear(irq, irq, [apply](const Element& p) { return Element(apply(p.coords())); });
    rows.push_back(derivative_row(
        cfg, "5.2-Tf-linear", linear,
        [apply](const Element& x, const Element& u) { return Element(apply(x.coords()) + apply(u.coords() - x.coords())); },
        std::nullopt, lc, tol, radius, exec));
    rows.push_back(row_from(cfg, check_derivative_morphism(linear, e, lc, cfg.seed, cfg.samples, radius, tol, exec)));
    return rows;
  }

  const GroupIrq* g = irq->as_group_irq();
  if (g && g->is_morphism()) {
    const GroupMap half = dilation(g->group().grading(), Real(0.5));
    const MapBetweenCarriers dil(irq, irq, [half](const Element& p) { return Element(half.forward(p.coords())); });
    rows.push_back(derivative_row(
        cfg, "5.2-Tf-dilation", dil,
        [half](const Element&, const Element& u) { return Element(half.forward(u.coords())); }, e, lc, tol, radius,
        exec));
    rows.push_back(row_from(cfg, check_derivative_morphism(dil, e, lc, cfg.seed, cfg.samples, radius, tol, exec)));
    // adds a^2 to the top coordinate: not horizontal, reported only
    const MapBetweenCarriers quad(irq, irq, [](const Element& p) {
      Point q = p.coords();
      q.back() += q[0] * q[0];
      return Element(q);
    });
    AxiomReport qr = check_derivative_morphism(quad, e, lc, cfg.seed, cfg.samples, radius, tol, exec);
    qr.identity = "5.2-Tf-morphism-quadratic";
    rows.push_back(row_from(cfg, qr));
    return rows;
  }
  rows.push_back(row_from(cfg, check_derivative_morphism(identity, e, lc, cfg.seed, cfg.samples, radius, tol, exec)));
  return rows;
}

std::vector<ReportRow> run_divide(const ExperimentConfig& cfg, const Irq& irq, double tol, double radius,
                                  Execution exec) {
  const auto methods = supported_methods(irq);
  if (methods.empty()) throw ConfigError("no right-division method for carrier " + irq.name());
  std::vector<ReportRow> rows;
  const auto pairs = sample_tuples(irq, cfg.seed, cfg.samples, radius, 2);
  for (const auto& m0 : methods) {
    DivisionMethod m = m0;
    m.tol = tol;
    for (long k : {-1L, 1L, 2L, 3L}) {
      const auto r = map_indices(
          pairs.size(),
          [&](std::size_t i) {
            try {
              return right_divide_k(irq, k, pairs[i][0], pairs[i][1], m).residual;
            } catch (const Error&) {
              return kInf;
            }
          },
          exec);
      rows.push_back(row_from(cfg, make_report(std::string("6.3-divide-") + to_string(m.kind), k, r, tol)));
    }
  }
  DivisionMethod m = *preferred_method(irq);
  m.tol = tol;
  const auto triples = sample_tuples(irq, cfg.seed, cfg.samples, radius, 3);
  for (long k : {1L, 2L}) {
    const auto r = map_indices(
        triples.size(),
        [&](std::size_t i) {
          const auto& [x, u, v] = std::tie(triples[i][0], triples[i][1], triples[i][2]);
          try {
            return std::max(to_double(irq.chart_distance(loop_isotope_k(irq, k, x, x, v, m), v)),
                            to_double(irq.chart_distance(loop_isotope_k(irq, k, x, u, x, m), u)));
          } catch (const Error&) {
            return kInf;
          }
        },
        exec);
    rows.push_back(row_from(cfg, make_report("6.3-loop-identity", k, r, tol)));
  }
  // the product formula and its loop limit are for G(delta) with a morphism
  const GroupIrq* g = irq.as_group_irq();
  if (!g || !g->is_morphism()) return rows;
  const LimitConfig lc = limit_config(cfg, irq);
  const auto r = map_indices(
      triples.size(),
      [&](std::size_t i) {
        const auto& [x, u, v] = std::tie(triples[i][0], triples[i][1], triples[i][2]);
        try {
          return to_double(irq.chart_distance(loop_isotope_k(irq, kLoopLimitLevel, x, u, v, m),
                                              emergent_sum(irq, x, u, v, lc).value));
        } catch (const Error&) {
          return kInf;
        }
      },
      exec);
  rows.push_back(row_from(cfg, make_report("6.3-loop-limit", kLoopLimitLevel, r, kLoopLimitTol)));
  return rows;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const json& j, std::uint64_t default_seed) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> keys{"carrier", "experiment", "seed",  "samples", "tol", "max_k",
                                          "cauchy_window", "limit_tol", "radius", "epsilon", "dim", "n",
                                          "eta", "algebra", "out", "format"};
  for (const auto& [key, value] : j.items())
    if (!keys.count(key)) throw ConfigError("unknown config key '" + key + "'");
  ExperimentConfig c;
  c.seed = default_seed;
  if (j.contains("carrier")) c.carrier = get_as<std::string>(j, "carrier");
  if (j.contains("experiment")) c.experiment = get_as<std::string>(j, "experiment");
  if (j.contains("seed")) c.seed = get_as<std::uint64_t>(j, "seed");
  if (j.contains("samples")) {
    const auto s = get_as<long long>(j, "samples");
    if (s < 1) throw ConfigError("samples must be >= 1");
    c.samples = static_cast<std::size_t>(s);
  }
  if (j.contains("tol")) c.tol = get_as<double>(j, "tol");
  if (j.contains("max_k")) c.max_k = get_as<long>(j, "max_k");
  if (j.contains("cauchy_window")) c.cauchy_window = get_as<long>(j, "cauchy_window");
  if (j.contains("limit_tol")) c.limit_tol = get_as<double>(j, "limit_tol");
  if (j.contains("radius")) c.radius = get_as<double>(j, "radius");
  if (j.contains("epsilon")) c.epsilon = get_as<double>(j, "epsilon");
  if (j.contains("dim")) {
    const auto d = get_as<long long>(j, "dim");
    if (d < 1) throw ConfigError("dim must be >= 1");
    c.dim = static_cast<std::size_t>(d);
  }
  if (j.contains("n")) c.n = get_as<long>(j, "n");
  if (j.contains("eta")) c.eta = get_as<double>(j, "eta");
  if (j.contains("algebra")) c.algebra = j.at("algebra");
  if (j.contains("out")) c.out = get_as<std::string>(j, "out");
  if (j.contains("format")) c.format = get_as<std::string>(j, "format");
  return c;
}

void ExperimentConfig::validate() const {
  const auto& cs = carrier_names();
  if (std::find(cs.begin(), cs.end(), carrier) == cs.end())
    throw ConfigError("unknown carrier '" + carrier + "' (see list-carriers)");
  const auto& es = experiment_names();
  if (std::find(es.begin(), es.end(), experiment) == es.end())
    throw ConfigError("unknown experiment '" + experiment + "' (see list-experiments)");
  if (samples < 1) throw ConfigError("samples must be >= 1");
  if (tol && !(*tol > 0)) throw ConfigError("tol must be > 0");
  if (limit_tol && !(*limit_tol > 0)) throw ConfigError("limit_tol must be > 0");
  if (radius && !(*radius > 0)) throw ConfigError("radius must be > 0");
  if (cauchy_window < 1 || max_k < cauchy_window) throw ConfigError("need max_k >= cauchy_window >= 1");
  if (format != "csv" && format != "json") throw ConfigError("format must be csv or json");
}

const std::vector<std::string>& carrier_names() {
  static const std::vector<std::string> names{"carnot",     "dihedral",   "engel",      "euclidean",
                                              "heisenberg", "hyperbolic", "nonmorphism"};
  return names;
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"axioms", "converge", "derivative", "divide", "reconstruct", "symmetric"};
  return names;
}

IrqPtr make_carrier(const ExperimentConfig& cfg) {
  try {
    if (cfg.carrier == "euclidean") return make_euclidean(cfg.dim, cfg.epsilon);
    if (cfg.carrier == "heisenberg") return make_heisenberg(cfg.epsilon);
    if (cfg.carrier == "engel") return make_engel(cfg.epsilon);
    if (cfg.carrier == "carnot") {
      if (cfg.algebra.is_null()) throw ConfigError("carrier 'carnot' needs an 'algebra' object");
      return make_carnot(GradedLieAlgebra::from_json(cfg.algebra), cfg.epsilon);
    }
    if (cfg.carrier == "dihedral") return make_dihedral_quandle(cfg.n);
    if (cfg.carrier == "hyperbolic") return make_hyperbolic(cfg.epsilon);
    if (cfg.carrier == "nonmorphism") return make_nonmorphism_plane(cfg.epsilon, cfg.eta);
  } catch (const ConstructionError& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown carrier '" + cfg.carrier + "'");
}

std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg, Execution exec) {
  cfg.validate();
  const IrqPtr irq = make_carrier(cfg);
  double tol = default_tol(cfg.experiment);
  if (cfg.experiment != "axioms" && cfg.experiment != "divide" && irq->is_uniform())
    tol = std::max(tol, 10 * limit_config(cfg, *irq).tol);  // identities of limits
  if (cfg.tol) tol = *cfg.tol;
  const double radius = cfg.radius.value_or(default_radius(cfg.carrier));
  std::vector<ReportRow> rows;
  if (cfg.experiment == "axioms") rows = run_axioms(cfg, *irq, tol, radius, exec);
  else if (cfg.experiment == "converge") rows = run_converge(cfg, *irq, tol, radius, exec);
  else if (cfg.experiment == "reconstruct") rows = run_reconstruct(cfg, *irq, tol, radius, exec);
  else if (cfg.experiment == "symmetric") rows = run_symmetric(cfg, *irq, tol, radius, exec);
  else if (cfg.experiment == "derivative") rows = run_derivative(cfg, irq, tol, radius, exec);
  else rows = run_divide(cfg, *irq, tol, radius, exec);
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return a.identity != b.identity ? a.identity < b.identity : a.k < b.k;
  });
  return rows;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
  os << "experiment,carrier,identity,k,samples,max_residual,rate,passed\n";
  for (const auto& r : rows)
    os << r.experiment << ',' << r.carrier << ',' << r.identity << ',' << r.k << ',' << r.samples << ','
       << fmt(r.max_residual) << ',' << (r.rate ? fmt(*r.rate) : std::string()) << ','
       << (r.passed ? "true" : "false") << '\n';
}

void write_json(std::ostream& os, const std::vector<ReportRow>& rows) {
  json arr = json::array();
  auto num = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
  for (const auto& r : rows) {
    arr.push_back({{"experiment", r.experiment},
                   {"carrier", r.carrier},
                   {"identity", r.identity},
                   {"k", r.k},
                   {"samples", r.samples},
                   {"max_residual", num(r.max_residual)},
                   {"rate", r.rate ? num(*r.rate) : json(nullptr)},
                   {"passed", r.passed}});
  }
  os << arr.dump(2) << '\n';
}

}  // namespace eirq
