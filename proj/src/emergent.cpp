#include "eirq/emergent.hpp"
#include "eirq/group.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace eirq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBlowUp = 1e6;

void require_uniform(const Irq& irq, const char* what) {
  if (!irq.is_uniform()) throw Unsupported(std::string(what) + " needs a uniform irq; " + irq.name() + " is not");
}

double chart_gap(const Irq& irq, const Element& a, const Element& b) {
  const double d = to_double(irq.chart_distance(a, b));
  return d == d ? d : kInf;
}

template <class F>
double guarded(F&& f) {
  try {
    return f();
  } catch (const Error&) {
    return kInf;
  }
}

}  // namespace

void LimitConfig::validate() const {
  if (!(tol > 0)) throw std::invalid_argument("limit tol must be positive");
  if (cauchy_window < 1) throw std::invalid_argument("cauchy_window must be >= 1");
  if (max_k < cauchy_window) throw std::invalid_argument("max_k must be >= cauchy_window");
}

double estimate_rate(const std::vector<double>& trail) {
  if (trail.size() < 2) return 0.0;
  const std::size_t first = trail.size() > 6 ? trail.size() - 6 : 0;
  double log_sum = 0.0;
  int used = 0;
  for (std::size_t i = first; i + 1 < trail.size(); ++i) {
    if (trail[i] == 0.0) continue;
    const double ratio = trail[i + 1] / trail[i];
    if (ratio == 0.0) return 0.0;
    log_sum += std::log(ratio);
    ++used;
  }
  return used == 0 ? 0.0 : std::exp(log_sum / used);
}

LimitResult cauchy_limit(const Irq& irq, const std::function<Element(long)>& level, const LimitConfig& cfg) {
  cfg.validate();
  auto eval = [&](long k) -> std::optional<Element> {
    try {
      Element e = level(k);
      if (!irq.contains(e)) return std::nullopt;
      return e;
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  ConvergenceReport rep;
  std::optional<Element> prev = eval(1);
  if (!prev) throw NonConvergence("iterate at k = 1 is not in the carrier", rep);
  long run = 0;
  double smallest = std::numeric_limits<double>::infinity();
  for (long k = 1; k < cfg.max_k; ++k) {
    std::optional<Element> next = eval(k + 1);
    if (!next) {
      rep.stop_k = k;
      rep.estimated_rate = estimate_rate(rep.residual_trail);
      throw NonConvergence("iterate at k = " + std::to_string(k + 1) + " left the carrier", rep);
    }
    const double d = chart_gap(irq, *prev, *next);
    rep.residual_trail.push_back(d);
    // roundoff amplified by the inverse contraction has taken over; later
    // iterates can freeze once the increments underflow and look Cauchy
    if (d > cfg.tol && d > kBlowUp * smallest) {
      rep.stop_k = k + 1;
      rep.estimated_rate = estimate_rate(rep.residual_trail);
      throw NonConvergence("trail grew by more than 1e6 over its minimum at k = " + std::to_string(k + 1), rep);
    }
    smallest = std::min(smallest, d);
    run = d <= cfg.tol ? run + 1 : 0;
    prev = std::move(next);
    if (run >= cfg.cauchy_window) {
      rep.converged = true;
      rep.stop_k = k + 1;
      rep.estimated_rate = estimate_rate(rep.residual_trail);
      return {std::move(*prev), std::move(rep)};
    }
  }
  rep.stop_k = cfg.max_k;
  rep.estimated_rate = estimate_rate(rep.residual_trail);
  throw NonConvergence("no Cauchy agreement within max_k = " + std::to_string(cfg.max_k), rep);
}

LimitResult emergent_sum(const Irq& irq, const Element& x, const Element& u, const Element& v, const LimitConfig& cfg) {
  require_uniform(irq, "emergent_sum");
  return cauchy_limit(irq, [&](long k) { return sum_k(irq, k, x, u, v); }, cfg);
}

LimitResult emergent_difference(const Irq& irq, const Element& x, const Element& u, const Element& v,
                                const LimitConfig& cfg) {
  require_uniform(irq, "emergent_difference");
  return cauchy_limit(irq, [&](long k) { return difference_k(irq, k, x, u, v); }, cfg);
}

LimitResult emergent_inverse(const Irq& irq, const Element& x, const Element& u, const LimitConfig& cfg) {
  require_uniform(irq, "emergent_inverse");
  return cauchy_limit(irq, [&](long k) { return inverse_k(irq, k, x, u); }, cfg);
}

TangentGroup::TangentGroup(const Irq& irq, Element basepoint, LimitConfig cfg)
    : irq_(&irq), x_(std::move(basepoint)), cfg_(cfg) {}

Element TangentGroup::product(const Element& u, const Element& v) const {
  return emergent_sum(*irq_, x_, u, v, cfg_).value;
}

Element TangentGroup::inverse(const Element& u) const { return emergent_inverse(*irq_, x_, u, cfg_).value; }

Element TangentGroup::difference(const Element& u, const Element& v) const {
  return emergent_difference(*irq_, x_, u, v, cfg_).value;
}

Element TangentGroup::contraction(const Element& u) const { return irq_->star(x_, u); }

TangentGroup tangent_group(const Irq& irq, const Element& x, const LimitConfig& cfg) {
  require_uniform(irq, "tangent_group");
  irq.require(x);
  cfg.validate();
  return TangentGroup(irq, x, cfg);
}

std::vector<AxiomReport> verify_tangent_group(const Irq& irq, const Element& x, const LimitConfig& cfg,
                                              std::uint64_t seed, std::size_t samples, double radius, double tol,
                                              Execution exec) {
  const TangentGroup g = tangent_group(irq, x, cfg);
  static const std::array<const char*, 10> names{"5.2a", "5.2b", "5.2c", "5.2d", "5.2e", "5.2f", "5.2g",
                                                 "5.2-right-neutral", "5.2-inverse", "5.2-alpha"};
  const auto tuples = sample_tuples(irq, seed, samples, radius, 3);
  const auto rows = map_indices(
      tuples.size(),
      [&](std::size_t i) {
        const auto& [u, v, w] = std::tie(tuples[i][0], tuples[i][1], tuples[i][2]);
        auto d = [&](const Element& a, const Element& b) { return chart_gap(irq, a, b); };
        std::array<double, 10> r{};
        r[0] = guarded([&] { return d(g.difference(u, g.product(u, v)), v); });
        r[1] = guarded([&] { return d(g.product(u, g.difference(u, v)), v); });
        r[2] = guarded([&] { return d(g.difference(u, v), g.product(g.inverse(u), v)); });
        r[3] = guarded([&] { return d(g.inverse(g.inverse(u)), u); });
        r[4] = guarded([&] { return d(g.product(u, g.product(v, w)), g.product(g.product(u, v), w)); });
        r[5] = guarded([&] { return d(g.inverse(u), g.difference(u, x)); });
        r[6] = guarded([&] { return d(g.product(x, u), u); });
        r[7] = guarded([&] { return d(g.product(u, x), u); });
        r[8] = guarded([&] {
          const Element inv = g.inverse(u);
          return std::max(d(g.product(u, inv), x), d(g.product(inv, u), x));
        });
        r[9] = guarded([&] {
          return d(g.contraction(g.product(u, v)), g.product(g.contraction(u), g.contraction(v)));
        });
        return r;
      },
      exec);
  std::vector<AxiomReport> out;
  for (std::size_t j = 0; j < names.size(); ++j) {
    std::vector<double> col(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) col[i] = rows[i][j];
    out.push_back(make_report(names[j], 0, col, tol));
  }
  return out;
}

AxiomReport check_distributive(const Irq& irq, std::uint64_t seed, std::size_t samples, double radius, double tol,
                               Execution exec) {
  const auto tuples = sample_tuples(irq, seed, samples, radius, 3);
  const auto r = map_indices(
      tuples.size(),
      [&](std::size_t i) {
        const auto& [x, y, z] = std::tie(tuples[i][0], tuples[i][1], tuples[i][2]);
        return guarded([&] {
          const Real a = irq.distance(irq.star(x, irq.star(y, z)), irq.star(irq.star(x, y), irq.star(x, z)));
          const Real b = irq.distance(irq.star(x, irq.back(y, z)), irq.back(irq.star(x, y), irq.star(x, z)));
          const Real c = irq.distance(irq.back(x, irq.star(y, z)), irq.star(irq.back(x, y), irq.back(x, z)));
          const double m = to_double(std::max({a, b, c}));
          return m == m ? m : kInf;
        });
      },
      exec);
  return make_report("6.1", 0, r, irq.is_exact() ? 0.0 : tol);
}

ReconstructedGroup::ReconstructedGroup(const Irq& irq, Element e, LimitConfig cfg)
    : irq_(&irq), e_(std::move(e)), cfg_(cfg) {}

Element ReconstructedGroup::product(const Element& x, const Element& y) const {
  return emergent_sum(*irq_, e_, x, y, cfg_).value;
}

Element ReconstructedGroup::inverse(const Element& x) const { return emergent_inverse(*irq_, e_, x, cfg_).value; }

Element ReconstructedGroup::derived_star(const Element& x, const Element& y) const {
  return product(x, irq_->star(e_, product(inverse(x), y)));
}

ReconstructedGroup reconstruct_group(const Irq& irq, const Element& e, const LimitConfig& cfg,
                                     std::size_t probe_samples, double probe_tol) {
  require_uniform(irq, "reconstruct_group");
  irq.require(e);
  cfg.validate();
  const AxiomReport dist = check_distributive(irq, 0xd157, probe_samples, 1.0, probe_tol, Execution::serial);
  if (!dist.passed)
    throw ConstructionError(irq.name() + " is not distributive: residual " + std::to_string(dist.max_residual) +
                            " > " + std::to_string(dist.tolerance) + " on " + std::to_string(dist.samples) +
                            " samples");
  return ReconstructedGroup(irq, e, cfg);
}

std::vector<AxiomReport> check_reconstruction(const Irq& irq, const Element& e, const LimitConfig& cfg,
                                              std::uint64_t seed, std::size_t samples, double radius, double tol,
                                              Execution exec) {
  const ReconstructedGroup g = reconstruct_group(irq, e, cfg);
  const GroupIrq* oracle = irq.as_group_irq();
  const auto tuples = sample_tuples(irq, seed, samples, radius, 3);
  const auto rows = map_indices(
      tuples.size(),
      [&](std::size_t i) {
        const auto& [x, y, z] = std::tie(tuples[i][0], tuples[i][1], tuples[i][2]);
        auto d = [&](const Element& a, const Element& b) { return chart_gap(irq, a, b); };
        std::array<double, 5> r{};
        if (oracle) {
          r[0] = guarded([&] { return d(g.product(x, y), oracle->multiply(x, y)); });
          r[1] = guarded([&] { return d(g.inverse(x), oracle->invert(x)); });
        }
        r[2] = guarded([&] {
          return d(emergent_difference(irq, x, y, z, cfg).value, g.product(g.product(x, g.inverse(y)), z));
        });
        r[3] = guarded([&] { return d(irq.star(x, y), g.derived_star(x, y)); });
        r[4] = guarded([&] {
          return d(emergent_sum(irq, x, y, z, cfg).value, emergent_difference(irq, y, x, z, cfg).value);
        });
        return r;
      },
      exec);
  static const std::array<const char*, 5> names{"6.1i", "6.1i-inverse", "6.1ii", "6.1iii", "6.2"};
  std::vector<AxiomReport> out;
  for (std::size_t j = oracle ? 0 : 2; j < names.size(); ++j) {
    std::vector<double> col(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) col[i] = rows[i][j];
    out.push_back(make_report(names[j], 0, col, tol));
  }
  return out;
}

UniformityAudit audit_uniformity(const Irq& irq, LimitKind kind, std::uint64_t seed, std::size_t samples,
                                 double radius, const LimitConfig& cfg, Execution exec) {
  require_uniform(irq, "audit_uniformity");
  const auto tuples = sample_tuples(irq, seed, samples, radius, 3);
  UniformityAudit audit;
  audit.results = map_indices(
      tuples.size(),
      [&](std::size_t i) {
        const auto& [x, u, v] = std::tie(tuples[i][0], tuples[i][1], tuples[i][2]);
        try {
          switch (kind) {
            case LimitKind::sum:
              return emergent_sum(irq, x, u, v, cfg);
            case LimitKind::difference:
              return emergent_difference(irq, x, u, v, cfg);
            case LimitKind::inverse:
              break;
          }
          return emergent_inverse(irq, x, u, cfg);
        } catch (const NonConvergence& nc) {
          return LimitResult{x, nc.report()};
        }
      },
      exec);
  audit.all_converged = !audit.results.empty();
  audit.min_stop_k = std::numeric_limits<long>::max();
  audit.min_rate = kInf;
  for (const auto& r : audit.results) {
    audit.all_converged = audit.all_converged && r.report.converged;
    audit.min_stop_k = std::min(audit.min_stop_k, r.report.stop_k);
    audit.max_stop_k = std::max(audit.max_stop_k, r.report.stop_k);
    audit.min_rate = std::min(audit.min_rate, r.report.estimated_rate);
    audit.max_rate = std::max(audit.max_rate, r.report.estimated_rate);
  }
  if (audit.results.empty()) audit.min_stop_k = 0, audit.min_rate = 0;
  return audit;
}

}  // namespace eirq
