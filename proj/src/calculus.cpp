#include "eirq/calculus.hpp"

#include <limits>

namespace eirq {

MapBetweenCarriers::MapBetweenCarriers(IrqPtr source, IrqPtr target, std::function<Element(const Element&)> f)
    : source_(std::move(source)), target_(std::move(target)), f_(std::move(f)) {
  if (!source_ || !target_ || !f_) throw ConstructionError("map needs a source, a target and a function");
}

Element MapBetweenCarriers::operator()(const Element& x) const {
  source_->require(x);
  Element y = f_(x);
  target_->require(y);
  return y;
}

LimitResult derivative(const MapBetweenCarriers& map, const Element& x, const Element& u, const LimitConfig& cfg) {
  if (!map.source().is_uniform() || !map.target().is_uniform())
    throw Unsupported("derivative needs uniform source and target irqs");
  const Element fx = map(x);
  return cauchy_limit(
      map.target(), [&](long k) { return back_k(map.target(), k, fx, map(star_k(map.source(), k, x, u))); }, cfg);
}

AxiomReport check_derivative_morphism(const MapBetweenCarriers& map, const Element& x, const LimitConfig& cfg,
                                      std::uint64_t seed, std::size_t samples, double radius, double tol,
                                      Execution exec) {
  const Irq& src = map.source();
  const Irq& dst = map.target();
  const auto tuples = sample_tuples(src, seed, samples, radius, 2);
  const auto r = map_indices(
      tuples.size(),
      [&](std::size_t i) {
        const auto& [u, v] = std::tie(tuples[i][0], tuples[i][1]);
        try {
          const Element fx = map(x);
          const Element lhs = derivative(map, x, emergent_sum(src, x, u, v, cfg).value, cfg).value;
          const Element rhs =
              emergent_sum(dst, fx, derivative(map, x, u, cfg).value, derivative(map, x, v, cfg).value, cfg).value;
          const double d = to_double(dst.chart_distance(lhs, rhs));
          return d == d ? d : std::numeric_limits<double>::infinity();
        } catch (const Error&) {
          return std::numeric_limits<double>::infinity();
        }
      },
      exec);
  return make_report("5.2-Tf-morphism", 0, r, tol);
}

}  // namespace eirq
