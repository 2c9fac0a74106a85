#ifndef EIRQ_CALCULUS_HPP
#define EIRQ_CALCULUS_HPP

#include <cstdint>
#include <functional>

#include "eirq/axioms.hpp"
#include "eirq/emergent.hpp"
#include "eirq/irq.hpp"

namespace eirq {

/// f : X -> Y between two irqs. Outputs are checked against the target
/// carrier on every evaluation.
class MapBetweenCarriers {
 public:
  MapBetweenCarriers(IrqPtr source, IrqPtr target, std::function<Element(const Element&)> f);

  const Irq& source() const { return *source_; }
  const Irq& target() const { return *target_; }
  Element operator()(const Element& x) const;

 private:
  IrqPtr source_;
  IrqPtr target_;
  std::function<Element(const Element&)> f_;
};

/// Tf(x, u) = lim_k f(x) \_k f(x *_k u), limit taken in the target. Throws
/// Unsupported unless both irqs are uniform, NonConvergence when the limit
/// does not settle.
LimitResult derivative(const MapBetweenCarriers& map, const Element& x, const Element& u, const LimitConfig& cfg = {});

/// Tf(x, u +^x v) against Tf(x, u) +^f(x) Tf(x, v), chart distance of the
/// target, over seeded pairs. Non-convergence counts as an infinite residual.
AxiomReport check_derivative_morphism(const MapBetweenCarriers& map, const Element& x, const LimitConfig& cfg,
                                      std::uint64_t seed, std::size_t samples, double radius, double tol,
                                      Execution exec = Execution::parallel);

}  // namespace eirq

#endif
