#ifndef EIRQ_AXIOMS_HPP
#define EIRQ_AXIOMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "eirq/exec.hpp"
#include "eirq/irq.hpp"

namespace eirq {

/// Outcome of checking one identity over a batch of samples.
/// passed == (max_residual <= tolerance).
struct AxiomReport {
  std::string identity;
  long k = 0;  // level, 0 when the identity has none
  std::size_t samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

AxiomReport make_report(std::string identity, long k, const std::vector<double>& residuals, double tolerance);

/// Levels at which the identities are checked.
const std::vector<long>& axiom_levels();

/// Rows P1, P2, "3.3" (isotopy), "3.4a".."3.4g" and "3.5h".."3.5j" at every
/// level of axiom_levels(), and "3.5k(q=..)" for p, q in axiom_levels().
///
/// Exact carriers run over all tuples of enumerate() with tolerance 0;
/// others over `count` seeded tuples in the ball of the given radius.
std::vector<AxiomReport> check_irq_axioms(const Irq& irq, std::uint64_t seed, std::size_t count, double radius,
                                          double tol, Execution exec = Execution::parallel);

/// Seeded tuples of `arity` points: all n^arity tuples on exact carriers,
/// `count` tuples otherwise.
std::vector<std::vector<Element>> sample_tuples(const Irq& irq, std::uint64_t seed, std::size_t count, double radius,
                                                std::size_t arity);

/// x *_k u with the convention x *_0 u = u.
Element star_level(const Irq& irq, long k, const Element& x, const Element& u);

}  // namespace eirq

#endif
