#ifndef EIRQ_EMERGENT_HPP
#define EIRQ_EMERGENT_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eirq/axioms.hpp"
#include "eirq/exec.hpp"
#include "eirq/irq.hpp"

namespace eirq {

/// Cauchy stopping rule: converged once `cauchy_window` consecutive
/// successive-iterate distances are <= tol; give up after max_k.
struct LimitConfig {
  double tol = 1e-10;
  long max_k = 200;
  long cauchy_window = 3;

  /// Throws std::invalid_argument unless tol > 0 and max_k >= cauchy_window >= 1.
  void validate() const;
};

struct ConvergenceReport {
  bool converged = false;
  long stop_k = 0;  // level of the returned iterate
  std::vector<double> residual_trail;  // d(iterate_k, iterate_(k+1)), k = 1, 2, ...
  double estimated_rate = 0.0;
};

class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, ConvergenceReport report) : Error(what), report_(std::move(report)) {}
  const ConvergenceReport& report() const { return report_; }

 private:
  ConvergenceReport report_;
};

struct LimitResult {
  Element value;
  ConvergenceReport report;
};

/// Geometric mean of the last (up to) 5 ratios of successive residuals.
/// Ratios with a zero denominator are skipped; 0 when none remain.
double estimate_rate(const std::vector<double>& trail);

/// Iterates `level(k)` for k = 1, 2, ... and stops by the Cauchy rule,
/// distances measured with irq.chart_distance. Throws NonConvergence when
/// max_k is reached, an iterate leaves the carrier, or a residual above tol
/// exceeds 1e6 times the smallest one seen so far.
LimitResult cauchy_limit(const Irq& irq, const std::function<Element(long)>& level, const LimitConfig& cfg);

/// lim_k u +_k^x v
LimitResult emergent_sum(const Irq& irq, const Element& x, const Element& u, const Element& v,
                         const LimitConfig& cfg = {});
/// lim_k v -_k^x u
LimitResult emergent_difference(const Irq& irq, const Element& x, const Element& u, const Element& v,
                                const LimitConfig& cfg = {});
/// lim_k inv_k(x, u) = lim_k (x *_k u) \_k x
LimitResult emergent_inverse(const Irq& irq, const Element& x, const Element& u, const LimitConfig& cfg = {});

/// The contractible group (X, +^x_inf, -^x_inf) with contraction u -> x * u.
/// Holds a reference to the irq, which must outlive it.
class TangentGroup {
 public:
  TangentGroup(const Irq& irq, Element basepoint, LimitConfig cfg);

  const Element& basepoint() const { return x_; }
  Element product(const Element& u, const Element& v) const;
  Element inverse(const Element& u) const;
  Element difference(const Element& u, const Element& v) const;  // v -^x u
  Element contraction(const Element& u) const;

 private:
  const Irq* irq_;
  Element x_;
  LimitConfig cfg_;
};

/// Throws Unsupported on a non-uniform irq.
TangentGroup tangent_group(const Irq& irq, const Element& x, const LimitConfig& cfg = {});

/// Limit forms of the "3.4a".."3.4g" identities (rows "5.2a".."5.2g"), right neutrality,
/// two-sided inverse and the automorphism property of the contraction, in
/// chart distance. A limit that fails to converge gives an infinite residual.
std::vector<AxiomReport> verify_tangent_group(const Irq& irq, const Element& x, const LimitConfig& cfg,
                                              std::uint64_t seed, std::size_t samples, double radius, double tol,
                                              Execution exec = Execution::parallel);

/// x * (y * z) = (x * y) * (x * z), together with x * (y \ z) = (x * y) \ (x * z)
/// and x \ (y * z) = (x \ y) * (x \ z); the residual is the worst of the three.
/// Exhaustive (tolerance 0) on exact carriers.
AxiomReport check_distributive(const Irq& irq, std::uint64_t seed, std::size_t samples, double radius, double tol,
                               Execution exec = Execution::parallel);

/// Group law recovered from a distributive uniform irq: xy = x +^e_inf y.
class ReconstructedGroup {
 public:
  ReconstructedGroup(const Irq& irq, Element e, LimitConfig cfg);

  const Element& neutral() const { return e_; }
  Element product(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  /// x (e * (x^-1 y))
  Element derived_star(const Element& x, const Element& y) const;

 private:
  const Irq* irq_;
  Element e_;
  LimitConfig cfg_;
};

/// Rejects (Unsupported) non-uniform irqs and (ConstructionError) irqs whose
/// distributivity check on `probe_samples` seeded triples fails at probe_tol.
ReconstructedGroup reconstruct_group(const Irq& irq, const Element& e, const LimitConfig& cfg = {},
                                     std::size_t probe_samples = 64, double probe_tol = 1e-9);

/// Rows "6.1ii" (xyz)_inf = x y^-1 z, "6.1iii" x * y = x (e * (x^-1 y)),
/// "6.2" )xyz(_inf = (yxz)_inf and, on group irqs, "6.1i" against the group law.
std::vector<AxiomReport> check_reconstruction(const Irq& irq, const Element& e, const LimitConfig& cfg,
                                              std::uint64_t seed, std::size_t samples, double radius, double tol,
                                              Execution exec = Execution::parallel);

enum class LimitKind { sum, difference, inverse };

struct UniformityAudit {
  bool all_converged = false;
  long min_stop_k = 0;
  long max_stop_k = 0;
  double max_rate = 0.0;
  double min_rate = 0.0;
  std::vector<LimitResult> results;  // in sample order; value is x on failure
};

/// Runs one limit over seeded triples in a ball: uniform convergence on the
/// ball shows up as a common bound on stop_k.
UniformityAudit audit_uniformity(const Irq& irq, LimitKind kind, std::uint64_t seed, std::size_t samples,
                                 double radius, const LimitConfig& cfg, Execution exec = Execution::parallel);

}  // namespace eirq

#endif
