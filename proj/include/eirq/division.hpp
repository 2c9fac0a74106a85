#ifndef EIRQ_DIVISION_HPP
#define EIRQ_DIVISION_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "eirq/axioms.hpp"
#include "eirq/emergent.hpp"
#include "eirq/irq.hpp"

namespace eirq {

/// How y with y *_k a = b is found.
///  - closed_form: the carrier's own formula (Euclidean, hyperbolic).
///  - truncated_product: y = c delta^k(c) delta^2k(c) ... with c = b delta^k(a^-1),
///    on G(delta) with delta a contractive morphism. Stops once a factor has
///    homogeneous norm <= 1e-15, or after max_terms factors.
///  - fixed_point: y <- exp_b(log_b y - log_b(y *_k a)) seeded at b, on
///    uniform carriers with a chart. At most max_terms iterations.
/// The solution is accepted when the chart residual d(y *_k a, b) <= tol.
struct DivisionMethod {
  enum class Kind { closed_form, truncated_product, fixed_point };
  Kind kind = Kind::closed_form;
  long max_terms = 200;
  double tol = 1e-10;

  static DivisionMethod closed_form(double tol = 1e-10) { return {Kind::closed_form, 1, tol}; }
  static DivisionMethod truncated_product(long max_terms = 200, double tol = 1e-10) {
    return {Kind::truncated_product, max_terms, tol};
  }
  static DivisionMethod fixed_point(long max_terms = 500, double tol = 1e-10) {
    return {Kind::fixed_point, max_terms, tol};
  }
  void validate() const;
};

const char* to_string(DivisionMethod::Kind kind);

struct DivisionResult {
  Element value;
  long terms = 0;  // product factors or fixed-point iterations; 0 for closed forms
  double residual = 0.0;
};

/// b /_k a. Negative k is reduced to positive: y \_j a = b iff y *_j b = a.
/// Throws Unsupported for an unavailable method and NonConvergence when the
/// residual stays above method.tol.
DivisionResult right_divide_k(const Irq& irq, IterExponent k, const Element& b, const Element& a,
                              const DivisionMethod& method);

/// u o_k^x v = (u /_k x) *_k (x \_k v); a loop with identity x.
Element loop_isotope_k(const Irq& irq, IterExponent k, const Element& x, const Element& u, const Element& v,
                       const DivisionMethod& method);

/// inv_k(x, y) = (x *_k y) \_k x
Element inv_k(const Irq& irq, IterExponent k, const Element& x, const Element& y);

/// inv_k(u, v /_k u) = (u *_k (v /_k u)) \_k u
Element underline_inv_k(const Irq& irq, IterExponent k, const Element& u, const Element& v,
                        const DivisionMethod& method);

/// T(y, x) = (inv(x, y), x * y) with inv(x, y) = (x * y) \ x.
std::pair<Element, Element> t_map(const Irq& irq, const Element& y, const Element& x);

/// Row "6.5": T(T(y, x)) = (y, x). Exhaustive with tolerance 0 on exact
/// carriers.
AxiomReport check_t_involution(const Irq& irq, std::uint64_t seed, std::size_t samples, double radius, double tol,
                               Execution exec = Execution::parallel);

struct LoosConfig {
  double ball_radius = 0.5;
  double min_separation_factor = 1e-3;  // delta_min = factor * ball_radius
  std::vector<long> underline_levels{1, 2, 3};
};

/// L1 inv(x, x) = x, L2 inv(x, inv(y, z)) = inv(inv(x, y), inv(x, z)),
/// L3 inv(x, inv(x, y)) = y on inv = inv_inf, L2 again on underline_inv_k
/// (row "L2-underline", one per level), and L4: for pairs in the ball with
/// d(x, y) >= delta_min, c = min d(inv(x, y), y) / d(x, y). The L4 row
/// reports max_residual = 1/c against tolerance 1/tol, so it passes iff
/// c >= tol.
std::vector<AxiomReport> check_loos_axioms(const Irq& irq, const LimitConfig& cfg, std::uint64_t seed,
                                           std::size_t samples, double tol, const DivisionMethod& method,
                                           const LoosConfig& loos = {}, Execution exec = Execution::parallel);

/// Rows beyond L1-L4 for a uniform symmetric quasigroup:
///  "6.8-isometry"    d(inv(x, u), inv(x, v)) = d(u, v)
///  "6.8-underline-k" spread of underline_inv_k(u, v) over the levels
///  "6.8-inv-k"       inv_k(u, v) = inv_inf(u, v *_k u), one row per level
std::vector<AxiomReport> check_symmetric_extras(const Irq& irq, const LimitConfig& cfg, std::uint64_t seed,
                                                std::size_t samples, double radius, double tol,
                                                const DivisionMethod& method, const LoosConfig& loos = {},
                                                Execution exec = Execution::parallel);

}  // namespace eirq

#endif
