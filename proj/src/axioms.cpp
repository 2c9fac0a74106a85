#include "eirq/axioms.hpp"

#include <algorithm>
#include <functional>

namespace eirq {

AxiomReport make_report(std::string identity, long k, const std::vector<double>& residuals, double tolerance) {
  AxiomReport r;
  r.identity = std::move(identity);
  r.k = k;
  r.samples = residuals.size();
  r.max_residual = max_residual(residuals);
  r.tolerance = tolerance;
  r.passed = r.max_residual <= tolerance;
  return r;
}

const std::vector<long>& axiom_levels() {
  static const std::vector<long> levels{-2, -1, 1, 2, 3};
  return levels;
}

std::vector<std::vector<Element>> sample_tuples(const Irq& irq, std::uint64_t seed, std::size_t count, double radius,
                                                std::size_t arity) {
  std::vector<std::vector<Element>> out;
  if (irq.is_exact()) {
    const auto all = irq.enumerate();
    std::size_t total = 1;
    for (std::size_t i = 0; i < arity; ++i) total *= all.size();
    out.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::vector<Element> t(arity);
      std::size_t r = idx;
      for (std::size_t i = arity; i-- > 0;) {
        t[i] = all[r % all.size()];
        r /= all.size();
      }
      out.push_back(std::move(t));
    }
    return out;
  }
  // draw 4 points per tuple whatever the arity, so tuples of different
  // arities share their leading points
  const auto pts = irq.sample(seed, 4 * count, radius);
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(pts.begin() + 4 * i, pts.begin() + 4 * i + arity);
  return out;
}

Element star_level(const Irq& irq, long k, const Element& x, const Element& u) {
  if (k == 0) return u;
  return star_k(irq, k, x, u);
}

namespace {

using Check = std::function<Real(const Irq&, long, const std::vector<Element>&)>;

struct Identity {
  const char* name;
  std::size_t arity;
  Check residual;
};

std::vector<Identity> level_identities() {
  // shorthand: S star_k, B back_k, D difference_k, P sum_k, N inverse_k
  return {
      {"P1", 2,
       [](const Irq& q, long k, const std::vector<Element>& t) {
         const auto& x = t[0];
         const auto& y = t[1];
         return std::max(q.distance(star_k(q, k, x, back_k(q, k, x, y)), y),
                         q.distance(back_k(q, k, x, star_k(q, k, x, y)), y));
       }},
      {"P2", 1,
       [](const Irq& q, long k, const std::vector<Element>& t) {
         const auto& x = t[0];
         return std::max(q.distance(star_k(q, k, x, x), x), q.distance(back_k(q, k, x, x), x));
       }},
      {"3.3", 3,
       [](const Irq& q, long k, const std::vector<Element>& t) {
         const auto& [x, u, v] = std::tie(t[0], t[1], t[2]);
         return q.distance(star_k(q, k, star_k(q, k, x, u), v), star_k(q, k, x, sum_k(q, k, x, u, v)));
       }},
      {"3.4a", 3,
       [](const Irq& q, long k, const std::vector<Element>& t) {
         const auto& [x, u, v] = std::tie(t[0], t[1], t[2]);
         return q.distance(difference_k(q, k, x, u, sum_k(q, k, x, u, v)), v);
       }},
      {"3.4b", 3,
       [](const Irq& q, long k, const std::vector<Element>& t) {
         const auto& [x, u, v] = std::tie(t[0], t[1], t[2]);
         return q.distance(sum_k(q, k, x, u, difference_k(q, k, x, u, v)), v);
       }},
      {"3.4c", 3,
       [](const Irq& q, long k, const std::vector<Element>& t) {
         const auto& [x, u, v] = std::tie(t[0], t[1], t[2]);
         return q.distance(difference_k(q, k, x, u, v),
                           sum_k(q, k, star_k(q, k, x, u), inverse_k(q, k, x, u), v));
       }},
      {"3.4d", 2,
       [](const Irq& q, long k, const std::vector<Element>& t) {
         const auto& [x, u] = std::tie(t[0], t[1]);
         return q.distance(inverse_k(q, k, star_k(q, k, x, u), inverse_k(q, k, x, u)), u);
       }},
      {"3.4e", 4,
       [](const Irq& q, long k, const std::vector<Element>& t) {
         const auto& [x, u, v, w] = std::tie(t[0], t[1], t[2], t[3]);
         return q.distance(sum_k(q, k, x, u, sum_k(q, k, star_k(q, k, x, u), v, w)),
                           sum_k(q, k, x, sum_k(q, k, x, u, v), w));
       }},
      {"3.4f", 2,
       [](const Irq& q, long k, const std::vector<Element>& t) {
         const auto& [x, u] = std::tie(t[0], t[1]);
         return q.distance(inverse_k(q, k, x, u), difference_k(q, k, x, u, x));
       }},
      {"3.4g", 2,
       [](const Irq& q, long k, const std::vector<Element>& t) {
         const auto& [x, u] = std::tie(t[0], t[1]);
         return q.distance(sum_k(q, k, x, x, u), u);
       }},
      {"3.5h", 2,
       [](const Irq& q, long k, const std::vector<Element>& t) {
         const auto& [x, u] = std::tie(t[0], t[1]);
         return q.distance(difference_k(q, k, x, u, u), star_k(q, k, x, u));
       }},
      {"3.5i", 2,
       [](const Irq& q, long k, const std::vector<Element>& t) {
         const auto& [x, u] = std::tie(t[0], t[1]);
         return q.distance(difference_k(q, k, x, x, u), u);
       }},
      {"3.5j", 4,
       [](const Irq& q, long k, const std::vector<Element>& t) {
         const auto& [x, u, v, w] = std::tie(t[0], t[1], t[2], t[3]);
         return q.distance(difference_k(q, k, difference_k(q, k, x, u, u), difference_k(q, k, x, u, v),
                                        difference_k(q, k, x, u, w)),
                           difference_k(q, k, x, v, w));
       }},
  };
}

// (x *_q v) -_p^x (x *_q u) = (x *_(p+q) u) *_q (v -_(p+q)^x u), where
// v -_0^x u = v.
Real relation_k(const Irq& q, long p, long qq, const std::vector<Element>& t) {
  const auto& [x, u, v] = std::tie(t[0], t[1], t[2]);
  const long s = p + qq;
  const Element lhs = difference_k(q, p, x, star_k(q, qq, x, u), star_k(q, qq, x, v));
  const Element diff = s == 0 ? v : difference_k(q, s, x, u, v);
  const Element rhs = star_k(q, qq, star_level(q, s, x, u), diff);
  return q.distance(lhs, rhs);
}

std::vector<double> residuals(std::size_t n, const std::function<Real(std::size_t)>& f, Execution exec) {
  return map_indices(n, [&](std::size_t i) { return to_double(f(i)); }, exec);
}

}  // namespace

std::vector<AxiomReport> check_irq_axioms(const Irq& irq, std::uint64_t seed, std::size_t count, double radius,
                                          double tol, Execution exec) {
  const double tolerance = irq.is_exact() ? 0.0 : tol;
  std::vector<std::vector<std::vector<Element>>> tuples(5);
  for (std::size_t a = 1; a <= 4; ++a) tuples[a] = sample_tuples(irq, seed, count, radius, a);

  std::vector<AxiomReport> out;
  for (const auto& id : level_identities()) {
    const auto& ts = tuples[id.arity];
    for (long k : axiom_levels()) {
      auto r = residuals(ts.size(), [&](std::size_t i) { return id.residual(irq, k, ts[i]); }, exec);
      out.push_back(make_report(id.name, k, r, tolerance));
    }
  }
  const auto& ts = tuples[3];
  for (long qq : axiom_levels()) {
    for (long p : axiom_levels()) {
      auto r = residuals(ts.size(), [&](std::size_t i) { return relation_k(irq, p, qq, ts[i]); }, exec);
      out.push_back(make_report("3.5k(q=" + std::to_string(qq) + ")", p, r, tolerance));
    }
  }
  return out;
}

}  // namespace eirq
