#ifndef EIRQ_TESTS_SUPPORT_HPP
#define EIRQ_TESTS_SUPPORT_HPP

#include <cmath>
#include <vector>

#include "eirq/element.hpp"
#include "eirq/irq.hpp"
#include "eirq/sampling.hpp"

namespace eirq::testing {

inline double dist(const Irq& irq, const Element& a, const Element& b) { return to_double(irq.distance(a, b)); }
inline double chart_dist(const Irq& irq, const Element& a, const Element& b) {
  return to_double(irq.chart_distance(a, b));
}

inline double coord(const Element& e, std::size_t i) { return to_double(e.coords()[i]); }

/// Euclidean distance of coordinate vectors, independent of any carrier.
inline double coord_dist(const Element& a, const Element& b) {
  return to_double(euclidean_norm(a.coords() - b.coords()));
}

/// Hand-written Heisenberg law, kept apart from the library's.
inline Element heis_mul(const Element& p, const Element& q) {
  const auto& a = p.coords();
  const auto& b = q.coords();
  return Element(Point{a[0] + b[0], a[1] + b[1], a[2] + b[2] + (a[0] * b[1] - b[0] * a[1]) / 2});
}
inline Element heis_inv(const Element& p) { return Element(-p.coords()); }
inline Element heis_dilate(const Element& p, double t) {
  const auto& a = p.coords();
  return Element(Point{t * a[0], t * a[1], Real(t) * t * a[2]});
}

/// Points with each coordinate uniform in [-r, r].
inline std::vector<Element> box_points(std::uint64_t seed, std::size_t count, std::size_t dim, double r) {
  Rng rng(seed);
  std::vector<Element> out;
  for (std::size_t i = 0; i < count; ++i) {
    Point p = zero_point(dim);
    for (auto& c : p) c = rng.uniform(-r, r);
    out.emplace_back(p);
  }
  return out;
}

}  // namespace eirq::testing

#endif
