#include "eirq/element.hpp"

#include <cmath>
#include <sstream>

#include "eirq/sampling.hpp"

namespace eirq {

Point make_point(std::initializer_list<double> coords) {
  Point p;
  p.reserve(coords.size());
  for (double c : coords) p.emplace_back(c);
  return p;
}

Point zero_point(std::size_t dim) { return Point(dim, Real(0)); }

Point operator+(const Point& a, const Point& b) {
  Point r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  Point r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Point operator-(const Point& a) {
  Point r(a);
  for (auto& c : r) c = -c;
  return r;
}

Point operator*(const Real& s, const Point& a) {
  Point r(a);
  for (auto& c : r) c *= s;
  return r;
}

Real dot(const Point& a, const Point& b) {
  Real s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Real euclidean_norm(const Point& a) { return sqrt(dot(a, a)); }

std::string Element::to_string() const {
  std::ostringstream os;
  if (is_label()) {
    os << label_value();
    return os.str();
  }
  os << '(';
  const auto& c = coords();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ", ";
    os << to_double(c[i]);
  }
  os << ')';
  return os.str();
}

double Rng::normal() {
  // Box-Muller, one draw per call
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Point Rng::in_ball(std::size_t dim, double radius) {
  Point p(dim, Real(0));
  if (dim == 0) return p;
  double norm2 = 0.0;
  std::vector<double> g(dim);
  while (norm2 == 0.0) {
    norm2 = 0.0;
    for (auto& x : g) {
      x = normal();
      norm2 += x * x;
    }
  }
  const double r = radius * std::pow(uniform(), 1.0 / static_cast<double>(dim)) / std::sqrt(norm2);
  for (std::size_t i = 0; i < dim; ++i) p[i] = Real(g[i] * r);
  return p;
}

}  // namespace eirq
