#include <cmath>

#include "eirq/carriers.hpp"
#include "eirq/sampling.hpp"

namespace eirq {

namespace {

struct Cx {
  Real re, im;
};

Cx operator+(Cx a, Cx b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(Cx a, Cx b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(Cx a, Cx b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator*(const Real& s, Cx a) { return {s * a.re, s * a.im}; }
Cx operator/(Cx a, Cx b) {
  const Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real abs(Cx a) { return boost::multiprecision::hypot(a.re, a.im); }

const Cx kI{0, 1};

}  // namespace

HyperbolicIrq::HyperbolicIrq(Real epsilon) : epsilon_(epsilon) {}

bool HyperbolicIrq::contains(const Element& e) const { return Irq::contains(e) && e.coords()[1] > 0; }

Point HyperbolicIrq::log_map(const Element& base, const Element& p) const {
  const Point& b = base.coords();
  const Point& q = p.coords();
  // normalise base to i: z = (q - a) / b
  const Cx z{(q[0] - b[0]) / b[1], q[1] / b[1]};
  const Cx w = (z - kI) / (z + kI);
  const Real r = abs(w);
  Point out(2, Real(0));
  if (r == 0) return out;
  // |W| = d / 2 in the disk at 0, pushed back to the half-plane by dz = 2i dw
  const Real half_d = asinh(abs(z - kI) / (2 * sqrt(z.im)));
  const Cx v = b[1] * (Cx{0, 2} * ((half_d / r) * w));
  out[0] = v.re;
  out[1] = v.im;
  return out;
}

Element HyperbolicIrq::exp_map(const Element& base, const Point& v) const {
  const Point& b = base.coords();
  const Cx W = (Real(1) / b[1]) * (Cx{v[0], v[1]} * Cx{0, Real(-0.5)});
  const Real r = abs(W);
  Point out(b);
  if (r == 0) return Element(out);
  // w = t (c, s) with t = tanh r; z = i (1 + w) / (1 - w) written so that
  // nothing cancels when w is close to the unit circle
  const Real c = W.re / r;
  const Real s = W.im / r;
  const Real t = tanh(r);
  const Real one_minus_t = 2 / (exp(2 * r) + 1);
  const Real one_minus_c = c > 0 ? s * s / (1 + c) : 1 - c;
  const Real a = one_minus_t + t * one_minus_c;  // 1 - t c
  const Real den = a * a + t * t * s * s;       // |1 - w|^2
  const Real sech = 1 / cosh(r);
  out[0] = b[0] + b[1] * (-2 * t * s / den);
  out[1] = b[1] * (sech * sech / den);
  return Element(out);
}

Real HyperbolicIrq::tangent_norm(const Element& base, const Point& v) const {
  return euclidean_norm(v) / base.coords()[1];
}

Element HyperbolicIrq::star(const Element& x, const Element& u) const { return scale_along(x, u, epsilon_); }

Element HyperbolicIrq::back(const Element& x, const Element& u) const {
  return scale_along(x, u, Real(1) / epsilon_);
}

// exp_x(lambda log_x u) in one pass through the disk model centred at x:
// w = (z - i) / (z + i) with z = (u - a) / b, |w| = tanh(d / 2).
Element HyperbolicIrq::scale_along(const Element& x, const Element& u, const Real& lambda) const {
  const Point& b = x.coords();
  const Point& q = u.coords();
  const Real zr = (q[0] - b[0]) / b[1];
  const Real zm = q[1] / b[1];
  const Real den_in = zr * zr + (zm + 1) * (zm + 1);  // |z + i|^2
  const Real wr = (zr * zr + zm * zm - 1) / den_in;
  const Real wi = -2 * zr / den_in;
  const Real r = sqrt(wr * wr + wi * wi);
  if (r == 0) return x;
  const Real c = wr / r;
  const Real s = wi / r;
  // atanh r = log((1 + r)^2 / (1 - r^2)) / 2 and 1 - r^2 = 4 zm / |z + i|^2
  const Real half_d = log((1 + r) * (1 + r) * den_in / (4 * zm)) / 2;
  const Real E = exp(-2 * lambda * half_d);
  const Real t = (1 - E) / (1 + E);
  const Real one_minus_t = 2 * E / (1 + E);
  const Real sech2 = 4 * E / ((1 + E) * (1 + E));
  const Real one_minus_c = c > 0 ? s * s / (1 + c) : 1 - c;
  const Real a = one_minus_t + t * one_minus_c;
  const Real den = a * a + t * t * s * s;
  Point out(2, Real(0));
  out[0] = b[0] + b[1] * (-2 * t * s / den);
  out[1] = b[1] * (sech2 / den);
  return Element(out);
}

Real HyperbolicIrq::distance(const Element& a, const Element& b) const {
  const Point& p = a.coords();
  const Point& q = b.coords();
  return 2 * asinh(euclidean_norm(p - q) / (2 * sqrt(p[1] * q[1])));
}

std::vector<Element> HyperbolicIrq::sample(std::uint64_t seed, std::size_t count, double radius) const {
  Rng rng(seed);
  const Element base = base_point();
  std::vector<Element> out;
  out.reserve(count);
  // at (0, 1) the tangent norm is the Euclidean one, so this is the metric ball
  for (std::size_t i = 0; i < count; ++i) out.push_back(exp_map(base, rng.in_ball(2, radius)));
  return out;
}

std::optional<Element> HyperbolicIrq::divide_closed_form(long k, const Element& b, const Element& a) const {
  // b sits on the geodesic from y to a at fraction eps^k of the way
  const Real ek = boost::multiprecision::pow(epsilon_, Real(k));
  return exp_map(a, (Real(1) / (1 - ek)) * log_map(a, b));
}

std::shared_ptr<const HyperbolicIrq> make_hyperbolic(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw ConstructionError("hyperbolic: epsilon must lie in (0, 1), got " + std::to_string(epsilon));
  return std::make_shared<const HyperbolicIrq>(Real(epsilon));
}

}  // namespace eirq
