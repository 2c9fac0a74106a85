#include "eirq/carriers.hpp"

#include <boost/multiprecision/float128.hpp>

namespace eirq {

namespace {

void require_epsilon(double epsilon, const char* what) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw ConstructionError(std::string(what) + ": epsilon must lie in (0, 1), got " + std::to_string(epsilon));
}

}  // namespace

EuclideanIrq::EuclideanIrq(std::size_t dim, Real epsilon)
    : GroupIrq(std::make_shared<const AbelianGroup>(dim), dilation(Grading({dim}), epsilon),
               GroupIrqOptions{"euclidean", true, true}),
      epsilon_(epsilon) {}

Element EuclideanIrq::star(const Element& x, const Element& u) const {
  const auto& xc = x.coords();
  return Element(xc + epsilon_ * (u.coords() - xc));
}

Element EuclideanIrq::back(const Element& x, const Element& u) const {
  const auto& xc = x.coords();
  return Element(xc + (Real(1) / epsilon_) * (u.coords() - xc));
}

std::optional<Element> EuclideanIrq::divide_closed_form(long k, const Element& b, const Element& a) const {
  // y + eps^k (a - y) = b
  const Real ek = boost::multiprecision::pow(epsilon_, Real(k));
  return Element((Real(1) / (1 - ek)) * (b.coords() - ek * a.coords()));
}

DihedralQuandle::DihedralQuandle(std::uint32_t n) : n_(n) {
  if (n < 3) throw ConstructionError("dihedral quandle needs n >= 3, got " + std::to_string(n));
}

Element DihedralQuandle::star(const Element& x, const Element& u) const {
  const std::uint64_t n = n_;
  return Element::label(static_cast<std::uint32_t>((2 * std::uint64_t{x.label_value()} + n - u.label_value()) % n));
}

std::vector<Element> DihedralQuandle::sample(std::uint64_t seed, std::size_t count, double radius) const {
  (void)radius;
  Rng rng(seed);
  std::vector<Element> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(Element::label(static_cast<std::uint32_t>(rng.below(n_))));
  return out;
}

std::vector<Element> DihedralQuandle::enumerate() const {
  std::vector<Element> out;
  out.reserve(n_);
  for (std::uint32_t i = 0; i < n_; ++i) out.push_back(Element::label(i));
  return out;
}

std::shared_ptr<const EuclideanIrq> make_euclidean(std::size_t dim, double epsilon) {
  require_epsilon(epsilon, "euclidean");
  if (dim == 0) throw ConstructionError("euclidean: dim must be >= 1");
  return std::make_shared<const EuclideanIrq>(dim, Real(epsilon));
}

std::shared_ptr<const GroupIrq> make_heisenberg(double epsilon) {
  require_epsilon(epsilon, "heisenberg");
  auto group = std::make_shared<const HeisenbergGroup>();
  auto delta = dilation(group->grading(), Real(epsilon));
  return make_group_irq(group, std::move(delta), {"heisenberg", true, true});
}

std::shared_ptr<const GroupIrq> make_carnot(const GradedLieAlgebra& algebra, double epsilon) {
  require_epsilon(epsilon, "carnot");
  auto group = std::make_shared<const CarnotGroup>(algebra);
  auto delta = dilation(group->grading(), Real(epsilon));
  return make_group_irq(group, std::move(delta), {"carnot", true, true});
}

std::shared_ptr<const GroupIrq> make_engel(double epsilon) {
  require_epsilon(epsilon, "engel");
  auto group = std::make_shared<const CarnotGroup>(engel_algebra());
  auto delta = dilation(group->grading(), Real(epsilon));
  return make_group_irq(group, std::move(delta), {"engel", true, true});
}

std::shared_ptr<const DihedralQuandle> make_dihedral_quandle(long n) {
  if (n < 3 || n > 0xffffffffL) throw ConstructionError("dihedral quandle needs 3 <= n < 2^32, got " + std::to_string(n));
  return std::make_shared<const DihedralQuandle>(static_cast<std::uint32_t>(n));
}

std::shared_ptr<const GroupIrq> make_nonmorphism_plane(double epsilon, double eta) {
  require_epsilon(epsilon, "nonmorphism");
  if (!(eta >= 0.0 && eta < epsilon && epsilon + eta < 1.0))
    throw ConstructionError("nonmorphism: need 0 <= eta < epsilon and epsilon + eta < 1");
  const Real e(epsilon), h(eta);
  GroupMap delta;
  delta.forward = [e, h](const Point& p) {
    Point q(2, Real(0));
    q[0] = e * p[0] + h * sin(p[1]);
    q[1] = e * p[1] + h * sin(p[0]);
    return q;
  };
  // Newton on eps q + eta s(q) = p from q = p / eps; the Jacobian
  // [[eps, eta cos q1], [eta cos q0, eps]] is invertible since eta < eps
  delta.inverse = [e, h](const Point& p) {
    Point q = (Real(1) / e) * p;
    for (int it = 0; it < 60; ++it) {
      const Real f0 = e * q[0] + h * sin(q[1]) - p[0];
      const Real f1 = e * q[1] + h * sin(q[0]) - p[1];
      const Real b = h * cos(q[1]);
      const Real c = h * cos(q[0]);
      const Real det = e * e - b * c;
      const Real d0 = (e * f0 - b * f1) / det;
      const Real d1 = (e * f1 - c * f0) / det;
      q[0] -= d0;
      q[1] -= d1;
      if (abs(d0) + abs(d1) <= Real(1e-33) * (1 + abs(q[0]) + abs(q[1]))) break;
    }
    return q;
  };
  return make_group_irq(std::make_shared<const AbelianGroup>(2), std::move(delta), {"nonmorphism", false, true});
}

Real homogeneous_norm(const GroupIrq& carnot, const Element& g) {
  carnot.require(g);
  return carnot.group().norm(g.coords());
}

}  // namespace eirq
