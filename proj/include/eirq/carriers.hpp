#ifndef EIRQ_CARRIERS_HPP
#define EIRQ_CARRIERS_HPP

#include <memory>

#include "eirq/group.hpp"
#include "eirq/irq.hpp"
#include "eirq/lie_algebra.hpp"

namespace eirq {

/// R^n with x * u = x + eps (u - x), x \ u = x + (u - x) / eps.
class EuclideanIrq final : public GroupIrq {
 public:
  EuclideanIrq(std::size_t dim, Real epsilon);

  Element star(const Element& x, const Element& u) const override;
  Element back(const Element& x, const Element& u) const override;
  Real distance(const Element& a, const Element& b) const override { return chart_distance(a, b); }
  std::optional<Element> divide_closed_form(long k, const Element& b, const Element& a) const override;

  Real epsilon() const { return epsilon_; }

 private:
  Real epsilon_;
};

/// Dihedral quandle of order n: x * u = 2x - u mod n, and \ = *.
class DihedralQuandle final : public Irq {
 public:
  explicit DihedralQuandle(std::uint32_t n);

  std::string name() const override { return "dihedral"; }
  CarrierDescriptor carrier() const override { return {CarrierDescriptor::Kind::labels, n_}; }
  Element star(const Element& x, const Element& u) const override;
  Element back(const Element& x, const Element& u) const override { return star(x, u); }
  Real distance(const Element& a, const Element& b) const override { return a == b ? 0 : 1; }
  Element base_point() const override { return Element::label(0); }
  std::vector<Element> sample(std::uint64_t seed, std::size_t count, double radius) const override;
  std::vector<Element> enumerate() const override;
  bool is_uniform() const override { return false; }
  bool is_exact() const override { return true; }

  std::uint32_t order() const { return n_; }

 private:
  std::uint32_t n_;
};

/// Upper half-plane {(x, y) : y > 0} with ds^2 = (dx^2 + dy^2) / y^2 and
/// x * exp_x(X) = exp_x(eps X). Tangent vectors are given in half-plane
/// coordinates.
class HyperbolicIrq final : public Irq, public Chart {
 public:
  explicit HyperbolicIrq(Real epsilon);

  std::string name() const override { return "hyperbolic"; }
  CarrierDescriptor carrier() const override { return {CarrierDescriptor::Kind::coordinates, 2}; }
  Element star(const Element& x, const Element& u) const override;
  Element back(const Element& x, const Element& u) const override;
  /// Geodesic distance.
  Real distance(const Element& a, const Element& b) const override;
  Element base_point() const override { return Element({0.0, 1.0}); }
  std::vector<Element> sample(std::uint64_t seed, std::size_t count, double radius) const override;
  bool is_uniform() const override { return true; }
  bool is_exact() const override { return false; }
  bool contains(const Element& e) const override;
  const Chart* chart() const override { return this; }
  std::optional<Element> divide_closed_form(long k, const Element& b, const Element& a) const override;

  Point log_at(const Element& base, const Element& e) const override { return log_map(base, e); }
  Element exp_at(const Element& base, const Point& v) const override { return exp_map(base, v); }

  Element exp_map(const Element& base, const Point& v) const;
  Point log_map(const Element& base, const Element& p) const;
  /// Riemannian length of a tangent vector at base.
  Real tangent_norm(const Element& base, const Point& v) const;

  Real epsilon() const { return epsilon_; }

 private:
  Element scale_along(const Element& x, const Element& u, const Real& lambda) const;

  Real epsilon_;
};

std::shared_ptr<const EuclideanIrq> make_euclidean(std::size_t dim, double epsilon);
std::shared_ptr<const GroupIrq> make_heisenberg(double epsilon);
std::shared_ptr<const GroupIrq> make_carnot(const GradedLieAlgebra& algebra, double epsilon);
std::shared_ptr<const GroupIrq> make_engel(double epsilon);
std::shared_ptr<const DihedralQuandle> make_dihedral_quandle(long n);
std::shared_ptr<const HyperbolicIrq> make_hyperbolic(double epsilon);

/// G(delta) on (R^2, +) with delta(p) = eps p + eta (sin p_2, sin p_1).
/// delta(0) = 0, it is contractive for eps + eta < 1 and invertible by
/// Newton iteration for eta < eps, but it is not a group morphism.
std::shared_ptr<const GroupIrq> make_nonmorphism_plane(double epsilon, double eta);

/// max over layers of |g_i|^(1/i).
Real homogeneous_norm(const GroupIrq& carnot, const Element& g);

}  // namespace eirq

#endif
