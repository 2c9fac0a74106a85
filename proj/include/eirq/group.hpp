#ifndef EIRQ_GROUP_HPP
#define EIRQ_GROUP_HPP

#include <functional>
#include <memory>
#include <string>

#include "eirq/irq.hpp"
#include "eirq/lie_algebra.hpp"
#include "eirq/sampling.hpp"

namespace eirq {

/// A graded group in exponential coordinates: neutral element 0, norm the
/// homogeneous norm of the grading.
class Group {
 public:
  explicit Group(Grading grading) : grading_(std::move(grading)) {}
  virtual ~Group() = default;

  virtual std::string name() const = 0;
  virtual Point product(const Point& a, const Point& b) const = 0;
  virtual Point inverse(const Point& a) const { return -a; }

  std::size_t dimension() const { return grading_.dimension(); }
  Point neutral() const { return zero_point(dimension()); }
  const Grading& grading() const { return grading_; }
  Real norm(const Point& g) const { return grading_.homogeneous_norm(g); }

  /// Uniform in each layer ball |g_i| <= radius^i, i.e. a homogeneous-norm ball.
  Point sample_ball(Rng& rng, double radius) const;

 private:
  Grading grading_;
};

/// (R^n, +)
class AbelianGroup final : public Group {
 public:
  explicit AbelianGroup(std::size_t dim) : Group(Grading({dim})) {}
  std::string name() const override { return "R^" + std::to_string(dimension()); }
  Point product(const Point& a, const Point& b) const override { return a + b; }
};

/// Heisenberg group with the hand-written step-2 law
/// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+(ab'-a'b)/2).
class HeisenbergGroup final : public Group {
 public:
  HeisenbergGroup() : Group(Grading({2, 1})) {}
  std::string name() const override { return "heisenberg"; }
  Point product(const Point& a, const Point& b) const override;
};

/// Simply connected group of a stratified algebra of step <= 4, product from
/// the Baker-Campbell-Hausdorff series truncated at nested-bracket depth 4
/// (exact for nilpotency step <= 4).
class CarnotGroup final : public Group {
 public:
  explicit CarnotGroup(GradedLieAlgebra algebra);
  std::string name() const override { return "carnot"; }
  Point product(const Point& a, const Point& b) const override;
  const GradedLieAlgebra& algebra() const { return algebra_; }

 private:
  GradedLieAlgebra algebra_;
};

/// A bijection of the group and its inverse.
struct GroupMap {
  std::function<Point(const Point&)> forward;
  std::function<Point(const Point&)> inverse;
};

/// delta_eps: layer i scaled by eps^i. A group and Lie algebra morphism.
GroupMap dilation(const Grading& grading, Real epsilon);

struct GroupIrqOptions {
  std::string name = "group";
  bool is_morphism = false;
  bool is_contractive = false;
};

/// The irq G(delta): x * u = x delta(x^-1 u), x \ u = x delta^-1(x^-1 u).
///
/// The carrier metric is d(a,b) = |a^-1 b| in the homogeneous norm; the chart
/// distance is the Euclidean distance of exponential coordinates.
class GroupIrq : public Irq, public Chart {
 public:
  GroupIrq(std::shared_ptr<const Group> group, GroupMap delta, GroupIrqOptions options);

  std::string name() const override { return options_.name; }
  CarrierDescriptor carrier() const override { return {CarrierDescriptor::Kind::coordinates, group_->dimension()}; }
  Element star(const Element& x, const Element& u) const override;
  Element back(const Element& x, const Element& u) const override;
  Real distance(const Element& a, const Element& b) const override;
  Real chart_distance(const Element& a, const Element& b) const override;
  Element base_point() const override { return Element(group_->neutral()); }
  std::vector<Element> sample(std::uint64_t seed, std::size_t count, double radius) const override;
  bool is_uniform() const override { return options_.is_contractive; }
  bool is_exact() const override { return false; }
  const Chart* chart() const override { return this; }
  const GroupIrq* as_group_irq() const override { return this; }

  Point log_at(const Element& base, const Element& e) const override;
  Element exp_at(const Element& base, const Point& v) const override;

  const Group& group() const { return *group_; }
  std::shared_ptr<const Group> group_ptr() const { return group_; }
  const GroupMap& delta() const { return delta_; }
  bool is_morphism() const { return options_.is_morphism; }

  Element multiply(const Element& a, const Element& b) const { return Element(group_->product(a.coords(), b.coords())); }
  Element invert(const Element& a) const { return Element(group_->inverse(a.coords())); }
  /// delta^k by repeated application (delta^-1 for k < 0).
  Point delta_power(const Point& p, long k) const;

 private:
  std::shared_ptr<const Group> group_;
  GroupMap delta_;
  GroupIrqOptions options_;
};

/// Builds G(delta). Checks delta(e) = e and delta(delta^-1(g)) = g on samples;
/// throws ConstructionError otherwise.
std::shared_ptr<const GroupIrq> make_group_irq(std::shared_ptr<const Group> group, GroupMap delta,
                                               GroupIrqOptions options);

}  // namespace eirq

#endif
