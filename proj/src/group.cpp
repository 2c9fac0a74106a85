#include "eirq/group.hpp"

#include <cmath>

namespace eirq {

Point Group::sample_ball(Rng& rng, double radius) const {
  Point out;
  out.reserve(dimension());
  const auto& dims = grading_.layer_dims();
  for (std::size_t layer = 0; layer < dims.size(); ++layer) {
    const Point block = rng.in_ball(dims[layer], std::pow(radius, static_cast<double>(layer + 1)));
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

Point HeisenbergGroup::product(const Point& a, const Point& b) const {
  Point out(3, Real(0));
  out[0] = a[0] + b[0];
  out[1] = a[1] + b[1];
  out[2] = a[2] + b[2] + (a[0] * b[1] - b[0] * a[1]) / 2;
  return out;
}

CarnotGroup::CarnotGroup(GradedLieAlgebra algebra) : Group(algebra.grading()), algebra_(std::move(algebra)) {
  if (algebra_.step() > 4)
    throw ConstructionError("step " + std::to_string(algebra_.step()) + " > 4: BCH truncation would not be exact");
}

Point CarnotGroup::product(const Point& a, const Point& b) const {
  const std::size_t step = algebra_.step();
  Point z = a + b;
  if (step < 2) return z;
  const Point ab = algebra_.bracket(a, b);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += ab[i] / 2;
  if (step < 3) return z;
  const Point a_ab = algebra_.bracket(a, ab);
  const Point b_ab = algebra_.bracket(b, ab);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += (a_ab[i] - b_ab[i]) / 12;
  if (step < 4) return z;
  const Point b_a_ab = algebra_.bracket(b, a_ab);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] -= b_a_ab[i] / 24;
  return z;
}

GroupMap dilation(const Grading& grading, Real epsilon) {
  const Real inv = Real(1) / epsilon;
  return {[grading, epsilon](const Point& p) { return grading.dilate(p, epsilon); },
          [grading, inv](const Point& p) { return grading.dilate(p, inv); }};
}

GroupIrq::GroupIrq(std::shared_ptr<const Group> group, GroupMap delta, GroupIrqOptions options)
    : group_(std::move(group)), delta_(std::move(delta)), options_(std::move(options)) {}

Element GroupIrq::star(const Element& x, const Element& u) const {
  const auto& xc = x.coords();
  return Element(group_->product(xc, delta_.forward(group_->product(group_->inverse(xc), u.coords()))));
}

Element GroupIrq::back(const Element& x, const Element& u) const {
  const auto& xc = x.coords();
  return Element(group_->product(xc, delta_.inverse(group_->product(group_->inverse(xc), u.coords()))));
}

Real GroupIrq::distance(const Element& a, const Element& b) const {
  return group_->norm(group_->product(group_->inverse(a.coords()), b.coords()));
}

Real GroupIrq::chart_distance(const Element& a, const Element& b) const {
  return euclidean_norm(b.coords() - a.coords());
}

std::vector<Element> GroupIrq::sample(std::uint64_t seed, std::size_t count, double radius) const {
  Rng rng(seed);
  std::vector<Element> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(group_->sample_ball(rng, radius));
  return out;
}

Point GroupIrq::log_at(const Element& base, const Element& e) const {
  return group_->product(group_->inverse(base.coords()), e.coords());
}

Element GroupIrq::exp_at(const Element& base, const Point& v) const {
  return Element(group_->product(base.coords(), v));
}

Point GroupIrq::delta_power(const Point& p, long k) const {
  Point out(p);
  if (k > 0) {
    for (long i = 0; i < k; ++i) out = delta_.forward(out);
  } else {
    for (long i = 0; i < -k; ++i) out = delta_.inverse(out);
  }
  return out;
}

std::shared_ptr<const GroupIrq> make_group_irq(std::shared_ptr<const Group> group, GroupMap delta,
                                               GroupIrqOptions options) {
  if (!group) throw ConstructionError("group irq needs a group");
  if (!delta.forward || !delta.inverse) throw ConstructionError("group irq needs delta and its inverse");
  const Point e = group->neutral();
  if (euclidean_norm(delta.forward(e) - e) > Real(1e-20))
    throw ConstructionError("delta(e) != e for " + options.name);
  Rng rng(0x5eed);
  for (int i = 0; i < 8; ++i) {
    const Point g = group->sample_ball(rng, 1.0);
    const Real scale = 1 + euclidean_norm(g);
    if (euclidean_norm(delta.forward(delta.inverse(g)) - g) > Real(1e-20) * scale ||
        euclidean_norm(delta.inverse(delta.forward(g)) - g) > Real(1e-20) * scale)
      throw ConstructionError("delta_inverse is not the inverse of delta for " + options.name);
  }
  return std::make_shared<const GroupIrq>(std::move(group), std::move(delta), std::move(options));
}

}  // namespace eirq
