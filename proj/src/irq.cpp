#include "eirq/irq.hpp"

#include <string>

namespace eirq {

bool Irq::contains(const Element& e) const {
  const auto desc = carrier();
  if (desc.kind == CarrierDescriptor::Kind::labels) return e.is_label() && e.label_value() < desc.size;
  if (e.is_label() || e.coords().size() != desc.size) return false;
  for (const auto& c : e.coords())
    if (!is_finite(c)) return false;
  return true;
}

void Irq::require(const Element& e) const {
  if (!contains(e)) throw InvalidElement("element " + e.to_string() + " is not in carrier " + name());
}

IterExponent::IterExponent(long k) : k_(k) {
  if (k == 0) throw InvalidExponent("iteration exponent must be nonzero");
  if (k > kMaxMagnitude || k < -kMaxMagnitude)
    throw InvalidExponent("iteration exponent " + std::to_string(k) + " exceeds the bound 10^6");
}

namespace {

Element iterate(const Irq& irq, long k, const Element& x, Element u) {
  if (k > 0) {
    for (long i = 0; i < k; ++i) u = irq.star(x, u);
  } else {
    for (long i = 0; i < -k; ++i) u = irq.back(x, u);
  }
  return u;
}

}  // namespace

Element star_k(const Irq& irq, IterExponent k, const Element& x, const Element& u) {
  irq.require(x);
  irq.require(u);
  return iterate(irq, k.value(), x, u);
}

Element back_k(const Irq& irq, IterExponent k, const Element& x, const Element& u) {
  irq.require(x);
  irq.require(u);
  return iterate(irq, -k.value(), x, u);
}

Element difference_k(const Irq& irq, IterExponent k, const Element& x, const Element& u, const Element& v) {
  return back_k(irq, k, star_k(irq, k, x, u), star_k(irq, k, x, v));
}

Element sum_k(const Irq& irq, IterExponent k, const Element& x, const Element& u, const Element& v) {
  return back_k(irq, k, x, star_k(irq, k, star_k(irq, k, x, u), v));
}

Element inverse_k(const Irq& irq, IterExponent k, const Element& x, const Element& u) {
  return back_k(irq, k, star_k(irq, k, x, u), x);
}

}  // namespace eirq
