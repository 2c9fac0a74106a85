#ifndef EIRQ_IRQ_HPP
#define EIRQ_IRQ_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eirq/element.hpp"
#include "eirq/errors.hpp"

namespace eirq {

class GroupIrq;

struct CarrierDescriptor {
  enum class Kind { coordinates, labels };
  Kind kind = Kind::coordinates;
  std::size_t size = 0;  // dimension, or cardinality for labels
};

/// Log/exp maps at a base point: identifies a neighbourhood of the base with
/// a vector space. Used by the generic fixed-point division.
class Chart {
 public:
  virtual ~Chart() = default;
  virtual Point log_at(const Element& base, const Element& e) const = 0;
  virtual Element exp_at(const Element& base, const Point& v) const = 0;
};

/// An idempotent right quasigroup (X, *, \) on a concrete carrier.
///
/// Implementations guarantee x * (x \ y) = x \ (x * y) = y and x * x = x \ x = x
/// (exactly on finite carriers, to rounding otherwise). Instances are immutable
/// and safe to share across threads.
class Irq {
 public:
  virtual ~Irq() = default;

  virtual std::string name() const = 0;
  virtual CarrierDescriptor carrier() const = 0;

  virtual Element star(const Element& x, const Element& u) const = 0;
  virtual Element back(const Element& x, const Element& u) const = 0;

  /// Carrier metric. Residuals of finite-level identities are measured here.
  virtual Real distance(const Element& a, const Element& b) const = 0;

  /// Coordinate distance used for convergence trails and limit residuals.
  /// Equals distance() unless the carrier metric is not Lipschitz in the
  /// coordinates (Carnot homogeneous metrics).
  virtual Real chart_distance(const Element& a, const Element& b) const { return distance(a, b); }

  /// Centre of the sampling balls.
  virtual Element base_point() const = 0;

  /// Deterministic sample of `count` points in the metric ball of the given
  /// radius around base_point().
  virtual std::vector<Element> sample(std::uint64_t seed, std::size_t count, double radius) const = 0;

  /// All elements of a finite carrier; empty for continuous ones.
  virtual std::vector<Element> enumerate() const { return {}; }

  virtual bool is_uniform() const = 0;
  virtual bool is_exact() const = 0;

  virtual const Chart* chart() const { return nullptr; }
  virtual const GroupIrq* as_group_irq() const { return nullptr; }

  /// Solution y of y *_k a = b when the carrier has a closed form for it.
  virtual std::optional<Element> divide_closed_form(long k, const Element& b, const Element& a) const {
    (void)k, (void)b, (void)a;
    return std::nullopt;
  }

  virtual bool contains(const Element& e) const;
  void require(const Element& e) const;
};

using IrqPtr = std::shared_ptr<const Irq>;

/// Nonzero iteration exponent k with |k| <= 10^6.
class IterExponent {
 public:
  static constexpr long kMaxMagnitude = 1'000'000;

  IterExponent(long k);  // NOLINT: implicit from integer literals is intended
  long value() const { return k_; }

 private:
  long k_;
};

// Level-k operations of (X, *_k, \_k). star_k is evaluated by repeated
// application of * (or \ for k < 0), never by a closed form.
Element star_k(const Irq& irq, IterExponent k, const Element& x, const Element& u);
Element back_k(const Irq& irq, IterExponent k, const Element& x, const Element& u);

/// (xuv)_k = (x *_k u) \_k (x *_k v), i.e. v -_k^x u.
Element difference_k(const Irq& irq, IterExponent k, const Element& x, const Element& u, const Element& v);

/// )xuv(_k = x \_k ((x *_k u) *_k v), i.e. u +_k^x v.
Element sum_k(const Irq& irq, IterExponent k, const Element& x, const Element& u, const Element& v);

/// inv_k(x, u) = (x *_k u) \_k x, i.e. -_k^x u.
Element inverse_k(const Irq& irq, IterExponent k, const Element& x, const Element& u);

}  // namespace eirq

#endif
