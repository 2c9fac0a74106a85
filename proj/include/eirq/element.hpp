#ifndef EIRQ_ELEMENT_HPP
#define EIRQ_ELEMENT_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <variant>

#include <boost/container/small_vector.hpp>

#include "eirq/real.hpp"

namespace eirq {

/// Coordinates of a point of a continuous carrier.
using Point = boost::container::small_vector<Real, 4>;

Point make_point(std::initializer_list<double> coords);
Point zero_point(std::size_t dim);

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator-(const Point& a);
Point operator*(const Real& s, const Point& a);

Real dot(const Point& a, const Point& b);
Real euclidean_norm(const Point& a);

/// A point of a carrier set: real coordinates on continuous carriers, an
/// integer label on finite ones. The tag is fixed by the owning carrier.
class Element {
 public:
  Element() = default;
  Element(Point coords) : value_(std::move(coords)) {}
  Element(std::initializer_list<double> coords) : value_(make_point(coords)) {}

  static Element label(std::uint32_t value) {
    Element e;
    e.value_ = value;
    return e;
  }

  bool is_label() const { return std::holds_alternative<std::uint32_t>(value_); }

  const Point& coords() const { return std::get<Point>(value_); }
  Point& coords() { return std::get<Point>(value_); }
  std::uint32_t label_value() const { return std::get<std::uint32_t>(value_); }

  bool operator==(const Element& other) const { return value_ == other.value_; }

  std::string to_string() const;

 private:
  std::variant<Point, std::uint32_t> value_;
};

}  // namespace eirq

#endif
