#ifndef EIRQ_LIE_ALGEBRA_HPP
#define EIRQ_LIE_ALGEBRA_HPP

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "eirq/element.hpp"

namespace eirq {

/// Layer structure of a graded vector space n = V_1 + ... + V_m. Basis vectors
/// are ordered layer by layer.
class Grading {
 public:
  Grading() = default;
  explicit Grading(std::vector<std::size_t> layer_dims);

  const std::vector<std::size_t>& layer_dims() const { return dims_; }
  std::size_t dimension() const { return degrees_.size(); }
  std::size_t step() const { return dims_.size(); }
  /// Q = sum_i i dim V_i
  std::size_t homogeneous_dimension() const;
  /// Layer (1-based) of basis vector `index`.
  int degree(std::size_t index) const { return degrees_[index]; }

  /// max_i |g_i|^(1/i), g_i the layer-i block.
  Real homogeneous_norm(const Point& g) const;
  /// Scales layer i by t^i.
  Point dilate(const Point& g, const Real& t) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<int> degrees_;
};

/// Structure constants of a stratified nilpotent Lie algebra:
/// [e_i, e_j] = sum_k c_ij^k e_k. Construction checks antisymmetry, the
/// grading [V_a, V_b] in V_(a+b), stratification V_(i+1) = [V_1, V_i] and the
/// Jacobi identity, and throws ConstructionError on failure.
class GradedLieAlgebra {
 public:
  struct Bracket {
    std::size_t i = 0;
    std::size_t j = 0;
    std::vector<std::pair<std::size_t, double>> coeffs;  // (k, c_ij^k)
  };

  GradedLieAlgebra(std::vector<std::size_t> layer_dims, std::vector<Bracket> brackets);

  /// {"layers":[...],"brackets":[{"i":..,"j":..,"coeffs":{"k": c}}]}
  static GradedLieAlgebra from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  const Grading& grading() const { return grading_; }
  std::size_t dimension() const { return grading_.dimension(); }
  std::size_t step() const { return grading_.step(); }

  Point bracket(const Point& x, const Point& y) const;
  Real structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

 private:
  struct Term {
    std::size_t i, j, k;
    Real c;
  };

  // dense c_ij^k table, indexed (i * n + j) * n + k
  std::vector<double> validate() const;

  Grading grading_;
  std::vector<Bracket> input_;
  std::vector<Term> terms_;  // both (i,j) and (j,i) entries
};

GradedLieAlgebra abelian_algebra(std::size_t dim);
/// [X1, X2] = X3
GradedLieAlgebra heisenberg_algebra();
/// [X1, X2] = X3, [X1, X3] = X4; the smallest step-3 Carnot algebra.
GradedLieAlgebra engel_algebra();

}  // namespace eirq

#endif
