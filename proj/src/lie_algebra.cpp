#include "eirq/lie_algebra.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "eirq/errors.hpp"

namespace eirq {

Grading::Grading(std::vector<std::size_t> layer_dims) : dims_(std::move(layer_dims)) {
  if (dims_.empty()) throw ConstructionError("grading needs at least one layer");
  for (std::size_t layer = 0; layer < dims_.size(); ++layer) {
    if (dims_[layer] == 0) throw ConstructionError("layer " + std::to_string(layer + 1) + " has dimension 0");
    degrees_.insert(degrees_.end(), dims_[layer], static_cast<int>(layer + 1));
  }
}

std::size_t Grading::homogeneous_dimension() const {
  std::size_t q = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) q += (i + 1) * dims_[i];
  return q;
}

Real Grading::homogeneous_norm(const Point& g) const {
  Real best = 0;
  std::size_t offset = 0;
  for (std::size_t layer = 0; layer < dims_.size(); ++layer) {
    Real sq = 0;
    for (std::size_t a = 0; a < dims_[layer]; ++a) sq += g[offset + a] * g[offset + a];
    offset += dims_[layer];
    const Real n = sqrt(sq);
    const Real root = layer == 0 ? n : pow(n, Real(1) / Real(layer + 1));
    if (root > best) best = root;
  }
  return best;
}

Point Grading::dilate(const Point& g, const Real& t) const {
  Point out(g);
  Real scale = t;
  std::size_t offset = 0;
  for (std::size_t layer = 0; layer < dims_.size(); ++layer) {
    for (std::size_t a = 0; a < dims_[layer]; ++a) out[offset + a] *= scale;
    offset += dims_[layer];
    scale *= t;
  }
  return out;
}

GradedLieAlgebra::GradedLieAlgebra(std::vector<std::size_t> layer_dims, std::vector<Bracket> brackets)
    : grading_(std::move(layer_dims)), input_(std::move(brackets)) {
  const std::size_t n = dimension();
  const auto table = validate();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (const double c = table[(i * n + j) * n + k]; c != 0.0) terms_.push_back({i, j, k, Real(c)});
}

std::vector<double> GradedLieAlgebra::validate() const {
  const std::size_t n = dimension();
  auto at = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
  std::vector<double> table(n * n * n, 0.0);
  std::vector<char> given(n * n * n, 0);

  for (const auto& b : input_) {
    if (b.i >= n || b.j >= n)
      throw ConstructionError("bracket [" + std::to_string(b.i) + "," + std::to_string(b.j) + "] index out of range");
    for (const auto& [k, c] : b.coeffs) {
      if (k >= n) throw ConstructionError("bracket coefficient index " + std::to_string(k) + " out of range");
      if (!std::isfinite(c)) throw ConstructionError("non-finite structure constant");
      if (c == 0.0) continue;
      if (b.i == b.j) throw ConstructionError("antisymmetry violated: [e" + std::to_string(b.i) + ",e" + std::to_string(b.i) + "] != 0");
      const auto ij = at(b.i, b.j, k);
      const auto ji = at(b.j, b.i, k);
      if ((given[ij] && table[ij] != c) || (given[ji] && table[ji] != -c))
        throw ConstructionError("antisymmetry violated for [e" + std::to_string(b.i) + ",e" + std::to_string(b.j) + "]");
      table[ij] = c;
      table[ji] = -c;
      given[ij] = given[ji] = 1;
      if (grading_.degree(k) != grading_.degree(b.i) + grading_.degree(b.j))
        throw ConstructionError("grading violated: [e" + std::to_string(b.i) + ",e" + std::to_string(b.j) +
                                "] has a component on e" + std::to_string(k) + " of degree " +
                                std::to_string(grading_.degree(k)));
    }
  }

  // Jacobi on basis triples
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t k = 0; k < n; ++k) {
          double s = 0.0;
          for (std::size_t l = 0; l < n; ++l) {
            s += table[at(b, c, l)] * table[at(a, l, k)];
            s += table[at(c, a, l)] * table[at(b, l, k)];
            s += table[at(a, b, l)] * table[at(c, l, k)];
          }
          if (std::abs(s) > 1e-12)
            throw ConstructionError("Jacobi identity fails on (e" + std::to_string(a) + ",e" + std::to_string(b) +
                                    ",e" + std::to_string(c) + ")");
        }
      }

  // stratification: V_(i+1) is spanned by [V_1, V_i]
  const auto& dims = grading_.layer_dims();
  std::vector<std::size_t> offsets(dims.size() + 1, 0);
  for (std::size_t l = 0; l < dims.size(); ++l) offsets[l + 1] = offsets[l] + dims[l];
  for (std::size_t layer = 1; layer < dims.size(); ++layer) {
    Eigen::MatrixXd span(dims[layer], dims[0] * dims[layer - 1]);
    std::size_t col = 0;
    for (std::size_t a = offsets[0]; a < offsets[1]; ++a)
      for (std::size_t b = offsets[layer - 1]; b < offsets[layer]; ++b, ++col)
        for (std::size_t k = offsets[layer]; k < offsets[layer + 1]; ++k)
          span(static_cast<Eigen::Index>(k - offsets[layer]), static_cast<Eigen::Index>(col)) = table[at(a, b, k)];
    Eigen::FullPivLU<Eigen::MatrixXd> lu(span);
    lu.setThreshold(1e-10);
    if (static_cast<std::size_t>(lu.rank()) != dims[layer])
      throw ConstructionError("grading violated: [V_1, V_" + std::to_string(layer) + "] does not span V_" +
                              std::to_string(layer + 1));
  }
  return table;
}

Point GradedLieAlgebra::bracket(const Point& x, const Point& y) const {
  Point out = zero_point(dimension());
  for (const auto& t : terms_) out[t.k] += t.c * x[t.i] * y[t.j];
  return out;
}

Real GradedLieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& t : terms_)
    if (t.i == i && t.j == j && t.k == k) return t.c;
  return 0;
}

GradedLieAlgebra GradedLieAlgebra::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConstructionError("algebra description must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "layers" && key != "brackets") throw ConstructionError("unknown algebra key '" + key + "'");
  if (!j.contains("layers") || !j["layers"].is_array()) throw ConstructionError("algebra needs a 'layers' array");
  std::vector<std::size_t> layers;
  for (const auto& d : j["layers"]) {
    if (!d.is_number_integer() || d.get<long long>() <= 0)
      throw ConstructionError("layer dimensions must be positive integers");
    layers.push_back(d.get<std::size_t>());
  }
  std::vector<Bracket> brackets;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw ConstructionError("'brackets' must be an array");
    for (const auto& b : j["brackets"]) {
      if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("coeffs") ||
          !b["i"].is_number_integer() || !b["j"].is_number_integer() || !b["coeffs"].is_object() ||
          b["i"].get<long long>() < 0 || b["j"].get<long long>() < 0)
        throw ConstructionError("bracket entries need integer 'i', 'j' and an object 'coeffs'");
      Bracket br;
      br.i = b["i"].get<std::size_t>();
      br.j = b["j"].get<std::size_t>();
      for (const auto& [key, val] : b["coeffs"].items()) {
        std::size_t k = 0;
        try {
          std::size_t used = 0;
          const long long parsed = std::stoll(key, &used);
          if (used != key.size() || parsed < 0) throw std::invalid_argument(key);
          k = static_cast<std::size_t>(parsed);
        } catch (const std::exception&) {
          throw ConstructionError("coefficient key '" + key + "' is not a basis index");
        }
        if (!val.is_number()) throw ConstructionError("structure constants must be numbers");
        br.coeffs.emplace_back(k, val.get<double>());
      }
      brackets.push_back(std::move(br));
    }
  }
  return GradedLieAlgebra(std::move(layers), std::move(brackets));
}

nlohmann::json GradedLieAlgebra::to_json() const {
  nlohmann::json j;
  j["layers"] = grading_.layer_dims();
  j["brackets"] = nlohmann::json::array();
  for (const auto& b : input_) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [k, c] : b.coeffs) coeffs[std::to_string(k)] = c;
    j["brackets"].push_back({{"i", b.i}, {"j", b.j}, {"coeffs", coeffs}});
  }
  return j;
}

GradedLieAlgebra abelian_algebra(std::size_t dim) { return GradedLieAlgebra({dim}, {}); }

GradedLieAlgebra heisenberg_algebra() { return GradedLieAlgebra({2, 1}, {{0, 1, {{2, 1.0}}}}); }

GradedLieAlgebra engel_algebra() { return GradedLieAlgebra({2, 1, 1}, {{0, 1, {{2, 1.0}}}, {0, 2, {{3, 1.0}}}}); }

}  // namespace eirq
