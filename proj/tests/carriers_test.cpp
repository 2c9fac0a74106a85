#include <gtest/gtest.h>

#include <cmath>

#include "eirq/axioms.hpp"
#include "eirq/carriers.hpp"
#include "eirq/emergent.hpp"
#include "eirq/group.hpp"
#include "support.hpp"

namespace eirq {
namespace {

using testing::coord;
using testing::coord_dist;
using testing::dist;
using testing::heis_dilate;
using testing::heis_inv;
using testing::heis_mul;

TEST(Euclidean, StarIsMidpoint) {
  auto e = make_euclidean(1, 0.5);
  EXPECT_EQ(coord(e->star(Element{0.0}, Element{4.0}), 0), 2.0);
  EXPECT_EQ(coord(e->star(Element{3.0}, Element{3.0}), 0), 3.0);
  EXPECT_EQ(coord(e->back(Element{0.0}, Element{1.0}), 0), 2.0);
}

TEST(Euclidean, RejectsBadEpsilon) {
  EXPECT_THROW(make_euclidean(2, 1.0), ConstructionError);
  EXPECT_THROW(make_euclidean(2, 0.0), ConstructionError);
  EXPECT_THROW(make_heisenberg(1.5), ConstructionError);
  EXPECT_THROW(make_hyperbolic(-0.5), ConstructionError);
}

TEST(Heisenberg, ProductByHand) {
  auto h = make_heisenberg(0.5);
  const Element p = h->multiply(Element{1.0, 0.0, 0.0}, Element{0.0, 1.0, 0.0});
  EXPECT_EQ(p, (Element{1.0, 1.0, 0.5}));
}

TEST(Heisenberg, DilationIsMorphism) {
  auto h = make_heisenberg(0.5);
  const auto d = dilation(h->group().grading(), Real(0.5));
  const Element a{1.0, 0.0, 0.0}, b{0.0, 1.0, 0.0};
  const Element lhs(d.forward(h->multiply(a, b).coords()));
  const Element rhs = h->multiply(Element(d.forward(a.coords())), Element(d.forward(b.coords())));
  EXPECT_EQ(lhs, (Element{0.5, 0.5, 0.125}));
  EXPECT_EQ(rhs, (Element{0.5, 0.5, 0.125}));
}

TEST(Heisenberg, StarAtNeutralIsDilation) {
  auto h = make_heisenberg(0.5);
  for (const auto& u : h->sample(3, 50, 2.0))
    EXPECT_LE(coord_dist(h->star(h->base_point(), u), heis_dilate(u, 0.5)), 1e-30);
}

TEST(Carnot, AbelianGradingMatchesEuclidean) {
  auto c = make_carnot(abelian_algebra(3), 0.5);
  auto e = make_euclidean(3, 0.5);
  for (const auto& x : e->sample(4, 20, 3.0)) {
    for (const auto& u : e->sample(5, 5, 3.0)) {
      EXPECT_LE(coord_dist(c->star(x, u), e->star(x, u)), 1e-30);
      EXPECT_LE(coord_dist(c->back(x, u), e->back(x, u)), 1e-30);
    }
  }
}

TEST(Carnot, HeisenbergConstantsReproduceHandLaw) {
  auto c = make_carnot(heisenberg_algebra(), 0.5);
  const auto pts = testing::box_points(17, 200, 3, 2.0);
  for (std::size_t i = 0; i + 1 < pts.size(); i += 2)
    EXPECT_LE(coord_dist(c->multiply(pts[i], pts[i + 1]), heis_mul(pts[i], pts[i + 1])), 1e-30);
}

TEST(Carnot, EngelProductIsAssociative) {
  auto g = make_engel(0.5);
  const auto pts = testing::box_points(19, 300, 4, 1.5);
  for (std::size_t i = 0; i + 2 < pts.size(); i += 3) {
    const auto &a = pts[i], &b = pts[i + 1], &c = pts[i + 2];
    EXPECT_LE(coord_dist(g->multiply(g->multiply(a, b), c), g->multiply(a, g->multiply(b, c))), 1e-10);
  }
}

TEST(Carnot, DilationsAreMorphismsAndCompose) {
  for (auto g : {make_heisenberg(0.5), make_engel(0.5)}) {
    const auto& grading = g->group().grading();
    const auto pts = g->sample(23, 60, 1.0);
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
      const auto &a = pts[i], &b = pts[i + 1];
      const Element lhs(grading.dilate(g->multiply(a, b).coords(), Real(0.5)));
      const Element rhs = g->multiply(Element(grading.dilate(a.coords(), Real(0.5))),
                                      Element(grading.dilate(b.coords(), Real(0.5))));
      EXPECT_LE(coord_dist(lhs, rhs), 1e-30);
      for (long k : {2L, 5L})
        EXPECT_LE(to_double(euclidean_norm(g->delta_power(a.coords(), k) -
                                           grading.dilate(a.coords(), pow(Real(0.5), k)))),
                  1e-30);
    }
  }
}

TEST(Carnot, RejectsInvalidAlgebras) {
  using B = GradedLieAlgebra::Bracket;
  // second layer spanned by e2, e3 but [V1, V1] only reaches e2
  EXPECT_THROW(GradedLieAlgebra({2, 2}, {B{0, 1, {{2, 1.0}}}}), ConstructionError);
  // bracket landing in the wrong layer
  EXPECT_THROW(GradedLieAlgebra({2, 1}, {B{0, 1, {{1, 1.0}}}}), ConstructionError);
  // Jacobi on (e0, e1, e2) gives -e4
  EXPECT_THROW(GradedLieAlgebra({2, 1, 1, 1},
                                {B{0, 1, {{2, 1.0}}}, B{0, 2, {{3, 1.0}}}, B{0, 3, {{4, 1.0}}}, B{1, 3, {{4, 1.0}}}}),
               ConstructionError);
  // step 5 is beyond the exact BCH truncation
  GradedLieAlgebra filiform5({2, 1, 1, 1, 1},
                             {B{0, 1, {{2, 1.0}}}, B{0, 2, {{3, 1.0}}}, B{0, 3, {{4, 1.0}}}, B{0, 4, {{5, 1.0}}}});
  EXPECT_THROW(make_carnot(filiform5, 0.5), ConstructionError);
}

TEST(Carnot, AlgebraJsonRoundTrip) {
  const auto a = engel_algebra();
  const auto b = GradedLieAlgebra::from_json(a.to_json());
  EXPECT_EQ(a.to_json(), b.to_json());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(a.structure_constant(i, j, k), b.structure_constant(i, j, k));
  EXPECT_THROW(GradedLieAlgebra::from_json(nlohmann::json{{"layers", {2, 1}}, {"extra", 1}}), ConstructionError);
}

// With delta(g) = u the group irq has x * u = x delta(x^-1 u).
TEST(GroupIrq, ClosedFormsOfLevelOperations) {
  auto h = make_heisenberg(0.5);
  for (const auto& t : sample_tuples(*h, 29, 60, 1.0, 3)) {
    const auto &x = t[0], &u = t[1], &v = t[2];
    for (long k : {1L, 2L, 4L}) {
      const double s = std::pow(0.5, k);
      const Element diff = heis_mul(heis_mul(heis_mul(x, heis_dilate(heis_mul(heis_inv(x), u), s)), heis_inv(u)), v);
      const Element sum = heis_mul(heis_mul(heis_mul(u, heis_dilate(heis_mul(heis_inv(u), x), s)), heis_inv(x)), v);
      EXPECT_LE(coord_dist(difference_k(*h, k, x, u, v), diff), 1e-28);
      EXPECT_LE(coord_dist(sum_k(*h, k, x, u, v), sum), 1e-28);
    }
  }
}

TEST(GroupIrq, IdentityDeltaIsAcceptedButNotUniform) {
  auto group = std::make_shared<const AbelianGroup>(2);
  GroupMap id{[](const Point& p) { return p; }, [](const Point& p) { return p; }};
  auto g = make_group_irq(group, id, {"identity", true, false});
  const Element x{1.0, 2.0}, u{-3.0, 0.5};
  EXPECT_EQ(g->star(x, u), u);
  EXPECT_EQ(g->star(x, x), x);
  EXPECT_FALSE(g->is_uniform());
  for (const auto& r : check_irq_axioms(*g, 1, 50, 2.0, 1e-12)) EXPECT_TRUE(r.passed) << r.identity;
  EXPECT_THROW(emergent_sum(*g, x, u, x), Unsupported);
}

TEST(GroupIrq, RejectsDeltaMovingNeutral) {
  auto group = std::make_shared<const AbelianGroup>(2);
  GroupMap shift{[](const Point& p) { return p + make_point({1.0, 0.0}); },
                 [](const Point& p) { return p - make_point({1.0, 0.0}); }};
  EXPECT_THROW(make_group_irq(group, shift, {"shift", false, false}), ConstructionError);
  GroupMap bad_inverse{[](const Point& p) { return Real(0.5) * p; }, [](const Point& p) { return p; }};
  EXPECT_THROW(make_group_irq(group, bad_inverse, {"bad", true, true}), ConstructionError);
}

TEST(NonmorphismPlane, PassesIrqAxiomsFailsDistributivity) {
  auto g = make_nonmorphism_plane(0.5, 0.1);
  for (const auto& r : check_irq_axioms(*g, 2, 200, 1.0, 1e-9)) EXPECT_TRUE(r.passed) << r.identity << " " << r.k;
  const auto d = check_distributive(*g, 2, 200, 1.0, 1e-9);
  EXPECT_FALSE(d.passed);
  EXPECT_GT(d.max_residual, 1e-3);
}

TEST(NonmorphismPlane, RejectsNonContractiveParameters) {
  EXPECT_THROW(make_nonmorphism_plane(0.5, 0.6), ConstructionError);
  EXPECT_THROW(make_nonmorphism_plane(0.9, 0.2), ConstructionError);
}

TEST(Dihedral, TableEntries) {
  auto q = make_dihedral_quandle(5);
  EXPECT_EQ(q->star(Element::label(1), Element::label(2)), Element::label(0));
  for (const auto& x : q->enumerate()) EXPECT_EQ(q->star(x, x), x);
  EXPECT_EQ(q->enumerate().size(), 5u);
  EXPECT_THROW(make_dihedral_quandle(2), ConstructionError);
}

TEST(Dihedral, SelfDistributiveExhaustively) {
  auto q = make_dihedral_quandle(5);
  const auto r = check_distributive(*q, 1, 0, 0.0, 0.0);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.max_residual, 0.0);
  EXPECT_EQ(r.samples, 125u);
  for (std::uint32_t x = 0; x < 5; ++x)
    for (std::uint32_t y = 0; y < 5; ++y)
      for (std::uint32_t z = 0; z < 5; ++z) {
        const auto X = Element::label(x), Y = Element::label(y), Z = Element::label(z);
        EXPECT_EQ(q->star(X, q->star(Y, Z)), q->star(q->star(X, Y), q->star(X, Z)));
      }
}

TEST(Hyperbolic, VerticalGeodesic) {
  auto hyp = make_hyperbolic(0.5);
  const Element x{0.0, 1.0};
  const Element s = hyp->star(x, Element{0.0, std::exp(1.0)});
  EXPECT_NEAR(coord(s, 0), 0.0, 1e-30);
  EXPECT_NEAR(coord(s, 1), std::exp(0.5), 1e-15);
  EXPECT_LE(dist(*hyp, hyp->star(x, x), x), 1e-30);
}

TEST(Hyperbolic, BackUndoesStar) {
  auto hyp = make_hyperbolic(0.5);
  const auto pts = hyp->sample(31, 200, 2.0);
  for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
    const auto &x = pts[i], &u = pts[i + 1];
    EXPECT_LE(dist(*hyp, hyp->back(x, hyp->star(x, u)), u), 1e-10);
  }
}

TEST(Hyperbolic, StarContractsDistanceByEpsilon) {
  for (double eps : {0.3, 0.5}) {
    auto hyp = make_hyperbolic(eps);
    const auto pts = hyp->sample(37, 100, 3.0);
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
      const auto &x = pts[i], &u = pts[i + 1];
      EXPECT_NEAR(dist(*hyp, x, hyp->star(x, u)), eps * dist(*hyp, x, u), 1e-14);
    }
  }
}

TEST(Hyperbolic, ExpLogRoundTrip) {
  auto hyp = make_hyperbolic(0.5);
  const auto pts = hyp->sample(41, 100, 2.0);
  for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
    const auto &x = pts[i], &u = pts[i + 1];
    const Point v = hyp->log_map(x, u);
    EXPECT_LE(dist(*hyp, hyp->exp_map(x, v), u), 1e-25);
    EXPECT_NEAR(to_double(hyp->tangent_norm(x, v)), dist(*hyp, x, u), 1e-25);
  }
}

TEST(Hyperbolic, DistanceOnVerticalLineIsLogRatio) {
  auto hyp = make_hyperbolic(0.5);
  EXPECT_NEAR(dist(*hyp, Element{0.0, 1.0}, Element{0.0, 5.0}), std::log(5.0), 1e-15);
  EXPECT_NEAR(dist(*hyp, Element{2.0, 0.5}, Element{2.0, 0.25}), std::log(2.0), 1e-15);
}

TEST(HomogeneousNorm, ValuesByHand) {
  auto h = make_heisenberg(0.5);
  EXPECT_EQ(to_double(homogeneous_norm(*h, h->base_point())), 0.0);
  EXPECT_EQ(to_double(homogeneous_norm(*h, Element{3.0, 4.0, 0.0})), 5.0);
  EXPECT_EQ(to_double(homogeneous_norm(*h, Element{0.0, 0.0, 4.0})), 2.0);
  const Element d(h->delta().forward(make_point({0.0, 0.0, 4.0})));
  EXPECT_EQ(to_double(homogeneous_norm(*h, d)), 1.0);
}

TEST(Carriers, EveryCarrierPassesAxioms) {
  std::vector<IrqPtr> carriers{make_euclidean(1, 0.3), make_euclidean(3, 0.5), make_heisenberg(0.5),
                               make_engel(0.5), make_hyperbolic(0.5), make_nonmorphism_plane(0.5, 0.1)};
  for (const auto& c : carriers)
    for (const auto& r : check_irq_axioms(*c, 43, 100, 1.0, 1e-9))
      EXPECT_TRUE(r.passed) << c->name() << " " << r.identity << " k=" << r.k << " " << r.max_residual;
}

TEST(Carriers, SamplesStayInBallAndAreSeeded) {
  auto hyp = make_hyperbolic(0.5);
  for (const auto& p : hyp->sample(1, 100, 1.5)) EXPECT_LE(dist(*hyp, hyp->base_point(), p), 1.5 + 1e-12);
  auto h = make_heisenberg(0.5);
  for (const auto& p : h->sample(1, 100, 2.0)) EXPECT_LE(to_double(homogeneous_norm(*h, p)), 2.0 + 1e-12);
  EXPECT_EQ(h->sample(9, 10, 1.0), h->sample(9, 10, 1.0));
  EXPECT_NE(h->sample(9, 10, 1.0), h->sample(10, 10, 1.0));
}

}  // namespace
}  // namespace eirq
