#include <gtest/gtest.h>

#include <cmath>

#include "eirq/axioms.hpp"
#include "eirq/carriers.hpp"
#include "eirq/irq.hpp"
#include "support.hpp"

namespace eirq {
namespace {

using testing::coord;
using testing::dist;

Element line(double v) { return Element{v}; }

TEST(StarK, EuclideanHalfwayPoint) {
  auto e = make_euclidean(1, 0.5);
  EXPECT_EQ(coord(star_k(*e, 1, line(0), line(4)), 0), 2.0);
  EXPECT_EQ(coord(star_k(*e, 2, line(0), line(4)), 0), 1.0);
  EXPECT_EQ(coord(star_k(*e, 3, line(0), line(4)), 0), 0.5);
}

TEST(StarK, DihedralTwoSteps) {
  auto q = make_dihedral_quandle(5);
  EXPECT_EQ(star_k(*q, 2, Element::label(1), Element::label(2)), Element::label(2));
}

TEST(StarK, IdempotentOnEveryCarrier) {
  std::vector<IrqPtr> carriers{make_euclidean(3, 0.3), make_heisenberg(0.5), make_engel(0.5), make_hyperbolic(0.5),
                               make_nonmorphism_plane(0.5, 0.1)};
  for (const auto& c : carriers) {
    for (const auto& x : c->sample(11, 20, 1.0)) {
      for (long k : {-3L, -1L, 1L, 4L}) {
        EXPECT_LE(dist(*c, star_k(*c, k, x, x), x), 1e-25) << c->name() << " k=" << k;
        EXPECT_LE(dist(*c, back_k(*c, k, x, x), x), 1e-25) << c->name() << " k=" << k;
      }
    }
  }
  auto q = make_dihedral_quandle(9);
  for (const auto& x : q->enumerate()) EXPECT_EQ(star_k(*q, 5, x, x), x);
}

TEST(StarK, NegativeLevelSwapsOperations) {
  auto h = make_heisenberg(0.5);
  const Element x{0.3, -0.2, 0.1}, u{-0.5, 0.4, 0.7};
  EXPECT_LE(dist(*h, star_k(*h, -1, x, u), h->back(x, u)), 1e-30);
  EXPECT_LE(dist(*h, back_k(*h, -2, x, u), h->star(x, h->star(x, u))), 1e-30);
}

TEST(StarK, RejectsZeroAndHugeExponents) {
  auto e = make_euclidean(1, 0.5);
  EXPECT_THROW(star_k(*e, 0, line(0), line(1)), InvalidExponent);
  EXPECT_THROW(back_k(*e, 2'000'000, line(0), line(1)), InvalidExponent);
}

TEST(StarK, RejectsForeignElements) {
  auto e = make_euclidean(3, 0.5);
  EXPECT_THROW(star_k(*e, 1, Element{0.0, 0.0}, Element{1.0, 1.0, 1.0}), InvalidElement);
  auto q = make_dihedral_quandle(5);
  EXPECT_THROW(star_k(*q, 1, Element::label(5), Element::label(0)), InvalidElement);
  auto hyp = make_hyperbolic(0.5);
  EXPECT_THROW(star_k(*hyp, 1, Element{0.0, -1.0}, Element{0.0, 1.0}), InvalidElement);
}

TEST(BackK, EuclideanDoublesDisplacement) {
  auto e = make_euclidean(1, 0.5);
  EXPECT_EQ(coord(back_k(*e, 1, line(0), line(1)), 0), 2.0);
  EXPECT_EQ(coord(back_k(*e, 1, line(7), line(7)), 0), 7.0);
}

TEST(BackK, DihedralIsInvolutive) {
  auto q = make_dihedral_quandle(5);
  EXPECT_EQ(back_k(*q, 1, Element::label(1), Element::label(0)), Element::label(2));
}

TEST(DifferenceK, EuclideanClosedForm) {
  auto e = make_euclidean(1, 0.5);
  EXPECT_EQ(coord(difference_k(*e, 1, line(0), line(1), line(2)), 0), 1.5);
}

TEST(DifferenceK, DegenerateArguments) {
  auto h = make_heisenberg(0.5);
  const Element x{0.1, 0.2, 0.3}, u{-0.4, 0.5, 0.1};
  EXPECT_LE(dist(*h, difference_k(*h, 2, x, x, u), u), 1e-25);
  EXPECT_LE(dist(*h, difference_k(*h, 2, x, u, u), star_k(*h, 2, x, u)), 1e-25);
}

TEST(SumK, EuclideanClosedForm) {
  auto e = make_euclidean(1, 0.5);
  EXPECT_EQ(coord(sum_k(*e, 1, line(0), line(1), line(2)), 0), 2.5);
}

TEST(SumK, NeutralAndRoundTrip) {
  auto h = make_heisenberg(0.5);
  const Element x{0.1, 0.2, 0.3}, u{-0.4, 0.5, 0.1}, v{0.2, 0.2, -0.6};
  // homogeneous metric: layer-2 roundoff of 1e-34 shows up as 1e-17
  EXPECT_LE(dist(*h, sum_k(*h, 3, x, x, u), u), 1e-15);
  EXPECT_LE(dist(*h, difference_k(*h, 3, x, u, sum_k(*h, 3, x, u, v)), v), 1e-15);
}

TEST(InverseK, EuclideanClosedForm) {
  auto e = make_euclidean(1, 0.5);
  EXPECT_EQ(coord(inverse_k(*e, 1, line(0), line(1)), 0), -0.5);
}

TEST(InverseK, FixedPointAndInvolutionPattern) {
  auto q = make_dihedral_quandle(7);
  for (const auto& x : q->enumerate()) EXPECT_EQ(inverse_k(*q, 2, x, x), x);
  auto h = make_heisenberg(0.5);
  const Element x{0.1, 0.2, 0.3}, u{-0.4, 0.5, 0.1};
  EXPECT_LE(dist(*h, inverse_k(*h, 2, star_k(*h, 2, x, u), inverse_k(*h, 2, x, u)), u), 1e-25);
}

void expect_all_pass(const std::vector<AxiomReport>& rows, double bound) {
  ASSERT_FALSE(rows.empty());
  for (const auto& r : rows) {
    EXPECT_TRUE(r.passed) << r.identity << " k=" << r.k << " residual " << r.max_residual;
    EXPECT_LE(r.max_residual, bound) << r.identity << " k=" << r.k;
  }
}

TEST(AxiomSuite, DihedralExhaustiveIsExact) {
  for (long n : {5L, 7L, 9L}) {
    auto q = make_dihedral_quandle(n);
    auto rows = check_irq_axioms(*q, 1, 0, 0.0, 0.0);
    expect_all_pass(rows, 0.0);
    EXPECT_EQ(rows.front().samples % static_cast<std::size_t>(n), 0u);
  }
}

TEST(AxiomSuite, EuclideanThousandTriples) {
  auto e = make_euclidean(3, 0.5);
  expect_all_pass(check_irq_axioms(*e, 7, 1000, 10.0, 1e-9), 1e-9);
}

TEST(AxiomSuite, HeisenbergThousandTriples) {
  auto h = make_heisenberg(0.5);
  expect_all_pass(check_irq_axioms(*h, 7, 1000, 1.0, 1e-9), 1e-9);
}

TEST(AxiomSuite, ReportsEveryIdentityAtEveryLevel) {
  auto e = make_euclidean(1, 0.5);
  auto rows = check_irq_axioms(*e, 3, 10, 1.0, 1e-9);
  const auto& levels = axiom_levels();
  auto count = [&](const std::string& id) {
    return std::count_if(rows.begin(), rows.end(), [&](const AxiomReport& r) { return r.identity == id; });
  };
  for (const char* id : {"P1", "P2", "3.4a", "3.4e", "3.4g", "3.5h", "3.5j"})
    EXPECT_EQ(count(id), static_cast<long>(levels.size())) << id;
  for (long q : levels) EXPECT_EQ(count("3.5k(q=" + std::to_string(q) + ")"), static_cast<long>(levels.size()));
}

TEST(AxiomSuite, SerialAndParallelAgree) {
  auto h = make_heisenberg(0.5);
  auto a = check_irq_axioms(*h, 5, 100, 1.0, 1e-9, Execution::serial);
  auto b = check_irq_axioms(*h, 5, 100, 1.0, 1e-9, Execution::parallel);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].identity, b[i].identity);
    EXPECT_EQ(a[i].k, b[i].k);
    EXPECT_EQ(a[i].max_residual, b[i].max_residual);
  }
}

TEST(AxiomSuite, ExactCarrierRejectsAnyResidual) {
  auto r = make_report("P1", 1, {0.0, 1e-300}, 0.0);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(make_report("P1", 1, {0.0, 0.0}, 0.0).passed, true);
  EXPECT_FALSE(make_report("P1", 1, {std::nan("")}, 1.0).passed);
}

// Conjugating a level-p difference by x *_q adds levels: the right-hand side
// lives at level p + q, checked here against the affine closed form
// x + eps^(p+q) (u - x) + eps^q (v - u).
TEST(LevelConjugation, AddsLevelsOnEuclidean) {
  const double eps = 0.5;
  auto e = make_euclidean(1, eps);
  const Element x = line(0.25), u = line(-1.5), v = line(2.0);
  for (long p : {1L, 2L, 3L}) {
    for (long q : {1L, 2L}) {
      const Element lhs = difference_k(*e, p, x, star_k(*e, q, x, u), star_k(*e, q, x, v));
      const Element rhs = star_k(*e, q, star_k(*e, p + q, x, u), difference_k(*e, p + q, x, u, v));
      const double oracle = 0.25 + std::pow(eps, p + q) * (-1.75) + std::pow(eps, q) * 3.5;
      EXPECT_NEAR(coord(lhs, 0), oracle, 1e-15);
      EXPECT_NEAR(coord(rhs, 0), oracle, 1e-15);
    }
  }
}

TEST(LevelConjugation, ProductOfLevelsDoesNotHold) {
  auto e = make_euclidean(1, 0.5);
  const Element x = line(0), u = line(1), v = line(3);
  const long p = 2, q = 3;
  const Element lhs = difference_k(*e, p, x, star_k(*e, q, x, u), star_k(*e, q, x, v));
  const Element rhs = star_k(*e, q, star_k(*e, p * q, x, u), difference_k(*e, p * q, x, u, v));
  // eps^5 - eps^6 = 1/64
  EXPECT_NEAR(dist(*e, lhs, rhs), 1.0 / 64, 1e-15);
}

TEST(LevelConjugation, AddsLevelsOnHeisenberg) {
  auto h = make_heisenberg(0.5);
  for (const auto& t : sample_tuples(*h, 9, 50, 1.0, 3)) {
    const auto &x = t[0], &u = t[1], &v = t[2];
    const Element lhs = difference_k(*h, 2, x, star_k(*h, 1, x, u), star_k(*h, 1, x, v));
    const Element rhs = star_k(*h, 1, star_k(*h, 3, x, u), difference_k(*h, 3, x, u, v));
    EXPECT_LE(dist(*h, lhs, rhs), 1e-14);
  }
}

TEST(StarLevel, LevelZeroIsIdentity) {
  auto h = make_heisenberg(0.5);
  const Element x{0.1, 0.2, 0.3}, u{-0.4, 0.5, 0.1};
  EXPECT_EQ(star_level(*h, 0, x, u), u);
  EXPECT_EQ(star_level(*h, 2, x, u), star_k(*h, 2, x, u));
}

TEST(SampleTuples, ExhaustiveOnFiniteCarriers) {
  auto q = make_dihedral_quandle(5);
  auto t = sample_tuples(*q, 1, 3, 0.0, 3);
  EXPECT_EQ(t.size(), 125u);
  auto h = make_heisenberg(0.5);
  auto s = sample_tuples(*h, 1, 40, 1.0, 2);
  EXPECT_EQ(s.size(), 40u);
  EXPECT_EQ(s, sample_tuples(*h, 1, 40, 1.0, 2));
}

}  // namespace
}  // namespace eirq
