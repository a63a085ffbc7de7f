#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "threeterm/horocycle.hpp"

namespace threeterm {
namespace {

using testing::kPi;
using testing::uniform;

TEST(Horocycle, CircleOfKnownLightConePoint) {
  const double s2 = std::sqrt(2.0);
  const auto c = horocycle_to_circle(Horocycle(LightConePoint({s2, 0, s2})));
  EXPECT_NEAR(c.radius, 1.0 / 3, 1e-15);
  EXPECT_NEAR(c.center[0], 2.0 / 3, 1e-15);
  EXPECT_NEAR(c.center[1], 0.0, 1e-15);
}

TEST(Horocycle, FromTangencyExample) {
  const auto h = horocycle_from_tangency(BoundaryPoint(0), 1.0 / 3);
  EXPECT_NEAR(h.vec().x, std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(h.vec().y, 0.0, 1e-15);
  EXPECT_NEAR(h.vec().z, std::sqrt(2.0), 1e-15);
}

TEST(Horocycle, FromTangencyRejectsRadiusOutsideUnitInterval) {
  EXPECT_THROW(horocycle_from_tangency(BoundaryPoint(0), 1.0), domain_error);
  EXPECT_THROW(horocycle_from_tangency(BoundaryPoint(0), 0.0), domain_error);
  EXPECT_THROW(horocycle_from_tangency(BoundaryPoint(0), -0.1), domain_error);
  EXPECT_THROW(horocycle_from_tangency(BoundaryPoint(0), 1.5), domain_error);
}

TEST(Horocycle, TangencyRoundTripAndInternalTangency) {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 1000; ++n) {
    const BoundaryPoint b(uniform(rng, 0, 2 * kPi));
    const double r = uniform(rng, 1e-6, 0.999);
    const auto h = horocycle_from_tangency(b, r);
    const auto c = horocycle_to_circle(h);
    EXPECT_NEAR(c.radius, r, 1e-12);
    EXPECT_NEAR(std::hypot(c.center[0], c.center[1]) + c.radius, 1.0, 1e-12);
    EXPECT_NEAR(c.center[0], (1 - r) * b.x(), 1e-12);
    EXPECT_NEAR(c.center[1], (1 - r) * b.y(), 1e-12);
    EXPECT_LE(std::abs(std::remainder(h.center().theta() - b.theta(), 2 * kPi)), 1e-12);
  }
}

TEST(Horocycle, RadiusShrinksUnderLargeRescaling) {
  const auto u = horocycle_from_tangency(BoundaryPoint(1.0), 0.2).lightcone();
  double prev = 1;
  for (double s : {1.0, 10.0, 1e3, 1e6}) {
    const double r = horocycle_to_circle(Horocycle(u.scaled(s))).radius;
    EXPECT_LT(r, prev);
    prev = r;
  }
  EXPECT_LT(prev, 1e-6);
}

// Points of the drawn Euclidean circle, lifted to the hyperboloid, satisfy
// <u, v> = -1/sqrt(2): the radius formula and the definition of h(u) agree.
TEST(Horocycle, CirclePointsSolveTheDefiningEquation) {
  std::mt19937_64 rng(22);
  for (int n = 0; n < 200; ++n) {
    const auto h = horocycle_from_tangency(BoundaryPoint(uniform(rng, 0, 2 * kPi)),
                                           uniform(rng, 0.01, 0.9));
    const auto c = horocycle_to_circle(h);
    for (int k = 0; k < 8; ++k) {
      const double phi = uniform(rng, 0, 2 * kPi);
      const double x = c.center[0] + c.radius * std::cos(phi);
      const double y = c.center[1] + c.radius * std::sin(phi);
      if (x * x + y * y > 1 - 1e-6) continue;  // the tangency point itself is ideal
      const auto v = disk_to_hyperboloid(DiskPoint(x, y));
      const double pairing = mink_pair(h.vec(), v.vec());
      EXPECT_NEAR(pairing, -1.0 / std::sqrt(2.0), 1e-12 + 1e-14 * v.vec().z * h.vec().z);
    }
  }
}

TEST(LambdaLength, OrthogonalQuarterRadii) {
  const auto h1 = horocycle_from_tangency(BoundaryPoint(0), 0.25);
  const auto h2 = horocycle_from_tangency(BoundaryPoint(kPi / 2), 0.25);
  const auto l = lambda_length(h1, h2);
  EXPECT_NEAR(l.value, 3.0 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(l.value, std::exp(l.delta / 2), 1e-12);
}

TEST(LambdaLength, CommonRayIsDegenerate) {
  const auto h = horocycle_from_tangency(BoundaryPoint(0.7), 0.3);
  EXPECT_THROW(lambda_length(h, h), degenerate_error);
  EXPECT_THROW(lambda_length(h, Horocycle(h.lightcone().scaled(3.5))), degenerate_error);
}

TEST(LambdaLength, SymmetricScalesAndMatchesDelta) {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 1000; ++n) {
    const auto h1 = horocycle_from_tangency(BoundaryPoint(uniform(rng, 0, 2 * kPi)),
                                            uniform(rng, 0.01, 0.9));
    const auto h2 = horocycle_from_tangency(BoundaryPoint(uniform(rng, 0, 2 * kPi)),
                                            uniform(rng, 0.01, 0.9));
    const auto l12 = lambda_length(h1, h2);
    EXPECT_EQ(l12.value, lambda_length(h2, h1).value);
    EXPECT_NEAR(l12.value, std::exp(l12.delta / 2), 1e-12 * l12.value);
    const double s = std::exp(uniform(rng, -3, 3));
    const auto scaled = lambda_length(Horocycle(h1.lightcone().scaled(s)), h2);
    EXPECT_NEAR(scaled.value, std::sqrt(s) * l12.value, 1e-12 * scaled.value);
  }
}

// Independent oracle for the signed distance: for antipodal centres the
// geodesic is a diameter, the horocycles cross it at 1 - 2r and -(1 - 2r'),
// and distances along a diameter are 2 artanh differences.
TEST(LambdaLength, SignedDistanceAlongADiameter) {
  std::mt19937_64 rng(24);
  int overlapping = 0;
  for (int n = 0; n < 500; ++n) {
    const double theta = uniform(rng, 0, 2 * kPi);
    const double r1 = uniform(rng, 0.05, 0.95);
    const double r2 = uniform(rng, 0.05, 0.95);
    const double a = 1 - 2 * r1;     // crossing of H1, coordinate along the diameter
    const double b = -(1 - 2 * r2);  // crossing of H2
    const double delta = 2 * std::atanh(a) - 2 * std::atanh(b);  // positive iff disjoint
    if (delta < 0) ++overlapping;
    const auto l = lambda_length(horocycle_from_tangency(BoundaryPoint(theta), r1),
                                 horocycle_from_tangency(BoundaryPoint(theta + kPi), r2));
    EXPECT_NEAR(l.delta, delta, 1e-10);
    EXPECT_EQ(l.delta > 0, r1 + r2 < 1);
  }
  EXPECT_GT(overlapping, 0);
}

TEST(LambdaLength, PennerRelationOnRandomHorocycles) {
  std::mt19937_64 rng(25);
  for (int n = 0; n < 1000; ++n) {
    // Centres at least 0.05 rad apart, so pairings are not dominated by
    // cancellation.
    std::array<double, 4> theta{};
    do {
      for (auto& t : theta) t = uniform(rng, 0, 2 * kPi);
      std::sort(theta.begin(), theta.end());
    } while (theta[1] - theta[0] < 0.05 || theta[2] - theta[1] < 0.05 ||
             theta[3] - theta[2] < 0.05 || 2 * kPi - (theta[3] - theta[0]) < 0.05);
    std::array<Horocycle, 4> h{
        horocycle_from_tangency(BoundaryPoint(theta[0]), uniform(rng, 0.01, 0.9)),
        horocycle_from_tangency(BoundaryPoint(theta[1]), uniform(rng, 0.01, 0.9)),
        horocycle_from_tangency(BoundaryPoint(theta[2]), uniform(rng, 0.01, 0.9)),
        horocycle_from_tangency(BoundaryPoint(theta[3]), uniform(rng, 0.01, 0.9))};
    auto lam = [&](int i, int j) { return lambda_length(h[i - 1], h[j - 1]).value; };
    const double lhs = lam(1, 2) * lam(3, 4) + lam(2, 3) * lam(1, 4);
    const double rhs = lam(1, 3) * lam(2, 4);
    EXPECT_LE(std::abs(lhs - rhs), 1e-10 * rhs);
  }
}

}  // namespace
}  // namespace threeterm
