#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "threeterm/measurements.hpp"

namespace threeterm {
namespace {

using testing::kPi;

const double kS2 = std::sqrt(2.0);

// Exterior tangent length from first principles: the right triangle with
// hypotenuse the centre distance and one leg the radius difference.
double tangent_oracle(double alpha_i, double r_i, double alpha_j, double r_j) {
  const double xi = (1 - r_i) * std::cos(2 * alpha_i), yi = (1 - r_i) * std::sin(2 * alpha_i);
  const double xj = (1 - r_j) * std::cos(2 * alpha_j), yj = (1 - r_j) * std::sin(2 * alpha_j);
  const double d2 = (xi - xj) * (xi - xj) + (yi - yj) * (yi - yj);
  return std::sqrt(d2 - (r_i - r_j) * (r_i - r_j));
}

TEST(Config, SquareExample) {
  const auto cfg = testing::square_config();
  const auto c1 = euclidean_center(cfg, 1);
  EXPECT_NEAR(c1[0], 0.0, 1e-15);
  EXPECT_NEAR(c1[1], 0.75, 1e-15);
  const auto a4 = cfg.tangency(4);
  EXPECT_NEAR(a4[0], 1.0, 1e-15);
  EXPECT_NEAR(a4[1], 0.0, 1e-15);
}

TEST(Config, Validation) {
  EXPECT_THROW(ConcyclicConfig({0.1, 0.2, 0.3, 4.0}, {0.1, 0.1, 0.1, 0.1}), configuration_error);
  EXPECT_THROW(ConcyclicConfig({0.1, 0.2, 0.3, 0.4}, {0.1, 0.0, 0.1, 0.1}), configuration_error);
  EXPECT_THROW(ConcyclicConfig({0.1, 0.2, 0.3, 0.4}, {0.1, 1.0, 0.1, 0.1}), configuration_error);
  EXPECT_THROW(ConcyclicConfig({0.1, 0.2, 0.3, std::nan("")}, {0.1, 0.1, 0.1, 0.1}),
               configuration_error);
  // Out of order.
  EXPECT_THROW(ConcyclicConfig({kPi / 2, kPi / 4, 3 * kPi / 4, kPi}, {0.1, 0.1, 0.1, 0.1}),
               configuration_error);
  // Repeated tangency point.
  EXPECT_THROW(ConcyclicConfig({kPi / 4, kPi / 4, 3 * kPi / 4, kPi}, {0.1, 0.1, 0.1, 0.1}),
               configuration_error);
}

TEST(Config, OverlapNamesThePair) {
  try {
    ConcyclicConfig({kPi / 4, kPi / 2, 3 * kPi / 4, kPi}, {0.1, 0.6, 0.6, 0.1});
    FAIL() << "expected configuration_error";
  } catch (const configuration_error& e) {
    EXPECT_NE(std::string(e.what()).find("H_2 and H_3"), std::string::npos) << e.what();
  }
}

TEST(Config, TouchingCirclesAreRejected) {
  // Quarter-turn apart, equal radii: circles touch when 2(1-r)^2 = 4r^2,
  // i.e. r = sqrt(2) - 1.
  const double r = kS2 - 1;
  EXPECT_THROW(ConcyclicConfig({kPi / 4, kPi / 2, 3 * kPi / 4, kPi}, {r, r, r, r}),
               configuration_error);
  const double s = r - 1e-6;
  EXPECT_NO_THROW(ConcyclicConfig({kPi / 4, kPi / 2, 3 * kPi / 4, kPi}, {s, s, s, s}));
}

TEST(Measurements, IndexErrors) {
  const auto cfg = testing::square_config();
  EXPECT_THROW(chord(cfg, 2, 1), index_error);
  EXPECT_THROW(chord(cfg, 1, 1), index_error);
  EXPECT_THROW(bitangent(cfg, 0, 2), index_error);
  EXPECT_THROW(lambda_measure(cfg, 3, 5), index_error);
  EXPECT_THROW(plucker_measure(cfg, 2, 2), index_error);
  EXPECT_THROW(cfg.radius(5), index_error);
}

TEST(Measurements, SquareTable) {
  const auto m = measure_all(testing::square_config());
  const SixTuple<double> d(kS2, 2, kS2, kS2, 2, kS2);
  for (std::size_t k = 0; k < 6; ++k) {
    EXPECT_NEAR(m.d.values[k], d.values[k], 1e-15);
    EXPECT_NEAR(m.t.values[k], 0.75 * d.values[k], 1e-15);
    EXPECT_NEAR(m.lambda.values[k], 1.5 * d.values[k], 1e-14);
    EXPECT_NEAR(m.P.values[k], 0.5 * d.values[k], 1e-15);
  }
}

TEST(Measurements, ChordMatchesCoordinates) {
  std::mt19937_64 rng(51);
  for (int n = 0; n < 1000; ++n) {
    const auto cfg = testing::random_config(rng);
    for (const auto& [i, j] : kPairs) {
      const auto a = cfg.tangency(i), b = cfg.tangency(j);
      EXPECT_NEAR(chord(cfg, i, j), std::hypot(a[0] - b[0], a[1] - b[1]), 1e-14);
      EXPECT_NEAR(plucker_measure(cfg, j, i), -plucker_measure(cfg, i, j), 0.0);
    }
  }
}

TEST(Measurements, BitangentMatchesTheOracle) {
  std::mt19937_64 rng(52);
  for (int n = 0; n < 1000; ++n) {
    const auto cfg = testing::random_config(rng, 0.001, 0.45);
    for (const auto& [i, j] : kPairs) {
      const double t = bitangent(cfg, i, j);
      const double oracle =
          tangent_oracle(cfg.alpha(i), cfg.radius(i), cfg.alpha(j), cfg.radius(j));
      EXPECT_LE(std::abs(t - oracle), 1e-12 * oracle);
      EXPECT_LE(std::abs(t - exterior_tangent_length(cfg, i, j)), 1e-12 * oracle);
    }
  }
}

TEST(Measurements, LambdaRoutesAgree) {
  std::mt19937_64 rng(53);
  for (int n = 0; n < 1000; ++n) {
    const auto cfg = testing::random_config(rng, 0.001, 0.45);
    for (const auto& [i, j] : kPairs) {
      const double lm = lambda_minkowski(cfg, i, j);
      EXPECT_LE(std::abs(lambda_measure(cfg, i, j) - lm), 1e-12 * lm);
    }
  }
}

// The three-term relation holds for each family and the rescalings carry one
// family onto the next.
TEST(Measurements, ThreeTermRelationAndRescalings) {
  std::mt19937_64 rng(54);
  for (int n = 0; n < 1000; ++n) {
    const auto cfg = testing::random_config(rng);
    const auto m = measure_all(cfg);
    for (const auto* fam : {&m.d, &m.t, &m.lambda, &m.P}) {
      EXPECT_LE(std::abs(residual(*fam)), 1e-10 * std::abs(fam->a13() * fam->a24()));
    }
    const auto dev = identity_deviations(cfg, m);
    EXPECT_LE(dev.d_to_t, 1e-12);
    EXPECT_LE(dev.t_to_lambda, 1e-12);
    EXPECT_LE(dev.d_to_plucker, 1e-12);

    const auto t_from_d = torus_apply(torus_d_to_t(cfg), m.d);
    const auto t_from_l = torus_apply(torus_lambda_to_t(cfg), m.lambda);
    for (std::size_t k = 0; k < 6; ++k) {
      EXPECT_LE(std::abs(t_from_d.values[k] - m.t.values[k]), 1e-12 * m.t.values[k]);
      EXPECT_LE(std::abs(t_from_l.values[k] - m.t.values[k]), 1e-12 * m.t.values[k]);
      EXPECT_NEAR(m.d.values[k], 2 * m.P.values[k], 1e-14);
    }
    // The solver finds the same rescaling up to sign.
    const auto q = rescaling_solve(m.d, m.t, 1e-10);
    for (int i = 1; i <= 4; ++i) EXPECT_NEAR(std::abs(q[i]), std::sqrt(1 - cfg.radius(i)), 1e-10);
  }
}

TEST(Measurements, ShrinkingCirclesDegenerateToChords) {
  std::mt19937_64 rng(55);
  for (int n = 0; n < 100; ++n) {
    auto base = testing::random_config(rng);
    const ConcyclicConfig cfg(base.alpha(), {1e-9, 1e-9, 1e-9, 1e-9});
    const auto m = measure_all(cfg);
    for (std::size_t k = 0; k < 6; ++k) {
      EXPECT_LE(std::abs(m.t.values[k] - m.d.values[k]), 1e-8);
    }
  }
}

}  // namespace
}  // namespace threeterm
