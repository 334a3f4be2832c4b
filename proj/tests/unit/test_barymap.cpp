#include "hrdeg/barymap.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hrdeg;

namespace {

FlagPoint h2_flag(double angle) {
  Matrix u(2, 1);
  u << std::cos(angle), std::sin(angle);
  return FlagPoint{{u}};
}

// hyperboloid Busemann function normalized at (1, 0, ...): log(x0 - <xbar, u>)
double hyp_busemann(const Vector& x, const Vector& u) { return std::log(x(0) - x.tail(u.size()).dot(u)); }

}  // namespace

TEST(Measures, Validation) {
  auto m = make_space("hyp:2");
  EXPECT_THROW(make_measure({}, {}), std::invalid_argument);
  EXPECT_THROW(make_measure({h2_flag(0)}, {0.5}), std::invalid_argument);
  EXPECT_THROW(make_measure({h2_flag(0), h2_flag(1)}, {1.5, -0.5}), std::invalid_argument);
  EXPECT_THROW(make_measure({h2_flag(0)}, {1, 2}), std::invalid_argument);
  BoundaryMeasure u = uniform_measure({h2_flag(0), h2_flag(1), h2_flag(2), h2_flag(3)});
  for (double w : u.weights) EXPECT_DOUBLE_EQ(w, 0.25);
  BoundaryMeasure mx = mix(u, make_measure({h2_flag(5)}, {1.0}), 0.2);
  EXPECT_EQ(mx.size(), 5);
  double s = 0;
  for (double w : mx.weights) s += w;
  EXPECT_NEAR(s, 1, 1e-15);
}

TEST(Functional, HyperbolicClosedForm) {
  auto m = make_space("hyp:2");
  CounterRng rng(1);
  BoundaryMeasure mu = monte_carlo_measure(*m, 30, 2);
  for (int t = 0; t < 10; ++t) {
    Point x = m->random_point(rng, 3);
    double want = 0;
    for (int i = 0; i < mu.size(); ++i) want += mu.weights[i] * hyp_busemann(x.factors[0], mu.atoms[i].frames[0]);
    EXPECT_NEAR(functional(*m, mu, x), want, 1e-12);
  }
}

TEST(Functional, GradientMatchesFiniteDifferences) {
  for (auto spec : {"spd:3", "spd:4", "hyp:3", "hyp:2,spd:3"}) {
    auto m = make_space(spec);
    BoundaryMeasure mu = monte_carlo_measure(*m, 40, 3);
    CounterRng rng(5);
    for (int t = 0; t < 5; ++t) {
      Point x = m->random_point(rng, 1.5);
      Vector g = gradient(*m, mu, x).coords;
      const double h = 1e-5;
      for (int j = 0; j < m->dim(); ++j) {
        Vector e = Vector::Unit(m->dim(), j);
        double fd = (functional(*m, mu, m->exp(x, h * e)) - functional(*m, mu, m->exp(x, -h * e))) / (2 * h);
        EXPECT_NEAR(fd, g(j), 1e-6) << spec;
      }
    }
  }
}

TEST(Barycenter, ThreeSymmetricAtomsGiveCenter) {
  auto m = make_space("hyp:2");
  BoundaryMeasure mu = uniform_measure({h2_flag(0), h2_flag(2 * M_PI / 3), h2_flag(4 * M_PI / 3)});
  CounterRng rng(7);
  Point start = m->random_point(rng, 2);
  BarycenterResult r = barycenter(*m, mu, start);
  EXPECT_EQ(r.status, BarycenterStatus::Converged);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(m->distance(r.point, m->basepoint()), 1e-9);
  EXPECT_LE(r.gradient_norm, 1e-10);
}

TEST(Barycenter, DiracHasNoMinimum) {
  auto m = make_space("hyp:2");
  BarycenterResult r = barycenter(*m, make_measure({h2_flag(0.4)}, {1.0}), m->basepoint());
  EXPECT_EQ(r.status, BarycenterStatus::NoMinimum);
  EXPECT_FALSE(r.converged);
  auto s = make_space("spd:3");
  CounterRng rng(2);
  BarycenterResult rs = barycenter(*s, make_measure({s->random_flag(rng)}, {1.0}), s->basepoint());
  EXPECT_EQ(rs.status, BarycenterStatus::NoMinimum);
}

TEST(Barycenter, SymmetricMeasureCentersOnPoint) {
  for (auto spec : {"spd:3", "hyp:3"}) {
    auto m = make_space(spec);
    CounterRng rng(9);
    Point x = m->random_point(rng, 1.5);
    BoundaryMeasure mu = symmetric_measure(*m, x, 4, 11);
    EXPECT_LE(gradient(*m, mu, x).norm, 1e-12) << spec;
    BarycenterResult r = barycenter(*m, mu, m->basepoint());
    EXPECT_TRUE(numerically_converged(r)) << spec;
    EXPECT_LE(m->distance(r.point, x), 1e-7) << spec;
  }
}

TEST(Barycenter, StartsAgree) {
  auto m = make_space("spd:3");
  BoundaryMeasure mu = monte_carlo_measure(*m, 200, 21);
  CounterRng rng(13);
  BarycenterResult ref = barycenter(*m, mu, m->basepoint());
  ASSERT_TRUE(numerically_converged(ref));
  for (int t = 0; t < 5; ++t) {
    BarycenterResult r = barycenter(*m, mu, m->random_point(rng, 3));
    ASSERT_TRUE(numerically_converged(r));
    EXPECT_LE(m->distance(r.point, ref.point), 1e-7);
  }
}

TEST(Barycenter, TraceIsMonotone) {
  auto m = make_space("hyp:3");
  BoundaryMeasure mu = monte_carlo_measure(*m, 100, 4);
  std::vector<TraceRow> rows;
  CounterRng rng(3);
  barycenter(*m, mu, m->random_point(rng, 4), {}, [&](const TraceRow& r) { rows.push_back(r); });
  ASSERT_GE(rows.size(), 2u);
  for (size_t i = 1; i < rows.size(); ++i) EXPECT_LE(rows[i].functional, rows[i - 1].functional + 1e-12);
}

TEST(Barycenter, Equivariance) {
  for (auto spec : {"spd:3", "hyp:3"}) {
    auto m = make_space(spec);
    BoundaryMeasure mu = monte_carlo_measure(*m, 100, 6);
    CounterRng rng(15);
    EquivarianceReport r = equivariance_check(*m, mu, m->random_isometry(rng));
    EXPECT_TRUE(r.pass) << spec;
    EXPECT_LE(r.distance, 1e-6) << spec;
  }
}

TEST(Localization, ConcentratedMassPushesGradient) {
  auto m = make_space("hyp:3");
  Vector v = Vector::Unit(3, 0);
  // 90% of the mass near the endpoint of v
  BoundaryMeasure near = concentrated_measure(*m, v, 6.0, 90, 1);
  BoundaryMeasure far = monte_carlo_measure(*m, 10, 2);
  BoundaryMeasure mu = mix(near, far, 0.1);
  LocalizationReport r = localization_check(*m, mu, m->basepoint(), v, 0.8);
  EXPECT_EQ(r.status, LocalizationStatus::Concluded);
  EXPECT_TRUE(r.consistent);
  EXPECT_GT(r.directional, 0);
  LocalizationReport weak = localization_check(*m, monte_carlo_measure(*m, 50, 3), m->basepoint(), v, 0.8);
  EXPECT_EQ(weak.status, LocalizationStatus::HypothesisNotMet);
  EXPECT_THROW(localization_check(*m, mu, m->basepoint(), v, 0.4), std::invalid_argument);
}

TEST(Homotopy, PathIsContinuous) {
  auto m = make_space("spd:3");
  BoundaryMeasure a = monte_carlo_measure(*m, 60, 8);
  BoundaryMeasure b = monte_carlo_measure(*m, 60, 9);
  std::vector<double> ts;
  for (int i = 0; i <= 20; ++i) ts.push_back(i / 20.0);
  auto path = homotopy_path(*m, a, b, ts);
  ASSERT_EQ(path.size(), ts.size());
  for (size_t i = 1; i < path.size(); ++i) {
    EXPECT_TRUE(numerically_converged(path[i].result));
    EXPECT_LE(path[i].jump, 0.2);
  }
}

TEST(Concentration, RegularDirectionConcentrates) {
  auto m = make_space("spd:3");
  Vector c = m->embed_cartan(m->chamber().unit_barycenter);
  auto rows = ps_concentration(*m, c, {2, 10, 20}, 2000, 1, 0.1);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_LT(rows[0].fraction, rows[2].fraction);
  EXPECT_GE(rows[2].fraction, 0.99);
}
