#pragma once

#include "hrdeg/spaces.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hrdeg {

struct BoundaryMeasure {
  std::vector<FlagPoint> atoms;
  std::vector<double> weights;

  int size() const { return static_cast<int>(atoms.size()); }
  // weights > 0, sum within 1e-12 of 1
  void validate() const;
};

BoundaryMeasure make_measure(std::vector<FlagPoint> atoms, std::vector<double> weights);
BoundaryMeasure uniform_measure(std::vector<FlagPoint> atoms);
BoundaryMeasure pushforward(const SymmetricSpace& m, const Isometry& g, const BoundaryMeasure& sigma);
// (1-t) a + t b
BoundaryMeasure mix(const BoundaryMeasure& a, const BoundaryMeasure& b, double t);
// Haar flags pushed by a random transvection of length <= spread, weights uniform in [0.5,1.5] normalized
BoundaryMeasure monte_carlo_measure(const SymmetricSpace& m, int count, std::uint64_t seed, double spread = 1.0);
// random atoms closed under a finite subgroup of K with no fixed vector in p, then moved to x;
// the gradient at x vanishes exactly
BoundaryMeasure symmetric_measure(const SymmetricSpace& m, const Point& x, int base_atoms, std::uint64_t seed);
// Haar sample pushed by exp_p(T c): full support, concentrating at limit_flag(c) as T grows
BoundaryMeasure concentrated_measure(const SymmetricSpace& m, const Vector& c, double T, int count, std::uint64_t seed);

double functional(const SymmetricSpace& m, const BoundaryMeasure& sigma, const Point& x);
// gradient of the functional: -sum w_i v_(x, theta_i)
TangentVector gradient(const SymmetricSpace& m, const BoundaryMeasure& sigma, const Point& x);

enum class BarycenterStatus { Converged, NoMinimum, MaxIterations, Stalled };
std::string to_string(BarycenterStatus s);

struct BarycenterOptions {
  double tol = 1e-10;
  int max_iter = 100000;
  double radius = 50;
  double armijo_c = 1e-4;
};

struct TraceRow {
  int iteration = 0;
  double functional = 0;
  double gradient_norm = 0;
  double step = 0;
};

struct BarycenterResult {
  Point point;
  double functional = 0;
  double gradient_norm = 0;
  int iterations = 0;
  bool converged = false;
  BarycenterStatus status = BarycenterStatus::MaxIterations;
};

// converged, or stalled on the rounding floor with a gradient below floor
bool numerically_converged(const BarycenterResult& r, double floor = 1e-8);

using TraceSink = std::function<void(const TraceRow&)>;

BarycenterResult barycenter(const SymmetricSpace& m, const BoundaryMeasure& sigma, const Point& start,
                            const BarycenterOptions& opt = {}, const TraceSink& trace = {});

struct EquivarianceReport {
  double distance = 0;   // d(bar(g sigma), g bar(sigma))
  BarycenterStatus status_plain = BarycenterStatus::MaxIterations;
  BarycenterStatus status_moved = BarycenterStatus::MaxIterations;
  bool pass = false;
};

EquivarianceReport equivariance_check(const SymmetricSpace& m, const BoundaryMeasure& sigma, const Isometry& g,
                                      const BarycenterOptions& opt = {}, double tol = 1e-6);

struct ConcentrationRow {
  double t = 0;
  double fraction = 0;
};

// Haar flag sample pushed by exp_p(t c); fraction within flag distance delta of limit_flag(c)
std::vector<ConcentrationRow> ps_concentration(const SymmetricSpace& m, const Vector& c, const std::vector<double>& t_values,
                                               int sample_count, std::uint64_t seed, double delta);

enum class LocalizationStatus { Concluded, HypothesisNotMet };
std::string to_string(LocalizationStatus s);

struct LocalizationReport {
  LocalizationStatus status = LocalizationStatus::HypothesisNotMet;
  double threshold = 0;        // 1/C - 1
  double mass_in_cone = 0;     // mass of atoms with <v_theta, v> >= threshold
  double lower_bound = 0;      // mass (1/C - 1) - (1 - mass)
  double directional = 0;      // <-grad, v>
  double gradient_norm = 0;
  bool consistent = true;      // the conclusion was checked against the direct gradient
};

// v: coordinates at x, normalized internally. Requires 1/2 < C < 1.
LocalizationReport localization_check(const SymmetricSpace& m, const BoundaryMeasure& sigma, const Point& x,
                                      const Vector& v, double mass_C);

struct HomotopyStep {
  double t = 0;
  BarycenterResult result;
  double jump = 0;             // distance to the previous barycenter
};

// barycenters of (1-t) sigma + t rho, warm started along the grid
std::vector<HomotopyStep> homotopy_path(const SymmetricSpace& m, const BoundaryMeasure& sigma, const BoundaryMeasure& rho,
                                        const std::vector<double>& t_values, const BarycenterOptions& opt = {});

}  // namespace hrdeg
