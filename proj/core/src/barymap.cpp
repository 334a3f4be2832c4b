#include "hrdeg/barymap.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hrdeg {

void BoundaryMeasure::validate() const {
  if (atoms.empty()) throw std::invalid_argument("measure has no atoms");
  if (atoms.size() != weights.size()) throw std::invalid_argument("atom and weight counts differ");
  // Neumaier sum, so many tiny weights do not drift past the tolerance
  double s = 0, comp = 0;
  for (double w : weights) {
    if (!(w > 0) || !std::isfinite(w)) throw std::invalid_argument("measure weights must be positive");
    double t = s + w;
    comp += std::abs(s) >= w ? (s - t) + w : (w - t) + s;
    s = t;
  }
  if (std::abs(s + comp - 1) > 1e-12) throw std::invalid_argument("measure weights do not sum to 1");
}

BoundaryMeasure make_measure(std::vector<FlagPoint> atoms, std::vector<double> weights) {
  BoundaryMeasure mu{std::move(atoms), std::move(weights)};
  mu.validate();
  return mu;
}

BoundaryMeasure uniform_measure(std::vector<FlagPoint> atoms) {
  std::vector<double> w(atoms.size(), 1.0 / static_cast<double>(atoms.size()));
  return make_measure(std::move(atoms), std::move(w));
}

BoundaryMeasure pushforward(const SymmetricSpace& m, const Isometry& g, const BoundaryMeasure& sigma) {
  BoundaryMeasure out;
  out.weights = sigma.weights;
  for (auto& t : sigma.atoms) out.atoms.push_back(m.act(g, t));
  return out;
}

BoundaryMeasure mix(const BoundaryMeasure& a, const BoundaryMeasure& b, double t) {
  if (t < 0 || t > 1) throw std::invalid_argument("mixing parameter outside [0,1]");
  if (t == 0) return a;
  if (t == 1) return b;
  BoundaryMeasure out;
  for (int i = 0; i < a.size(); ++i) {
    out.atoms.push_back(a.atoms[i]);
    out.weights.push_back((1 - t) * a.weights[i]);
  }
  for (int i = 0; i < b.size(); ++i) {
    out.atoms.push_back(b.atoms[i]);
    out.weights.push_back(t * b.weights[i]);
  }
  return out;
}

BoundaryMeasure monte_carlo_measure(const SymmetricSpace& m, int count, std::uint64_t seed, double spread) {
  if (count < 1) throw std::invalid_argument("need at least one atom");
  CounterRng rng(seed, 0x4d43);
  Vector c = random_unit(rng, m.dim()) * (spread * rng.uniform());
  Isometry g = m.exp_p(c);
  std::vector<FlagPoint> atoms = m.haar_flag_sample(count, rng());
  std::vector<double> w(count);
  double s = 0;
  for (auto& x : w) s += (x = rng.uniform(0.5, 1.5));
  for (auto& x : w) x /= s;
  BoundaryMeasure mu{std::move(atoms), std::move(w)};
  return pushforward(m, g, mu);
}

namespace {

// finite subgroup of the isotropy with no fixed vector in p:
// SPD(n): sign changes times cyclic shifts; H^n: +-1 on the spatial part
std::vector<Matrix> factor_group(const FactorModel& f) {
  std::vector<Matrix> out;
  if (f.name().rfind("spd:", 0) == 0) {
    int n = f.lie_size();
    Matrix P = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) P((i + 1) % n, i) = 1;
    Matrix Pr = Matrix::Identity(n, n);
    for (int r = 0; r < n; ++r) {
      for (int s = 0; s < (1 << n); ++s) {
        Matrix D = Matrix::Identity(n, n);
        for (int i = 0; i < n; ++i)
          if (s >> i & 1) D(i, i) = -1;
        out.push_back(D * Pr);
      }
      Pr = P * Pr;
    }
  } else {
    int n = f.lie_size();
    out.push_back(Matrix::Identity(n, n));
    Matrix R = -Matrix::Identity(n, n);
    R(0, 0) = 1;
    out.push_back(R);
  }
  return out;
}

struct Eval {
  double value = 0;
  double abs_sum = 0;
  Vector grad;
};

Eval evaluate(const SymmetricSpace& m, const BoundaryMeasure& sigma, const Point& x, bool with_grad) {
  Eval e;
  if (with_grad) e.grad = Vector::Zero(m.dim());
  for (int i = 0; i < sigma.size(); ++i) {
    double b = m.busemann(x, sigma.atoms[i]);
    e.value += sigma.weights[i] * b;
    e.abs_sum += sigma.weights[i] * std::abs(b);
    if (with_grad) e.grad -= sigma.weights[i] * m.direction_to_boundary(x, sigma.atoms[i]).coords;
  }
  return e;
}

}  // namespace

BoundaryMeasure symmetric_measure(const SymmetricSpace& m, const Point& x, int base_atoms, std::uint64_t seed) {
  std::vector<std::vector<Matrix>> groups;
  for (int i = 0; i < m.factor_count(); ++i) groups.push_back(factor_group(m.factor(i)));
  std::vector<Isometry> G{Isometry{}};
  for (auto& grp : groups) {
    std::vector<Isometry> next;
    for (auto& g : G)
      for (auto& e : grp) {
        Isometry h = g;
        h.factors.push_back(e);
        next.push_back(h);
      }
    G = std::move(next);
  }
  std::vector<FlagPoint> base = m.haar_flag_sample(base_atoms, seed);
  Isometry s = m.section(x);
  std::vector<FlagPoint> atoms;
  for (auto& t : base)
    for (auto& g : G) atoms.push_back(m.act(s, m.act(g, t)));
  return uniform_measure(std::move(atoms));
}

BoundaryMeasure concentrated_measure(const SymmetricSpace& m, const Vector& c, double T, int count, std::uint64_t seed) {
  BoundaryMeasure mu = uniform_measure(m.haar_flag_sample(count, seed));
  return pushforward(m, m.exp_p(T * c), mu);
}

double functional(const SymmetricSpace& m, const BoundaryMeasure& sigma, const Point& x) {
  return evaluate(m, sigma, x, false).value;
}

TangentVector gradient(const SymmetricSpace& m, const BoundaryMeasure& sigma, const Point& x) {
  Eval e = evaluate(m, sigma, x, true);
  return {x, e.grad, e.grad.norm()};
}

std::string to_string(BarycenterStatus s) {
  switch (s) {
    case BarycenterStatus::Converged: return "CONVERGED";
    case BarycenterStatus::NoMinimum: return "NO_MINIMUM";
    case BarycenterStatus::MaxIterations: return "MAX_ITERATIONS";
    case BarycenterStatus::Stalled: return "STALLED";
  }
  return "UNKNOWN";
}

BarycenterResult barycenter(const SymmetricSpace& m, const BoundaryMeasure& sigma, const Point& start,
                            const BarycenterOptions& opt, const TraceSink& trace) {
  sigma.validate();
  m.validate(start);
  const Point p = m.basepoint();
  const double eps = std::numeric_limits<double>::epsilon();
  BarycenterResult res;
  Point x = start;
  Eval e = evaluate(m, sigma, x, true);
  const double radius = std::min(opt.radius, m.numerical_horizon());
  double step = 1;
  for (int it = 0;; ++it) {
    double gn = e.grad.norm();
    res.point = x;
    res.functional = e.value;
    res.gradient_norm = gn;
    res.iterations = it;
    if (trace) trace({it, e.value, gn, it ? step : 0.0});
    if (gn <= opt.tol) {
      res.converged = true;
      res.status = BarycenterStatus::Converged;
      return res;
    }
    if (m.distance(p, x) > radius) {
      res.status = BarycenterStatus::NoMinimum;
      return res;
    }
    if (it >= opt.max_iter) {
      res.status = BarycenterStatus::MaxIterations;
      return res;
    }
    // never try to jump further than the divergence radius in one step
    step = std::min(2 * step, radius / gn);
    // each term carries an absolute rounding error of order eps even when it is tiny
    double slack = 4 * eps * (1 + std::max(e.abs_sum, std::abs(e.value)));
    for (;;) {
      Point y = m.exp(x, -step * e.grad);
      double fy = std::numeric_limits<double>::infinity();
      try {
        m.validate(y);
        fy = functional(m, sigma, y);
      } catch (const std::invalid_argument&) {
        // trial point past what the representation can carry: treat as a rejected step
      }
      double target = e.value - opt.armijo_c * step * gn * gn;
      // a decrease hidden in the rounding noise proves nothing; the gradient test below decides those
      if (fy <= target && fy < e.value - slack) {
        x = y;
        e = evaluate(m, sigma, x, true);
        break;
      }
      if (fy <= e.value + slack) {
        // decrease lost in rounding: let the gradient decide
        Eval ey = evaluate(m, sigma, y, true);
        // a relative margin, so rounding jitter in |g| cannot buy endless micro steps
        if (ey.grad.norm() < (1 - 1e-6) * gn) {
          x = y;
          e = ey;
          break;
        }
      }
      step *= 0.5;
      if (step * gn < 1e-18) {
        res.status = BarycenterStatus::Stalled;
        return res;
      }
    }
  }
}

bool numerically_converged(const BarycenterResult& r, double floor) {
  return r.converged || (r.status == BarycenterStatus::Stalled && r.gradient_norm <= floor);
}

EquivarianceReport equivariance_check(const SymmetricSpace& m, const BoundaryMeasure& sigma, const Isometry& g,
                                      const BarycenterOptions& opt, double tol) {
  EquivarianceReport rep;
  Point p = m.basepoint();
  BarycenterResult a = barycenter(m, sigma, p, opt);
  BarycenterResult b = barycenter(m, pushforward(m, g, sigma), m.act(g, p), opt);
  rep.status_plain = a.status;
  rep.status_moved = b.status;
  if (numerically_converged(a) && numerically_converged(b)) {
    rep.distance = m.distance(b.point, m.act(g, a.point));
    rep.pass = rep.distance <= tol;
  } else {
    rep.distance = std::numeric_limits<double>::infinity();
  }
  return rep;
}

std::vector<ConcentrationRow> ps_concentration(const SymmetricSpace& m, const Vector& c, const std::vector<double>& t_values,
                                               int sample_count, std::uint64_t seed, double delta) {
  if (c.size() != m.dim() || c.norm() == 0) throw std::invalid_argument("direction must be a nonzero tangent vector at p");
  Vector u = c / c.norm();
  FlagPoint lim = m.limit_flag(u);
  std::vector<FlagPoint> sample = m.haar_flag_sample(sample_count, seed);
  std::vector<ConcentrationRow> out;
  for (double t : t_values) {
    Isometry g = m.exp_p(t * u);
    int hit = 0;
    for (auto& th : sample)
      if (m.flag_distance(m.act(g, th), lim) <= delta) ++hit;
    out.push_back({t, static_cast<double>(hit) / sample_count});
  }
  return out;
}

std::string to_string(LocalizationStatus s) {
  return s == LocalizationStatus::Concluded ? "CONCLUDED" : "HYPOTHESIS_NOT_MET";
}

LocalizationReport localization_check(const SymmetricSpace& m, const BoundaryMeasure& sigma, const Point& x,
                                      const Vector& v_in, double C) {
  if (!(C > 0.5 && C < 1)) throw std::invalid_argument("mass constant must lie in (1/2, 1)");
  if (v_in.size() != m.dim() || v_in.norm() == 0) throw std::invalid_argument("direction must be a nonzero tangent vector");
  sigma.validate();
  Vector v = v_in / v_in.norm();
  LocalizationReport rep;
  rep.threshold = 1 / C - 1;
  Vector g = Vector::Zero(m.dim());
  for (int i = 0; i < sigma.size(); ++i) {
    Vector vi = m.direction_to_boundary(x, sigma.atoms[i]).coords;
    g -= sigma.weights[i] * vi;
    if (vi.dot(v) >= rep.threshold) rep.mass_in_cone += sigma.weights[i];
  }
  rep.directional = -g.dot(v);
  rep.gradient_norm = g.norm();
  rep.lower_bound = rep.mass_in_cone * rep.threshold - (1 - rep.mass_in_cone);
  if (rep.mass_in_cone > C) {
    rep.status = LocalizationStatus::Concluded;
    rep.consistent = rep.directional >= rep.lower_bound - 1e-12 && rep.gradient_norm > 0 && rep.lower_bound > 0;
  }
  return rep;
}

std::vector<HomotopyStep> homotopy_path(const SymmetricSpace& m, const BoundaryMeasure& sigma, const BoundaryMeasure& rho,
                                        const std::vector<double>& t_values, const BarycenterOptions& opt) {
  std::vector<HomotopyStep> out;
  Point start = m.basepoint();
  for (double t : t_values) {
    HomotopyStep s;
    s.t = t;
    s.result = barycenter(m, mix(sigma, rho, t), start, opt);
    if (!out.empty() && numerically_converged(s.result) && numerically_converged(out.back().result))
      s.jump = m.distance(out.back().result.point, s.result.point);
    if (numerically_converged(s.result)) start = s.result.point;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace hrdeg
