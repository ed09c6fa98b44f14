#include "kipp/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "kipp/kippenhahn.hpp"
#include "kipp/linalg.hpp"

namespace kipp {

namespace {

constexpr double kGolden = 0.6180339887498949;

// Maximizes (or minimizes, with sign = -1) f on [lo, hi] by golden-section search.
template <typename F>
std::pair<double, double> golden_extremum(F&& f, double lo, double hi, double sign, double width) {
  double a = lo, b = hi;
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = sign * f(c), fd = sign * f(d);
  while (b - a > width) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = sign * f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = sign * f(d);
    }
  }
  return fc > fd ? std::pair{c, sign * fc} : std::pair{d, sign * fd};
}

double wrap_angle(double theta) {
  double t = std::fmod(theta, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  if (t >= 2.0 * kPi - 1e-12) t = 0.0;
  return t;
}

double angle_distance(double a, double b) {
  const double d = std::abs(wrap_angle(a) - wrap_angle(b));
  return std::min(d, 2.0 * kPi - d);
}

// z^k slice of P as a form in (x, y), stored with z-exponent 0.
HomoPoly3 slice(const HomoPoly3& p, int k) {
  const int m = p.degree() - k;
  HomoPoly3 out(m);
  for (int j = 0; j <= m; ++j) out.coeff(m - j, j, 0) = p.coeff(m - j, j, k);
  return out;
}

HomoPoly3 assemble(const std::vector<HomoPoly3>& slices, int degree) {
  HomoPoly3 out(degree);
  for (int k = 0; k < static_cast<int>(slices.size()); ++k) {
    const HomoPoly3& s = slices[static_cast<std::size_t>(k)];
    for (int j = 0; j <= s.degree(); ++j) out.coeff(s.degree() - j, j, k) = s.coeff(s.degree() - j, j, 0);
  }
  return out;
}

HomoPoly3 planar_norm(double scale) {
  HomoPoly3 n(2);
  n.coeff(2, 0, 0) = scale;
  n.coeff(0, 2, 0) = scale;
  return n;
}

// Quotient slices and remainder (z^1 slice, z^0 slice) of P by z^2 + s z + t.
struct QuadraticDivision {
  std::vector<HomoPoly3> quotient;
  HomoPoly3 rem1, rem0;
};

QuadraticDivision divide_quadratic(const HomoPoly3& p, const HomoPoly3& s, const HomoPoly3& t) {
  const int d = p.degree();
  QuadraticDivision out;
  out.quotient.resize(static_cast<std::size_t>(d - 1));
  auto q = [&](int k) -> HomoPoly3& { return out.quotient[static_cast<std::size_t>(k)]; };
  q(d - 2) = slice(p, d);
  // Recurrence P_k = Q_{k-2} + s Q_{k-1} + t Q_k with Q_{d-1} = 0.
  for (int k = d - 1; k >= 2; --k) {
    HomoPoly3 value = slice(p, k);
    if (k - 1 <= d - 2) value -= s * q(k - 1);
    if (k <= d - 2) value -= t * q(k);
    q(k - 2) = value;
  }
  out.rem1 = slice(p, 1) - s * q(0);
  if (d - 2 >= 1) out.rem1 -= t * q(1);
  out.rem0 = slice(p, 0) - t * q(0);
  return out;
}

std::vector<double> remainder_coefficients(const QuadraticDivision& div) {
  std::vector<double> out;
  for (const auto& term : div.rem1.terms()) out.push_back(term.c);
  for (const auto& term : div.rem0.terms()) out.push_back(term.c);
  return out;
}

// Real roots of sum c_i u^i via the companion matrix.
std::vector<double> real_roots(std::vector<double> c) {
  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::abs(v));
  while (!c.empty() && std::abs(c.back()) <= 1e-13 * scale) c.pop_back();
  if (c.size() < 2) return {};
  const auto n = static_cast<Eigen::Index>(c.size() - 1);
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<double> roots;
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::complex<double> z = solver.eigenvalues()(i);
    // Multiple roots split into the complex plane by about eps^(1/m).
    if (std::abs(z.imag()) <= 1e-4 * (1.0 + std::abs(z.real()))) roots.push_back(z.real());
  }
  return roots;
}

}  // namespace

DiscFit fit_disc(const ComplexMatrix& a, int samples) {
  require_valid(a);
  if (samples < 16) throw BadDims("fit_disc needs at least 16 samples");
  const auto n = static_cast<std::size_t>(samples);
  std::vector<double> theta(n), h(n);
  double sum = 0.0, sc = 0.0, ss = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    theta[k] = 2.0 * kPi * static_cast<double>(k) / samples;
    h[k] = support_function(a, theta[k]);
    sum += h[k];
    sc += h[k] * std::cos(theta[k]);
    ss += h[k] * std::sin(theta[k]);
  }
  // The uniform grid makes 1, cos, sin orthogonal, so least squares reduces to projections.
  DiscFit fit;
  fit.radius = sum / samples;
  fit.center = Complex(2.0 * sc / samples, 2.0 * ss / samples);
  const auto deviation = [&](double t) {
    return std::abs(support_function(a, t) - fit.radius - fit.center.real() * std::cos(t) -
                    fit.center.imag() * std::sin(t));
  };

  std::vector<double> dev(n);
  for (std::size_t k = 0; k < n; ++k) {
    dev[k] = std::abs(h[k] - fit.radius - fit.center.real() * std::cos(theta[k]) -
                      fit.center.imag() * std::sin(theta[k]));
  }
  fit.residual = *std::max_element(dev.begin(), dev.end());

  std::vector<std::size_t> peaks;
  for (std::size_t k = 0; k < n; ++k) {
    const double prev = dev[(k + n - 1) % n], next = dev[(k + 1) % n];
    if (dev[k] >= prev && dev[k] >= next && dev[k] >= 0.5 * fit.residual) peaks.push_back(k);
  }
  std::sort(peaks.begin(), peaks.end(), [&](std::size_t x, std::size_t y) { return dev[x] > dev[y]; });
  if (peaks.size() > 4) peaks.resize(4);
  const double step = 2.0 * kPi / samples;
  for (std::size_t k : peaks) {
    const auto [t, value] = golden_extremum(deviation, theta[k] - step, theta[k] + step, 1.0, 1e-10);
    (void)t;
    fit.residual = std::max(fit.residual, value);
  }
  fit.radius = std::max(fit.radius, 0.0);
  return fit;
}

bool is_circular(const DiscFit& fit, double tol) {
  return fit.residual < tol * std::max(1.0, fit.radius) && fit.radius > kMinDiscRadius;
}

HomoPoly3 linear_factor(Complex lambda) { return HomoPoly3::linear(lambda.real(), lambda.imag(), 1.0); }

HomoPoly3 ellipse_quadratic(Complex li, Complex lj, double r) {
  return linear_factor(li) * linear_factor(lj) - planar_norm(r * r / 4.0);
}

HomoPoly3 flat_cubic(Complex lw, Complex lt, Complex lv, double theta, double mu) {
  const auto mu_of = [&](Complex l) { return (std::polar(1.0, -theta) * l).real() + mu; };
  const double mw = mu_of(lw), mt = mu_of(lt), mv = mu_of(lv);
  const HomoPoly3 lw_ = linear_factor(lw), lt_ = linear_factor(lt), lv_ = linear_factor(lv);
  const HomoPoly3 m1 = mt * mv * lw_ + mw * mv * lt_ + mw * mt * lv_;
  const HomoPoly3 dir = HomoPoly3::linear(std::cos(theta), std::sin(theta), 0.0);
  return lw_ * lt_ * lv_ - planar_norm(1.0) * m1 + (2.0 * mw * mt * mv) * (planar_norm(1.0) * dir);
}

Division divide_linear(const HomoPoly3& p, Complex lambda) {
  const int d = p.degree();
  if (d < 1) throw BadDims("divide_linear needs degree >= 1");
  const HomoPoly3 l = HomoPoly3::linear(lambda.real(), lambda.imag(), 0.0);
  // P_k = Q_{k-1} + l Q_k, solved from the top z-power down.
  std::vector<HomoPoly3> q(static_cast<std::size_t>(d));
  q[static_cast<std::size_t>(d - 1)] = slice(p, d);
  for (int k = d - 1; k >= 1; --k) {
    q[static_cast<std::size_t>(k - 1)] = slice(p, k) - l * q[static_cast<std::size_t>(k)];
  }
  const HomoPoly3 remainder = slice(p, 0) - l * q[0];
  const double scale = p.max_abs_coeff();
  return {assemble(q, d - 1), scale > 0.0 ? remainder.max_abs_coeff() / scale : remainder.max_abs_coeff()};
}

EllipseFactor fit_ellipse_factor(const HomoPoly3& p, Complex li, Complex lj, double tol) {
  const int d = p.degree();
  if (d < 2) throw BadDims("fit_ellipse_factor needs degree >= 2");
  const HomoPoly3 ai = HomoPoly3::linear(li.real(), li.imag(), 0.0);
  const HomoPoly3 aj = HomoPoly3::linear(lj.real(), lj.imag(), 0.0);
  const HomoPoly3 s = ai + aj;
  const HomoPoly3 base = ai * aj;
  const double scale = std::max(1.0, p.max_abs_coeff());
  const auto divide_at = [&](double rho) { return divide_quadratic(p, s, base - planar_norm(rho)); };

  // Each remainder coefficient is a polynomial of degree floor(d/2) in rho;
  // recover it by interpolation at Chebyshev nodes of u = rho / scale.
  const int deg = d / 2;
  const int nodes = deg + 1;
  Eigen::MatrixXd vander(nodes, nodes);
  std::vector<std::vector<double>> values;
  for (int s_ = 0; s_ < nodes; ++s_) {
    const double u = std::cos(kPi * (s_ + 0.5) / nodes);
    for (int e = 0; e < nodes; ++e) vander(s_, e) = std::pow(u, e);
    values.push_back(remainder_coefficients(divide_at(u * scale)));
  }
  const std::size_t m = values.front().size();
  const auto lu = vander.fullPivLu();
  std::vector<std::vector<double>> coeffs(m);
  for (std::size_t c = 0; c < m; ++c) {
    Eigen::VectorXd rhs(nodes);
    for (int s_ = 0; s_ < nodes; ++s_) rhs(s_) = values[static_cast<std::size_t>(s_)][c];
    const Eigen::VectorXd sol = lu.solve(rhs);
    coeffs[c].assign(sol.data(), sol.data() + nodes);
  }

  // f(u) = sum_c coeff_c(u)^2; candidates are the real critical points.
  std::vector<double> f(static_cast<std::size_t>(2 * deg + 1), 0.0);
  for (const auto& c : coeffs) {
    for (int x = 0; x <= deg; ++x) {
      for (int y = 0; y <= deg; ++y) f[static_cast<std::size_t>(x + y)] += c[static_cast<std::size_t>(x)] * c[static_cast<std::size_t>(y)];
    }
  }
  std::vector<double> df;
  for (std::size_t e = 1; e < f.size(); ++e) df.push_back(static_cast<double>(e) * f[e]);
  std::vector<double> candidates = real_roots(df);
  if (candidates.empty()) candidates.push_back(0.0);

  const auto objective = [&](double u) {
    const auto rem = remainder_coefficients(divide_at(u * scale));
    double acc = 0.0;
    for (double v : rem) acc += v * v;
    return std::sqrt(acc) / scale;
  };
  // Tighten each root on the exact objective; multiple roots lose digits.
  for (double& u : candidates) {
    const double h = 1e-6 * (1.0 + std::abs(u));
    u = golden_extremum(objective, u - h, u + h, -1.0, 1e-15 * (1.0 + std::abs(u))).first;
  }

  double best_u = candidates.front();
  double best_val = std::numeric_limits<double>::infinity();
  for (double u : candidates) {
    const double val = objective(u);
    const bool both_exact = val <= tol && best_val <= tol;
    if ((both_exact && u > best_u) || (!both_exact && val < best_val)) {
      best_u = u;
      best_val = val;
    }
  }

  double rho = best_u * scale;
  if (rho < -tol * scale) throw NegativeMinorAxisSquared("best fit has r^2 = " + std::to_string(4.0 * rho));
  rho = std::max(rho, 0.0);
  const QuadraticDivision div = divide_at(rho);
  EllipseFactor out;
  out.minor_axis = 2.0 * std::sqrt(rho);
  out.quotient = assemble(div.quotient, d - 2);
  out.residual_norm = std::max(div.rem1.max_abs_coeff(), div.rem0.max_abs_coeff()) / std::max(p.max_abs_coeff(), 1e-300);
  return out;
}

std::vector<FlatCandidate> detect_flat(const ComplexMatrix& a, int grid, double tol) {
  require_valid(a);
  if (grid < 64) throw BadDims("detect_flat needs a grid of at least 64");
  const auto n = a.rows();
  if (n < 2) return {};
  const double accept = tol * std::max(1.0, operator_norm(a));

  const auto eigen_at = [&](double theta) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rotated_real_part(a, theta), Eigen::EigenvaluesOnly);
    return RealVector(solver.eigenvalues());
  };

  const auto g = static_cast<std::size_t>(grid);
  std::vector<RealVector> eig(g);
  for (std::size_t s = 0; s < g; ++s) eig[s] = eigen_at(2.0 * kPi * static_cast<double>(s) / grid);
  const double step = 2.0 * kPi / grid;

  std::vector<FlatCandidate> found;
  for (Eigen::Index c = 0; c + 1 < n; ++c) {
    const auto gap_at_grid = [&](std::size_t s) { return eig[s](c + 1) - eig[s](c); };
    const auto gap = [&](double theta) {
      const RealVector e = eigen_at(theta);
      return e(c + 1) - e(c);
    };
    for (std::size_t s = 0; s < g; ++s) {
      const double here = gap_at_grid(s);
      if (here > gap_at_grid((s + g - 1) % g) || here > gap_at_grid((s + 1) % g)) continue;
      const double t0 = step * static_cast<double>(s);
      const auto [theta, value] = golden_extremum(gap, t0 - step, t0 + step, -1.0, 1e-14);
      if (value >= accept) continue;
      const RealVector e = eigen_at(theta);
      const double repeated = 0.5 * (e(c) + e(c + 1));
      FlatCandidate cand{wrap_angle(theta), -repeated, value};

      // Canonical representative of {(theta, mu), (theta + pi, -mu)}.
      const double margin = std::max(accept, 1e-7);
      const auto above = (e.array() > repeated + margin).count();
      const auto below = (e.array() < repeated - margin).count();
      if (below > above || (below == above && cand.theta >= kPi)) {
        cand.theta = wrap_angle(cand.theta + kPi);
        cand.mu = -cand.mu;
      }

      const bool duplicate = std::any_of(found.begin(), found.end(), [&](const FlatCandidate& f) {
        return angle_distance(f.theta, cand.theta) < 1e-6 && std::abs(f.mu - cand.mu) < 1e-6;
      });
      if (!duplicate) found.push_back(cand);
    }
  }
  std::sort(found.begin(), found.end(), [](const FlatCandidate& x, const FlatCandidate& y) {
    return x.theta != y.theta ? x.theta < y.theta : x.mu < y.mu;
  });
  return found;
}

CurveComponent CurveComponent::point(Complex lambda) {
  CurveComponent c;
  c.kind = Kind::Point;
  c.foci = {lambda};
  c.factor = linear_factor(lambda);
  return c;
}

CurveComponent CurveComponent::ellipse(Complex li, Complex lj, double r) {
  CurveComponent c;
  c.kind = Kind::Ellipse;
  c.foci = {li, lj};
  c.minor_axis = r;
  c.factor = ellipse_quadratic(li, lj, r);
  return c;
}

CurveComponent CurveComponent::quartic_flat(Complex lw, Complex lt, Complex lv, double theta, double mu) {
  CurveComponent c;
  c.kind = Kind::QuarticFlat;
  c.foci = {lw, lt, lv};
  c.theta = theta;
  c.mu = mu;
  c.factor = flat_cubic(lw, lt, lv, theta, mu);
  return c;
}

std::string to_string(CurveComponent::Kind kind) {
  switch (kind) {
    case CurveComponent::Kind::Point: return "Point";
    case CurveComponent::Kind::Ellipse: return "Ellipse";
    case CurveComponent::Kind::QuarticFlat: return "QuarticFlat";
    case CurveComponent::Kind::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

namespace {

bool lex_less(Complex a, Complex b) {
  return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
}

// Tolerance for matching the residual cubic against the flat-portion model.
constexpr double kFlatMatchTol = 1e-7;
// Spread of a defective eigenvalue cluster in double precision is about
// eps^(1/k) for a k-fold eigenvalue; 5e-3 covers k <= 5.
constexpr double kClusterRadius = 5e-3;

bool flat_disequalities_hold(const std::array<Complex, 3>& l, double theta, double mu, double tol) {
  std::array<double, 3> m{};
  for (std::size_t i = 0; i < 3; ++i) m[i] = (std::polar(1.0, -theta) * l[i]).real() + mu;
  if (std::abs(m[0] * m[1] * m[2]) <= tol) return false;
  const Complex e = std::polar(1.0, theta);
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    const Complex lhs = l[j] * m[k] + l[k] * m[j] - 2.0 * m[j] * m[k] * e;
    const Complex rhs = l[i] * (m[k] + m[j]);
    if (std::abs(lhs - rhs) <= tol) return false;
  }
  return true;
}

}  // namespace

namespace {

struct Peeled {
  std::vector<CurveComponent> points, ellipses, rest;
  int unclassified_degree = 0;
};

// Points first, then the best-fitting ellipse pair repeatedly, then a flat
// quartic on exactly three remaining eigenvalues.
Peeled peel(HomoPoly3 p, std::vector<Complex> rem, const ComplexMatrix& a, double tol) {
  Peeled out;
  auto& points = out.points;
  auto& ellipses = out.ellipses;
  auto& rest = out.rest;

  for (std::size_t i = 0; i < rem.size();) {
    const Division div = divide_linear(p, rem[i]);
    if (div.residual_norm < tol) {
      CurveComponent c = CurveComponent::point(rem[i]);
      c.residual = div.residual_norm;
      points.push_back(c);
      p = div.quotient;
      rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }

  while (rem.size() >= 2) {
    std::size_t bi = 0, bj = 0;
    EllipseFactor best;
    best.residual_norm = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rem.size(); ++i) {
      for (std::size_t j = i + 1; j < rem.size(); ++j) {
        try {
          EllipseFactor f = fit_ellipse_factor(p, rem[i], rem[j], tol);
          if (f.residual_norm < best.residual_norm) {
            best = std::move(f);
            bi = i;
            bj = j;
          }
        } catch (const NegativeMinorAxisSquared&) {
        }
      }
    }
    if (!(best.residual_norm < tol)) break;
    const Complex li = rem[bi], lj = rem[bj];
    if (best.minor_axis * best.minor_axis / 4.0 <= tol) {
      points.push_back(CurveComponent::point(li));
      points.push_back(CurveComponent::point(lj));
    } else {
      CurveComponent c = CurveComponent::ellipse(li, lj, best.minor_axis);
      c.residual = best.residual_norm;
      ellipses.push_back(c);
    }
    p = best.quotient;
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(bj));
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(bi));
  }

  if (rem.size() == 3) {
    const std::array<Complex, 3> l{rem[0], rem[1], rem[2]};
    double best_diff = std::numeric_limits<double>::infinity();
    CurveComponent best;
    for (const FlatCandidate& cand : detect_flat(a)) {
      const HomoPoly3 model = flat_cubic(l[0], l[1], l[2], cand.theta, cand.mu);
      const double diff = relative_difference(p, model);
      if (diff < kFlatMatchTol && diff < best_diff &&
          flat_disequalities_hold(l, cand.theta, cand.mu, std::max(tol, 1e-9))) {
        best_diff = diff;
        best = CurveComponent::quartic_flat(l[0], l[1], l[2], cand.theta, cand.mu);
        best.residual = diff;
      }
    }
    if (best.kind == CurveComponent::Kind::QuarticFlat) {
      rest.push_back(best);
      rem.clear();
    }
  }
  if (!rem.empty()) {
    CurveComponent c;
    c.kind = CurveComponent::Kind::Unclassified;
    c.foci = rem;
    c.residual_degree = p.degree();
    c.factor = p;
    rest.push_back(c);
    out.unclassified_degree = p.degree();
  }
  return out;
}

// Eigenvalues within `radius` of each other (single linkage) replaced by the
// cluster mean. The mean of a defective cluster is far better conditioned
// than its members.
std::vector<Complex> cluster_means(std::vector<Complex> eig, double radius) {
  const std::size_t n = eig.size();
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (std::abs(eig[i] - eig[j]) <= radius && label[j] < label[i]) {
          label[i] = label[j];
          changed = true;
        }
      }
    }
  }
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex sum = 0.0;
    int count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (label[j] == label[i]) {
        sum += eig[j];
        ++count;
      }
    }
    out[i] = sum / static_cast<double>(count);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace

std::vector<CurveComponent> classify_curve(const ComplexMatrix& a, double tol) {
  require_valid(a);
  if (a.rows() != 5) throw NotDim5("classify_curve expects a 5x5 matrix");
  const SchurForm schur = schur_triangularize(a, EigenOrder::Lexicographic);
  const HomoPoly3 p = kipp_poly_det(a);
  const std::vector<Complex> eig(schur.eigenvalues.data(), schur.eigenvalues.data() + schur.eigenvalues.size());

  Peeled best = peel(p, eig, a, tol);
  if (best.unclassified_degree > 0) {
    const std::vector<Complex> merged = cluster_means(eig, kClusterRadius * std::max(1.0, operator_norm(a)));
    if (merged != eig) {
      Peeled retry = peel(p, merged, a, tol);
      if (retry.unclassified_degree < best.unclassified_degree) best = std::move(retry);
    }
  }
  auto& points = best.points;
  auto& ellipses = best.ellipses;
  auto& rest = best.rest;

  std::stable_sort(points.begin(), points.end(),
                   [](const CurveComponent& x, const CurveComponent& y) { return lex_less(x.foci[0], y.foci[0]); });
  std::stable_sort(ellipses.begin(), ellipses.end(), [](const CurveComponent& x, const CurveComponent& y) {
    for (std::size_t i = 0; i < 2; ++i) {
      if (x.foci[i] != y.foci[i]) return lex_less(x.foci[i], y.foci[i]);
    }
    return x.minor_axis > y.minor_axis;
  });
  std::vector<CurveComponent> out;
  out.insert(out.end(), points.begin(), points.end());
  out.insert(out.end(), ellipses.begin(), ellipses.end());
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace kipp
