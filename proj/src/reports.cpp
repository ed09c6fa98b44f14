#include "kipp/reports.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "kipp/linalg.hpp"

namespace kipp {

namespace {

// Calls f(i, j, k, l, m) for every ordering of the five indices.
template <typename F>
void each_ordering(F&& f) {
  std::array<int, 5> p{0, 1, 2, 3, 4};
  do {
    f(p[0], p[1], p[2], p[3], p[4]);
  } while (std::next_permutation(p.begin(), p.end()));
}

ConditionRow equation(std::string label, Complex lhs, Complex rhs) {
  return {std::move(label), lhs, rhs, std::abs(lhs - rhs), false, 0.0};
}

ConditionRow disequality(std::string label, Complex lhs, Complex rhs, double margin, double tol) {
  return {std::move(label), lhs, rhs, margin > tol ? 0.0 : 1.0, true, margin};
}

void require_triangular5(const ComplexMatrix& t) {
  require_valid(t);
  if (t.rows() != 5) throw NotDim5("condition reports need a 5x5 matrix");
  if (!is_upper_triangular(t, default_tolerance(t))) throw NotUpperTriangular("condition reports need T upper triangular");
}

}  // namespace

EntrySide EntrySide::from(const ComplexMatrix& t) {
  require_triangular5(t);
  const auto a = [&](int r, int c) { return r < c ? t(r, c) : Complex(0.0); };
  std::array<Complex, 5> lam{};
  for (int i = 0; i < 5; ++i) lam[static_cast<std::size_t>(i)] = t(i, i);
  const auto L = [&](int i) { return lam[static_cast<std::size_t>(i)]; };
  const auto al = [&](int i) { return L(i).real(); };
  const auto be = [&](int i) { return L(i).imag(); };

  EntrySide s;
  for (int l = 0; l < 5; ++l) {
    for (int m = l + 1; m < 5; ++m) s.sum_sq += std::norm(a(l, m));
  }

  for (int i = 0; i < 5; ++i) {
    double total = 0.0;
    std::array<int, 4> q{};
    int n = 0;
    for (int v = 0; v < 5; ++v) {
      if (v != i) q[static_cast<std::size_t>(n++)] = v;
    }
    do {
      const int j = q[0], k = q[1], l = q[2], m = q[3];
      if (j < k && k < m && l < m) total += std::norm(a(j, k)) * std::norm(a(l, m));
      if (j < k && k < l && j < m && m < l) total -= (a(j, k) * a(k, l) * std::conj(a(j, m)) * std::conj(a(m, l))).real();
      if (j < k && l < k && k < m) total -= (a(j, k) * a(l, m) * std::conj(a(j, m)) * std::conj(a(l, k))).real();
    } while (std::next_permutation(q.begin(), q.end()));
    s.p[static_cast<std::size_t>(i)] = total;
  }

  const Complex z5 = a(0, 1) * a(1, 2) * a(2, 3) * a(3, 4) * std::conj(a(0, 4));
  double p_alpha = 0.0, p_beta = 0.0, p_sum = 0.0;
  for (int i = 0; i < 5; ++i) {
    p_alpha += s.p[static_cast<std::size_t>(i)] * al(i);
    p_beta += s.p[static_cast<std::size_t>(i)] * be(i);
    p_sum += s.p[static_cast<std::size_t>(i)];
  }
  s.d_rhs = -z5;
  s.e_rhs = -0.25 * p_alpha - 0.25 * z5.real();
  s.f_rhs = -0.25 * p_beta + 0.25 * z5.imag();
  s.g_rhs = -0.25 * p_sum;

  each_ordering([&](int i, int j, int k, int l, int m) {
    if (i < j && j < k && l < m) {
      const double w = std::norm(a(l, m));
      s.b_rhs += w * (L(i) + L(j) + L(k));
      s.c_rhs += w * (L(i) * L(j) + L(i) * L(k) + L(j) * L(k));
      s.d_rhs += w * L(i) * L(j) * L(k);
      s.e_rhs += w * al(i) * al(j) * al(k);
      s.f_rhs += w * be(i) * be(j) * be(k);
      s.g_rhs += w * (al(i) * al(j) + al(i) * al(k) + al(j) * al(k));
    }
    if (i < j && k < l && l < m) {
      const Complex x = a(k, l) * a(l, m) * std::conj(a(k, m));
      // Each triangle k < l < m has exactly one complementary pair i < j.
      s.b_rhs -= x;
      s.c_rhs -= (L(i) + L(j)) * x;
      s.d_rhs -= L(i) * L(j) * x;
      s.e_rhs += -x.real() * al(i) * al(j) + 0.25 * x.real() * std::norm(a(i, j));
      s.f_rhs += -x.imag() * be(i) * be(j) + 0.25 * x.imag() * std::norm(a(i, j));
      s.g_rhs -= x.real() * (al(i) + al(j));
    }
    if (j < k && k < l && l < m) {
      const Complex y = a(j, k) * a(k, l) * a(l, m) * std::conj(a(j, m));
      s.c_rhs += y;
      s.d_rhs += y * L(i);
      s.e_rhs += 0.5 * y.real() * al(i);
      s.f_rhs -= 0.5 * y.real() * be(i);
      s.g_rhs += 0.5 * y.real();
    }
    if (i < j && j < k && k < l && i < m && m < l) {
      const Complex w = a(i, j) * a(j, k) * a(k, l) * std::conj(a(i, m)) * std::conj(a(m, l));
      s.e_rhs -= 0.25 * w.real();
      s.f_rhs -= 0.25 * w.imag();
    }
    if (i < j && j < k && l < m && i < m && l < k) {
      const Complex w = a(i, j) * a(j, k) * a(l, m) * std::conj(a(i, m)) * std::conj(a(l, k));
      s.e_rhs -= 0.25 * w.real();
      s.f_rhs -= 0.25 * w.imag();
    }
  });
  return s;
}

double ConditionReport::max_residual() const {
  double m = 0.0;
  for (const auto& r : rows) m = std::max(m, r.residual);
  return m;
}

const ConditionRow& ConditionReport::row(const std::string& label) const {
  for (const auto& r : rows) {
    if (r.label == label) return r;
  }
  throw std::out_of_range("no condition row " + label);
}

ConditionReport two_ellipse_report(const ComplexMatrix& t, const Roles& roles, double r, double s) {
  const EntrySide rhs = EntrySide::from(t);
  const Complex lp = t(roles.p, roles.p), lq = t(roles.q, roles.q);
  const Complex lt = t(roles.t, roles.t), lv = t(roles.v, roles.v), lw = t(roles.w, roles.w);
  const double r2 = r * r, s2 = s * s;

  ConditionReport rep;
  rep.theorem = "two-ellipse";
  rep.rows.push_back(equation("a", r2 + s2, rhs.sum_sq));
  rep.rows.push_back(equation("b", r2 * (lw + lt + lv) + s2 * (lw + lq + lp), rhs.b_rhs));
  rep.rows.push_back(
      equation("c", r2 * (lw * lv + lw * lt + lt * lv) + s2 * (lw * lp + lw * lq + lp * lq), rhs.c_rhs));
  rep.rows.push_back(equation("d", r2 * lw * lt * lv + s2 * lw * lp * lq, rhs.d_rhs));

  const double aw = lw.real(), at = lt.real(), av = lv.real(), ap = lp.real(), aq = lq.real();
  const double bw = lw.imag(), bt = lt.imag(), bv = lv.imag(), bp = lp.imag(), bq = lq.imag();
  rep.rows.push_back(equation("e", r2 * aw * at * av + s2 * aw * ap * aq - r2 * s2 / 4.0 * aw, rhs.e_rhs));
  rep.rows.push_back(equation("f", r2 * bw * bt * bv + s2 * bw * bp * bq - r2 * s2 / 4.0 * bw, rhs.f_rhs));
  rep.rows.push_back(equation(
      "g", r2 * (aw * at + aw * av + av * at) + s2 * (aw * ap + aw * aq + ap * aq) - r2 * s2 / 4.0, rhs.g_rhs));
  return rep;
}

ConditionReport flat_report(const ComplexMatrix& t, const Roles& roles, double r, double theta, double mu,
                            double tol) {
  const EntrySide rhs = EntrySide::from(t);
  const Complex lp = t(roles.p, roles.p), lq = t(roles.q, roles.q);
  const Complex lt = t(roles.t, roles.t), lv = t(roles.v, roles.v), lw = t(roles.w, roles.w);
  const Complex rot = std::polar(1.0, -theta), e = std::polar(1.0, theta);
  const double mw = (rot * lw).real() + mu, mt = (rot * lt).real() + mu, mv = (rot * lv).real() + mu;
  const double r2 = r * r;
  const double m2 = mt * mv + mw * mv + mw * mt;
  const double m0 = mw * mt * mv;
  const Complex s1 = lw * mt * mv + lt * mw * mv + lv * mt * mw;
  const double a1 = s1.real(), b1 = s1.imag();
  const double c = std::cos(theta), sn = std::sin(theta);

  const double aw = lw.real(), at = lt.real(), av = lv.real(), ap = lp.real(), aq = lq.real();
  const double bw = lw.imag(), bt = lt.imag(), bv = lv.imag(), bp = lp.imag(), bq = lq.imag();

  ConditionReport rep;
  rep.theorem = "ellipse-and-flat-quartic";
  rep.rows.push_back(equation("a", r2 + 4.0 * m2, rhs.sum_sq));
  rep.rows.push_back(
      equation("b", r2 * (lw + lt + lv) + 4.0 * (s1 - 2.0 * m0 * e + (lp + lq) * m2), rhs.b_rhs));
  rep.rows.push_back(equation("c",
                              r2 * (lw * lt + lt * lv + lw * lv) +
                                  4.0 * (lp * lq * m2 + (lp + lq) * s1 - (lp + lq) * (2.0 * m0 * e)),
                              rhs.c_rhs));
  rep.rows.push_back(equation("d", r2 * lw * lt * lv + 4.0 * (lp * lq * (s1 - 2.0 * m0 * e)), rhs.d_rhs));
  rep.rows.push_back(equation(
      "e", r2 * (aw * at * av - a1 + 2.0 * m0 * c) + 4.0 * ap * aq * (a1 - 2.0 * m0 * c), rhs.e_rhs));
  rep.rows.push_back(equation(
      "f", r2 * (bw * bt * bv - b1 + 2.0 * m0 * sn) + 4.0 * bp * bq * (b1 - 2.0 * m0 * sn), rhs.f_rhs));
  rep.rows.push_back(equation("g",
                              r2 * ((at * av + aw * av + aw * at) - m2) + 4.0 * ap * aq * m2 +
                                  4.0 * (ap + aq) * (a1 - 2.0 * m0 * c),
                              rhs.g_rhs));

  rep.rows.push_back(disequality("h", m0, 0.0, std::abs(m0), tol));

  const std::array<Complex, 3> l{lw, lt, lv};
  const std::array<double, 3> m{mw, mt, mv};
  ConditionRow worst;
  worst.margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    const Complex lhs = l[j] * m[k] + l[k] * m[j] - 2.0 * m[j] * m[k] * e;
    const Complex right = l[i] * (m[k] + m[j]);
    const double margin = std::abs(lhs - right);
    if (margin < worst.margin) worst = disequality("i", lhs, right, margin, tol);
  }
  rep.rows.push_back(worst);
  return rep;
}

Roles match_roles(const ComplexMatrix& t, Complex p, Complex q, Complex tv, Complex v, Complex w) {
  const std::array<Complex, 5> want{p, q, tv, v, w};
  std::array<int, 5> got{};
  std::array<bool, 5> used{};
  for (std::size_t r = 0; r < 5; ++r) {
    int best = -1;
    double dist = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 5; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      const double d = std::abs(t(i, i) - want[r]);
      if (d < dist) {
        dist = d;
        best = i;
      }
    }
    used[static_cast<std::size_t>(best)] = true;
    got[r] = best;
  }
  return {got[0], got[1], got[2], got[3], got[4]};
}

}  // namespace kipp
