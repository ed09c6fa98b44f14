#pragma once

#include <array>
#include <string>
#include <vector>

#include "kipp/types.hpp"

namespace kipp {

/// Entry-side quantities of a 5x5 upper triangular T: the sums over its
/// off-diagonal entries that the two-ellipse and flat-portion conditions
/// compare against. Index groups are increasing runs of distinct indices.
struct EntrySide {
  double sum_sq = 0.0;   // (a): sum |a_lm|^2
  Complex b_rhs{};       // (b)
  Complex c_rhs{};       // (c)
  Complex d_rhs{};       // (d)
  double e_rhs = 0.0;    // (e)
  double f_rhs = 0.0;    // (f)
  double g_rhs = 0.0;    // (g)
  std::array<double, 5> p{};  // P_1..P_5

  static EntrySide from(const ComplexMatrix& t);
};

/// Indices into diag(T) (0-based): ellipse foci p, q; then t, v, w.
struct Roles {
  int p = 0, q = 1, t = 2, v = 3, w = 4;
};

struct ConditionRow {
  std::string label;
  Complex lhs{};
  Complex rhs{};
  double residual = 0.0;
  bool predicate = false;  // disequality row: residual is 0 (holds) or 1 (fails)
  double margin = 0.0;     // disequality rows: smallest |lhs - rhs|
};

struct ConditionReport {
  std::string theorem;
  std::vector<ConditionRow> rows;

  double max_residual() const;
  const ConditionRow& row(const std::string& label) const;
};

/// Two ellipses (foci p, q with minor axis r; foci t, v with minor axis s)
/// and the point w, conditions (a) to (g).
ConditionReport two_ellipse_report(const ComplexMatrix& t, const Roles& roles, double r, double s);

/// Ellipse (foci p, q, minor axis r) and a quartic with a flat portion on the
/// line (theta, mu) with foci w, t, v; conditions (a) to (g) plus the
/// disequalities (h) and (i), which hold when their margin exceeds `tol`.
ConditionReport flat_report(const ComplexMatrix& t, const Roles& roles, double r, double theta, double mu,
                            double tol = 1e-8);

/// Roles whose diagonal entries of `t` are nearest to the given eigenvalues.
Roles match_roles(const ComplexMatrix& t, Complex p, Complex q, Complex tv, Complex v, Complex w);

}  // namespace kipp
