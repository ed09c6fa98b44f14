#include "kipp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace kipp {

void require_valid(const ComplexMatrix& a) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    throw NotSquare("expected a non-empty square matrix, got " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()));
  }
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) {
        throw NonFiniteEntry("entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

double operator_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return singular_values(a)(0);
}

RealVector singular_values(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues();
}

double default_tolerance(const ComplexMatrix& a) {
  return kDefaultRelTol * std::max(1.0, operator_norm(a));
}

namespace {

// Swaps diagonal positions k and k+1 of the triangular factor.
void swap_adjacent(SchurForm& form, Eigen::Index k) {
  ComplexMatrix& t = form.triangular;
  const Complex t11 = t(k, k);
  const Complex t22 = t(k + 1, k + 1);
  const Complex t12 = t(k, k + 1);
  const Complex d = t22 - t11;
  const double norm = std::hypot(std::abs(t12), std::abs(d));
  if (norm == 0.0) return;

  // First column of q is the eigenvector of the 2x2 block for t22.
  Eigen::Matrix2cd q;
  q(0, 0) = t12 / norm;
  q(1, 0) = d / norm;
  q(0, 1) = -std::conj(d) / norm;
  q(1, 1) = std::conj(t12) / norm;

  t.middleRows(k, 2) = q.adjoint() * t.middleRows(k, 2);
  t.middleCols(k, 2) = t.middleCols(k, 2) * q;
  form.unitary.middleCols(k, 2) = form.unitary.middleCols(k, 2) * q;

  t(k + 1, k) = 0.0;
  t(k, k) = t22;
  t(k + 1, k + 1) = t11;
}

void refresh_eigenvalues(SchurForm& form) { form.eigenvalues = form.triangular.diagonal(); }

std::vector<int> lexicographic_permutation(const ComplexVector& ev) {
  std::vector<int> perm(static_cast<std::size_t>(ev.size()));
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
    const Complex a = ev(x), b = ev(y);
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return perm;
}

}  // namespace

void reorder_schur(SchurForm& form, std::span<const int> perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  if (n != form.triangular.rows()) throw BadDims("permutation length does not match the Schur form");
  std::vector<int> current(perm.size());
  std::iota(current.begin(), current.end(), 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    auto it = std::find(current.begin() + i, current.end(), perm[static_cast<std::size_t>(i)]);
    if (it == current.end()) throw BadDims("not a permutation");
    for (auto j = static_cast<Eigen::Index>(it - current.begin()); j > i; --j) {
      swap_adjacent(form, j - 1);
      std::swap(current[static_cast<std::size_t>(j - 1)], current[static_cast<std::size_t>(j)]);
    }
  }
  refresh_eigenvalues(form);
}

SchurForm schur_triangularize(const ComplexMatrix& a, EigenOrder order) {
  require_valid(a);
  Eigen::ComplexSchur<ComplexMatrix> solver(a, true);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("complex Schur iteration did not converge");
  }
  SchurForm form{solver.matrixU(), solver.matrixT(), {}};
  form.triangular.triangularView<Eigen::StrictlyLower>().setZero();
  refresh_eigenvalues(form);
  if (order == EigenOrder::Lexicographic) {
    const auto perm = lexicographic_permutation(form.eigenvalues);
    reorder_schur(form, perm);
  }
  return form;
}

SchurForm schur_triangularize(const ComplexMatrix& a, std::span<const Complex> target) {
  SchurForm form = schur_triangularize(a, EigenOrder::Solver);
  const auto n = form.eigenvalues.size();
  if (static_cast<Eigen::Index>(target.size()) != n) throw BadDims("target order has the wrong length");
  std::vector<int> perm;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const Complex& want : target) {
    int best = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const double dist = std::abs(form.eigenvalues(j) - want);
      if (dist < best_dist) {
        best_dist = dist;
        best = static_cast<int>(j);
      }
    }
    used[static_cast<std::size_t>(best)] = true;
    perm.push_back(best);
  }
  reorder_schur(form, perm);
  return form;
}

bool is_upper_triangular(const ComplexMatrix& t, double tol) {
  for (Eigen::Index j = 0; j < t.cols(); ++j) {
    for (Eigen::Index i = j + 1; i < t.rows(); ++i) {
      if (std::abs(t(i, j)) > tol) return false;
    }
  }
  return true;
}

bool is_partial_isometry(const ComplexMatrix& a, double tol) {
  require_valid(a);
  return (a * a.adjoint() * a - a).norm() <= tol;
}

bool is_class_Sn(const ComplexMatrix& a, double tol) {
  require_valid(a);
  const auto n = a.rows();
  if (operator_norm(a) > 1.0 + tol) return false;
  const ComplexVector ev = a.eigenvalues();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(ev(i)) >= 1.0 - tol) return false;
  }
  const ComplexMatrix defect = ComplexMatrix::Identity(n, n) - a.adjoint() * a;
  const RealVector sv = singular_values(defect);
  return (sv.array() > tol).count() == 1;
}

Reducibility reducibility(const ComplexMatrix& a, double tol) {
  require_valid(a);
  const auto n = a.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  // vec(XA - AX) = (A^T (x) I - I (x) A) vec X, column-major vec.
  auto commutator = [&](const ComplexMatrix& m) {
    ComplexMatrix out = ComplexMatrix::Zero(n * n, n * n);
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = 0; q < n; ++q) {
        out.block(p * n, q * n, n, n) += m(q, p) * id;
        if (p == q) out.block(p * n, q * n, n, n) -= m;
      }
    }
    return out;
  };
  ComplexMatrix system(2 * n * n, n * n);
  system << commutator(a), commutator(a.adjoint());
  const RealVector sv = singular_values(system);
  const auto kernel = (sv.array() <= tol).count();
  const auto borderline = ((sv.array() > tol) && (sv.array() <= 100.0 * tol)).count();
  if (borderline > 0) return Reducibility::Indeterminate;
  return kernel == 1 ? Reducibility::Irreducible : Reducibility::Reducible;
}

bool is_irreducible(const ComplexMatrix& a, double tol) {
  return reducibility(a, tol) == Reducibility::Irreducible;
}

int kernel_dimension(const ComplexMatrix& a, double tol) {
  require_valid(a);
  return static_cast<int>((singular_values(a).array() <= tol).count());
}

ComplexMatrix BlockForm::assembled() const {
  const auto m = static_cast<Eigen::Index>(kernel_dim);
  const auto n = basis.rows();
  ComplexMatrix block = ComplexMatrix::Zero(n, n);
  block.topRightCorner(m, n - m) = b;
  block.bottomRightCorner(n - m, n - m) = c;
  return basis * block * basis.adjoint();
}

BlockForm block_form(const ComplexMatrix& a, double tol) {
  if (!is_partial_isometry(a, tol)) throw NotPartialIsometry("A A* A != A within tolerance");
  const auto n = a.rows();
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto m = static_cast<Eigen::Index>((svd.singularValues().array() <= tol).count());
  const ComplexMatrix& v = svd.matrixV();

  BlockForm out;
  out.kernel_dim = static_cast<int>(m);
  out.basis.resize(n, n);
  out.basis << v.rightCols(m), v.leftCols(n - m);
  const ComplexMatrix block = out.basis.adjoint() * a * out.basis;
  out.b = block.topRightCorner(m, n - m);
  out.c = block.bottomRightCorner(n - m, n - m);

  const ComplexMatrix gram = out.b.adjoint() * out.b + out.c.adjoint() * out.c;
  if ((gram - ComplexMatrix::Identity(n - m, n - m)).norm() > tol) {
    throw NotPartialIsometry("B*B + C*C != I within tolerance");
  }
  return out;
}

Reduction reduce_partial_isometry(const ComplexMatrix& a, double tol) {
  const BlockForm form = block_form(a, tol);
  const auto m = static_cast<Eigen::Index>(form.kernel_dim);
  const auto n = a.rows();
  if (m == 0) return {0, a};

  Eigen::JacobiSVD<ComplexMatrix> svd(form.b, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto k = static_cast<Eigen::Index>((svd.singularValues().array() > tol).count());
  if (k == m) return {0, a};

  // Rotate the kernel block by the left singular vectors of B; the last
  // m - k rows of U* B vanish and those directions reduce A.
  const ComplexMatrix rotated_b = svd.matrixU().adjoint() * form.b;
  const auto size = n - m + k;
  ComplexMatrix reduced = ComplexMatrix::Zero(size, size);
  reduced.topRightCorner(k, n - m) = rotated_b.topRows(k);
  reduced.bottomRightCorner(n - m, n - m) = form.c;
  return {static_cast<int>(m - k), reduced};
}

}  // namespace kipp
