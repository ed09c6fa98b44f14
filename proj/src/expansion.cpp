// Closed-form Kippenhahn polynomial of a 5x5 upper triangular matrix.
//
// Index groups S_{i1 i2 ...} are strictly increasing runs; when a sum names
// several groups all named indices are pairwise distinct and every group's
// ordering applies at once. Sums run over assignments of distinct indices
// to the named letters, filtered by those orderings.

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "kipp/kippenhahn.hpp"
#include "kipp/linalg.hpp"

namespace kipp {

namespace {

using Idx = std::array<int, 5>;

class Expansion {
 public:
  explicit Expansion(const ComplexMatrix& t) : t_(t) {
    for (int i = 0; i < 5; ++i) {
      lin_[static_cast<std::size_t>(i)] = HomoPoly3::linear(t(i, i).real(), t(i, i).imag(), 1.0);
    }
  }

  Complex a(int r, int c) const { return r < c ? t_(r, c) : Complex(0.0); }
  const HomoPoly3& lin(int i) const { return lin_[static_cast<std::size_t>(i)]; }

  // x Re(w) + y Im(w)
  static HomoPoly3 xy_form(Complex w) { return HomoPoly3::linear(w.real(), w.imag(), 0.0); }

  static HomoPoly3 norm_quarter() {
    HomoPoly3 q(2);
    q.coeff(2, 0, 0) = 0.25;
    q.coeff(0, 2, 0) = 0.25;
    return q;
  }

  // Visits every assignment of distinct indices 0..4 to (i, j, k, l, m).
  static void for_each_assignment(const std::function<void(int, int, int, int, int)>& f) {
    Idx p{0, 1, 2, 3, 4};
    do {
      f(p[0], p[1], p[2], p[3], p[4]);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  // Visits every assignment of the four indices other than `skip` to (j, k, l, m).
  static void for_each_assignment_without(int skip, const std::function<void(int, int, int, int)>& f) {
    std::array<int, 4> p{};
    int n = 0;
    for (int v = 0; v < 5; ++v) {
      if (v != skip) p[static_cast<std::size_t>(n++)] = v;
    }
    do {
      f(p[0], p[1], p[2], p[3]);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  double p_scalar(int i) const {
    double total = 0.0;
    for_each_assignment_without(i, [&](int j, int k, int l, int m) {
      // S_{jkm} S_{lm}
      if (j < k && k < m && l < m) total += std::norm(a(j, k)) * std::norm(a(l, m));
      // S_{jkl} S_{jml}
      if (j < k && k < l && j < m && m < l) {
        total -= (a(j, k) * a(k, l) * std::conj(a(j, m)) * std::conj(a(m, l))).real();
      }
      // S_{jk} S_{lkm}
      if (j < k && l < k && k < m) {
        total -= (a(j, k) * a(l, m) * std::conj(a(j, m)) * std::conj(a(l, k))).real();
      }
    });
    return total;
  }

  HomoPoly3 q() const {
    HomoPoly3 q(3);
    const HomoPoly3 nq = norm_quarter();

    for_each_assignment([&](int i, int j, int k, int l, int m) {
      // S_{ijk} S_{lm}: |a_lm|^2 L_i L_j L_k
      if (i < j && j < k && l < m) q += std::norm(a(l, m)) * (lin(i) * lin(j) * lin(k));

      // S_{ij} S_{klm}: triangle terms, with and without the |a_ij|^2 correction
      if (i < j && k < l && l < m) {
        const Complex x3 = a(k, l) * a(l, m) * std::conj(a(k, m));
        q -= xy_form(x3) * lin(i) * lin(j);
        q += std::norm(a(i, j)) * (nq * xy_form(x3));
      }

      // S_i S_{jklm}: monotone 4-cycles
      if (j < k && k < l && l < m) {
        const Complex y4 = a(j, k) * a(k, l) * a(l, m) * std::conj(a(j, m));
        HomoPoly3 quad(2);
        quad.coeff(2, 0, 0) = 0.5 * y4.real();
        quad.coeff(0, 2, 0) = -0.5 * y4.real();
        quad.coeff(1, 1, 0) = y4.imag();
        q += lin(i) * quad;
      }

      // S_{ijkl} S_{iml}
      if (i < j && j < k && k < l && i < m && m < l) {
        const Complex w = a(i, j) * a(j, k) * a(k, l) * std::conj(a(i, m)) * std::conj(a(m, l));
        q -= nq * xy_form(w);
      }

      // S_{ijk} S_{lm} S_{im} S_{lk}
      if (i < j && j < k && l < m && i < m && l < k) {
        const Complex w = a(i, j) * a(j, k) * a(l, m) * std::conj(a(i, m)) * std::conj(a(l, k));
        q -= nq * xy_form(w);
      }
    });

    for (int i = 0; i < 5; ++i) q -= p_scalar(i) * (nq * lin(i));

    const Complex z5 = a(0, 1) * a(1, 2) * a(2, 3) * a(3, 4) * std::conj(a(0, 4));
    HomoPoly3 cubic(3);
    cubic.coeff(3, 0, 0) = -0.25 * z5.real();
    cubic.coeff(1, 2, 0) = 0.75 * z5.real();
    cubic.coeff(2, 1, 0) = -0.75 * z5.imag();
    cubic.coeff(0, 3, 0) = 0.25 * z5.imag();
    q += cubic;
    return q;
  }

  HomoPoly3 product() const {
    HomoPoly3 p = HomoPoly3::constant(1.0);
    for (int i = 0; i < 5; ++i) p = p * lin(i);
    return p;
  }

 private:
  const ComplexMatrix& t_;
  std::array<HomoPoly3, 5> lin_;
};

void require_triangular5(const ComplexMatrix& t) {
  require_valid(t);
  if (t.rows() != 5) throw NotDim5("expected a 5x5 matrix, got dimension " + std::to_string(t.rows()));
  if (!is_upper_triangular(t, default_tolerance(t))) {
    throw NotUpperTriangular("entries below the diagonal exceed the structural tolerance");
  }
}

}  // namespace

HomoPoly3 kipp_q_expanded(const ComplexMatrix& t) {
  require_triangular5(t);
  return Expansion(t).q();
}

HomoPoly3 kipp_poly_expanded(const ComplexMatrix& t) {
  require_triangular5(t);
  const Expansion e(t);
  return e.product() - Expansion::norm_quarter() * e.q();
}

}  // namespace kipp
