#include "kipp/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/QR>

namespace kipp {

Seed derive_seed(Seed base, std::uint64_t index) {
  std::uint64_t z = base.value + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return {z ^ (z >> 31)};
}

std::mt19937_64 make_engine(Seed seed) { return std::mt19937_64(seed.value); }

Complex random_in_disc(std::mt19937_64& engine, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double rho = radius * std::sqrt(unit(engine));
  return std::polar(rho, 2.0 * kPi * unit(engine));
}

namespace {

ComplexMatrix gaussian(int n, int m, std::mt19937_64& engine) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix g(n, m);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) {
      const double re = normal(engine);
      g(i, j) = Complex(re, normal(engine));
    }
  }
  return g;
}

ComplexVector random_unit(int n, std::mt19937_64& engine) {
  ComplexVector v = gaussian(n, 1, engine).col(0);
  return v / v.norm();
}

}  // namespace

ComplexMatrix haar_unitary(int n, Seed seed) {
  if (n < 1) throw BadDims("haar_unitary needs n >= 1");
  auto engine = make_engine(seed);
  const ComplexMatrix g = gaussian(n, n, engine);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const double mod = std::abs(r(j, j));
    if (mod > 0.0) q.col(j) *= r(j, j) / mod;
  }
  return q;
}

ComplexMatrix jordan_shift(int n) {
  if (n < 2) throw BadDims("jordan_shift needs n >= 2");
  ComplexMatrix j = ComplexMatrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) j(i, i + 1) = 1.0;
  return j;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

ComplexMatrix two_ellipse_block(const std::array<Complex, 5>& l, double r, double s) {
  if (!(r >= 0.0) || !(s >= 0.0)) throw std::invalid_argument("two_ellipse_block needs r, s >= 0");
  ComplexMatrix t = ComplexMatrix::Zero(5, 5);
  for (int i = 0; i < 5; ++i) t(i, i) = l[static_cast<std::size_t>(i)];
  t(0, 1) = r;
  t(2, 3) = s;
  return t;
}

ComplexMatrix s5_family(double a, Complex b, Complex c) {
  if (!(a >= 0.0 && a < 1.0) || !(std::abs(b) < 1.0) || !(std::abs(c) < 1.0)) {
    throw ParameterOutOfDisc("s5_family needs 0 <= a < 1, |b| < 1, |c| < 1");
  }
  const double sa = std::sqrt(1.0 - a * a);
  const double sb = std::sqrt(1.0 - std::norm(b));
  const double sc = std::sqrt(1.0 - std::norm(c));
  ComplexMatrix m = ComplexMatrix::Zero(5, 5);
  m(0, 0) = a;
  m(0, 1) = 1.0 - a * a;
  m(0, 2) = -a * sa;
  m(1, 1) = a;
  m(1, 2) = sa;
  m(2, 3) = sb;
  m(2, 4) = -std::conj(b) * sc;
  m(3, 3) = b;
  m(3, 4) = sb * sc;
  m(4, 4) = c;
  return m;
}

ComplexMatrix flat_3x3(Complex l3, Complex l4, Complex l5, double theta, double mu, double phase_a,
                       double phase_b) {
  const Complex rot = std::polar(1.0, -theta);
  const double m3 = (rot * l3).real() + mu;
  const double m4 = (rot * l4).real() + mu;
  const double m5 = (rot * l5).real() + mu;
  if (!(m3 > 0.0 && m4 > 0.0 && m5 > 0.0)) {
    throw InfeasibleMu("mu_j = " + std::to_string(m3) + ", " + std::to_string(m4) + ", " + std::to_string(m5));
  }
  const Complex a = std::polar(2.0 * std::sqrt(m3 * m4), phase_a);
  const Complex b = std::polar(2.0 * std::sqrt(m3 * m5), phase_b);
  const Complex c = std::conj(a) * b * std::polar(1.0, theta) / (2.0 * m3);
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = l3;
  m(1, 1) = l4;
  m(2, 2) = l5;
  m(0, 1) = a;
  m(0, 2) = b;
  m(1, 2) = c;
  return m;
}

ComplexMatrix random_partial_isometry(int n, int ker_dim, Seed seed) {
  if (n < 1 || ker_dim < 0 || ker_dim > n) {
    throw BadDims("random_partial_isometry needs 0 <= m <= n, got n=" + std::to_string(n) +
                  " m=" + std::to_string(ker_dim));
  }
  const ComplexMatrix v = haar_unitary(n, derive_seed(seed, 0));
  const ComplexMatrix u = haar_unitary(n, derive_seed(seed, 1));
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  a.rightCols(n - ker_dim) = v.leftCols(n - ker_dim);
  return u * a * u.adjoint();
}

Ker2Entries Ker2Entries::from_matrix(const ComplexMatrix& m) {
  if (m.rows() != 5 || m.cols() != 5) throw BadDims("dim ker = 2 pattern is 5x5");
  Ker2Entries e;
  e.k = m(0, 2);
  e.l = m(0, 3);
  e.t = m(0, 4);
  e.g = m(1, 2);
  e.h = m(1, 3);
  e.j = m(1, 4);
  e.b = m(2, 2);
  e.e = m(2, 3);
  e.f = m(2, 4);
  e.a = m(3, 3).real();
  e.d = m(3, 4);
  return e;
}

ComplexMatrix Ker2Entries::matrix() const {
  ComplexMatrix m = ComplexMatrix::Zero(5, 5);
  m(0, 2) = k;
  m(0, 3) = l;
  m(0, 4) = t;
  m(1, 2) = g;
  m(1, 3) = h;
  m(1, 4) = j;
  m(2, 2) = b;
  m(2, 3) = e;
  m(2, 4) = f;
  m(3, 3) = a;
  m(3, 4) = d;
  m(4, 4) = a;
  return m;
}

ComplexMatrix ker2_family(Seed seed, bool b_equals_a) {
  auto engine = make_engine(seed);
  std::uniform_real_distribution<double> a_dist(0.2, 0.8);
  const double a = a_dist(engine);
  const double tail = std::sqrt(1.0 - a * a);

  // Columns of the isometry [B; C]: (k, g, b, 0, 0), (l, h, e, a, 0), (t, j, f, d, a).
  ComplexVector c1 = ComplexVector::Zero(4);
  if (b_equals_a) {
    c1.head(2) = tail * random_unit(2, engine);
    c1(2) = a;
  } else {
    c1.head(3) = random_unit(3, engine);
  }

  ComplexVector c2 = ComplexVector::Zero(4);
  {
    ComplexVector z = random_unit(3, engine);
    z -= c1.head(3).dot(z) * c1.head(3);
    c2.head(3) = tail * z / z.norm();
    c2(3) = a;
  }

  ComplexVector c3;
  {
    ComplexVector w = random_unit(4, engine);
    w -= c1.dot(w) * c1;
    w -= c2.dot(w) * c2;
    c3 = tail * w / w.norm();
  }

  Ker2Entries e;
  e.k = c1(0);
  e.g = c1(1);
  e.b = c1(2);
  e.l = c2(0);
  e.h = c2(1);
  e.e = c2(2);
  e.a = a;
  e.t = c3(0);
  e.j = c3(1);
  e.f = c3(2);
  e.d = c3(3);
  return e.matrix();
}

ComplexMatrix random_upper_triangular(int n, Seed seed, double scale) {
  if (n < 1) throw BadDims("random_upper_triangular needs n >= 1");
  auto engine = make_engine(seed);
  ComplexMatrix t = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) t(i, j) = random_in_disc(engine, scale);
  }
  return t;
}

ComplexMatrix random_matrix(int n, Seed seed, double scale) {
  if (n < 1) throw BadDims("random_matrix needs n >= 1");
  auto engine = make_engine(seed);
  ComplexMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m(i, j) = random_in_disc(engine, scale);
  }
  return m;
}

}  // namespace kipp
