#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace kipp {

/// Homogeneous polynomial of degree d in (x, y, z); one coefficient per
/// exponent triple (i, j, k) with i + j + k = d.
template <typename Scalar_>
class HomogeneousPolynomial {
 public:
  using Scalar = Scalar_;

  struct Term {
    int i, j, k;
    Scalar c;
  };

  HomogeneousPolynomial() : HomogeneousPolynomial(0) {}
  explicit HomogeneousPolynomial(int degree)
      : degree_(degree), coeffs_(count(degree), Scalar(0)) {
    if (degree < 0) throw std::invalid_argument("negative degree");
  }

  static HomogeneousPolynomial constant(Scalar c) {
    HomogeneousPolynomial p(0);
    p.coeffs_[0] = c;
    return p;
  }

  /// a x + b y + c z
  static HomogeneousPolynomial linear(Scalar a, Scalar b, Scalar c) {
    HomogeneousPolynomial p(1);
    p.coeff(1, 0, 0) = a;
    p.coeff(0, 1, 0) = b;
    p.coeff(0, 0, 1) = c;
    return p;
  }

  static HomogeneousPolynomial monomial(int i, int j, int k, Scalar c = Scalar(1)) {
    HomogeneousPolynomial p(i + j + k);
    p.coeff(i, j, k) = c;
    return p;
  }

  static constexpr std::size_t count(int degree) {
    return degree < 0 ? 0 : static_cast<std::size_t>((degree + 1) * (degree + 2) / 2);
  }

  int degree() const { return degree_; }
  std::size_t size() const { return coeffs_.size(); }

  Scalar& coeff(int i, int j, int k) { return coeffs_[index(i, j, k)]; }
  Scalar coeff(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0 || i + j + k != degree_) return Scalar(0);
    return coeffs_[index(i, j, k)];
  }

  /// Terms sorted lexicographically by (i, j, k).
  std::vector<Term> terms() const {
    std::vector<Term> out;
    out.reserve(coeffs_.size());
    for (int i = 0; i <= degree_; ++i) {
      for (int j = 0; j <= degree_ - i; ++j) {
        const int k = degree_ - i - j;
        out.push_back({i, j, k, coeff(i, j, k)});
      }
    }
    return out;
  }

  template <typename T>
  T operator()(const T& x, const T& y, const T& z) const {
    T total(0);
    for (const auto& t : terms()) {
      if (t.c == Scalar(0)) continue;
      total += T(t.c) * ipow(x, t.i) * ipow(y, t.j) * ipow(z, t.k);
    }
    return total;
  }

  HomogeneousPolynomial& operator+=(const HomogeneousPolynomial& o) {
    check_same_degree(o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
  }
  HomogeneousPolynomial& operator-=(const HomogeneousPolynomial& o) {
    check_same_degree(o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
    return *this;
  }
  HomogeneousPolynomial& operator*=(Scalar s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend HomogeneousPolynomial operator+(HomogeneousPolynomial a, const HomogeneousPolynomial& b) {
    return a += b;
  }
  friend HomogeneousPolynomial operator-(HomogeneousPolynomial a, const HomogeneousPolynomial& b) {
    return a -= b;
  }
  friend HomogeneousPolynomial operator-(HomogeneousPolynomial a) { return a *= Scalar(-1); }
  friend HomogeneousPolynomial operator*(HomogeneousPolynomial a, Scalar s) { return a *= s; }
  friend HomogeneousPolynomial operator*(Scalar s, HomogeneousPolynomial a) { return a *= s; }

  friend HomogeneousPolynomial operator*(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    HomogeneousPolynomial out(a.degree_ + b.degree_);
    for (const auto& ta : a.terms()) {
      if (ta.c == Scalar(0)) continue;
      for (const auto& tb : b.terms()) {
        out.coeff(ta.i + tb.i, ta.j + tb.j, ta.k + tb.k) += ta.c * tb.c;
      }
    }
    return out;
  }

  HomogeneousPolynomial pow(int e) const {
    HomogeneousPolynomial out = constant(Scalar(1));
    for (int n = 0; n < e; ++n) out = out * *this;
    return out;
  }

  /// P(m * (x, y, z)^T): each variable replaced by the corresponding row of m.
  HomogeneousPolynomial substitute(const Eigen::Matrix<Scalar, 3, 3>& m) const {
    const HomogeneousPolynomial xs = linear(m(0, 0), m(0, 1), m(0, 2));
    const HomogeneousPolynomial ys = linear(m(1, 0), m(1, 1), m(1, 2));
    const HomogeneousPolynomial zs = linear(m(2, 0), m(2, 1), m(2, 2));
    HomogeneousPolynomial out(degree_);
    for (const auto& t : terms()) {
      if (t.c == Scalar(0)) continue;
      out += t.c * (xs.pow(t.i) * ys.pow(t.j) * zs.pow(t.k));
    }
    return out;
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, static_cast<double>(std::abs(c)));
    return m;
  }

  /// max |a - b| / max |b| over coefficients.
  friend double relative_difference(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    a.check_same_degree(b);
    double diff = 0.0;
    for (std::size_t n = 0; n < a.coeffs_.size(); ++n) {
      diff = std::max(diff, static_cast<double>(std::abs(a.coeffs_[n] - b.coeffs_[n])));
    }
    const double scale = b.max_abs_coeff();
    return scale > 0.0 ? diff / scale : diff;
  }

  std::string to_string() const {
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (const auto& t : terms()) {
      if (t.c == Scalar(0)) continue;
      if (!first) os << " + ";
      first = false;
      os << t.c;
      if (t.i) os << "*x^" << t.i;
      if (t.j) os << "*y^" << t.j;
      if (t.k) os << "*z^" << t.k;
    }
    return first ? "0" : os.str();
  }

 private:
  // Layout: grouped by total degree in (x, y), then by j.
  std::size_t index(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0 || i + j + k != degree_) {
      throw std::out_of_range("monomial exponent does not match the polynomial degree");
    }
    const int m = degree_ - k;  // degree in (x, y)
    return count(m - 1) + static_cast<std::size_t>(j);
  }

  void check_same_degree(const HomogeneousPolynomial& o) const {
    if (o.degree_ != degree_) throw std::invalid_argument("degree mismatch");
  }

  template <typename T>
  static T ipow(const T& base, int e) {
    T r(1);
    for (int n = 0; n < e; ++n) r *= base;
    return r;
  }

  int degree_;
  std::vector<Scalar> coeffs_;
};

using HomoPoly3 = HomogeneousPolynomial<double>;

}  // namespace kipp
