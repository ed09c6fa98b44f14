#include "kipp/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

#include "kipp/kippenhahn.hpp"

namespace kipp {

namespace {

constexpr std::array<const char*, 8> kPalette{"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                              "#66a61e", "#e6ab02", "#a6761d", "#666666"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Maps the complex plane onto the canvas with equal scales on both axes.
struct Frame {
  double cx = 0.0, cy = 0.0, scale = 1.0, w = 0.0, h = 0.0;

  double px(Complex z) const { return w / 2.0 + (z.real() - cx) * scale; }
  double py(Complex z) const { return h / 2.0 - (z.imag() - cy) * scale; }
};

Frame make_frame(const std::vector<Complex>& pts, const PlotSpec& spec) {
  double x0 = -1.0, x1 = 1.0, y0 = -1.0, y1 = 1.0;
  if (!pts.empty()) {
    x0 = x1 = pts.front().real();
    y0 = y1 = pts.front().imag();
    for (Complex z : pts) {
      x0 = std::min(x0, z.real());
      x1 = std::max(x1, z.real());
      y0 = std::min(y0, z.imag());
      y1 = std::max(y1, z.imag());
    }
  }
  const double span = std::max({x1 - x0, y1 - y0, 1e-9});
  Frame f;
  f.w = spec.width;
  f.h = spec.height;
  f.cx = (x0 + x1) / 2.0;
  f.cy = (y0 + y1) / 2.0;
  f.scale = 0.9 * std::min(spec.width, spec.height) / span;
  return f;
}

}  // namespace

void validate(const PlotSpec& spec) {
  if (spec.samples < 8) throw std::invalid_argument("PlotSpec needs samples >= 8");
  if ((spec.layers & kLayerAll) == 0) throw std::invalid_argument("PlotSpec needs at least one layer");
  if (spec.width < 1 || spec.height < 1) throw std::invalid_argument("PlotSpec needs a non-empty canvas");
}

unsigned parse_layers(const std::string& list) {
  unsigned out = 0;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "boundary") out |= kLayerBoundary;
    else if (item == "branches") out |= kLayerBranches;
    else if (item == "eigenvalues") out |= kLayerEigenvalues;
    else if (item == "disc") out |= kLayerDisc;
    else if (item == "all") out |= kLayerAll;
    else throw std::invalid_argument("unknown layer '" + item + "'");
  }
  return out;
}

std::string render_svg(const ComplexMatrix& a, const PlotSpec& spec, const std::optional<DiscFit>& disc) {
  validate(spec);
  require_valid(a);

  const std::vector<Complex> boundary = boundary_polyline(a, spec.samples);
  const std::vector<SpectralSlice> slices = curve_points(a, spec.samples);
  const Eigen::VectorXcd eig = a.rows() ? Eigen::ComplexEigenSolver<ComplexMatrix>(a, false).eigenvalues()
                                        : Eigen::VectorXcd();

  std::vector<Complex> extent = boundary;
  for (Eigen::Index i = 0; i < eig.size(); ++i) extent.push_back(eig(i));
  if (disc && (spec.layers & kLayerDisc)) {
    extent.push_back(disc->center + Complex(disc->radius, disc->radius));
    extent.push_back(disc->center - Complex(disc->radius, disc->radius));
  }
  const Frame f = make_frame(extent, spec);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
     << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\">\n";
  os << "  <desc>" << escape(spec.title) << "</desc>\n";
  os << "  <rect width=\"" << spec.width << "\" height=\"" << spec.height << "\" fill=\"white\"/>\n";

  if (spec.layers & kLayerBoundary) {
    os << "  <polygon class=\"boundary\" fill=\"#dbe9f6\" stroke=\"#1f4e79\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < boundary.size(); ++i) {
      if (i) os << ' ';
      os << num(f.px(boundary[i])) << ',' << num(f.py(boundary[i]));
    }
    os << "\"/>\n";
  }

  if (spec.layers & kLayerBranches) {
    const auto n = static_cast<std::size_t>(a.rows());
    for (std::size_t j = 0; j < n; ++j) {
      os << "  <g class=\"branch\" data-index=\"" << j << "\" fill=\"" << kPalette[j % kPalette.size()] << "\">\n";
      for (const auto& s : slices) {
        const Complex z = s.curve_points[j];
        os << "    <circle cx=\"" << num(f.px(z)) << "\" cy=\"" << num(f.py(z)) << "\" r=\"1.5\"/>\n";
      }
      os << "  </g>\n";
    }
  }

  if (disc && (spec.layers & kLayerDisc)) {
    os << "  <circle class=\"fitted-disc\" cx=\"" << num(f.px(disc->center)) << "\" cy=\"" << num(f.py(disc->center))
       << "\" r=\"" << num(disc->radius * f.scale)
       << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
  }

  if (spec.layers & kLayerEigenvalues) {
    os << "  <g class=\"eigenvalues\" fill=\"black\">\n";
    for (Eigen::Index i = 0; i < eig.size(); ++i) {
      os << "    <circle cx=\"" << num(f.px(eig(i))) << "\" cy=\"" << num(f.py(eig(i))) << "\" r=\"3\"/>\n";
    }
    os << "  </g>\n";
  }

  os << "</svg>\n";
  return os.str();
}

}  // namespace kipp
