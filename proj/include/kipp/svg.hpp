#pragma once

#include <optional>
#include <string>

#include "kipp/classify.hpp"
#include "kipp/types.hpp"

namespace kipp {

enum Layer : unsigned {
  kLayerBoundary = 1u << 0,
  kLayerBranches = 1u << 1,
  kLayerEigenvalues = 1u << 2,
  kLayerDisc = 1u << 3,
  kLayerAll = 0xFu,
};

struct PlotSpec {
  int width = 600;
  int height = 600;
  int samples = 256;
  unsigned layers = kLayerAll;
  std::string title;  // written into <desc>
};

/// Throws std::invalid_argument unless samples >= 8, at least one layer is
/// set and the canvas is non-empty.
void validate(const PlotSpec& spec);

/// Deterministic SVG of W(A): boundary polygon, curve point cloud coloured
/// by eigenvalue branch, eigenvalues, and the fitted disc when given.
std::string render_svg(const ComplexMatrix& a, const PlotSpec& spec, const std::optional<DiscFit>& disc = {});

/// Parses "boundary,branches,eigenvalues,disc" (or "all").
unsigned parse_layers(const std::string& list);

}  // namespace kipp
