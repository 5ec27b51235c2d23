#pragma once

/// \file
/// \brief Schematic SVG figures of a scene.

#include <string>
#include <vector>

#include "miquel/scene.hpp"

namespace miquel {

enum class FigureElement {
  circumcircle,
  /// Circles (A, Y, Z), (B, Z, X), (C, X, Y) of the scene's triad, or of
  /// P's family member for the scene's theta.
  miquel_circles,
  miquel_triangle,
  /// Requires P on the circumcircle.
  simson,
  /// O, H, G, L, Ω₁, Ω₂.
  centers,
  /// Median, symmedian, S_v, M_v, E, F for one vertex.
  theorem12,
  /// The eleven catalog points.
  catalog,
};

/// Names as accepted on the command line: circumcircle, miquel-circles,
/// miquel-triangle, simson, centers, theorem12, catalog.
FigureElement parse_figure_element(const std::string& name);
std::string to_string(FigureElement e);

struct FigureOptions {
  /// Vertex for the theorem12 element.
  Vertex vertex{Vertex::A};
  /// Pixel width and height of the document.
  int size{640};
};

/// The triangle is always drawn. Throws GeometryError(EmptySelection) for
/// an empty selection and propagates construction errors.
std::string render_figure(const SceneSpec& scene, const std::vector<FigureElement>& elements,
                          const FigureOptions& options = {});

}  // namespace miquel
