#pragma once

#include <string>

#include "partition_lab/maps.hpp"

namespace partition_lab {

enum class DiagramFormat { Ascii, Svg };

// Draws the 4-modular diagram. ASCII cells are two characters wide:
// "##" a square, "1." a lower triangle, ".3" an upper triangle, "13" a
// diagonal cell carrying both. lambda_e parts are not drawn; they appear on
// a trailing annotation line. SVG renders the same topology with unit
// squares, the main diagonal, and labeled triangles.
std::string render_diagram(const ModularDiagram& d, DiagramFormat format);

}  // namespace partition_lab
