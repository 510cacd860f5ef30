#include "partition_lab/render.hpp"

#include <sstream>

namespace partition_lab {

namespace {

std::string lambda_e_annotation(const ModularDiagram& d) {
  std::ostringstream os;
  os << "lambda_e:";
  if (d.lambda_e.empty()) {
    os << " (none)";
  } else {
    for (long long v : d.lambda_e) os << " " << v;
  }
  return os.str();
}

std::string render_ascii(const ModularDiagram& d) {
  const DiagramCells cells = layout_cells(d);
  std::ostringstream os;
  for (const auto& row : cells.grid) {
    std::string line;
    for (CellKind cell : row) {
      switch (cell) {
        case CellKind::Empty: line += ".."; break;
        case CellKind::Square: line += "##"; break;
        case CellKind::LowerTriangle: line += "1."; break;
        case CellKind::UpperTriangle: line += ".3"; break;
        case CellKind::SplitPair: line += "13"; break;
      }
    }
    os << line << "\n";
  }
  os << lambda_e_annotation(d) << "\n";
  return os.str();
}

constexpr int kUnit = 24;  // pixels per cell

std::string render_svg(const ModularDiagram& d) {
  const DiagramCells cells = layout_cells(d);
  const std::size_t rows = cells.grid.size();
  const std::size_t columns = rows == 0 ? 0 : cells.grid[0].size();
  const int width = static_cast<int>(columns) * kUnit + 2 * kUnit;
  const int height = static_cast<int>(rows) * kUnit + 2 * kUnit;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
     << "\">\n";
  auto px = [&](std::size_t col) { return static_cast<int>(col) * kUnit + kUnit / 2; };
  auto py = [&](std::size_t row) { return static_cast<int>(row) * kUnit + kUnit / 2; };

  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns; ++c) {
      const CellKind cell = cells.grid[r][c];
      if (cell == CellKind::Empty) continue;
      const int x = px(c), y = py(r);
      if (cell == CellKind::Square || cell == CellKind::SplitPair) {
        os << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kUnit
           << "\" height=\"" << kUnit << "\" fill=\"none\" stroke=\"black\"/>\n";
      }
      if (cell == CellKind::LowerTriangle || cell == CellKind::SplitPair) {
        os << "  <polygon points=\"" << x << "," << y << " " << x << "," << y + kUnit
           << " " << x + kUnit << "," << y + kUnit
           << "\" fill=\"none\" stroke=\"black\"/>\n";
        os << "  <text x=\"" << x + kUnit / 4 << "\" y=\"" << y + 3 * kUnit / 4
           << "\" font-size=\"" << kUnit / 2 << "\">1</text>\n";
      }
      if (cell == CellKind::UpperTriangle || cell == CellKind::SplitPair) {
        os << "  <polygon points=\"" << x << "," << y << " " << x + kUnit << "," << y
           << " " << x + kUnit << "," << y + kUnit
           << "\" fill=\"none\" stroke=\"black\"/>\n";
        os << "  <text x=\"" << x + 5 * kUnit / 8 << "\" y=\"" << y + kUnit / 2
           << "\" font-size=\"" << kUnit / 2 << "\">3</text>\n";
      }
    }
  }
  // main diagonal across the square hull of the diagonal cells
  const std::size_t diag = std::min(rows, columns);
  if (diag > 0) {
    os << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\""
       << px(diag) << "\" y2=\"" << py(diag)
       << "\" stroke=\"black\" stroke-dasharray=\"2,2\"/>\n";
  }
  os << "  <text x=\"" << kUnit / 2 << "\" y=\"" << height - kUnit / 2
     << "\" font-size=\"" << kUnit / 2 << "\">" << lambda_e_annotation(d)
     << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_diagram(const ModularDiagram& d, DiagramFormat format) {
  return format == DiagramFormat::Ascii ? render_ascii(d) : render_svg(d);
}

}  // namespace partition_lab
