#include "partition_lab/maps.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "partition_lab/families.hpp"

namespace partition_lab {

namespace {

std::string describe(const ColoredPartition& p) {
  std::ostringstream os;
  bool first = true;
  for (const Part& x : p.parts()) {
    if (!first) os << ",";
    first = false;
    os << x.value << (x.color == Color::Blue ? "b" : "g");
  }
  return first ? std::string("(empty)") : os.str();
}

void require(bool ok, const char* what, const ColoredPartition& p) {
  if (!ok) {
    throw std::domain_error(std::string(what) + ": " + describe(p));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// phi
// ---------------------------------------------------------------------------

ColoredPartition phi(const ColoredPartition& p) {
  require(member(FamilyId::F, p), "phi requires a member of pi_F", p);
  require(!member(FamilyId::Q, p), "phi is undefined on pi_Q", p);

  std::map<long long, long long> even_mult;       // evens are all Blue in pi_F
  std::map<long long, long long> blue_odd_mult;
  for (const Part& x : p.parts()) {
    if (x.value % 2 == 0) ++even_mult[x.value];
    else if (x.color == Color::Blue) ++blue_odd_mult[x.value];
  }

  long long c = 0;  // largest even value
  if (!even_mult.empty()) c = even_mult.rbegin()->first;
  long long d = 0;  // largest repeated Blue odd value
  for (const auto& [v, m] : blue_odd_mult) {
    if (m >= 2) d = std::max(d, v);
  }
  long long lre = 0;  // largest repeated even value
  for (const auto& [v, m] : even_mult) {
    if (m >= 2) lre = std::max(lre, v);
  }

  auto merge_two = [&](long long v) {
    std::vector<Part> parts = p.parts();
    int removed = 0;
    for (auto it = parts.begin(); it != parts.end() && removed < 2;) {
      if (it->value == v && it->color == Color::Blue) {
        it = parts.erase(it);
        ++removed;
      } else {
        ++it;
      }
    }
    parts.push_back({2 * v, Color::Blue});
    return canonicalize(std::move(parts));
  };
  auto split_even = [&](long long v) {
    std::vector<Part> parts = p.parts();
    auto it = std::find(parts.begin(), parts.end(), Part{v, Color::Blue});
    parts.erase(it);
    parts.push_back({v / 2, Color::Blue});
    parts.push_back({v / 2, Color::Blue});
    return canonicalize(std::move(parts));
  };

  if (c == 0) return merge_two(d);               // no evens: merge the odd pair
  if (d > 0 && 2 * d > c) return merge_two(d);
  if (lre == c) return merge_two(c);             // the largest even itself repeats
  if (c % 4 == 2) return split_even(c);
  // c == 0 (mod 4): a repeated even above c/2 blocks the split
  long long blocking = 0;
  for (const auto& [v, m] : even_mult) {
    if (m >= 2 && v > c / 2) blocking = std::max(blocking, v);
  }
  if (blocking > 0) return merge_two(blocking);
  return split_even(c);
}

// ---------------------------------------------------------------------------
// relabeling and recoloring bijections
// ---------------------------------------------------------------------------

Overpartition to_overpartition(const ColoredPartition& p) {
  require(member(FamilyId::Q, p), "to_overpartition requires a member of pi_Q", p);
  std::vector<OverlinedPart> parts;
  parts.reserve(p.size());
  for (const Part& x : p.parts()) {
    parts.push_back({x.value, x.color == Color::Blue});
  }
  return canonicalize_over(std::move(parts));
}

ColoredPartition from_overpartition(const Overpartition& p) {
  if (!member(FamilyId::OverOdd, p)) {
    throw std::domain_error("from_overpartition requires an overpartition into odd parts");
  }
  std::vector<Part> parts;
  parts.reserve(p.parts().size());
  for (const OverlinedPart& x : p.parts()) {
    parts.push_back({x.value, x.overlined ? Color::Blue : Color::Green});
  }
  return canonicalize(std::move(parts));
}

ColoredPartition strip_colors(const ColoredPartition& p) {
  require(member(FamilyId::R, p), "strip_colors requires a member of pi_R", p);
  std::vector<long long> values;
  values.reserve(p.size());
  for (const Part& x : p.parts()) values.push_back(x.value);
  return monochrome(std::move(values));
}

ColoredPartition paint_colors(const ColoredPartition& p) {
  require(member(FamilyId::H, p), "paint_colors requires a member of pi_H", p);
  std::vector<Part> parts;
  parts.reserve(p.size());
  for (const Part& x : p.parts()) {
    parts.push_back({x.value, x.value % 2 == 1 ? Color::Blue : Color::Green});
  }
  return canonicalize(std::move(parts));
}

// ---------------------------------------------------------------------------
// theta
// ---------------------------------------------------------------------------

ColoredPartition theta(const ColoredPartition& p) {
  require(member(FamilyId::M, p), "theta requires a member of pi_M", p);
  std::set<long long> blue_evens, green_evens;
  for (const Part& x : p.parts()) {
    if (x.value % 2 != 0) continue;
    (x.color == Color::Blue ? blue_evens : green_evens).insert(x.value);
  }
  long long target = 0;
  for (long long v : blue_evens) {
    if (!green_evens.count(v)) target = std::max(target, v);
  }
  for (long long v : green_evens) {
    if (!blue_evens.count(v)) target = std::max(target, v);
  }
  std::vector<Part> parts = p.parts();
  for (Part& x : parts) {
    if (x.value == target && x.value % 2 == 0) {
      x.color = x.color == Color::Blue ? Color::Green : Color::Blue;
      break;  // pi_M: the value occurs once in its single color
    }
  }
  return canonicalize(std::move(parts));
}

// ---------------------------------------------------------------------------
// even-pair merge / split
// ---------------------------------------------------------------------------

ColoredPartition pair_merge(const ColoredPartition& p) {
  require(member(FamilyId::L, p) && !member(FamilyId::M, p),
          "pair_merge requires a member of pi_L minus pi_M", p);
  std::vector<long long> values;
  std::map<long long, int> even_seen;
  for (const Part& x : p.parts()) {
    if (x.value % 2 == 0) {
      // each even value occurs exactly once per color; merge the pair once
      if (++even_seen[x.value] == 2) values.push_back(2 * x.value);
    } else {
      values.push_back(x.value);
    }
  }
  return monochrome(std::move(values));
}

ColoredPartition pair_split(const ColoredPartition& p) {
  require(member(FamilyId::N, p), "pair_split requires a member of pi_N", p);
  std::vector<Part> parts;
  for (const Part& x : p.parts()) {
    if (x.value % 2 == 0) {
      parts.push_back({x.value / 2, Color::Blue});
      parts.push_back({x.value / 2, Color::Green});
    } else {
      parts.push_back({x.value, Color::Blue});
    }
  }
  return canonicalize(std::move(parts));
}

// ---------------------------------------------------------------------------
// 4-modular diagram
// ---------------------------------------------------------------------------

long long ModularDiagram::weight() const {
  long long w = 0;
  for (long long v : lambda_e) w += v;
  for (long long v : lambda_c1) w += v;
  for (long long v : lambda_c3) w += v;
  return w;
}

ModularDiagram to_modular_diagram(const ColoredPartition& p) {
  require(member(FamilyId::N, p), "to_modular_diagram requires a member of pi_N", p);
  ModularDiagram d;
  for (const Part& x : p.parts()) {  // canonical: already strictly decreasing
    if (x.value % 2 == 0) d.lambda_e.push_back(x.value);
    else if (x.value % 4 == 1) d.lambda_c1.push_back(x.value);
    else d.lambda_c3.push_back(x.value);
  }
  return d;
}

namespace {

void check_component(const std::vector<long long>& xs, int residue, const char* name) {
  long long prev = 0;
  for (long long v : xs) {
    if (v < 1 || (residue == 0 ? v % 4 != 0 : v % 4 != residue)) {
      throw std::invalid_argument(std::string(name) + " component has an invalid part");
    }
    if (prev != 0 && v >= prev) {
      throw std::invalid_argument(std::string(name) + " component must strictly decrease");
    }
    prev = v;
  }
}

}  // namespace

ColoredPartition from_modular_diagram(const ModularDiagram& d) {
  check_component(d.lambda_e, 0, "lambda_e");
  check_component(d.lambda_c1, 1, "lambda_c1");
  check_component(d.lambda_c3, 3, "lambda_c3");
  std::vector<long long> values = d.lambda_e;
  values.insert(values.end(), d.lambda_c1.begin(), d.lambda_c1.end());
  values.insert(values.end(), d.lambda_c3.begin(), d.lambda_c3.end());
  return monochrome(std::move(values));
}

// ---------------------------------------------------------------------------
// the diagram transformation
//
// Cell picture, 1-based (row, col) with row 1 at the top. A part 4b+3 is a
// row: an upper triangle on the main diagonal plus b squares to its right.
// A part 4a+1 is a column: a lower triangle on the diagonal plus a squares
// below. Both families are anchored so their smallest parts sit on the last
// diagonal cell of the m x m diagonal, m = max(|c1|, |c3|); a diagonal cell
// holding both halves fuses into a plain square before the move (and every
// square crossed when the diagonal is drawn back splits into the two halves
// again when the result is read off).
// ---------------------------------------------------------------------------

namespace {

enum class Cell : std::uint8_t { Sq, Lo, Up };

using CellMap = std::map<std::pair<long long, long long>, Cell>;

struct Figure {
  CellMap cells;

  long long height() const {
    long long h = 0;
    for (const auto& [rc, _] : cells) h = std::max(h, rc.first);
    return h;
  }
  long long width() const {
    long long w = 0;
    for (const auto& [rc, _] : cells) w = std::max(w, rc.second);
    return w;
  }
};

Figure build_figure(const std::vector<long long>& c1, const std::vector<long long>& c3) {
  const long long p = static_cast<long long>(c1.size());
  const long long r = static_cast<long long>(c3.size());
  const long long m = std::max(p, r);
  Figure f;
  for (long long i = 1; i <= r; ++i) {
    const long long d = m - r + i;
    const long long b = (c3[static_cast<std::size_t>(i - 1)] - 3) / 4;
    f.cells[{d, d}] = Cell::Up;
    for (long long s = 1; s <= b; ++s) f.cells[{d, d + s}] = Cell::Sq;
  }
  for (long long j = 1; j <= p; ++j) {
    const long long d = m - p + j;
    const long long a = (c1[static_cast<std::size_t>(j - 1)] - 1) / 4;
    auto [it, inserted] = f.cells.insert({{d, d}, Cell::Lo});
    if (!inserted) it->second = Cell::Sq;  // both halves present: fuse
    for (long long s = 1; s <= a; ++s) f.cells[{d + s, d}] = Cell::Sq;
  }
  return f;
}

Figure transpose(const Figure& f) {
  Figure g;
  for (const auto& [rc, v] : f.cells) {
    Cell w = v == Cell::Lo ? Cell::Up : v == Cell::Up ? Cell::Lo : Cell::Sq;
    g.cells[{rc.second, rc.first}] = w;
  }
  return g;
}

// Length and position of the longest all-squares column (leftmost of equal
// length; equally long candidates are cell-identical, so the choice does not
// change the result).
std::pair<long long, long long> longest_square_column(const Figure& f) {
  std::map<long long, std::pair<long long, bool>> cols;  // col -> (count, all squares)
  for (const auto& [rc, v] : f.cells) {
    auto& [count, pure] = cols.try_emplace(rc.second, std::make_pair(0, true)).first->second;
    ++count;
    if (v != Cell::Sq) pure = false;
  }
  long long best_len = 0, best_col = 0;
  for (const auto& [col, info] : cols) {
    if (info.second && info.first > best_len) {
      best_len = info.first;
      best_col = col;
    }
  }
  return {best_len, best_col};
}

Figure remove_column(const Figure& f, long long col) {
  Figure g;
  for (const auto& [rc, v] : f.cells) {
    if (rc.second == col) continue;
    g.cells[{rc.first, rc.second > col ? rc.second - 1 : rc.second}] = v;
  }
  return g;
}

Figure insert_column(const Figure& f, long long pos, long long h) {
  Figure g;
  for (const auto& [rc, v] : f.cells) {
    g.cells[{rc.first, rc.second >= pos ? rc.second + 1 : rc.second}] = v;
  }
  for (long long row = 1; row <= h; ++row) g.cells[{row, pos}] = Cell::Sq;
  return g;
}

struct ReadResult {
  std::vector<long long> c1, c3;
};

// Draws the diagonal back and reads the components. Returns nothing when the
// cells do not form a valid diagram (checked postcondition of the move).
std::optional<ReadResult> read_figure(const Figure& f) {
  const long long extent = std::max(f.height(), f.width());
  std::set<std::pair<long long, long long>> used;
  ReadResult out;
  for (long long i = 1; i <= extent; ++i) {
    const auto it = f.cells.find({i, i});
    if (it == f.cells.end()) continue;
    const Cell state = it->second;  // Sq on the diagonal splits into both halves
    if (state == Cell::Lo || state == Cell::Sq) {
      long long a = 0;
      while (f.cells.count({i + a + 1, i})) {
        if (f.cells.at({i + a + 1, i}) != Cell::Sq) return std::nullopt;
        ++a;
        used.insert({i + a, i});
      }
      out.c1.push_back(1 + 4 * a);
      used.insert({i, i});
    }
    if (state == Cell::Up || state == Cell::Sq) {
      long long b = 0;
      while (f.cells.count({i, i + b + 1})) {
        if (f.cells.at({i, i + b + 1}) != Cell::Sq) return std::nullopt;
        ++b;
        used.insert({i, i + b});
      }
      out.c3.push_back(3 + 4 * b);
      used.insert({i, i});
    }
  }
  if (used.size() != f.cells.size()) return std::nullopt;  // stray cells
  for (const auto& [rc, _] : f.cells) {
    if (!used.count(rc)) return std::nullopt;
  }
  // Collected along the diagonal, so both lists must strictly decrease.
  for (std::size_t i = 1; i < out.c1.size(); ++i) {
    if (out.c1[i] >= out.c1[i - 1]) return std::nullopt;
  }
  for (std::size_t i = 1; i < out.c3.size(); ++i) {
    if (out.c3[i] >= out.c3[i - 1]) return std::nullopt;
  }
  return out;
}

}  // namespace

TransformOutcome modular4_transform(const ColoredPartition& p) {
  require(member(FamilyId::N, p), "modular4_transform requires a member of pi_N", p);
  const ModularDiagram d = to_modular_diagram(p);
  const bool column_case = d.lambda_c3.size() > d.lambda_c1.size();

  const Figure figure = build_figure(d.lambda_c1, d.lambda_c3);
  Figure work = column_case ? figure : transpose(figure);

  const auto [len, pos] = longest_square_column(work);
  const long long max_e = d.lambda_e.empty() ? 0 : d.lambda_e.front();

  if (len == 0 && max_e == 0) {
    TransformOutcome out;
    out.kind = TransformOutcome::Kind::FixedStaircase;
    out.staircase = column_case ? StaircaseKind::C3Staircase : StaircaseKind::C1Staircase;
    out.k = column_case ? static_cast<long long>(d.lambda_c3.size())
                        : static_cast<long long>(d.lambda_c1.size());
    return out;
  }

  std::vector<long long> new_e = d.lambda_e;
  if (4 * len > max_e) {
    work = remove_column(work, pos);
    new_e.insert(new_e.begin(), 4 * len);
  } else {
    const long long h = max_e / 4;
    const long long at = len == 0 ? work.width() + 1 : pos;
    work = insert_column(work, at, h);
    new_e.erase(new_e.begin());
  }

  const Figure resolved = column_case ? work : transpose(work);
  const std::optional<ReadResult> rd = read_figure(resolved);
  if (!rd) {
    throw std::runtime_error("modular4_transform produced a malformed diagram for " + describe(p));
  }
  ModularDiagram nd{new_e, rd->c1, rd->c3};
  TransformOutcome out;
  out.kind = TransformOutcome::Kind::Moved;
  out.result = from_modular_diagram(nd);
  if (!member(FamilyId::N, out.result) || out.result.weight() != p.weight()) {
    throw std::runtime_error("modular4_transform postcondition failed for " + describe(p));
  }
  return out;
}

DiagramCells layout_cells(const ModularDiagram& d) {
  check_component(d.lambda_e, 0, "lambda_e");
  check_component(d.lambda_c1, 1, "lambda_c1");
  check_component(d.lambda_c3, 3, "lambda_c3");
  const long long p = static_cast<long long>(d.lambda_c1.size());
  const long long r = static_cast<long long>(d.lambda_c3.size());
  const long long m = std::max(p, r);

  long long height = m, width = m;
  for (long long j = 1; j <= p; ++j) {
    height = std::max(height, m - p + j + (d.lambda_c1[static_cast<std::size_t>(j - 1)] - 1) / 4);
  }
  for (long long i = 1; i <= r; ++i) {
    width = std::max(width, m - r + i + (d.lambda_c3[static_cast<std::size_t>(i - 1)] - 3) / 4);
  }

  DiagramCells out;
  if (m == 0) return out;
  out.grid.assign(static_cast<std::size_t>(height),
                  std::vector<CellKind>(static_cast<std::size_t>(width), CellKind::Empty));
  auto at = [&](long long row, long long col) -> CellKind& {
    return out.grid[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
  };
  for (long long i = 1; i <= r; ++i) {
    const long long dd = m - r + i;
    const long long b = (d.lambda_c3[static_cast<std::size_t>(i - 1)] - 3) / 4;
    at(dd, dd) = CellKind::UpperTriangle;
    for (long long s = 1; s <= b; ++s) at(dd, dd + s) = CellKind::Square;
  }
  for (long long j = 1; j <= p; ++j) {
    const long long dd = m - p + j;
    const long long a = (d.lambda_c1[static_cast<std::size_t>(j - 1)] - 1) / 4;
    at(dd, dd) = at(dd, dd) == CellKind::UpperTriangle ? CellKind::SplitPair : CellKind::LowerTriangle;
    for (long long s = 1; s <= a; ++s) at(dd + s, dd) = CellKind::Square;
  }
  return out;
}

}  // namespace partition_lab
