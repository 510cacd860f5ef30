#pragma once

#include <compare>
#include <vector>

#include "partition_lab/partition.hpp"

namespace partition_lab {

// Every map validates its domain precondition and throws std::domain_error
// on violation; the verifier depends on loud failures.

// Weight-preserving map on pi_F \ pi_Q that flips the parity of the number
// of even parts. Case dispatch, with c the largest even value, d the largest
// repeated Blue odd value, and "repeated even part" an even value of
// multiplicity >= 2:
//   no evens:                merge two d into 2d
//   2d > c:                  merge two d into 2d
//   largest repeated even is c:            merge two c into 2c
//   otherwise (largest repeated even != c, or no repeated even):
//     c == 2 (mod 4):        split c into two Blue halves
//     c == 0 (mod 4):        if some repeated even exceeds c/2, merge two
//                            copies of the largest such; else split c
// Split halves are always Blue. The rule is applied exactly as stated even
// where self-inverseness fails; the verifier reports those inputs.
ColoredPartition phi(const ColoredPartition& p);

// Relabeling bijection pi_Q(n) -> overpartitions of n into odd parts:
// Blue parts become overlined, Green parts plain.
Overpartition to_overpartition(const ColoredPartition& p);
ColoredPartition from_overpartition(const Overpartition& p);

// Color-erasure bijection pi_R(n) -> pi_H(n) and its inverse, which paints
// odd values Blue and even values Green.
ColoredPartition strip_colors(const ColoredPartition& p);
ColoredPartition paint_colors(const ColoredPartition& p);

// Involution on pi_M: recolors the largest even value present in exactly
// one color. Flips the parity of both the Blue part count and the Blue even
// part count.
ColoredPartition theta(const ColoredPartition& p);

// Bijection pi_L \ pi_M -> pi_N: each equal Blue/Green even pair v,v merges
// into 2v and colors are erased. The Blue even count of the input equals the
// even count of the output. pair_split is the inverse: evens 4w split into
// Blue and Green 2w, odds become Blue.
ColoredPartition pair_merge(const ColoredPartition& p);
ColoredPartition pair_split(const ColoredPartition& p);

// The three residue components of a pi_N partition: even parts (multiples
// of 4), parts == 1 (mod 4), parts == 3 (mod 4); each strictly decreasing.
struct ModularDiagram {
  std::vector<long long> lambda_e;
  std::vector<long long> lambda_c1;
  std::vector<long long> lambda_c3;

  long long weight() const;
  friend bool operator==(const ModularDiagram&, const ModularDiagram&) = default;
};

ModularDiagram to_modular_diagram(const ColoredPartition& p);
ColoredPartition from_modular_diagram(const ModularDiagram& d);

enum class StaircaseKind { C1Staircase, C3Staircase };

struct TransformOutcome {
  enum class Kind { Moved, FixedStaircase };

  Kind kind = Kind::Moved;
  ColoredPartition result;                             // when Moved
  StaircaseKind staircase = StaircaseKind::C1Staircase;  // when FixedStaircase
  long long k = 0;  // staircase size; 0 only for the empty partition

  friend bool operator==(const TransformOutcome&, const TransformOutcome&) = default;
};

// The 4-modular diagram transformation on pi_N. Moves one column (or row,
// when |lambda_c3| <= |lambda_c1|) of the diagram into or out of lambda_e,
// flipping the parity of the even part count. An involution away from its
// fixed points, which are exactly the staircases (4k-3,...,5,1) and
// (4k-1,...,7,3).
TransformOutcome modular4_transform(const ColoredPartition& p);

// Cell picture of the diagram as drawn: lambda_c3 parts are rows above the
// main diagonal, lambda_c1 parts columns below it, both families anchored so
// their smallest parts share the last diagonal cell. A diagonal cell holding
// both triangle halves is SplitPair.
enum class CellKind { Empty, Square, LowerTriangle, UpperTriangle, SplitPair };

struct DiagramCells {
  // grid[row][col], row 0 at the top; empty for the empty diagram.
  std::vector<std::vector<CellKind>> grid;
};

DiagramCells layout_cells(const ModularDiagram& d);

}  // namespace partition_lab
