#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace partition_lab {

enum class Color : std::uint8_t { Blue, Green };

// One part of a two-color partition. value >= 1 always.
struct Part {
  long long value = 0;
  Color color = Color::Blue;

  friend auto operator<=>(const Part&, const Part&) = default;
};

// Canonical order: decreasing value, Blue before Green at equal value.
// With this order multiset equality is plain list equality.
inline bool canonical_less(const Part& a, const Part& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.color < b.color;
}

class ColoredPartition {
 public:
  ColoredPartition() = default;

  const std::vector<Part>& parts() const { return parts_; }
  long long weight() const {
    long long w = 0;
    for (const Part& p : parts_) w += p.value;
    return w;
  }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }

  friend auto operator<=>(const ColoredPartition&, const ColoredPartition&) = default;

 private:
  friend ColoredPartition canonicalize(std::vector<Part> parts);
  explicit ColoredPartition(std::vector<Part> sorted) : parts_(std::move(sorted)) {}

  std::vector<Part> parts_;
};

// Sorts parts into canonical order. Rejects any value < 1.
ColoredPartition canonicalize(std::vector<Part> parts);

// Convenience for monochrome partitions: every value becomes a Blue part.
ColoredPartition monochrome(std::vector<long long> values);

// One part of an overpartition; at most one overlined copy per value.
struct OverlinedPart {
  long long value = 0;
  bool overlined = false;

  friend auto operator<=>(const OverlinedPart&, const OverlinedPart&) = default;
};

class Overpartition {
 public:
  Overpartition() = default;

  const std::vector<OverlinedPart>& parts() const { return parts_; }
  long long weight() const {
    long long w = 0;
    for (const OverlinedPart& p : parts_) w += p.value;
    return w;
  }
  bool empty() const { return parts_.empty(); }

  friend auto operator<=>(const Overpartition&, const Overpartition&) = default;

 private:
  friend Overpartition canonicalize_over(std::vector<OverlinedPart> parts);
  explicit Overpartition(std::vector<OverlinedPart> sorted) : parts_(std::move(sorted)) {}

  std::vector<OverlinedPart> parts_;
};

// Canonical order: decreasing value, overlined before plain at equal value.
// Rejects values < 1 and a second overlined copy of the same value.
Overpartition canonicalize_over(std::vector<OverlinedPart> parts);

struct PartitionStats {
  long long n_parts = 0;
  long long n_even_parts = 0;
  long long n_odd_parts = 0;
  long long n_blue_parts = 0;
  long long n_blue_even_parts = 0;
  long long n_green_parts = 0;
  int sign = +1;  // (-1)^n_even_parts
};

PartitionStats stats(const ColoredPartition& p);

// Overpartition statistics use the overlined<->Blue correspondence.
PartitionStats stats(const Overpartition& p);

// Returns k with k(k+1)/2 == n, if n is triangular.
std::optional<long long> is_triangular(long long n);

}  // namespace partition_lab
