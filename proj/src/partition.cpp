#include "partition_lab/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace partition_lab {

ColoredPartition canonicalize(std::vector<Part> parts) {
  for (const Part& p : parts) {
    if (p.value < 1) throw std::invalid_argument("part value must be >= 1");
  }
  std::sort(parts.begin(), parts.end(), canonical_less);
  return ColoredPartition(std::move(parts));
}

ColoredPartition monochrome(std::vector<long long> values) {
  std::vector<Part> parts;
  parts.reserve(values.size());
  for (long long v : values) parts.push_back({v, Color::Blue});
  return canonicalize(std::move(parts));
}

Overpartition canonicalize_over(std::vector<OverlinedPart> parts) {
  std::map<long long, int> overlines;
  for (const OverlinedPart& p : parts) {
    if (p.value < 1) throw std::invalid_argument("part value must be >= 1");
    if (p.overlined && ++overlines[p.value] > 1) {
      throw std::invalid_argument("at most one overlined copy per value");
    }
  }
  std::sort(parts.begin(), parts.end(), [](const OverlinedPart& a, const OverlinedPart& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.overlined && !b.overlined;
  });
  return Overpartition(std::move(parts));
}

PartitionStats stats(const ColoredPartition& p) {
  PartitionStats s;
  for (const Part& part : p.parts()) {
    ++s.n_parts;
    const bool even = part.value % 2 == 0;
    const bool blue = part.color == Color::Blue;
    if (even) ++s.n_even_parts; else ++s.n_odd_parts;
    if (blue) ++s.n_blue_parts; else ++s.n_green_parts;
    if (even && blue) ++s.n_blue_even_parts;
  }
  s.sign = s.n_even_parts % 2 == 0 ? +1 : -1;
  return s;
}

PartitionStats stats(const Overpartition& p) {
  PartitionStats s;
  for (const OverlinedPart& part : p.parts()) {
    ++s.n_parts;
    const bool even = part.value % 2 == 0;
    if (even) ++s.n_even_parts; else ++s.n_odd_parts;
    if (part.overlined) ++s.n_blue_parts; else ++s.n_green_parts;
    if (even && part.overlined) ++s.n_blue_even_parts;
  }
  s.sign = s.n_even_parts % 2 == 0 ? +1 : -1;
  return s;
}

std::optional<long long> is_triangular(long long n) {
  if (n < 0) return std::nullopt;
  // Integer sqrt of 8n+1, then check exactness.
  long long disc = 8 * n + 1;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(disc)));
  while (r * r > disc) --r;
  while ((r + 1) * (r + 1) <= disc) ++r;
  if (r * r != disc || (r - 1) % 2 != 0) return std::nullopt;
  return (r - 1) / 2;
}

}  // namespace partition_lab
