#include "partition_lab/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <string>

namespace partition_lab {

namespace {

bool all_blue(const ColoredPartition& p) {
  return std::all_of(p.parts().begin(), p.parts().end(),
                     [](const Part& x) { return x.color == Color::Blue; });
}

// value -> multiplicity, per color
struct ColorMults {
  std::map<long long, long long> blue, green;
};

ColorMults color_mults(const ColoredPartition& p) {
  ColorMults m;
  for (const Part& x : p.parts()) {
    (x.color == Color::Blue ? m.blue : m.green)[x.value]++;
  }
  return m;
}

bool distinct(const std::map<long long, long long>& m) {
  return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second <= 1; });
}

// True when some even value occurs in exactly one of the two colors.
bool has_single_color_even(const ColorMults& m) {
  for (const auto& [v, _] : m.blue) {
    if (v % 2 == 0 && !m.green.count(v)) return true;
  }
  for (const auto& [v, _] : m.green) {
    if (v % 2 == 0 && !m.blue.count(v)) return true;
  }
  return false;
}

}  // namespace

bool is_overpartition_family(FamilyId family) {
  return family == FamilyId::Over || family == FamilyId::OverOdd;
}

bool member(FamilyId family, const ColoredPartition& p) {
  const ColorMults m = color_mults(p);
  switch (family) {
    case FamilyId::F:
      for (const auto& [v, _] : m.green)
        if (v % 2 == 0) return false;
      return true;
    case FamilyId::Q: {
      if (!member(FamilyId::F, p)) return false;
      for (const auto& [v, c] : m.blue)
        if (v % 2 == 0 || c > 1) return false;
      return true;
    }
    case FamilyId::G:
      for (const auto& [v, _] : m.green)
        if (v % 2 == 1) return false;
      return true;
    case FamilyId::R: {
      if (!member(FamilyId::G, p)) return false;
      for (const auto& [v, c] : m.blue)
        if (v % 2 == 0 || c > 1) return false;
      return true;
    }
    case FamilyId::H: {
      if (!all_blue(p)) return false;
      for (const auto& [v, c] : m.blue)
        if (v % 2 == 1 && c > 1) return false;
      return true;
    }
    case FamilyId::K: {
      if (!all_blue(p) || !distinct(m.blue)) return false;
      for (const auto& [v, _] : m.blue)
        if (v % 2 == 0 && v % 4 != 2) return false;
      return true;
    }
    case FamilyId::L: {
      if (!distinct(m.blue) || !distinct(m.green)) return false;
      for (const auto& [v, _] : m.green)
        if (v % 2 == 1) return false;
      return true;
    }
    case FamilyId::M:
      return member(FamilyId::L, p) && has_single_color_even(color_mults(p));
    case FamilyId::N: {
      if (!all_blue(p) || !distinct(m.blue)) return false;
      for (const auto& [v, _] : m.blue)
        if (v % 2 == 0 && v % 4 != 0) return false;
      return true;
    }
    case FamilyId::Over:
    case FamilyId::OverOdd:
      throw std::invalid_argument("overpartition family applied to a colored partition");
  }
  throw std::invalid_argument("unknown family");
}

bool member(FamilyId family, const Overpartition& p) {
  if (!is_overpartition_family(family)) {
    throw std::invalid_argument("colored family applied to an overpartition");
  }
  std::map<long long, long long> overlines;
  for (const OverlinedPart& x : p.parts()) {
    if (x.overlined && ++overlines[x.value] > 1) return false;
    if (family == FamilyId::OverOdd && x.value % 2 == 0) return false;
  }
  return true;
}

namespace {

// Allowed per-value multiplicities, colored families. kAny is capped by the
// remaining weight at enumeration time.
constexpr long long kAny = -1;

struct MultRule {
  long long blue_max = 0;   // kAny or a cap
  long long green_max = 0;
};

MultRule rule_for(FamilyId family, long long v) {
  const bool even = v % 2 == 0;
  switch (family) {
    case FamilyId::F: return {kAny, even ? 0 : kAny};
    case FamilyId::Q: return even ? MultRule{0, 0} : MultRule{1, kAny};
    case FamilyId::G: return {kAny, even ? kAny : 0};
    case FamilyId::R: return even ? MultRule{0, kAny} : MultRule{1, 0};
    case FamilyId::H: return {even ? kAny : 1, 0};
    case FamilyId::K:
      if (even) return {v % 4 == 2 ? 1 : 0, 0};
      return {1, 0};
    case FamilyId::L: return even ? MultRule{1, 1} : MultRule{1, 0};
    case FamilyId::M: return rule_for(FamilyId::L, v);
    case FamilyId::N:
      if (even) return {v % 4 == 0 ? 1 : 0, 0};
      return {1, 0};
    default:
      throw std::invalid_argument("not a colored family");
  }
}

void check_ceiling(long long n, long long ceiling) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (n > ceiling) {
    throw enumeration_limit_error(
        "enumeration weight " + std::to_string(n) + " exceeds ceiling " +
        std::to_string(ceiling) + " (raise PARTITION_LAB_MAX_ENUM to override)");
  }
}

void enumerate_colored(FamilyId family, long long v, long long rem,
                       std::vector<Part>& acc,
                       const std::function<void(const ColoredPartition&)>& visit) {
  if (rem == 0) {
    // acc was built value-descending, Blue before Green: already canonical.
    std::vector<Part> copy = acc;
    visit(canonicalize(std::move(copy)));
    return;
  }
  if (v == 0) return;
  const MultRule rule = rule_for(family, v);
  const long long bmax = rule.blue_max == kAny ? rem / v : std::min(rule.blue_max, rem / v);
  for (long long b = 0; b <= bmax; ++b) {
    const long long after_blue = rem - b * v;
    const long long gmax =
        rule.green_max == kAny ? after_blue / v : std::min(rule.green_max, after_blue / v);
    for (long long g = 0; g <= gmax; ++g) {
      acc.insert(acc.end(), static_cast<std::size_t>(b), Part{v, Color::Blue});
      acc.insert(acc.end(), static_cast<std::size_t>(g), Part{v, Color::Green});
      enumerate_colored(family, v - 1, after_blue - g * v, acc, visit);
      acc.resize(acc.size() - static_cast<std::size_t>(b + g));
    }
  }
}

void enumerate_over(bool odd_only, long long v, long long rem,
                    std::vector<OverlinedPart>& acc,
                    const std::function<void(const Overpartition&)>& visit) {
  if (rem == 0) {
    std::vector<OverlinedPart> copy = acc;
    visit(canonicalize_over(std::move(copy)));
    return;
  }
  if (v == 0) return;
  if (odd_only && v % 2 == 0) {
    enumerate_over(odd_only, v - 1, rem, acc, visit);
    return;
  }
  for (long long m = 0; m <= rem / v; ++m) {
    if (m == 0) {
      enumerate_over(odd_only, v - 1, rem, acc, visit);
      continue;
    }
    for (int over = 1; over >= 0; --over) {
      if (over) acc.push_back({v, true});
      acc.insert(acc.end(), static_cast<std::size_t>(m - over), OverlinedPart{v, false});
      enumerate_over(odd_only, v - 1, rem - m * v, acc, visit);
      acc.resize(acc.size() - static_cast<std::size_t>(m));
    }
  }
}

}  // namespace

void for_each_member(FamilyId family, long long n,
                     const std::function<void(const ColoredPartition&)>& visit,
                     long long ceiling) {
  check_ceiling(n, ceiling);
  if (is_overpartition_family(family)) {
    throw std::invalid_argument("use for_each_over_member for overpartition families");
  }
  std::vector<Part> acc;
  if (family == FamilyId::M) {
    enumerate_colored(FamilyId::L, n, n, acc, [&](const ColoredPartition& p) {
      if (member(FamilyId::M, p)) visit(p);
    });
    return;
  }
  enumerate_colored(family, n, n, acc, visit);
}

void for_each_over_member(FamilyId family, long long n,
                          const std::function<void(const Overpartition&)>& visit,
                          long long ceiling) {
  check_ceiling(n, ceiling);
  if (!is_overpartition_family(family)) {
    throw std::invalid_argument("not an overpartition family");
  }
  std::vector<OverlinedPart> acc;
  enumerate_over(family == FamilyId::OverOdd, n, n, acc, visit);
}

std::vector<ColoredPartition> enumerate_family(FamilyId family, long long n,
                                               long long ceiling) {
  std::vector<ColoredPartition> out;
  for_each_member(family, n, [&](const ColoredPartition& p) { out.push_back(p); }, ceiling);
  return out;
}

std::vector<Overpartition> enumerate_over_family(FamilyId family, long long n,
                                                 long long ceiling) {
  std::vector<Overpartition> out;
  for_each_over_member(family, n, [&](const Overpartition& p) { out.push_back(p); }, ceiling);
  return out;
}

bool filter_accepts(CountFilter filter, const PartitionStats& s) {
  switch (filter) {
    case CountFilter::All: return true;
    case CountFilter::EvenPartsEven: return s.n_even_parts % 2 == 0;
    case CountFilter::EvenPartsOdd: return s.n_even_parts % 2 == 1;
    case CountFilter::PartsEven: return s.n_parts % 2 == 0;
    case CountFilter::PartsOdd: return s.n_parts % 2 == 1;
    case CountFilter::BluePartsEven: return s.n_blue_parts % 2 == 0;
    case CountFilter::BluePartsOdd: return s.n_blue_parts % 2 == 1;
    case CountFilter::BlueEvenPartsEven: return s.n_blue_even_parts % 2 == 0;
    case CountFilter::BlueEvenPartsOdd: return s.n_blue_even_parts % 2 == 1;
  }
  throw std::invalid_argument("unknown filter");
}

BigInt count(FamilyId family, long long n, CountFilter filter, long long ceiling) {
  BigInt total = 0;
  const bool signed_family = family == FamilyId::K;
  if (is_overpartition_family(family)) {
    for_each_over_member(family, n, [&](const Overpartition& p) {
      if (filter_accepts(filter, stats(p))) total += 1;
    }, ceiling);
    return total;
  }
  for_each_member(family, n, [&](const ColoredPartition& p) {
    const PartitionStats s = stats(p);
    if (!filter_accepts(filter, s)) return;
    total += signed_family ? BigInt(s.sign) : BigInt(1);
  }, ceiling);
  return total;
}

const char* to_string(FamilyId family) {
  switch (family) {
    case FamilyId::F: return "F";
    case FamilyId::Q: return "Q";
    case FamilyId::G: return "G";
    case FamilyId::R: return "R";
    case FamilyId::H: return "H";
    case FamilyId::K: return "K";
    case FamilyId::L: return "L";
    case FamilyId::M: return "M";
    case FamilyId::N: return "N";
    case FamilyId::Over: return "OVER";
    case FamilyId::OverOdd: return "OVER_ODD";
  }
  return "?";
}

const char* to_string(CountFilter filter) {
  switch (filter) {
    case CountFilter::All: return "all";
    case CountFilter::EvenPartsEven: return "even-parts-even";
    case CountFilter::EvenPartsOdd: return "even-parts-odd";
    case CountFilter::PartsEven: return "parts-even";
    case CountFilter::PartsOdd: return "parts-odd";
    case CountFilter::BluePartsEven: return "blue-parts-even";
    case CountFilter::BluePartsOdd: return "blue-parts-odd";
    case CountFilter::BlueEvenPartsEven: return "blue-even-even";
    case CountFilter::BlueEvenPartsOdd: return "blue-even-odd";
  }
  return "?";
}

namespace {
std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}
}  // namespace

std::optional<FamilyId> family_from_string(std::string_view s) {
  const std::string u = upper(s);
  static const std::array<FamilyId, 11> ids = {
      FamilyId::F, FamilyId::Q, FamilyId::G, FamilyId::R, FamilyId::H, FamilyId::K,
      FamilyId::L, FamilyId::M, FamilyId::N, FamilyId::Over, FamilyId::OverOdd};
  for (FamilyId id : ids) {
    if (u == to_string(id)) return id;
  }
  if (u == "OVER-ODD" || u == "OVERODD") return FamilyId::OverOdd;
  return std::nullopt;
}

std::optional<CountFilter> filter_from_string(std::string_view s) {
  static const std::array<CountFilter, 9> ids = {
      CountFilter::All, CountFilter::EvenPartsEven, CountFilter::EvenPartsOdd,
      CountFilter::PartsEven, CountFilter::PartsOdd, CountFilter::BluePartsEven,
      CountFilter::BluePartsOdd, CountFilter::BlueEvenPartsEven,
      CountFilter::BlueEvenPartsOdd};
  for (CountFilter f : ids) {
    if (s == to_string(f)) return f;
  }
  return std::nullopt;
}

}  // namespace partition_lab
