#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "partition_lab/bigint.hpp"
#include "partition_lab/partition.hpp"

namespace partition_lab {

// Membership rules (on canonical input):
//   F        two colors, even parts only Blue
//   Q        F with Blue parts distinct odd (hence no even parts at all)
//   G        two colors, odd parts only Blue
//   R        G with Blue parts distinct odd (evens are Green, odds Blue)
//   H        monochrome (all Blue), odd parts distinct
//   K        monochrome, all parts distinct, even parts == 2 (mod 4);
//            counted with weight (-1)^(number of even parts)
//   L        two colors, parts distinct within each color, odd parts only Blue
//   M        L with some even value present in exactly one color
//   N        monochrome, all parts distinct, even parts == 0 (mod 4)
//   Over     overpartitions
//   OverOdd  overpartitions into odd parts
enum class FamilyId { F, Q, G, R, H, K, L, M, N, Over, OverOdd };

enum class CountFilter {
  All,
  EvenPartsEven,
  EvenPartsOdd,
  PartsEven,
  PartsOdd,
  BluePartsEven,
  BluePartsOdd,
  BlueEvenPartsEven,
  BlueEvenPartsOdd,
};

// Enumeration above this weight is refused unless the caller raises the
// ceiling explicitly (the CLI reads PARTITION_LAB_MAX_ENUM).
inline constexpr long long kDefaultEnumerationCeiling = 40;

struct enumeration_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool member(FamilyId family, const ColoredPartition& p);
bool member(FamilyId family, const Overpartition& p);

bool is_overpartition_family(FamilyId family);

// Visits every member of weight n exactly once, in a fixed deterministic
// order, without materializing the list.
void for_each_member(FamilyId family, long long n,
                     const std::function<void(const ColoredPartition&)>& visit,
                     long long ceiling = kDefaultEnumerationCeiling);
void for_each_over_member(FamilyId family, long long n,
                          const std::function<void(const Overpartition&)>& visit,
                          long long ceiling = kDefaultEnumerationCeiling);

std::vector<ColoredPartition> enumerate_family(
    FamilyId family, long long n, long long ceiling = kDefaultEnumerationCeiling);
std::vector<Overpartition> enumerate_over_family(
    FamilyId family, long long n, long long ceiling = kDefaultEnumerationCeiling);

bool filter_accepts(CountFilter filter, const PartitionStats& s);

// Cardinality of the filtered enumeration. For K the result is the signed
// sum weighted by (-1)^(number of even parts), restricted to the filter.
BigInt count(FamilyId family, long long n, CountFilter filter = CountFilter::All,
             long long ceiling = kDefaultEnumerationCeiling);

const char* to_string(FamilyId family);
const char* to_string(CountFilter filter);
std::optional<FamilyId> family_from_string(std::string_view s);
std::optional<CountFilter> filter_from_string(std::string_view s);

}  // namespace partition_lab
