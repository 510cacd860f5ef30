#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "partition_lab/families.hpp"
#include "partition_lab/series.hpp"

namespace partition_lab {

// Closed catalog of generating functions. Counting series:
//   F        1 / ((q;q^2)^2 (q^2;q^2))
//   G        1 / ((q^2;q^2) (q;q))
//   H        (-q;q^2) / (q^2;q^2)
//   K        (q^2;q^4) (-q;q^2)                [signed count]
//   L        (-q^2;q^2) (-q;q)
//   Over     (-q;q) / (q;q)
//   OverOdd  (-q;q^2) / (q;q^2)
// Signed difference series:
//   G0-G1    1 / ((-q^2;q^2) (q;q))
//   G2-G3    1 / ((q^2;q^2) (-q;q))
//   G4-G5    1 / ((-q^2;q^2) (-q;q))
//   L0-L1    (q^2;q^2) (-q;q)
//   L2-L3    (-q^2;q^2) (q;q)
enum class GfId {
  F,
  G,
  H,
  K,
  L,
  Over,
  OverOdd,
  G0MinusG1,
  G2MinusG3,
  G4MinusG5,
  L0MinusL1,
  L2MinusL3,
};

TruncatedSeries family_gf(GfId id, long long trunc);

// The factor list behind family_gf, exposed for coefficientwise cross-checks.
std::vector<PochhammerFactor> gf_factors(GfId id);

// Sum over k of q^(k(k+1)/2); when signed_terms, each term carries the sign
// (-1)^(k(k+1)/2), i.e. the parity of the exponent, matching (-q^2;q^2)(q;q).
TruncatedSeries staircase_series(bool signed_terms, long long trunc);

// The GfId that counts the given family, if there is one.
std::optional<GfId> gf_for_family(FamilyId family);

const char* to_string(GfId id);
std::optional<GfId> gf_from_string(std::string_view s);

}  // namespace partition_lab
