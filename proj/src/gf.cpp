#include "partition_lab/gf.hpp"

#include <array>
#include <stdexcept>

namespace partition_lab {

namespace {

// Shorthands for the recurring symbols.
constexpr PochhammerFactor q_q{-1, 1, 1, +1};        // (q;q)
constexpr PochhammerFactor q2_q2{-1, 2, 2, +1};      // (q^2;q^2)
constexpr PochhammerFactor mq_q{+1, 1, 1, +1};       // (-q;q)
constexpr PochhammerFactor mq2_q2{+1, 2, 2, +1};     // (-q^2;q^2)
constexpr PochhammerFactor q_q2{-1, 1, 2, +1};       // (q;q^2)
constexpr PochhammerFactor mq_q2{+1, 1, 2, +1};      // (-q;q^2)
constexpr PochhammerFactor q2_q4{-1, 2, 4, +1};      // (q^2;q^4)

PochhammerFactor inv(PochhammerFactor f) {
  f.power = -f.power;
  return f;
}

}  // namespace

std::vector<PochhammerFactor> gf_factors(GfId id) {
  switch (id) {
    case GfId::F: return {inv(q_q2), inv(q_q2), inv(q2_q2)};
    case GfId::G: return {inv(q2_q2), inv(q_q)};
    case GfId::H: return {mq_q2, inv(q2_q2)};
    case GfId::K: return {q2_q4, mq_q2};
    case GfId::L: return {mq2_q2, mq_q};
    case GfId::Over: return {mq_q, inv(q_q)};
    case GfId::OverOdd: return {mq_q2, inv(q_q2)};
    case GfId::G0MinusG1: return {inv(mq2_q2), inv(q_q)};
    case GfId::G2MinusG3: return {inv(q2_q2), inv(mq_q)};
    case GfId::G4MinusG5: return {inv(mq2_q2), inv(mq_q)};
    case GfId::L0MinusL1: return {q2_q2, mq_q};
    case GfId::L2MinusL3: return {mq2_q2, q_q};
  }
  throw std::invalid_argument("unknown generating function id");
}

TruncatedSeries family_gf(GfId id, long long trunc) {
  const std::vector<PochhammerFactor> factors = gf_factors(id);
  return series_from_factors(factors, trunc);
}

TruncatedSeries staircase_series(bool signed_terms, long long trunc) {
  TruncatedSeries out(trunc);
  for (long long k = 0;; ++k) {
    const long long t = k * (k + 1) / 2;
    if (t > trunc) break;
    // signed terms carry the parity of the exponent itself: this is the
    // convention under which the series equals (-q^2;q^2)(q;q)
    out.set_coeff(t, signed_terms && t % 2 == 1 ? BigInt(-1) : BigInt(1));
  }
  return out;
}

std::optional<GfId> gf_for_family(FamilyId family) {
  switch (family) {
    case FamilyId::F: return GfId::F;
    case FamilyId::G: return GfId::G;
    case FamilyId::H: return GfId::H;
    case FamilyId::K: return GfId::K;
    case FamilyId::L: return GfId::L;
    case FamilyId::Over: return GfId::Over;
    case FamilyId::OverOdd: return GfId::OverOdd;
    default: return std::nullopt;
  }
}

const char* to_string(GfId id) {
  switch (id) {
    case GfId::F: return "F";
    case GfId::G: return "G";
    case GfId::H: return "H";
    case GfId::K: return "K";
    case GfId::L: return "L";
    case GfId::Over: return "OVER";
    case GfId::OverOdd: return "OVER_ODD";
    case GfId::G0MinusG1: return "G0_minus_G1";
    case GfId::G2MinusG3: return "G2_minus_G3";
    case GfId::G4MinusG5: return "G4_minus_G5";
    case GfId::L0MinusL1: return "L0_minus_L1";
    case GfId::L2MinusL3: return "L2_minus_L3";
  }
  return "?";
}

std::optional<GfId> gf_from_string(std::string_view s) {
  static const std::array<GfId, 12> ids = {
      GfId::F, GfId::G, GfId::H, GfId::K, GfId::L, GfId::Over, GfId::OverOdd,
      GfId::G0MinusG1, GfId::G2MinusG3, GfId::G4MinusG5, GfId::L0MinusL1,
      GfId::L2MinusL3};
  for (GfId id : ids) {
    if (s == to_string(id)) return id;
  }
  return std::nullopt;
}

}  // namespace partition_lab
