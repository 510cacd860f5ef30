#pragma once

#include <span>
#include <vector>

#include "partition_lab/bigint.hpp"

namespace partition_lab {

// Power series in q with exact integer coefficients, truncated at degree
// trunc(): coefficients 0..trunc are stored and all arithmetic is exact on
// that range.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(long long trunc);
  static TruncatedSeries one(long long trunc);

  long long trunc() const { return static_cast<long long>(coeffs_.size()) - 1; }
  const BigInt& coeff(long long i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  void set_coeff(long long i, BigInt v) { coeffs_.at(static_cast<std::size_t>(i)) = std::move(v); }

  // In-place multiplication / division by (1 + sign*q^m), sign in {+1,-1}.
  // These are the building blocks of the product expansion.
  void mul_binomial(long long m, int sign);
  void div_binomial(long long m, int sign);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;  // coeffs_[i] is the coefficient of q^i
};

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Multiplicative inverse to the truncation degree; requires constant term +-1.
TruncatedSeries invert(const TruncatedSeries& a);

// (-+ q^s; q^t)_inf^power, i.e. the product over m = s, s+t, s+2t, ... of
// (1 + sign*q^m)^power with power in {+1, -1}.
struct PochhammerFactor {
  int sign = -1;                 // the sign inside (1 +- q^m)
  long long base_exponent = 1;   // s >= 1
  long long step = 1;            // t >= 1
  int power = 1;                 // +1 numerator, -1 denominator
};

// Expands the product of the given factors exactly to degree trunc.
// Factor terms with exponent beyond the truncation are skipped.
TruncatedSeries series_from_factors(std::span<const PochhammerFactor> factors,
                                    long long trunc);

}  // namespace partition_lab
