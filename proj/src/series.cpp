#include "partition_lab/series.hpp"

#include <stdexcept>

namespace partition_lab {

TruncatedSeries::TruncatedSeries(long long trunc) {
  if (trunc < 0) throw std::invalid_argument("truncation degree must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(trunc) + 1, BigInt(0));
}

TruncatedSeries TruncatedSeries::one(long long trunc) {
  TruncatedSeries s(trunc);
  s.coeffs_[0] = 1;
  return s;
}

void TruncatedSeries::mul_binomial(long long m, int sign) {
  const long long n = trunc();
  if (m < 1) throw std::invalid_argument("binomial exponent must be >= 1");
  if (m > n) return;
  for (long long i = n; i >= m; --i) {
    if (sign > 0) {
      coeffs_[static_cast<std::size_t>(i)] += coeffs_[static_cast<std::size_t>(i - m)];
    } else {
      coeffs_[static_cast<std::size_t>(i)] -= coeffs_[static_cast<std::size_t>(i - m)];
    }
  }
}

void TruncatedSeries::div_binomial(long long m, int sign) {
  const long long n = trunc();
  if (m < 1) throw std::invalid_argument("binomial exponent must be >= 1");
  if (m > n) return;
  // 1/(1 + s*q^m) = sum_k (-s)^k q^(mk), folded in ascending order.
  for (long long i = m; i <= n; ++i) {
    if (sign > 0) {
      coeffs_[static_cast<std::size_t>(i)] -= coeffs_[static_cast<std::size_t>(i - m)];
    } else {
      coeffs_[static_cast<std::size_t>(i)] += coeffs_[static_cast<std::size_t>(i - m)];
    }
  }
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.trunc() != b.trunc()) {
    throw std::invalid_argument("series truncations differ");
  }
  const long long n = a.trunc();
  TruncatedSeries out(n);
  for (long long i = 0; i <= n; ++i) {
    const BigInt& ai = a.coeff(i);
    if (ai == 0) continue;
    for (long long j = 0; i + j <= n; ++j) {
      if (b.coeff(j) == 0) continue;
      out.set_coeff(i + j, out.coeff(i + j) + ai * b.coeff(j));
    }
  }
  return out;
}

TruncatedSeries invert(const TruncatedSeries& a) {
  const long long n = a.trunc();
  const BigInt& a0 = a.coeff(0);
  if (a0 != 1 && a0 != -1) {
    throw std::invalid_argument("invert requires constant term +1 or -1");
  }
  TruncatedSeries out(n);
  out.set_coeff(0, a0);  // 1/(+-1) = +-1
  for (long long i = 1; i <= n; ++i) {
    BigInt acc = 0;
    for (long long k = 1; k <= i; ++k) {
      acc += a.coeff(k) * out.coeff(i - k);
    }
    out.set_coeff(i, -acc * a0);
  }
  return out;
}

TruncatedSeries series_from_factors(std::span<const PochhammerFactor> factors,
                                    long long trunc) {
  TruncatedSeries out = TruncatedSeries::one(trunc);
  for (const PochhammerFactor& f : factors) {
    if (f.base_exponent < 1 || f.step < 1) {
      throw std::invalid_argument("Pochhammer factor needs s >= 1 and t >= 1");
    }
    if (f.sign != 1 && f.sign != -1) {
      throw std::invalid_argument("Pochhammer factor sign must be +1 or -1");
    }
    if (f.power == 0) continue;
    const int reps = f.power > 0 ? f.power : -f.power;
    for (long long m = f.base_exponent; m <= trunc; m += f.step) {
      for (int r = 0; r < reps; ++r) {
        if (f.power > 0) out.mul_binomial(m, f.sign);
        else out.div_binomial(m, f.sign);
      }
    }
  }
  return out;
}

}  // namespace partition_lab
