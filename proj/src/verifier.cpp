#include "partition_lab/verifier.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

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

std::string describe(const Overpartition& p) {
  std::ostringstream os;
  bool first = true;
  for (const OverlinedPart& x : p.parts()) {
    if (!first) os << ",";
    first = false;
    os << x.value << (x.overlined ? "o" : "");
  }
  return first ? std::string("(empty)") : os.str();
}

// Cached per-weight counts so the suite does not re-enumerate a family for
// every identity that mentions it.
class CountTable {
 public:
  explicit CountTable(long long ceiling) : ceiling_(ceiling) {}

  const BigInt& get(FamilyId family, long long n, CountFilter filter) {
    const Key key{family, n, filter};
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, count(family, n, filter, ceiling_)).first;
    }
    return it->second;
  }

 private:
  using Key = std::tuple<FamilyId, long long, CountFilter>;
  long long ceiling_;
  std::map<Key, BigInt> cache_;
};

struct SideValues {
  BigInt lhs, rhs;
  bool equal = false;
};

SideValues direct(BigInt lhs, BigInt rhs) {
  SideValues v;
  v.equal = lhs == rhs;
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  return v;
}

// One identity row in enumeration mode. Halved right-hand sides are decided
// without division (2*lhs against the sum); the reported rhs is the exact
// half whenever the sum is even.
SideValues identity_row_enum(IdentityId id, long long n, CountTable& counts) {
  const int sgn = n % 2 == 0 ? +1 : -1;
  const BigInt pbar = counts.get(FamilyId::Over, n, CountFilter::All);
  auto halved = [&](BigInt lhs, BigInt total) {
    SideValues v;
    v.equal = 2 * lhs == total;
    v.lhs = std::move(lhs);
    v.rhs = total / 2;
    return v;
  };
  switch (id) {
    case IdentityId::T11a:
      return direct(counts.get(FamilyId::F, n, CountFilter::All), pbar);
    case IdentityId::T11b:
      return halved(counts.get(FamilyId::F, n, CountFilter::EvenPartsEven),
                    pbar + counts.get(FamilyId::OverOdd, n, CountFilter::All));
    case IdentityId::T11c:
      return halved(counts.get(FamilyId::F, n, CountFilter::EvenPartsOdd),
                    pbar - counts.get(FamilyId::OverOdd, n, CountFilter::All));
    case IdentityId::T11d:
      return halved(counts.get(FamilyId::F, n, CountFilter::PartsEven),
                    pbar + sgn * counts.get(FamilyId::OverOdd, n, CountFilter::All));
    case IdentityId::T11e:
      return halved(counts.get(FamilyId::F, n, CountFilter::PartsOdd),
                    pbar - sgn * counts.get(FamilyId::OverOdd, n, CountFilter::All));
    case IdentityId::T15a:
      return halved(counts.get(FamilyId::G, n, CountFilter::BlueEvenPartsEven),
                    counts.get(FamilyId::G, n, CountFilter::All) +
                        counts.get(FamilyId::H, n, CountFilter::All));
    case IdentityId::T15b:
      return halved(counts.get(FamilyId::G, n, CountFilter::BlueEvenPartsOdd),
                    counts.get(FamilyId::G, n, CountFilter::All) -
                        counts.get(FamilyId::H, n, CountFilter::All));
    case IdentityId::T15c:
      return halved(counts.get(FamilyId::G, n, CountFilter::BluePartsEven),
                    counts.get(FamilyId::G, n, CountFilter::All) +
                        sgn * counts.get(FamilyId::H, n, CountFilter::All));
    case IdentityId::T15d:
      return halved(counts.get(FamilyId::G, n, CountFilter::BluePartsOdd),
                    counts.get(FamilyId::G, n, CountFilter::All) -
                        sgn * counts.get(FamilyId::H, n, CountFilter::All));
    case IdentityId::T15e:
      return halved(counts.get(FamilyId::G, n, CountFilter::PartsEven),
                    counts.get(FamilyId::G, n, CountFilter::All) +
                        sgn * counts.get(FamilyId::K, n, CountFilter::All));
    case IdentityId::T15f:
      return halved(counts.get(FamilyId::G, n, CountFilter::PartsOdd),
                    counts.get(FamilyId::G, n, CountFilter::All) -
                        sgn * counts.get(FamilyId::K, n, CountFilter::All));
    case IdentityId::T17f:
      return direct(counts.get(FamilyId::L, n, CountFilter::BlueEvenPartsEven) -
                        counts.get(FamilyId::L, n, CountFilter::BlueEvenPartsOdd),
                    BigInt(is_triangular(n) ? 1 : 0));
    case IdentityId::T17g:
      return direct(counts.get(FamilyId::L, n, CountFilter::BluePartsEven) -
                        counts.get(FamilyId::L, n, CountFilter::BluePartsOdd),
                    BigInt(is_triangular(n) ? sgn : 0));
  }
  throw std::invalid_argument("unknown identity");
}

// Series coefficients needed per identity, precomputed once per report.
struct SeriesBundle {
  std::map<GfId, TruncatedSeries> gf;
  const TruncatedSeries& get(GfId id, long long trunc) {
    auto it = gf.find(id);
    if (it == gf.end()) it = gf.emplace(id, family_gf(id, trunc)).first;
    return it->second;
  }
};

SideValues identity_row_series(IdentityId id, long long n, long long trunc,
                               SeriesBundle& bundle) {
  const int sgn = n % 2 == 0 ? +1 : -1;
  switch (id) {
    case IdentityId::T11a:
      return direct(bundle.get(GfId::F, trunc).coeff(n),
                    bundle.get(GfId::Over, trunc).coeff(n));
    case IdentityId::T15a:
    case IdentityId::T15b:
      // gf-level form of the pair: the signed difference equals the H series
      return direct(bundle.get(GfId::G0MinusG1, trunc).coeff(n),
                    bundle.get(GfId::H, trunc).coeff(n));
    case IdentityId::T15c:
    case IdentityId::T15d:
      return direct(bundle.get(GfId::G2MinusG3, trunc).coeff(n),
                    sgn * bundle.get(GfId::H, trunc).coeff(n));
    case IdentityId::T15e:
    case IdentityId::T15f:
      return direct(bundle.get(GfId::G4MinusG5, trunc).coeff(n),
                    sgn * bundle.get(GfId::K, trunc).coeff(n));
    case IdentityId::T17f:
      return direct(bundle.get(GfId::L0MinusL1, trunc).coeff(n),
                    BigInt(is_triangular(n) ? 1 : 0));
    case IdentityId::T17g:
      return direct(bundle.get(GfId::L2MinusL3, trunc).coeff(n),
                    BigInt(is_triangular(n) ? sgn : 0));
    default:
      throw std::invalid_argument(std::string("identity ") + to_string(id) +
                                  " has no generating-function form");
  }
}

void finish(IdentityReport& r) {
  r.all_pass = std::all_of(r.per_n.begin(), r.per_n.end(),
                           [](const IdentityRow& row) { return row.equal; });
}

}  // namespace

bool identity_supports(IdentityId id, CheckMode mode) {
  if (mode == CheckMode::Enumeration) return true;
  switch (id) {
    case IdentityId::T11b:
    case IdentityId::T11c:
    case IdentityId::T11d:
    case IdentityId::T11e:
      return false;
    default:
      return true;
  }
}

IdentityReport check_identity(IdentityId id, long long n_max, CheckMode mode,
                              long long ceiling) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  if (!identity_supports(id, mode)) {
    throw std::invalid_argument(std::string("identity ") + to_string(id) +
                                " is not supported in mode " + to_string(mode));
  }
  if (mode == CheckMode::Enumeration && n_max > ceiling) {
    throw enumeration_limit_error("identity check exceeds the enumeration ceiling");
  }
  IdentityReport report;
  report.id = to_string(id);
  report.mode = mode;
  CountTable counts(ceiling);
  SeriesBundle bundle;
  for (long long n = 0; n <= n_max; ++n) {
    SideValues v = mode == CheckMode::Enumeration
                       ? identity_row_enum(id, n, counts)
                       : identity_row_series(id, n, n_max, bundle);
    report.per_n.push_back({n, std::move(v.lhs), std::move(v.rhs), v.equal, mode});
  }
  finish(report);
  return report;
}

IdentityReport cross_check_gf(FamilyId family, long long n_max, long long ceiling) {
  const std::optional<GfId> gf = gf_for_family(family);
  if (!gf) {
    throw std::invalid_argument(std::string("family ") + to_string(family) +
                                " has no generating function");
  }
  if (n_max > ceiling) {
    throw enumeration_limit_error("gf cross-check exceeds the enumeration ceiling");
  }
  IdentityReport report;
  report.id = std::string("gf:") + to_string(family);
  report.mode = CheckMode::SeriesCoefficient;
  const TruncatedSeries series = family_gf(*gf, n_max);
  for (long long n = 0; n <= n_max; ++n) {
    const BigInt lhs = series.coeff(n);
    const BigInt rhs = count(family, n, CountFilter::All, ceiling);
    report.per_n.push_back({n, lhs, rhs, lhs == rhs, CheckMode::SeriesCoefficient});
  }
  finish(report);
  return report;
}

// ---------------------------------------------------------------------------
// map checks
// ---------------------------------------------------------------------------

namespace {

struct MapCheckContext {
  MapReport& report;
  long long n;
  MapCheckRow row;

  void finding(const std::string& input, std::string kind, std::string detail) {
    report.findings.push_back({n, input, std::move(kind), std::move(detail)});
  }
};

void check_involution(MapCheckContext& ctx, FamilyId domain,
                      const std::function<ColoredPartition(const ColoredPartition&)>& f,
                      const std::function<bool(const PartitionStats&, const PartitionStats&)>& parity_flip,
                      bool domain_excludes, FamilyId excluded, long long ceiling,
                      const char* gap_kind) {
  for_each_member(domain, ctx.n, [&](const ColoredPartition& lam) {
    if (domain_excludes && member(excluded, lam)) return;
    ++ctx.row.domain_size;
    ColoredPartition mu;
    try {
      mu = f(lam);
    } catch (const std::exception& e) {
      ctx.row.involution_or_bijection_ok = false;
      ctx.finding(describe(lam), "application_error", e.what());
      return;
    }
    if (mu.weight() != lam.weight()) {
      ctx.row.weight_ok = false;
      ctx.finding(describe(lam), "weight_mismatch", "image " + describe(mu));
    }
    if (!member(domain, mu) || (domain_excludes && member(excluded, mu))) {
      ctx.row.involution_or_bijection_ok = false;
      ctx.finding(describe(lam), "codomain_violation", "image " + describe(mu));
    }
    if (!parity_flip(stats(lam), stats(mu))) {
      ctx.row.parity_ok = false;
      ctx.finding(describe(lam), "parity_violation", "image " + describe(mu));
    }
    if (mu == lam) ctx.row.fixed_points.push_back(describe(lam));
    ColoredPartition back;
    try {
      back = f(mu);
    } catch (const std::exception& e) {
      ctx.row.involution_or_bijection_ok = false;
      ctx.finding(describe(mu), "application_error", e.what());
      return;
    }
    if (back != lam) {
      ctx.row.involution_or_bijection_ok = false;
      ctx.finding(describe(lam), gap_kind,
                  "maps to " + describe(mu) + " which maps back to " + describe(back));
    }
  }, ceiling);
}

void check_phi(MapCheckContext& ctx, long long ceiling) {
  check_involution(
      ctx, FamilyId::F,
      [](const ColoredPartition& x) { return phi(x); },
      [](const PartitionStats& a, const PartitionStats& b) {
        return (a.n_even_parts + b.n_even_parts) % 2 == 1;
      },
      true, FamilyId::Q, ceiling, "case_tree_gap");
}

void check_theta(MapCheckContext& ctx, long long ceiling) {
  for_each_member(FamilyId::M, ctx.n, [&](const ColoredPartition& lam) {
    ++ctx.row.domain_size;
    ColoredPartition mu;
    try {
      mu = theta(lam);
    } catch (const std::exception& e) {
      ctx.row.involution_or_bijection_ok = false;
      ctx.finding(describe(lam), "application_error", e.what());
      return;
    }
    if (mu.weight() != lam.weight()) {
      ctx.row.weight_ok = false;
      ctx.finding(describe(lam), "weight_mismatch", "image " + describe(mu));
    }
    if (!member(FamilyId::M, mu)) {
      ctx.row.involution_or_bijection_ok = false;
      ctx.finding(describe(lam), "codomain_violation", "image " + describe(mu));
    }
    const PartitionStats a = stats(lam), b = stats(mu);
    if ((a.n_blue_even_parts + b.n_blue_even_parts) % 2 != 1 ||
        (a.n_blue_parts + b.n_blue_parts) % 2 != 1) {
      ctx.row.parity_ok = false;
      ctx.finding(describe(lam), "parity_violation", "image " + describe(mu));
    }
    if (mu == lam) ctx.row.fixed_points.push_back(describe(lam));
    if (theta(mu) != lam) {
      ctx.row.involution_or_bijection_ok = false;
      ctx.finding(describe(lam), "involution_mismatch", "image " + describe(mu));
    }
  }, ceiling);
}

template <typename Image, typename Forward, typename Backward, typename EnumerateImage,
          typename DescribeImage, typename ImageOk>
void check_bijection(MapCheckContext& ctx, FamilyId domain, bool exclude, FamilyId excluded,
                     Forward&& fwd, Backward&& bwd, EnumerateImage&& enumerate_image,
                     DescribeImage&& describe_image, ImageOk&& image_ok, long long ceiling) {
  std::set<Image> images;
  for_each_member(domain, ctx.n, [&](const ColoredPartition& lam) {
    if (exclude && member(excluded, lam)) return;
    ++ctx.row.domain_size;
    Image beta;
    try {
      beta = fwd(lam);
    } catch (const std::exception& e) {
      ctx.row.involution_or_bijection_ok = false;
      ctx.finding(describe(lam), "application_error", e.what());
      return;
    }
    if (beta.weight() != lam.weight()) {
      ctx.row.weight_ok = false;
      ctx.finding(describe(lam), "weight_mismatch", "image " + describe_image(beta));
    }
    if (!image_ok(lam, beta)) {
      ctx.row.involution_or_bijection_ok = false;
      ctx.finding(describe(lam), "codomain_violation", "image " + describe_image(beta));
    }
    if (!images.insert(beta).second) {
      ctx.row.involution_or_bijection_ok = false;
      ctx.finding(describe(lam), "injectivity_violation", "image " + describe_image(beta));
    }
    ColoredPartition back;
    try {
      back = bwd(beta);
    } catch (const std::exception& e) {
      ctx.row.involution_or_bijection_ok = false;
      ctx.finding(describe_image(beta), "application_error", e.what());
      return;
    }
    if (back != lam) {
      ctx.row.involution_or_bijection_ok = false;
      ctx.finding(describe(lam), "inverse_mismatch", "round trip gave " + describe(back));
    }
  }, ceiling);
  // surjectivity: every member of the image family is hit
  long long image_size = 0;
  enumerate_image([&](const Image& beta) {
    ++image_size;
    if (!images.count(beta)) {
      ctx.row.involution_or_bijection_ok = false;
      ctx.finding(describe_image(beta), "surjectivity_violation", "never produced");
    }
  });
  if (image_size != static_cast<long long>(images.size()) &&
      ctx.row.involution_or_bijection_ok) {
    ctx.row.involution_or_bijection_ok = false;
    ctx.finding("(none)", "cardinality_mismatch",
                "domain " + std::to_string(ctx.row.domain_size) + " vs image " +
                    std::to_string(image_size));
  }
}

void check_modular4(MapCheckContext& ctx, long long ceiling) {
  long long expected_fixed = ctx.n == 0 ? 1 : (is_triangular(ctx.n) ? 1 : 0);
  for_each_member(FamilyId::N, ctx.n, [&](const ColoredPartition& mu) {
    ++ctx.row.domain_size;
    TransformOutcome out;
    try {
      out = modular4_transform(mu);
    } catch (const std::exception& e) {
      ctx.row.involution_or_bijection_ok = false;
      ctx.finding(describe(mu), "application_error", e.what());
      return;
    }
    if (out.kind == TransformOutcome::Kind::FixedStaircase) {
      ctx.row.fixed_points.push_back(describe(mu));
      // the fixed shape must be the advertised staircase of its kind
      std::vector<long long> want;
      for (long long i = out.k; i >= 1; --i) {
        want.push_back(out.staircase == StaircaseKind::C1Staircase ? 4 * i - 3 : 4 * i - 1);
      }
      if (mu != monochrome(want)) {
        ctx.row.involution_or_bijection_ok = false;
        ctx.finding(describe(mu), "fixed_point_shape", "claimed staircase does not match");
      }
      if (!is_triangular(ctx.n) && ctx.n != 0) {
        ctx.row.involution_or_bijection_ok = false;
        ctx.finding(describe(mu), "fixed_point_at_nontriangular", "");
      }
      return;
    }
    const ColoredPartition& nu = out.result;
    if (nu.weight() != mu.weight()) {
      ctx.row.weight_ok = false;
      ctx.finding(describe(mu), "weight_mismatch", "image " + describe(nu));
    }
    const long long e1 = stats(mu).n_even_parts, e2 = stats(nu).n_even_parts;
    if ((e1 + e2) % 2 != 1 || (e1 > e2 ? e1 - e2 : e2 - e1) != 1) {
      ctx.row.parity_ok = false;
      ctx.finding(describe(mu), "parity_violation", "image " + describe(nu));
    }
    TransformOutcome back;
    try {
      back = modular4_transform(nu);
    } catch (const std::exception& e) {
      ctx.row.involution_or_bijection_ok = false;
      ctx.finding(describe(nu), "application_error", e.what());
      return;
    }
    if (back.kind != TransformOutcome::Kind::Moved || back.result != mu) {
      ctx.row.involution_or_bijection_ok = false;
      ctx.finding(describe(mu), "involution_mismatch", "via " + describe(nu));
    }
  }, ceiling);
  if (static_cast<long long>(ctx.row.fixed_points.size()) != expected_fixed) {
    ctx.row.involution_or_bijection_ok = false;
    ctx.finding("(census)", "fixed_point_count",
                "expected " + std::to_string(expected_fixed) + " got " +
                    std::to_string(ctx.row.fixed_points.size()));
  }
}

}  // namespace

MapReport check_map(MapId map, long long n_max, long long ceiling) {
  if (n_max > ceiling) {
    throw enumeration_limit_error("map check exceeds the enumeration ceiling");
  }
  MapReport report;
  report.map = map;
  for (long long n = 0; n <= n_max; ++n) {
    MapCheckContext ctx{report, n, {}};
    ctx.row.n = n;
    switch (map) {
      case MapId::Phi:
        check_phi(ctx, ceiling);
        break;
      case MapId::Theta:
        check_theta(ctx, ceiling);
        break;
      case MapId::ToOverpartition:
        check_bijection<Overpartition>(
            ctx, FamilyId::Q, false, FamilyId::Q,
            [](const ColoredPartition& x) { return to_overpartition(x); },
            [](const Overpartition& x) { return from_overpartition(x); },
            [&](auto&& visit) { for_each_over_member(FamilyId::OverOdd, n, visit, ceiling); },
            [](const Overpartition& x) { return describe(x); },
            [](const ColoredPartition&, const Overpartition& x) {
              return member(FamilyId::OverOdd, x);
            },
            ceiling);
        break;
      case MapId::StripColors:
        check_bijection<ColoredPartition>(
            ctx, FamilyId::R, false, FamilyId::R,
            [](const ColoredPartition& x) { return strip_colors(x); },
            [](const ColoredPartition& x) { return paint_colors(x); },
            [&](auto&& visit) { for_each_member(FamilyId::H, n, visit, ceiling); },
            [](const ColoredPartition& x) { return describe(x); },
            [](const ColoredPartition&, const ColoredPartition& x) {
              return member(FamilyId::H, x);
            },
            ceiling);
        break;
      case MapId::PairMerge:
        check_bijection<ColoredPartition>(
            ctx, FamilyId::L, true, FamilyId::M,
            [](const ColoredPartition& x) { return pair_merge(x); },
            [](const ColoredPartition& x) { return pair_split(x); },
            [&](auto&& visit) { for_each_member(FamilyId::N, n, visit, ceiling); },
            [](const ColoredPartition& x) { return describe(x); },
            [](const ColoredPartition& lam, const ColoredPartition& x) {
              // the Blue even count must carry over to the even count
              return member(FamilyId::N, x) &&
                     stats(lam).n_blue_even_parts == stats(x).n_even_parts;
            },
            ceiling);
        break;
      case MapId::Modular4:
        check_modular4(ctx, ceiling);
        break;
    }
    report.per_n.push_back(std::move(ctx.row));
  }
  report.contracts_pass = report.findings.empty();
  return report;
}

// ---------------------------------------------------------------------------
// full suite
// ---------------------------------------------------------------------------

namespace {

IdentityReport labeled_report(std::string id, CheckMode mode) {
  IdentityReport r;
  r.id = std::move(id);
  r.mode = mode;
  return r;
}

void push_row(IdentityReport& r, long long n, BigInt lhs, BigInt rhs, CheckMode mode) {
  const bool equal = lhs == rhs;
  r.per_n.push_back({n, std::move(lhs), std::move(rhs), equal, mode});
}

// Parity-split counts must rebuild the plain total.
IdentityReport parity_sum_report(FamilyId family, CountFilter even_f, CountFilter odd_f,
                                 const char* label, long long n_max, CountTable& counts) {
  IdentityReport r = labeled_report(std::string("parity_sum:") + to_string(family) +
                                        ":" + label,
                                    CheckMode::Enumeration);
  for (long long n = 0; n <= n_max; ++n) {
    push_row(r, n, counts.get(family, n, even_f) + counts.get(family, n, odd_f),
             counts.get(family, n, CountFilter::All), CheckMode::Enumeration);
  }
  finish(r);
  return r;
}

// X2 - X3 = (-1)^n (X0 - X1) for the three families with both statistics.
IdentityReport derived_parity_report(FamilyId family, CountFilter e0, CountFilter e1,
                                     CountFilter p2, CountFilter p3, long long n_max,
                                     CountTable& counts) {
  IdentityReport r = labeled_report(std::string("derived:") + to_string(family),
                                    CheckMode::Enumeration);
  for (long long n = 0; n <= n_max; ++n) {
    const int sgn = n % 2 == 0 ? +1 : -1;
    push_row(r, n, counts.get(family, n, p2) - counts.get(family, n, p3),
             sgn * (counts.get(family, n, e0) - counts.get(family, n, e1)),
             CheckMode::Enumeration);
  }
  finish(r);
  return r;
}

// Two-route composites: identity rebuilt from the maps' pairings.
IdentityReport composite_t11_report(long long n_max, CountTable& counts, long long ceiling) {
  IdentityReport r = labeled_report("composite:T11bc", CheckMode::Enumeration);
  for (long long n = 0; n <= n_max; ++n) {
    // route 1: F0 - F1; route 2: |pi_Q| via the relabeling bijection = pbar_odd
    const BigInt route1 = counts.get(FamilyId::F, n, CountFilter::EvenPartsEven) -
                          counts.get(FamilyId::F, n, CountFilter::EvenPartsOdd);
    BigInt q_size = 0;
    for_each_member(FamilyId::Q, n, [&](const ColoredPartition& lam) {
      if (member(FamilyId::OverOdd, to_overpartition(lam))) q_size += 1;
    }, ceiling);
    const BigInt pbar_odd = counts.get(FamilyId::OverOdd, n, CountFilter::All);
    push_row(r, n, route1, q_size, CheckMode::Enumeration);
    push_row(r, n, q_size, pbar_odd, CheckMode::Enumeration);
  }
  finish(r);
  return r;
}

IdentityReport composite_t17_report(long long n_max, CountTable& counts, long long ceiling) {
  IdentityReport r = labeled_report("composite:T17f", CheckMode::Enumeration);
  for (long long n = 0; n <= n_max; ++n) {
    // route 1: L0 - L1 directly
    const BigInt route1 = counts.get(FamilyId::L, n, CountFilter::BlueEvenPartsEven) -
                          counts.get(FamilyId::L, n, CountFilter::BlueEvenPartsOdd);
    // route 2: theta cancels pi_M; pair_merge carries pi_L \ pi_M to pi_N with
    // matching sign; the transformation cancels pi_N except the staircases.
    BigInt m_signed = 0;
    for_each_member(FamilyId::M, n, [&](const ColoredPartition& lam) {
      m_signed += stats(lam).n_blue_even_parts % 2 == 0 ? 1 : -1;
    }, ceiling);
    BigInt n_signed = 0;
    long long fixed = 0;
    for_each_member(FamilyId::N, n, [&](const ColoredPartition& mu) {
      n_signed += stats(mu).n_even_parts % 2 == 0 ? 1 : -1;
      if (modular4_transform(mu).kind == TransformOutcome::Kind::FixedStaircase) ++fixed;
    }, ceiling);
    const BigInt route2 = m_signed + n_signed;
    push_row(r, n, route1, route2, CheckMode::Enumeration);
    push_row(r, n, route2, BigInt(n == 0 ? 1 : (is_triangular(n) ? 1 : 0)),
             CheckMode::Enumeration);
    push_row(r, n, BigInt(fixed), BigInt(n == 0 ? 1 : (is_triangular(n) ? 1 : 0)),
             CheckMode::Enumeration);
  }
  finish(r);
  return r;
}

// q-series display identities checked coefficientwise.
IdentityReport display_report(const std::string& label, const TruncatedSeries& lhs,
                              const TruncatedSeries& rhs, long long n_max) {
  IdentityReport r = labeled_report("display:" + label, CheckMode::SeriesCoefficient);
  for (long long n = 0; n <= n_max; ++n) {
    push_row(r, n, lhs.coeff(n), rhs.coeff(n), CheckMode::SeriesCoefficient);
  }
  finish(r);
  return r;
}

TruncatedSeries alternate_sign(const TruncatedSeries& s) {
  TruncatedSeries out(s.trunc());
  for (long long n = 0; n <= s.trunc(); ++n) {
    out.set_coeff(n, n % 2 == 0 ? s.coeff(n) : -s.coeff(n));
  }
  return out;
}

}  // namespace

SuiteReport full_suite(long long n_max_enum, long long n_max_series, long long ceiling) {
  SuiteReport suite;
  suite.n_max_enum = n_max_enum;
  suite.n_max_series = n_max_series;
  CountTable counts(ceiling);

  // Beyond the enumeration ceiling the suite degrades identity rows to series
  // coefficients where a gf form exists; everything enumeration-only is
  // capped at the ceiling. Map checks and gf cross-checks always enumerate.
  const long long enum_cap = std::min(n_max_enum, ceiling);

  static constexpr std::array<IdentityId, 13> kIdentities = {
      IdentityId::T11a, IdentityId::T11b, IdentityId::T11c, IdentityId::T11d,
      IdentityId::T11e, IdentityId::T15a, IdentityId::T15b, IdentityId::T15c,
      IdentityId::T15d, IdentityId::T15e, IdentityId::T15f, IdentityId::T17f,
      IdentityId::T17g};

  SeriesBundle degrade_bundle;
  for (IdentityId id : kIdentities) {
    IdentityReport r = labeled_report(to_string(id), CheckMode::Enumeration);
    for (long long n = 0; n <= enum_cap; ++n) {
      SideValues v = identity_row_enum(id, n, counts);
      r.per_n.push_back({n, std::move(v.lhs), std::move(v.rhs), v.equal,
                         CheckMode::Enumeration});
    }
    if (n_max_enum > enum_cap && identity_supports(id, CheckMode::SeriesCoefficient)) {
      r.mixed_modes = true;
      for (long long n = enum_cap + 1; n <= n_max_enum; ++n) {
        SideValues v = identity_row_series(id, n, n_max_enum, degrade_bundle);
        r.per_n.push_back({n, std::move(v.lhs), std::move(v.rhs), v.equal,
                           CheckMode::SeriesCoefficient});
      }
    }
    finish(r);
    suite.identities.push_back(std::move(r));
  }
  {
    SeriesBundle bundle;
    for (IdentityId id : kIdentities) {
      if (!identity_supports(id, CheckMode::SeriesCoefficient)) continue;
      IdentityReport r = labeled_report(to_string(id), CheckMode::SeriesCoefficient);
      for (long long n = 0; n <= n_max_series; ++n) {
        SideValues v = identity_row_series(id, n, n_max_series, bundle);
        r.per_n.push_back({n, std::move(v.lhs), std::move(v.rhs), v.equal,
                           CheckMode::SeriesCoefficient});
      }
      finish(r);
      suite.identities.push_back(std::move(r));
    }
  }

  // gf vs enumeration for every family carrying both
  static constexpr std::array<FamilyId, 7> kGfFamilies = {
      FamilyId::F, FamilyId::G, FamilyId::H, FamilyId::K,
      FamilyId::L, FamilyId::Over, FamilyId::OverOdd};
  for (FamilyId family : kGfFamilies) {
    suite.identities.push_back(cross_check_gf(family, enum_cap, ceiling));
  }

  // parity decompositions
  suite.identities.push_back(parity_sum_report(FamilyId::F, CountFilter::EvenPartsEven,
                                               CountFilter::EvenPartsOdd, "even_parts",
                                               enum_cap, counts));
  suite.identities.push_back(parity_sum_report(FamilyId::F, CountFilter::PartsEven,
                                               CountFilter::PartsOdd, "parts", enum_cap,
                                               counts));
  suite.identities.push_back(parity_sum_report(FamilyId::G, CountFilter::BlueEvenPartsEven,
                                               CountFilter::BlueEvenPartsOdd, "blue_evens",
                                               enum_cap, counts));
  suite.identities.push_back(parity_sum_report(FamilyId::G, CountFilter::BluePartsEven,
                                               CountFilter::BluePartsOdd, "blue_parts",
                                               enum_cap, counts));
  suite.identities.push_back(parity_sum_report(FamilyId::G, CountFilter::PartsEven,
                                               CountFilter::PartsOdd, "parts", enum_cap,
                                               counts));
  suite.identities.push_back(parity_sum_report(FamilyId::L, CountFilter::BlueEvenPartsEven,
                                               CountFilter::BlueEvenPartsOdd, "blue_evens",
                                               enum_cap, counts));
  suite.identities.push_back(parity_sum_report(FamilyId::L, CountFilter::BluePartsEven,
                                               CountFilter::BluePartsOdd, "blue_parts",
                                               enum_cap, counts));

  // derived: X2 - X3 = (-1)^n (X0 - X1)
  suite.identities.push_back(derived_parity_report(
      FamilyId::F, CountFilter::EvenPartsEven, CountFilter::EvenPartsOdd,
      CountFilter::PartsEven, CountFilter::PartsOdd, enum_cap, counts));
  suite.identities.push_back(derived_parity_report(
      FamilyId::G, CountFilter::BlueEvenPartsEven, CountFilter::BlueEvenPartsOdd,
      CountFilter::BluePartsEven, CountFilter::BluePartsOdd, enum_cap, counts));
  suite.identities.push_back(derived_parity_report(
      FamilyId::L, CountFilter::BlueEvenPartsEven, CountFilter::BlueEvenPartsOdd,
      CountFilter::BluePartsEven, CountFilter::BluePartsOdd, enum_cap, counts));

  // two-route composites
  suite.identities.push_back(composite_t11_report(enum_cap, counts, ceiling));
  suite.identities.push_back(composite_t17_report(enum_cap, counts, ceiling));

  // display identities at series level
  {
    const long long t = n_max_series;
    suite.identities.push_back(display_report(
        "G0_minus_G1_eq_H", family_gf(GfId::G0MinusG1, t), family_gf(GfId::H, t), t));
    // the two product forms of the K series
    const std::vector<PochhammerFactor> k_alt = {{+1, 1, 2, +1}, {+1, 2, 2, -1}};
    suite.identities.push_back(display_report(
        "K_alt_product", family_gf(GfId::K, t), series_from_factors(k_alt, t), t));
    const std::vector<PochhammerFactor> g45_alt = {{-1, 1, 2, +1}, {+1, 2, 2, -1}};
    suite.identities.push_back(display_report(
        "G4_minus_G5_alt", family_gf(GfId::G4MinusG5, t), series_from_factors(g45_alt, t), t));
    suite.identities.push_back(display_report("G4_minus_G5_eq_signed_K",
                                              family_gf(GfId::G4MinusG5, t),
                                              alternate_sign(family_gf(GfId::K, t)), t));
    suite.identities.push_back(display_report("G2_minus_G3_eq_signed_H",
                                              family_gf(GfId::G2MinusG3, t),
                                              alternate_sign(family_gf(GfId::H, t)), t));
    suite.identities.push_back(display_report(
        "L0_minus_L1_staircase", family_gf(GfId::L0MinusL1, t), staircase_series(false, t), t));
    suite.identities.push_back(display_report(
        "L2_minus_L3_staircase", family_gf(GfId::L2MinusL3, t), staircase_series(true, t), t));
  }

  static constexpr std::array<MapId, 6> kMaps = {
      MapId::Phi, MapId::ToOverpartition, MapId::StripColors,
      MapId::Theta, MapId::PairMerge, MapId::Modular4};
  for (MapId map : kMaps) {
    suite.maps.push_back(check_map(map, enum_cap, ceiling));
  }

  bool identities_ok = std::all_of(suite.identities.begin(), suite.identities.end(),
                                   [](const IdentityReport& r) { return r.all_pass; });
  bool maps_ok = true;
  suite.phi_case_tree_clean = true;
  for (const MapReport& m : suite.maps) {
    for (const Finding& f : m.findings) {
      if (m.map == MapId::Phi && f.kind == "case_tree_gap") {
        suite.phi_case_tree_clean = false;
        continue;  // documented gaps of the literal rule; reported, not fatal
      }
      maps_ok = false;
    }
  }
  suite.pass = identities_ok && maps_ok;
  return suite;
}

const char* to_string(IdentityId id) {
  switch (id) {
    case IdentityId::T11a: return "T11a";
    case IdentityId::T11b: return "T11b";
    case IdentityId::T11c: return "T11c";
    case IdentityId::T11d: return "T11d";
    case IdentityId::T11e: return "T11e";
    case IdentityId::T15a: return "T15a";
    case IdentityId::T15b: return "T15b";
    case IdentityId::T15c: return "T15c";
    case IdentityId::T15d: return "T15d";
    case IdentityId::T15e: return "T15e";
    case IdentityId::T15f: return "T15f";
    case IdentityId::T17f: return "T17f";
    case IdentityId::T17g: return "T17g";
  }
  return "?";
}

const char* to_string(CheckMode mode) {
  return mode == CheckMode::Enumeration ? "enumeration" : "series";
}

const char* to_string(MapId map) {
  switch (map) {
    case MapId::Phi: return "phi";
    case MapId::ToOverpartition: return "to_overpartition";
    case MapId::StripColors: return "strip_colors";
    case MapId::Theta: return "theta";
    case MapId::PairMerge: return "pair_merge";
    case MapId::Modular4: return "modular4";
  }
  return "?";
}

std::optional<IdentityId> identity_from_string(std::string_view s) {
  static constexpr std::array<IdentityId, 13> ids = {
      IdentityId::T11a, IdentityId::T11b, IdentityId::T11c, IdentityId::T11d,
      IdentityId::T11e, IdentityId::T15a, IdentityId::T15b, IdentityId::T15c,
      IdentityId::T15d, IdentityId::T15e, IdentityId::T15f, IdentityId::T17f,
      IdentityId::T17g};
  for (IdentityId id : ids) {
    if (s == to_string(id)) return id;
  }
  return std::nullopt;
}

std::optional<MapId> map_from_string(std::string_view s) {
  static constexpr std::array<MapId, 6> ids = {
      MapId::Phi, MapId::ToOverpartition, MapId::StripColors,
      MapId::Theta, MapId::PairMerge, MapId::Modular4};
  for (MapId id : ids) {
    if (s == to_string(id)) return id;
  }
  return std::nullopt;
}

}  // namespace partition_lab
