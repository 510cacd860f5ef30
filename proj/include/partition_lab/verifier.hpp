#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partition_lab/bigint.hpp"
#include "partition_lab/families.hpp"
#include "partition_lab/gf.hpp"
#include "partition_lab/maps.hpp"

namespace partition_lab {

// The thirteen counting identities under test.
enum class IdentityId {
  T11a,  // F(n)  = pbar(n)
  T11b,  // F0(n) = (pbar(n) + pbar_odd(n)) / 2
  T11c,  // F1(n) = (pbar(n) - pbar_odd(n)) / 2
  T11d,  // F2(n) = (pbar(n) + (-1)^n pbar_odd(n)) / 2
  T11e,  // F3(n) = (pbar(n) - (-1)^n pbar_odd(n)) / 2
  T15a,  // G0(n) = (G(n) + H(n)) / 2
  T15b,  // G1(n) = (G(n) - H(n)) / 2
  T15c,  // G2(n) = (G(n) + (-1)^n H(n)) / 2
  T15d,  // G3(n) = (G(n) - (-1)^n H(n)) / 2
  T15e,  // G4(n) = (G(n) + (-1)^n K(n)) / 2
  T15f,  // G5(n) = (G(n) - (-1)^n K(n)) / 2
  T17f,  // L0(n) - L1(n) = 1 at triangular n, else 0
  T17g,  // L2(n) - L3(n) = (-1)^n at triangular n, else 0
};

enum class CheckMode { Enumeration, SeriesCoefficient };

enum class MapId { Phi, ToOverpartition, StripColors, Theta, PairMerge, Modular4 };

struct IdentityRow {
  long long n = 0;
  BigInt lhs;
  BigInt rhs;
  bool equal = false;
  CheckMode mode = CheckMode::Enumeration;
};

struct IdentityReport {
  std::string id;  // IdentityId name, or a label such as "gf:F" for cross-checks
  CheckMode mode = CheckMode::Enumeration;
  bool mixed_modes = false;  // true when rows degraded to series above the ceiling
  std::vector<IdentityRow> per_n;
  bool all_pass = false;
};

struct Finding {
  long long n = 0;
  std::string input;   // offending partition, serialized
  std::string kind;    // e.g. "involution_mismatch"
  std::string detail;
};

struct MapCheckRow {
  long long n = 0;
  long long domain_size = 0;
  bool weight_ok = true;
  bool involution_or_bijection_ok = true;
  bool parity_ok = true;
  std::vector<std::string> fixed_points;
};

struct MapReport {
  MapId map = MapId::Phi;
  std::vector<MapCheckRow> per_n;
  std::vector<Finding> findings;
  // True when every contract held on the tested range (iff findings empty).
  bool contracts_pass = false;
};

struct SuiteReport {
  long long n_max_enum = 0;
  long long n_max_series = 0;
  std::vector<IdentityReport> identities;
  std::vector<MapReport> maps;
  // Involution gaps in phi's literal pairing rule, surfaced separately: they
  // are expected, documented behavior of the rule and do not fail the suite
  // unless strict mode is requested downstream.
  bool phi_case_tree_clean = false;
  bool pass = false;
};

// Whether the identity has a generating-function form in the closed catalog.
// T11b..T11e are enumeration-only.
bool identity_supports(IdentityId id, CheckMode mode);

IdentityReport check_identity(IdentityId id, long long n_max, CheckMode mode,
                              long long ceiling = kDefaultEnumerationCeiling);

MapReport check_map(MapId map, long long n_max,
                    long long ceiling = kDefaultEnumerationCeiling);

// coefficient(family_gf(family), n) == count(family, n) for n <= n_max
// (signed count for K).
IdentityReport cross_check_gf(FamilyId family, long long n_max,
                              long long ceiling = kDefaultEnumerationCeiling);

// Runs every identity in both supported modes, every map check, every gf
// cross-check, the parity-decomposition sums, the derived parity identities,
// the two-route composite consequences and the q-series display identities.
// Deterministic ordering throughout.
SuiteReport full_suite(long long n_max_enum, long long n_max_series,
                       long long ceiling = kDefaultEnumerationCeiling);

const char* to_string(IdentityId id);
const char* to_string(CheckMode mode);
const char* to_string(MapId map);
std::optional<IdentityId> identity_from_string(std::string_view s);
std::optional<MapId> map_from_string(std::string_view s);

}  // namespace partition_lab
