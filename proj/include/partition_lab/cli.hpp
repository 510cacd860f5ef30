#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "partition_lab/partition.hpp"
#include "partition_lab/verifier.hpp"

namespace partition_lab::cli {

enum class OutputFormat { Json, Csv, AsciiTable };

// Partition spec grammar: comma-separated <value><color> tokens with color
// in {b, g}; a bare value means Blue (monochrome families). The empty string
// is the empty partition. Overpartition specs use a trailing 'o' to mark an
// overlined part. Parser and printer are mutually inverse on canonical forms.
ColoredPartition parse_partition_spec(std::string_view spec);
Overpartition parse_overpartition_spec(std::string_view spec);
std::string format_partition(const ColoredPartition& p);
std::string format_partition_bare(const ColoredPartition& p);  // monochrome output
std::string format_overpartition(const Overpartition& p);

// JSON report schema, documented in the README; schema_version 1. Big
// integers are serialized as decimal strings so reports re-parse exactly.
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const MapReport& r);
nlohmann::json to_json(const SuiteReport& r);

// Entry point for the command-line tool; args excludes the program name.
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or domain error.
int run(const std::vector<std::string>& args);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace partition_lab::cli
