#pragma once

#include <cstdint>
#include <string>

#include "causalchop/chop.hpp"
#include "causalchop/order.hpp"
#include "causalchop/wick.hpp"

namespace causalchop {

struct ConfigOptions {
  int refine_limit = 12;
  int jobs = 1;
  std::uint64_t seed = 20240817;
};

struct ConfigFile {
  int dimension = 4;
  std::vector<StringGeom> strings;
  ConfigOptions options;
};

// Parses a configuration; throws ParseError with the offending field path
// (e.g. "strings[0].x[1]") on malformed input.
ConfigFile parse_config(const std::string& text);
std::string config_to_json(const ConfigFile& cfg);

struct ChoppingCertificate {
  ConfigFile config;
  Chopping chopping;
  LatestTable table;
};

// Self-contained certificate: configuration, cuts, latest-member table, and
// the embedded verification report. Stable key order; no floats.
std::string chopping_certificate_json(const ConfigFile& cfg, const Chopping& chopping,
                                      const LatestTable& table,
                                      const VerifyReport& report);
ChoppingCertificate parse_chopping_certificate(const std::string& text);

std::string two_chop_json(const ConfigFile& cfg, int i, int j, const TwoChopResult& res);

std::string expression_to_json(const WickExpression& e);
WickExpression expression_from_json(const std::string& text);

std::string witness_to_json(const Witness& w);

// FNV-1a 64-bit content hash, hex-encoded; used for deterministic report
// input hashes.
std::string fnv1a_hex(const std::string& data);

}  // namespace causalchop
