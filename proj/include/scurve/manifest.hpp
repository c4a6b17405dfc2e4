#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>

namespace scurve {

inline constexpr const char* kVersion = "0.1.0";

/// FNV-1a 64-bit digest, hex-encoded; stable fingerprint for input files.
std::string fnv1a_hex(const std::string& data);

/// Reproducibility block attached to every CLI result: what ran, on which
/// input, with which knobs. Wall time is informational and excluded from
/// byte-for-byte comparisons.
struct RunManifest {
    std::string command;
    std::string input_digest;
    nlohmann::ordered_json config;
    long long wall_ms = 0;

    nlohmann::ordered_json to_json() const;
};

}  // namespace scurve
