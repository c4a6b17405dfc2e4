#include "scurve/manifest.hpp"

#include <iomanip>
#include <sstream>

namespace scurve {

std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

nlohmann::ordered_json RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["config"] = config;
    j["version"] = kVersion;
    j["wall_ms"] = wall_ms;
    return j;
}

}  // namespace scurve
