#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "matchstick/criteria.hpp"
#include "matchstick/plane_graph.hpp"
#include "matchstick/realizer.hpp"

namespace matchstick {

// One JSONL line per surviving graph.  Records are self-contained: the
// canonical code reconstructs the plane graph, so `verify` can re-run every
// named rule and compare.
struct CertificateRecord {
    CanonicalCode code;
    FaceProfile profile;
    std::vector<Verdict> verdicts;
    std::string realize_tag;  // empty when the realizer did not run
    double realize_gap = 0.0;
    std::optional<std::vector<Vec2>> coords;
    std::string config_hash;
    std::uint64_t seed = 0;
    std::string version;

    std::string to_jsonl() const;
    static CertificateRecord from_jsonl(const std::string& line);
};

std::string tool_version();

// Stable hash of the run configuration for provenance fields.
std::string config_fingerprint(const std::string& serialized_config);

}  // namespace matchstick
