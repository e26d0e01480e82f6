#pragma once

#include <string>
#include <utility>
#include <vector>

#include "draughts/config.hpp"

namespace draughts {

constexpr const char* kToolName = "draughtsim";
constexpr const char* kToolVersion = "0.1.0";

struct RunManifest {
    std::string mode;
    std::string timestamp_utc;
    std::vector<std::pair<std::string, uint64_t>> outputs;  // file name -> fnv1a64
};

// Dispatches the configured mode, writes every declared artifact plus
// manifest.json into config.out_dir and returns the manifest. Output
// bytes depend only on the resolved config and seed, never on the jobs
// value. Summary lines go to stdout.
RunManifest execute(const RunConfig& config);

}  // namespace draughts
