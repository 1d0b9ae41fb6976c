#pragma once

#include <cstdint>
#include <string>

#include "planarcut/instance_io.hpp"

namespace planarcut {

struct GenParams {
    int n = 9;
    int k = 1;         // source-sink pairs (MinMC mode) ...
    int clusters = 0;  // ... or cluster count > 0 for MinMCC mode
    int cluster_size = 1;
    long long wmin = 1;
    long long wmax = 9;
    std::string family = "grid";  // grid | triangulated
    std::uint64_t seed = 0;
};

/// Deterministic per seed; always simple, connected, 2-vertex-connected, with
/// coordinates (rotation derived from them).
ParsedInstance generate_instance(const GenParams& params);

}  // namespace planarcut
