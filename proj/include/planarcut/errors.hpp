#pragma once

#include <stdexcept>
#include <string>

namespace planarcut {

enum class Err {
    LoopEdge,
    ParallelEdge,
    Disconnected,
    NotPlaneEmbedding,
    NonPositiveWeight,
    UnknownEdge,
    SyntaxError,
    UnknownVertex,
    PairWithEqualEndpoints,
    BothPairAndClusterDirectives,
    InvalidClustering,
    RayRoutingFailed,
    EndpointMismatch,
    DepthCapExhausted,
    BoundaryNotClosedWalk,
    NoFeasibleCandidate,
    BudgetExceeded,
    InfeasibleParams,
    MissingCoordinates,
};

const char* err_name(Err e);

/// Library-wide exception carrying a machine-checkable error code.
struct Error : std::runtime_error {
    Err code;
    Error(Err c, const std::string& msg)
        : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}
};

}  // namespace planarcut
