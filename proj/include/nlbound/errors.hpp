#pragma once

#include <stdexcept>
#include <string>

namespace nlbound {

enum class errc {
    self_loop,
    duplicate_edge,
    vertex_out_of_range,
    isolated_vertex,
    disconnected,
    not_graphical,
    not_pendant_form,
    star_graph,
    ordering_premise_violated,
    degenerate_case,
    no_convergence,
    retries_exhausted,
    invalid_ring,
    guard_violated,
    invalid_argument,
    parse_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::self_loop: return "SelfLoop";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::vertex_out_of_range: return "VertexOutOfRange";
        case errc::isolated_vertex: return "IsolatedVertex";
        case errc::disconnected: return "Disconnected";
        case errc::not_graphical: return "NotGraphical";
        case errc::not_pendant_form: return "NotPendantForm";
        case errc::star_graph: return "StarGraph";
        case errc::ordering_premise_violated: return "OrderingPremiseViolated";
        case errc::degenerate_case: return "DegenerateCase";
        case errc::no_convergence: return "NoConvergence";
        case errc::retries_exhausted: return "RetriesExhausted";
        case errc::invalid_ring: return "InvalidRing";
        case errc::guard_violated: return "GuardViolated";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) {
    throw error(code, msg);
}

}  // namespace nlbound
