#include "agentizer/errors.hpp"

namespace agentizer {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::illegal_transition: return "illegal-transition";
    case Errc::cycle_detected: return "cycle-detected";
    case Errc::unknown_node: return "unknown-node";
    case Errc::invalid_demand: return "invalid-demand";
    case Errc::step_budget_exceeded: return "step-budget-exceeded";
    case Errc::livelock_detected: return "livelock-detected";
    case Errc::retries_exhausted: return "retries-exhausted";
    case Errc::precondition: return "precondition";
    case Errc::synthesis_failed: return "synthesis-failed";
    case Errc::empty_skills: return "empty-skills";
    case Errc::no_applicable_skill: return "no-applicable-skill";
    case Errc::downstream_failure: return "downstream-failure";
    case Errc::port_in_use: return "port-in-use";
    case Errc::malformed_suite: return "malformed-suite";
    case Errc::io_error: return "io-error";
    }
    return "unknown";
}

} // namespace agentizer
