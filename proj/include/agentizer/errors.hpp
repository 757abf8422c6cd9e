#pragma once

#include <stdexcept>
#include <string>

namespace agentizer {

enum class Errc {
    illegal_transition,
    cycle_detected,
    unknown_node,
    invalid_demand,
    step_budget_exceeded,
    livelock_detected,
    retries_exhausted,
    precondition,
    synthesis_failed,
    empty_skills,
    no_applicable_skill,
    downstream_failure,
    port_in_use,
    malformed_suite,
    io_error,
};

const char* errc_name(Errc c);

// Engine logic and contract failures. Tool failures are NOT exceptions;
// they travel as ToolResult values so the planner sees the diagnostics.
class EngineError : public std::runtime_error {
public:
    EngineError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

class PlannerError : public std::runtime_error {
public:
    enum class Kind { no_plan, schema, provider };

    PlannerError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

} // namespace agentizer
