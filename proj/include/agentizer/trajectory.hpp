#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "agentizer/graph.hpp"
#include "agentizer/validation_types.hpp"

namespace agentizer {

enum class TrajectoryStatus { open, passed, failed };

const char* trajectory_status_name(TrajectoryStatus s);
TrajectoryStatus trajectory_status_from(const std::string& s);

struct Trajectory {
    std::string id;
    Goal goal;
    TaskGraph graph;
    Context context;
    ValidationSet validation;
    std::optional<std::string> parent;
    TrajectoryStatus status = TrajectoryStatus::open;

    // root exists and its goal equals the trajectory goal
    void validate() const;
};

void to_json(nlohmann::json& j, const Trajectory& t);
void from_json(const nlohmann::json& j, Trajectory& t);

} // namespace agentizer
