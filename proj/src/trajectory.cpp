#include "agentizer/trajectory.hpp"

#include "agentizer/errors.hpp"

namespace agentizer {

const char* trajectory_status_name(TrajectoryStatus s) {
    switch (s) {
    case TrajectoryStatus::open: return "open";
    case TrajectoryStatus::passed: return "passed";
    case TrajectoryStatus::failed: return "failed";
    }
    return "?";
}

TrajectoryStatus trajectory_status_from(const std::string& s) {
    if (s == "open") return TrajectoryStatus::open;
    if (s == "passed") return TrajectoryStatus::passed;
    if (s == "failed") return TrajectoryStatus::failed;
    throw EngineError(Errc::precondition, "unknown trajectory status: " + s);
}

void Trajectory::validate() const {
    graph.validate();
    if (graph.node(graph.root()).goal.text != goal.text) {
        throw EngineError(Errc::precondition,
                          "trajectory root goal must equal the trajectory goal: " + id);
    }
}

void to_json(nlohmann::json& j, const Trajectory& t) {
    j = nlohmann::json{
        {"id", t.id},
        {"goal", t.goal},
        {"graph", t.graph},
        {"context", t.context},
        {"validation", t.validation},
        {"parent", t.parent ? nlohmann::json(*t.parent) : nlohmann::json()},
        {"status", trajectory_status_name(t.status)},
    };
}

void from_json(const nlohmann::json& j, Trajectory& t) {
    t = Trajectory{};
    t.id = j.at("id").get<std::string>();
    t.goal = j.at("goal").get<Goal>();
    t.graph = j.at("graph").get<TaskGraph>();
    t.context = j.at("context").get<Context>();
    t.validation = j.at("validation").get<ValidationSet>();
    if (j.contains("parent") && !j["parent"].is_null()) {
        t.parent = j["parent"].get<std::string>();
    }
    t.status = trajectory_status_from(j.at("status").get<std::string>());
}

} // namespace agentizer
