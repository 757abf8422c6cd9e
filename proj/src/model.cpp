#include "agentizer/model.hpp"

#include <filesystem>

#include "agentizer/errors.hpp"

namespace agentizer {

const char* goal_origin_name(GoalOrigin o) {
    switch (o) {
    case GoalOrigin::repo_root: return "repo-root";
    case GoalOrigin::todo_derived: return "todo-derived";
    case GoalOrigin::validation: return "validation";
    case GoalOrigin::knowledge: return "knowledge";
    }
    return "?";
}

GoalOrigin goal_origin_from(const std::string& s) {
    if (s == "repo-root") return GoalOrigin::repo_root;
    if (s == "todo-derived") return GoalOrigin::todo_derived;
    if (s == "validation") return GoalOrigin::validation;
    if (s == "knowledge") return GoalOrigin::knowledge;
    throw EngineError(Errc::precondition, "unknown goal origin: " + s);
}

const char* context_kind_name(ContextKind k) {
    switch (k) {
    case ContextKind::doc_slice: return "doc-slice";
    case ContextKind::code_slice: return "code-slice";
    case ContextKind::command: return "command";
    case ContextKind::command_output: return "command-output";
    case ContextKind::configuration: return "configuration";
    case ContextKind::artifact_path: return "artifact-path";
    }
    return "?";
}

ContextKind context_kind_from(const std::string& s) {
    if (s == "doc-slice") return ContextKind::doc_slice;
    if (s == "code-slice") return ContextKind::code_slice;
    if (s == "command") return ContextKind::command;
    if (s == "command-output") return ContextKind::command_output;
    if (s == "configuration") return ContextKind::configuration;
    if (s == "artifact-path") return ContextKind::artifact_path;
    throw EngineError(Errc::precondition, "unknown context kind: " + s);
}

uint64_t ContextItem::dedup_hash() const {
    std::string key(context_kind_name(kind));
    key.push_back('\x1f');
    key.append(payload);
    return fnv1a64(key);
}

ContextItem make_context_item(ContextKind kind, std::string payload,
                              std::optional<std::string> source_node) {
    if (payload.empty()) {
        throw EngineError(Errc::precondition, "context item payload must be non-empty");
    }
    if (kind == ContextKind::artifact_path && !std::filesystem::exists(payload)) {
        throw EngineError(Errc::precondition, "artifact-path does not exist: " + payload);
    }
    return ContextItem{kind, std::move(payload), std::move(source_node)};
}

size_t Context::append(const ContextItem& it) {
    if (!seen_.insert(it.dedup_hash()).second) {
        return 0;
    }
    items_.push_back(it);
    return 1;
}

size_t Context::append_all(const std::vector<ContextItem>& items) {
    size_t added = 0;
    for (const auto& it : items) {
        added += append(it);
    }
    return added;
}

uint64_t Context::digest_prefix(size_t n) const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (size_t i = 0; i < n && i < items_.size(); ++i) {
        h = mix64(h ^ items_[i].dedup_hash());
    }
    return h;
}

Context context_merge(const Context& base, const std::vector<ContextItem>& increment) {
    Context out = base;
    out.append_all(increment);
    return out;
}

const char* node_state_name(NodeState s) {
    switch (s) {
    case NodeState::pending: return "pending";
    case NodeState::running: return "running";
    case NodeState::done: return "done";
    case NodeState::failed: return "failed";
    }
    return "?";
}

NodeState node_state_from(const std::string& s) {
    if (s == "pending") return NodeState::pending;
    if (s == "running") return NodeState::running;
    if (s == "done") return NodeState::done;
    if (s == "failed") return NodeState::failed;
    throw EngineError(Errc::precondition, "unknown node state: " + s);
}

bool transition_legal(NodeState from, NodeState to) {
    switch (from) {
    case NodeState::pending: return to == NodeState::running;
    case NodeState::running: return to == NodeState::done || to == NodeState::failed;
    case NodeState::failed: return to == NodeState::pending;
    case NodeState::done: return false; // absorbing
    }
    return false;
}

void transition_state(Node& node, NodeState target) {
    if (!transition_legal(node.state, target)) {
        throw EngineError(Errc::illegal_transition,
                          std::string(node_state_name(node.state)) + " -> " + node_state_name(target) +
                              " on node " + node.id);
    }
    node.state = target;
    if (target == NodeState::pending) {
        // retry reset clears the synthesized operation but keeps context
        node.operation.reset();
        node.followups.clear();
        node.sub_trajectory.reset();
    }
}

const char* env_status_name(EnvStatus s) {
    switch (s) {
    case EnvStatus::in_progress: return "in-progress";
    case EnvStatus::finished: return "finished";
    case EnvStatus::failed: return "failed";
    }
    return "?";
}

EnvStatus env_status_from(const std::string& s) {
    if (s == "in-progress") return EnvStatus::in_progress;
    if (s == "finished") return EnvStatus::finished;
    if (s == "failed") return EnvStatus::failed;
    throw EngineError(Errc::precondition, "unknown env status: " + s);
}

void to_json(nlohmann::json& j, const Goal& g) {
    j = nlohmann::json{
        {"id", g.id},
        {"text", g.text},
        {"origin", goal_origin_name(g.origin)},
        {"inputs", g.inputs},
    };
}

void from_json(const nlohmann::json& j, Goal& g) {
    g = Goal{};
    g.id = j.at("id").get<std::string>();
    g.text = j.at("text").get<std::string>();
    g.origin = goal_origin_from(j.at("origin").get<std::string>());
    if (j.contains("inputs")) g.inputs = j["inputs"].get<std::vector<std::string>>();
}

void to_json(nlohmann::json& j, const ContextItem& it) {
    j = nlohmann::json{
        {"kind", context_kind_name(it.kind)},
        {"payload", it.payload},
        {"source-node", it.source_node ? nlohmann::json(*it.source_node) : nlohmann::json()},
    };
}

void from_json(const nlohmann::json& j, ContextItem& it) {
    it = ContextItem{};
    it.kind = context_kind_from(j.at("kind").get<std::string>());
    it.payload = j.at("payload").get<std::string>();
    if (j.contains("source-node") && !j["source-node"].is_null()) {
        it.source_node = j["source-node"].get<std::string>();
    }
}

void to_json(nlohmann::json& j, const Context& c) {
    j = nlohmann::json{{"items", c.items()}};
}

void from_json(const nlohmann::json& j, Context& c) {
    c = Context{};
    for (const auto& item : j.at("items")) {
        c.append(item.get<ContextItem>());
    }
}

void to_json(nlohmann::json& j, const Operation& op) {
    j = nlohmann::json{
        {"tool", op.tool},
        {"arguments", op.arguments},
        {"rationale", op.rationale},
    };
}

void from_json(const nlohmann::json& j, Operation& op) {
    op = Operation{};
    op.tool = j.at("tool").get<std::string>();
    op.arguments = j.at("arguments");
    op.rationale = j.value("rationale", "");
}

void to_json(nlohmann::json& j, const ContextRef& r) {
    j = nlohmann::json{{"length", r.length}, {"digest", r.digest}};
}

void from_json(const nlohmann::json& j, ContextRef& r) {
    r = ContextRef{};
    r.length = j.at("length").get<uint64_t>();
    r.digest = j.at("digest").get<std::string>();
}

void to_json(nlohmann::json& j, const Node& n) {
    j = nlohmann::json{
        {"id", n.id},
        {"goal", n.goal},
        {"operation", n.operation ? nlohmann::json(*n.operation) : nlohmann::json()},
        {"context", n.context},
        {"state", node_state_name(n.state)},
        {"followups", n.followups},
        {"weight", n.weight ? nlohmann::json(*n.weight) : nlohmann::json()},
        {"resource-demands", n.resource_demands},
        {"sub-trajectory", n.sub_trajectory ? nlohmann::json(*n.sub_trajectory) : nlohmann::json()},
    };
}

void from_json(const nlohmann::json& j, Node& n) {
    n = Node{};
    n.id = j.at("id").get<std::string>();
    n.goal = j.at("goal").get<Goal>();
    if (!j.at("operation").is_null()) n.operation = j["operation"].get<Operation>();
    n.context = j.at("context").get<ContextRef>();
    n.state = node_state_from(j.at("state").get<std::string>());
    n.followups = j.at("followups").get<std::vector<Goal>>();
    if (j.contains("weight") && !j["weight"].is_null()) n.weight = j["weight"].get<double>();
    if (j.contains("resource-demands")) {
        n.resource_demands = j["resource-demands"].get<std::map<std::string, double>>();
    }
    if (j.contains("sub-trajectory") && !j["sub-trajectory"].is_null()) {
        n.sub_trajectory = j["sub-trajectory"].get<std::string>();
    }
}

void to_json(nlohmann::json& j, const EnvState& e) {
    j = nlohmann::json{
        {"workspace-root", e.workspace_root},
        {"installed-artifacts", e.installed_artifacts},
        {"completed-goals", e.completed_goals},
        {"status", env_status_name(e.status)},
    };
}

void from_json(const nlohmann::json& j, EnvState& e) {
    e = EnvState{};
    e.workspace_root = j.at("workspace-root").get<std::string>();
    e.installed_artifacts = j.at("installed-artifacts").get<std::set<std::string>>();
    e.completed_goals = j.at("completed-goals").get<std::set<std::string>>();
    e.status = env_status_from(j.at("status").get<std::string>());
}

} // namespace agentizer
