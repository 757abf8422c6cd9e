#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "agentizer/ids.hpp"

namespace agentizer {

enum class GoalOrigin { repo_root, todo_derived, validation, knowledge };

const char* goal_origin_name(GoalOrigin o);
GoalOrigin goal_origin_from(const std::string& s);

struct Goal {
    std::string id;
    std::string text;
    GoalOrigin origin = GoalOrigin::todo_derived;
    // Declared input artifacts (workspace-relative); gates the node's
    // pre-predicate together with DAG predecessors.
    std::vector<std::string> inputs;

    bool operator==(const Goal&) const = default;
};

enum class ContextKind { doc_slice, code_slice, command, command_output, configuration, artifact_path };

const char* context_kind_name(ContextKind k);
ContextKind context_kind_from(const std::string& s);

struct ContextItem {
    ContextKind kind = ContextKind::doc_slice;
    std::string payload;
    std::optional<std::string> source_node;

    // dedup key is kind+payload only
    uint64_t dedup_hash() const;

    bool operator==(const ContextItem& o) const {
        return kind == o.kind && payload == o.payload && source_node == o.source_node;
    }
};

// payload must be non-empty; artifact-path payloads must exist on disk
ContextItem make_context_item(ContextKind kind, std::string payload,
                              std::optional<std::string> source_node = std::nullopt);

// Append-only ordered set of context items, deduplicated by kind+payload.
class Context {
public:
    const std::vector<ContextItem>& items() const { return items_; }
    size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    bool contains(const ContextItem& it) const { return seen_.count(it.dedup_hash()) > 0; }

    // returns the number of newly appended items
    size_t append(const ContextItem& it);
    size_t append_all(const std::vector<ContextItem>& items);

    uint64_t digest() const { return digest_prefix(items_.size()); }
    uint64_t digest_prefix(size_t n) const;

    bool operator==(const Context& o) const { return items_ == o.items_; }

private:
    std::vector<ContextItem> items_;
    std::unordered_set<uint64_t> seen_;
};

// Eq.-style set union with order preservation: base items first, then the
// not-yet-present items of the increment in their given order.
Context context_merge(const Context& base, const std::vector<ContextItem>& increment);

enum class NodeState { pending, running, done, failed };

const char* node_state_name(NodeState s);
NodeState node_state_from(const std::string& s);

// pending->running, running->done, running->failed, failed->pending (retry)
bool transition_legal(NodeState from, NodeState to);

struct Operation {
    std::string tool;
    nlohmann::json arguments = nlohmann::json::object();
    std::string rationale;

    bool operator==(const Operation&) const = default;
};

// A node references its context as a prefix of the trajectory context
// (contexts are append-only, so a length + digest pins the snapshot).
struct ContextRef {
    uint64_t length = 0;
    std::string digest;

    bool operator==(const ContextRef&) const = default;
};

struct Node {
    std::string id;
    Goal goal;
    std::optional<Operation> operation; // empty while pending
    ContextRef context;
    NodeState state = NodeState::pending;
    std::vector<Goal> followups; // empty until the operation has been applied
    std::optional<double> weight;
    std::map<std::string, double> resource_demands;
    // set on proxy nodes whose execution is delegated to a sub-trajectory
    std::optional<std::string> sub_trajectory;

    bool operator==(const Node&) const = default;
};

// throws EngineError(illegal-transition) on any move outside the table
void transition_state(Node& node, NodeState target);

enum class EnvStatus { in_progress, finished, failed };

const char* env_status_name(EnvStatus s);
EnvStatus env_status_from(const std::string& s);

struct EnvState {
    std::string workspace_root;
    std::set<std::string> installed_artifacts;
    std::set<std::string> completed_goals;
    EnvStatus status = EnvStatus::in_progress;

    bool operator==(const EnvState&) const = default;
};

void to_json(nlohmann::json& j, const Goal& g);
void from_json(const nlohmann::json& j, Goal& g);
void to_json(nlohmann::json& j, const ContextItem& it);
void from_json(const nlohmann::json& j, ContextItem& it);
void to_json(nlohmann::json& j, const Context& c);
void from_json(const nlohmann::json& j, Context& c);
void to_json(nlohmann::json& j, const Operation& op);
void from_json(const nlohmann::json& j, Operation& op);
void to_json(nlohmann::json& j, const ContextRef& r);
void from_json(const nlohmann::json& j, ContextRef& r);
void to_json(nlohmann::json& j, const Node& n);
void from_json(const nlohmann::json& j, Node& n);
void to_json(nlohmann::json& j, const EnvState& e);
void from_json(const nlohmann::json& j, EnvState& e);

} // namespace agentizer
