#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "agentizer/model.hpp"

namespace agentizer {

// Setup DAG. Cycle-checked on every edge insertion; node creation order is
// kept for deterministic topological tie-breaks.
class TaskGraph {
public:
    TaskGraph() = default;
    explicit TaskGraph(Node root);

    const std::string& root() const { return root_; }
    bool has_node(const std::string& id) const { return nodes_.count(id) > 0; }
    const Node& node(const std::string& id) const;
    Node& node_mut(const std::string& id);
    size_t node_count() const { return nodes_.size(); }

    // non-root nodes must be wired to a parent with add_edge right after
    void add_node(Node n);

    // throws cycle-detected (graph unchanged) or unknown-node
    void add_edge(const std::string& from, const std::string& to);

    bool would_cycle(const std::string& from, const std::string& to) const;

    const std::set<std::pair<std::string, std::string>>& edges() const { return edges_; }
    const std::vector<std::string>& creation_order() const { return creation_order_; }
    size_t ordinal(const std::string& id) const;
    const std::vector<std::string>& predecessors(const std::string& id) const;
    const std::vector<std::string>& successors(const std::string& id) const;

    // Kahn's algorithm; ties broken by node creation ordinal.
    std::vector<std::string> topological_order() const;

    // invariant check: endpoints exist, acyclic, exactly one in-degree-zero
    // node and it is the root
    void validate() const;

    std::string to_dot() const;

private:
    bool reachable(const std::string& from, const std::string& to) const;

    std::map<std::string, Node> nodes_;
    std::set<std::pair<std::string, std::string>> edges_;
    std::map<std::string, std::vector<std::string>> preds_;
    std::map<std::string, std::vector<std::string>> succs_;
    std::vector<std::string> creation_order_;
    std::map<std::string, size_t> ordinal_;
    std::string root_;
};

struct ResourceCaps {
    std::map<std::string, double> capacities; // strictly positive
    int default_parallelism = 1;
};

struct RunLimits {
    int max_steps = 200;
    int max_retries = 10;
};

// throws invalid-demand when a single node's demand exceeds a declared capacity
void validate_demands(const Node& n, const ResourceCaps& caps);

// Pending nodes whose pre-predicate holds: all DAG predecessors done and
// every goal-declared input artifact exists under workspace_root.
std::set<std::string> ready_set(const TaskGraph& graph, const EnvState& env);

// Maximal subset of `ready` that fits the capacities, greedily selected in
// creation-ordinal order, at most default_parallelism nodes.
std::vector<std::string> dispatch_parallel(const TaskGraph& graph,
                                           const std::set<std::string>& ready,
                                           const ResourceCaps& caps);

void to_json(nlohmann::json& j, const TaskGraph& g);
void from_json(const nlohmann::json& j, TaskGraph& g);
void to_json(nlohmann::json& j, const ResourceCaps& c);
void from_json(const nlohmann::json& j, ResourceCaps& c);
void to_json(nlohmann::json& j, const RunLimits& l);
void from_json(const nlohmann::json& j, RunLimits& l);

} // namespace agentizer
