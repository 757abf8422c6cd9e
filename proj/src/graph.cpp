#include "agentizer/graph.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <sstream>

#include "agentizer/errors.hpp"

namespace agentizer {

TaskGraph::TaskGraph(Node root) {
    root_ = root.id;
    add_node(std::move(root));
}

const Node& TaskGraph::node(const std::string& id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) {
        throw EngineError(Errc::unknown_node, id);
    }
    return it->second;
}

Node& TaskGraph::node_mut(const std::string& id) {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) {
        throw EngineError(Errc::unknown_node, id);
    }
    return it->second;
}

void TaskGraph::add_node(Node n) {
    if (nodes_.count(n.id)) {
        throw EngineError(Errc::precondition, "duplicate node id: " + n.id);
    }
    if (n.weight && *n.weight <= 0.0) {
        throw EngineError(Errc::precondition, "node weight must be strictly positive: " + n.id);
    }
    if (root_.empty()) {
        root_ = n.id;
    }
    ordinal_[n.id] = creation_order_.size();
    creation_order_.push_back(n.id);
    preds_[n.id];
    succs_[n.id];
    nodes_.emplace(n.id, std::move(n));
}

bool TaskGraph::reachable(const std::string& from, const std::string& to) const {
    std::deque<std::string> work{from};
    std::set<std::string> seen{from};
    while (!work.empty()) {
        std::string cur = work.front();
        work.pop_front();
        if (cur == to) {
            return true;
        }
        auto it = succs_.find(cur);
        if (it == succs_.end()) continue;
        for (const auto& nxt : it->second) {
            if (seen.insert(nxt).second) {
                work.push_back(nxt);
            }
        }
    }
    return false;
}

bool TaskGraph::would_cycle(const std::string& from, const std::string& to) const {
    return from == to || reachable(to, from);
}

void TaskGraph::add_edge(const std::string& from, const std::string& to) {
    if (!has_node(from)) throw EngineError(Errc::unknown_node, from);
    if (!has_node(to)) throw EngineError(Errc::unknown_node, to);
    if (edges_.count({from, to})) {
        return; // already present
    }
    if (would_cycle(from, to)) {
        throw EngineError(Errc::cycle_detected, from + " -> " + to);
    }
    edges_.insert({from, to});
    succs_[from].push_back(to);
    preds_[to].push_back(from);
}

size_t TaskGraph::ordinal(const std::string& id) const {
    auto it = ordinal_.find(id);
    if (it == ordinal_.end()) {
        throw EngineError(Errc::unknown_node, id);
    }
    return it->second;
}

const std::vector<std::string>& TaskGraph::predecessors(const std::string& id) const {
    auto it = preds_.find(id);
    if (it == preds_.end()) {
        throw EngineError(Errc::unknown_node, id);
    }
    return it->second;
}

const std::vector<std::string>& TaskGraph::successors(const std::string& id) const {
    auto it = succs_.find(id);
    if (it == succs_.end()) {
        throw EngineError(Errc::unknown_node, id);
    }
    return it->second;
}

std::vector<std::string> TaskGraph::topological_order() const {
    std::map<std::string, size_t> indeg;
    for (const auto& [id, _] : nodes_) {
        indeg[id] = preds_.at(id).size();
    }
    // ready candidates sorted by creation ordinal
    auto by_ordinal = [this](const std::string& a, const std::string& b) {
        return ordinal_.at(a) < ordinal_.at(b);
    };
    std::set<std::string, decltype(by_ordinal)> ready(by_ordinal);
    for (const auto& [id, d] : indeg) {
        if (d == 0) ready.insert(id);
    }
    std::vector<std::string> order;
    order.reserve(nodes_.size());
    while (!ready.empty()) {
        std::string cur = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(cur);
        for (const auto& nxt : succs_.at(cur)) {
            if (--indeg[nxt] == 0) {
                ready.insert(nxt);
            }
        }
    }
    if (order.size() != nodes_.size()) {
        // unreachable while the add_edge cycle check holds
        throw EngineError(Errc::cycle_detected, "graph is not acyclic");
    }
    return order;
}

void TaskGraph::validate() const {
    for (const auto& [from, to] : edges_) {
        if (!has_node(from) || !has_node(to)) {
            throw EngineError(Errc::unknown_node, from + " -> " + to);
        }
    }
    (void)topological_order(); // throws if cyclic
    std::vector<std::string> roots;
    for (const auto& [id, _] : nodes_) {
        if (preds_.at(id).empty()) {
            roots.push_back(id);
        }
    }
    if (roots.size() != 1 || roots.front() != root_) {
        throw EngineError(Errc::precondition,
                          "graph must have exactly one in-degree-zero node, the root");
    }
}

std::string TaskGraph::to_dot() const {
    std::ostringstream out;
    out << "digraph tasks {\n";
    for (const auto& id : creation_order_) {
        const Node& n = nodes_.at(id);
        out << "  \"" << id << "\" [label=\"" << n.goal.text << "\\n(" << node_state_name(n.state)
            << ")\"];\n";
    }
    for (const auto& [from, to] : edges_) {
        out << "  \"" << from << "\" -> \"" << to << "\";\n";
    }
    out << "}\n";
    return out.str();
}

void validate_demands(const Node& n, const ResourceCaps& caps) {
    for (const auto& [res, cap] : caps.capacities) {
        if (cap <= 0.0) {
            throw EngineError(Errc::precondition, "capacity must be strictly positive: " + res);
        }
    }
    for (const auto& [res, demand] : n.resource_demands) {
        auto it = caps.capacities.find(res);
        if (it != caps.capacities.end() && demand > it->second) {
            throw EngineError(Errc::invalid_demand,
                              "node " + n.id + " demands " + std::to_string(demand) + " of " + res +
                                  " but capacity is " + std::to_string(it->second));
        }
    }
}

std::set<std::string> ready_set(const TaskGraph& graph, const EnvState& env) {
    std::set<std::string> out;
    for (const auto& id : graph.creation_order()) {
        const Node& n = graph.node(id);
        if (n.state != NodeState::pending) continue;
        bool ok = true;
        for (const auto& pred : graph.predecessors(id)) {
            if (graph.node(pred).state != NodeState::done) {
                ok = false;
                break;
            }
        }
        if (ok) {
            for (const auto& input : n.goal.inputs) {
                std::filesystem::path p(input);
                if (p.is_relative()) {
                    p = std::filesystem::path(env.workspace_root) / p;
                }
                if (!std::filesystem::exists(p)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) out.insert(id);
    }
    return out;
}

std::vector<std::string> dispatch_parallel(const TaskGraph& graph,
                                           const std::set<std::string>& ready,
                                           const ResourceCaps& caps) {
    std::vector<std::string> candidates(ready.begin(), ready.end());
    std::sort(candidates.begin(), candidates.end(), [&graph](const auto& a, const auto& b) {
        return graph.ordinal(a) < graph.ordinal(b);
    });
    std::map<std::string, double> used;
    std::vector<std::string> selected;
    int limit = std::max(1, caps.default_parallelism);
    for (const auto& id : candidates) {
        if (static_cast<int>(selected.size()) >= limit) break;
        const Node& n = graph.node(id);
        bool fits = true;
        for (const auto& [res, demand] : n.resource_demands) {
            auto cap = caps.capacities.find(res);
            if (cap != caps.capacities.end() && used[res] + demand > cap->second) {
                fits = false;
                break;
            }
        }
        if (!fits) continue;
        for (const auto& [res, demand] : n.resource_demands) {
            used[res] += demand;
        }
        selected.push_back(id);
    }
    return selected;
}

void to_json(nlohmann::json& j, const TaskGraph& g) {
    nlohmann::json nodes = nlohmann::json::object();
    for (const auto& id : g.creation_order()) {
        nodes[id] = g.node(id);
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [from, to] : g.edges()) {
        edges.push_back({from, to});
    }
    j = nlohmann::json{
        {"nodes", nodes},
        {"edges", edges},
        {"root", g.root()},
        {"creation-order", g.creation_order()},
    };
}

void from_json(const nlohmann::json& j, TaskGraph& g) {
    g = TaskGraph{};
    std::vector<std::string> order = j.at("creation-order").get<std::vector<std::string>>();
    const auto& nodes = j.at("nodes");
    for (const auto& id : order) {
        g.add_node(nodes.at(id).get<Node>());
    }
    for (const auto& e : j.at("edges")) {
        g.add_edge(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    }
}

void to_json(nlohmann::json& j, const ResourceCaps& c) {
    j = nlohmann::json{{"capacities", c.capacities}, {"default-parallelism", c.default_parallelism}};
}

void from_json(const nlohmann::json& j, ResourceCaps& c) {
    c = ResourceCaps{};
    if (j.contains("capacities")) c.capacities = j["capacities"].get<std::map<std::string, double>>();
    c.default_parallelism = j.value("default-parallelism", 1);
}

void to_json(nlohmann::json& j, const RunLimits& l) {
    j = nlohmann::json{{"max-steps", l.max_steps}, {"max-retries", l.max_retries}};
}

void from_json(const nlohmann::json& j, RunLimits& l) {
    l = RunLimits{};
    l.max_steps = j.value("max-steps", 200);
    l.max_retries = j.value("max-retries", 10);
}

} // namespace agentizer
