#include "tml/core.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace tml {

bool payload_is_none(const Payload& p) {
    return std::holds_alternative<std::monostate>(p);
}

std::string payload_to_text(const Payload& p) {
    struct Visitor {
        std::string operator()(std::monostate) const { return "none"; }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, p);
}

const char* action_kind_token(ActionKind k) {
    switch (k) {
        case ActionKind::Create: return "create";
        case ActionKind::Process: return "process";
        case ActionKind::Release: return "release";
        case ActionKind::Receive: return "receive";
        case ActionKind::TransferIn: return "transfer_in";
        case ActionKind::TransferOut: return "transfer_out";
        case ActionKind::Store: return "store";
    }
    return "?";
}

const char* action_kind_label(ActionKind k) {
    switch (k) {
        case ActionKind::Create: return "Create";
        case ActionKind::Process: return "Process";
        case ActionKind::Release: return "Release";
        case ActionKind::Receive: return "Receive";
        case ActionKind::TransferIn: return "Transfer(In)";
        case ActionKind::TransferOut: return "Transfer(Out)";
        case ActionKind::Store: return "Store";
    }
    return "?";
}

std::optional<ActionKind> action_kind_from_token(const std::string& token) {
    if (token == "create") return ActionKind::Create;
    if (token == "process") return ActionKind::Process;
    if (token == "release") return ActionKind::Release;
    if (token == "receive") return ActionKind::Receive;
    if (token == "transfer_in") return ActionKind::TransferIn;
    if (token == "transfer_out") return ActionKind::TransferOut;
    if (token == "store") return ActionKind::Store;
    return std::nullopt;
}

const ActionNode& StaticModel::node(const NodeId& id) const {
    auto it = node_index.find(id);
    if (it == node_index.end())
        throw Error(ErrorCode::UnknownNode, "unknown node: " + id);
    return nodes[static_cast<size_t>(it->second)];
}

const ActionNode* StaticModel::find_node(const NodeId& id) const {
    auto it = node_index.find(id);
    return it == node_index.end() ? nullptr : &nodes[static_cast<size_t>(it->second)];
}

int StaticModel::node_order(const NodeId& id) const {
    auto it = node_index.find(id);
    if (it == node_index.end())
        throw Error(ErrorCode::UnknownNode, "unknown node: " + id);
    return it->second;
}

bool Region::contains_node(const NodeId& id) const {
    return std::find(node_ids.begin(), node_ids.end(), id) != node_ids.end();
}

const Event* DynamicModel::find_event(const std::string& id) const {
    for (const auto& e : events)
        if (e.id == id) return &e;
    return nullptr;
}

int DynamicModel::event_order(const std::string& id) const {
    for (size_t i = 0; i < events.size(); ++i)
        if (events[i].id == id) return static_cast<int>(i);
    return -1;
}

bool BehavioralModel::has_edge(const std::string& from, const std::string& to) const {
    for (const auto& e : edges)
        if (e.from == from && e.to == to) return true;
    return false;
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnknownNode: return "UnknownNode";
        case ErrorCode::EmptyRegion: return "EmptyRegion";
        case ErrorCode::DisconnectedRegion: return "DisconnectedRegion";
        case ErrorCode::RegionModelMismatch: return "RegionModelMismatch";
        case ErrorCode::UnknownEvent: return "UnknownEvent";
        case ErrorCode::DeclaredWithoutWhy: return "DeclaredWithoutWhy";
        case ErrorCode::GuardEvaluation: return "GuardEvaluationError";
        case ErrorCode::ScriptTargetNotInjectable: return "ScriptTargetNotInjectable";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Io: return "IoError";
    }
    return "?";
}

namespace {

void collect_thimacs(const Thimac& t, std::vector<const Thimac*>& out) {
    out.push_back(&t);
    for (const auto& c : t.children) collect_thimacs(c, out);
}

}  // namespace

std::vector<std::string> check_structure(const StaticModel& model) {
    std::vector<std::string> issues;

    std::vector<const Thimac*> thimacs;
    collect_thimacs(model.root, thimacs);

    // hierarchy forms a tree with unique ids
    std::set<std::string> thimac_ids;
    for (const Thimac* t : thimacs) {
        if (t != &model.root && t->name.empty())
            issues.push_back("thimac '" + t->id + "' has an empty name");
        if (!thimac_ids.insert(t->id).second)
            issues.push_back("duplicate thimac id '" + t->id + "'");
    }

    // node ids unique model-wide and consistent with the index
    std::set<NodeId> seen;
    for (size_t i = 0; i < model.nodes.size(); ++i) {
        const ActionNode& n = model.nodes[i];
        if (!seen.insert(n.id).second)
            issues.push_back("duplicate node id '" + n.id + "'");
        auto it = model.node_index.find(n.id);
        if (it == model.node_index.end() || it->second != static_cast<int>(i))
            issues.push_back("node index out of sync for '" + n.id + "'");
        if (!thimac_ids.count(n.owner))
            issues.push_back("node '" + n.id + "' owned by unknown thimac '" + n.owner + "'");
    }

    // ownership sets disjoint and resolvable
    std::set<NodeId> owned;
    for (const Thimac* t : thimacs) {
        for (const NodeId& id : t->action_node_ids) {
            if (!model.node_index.count(id))
                issues.push_back("thimac '" + t->id + "' lists unknown node '" + id + "'");
            if (!owned.insert(id).second)
                issues.push_back("node '" + id + "' owned by more than one thimac");
        }
    }
    for (const ActionNode& n : model.nodes)
        if (!owned.count(n.id))
            issues.push_back("node '" + n.id + "' not listed by any thimac");

    // arcs resolve, ids are the declaration index
    for (size_t i = 0; i < model.arcs.size(); ++i) {
        const Arc& a = model.arcs[i];
        if (a.id != static_cast<int>(i))
            issues.push_back("arc id out of sequence at position " + std::to_string(i));
        if (!model.node_index.count(a.source))
            issues.push_back("arc " + std::to_string(a.id) + " has unknown source '" + a.source + "'");
        if (!model.node_index.count(a.target))
            issues.push_back("arc " + std::to_string(a.id) + " has unknown target '" + a.target + "'");
        if (a.guard && a.guard->kind == GuardKind::CountReached && a.guard->count < 1)
            issues.push_back("arc " + std::to_string(a.id) + " count guard below 1");
    }

    return issues;
}

Region induced_region(const StaticModel& model, const std::set<NodeId>& node_ids) {
    if (node_ids.empty())
        throw Error(ErrorCode::EmptyRegion, "region requires at least one node");
    for (const NodeId& id : node_ids)
        if (!model.has_node(id))
            throw Error(ErrorCode::UnknownNode, "unknown node in region: " + id);

    Region region;
    region.node_ids.assign(node_ids.begin(), node_ids.end());
    std::sort(region.node_ids.begin(), region.node_ids.end(),
              [&](const NodeId& a, const NodeId& b) {
                  return model.node_order(a) < model.node_order(b);
              });

    std::map<NodeId, std::vector<NodeId>> undirected;
    for (const Arc& a : model.arcs) {
        if (node_ids.count(a.source) && node_ids.count(a.target)) {
            region.arc_ids.push_back(a.id);
            undirected[a.source].push_back(a.target);
            undirected[a.target].push_back(a.source);
        }
    }

    // weak connectivity over the induced subdiagram
    std::set<NodeId> visited;
    std::deque<NodeId> frontier{region.node_ids.front()};
    while (!frontier.empty()) {
        NodeId cur = frontier.front();
        frontier.pop_front();
        if (!visited.insert(cur).second) continue;
        for (const NodeId& next : undirected[cur]) frontier.push_back(next);
    }
    if (visited.size() != node_ids.size())
        throw Error(ErrorCode::DisconnectedRegion,
                    "region is not weakly connected (" + std::to_string(visited.size()) +
                        " of " + std::to_string(node_ids.size()) + " nodes reachable)");

    return region;
}

std::vector<ArcId> static_connectivity(const StaticModel& model,
                                       const Region& from,
                                       const Region& to) {
    for (const NodeId& id : from.node_ids)
        if (!model.has_node(id))
            throw Error(ErrorCode::RegionModelMismatch, "'from' region names unknown node " + id);
    for (const NodeId& id : to.node_ids)
        if (!model.has_node(id))
            throw Error(ErrorCode::RegionModelMismatch, "'to' region names unknown node " + id);

    std::set<NodeId> src(from.node_ids.begin(), from.node_ids.end());
    std::set<NodeId> dst(to.node_ids.begin(), to.node_ids.end());

    std::vector<ArcId> result;
    for (const Arc& a : model.arcs)
        if (src.count(a.source) && dst.count(a.target)) result.push_back(a.id);
    return result;
}

}  // namespace tml
