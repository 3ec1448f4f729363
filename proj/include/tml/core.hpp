#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace tml {

// ---------------------------------------------------------------------------
// Identifiers and payloads
// ---------------------------------------------------------------------------

using NodeId = std::string;  // canonical dotted path, e.g. "keypad.digit1.create"
using ArcId = int;           // declaration index within the model
using ThingId = int;
using Tick = int;

// Scalar payload carried by things, stored by Store nodes, and injected by
// scripts. monostate means "no payload".
using Payload = std::variant<std::monostate, long long, bool, std::string>;

bool payload_is_none(const Payload& p);
std::string payload_to_text(const Payload& p);  // canonical textual form

// ---------------------------------------------------------------------------
// Static model
// ---------------------------------------------------------------------------

enum class ActionKind {
    Create,
    Process,
    Release,
    Receive,
    TransferIn,
    TransferOut,
    Store,
};

constexpr int kActionKindCount = 7;

const char* action_kind_token(ActionKind k);   // "transfer_in" style (paths)
const char* action_kind_label(ActionKind k);   // "Transfer(In)" style (reports)
std::optional<ActionKind> action_kind_from_token(const std::string& token);

enum class ArcKind { Flow, Trigger };

enum class GuardKind { Equal, NotEqual, CountReached };

struct Guard {
    GuardKind kind = GuardKind::Equal;
    NodeId store;   // resolved Store node (Equal/NotEqual)
    int count = 0;  // CountReached threshold, >= 1

    bool operator==(const Guard&) const = default;
};

struct ActionNode {
    NodeId id;
    std::string owner;       // id (path) of the owning thimac
    ActionKind kind = ActionKind::Create;
    std::string thing_type;  // label of the thing this node handles
    Payload initial;         // Store preload / Create default payload
};

struct Arc {
    ArcId id = 0;
    ArcKind kind = ArcKind::Flow;
    NodeId source;
    NodeId target;
    std::optional<Guard> guard;
};

struct Thimac {
    std::string id;    // dotted path, "" only for the root
    std::string name;  // display string, defaults to the last path segment
    std::vector<Thimac> children;
    std::vector<NodeId> action_node_ids;  // declaration order
};

// The single unified model: a thimac tree whose machines contain action nodes
// joined by flow and trigger arcs.
struct StaticModel {
    std::string name;
    Thimac root;
    std::vector<ActionNode> nodes;  // declaration order
    std::vector<Arc> arcs;          // declaration order, id == index
    std::map<NodeId, int> node_index;

    const ActionNode& node(const NodeId& id) const;
    const ActionNode* find_node(const NodeId& id) const;
    int node_order(const NodeId& id) const;  // declaration index
    bool has_node(const NodeId& id) const { return node_index.count(id) != 0; }
};

// Structural invariants: tree-shaped hierarchy, unique ids, resolvable arc
// endpoints, non-empty thimac names, guard sanity. Returns one message per
// violation; empty means structurally valid.
std::vector<std::string> check_structure(const StaticModel& model);

// ---------------------------------------------------------------------------
// Regions, events, behavior
// ---------------------------------------------------------------------------

// A weakly connected induced subdiagram of a static model. Canonical form:
// node_ids sorted by declaration index, arc_ids ascending.
struct Region {
    std::vector<NodeId> node_ids;
    std::vector<ArcId> arc_ids;

    bool operator==(const Region&) const = default;
    bool contains_node(const NodeId& id) const;
};

struct Event {
    std::string id;
    std::string label;
    Region region;
    std::string time_note;  // free text, may be empty
};

struct DynamicModel {
    std::string model_ref;      // StaticModel name this catalog was built for
    std::vector<Event> events;  // catalog order

    const Event* find_event(const std::string& id) const;
    int event_order(const std::string& id) const;  // catalog index, -1 if absent
};

enum class EdgeKind { DerivedFlow, DeclaredChronology };

struct BehaviorEdge {
    std::string from;
    std::string to;
    EdgeKind kind = EdgeKind::DerivedFlow;
    std::string why;  // required for DeclaredChronology

    bool operator==(const BehaviorEdge&) const = default;
};

struct BehavioralModel {
    std::string model_ref;  // static-model name (mirrors the dynamic model)
    std::vector<std::pair<std::string, std::string>> event_catalog;  // id, label
    std::vector<BehaviorEdge> edges;

    bool has_edge(const std::string& from, const std::string& to) const;
};

// ---------------------------------------------------------------------------
// Things and traces
// ---------------------------------------------------------------------------

struct Thing {
    ThingId id = 0;
    std::string type_label;
    Payload payload;
    NodeId location;
    Tick born_at = 0;
};

struct TraceStep {
    Tick tick = 0;
    NodeId node;
    ActionKind kind = ActionKind::Create;
    std::vector<ThingId> things_in;
    std::vector<ThingId> things_out;
};

struct EventInstance {
    std::string event;
    Tick start = 0;
    Tick end = 0;
};

struct Trace {
    std::string model_name;
    std::string script_name;
    std::vector<TraceStep> steps;               // non-decreasing ticks
    std::vector<EventInstance> event_instances; // end-tick order
    Tick final_tick = 0;
    bool truncated = false;  // stopped by max_ticks while still active
};

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class ErrorCode {
    UnknownNode,
    EmptyRegion,
    DisconnectedRegion,
    RegionModelMismatch,
    UnknownEvent,
    DeclaredWithoutWhy,
    GuardEvaluation,
    ScriptTargetNotInjectable,
    InvalidArgument,
    Io,
};

const char* error_code_name(ErrorCode code);

struct Error : std::runtime_error {
    ErrorCode code;
    Error(ErrorCode c, const std::string& message)
        : std::runtime_error(message), code(c) {}
};

// ---------------------------------------------------------------------------
// Core operations
// ---------------------------------------------------------------------------

// Region induced by a node set: the nodes plus every arc with both endpoints
// inside the set. Throws UnknownNode, EmptyRegion, or DisconnectedRegion.
Region induced_region(const StaticModel& model, const std::set<NodeId>& node_ids);

// All arcs (flow or trigger) whose source lies in `from` and target in `to`.
// Arcs internal to the intersection count only when source and target fall in
// the respective sets. Throws RegionModelMismatch if a region names a node
// the model lacks.
std::vector<ArcId> static_connectivity(const StaticModel& model,
                                       const Region& from,
                                       const Region& to);

}  // namespace tml
