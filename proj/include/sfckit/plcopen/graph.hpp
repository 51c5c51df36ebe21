#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfckit/core/diagnostics.hpp"
#include "sfckit/core/model.hpp"

namespace sfckit::plcopen {

enum class NodeKind {
  InitialStep,
  Step,
  Transition,
  SelectionDivergence,
  SelectionConvergence,
  SimultaneousDivergence,
  SimultaneousConvergence,
  JumpStep,
};

std::string_view to_string(NodeKind k);

struct GraphNode {
  int id = 0;
  NodeKind kind = NodeKind::Step;
  std::string guard;        // Transition only
  std::string jump_target;  // JumpStep only: target step name
  std::vector<int> parents; // order significant for convergences
  // Divergence nodes carry explicit branch order (PLCopen keeps it in the
  // order of the divergence's out connection points).
  std::vector<int> ordered_children;
};

// PLCopen-style topology: branching expressed purely through divergence and
// convergence nodes; every non-initial step has at most one parent and one
// child connection.
struct NormalizedGraph {
  std::vector<GraphNode> nodes;            // document order
  std::map<int, std::string> names;        // step id -> identifier
  std::map<int, std::string> actions;      // step id -> ST source (present == has action)
  std::map<int, std::string> comments;     // step id -> comment text

  const GraphNode* node(int id) const;
  // Children in document order; divergence nodes use their stored order.
  std::vector<int> children_of(int id) const;
  int initial_step() const;  // -1 when absent
  int step_by_name(std::string_view name) const;
};

// Raised by normalize on inconsistent reconvergence and by denormalize on
// alternation/arity violations. `node_id` is -1 when no single node applies.
class GraphError : public std::runtime_error {
 public:
  GraphError(int node_id, const std::string& message)
      : std::runtime_error(message), node_id_(node_id) {}
  int node_id() const { return node_id_; }

 private:
  int node_id_ = -1;
};

// Infers divergence/convergence structure from guard texts: a parallel group
// (identical guards) becomes one transition followed by a simultaneous
// divergence; distinct guards become a selection divergence with per-branch
// transitions; identical guards from sole-edge sources into one target become
// a simultaneous convergence with the transition below it.
// Throws core::ChartValidationError (invalid chart) or GraphError
// (inconsistent reconvergence).
NormalizedGraph normalize(const core::ReducedSfc& sfc);

// Elides divergence/convergence nodes back into guarded child edges.
// denormalize(normalize(s)) == s for charts whose parallel groups are
// edge-contiguous. Throws GraphError on malformed graphs.
core::ReducedSfc denormalize(const NormalizedGraph& graph);

// Structural invariant check used by denormalize and the safety layer;
// returns diagnostics instead of throwing.
std::vector<core::Diagnostic> check_graph(const NormalizedGraph& graph);

}  // namespace sfckit::plcopen

namespace sfckit::core {

// Thrown by operations whose precondition is a chart passing validate_reduced.
class ChartValidationError : public std::runtime_error {
 public:
  explicit ChartValidationError(std::vector<Diagnostic> diags)
      : std::runtime_error(diags.empty()
                               ? "chart failed validation"
                               : "chart failed validation: " + render(diags.front())),
        diags_(std::move(diags)) {}
  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

 private:
  std::vector<Diagnostic> diags_;
};

}  // namespace sfckit::core
