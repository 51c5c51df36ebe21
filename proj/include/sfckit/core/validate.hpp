#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sfckit/core/diagnostics.hpp"
#include "sfckit/core/model.hpp"

namespace sfckit::core {

// Checks the ReducedSfc invariants and reports every problem as a diagnostic.
// strict=false downgrades multiple-initial-steps to a warning (the IEC standard
// permits several; a single entry point is enforced in strict mode).
std::vector<Diagnostic> validate_reduced(const ReducedSfc& sfc, bool strict = true);

// One group of outgoing edges of a single step. Edges with byte-identical
// trimmed guard text and group size >= 2 form a parallel group; the rest are
// alternative singletons.
struct BranchGroup {
  std::string guard;                  // trimmed guard text shared by the group
  std::vector<std::size_t> edges;     // indices into StepNode::children, chart order
  bool parallel = false;
};

struct BranchGrouping {
  // One entry per step, chart order; groups ordered by first-edge position.
  std::vector<std::vector<BranchGroup>> per_step;
};

// Deterministic partition of each step's outgoing edges by the identical-guard
// rule. Throws std::invalid_argument when the chart fails validation.
BranchGrouping branch_groups(const ReducedSfc& sfc);

struct StatsRecord {
  std::size_t steps = 0;
  std::size_t edges = 0;
  std::size_t jumps = 0;
  std::size_t parallel_groups = 0;
  std::size_t max_out_degree = 0;

  bool operator==(const StatsRecord&) const = default;
};

StatsRecord topology_stats(const ReducedSfc& sfc);

}  // namespace sfckit::core
