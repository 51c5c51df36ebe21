#include "sfckit/core/validate.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace sfckit::core {

namespace {

void check_identifier(std::string_view name, std::string_view what,
                      std::vector<Diagnostic>& out) {
  if (!is_valid_identifier(name)) {
    std::ostringstream msg;
    msg << what << " name is not a valid IEC identifier";
    out.push_back({DiagCode::BadIdentifier, Severity::Error, std::string(name), msg.str()});
  }
}

}  // namespace

std::vector<Diagnostic> validate_reduced(const ReducedSfc& sfc, bool strict) {
  std::vector<Diagnostic> out;

  // (1) Exactly one initial step.
  std::vector<std::string> initials;
  for (const auto& s : sfc.steps) {
    if (s.is_initial) initials.push_back(s.name);
  }
  if (initials.empty()) {
    out.push_back({DiagCode::InitStepError, Severity::Error, "",
                   "chart has no initial step"});
  } else if (initials.size() > 1) {
    std::ostringstream msg;
    msg << "chart has " << initials.size() << " initial steps (";
    for (std::size_t i = 0; i < initials.size(); ++i) {
      if (i) msg << ", ";
      msg << initials[i];
    }
    msg << ")";
    out.push_back({DiagCode::InitStepError,
                   strict ? Severity::Error : Severity::Warning, initials[1], msg.str()});
  }

  // Step names: identifiers and uniqueness (case-insensitive per IEC).
  std::unordered_set<std::string> seen_steps;
  for (const auto& s : sfc.steps) {
    check_identifier(s.name, "step", out);
    auto folded = ident_fold(s.name);
    if (!seen_steps.insert(folded).second) {
      out.push_back({DiagCode::DuplicateName, Severity::Error, s.name,
                     "step name declared more than once"});
    }
  }

  // (2) Complete transition targets; guards must be present.
  for (const auto& s : sfc.steps) {
    for (const auto& e : s.children) {
      if (sfc.find_step(e.target) == nullptr) {
        std::ostringstream msg;
        msg << "transition leaving " << s.name << " has no defined destination step "
            << e.target;
        out.push_back({DiagCode::TransitionError, Severity::Error,
                       s.name + "->" + e.target, msg.str()});
      }
      if (trim(e.guard).empty()) {
        std::ostringstream msg;
        msg << "transition " << s.name << "->" << e.target << " has an empty guard";
        out.push_back({DiagCode::TransitionError, Severity::Error,
                       s.name + "->" + e.target, msg.str()});
      }
    }
  }

  // Variables: identifiers and per-section uniqueness.
  std::set<std::pair<int, std::string>> seen_vars;
  for (const auto& v : sfc.variables) {
    check_identifier(v.name, "variable", out);
    auto key = std::make_pair(static_cast<int>(v.section), ident_fold(v.name));
    if (!seen_vars.insert(key).second) {
      std::ostringstream msg;
      msg << "variable declared more than once in section " << to_string(v.section);
      out.push_back({DiagCode::DuplicateName, Severity::Error, v.name, msg.str()});
    }
  }

  return out;
}

BranchGrouping branch_groups(const ReducedSfc& sfc) {
  auto diags = validate_reduced(sfc, true);
  if (has_errors(diags)) {
    throw std::invalid_argument("branch_groups: chart fails validation: " +
                                render(diags.front()));
  }

  BranchGrouping grouping;
  grouping.per_step.reserve(sfc.steps.size());
  for (const auto& s : sfc.steps) {
    std::vector<BranchGroup> groups;
    std::unordered_map<std::string, std::size_t> by_guard;
    for (std::size_t i = 0; i < s.children.size(); ++i) {
      std::string key{trim(s.children[i].guard)};
      auto it = by_guard.find(key);
      if (it == by_guard.end()) {
        by_guard.emplace(key, groups.size());
        groups.push_back({key, {i}, false});
      } else {
        groups[it->second].edges.push_back(i);
      }
    }
    for (auto& g : groups) g.parallel = g.edges.size() >= 2;
    grouping.per_step.push_back(std::move(groups));
  }
  return grouping;
}

StatsRecord topology_stats(const ReducedSfc& sfc) {
  StatsRecord r;
  r.steps = sfc.steps.size();
  for (const auto& s : sfc.steps) {
    r.edges += s.children.size();
    r.max_out_degree = std::max(r.max_out_degree, s.children.size());
    for (const auto& e : s.children) {
      if (e.is_jump) ++r.jumps;
    }
  }
  // Parallel-group count delegates to branch_groups when the chart validates;
  // invalid charts still get the scan-based counts above.
  auto diags = validate_reduced(sfc, true);
  if (!has_errors(diags)) {
    auto grouping = branch_groups(sfc);
    for (const auto& step_groups : grouping.per_step) {
      for (const auto& g : step_groups) {
        if (g.parallel) ++r.parallel_groups;
      }
    }
  }
  return r;
}

}  // namespace sfckit::core
