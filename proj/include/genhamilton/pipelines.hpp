#pragma once

// End-to-end analyses behind the command line tool: group files, character
// table files, the brute-force oracle, the L2(q) arithmetic check, and
// character table generation from listed maximal subgroups.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genhamilton/characters.hpp"
#include "genhamilton/criteria.hpp"
#include "genhamilton/element_graph.hpp"
#include "genhamilton/error.hpp"
#include "genhamilton/generating_graph.hpp"
#include "genhamilton/group_algorithms.hpp"
#include "genhamilton/io.hpp"
#include "genhamilton/perm_group.hpp"

namespace genhamilton {

inline constexpr const char* kNoCharacters = "no prim. perm. characters";

struct AnalysisOptions {
  std::uint64_t order_cap = kDefaultOrderCap;
  std::uint64_t quotient_cap = kDefaultQuotientCap;
  std::uint64_t oracle_cap = kDefaultOracleCap;
  std::uint64_t search_budget = kDefaultSearchBudget;
  unsigned threads = 0;
  Rules rules = Rules::exact;
};

/// Result of either pipeline.  `info` is absent only for a character table
/// without permutation characters.
struct Analysis {
  std::string name;
  std::string source;  // "group" or "chartable"
  std::vector<Integer> class_lengths;
  std::optional<DegreeMatrix> matrix;
  std::optional<HamiltonianInfo> info;

  std::string verdict() const { return info ? info->rendered : std::string(kNoCharacters); }
  std::string line() const { return name + ": " + verdict(); }
};

struct PreparedGroup {
  PermGroup group;
  ClassTable classes;
};

/// Builds the group (its faithful transitive constituent if intransitive)
/// and its classes.
inline PreparedGroup prepare_group(const GroupSpec& spec, const AnalysisOptions& options) {
  PermGroup group = group_from_generators(spec.degree, spec.generators, options.order_cap);
  if (!group.orbit_info().transitive) {
    if (spec.normal_subgroups) {
      throw InvalidArgument("explicit normal_subgroups are only supported for transitive groups");
    }
    group = faithful_transitive_constituent(group, options.order_cap);
  }
  ClassTable classes = conjugacy_classes(group);
  return PreparedGroup{std::move(group), std::move(classes)};
}

inline DegreeMatrix exact_degree_matrix(const GroupSpec& spec, const PreparedGroup& prepared,
                                        const AnalysisOptions& options) {
  std::vector<PermGroup> normals;
  if (spec.normal_subgroups) {
    for (const auto& gens : *spec.normal_subgroups) normals.push_back(prepared.group.subgroup_generated_by(gens));
  } else {
    normals = normal_subgroups_above_derived(prepared.group, options.quotient_cap);
  }
  DegreeMatrixOptions matrix_options;
  matrix_options.threads = options.threads;
  return vertex_degree_matrix(prepared.group, prepared.classes, normals, matrix_options);
}

inline Analysis analyze_group(const GroupSpec& spec, const AnalysisOptions& options = {}) {
  const PreparedGroup prepared = prepare_group(spec, options);
  Analysis out;
  out.name = spec.name;
  out.source = "group";
  DegreeMatrix matrix = exact_degree_matrix(spec, prepared, options);
  out.class_lengths = matrix.class_lengths;
  out.info = hamiltonian_cycle_info(matrix, options.rules);
  out.matrix = std::move(matrix);
  return out;
}

inline Analysis analyze_chartable(const CharTableSpec& spec, const AnalysisOptions& options = {}) {
  Analysis out;
  out.name = spec.name;
  out.source = "chartable";
  out.class_lengths = spec.data.class_lengths;
  if (!spec.has_characters || spec.data.characters.empty()) return out;
  DegreeMatrix matrix = lower_bounds_vertex_degrees(spec.data);
  out.info = hamiltonian_cycle_info(matrix, options.rules);
  out.matrix = std::move(matrix);
  return out;
}

struct OracleReport {
  std::string name;
  std::uint64_t group_order = 0;
  SearchResult search;
  bool degrees_match = false;
  /// Literal criteria on the exact matrix and on every closure iterate.
  std::vector<NaiveCriteria> naive;
  HamiltonianInfo info;
  /// The found cycle as elements in cycle notation, on the points the group acts on.
  std::vector<std::string> cycle;

  bool any_criterion() const {
    for (const NaiveCriteria& c : naive) {
      if (c.posa || c.chvatal) return true;
    }
    return false;
  }

  std::string line() const {
    const char* status = search.status == SearchStatus::found  ? "found"
                         : search.status == SearchStatus::none ? "none"
                                                               : "budget exhausted";
    return name + ": hamiltonian cycle " + status + " (" + std::to_string(search.steps) +
           " steps); posa " + (naive.front().posa ? "true" : "false") + ", chvatal " +
           (naive.front().chvatal ? "true" : "false") + "; " + info.rendered;
  }
};

/// Cross-checks the class-wise machinery against the explicit generating
/// graph.  Throws OracleInconsistency when the row sums disagree with the
/// graph degrees, when the interval checker disagrees with the literal
/// criteria, when a found cycle fails verification, or when some closure
/// satisfies a criterion but the search proves there is no cycle.
inline OracleReport run_oracle(const GroupSpec& spec, const AnalysisOptions& options = {}) {
  const PreparedGroup prepared = prepare_group(spec, options);
  if (prepared.group.order() > options.oracle_cap) {
    throw OrderCapExceeded("group order " + std::to_string(prepared.group.order()) + " exceeds the oracle cap " +
                           std::to_string(options.oracle_cap));
  }
  OracleReport report;
  report.name = spec.name;
  report.group_order = prepared.group.order();
  const DegreeMatrix matrix = exact_degree_matrix(spec, prepared, options);
  const ElementGraph graph = adjacency_graph(prepared.group, options.oracle_cap);
  report.degrees_match = degrees_match_matrix(graph, prepared.classes, matrix);
  if (!report.degrees_match) throw OracleInconsistency(spec.name + ": matrix row sums differ from graph degrees");

  report.info = hamiltonian_cycle_info(matrix, options.rules);
  DegreeMatrix iterate = matrix;
  for (const CriterionReport& r : report.info.reports) {
    const NaiveCriteria naive = naive_criteria_check(iterate);
    if (naive.posa != r.bad_for_posa.empty() || naive.chvatal != r.bad_for_chvatal.empty()) {
      throw OracleInconsistency(spec.name + ": interval check disagrees with the literal criteria at closure " +
                                std::to_string(iterate.closure_index));
    }
    report.naive.push_back(naive);
    iterate = closure_bounds(iterate, options.rules);
  }

  if (graph.vertex_count() >= 3) {
    report.search = hamiltonian_cycle_search(graph, options.search_budget);
  } else {
    report.search.status = SearchStatus::none;
  }
  if (report.search.witness && !verify_cycle(graph, *report.search.witness)) {
    throw OracleInconsistency(spec.name + ": search returned an invalid cycle");
  }
  if (report.search.witness) {
    for (const std::size_t v : report.search.witness->order) {
      report.cycle.push_back(graph.vertex_elements[v].to_cycle_string());
    }
  }
  if (report.any_criterion() && report.search.status == SearchStatus::none) {
    throw OracleInconsistency(spec.name + ": a criterion holds but no Hamiltonian cycle exists");
  }
  return report;
}

inline std::string l2q_line(const std::string& name, const L2qReport& r) {
  const auto word = [](bool ok) { return ok ? "pass" : "fail"; };
  return name + ": order>5 " + word(r.large_orders_ok) + ", order2 " + word(r.order2_ok) + ", order3-5 " +
         word(r.order3to5_ok);
}

/// Character table data of the group with the permutation characters of the
/// listed maximal subgroups.  The subgroups are taken as given; only their
/// containment in the group is checked.
inline CharTableSpec make_chartable(const GroupSpec& spec, const AnalysisOptions& options = {}) {
  if (!spec.maximal_subgroups) throw InvalidArgument(spec.name + ": no maximal_subgroups listed");
  const PermGroup group = group_from_generators(spec.degree, spec.generators, options.order_cap);
  const ClassTable classes = conjugacy_classes(group);
  CharTableSpec out;
  out.name = spec.name;
  out.has_characters = true;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out.data.class_lengths.emplace_back(classes.sizes[i]);
    out.data.element_orders.emplace_back(classes.orders[i]);
  }
  for (const auto& gens : *spec.maximal_subgroups) {
    const PermGroup sub = group.subgroup_generated_by(gens);
    out.data.characters.push_back(permutation_character(group, sub, classes));
  }
  return out;
}

// Machine-readable reports.  Every rational is written as a string "n" or
// "p/q" so that values beyond 64 bits survive.

inline Json rational_to_json(const Rational& value) { return Json(to_string(value)); }

inline Json criterion_report_to_json(const CriterionReport& report, std::size_t closure) {
  const auto intervals = [](const std::vector<Interval>& list) {
    Json arr = Json::array();
    for (const Interval& iv : list) arr.push_back(Json::array({to_string(iv.low), to_string(iv.high)}));
    return arr;
  };
  Json data = Json::array();
  for (const DataTriple& t : report.data) {
    Json entry = Json::object();
    entry["bound"] = to_string(t.bound);
    entry["class_length"] = to_string(t.class_length);
    entry["class_index"] = t.class_index;
    data.push_back(std::move(entry));
  }
  Json out = Json::object();
  out["closure"] = closure;
  out["bad_for_posa"] = intervals(report.bad_for_posa);
  out["bad_for_chvatal"] = intervals(report.bad_for_chvatal);
  out["data"] = std::move(data);
  return out;
}

inline Json analysis_to_json(const Analysis& a) {
  Json out = Json::object();
  out["name"] = a.name;
  out["source"] = a.source;
  out["verdict"] = a.verdict();
  const auto index = [](const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); };
  out["posa_closure"] = a.info ? index(a.info->posa_closure) : Json(nullptr);
  out["chvatal_closure"] = a.info ? index(a.info->chvatal_closure) : Json(nullptr);
  Json lengths = Json::array();
  for (const Integer& c : a.class_lengths) lengths.push_back(to_string(c));
  out["class_lengths"] = std::move(lengths);
  Json matrix = nullptr;
  if (a.matrix) {
    matrix = Json::array();
    for (const auto& row : a.matrix->entries) {
      Json r = Json::array();
      for (const Rational& x : row) r.push_back(rational_to_json(x));
      matrix.push_back(std::move(r));
    }
  }
  out["degree_matrix"] = std::move(matrix);
  Json iterations = Json::array();
  if (a.info) {
    for (std::size_t i = 0; i < a.info->reports.size(); ++i) {
      iterations.push_back(criterion_report_to_json(a.info->reports[i], i));
    }
  }
  out["iterations"] = std::move(iterations);
  return out;
}

inline Json oracle_to_json(const OracleReport& r) {
  Json out = Json::object();
  out["name"] = r.name;
  out["group_order"] = r.group_order;
  out["search"] = r.search.status == SearchStatus::found  ? "found"
                  : r.search.status == SearchStatus::none ? "none"
                                                          : "budget_exhausted";
  out["steps"] = r.search.steps;
  out["witness"] = r.search.witness ? Json(r.cycle) : Json(nullptr);
  Json naive = Json::array();
  for (const NaiveCriteria& c : r.naive) naive.push_back(Json::object({{"posa", c.posa}, {"chvatal", c.chvatal}}));
  out["criteria_per_closure"] = std::move(naive);
  out["verdict"] = r.info.rendered;
  return out;
}

inline Json l2q_to_json(const std::string& name, const L2qReport& r) {
  Json out = Json::object();
  out["name"] = name;
  out["large_orders"] = r.large_orders_ok;
  out["order2"] = r.order2_ok;
  out["order3to5"] = r.order3to5_ok;
  return out;
}

}  // namespace genhamilton
