#pragma once

// Explicit generating graphs for small groups, a budgeted backtracking
// search for Hamiltonian cycles, and the literal Posa/Chvatal definitions on
// an expanded degree sequence.  These are oracles for the class-wise code.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genhamilton/error.hpp"
#include "genhamilton/generating_graph.hpp"
#include "genhamilton/perm_group.hpp"
#include "genhamilton/rational.hpp"

namespace genhamilton {

inline constexpr std::uint64_t kDefaultOracleCap = 360;
inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

/// Nonidentity elements of G (in element order), joined iff they generate G.
struct ElementGraph {
  std::vector<Permutation> vertex_elements;
  std::vector<std::vector<char>> adjacency;

  std::size_t vertex_count() const { return vertex_elements.size(); }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency[u][v] != 0; }
};

inline ElementGraph adjacency_graph(const PermGroup& group, std::uint64_t oracle_cap = kDefaultOracleCap) {
  detail::require_transitive(group);
  if (group.order() > oracle_cap) {
    throw OrderCapExceeded("group order " + std::to_string(group.order()) +
                           " exceeds the oracle cap " + std::to_string(oracle_cap));
  }
  ElementGraph graph;
  for (std::size_t e = 1; e < group.order(); ++e) graph.vertex_elements.push_back(group.element(e));
  const std::size_t v = graph.vertex_elements.size();
  graph.adjacency.assign(v, std::vector<char>(v, 0));
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      const bool edge = detail::generates_transitive(group, graph.vertex_elements[a], graph.vertex_elements[b]);
      graph.adjacency[a][b] = graph.adjacency[b][a] = edge ? 1 : 0;
    }
  }
  return graph;
}

inline std::uint64_t degree_of_vertex(const ElementGraph& graph, std::size_t v) {
  return static_cast<std::uint64_t>(std::count(graph.adjacency[v].begin(), graph.adjacency[v].end(), 1));
}

/// Vertex index of element g (which must be a nonidentity element).
inline std::size_t vertex_of(const ElementGraph& graph, const Permutation& g) {
  const auto it = std::lower_bound(graph.vertex_elements.begin(), graph.vertex_elements.end(), g);
  if (it == graph.vertex_elements.end() || *it != g) throw InvalidArgument("element is not a vertex");
  return static_cast<std::size_t>(it - graph.vertex_elements.begin());
}

/// For every class representative, its degree in the graph equals the row
/// sum of the matrix.
inline bool degrees_match_matrix(const ElementGraph& graph, const ClassTable& classes,
                                 const DegreeMatrix& matrix) {
  matrix.check_dimensions();
  if (classes.size() != matrix.class_lengths.size()) return false;
  for (std::size_t i = 1; i < classes.size(); ++i) {
    const Rational sum = matrix.row_sum(i - 1);
    if (sum != Rational(degree_of_vertex(graph, vertex_of(graph, classes.reps[i])))) return false;
  }
  return true;
}

struct CycleWitness {
  std::vector<std::size_t> order;
};

enum class SearchStatus { found, none, budget_exhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<CycleWitness> witness;
  std::uint64_t steps = 0;
};

inline bool verify_cycle(const ElementGraph& graph, const CycleWitness& witness) {
  const std::size_t v = graph.vertex_count();
  if (witness.order.size() != v || v < 3) return false;
  std::vector<char> seen(v, 0);
  for (const std::size_t x : witness.order) {
    if (x >= v || seen[x]) return false;
    seen[x] = 1;
  }
  for (std::size_t k = 0; k < v; ++k) {
    if (!graph.adjacent(witness.order[k], witness.order[(k + 1) % v])) return false;
  }
  return true;
}

namespace detail {

class CycleSearch {
 public:
  CycleSearch(const ElementGraph& graph, std::uint64_t budget)
      : g_(graph),
        n_(graph.vertex_count()),
        budget_(budget),
        neighbours_(n_),
        visited_(n_, 0),
        free_degree_(n_, 0) {
    for (std::size_t v = 0; v < n_; ++v) {
      for (std::size_t w = 0; w < n_; ++w) {
        if (g_.adjacent(v, w)) neighbours_[v].push_back(w);
      }
    }
  }

  SearchResult run() {
    SearchResult result;
    for (std::size_t v = 0; v < n_; ++v) free_degree_[v] = neighbours_[v].size();
    // Start at a vertex of least degree: it is the most constrained.
    std::size_t start = 0;
    for (std::size_t v = 1; v < n_; ++v) {
      if (neighbours_[v].size() < neighbours_[start].size()) start = v;
    }
    start_ = start;
    visit(start);
    const bool ok = extend();
    result.steps = steps_;
    if (ok) {
      result.status = SearchStatus::found;
      result.witness = CycleWitness{path_};
    } else {
      result.status = exhausted_ ? SearchStatus::budget_exhausted : SearchStatus::none;
    }
    return result;
  }

 private:
  void visit(std::size_t v) {
    visited_[v] = 1;
    path_.push_back(v);
    for (const std::size_t w : neighbours_[v]) --free_degree_[w];
  }

  void unvisit(std::size_t v) {
    visited_[v] = 0;
    path_.pop_back();
    for (const std::size_t w : neighbours_[v]) ++free_degree_[w];
  }

  // Every unvisited vertex still needs two usable neighbours: unvisited
  // ones, the current path end, or the start vertex.
  bool feasible() const {
    const std::size_t end = path_.back();
    for (std::size_t w = 0; w < n_; ++w) {
      if (visited_[w]) continue;
      std::size_t usable = free_degree_[w];
      if (g_.adjacent(w, end)) ++usable;
      if (end != start_ && g_.adjacent(w, start_)) ++usable;
      if (usable < 2) return false;
    }
    return true;
  }

  bool extend() {
    if (path_.size() == n_) return g_.adjacent(path_.back(), start_);
    if (!feasible()) return false;
    std::vector<std::size_t> candidates;
    for (const std::size_t w : neighbours_[path_.back()]) {
      if (!visited_[w]) candidates.push_back(w);
    }
    std::sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
      if (free_degree_[a] != free_degree_[b]) return free_degree_[a] < free_degree_[b];
      return a < b;
    });
    for (const std::size_t w : candidates) {
      if (steps_ >= budget_) {
        exhausted_ = true;
        return false;
      }
      ++steps_;
      visit(w);
      if (extend()) return true;
      unvisit(w);
      if (exhausted_) return false;
    }
    return false;
  }

  const ElementGraph& g_;
  std::size_t n_;
  std::uint64_t budget_;
  std::vector<std::vector<std::size_t>> neighbours_;
  std::vector<char> visited_;
  std::vector<std::size_t> free_degree_;
  std::vector<std::size_t> path_;
  std::size_t start_ = 0;
  std::uint64_t steps_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

/// Backtracking search extending a path from a least-degree vertex, trying
/// neighbours with the fewest unvisited neighbours first.  `budget` bounds
/// the number of extension steps; running out is reported separately from
/// a definitive "none".
inline SearchResult hamiltonian_cycle_search(const ElementGraph& graph,
                                             std::uint64_t budget = kDefaultSearchBudget) {
  if (graph.vertex_count() < 3) throw InvalidArgument("Hamiltonian cycle search needs at least 3 vertices");
  detail::CycleSearch search(graph, budget);
  return search.run();
}

struct NaiveCriteria {
  bool posa = false;
  bool chvatal = false;
};

/// Expands the class-wise bounds to one bound per vertex (each row sum,
/// rounded up since degrees are integers, repeated class-length times),
/// sorts, and applies the textbook conditions for 1 <= k < m/2.
inline NaiveCriteria naive_criteria_check(const DegreeMatrix& matrix,
                                          std::uint64_t max_vertices = 10'000'000) {
  matrix.check_dimensions();
  const Integer total = matrix.group_order() - 1;
  if (total > max_vertices) throw InvalidArgument("too many vertices to expand the degree sequence");
  std::vector<Integer> degrees;
  degrees.reserve(static_cast<std::size_t>(total));
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    const Integer bound = ceil(matrix.row_sum(i));
    const auto count = static_cast<std::uint64_t>(matrix.class_lengths[i + 1]);
    for (std::uint64_t r = 0; r < count; ++r) degrees.push_back(bound);
  }
  std::sort(degrees.begin(), degrees.end());
  const auto m = static_cast<std::uint64_t>(total);
  const auto d = [&](std::uint64_t k) -> const Integer& { return degrees[k - 1]; };  // 1-based
  NaiveCriteria result{true, true};
  for (std::uint64_t k = 1; 2 * k < m; ++k) {
    const bool posa_k = d(k) >= k + 1;
    if (!posa_k) result.posa = false;
    if (!posa_k && !(d(m - k) >= m - k)) result.chvatal = false;
  }
  return result;
}

}  // namespace genhamilton
