#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "genhamilton/pipelines.hpp"

namespace testing_support {

using namespace genhamilton;

inline std::string data_path(const std::string& relative) { return std::string(GENHAMILTON_DATA_DIR) + "/" + relative; }

inline GroupSpec group_spec(const std::string& stem) { return load_group_spec(data_path("groups/" + stem + ".json")); }

inline PermGroup corpus_group(const std::string& stem) {
  const GroupSpec spec = group_spec(stem);
  return group_from_generators(spec.degree, spec.generators);
}

inline CharTableSpec chartable(const std::string& stem) {
  return load_chartable_spec(data_path("chartables/" + stem + ".json"));
}

inline PermGroup from_cycles(std::size_t degree, const std::vector<std::string>& gens) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(Permutation::from_cycles(degree, g));
  return group_from_generators(degree, std::move(perms));
}

inline PermGroup symmetric(std::size_t n) {
  std::string cycle = "(";
  for (std::size_t i = 1; i <= n; ++i) cycle += std::to_string(i) + (i < n ? "," : ")");
  return from_cycles(n, {"(1,2)", cycle});
}

inline DegreeMatrix matrix(std::vector<long long> lengths, const std::vector<std::vector<long long>>& rows) {
  DegreeMatrix m;
  for (const long long c : lengths) m.class_lengths.emplace_back(c);
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const long long x : row) r.emplace_back(x);
    m.entries.push_back(std::move(r));
  }
  return m;
}

/// Class table by the definition: g^G = {x^-1 g x : x in G}.
inline std::vector<std::vector<std::size_t>> brute_force_classes(const PermGroup& group) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<char> done(group.order(), 0);
  for (std::size_t e = 0; e < group.order(); ++e) {
    if (done[e]) continue;
    std::vector<char> in(group.order(), 0);
    for (const Permutation& x : group.elements()) in[*group.index_of(conjugate(group.element(e), x))] = 1;
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < in.size(); ++k) {
      if (in[k]) {
        members.push_back(k);
        done[k] = 1;
      }
    }
    classes.push_back(std::move(members));
  }
  return classes;
}

/// Brute-force generation test: enumerate <x, y> with no shortcuts.
inline bool generates(const PermGroup& group, const Permutation& x, const Permutation& y) {
  const std::vector<Permutation> gens{x, y};
  const auto mask = group.closure_mask(gens);
  for (const char c : mask) {
    if (!c) return false;
  }
  return true;
}

/// d(s, g^G) counted element by element.
inline std::uint64_t brute_force_degree(const PermGroup& group, const ClassTable& classes, std::size_t s_class,
                                        std::size_t g_class) {
  std::uint64_t count = 0;
  const Permutation& s = classes.reps[s_class];
  for (std::size_t e = 0; e < group.order(); ++e) {
    if (classes.class_of[e] == g_class && generates(group, s, group.element(e))) ++count;
  }
  return count;
}

/// Random square matrix with integer entries 0 <= a_ij <= c_j.
inline DegreeMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t classes, long long max_length) {
  std::uniform_int_distribution<long long> length(1, max_length);
  std::vector<long long> lengths{1};
  for (std::size_t i = 0; i < classes; ++i) lengths.push_back(length(rng));
  std::vector<std::vector<long long>> rows(classes, std::vector<long long>(classes));
  for (auto& row : rows) {
    for (std::size_t j = 0; j < classes; ++j) {
      std::uniform_int_distribution<long long> entry(0, lengths[j + 1]);
      row[j] = entry(rng);
    }
  }
  // Bias half the rows towards saturation so that both criteria get hit.
  std::bernoulli_distribution saturate(0.5);
  for (std::size_t i = 0; i < classes; ++i) {
    if (!saturate(rng)) continue;
    for (std::size_t j = 0; j < classes; ++j) rows[i][j] = std::max(rows[i][j], lengths[j + 1] - 1);
  }
  return matrix(lengths, rows);
}

}  // namespace testing_support
