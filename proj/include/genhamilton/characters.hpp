#pragma once

// Permutation characters 1_M^G and the character-theoretic lower bounds
//
//   delta(s, g^G) = |g^G| * max(0, 1 - sum_pi pi(g) pi(s) / pi(1))
//
// for the number of elements of g^G that generate G together with s, where
// pi runs over the primitive permutation characters.  All arithmetic is
// exact over arbitrary-precision integers.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genhamilton/error.hpp"
#include "genhamilton/generating_graph.hpp"
#include "genhamilton/group_algorithms.hpp"
#include "genhamilton/perm_group.hpp"
#include "genhamilton/rational.hpp"

namespace genhamilton {

/// One class function, values in class order with the identity first.
struct CharacterVector {
  std::vector<Integer> values;

  const Integer& degree() const { return values.front(); }

  friend bool operator==(const CharacterVector&, const CharacterVector&) = default;
};

struct CharTableData {
  std::vector<Integer> class_lengths;
  std::vector<Integer> element_orders;
  std::vector<CharacterVector> characters;

  Integer group_order() const {
    Integer sum = 0;
    for (const Integer& c : class_lengths) sum += c;
    return sum;
  }

  /// Structural checks only: characters given as upper bounds (rather than
  /// genuine permutation characters) are accepted.
  void validate() const {
    const std::size_t n = class_lengths.size();
    if (n == 0) throw InvalidArgument("class lengths are empty");
    if (class_lengths[0] != 1) throw InvalidArgument("first class must be the identity class of length 1");
    for (const Integer& c : class_lengths) {
      if (c <= 0) throw InvalidArgument("class lengths must be positive");
    }
    if (element_orders.size() != n) {
      throw InvalidArgument("element_orders has " + std::to_string(element_orders.size()) +
                            " entries, expected " + std::to_string(n));
    }
    if (element_orders[0] != 1) throw InvalidArgument("first element order must be 1");
    for (const Integer& o : element_orders) {
      if (o <= 0) throw InvalidArgument("element orders must be positive");
    }
    for (std::size_t k = 0; k < characters.size(); ++k) {
      const auto& values = characters[k].values;
      if (values.size() != n) {
        throw InvalidArgument("character " + std::to_string(k + 1) + " has " + std::to_string(values.size()) +
                              " values, expected " + std::to_string(n));
      }
      if (values[0] <= 0) throw InvalidArgument("character degree must be positive");
      for (const Integer& v : values) {
        if (v < 0) throw InvalidArgument("permutation character values must be nonnegative");
      }
    }
  }

  friend bool operator==(const CharTableData&, const CharTableData&) = default;
};

/// 1_M^G(s_i) = |G| |s_i^G cap M| / (|M| |s_i^G|), by counting the members of
/// each class that lie in M.
inline CharacterVector permutation_character(const PermGroup& group, const PermGroup& sub,
                                             const ClassTable& classes) {
  if (!group.contains_all(sub)) throw InvalidArgument("subgroup is not contained in the group");
  if (classes.group_order != group.order()) throw InvalidArgument("class table does not belong to this group");
  std::vector<std::uint64_t> inside(classes.size(), 0);
  for (const Permutation& m : sub.elements()) ++inside[classes.class_of[*group.index_of(m)]];
  CharacterVector chi;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Integer num = Integer(group.order()) * inside[i];
    const Integer den = Integer(sub.order()) * classes.sizes[i];
    if (num % den != 0) throw Error("internal error: non-integral permutation character value");
    chi.values.push_back(num / den);
  }
  return chi;
}

/// Genuine transitive permutation character: sum_i c_i pi(s_i) = |G| and
/// pi(1) divides |G|.
inline bool is_transitive_permutation_character(const CharacterVector& chi,
                                                const std::vector<Integer>& class_lengths) {
  if (chi.values.size() != class_lengths.size() || chi.values.empty()) return false;
  Integer order = 0;
  Integer weighted = 0;
  for (std::size_t i = 0; i < class_lengths.size(); ++i) {
    order += class_lengths[i];
    weighted += class_lengths[i] * chi.values[i];
    if (chi.values[i] > chi.values[0] || chi.values[i] < 0) return false;
  }
  return weighted == order && chi.values[0] > 0 && order % chi.values[0] == 0;
}

/// entry[i][j] = max(0, c_j - sum_pi c_j pi_j pi_i / pi_1), classes shifted
/// by one so that row/column i is class i+1.
inline DegreeMatrix lower_bounds_vertex_degrees(const CharTableData& data) {
  data.validate();
  const std::size_t n = data.class_lengths.size() - 1;
  DegreeMatrix result;
  result.kind = DegreeKind::lower_bound;
  result.class_lengths = data.class_lengths;
  result.entries.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Integer& c = data.class_lengths[j + 1];
      Rational excluded = 0;
      for (const CharacterVector& pi : data.characters) {
        excluded += Rational(c * pi.values[j + 1] * pi.values[i + 1], pi.values[0]);
      }
      const Rational value = Rational(c) - excluded;
      result.entries[i][j] = value > 0 ? value : Rational(0);
    }
  }
  return result;
}

struct L2qReport {
  bool large_orders_ok = true;
  bool order2_ok = true;
  bool order3to5_ok = true;

  bool all_ok() const { return large_orders_ok && order2_ok && order3to5_ok; }
};

/// With bds = row sums of the delta matrix and n[k] the number of elements
/// of order k:  elements of order > 5 need bds > |G|/2, involutions need
/// bds > n[2], elements of order 3..5 need bds > n[2]+n[3]+n[4]+n[5].
inline L2qReport l2q_lemma_check(const CharTableData& data) {
  const DegreeMatrix bounds = lower_bounds_vertex_degrees(data);
  const auto bds = bounds.row_sums();
  Integer count[6] = {0, 0, 0, 0, 0, 0};
  for (std::size_t i = 0; i < data.class_lengths.size(); ++i) {
    if (data.element_orders[i] <= 5) count[static_cast<int>(data.element_orders[i])] += data.class_lengths[i];
  }
  const Rational half(data.group_order(), 2);
  const Integer small = count[2] + count[3] + count[4] + count[5];
  L2qReport report;
  for (std::size_t i = 1; i < data.class_lengths.size(); ++i) {
    const Integer& ord = data.element_orders[i];
    const Rational& b = bds[i - 1];
    if (ord > 5 && b <= half) report.large_orders_ok = false;
    if (ord == 2 && b <= count[2]) report.order2_ok = false;
    if (ord >= 3 && ord <= 5 && b <= small) report.order3to5_ok = false;
  }
  return report;
}

}  // namespace genhamilton
