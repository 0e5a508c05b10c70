#pragma once

// Exact vertex degrees of the generating graph, aggregated over pairs of
// conjugacy classes.  entry[i][j] of the degree matrix is the number of
// elements of the (j+1)-st class that generate G together with the
// representative of the (i+1)-st class (the identity class is dropped).

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "genhamilton/error.hpp"
#include "genhamilton/group_algorithms.hpp"
#include "genhamilton/perm_group.hpp"
#include "genhamilton/rational.hpp"

namespace genhamilton {

enum class DegreeKind { exact, lower_bound };

/// Square matrix of exact degrees d(s_i, s_j^G) or lower bounds for them.
/// class_lengths includes the identity class first, so row/column i belongs
/// to class_lengths[i + 1].
struct DegreeMatrix {
  std::vector<Integer> class_lengths;
  std::vector<std::vector<Rational>> entries;
  DegreeKind kind = DegreeKind::exact;
  std::size_t closure_index = 0;

  std::size_t size() const { return entries.size(); }

  Rational row_sum(std::size_t i) const {
    Rational sum = 0;
    for (const Rational& x : entries[i]) sum += x;
    return sum;
  }

  std::vector<Rational> row_sums() const {
    std::vector<Rational> out;
    out.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) out.push_back(row_sum(i));
    return out;
  }

  Integer group_order() const {
    Integer sum = 0;
    for (const Integer& c : class_lengths) sum += c;
    return sum;
  }

  /// Throws InvalidArgument unless the shape matches the class lengths.
  void check_dimensions() const {
    if (class_lengths.empty()) throw InvalidArgument("class lengths must include the identity class");
    const std::size_t n = class_lengths.size() - 1;
    if (entries.size() != n) {
      throw InvalidArgument("dimension mismatch: " + std::to_string(entries.size()) +
                            " rows for " + std::to_string(n) + " nonidentity classes");
    }
    for (const auto& row : entries) {
      if (row.size() != n) throw InvalidArgument("dimension mismatch: matrix is not square");
    }
  }

  friend bool operator==(const DegreeMatrix&, const DegreeMatrix&) = default;
};

namespace detail {

/// <x, y> = G for a group transitive on its moved points: the subgroup must
/// be transitive on those points, and then its order is compared with |G|.
/// Enumeration stops once more than |G|/2 elements are found.
inline bool generates_transitive(const PermGroup& group, const Permutation& x, const Permutation& y) {
  const auto& moved = group.moved_points();
  if (!moved.empty()) {
    std::vector<char> seen(group.degree(), 0);
    std::vector<std::size_t> orbit{moved.front()};
    seen[moved.front()] = 1;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const Permutation* g : {&x, &y}) {
        const std::size_t next = (*g)[orbit[head]];
        if (!seen[next]) {
          seen[next] = 1;
          orbit.push_back(next);
        }
      }
    }
    if (orbit.size() != moved.size()) return false;
  }
  const std::uint64_t target = group.order();
  if (target == 1) return true;
  std::vector<char> member(target, 0);
  std::vector<std::size_t> queue{PermGroup::identity_index()};
  member[PermGroup::identity_index()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Permutation* g : {&x, &y}) {
      const std::size_t next = group.product_index(queue[head], *g);
      if (!member[next]) {
        member[next] = 1;
        queue.push_back(next);
        if (2 * queue.size() > target) return true;
      }
    }
  }
  return queue.size() == target;
}

inline void require_transitive(const PermGroup& group) {
  if (!group.orbit_info().transitive) {
    throw NotTransitive("group must be transitive on its moved points");
  }
}

}  // namespace detail

/// True iff x and y generate G.  G must be transitive on its moved points.
inline bool is_generating_pair(const PermGroup& group, const Permutation& x, const Permutation& y) {
  detail::require_transitive(group);
  detail::require_member(group, x, "element");
  detail::require_member(group, y, "element");
  return detail::generates_transitive(group, x, y);
}

struct DegreeMatrixOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  /// Apply the row/column copying for classes with equal cyclic subgroups.
  bool use_power_maps = true;
  /// Zero out involution pairs in non-dihedral groups without testing.
  bool use_involution_shortcut = true;
};

/// Exact class-pair degrees d(s_i, s_j^G).  Cells are filled in the order
/// of the classical loop: rows of classes whose cyclic subgroup matches an
/// earlier class are copied, pairs inside a common listed normal subgroup
/// and involution pairs of non-dihedral groups are zero, everything else is
/// counted over double cosets C_G(s_j) r C_G(s_i).
inline DegreeMatrix vertex_degree_matrix(const PermGroup& group, const ClassTable& classes,
                                         const std::vector<PermGroup>& normal_subgroups,
                                         const DegreeMatrixOptions& options = {}) {
  detail::require_transitive(group);
  if (classes.group_order != group.order() || classes.class_of.size() != group.order()) {
    throw InvalidArgument("class table does not belong to this group");
  }
  for (const Permutation& rep : classes.reps) detail::require_member(group, rep, "class representative");
  for (const PermGroup& sub : normal_subgroups) {
    if (sub.order() == group.order() || !is_normal_subgroup(group, sub)) {
      throw InvalidArgument("listed normal subgroups must be proper and normal");
    }
  }

  const std::size_t n = classes.size() - 1;  // nonidentity classes
  const auto rep = [&](std::size_t i) -> const Permutation& { return classes.reps[i + 1]; };
  const auto ord = [&](std::size_t i) { return classes.orders[i + 1]; };

  // powers[j] = earlier row whose values row j repeats.
  std::vector<std::optional<std::size_t>> powers(n);
  if (options.use_power_maps) {
    for (std::size_t i = 0; i < n; ++i) {
      if (powers[i]) continue;
      const std::uint64_t o = ord(i);
      for (std::uint64_t d = 2; d < o; ++d) {
        if (std::gcd(d, o) != 1) continue;
        const std::size_t cls = classes.class_of[*group.index_of(power(rep(i), static_cast<long long>(d)))] - 1;
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!powers[j] && cls == j) {
            powers[j] = i;
            break;
          }
        }
      }
    }
  }

  std::vector<std::vector<std::size_t>> normal_positions(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < normal_subgroups.size(); ++k) {
      if (normal_subgroups[k].contains(rep(i))) normal_positions[i].push_back(k);
    }
  }
  const bool dihedral = options.use_involution_shortcut && is_dihedral(group);
  const auto forced_zero = [&](std::size_t i, std::size_t j) {
    for (const std::size_t k : normal_positions[i]) {
      if (std::find(normal_positions[j].begin(), normal_positions[j].end(), k) != normal_positions[j].end()) {
        return true;
      }
    }
    return options.use_involution_shortcut && ord(i) == 2 && ord(j) == 2 && !dihedral;
  };

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    if (powers[i]) continue;
    for (std::size_t j = 0; j <= i; ++j) {
      if (!powers[j] && !forced_zero(i, j)) cells.emplace_back(i, j);
    }
  }

  std::vector<PermGroup> cents;
  cents.reserve(n);
  for (std::size_t i = 0; i < n; ++i) cents.push_back(centralizer(group, rep(i)));

  // gen = sum of |C_G(s_j) r C_G(s_i)| over r with <s_i, s_j^r> = G.
  std::vector<std::uint64_t> generating(cells.size(), 0);
  const auto compute = [&](std::size_t c) {
    const auto [i, j] = cells[c];
    std::uint64_t gen = 0;
    for (const DoubleCoset& dc : double_coset_reps_and_sizes(group, cents[j], cents[i])) {
      if (detail::generates_transitive(group, rep(i), conjugate(rep(j), dc.rep))) gen += dc.size;
    }
    generating[c] = gen;
  };
  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells.size()));
  if (threads <= 1) {
    for (std::size_t c = 0; c < cells.size(); ++c) compute(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t c = next++; c < cells.size(); c = next++) compute(c);
      });
    }
  }

  DegreeMatrix result;
  result.kind = DegreeKind::exact;
  for (const std::uint64_t s : classes.sizes) result.class_lengths.emplace_back(s);
  auto& m = result.entries;
  m.assign(n, std::vector<Rational>(n, Rational(0)));
  const auto exact_quotient = [](std::uint64_t num, std::uint64_t den) {
    if (num % den != 0) throw Error("internal error: double coset sum not divisible by centralizer order");
    return Rational(num / den);
  };
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (powers[i]) {
      const std::size_t p = *powers[i];
      for (std::size_t j = 0; j <= i; ++j) {
        m[i][j] = m[p][j];
        m[j][i] = m[j][p];
      }
      continue;
    }
    for (std::size_t j = 0; j <= i; ++j) {
      if (powers[j]) {
        m[i][j] = m[i][*powers[j]];
        m[j][i] = m[*powers[j]][i];
      } else if (forced_zero(i, j)) {
        m[i][j] = 0;
        m[j][i] = 0;
      } else {
        const std::uint64_t gen = generating[c++];
        m[i][j] = exact_quotient(gen, cents[j].order());
        if (i != j) m[j][i] = exact_quotient(gen, cents[i].order());
      }
    }
  }
  return result;
}

}  // namespace genhamilton
