#pragma once

// Brute-force group-theoretic primitives over fully enumerated groups:
// conjugacy classes in canonical order, centralizers, double cosets, the
// derived subgroup and the normal subgroups above it, dihedral detection,
// and faithful transitive constituents.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "genhamilton/error.hpp"
#include "genhamilton/perm_group.hpp"
#include "genhamilton/permutation.hpp"

namespace genhamilton {

/// Conjugacy classes, sorted by (element order, class size, least member).
/// The identity class comes first.
struct ClassTable {
  std::vector<Permutation> reps;       // least member of each class
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> orders;
  std::vector<std::size_t> class_of;   // element index -> class position
  std::uint64_t group_order = 0;

  std::size_t size() const { return reps.size(); }

  friend bool operator==(const ClassTable&, const ClassTable&) = default;
};

struct DoubleCoset {
  Permutation rep;
  std::uint64_t size = 0;
};

using DoubleCosetDecomposition = std::vector<DoubleCoset>;

namespace detail {

inline void require_member(const PermGroup& group, const Permutation& g, const char* what) {
  if (!group.contains(g)) {
    throw InvalidArgument(std::string(what) + " " + g.to_cycle_string() + " is not in the group");
  }
}

inline void require_subgroup(const PermGroup& group, const PermGroup& sub, const char* what) {
  if (!group.contains_all(sub)) throw InvalidArgument(std::string(what) + " is not a subgroup");
}

}  // namespace detail

inline ClassTable conjugacy_classes(const PermGroup& group) {
  const std::size_t n = group.order();
  const auto& gens = group.generators();
  std::vector<Permutation> gen_inverses;
  for (const auto& g : gens) gen_inverses.push_back(g.inverse());

  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw_class(n, kUnassigned);
  std::vector<std::vector<std::size_t>> members;
  std::vector<Point> scratch(group.degree());
  for (std::size_t start = 0; start < n; ++start) {
    if (raw_class[start] != kUnassigned) continue;
    const std::size_t id = members.size();
    std::vector<std::size_t> orbit{start};
    raw_class[start] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const Permutation& e = group.element(orbit[head]);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        // e^x : i -> x(e(x^-1(i)))
        for (std::size_t i = 0; i < scratch.size(); ++i) scratch[i] = gens[k][e[gen_inverses[k][i]]];
        const std::size_t next = *group.index_of(std::span<const Point>(scratch));
        if (raw_class[next] == kUnassigned) {
          raw_class[next] = id;
          orbit.push_back(next);
        }
      }
    }
    members.push_back(std::move(orbit));
  }

  // Least member is the first index reached: classes are opened in index order.
  std::vector<std::tuple<std::uint64_t, std::uint64_t, std::size_t, std::size_t>> keys;
  for (std::size_t c = 0; c < members.size(); ++c) {
    const std::size_t least = *std::min_element(members[c].begin(), members[c].end());
    keys.emplace_back(group.element(least).order(), members[c].size(), least, c);
  }
  std::sort(keys.begin(), keys.end());

  ClassTable table;
  table.group_order = n;
  table.class_of.assign(n, 0);
  std::vector<std::size_t> position(members.size());
  for (std::size_t pos = 0; pos < keys.size(); ++pos) {
    const auto& [order, size, least, c] = keys[pos];
    table.reps.push_back(group.element(least));
    table.sizes.push_back(size);
    table.orders.push_back(order);
    position[c] = pos;
  }
  for (std::size_t e = 0; e < n; ++e) table.class_of[e] = position[raw_class[e]];
  return table;
}

/// {x in G : g x = x g}
inline PermGroup centralizer(const PermGroup& group, const Permutation& g) {
  detail::require_member(group, g, "element");
  std::vector<std::size_t> indices;
  const std::size_t deg = group.degree();
  for (std::size_t i = 0; i < group.order(); ++i) {
    const Permutation& x = group.element(i);
    bool commutes = true;
    for (std::size_t p = 0; p < deg && commutes; ++p) commutes = x[g[p]] == g[x[p]];
    if (commutes) indices.push_back(i);
  }
  return group.subgroup_from_indices(indices);
}

/// Double cosets H r K, one per pair, each represented by its least element;
/// pairs appear in order of their representatives.
inline DoubleCosetDecomposition double_coset_reps_and_sizes(const PermGroup& group,
                                                            const PermGroup& left,
                                                            const PermGroup& right) {
  detail::require_subgroup(group, left, "left subgroup");
  detail::require_subgroup(group, right, "right subgroup");
  const std::size_t n = group.order();
  std::vector<char> assigned(n, 0);
  std::vector<std::size_t> queue;
  DoubleCosetDecomposition result;
  for (std::size_t start = 0; start < n; ++start) {
    if (assigned[start]) continue;
    queue.assign(1, start);
    assigned[start] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t e = queue[head];
      for (const Permutation& h : left.generators()) {
        const std::size_t next = group.left_product_index(h, e);
        if (!assigned[next]) {
          assigned[next] = 1;
          queue.push_back(next);
        }
      }
      for (const Permutation& k : right.generators()) {
        const std::size_t next = group.product_index(e, k);
        if (!assigned[next]) {
          assigned[next] = 1;
          queue.push_back(next);
        }
      }
    }
    result.push_back({group.element(start), queue.size()});
  }
  return result;
}

namespace detail {

inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(a.inverse(), b.inverse()), compose(a, b));
}

/// Normal closure of the subgroup generated by `seeds`.
inline PermGroup normal_closure(const PermGroup& group, std::vector<Permutation> seeds) {
  std::vector<char> mask = group.closure_mask(seeds);
  bool grown = true;
  while (grown) {
    grown = false;
    const std::size_t count = seeds.size();
    for (std::size_t s = 0; s < count; ++s) {
      for (const Permutation& x : group.generators()) {
        Permutation c = conjugate(seeds[s], x);
        if (!mask[*group.index_of(c)]) {
          seeds.push_back(std::move(c));
          mask = group.closure_mask(seeds);
          grown = true;
        }
      }
    }
  }
  return group.subgroup_from_mask(mask);
}

}  // namespace detail

/// Normal closure of the generator commutators, which is the subgroup
/// generated by all commutators.
inline PermGroup derived_subgroup(const PermGroup& group) {
  std::vector<Permutation> seeds;
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = detail::commutator(gens[i], gens[j]);
      if (!c.is_identity()) seeds.push_back(std::move(c));
    }
  }
  return detail::normal_closure(group, std::move(seeds));
}

inline bool is_normal_subgroup(const PermGroup& group, const PermGroup& sub) {
  if (!group.contains_all(sub)) return false;
  for (const Permutation& n : sub.generators()) {
    for (const Permutation& x : group.generators()) {
      if (!sub.contains(conjugate(n, x))) return false;
    }
  }
  return true;
}

inline constexpr std::uint64_t kDefaultQuotientCap = 4096;

/// All proper subgroups N with G' <= N < G, G' first and then by order and
/// element list.  Empty for perfect groups.
inline std::vector<PermGroup> normal_subgroups_above_derived(
    const PermGroup& group, std::uint64_t quotient_cap = kDefaultQuotientCap) {
  const PermGroup derived = derived_subgroup(group);
  if (derived.order() == group.order()) return {};
  const std::uint64_t q = group.order() / derived.order();
  if (q > quotient_cap) {
    throw OrderCapExceeded("abelian quotient of order " + std::to_string(q) +
                           " exceeds the quotient cap " + std::to_string(quotient_cap));
  }

  // Coset labels; coset 0 is G' itself.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_of(group.order(), kNone);
  std::vector<std::size_t> coset_rep;
  for (std::size_t e = 0; e < group.order(); ++e) {
    if (coset_of[e] != kNone) continue;
    const std::size_t id = coset_rep.size();
    coset_rep.push_back(e);
    for (const Permutation& d : derived.elements()) {
      coset_of[group.left_product_index(d, e)] = id;
    }
  }
  std::vector<std::size_t> table(q * q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      table[a * q + b] = coset_of[group.product_index(coset_rep[a], group.element(coset_rep[b]))];
    }
  }

  const auto close = [&](std::vector<char> members) {
    std::vector<std::size_t> list;
    for (std::size_t c = 0; c < q; ++c) {
      if (members[c]) list.push_back(c);
    }
    for (std::size_t head = 0; head < list.size(); ++head) {
      for (std::size_t other = 0; other < list.size(); ++other) {
        const std::size_t prod = table[list[head] * q + list[other]];
        if (!members[prod]) {
          members[prod] = 1;
          list.push_back(prod);
        }
      }
    }
    return members;
  };

  std::vector<std::vector<char>> subgroups;
  std::vector<char> trivial(q, 0);
  trivial[0] = 1;
  subgroups.push_back(trivial);
  for (std::size_t head = 0; head < subgroups.size(); ++head) {
    for (std::size_t c = 1; c < q; ++c) {
      if (subgroups[head][c]) continue;
      std::vector<char> bigger = subgroups[head];
      bigger[c] = 1;
      bigger = close(std::move(bigger));
      if (std::find(subgroups.begin(), subgroups.end(), bigger) == subgroups.end()) {
        subgroups.push_back(std::move(bigger));
      }
    }
  }

  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> proper;  // (element indices, id)
  for (std::size_t s = 0; s < subgroups.size(); ++s) {
    const auto count = static_cast<std::size_t>(std::count(subgroups[s].begin(), subgroups[s].end(), 1));
    if (count == q) continue;
    std::vector<std::size_t> indices;
    for (std::size_t e = 0; e < group.order(); ++e) {
      if (subgroups[s][coset_of[e]]) indices.push_back(e);
    }
    proper.emplace_back(std::move(indices), s);
  }
  std::sort(proper.begin(), proper.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<PermGroup> result;
  for (const auto& [indices, id] : proper) {
    result.push_back(id == 0 ? derived : group.subgroup_from_indices(indices));
  }
  return result;
}

/// True iff |G| = 2n with n >= 2 and G = <c, t> with c of order n, t an
/// involution outside <c> inverting c.  The Klein four-group counts.
inline bool is_dihedral(const PermGroup& group) {
  const std::uint64_t size = group.order();
  if (size < 4 || size % 2 != 0) return false;
  const std::uint64_t n = size / 2;
  std::vector<std::size_t> involutions;
  std::vector<std::size_t> rotations;
  for (std::size_t i = 0; i < group.order(); ++i) {
    const std::uint64_t ord = group.element(i).order();
    if (ord == 2) involutions.push_back(i);
    if (ord == n) rotations.push_back(i);
  }
  for (const std::size_t r : rotations) {
    const Permutation& c = group.element(r);
    const Permutation c_inv = c.inverse();
    const std::vector<Permutation> gen{c};
    const auto cyclic = group.closure_mask(gen);
    for (const std::size_t t : involutions) {
      if (cyclic[t]) continue;
      const Permutation& inv = group.element(t);
      if (compose(compose(inv, c), inv) == c_inv) return true;
    }
  }
  return false;
}

/// The group itself if transitive, otherwise its action on the first orbit
/// (by least point) that is faithful, renumbered to points 1..|orbit|.
inline PermGroup faithful_transitive_constituent(const PermGroup& group,
                                                 std::uint64_t cap = kDefaultOrderCap) {
  const OrbitInfo& info = group.orbit_info();
  if (info.transitive) return group;
  for (const auto& orbit : info.orbits) {
    std::vector<Point> label(group.degree(), 0);
    for (std::size_t k = 0; k < orbit.size(); ++k) label[orbit[k]] = static_cast<Point>(k);
    std::vector<Permutation> gens;
    for (const Permutation& g : group.generators()) {
      std::vector<Point> images(orbit.size());
      for (std::size_t k = 0; k < orbit.size(); ++k) images[k] = label[g[orbit[k]]];
      gens.push_back(Permutation::from_images(std::move(images)));
    }
    PermGroup action = group_from_generators(orbit.size(), std::move(gens), cap);
    if (action.order() == group.order()) return action;
  }
  throw NoFaithfulConstituent("no faithful transitive constituent");
}

}  // namespace genhamilton
