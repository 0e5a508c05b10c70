#pragma once

// Finite permutation groups with every element enumerated.  A PermGroup is
// immutable once built: elements are sorted by image array (so the identity
// is element 0), an open-addressing index maps image arrays to positions,
// and the orbit structure is cached.  Const access is thread-safe.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "genhamilton/error.hpp"
#include "genhamilton/permutation.hpp"

namespace genhamilton {

inline constexpr std::uint64_t kDefaultOrderCap = 100000;

struct OrbitInfo {
  std::vector<std::vector<std::size_t>> orbits;  // 0-based points, sorted, orbits ordered by least point
  bool transitive = true;
};

class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}, {Permutation::identity(0)}) {}

  std::size_t degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t index) const { return elements_[index]; }
  static constexpr std::size_t identity_index() { return 0; }

  std::optional<std::size_t> index_of(std::span<const Point> images) const {
    if (images.size() != degree_) return std::nullopt;
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t s = PermutationHash{}(images) & mask;; s = (s + 1) & mask) {
      const std::uint32_t slot = slots_[s];
      if (slot == kEmpty) return std::nullopt;
      const auto candidate = elements_[slot].images();
      if (std::equal(candidate.begin(), candidate.end(), images.begin())) return slot;
    }
  }
  std::optional<std::size_t> index_of(const Permutation& p) const { return index_of(p.images()); }

  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

  /// Every element of `other` lies in this group.
  bool contains_all(const PermGroup& other) const {
    if (other.degree_ != degree_) return false;
    return std::all_of(other.elements_.begin(), other.elements_.end(),
                       [&](const Permutation& p) { return contains(p); });
  }

  /// Index of element(a) * x (a first), x must lie in the group.
  std::size_t product_index(std::size_t a, const Permutation& x) const {
    thread_local std::vector<Point> scratch;
    scratch.resize(degree_);
    const Permutation& p = elements_[a];
    for (std::size_t i = 0; i < degree_; ++i) scratch[i] = x[p[i]];
    const auto idx = index_of(std::span<const Point>(scratch));
    if (!idx) throw InvalidArgument("product left the group");
    return *idx;
  }

  /// Index of x * element(a).
  std::size_t left_product_index(const Permutation& x, std::size_t a) const {
    thread_local std::vector<Point> scratch;
    scratch.resize(degree_);
    const Permutation& p = elements_[a];
    for (std::size_t i = 0; i < degree_; ++i) scratch[i] = p[x[i]];
    const auto idx = index_of(std::span<const Point>(scratch));
    if (!idx) throw InvalidArgument("product left the group");
    return *idx;
  }

  const OrbitInfo& orbit_info() const { return orbits_; }
  const std::vector<std::size_t>& moved_points() const { return moved_points_; }

  /// Membership mask over element indices of the subgroup generated by `gens`.
  std::vector<char> closure_mask(std::span<const Permutation> gens) const {
    std::vector<char> member(elements_.size(), 0);
    std::vector<std::size_t> queue{identity_index()};
    member[identity_index()] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Permutation& g : gens) {
        const std::size_t next = product_index(queue[head], g);
        if (!member[next]) {
          member[next] = 1;
          queue.push_back(next);
        }
      }
    }
    return member;
  }

  /// Subgroup whose elements are the given (ascending) element indices.
  /// Generators are picked greedily in element order.
  PermGroup subgroup_from_indices(const std::vector<std::size_t>& indices) const {
    std::vector<Permutation> elems;
    elems.reserve(indices.size());
    for (const std::size_t i : indices) elems.push_back(elements_[i]);
    std::vector<Permutation> gens;
    std::vector<char> span_mask(elements_.size(), 0);
    span_mask[identity_index()] = 1;
    for (const std::size_t i : indices) {
      if (span_mask[i]) continue;
      gens.push_back(elements_[i]);
      span_mask = closure_mask(gens);
    }
    return PermGroup(degree_, std::move(gens), std::move(elems));
  }

  PermGroup subgroup_from_mask(const std::vector<char>& mask) const {
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (mask[i]) indices.push_back(i);
    }
    return subgroup_from_indices(indices);
  }

  PermGroup subgroup_generated_by(std::vector<Permutation> gens) const {
    for (const Permutation& g : gens) {
      if (!contains(g)) throw InvalidArgument("generator " + g.to_cycle_string() + " not in group");
    }
    std::vector<Permutation> elems;
    const auto mask = closure_mask(gens);
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (mask[i]) elems.push_back(elements_[i]);
    }
    return PermGroup(degree_, std::move(gens), std::move(elems));
  }

  friend PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens,
                                         std::uint64_t cap);

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffU;

  // `elements` must be sorted, closed, and contain the identity.
  PermGroup(std::size_t degree, std::vector<Permutation> gens, std::vector<Permutation> elements)
      : degree_(degree), generators_(std::move(gens)), elements_(std::move(elements)) {
    build_index();
    build_orbits();
  }

  void build_index() {
    std::size_t cap = 4;
    while (cap < 2 * elements_.size()) cap <<= 1;
    slots_.assign(cap, kEmpty);
    const std::size_t mask = cap - 1;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      std::size_t s = PermutationHash{}(elements_[i]) & mask;
      while (slots_[s] != kEmpty) s = (s + 1) & mask;
      slots_[s] = static_cast<std::uint32_t>(i);
    }
  }

  void build_orbits() {
    std::vector<char> seen(degree_, 0);
    for (std::size_t start = 0; start < degree_; ++start) {
      if (seen[start]) continue;
      std::vector<std::size_t> orbit{start};
      seen[start] = 1;
      for (std::size_t head = 0; head < orbit.size(); ++head) {
        for (const Permutation& g : generators_) {
          const std::size_t next = g[orbit[head]];
          if (!seen[next]) {
            seen[next] = 1;
            orbit.push_back(next);
          }
        }
      }
      if (orbit.size() == 1) continue;  // fixed point
      std::sort(orbit.begin(), orbit.end());
      moved_points_.insert(moved_points_.end(), orbit.begin(), orbit.end());
      orbits_.orbits.push_back(std::move(orbit));
    }
    std::sort(moved_points_.begin(), moved_points_.end());
    orbits_.transitive = orbits_.orbits.size() <= 1;
  }

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> slots_;
  OrbitInfo orbits_;
  std::vector<std::size_t> moved_points_;
};

/// Enumerates the group generated by `gens` breadth-first.  Throws
/// OrderCapExceeded as soon as more than `cap` elements have been found.
inline PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens,
                                       std::uint64_t cap = kDefaultOrderCap) {
  if (degree > Permutation::kMaxDegree) throw InvalidArgument("degree too large");
  for (const Permutation& g : gens) {
    if (g.degree() != degree) {
      throw InvalidArgument("generator " + g.to_cycle_string() + " has degree " +
                            std::to_string(g.degree()) + ", expected " + std::to_string(degree));
    }
  }
  // Breadth-first closure with a temporary hash set keyed by image arrays.
  std::vector<Permutation> found;
  std::vector<std::uint32_t> slots(64, PermGroup::kEmpty);
  const auto insert = [&](const Permutation& p) -> bool {
    if (2 * (found.size() + 1) > slots.size()) {
      std::vector<std::uint32_t> bigger(slots.size() * 2, PermGroup::kEmpty);
      const std::size_t m = bigger.size() - 1;
      for (std::size_t i = 0; i < found.size(); ++i) {
        std::size_t s = PermutationHash{}(found[i]) & m;
        while (bigger[s] != PermGroup::kEmpty) s = (s + 1) & m;
        bigger[s] = static_cast<std::uint32_t>(i);
      }
      slots.swap(bigger);
    }
    const std::size_t mask = slots.size() - 1;
    std::size_t s = PermutationHash{}(p) & mask;
    while (slots[s] != PermGroup::kEmpty) {
      if (found[slots[s]] == p) return false;
      s = (s + 1) & mask;
    }
    slots[s] = static_cast<std::uint32_t>(found.size());
    found.push_back(p);
    return true;
  };
  insert(Permutation::identity(degree));
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const Permutation& g : gens) {
      Permutation next = compose(found[head], g);
      if (insert(next) && found.size() > cap) {
        throw OrderCapExceeded("order cap exceeded: more than " + std::to_string(cap) +
                               " elements");
      }
    }
  }
  std::sort(found.begin(), found.end());
  return PermGroup(degree, std::move(gens), std::move(found));
}

/// Orbits on the moved points.  The trivial group has no moved points and
/// counts as transitive.
inline OrbitInfo orbits_and_transitivity(const PermGroup& group) { return group.orbit_info(); }

}  // namespace genhamilton
