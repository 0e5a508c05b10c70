#pragma once

// Permutations of {1..degree}, stored 0-based.  Products are read left to
// right: compose(p, q) applies p first, then q, so conjugation is
// g^x = x^-1 g x.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genhamilton/error.hpp"

namespace genhamilton {

using Point = std::uint16_t;

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), Point{0});
    return p;
  }

  /// 0-based images; throws unless they form a bijection of {0..n-1}.
  static Permutation from_images(std::vector<Point> images) {
    check_bijection(images);
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// 1-based image array, the serialized form.
  static Permutation from_one_based(std::span<const long long> images) {
    if (images.size() > kMaxDegree) throw InvalidArgument("permutation degree too large");
    std::vector<Point> zero(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i] < 1 || images[i] > static_cast<long long>(images.size())) {
        throw InvalidArgument("image " + std::to_string(images[i]) + " out of range 1.." +
                              std::to_string(images.size()));
      }
      zero[i] = static_cast<Point>(images[i] - 1);
    }
    return from_images(std::move(zero));
  }

  /// Cycle notation such as "(1,2)(3,4,5)"; "()" is the identity.
  static Permutation from_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t point) const { return images_[point]; }
  std::span<const Point> images() const { return images_; }

  std::vector<long long> one_based() const {
    std::vector<long long> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
    return out;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  Permutation inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<Point>(i);
    return p;
  }

  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const {
    std::vector<char> seen(images_.size(), 0);
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = 1;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  std::string to_cycle_string() const {
    std::string out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out += '(';
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = 1;
        if (j != i) out += ',';
        out += std::to_string(j + 1);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  static constexpr std::size_t kMaxDegree = 65535;

 private:
  static void check_bijection(const std::vector<Point>& images) {
    std::vector<char> hit(images.size(), 0);
    for (const Point x : images) {
      if (x >= images.size() || hit[x]) throw InvalidArgument("images do not form a bijection");
      hit[x] = 1;
    }
  }

  std::vector<Point> images_;
};

/// Apply p first, then q.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw InvalidArgument("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                          std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = q[p[i]];
  return Permutation::from_images(std::move(images));
}

/// k-fold product; negative k gives powers of the inverse.
inline Permutation power(const Permutation& p, long long k) {
  Permutation base = k < 0 ? p.inverse() : p;
  unsigned long long e = k < 0 ? 0ULL - static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
  Permutation result = Permutation::identity(p.degree());
  while (e > 0) {
    if (e & 1ULL) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

/// g^x = x^-1 g x.
inline Permutation conjugate(const Permutation& g, const Permutation& x) {
  return compose(compose(x.inverse(), g), x);
}

struct PermutationHash {
  std::size_t operator()(std::span<const Point> images) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const Point x : images) {
      h ^= x;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
  std::size_t operator()(const Permutation& p) const noexcept { return (*this)(p.images()); }
};

inline Permutation Permutation::from_cycles(std::size_t degree, std::string_view text) {
  if (degree > kMaxDegree) throw InvalidArgument("permutation degree too large");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  const auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  const auto fail = [&](const std::string& why) {
    throw InvalidArgument("bad cycle notation '" + std::string(text) + "': " + why);
  };
  skip_space();
  if (i == text.size()) fail("empty");
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<std::size_t> cycle;
    skip_space();
    while (i < text.size() && text[i] != ')') {
      std::size_t value = 0;
      const std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > degree) fail("point exceeds degree " + std::to_string(degree));
        ++i;
      }
      if (i == start) fail("expected a point");
      if (value == 0) fail("points are 1-based");
      if (used[value - 1]) fail("point " + std::to_string(value) + " repeated");
      used[value - 1] = 1;
      cycle.push_back(value - 1);
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_space();
      }
    }
    if (i == text.size()) fail("missing ')'");
    ++i;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k]] = static_cast<Point>(cycle[(k + 1) % cycle.size()]);
    }
    skip_space();
  }
  return from_images(std::move(images));
}

}  // namespace genhamilton
