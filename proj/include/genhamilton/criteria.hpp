#pragma once

// Closure iteration on class-wise degree bounds and the interval form of
// the Posa and Chvatal criteria.
//
// With the bounds beta_k sorted ascending and p_k = c_1 + ... + c_{k-1} + 1,
// the indices where Posa's condition may fail for the k-th block are
// [max(p_k, beta_k), min(half, p_{k+1} - 1)], and those where the second
// half of Chvatal's condition may fail are
// [max(1, |G| - p_{k+1}), min(half, |G| - 1 - p_k, |G| - 2 - beta_k)].
//
// Rules::reference reproduces the classical GAP code instead, which uses
// |G| - 1 - beta_k in the last bound and lets a closure step raise a
// diagonal entry to the full class length (counting a vertex as its own
// neighbour).  Both deviations only make the reported intervals larger or
// the closure bounds larger by one; see README.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <regex>
#include <string>
#include <tuple>
#include <vector>

#include "genhamilton/error.hpp"
#include "genhamilton/generating_graph.hpp"
#include "genhamilton/rational.hpp"

namespace genhamilton {

enum class Rules { exact, reference };

struct Interval {
  Rational low;
  Rational high;

  friend bool operator==(const Interval&, const Interval&) = default;
  friend bool operator<(const Interval& a, const Interval& b) {
    return std::tie(a.low, a.high) < std::tie(b.low, b.high);
  }
};

struct DataTriple {
  Rational bound;
  Integer class_length;
  std::size_t class_index = 0;  // position in class_lengths, identity class = 1

  friend bool operator==(const DataTriple&, const DataTriple&) = default;
  friend bool operator<(const DataTriple& a, const DataTriple& b) {
    return std::tie(a.bound, a.class_length, a.class_index) < std::tie(b.bound, b.class_length, b.class_index);
  }
};

struct CriterionReport {
  std::vector<Interval> bad_for_posa;
  std::vector<Interval> bad_for_chvatal;
  std::vector<DataTriple> data;

  friend bool operator==(const CriterionReport&, const CriterionReport&) = default;
};

/// One closure step: entry [i][j] becomes the full class length c_{j+1}
/// (c_{j+1} - 1 on the diagonal) whenever the row sums of rows i and j add
/// up to at least |G| - 1.
inline DegreeMatrix closure_bounds(const DegreeMatrix& bounds, Rules rules = Rules::exact) {
  bounds.check_dimensions();
  const auto delta = bounds.row_sums();
  const Integer threshold = bounds.group_order() - 1;
  DegreeMatrix next = bounds;
  next.closure_index = bounds.closure_index + 1;
  const std::size_t n = bounds.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (delta[i] + delta[j] < threshold) continue;
      Rational full(bounds.class_lengths[j + 1]);
      if (i == j && rules == Rules::exact) full -= 1;
      if (rules == Rules::reference || full > next.entries[i][j]) next.entries[i][j] = full;
    }
  }
  return next;
}

inline CriterionReport check_posa_chvatal(const DegreeMatrix& bounds, Rules rules = Rules::exact) {
  bounds.check_dimensions();
  const Integer size = bounds.group_order();
  CriterionReport report;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    report.data.push_back(DataTriple{bounds.row_sum(i), bounds.class_lengths[i + 1], i + 2});
  }
  std::sort(report.data.begin(), report.data.end());

  const auto add = [](std::vector<Interval>& out, const Rational& low, const Rational& high) {
    if (low <= high) out.push_back(Interval{low, high});
  };
  std::vector<Interval> chvatal_candidates;
  Rational pos = 1;
  const Rational half = Rational(size / 2 - 1);
  const Rational last = Rational(size - 1);
  const Rational beta_limit = rules == Rules::exact ? Rational(size - 2) : last;
  for (const DataTriple& t : report.data) {
    const Rational low1 = std::max(pos, t.bound);
    const Rational upp2 = std::min({half, Rational(last - pos), Rational(beta_limit - t.bound)});
    pos += Rational(t.class_length);
    const Rational upp1 = std::min(half, Rational(pos - 1));
    const Rational low2 = std::max(Rational(1), Rational(Rational(size) - pos));
    add(report.bad_for_posa, low1, upp1);
    add(chvatal_candidates, low2, upp2);
  }
  for (const Interval& a : report.bad_for_posa) {
    for (const Interval& b : chvatal_candidates) {
      add(report.bad_for_chvatal, std::max(a.low, b.low), std::min(a.high, b.high));
    }
  }
  std::sort(report.bad_for_chvatal.begin(), report.bad_for_chvatal.end());
  report.bad_for_chvatal.erase(std::unique(report.bad_for_chvatal.begin(), report.bad_for_chvatal.end()),
                               report.bad_for_chvatal.end());
  return report;
}

inline std::string ordinal(std::size_t n) {
  const std::size_t tens = n % 100;
  const char* suffix = "th";
  if (tens < 11 || tens > 13) {
    switch (n % 10) {
      case 1: suffix = "st"; break;
      case 2: suffix = "nd"; break;
      case 3: suffix = "rd"; break;
      default: break;
    }
  }
  return std::to_string(n) + suffix;
}

struct HamiltonianInfo {
  std::optional<std::size_t> posa_closure;
  std::optional<std::size_t> chvatal_closure;
  std::string rendered;
  std::vector<CriterionReport> reports;  // one per closure iterate, the last one being the fixpoint
};

inline std::string render_verdict(std::optional<std::size_t> posa, std::optional<std::size_t> chvatal) {
  if (posa) {
    if (posa != chvatal) {
      return "Chvatal for " + ordinal(chvatal.value_or(0)) + " closure, Posa for " + ordinal(*posa) + " closure";
    }
    return "Posa for " + ordinal(*posa) + " closure";
  }
  if (chvatal) return "Chvatal for " + ordinal(*chvatal) + " closure";
  return "no decision";
}

/// Checks the bounds and their iterated closures until the fixpoint, keeping
/// the first index at which each criterion holds.
inline HamiltonianInfo hamiltonian_cycle_info(DegreeMatrix bounds, Rules rules = Rules::exact) {
  bounds.check_dimensions();
  HamiltonianInfo info;
  for (std::size_t i = 0;; ++i) {
    CriterionReport report = check_posa_chvatal(bounds, rules);
    if (!info.posa_closure && report.bad_for_posa.empty()) info.posa_closure = i;
    if (!info.chvatal_closure && report.bad_for_chvatal.empty()) info.chvatal_closure = i;
    info.reports.push_back(std::move(report));
    DegreeMatrix next = closure_bounds(bounds, rules);
    if (next.entries == bounds.entries) break;
    bounds = std::move(next);
  }
  info.rendered = render_verdict(info.posa_closure, info.chvatal_closure);
  return info;
}

struct ParsedVerdict {
  std::optional<std::size_t> posa_closure;
  std::optional<std::size_t> chvatal_closure;

  friend bool operator==(const ParsedVerdict&, const ParsedVerdict&) = default;
};

/// Inverse of render_verdict.  "Posa for Nth closure" means both indices
/// are N.  Throws ParseError on anything else.
inline ParsedVerdict parse_verdict(const std::string& text) {
  static const std::regex both(R"(Chvatal for (\d+)(st|nd|rd|th) closure, Posa for (\d+)(st|nd|rd|th) closure)");
  static const std::regex posa(R"(Posa for (\d+)(st|nd|rd|th) closure)");
  static const std::regex chvatal(R"(Chvatal for (\d+)(st|nd|rd|th) closure)");
  std::smatch m;
  ParsedVerdict out;
  const auto number = [&](std::size_t group) {
    const std::size_t n = std::stoul(m[group].str());
    if (ordinal(n) != m[group].str() + m[group + 1].str()) throw ParseError("bad ordinal in verdict: " + text);
    return n;
  };
  if (std::regex_match(text, m, both)) {
    out.chvatal_closure = number(1);
    out.posa_closure = number(3);
  } else if (std::regex_match(text, m, posa)) {
    out.posa_closure = out.chvatal_closure = number(1);
  } else if (std::regex_match(text, m, chvatal)) {
    out.chvatal_closure = number(1);
  } else if (text != "no decision") {
    throw ParseError("unrecognized verdict: " + text);
  }
  return out;
}

}  // namespace genhamilton
