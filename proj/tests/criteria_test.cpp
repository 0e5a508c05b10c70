#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace testing_support;

namespace {

Interval iv(long long low, long long high) { return Interval{Rational(low), Rational(high)}; }

DataTriple triple(long long bound, long long length, std::size_t index) {
  return DataTriple{Rational(bound), Integer(length), index};
}

const DegreeMatrix kS3 = matrix({1, 3, 2}, {{2, 2}, {3, 0}});
const DegreeMatrix kZero = matrix({1, 3, 2}, {{0, 0}, {0, 0}});

}  // namespace

TEST(ClosureBounds, S3ReferenceRules) {
  const DegreeMatrix next = closure_bounds(kS3, Rules::reference);
  EXPECT_EQ(next.entries, matrix({1, 3, 2}, {{3, 2}, {3, 2}}).entries);
  EXPECT_EQ(next.closure_index, 1U);
}

TEST(ClosureBounds, S3ExactRulesExcludeTheVertexItself) {
  EXPECT_EQ(closure_bounds(kS3).entries, matrix({1, 3, 2}, {{2, 2}, {3, 1}}).entries);
}

TEST(ClosureBounds, ZeroAndSaturatedAreFixpoints) {
  for (const Rules rules : {Rules::exact, Rules::reference}) {
    EXPECT_EQ(closure_bounds(kZero, rules).entries, kZero.entries);
    const DegreeMatrix saturated = matrix({1, 4, 3, 5}, {{4, 3, 5}, {4, 3, 5}, {4, 3, 5}});
    const DegreeMatrix once = closure_bounds(saturated, rules);
    EXPECT_EQ(closure_bounds(once, rules).entries, once.entries);
  }
  EXPECT_EQ(closure_bounds(matrix({1, 4, 3, 5}, {{4, 3, 5}, {4, 3, 5}, {4, 3, 5}}), Rules::reference).entries,
            matrix({1, 4, 3, 5}, {{4, 3, 5}, {4, 3, 5}, {4, 3, 5}}).entries);
}

TEST(ClosureBounds, DimensionMismatch) {
  EXPECT_THROW(closure_bounds(matrix({1, 3, 2}, {{1, 2, 3}})), InvalidArgument);
  EXPECT_THROW(check_posa_chvatal(matrix({1, 3}, {{1, 2}, {1, 2}})), InvalidArgument);
}

TEST(CheckPosaChvatal, S3) {
  const CriterionReport r = check_posa_chvatal(kS3);
  EXPECT_TRUE(r.bad_for_posa.empty());
  EXPECT_TRUE(r.bad_for_chvatal.empty());
  EXPECT_EQ(r.data, (std::vector<DataTriple>{triple(3, 2, 3), triple(4, 3, 2)}));
  EXPECT_EQ(check_posa_chvatal(kS3, Rules::reference), r);
}

TEST(CheckPosaChvatal, ZeroMatrix) {
  for (const Rules rules : {Rules::exact, Rules::reference}) {
    const CriterionReport r = check_posa_chvatal(kZero, rules);
    EXPECT_EQ(r.bad_for_posa, (std::vector<Interval>{iv(1, 2)}));
    EXPECT_EQ(r.bad_for_chvatal, (std::vector<Interval>{iv(1, 2)}));
    EXPECT_EQ(r.data, (std::vector<DataTriple>{triple(0, 2, 3), triple(0, 3, 2)}));
  }
}

TEST(CheckPosaChvatal, ChvatalBoundDiffersFromReferenceCode) {
  // Degrees 0, then six vertices of degree 6 (m = 7): d_1 = 0 < 2 but
  // d_6 = 6 >= 6, so Chvatal's condition holds at k = 1.
  const DegreeMatrix m = matrix({1, 1, 2, 2, 2}, {{0, 0, 0, 0}, {0, 2, 2, 2}, {0, 2, 2, 2}, {0, 2, 2, 2}});
  EXPECT_TRUE(naive_criteria_check(m).chvatal);
  EXPECT_TRUE(check_posa_chvatal(m).bad_for_chvatal.empty());
  EXPECT_EQ(check_posa_chvatal(m, Rules::reference).bad_for_chvatal, (std::vector<Interval>{iv(1, 1)}));
}

TEST(CheckPosaChvatal, SaturatedIsClean) {
  const DegreeMatrix m = matrix({1, 4, 3, 5}, {{3, 3, 5}, {4, 2, 5}, {4, 3, 4}});
  const CriterionReport r = check_posa_chvatal(m);
  EXPECT_TRUE(r.bad_for_posa.empty());
  EXPECT_TRUE(r.bad_for_chvatal.empty());
}

TEST(CheckPosaChvatal, IntervalsStayInRange) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const DegreeMatrix m = random_integer_matrix(rng, 1 + rng() % 6, 9);
    const Integer size = m.group_order();
    const CriterionReport r = check_posa_chvatal(m);
    ASSERT_EQ(r.data.size(), m.size());
    EXPECT_TRUE(std::is_sorted(r.data.begin(), r.data.end()));
    EXPECT_TRUE(std::is_sorted(r.bad_for_chvatal.begin(), r.bad_for_chvatal.end()));
    Integer total = 1;
    for (const DataTriple& t : r.data) total += t.class_length;
    EXPECT_EQ(total, size);
    for (const auto* list : {&r.bad_for_posa, &r.bad_for_chvatal}) {
      for (const Interval& i : *list) {
        EXPECT_LE(i.low, i.high);
        EXPECT_GE(i.low, 1);
        EXPECT_LE(i.high, Rational(size / 2 - 1));
      }
    }
  }
}

// The interval sweep is a reformulation of the definitions: on integral
// matrices both must agree, for every closure iterate.
TEST(CheckPosaChvatal, AgreesWithNaiveCheckOnRandomMatrices) {
  std::mt19937_64 rng(2024);
  int posa_true = 0, chvatal_only = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    DegreeMatrix m = random_integer_matrix(rng, 1 + rng() % 6, 12);
    for (int step = 0; step < 20; ++step) {
      const CriterionReport r = check_posa_chvatal(m);
      const NaiveCriteria naive = naive_criteria_check(m);
      ASSERT_EQ(r.bad_for_posa.empty(), naive.posa) << "trial " << trial;
      ASSERT_EQ(r.bad_for_chvatal.empty(), naive.chvatal) << "trial " << trial;
      posa_true += naive.posa;
      chvatal_only += naive.chvatal && !naive.posa;
      DegreeMatrix next = closure_bounds(m);
      if (next.entries == m.entries) break;
      m = std::move(next);
    }
  }
  // The generator must exercise every outcome.
  EXPECT_GT(posa_true, 100);
  EXPECT_GT(chvatal_only, 10);
}

// With rational bounds an empty report still guarantees the criteria.
TEST(CheckPosaChvatal, SoundOnRationalMatrices) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    DegreeMatrix m = random_integer_matrix(rng, 1 + rng() % 5, 10);
    for (auto& row : m.entries) {
      for (auto& x : row) {
        if (x > 0 && rng() % 2) x -= Rational(1 + rng() % 5, 7);
      }
    }
    const CriterionReport r = check_posa_chvatal(m);
    const NaiveCriteria naive = naive_criteria_check(m);
    if (r.bad_for_posa.empty()) EXPECT_TRUE(naive.posa);
    if (r.bad_for_chvatal.empty()) EXPECT_TRUE(naive.chvatal);
    EXPECT_EQ(r.bad_for_posa.empty(), naive.posa);  // Posa intervals have integral upper ends
  }
}

TEST(ClosureBounds, MonotoneAndTerminating) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    DegreeMatrix m = random_integer_matrix(rng, 1 + rng() % 6, 10);
    const Integer limit = m.group_order();
    std::size_t steps = 0;
    while (true) {
      const DegreeMatrix next = closure_bounds(m);
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
          EXPECT_GE(next.entries[i][j], m.entries[i][j]);
          EXPECT_LE(next.entries[i][j], Rational(m.class_lengths[j + 1]));
        }
      }
      if (next.entries == m.entries) break;
      m = next;
      ++steps;
      ASSERT_LE(Integer(steps), limit);
    }
  }
}

TEST(HamiltonianCycleInfo, Examples) {
  const HamiltonianInfo s3 = hamiltonian_cycle_info(kS3);
  EXPECT_EQ(s3.rendered, "Posa for 0th closure");
  EXPECT_EQ(s3.posa_closure, 0U);
  EXPECT_EQ(s3.chvatal_closure, 0U);
  const HamiltonianInfo zero = hamiltonian_cycle_info(kZero);
  EXPECT_EQ(zero.rendered, "no decision");
  EXPECT_EQ(zero.reports.size(), 1U);
  EXPECT_FALSE(zero.posa_closure);
  EXPECT_FALSE(zero.chvatal_closure);
  // Degrees 1,1,4,4,4 satisfy Chvatal only; the closure then satisfies Posa.
  const HamiltonianInfo chv = hamiltonian_cycle_info(matrix({1, 2, 3}, {{0, 1}, {1, 3}}));
  EXPECT_EQ(chv.chvatal_closure, 0U);
  EXPECT_EQ(chv.rendered.rfind("Chvatal for 0th closure", 0), 0U);
}

TEST(HamiltonianCycleInfo, InvariantsOnRandomMatrices) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const DegreeMatrix m = random_integer_matrix(rng, 1 + rng() % 6, 10);
    for (const Rules rules : {Rules::exact, Rules::reference}) {
      const HamiltonianInfo info = hamiltonian_cycle_info(m, rules);
      if (info.posa_closure) {
        ASSERT_TRUE(info.chvatal_closure);
        EXPECT_LE(*info.chvatal_closure, *info.posa_closure);
      }
      const ParsedVerdict parsed = parse_verdict(info.rendered);
      EXPECT_EQ(parsed.posa_closure, info.posa_closure);
      EXPECT_EQ(parsed.chvatal_closure, info.chvatal_closure);
      EXPECT_EQ(render_verdict(parsed.posa_closure, parsed.chvatal_closure), info.rendered);
    }
  }
}

TEST(HamiltonianCycleInfo, LargerBoundsNeverDelayPosa) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const DegreeMatrix low = random_integer_matrix(rng, 1 + rng() % 6, 10);
    DegreeMatrix high = low;
    for (std::size_t i = 0; i < high.size(); ++i) {
      for (std::size_t j = 0; j < high.size(); ++j) {
        const Integer c = high.class_lengths[j + 1];
        if (high.entries[i][j] < Rational(c) && rng() % 3 == 0) high.entries[i][j] += 1;
      }
    }
    const HamiltonianInfo a = hamiltonian_cycle_info(low);
    const HamiltonianInfo b = hamiltonian_cycle_info(high);
    if (a.posa_closure) {
      ASSERT_TRUE(b.posa_closure) << trial;
      EXPECT_LE(*b.posa_closure, *a.posa_closure);
    }
  }
}

TEST(Ordinal, EnglishSuffixes) {
  EXPECT_EQ(ordinal(0), "0th");
  EXPECT_EQ(ordinal(1), "1st");
  EXPECT_EQ(ordinal(2), "2nd");
  EXPECT_EQ(ordinal(3), "3rd");
  EXPECT_EQ(ordinal(4), "4th");
  EXPECT_EQ(ordinal(11), "11th");
  EXPECT_EQ(ordinal(12), "12th");
  EXPECT_EQ(ordinal(13), "13th");
  EXPECT_EQ(ordinal(21), "21st");
  EXPECT_EQ(ordinal(102), "102nd");
  EXPECT_EQ(ordinal(111), "111th");
}

TEST(ParseVerdict, Shapes) {
  EXPECT_EQ(parse_verdict("Posa for 2nd closure"), (ParsedVerdict{2, 2}));
  EXPECT_EQ(parse_verdict("Chvatal for 4th closure, Posa for 5th closure"), (ParsedVerdict{5, 4}));
  EXPECT_EQ(parse_verdict("Chvatal for 1st closure"), (ParsedVerdict{std::nullopt, 1}));
  EXPECT_EQ(parse_verdict("no decision"), (ParsedVerdict{}));
  EXPECT_THROW(parse_verdict("Posa for 2th closure"), ParseError);
  EXPECT_THROW(parse_verdict("Posa for 0th closure "), ParseError);
  EXPECT_THROW(parse_verdict("maybe"), ParseError);
}
