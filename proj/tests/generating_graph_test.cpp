#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace testing_support;

namespace {

DegreeMatrix exact(const PermGroup& g, const DegreeMatrixOptions& options = {}) {
  return vertex_degree_matrix(g, conjugacy_classes(g), normal_subgroups_above_derived(g), options);
}

}  // namespace

TEST(IsGeneratingPair, S3AndErrors) {
  const PermGroup s3 = corpus_group("s3");
  const Permutation t = Permutation::from_cycles(3, "(1,2)");
  EXPECT_TRUE(is_generating_pair(s3, t, Permutation::from_cycles(3, "(1,2,3)")));
  EXPECT_TRUE(is_generating_pair(s3, t, Permutation::from_cycles(3, "(2,3)")));
  EXPECT_FALSE(is_generating_pair(s3, t, t));
  EXPECT_THROW(is_generating_pair(s3, t, Permutation::from_cycles(4, "(1,2)")), InvalidArgument);
  EXPECT_THROW(is_generating_pair(from_cycles(4, {"(1,2)", "(3,4)"}), Permutation::from_cycles(4, "(1,2)"),
                                  Permutation::from_cycles(4, "(3,4)")),
               NotTransitive);
}

TEST(VertexDegreeMatrix, S3) {
  const DegreeMatrix m = exact(corpus_group("s3"));
  EXPECT_EQ(m, matrix({1, 3, 2}, {{2, 2}, {3, 0}}));
  EXPECT_EQ(m.kind, DegreeKind::exact);
}

TEST(VertexDegreeMatrix, A4KleinClassIsZero) {
  const PermGroup a4 = corpus_group("a4");
  const ClassTable classes = conjugacy_classes(a4);
  const DegreeMatrix m = exact(a4);
  ASSERT_EQ(classes.orders[1], 2U);  // the involutions of V4
  for (std::size_t j = 0; j < m.size(); ++j) EXPECT_EQ(m.entries[0][j] == 0, j == 0) << j;
}

TEST(VertexDegreeMatrix, BruteForceOnSmallCorpus) {
  for (const std::string stem : {"s3", "s4", "a4", "d8", "q8", "a5", "s5"}) {
    const PermGroup g = corpus_group(stem);
    const ClassTable classes = conjugacy_classes(g);
    const DegreeMatrix m = exact(g);
    for (std::size_t i = 1; i < classes.size(); ++i) {
      for (std::size_t j = 1; j < classes.size(); ++j) {
        EXPECT_EQ(m.entries[i - 1][j - 1], Rational(brute_force_degree(g, classes, i, j)))
            << stem << " cell " << i << "," << j;
      }
    }
  }
}

TEST(VertexDegreeMatrix, SymmetryIdentity) {
  for (const std::string stem : {"s4", "a5", "s5", "psl3_2", "pgl2_7", "a6", "s6", "psl2_11"}) {
    const PermGroup g = corpus_group(stem);
    const ClassTable classes = conjugacy_classes(g);
    const DegreeMatrix m = exact(g);
    for (std::size_t i = 0; i < m.size(); ++i) {
      const Rational ci(centralizer(g, classes.reps[i + 1]).order());
      for (std::size_t j = 0; j < m.size(); ++j) {
        const Rational cj(centralizer(g, classes.reps[j + 1]).order());
        EXPECT_EQ(m.entries[i][j] * cj, m.entries[j][i] * ci) << stem;
      }
    }
  }
}

TEST(VertexDegreeMatrix, ShortcutsDoNotChangeValues) {
  DegreeMatrixOptions plain;
  plain.use_power_maps = false;
  plain.use_involution_shortcut = false;
  for (const std::string stem : {"s4", "d8", "q8", "a5", "s5", "psl3_2", "pgl2_7", "a6", "s6", "psl2_8"}) {
    const PermGroup g = corpus_group(stem);
    const ClassTable classes = conjugacy_classes(g);
    EXPECT_EQ(exact(g), vertex_degree_matrix(g, classes, {}, plain)) << stem;
  }
}

TEST(VertexDegreeMatrix, ThreadCountDoesNotMatter) {
  const PermGroup g = corpus_group("pgl2_7");
  DegreeMatrixOptions one, four;
  one.threads = 1;
  four.threads = 4;
  EXPECT_EQ(exact(g, one), exact(g, four));
}

TEST(VertexDegreeMatrix, RejectsBadInput) {
  const PermGroup s4 = corpus_group("s4");
  const ClassTable classes = conjugacy_classes(s4);
  EXPECT_THROW(vertex_degree_matrix(s4, conjugacy_classes(corpus_group("a4")), {}), InvalidArgument);
  const PermGroup not_normal = s4.subgroup_generated_by({Permutation::from_cycles(4, "(1,2)")});
  EXPECT_THROW(vertex_degree_matrix(s4, classes, {not_normal}), InvalidArgument);
  EXPECT_THROW(vertex_degree_matrix(s4, classes, {s4}), InvalidArgument);
  const PermGroup intransitive = from_cycles(4, {"(1,2)", "(3,4)"});
  EXPECT_THROW(vertex_degree_matrix(intransitive, conjugacy_classes(intransitive), {}), NotTransitive);
}

TEST(DegreeMatrix, DimensionChecks) {
  EXPECT_THROW(matrix({1, 3, 2}, {{1, 1}}).check_dimensions(), InvalidArgument);
  EXPECT_THROW(matrix({1, 3, 2}, {{1, 1}, {1}}).check_dimensions(), InvalidArgument);
  EXPECT_NO_THROW(matrix({1, 3, 2}, {{1, 1}, {1, 1}}).check_dimensions());
}
