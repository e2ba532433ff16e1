#include <gtest/gtest.h>

#include <random>
#include <set>

#include "covarray/construct.hpp"
#include "covarray/coverage.hpp"
#include "covarray/geometry.hpp"
#include "covarray/verify.hpp"
#include "support.hpp"

using namespace covarray;

namespace {

SymbolMatrix all_vectors(std::uint32_t v, std::uint32_t k) {
  std::uint64_t rows = detail::ipow(v, k);
  SymbolMatrix a(rows, k);
  for (std::uint64_t r = 0; r < rows; ++r) {
    std::uint64_t x = r;
    for (std::uint32_t c = k; c-- > 0;) {
      a.at(r, c) = static_cast<Symbol>(x % v);
      x /= v;
    }
  }
  return a;
}

SymbolMatrix without_row(const SymbolMatrix& a, std::size_t skip) {
  SymbolMatrix out(0, a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (r != skip) out.append_row(a.row(r));
  return out;
}

// Gaussian elimination over GF(p) on a dense copy, independent of the engine.
std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    std::uint32_t inv = 1;
    while (inv * m[rank][c] % p != 1) ++inv;
    for (auto& x : m[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rank && m[r][c]) {
        std::uint32_t f = m[r][c];
        for (std::size_t k = 0; k < cols; ++k) m[r][k] = (m[r][k] + p * p - f * m[rank][k]) % p;
      }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(Coverage, FullSpaceCoversEverything) {
  auto a = all_vectors(3, 4);
  auto rep = verify_coverage(a, 3, 4);
  EXPECT_TRUE(rep.passed);
  EXPECT_EQ(rep.lambda_min, 1u);
  EXPECT_TRUE(rep.witnesses.empty());
  EXPECT_EQ(rep.subsets, 1u);
  auto rep2 = verify_coverage(a, 3, 2);
  EXPECT_EQ(rep2.lambda_min, 9u);
  EXPECT_EQ(rep2.subsets, 6u);
}

TEST(Coverage, MissingRowGivesExactWitness) {
  auto a = all_vectors(2, 3);
  auto rep = verify_coverage(without_row(a, 5), 2, 3);  // row 5 = (1, 0, 1)
  EXPECT_FALSE(rep.passed);
  ASSERT_EQ(rep.witnesses.size(), 1u);
  EXPECT_EQ(rep.witnesses[0].columns, (std::vector<std::uint32_t>{0, 1, 2}));
  EXPECT_EQ(rep.witnesses[0].tuple, (std::vector<Symbol>{1, 0, 1}));
  EXPECT_EQ(rep.lambda_min, 0u);
  EXPECT_EQ(rep.deficient_tuples, 1u);
}

TEST(Coverage, LambdaRequirement) {
  auto a = all_vectors(2, 4);
  CoverageOptions opt;
  opt.lambda_required = 2;
  EXPECT_TRUE(verify_coverage(a, 2, 3, opt).passed);
  opt.lambda_required = 3;
  auto rep = verify_coverage(a, 2, 3, opt);
  EXPECT_FALSE(rep.passed);
  EXPECT_EQ(rep.lambda_min, 2u);
  EXPECT_EQ(rep.deficient_tuples, 4u * 8u);
}

TEST(Coverage, WitnessCapAndOrder) {
  SymbolMatrix zeros(3, 5);
  CoverageOptions opt;
  opt.witness_cap = 7;
  auto rep = verify_coverage(zeros, 2, 2, opt);
  EXPECT_FALSE(rep.passed);
  EXPECT_EQ(rep.witnesses.size(), 7u);
  EXPECT_EQ(rep.deficient_tuples, 10u * 3u);
  // colex order: {0,1}, {0,2}, {1,2}, ...
  EXPECT_EQ(rep.witnesses[0].columns, (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(rep.witnesses[3].columns, (std::vector<std::uint32_t>{0, 2}));
  EXPECT_EQ(rep.witnesses[6].columns, (std::vector<std::uint32_t>{1, 2}));
}

TEST(Coverage, ThreadCountDoesNotChangeReport) {
  auto ca = build_ca4_half(FieldTower::for_order(3, 4));
  auto damaged = without_row(ca.array, 100);
  CoverageOptions one, many;
  one.threads = 1;
  many.threads = 5;
  auto a = verify_coverage(damaged, 3, 4, one), b = verify_coverage(damaged, 3, 4, many);
  EXPECT_EQ(a.passed, b.passed);
  EXPECT_EQ(a.deficient_tuples, b.deficient_tuples);
  ASSERT_EQ(a.witnesses.size(), b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
    EXPECT_EQ(a.witnesses[i].columns, b.witnesses[i].columns);
    EXPECT_EQ(a.witnesses[i].tuple, b.witnesses[i].tuple);
  }
}

TEST(Coverage, MemoryGuard) {
  SymbolMatrix a(1, 8);
  EXPECT_THROW(verify_coverage(a, 200, 4), InvalidArgument);
  EXPECT_THROW(verify_coverage(a, 2, 9), InvalidArgument);
  EXPECT_THROW(verify_coverage(a, 2, 0), InvalidArgument);
}

TEST(Coverage, ColexEnumeration) {
  std::vector<std::uint32_t> c{0, 1, 2};
  std::uint64_t rank = 0;
  do {
    EXPECT_EQ(detail::colex_unrank(rank, 3, 7), c);
    ++rank;
  } while (detail::colex_next(c, 7));
  EXPECT_EQ(rank, 35u);
}

TEST(Coverage, DeletingAHalfArrayRowBreaksStrengthFour) {
  auto ca = build_ca4_half(FieldTower::for_order(3, 4));
  // last row whose removal loses a 4-tuple; for q = 3 only the zero row qualifies
  std::size_t victim = ca.N();
  for (std::size_t r = ca.N(); r-- > 0;)
    if (!verify_coverage(without_row(ca.array, r), 3, 4, CoverageOptions{1, 1, {}}).passed) {
      victim = r;
      break;
    }
  ASSERT_LT(victim, ca.N());
  EXPECT_EQ(victim, 0u);
  auto rep = verify_coverage(without_row(ca.array, victim), 3, 4);
  ASSERT_FALSE(rep.passed);
  ASSERT_FALSE(rep.witnesses.empty());
  // the witness tuple appeared only in the deleted row
  const auto& w = rep.witnesses[0];
  auto row = ca.array.row(victim);
  for (std::size_t i = 0; i < w.columns.size(); ++i) EXPECT_EQ(row[w.columns[i]], w.tuple[i]);
}

TEST(Coverage, ColumnDeletionIsMonotone) {
  auto ca = build_ca4_half(FieldTower::for_order(3, 4));
  for (std::size_t k = 4; k <= ca.k(); ++k) EXPECT_TRUE(verify_coverage(restrict_columns(ca, k), 4).passed);
}

TEST(Verdict, LineFormat) {
  EXPECT_EQ(verdict_line(true, 4, 1, 0, 12), "VERDICT pass t=4 lambda_min=1 witnesses=0 ms=12");
  CoverageReport r;
  r.passed = false;
  r.t = 3;
  r.lambda_min = 0;
  r.witnesses.resize(2);
  r.elapsed_ms = 5;
  EXPECT_EQ(verdict_line(r), "VERDICT fail t=3 lambda_min=0 witnesses=2 ms=5");
}

TEST(ColumnRank, MatchesDenseElimination) {
  std::mt19937 rng(7);
  for (std::uint32_t q : {3u, 5u, 7u}) {
    auto t = FieldTower::for_order(q, 4);
    auto g = generator_matrix(t, 3, 40);
    std::uniform_int_distribution<std::uint32_t> col(0, 39);
    for (int it = 0; it < 300; ++it) {
      std::vector<std::uint32_t> cols{col(rng), col(rng), col(rng), col(rng)};
      std::vector<std::vector<std::uint32_t>> dense(4, std::vector<std::uint32_t>(4));
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) dense[r][c] = g.at(r, cols[c]);
      EXPECT_EQ(column_rank(g, cols), rank_mod_p(dense, q));
    }
  }
}

TEST(RankEngine, HalfGeneratorsCoverEveryFourSet) {
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    auto cert = verify_rank_cphf(half_ovoid_generators(FieldTower::for_order(q, 4)), 4);
    EXPECT_TRUE(cert.passed()) << "q = " << q;
    const std::uint64_t h = (q * q + 1) / 2;
    EXPECT_EQ(cert.sets_checked, detail::binomial(h, 4));
  }
}

TEST(RankEngine, OvoidGeneratorIsACapButNotFourIndependent) {
  auto t = FieldTower::for_order(3, 4);
  auto g = generator_matrix(t, 4, 10);
  EXPECT_TRUE(verify_rank_cphf({g}, 3).passed());
  auto cert = verify_rank_cphf({g}, 4);
  // uncovered 4-sets are exactly the 4-subsets of circles
  std::set<std::vector<std::uint32_t>> expected;
  for (const auto& c : build_full_plane(t).circles) {
    ASSERT_EQ(c.size(), 4u);
    expected.insert(c);
  }
  EXPECT_EQ(std::set<std::vector<std::uint32_t>>(cert.uncovered_sets.begin(), cert.uncovered_sets.end()), expected);
  EXPECT_EQ(cert.uncovered_count, 30u);
}

TEST(RankEngine, AgreesWithBruteForceOnSpanArrays) {
  auto t = FieldTower::for_order(3, 4);
  auto gens = half_ovoid_generators(t);
  for (std::size_t drop = 0; drop < 3; ++drop) {
    std::vector<GeneratorMatrix> two;
    SymbolMatrix a(0, gens[0].cols);
    for (std::size_t i = 0; i < 3; ++i)
      if (i != drop) {
        two.push_back(gens[i]);
        a.append_rows(span_array(gens[i]));
      }
    auto cert = verify_rank_cphf(two, 4);
    auto rep = verify_coverage(a, 3, 4);
    EXPECT_EQ(cert.passed(), rep.passed);
  }
}

TEST(RankEngine, LabelsAndThreadsDoNotChangeResult) {
  auto t = FieldTower::for_order(5, 4);
  auto g = generator_matrix(t, 6, 26);
  RankOptions one, many;
  one.threads = 1;
  many.threads = 3;
  auto a = verify_rank_cphf({g}, 4, {}, one);
  auto b = verify_rank_cphf({g}, 4, {}, many);
  EXPECT_EQ(a.uncovered_sets, b.uncovered_sets);
  // reversing the column order and relabelling gives the same sets
  GeneratorMatrix rev = g;
  std::vector<std::uint32_t> labels(26);
  for (std::uint32_t c = 0; c < 26; ++c) {
    labels[c] = 25 - c;
    for (std::uint32_t r = 0; r < 4; ++r) rev.entries[r * 26 + c] = g.at(r, 25 - c);
  }
  auto c = verify_rank_cphf({rev}, 4, labels, one);
  EXPECT_EQ(a.uncovered_sets, c.uncovered_sets);
  EXPECT_EQ(a.uncovered_count, 130u * 15u);  // C(6,4) per circle
}

TEST(RankEngine, RejectsBadInput) {
  auto t = FieldTower::for_order(3, 4);
  EXPECT_THROW(verify_rank_cphf({}, 4), InvalidArgument);
  EXPECT_THROW(verify_rank_cphf({generator_matrix(t, 4, 5)}, 5), InvalidArgument);
  EXPECT_THROW(verify_rank_cphf({generator_matrix(t, 4, 5), generator_matrix(t, 4, 6)}, 4), InvalidArgument);
}

TEST(Structural, DefaultIngredientCasesPass) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    auto t = FieldTower::for_order(q, 4);
    auto rep = verify_recursive_structure(t, default_ingredient(q));
    ASSERT_EQ(rep.cases.size(), 3u);
    for (const auto& c : rep.cases) EXPECT_TRUE(c.passed) << "q = " << q << " " << c.name << ": " << c.detail;
  }
}

TEST(Structural, DetectsBrokenIngredient) {
  auto t = FieldTower::for_order(3, 4);
  auto R = default_ingredient(3);
  R.array = without_row(R.array, 1);
  auto rep = verify_recursive_structure(t, R);
  EXPECT_FALSE(rep.passed());
  EXPECT_FALSE(rep.cases[1].passed);
}

TEST(CrossCheck, EnginesAgreeOnConstructions) {
  for (std::uint32_t q : {3u, 5u}) {
    auto t = FieldTower::for_order(q, 4);
    for (const auto& ca : {build_ca4_half(t), build_ca4_full(t)}) {
      auto rep = cross_check(ca, 4);
      EXPECT_TRUE(rep.agree);
      EXPECT_TRUE(rep.engine.rows_match);
      EXPECT_TRUE(rep.coverage.passed);
      EXPECT_TRUE(rep.engine.passed);
    }
    auto ca3 = build_ca3_projective(FieldTower::for_order(q, 3));
    auto rep = cross_check(ca3, 3);
    EXPECT_TRUE(rep.agree);
    EXPECT_EQ(rep.engine.engine, "rank");
  }
}

TEST(CrossCheck, ImportedIngredientUsesStructuralEngine) {
  auto t = FieldTower::for_order(3, 4);
  auto R = support::merged_ingredient(3);
  auto ca = build_ca4_full(t, R, R.provenance.construction);
  auto rep = cross_check(ca, 4);
  EXPECT_EQ(rep.engine.engine, "structural");
  EXPECT_TRUE(rep.engine.rows_match);
  EXPECT_TRUE(rep.agree);
}

TEST(CrossCheck, CorruptedFileIsExplained) {
  auto ca = build_ca4_half(FieldTower::for_order(3, 4));
  ca.array = without_row(ca.array, 0);
  ca.array.append_row(ca.array.row(0));
  auto rep = cross_check(ca, 4);
  EXPECT_FALSE(rep.coverage.passed);
  EXPECT_TRUE(rep.engine.passed);
  EXPECT_FALSE(rep.engine.rows_match);
  EXPECT_FALSE(rep.agree);
  EXPECT_NE(rep.explanation.find("not this file"), std::string::npos);
}

TEST(CrossCheck, FlippedSymbol) {
  auto ca = build_ca4_half(FieldTower::for_order(5, 4));
  ca.array.at(ca.N() - 1, 0) = static_cast<Symbol>((ca.array.at(ca.N() - 1, 0) + 1) % 5);
  auto rep = cross_check(ca, 4);
  EXPECT_FALSE(rep.engine.rows_match);
  // either both fail, or brute force fails while the construction still passes
  EXPECT_TRUE(!rep.coverage.passed || rep.agree);
}

TEST(CrossCheck, RestrictedArrays) {
  auto t = FieldTower::for_order(5, 4);
  auto ca = restrict_columns(build_ca4_half(t), 9);
  auto rep = cross_check(ca, 4);
  EXPECT_TRUE(rep.agree);
  EXPECT_TRUE(rep.engine.rows_match);
}

TEST(CrossCheck, UnknownConstruction) {
  CoveringArray ca;
  ca.v = 2;
  ca.array = all_vectors(2, 4);
  EXPECT_THROW(cross_check(ca, 3), InvalidArgument);
}

TEST(EngineSelection, BruteForceBudget) {
  auto small = build_ca4_half(FieldTower::for_order(3, 4));
  EXPECT_TRUE(brute_force_feasible(small, 4));
  CoveringArray big;
  big.v = 13;
  big.array = SymbolMatrix(85681, 85);
  EXPECT_FALSE(brute_force_feasible(big, 4));
}
