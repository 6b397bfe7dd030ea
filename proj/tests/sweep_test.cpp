#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "srpl/sweep.hpp"

using namespace srpl;

namespace {

std::vector<std::tuple<std::string, std::string, std::string, std::string>> verdicts(const SweepResult& r) {
  std::vector<std::tuple<std::string, std::string, std::string, std::string>> out;
  for (const auto& row : r.rows) out.emplace_back(row.signature, row.check_id, row.outcome.theorem, row.outcome.oracle);
  return out;
}

/// Canonical form by trying every relabeling: the largest face set.
FaceSet canonical(int k, FaceSet s) {
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  FaceSet best = 0;
  do {
    FaceSet img = 0;
    for (Face f = 0; f < (Face{1} << k); ++f) {
      if (!(s >> f & 1)) continue;
      Face g = 0;
      for (int v = 0; v < k; ++v)
        if (f >> v & 1) g |= Face{1} << perm[v];
      img |= FaceSet{1} << g;
    }
    best = std::max(best, img);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Number of isomorphism classes of complexes on exactly [k], by brute force
/// over all subsets of the face lattice.
std::size_t brute_class_count(int k) {
  const int faces = 1 << k;
  std::set<FaceSet> classes;
  std::vector<Face> big;
  for (Face f = 0; f < static_cast<Face>(faces); ++f)
    if (face_size(f) >= 2) big.push_back(f);
  FaceSet base = 1;
  for (int v = 0; v < k; ++v) base |= FaceSet{1} << (Face{1} << v);
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << big.size()); ++pick) {
    FaceSet s = base;
    for (std::size_t i = 0; i < big.size(); ++i)
      if (pick >> i & 1) s |= FaceSet{1} << big[i];
    bool closed = true;
    for (Face f : big)
      if (s >> f & 1)
        for (int v = 0; v < k; ++v)
          if ((f >> v & 1) && !(s >> (f & ~(Face{1} << v)) & 1)) closed = false;
    if (closed) classes.insert(canonical(k, s));
  }
  return classes.size();
}

}  // namespace

TEST(Enumerate, ClassCountsMatchBruteForce) {
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(complex_classes(k).size(), brute_class_count(k)) << k;
}

TEST(Enumerate, KnownClassCounts) {
  const std::vector<std::size_t> expected{1, 2, 5, 20, 180, 16143};
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(complex_classes(k).size(), expected[k - 1]);
}

TEST(Enumerate, ClassesHaveFullVertexSetAndAreDistinct) {
  const auto all = complex_classes(5);
  std::set<std::string> sigs;
  for (const auto& c : all) {
    EXPECT_EQ(c.vertex_set(), full_face(5));
    sigs.insert(signature(c));
  }
  EXPECT_EQ(sigs.size(), all.size());
}

TEST(Enumerate, FixedSampleIsDeterministic) {
  std::vector<int> items(1000);
  for (int i = 0; i < 1000; ++i) items[i] = i;
  const auto a = fixed_sample(items, 50, 9);
  EXPECT_EQ(a, fixed_sample(items, 50, 9));
  EXPECT_EQ(a.size(), 50u);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  EXPECT_EQ(fixed_sample(items, 5000, 9).size(), 1000u);
}

TEST(Enumerate, RandomComplexesOnSevenVertices) {
  const auto r = random_complexes(7, 40, 1);
  EXPECT_EQ(r.size(), 40u);
  for (const auto& c : r) EXPECT_EQ(c.vertex_set(), full_face(7));
}

TEST(Sweep, DimFilter) {
  EXPECT_TRUE(DimFilter::parse("any").accepts(-1));
  EXPECT_TRUE(DimFilter::parse(">=2").accepts(3));
  EXPECT_FALSE(DimFilter::parse(">=2").accepts(1));
  EXPECT_TRUE(DimFilter::parse("1").accepts(1));
  EXPECT_FALSE(DimFilter::parse("1").accepts(2));
  EXPECT_TRUE(DimFilter::parse("<=1").accepts(0));
  EXPECT_THROW(DimFilter::parse(">=x"), std::invalid_argument);
}

TEST(Sweep, NoDisagreementsUpToFiveVertices) {
  SweepOptions opt;
  opt.n_max = 5;
  const auto r = run_sweep(opt);
  EXPECT_EQ(r.total, 208u);
  EXPECT_EQ(r.completed, r.total);
  EXPECT_FALSE(r.resume_token);
  EXPECT_EQ(r.disagreements(), 0u);
  EXPECT_GT(r.rows.size(), 1000u);
}

TEST(Sweep, GraphsPairCriterion) {
  SweepOptions opt;
  opt.n_max = 5;
  opt.dims = DimFilter::parse("1");
  opt.checks = {"pair-criterion"};
  const auto r = run_sweep(opt);
  EXPECT_EQ(r.disagreements(), 0u);
  for (const auto& row : r.rows) EXPECT_EQ(row.check_id, "pair-criterion");
}

TEST(Sweep, ParallelismDoesNotChangeResults) {
  SweepOptions opt;
  opt.n_max = 4;
  const auto one = run_sweep(opt);
  opt.parallel = 3;
  const auto three = run_sweep(opt);
  EXPECT_EQ(verdicts(one), verdicts(three));
}

TEST(Sweep, BudgetGivesResumableToken) {
  SweepOptions opt;
  opt.n_max = 5;
  opt.checks = {"symbolic-cm-m3"};
  const auto full = run_sweep(opt);

  opt.budget_seconds = 1e-9;
  const auto partial = run_sweep(opt);
  ASSERT_TRUE(partial.resume_token);
  EXPECT_LT(partial.completed, partial.total);

  opt.budget_seconds = 0;
  opt.resume_from = *partial.resume_token;
  const auto rest = run_sweep(opt);
  EXPECT_FALSE(rest.resume_token);
  auto joined = verdicts(partial);
  const auto tail = verdicts(rest);
  joined.insert(joined.end(), tail.begin(), tail.end());
  EXPECT_EQ(joined, verdicts(full));
}

TEST(Sweep, UnknownCheckAndRange) {
  SweepOptions opt;
  opt.checks = {"no-such-check"};
  EXPECT_THROW(run_sweep(opt), std::invalid_argument);
  SweepOptions big;
  big.n_max = 8;
  EXPECT_THROW(run_sweep(big), std::invalid_argument);
}

TEST(Sweep, CsvHeader) {
  SweepOptions opt;
  opt.n_max = 2;
  opt.checks = {"reisner"};
  const auto csv = to_csv(run_sweep(opt));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "complex_signature,check_id,theorem_verdict,oracle_verdict,seconds");
  EXPECT_NE(csv.find("\"2:12\",reisner,holds,holds,"), std::string::npos);
}
