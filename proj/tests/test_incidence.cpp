#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "triarr/incidence.hpp"

using namespace triarr;

namespace {

Arrangement random_arrangement(const FieldSpec& f, std::mt19937_64& rng, int s) {
  auto lines = enumerate_lines(f);
  std::shuffle(lines.begin(), lines.end(), rng);
  lines.resize(s);
  return Arrangement(f, lines);
}

// t-vector from per-point multiplicities over the whole plane.
TVector brute_tvec(const Arrangement& a) {
  TVector t;
  for (const auto& p : enumerate_points(a.field())) {
    int m = 0;
    for (const auto& l : a.lines()) m += incident(p, l) ? 1 : 0;
    if (m >= 2) ++t[m];
  }
  return t;
}

AbstractIncidence with_pairs(int n, std::vector<std::vector<int>> blocks) {
  std::set<std::pair<int, int>> covered;
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) covered.insert(std::minmax(b[i], b[j]));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!covered.count({i, j})) blocks.push_back({i, j});
  return {n, blocks};
}

}  // namespace

TEST(Incidence, Choose2AndIdentity) {
  EXPECT_EQ(choose2(0), 0);
  EXPECT_EQ(choose2(11), 55);
  EXPECT_TRUE(check_identity(11, {{3, 16}, {2, 7}}));
  EXPECT_FALSE(check_identity(11, {{3, 17}, {2, 7}}));
  EXPECT_EQ(triple_count({{4, 1}, {3, 12}, {2, 3}}, TripleMetric::ExactlyThree), 12);
  EXPECT_EQ(triple_count({{4, 1}, {3, 12}, {2, 3}}, TripleMetric::AtLeastThree), 13);
}

TEST(Incidence, ArrangementValidation) {
  const FieldSpec f = make_field(3);
  const auto x = ProjLine::of(f, 1, 0, 0);
  EXPECT_THROW(Arrangement(f, {}), Error);
  try {
    Arrangement(f, {x, ProjLine::of(f, 2, 0, 0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateLines);
  }
  try {
    Arrangement(f, {ProjLine::of(make_field(5), 1, 0, 0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
  const Arrangement a(f, {x});
  EXPECT_EQ(a.label(0), "L_1");
  try {
    (void)a.index_of("M_1");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownLabel);
  }
}

// Profile against brute force; identity and parity lemma on random
// arrangements, 1000 per field.
TEST(Incidence, RandomArrangementsProperties) {
  std::mt19937_64 rng(20240601);
  for (int q : {2, 3, 4, 5, 7}) {
    const FieldSpec f = make_field_of_order(q);
    const int max_s = static_cast<int>(std::min<std::uint32_t>(q * q + q + 1, 12));
    for (int trial = 0; trial < 1000; ++trial) {
      const int s = 1 + static_cast<int>(rng() % max_s);
      const Arrangement a = random_arrangement(f, rng, s);
      const auto prof = profile(a);
      ASSERT_EQ(prof.tvec, brute_tvec(a));
      ASSERT_TRUE(check_identity(s, prof.tvec));
      const auto par = parity_check(a, prof);
      ASSERT_TRUE(par.all_hold);
      ASSERT_TRUE(par.parity_consistent);
      // Lines through each point really contain it.
      for (const auto& ip : prof.points)
        for (int l : ip.lines) ASSERT_TRUE(incident(ip.point, a.lines()[l]));
    }
  }
}

TEST(Incidence, ParityOnlyTripleForcesOddS) {
  // Fano: every line meets the others in 3 triple points, s = 7 odd.
  const FieldSpec f = make_field(2);
  const Arrangement fano(f, enumerate_lines(f));
  const auto r = parity_check(fano);
  EXPECT_TRUE(r.any_only_triple);
  EXPECT_TRUE(r.parity_consistent);
  for (const auto& lp : r.lines) EXPECT_EQ(lp.excess_sum, 6);
}

TEST(Incidence, TableAndCsv) {
  const FieldSpec f = make_field(3);
  const Arrangement a(f, {ProjLine::of(f, 1, 0, 0), ProjLine::of(f, 0, 1, 0), ProjLine::of(f, 1, 1, 0)},
                      {"X", "Y", "Z"});
  const auto t = table(a, profile(a));
  ASSERT_EQ(t.columns.size(), 1u);
  EXPECT_EQ(t.columns[0], "(0:0:1)");
  EXPECT_TRUE(t.cell("Y", "(0:0:1)"));
  EXPECT_EQ(t.column_sum(0), 3);
  EXPECT_EQ(t.to_csv(), ",(0:0:1)\nX,+\nY,+\nZ,+\n");
  EXPECT_THROW((void)t.cell("W", "(0:0:1)"), Error);

  const auto t2 = table(a, {{"P", ProjPoint::of(f, 0, 1, 0)}});
  EXPECT_EQ(t2.to_csv(), ",P\nX,+\nY,\nZ,\n");
}

TEST(Incidence, RemoveLine) {
  const FieldSpec f = make_field(2);
  const Arrangement fano(f, enumerate_lines(f));
  const auto six = remove_line(fano, 3);
  EXPECT_EQ(six.size(), 6u);
  EXPECT_EQ(profile(six).tvec, (TVector{{3, 4}, {2, 3}}));
  EXPECT_THROW(remove_line(fano, 7), Error);
  EXPECT_THROW(remove_line(Arrangement(f, {fano.lines()[0]}), 0), Error);
}

TEST(Incidence, IsomorphismUnderRelabeling) {
  std::mt19937_64 rng(7);
  for (int q : {3, 4, 5}) {
    const FieldSpec f = make_field_of_order(q);
    for (int trial = 0; trial < 50; ++trial) {
      const Arrangement a = random_arrangement(f, rng, 8);
      auto lines = a.lines();
      std::vector<int> perm(lines.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<ProjLine> permuted(lines.size());
      for (std::size_t i = 0; i < lines.size(); ++i) permuted[perm[i]] = lines[i];
      const Arrangement b(f, permuted);
      const auto x = abstract(a), y = abstract(b);
      const auto m = find_isomorphism(x, y);
      ASSERT_TRUE(m.has_value());
      // Check the map sends blocks to blocks.
      std::set<std::vector<int>> yb;
      for (auto blk : y.blocks) {
        std::sort(blk.begin(), blk.end());
        yb.insert(blk);
      }
      for (const auto& blk : x.blocks) {
        std::vector<int> img;
        for (int l : blk) img.push_back((*m)[l]);
        std::sort(img.begin(), img.end());
        ASSERT_TRUE(yb.count(img));
      }
    }
  }
}

TEST(Incidence, NonIsomorphicSameTvector) {
  // Two triple points sharing a line versus two disjoint triple points.
  const auto shared = with_pairs(6, {{0, 1, 2}, {0, 3, 4}});
  const auto disjoint = with_pairs(6, {{0, 1, 2}, {3, 4, 5}});
  ASSERT_EQ(shared.tvec(), disjoint.tvec());
  EXPECT_FALSE(isomorphic(shared, disjoint));
  EXPECT_TRUE(isomorphic(shared, with_pairs(6, {{5, 1, 2}, {5, 3, 0}})));
  EXPECT_TRUE(shared.is_partial_linear_space());
  EXPECT_FALSE(AbstractIncidence({3, {{0, 1}, {0, 1, 2}}}).is_partial_linear_space());
}
