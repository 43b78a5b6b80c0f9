#include <gtest/gtest.h>

#include <set>

#include "triarr/certificates.hpp"

using namespace triarr;

namespace {

const std::vector<int> kOrders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 19, 25, 27, 29, 31};

// q = p^k -> (p, k)
std::pair<int, int> split_order(int q) {
  for (int p = 2; p <= q; ++p)
    if (q % p == 0) {
      int k = 0;
      while (q > 1) q /= p, ++k;
      return {p, k};
    }
  return {q, 1};
}

// Eligibility computed from number theory, without the library's root finder.
bool expected_eligible(const std::string& name, int q) {
  const auto [p, k] = split_order(q);
  if (name == "FANO") return p == 2;
  if (name == "DUAL_HESSE" || name == "MOEBIUS_KANTOR") return p == 3;
  if (name == "TEN_E1") return p == 2 && k % 2 == 0;  // cube roots of unity need 3 | q - 1
  if (name == "TEN_E2") return p == 5;
  if (name == "ELEVEN_16") {
    // x^2 + x - 1 has discriminant 5.
    if (p == 2) return false;
    if (p == 5) return true;
    if (k % 2 == 0) return true;  // GF(p^2) contains every square root from GF(p)
    return p % 5 == 1 || p % 5 == 4;
  }
  const int s = std::stoi(name.substr(6));
  return s <= q * q + q + 1;
}

int error_code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return static_cast<int>(e.code());
  }
  return -1;
}

}  // namespace

TEST(Certificates, NamesResolve) {
  for (const auto& n : builtin_names()) EXPECT_EQ(builtin(n).name, n);
  EXPECT_EQ(error_code_of([] { builtin("TWELVE"); }), static_cast<int>(ErrorCode::UnknownName));
}

TEST(Certificates, VerifyExactlyOnEligibleFields) {
  for (const auto& name : builtin_names()) {
    const Certificate c = builtin(name);
    for (int q : kOrders) {
      const FieldSpec f = make_field_of_order(q);
      const bool want = expected_eligible(name, q);
      ASSERT_EQ(eligible(c, f), want) << name << " GF(" << q << ")";
      if (!want) {
        EXPECT_EQ(error_code_of([&] { verify(c, f); }), static_cast<int>(ErrorCode::IneligibleField));
        continue;
      }
      const auto roots = c.parameter ? parameter_choices(c, f) : std::vector<FieldElement>{};
      const auto run = [&](const std::optional<FieldElement>& x) {
        const auto r = verify(c, f, x);
        EXPECT_TRUE(r.passed()) << name << " GF(" << q << ")";
        EXPECT_EQ(r.actual_tvec, c.expected_tvec);
        EXPECT_TRUE(r.identity_ok);
        EXPECT_TRUE(r.point_mismatches.empty());
      };
      if (roots.empty()) {
        run(std::nullopt);
      } else {
        for (const auto& x : roots) run(x);
      }
    }
  }
}

TEST(Certificates, IneligibleNamesThePredicate) {
  try {
    verify(builtin("TEN_E1"), make_field(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IneligibleField);
    EXPECT_NE(std::string(e.what()).find("x^2+x+1"), std::string::npos);
  }
  const auto failed = failed_eligibility(builtin("TEN_E1"), make_field(5));
  EXPECT_EQ(failed.size(), 2u);
}

TEST(Certificates, ParameterValidation) {
  const FieldSpec f = make_field(11);
  const Certificate c = builtin("ELEVEN_16");
  EXPECT_EQ(error_code_of([&] { verify(c, f, f.from_code(4)); }), static_cast<int>(ErrorCode::InvalidArgument));
  EXPECT_EQ(error_code_of([&] { verify(builtin("FANO"), make_field(2), make_field(2).one()); }),
            static_cast<int>(ErrorCode::InvalidArgument));
  std::set<std::uint32_t> roots;
  for (const auto& x : parameter_choices(c, f)) roots.insert(x.code());
  EXPECT_EQ(roots, (std::set<std::uint32_t>{3, 7}));
  EXPECT_EQ(chosen_parameter(c, f)->code(), 3u);
}

TEST(Certificates, ElevenRootsGiveIsomorphicArrangements) {
  for (int q : {11, 19, 29, 31}) {
    const FieldSpec f = make_field(q);
    const Certificate c = builtin("ELEVEN_16");
    const auto roots = parameter_choices(c, f);
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_TRUE(isomorphic(abstract(instantiate(c, f, roots[0])), abstract(instantiate(c, f, roots[1])))) << q;
  }
}

TEST(Certificates, TenE2ErrataReportedExactly) {
  for (int q : {5, 25}) {
    const auto r = verify(builtin("TEN_E2"), make_field_of_order(q));
    EXPECT_TRUE(r.passed());
    ASSERT_TRUE(r.table_checked);
    ASSERT_EQ(r.cell_mismatches.size(), 4u);
    std::set<std::string> cols;
    for (const auto& m : r.cell_mismatches) {
      EXPECT_TRUE(m.documented_erratum);
      EXPECT_TRUE(m.row == "M_3" || m.row == "M_4");
      cols.insert(m.column);
    }
    EXPECT_EQ(cols, (std::set<std::string>{"P_23", "P_26"}));
  }
}

TEST(Certificates, TablesMatchForTenE1) {
  const auto r = verify(builtin("TEN_E1"), make_field_of_order(4));
  EXPECT_TRUE(r.table_checked);
  EXPECT_TRUE(r.cell_mismatches.empty());
  // Every listed point is on at least three lines.
  for (std::size_t c = 0; c < r.actual_table.columns.size(); ++c) EXPECT_GE(r.actual_table.column_sum(c), 3);
}

TEST(Certificates, DualHesseAndMoebiusKantor) {
  const auto dh = dual_hesse_from_pg23();
  EXPECT_EQ(dh.size(), 9u);
  EXPECT_EQ(profile(dh).tvec, (TVector{{3, 12}}));
  for (std::size_t i = 0; i < dh.size(); ++i)
    EXPECT_EQ(profile(remove_line(dh, i)).tvec, (TVector{{3, 8}, {2, 4}}));
  EXPECT_TRUE(isomorphic(abstract(dh), abstract(instantiate(builtin("DUAL_HESSE"), make_field(3)))));
}

TEST(Certificates, TorsionAgainstDirectEnumeration) {
  for (int p : {5, 7, 11}) {
    const int n = p * p;
    // Zero-sum triples of distinct points, and pairs {X, -2X} with X != 0.
    std::int64_t triples = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          if ((a / p + b / p + c / p) % p == 0 && (a % p + b % p + c % p) % p == 0) ++triples;
    std::set<std::pair<int, int>> pairs;
    std::vector<int> through(n, 0);
    for (int x = 1; x < n; ++x) {
      const int y = ((p - 2 * (x / p) % p) % p) * p + (p - 2 * (x % p) % p) % p;
      pairs.insert({std::min(x, y), std::max(x, y)});
    }
    for (const auto& [x, y] : pairs) ++through[x], ++through[y];
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const int c = ((2 * p - a / p - b / p) % p) * p + (2 * p - a % p - b % p) % p;
        if (c > b) ++through[a], ++through[b], ++through[c];
      }

    const auto m = torsion_model(p);
    EXPECT_EQ(static_cast<std::int64_t>(m.secant_blocks.size()), triples);
    EXPECT_EQ(m.tangent_pairs.size(), pairs.size());
    EXPECT_TRUE(linearity_check(m));

    const auto r = torsion_dual_counts(p);
    EXPECT_EQ(r.lines, n);
    EXPECT_EQ(r.t3, triples);
    EXPECT_EQ(r.t2, static_cast<std::int64_t>(pairs.size()));
    EXPECT_EQ(r.lines_through_zero, through[0]);
    EXPECT_EQ(r.lines_through_other, through[1]);
    EXPECT_TRUE(r.uniform_nonzero);
    EXPECT_EQ(r.identity_lhs, r.identity_rhs);
    EXPECT_EQ(r.gap, schoenheim_u3(n) - triples);
    EXPECT_TRUE(r.closed_forms_hold);
    EXPECT_TRUE(r.linear);
  }
  const auto r5 = torsion_dual_counts(5);
  EXPECT_EQ(r5.t3, 92);
  EXPECT_EQ(r5.t2, 24);
  EXPECT_EQ(r5.gap, 8);
}

TEST(Certificates, CorruptedTorsionModelFailsLinearity) {
  auto m = torsion_model(5);
  m.tangent_pairs.pop_back();
  EXPECT_FALSE(linearity_check(m));
  m = torsion_model(5);
  m.secant_blocks.push_back(m.secant_blocks.front());
  EXPECT_FALSE(linearity_check(m));
}

TEST(Certificates, TorsionErrors) {
  const auto m3 = torsion_model(3);
  EXPECT_EQ(m3.secant_blocks.size(), 12u);
  EXPECT_TRUE(m3.tangent_pairs.empty());
  EXPECT_TRUE(linearity_check(m3));
  EXPECT_EQ(error_code_of([] { torsion_dual_counts(3); }), static_cast<int>(ErrorCode::UnsupportedPrime));
  EXPECT_EQ(error_code_of([] { torsion_model(9); }), static_cast<int>(ErrorCode::NonPrime));
  EXPECT_EQ(error_code_of([] { torsion_dual_counts(9); }), static_cast<int>(ErrorCode::NonPrime));
  EXPECT_EQ(error_code_of([] { torsion_model(2); }), static_cast<int>(ErrorCode::UnsupportedPrime));
}
