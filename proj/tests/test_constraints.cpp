#include <gtest/gtest.h>

#include <set>

#include "triarr/constraints.hpp"

using namespace triarr;

namespace {

using Vec = std::array<FieldElement, 3>;

Vec vec(const FieldSpec& f, const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  (void)f;
  return {a, b, c};
}
Vec vec(const FieldSpec& f, int a, int b, int c) { return {f.element(a), f.element(b), f.element(c)}; }


// Every assignment over f, first variable slowest.
std::vector<Assignment> all_assignments(const FieldSpec& f, std::size_t n) {
  std::vector<Assignment> out;
  const auto els = enumerate_elements(f);
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Assignment a;
    for (auto i : idx) a.push_back(els[i]);
    out.push_back(a);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++idx[k] < els.size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
  }
}

std::set<std::vector<std::uint32_t>> codes(const std::vector<Assignment>& xs) {
  std::set<std::vector<std::uint32_t>> out;
  for (const auto& x : xs) {
    std::vector<std::uint32_t> c;
    for (const auto& v : x) c.push_back(v.code());
    out.insert(c);
  }
  return out;
}

// Numeric evaluation of the six-line star conditions straight from the
// geometry: intersection points by cross products, collinearity by
// determinants.
bool six_line_oracle(const FieldSpec& f, const Assignment& x, bool concurrency, int triples) {
  const auto &a = x[0], &b = x[1], &c = x[2], &d = x[3];
  std::map<int, Vec> L = {{1, vec(f, 1, 0, 0)}, {2, vec(f, 0, 1, 0)}, {3, vec(f, 0, 0, 1)},
                          {4, vec(f, 1, 1, 1)}, {5, vec(f, a, b, f.one())}, {6, vec(f, c, d, f.one())}};
  if (a.is_zero() || b.is_zero() || c.is_zero() || d.is_zero()) return false;
  if (detail::det(L[4], L[5], L[6]).is_zero()) return false;
  auto P = [&](int ij) { return detail::cross(L[ij / 10], L[ij % 10]); };
  const std::vector<std::array<int, 3>> rows = {
      {12, 34, 56}, {13, 25, 46}, {14, 26, 35}, {15, 24, 36}, {16, 23, 45}};
  std::vector<Vec> M;
  for (int r = 0; r < triples; ++r) {
    if (!detail::det(P(rows[r][0]), P(rows[r][1]), P(rows[r][2])).is_zero()) return false;
    M.push_back(detail::cross(P(rows[r][0]), P(rows[r][1])));
  }
  if (concurrency && !detail::det(M[1], M[2], M[3]).is_zero()) return false;
  return true;
}

bool case_b_oracle(const FieldSpec& f, const Assignment& x) {
  const auto &a = x[0], &b = x[1], &c = x[2];
  if (a.is_zero() || b.is_zero() || c.is_zero() || a == b || a == c || b == c) return false;
  const auto one = f.one();
  std::map<int, Vec> L = {{1, vec(f, 1, 0, 0)}, {2, vec(f, 0, 1, 0)}, {3, vec(f, 0, 0, 1)},
                          {4, {a, -(a + one), one}}, {5, {b, -(b + one), one}}, {6, {c, -(c + one), one}}};
  auto P = [&](int ij) { return detail::cross(L[ij / 10], L[ij % 10]); };
  const auto M2 = detail::cross(P(12), P(34));
  const auto M3 = detail::cross(P(15), P(23));
  const auto M4 = detail::cross(P(13), P(26));
  return detail::dot(detail::cross(M3, M4), L[4]).is_zero() && detail::dot(detail::cross(M2, M4), L[5]).is_zero() &&
         detail::dot(detail::cross(M2, M3), L[6]).is_zero() && detail::det(P(14), P(25), P(36)).is_zero();
}

bool case_ii_oracle(const FieldSpec& f, const Assignment& x) {
  const auto &a = x[0], &b = x[1];
  if (a.is_zero() || b.is_zero() || (a.is_one() && b.is_one())) return false;
  std::map<int, Vec> L = {{1, vec(f, 1, 0, 0)}, {2, vec(f, 0, 1, 0)}, {3, vec(f, 0, 0, 1)},
                          {4, vec(f, 1, 1, 1)}, {5, {a, b, f.one()}}};
  using detail::cross;
  auto P = [&](int ij) { return cross(L[ij / 10], L[ij % 10]); };
  const auto M1 = cross(P(12), P(34)), M2 = cross(P(15), P(23));
  const auto N1 = cross(P(14), P(25)), N2 = cross(P(24), P(35));
  const auto M3 = cross(cross(M1, M2), P(45)), N3 = cross(cross(N1, N2), P(13));
  const std::map<int, Vec> Z = {{1, cross(M3, N2)}, {2, cross(M3, N3)}, {3, cross(M3, N1)},
                                {4, cross(M2, N3)}, {5, cross(M1, N3)}};
  for (const auto& [i, z] : Z)
    if (!detail::dot(z, L[i]).is_zero()) return false;
  return true;
}

std::vector<FieldSpec> small_fields() {
  return {make_field(2), make_field(3), make_field(2, 2), make_field(5), make_field(7), make_field(2, 3)};
}

}  // namespace

TEST(Constraints, ScenarioNames) {
  for (Scenario s : all_scenarios()) EXPECT_EQ(parse_scenario(to_string(s)), s);
  try {
    parse_scenario("TEN_E3");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownName);
  }
}

TEST(Constraints, SixLineEquationsAsPrinted) {
  const auto sys = build_system(Scenario::ElevenCaseI);
  const auto v = polynomial_variables(sys.variables);
  const auto &a = v[0], &b = v[1], &c = v[2], &d = v[3];
  ASSERT_EQ(sys.equations.size(), 5u);
  EXPECT_EQ(sys.equations[0].poly, a - b - c + d);
  EXPECT_EQ(sys.equations[1].poly, -(a * d) + a - c + d);
  EXPECT_EQ(sys.equations[2].poly, a - b * c);
  EXPECT_EQ(sys.equations[3].poly, b * c - d);
  EXPECT_EQ(sys.equations[4].poly, a * d - a + b - d);
  const auto e1 = build_system(Scenario::TenE1);
  ASSERT_EQ(e1.equations.size(), 5u);
  EXPECT_EQ(e1.equations[4].poly, -(a * b) + a + b * c - 1);
}

TEST(Constraints, CaseBEquations) {
  const auto sys = build_system(Scenario::TenCaseB);
  const auto v = polynomial_variables(sys.variables);
  const auto &a = v[0], &b = v[1], &c = v[2];
  ASSERT_EQ(sys.equations.size(), 4u);
  // Z_i on L_{3+i}, up to sign.
  EXPECT_EQ(sys.equations[0].poly, -(a * b + a * c + a - b * c));
  EXPECT_EQ(sys.equations[1].poly, -(a * c + a - b + c));
  EXPECT_EQ(sys.equations[2].poly, a * b + c);
  EXPECT_EQ(sys.equations[3].poly, -(a * c) + b * c + b - c);
}

TEST(Constraints, CaseIIEquations) {
  const auto sys = build_system(Scenario::ElevenCaseII);
  const auto v = polynomial_variables(sys.variables);
  const auto &a = v[0], &b = v[1];
  ASSERT_EQ(sys.equations.size(), 4u);
  EXPECT_EQ(sys.equations[0].poly, -(a * a) + a * b * b + a * b - b * b);
  EXPECT_EQ(sys.equations[1].poly, a * (a - b * b + b - 1));
  EXPECT_EQ(sys.equations[2].poly, -(a * b * b) + a * b - a + b * b);
  EXPECT_EQ(sys.equations[3].poly, a * a - a * b - a + b * b);
  EXPECT_TRUE(eleven_case_ii_omitted_condition().is_zero());
}

// Candidates (equations plus inequations) agree with direct numeric geometry.
TEST(Constraints, CandidatesMatchGeometricOracle) {
  for (const auto& f : small_fields()) {
    struct Case {
      Scenario sc;
      std::function<bool(const Assignment&)> oracle;
    };
    const std::vector<Case> cases = {
        {Scenario::TenE1, [&](const Assignment& x) { return six_line_oracle(f, x, true, 4); }},
        {Scenario::TenCaseA, [&](const Assignment& x) { return six_line_oracle(f, x, true, 4); }},
        {Scenario::ElevenCaseI, [&](const Assignment& x) { return six_line_oracle(f, x, false, 5); }},
        {Scenario::TenCaseB, [&](const Assignment& x) { return case_b_oracle(f, x); }},
        {Scenario::ElevenCaseII, [&](const Assignment& x) { return case_ii_oracle(f, x); }},
    };
    for (const auto& cs : cases) {
      const auto sys = build_system(cs.sc);
      std::vector<Assignment> expect;
      for (const auto& x : all_assignments(f, sys.variables.size()))
        if (cs.oracle(x)) expect.push_back(x);
      std::vector<Assignment> got;
      for (const auto& c : solve_detailed(sys, f).candidates) got.push_back(c.values);
      EXPECT_EQ(codes(got), codes(expect)) << to_string(cs.sc) << " over GF(" << f.notation() << ")";
    }
  }
}

TEST(Constraints, TenE1SolutionSetOverBattery) {
  const auto sys = build_system(Scenario::TenE1);
  for (const auto& f : default_battery()) {
    std::set<std::vector<std::uint32_t>> expect;
    if (f.characteristic() == 2)
      for (const auto& a : enumerate_elements(f))
        if ((a * a + a + f.one()).is_zero()) expect.insert({a.code(), (a * a).code(), (a * a).code(), a.code()});
    const auto sols = solve_over(sys, f);
    EXPECT_EQ(codes(sols), expect) << f.notation();
    for (const auto& x : sols) EXPECT_EQ(profile(realize(sys, x, f)).tvec, sys.target);
  }
}

TEST(Constraints, CaseBUniqueSolutionInCharacteristicFive) {
  const auto sys = build_system(Scenario::TenCaseB);
  for (const auto& f : default_battery()) {
    const auto sols = solve_over(sys, f);
    if (f.characteristic() == 5) {
      ASSERT_EQ(sols.size(), 1u) << f.notation();
      EXPECT_EQ(sols[0][0], f.element(3));
      EXPECT_EQ(sols[0][1], f.element(1));
      EXPECT_EQ(sols[0][2], f.element(2));
      EXPECT_EQ(profile(realize(sys, sols[0], f)).tvec, sys.target);
    } else {
      EXPECT_TRUE(sols.empty()) << f.notation();
    }
  }
}

TEST(Constraints, EmptyScenariosAndTheirPostChecks) {
  for (Scenario sc : {Scenario::TenCaseA, Scenario::ElevenCaseI, Scenario::ElevenCaseII}) {
    const auto sys = build_system(sc);
    for (const auto& f : default_battery()) {
      const auto rep = solve_detailed(sys, f);
      EXPECT_TRUE(rep.solutions().empty()) << to_string(sc) << " " << f.notation();
    }
  }
  // Case A and case I candidates exist exactly when TEN_E1 solutions do and
  // are rejected by their geometric post-checks.
  const auto a = build_system(Scenario::TenCaseA);
  const auto rep = solve_detailed(a, make_field(2, 2));
  ASSERT_EQ(rep.candidates.size(), 2u);
  for (const auto& c : rep.candidates) {
    EXPECT_FALSE(c.accepted);
    EXPECT_FALSE(c.post_checks.back().passed);
    EXPECT_EQ(c.post_checks.back().name, "M_1 avoids W");
  }
  const auto one = build_system(Scenario::ElevenCaseI);
  for (const auto& c : solve_detailed(one, make_field(2, 4)).candidates)
    EXPECT_EQ(c.post_checks.back().name, "triple lines not in one pencil");
}

TEST(Constraints, ConsequencesVanishOnRawSolutions) {
  for (Scenario sc : {Scenario::TenCaseB, Scenario::ElevenCaseII, Scenario::TenE1}) {
    const auto sys = build_system(sc);
    const auto rep = consequence_check(sys, known_consequences(sc), default_battery());
    EXPECT_TRUE(rep.all_pass()) << to_string(sc);
  }
  // Without the (a,b) != (1,1) inequation the point (1,1) is a raw solution
  // of case II in every field.
  const auto sys = build_system(Scenario::ElevenCaseII);
  for (const auto& f : default_battery()) {
    const auto raw = raw_solutions(sys, f);
    ASSERT_EQ(raw.size(), 1u);
    EXPECT_TRUE(raw[0][0].is_one() && raw[0][1].is_one());
  }
}

TEST(Constraints, ConsequenceViolationsAreReported) {
  const auto sys = build_system(Scenario::ElevenCaseII);
  const auto v = polynomial_variables(sys.variables);
  const auto rep = consequence_check(sys, {{"a - 2", v[0] - 2}}, {make_field(5)});
  ASSERT_FALSE(rep.all_pass());
  EXPECT_EQ(rep.fields[0].violations[0].consequence, "a - 2");
}

TEST(Constraints, RealizeRejectsNonSolutions) {
  const auto sys = build_system(Scenario::TenCaseB);
  const FieldSpec f = make_field(5);
  try {
    realize(sys, {f.element(1), f.element(2), f.element(3)}, f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsolvedAssignment);
  }
  EXPECT_THROW(realize(sys, {f.element(3)}, f), Error);
}

TEST(Constraints, FieldTooLarge) {
  try {
    solve_over(build_system(Scenario::ElevenCaseII), make_field(65537));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldTooLarge);
  }
}

TEST(Constraints, PolynomialEvaluation) {
  const auto v = polynomial_variables({"a", "b"});
  const auto p = v[0] * v[0] * 3 - v[1] + 7;
  EXPECT_EQ(p.to_string(), "3*a^2 - b + 7");
  EXPECT_EQ(p.total_degree(), 2);
  const FieldSpec f = make_field(5);
  EXPECT_EQ(p.evaluate({f.element(2), f.element(4)}, f), f.element(15));
  EXPECT_THROW(p + IntPolynomial::variable({"x"}, "x"), Error);
}
