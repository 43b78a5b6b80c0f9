#pragma once

// Built-in configurations with their printed coordinates and incidence
// tables, plus the abstract torsion-point configuration E(p) = (Z/p)^2.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "triarr/bounds.hpp"
#include "triarr/error.hpp"
#include "triarr/field.hpp"
#include "triarr/incidence.hpp"
#include "triarr/polynomial.hpp"
#include "triarr/projective.hpp"

namespace triarr {

struct Eligibility {
  std::string description;
  std::function<bool(const FieldSpec&)> holds;
};

/// A printed cell that contradicts the printed coordinates. The stored
/// table keeps the printed value; `actual` is what the geometry gives.
struct TableErratum {
  std::string row;
  std::string column;
  bool actual = false;
};

struct Certificate {
  std::string name;
  std::string description;
  std::vector<Eligibility> eligibility;  // all must hold
  // Free parameter (at most one), chosen among the roots of parameter_poly.
  std::optional<std::string> parameter;
  UnivariatePoly parameter_poly;
  std::vector<std::string> line_labels;
  std::vector<SymbolicTriple> lines;  // over the variable list {parameter} or {}
  std::vector<std::string> point_labels;
  std::vector<SymbolicTriple> points;
  // expected_table[r] = columns incident with line r; empty when not printed.
  std::vector<std::vector<std::string>> expected_table;
  std::vector<TableErratum> errata;
  TVector expected_tvec;

  std::vector<std::string> variables() const {
    return parameter ? std::vector<std::string>{*parameter} : std::vector<std::string>{};
  }
  bool has_table() const { return !expected_table.empty(); }
};

namespace detail {

struct CertBuilder {
  Certificate c;
  std::vector<std::string> vars;
  IntPolynomial x;  // the parameter, if any

  CertBuilder(std::string name, std::optional<std::string> param) {
    c.name = std::move(name);
    c.parameter = param;
    if (param) {
      vars = {*param};
      x = IntPolynomial::variable(vars, *param);
    }
  }
  IntPolynomial k(std::int64_t n) const { return IntPolynomial::constant(vars, n); }
  void line(std::string label, IntPolynomial a, IntPolynomial b, IntPolynomial cc) {
    c.line_labels.push_back(std::move(label));
    c.lines.push_back({std::move(a), std::move(b), std::move(cc)});
  }
  void line(std::string label, std::int64_t a, std::int64_t b, std::int64_t cc) {
    line(std::move(label), k(a), k(b), k(cc));
  }
  void point(std::string label, IntPolynomial a, IntPolynomial b, IntPolynomial cc) {
    c.point_labels.push_back(std::move(label));
    c.points.push_back({std::move(a), std::move(b), std::move(cc)});
  }
  void point(std::string label, std::int64_t a, std::int64_t b, std::int64_t cc) {
    point(std::move(label), k(a), k(b), k(cc));
  }
};

inline Eligibility characteristic_is(std::int64_t p) {
  return {"characteristic " + std::to_string(p), [p](const FieldSpec& f) { return f.characteristic() == p; }};
}

inline Eligibility has_root(const UnivariatePoly& poly, std::string text) {
  return {text + " has a root", [poly](const FieldSpec& f) { return !roots_of(poly, f).empty(); }};
}

inline Eligibility enough_lines(std::size_t s) {
  return {"PG(2,q) has at least " + std::to_string(s) + " lines", [s](const FieldSpec& f) {
            const std::uint64_t q = f.order();
            return q * q + q + 1 >= s;
          }};
}

inline std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// PG(2,3) lines as integer triples in enumeration order.
inline std::vector<std::array<int, 3>> pg23_line_triples() {
  std::vector<std::array<int, 3>> out = {{0, 0, 1}};
  for (int c = 0; c < 3; ++c) out.push_back({0, 1, c});
  for (int b = 0; b < 3; ++b)
    for (int c = 0; c < 3; ++c) out.push_back({1, b, c});
  return out;
}

// The nine lines of PG(2,3) missing the point (0:0:1), i.e. with c != 0.
inline std::vector<std::array<int, 3>> dual_hesse_triples() {
  std::vector<std::array<int, 3>> out;
  for (const auto& t : pg23_line_triples())
    if (t[2] != 0) out.push_back(t);
  return out;
}

inline Certificate small_certificate(int s) {
  CertBuilder b("SMALL_" + std::to_string(s), std::nullopt);
  const std::vector<std::array<int, 3>> all = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 1}};
  for (int i = 0; i < s; ++i) b.line("L_" + std::to_string(i + 1), all[i][0], all[i][1], all[i][2]);
  b.c.eligibility = {enough_lines(static_cast<std::size_t>(s))};
  switch (s) {
    case 3:
      b.c.description = "three lines through one point";
      b.c.expected_tvec = {{3, 1}};
      break;
    case 4:
      b.c.description = "a pencil of three lines plus one general line";
      b.c.expected_tvec = {{3, 1}, {2, 3}};
      break;
    case 5:
      b.c.description = "five lines with two triple points";
      b.c.expected_tvec = {{3, 2}, {2, 4}};
      break;
    default:
      b.c.description = "six lines with four triple points";
      b.c.expected_tvec = {{3, 4}, {2, 3}};
      break;
  }
  return b.c;
}

inline Certificate fano_certificate() {
  CertBuilder b("FANO", std::nullopt);
  b.c.description = "all seven lines of PG(2,2)";
  b.c.eligibility = {characteristic_is(2)};
  int i = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z)
        if (x || y || z) b.line("L_" + std::to_string(++i), x, y, z);
  b.c.expected_tvec = {{3, 7}};
  return b.c;
}

inline Certificate dual_hesse_certificate(bool drop_first) {
  CertBuilder b(drop_first ? "MOEBIUS_KANTOR" : "DUAL_HESSE", std::nullopt);
  b.c.description = drop_first ? "the nine lines of PG(2,3) avoiding (0:0:1), less the first one"
                               : "the nine lines of PG(2,3) avoiding (0:0:1)";
  b.c.eligibility = {characteristic_is(3)};
  auto ts = dual_hesse_triples();
  if (drop_first) ts.erase(ts.begin());
  int i = 0;
  for (const auto& t : ts) b.line("L_" + std::to_string(++i), t[0], t[1], t[2]);
  b.c.expected_tvec = drop_first ? TVector{{3, 8}, {2, 4}} : TVector{{3, 12}};
  return b.c;
}

inline Certificate ten_e1_certificate() {
  CertBuilder b("TEN_E1", "a");
  auto& c = b.c;
  c.description = "10 lines, one quadruple and 12 triple points; a is a primitive cube root of unity";
  c.parameter_poly = {1, 1, 1};
  c.eligibility = {characteristic_is(2), has_root(c.parameter_poly, "x^2+x+1")};
  const IntPolynomial a = b.x, a2 = b.x * b.x, one = b.k(1), zero = b.k(0);
  b.line("L_1", 1, 0, 0);
  b.line("L_2", 0, 1, 0);
  b.line("L_3", 0, 0, 1);
  b.line("L_4", 1, 1, 1);
  b.line("L_5", a, a2, one);
  b.line("L_6", a2, a, one);
  b.line("M_1", 1, 1, 0);
  b.line("M_2", a, zero, one);
  b.line("M_3", a2, one, one);
  b.line("M_4", one, a2, one);
  b.point("W", one, one, a);
  b.point("P_12", 0, 0, 1);
  b.point("P_13", 0, 1, 0);
  b.point("P_14", 0, 1, 1);
  b.point("P_15", zero, one, a2);
  b.point("P_24", 1, 0, 1);
  b.point("P_25", one, zero, a);
  b.point("P_26", one, zero, a2);
  b.point("P_34", 1, 1, 0);
  b.point("P_35", a, one, zero);
  b.point("P_36", one, a, zero);
  b.point("P_46", a2, a, one);
  b.point("P_56", 1, 1, 1);
  for (const char* row : {"P_12 P_13 P_14 P_15", "P_12 P_24 P_25 P_26", "P_13 P_34 P_35 P_36",
                          "P_14 P_24 P_34 P_46", "P_15 P_25 P_35 P_56", "P_26 P_36 P_46 P_56",
                          "W P_12 P_34 P_56", "W P_13 P_25 P_46", "W P_14 P_26 P_35", "W P_15 P_24 P_36"})
    c.expected_table.push_back(split_labels(row));
  c.expected_tvec = {{4, 1}, {3, 12}, {2, 3}};
  return c;
}

inline Certificate ten_e2_certificate() {
  CertBuilder b("TEN_E2", std::nullopt);
  auto& c = b.c;
  c.description = "10 lines with 13 triple points in characteristic 5";
  c.eligibility = {characteristic_is(5)};
  b.line("L_1", 1, 0, 0);
  b.line("L_2", 0, 1, 0);
  b.line("L_3", 0, 0, 1);
  b.line("L_4", 3, 1, 1);
  b.line("L_5", 1, 3, 1);
  b.line("L_6", 2, 2, 1);
  b.line("M_1", 1, 1, 1);
  b.line("M_2", 2, 4, 0);
  b.line("M_3", 0, 3, 1);
  b.line("M_4", 2, 0, 1);
  b.point("D", 1, 1, 1);
  b.point("Z_1", 2, 3, 1);
  b.point("Z_2", 4, 3, 2);
  b.point("Z_3", 4, 3, 1);
  b.point("P_12", 0, 0, 1);
  b.point("P_13", 0, 1, 0);
  b.point("P_14", 0, 4, 1);
  b.point("P_15", 0, 4, 3);
  b.point("P_23", 1, 0, 0);
  b.point("P_25", 1, 0, 4);
  b.point("P_26", 1, 0, 3);
  b.point("P_34", 4, 3, 0);
  b.point("P_36", 3, 2, 0);
  // Rows as printed; M_3 and M_4 have P_23 and P_26 interchanged there.
  for (const char* row : {"P_12 P_13 P_14 P_15", "P_12 P_23 P_25 P_26", "P_13 P_23 P_34 P_36",
                          "D Z_1 P_14 P_34", "D Z_2 P_15 P_25", "D Z_3 P_26 P_36", "P_14 P_25 P_36",
                          "Z_2 Z_3 P_12 P_34", "Z_1 Z_3 P_15 P_26", "Z_1 Z_2 P_13 P_23"})
    c.expected_table.push_back(split_labels(row));
  c.errata = {{"M_3", "P_23", true}, {"M_3", "P_26", false}, {"M_4", "P_23", false}, {"M_4", "P_26", true}};
  c.expected_tvec = {{3, 13}, {2, 6}};
  return c;
}

inline Certificate eleven_16_certificate() {
  CertBuilder b("ELEVEN_16", "b");
  auto& c = b.c;
  c.description = "11 lines with 16 triple points; b is a root of x^2+x-1";
  c.parameter_poly = {-1, 1, 1};
  c.eligibility = {has_root(c.parameter_poly, "x^2+x-1"),
                   {"characteristic != 2", [](const FieldSpec& f) { return f.characteristic() != 2; }}};
  const IntPolynomial B = b.x, B2 = b.x * b.x, B3 = B2 * b.x, one = b.k(1), zero = b.k(0);
  b.line("L_1", 1, 0, 0);
  b.line("L_2", 0, 1, 0);
  b.line("L_3", 0, 0, 1);
  b.line("L_4", 1, 1, 1);
  b.line("L_5", -B, zero, one);
  b.line("L_6", B, one, B);
  b.line("L_7", 0, 1, 1);
  b.line("L_8", B2, B, one);
  b.line("L_9", B, -B, -one);
  b.line("L_10", -B3, -one, -B);
  b.line("L_11", -B2, 1 - B, zero);
  b.point("P_1", 0, -1, 1);
  b.point("P_2", 1, 0, 0);
  b.point("P_3", 0, 1, 0);
  b.point("P_4", 1, 0, -1);
  b.point("P_5", -one, B + 1, -B);
  b.point("P_6", -one, B, zero);
  b.point("P_7", one, zero, B);
  b.point("P_8", zero, -B, one);
  b.point("P_9", zero, -one, B);
  b.point("P_10", one, zero, -B2);
  b.point("P_11", 1 - B, -B, B);
  b.point("P_12", -one, B, -B);
  b.point("P_13", 1, 1, -1);
  b.point("P_14", 0, 0, 1);
  b.point("P_15", 1, 1, 0);
  b.point("P_16", 1, 1, -2);
  for (const char* row : {"P_1 P_3 P_8 P_9 P_14", "P_2 P_4 P_7 P_10 P_14", "P_2 P_3 P_6 P_15",
                          "P_1 P_4 P_5 P_16", "P_3 P_5 P_7 P_12", "P_4 P_6 P_8 P_11",
                          "P_1 P_2 P_11 P_12 P_13", "P_5 P_6 P_9 P_10 P_13", "P_7 P_9 P_11 P_15",
                          "P_8 P_10 P_12 P_16", "P_13 P_14 P_15 P_16"})
    c.expected_table.push_back(split_labels(row));
  c.expected_tvec = {{3, 16}, {2, 7}};
  return c;
}

}  // namespace detail

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"FANO",    "MOEBIUS_KANTOR", "DUAL_HESSE", "TEN_E1",  "TEN_E2",
                                                 "ELEVEN_16", "SMALL_3",      "SMALL_4",    "SMALL_5", "SMALL_6"};
  return names;
}

inline Certificate builtin(const std::string& name) {
  using namespace detail;
  if (name == "FANO") return fano_certificate();
  if (name == "MOEBIUS_KANTOR") return dual_hesse_certificate(true);
  if (name == "DUAL_HESSE") return dual_hesse_certificate(false);
  if (name == "TEN_E1") return ten_e1_certificate();
  if (name == "TEN_E2") return ten_e2_certificate();
  if (name == "ELEVEN_16") return eleven_16_certificate();
  for (int s = 3; s <= 6; ++s)
    if (name == "SMALL_" + std::to_string(s)) return small_certificate(s);
  throw Error(ErrorCode::UnknownName, "no built-in certificate named '" + name + "'");
}

/// Names of the eligibility conditions that fail over f.
inline std::vector<std::string> failed_eligibility(const Certificate& c, const FieldSpec& f) {
  std::vector<std::string> out;
  for (const auto& e : c.eligibility)
    if (!e.holds(f)) out.push_back(e.description);
  return out;
}

inline bool eligible(const Certificate& c, const FieldSpec& f) { return failed_eligibility(c, f).empty(); }

/// Admissible parameter values over f, in code order.
inline std::vector<FieldElement> parameter_choices(const Certificate& c, const FieldSpec& f) {
  if (!c.parameter) return {};
  return roots_of(c.parameter_poly, f);
}

namespace detail {

inline std::vector<FieldElement> resolve_parameter(const Certificate& c, const FieldSpec& f,
                                                   const std::optional<FieldElement>& param) {
  if (const auto failed = failed_eligibility(c, f); !failed.empty()) {
    std::string why;
    for (const auto& s : failed) why += (why.empty() ? "" : "; ") + s;
    throw Error(ErrorCode::IneligibleField, c.name + " over GF(" + f.notation() + "): needs " + why);
  }
  if (!c.parameter) {
    if (param) throw Error(ErrorCode::InvalidArgument, c.name + " takes no parameter");
    return {};
  }
  const auto roots = parameter_choices(c, f);
  if (!param) return {roots.front()};
  if (!(param->field() == f) || std::find(roots.begin(), roots.end(), *param) == roots.end())
    throw Error(ErrorCode::InvalidArgument,
                *c.parameter + " = " + param->to_string() + " is not an admissible parameter over GF(" +
                    f.notation() + ")");
  return {*param};
}

inline ProjLine concrete_line(const SymbolicTriple& t, const std::vector<FieldElement>& x, const FieldSpec& f) {
  return ProjLine(evaluate(t, x, f));
}

}  // namespace detail

/// The parameter value instantiate() would use.
inline std::optional<FieldElement> chosen_parameter(const Certificate& c, const FieldSpec& f,
                                                    const std::optional<FieldElement>& param = std::nullopt) {
  const auto x = detail::resolve_parameter(c, f, param);
  if (x.empty()) return std::nullopt;
  return x.front();
}

inline Arrangement instantiate(const Certificate& c, const FieldSpec& f,
                               const std::optional<FieldElement>& param = std::nullopt) {
  const auto x = detail::resolve_parameter(c, f, param);
  std::vector<ProjLine> lines;
  for (const auto& t : c.lines) lines.push_back(detail::concrete_line(t, x, f));
  return Arrangement(f, std::move(lines), c.line_labels);
}

struct PointMismatch {
  std::string label;
  std::string expected;  // coordinates after normalization, or the problem
  std::string problem;
};

struct CellMismatch {
  std::string row;
  std::string column;
  bool expected = false;
  bool actual = false;
  bool documented_erratum = false;
};

struct VerifyReport {
  std::string name;
  FieldSpec field;
  std::optional<FieldElement> parameter;
  TVector expected_tvec;
  TVector actual_tvec;
  bool tvec_ok = false;
  bool identity_ok = false;
  std::vector<PointMismatch> point_mismatches;
  bool table_checked = false;
  IncidenceTable actual_table;
  std::vector<CellMismatch> cell_mismatches;  // includes documented errata

  /// Cell mismatches beyond the documented errata, or errata that did not occur.
  bool table_ok = true;

  bool passed() const { return tvec_ok && identity_ok && point_mismatches.empty() && table_ok; }
};

inline VerifyReport verify(const Certificate& c, const FieldSpec& f,
                           const std::optional<FieldElement>& param = std::nullopt) {
  VerifyReport rep;
  rep.name = c.name;
  rep.field = f;
  rep.parameter = chosen_parameter(c, f, param);
  const Arrangement a = instantiate(c, f, param);
  const std::vector<FieldElement> x = rep.parameter ? std::vector<FieldElement>{*rep.parameter}
                                                    : std::vector<FieldElement>{};
  const auto prof = profile(a);
  rep.expected_tvec = c.expected_tvec;
  rep.actual_tvec = prof.tvec;
  rep.tvec_ok = prof.tvec == c.expected_tvec;
  rep.identity_ok = check_identity(static_cast<int>(a.size()), prof.tvec);

  // Printed points: distinct, and together exactly the points of
  // multiplicity >= 3.
  std::vector<LabeledPoint> columns;
  std::set<ProjPoint> listed;
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    const auto v = evaluate(c.points[i], x, f);
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) {
      rep.point_mismatches.push_back({c.point_labels[i], "(0:0:0)", "degenerate coordinates"});
      continue;
    }
    const ProjPoint p(v);
    columns.emplace_back(c.point_labels[i], p);
    if (!listed.insert(p).second) {
      rep.point_mismatches.push_back({c.point_labels[i], to_string(p), "coincides with another listed point"});
      continue;
    }
    const auto* ip = prof.find(p);
    if (ip == nullptr || ip->multiplicity() < 3)
      rep.point_mismatches.push_back(
          {c.point_labels[i], to_string(p),
           "multiplicity " + std::to_string(ip ? ip->multiplicity() : 0) + ", expected >= 3"});
  }
  if (!c.points.empty())
    for (const auto& ip : prof.points)
      if (ip.multiplicity() >= 3 && !listed.count(ip.point))
        rep.point_mismatches.push_back({"(unlisted)", to_string(ip.point),
                                        "point of multiplicity " + std::to_string(ip.multiplicity()) +
                                            " missing from the list"});

  if (c.has_table() && rep.point_mismatches.empty()) {
    rep.table_checked = true;
    rep.actual_table = table(a, columns);
    std::size_t errata_seen = 0;
    for (std::size_t r = 0; r < c.line_labels.size(); ++r)
      for (std::size_t col = 0; col < c.point_labels.size(); ++col) {
        const auto& row_cells = c.expected_table[r];
        const bool expected =
            std::find(row_cells.begin(), row_cells.end(), c.point_labels[col]) != row_cells.end();
        const bool actual = rep.actual_table.cells[r][col];
        if (expected == actual) continue;
        const bool documented = std::any_of(c.errata.begin(), c.errata.end(), [&](const TableErratum& e) {
          return e.row == c.line_labels[r] && e.column == c.point_labels[col] && e.actual == actual;
        });
        errata_seen += documented ? 1 : 0;
        rep.cell_mismatches.push_back({c.line_labels[r], c.point_labels[col], expected, actual, documented});
      }
    rep.table_ok = errata_seen == c.errata.size() && rep.cell_mismatches.size() == errata_seen;
  }
  return rep;
}

/// All 13 lines of PG(2,3) minus the 4 through (0:0:1): 9 lines, 12 triple points.
inline Arrangement dual_hesse_from_pg23() {
  const FieldSpec f = make_field(3);
  const auto through = ProjPoint::of(f, 0, 0, 1);
  std::vector<ProjLine> lines;
  for (const auto& l : enumerate_lines(f))
    if (!incident(through, l)) lines.push_back(l);
  return Arrangement(f, std::move(lines));
}

// ---------------------------------------------------------------------------
// Torsion model

struct TorsionModel {
  int p = 0;
  std::vector<std::array<int, 2>> points;  // index i = (i / p, i % p)
  std::vector<std::array<int, 3>> secant_blocks;
  std::vector<std::array<int, 2>> tangent_pairs;
  std::string note;

  int index(int x, int y) const { return ((x % p + p) % p) * p + ((y % p + p) % p); }
  int zero() const { return 0; }
};

/// (Z/p)^2 with zero-sum triples; tangent pairs {X, -2X} when p >= 5.
inline TorsionModel torsion_model(int p) {
  if (!detail::is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorCode::UnsupportedPrime, "the torsion model needs an odd prime");
  TorsionModel m;
  m.p = p;
  const int n = p * p;
  for (int i = 0; i < n; ++i) m.points.push_back({i / p, i % p});
  const auto add = [&](int i, int j) { return m.index(m.points[i][0] + m.points[j][0], m.points[i][1] + m.points[j][1]); };
  const auto neg = [&](int i) { return m.index(-m.points[i][0], -m.points[i][1]); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int k = neg(add(i, j));
      if (k > j) m.secant_blocks.push_back({i, j, k});
    }
  if (p >= 5) {
    std::set<std::array<int, 2>> pairs;
    for (int i = 1; i < n; ++i) {
      const int j = m.index(-2 * m.points[i][0], -2 * m.points[i][1]);
      pairs.insert({std::min(i, j), std::max(i, j)});
    }
    m.tangent_pairs.assign(pairs.begin(), pairs.end());
  } else {
    m.note = "p = 3: -2X = X, so there are no tangent pairs; the 12 blocks form the Hesse configuration";
  }
  return m;
}

/// Every unordered point pair lies in exactly one block or pair.
inline bool linearity_check(const TorsionModel& m) {
  const std::size_t n = m.points.size();
  std::vector<int> seen(n * n, 0);
  const auto mark = [&](int a, int b) { ++seen[std::min(a, b) * n + std::max(a, b)]; };
  for (const auto& b : m.secant_blocks) {
    mark(b[0], b[1]);
    mark(b[0], b[2]);
    mark(b[1], b[2]);
  }
  for (const auto& t : m.tangent_pairs) mark(t[0], t[1]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (seen[i * n + j] != 1) return false;
  return true;
}

/// Dual incidence: model points become lines, blocks and pairs become points.
inline AbstractIncidence torsion_dual_incidence(const TorsionModel& m) {
  AbstractIncidence a;
  a.num_lines = static_cast<int>(m.points.size());
  for (const auto& b : m.secant_blocks) a.blocks.push_back({b[0], b[1], b[2]});
  for (const auto& t : m.tangent_pairs) a.blocks.push_back({t[0], t[1]});
  return a;
}

struct TorsionDualCounts {
  int p = 0;
  std::int64_t lines = 0;
  std::int64_t t3 = 0;
  std::int64_t t2 = 0;
  std::int64_t lines_through_zero = 0;   // blocks/pairs containing 0
  std::int64_t lines_through_other = 0;  // the same for every nonzero point
  bool uniform_nonzero = false;
  std::int64_t identity_lhs = 0;  // C(lines, 2)
  std::int64_t identity_rhs = 0;  // 3 t3 + t2
  std::int64_t u3 = 0;
  std::int64_t gap = 0;
  bool closed_forms_hold = false;
  bool linear = false;
};

inline TorsionDualCounts torsion_dual_counts(int p) {
  if (!detail::is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (p < 5)
    throw Error(ErrorCode::UnsupportedPrime,
                "p = " + std::to_string(p) + ": (p^2-1)(p^2-2)/6 is not an integer; only p >= 5 is supported");
  const TorsionModel m = torsion_model(p);
  const auto dual = torsion_dual_incidence(m);
  const TVector tv = dual.tvec();
  TorsionDualCounts r;
  r.p = p;
  r.lines = dual.num_lines;
  r.t3 = tv.count(3) ? tv.at(3) : 0;
  r.t2 = tv.count(2) ? tv.at(2) : 0;
  std::vector<std::int64_t> through(m.points.size(), 0);
  for (const auto& b : dual.blocks)
    for (int i : b) ++through[i];
  r.lines_through_zero = through[m.zero()];
  r.lines_through_other = through.size() > 1 ? through[1] : 0;
  r.uniform_nonzero = std::all_of(through.begin() + 1, through.end(),
                                  [&](std::int64_t v) { return v == r.lines_through_other; });
  r.identity_lhs = choose2(r.lines);
  r.identity_rhs = 3 * r.t3 + r.t2;
  r.u3 = schoenheim_u3(r.lines);
  r.gap = r.u3 - r.t3;
  const std::int64_t n = static_cast<std::int64_t>(p) * p;
  r.closed_forms_hold = r.lines == n && r.t3 == (n - 1) * (n - 2) / 6 && r.t2 == n - 1 &&
                        r.lines_through_zero == (n - 1) / 2 && r.lines_through_other == (n + 1) / 2 &&
                        r.uniform_nonzero && r.gap == (n - 1) / 3 && r.identity_lhs == r.identity_rhs &&
                        static_cast<std::int64_t>(dual.blocks.size()) == (n + 4) * (n - 1) / 6;
  r.linear = linearity_check(m);
  return r;
}

}  // namespace triarr
