#pragma once

// Incidence scenarios for 10 and 11 lines turned into polynomial systems in
// the free line parameters, solved over finite fields by exhaustive scan.
//
// Every scenario fixes a projective frame for a star configuration of lines
// L_1, L_2, ... and derives the remaining configuration lines as joins of
// intersection points P_ij = L_i ^ L_j. Equations are the expanded 3x3
// determinants expressing the required collinearities / incidences.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "triarr/error.hpp"
#include "triarr/field.hpp"
#include "triarr/incidence.hpp"
#include "triarr/polynomial.hpp"
#include "triarr/projective.hpp"

namespace triarr {

enum class Scenario { TenE1, TenCaseA, TenCaseB, ElevenCaseI, ElevenCaseII };

inline const std::vector<Scenario>& all_scenarios() {
  static const std::vector<Scenario> all = {Scenario::TenE1, Scenario::TenCaseA, Scenario::TenCaseB,
                                            Scenario::ElevenCaseI, Scenario::ElevenCaseII};
  return all;
}

inline std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::TenE1: return "TEN_E1";
    case Scenario::TenCaseA: return "TEN_CASE_A";
    case Scenario::TenCaseB: return "TEN_CASE_B";
    case Scenario::ElevenCaseI: return "ELEVEN_CASE_I";
    case Scenario::ElevenCaseII: return "ELEVEN_CASE_II";
  }
  return "?";
}

inline Scenario parse_scenario(const std::string& name) {
  for (Scenario s : all_scenarios())
    if (to_string(s) == name) return s;
  throw Error(ErrorCode::UnknownName, "unknown scenario '" + name + "'");
}

using Assignment = std::vector<FieldElement>;

struct NamedPolynomial {
  std::string name;
  IntPolynomial poly;
};

/// Frame inequations are the standing non-degeneracy assumptions of the
/// coordinate frame; scenario inequations exclude further coincidences.
enum class InequationKind { Frame, Scenario };

/// Satisfied iff at least one listed polynomial is nonzero.
struct Inequation {
  std::string name;
  std::vector<IntPolynomial> any_nonzero;
  InequationKind kind = InequationKind::Frame;

  bool holds(const Assignment& x, const FieldSpec& f) const {
    return std::any_of(any_nonzero.begin(), any_nonzero.end(),
                       [&](const IntPolynomial& p) { return !p.evaluate(x, f).is_zero(); });
  }
};

/// Configuration lines as functions of the parameters.
struct ScenarioGeometry {
  std::vector<std::string> labels;
  std::vector<SymbolicTriple> lines;

  const SymbolicTriple& line(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == label) return lines[i];
    throw Error(ErrorCode::UnknownLabel, "no scenario line '" + label + "'");
  }

  /// Concrete lines at x; nullopt when some line degenerates to the zero vector.
  std::optional<std::vector<ProjLine>> evaluate_lines(const Assignment& x, const FieldSpec& f) const {
    std::vector<ProjLine> out;
    for (const auto& t : lines) {
      const auto v = evaluate(t, x, f);
      if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) return std::nullopt;
      out.emplace_back(v);
    }
    return out;
  }
};

/// Geometric condition on a candidate, evaluated on concrete lines.
struct PostCheck {
  std::string name;
  std::function<bool(const ScenarioGeometry&, const Assignment&, const FieldSpec&)> accept;
};

struct ConstraintSystem {
  Scenario scenario = Scenario::TenE1;
  std::vector<std::string> variables;
  std::vector<NamedPolynomial> equations;
  std::vector<Inequation> inequations;
  std::vector<PostCheck> post_checks;
  ScenarioGeometry geometry;
  TVector target;  // profile every realized solution must have
};

/// Expanded determinant of three symbolic points; zero iff collinear.
inline IntPolynomial collinearity_poly(const SymbolicTriple& p, const SymbolicTriple& q, const SymbolicTriple& r) {
  return det3(p, q, r);
}

namespace detail {

struct Frame {
  std::vector<std::string> vars;
  std::vector<IntPolynomial> v;   // the variables as polynomials
  std::map<int, SymbolicTriple> L;  // L_1, L_2, ...

  IntPolynomial k(std::int64_t c) const { return IntPolynomial::constant(vars, c); }
  SymbolicTriple P(int i, int j) const { return cross(L.at(i), L.at(j)); }
  std::string P_name(int i, int j) const { return "P_" + std::to_string(i) + std::to_string(j); }
};

// L_1: x, L_2: y, L_3: z, L_4: x+y+z, L_5: ax+by+z, L_6: cx+dy+z (six lines)
// or the first five of them with (a, b) only.
inline Frame general_frame(int lines) {
  Frame f;
  f.vars = lines == 6 ? std::vector<std::string>{"a", "b", "c", "d"} : std::vector<std::string>{"a", "b"};
  f.v = polynomial_variables(f.vars);
  f.L[1] = constant_triple(f.vars, 1, 0, 0);
  f.L[2] = constant_triple(f.vars, 0, 1, 0);
  f.L[3] = constant_triple(f.vars, 0, 0, 1);
  f.L[4] = constant_triple(f.vars, 1, 1, 1);
  f.L[5] = {f.v[0], f.v[1], f.k(1)};
  if (lines == 6) f.L[6] = {f.v[2], f.v[3], f.k(1)};
  return f;
}

inline void add_frame_inequations(ConstraintSystem& sys, const Frame& f) {
  for (std::size_t i = 0; i < f.vars.size(); ++i)
    sys.inequations.push_back({f.vars[i] + " != 0", {f.v[i]}, InequationKind::Frame});
}

inline void add_frame_lines(ConstraintSystem& sys, const Frame& f) {
  for (const auto& [i, t] : f.L) {
    sys.geometry.labels.push_back("L_" + std::to_string(i));
    sys.geometry.lines.push_back(t);
  }
}

inline PostCheck realizable_check() {
  return {"configuration lines well defined and distinct",
          [](const ScenarioGeometry& g, const Assignment& x, const FieldSpec& f) {
            const auto lines = g.evaluate_lines(x, f);
            if (!lines) return false;
            std::set<ProjLine> distinct(lines->begin(), lines->end());
            return distinct.size() == lines->size();
          }};
}

inline ProjLine concrete(const ScenarioGeometry& g, const std::string& label, const Assignment& x,
                         const FieldSpec& f) {
  return ProjLine(evaluate(g.line(label), x, f));
}

// Six star lines plus one line through each listed triple of points P_ij.
inline ConstraintSystem six_lines_with_triples(Scenario sc, const std::vector<std::array<int, 3>>& triples,
                                               const std::vector<std::string>& triple_labels) {
  ConstraintSystem sys;
  sys.scenario = sc;
  const Frame f = general_frame(6);
  sys.variables = f.vars;
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto& tr = triples[t];
    const auto pt = [&](int code) { return f.P(code / 10, code % 10); };
    const auto nm = [&](int code) { return f.P_name(code / 10, code % 10); };
    sys.equations.push_back({triple_labels[t] + ": " + nm(tr[0]) + ", " + nm(tr[1]) + ", " + nm(tr[2]) + " collinear",
                             collinearity_poly(pt(tr[0]), pt(tr[1]), pt(tr[2]))});
  }
  add_frame_inequations(sys, f);
  sys.inequations.push_back({"det(L_4, L_5, L_6) != 0", {det3(f.L.at(4), f.L.at(5), f.L.at(6))},
                             InequationKind::Frame});
  add_frame_lines(sys, f);
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto& tr = triples[t];
    sys.geometry.labels.push_back(triple_labels[t]);
    sys.geometry.lines.push_back(cross(f.P(tr[0] / 10, tr[0] % 10), f.P(tr[1] / 10, tr[1] % 10)));
  }
  sys.post_checks.push_back(realizable_check());
  return sys;
}

inline const std::vector<std::array<int, 3>>& pencil_triples() {
  static const std::vector<std::array<int, 3>> t = {{12, 34, 56}, {13, 25, 46}, {14, 26, 35}, {15, 24, 36}};
  return t;
}

inline ConstraintSystem build_ten_e1_like(Scenario sc) {
  ConstraintSystem sys = six_lines_with_triples(sc, pencil_triples(), {"M_1", "M_2", "M_3", "M_4"});
  const auto& g = sys.geometry;
  sys.equations.push_back({"M_2, M_3, M_4 concurrent",
                           det3(g.line("M_2"), g.line("M_3"), g.line("M_4"))});
  sys.post_checks.push_back({"M_2, M_3, M_4 meet in a single point W",
                             [](const ScenarioGeometry& g, const Assignment& x, const FieldSpec& f) {
                               return concurrent(concrete(g, "M_2", x, f), concrete(g, "M_3", x, f),
                                                 concrete(g, "M_4", x, f));
                             }});
  return sys;
}

}  // namespace detail

inline ConstraintSystem build_system(Scenario sc) {
  using namespace detail;
  switch (sc) {
    case Scenario::TenE1: {
      // One 4-fold point W = M_1 ^ ... ^ M_4; L_1..L_6 a star.
      ConstraintSystem sys = build_ten_e1_like(sc);
      sys.post_checks.push_back({"M_1 passes through W",
                                 [](const ScenarioGeometry& g, const Assignment& x, const FieldSpec& f) {
                                   return concurrent(concrete(g, "M_1", x, f), concrete(g, "M_2", x, f),
                                                     concrete(g, "M_3", x, f));
                                 }});
      sys.target = {{4, 1}, {3, 12}, {2, 3}};
      return sys;
    }
    case Scenario::TenCaseA: {
      // M_2, M_3, M_4 concurrent at W, M_1 carrying the three double points.
      ConstraintSystem sys = build_ten_e1_like(sc);
      sys.post_checks.push_back({"M_1 avoids W",
                                 [](const ScenarioGeometry& g, const Assignment& x, const FieldSpec& f) {
                                   return !concurrent(concrete(g, "M_1", x, f), concrete(g, "M_2", x, f),
                                                      concrete(g, "M_3", x, f));
                                 }});
      sys.target = {{3, 13}, {2, 6}};
      return sys;
    }
    case Scenario::TenCaseB: {
      // L_4, L_5, L_6 through D = (1:1:1); M_2, M_3, M_4 a triangle Z_1 Z_2 Z_3
      // with Z_1 on L_4, Z_2 on L_5, Z_3 on L_6.
      ConstraintSystem sys;
      sys.scenario = sc;
      Frame f;
      f.vars = {"a", "b", "c"};
      f.v = polynomial_variables(f.vars);
      f.L[1] = constant_triple(f.vars, 1, 0, 0);
      f.L[2] = constant_triple(f.vars, 0, 1, 0);
      f.L[3] = constant_triple(f.vars, 0, 0, 1);
      for (int i = 0; i < 3; ++i) f.L[4 + i] = {f.v[i], -(f.v[i] + 1), f.k(1)};
      sys.variables = f.vars;

      const SymbolicTriple M1 = cross(f.P(1, 4), f.P(2, 5));
      const SymbolicTriple M2 = cross(f.P(1, 2), f.P(3, 4));
      const SymbolicTriple M3 = cross(f.P(1, 5), f.P(2, 3));
      const SymbolicTriple M4 = cross(f.P(1, 3), f.P(2, 6));
      sys.equations.push_back({"Z_1 = M_3 ^ M_4 on L_4", dot(cross(M3, M4), f.L.at(4))});
      sys.equations.push_back({"Z_2 = M_2 ^ M_4 on L_5", dot(cross(M2, M4), f.L.at(5))});
      sys.equations.push_back({"Z_3 = M_2 ^ M_3 on L_6", dot(cross(M2, M3), f.L.at(6))});
      sys.equations.push_back({"M_1: P_14, P_25, P_36 collinear",
                               collinearity_poly(f.P(1, 4), f.P(2, 5), f.P(3, 6))});

      add_frame_inequations(sys, f);
      sys.inequations.push_back({"a != b", {f.v[0] - f.v[1]}, InequationKind::Scenario});
      sys.inequations.push_back({"a != c", {f.v[0] - f.v[2]}, InequationKind::Scenario});
      sys.inequations.push_back({"b != c", {f.v[1] - f.v[2]}, InequationKind::Scenario});

      add_frame_lines(sys, f);
      for (const auto& [label, t] : std::vector<std::pair<std::string, SymbolicTriple>>{
               {"M_1", M1}, {"M_2", M2}, {"M_3", M3}, {"M_4", M4}}) {
        sys.geometry.labels.push_back(label);
        sys.geometry.lines.push_back(t);
      }
      sys.post_checks.push_back(realizable_check());
      sys.target = {{3, 13}, {2, 6}};
      return sys;
    }
    case Scenario::ElevenCaseI: {
      // L_1..L_6 a star whose 15 points fall into five collinear triples; the
      // five triple lines must not all pass through one point.
      ConstraintSystem sys = six_lines_with_triples(
          sc, {{12, 34, 56}, {13, 25, 46}, {14, 26, 35}, {15, 24, 36}, {16, 23, 45}},
          {"T_1", "T_2", "T_3", "T_4", "T_5"});
      sys.post_checks.push_back({"triple lines not in one pencil",
                                 [](const ScenarioGeometry& g, const Assignment& x, const FieldSpec& f) {
                                   std::vector<ProjLine> t;
                                   for (int i = 1; i <= 5; ++i)
                                     t.push_back(concrete(g, "T_" + std::to_string(i), x, f));
                                   for (int i = 2; i < 5; ++i)
                                     if (!concurrent(t[0], t[1], t[i])) return true;
                                   return false;
                                 }});
      sys.target = {{3, 17}, {2, 4}};
      return sys;
    }
    case Scenario::ElevenCaseII: {
      // M_1, M_2, M_3 through W_1 and N_1, N_2, N_3 through W_2, the line
      // W_1 W_2 not in the configuration. Z_1 = M_3^N_2, Z_2 = M_3^N_3,
      // Z_3 = M_3^N_1, Z_4 = M_2^N_3, Z_5 = M_1^N_3 and Z_i on L_i.
      ConstraintSystem sys;
      sys.scenario = sc;
      const Frame f = general_frame(5);
      sys.variables = f.vars;
      const SymbolicTriple M1 = cross(f.P(1, 2), f.P(3, 4));
      const SymbolicTriple M2 = cross(f.P(1, 5), f.P(2, 3));
      const SymbolicTriple N1 = cross(f.P(1, 4), f.P(2, 5));
      const SymbolicTriple N2 = cross(f.P(2, 4), f.P(3, 5));
      const SymbolicTriple W1 = cross(M1, M2);
      const SymbolicTriple W2 = cross(N1, N2);
      const SymbolicTriple M3 = cross(W1, f.P(4, 5));
      const SymbolicTriple N3 = cross(W2, f.P(1, 3));
      const std::map<int, SymbolicTriple> Z = {
          {1, cross(M3, N2)}, {2, cross(M3, N3)}, {3, cross(M3, N1)}, {4, cross(M2, N3)}, {5, cross(M1, N3)}};
      // Z_2 on L_2 holds identically and is omitted.
      for (int i : {1, 3, 4, 5})
        sys.equations.push_back({"Z_" + std::to_string(i) + " on L_" + std::to_string(i),
                                 dot(Z.at(i), f.L.at(i))});

      add_frame_inequations(sys, f);
      sys.inequations.push_back({"L_4 != L_5, i.e. (a,b) != (1,1)", {f.v[0] - 1, f.v[1] - 1},
                                 InequationKind::Scenario});
      add_frame_lines(sys, f);
      for (const auto& [label, t] : std::vector<std::pair<std::string, SymbolicTriple>>{
               {"M_1", M1}, {"M_2", M2}, {"M_3", M3}, {"N_1", N1}, {"N_2", N2}, {"N_3", N3}}) {
        sys.geometry.labels.push_back(label);
        sys.geometry.lines.push_back(t);
      }
      sys.post_checks.push_back(realizable_check());
      sys.target = {{3, 17}, {2, 4}};
      return sys;
    }
  }
  throw Error(ErrorCode::UnknownName, "unknown scenario");
}

/// Incidence condition Z_2 on L_2 of ELEVEN_CASE_II, which the system omits.
inline IntPolynomial eleven_case_ii_omitted_condition() {
  const auto f = detail::general_frame(5);
  const SymbolicTriple M1 = cross(f.P(1, 2), f.P(3, 4));
  const SymbolicTriple M2 = cross(f.P(1, 5), f.P(2, 3));
  const SymbolicTriple N1 = cross(f.P(1, 4), f.P(2, 5));
  const SymbolicTriple N2 = cross(f.P(2, 4), f.P(3, 5));
  const SymbolicTriple M3 = cross(cross(M1, M2), f.P(4, 5));
  const SymbolicTriple N3 = cross(cross(N1, N2), f.P(1, 3));
  return dot(cross(M3, N3), f.L.at(2));
}

namespace detail {

// Polynomial with coefficients reduced into a field, evaluated on codes
// through a per-element power table.
class CompiledPolynomial {
 public:
  CompiledPolynomial(const IntPolynomial& p, const FieldSpec& f) : field_(f) {
    for (const auto& [e, c] : p.terms()) {
      const std::uint32_t code = f.element(c).code();
      if (code != 0) terms_.push_back({code, e});
    }
  }

  std::uint32_t eval(const std::vector<std::uint32_t>& x,
                     const std::vector<std::vector<std::uint32_t>>& powers) const {
    std::uint32_t acc = 0;
    for (const auto& [c, e] : terms_) {
      std::uint32_t t = c;
      for (std::size_t i = 0; i < e.size() && t != 0; ++i)
        if (e[i] > 0) t = field_.mul(t, powers[x[i]][e[i]]);
      acc = field_.add(acc, t);
    }
    return acc;
  }

  int degree() const {
    int d = 0;
    for (const auto& [c, e] : terms_)
      for (int x : e) d = std::max(d, x);
    return d;
  }

 private:
  FieldSpec field_;
  std::vector<std::pair<std::uint32_t, std::vector<int>>> terms_;
};

enum class InequationFilter { None, FrameOnly, All };

// All assignments satisfying every equation and the selected inequations.
inline std::vector<Assignment> scan(const ConstraintSystem& sys, const FieldSpec& f, InequationFilter filter) {
  if (f.order() > (1u << 16))
    throw Error(ErrorCode::FieldTooLarge, "GF(" + f.notation() + ") exceeds the 2^16 scan limit");
  const std::size_t n = sys.variables.size();

  std::vector<CompiledPolynomial> eqs;
  for (const auto& e : sys.equations) eqs.emplace_back(e.poly, f);
  std::vector<std::vector<CompiledPolynomial>> ineqs;
  for (const auto& in : sys.inequations) {
    if (filter == InequationFilter::None) break;
    if (filter == InequationFilter::FrameOnly && in.kind != InequationKind::Frame) continue;
    std::vector<CompiledPolynomial> group;
    for (const auto& p : in.any_nonzero) group.emplace_back(p, f);
    ineqs.push_back(std::move(group));
  }

  int max_deg = 1;
  for (const auto& e : eqs) max_deg = std::max(max_deg, e.degree());
  for (const auto& g : ineqs)
    for (const auto& p : g) max_deg = std::max(max_deg, p.degree());
  std::vector<std::vector<std::uint32_t>> powers(f.order(), std::vector<std::uint32_t>(max_deg + 1));
  for (std::uint32_t c = 0; c < f.order(); ++c) {
    powers[c][0] = 1;
    for (int d = 1; d <= max_deg; ++d) powers[c][d] = f.mul(powers[c][d - 1], c);
  }

  std::vector<Assignment> out;
  std::vector<std::uint32_t> x(n, 0);
  while (true) {
    const bool eq_ok = std::all_of(eqs.begin(), eqs.end(), [&](const auto& p) { return p.eval(x, powers) == 0; });
    if (eq_ok) {
      const bool ineq_ok = std::all_of(ineqs.begin(), ineqs.end(), [&](const auto& g) {
        return std::any_of(g.begin(), g.end(), [&](const auto& p) { return p.eval(x, powers) != 0; });
      });
      if (ineq_ok) {
        Assignment a;
        for (auto c : x) a.emplace_back(f, c);
        out.push_back(std::move(a));
      }
    }
    // Odometer, first variable slowest.
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++x[i] < f.order()) break;
      x[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace detail

struct PostCheckOutcome {
  std::string name;
  bool passed = false;
};

struct Candidate {
  Assignment values;
  std::vector<PostCheckOutcome> post_checks;
  bool accepted = false;
};

/// Candidates satisfy every equation and inequation; solutions additionally
/// pass every post-check.
struct SolveReport {
  FieldSpec field;
  std::vector<Candidate> candidates;

  std::vector<Assignment> solutions() const {
    std::vector<Assignment> out;
    for (const auto& c : candidates)
      if (c.accepted) out.push_back(c.values);
    return out;
  }
};

inline SolveReport solve_detailed(const ConstraintSystem& sys, const FieldSpec& f) {
  SolveReport report;
  report.field = f;
  for (auto& x : detail::scan(sys, f, detail::InequationFilter::All)) {
    Candidate c;
    c.values = std::move(x);
    c.accepted = true;
    for (const auto& pc : sys.post_checks) {
      // Later checks may assume the lines are well defined.
      const bool ok = c.accepted && pc.accept(sys.geometry, c.values, f);
      c.post_checks.push_back({pc.name, ok});
      c.accepted = c.accepted && ok;
    }
    report.candidates.push_back(std::move(c));
  }
  return report;
}

/// All assignments over f satisfying the whole system, in lexicographic order.
inline std::vector<Assignment> solve_over(const ConstraintSystem& sys, const FieldSpec& f) {
  return solve_detailed(sys, f).solutions();
}

/// Solutions of the equations together with the frame inequations only.
inline std::vector<Assignment> raw_solutions(const ConstraintSystem& sys, const FieldSpec& f) {
  return detail::scan(sys, f, detail::InequationFilter::FrameOnly);
}

struct ConsequenceViolation {
  std::string consequence;
  Assignment witness;
};

struct FieldConsequences {
  FieldSpec field;
  std::size_t raw_solutions = 0;
  std::vector<ConsequenceViolation> violations;
};

struct ConsequenceReport {
  std::vector<FieldConsequences> fields;

  bool all_pass() const {
    return std::all_of(fields.begin(), fields.end(), [](const auto& f) { return f.violations.empty(); });
  }
};

/// Checks that each consequence vanishes on every raw solution over every
/// field of the battery.
inline ConsequenceReport consequence_check(const ConstraintSystem& sys, const std::vector<NamedPolynomial>& cons,
                                           const std::vector<FieldSpec>& battery) {
  ConsequenceReport report;
  for (const auto& f : battery) {
    FieldConsequences fc;
    fc.field = f;
    const auto raw = raw_solutions(sys, f);
    fc.raw_solutions = raw.size();
    for (const auto& x : raw)
      for (const auto& c : cons)
        if (!c.poly.evaluate(x, f).is_zero()) fc.violations.push_back({c.name, x});
    report.fields.push_back(std::move(fc));
  }
  return report;
}

/// The full configuration for a solving assignment.
inline Arrangement realize(const ConstraintSystem& sys, const Assignment& x, const FieldSpec& f) {
  const auto fail = [&](const std::string& why) {
    return Error(ErrorCode::UnsolvedAssignment, to_string(sys.scenario) + ": " + why);
  };
  if (x.size() != sys.variables.size()) throw fail("wrong number of parameters");
  for (const auto& v : x)
    if (!(v.field() == f)) throw fail("parameter not in GF(" + f.notation() + ")");
  for (const auto& e : sys.equations)
    if (!e.poly.evaluate(x, f).is_zero()) throw fail("violates '" + e.name + "'");
  for (const auto& in : sys.inequations)
    if (!in.holds(x, f)) throw fail("violates '" + in.name + "'");
  for (const auto& pc : sys.post_checks)
    if (!pc.accept(sys.geometry, x, f)) throw fail("fails post-check '" + pc.name + "'");
  auto lines = sys.geometry.evaluate_lines(x, f);
  return Arrangement(f, std::move(*lines), sys.geometry.labels);
}

inline Arrangement realize(Scenario sc, const Assignment& x, const FieldSpec& f) {
  return realize(build_system(sc), x, f);
}

/// Polynomials that should vanish on every raw solution of a scenario.
inline std::vector<NamedPolynomial> known_consequences(Scenario sc) {
  const auto sys = build_system(sc);
  const auto v = polynomial_variables(sys.variables);
  switch (sc) {
    case Scenario::TenCaseB: {
      const auto& b = v[1];
      return {{"b^2 - 1", b * b - 1}};
    }
    case Scenario::ElevenCaseII: {
      const auto &a = v[0], &b = v[1];
      return {{"3(a - b^2)", 3 * (a - b * b)},
              {"a*b - 2*b^2 + a", a * b - 2 * (b * b) + a},
              {"a^2 - a*b + b^2 - a", a * a - a * b + b * b - a}};
    }
    case Scenario::TenE1: {
      const auto &a = v[0], &b = v[1], &c = v[2], &d = v[3];
      return {{"b - c", b - c}, {"a - d", a - d}, {"b - a^2", b - a * a}, {"a^2 + a + 1", a * a + a + 1}};
    }
    default:
      return {};
  }
}

/// GF(q), q in {2,3,4,5,7,8,9,11,13,16,25,27}, default moduli.
inline std::vector<FieldSpec> default_battery() {
  std::vector<FieldSpec> out;
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27}) out.push_back(make_field_of_order(q));
  return out;
}

}  // namespace triarr
