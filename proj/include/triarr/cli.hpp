#pragma once

// Subcommand front end. run() never prints; main() decides where the text
// goes. Exit codes: 0 success, 1 verification or search target failed,
// 2 usage or input error.

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "triarr/bounds.hpp"
#include "triarr/certificates.hpp"
#include "triarr/constraints.hpp"
#include "triarr/error.hpp"
#include "triarr/field.hpp"
#include "triarr/incidence.hpp"
#include "triarr/io.hpp"
#include "triarr/search.hpp"

namespace triarr::cli {

struct CommandResult {
  int exit_code = 0;
  std::string text;
  std::optional<Json> json;
};

namespace detail {

inline FieldSpec field_option(const std::string& text, const std::vector<int>& modulus) {
  if (modulus.empty()) return parse_field(text);
  return parse_field(text, Coefficients(modulus.begin(), modulus.end()));
}

// "3", "-1" or a coefficient list "[0,1]".
inline FieldElement parse_element(const std::string& text, const FieldSpec& f) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error&) {
    throw Error(ErrorCode::ParseError, "cannot read field element '" + text + "'");
  }
  return element_from_json(j, f);
}

inline std::string assignment_text(const std::vector<std::string>& vars, const Assignment& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? ", " : "") + vars[i] + "=" + x[i].to_string();
  return out;
}

inline Json assignment_json(const std::vector<std::string>& vars, const Assignment& x) {
  Json j = Json::object();
  for (std::size_t i = 0; i < x.size(); ++i) j[vars[i]] = to_json(x[i]);
  return j;
}

inline std::string field_name(const FieldSpec& f) { return "GF(" + std::to_string(f.order()) + ")"; }

inline CommandResult finish(int code, const std::string& text, Json json, bool as_json) {
  CommandResult r;
  r.exit_code = code;
  r.text = as_json ? json.dump(2) + "\n" : text;
  r.json = std::move(json);
  return r;
}

// ---------------------------------------------------------------------------

inline CommandResult cmd_bounds(int max_s, bool csv, bool as_json) {
  if (max_s < 1) throw Error(ErrorCode::InvalidArgument, "--max must be at least 1");
  const auto rows = bound_table(max_s);
  std::ostringstream os;
  Json j{{"command", "bounds"}, {"rows", Json::array()}};
  if (csv) os << "s,naive,u3\n";
  else os << std::setw(4) << "s" << std::setw(8) << "naive" << std::setw(6) << "U3" << "\n";
  for (const auto& r : rows) {
    if (csv) os << r.s << "," << r.naive << "," << r.u3 << "\n";
    else os << std::setw(4) << r.s << std::setw(8) << r.naive << std::setw(6) << r.u3 << "\n";
    j["rows"].push_back({{"s", r.s}, {"naive", r.naive}, {"u3", r.u3}, {"eps", r.eps}});
  }
  return finish(0, os.str(), j, as_json);
}

inline CommandResult cmd_verify(const std::string& name, const FieldSpec& f, const std::string& param, bool csv,
                                bool as_json) {
  const Certificate cert = builtin(name);
  std::optional<FieldElement> x;
  if (!param.empty()) x = parse_element(param, f);
  const VerifyReport rep = verify(cert, f, x);

  std::ostringstream os;
  os << name << " over " << field_name(f);
  if (rep.parameter) os << " with " << *cert.parameter << " = " << rep.parameter->to_string();
  os << ": " << (rep.passed() ? "PASS" : "FAIL") << "\n";
  os << "  t-vector: " << to_string(rep.actual_tvec) << " (expected " << to_string(rep.expected_tvec) << ")"
     << (rep.tvec_ok ? "" : "  MISMATCH") << "\n";
  os << "  pair count identity: " << (rep.identity_ok ? "holds" : "FAILS") << "\n";
  if (!cert.points.empty())
    os << "  listed points: " << cert.points.size() << ", mismatches " << rep.point_mismatches.size() << "\n";
  for (const auto& m : rep.point_mismatches) os << "    " << m.label << " " << m.expected << ": " << m.problem << "\n";
  if (rep.table_checked) {
    os << "  incidence table " << cert.line_labels.size() << "x" << cert.point_labels.size() << ": "
       << (rep.table_ok ? "matches" : "DIFFERS") << "\n";
    for (const auto& m : rep.cell_mismatches)
      os << "    (" << m.row << ", " << m.column << ") printed " << (m.expected ? "+" : "blank") << ", actual "
         << (m.actual ? "+" : "blank") << (m.documented_erratum ? "  [documented erratum]" : "") << "\n";
  }
  if (csv && rep.table_checked) os << rep.actual_table.to_csv();

  Json j{{"command", "verify"},
         {"name", name},
         {"field", to_json(f)},
         {"parameter", rep.parameter ? to_json(*rep.parameter) : Json(nullptr)},
         {"passed", rep.passed()},
         {"expected_tvec", to_json(rep.expected_tvec)},
         {"actual_tvec", to_json(rep.actual_tvec)},
         {"identity_holds", rep.identity_ok},
         {"point_mismatches", Json::array()},
         {"table", {{"checked", rep.table_checked}, {"matches", rep.table_ok}, {"mismatches", Json::array()}}}};
  for (const auto& m : rep.point_mismatches)
    j["point_mismatches"].push_back({{"label", m.label}, {"coordinates", m.expected}, {"problem", m.problem}});
  for (const auto& m : rep.cell_mismatches)
    j["table"]["mismatches"].push_back({{"row", m.row},
                                        {"column", m.column},
                                        {"printed", m.expected},
                                        {"actual", m.actual},
                                        {"documented_erratum", m.documented_erratum}});
  return finish(rep.passed() ? 0 : 1, os.str(), j, as_json);
}

struct SearchOptions {
  std::string field;
  std::vector<int> modulus;
  int lines = 0;
  std::optional<int> target;
  std::string metric = "3";
  bool no_frame = false;
  std::uint64_t max_nodes = 1'000'000'000;
  int threads = 1;
  bool strict = false;
  std::string out;
};

inline CommandResult cmd_search(const SearchOptions& o, bool as_json) {
  SearchConfig cfg;
  cfg.field = field_option(o.field, o.modulus);
  cfg.s = o.lines;
  cfg.target = o.target;
  if (o.metric == "3") cfg.metric = TripleMetric::ExactlyThree;
  else if (o.metric == "3plus") cfg.metric = TripleMetric::AtLeastThree;
  else throw Error(ErrorCode::InvalidArgument, "--metric must be 3 or 3plus");
  cfg.normalize_frame = !o.no_frame;
  cfg.max_nodes = o.max_nodes;
  cfg.threads = o.threads;
  cfg.strict = o.strict;
  const SearchReport rep = max_triple_search(cfg);

  std::ostringstream os;
  os << "search over " << field_name(cfg.field) << ", s = " << cfg.s << ", metric " << to_string(cfg.metric)
     << (rep.frame_used ? ", frame fixed" : "") << "\n";
  os << "  best: " << (rep.best ? std::to_string(*rep.best) : "none (no such arrangement)") << "\n";
  if (cfg.target)
    os << "  target " << *cfg.target << ": " << (rep.target_reached ? "reached" : "not reached") << "\n";
  os << "  exhaustive: " << (rep.exhaustive ? "yes" : "no") << ", nodes visited: " << rep.nodes_visited << "\n";
  os << "  note: " << rep.note << "\n";
  Json j{{"command", "search"},
         {"field", to_json(cfg.field)},
         {"s", cfg.s},
         {"metric", to_string(cfg.metric)},
         {"normalize_frame", rep.frame_used},
         {"target", cfg.target ? Json(*cfg.target) : Json(nullptr)},
         {"best", rep.best ? Json(*rep.best) : Json(nullptr)},
         {"target_reached", rep.target_reached},
         {"exhaustive", rep.exhaustive},
         {"nodes_visited", rep.nodes_visited},
         {"note", rep.note},
         {"witnesses", Json::array()}};
  for (std::size_t i = 0; i < rep.witnesses.size(); ++i) {
    const auto& w = rep.witnesses[i];
    const auto tv = profile(w).tvec;
    os << "  witness " << i + 1 << ": " << to_string(tv) << "\n   ";
    for (const auto& l : w.lines()) os << " " << to_string(l);
    os << "\n";
    j["witnesses"].push_back({{"tvec", to_json(tv)}, {"arrangement", to_json(w)}});
  }
  if (!o.out.empty()) {
    write_text_file(o.out, j.dump(2) + "\n");
    os << "  report written to " << o.out << "\n";
  }
  const bool failed = cfg.target && !rep.target_reached;
  return finish(failed ? 1 : 0, os.str(), j, as_json);
}

struct ConstraintOptions {
  std::string scenario;
  std::string field;
  std::vector<int> modulus;
  bool list_solutions = false;
  bool battery = false;
  bool consequences = false;
};

inline Json system_json(const ConstraintSystem& sys) {
  Json j{{"variables", sys.variables},
         {"equations", Json::array()},
         {"inequations", Json::array()},
         {"post_checks", Json::array()},
         {"target_tvec", to_json(sys.target)}};
  for (const auto& e : sys.equations) j["equations"].push_back({{"name", e.name}, {"polynomial", e.poly.to_string()}});
  for (const auto& in : sys.inequations) {
    Json polys = Json::array();
    for (const auto& p : in.any_nonzero) polys.push_back(p.to_string());
    j["inequations"].push_back({{"name", in.name},
                                {"kind", in.kind == InequationKind::Frame ? "frame" : "scenario"},
                                {"any_nonzero", polys}});
  }
  for (const auto& pc : sys.post_checks) j["post_checks"].push_back(pc.name);
  return j;
}

inline CommandResult cmd_constraints(const ConstraintOptions& o, bool as_json) {
  const Scenario sc = parse_scenario(o.scenario);
  const ConstraintSystem sys = build_system(sc);
  std::vector<FieldSpec> fields;
  if (o.battery) fields = default_battery();
  if (!o.field.empty()) fields.push_back(field_option(o.field, o.modulus));
  if (fields.empty()) throw Error(ErrorCode::InvalidArgument, "give --field or --battery");

  std::ostringstream os;
  os << to_string(sc) << " (variables";
  for (const auto& v : sys.variables) os << " " << v;
  os << ")\n";
  for (const auto& e : sys.equations) os << "  " << e.name << ":  " << e.poly.to_string() << " = 0\n";

  Json j{{"command", "constraints"}, {"scenario", to_string(sc)}, {"system", system_json(sys)}, {"fields", Json::array()}};
  const auto cons = known_consequences(sc);
  bool violation = false;
  for (const auto& f : fields) {
    const SolveReport rep = solve_detailed(sys, f);
    const auto sols = rep.solutions();
    os << field_name(f) << ": " << rep.candidates.size() << " candidate(s), " << sols.size() << " solution(s)\n";
    Json fj{{"field", to_json(f)},
            {"candidates", rep.candidates.size()},
            {"solutions", sols.size()},
            {"assignments", Json::array()}};
    if (o.list_solutions) {
      for (const auto& c : rep.candidates) {
        os << "  " << assignment_text(sys.variables, c.values) << (c.accepted ? "  accepted" : "  rejected");
        Json cj{{"values", assignment_json(sys.variables, c.values)}, {"accepted", c.accepted}, {"post_checks", Json::array()}};
        for (const auto& pc : c.post_checks) {
          if (!pc.passed) os << " [fails: " << pc.name << "]";
          cj["post_checks"].push_back({{"name", pc.name}, {"passed", pc.passed}});
        }
        os << "\n";
        fj["assignments"].push_back(cj);
      }
    }
    if (o.consequences) {
      const auto cr = consequence_check(sys, cons, {f});
      const auto& fc = cr.fields.front();
      os << "  consequences on " << fc.raw_solutions << " raw solution(s): "
         << (fc.violations.empty() ? "all vanish" : std::to_string(fc.violations.size()) + " violation(s)") << "\n";
      Json cj{{"checked", Json::array()}, {"raw_solutions", fc.raw_solutions}, {"violations", Json::array()}};
      for (const auto& c : cons) cj["checked"].push_back(c.name);
      for (const auto& v : fc.violations) {
        os << "    " << v.consequence << " nonzero at " << assignment_text(sys.variables, v.witness) << "\n";
        cj["violations"].push_back({{"consequence", v.consequence}, {"witness", assignment_json(sys.variables, v.witness)}});
      }
      violation = violation || !fc.violations.empty();
      fj["consequences"] = cj;
    }
    j["fields"].push_back(fj);
  }
  if (o.consequences && cons.empty()) os << "(no consequences recorded for " << to_string(sc) << ")\n";
  return finish(violation ? 1 : 0, os.str(), j, as_json);
}

inline CommandResult cmd_torsion(int p, bool dual, bool as_json) {
  std::ostringstream os;
  Json j{{"command", "torsion"}, {"p", p}};
  if (!dual) {
    const TorsionModel m = torsion_model(p);
    const bool linear = linearity_check(m);
    os << "E(" << p << ") = (Z/" << p << ")^2: " << m.points.size() << " points, " << m.secant_blocks.size()
       << " zero-sum triples, " << m.tangent_pairs.size() << " tangent pairs, "
       << m.secant_blocks.size() + m.tangent_pairs.size() << " lines\n";
    os << "  every pair of points on exactly one line: " << (linear ? "yes" : "no") << "\n";
    if (!m.note.empty()) os << "  note: " << m.note << "\n";
    j["points"] = m.points.size();
    j["secant_blocks"] = m.secant_blocks.size();
    j["tangent_pairs"] = m.tangent_pairs.size();
    j["total_lines"] = m.secant_blocks.size() + m.tangent_pairs.size();
    j["linear"] = linear;
    j["note"] = m.note;
    return finish(linear ? 0 : 1, os.str(), j, as_json);
  }
  const TorsionDualCounts r = torsion_dual_counts(p);
  os << "dual of E(" << p << "): " << r.lines << " lines, t3 = " << r.t3 << ", t2 = " << r.t2 << "\n";
  os << "  C(" << r.lines << ",2) = " << r.identity_lhs << ", 3 t3 + t2 = " << r.identity_rhs << "\n";
  os << "  points on the line dual to 0: " << r.lines_through_zero << ", on every other line: " << r.lines_through_other
     << (r.uniform_nonzero ? "" : " (not uniform)") << "\n";
  os << "  U3(" << r.lines << ") - t3 = " << r.u3 << " - " << r.t3 << " = " << r.gap << "\n";
  os << "  closed forms: " << (r.closed_forms_hold ? "hold" : "FAIL") << "\n";
  j["dual"] = {{"lines", r.lines},
               {"t3", r.t3},
               {"t2", r.t2},
               {"identity_lhs", r.identity_lhs},
               {"identity_rhs", r.identity_rhs},
               {"points_on_zero_line", r.lines_through_zero},
               {"points_on_other_lines", r.lines_through_other},
               {"u3", r.u3},
               {"gap", r.gap},
               {"closed_forms_hold", r.closed_forms_hold},
               {"linear", r.linear}};
  return finish(r.closed_forms_hold && r.linear ? 0 : 1, os.str(), j, as_json);
}

inline CommandResult cmd_profile(const std::string& path, bool csv, bool as_json) {
  const Arrangement a = read_arrangement(path);
  const auto prof = profile(a);
  const auto par = parity_check(a, prof);
  std::int64_t pairs = 0;
  for (const auto& [k, t] : prof.tvec) pairs += t * choose2(k);

  std::ostringstream os;
  os << path << ": " << a.size() << " lines over " << field_name(a.field()) << "\n";
  os << "  t-vector: " << to_string(prof.tvec) << "\n";
  os << "  sum t_k C(k,2) = " << pairs << ", C(s,2) = " << choose2(prof.s)
     << (pairs == choose2(prof.s) ? "  ok" : "  FAILS") << "\n";
  os << "  per-line s-1 = sum(m_i - 1): " << (par.all_hold ? "holds on every line" : "FAILS") << "\n";
  if (par.any_only_triple)
    os << "  a line meets the others only in triple points, so s must be odd: "
       << (par.parity_consistent ? "consistent" : "INCONSISTENT") << "\n";
  if (csv) os << table(a, prof).to_csv();

  Json j{{"command", "profile"},
         {"file", path},
         {"field", to_json(a.field())},
         {"s", prof.s},
         {"tvec", to_json(prof.tvec)},
         {"identity", {{"lhs", pairs}, {"rhs", choose2(prof.s)}, {"holds", pairs == choose2(prof.s)}}},
         {"parity", {{"all_hold", par.all_hold}, {"any_only_triple", par.any_only_triple},
                     {"consistent", par.parity_consistent}}},
         {"points", Json::array()}};
  for (const auto& ip : prof.points) {
    Json labels = Json::array();
    for (int l : ip.lines) labels.push_back(a.label(l));
    j["points"].push_back({{"point", to_json(ip.point)}, {"multiplicity", ip.multiplicity()}, {"lines", labels}});
  }
  return finish(0, os.str(), j, as_json);
}

inline CommandResult cmd_dualize(const std::string& path, int min_mult, const std::string& out, bool as_json) {
  const Arrangement d = dual_search_seed(read_arrangement(path), min_mult);
  const Json j = to_json(d);
  std::string text;
  if (!out.empty()) {
    write_arrangement(out, d);
    text = "wrote " + std::to_string(d.size()) + " dual lines to " + out + "\n";
  } else {
    text = j.dump(2) + "\n";
  }
  return finish(0, text, j, as_json);
}

inline CommandResult cmd_iso(const std::string& pa, const std::string& pb, bool as_json) {
  const Arrangement a = read_arrangement(pa), b = read_arrangement(pb);
  const auto m = find_isomorphism(abstract(a), abstract(b));
  std::ostringstream os;
  Json j{{"command", "iso"}, {"isomorphic", m.has_value()}, {"mapping", Json(nullptr)}};
  if (m) {
    os << "isomorphic\n";
    Json mapping = Json::object();
    for (std::size_t i = 0; i < m->size(); ++i) {
      os << "  " << a.label(i) << " -> " << b.label((*m)[i]) << "\n";
      mapping[a.label(i)] = b.label((*m)[i]);
    }
    j["mapping"] = mapping;
  } else {
    os << "not isomorphic\n";
  }
  return finish(m ? 0 : 1, os.str(), j, as_json);
}

inline CommandResult cmd_export(const std::string& name, const FieldSpec& f, const std::string& param,
                                const std::string& out, bool as_json) {
  const Certificate cert = builtin(name);
  std::optional<FieldElement> x;
  if (!param.empty()) x = parse_element(param, f);
  const Arrangement a = instantiate(cert, f, x);
  write_arrangement(out, a);
  return finish(0, "wrote " + name + " over " + field_name(f) + " to " + out + "\n", to_json(a), as_json);
}

}  // namespace detail

/// Parses and runs one command line (without the program name).
inline CommandResult run(const std::vector<std::string>& argv) {
  using namespace detail;
  CLI::App app{"Line arrangements with many triple points over finite fields", "triarr"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print the JSON report instead of text");
  app.fallthrough();

  std::function<CommandResult()> action;

  auto* bounds = app.add_subcommand("bounds", "Naive and Schoenheim bounds on t3");
  int max_s = 12;
  bool bounds_csv = false;
  bounds->add_option("--max", max_s, "Largest s")->capture_default_str();
  bounds->add_flag("--csv", bounds_csv, "CSV output");
  bounds->callback([&] { action = [&] { return cmd_bounds(max_s, bounds_csv, as_json); }; });

  std::string field_text, param;
  std::vector<int> modulus;
  auto add_field = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--field", field_text, "Field order q or p^k");
    if (required) opt->required();
    sub->add_option("--modulus", modulus, "Irreducible modulus coefficients, low degree first")->delimiter(',');
  };

  auto* verify_cmd = app.add_subcommand("verify", "Verify a built-in configuration");
  std::string name;
  bool verify_csv = false;
  verify_cmd->add_option("name", name, "Certificate name")->required();
  add_field(verify_cmd, true);
  verify_cmd->add_option("--param", param, "Parameter value, an integer or coefficient list like [0,1]");
  verify_cmd->add_flag("--csv", verify_csv, "Also print the computed incidence table as CSV");
  verify_cmd->callback([&] {
    action = [&] { return cmd_verify(name, field_option(field_text, modulus), param, verify_csv, as_json); };
  });

  auto* search_cmd = app.add_subcommand("search", "Maximize triple points over PG(2,q)");
  SearchOptions so;
  search_cmd->add_option("--field", so.field, "Field order q or p^k")->required();
  search_cmd->add_option("--modulus", so.modulus, "Irreducible modulus coefficients")->delimiter(',');
  search_cmd->add_option("--lines", so.lines, "Number of lines s")->required();
  search_cmd->add_option("--target", so.target, "Stop once this many triple points are found");
  search_cmd->add_option("--metric", so.metric, "3 (exactly three lines) or 3plus (at least three)")
      ->check(CLI::IsMember({"3", "3plus"}));
  search_cmd->add_flag("--no-frame", so.no_frame, "Do not fix x, y, z, x+y+z");
  search_cmd->add_option("--max-nodes", so.max_nodes, "Node budget")->capture_default_str();
  search_cmd->add_option("--threads", so.threads, "Worker threads")->check(CLI::Range(1, 256));
  search_cmd->add_flag("--strict", so.strict, "Fail instead of reporting when the budget runs out");
  search_cmd->add_option("--out", so.out, "Write the JSON report here");
  search_cmd->callback([&] { action = [&] { return cmd_search(so, as_json); }; });

  auto* cons_cmd = app.add_subcommand("constraints", "Solve a scenario's polynomial system");
  ConstraintOptions co;
  cons_cmd->add_option("scenario", co.scenario, "TEN_E1, TEN_CASE_A, TEN_CASE_B, ELEVEN_CASE_I or ELEVEN_CASE_II")
      ->required();
  cons_cmd->add_option("--field", co.field, "Field order q or p^k");
  cons_cmd->add_option("--modulus", co.modulus, "Irreducible modulus coefficients")->delimiter(',');
  cons_cmd->add_flag("--list-solutions", co.list_solutions, "List every candidate with its post-check outcomes");
  cons_cmd->add_flag("--battery", co.battery, "Use GF(q), q in 2,3,4,5,7,8,9,11,13,16,25,27");
  cons_cmd->add_flag("--consequences", co.consequences, "Check the recorded consequences on raw solutions");
  cons_cmd->callback([&] { action = [&] { return cmd_constraints(co, as_json); }; });

  auto* torsion_cmd = app.add_subcommand("torsion", "Counts for the torsion model (Z/p)^2");
  int p = 5;
  bool dual_flag = false;
  torsion_cmd->add_option("--p", p, "Odd prime")->required();
  torsion_cmd->add_flag("--dual", dual_flag, "Count the dual line arrangement");
  torsion_cmd->callback([&] { action = [&] { return cmd_torsion(p, dual_flag, as_json); }; });

  auto* profile_cmd = app.add_subcommand("profile", "Intersection profile of an arrangement file");
  std::string file_a, file_b, out;
  bool profile_csv = false;
  profile_cmd->add_option("file", file_a, "Arrangement JSON")->required();
  profile_cmd->add_flag("--csv", profile_csv, "Print the incidence table as CSV");
  profile_cmd->callback([&] { action = [&] { return cmd_profile(file_a, profile_csv, as_json); }; });

  auto* dualize_cmd = app.add_subcommand("dualize", "Lines dual to the points of high multiplicity");
  int min_mult = 3;
  dualize_cmd->add_option("file", file_a, "Arrangement JSON")->required();
  dualize_cmd->add_option("--min-multiplicity", min_mult, "Smallest multiplicity kept")->capture_default_str();
  dualize_cmd->add_option("--out", out, "Write the dual arrangement here");
  dualize_cmd->callback([&] { action = [&] { return cmd_dualize(file_a, min_mult, out, as_json); }; });

  auto* iso_cmd = app.add_subcommand("iso", "Are two arrangements isomorphic as incidence structures");
  iso_cmd->add_option("a", file_a, "First arrangement")->required();
  iso_cmd->add_option("b", file_b, "Second arrangement")->required();
  iso_cmd->callback([&] { action = [&] { return cmd_iso(file_a, file_b, as_json); }; });

  auto* export_cmd = app.add_subcommand("export", "Write a built-in configuration as an arrangement file");
  export_cmd->add_option("name", name, "Certificate name")->required();
  add_field(export_cmd, true);
  export_cmd->add_option("--param", param, "Parameter value");
  export_cmd->add_option("--out", out, "Output file")->required();
  export_cmd->callback([&] {
    action = [&] { return cmd_export(name, field_option(field_text, modulus), param, out, as_json); };
  });

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out_s, err_s;
    const int code = app.exit(e, out_s, err_s);
    CommandResult r;
    r.exit_code = code == 0 ? 0 : 2;
    r.text = out_s.str() + err_s.str();
    if (code != 0) r.text += app.help();
    return r;
  }

  try {
    return action();
  } catch (const Error& e) {
    CommandResult r;
    r.exit_code = e.code() == ErrorCode::BudgetExceeded ? 1 : 2;
    r.json = Json{{"error", to_string(e.code())}, {"message", e.detail()}};
    r.text = as_json ? r.json->dump(2) + "\n" : std::string("error: ") + e.what() + "\n";
    return r;
  }
}

}  // namespace triarr::cli
