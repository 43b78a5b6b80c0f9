#pragma once

// Multivariate polynomials with integer coefficients over a fixed, ordered
// variable list. Terms are kept collected with no zero coefficients.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "triarr/error.hpp"
#include "triarr/field.hpp"

namespace triarr {

class IntPolynomial {
 public:
  using Exponents = std::vector<int>;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

  static IntPolynomial constant(std::vector<std::string> variables, std::int64_t c) {
    IntPolynomial p(std::move(variables));
    if (c != 0) p.terms_[Exponents(p.vars_.size(), 0)] = c;
    return p;
  }

  static IntPolynomial variable(std::vector<std::string> variables, const std::string& name) {
    IntPolynomial p(std::move(variables));
    Exponents e(p.vars_.size(), 0);
    e.at(p.var_index(name)) = 1;
    p.terms_[e] = 1;
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  /// True iff the variable occurs in some term.
  bool uses(std::size_t var) const {
    for (const auto& [e, c] : terms_)
      if (e[var] > 0) return true;
    return false;
  }

  IntPolynomial operator+(const IntPolynomial& o) const {
    check(o);
    IntPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  IntPolynomial operator-() const {
    IntPolynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  IntPolynomial operator-(const IntPolynomial& o) const { return *this + (-o); }

  IntPolynomial operator*(const IntPolynomial& o) const {
    check(o);
    IntPolynomial r(vars_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        Exponents e(e1.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }

  IntPolynomial operator*(std::int64_t k) const { return *this * constant(vars_, k); }
  IntPolynomial operator+(std::int64_t k) const { return *this + constant(vars_, k); }
  IntPolynomial operator-(std::int64_t k) const { return *this - constant(vars_, k); }
  friend IntPolynomial operator*(std::int64_t k, const IntPolynomial& p) { return p * k; }
  friend IntPolynomial operator+(std::int64_t k, const IntPolynomial& p) { return p + k; }
  friend IntPolynomial operator-(std::int64_t k, const IntPolynomial& p) { return -p + k; }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Value at an assignment (one element per variable, in variable order).
  FieldElement evaluate(const std::vector<FieldElement>& values, const FieldSpec& field) const {
    if (values.size() != vars_.size())
      throw Error(ErrorCode::InvalidArgument, "assignment size differs from variable count");
    FieldElement acc = field.zero();
    for (const auto& [e, c] : terms_) {
      FieldElement t = field.element(c);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) t = t * values[i].pow(static_cast<std::uint64_t>(e[i]));
      acc = acc + t;
    }
    return acc;
  }

  /// Human-readable form, highest-degree terms first, e.g. "-a*d + a - c + d".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += vars_[i];
        if (e[i] > 1) mono += '^' + std::to_string(e[i]);
      }
      const std::int64_t mag = c < 0 ? -c : c;
      std::string term = mono.empty() ? std::to_string(mag)
                                      : (mag == 1 ? mono : std::to_string(mag) + "*" + mono);
      if (first) {
        out = (c < 0 ? "-" : "") + term;
        first = false;
      } else {
        out += (c < 0 ? " - " : " + ") + term;
      }
    }
    return out;
  }

 private:
  std::size_t var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    throw Error(ErrorCode::InvalidArgument, "unknown variable '" + name + "'");
  }

  void check(const IntPolynomial& o) const {
    if (vars_ != o.vars_) throw Error(ErrorCode::InvalidArgument, "polynomials over different variable lists");
  }

  void add_term(const Exponents& e, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::vector<std::string> vars_;
  std::map<Exponents, std::int64_t> terms_;
};

/// The variables as polynomials, in order.
inline std::vector<IntPolynomial> polynomial_variables(const std::vector<std::string>& names) {
  std::vector<IntPolynomial> out;
  for (const auto& n : names) out.push_back(IntPolynomial::variable(names, n));
  return out;
}

/// A homogeneous triple with polynomial entries: a point or line depending
/// on the parameters.
using SymbolicTriple = std::array<IntPolynomial, 3>;

inline SymbolicTriple constant_triple(const std::vector<std::string>& vars, std::int64_t a, std::int64_t b,
                                      std::int64_t c) {
  return {IntPolynomial::constant(vars, a), IntPolynomial::constant(vars, b), IntPolynomial::constant(vars, c)};
}

inline SymbolicTriple cross(const SymbolicTriple& u, const SymbolicTriple& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline IntPolynomial dot(const SymbolicTriple& u, const SymbolicTriple& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

inline IntPolynomial det3(const SymbolicTriple& u, const SymbolicTriple& v, const SymbolicTriple& w) {
  return dot(u, cross(v, w));
}

/// Evaluates each entry at an assignment.
inline std::array<FieldElement, 3> evaluate(const SymbolicTriple& t, const std::vector<FieldElement>& values,
                                            const FieldSpec& field) {
  return {t[0].evaluate(values, field), t[1].evaluate(values, field), t[2].evaluate(values, field)};
}

}  // namespace triarr
