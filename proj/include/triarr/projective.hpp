#pragma once

// Points and lines of PG(2, F). Both are homogeneous triples normalized so
// that the first nonzero entry is 1; a line [a,b,c] is the zero set of
// ax + by + cz.

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "triarr/error.hpp"
#include "triarr/field.hpp"

namespace triarr {

namespace detail {

inline std::array<FieldElement, 3> normalized(std::array<FieldElement, 3> v) {
  const FieldSpec& f = v[0].field();
  if (!(f == v[1].field()) || !(f == v[2].field()))
    throw Error(ErrorCode::FieldMismatch, "homogeneous coordinates from different fields");
  for (int i = 0; i < 3; ++i) {
    if (!v[i].is_zero()) {
      const FieldElement scale = v[i].inv();
      for (auto& c : v) c = c * scale;
      return v;
    }
  }
  throw Error(ErrorCode::InvalidCoordinates, "all homogeneous coordinates are zero");
}

template <class Tag>
class Homogeneous {
 public:
  Homogeneous() = default;
  Homogeneous(const FieldElement& a, const FieldElement& b, const FieldElement& c)
      : v_(normalized({a, b, c})) {}
  explicit Homogeneous(const std::array<FieldElement, 3>& v) : v_(normalized(v)) {}

  /// From integer coordinates mapped into the field.
  static Homogeneous of(const FieldSpec& f, std::int64_t a, std::int64_t b, std::int64_t c) {
    return Homogeneous(f.element(a), f.element(b), f.element(c));
  }

  const FieldSpec& field() const { return v_[0].field(); }
  const FieldElement& operator[](int i) const { return v_[i]; }
  const std::array<FieldElement, 3>& coords() const { return v_; }

  friend bool operator==(const Homogeneous&, const Homogeneous&) = default;
  friend std::strong_ordering operator<=>(const Homogeneous& a, const Homogeneous& b) {
    for (int i = 0; i < 3; ++i)
      if (auto c = a.v_[i].code() <=> b.v_[i].code(); c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  std::array<FieldElement, 3> v_;
};

struct PointTag {};
struct LineTag {};

}  // namespace detail

using ProjPoint = detail::Homogeneous<detail::PointTag>;
using ProjLine = detail::Homogeneous<detail::LineTag>;

inline std::string to_string(const ProjPoint& p) {
  return "(" + p[0].to_string() + ":" + p[1].to_string() + ":" + p[2].to_string() + ")";
}

inline std::string to_string(const ProjLine& l) {
  return "[" + l[0].to_string() + "," + l[1].to_string() + "," + l[2].to_string() + "]";
}

namespace detail {

inline FieldElement dot(const std::array<FieldElement, 3>& u, const std::array<FieldElement, 3>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

inline std::array<FieldElement, 3> cross(const std::array<FieldElement, 3>& u,
                                         const std::array<FieldElement, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline FieldElement det(const std::array<FieldElement, 3>& u, const std::array<FieldElement, 3>& v,
                        const std::array<FieldElement, 3>& w) {
  return dot(u, cross(v, w));
}

}  // namespace detail

inline bool incident(const ProjPoint& p, const ProjLine& l) {
  return detail::dot(p.coords(), l.coords()).is_zero();
}

/// The line through two distinct points.
inline ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw Error(ErrorCode::IdenticalArguments, "join of a point with itself: " + to_string(p));
  return ProjLine(detail::cross(p.coords(), q.coords()));
}

/// The common point of two distinct lines.
inline ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  if (l == m) throw Error(ErrorCode::IdenticalArguments, "meet of a line with itself: " + to_string(l));
  return ProjPoint(detail::cross(l.coords(), m.coords()));
}

inline bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return detail::det(p.coords(), q.coords(), r.coords()).is_zero();
}

inline bool concurrent(const ProjLine& l, const ProjLine& m, const ProjLine& n) {
  return detail::det(l.coords(), m.coords(), n.coords()).is_zero();
}

/// Point with the same coordinates as a line, and vice versa.
inline ProjPoint dual(const ProjLine& l) { return ProjPoint(l.coords()); }
inline ProjLine dual(const ProjPoint& p) { return ProjLine(p.coords()); }

namespace detail {

template <class T>
std::vector<T> enumerate_plane(const FieldSpec& f) {
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(f.order()) * f.order() + f.order() + 1);
  const auto zero = f.zero(), one = f.one();
  out.emplace_back(zero, zero, one);
  for (std::uint32_t c = 0; c < f.order(); ++c) out.emplace_back(zero, one, f.from_code(c));
  for (std::uint32_t b = 0; b < f.order(); ++b)
    for (std::uint32_t c = 0; c < f.order(); ++c) out.emplace_back(one, f.from_code(b), f.from_code(c));
  return out;
}

}  // namespace detail

/// All q^2 + q + 1 points in lexicographic order of normalized coordinates.
inline std::vector<ProjPoint> enumerate_points(const FieldSpec& f) {
  return detail::enumerate_plane<ProjPoint>(f);
}

/// All q^2 + q + 1 lines, same order as enumerate_points.
inline std::vector<ProjLine> enumerate_lines(const FieldSpec& f) {
  return detail::enumerate_plane<ProjLine>(f);
}

/// Index of a normalized point or line in the enumeration order above.
template <class T>
std::size_t plane_index(const T& x) {
  const std::size_t q = x.field().order();
  if (!x[0].is_zero()) return 1 + q + x[1].code() * q + x[2].code();
  if (!x[1].is_zero()) return 1 + x[2].code();
  return 0;
}

}  // namespace triarr
