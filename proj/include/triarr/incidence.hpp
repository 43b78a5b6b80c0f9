#pragma once

// Line arrangements, their intersection profiles (t-vectors), incidence
// tables, and field-free incidence structures with an isomorphism test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "triarr/error.hpp"
#include "triarr/field.hpp"
#include "triarr/projective.hpp"

namespace triarr {

/// t_k keyed by multiplicity k >= 2. Zero entries are not stored.
using TVector = std::map<int, int>;

inline std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

enum class TripleMetric { ExactlyThree, AtLeastThree };

inline std::string to_string(TripleMetric m) {
  return m == TripleMetric::ExactlyThree ? "exactly-3" : "at-least-3";
}

/// t_3, or t_3 + t_4 + ... for the at-least-3 metric.
inline int triple_count(const TVector& tvec, TripleMetric metric) {
  int count = 0;
  for (const auto& [k, t] : tvec)
    if (k == 3 || (metric == TripleMetric::AtLeastThree && k > 3)) count += t;
  return count;
}

inline std::string to_string(const TVector& tvec) {
  std::string out;
  for (auto it = tvec.rbegin(); it != tvec.rend(); ++it) {
    if (!out.empty()) out += ", ";
    out += "t" + std::to_string(it->first) + "=" + std::to_string(it->second);
  }
  return out.empty() ? "(none)" : out;
}

/// True iff sum_k t_k C(k,2) = C(s,2).
inline bool check_identity(int s, const TVector& tvec) {
  std::int64_t pairs = 0;
  for (const auto& [k, t] : tvec) pairs += t * choose2(k);
  return pairs == choose2(s);
}

class Arrangement {
 public:
  Arrangement(FieldSpec field, std::vector<ProjLine> lines, std::vector<std::string> labels = {})
      : field_(std::move(field)), lines_(std::move(lines)), labels_(std::move(labels)) {
    if (lines_.empty()) throw Error(ErrorCode::EmptyArrangement, "an arrangement needs at least one line");
    if (!labels_.empty() && labels_.size() != lines_.size())
      throw Error(ErrorCode::InvalidArgument, "label count differs from line count");
    std::set<ProjLine> seen;
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      if (!(lines_[i].field() == field_))
        throw Error(ErrorCode::FieldMismatch, "line " + label(i) + " is not over GF(" + field_.notation() + ")");
      if (!seen.insert(lines_[i]).second)
        throw Error(ErrorCode::DuplicateLines, "line " + label(i) + " = " + to_string(lines_[i]) + " repeats");
    }
  }

  const FieldSpec& field() const { return field_; }
  const std::vector<ProjLine>& lines() const { return lines_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return lines_.size(); }
  bool has_labels() const { return !labels_.empty(); }

  /// The given label, or "L_{i+1}" for unlabeled arrangements.
  std::string label(std::size_t i) const {
    return labels_.empty() ? "L_" + std::to_string(i + 1) : labels_[i];
  }

  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < lines_.size(); ++i)
      if (this->label(i) == label) return i;
    throw Error(ErrorCode::UnknownLabel, "no line labeled '" + label + "'");
  }

 private:
  FieldSpec field_;
  std::vector<ProjLine> lines_;
  std::vector<std::string> labels_;
};

struct IntersectionPoint {
  ProjPoint point;
  std::vector<int> lines;  // ascending arrangement indices
  int multiplicity() const { return static_cast<int>(lines.size()); }
};

struct IntersectionProfile {
  int s = 0;
  std::vector<IntersectionPoint> points;  // ascending by point
  TVector tvec;

  /// Multiplicity of p, 0 or 1 when p is not an intersection point.
  const IntersectionPoint* find(const ProjPoint& p) const {
    auto it = std::lower_bound(points.begin(), points.end(), p,
                               [](const IntersectionPoint& a, const ProjPoint& b) { return a.point < b; });
    return (it != points.end() && it->point == p) ? &*it : nullptr;
  }
};

inline IntersectionProfile profile(const Arrangement& a) {
  std::map<ProjPoint, std::set<int>> groups;
  const auto& lines = a.lines();
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto& g = groups[meet(lines[i], lines[j])];
      g.insert(static_cast<int>(i));
      g.insert(static_cast<int>(j));
    }
  IntersectionProfile out;
  out.s = static_cast<int>(lines.size());
  for (auto& [pt, ls] : groups) {
    out.points.push_back({pt, std::vector<int>(ls.begin(), ls.end())});
    ++out.tvec[static_cast<int>(ls.size())];
  }
  if (!check_identity(out.s, out.tvec))
    throw std::logic_error("pair-count identity violated for a computed profile");
  return out;
}

struct LineParity {
  int line = 0;
  std::vector<int> multiplicities;  // of the intersection points on the line
  int excess_sum = 0;                // sum of (m_i - 1)
  bool holds = false;                // excess_sum == s - 1
  bool only_triple_points = false;
};

struct ParityReport {
  int s = 0;
  std::vector<LineParity> lines;
  bool all_hold = true;
  /// A line carrying only triple points forces s odd; false if that fails.
  bool parity_consistent = true;
  bool any_only_triple = false;
};

/// Per line: s - 1 equals the sum over its intersection points of (m - 1).
inline ParityReport parity_check(const Arrangement& a, const IntersectionProfile& prof) {
  ParityReport r;
  r.s = static_cast<int>(a.size());
  r.lines.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.lines[i].line = static_cast<int>(i);
  for (const auto& ip : prof.points)
    for (int l : ip.lines) r.lines[l].multiplicities.push_back(ip.multiplicity());
  for (auto& lp : r.lines) {
    for (int m : lp.multiplicities) lp.excess_sum += m - 1;
    lp.holds = lp.excess_sum == r.s - 1;
    lp.only_triple_points = !lp.multiplicities.empty() &&
                            std::all_of(lp.multiplicities.begin(), lp.multiplicities.end(),
                                        [](int m) { return m == 3; });
    r.all_hold = r.all_hold && lp.holds;
    r.any_only_triple = r.any_only_triple || lp.only_triple_points;
  }
  r.parity_consistent = !r.any_only_triple || r.s % 2 == 1;
  return r;
}

inline ParityReport parity_check(const Arrangement& a) { return parity_check(a, profile(a)); }

struct IncidenceTable {
  std::vector<std::string> rows;     // line labels
  std::vector<std::string> columns;  // point labels
  std::vector<std::vector<bool>> cells;

  bool cell(const std::string& row, const std::string& column) const {
    return cells[index(rows, row)][index(columns, column)];
  }

  int column_sum(std::size_t c) const {
    int n = 0;
    for (const auto& r : cells) n += r[c] ? 1 : 0;
    return n;
  }

  /// Header row of point labels; "+" marks incidence, blank otherwise.
  std::string to_csv() const {
    std::string out;
    for (const auto& c : columns) out += "," + c;
    out += "\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      out += rows[r];
      for (bool b : cells[r]) out += b ? ",+" : ",";
      out += "\n";
    }
    return out;
  }

 private:
  static std::size_t index(const std::vector<std::string>& labels, const std::string& label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw Error(ErrorCode::UnknownLabel, "no table entry labeled '" + label + "'");
    return static_cast<std::size_t>(it - labels.begin());
  }
};

using LabeledPoint = std::pair<std::string, ProjPoint>;

/// Table over caller-specified point columns.
inline IncidenceTable table(const Arrangement& a, const std::vector<LabeledPoint>& columns) {
  IncidenceTable t;
  for (std::size_t i = 0; i < a.size(); ++i) t.rows.push_back(a.label(i));
  for (const auto& [label, pt] : columns) t.columns.push_back(label);
  for (const auto& line : a.lines()) {
    std::vector<bool> row;
    for (const auto& [label, pt] : columns) row.push_back(incident(pt, line));
    t.cells.push_back(std::move(row));
  }
  return t;
}

/// Table over every intersection point of multiplicity >= min_multiplicity,
/// in point order, labeled by coordinates.
inline IncidenceTable table(const Arrangement& a, const IntersectionProfile& prof, int min_multiplicity = 2) {
  std::vector<LabeledPoint> columns;
  for (const auto& ip : prof.points)
    if (ip.multiplicity() >= min_multiplicity) columns.emplace_back(to_string(ip.point), ip.point);
  return table(a, columns);
}

inline Arrangement remove_line(const Arrangement& a, std::size_t index) {
  if (index >= a.size())
    throw Error(ErrorCode::IndexOutOfRange, "line index " + std::to_string(index) + " out of range");
  if (a.size() == 1) throw Error(ErrorCode::EmptyArrangement, "removing the only line");
  auto lines = a.lines();
  auto labels = a.labels();
  lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(index));
  if (!labels.empty()) labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(index));
  return Arrangement(a.field(), std::move(lines), std::move(labels));
}

/// Field-free incidence structure: lines 0..num_lines-1 and the blocks of
/// lines through each intersection point of multiplicity >= 2.
struct AbstractIncidence {
  int num_lines = 0;
  std::vector<std::vector<int>> blocks;

  TVector tvec() const {
    TVector t;
    for (const auto& b : blocks) ++t[static_cast<int>(b.size())];
    return t;
  }

  /// Any two lines share at most one block.
  bool is_partial_linear_space() const {
    std::set<std::pair<int, int>> pairs;
    for (const auto& b : blocks)
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
          if (!pairs.insert({std::min(b[i], b[j]), std::max(b[i], b[j])}).second) return false;
    return true;
  }
};

inline AbstractIncidence abstract(const Arrangement& a, const IntersectionProfile& prof) {
  AbstractIncidence out;
  out.num_lines = static_cast<int>(a.size());
  for (const auto& ip : prof.points)
    if (ip.multiplicity() >= 2) out.blocks.push_back(ip.lines);
  return out;
}

inline AbstractIncidence abstract(const Arrangement& a) { return abstract(a, profile(a)); }

namespace detail {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const AbstractIncidence& x, const AbstractIncidence& y)
      : x_(x), y_(y), n_(x.num_lines),
        pair_x_(pair_blocks(x)), pair_y_(pair_blocks(y)),
        sig_x_(signatures(x)), sig_y_(signatures(y)) {}

  std::optional<std::vector<int>> run() {
    if (x_.num_lines != y_.num_lines || x_.blocks.size() != y_.blocks.size()) return std::nullopt;
    if (x_.tvec() != y_.tvec()) return std::nullopt;
    auto sx = sig_x_, sy = sig_y_;
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx != sy) return std::nullopt;

    map_.assign(n_, -1);
    used_.assign(n_, false);
    block_map_.assign(x_.blocks.size(), -1);
    block_rmap_.assign(y_.blocks.size(), -1);
    order_ = assignment_order();
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static std::vector<std::vector<int>> pair_blocks(const AbstractIncidence& a) {
    std::vector<std::vector<int>> m(a.num_lines, std::vector<int>(a.num_lines, -1));
    for (std::size_t b = 0; b < a.blocks.size(); ++b)
      for (int i : a.blocks[b])
        for (int j : a.blocks[b])
          if (i != j) m[i][j] = static_cast<int>(b);
    return m;
  }

  static std::vector<std::vector<int>> signatures(const AbstractIncidence& a) {
    std::vector<std::vector<int>> sig(a.num_lines);
    for (const auto& b : a.blocks)
      for (int i : b) sig[i].push_back(static_cast<int>(b.size()));
    for (auto& s : sig) std::sort(s.begin(), s.end());
    return sig;
  }

  // Breadth-first over shared blocks so each new line is constrained by
  // already-mapped neighbours.
  std::vector<int> assignment_order() const {
    std::vector<int> order;
    std::vector<bool> placed(n_, false);
    for (int start = 0; start < n_; ++start) {
      if (placed[start]) continue;
      placed[start] = true;
      order.push_back(start);
      for (std::size_t h = order.size() - 1; h < order.size(); ++h)
        for (int j = 0; j < n_; ++j)
          if (!placed[j] && pair_x_[order[h]][j] >= 0) {
            placed[j] = true;
            order.push_back(j);
          }
    }
    return order;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int i = order_[depth];
    for (int j = 0; j < n_; ++j) {
      if (used_[j] || sig_x_[i] != sig_y_[j]) continue;
      std::vector<int> touched;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int ip = order_[d], jp = map_[ip];
        const int bx = pair_x_[i][ip], by = pair_y_[j][jp];
        if ((bx < 0) != (by < 0)) {
          ok = false;
        } else if (bx >= 0) {
          if (x_.blocks[bx].size() != y_.blocks[by].size()) {
            ok = false;
          } else if (block_map_[bx] < 0 && block_rmap_[by] < 0) {
            block_map_[bx] = by;
            block_rmap_[by] = bx;
            touched.push_back(bx);
          } else if (block_map_[bx] != by || block_rmap_[by] != bx) {
            ok = false;
          }
        }
      }
      if (ok) {
        map_[i] = j;
        used_[j] = true;
        if (extend(depth + 1)) return true;
        map_[i] = -1;
        used_[j] = false;
      }
      for (int bx : touched) {
        block_rmap_[block_map_[bx]] = -1;
        block_map_[bx] = -1;
      }
    }
    return false;
  }

  const AbstractIncidence& x_;
  const AbstractIncidence& y_;
  int n_;
  std::vector<std::vector<int>> pair_x_, pair_y_;
  std::vector<std::vector<int>> sig_x_, sig_y_;
  std::vector<int> order_, map_, block_map_, block_rmap_;
  std::vector<bool> used_;
};

}  // namespace detail

/// A line relabeling carrying the blocks of x onto the blocks of y, if any.
inline std::optional<std::vector<int>> find_isomorphism(const AbstractIncidence& x, const AbstractIncidence& y) {
  return detail::IsomorphismSearch(x, y).run();
}

inline bool isomorphic(const AbstractIncidence& x, const AbstractIncidence& y) {
  return find_isomorphism(x, y).has_value();
}

}  // namespace triarr
