#pragma once

// Exhaustive search for s-line arrangements in PG(2,q) with the most triple
// points. Depth-first over line index combinations in plane enumeration
// order, pruned by an upper bound on what the remaining picks can add.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "triarr/bounds.hpp"
#include "triarr/error.hpp"
#include "triarr/field.hpp"
#include "triarr/incidence.hpp"
#include "triarr/projective.hpp"

namespace triarr {

struct SearchConfig {
  FieldSpec field;
  int s = 0;
  std::optional<int> target;  // stop as soon as reached
  TripleMetric metric = TripleMetric::ExactlyThree;
  // Fix x, y, z, x+y+z as the first four lines. Arrangements without four
  // lines in general position are near-pencils and are handled directly.
  bool normalize_frame = true;
  std::uint64_t max_nodes = 1'000'000'000;
  bool strict = false;  // throw BudgetExceeded instead of reporting
  int threads = 1;
  std::size_t witness_cap = 10;
  // Permutes the candidate order; best is unaffected on exhaustive runs.
  std::optional<std::uint64_t> shuffle_seed;
};

struct SearchReport {
  std::optional<int> best;  // nullopt iff no s-line arrangement exists
  std::vector<Arrangement> witnesses;
  std::uint64_t nodes_visited = 0;
  bool exhaustive = false;
  bool target_reached = false;
  bool frame_used = false;
  std::string note;
};

namespace detail {

class TripleSearch {
 public:
  explicit TripleSearch(const SearchConfig& cfg) : cfg_(cfg) {
    const FieldSpec& f = cfg.field;
    lines_ = enumerate_lines(f);
    const auto points = enumerate_points(f);
    on_line_.resize(lines_.size());
    for (std::size_t l = 0; l < lines_.size(); ++l)
      for (std::size_t p = 0; p < points.size(); ++p)
        if (incident(points[p], lines_[l])) on_line_[l].push_back(static_cast<int>(p));
    num_points_ = points.size();

    if (cfg.normalize_frame && cfg.s >= 4) {
      for (auto [a, b, c] : {std::array<int, 3>{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}})
        fixed_.push_back(static_cast<int>(plane_index(ProjLine::of(f, a, b, c))));
    }
    for (std::size_t l = 0; l < lines_.size(); ++l)
      if (std::find(fixed_.begin(), fixed_.end(), static_cast<int>(l)) == fixed_.end())
        free_.push_back(static_cast<int>(l));
    if (cfg.shuffle_seed) {
      std::mt19937_64 rng(*cfg.shuffle_seed);
      std::shuffle(free_.begin(), free_.end(), rng);
    }
  }

  bool frame_used() const { return !fixed_.empty(); }

  SearchReport run() {
    SearchReport rep;
    rep.frame_used = frame_used();
    const int threads = std::max(1, cfg_.threads);
    const int picks = cfg_.s - static_cast<int>(fixed_.size());

    // Branches are the choice of the first free line; merged in order.
    const int branches = picks == 0 ? 1 : static_cast<int>(free_.size()) - picks + 1;
    std::vector<Worker> results(std::max(branches, 0));
    std::atomic<int> next{0};
    auto work = [&] {
      for (int b; (b = next.fetch_add(1)) < branches;) {
        if (stop_.load()) break;
        Worker& w = results[b];
        w.init(*this);
        if (picks == 0) {
          w.dfs(0, 0);
        } else {
          w.push(free_[b]);
          w.dfs(b + 1, 1);
        }
      }
    };
    if (threads == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }

    int best = -1;
    for (const auto& w : results) {
      rep.nodes_visited += w.nodes;
      best = std::max(best, w.local_best);
    }
    rep.target_reached = cfg_.target && best >= *cfg_.target;
    rep.exhaustive = !budget_hit_.load() && !rep.target_reached;
    if (budget_hit_.load() && cfg_.strict)
      throw Error(ErrorCode::BudgetExceeded,
                  "search exceeded " + std::to_string(cfg_.max_nodes) + " nodes");
    if (best >= 0) rep.best = best;

    for (const auto& w : results) {
      if (w.local_best != best) continue;
      for (const auto& idx : w.witnesses) {
        if (rep.witnesses.size() >= cfg_.witness_cap) break;
        Arrangement a = make_arrangement(idx);
        const auto prof = profile(a);
        if (triple_count(prof.tvec, cfg_.metric) != best)
          throw std::logic_error("search witness fails re-verification");
        const auto abs = abstract(a, prof);
        const bool dup = std::any_of(rep.witnesses.begin(), rep.witnesses.end(),
                                     [&](const Arrangement& o) { return isomorphic(abstract(o), abs); });
        if (!dup) rep.witnesses.push_back(std::move(a));
      }
    }
    return rep;
  }

  Arrangement make_arrangement(std::vector<int> idx) const {
    std::sort(idx.begin(), idx.end());
    std::vector<ProjLine> ls;
    for (int i : idx) ls.push_back(lines_[i]);
    return Arrangement(cfg_.field, std::move(ls));
  }

 private:
  struct Worker {
    const TripleSearch* S = nullptr;
    std::vector<int> mult;
    std::vector<int> cnt;  // cnt[k] = points of multiplicity exactly k
    std::vector<int> chosen;
    std::int64_t heavy_pairs = 0;  // sum of C(k,2) over points with k >= 4
    int local_best = -1;
    std::vector<std::vector<int>> witnesses;
    std::uint64_t nodes = 0;

    void init(const TripleSearch& s) {
      S = &s;
      mult.assign(s.num_points_, 0);
      cnt.assign(std::max(s.cfg_.s + 2, 4), 0);
      cnt[0] = static_cast<int>(s.num_points_);
      for (int l : s.fixed_) push(l);
    }

    void push(int l) {
      for (int p : S->on_line_[l]) {
        const int k = mult[p]++;
        --cnt[k];
        ++cnt[k + 1];
        if (k + 1 >= 4) heavy_pairs += k;  // C(k+1,2) - C(k,2)
      }
      chosen.push_back(l);
    }

    void pop() {
      const int l = chosen.back();
      chosen.pop_back();
      for (int p : S->on_line_[l]) {
        const int k = mult[p]--;
        --cnt[k];
        ++cnt[k - 1];
        if (k >= 4) heavy_pairs -= k - 1;
      }
    }

    int current() const {
      if (S->cfg_.metric == TripleMetric::ExactlyThree) return cnt[3];
      int c = 0;
      for (std::size_t k = 3; k < cnt.size(); ++k) c += cnt[k];
      return c;
    }

    // Upper bound on the final count reachable by adding r more lines.
    std::int64_t optimism(int r) const {
      const std::int64_t s = S->cfg_.s;
      const std::int64_t m = static_cast<std::int64_t>(chosen.size());
      const std::int64_t rr = choose2(r);
      // New points by how many new lines pass through them: one (a current
      // double point), two (a current simple point) or three (fresh point).
      const std::int64_t budget = r * m / 2;
      const std::int64_t x = std::min<std::int64_t>(cnt[2], budget);
      const std::int64_t y = std::min(budget - x, rr);
      const std::int64_t z = (rr - y) / 3;
      std::int64_t bound = current() + x + y + z;
      if (S->cfg_.metric == TripleMetric::ExactlyThree) {
        bound = std::min(bound, schoenheim_u3(s));
        bound = std::min(bound, (choose2(s) - heavy_pairs) / 3);
      } else {
        bound = std::min(bound, naive_bound(s));
      }
      return bound;
    }

    // Extend with free lines at positions >= from; depth = picks so far.
    void dfs(std::size_t from, int depth) {
      if (S->stop_.load(std::memory_order_relaxed)) return;
      if (++nodes > S->cfg_.max_nodes / std::max(1, S->cfg_.threads)) {
        S->budget_hit_.store(true);
        S->stop_.store(true);
        return;
      }
      const int picks = S->cfg_.s - static_cast<int>(S->fixed_.size());
      const int r = picks - depth;
      if (r == 0) {
        record();
        return;
      }
      const int global = S->best_.load(std::memory_order_relaxed);
      if (optimism(r) < std::max(global, local_best)) return;
      for (std::size_t i = from; i + r <= S->free_.size(); ++i) {
        push(S->free_[i]);
        dfs(i + 1, depth + 1);
        pop();
        if (S->stop_.load(std::memory_order_relaxed)) return;
      }
    }

    void record() {
      const int c = current();
      if (c < local_best) return;
      if (c > local_best) {
        local_best = c;
        witnesses.clear();
        int g = S->best_.load();
        while (c > g && !S->best_.compare_exchange_weak(g, c)) {
        }
      }
      if (witnesses.size() < 4 * S->cfg_.witness_cap) witnesses.push_back(chosen);
      if (S->cfg_.target && c >= *S->cfg_.target) S->stop_.store(true);
    }
  };

  SearchConfig cfg_;
  std::vector<ProjLine> lines_;
  std::vector<std::vector<int>> on_line_;
  std::size_t num_points_ = 0;
  std::vector<int> fixed_;
  std::vector<int> free_;
  mutable std::atomic<int> best_{-1};
  mutable std::atomic<bool> stop_{false};
  mutable std::atomic<bool> budget_hit_{false};
};

}  // namespace detail

namespace detail {

// Best arrangement with all lines, or all but one, through (0:0:1).
inline std::optional<Arrangement> near_pencil(const SearchConfig& cfg) {
  const FieldSpec& f = cfg.field;
  const int q = static_cast<int>(f.order());
  std::vector<ProjLine> through;  // the q + 1 lines through (0:0:1)
  through.push_back(ProjLine::of(f, 0, 1, 0));
  for (std::uint32_t b = 0; b < f.order(); ++b) through.emplace_back(f.one(), f.from_code(b), f.zero());
  std::optional<Arrangement> best;
  int best_count = -1;
  for (int k : {cfg.s, cfg.s - 1}) {
    if (k < 1 || k > q + 1) continue;
    std::vector<ProjLine> ls(through.begin(), through.begin() + k);
    if (k < cfg.s) ls.push_back(ProjLine::of(f, 0, 0, 1));
    Arrangement a(f, std::move(ls));
    const int c = triple_count(profile(a).tvec, cfg.metric);
    if (c > best_count) {
      best_count = c;
      best = std::move(a);
    }
  }
  return best;
}

}  // namespace detail

inline SearchReport max_triple_search(const SearchConfig& cfg) {
  if (!cfg.field.valid()) throw Error(ErrorCode::InvalidArgument, "search needs a field");
  if (cfg.s < 1) throw Error(ErrorCode::InvalidArgument, "search needs s >= 1");
  const std::uint64_t q = cfg.field.order();
  if (q > 64) throw Error(ErrorCode::FieldTooLarge, "search is limited to q <= 64");
  const std::uint64_t plane = q * q + q + 1;
  const std::string evidence =
      "per-field evidence for GF(" + cfg.field.notation() + ") only, not a statement over all fields";
  if (static_cast<std::uint64_t>(cfg.s) > plane) {
    SearchReport rep;
    rep.exhaustive = true;
    rep.note = "PG(2," + std::to_string(q) + ") has only " + std::to_string(plane) + " lines, so no " +
               std::to_string(cfg.s) + "-line arrangement exists; " + evidence;
    return rep;
  }
  detail::TripleSearch search(cfg);
  SearchReport rep = search.run();
  rep.note = evidence;
  if (rep.frame_used) {
    // The frame misses exactly the arrangements without 4 lines in general
    // position, i.e. (near-)pencils; their best is added here.
    if (auto np = detail::near_pencil(cfg); np && (!rep.best || triple_count(profile(*np).tvec, cfg.metric) > *rep.best)) {
      rep.best = triple_count(profile(*np).tvec, cfg.metric);
      rep.witnesses = {*np};
      rep.target_reached = cfg.target && *rep.best >= *cfg.target;
    }
    rep.note += "; frame x, y, z, x+y+z fixed, near-pencils checked separately";
  }
  if (!rep.exhaustive && !rep.target_reached) rep.note += "; node budget exhausted, best is a lower bound";
  return rep;
}

/// Lines dual to the intersection points of multiplicity >= min_multiplicity.
inline Arrangement dual_search_seed(const Arrangement& a, int min_multiplicity = 3) {
  const auto prof = profile(a);
  std::vector<ProjLine> ls;
  for (const auto& ip : prof.points)
    if (ip.multiplicity() >= min_multiplicity) ls.push_back(dual(ip.point));
  if (ls.empty())
    throw Error(ErrorCode::EmptyArrangement,
                "no intersection point of multiplicity >= " + std::to_string(min_multiplicity));
  return Arrangement(a.field(), std::move(ls));
}

/// Points dual to the lines; an involution together with dual(ProjPoint).
inline std::vector<ProjPoint> dual_points(const Arrangement& a) {
  std::vector<ProjPoint> out;
  for (const auto& l : a.lines()) out.push_back(dual(l));
  return out;
}

}  // namespace triarr
