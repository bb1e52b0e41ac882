#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bottkit/bott.hpp"
#include "bottkit/bundles.hpp"
#include "bottkit/error.hpp"
#include "bottkit/grassmannian.hpp"
#include "bottkit/parallel.hpp"
#include "bottkit/partitions.hpp"

namespace bottkit {

// (i, j) stands for the hypothesis H^j_*(F (x) Sym^i Q) = 0.
struct ConditionPoint {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const ConditionPoint&, const ConditionPoint&) = default;
};

struct ConditionSet {
  std::string name;
  std::set<ConditionPoint> points;

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }
  bool contains(const ConditionPoint& p) const { return points.count(p) != 0; }

  bool subset_of(const ConditionSet& o) const {
    return std::includes(o.points.begin(), o.points.end(), points.begin(), points.end());
  }

  friend bool operator==(const ConditionSet& a, const ConditionSet& b) { return a.points == b.points; }
};

inline ConditionSet set_union(std::string name, const std::vector<ConditionSet>& sets) {
  ConditionSet out{std::move(name), {}};
  for (const auto& s : sets) out.points.insert(s.points.begin(), s.points.end());
  return out;
}

namespace detail {

// {(p, a + step*p) : p = p0..p1}; empty when p1 < p0.
inline ConditionSet diagonal(std::string name, int p0, int p1, int a, int step) {
  ConditionSet s{std::move(name), {}};
  for (int p = p0; p <= p1; ++p) s.points.insert({p, a + step * p});
  return s;
}

inline void require_lines_n(int n) {
  if (n < 2) throw DomainError("condition sets need n >= 2");
}

}  // namespace detail

enum class Segment { A, B, C, D };

// Segments of the main theorem. B_0 has its own definition (the diagonal
// (1,1)..(n-2,n-2)) and is not the k = 0 case of the B_k formula.
inline ConditionSet segment(Segment which, int k, int n) {
  detail::require_lines_n(n);
  const char letter = "ABCD"[static_cast<int>(which)];
  const std::string name = std::string(1, letter) + "_" + std::to_string(k);
  if (k >= n - 1) throw DomainError(name + ": segments make no sense for k >= n-1");
  const bool zero_ok = which == Segment::A || which == Segment::B;
  if (k < (zero_ok ? 0 : 1)) throw DomainError(name + ": index out of range");
  switch (which) {
    case Segment::A:
      return detail::diagonal(name, 0, n - k - 3, 2 * n - k - 3, -1);
    case Segment::B:
      if (k == 0) return detail::diagonal(name, 1, n - 2, 0, 1);
      return detail::diagonal(name, 0, n - k - 3, k + 1, 1);
    case Segment::C:
      return detail::diagonal(name, 0, k - 1, 2 * n - k - 2, 1);
    case Segment::D:
      return detail::diagonal(name, 0, k - 1, k, -1);
  }
  throw DomainError("unknown segment");
}

// L_0..L_{n-2} followed by R_0..R_{n-2}.
inline std::vector<ConditionSet> ottaviani_sets(int n) {
  detail::require_lines_n(n);
  std::vector<ConditionSet> out;
  out.push_back(detail::diagonal("L_0", 0, n - 2, 2 * n - 3, -1));
  for (int k = 1; k <= n - 2; ++k)
    out.push_back(detail::diagonal("L_" + std::to_string(k), 0, n - k - 1, 2 * n - 3 - k, -1));
  out.push_back(detail::diagonal("R_0", 1, n - 2, 0, 1));
  for (int k = 1; k <= n - 2; ++k) out.push_back(detail::diagonal("R_" + std::to_string(k), 0, n - k - 2, k, 1));
  return out;
}

// Same hypotheses written as inequalities: i <= j < 2n-2-i, j > 0, 0 <= i <= n-2.
inline ConditionSet ottaviani_inequality_set(int n) {
  detail::require_lines_n(n);
  ConditionSet s{"ottaviani", {}};
  for (int i = 0; i <= n - 2; ++i)
    for (int j = std::max(i, 1); j < 2 * n - 2 - i; ++j) s.points.insert({i, j});
  return s;
}

// M_0, M', M_1..M_m, N_0, N_1..N_m with m = floor((n-1)/2).
inline std::vector<ConditionSet> beilinson_sets(int n) {
  detail::require_lines_n(n);
  const int m = (n - 1) / 2;
  std::vector<ConditionSet> out;
  out.push_back(detail::diagonal("M_0", 0, n - 3, 2 * n - 3, -1));
  out.push_back(detail::diagonal("M'", 0, n - 2, 2 * n - 4, -1));
  for (int k = 1; k <= m; ++k)
    out.push_back(detail::diagonal("M_" + std::to_string(k), 0, n - 1 - 2 * k, 2 * n - 3 - 2 * k, -1));
  out.push_back(detail::diagonal("N_0", 2, n - 2, -1, 1));
  for (int k = 1; k <= m; ++k)
    out.push_back(detail::diagonal("N_" + std::to_string(k), 0, n - 1 - 2 * k, 2 * k - 1, 1));
  return out;
}

// A_0 u B_0 u {(n-2, n-1)}: the Arrondo-Malaspina criterion.
inline ConditionSet am_set(int n) {
  auto s = set_union("am", {segment(Segment::A, 0, n), segment(Segment::B, 0, n)});
  s.points.insert({n - 2, n - 1});
  return s;
}

inline ConditionSet main_hypotheses(int n, int k) {
  detail::require_lines_n(n);
  if (k < 0 || k > n - 2) throw DomainError("main hypotheses need 0 <= k <= n-2");
  std::vector<ConditionSet> parts;
  for (int l = 0; l <= k; ++l) {
    parts.push_back(segment(Segment::A, l, n));
    parts.push_back(segment(Segment::B, l, n));
  }
  for (int l = 1; l <= k; ++l) {
    parts.push_back(segment(Segment::C, l, n));
    parts.push_back(segment(Segment::D, l, n));
  }
  auto s = set_union("main_" + std::to_string(k), parts);
  s.points.insert({n - k - 2, n - 1});
  return s;
}

// Figure-ready decomposition of main_hypotheses(n, k): the individual
// segments plus the extra point as its own set.
inline std::vector<ConditionSet> main_hypotheses_parts(int n, int k) {
  std::vector<ConditionSet> parts;
  for (int l = 0; l <= k; ++l) {
    parts.push_back(segment(Segment::A, l, n));
    parts.push_back(segment(Segment::B, l, n));
  }
  for (int l = 1; l <= k; ++l) {
    parts.push_back(segment(Segment::C, l, n));
    parts.push_back(segment(Segment::D, l, n));
  }
  parts.push_back(ConditionSet{"P", {{n - k - 2, n - 1}}});
  return parts;
}

// ---- evaluation --------------------------------------------------------------

struct Violation {
  int i = 0;
  int j = 0;
  int t = 0;  // smallest twist with H^j(F (x) Sym^i Q (t)) != 0
  BigInt dim = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ViolationReport {
  std::string criterion;
  int n = 0;
  int k = 0;
  std::vector<Violation> violations;  // sorted by (i, j)

  bool clean() const { return violations.empty(); }
  std::set<ConditionPoint> points() const {
    std::set<ConditionPoint> out;
    for (const auto& v : violations) out.insert({v.i, v.j});
    return out;
  }
};

inline ViolationReport evaluate(const BundleExpr& F, const ConditionSet& conds, int k_level = 0) {
  const auto& ctx = F.ctx();
  if (ctx.k() != 1) throw DomainError("criteria are stated on Grassmannians of lines; got " + ctx.name());
  const std::vector<ConditionPoint> pts(conds.points.begin(), conds.points.end());
  for (const auto& p : pts)
    if (p.i < 0 || p.j < 0 || p.j > ctx.variety_dim())
      throw DomainError("condition point (" + std::to_string(p.i) + "," + std::to_string(p.j) + ") out of range");

  std::vector<std::optional<Violation>> found(pts.size());
  parallel_for(pts.size(), [&](std::size_t idx) {
    const auto& p = pts[idx];
    const BundleExpr G = tensor(F, sym_Q(ctx, p.i));
    if (hj_star_vanishes(G, p.j)) return;
    const auto w = hj_witness(G, p.j);
    found[idx] = Violation{p.i, p.j, w ? w->first : 0, w ? w->second : BigInt(0)};
  });

  ViolationReport r{conds.name, ctx.n(), k_level, {}};
  for (auto& v : found)
    if (v) r.violations.push_back(std::move(*v));
  return r;
}

// Forward direction of the main theorem on an explicit sum.
inline bool theorem_forward_check(int n, int k, const BundleExpr& F) {
  if (F.ctx() != GrassmannianCtx(1, n)) throw DomainError("theorem_forward_check needs F on G(1," + std::to_string(n) + ")");
  return evaluate(F, main_hypotheses(n, k), k).clean();
}

inline nlohmann::ordered_json to_json(const ViolationReport& r) {
  nlohmann::ordered_json j;
  j["criterion"] = r.criterion;
  j["n"] = r.n;
  j["k"] = r.k;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) {
    nlohmann::ordered_json o;
    o["i"] = v.i;
    o["j"] = v.j;
    o["t"] = v.t;
    o["dim"] = v.dim.str();
    arr.push_back(std::move(o));
  }
  j["violations"] = std::move(arr);
  return j;
}

// ---- ACM scans -------------------------------------------------------------

enum class AcmFamily { Symmetric, Schur };

struct AcmEntry {
  Partition lam;
  BundleExpr bundle;
  std::string label;
};

namespace detail {

inline void partitions_in_box(int rows, int width, std::vector<int>& cur, std::vector<Partition>& out) {
  if (static_cast<int>(cur.size()) == rows) {
    out.emplace_back(cur);
    return;
  }
  const int cap = cur.empty() ? width : cur.back();
  for (int v = cap; v >= 0; --v) {
    cur.push_back(v);
    partitions_in_box(rows, width, cur, out);
    cur.pop_back();
  }
}

// Between a Schur functor and its complement-dual partner, prefer fewer
// boxes, then the lexicographically smaller partition.
inline bool preferred(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace detail

// Sym^i Q for i = 1..bound, or S_lam Q for nonzero lam with at most k rows
// above a zero last row and lam_1 <= bound. O is left out. Schur results are
// listed once per pair {S_lam Q, S_lam Q^dual(lam_1)}, which share the ACM
// property.
inline std::vector<AcmEntry> acm_scan(const GrassmannianCtx& ctx, AcmFamily family, int bound) {
  if (bound < 1) throw DomainError("acm scan bound must be positive");
  std::vector<Partition> cands;
  if (family == AcmFamily::Symmetric) {
    for (int i = 1; i <= bound; ++i) cands.emplace_back(std::vector<int>{i});
  } else {
    std::vector<int> cur;
    std::vector<Partition> all;
    detail::partitions_in_box(ctx.k(), bound, cur, all);
    for (auto& p : all)
      if (!p.empty()) cands.push_back(std::move(p));
    std::sort(cands.begin(), cands.end(), detail::preferred);
  }

  std::vector<char> acm(cands.size(), 0);
  parallel_for(cands.size(), [&](std::size_t idx) { acm[idx] = is_acm(schur_Q(ctx, cands[idx])) ? 1 : 0; });

  std::vector<AcmEntry> out;
  std::set<Partition> seen;
  for (std::size_t idx = 0; idx < cands.size(); ++idx) {
    if (!acm[idx]) continue;
    const auto& p = cands[idx];
    if (family == AcmFamily::Schur) {
      Partition partner = complement(p, ctx.rank_q(), p[0]);
      if (seen.count(p) || seen.count(partner)) continue;
      seen.insert(p);
      seen.insert(partner);
    }
    auto e = schur_Q(ctx, p);
    out.push_back(AcmEntry{p, e, to_string(e)});
  }
  return out;
}

}  // namespace bottkit
