#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bottkit/bundles.hpp"
#include "bottkit/error.hpp"
#include "bottkit/grassmannian.hpp"
#include "bottkit/parallel.hpp"
#include "bottkit/partitions.hpp"

namespace bottkit {

// Result of Bott's algorithm for one irreducible term: either total
// vanishing, or a single degree carrying S_rep K^{n+1}.
struct CohomologyClass {
  bool zero = true;
  int degree = 0;
  Weight rep;
  BigInt dimension = 0;

  static CohomologyClass vanishing() { return {}; }

  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;
};

namespace detail {

inline void check_bott_input(const GrassmannianCtx& ctx, const Weight& lam, const Weight& mu) {
  if (lam.size() != static_cast<std::size_t>(ctx.rank_q()) || mu.size() != static_cast<std::size_t>(ctx.rank_s()))
    throw DomainError("bott: weight lengths must be (k+1, n-k) = (" + std::to_string(ctx.rank_q()) + ", " +
                      std::to_string(ctx.rank_s()) + ")");
  if (!lam.dominant()) throw DomainError("bott: Q-weight " + to_string(lam) + " is not weakly decreasing");
  if (!mu.dominant()) throw DomainError("bott: S-weight " + to_string(mu) + " is not weakly decreasing");
}

// The swap iteration on nu = (lam, mu). Returns the degree and leaves the
// dominant weight in `nu`, or nullopt on vanishing.
inline std::optional<int> bott_iterate(std::vector<int>& nu, int variety_dim) {
  int j = 0;
  for (;;) {
    std::size_t l = 0;
    while (l + 1 < nu.size() && nu[l] >= nu[l + 1]) ++l;
    if (l + 1 >= nu.size()) break;  // dominant
    const int gap = nu[l + 1] - nu[l];
    if (gap == 1) return std::nullopt;
    const int a = nu[l];
    nu[l] = nu[l + 1] - 1;
    nu[l + 1] = a + 1;
    ++j;
  }
  if (j > variety_dim) throw std::logic_error("bott: degree exceeds the dimension of the Grassmannian");
  return j;
}

}  // namespace detail

// Cohomology of S_lam Q (x) S_mu S^dual on G(k,n).
inline CohomologyClass bott(const GrassmannianCtx& ctx, const Weight& lam, const Weight& mu) {
  detail::check_bott_input(ctx, lam, mu);
  std::vector<int> nu = lam.concat(mu).entries();
  const auto degree = detail::bott_iterate(nu, ctx.variety_dim());
  if (!degree) return CohomologyClass::vanishing();
  Weight rep(std::move(nu));
  BigInt dim = weyl_dimension(rep);
  return CohomologyClass{false, *degree, std::move(rep), std::move(dim)};
}

// Degree only; skips the dimension.
inline std::optional<int> bott_degree(const GrassmannianCtx& ctx, const Weight& lam, const Weight& mu) {
  detail::check_bott_input(ctx, lam, mu);
  std::vector<int> nu = lam.concat(mu).entries();
  return detail::bott_iterate(nu, ctx.variety_dim());
}

struct TwistWindow {
  int lo = 0;
  int hi = 0;

  bool contains(const TwistWindow& o) const { return lo <= o.lo && o.hi <= hi; }
  TwistWindow hull(const TwistWindow& o) const { return {std::min(lo, o.lo), std::max(hi, o.hi)}; }
  TwistWindow widened(int by) const { return {lo - by, hi + by}; }

  friend bool operator==(const TwistWindow&, const TwistWindow&) = default;
};

// [-s-n-1, s+n+1] with s the spread of the concatenated weight. Past the top
// the twisted weight is dominant (degree 0 only); past the bottom the Serre
// dual is, so only the top degree survives.
inline TwistWindow auto_window(const GrassmannianCtx& ctx, const BundleTerm& term) {
  const Weight nu = term.concat();
  const auto& e = nu.entries();
  const auto [mn, mx] = std::minmax_element(e.begin(), e.end());
  const int s = *mx - *mn;
  const int r = s + ctx.n() + 1;
  return {-r, r};
}

inline std::optional<TwistWindow> auto_window(const BundleExpr& expr) {
  std::optional<TwistWindow> w;
  for (const auto& t : expr.terms()) {
    const auto tw = auto_window(expr.ctx(), t);
    w = w ? w->hull(tw) : tw;
  }
  return w;
}

// Sparse (degree, twist) -> dimension map. Zero entries are never stored.
class CohomologyTable {
 public:
  using Cell = std::pair<int, int>;  // (j, t)

  CohomologyTable(GrassmannianCtx ctx, TwistWindow window) : ctx_(ctx), window_(window) {}

  const GrassmannianCtx& ctx() const { return ctx_; }
  const TwistWindow& window() const { return window_; }
  bool certified() const { return certified_; }
  void set_certified(bool c) { certified_ = c; }

  void add(int j, int t, const BigInt& dim) {
    if (dim == 0) return;
    entries_[{j, t}] += dim;
  }

  BigInt at(int j, int t) const {
    auto it = entries_.find({j, t});
    return it == entries_.end() ? BigInt(0) : it->second;
  }

  bool row_empty(int j) const {
    auto it = entries_.lower_bound({j, std::numeric_limits<int>::min()});
    return it == entries_.end() || it->first.first != j;
  }

  // Degrees with a nonzero entry at twist t.
  std::vector<int> degrees_at(int t) const {
    std::vector<int> out;
    for (const auto& [cell, dim] : entries_)
      if (cell.second == t) out.push_back(cell.first);
    return out;
  }

  // Ordered by j ascending, then t ascending.
  const std::map<Cell, BigInt>& entries() const { return entries_; }

  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;

 private:
  GrassmannianCtx ctx_;
  TwistWindow window_;
  bool certified_ = false;
  std::map<Cell, BigInt> entries_;
};

namespace detail {

inline CohomologyTable scan(const BundleExpr& expr, TwistWindow window) {
  const auto& ctx = expr.ctx();
  const auto terms = expr.terms();
  const std::size_t width = static_cast<std::size_t>(window.hi - window.lo + 1);
  std::vector<std::vector<std::pair<int, BigInt>>> columns(width);
  parallel_for(width, [&](std::size_t idx) {
    const int t = window.lo + static_cast<int>(idx);
    for (const auto& term : terms) {
      auto c = bott(ctx, term.lam.shifted(t), term.mu);
      if (!c.zero) columns[idx].emplace_back(c.degree, term.mult * c.dimension);
    }
  });
  CohomologyTable table(ctx, window);
  for (std::size_t idx = 0; idx < width; ++idx)
    for (const auto& [j, dim] : columns[idx]) table.add(j, window.lo + static_cast<int>(idx), dim);
  return table;
}

inline bool boundary_certified(const CohomologyTable& table) {
  const int top = table.ctx().variety_dim();
  for (int j : table.degrees_at(table.window().hi))
    if (j != 0) return false;
  for (int j : table.degrees_at(table.window().lo))
    if (j != top) return false;
  return true;
}

}  // namespace detail

// Cohomology of expr(t) for every twist t in the window. Without a window the
// automatic one is used and its boundary property is checked at runtime
// (widening by n+1 on failure). With an explicit window, `certified()` tells
// whether it covers the automatic window.
inline CohomologyTable cohomology_table(const BundleExpr& expr, std::optional<TwistWindow> window = std::nullopt) {
  const auto& ctx = expr.ctx();
  const auto aw = auto_window(expr);
  if (window) {
    if (window->lo > window->hi) throw DomainError("twist window has lo > hi");
    auto table = detail::scan(expr, *window);
    table.set_certified(!aw || (window->contains(*aw) && detail::boundary_certified(table)));
    return table;
  }
  if (!aw) {
    CohomologyTable empty(ctx, {0, 0});
    empty.set_certified(true);
    return empty;
  }
  TwistWindow w = *aw;
  for (int attempt = 0; attempt < 8; ++attempt) {
    auto table = detail::scan(expr, w);
    if (detail::boundary_certified(table)) {
      table.set_certified(true);
      return table;
    }
    w = w.widened(ctx.n() + 1);
  }
  throw std::logic_error("cohomology_table: automatic window failed to certify");
}

// True iff H^j(expr(t)) = 0 for every integer t.
//
// Dimensions are positive, so the sum vanishes iff every term does; each term
// is scanned over its own automatic window with the degree-only iteration.
inline bool hj_star_vanishes(const BundleExpr& expr, int j) {
  const auto& ctx = expr.ctx();
  if (j < 0 || j > ctx.variety_dim()) throw DomainError("degree out of range");
  for (const auto& term : expr.terms()) {
    const auto w = auto_window(ctx, term);
    for (int t = w.lo; t <= w.hi; ++t) {
      const auto d = bott_degree(ctx, term.lam.shifted(t), term.mu);
      if (d && *d == j) return false;
    }
  }
  return true;
}

// Smallest twist t with H^j(expr(t)) != 0, with its dimension.
inline std::optional<std::pair<int, BigInt>> hj_witness(const BundleExpr& expr, int j) {
  const auto w = auto_window(expr);
  if (!w) return std::nullopt;
  for (int t = w->lo; t <= w->hi; ++t) {
    BigInt dim = 0;
    for (const auto& term : expr.terms()) {
      const auto d = bott_degree(expr.ctx(), term.lam.shifted(t), term.mu);
      if (d && *d == j) dim += term.mult * bott(expr.ctx(), term.lam.shifted(t), term.mu).dimension;
    }
    if (dim != 0) return std::make_pair(t, dim);
  }
  return std::nullopt;
}

// sum_j (-1)^j h^j(expr(t)).
inline BigInt euler_characteristic(const BundleExpr& expr, int t) {
  BigInt chi = 0;
  for (const auto& term : expr.terms()) {
    const auto c = bott(expr.ctx(), term.lam.shifted(t), term.mu);
    if (c.zero) continue;
    if (c.degree % 2 == 0)
      chi += term.mult * c.dimension;
    else
      chi -= term.mult * c.dimension;
  }
  return chi;
}

// Intermediate degrees 0 < j < dim.
inline bool is_acm(const BundleExpr& expr) {
  for (int j = 1; j < expr.ctx().variety_dim(); ++j)
    if (!hj_star_vanishes(expr, j)) return false;
  return true;
}

}  // namespace bottkit
