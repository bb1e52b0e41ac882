#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bottkit/error.hpp"
#include "bottkit/grassmannian.hpp"
#include "bottkit/partitions.hpp"

namespace bottkit {

// One summand mult * S_lam Q (x) S_mu S^dual.
//
// Canonical form: lam has length k+1, mu has length n-k, both weakly
// decreasing, and mu's last entry is 0. Since det S^dual = O(-1), a term
// (lam, mu) is isomorphic to (lam - c, mu - c) for any c; pinning mu_last = 0
// moves every global twist onto the Q factor.
struct BundleTerm {
  Weight lam;
  Weight mu;
  BigInt mult = 1;

  // Validating constructor; rejects non-canonical input instead of fixing it.
  static BundleTerm make(const GrassmannianCtx& ctx, Weight lam, Weight mu, BigInt mult = 1) {
    if (lam.size() != static_cast<std::size_t>(ctx.rank_q()))
      throw DomainError("Q-weight " + to_string(lam) + " must have length " + std::to_string(ctx.rank_q()));
    if (mu.size() != static_cast<std::size_t>(ctx.rank_s()))
      throw DomainError("S-weight " + to_string(mu) + " must have length " + std::to_string(ctx.rank_s()));
    if (!lam.dominant() || !mu.dominant()) throw DomainError("bundle term weights must be weakly decreasing");
    if (mu.back() != 0) throw DomainError("non-canonical term: last entry of the S-weight must be 0");
    if (mult <= 0) throw DomainError("term multiplicity must be positive");
    return BundleTerm{std::move(lam), std::move(mu), std::move(mult)};
  }

  // Concatenated weight (lam, mu) fed to Bott's algorithm.
  Weight concat() const { return lam.concat(mu); }

  // Twist carried by the Q factor: lam = partition + twist.
  int twist() const { return lam.back(); }

  BigInt rank() const { return mult * weyl_dimension(lam) * weyl_dimension(mu); }

  friend bool operator==(const BundleTerm&, const BundleTerm&) = default;
};

// A formal direct sum of canonical terms with merged multiplicities.
class BundleExpr {
 public:
  using Key = std::pair<Weight, Weight>;

  explicit BundleExpr(GrassmannianCtx ctx) : ctx_(ctx) {}

  static BundleExpr single(const GrassmannianCtx& ctx, const Weight& lam, const Weight& mu, BigInt mult = 1) {
    BundleExpr e(ctx);
    e.add_normalized(lam, mu, std::move(mult));
    return e;
  }

  const GrassmannianCtx& ctx() const { return ctx_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::vector<BundleTerm> terms() const {
    std::vector<BundleTerm> out;
    out.reserve(terms_.size());
    for (const auto& [key, mult] : terms_) out.push_back(BundleTerm{key.first, key.second, mult});
    return out;
  }

  const std::map<Key, BigInt>& term_map() const { return terms_; }

  // Adds a term after absorbing mu's last entry into lam. Requires both
  // weights weakly decreasing and of the context's lengths.
  void add_normalized(const Weight& lam, const Weight& mu, const BigInt& mult) {
    if (mult == 0) return;
    if (mult < 0) throw DomainError("negative multiplicity");
    const int c = mu.size() ? mu.back() : 0;
    auto term = BundleTerm::make(ctx_, lam.shifted(-c), mu.shifted(-c), mult);
    terms_[{std::move(term.lam), std::move(term.mu)}] += mult;
  }

  void add(const BundleTerm& t) { add_normalized(t.lam, t.mu, t.mult); }

  BigInt rank() const {
    BigInt r = 0;
    for (const auto& t : terms()) r += t.rank();
    return r;
  }

  BundleExpr& operator+=(const BundleExpr& other) {
    require_same_ctx(other);
    for (const auto& [key, mult] : other.terms_) terms_[key] += mult;
    return *this;
  }

  friend BundleExpr operator+(BundleExpr a, const BundleExpr& b) { return a += b; }

  BundleExpr scaled(const BigInt& factor) const {
    if (factor < 0) throw DomainError("negative scalar");
    BundleExpr out(ctx_);
    if (factor == 0) return out;
    for (const auto& [key, mult] : terms_) out.terms_[key] = mult * factor;
    return out;
  }

  void require_same_ctx(const BundleExpr& other) const {
    if (!(ctx_ == other.ctx_)) throw DomainError("bundle expressions live on different Grassmannians");
  }

  friend bool operator==(const BundleExpr&, const BundleExpr&) = default;

 private:
  GrassmannianCtx ctx_;
  std::map<Key, BigInt> terms_;
};

// ---- constructors ---------------------------------------------------------

inline Weight zero_s(const GrassmannianCtx& ctx) { return Weight::constant(static_cast<std::size_t>(ctx.rank_s()), 0); }

inline BundleExpr line(const GrassmannianCtx& ctx, int t) {
  return BundleExpr::single(ctx, Weight::constant(static_cast<std::size_t>(ctx.rank_q()), t), zero_s(ctx));
}

// S_lam Q for a weakly decreasing lam with at most k+1 entries (padded by 0).
inline BundleExpr schur_Q(const GrassmannianCtx& ctx, const std::vector<int>& lam) {
  if (lam.size() > static_cast<std::size_t>(ctx.rank_q())) {
    for (std::size_t i = static_cast<std::size_t>(ctx.rank_q()); i < lam.size(); ++i)
      if (lam[i] != 0)
        throw RankError("S[" + to_string(Weight(lam)) + "] has more rows than rank Q = " +
                        std::to_string(ctx.rank_q()));
  }
  std::vector<int> w(lam);
  w.resize(static_cast<std::size_t>(ctx.rank_q()), 0);
  Weight wt(std::move(w));
  if (!wt.dominant()) throw DomainError("Schur weight " + to_string(Weight(lam)) + " is not weakly decreasing");
  return BundleExpr::single(ctx, wt, zero_s(ctx));
}

inline BundleExpr schur_Q(const GrassmannianCtx& ctx, const Partition& p) { return schur_Q(ctx, p.parts()); }

inline BundleExpr schur_Q(const GrassmannianCtx& ctx, std::initializer_list<int> lam) {
  return schur_Q(ctx, std::vector<int>(lam));
}

// S_mu S^dual, rewritten into canonical form.
inline BundleExpr schur_Sdual(const GrassmannianCtx& ctx, const std::vector<int>& mu) {
  if (mu.size() > static_cast<std::size_t>(ctx.rank_s())) {
    for (std::size_t i = static_cast<std::size_t>(ctx.rank_s()); i < mu.size(); ++i)
      if (mu[i] != 0)
        throw RankError("S[" + to_string(Weight(mu)) + "] has more rows than rank S = " +
                        std::to_string(ctx.rank_s()));
  }
  std::vector<int> w(mu);
  w.resize(static_cast<std::size_t>(ctx.rank_s()), 0);
  Weight wt(std::move(w));
  if (!wt.dominant()) throw DomainError("Schur weight " + to_string(Weight(mu)) + " is not weakly decreasing");
  return BundleExpr::single(ctx, Weight::constant(static_cast<std::size_t>(ctx.rank_q()), 0), wt);
}

inline BundleExpr sym_Q(const GrassmannianCtx& ctx, int j) {
  if (j < 0) throw DomainError("negative symmetric power");
  return schur_Q(ctx, std::vector<int>{j});
}

inline BundleExpr wedge_Q(const GrassmannianCtx& ctx, int j) {
  if (j < 0 || j > ctx.rank_q())
    throw RankError("Wedge^" + std::to_string(j) + " Q exceeds rank Q = " + std::to_string(ctx.rank_q()));
  return schur_Q(ctx, std::vector<int>(static_cast<std::size_t>(j), 1));
}

inline BundleExpr dual(const BundleExpr& e) {
  BundleExpr out(e.ctx());
  for (const auto& t : e.terms()) out.add_normalized(t.lam.dual(), t.mu.dual(), t.mult);
  return out;
}

inline BundleExpr twist(const BundleExpr& e, int t) {
  BundleExpr out(e.ctx());
  for (const auto& term : e.terms()) out.add_normalized(term.lam.shifted(t), term.mu, term.mult);
  return out;
}

// Sym^j S = (Sym^j S^dual)^dual.
inline BundleExpr sym_S(const GrassmannianCtx& ctx, int j) {
  if (j < 0) throw DomainError("negative symmetric power");
  return dual(schur_Sdual(ctx, std::vector<int>{j}));
}

inline BundleExpr wedge_S(const GrassmannianCtx& ctx, int j) {
  if (j < 0 || j > ctx.rank_s())
    throw RankError("Wedge^" + std::to_string(j) + " S exceeds rank S = " + std::to_string(ctx.rank_s()));
  return dual(schur_Sdual(ctx, std::vector<int>(static_cast<std::size_t>(j), 1)));
}

inline BundleExpr schur_S(const GrassmannianCtx& ctx, const std::vector<int>& mu) { return dual(schur_Sdual(ctx, mu)); }

// Tensor product; each factor is decomposed independently with the
// Littlewood-Richardson rule (m = k+1 on Q, m = n-k on S^dual).
inline BundleExpr tensor(const BundleExpr& a, const BundleExpr& b) {
  a.require_same_ctx(b);
  const auto& ctx = a.ctx();
  const auto mq = static_cast<std::size_t>(ctx.rank_q());
  const auto ms = static_cast<std::size_t>(ctx.rank_s());
  BundleExpr out(ctx);
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      const int shift = ta.twist() + tb.twist();
      const auto q_parts = littlewood_richardson(ta.lam.to_partition(), tb.lam.to_partition(), mq);
      const auto s_parts = littlewood_richardson(ta.mu.to_partition(), tb.mu.to_partition(), ms);
      const BigInt base = ta.mult * tb.mult;
      for (const auto& [nq, cq] : q_parts) {
        const Weight lam = Weight::from_partition(nq, mq).shifted(shift);
        for (const auto& [ns, cs] : s_parts) out.add_normalized(lam, Weight::from_partition(ns, ms), base * cq * cs);
      }
    }
  }
  return out;
}

// ---- pretty printer ----------------------------------------------------------
//
// Output is accepted by parse_bundle and parses back to the same expression.

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

inline bool is_row(const Partition& p) { return p.length() == 1; }

inline bool is_column(const Partition& p) {
  return p.length() >= 2 && std::all_of(p.parts().begin(), p.parts().end(), [](int x) { return x == 1; });
}

// Schur factor applied to `base` ("Q" or "S"); `dual_suffix` is appended to
// the atom.
inline std::string schur_atom(const Partition& p, const std::string& base) {
  if (is_row(p)) return p[0] == 1 ? base : "Sym^" + std::to_string(p[0]) + " " + base;
  if (is_column(p)) return "Wedge^" + std::to_string(p.length()) + " " + base;
  return "S[" + join_ints(p.parts()) + "]" + base;
}

inline std::string twist_suffix(int t) { return t == 0 ? "" : "(" + std::to_string(t) + ")"; }

}  // namespace detail

inline std::string to_string(const BundleTerm& t) {
  std::string out;
  if (t.mult != 1) out += t.mult.str() + "*";
  const Partition q = t.lam.to_partition();
  const Partition s = t.mu.to_partition();
  const int tw = t.twist();
  if (q.empty()) {
    if (s.empty() || tw != 0) out += "O" + detail::twist_suffix(tw);
    if (!s.empty()) {
      if (tw != 0) out += " * ";
      out += detail::schur_atom(s, "S") + "'";
    }
    return out;
  }
  out += detail::schur_atom(q, "Q") + detail::twist_suffix(tw);
  if (!s.empty()) out += " * " + detail::schur_atom(s, "S") + "'";
  return out;
}

inline std::string to_string(const BundleExpr& e) {
  if (e.empty()) return "0";
  std::string out;
  for (const auto& t : e.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(t);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const BundleExpr& e) { return os << to_string(e); }

}  // namespace bottkit
