#pragma once

#include <cstddef>
#include <map>
#include <optional>
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

// Ordered terms of a complex, leftmost first. Differentials are not modelled.
struct ComplexSpec {
  GrassmannianCtx ctx;
  std::string name;
  std::vector<BundleExpr> terms;

  BigInt rank_alternating_sum() const {
    BigInt s = 0;
    for (std::size_t p = 0; p < terms.size(); ++p) {
      if (p % 2 == 0)
        s += terms[p].rank();
      else
        s -= terms[p].rank();
    }
    return s;
  }

  ComplexSpec twisted(int t) const {
    ComplexSpec out{ctx, name, {}};
    for (const auto& e : terms) out.terms.push_back(twist(e, t));
    return out;
  }

  // Termwise dual, positions reversed.
  ComplexSpec dualized() const {
    ComplexSpec out{ctx, name + "^dual", {}};
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) out.terms.push_back(dual(*it));
    return out;
  }
};

inline BigInt binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  BigInt b = 1;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

enum class EagonVariant { R, R_dual };

// (R_dual_j): S^j Q^dual, V^* (x) S^{j-1} Q^dual, ..., wedge^j V^* (x) O, wedge^j S
// (R_j):      wedge^j S^dual, wedge^j V (x) O, ..., V (x) S^{j-1} Q, S^j Q
// wedge^p V contributes the scalar binom(n+1, p).
inline ComplexSpec eagon_northcott(const GrassmannianCtx& ctx, int j, EagonVariant variant, int extra_twist = 0) {
  if (j < 1 || j > ctx.rank_s())
    throw DomainError("Eagon-Northcott index j=" + std::to_string(j) + " must lie in 1.." + std::to_string(ctx.rank_s()));
  const int dimV = ctx.ambient_dim();
  ComplexSpec c{ctx, variant == EagonVariant::R ? "R_" + std::to_string(j) : "R_" + std::to_string(j) + "^dual", {}};
  if (variant == EagonVariant::R_dual) {
    for (int p = 0; p <= j; ++p) c.terms.push_back(dual(sym_Q(ctx, j - p)).scaled(binomial(dimV, p)));
    c.terms.push_back(wedge_S(ctx, j));
  } else {
    c.terms.push_back(dual(wedge_S(ctx, j)));
    for (int p = 1; p <= j + 1; ++p) c.terms.push_back(sym_Q(ctx, p - 1).scaled(binomial(dimV, j + 1 - p)));
  }
  if (extra_twist != 0) {
    c = c.twisted(extra_twist);
    c.name += "(" + std::to_string(extra_twist) + ")";
  }
  return c;
}

// Yoneda splice: the last term of each piece is the first of the next and
// is dropped from both.
inline ComplexSpec splice(const std::string& name, const std::vector<ComplexSpec>& pieces) {
  if (pieces.empty()) throw DomainError("splice needs at least one piece");
  ComplexSpec out{pieces.front().ctx, name, {}};
  for (std::size_t idx = 0; idx < pieces.size(); ++idx) {
    const auto& t = pieces[idx].terms;
    if (idx + 1 < pieces.size()) {
      const auto& next = pieces[idx + 1].terms;
      if (t.empty() || next.empty() || !(t.back() == next.front()))
        throw DomainError("splice: pieces " + std::to_string(idx) + " and " + std::to_string(idx + 1) + " do not meet");
    }
    const std::size_t from = idx == 0 ? 0 : 1;
    const std::size_t to = idx + 1 < pieces.size() ? t.size() - 1 : t.size();
    for (std::size_t p = from; p < to; ++p) out.terms.push_back(t[p]);
  }
  return out;
}

// On G(1,n): R_{n-1}(-n) spliced with R_dual_{n-1}(-1) at S^{n-1}Q(-n), running from
// O(-n-1) to O.
inline ComplexSpec serre_extension(int n) {
  if (n < 2) throw DomainError("serre_extension needs n >= 2");
  const GrassmannianCtx ctx(1, n);
  return splice("serre_extension(" + std::to_string(n) + ")",
                {eagon_northcott(ctx, n - 1, EagonVariant::R, -n), eagon_northcott(ctx, n - 1, EagonVariant::R_dual, -1)});
}

// S_{(a^rows)} Q^dual, padded with zero rows.
inline BundleExpr rect_Qdual(const GrassmannianCtx& ctx, int rows, int a, std::optional<int> last = std::nullopt) {
  std::vector<int> lam(static_cast<std::size_t>(rows), a);
  if (last) lam.push_back(*last);
  return dual(schur_Q(ctx, lam));
}

// Rectangular pieces, r = n-k:
//   S_{(r^{i+1})}Q^dual, then wedge^{n-i-s} V (x) S_{((r-1)^i, r-1-s)}Q^dual for
//   s = 0..r-1, then S_{(r^i)}Q^dual(1).
inline ComplexSpec fonarev_Ci(const GrassmannianCtx& ctx, int i) {
  if (i < 0 || i > ctx.k()) throw DomainError("C_i needs 0 <= i <= k = " + std::to_string(ctx.k()));
  const int r = ctx.rank_s();
  const int n = ctx.n();
  ComplexSpec c{ctx, "C_" + std::to_string(i), {}};
  c.terms.push_back(rect_Qdual(ctx, i + 1, r));
  for (int s = 0; s < r; ++s)
    c.terms.push_back(rect_Qdual(ctx, i, r - 1, r - 1 - s).scaled(binomial(n + 1, n - i - s)));
  c.terms.push_back(twist(rect_Qdual(ctx, i, r), 1));
  return c;
}

// C_k, C_{k-1}(1), ..., C_0(k) spliced end to end.
inline ComplexSpec fonarev_glued(const GrassmannianCtx& ctx) {
  std::vector<ComplexSpec> pieces;
  for (int i = ctx.k(); i >= 0; --i) pieces.push_back(fonarev_Ci(ctx, i).twisted(ctx.k() - i));
  return splice("C_glued", pieces);
}

namespace detail {

inline ComplexSpec from_rows(const GrassmannianCtx& ctx, std::string name,
                                const std::vector<std::pair<int, BundleExpr>>& rows) {
  ComplexSpec c{ctx, std::move(name), {}};
  for (const auto& [mult, e] : rows) c.terms.push_back(e.scaled(mult));
  return c;
}

}  // namespace detail

struct G25Examples {
  ComplexSpec fonarev_glued;             // as printed
  ComplexSpec proposed_selfdual;         // twists of the two S^2 Q^dual terms corrected
  ComplexSpec proposed_selfdual_printed; // as printed
};

// The two eleven-term complexes on G(2,5), transcribed. V, V^* count 6,
// wedge^2 15, wedge^3 20.
inline G25Examples g25_examples() {
  const GrassmannianCtx g(2, 5);
  auto Q = [&](std::vector<int> lam, int t) { return twist(schur_Q(g, lam), t); };
  auto Qd = [&](std::vector<int> lam, int t) { return twist(dual(schur_Q(g, lam)), t); };
  auto O = [&](int t) { return line(g, t); };

  G25Examples ex{
      detail::from_rows(g, "g25-fonarev (transcribed)",
                           {{1, O(-3)},
                            {6, Q({1}, -3)},
                            {15, Q({2}, -3)},
                            {20, Q({3}, -3)},
                            {6, Q({3, 1}, -2)},
                            {15, Qd({3, 1}, 1)},
                            {20, Qd({3}, 1)},
                            {6, Qd({2}, 2)},
                            {15, Qd({1}, 2)},
                            {20, O(2)},
                            {1, O(3)}}),
      detail::from_rows(g, "g25-selfdual (transcribed, corrected twists)",
                           {{1, O(-3)},
                            {20, O(-2)},
                            {15, Q({1}, -2)},
                            {6, Q({2}, -2)},
                            {15, Q({2}, -1)},
                            {20, Q({2, 1}, -1)},
                            {15, Qd({2}, 1)},
                            {6, Qd({2}, 2)},
                            {15, Qd({1}, 2)},
                            {20, O(2)},
                            {1, O(3)}}),
      detail::from_rows(g, "g25-selfdual (transcribed)",
                           {{1, O(-3)},
                            {20, O(-2)},
                            {15, Q({1}, -2)},
                            {6, Q({2}, -2)},
                            {15, Q({2}, -1)},
                            {20, Q({2, 1}, -1)},
                            {15, Qd({2}, -1)},
                            {6, Qd({2}, 0)},
                            {15, Qd({1}, 2)},
                            {20, O(2)},
                            {1, O(3)}}),
  };
  return ex;
}

// ---- checks ------------------------------------------------------------------

struct AcmOffence {
  int j = 0;
  int t = 0;
  BigInt dim = 0;
  friend bool operator==(const AcmOffence&, const AcmOffence&) = default;
};

struct ComplexReport {
  std::string name;
  std::vector<std::string> terms;
  BigInt rank_sum = 0;
  bool rank_ok = false;
  TwistWindow window;
  std::map<int, bool> euler;  // twist -> alternating chi sum vanishes
  std::vector<std::vector<AcmOffence>> acm;  // per term: intermediate cohomology found
  std::optional<int> selfdual_twist;         // c with dual(reversed)(c) == terms

  bool euler_ok() const {
    for (const auto& [t, ok] : euler)
      if (!ok) return false;
    return true;
  }
  bool all_acm() const {
    for (const auto& a : acm)
      if (!a.empty()) return false;
    return true;
  }
  std::vector<std::size_t> offending_terms() const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < acm.size(); ++p)
      if (!acm[p].empty()) out.push_back(p);
    return out;
  }
};

// Smallest |c| (then negative first) making the complex equal to its
// reversed termwise dual twisted by c.
inline std::optional<int> selfdual_twist(const ComplexSpec& c) {
  const auto d = c.dualized();
  const int range = 4 * (c.ctx.n() + 1);
  for (int a = 0; a <= range; ++a)
    for (int s : {-a, a}) {
      if (d.twisted(s).terms == c.terms) return s;
      if (a == 0) break;
    }
  return std::nullopt;
}

inline ComplexReport complex_checks(const ComplexSpec& c) {
  if (c.terms.empty()) throw DomainError("complex has no terms");
  ComplexReport r;
  r.name = c.name;
  for (const auto& e : c.terms) {
    if (e.empty()) throw DomainError("complex " + c.name + " has an empty term");
    r.terms.push_back(to_string(e));
  }
  r.rank_sum = c.rank_alternating_sum();
  r.rank_ok = r.rank_sum == 0;

  std::vector<CohomologyTable> tables;
  tables.reserve(c.terms.size());
  for (const auto& e : c.terms) tables.push_back(cohomology_table(e));
  r.window = tables.front().window();
  for (const auto& t : tables) r.window = r.window.hull(t.window());

  const int top = c.ctx.variety_dim();
  for (const auto& t : tables) {
    std::vector<AcmOffence> off;
    for (const auto& [cell, dim] : t.entries())
      if (cell.first > 0 && cell.first < top) off.push_back({cell.first, cell.second, dim});
    r.acm.push_back(std::move(off));
  }

  const auto width = static_cast<std::size_t>(r.window.hi - r.window.lo + 1);
  std::vector<char> ok(width, 0);
  parallel_for(width, [&](std::size_t idx) {
    const int t = r.window.lo + static_cast<int>(idx);
    BigInt chi = 0;
    for (std::size_t p = 0; p < c.terms.size(); ++p) {
      const BigInt x = euler_characteristic(c.terms[p], t);
      if (p % 2 == 0)
        chi += x;
      else
        chi -= x;
    }
    ok[idx] = chi == 0 ? 1 : 0;
  });
  for (std::size_t idx = 0; idx < width; ++idx) r.euler[r.window.lo + static_cast<int>(idx)] = ok[idx] != 0;

  r.selfdual_twist = selfdual_twist(c);
  return r;
}

inline nlohmann::ordered_json to_json(const ComplexReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["terms"] = r.terms;
  j["rank_ok"] = r.rank_ok;
  j["rank_alternating_sum"] = r.rank_sum.str();
  nlohmann::ordered_json eu = nlohmann::ordered_json::object();
  for (const auto& [t, ok] : r.euler) eu[std::to_string(t)] = ok;
  j["euler"] = std::move(eu);
  auto acm = nlohmann::ordered_json::array();
  for (std::size_t p = 0; p < r.acm.size(); ++p) {
    nlohmann::ordered_json o;
    o["term"] = r.terms[p];
    auto off = nlohmann::ordered_json::array();
    for (const auto& a : r.acm[p]) off.push_back({{"j", a.j}, {"t", a.t}, {"dim", a.dim.str()}});
    o["offending"] = std::move(off);
    acm.push_back(std::move(o));
  }
  j["acm"] = std::move(acm);
  j["selfdual"] = r.selfdual_twist.has_value();
  if (r.selfdual_twist) j["selfdual_twist"] = *r.selfdual_twist;
  return j;
}

}  // namespace bottkit
