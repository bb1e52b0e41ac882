#pragma once

// Test-side reference implementations. None of these share code with the
// library paths they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using Poly = std::map<std::vector<int>, long long>;  // exponent vector -> coefficient

// Number of semistandard tableaux of shape p with entries in 1..m.
inline long long ssyt_count(const std::vector<int>& p, int m) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(p.size()); ++r)
    for (int c = 0; c < p[r]; ++c) cells.emplace_back(r, c);
  std::vector<std::vector<int>> t(p.size());
  for (std::size_t r = 0; r < p.size(); ++r) t[r].assign(static_cast<std::size_t>(p[r]), 0);
  long long count = 0;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= m; ++v) {
      t[r][c] = v;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
  return count;
}

// Schur polynomial s_p(x_1..x_m) as a monomial expansion.
inline Poly schur_poly(const std::vector<int>& p, int m) {
  Poly out;
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(p.size()); ++r)
    for (int c = 0; c < p[r]; ++c) cells.emplace_back(r, c);
  std::vector<std::vector<int>> t(p.size());
  for (std::size_t r = 0; r < p.size(); ++r) t[r].assign(static_cast<std::size_t>(p[r]), 0);
  std::vector<int> expo(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      out[expo] += 1;
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= m; ++v) {
      t[r][c] = v;
      ++expo[static_cast<std::size_t>(v - 1)];
      self(self, idx + 1);
      --expo[static_cast<std::size_t>(v - 1)];
    }
  };
  if (static_cast<int>(p.size()) <= m) rec(rec, 0);
  return out;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  return out;
}

// Expands a symmetric polynomial in the Schur basis by peeling off the
// lexicographically largest monomial, which is always a leading term.
inline std::map<std::vector<int>, long long> schur_expand(Poly f, int m) {
  std::map<std::vector<int>, long long> out;
  for (;;) {
    for (auto it = f.begin(); it != f.end();)
      it = it->second == 0 ? f.erase(it) : std::next(it);
    if (f.empty()) break;
    const auto lead = f.rbegin()->first;
    const long long c = f.rbegin()->second;
    std::vector<int> shape(lead);
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    out[shape] += c;
    for (const auto& [e, k] : schur_poly(shape, m)) f[e] -= c * k;
  }
  return out;
}

// c^nu_{lam,mu} restricted to nu with at most m rows, via polynomial algebra.
inline std::map<std::vector<int>, long long> lr_by_polynomials(const std::vector<int>& lam, const std::vector<int>& mu,
                                                               int m) {
  return schur_expand(multiply(schur_poly(lam, m), schur_poly(mu, m)), m);
}

// Number of degree-d monomials in m variables.
inline long long monomials(int d, int m) {
  long long count = 0;
  auto rec = [&](auto&& self, int left, int vars) -> void {
    if (vars == 1) {
      ++count;
      return;
    }
    for (int a = 0; a <= left; ++a) self(self, left - a, vars - 1);
  };
  rec(rec, d, m);
  return count;
}

struct BottResult {
  int degree;
  std::vector<int> rep;
};

// Bott via rho-shift and sort: zero if nu + rho has a repeat, otherwise the
// degree is the inversion count of nu + rho.
inline std::optional<BottResult> bott_by_sorting(const std::vector<int>& nu) {
  const int len = static_cast<int>(nu.size());
  std::vector<int> v(nu.size());
  for (int i = 0; i < len; ++i) v[static_cast<std::size_t>(i)] = nu[static_cast<std::size_t>(i)] + (len - i);
  int inv = 0;
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) {
      if (v[static_cast<std::size_t>(i)] == v[static_cast<std::size_t>(j)]) return std::nullopt;
      if (v[static_cast<std::size_t>(i)] < v[static_cast<std::size_t>(j)]) ++inv;
    }
  std::sort(v.begin(), v.end(), std::greater<int>());
  for (int i = 0; i < len; ++i) v[static_cast<std::size_t>(i)] -= (len - i);
  return BottResult{inv, v};
}

// Weyl dimension through SSYT counting after shifting to a partition.
inline long long dimension_by_tableaux(std::vector<int> nu) {
  const int m = static_cast<int>(nu.size());
  const int low = nu.back();
  for (auto& x : nu) x -= low;
  while (!nu.empty() && nu.back() == 0) nu.pop_back();
  return ssyt_count(nu, m);
}

}  // namespace oracle
