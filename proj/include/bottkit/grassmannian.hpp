#pragma once

#include <string>

#include "bottkit/error.hpp"

namespace bottkit {

// G(k, n): k-planes in P^n. Q has rank k+1, S has rank n-k.
class GrassmannianCtx {
 public:
  GrassmannianCtx(int k, int n) : k_(k), n_(n) {
    if (k < 0 || k >= n)
      throw DomainError("Grassmannian G(" + std::to_string(k) + "," + std::to_string(n) + ") needs 0 <= k < n");
  }

  int k() const { return k_; }
  int n() const { return n_; }
  int rank_q() const { return k_ + 1; }
  int rank_s() const { return n_ - k_; }
  int ambient_dim() const { return n_ + 1; }
  int variety_dim() const { return (k_ + 1) * (n_ - k_); }
  int canonical_twist() const { return -(n_ + 1); }

  std::string name() const { return "G(" + std::to_string(k_) + "," + std::to_string(n_) + ")"; }

  friend bool operator==(const GrassmannianCtx&, const GrassmannianCtx&) = default;

 private:
  int k_;
  int n_;
};

}  // namespace bottkit
