#pragma once

// Bundle-expression grammar (ASCII, whitespace-insensitive):
//
//   expr    := summand ('+' summand)*
//   summand := factor ('*' factor)*
//   factor  := (INT | atom) postfix*
//   postfix := '(' INT ')'            twist
//            | "'"                    dual
//   atom    := 'O' | 'Q' | 'S'
//            | 'Sym' '^' INT base
//            | 'Wedge' '^' INT base
//            | 'S' '[' INT (',' INT)* ']' base
//   base    := 'O' | 'Q' | 'S'
//
// A bare INT factor is a scalar multiplicity ("6*Q(-1)"); "0" is the zero
// bundle. Postfixes apply left to right, so "Q(-1)'" is Q^dual(1) and
// "Q'(4)" is Q^dual(4). Here S is the rank n-k subbundle, so S' is S^dual.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bottkit/bundles.hpp"
#include "bottkit/error.hpp"
#include "bottkit/grassmannian.hpp"

namespace bottkit {

namespace detail {

class BundleParser {
 public:
  BundleParser(const GrassmannianCtx& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  BundleExpr parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty bundle expression", pos_);
    BundleExpr e = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      skip_ws();
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  bool peek_int() {
    skip_ws();
    if (at_end()) return false;
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    return (c == '-' || c == '+') && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (!peek_int()) throw ParseError("expected an integer", pos_);
    bool neg = false;
    if (text_[pos_] == '-' || text_[pos_] == '+') neg = text_[pos_++] == '-';
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1'000'000) throw ParseError("integer out of range", start);
    }
    return static_cast<int>(neg ? -v : v);
  }

  BundleExpr expr() {
    BundleExpr e = summand();
    while (accept('+')) e += summand();
    return e;
  }

  BundleExpr summand() {
    BundleExpr e = factor();
    while (accept('*')) e = tensor(e, factor());
    return e;
  }

  BundleExpr factor() {
    skip_ws();
    const std::size_t start = pos_;
    BundleExpr e(ctx_);
    if (peek_int()) {
      const int m = integer();
      if (m < 0) throw ParseError("multiplicity must be nonnegative", start);
      e = line(ctx_, 0).scaled(m);
    } else {
      e = atom();
    }
    for (;;) {
      if (accept('\'')) {
        e = dual(e);
      } else if (accept('(')) {
        const int t = integer();
        expect(')');
        e = twist(e, t);
      } else {
        break;
      }
    }
    return e;
  }

  enum class Base { O, Q, S };

  Base base() {
    skip_ws();
    const std::size_t start = pos_;
    if (accept_word("Sym") || accept_word("Wedge"))
      throw ParseError("nested Schur functors (plethysm) are not supported", start);
    if (accept('O')) return Base::O;
    if (accept('Q')) return Base::Q;
    if (accept('S')) {
      if (accept('[')) throw ParseError("nested Schur functors (plethysm) are not supported", start);
      return Base::S;
    }
    throw ParseError("expected O, Q or S", pos_);
  }

  BundleExpr atom() {
    skip_ws();
    const std::size_t start = pos_;
    if (accept_word("Sym")) {
      expect('^');
      const int j = integer();
      if (j < 0) throw ParseError("negative symmetric power", start);
      return schur_of(base(), std::vector<int>{j}, start);
    }
    if (accept_word("Wedge")) {
      expect('^');
      const int j = integer();
      if (j < 0) throw ParseError("negative exterior power", start);
      return schur_of(base(), std::vector<int>(static_cast<std::size_t>(j), 1), start);
    }
    if (accept_word("S") && accept('[')) {
      std::vector<int> parts{integer()};
      while (accept(',')) parts.push_back(integer());
      expect(']');
      return schur_of(base(), parts, start);
    }
    pos_ = start;
    switch (base()) {
      case Base::O:
        return line(ctx_, 0);
      case Base::Q:
        return sym_Q(ctx_, 1);
      case Base::S:
        return schur_S(ctx_, {1});
    }
    throw ParseError("unreachable", start);
  }

  BundleExpr schur_of(Base b, const std::vector<int>& parts, std::size_t where) {
    switch (b) {
      case Base::O: {
        // O has rank one: a single row gives O back, more rows give zero.
        std::vector<int> trimmed(parts);
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        if (trimmed.size() > 1) throw RankError("Schur functor with " + std::to_string(trimmed.size()) + " rows of O");
        if (!trimmed.empty() && trimmed[0] < 0) throw DomainError("negative Schur weight on O");
        return line(ctx_, 0);
      }
      case Base::Q:
        return schur_Q(ctx_, parts);
      case Base::S:
        return schur_S(ctx_, parts);
    }
    throw ParseError("unreachable", where);
  }

  GrassmannianCtx ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline BundleExpr parse_bundle(const GrassmannianCtx& ctx, std::string_view text) {
  return detail::BundleParser(ctx, text).parse();
}

}  // namespace bottkit
