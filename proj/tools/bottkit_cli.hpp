#pragma once

// Command-line front end. run() is kept separate from main() so tests can drive it.

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bottkit/bottkit.hpp"

namespace bottkit::cli {

enum Exit { kClean = 0, kViolations = 1, kParse = 2, kDomain = 3 };

// Malformed flag values (k,n / lo,hi / partitions) are parse errors too.
struct ArgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string subcommand;
  std::string grassmannian;
  std::string bundle;
  std::string window;
  std::string format = "table";
  std::string criterion = "main";
  int k_level = 0;
  std::string family = "sym";
  int bound = 8;
  std::string which;
  int j = 1;
  std::string variant = "R";
  int twist = 0;
  int i = -1;  // -1: glued fonarev complex
  int k = -1;
  std::string partition;
};

namespace detail {

inline std::vector<int> int_list(const std::string& s, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ArgError(flag + ": '" + s + "' is not a comma separated list of integers");
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (used != item.size()) throw ArgError(flag + ": '" + s + "' is not a comma separated list of integers");
    out.push_back(v);
  }
  if (out.empty()) throw ArgError(flag + ": empty value");
  return out;
}

inline GrassmannianCtx ctx_of(const Config& c) {
  if (c.grassmannian.empty()) throw DomainError("-g/--grassmannian k,n is required for " + c.subcommand);
  const auto v = int_list(c.grassmannian, "--grassmannian");
  if (v.size() != 2) throw ArgError("--grassmannian expects k,n");
  return GrassmannianCtx(v[0], v[1]);
}

inline std::optional<TwistWindow> window_of(const Config& c) {
  if (c.window.empty()) return std::nullopt;
  const auto v = int_list(c.window, "--window");
  if (v.size() != 2) throw ArgError("--window expects lo,hi");
  if (v[0] > v[1]) throw DomainError("--window: lo must not exceed hi");
  return TwistWindow{v[0], v[1]};
}

inline BundleExpr bundle_of(const Config& c, const GrassmannianCtx& g) {
  if (c.bundle.empty()) throw DomainError("-b/--bundle is required for " + c.subcommand);
  return parse_bundle(g, c.bundle);
}

inline std::string pad(const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; }

inline std::string points_text(const ConditionSet& s) {
  std::string out;
  for (const auto& p : s.points) out += " (" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
  return out;
}

inline int lines_n(const GrassmannianCtx& g, const std::string& what) {
  if (g.k() != 1) throw DomainError(what + " is stated on Grassmannians of lines; got " + g.name());
  return g.n();
}

// Named pieces of a criterion (for listings and pictures).
inline std::vector<ConditionSet> criterion_parts(const Config& c, int n) {
  if (c.criterion == "am")
    return {segment(Segment::A, 0, n), segment(Segment::B, 0, n), ConditionSet{"P", {{n - 2, n - 1}}}};
  if (c.criterion == "ottaviani") return ottaviani_sets(n);
  if (c.criterion == "beilinson") return beilinson_sets(n);
  return main_hypotheses_parts(n, c.k_level);
}

inline ConditionSet criterion_set(const Config& c, int n) {
  if (c.criterion == "am") return am_set(n);
  if (c.criterion == "ottaviani") return ottaviani_inequality_set(n);
  if (c.criterion == "beilinson") return set_union("beilinson", beilinson_sets(n));
  return main_hypotheses(n, c.k_level);
}

}  // namespace detail

inline int cmd_cohomology(const Config& c, std::ostream& out, std::ostream& err) {
  const auto g = detail::ctx_of(c);
  const auto e = detail::bundle_of(c, g);
  const auto w = detail::window_of(c);
  const auto table = cohomology_table(e, w);
  if (w && !table.certified()) {
    const auto aw = auto_window(e);
    err << "warning: window [" << w->lo << "," << w->hi << "] does not cover the certified window";
    if (aw) err << " [" << aw->lo << "," << aw->hi << "]";
    err << "; cohomology outside it is not shown\n";
  }
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["grassmannian"] = g.name();
    j["bundle"] = to_string(e);
    j["window"] = {table.window().lo, table.window().hi};
    j["certified"] = table.certified();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [cell, dim] : table.entries()) arr.push_back({{"j", cell.first}, {"t", cell.second}, {"dim", dim.str()}});
    j["entries"] = std::move(arr);
    out << j.dump(2) << '\n';
    return kClean;
  }
  if (c.format != "table") throw DomainError("cohomology supports --format table or json");
  out << g.name() << "  " << to_string(e) << '\n';
  out << "window [" << table.window().lo << "," << table.window().hi << "]"
      << (table.certified() ? " certified" : " not certified") << '\n';
  std::size_t wj = 1, wt = 1, wd = 3;
  for (const auto& [cell, dim] : table.entries()) {
    wj = std::max(wj, std::to_string(cell.first).size());
    wt = std::max(wt, std::to_string(cell.second).size());
    wd = std::max(wd, dim.str().size());
  }
  out << detail::pad("j", wj) << "  " << detail::pad("t", wt) << "  " << detail::pad("dim", wd) << '\n';
  for (const auto& [cell, dim] : table.entries())
    out << detail::pad(std::to_string(cell.first), wj) << "  " << detail::pad(std::to_string(cell.second), wt) << "  "
        << detail::pad(dim.str(), wd) << '\n';
  return kClean;
}

inline int cmd_criteria(const Config& c, std::ostream& out) {
  const int n = detail::lines_n(detail::ctx_of(c), "criteria");
  const auto parts = detail::criterion_parts(c, n);
  if (c.format == "ascii") {
    out << diagram(parts, n, DiagramFormat::Ascii);
  } else if (c.format == "svg") {
    out << diagram(parts, n, DiagramFormat::Svg);
  } else if (c.format == "json") {
    nlohmann::ordered_json j;
    j["criterion"] = c.criterion;
    j["n"] = n;
    j["k"] = c.criterion == "main" ? c.k_level : 0;
    auto sets = nlohmann::ordered_json::array();
    for (const auto& s : parts) {
      auto pts = nlohmann::ordered_json::array();
      for (const auto& p : s.points) pts.push_back({p.i, p.j});
      sets.push_back({{"name", s.name}, {"points", std::move(pts)}});
    }
    j["sets"] = std::move(sets);
    out << j.dump(2) << '\n';
  } else {
    for (const auto& s : parts) out << s.name << ":" << (s.empty() ? " (empty)" : detail::points_text(s)) << '\n';
  }
  return kClean;
}

inline int cmd_check(const Config& c, std::ostream& out) {
  const auto g = detail::ctx_of(c);
  const int n = detail::lines_n(g, "check");
  const auto e = detail::bundle_of(c, g);
  const auto conds = detail::criterion_set(c, n);
  const auto report = evaluate(e, conds, c.criterion == "main" ? c.k_level : 0);
  if (c.format == "json") {
    out << to_json(report).dump(2) << '\n';
  } else if (c.format == "table") {
    out << conds.name << " on " << g.name() << ", F = " << to_string(e) << '\n';
    if (report.clean()) out << "clean: all " << conds.size() << " conditions hold\n";
    for (const auto& v : report.violations)
      out << "violated (" << v.i << "," << v.j << "): h^" << v.j << "(F * Sym^" << v.i << " Q(" << v.t << ")) = " << v.dim
          << '\n';
  } else {
    throw DomainError("check supports --format table or json");
  }
  return report.clean() ? kClean : kViolations;
}

inline int cmd_acm_scan(const Config& c, std::ostream& out) {
  const auto g = detail::ctx_of(c);
  const auto fam = c.family == "schur" ? AcmFamily::Schur : AcmFamily::Symmetric;
  const auto found = acm_scan(g, fam, c.bound);
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["grassmannian"] = g.name();
    j["family"] = c.family;
    j["bound"] = c.bound;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& a : found) arr.push_back({{"partition", a.lam.parts()}, {"bundle", a.label}});
    j["bundles"] = std::move(arr);
    out << j.dump(2) << '\n';
  } else if (c.format == "table") {
    for (const auto& a : found) out << a.label << '\n';
  } else {
    throw DomainError("acm-scan supports --format table or json");
  }
  return kClean;
}

inline ComplexSpec complex_of(const Config& c) {
  if (c.which == "g25-fonarev") return g25_examples().fonarev_glued;
  if (c.which == "g25-selfdual") return g25_examples().proposed_selfdual;
  const auto g = detail::ctx_of(c);
  if (c.which == "eagon") {
    if (c.variant != "R" && c.variant != "R_dual") throw DomainError("--variant must be R or R_dual");
    return eagon_northcott(g, c.j, c.variant == "R" ? EagonVariant::R : EagonVariant::R_dual, c.twist);
  }
  if (c.which == "serre") return serre_extension(detail::lines_n(g, "serre"));
  if (c.which == "fonarev") return c.i < 0 ? fonarev_glued(g) : fonarev_Ci(g, c.i);
  throw DomainError("--which is required for complex");
}

inline int cmd_complex(const Config& c, std::ostream& out) {
  const auto spec = complex_of(c);
  const auto r = complex_checks(spec);
  if (c.format == "json") {
    out << to_json(r).dump(2) << '\n';
    return kClean;
  }
  if (c.format != "table") throw DomainError("complex supports --format table or json");
  out << r.name << " on " << spec.ctx.name() << '\n';
  const std::size_t w = std::to_string(r.terms.size() - 1).size();
  for (std::size_t p = 0; p < r.terms.size(); ++p) out << detail::pad(std::to_string(p), w) << "  " << r.terms[p] << '\n';
  out << "rank alternating sum: " << r.rank_sum << (r.rank_ok ? " (ok)" : " (FAIL)") << '\n';
  std::vector<int> bad;
  for (const auto& [t, ok] : r.euler)
    if (!ok) bad.push_back(t);
  out << "euler characteristic on [" << r.window.lo << "," << r.window.hi << "]: ";
  if (bad.empty()) {
    out << "ok\n";
  } else {
    out << "FAIL at t =";
    for (int t : bad) out << ' ' << t;
    out << '\n';
  }
  if (r.all_acm()) out << "intermediate cohomology: none\n";
  for (std::size_t p = 0; p < r.acm.size(); ++p)
    for (const auto& a : r.acm[p])
      out << "intermediate cohomology: term " << p << " " << r.terms[p] << ": h^" << a.j << " at t=" << a.t << " = " << a.dim
          << '\n';
  if (r.selfdual_twist)
    out << "self-dual: yes, twist " << *r.selfdual_twist << '\n';
  else
    out << "self-dual: no\n";
  return kClean;
}

// S_lam Q'(lam_1) = S_alpha Q on a rank k+1 quotient bundle.
inline int cmd_complement(const Config& c, std::ostream& out) {
  if (c.k < 0) throw DomainError("-k K (k >= 0) is required for complement");
  if (c.partition.empty()) throw DomainError("-p/--partition is required for complement");
  const auto given = detail::int_list(c.partition, "--partition");
  const Partition lam(given);
  const int rows = c.k + 1;
  if (static_cast<int>(lam.length()) > rows)
    throw RankError("partition " + to_string(lam) + " has more than k+1 = " + std::to_string(rows) + " rows");
  const int c1 = lam.empty() ? 0 : lam[0];
  const Partition alpha = complement(lam, rows, c1);

  // cross-check against the weight calculus
  const GrassmannianCtx g(c.k, c.k + 1);
  if (!(twist(dual(schur_Q(g, lam)), c1) == schur_Q(g, alpha))) throw DomainError("complement identity failed");

  const bool full = static_cast<int>(lam.length()) == rows && std::all_of(given.begin(), given.end(), [&](int v) { return v == c1; });
  std::string lhs;
  if (full || c1 == 0) {
    lhs = "O(" + std::to_string(-c1) + ")(" + std::to_string(c1) + ")";
  } else {
    lhs = "S[";
    for (std::size_t r = 0; r < given.size(); ++r) lhs += (r ? "," : "") + std::to_string(given[r]);
    lhs += "]Q'(" + std::to_string(c1) + ")";
  }
  std::string rhs;
  if (alpha.empty()) {
    rhs = "O";
  } else {
    const auto parts = alpha.padded(std::max(given.size(), alpha.length()));
    rhs = "S[";
    for (std::size_t r = 0; r < parts.size(); ++r) rhs += (r ? "," : "") + std::to_string(parts[r]);
    rhs += "]Q";
  }
  out << lhs << " = " << rhs << '\n';
  return kClean;
}

inline void caret(std::ostream& err, const std::string& text, std::size_t pos) {
  err << "  " << text << '\n' << "  " << std::string(std::min(pos, text.size()), ' ') << "^\n";
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Cohomology of homogeneous bundles on Grassmannians", "bottkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-g,--grassmannian", c.grassmannian, "k,n for G(k,n)");
  app.add_option("-b,--bundle", c.bundle, "bundle expression");
  app.add_option("-w,--window", c.window, "twist window lo,hi");
  app.add_option("-f,--format", c.format)->check(CLI::IsMember({"table", "json", "svg", "ascii"}));
  app.add_option("-c,--criterion", c.criterion)->check(CLI::IsMember({"am", "ottaviani", "beilinson", "main"}));
  app.add_option("--k-level", c.k_level, "k for the main criterion");
  app.add_option("--family", c.family)->check(CLI::IsMember({"sym", "schur"}));
  app.add_option("--bound", c.bound, "largest first part in acm-scan");
  app.add_option("--which", c.which)->check(CLI::IsMember({"eagon", "serre", "fonarev", "g25-fonarev", "g25-selfdual"}));
  app.add_option("--j", c.j, "Eagon-Northcott index");
  app.add_option("--variant", c.variant)->check(CLI::IsMember({"R", "R_dual"}));
  app.add_option("--twist", c.twist, "extra twist for eagon");
  app.add_option("--i", c.i, "fonarev piece C_i; glued complex when omitted");
  app.add_option("-k", c.k, "k for complement (rank k+1)");
  app.add_option("-p,--partition", c.partition, "partition, e.g. 4,1");

  for (const char* name : {"cohomology", "criteria", "check", "acm-scan", "complex", "complement"})
    app.add_subcommand(name)->callback([&c, name] { c.subcommand = name; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kClean : kParse;
  }

  try {
    if (c.subcommand == "cohomology") return cmd_cohomology(c, out, err);
    if (c.subcommand == "criteria") return cmd_criteria(c, out);
    if (c.subcommand == "check") return cmd_check(c, out);
    if (c.subcommand == "acm-scan") return cmd_acm_scan(c, out);
    if (c.subcommand == "complex") return cmd_complex(c, out);
    return cmd_complement(c, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    caret(err, c.bundle, e.position());
    return kParse;
  } catch (const ArgError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const RankError& e) {
    err << "rank error: " << e.what() << '\n';
    return kDomain;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
}

}  // namespace bottkit::cli
