#pragma once

// Point-set pictures of condition sets: x = i, y = j, a dashed row at j = n-1.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bottkit/criteria.hpp"
#include "bottkit/error.hpp"

namespace bottkit {

enum class DiagramFormat { Ascii, Svg };

namespace detail {

struct DiagramLayout {
  std::vector<ConditionSet> sets;  // sorted by name; later sets draw on top
  int max_i = 0;
  int max_j = 0;
};

inline DiagramLayout layout(std::vector<ConditionSet> sets, int n) {
  if (n < 2) throw DomainError("diagram needs n >= 2");
  std::stable_sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  DiagramLayout l{std::move(sets), n - 1, 2 * n - 3};
  for (const auto& s : l.sets)
    for (const auto& p : s.points) {
      if (p.i < 0 || p.j < 0) throw DomainError("diagram points must be nonnegative");
      l.max_i = std::max(l.max_i, p.i);
      l.max_j = std::max(l.max_j, p.j);
    }
  return l;
}

inline constexpr std::string_view kGlyphs = "#o+x*@%&=~$^";
inline constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
                                          "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#000000", "#aec7e8"};

inline char glyph(std::size_t idx) { return kGlyphs[idx % kGlyphs.size()]; }

inline std::string render_ascii(const DiagramLayout& l, int n) {
  const int w = static_cast<int>(std::to_string(l.max_j).size());
  std::vector<std::string> grid(static_cast<std::size_t>(l.max_j + 1), std::string(static_cast<std::size_t>(l.max_i + 1), '.'));
  for (auto& c : grid[static_cast<std::size_t>(n - 1)]) c = '-';
  for (std::size_t s = 0; s < l.sets.size(); ++s)
    for (const auto& p : l.sets[s].points) grid[static_cast<std::size_t>(p.j)][static_cast<std::size_t>(p.i)] = glyph(s);

  std::ostringstream os;
  for (int j = l.max_j; j >= 0; --j) {
    std::string lab = std::to_string(j);
    os << std::string(static_cast<std::size_t>(w) - lab.size(), ' ') << lab << " |";
    for (char c : grid[static_cast<std::size_t>(j)]) os << ' ' << c;
    if (j == n - 1) os << "   j = n-1";
    os << '\n';
  }
  os << std::string(static_cast<std::size_t>(w), ' ') << " +" << std::string(static_cast<std::size_t>(2 * (l.max_i + 1)), '-') << " i\n";
  os << std::string(static_cast<std::size_t>(w), ' ') << "  ";
  for (int i = 0; i <= l.max_i; ++i) os << ' ' << (i % 10);
  os << '\n';
  for (std::size_t s = 0; s < l.sets.size(); ++s)
    os << "  " << glyph(s) << "  " << l.sets[s].name << " (" << l.sets[s].size() << ")\n";
  return os.str();
}

inline std::string render_svg(const DiagramLayout& l, int n) {
  constexpr int cell = 20, margin = 20;
  const int width = 2 * margin + cell * (l.max_i + 1);
  const int height = 2 * margin + cell * (l.max_j + 1);
  auto x = [&](int i) { return margin + cell * i + cell / 2; };
  auto y = [&](int j) { return height - margin - cell * j - cell / 2; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  const int x0 = margin, y0 = height - margin;
  os << "<g id=\"axes\"><title>axes</title><path d=\"M" << x0 << ' ' << y0 << "H" << width - margin / 2 << "M" << x0
     << ' ' << y0 << "V" << margin / 2 << "\" stroke=\"#000000\" fill=\"none\" stroke-width=\"1\"/>";
  os << "<path d=\"";
  for (int i = 0; i <= l.max_i; ++i) os << "M" << x(i) << ' ' << y0 << "v4";
  for (int j = 0; j <= l.max_j; ++j) os << "M" << x0 << ' ' << y(j) << "h-4";
  os << "\" stroke=\"#000000\" fill=\"none\" stroke-width=\"1\"/></g>\n";
  os << "<g id=\"n-1\"><title>j = " << n - 1 << "</title><path d=\"M" << x0 << ' ' << y(n - 1) << "H"
     << width - margin / 2 << "\" stroke=\"#555555\" fill=\"none\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/></g>\n";
  for (std::size_t s = 0; s < l.sets.size(); ++s) {
    os << "<g><title>" << l.sets[s].name << "</title><path d=\"";
    for (const auto& p : l.sets[s].points) os << "M" << x(p.i) - 5 << ' ' << y(p.j) - 5 << "h10v10h-10z";
    os << "\" fill=\"" << kColors[s % std::size(kColors)] << "\" stroke=\"none\"/></g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace detail

// The grid always covers 0 <= i <= n-1 and 0 <= j <= 2n-3, more if a point lies outside.
inline std::string diagram(const std::vector<ConditionSet>& sets, int n, DiagramFormat format) {
  const auto l = detail::layout(sets, n);
  return format == DiagramFormat::Ascii ? detail::render_ascii(l, n) : detail::render_svg(l, n);
}

}  // namespace bottkit
