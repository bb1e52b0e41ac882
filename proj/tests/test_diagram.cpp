#include <catch_amalgamated.hpp>

#include <map>
#include <set>
#include <sstream>
#include <string>

#include "bottkit/diagram.hpp"

using namespace bottkit;

namespace {

// Read the glyph grid back: glyph -> points.
std::map<char, std::set<ConditionPoint>> read_grid(const std::string& text) {
  std::map<char, std::set<ConditionPoint>> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const auto bar = line.find(" |");
    if (bar == std::string::npos) continue;
    const int j = std::stoi(line.substr(0, bar));
    for (std::size_t c = bar + 3, i = 0; c < line.size() && line[c] != ' '; c += 2, ++i)
      if (line[c] != '.' && line[c] != '-') out[line[c]].insert({static_cast<int>(i), j});
  }
  return out;
}

std::set<ConditionPoint> all_points(const std::vector<ConditionSet>& sets) { return set_union("u", sets).points; }

std::set<ConditionPoint> drawn(const std::string& text) {
  std::set<ConditionPoint> out;
  for (const auto& [g, p] : read_grid(text)) out.insert(p.begin(), p.end());
  return out;
}

}  // namespace

TEST_CASE("ascii figure of the am hypotheses") {
  const int n = 5;
  const std::vector<ConditionSet> sets{segment(Segment::B, 0, n), segment(Segment::A, 0, n),
                                       ConditionSet{"P", {{n - 2, n - 1}}}};
  const auto text = diagram(sets, n, DiagramFormat::Ascii);
  CHECK(drawn(text) == am_set(n).points);
  // sorted by name: A_0 '#', B_0 'o', P '+'
  const auto g = read_grid(text);
  CHECK(g.at('#') == segment(Segment::A, 0, n).points);
  CHECK(g.at('o') == segment(Segment::B, 0, n).points);
  CHECK(g.at('+') == std::set<ConditionPoint>{{3, 4}});
  CHECK(text.find("4 | - - - + -   j = n-1") != std::string::npos);
  CHECK(diagram(sets, n, DiagramFormat::Ascii) == text);
  // input order does not matter
  CHECK(diagram({sets[2], sets[0], sets[1]}, n, DiagramFormat::Ascii) == text);
}

TEST_CASE("empty diagram keeps its axes") {
  const auto text = diagram({}, 3, DiagramFormat::Ascii);
  CHECK(text ==
        "3 | . . .\n"
        "2 | - - -   j = n-1\n"
        "1 | . . .\n"
        "0 | . . .\n"
        "  +------ i\n"
        "    0 1 2\n");
  const auto svg = diagram({}, 3, DiagramFormat::Svg);
  CHECK(svg.find("<title>axes</title>") != std::string::npos);
}

TEST_CASE("figures as point sets") {
  for (int n = 3; n <= 7; ++n) {
    CHECK(drawn(diagram(beilinson_sets(n), n, DiagramFormat::Ascii)) == all_points(beilinson_sets(n)));
    CHECK(drawn(diagram(ottaviani_sets(n), n, DiagramFormat::Ascii)) == ottaviani_inequality_set(n).points);
    for (int k = 0; k <= n - 2; ++k) {
      const auto parts = main_hypotheses_parts(n, k);
      CHECK(drawn(diagram(parts, n, DiagramFormat::Ascii)) == main_hypotheses(n, k).points);
    }
  }
}

TEST_CASE("svg output") {
  const auto sets = beilinson_sets(6);
  const auto svg = diagram(sets, 6, DiagramFormat::Svg);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg.find("<text") == std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  for (const auto& s : sets) CHECK(svg.find("<title>" + s.name + "</title>") != std::string::npos);
  // one filled square per point
  std::size_t squares = 0;
  for (auto pos = svg.find("h10v10h-10z"); pos != std::string::npos; pos = svg.find("h10v10h-10z", pos + 1)) ++squares;
  std::size_t total = 0;
  for (const auto& s : sets) total += s.size();
  CHECK(squares == total);
  CHECK(diagram(sets, 6, DiagramFormat::Svg) == svg);
  CHECK_THROWS_AS(diagram({ConditionSet{"bad", {{-1, 0}}}}, 4, DiagramFormat::Svg), DomainError);
}
