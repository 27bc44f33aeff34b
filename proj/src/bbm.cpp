#include "diskcx/bbm.hpp"

#include <algorithm>
#include <map>

#include "diskcx/error.hpp"

namespace diskcx {

std::string to_string(OddComponentRule r) { return r == OddComponentRule::least_word ? "least-word" : "other-word"; }

XCurve x_curve(const ChainSurface& s, const Interval& J, OddComponentRule rule) {
  J.validate(s.genus());
  const auto walks = s.subgraph_boundary_walks(J);
  const std::size_t expected = J.size() % 2 == 0 ? 1 : 2;
  if (walks.size() != expected) throw InvariantError("N_J has an unexpected number of boundary components");

  std::vector<CyclicWord> components, qualifying;
  const HandleSide side = predicted_side(J);
  for (const auto& w : walks) {
    const auto word = s.word_of_walk(w);
    if (!is_essential(s, word)) throw InvariantError("boundary of N_J is trivial or peripheral");
    auto c = canonical(word);
    components.push_back(c);
    if (side_image(c, side).trivial()) qualifying.push_back(c);
  }
  std::sort(components.begin(), components.end());
  if (qualifying.empty()) throw InvariantError("no boundary component of N_J bounds a disk on the predicted side");
  std::sort(qualifying.begin(), qualifying.end());
  qualifying.erase(std::unique(qualifying.begin(), qualifying.end()), qualifying.end());
  const bool ambiguous = qualifying.size() > 1;
  const CyclicWord& pick = rule == OddComponentRule::other_word ? qualifying.back() : qualifying.front();
  auto curve = [&] {
    try {
      return CurveClass::make(s, pick);
    } catch (const DomainError& e) {
      throw InvariantError(std::string("x_J is not an essential simple curve: ") + e.what());
    }
  }();
  const SideSet sides = bounds_disk_sides(s, curve);
  if (!sides.contains(side)) throw InvariantError("x_J misses its predicted side");
  return {std::move(curve), sides, std::move(components), ambiguous};
}

std::vector<BBMVertex> bbm_vertices(const ChainSurface& s, OddComponentRule rule) {
  std::vector<BBMVertex> out;
  std::map<CyclicWord, Interval> seen;
  for (const auto& J : proper_intervals(s.genus())) {
    auto x = x_curve(s, J, rule);
    auto [it, fresh] = seen.emplace(x.curve.word(), J);
    if (!fresh)
      throw InvariantError("intervals " + std::to_string(it->second.j) + "-" + std::to_string(it->second.m) + " and " +
                           std::to_string(J.j) + "-" + std::to_string(J.m) + " give the same class");
    out.push_back({J, std::move(x)});
  }
  const std::size_t g = static_cast<std::size_t>(s.genus());
  if (out.size() != g * (2 * g + 1) - 1) throw InvariantError("BBM vertex count is not g(2g+1)-1");
  return out;
}

BBMComplex build_X(const ChainSurface& s, OddComponentRule rule, kernels::Exec exec) {
  BBMComplex out;
  out.genus = s.genus();
  out.rule = rule;
  out.vertices = bbm_vertices(s, rule);
  std::vector<CyclicWord> words;
  for (const auto& v : out.vertices) {
    words.push_back(v.x.curve.word());
    out.ambiguous_choices += v.x.ambiguous;
  }
  out.intersections = kernels::intersection_table(s, words, exec);
  const int n = static_cast<int>(words.size());
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    ids[i] = i;
    if (out.intersections[static_cast<std::size_t>(i * n + i)] != 0) throw InvariantError("BBM vertex is not simple");
    for (int j = i + 1; j < n; ++j)
      if (out.intersections[static_cast<std::size_t>(i * n + j)] == 0) out.edges.emplace_back(i, j);
  }
  out.complex = flag_from_graph(ids, out.edges);
  return out;
}

}  // namespace diskcx
