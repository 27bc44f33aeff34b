#include "diskcx/split.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string_view>
#include <tuple>

#include "diskcx/bbm.hpp"
#include "diskcx/error.hpp"

namespace diskcx {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

struct Strand {
  int curve;
  const std::vector<Dart>* path;  // the curve's path or its reverse
  int pos;                        // path[pos] is the band's reference dart
  int orig_pos;                   // position in the curve's own path
};

void validate_cycle(const RibbonGraph& g, const std::vector<Dart>& p) {
  const char* pre = "closed reduced dart path";
  if (p.empty()) throw DomainError(pre, "empty curve");
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Dart d = p[i], e = p[(i + 1) % n];
    if (d < 0 || d >= g.num_darts()) throw DomainError(pre, "dart out of range");
    if (e < 0 || e >= g.num_darts()) throw DomainError(pre, "dart out of range");
    if (g.head(d) != g.tail(e)) throw DomainError(pre, "consecutive darts do not meet");
    if (e == g.rev(d)) throw DomainError(pre, "path backtracks");
  }
}

}  // namespace

CellSurface::CellSurface(RibbonGraph g) : graph_(std::move(g)) {
  boundary_count_ = static_cast<int>(boundary_walks(graph_).size());
}

SplitReport cut_along(const CellSurface& s, const std::vector<std::vector<Dart>>& cycles) {
  const RibbonGraph& g = s.graph();
  const int nd = g.num_darts();
  const int nc = static_cast<int>(cycles.size());
  if (nc == 0) throw DomainError("at least one curve", "no curves to cut along");
  for (const auto& p : cycles) validate_cycle(g, p);

  std::vector<std::vector<Dart>> reversed(cycles.size());
  for (int c = 0; c < nc; ++c) {
    const auto& p = cycles[c];
    for (auto it = p.rbegin(); it != p.rend(); ++it) reversed[c].push_back(g.rev(*it));
  }

  // Strands per edge, keyed by the edge's smaller dart.
  std::vector<std::vector<Strand>> band(static_cast<std::size_t>(nd));
  for (int c = 0; c < nc; ++c) {
    const int n = static_cast<int>(cycles[c].size());
    for (int p = 0; p < n; ++p) {
      const Dart d = cycles[c][p];
      if (d < g.rev(d))
        band[d].push_back({c, &cycles[c], p, p});
      else
        band[g.rev(d)].push_back({c, &reversed[c], n - 1 - p, p});
    }
  }
  // index_along[c][p]: slot of the strand at position p, counted from the
  // right when looking along cycles[c][p].
  std::vector<std::vector<int>> index_along(cycles.size());
  for (int c = 0; c < nc; ++c) index_along[c].assign(cycles[c].size(), -1);
  std::vector<int> width(static_cast<std::size_t>(nd), 0);
  for (Dart d0 = 0; d0 < nd; ++d0) {
    auto& b = band[d0];
    if (d0 > g.rev(d0)) continue;
    try {
      std::sort(b.begin(), b.end(), [&](const Strand& x, const Strand& y) {
        if (x.path == y.path && x.pos == y.pos) return false;
        return detail::side_order(g, *x.path, x.pos, *y.path, y.pos) < 0;
      });
    } catch (const InvariantError& e) {
      throw DomainError("disjoint simple curves", std::string("curves cannot be realized disjointly: ") + e.what());
    }
    const int k = static_cast<int>(b.size());
    width[d0] = width[g.rev(d0)] = k;
    for (int r = 0; r < k; ++r) {
      const Strand& st = b[r];
      index_along[st.curve][st.orig_pos] = cycles[st.curve][st.orig_pos] == d0 ? r : k - 1 - r;
    }
  }

  // Strip ids: gap s of an edge looking along its smaller dart.
  std::vector<int> strip_base(static_cast<std::size_t>(nd), 0);
  int strips = 0;
  for (Dart d0 = 0; d0 < nd; ++d0)
    if (d0 < g.rev(d0)) {
      strip_base[d0] = strips;
      strips += width[d0] + 1;
    }
  auto gap = [&](Dart d, int slot) {
    const Dart d0 = std::min(d, g.rev(d));
    return strip_base[d0] + (d == d0 ? slot : width[d] - slot);
  };

  // Vertex disks, cut by chords into regions. Node ids: strips first.
  std::vector<std::pair<int, int>> gluing;  // (strip, region)
  int regions = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& darts = g.vertex_darts(v);
    std::vector<int> offset(darts.size());
    int points = 0;
    for (std::size_t i = 0; i < darts.size(); ++i) {
      offset[i] = points;
      points += width[darts[i]];
    }
    auto point_of = [&](Dart d, int slot) {
      const auto it = std::find(darts.begin(), darts.end(), d);
      return offset[static_cast<std::size_t>(it - darts.begin())] + slot;
    };
    std::vector<int> partner(static_cast<std::size_t>(points), -1);
    for (int c = 0; c < nc; ++c) {
      const auto& p = cycles[c];
      const int n = static_cast<int>(p.size());
      for (int i = 0; i < n; ++i) {
        if (g.tail(p[i]) != v) continue;
        const int prev = (i + n - 1) % n;
        const Dart in = g.rev(p[prev]);
        const int a = point_of(in, width[in] - 1 - index_along[c][prev]);
        const int b = point_of(p[i], index_along[c][i]);
        if (partner[a] != -1 || partner[b] != -1) throw InvariantError("strand endpoint used twice");
        partner[a] = b;
        partner[b] = a;
      }
    }
    std::vector<int> stack;
    for (int i = 0; i < points; ++i) {
      if (partner[i] > i) {
        stack.push_back(i);
      } else {
        if (stack.empty() || stack.back() != partner[i])
          throw DomainError("disjoint simple curves", "curves cross inside a vertex disk");
        stack.pop_back();
      }
    }
    // Arc i runs from point i to point i+1; with no points there is one arc.
    const int arcs = std::max(points, 1);
    UnionFind uf(arcs);
    for (int a = 0; a < points; ++a) {
      const int b = partner[a];
      if (b < a) continue;
      uf.unite(a, b - 1);
      uf.unite(b, (a + points - 1) % points);
    }
    std::vector<int> region_of(static_cast<std::size_t>(arcs), -1);
    for (int i = 0; i < arcs; ++i) {
      const int r = uf.find(i);
      if (region_of[r] == -1) region_of[r] = regions++;
      region_of[i] = region_of[r];
    }
    int last = arcs - 1;
    for (std::size_t i = 0; i < darts.size(); ++i) {
      const Dart d = darts[i];
      for (int slot = 0; slot <= width[d]; ++slot) {
        gluing.emplace_back(gap(d, slot), region_of[last]);
        if (slot < width[d]) last = offset[i] + slot;
      }
    }
  }

  UnionFind uf(strips + regions);
  for (auto [strip, region] : gluing) uf.unite(strip, strips + region);
  std::vector<int> comp_of(static_cast<std::size_t>(strips + regions), -1);
  int t = 0;
  for (int i = 0; i < strips + regions; ++i) {
    const int r = uf.find(i);
    if (comp_of[r] == -1) comp_of[r] = t++;
    comp_of[i] = comp_of[r];
  }
  std::vector<int> euler(static_cast<std::size_t>(t), 0), bnd(static_cast<std::size_t>(t), 0), orig(static_cast<std::size_t>(t), 0);
  for (int i = 0; i < strips; ++i) --euler[comp_of[i]];
  for (int i = 0; i < regions; ++i) ++euler[comp_of[strips + i]];
  for (const auto& w : boundary_walks(g)) {
    const Dart back = g.rev(w.darts.front());
    const int c = comp_of[gap(back, width[back])];
    ++bnd[c];
    ++orig[c];
  }
  std::vector<std::pair<int, int>> sides;
  for (int c = 0; c < nc; ++c) {
    const auto& p = cycles[c];
    std::pair<int, int> lr{-1, -1};
    for (std::size_t i = 0; i < p.size(); ++i) {
      const std::pair<int, int> here{comp_of[gap(p[i], index_along[c][i] + 1)], comp_of[gap(p[i], index_along[c][i])]};
      if (i == 0) lr = here;
      if (here != lr) throw InvariantError("curve side lies in two components");
    }
    ++bnd[lr.first];
    ++bnd[lr.second];
    sides.push_back(lr);
  }

  std::vector<SplitComponent> comps(static_cast<std::size_t>(t));
  for (int c = 0; c < t; ++c) {
    const int twice = 2 - euler[c] - bnd[c];
    if (twice < 0 || twice % 2 != 0) throw InvariantError("component has non-integral genus");
    comps[c] = {twice / 2, bnd[c], euler[c]};
    if (euler[c] == 1) throw DomainError("essential curves", "a curve bounds a disk");
    if (euler[c] == 0 && bnd[c] == 2)
      throw DomainError(orig[c] ? "essential curves" : "pairwise non-isotopic curves",
                        orig[c] ? "a curve is parallel to the boundary" : "two curves are parallel");
  }

  std::vector<int> order(static_cast<std::size_t>(t));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::tie(comps[b].genus, comps[b].boundary) < std::tie(comps[a].genus, comps[a].boundary);
  });
  std::vector<int> rank(static_cast<std::size_t>(t));
  SplitReport out;
  out.ambient_genus = s.genus();
  out.ambient_boundary = s.boundary_count();
  out.curves = nc;
  for (int i = 0; i < t; ++i) {
    rank[order[i]] = i;
    out.components.push_back(comps[order[i]]);
  }
  for (auto [l, r] : sides) out.sides.emplace_back(rank[l], rank[r]);
  out.cells.nodes = strips + regions;
  for (auto [strip, region] : gluing) out.cells.arcs.emplace_back(strip, strips + region);
  for (int i = 0; i < strips + regions; ++i) out.cells.component.push_back(rank[comp_of[i]]);

  int chi = 0, b = 0;
  for (const auto& c : out.components) {
    chi += c.euler;
    b += c.boundary;
  }
  out.euler_additive = chi == s.euler_characteristic();
  out.boundary_count = b == 2 * nc + s.boundary_count();
  if (!out.euler_additive || !out.boundary_count) throw InvariantError("cut violates Euler or boundary bookkeeping");
  return out;
}

SplitReport cut_along(const ChainSurface& s, const std::vector<CurveClass>& curves) {
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      const auto& u = curves[i].word();
      const auto& v = curves[j].word();
      if (same_class(u, v)) throw DomainError("pairwise distinct curves", "curve '" + render(u) + "' is listed twice");
      if (geometric_intersection(s, u, v) != 0)
        throw DomainError("pairwise disjoint curves", "'" + render(u) + "' and '" + render(v) + "' intersect");
    }
  std::vector<std::vector<Dart>> paths;
  for (const auto& c : curves) paths.push_back(s.path_of(c.word()));
  return cut_along(CellSurface(s.graph()), paths);
}

CurveClass named_curve(const ChainSurface& s, const std::string& name) {
  const char* pre = "curve name z<i> or x:<j>-<m>";
  auto number = [&](std::string_view text) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
      throw DomainError(pre, "bad curve name '" + name + "'");
    return v;
  };
  const std::string_view n = name;
  if (n.size() > 1 && n[0] == 'z') {
    const int i = number(n.substr(1));
    if (i < 1 || i > s.rank())
      throw DomainError("1 <= i <= 2g", "curve '" + name + "' is not a chain circle at genus " + std::to_string(s.genus()));
    const Letter l = i;
    return CurveClass::make(s, canonical(std::span<const Letter>(&l, 1)));
  }
  if (n.size() > 2 && n.substr(0, 2) == "x:") {
    const auto rest = n.substr(2);
    const auto dash = rest.find('-');
    if (dash == std::string_view::npos) throw DomainError(pre, "bad curve name '" + name + "'");
    const Interval J{number(rest.substr(0, dash)), number(rest.substr(dash + 1))};
    return x_curve(s, J).curve;
  }
  throw DomainError(pre, "bad curve name '" + name + "'");
}

bool bookkeeping_check(const SplitReport& r) {
  if (r.components.empty() || r.curves < 1) return false;
  const int k = r.curves - 1;
  const int t = static_cast<int>(r.components.size());
  int chi = 0, b = 0, genera = 0;
  for (const auto& c : r.components) {
    chi += 2 - 2 * c.genus - c.boundary;
    b += c.boundary;
    genera += c.genus;
  }
  bool ok = chi == 2 - 2 * r.ambient_genus - r.ambient_boundary;
  ok = ok && b == 2 * (k + 1) + r.ambient_boundary;
  if (r.ambient_boundary == 0) ok = ok && r.ambient_genus == k - t + 2 + genera;
  return ok;
}

Dims dims(int genus, int boundary) {
  if (genus < 0 || boundary < 0) throw DomainError("g >= 0 and b >= 0", "negative genus or boundary count");
  const int minus_chi = 2 * genus - 2 + boundary;
  if (minus_chi < 2)
    throw DomainError("-chi >= 2", "-chi = " + std::to_string(minus_chi) + " for (g, b) = (" + std::to_string(genus) + ", " +
                                      std::to_string(boundary) + "); the disk complex is empty");
  Dims d;
  if (genus == 0)
    d.d_dim = boundary - 4;
  else
    d.d_dim = boundary == 0 ? 2 * genus - 2 : 2 * genus - 3 + boundary;
  d.d_conn = boundary == 0 ? minus_chi : boundary == 1 ? minus_chi - 1 : minus_chi - 2;
  return d;
}

}  // namespace diskcx
