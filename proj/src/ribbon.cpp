#include "diskcx/ribbon.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "diskcx/error.hpp"

namespace diskcx {

RibbonGraph::RibbonGraph(std::vector<Dart> rev, std::vector<Dart> rot) : rev_(std::move(rev)), rot_(std::move(rot)) {
  const int n = static_cast<int>(rev_.size());
  if (n == 0 || static_cast<int>(rot_.size()) != n)
    throw DomainError("rev and rot act on the same nonempty dart set", "dart tables have mismatched sizes");
  std::vector<char> seen(n, 0);
  for (int d = 0; d < n; ++d) {
    if (rev_[d] < 0 || rev_[d] >= n || rev_[d] == d || rev_[rev_[d]] != d)
      throw DomainError("rev is a fixed-point-free involution", "rev fails at dart " + std::to_string(d));
    if (rot_[d] < 0 || rot_[d] >= n || seen[rot_[d]])
      throw DomainError("rot is a permutation", "rot fails at dart " + std::to_string(d));
    seen[rot_[d]] = 1;
  }
  vertex_of_.assign(n, -1);
  slot_.assign(n, 0);
  for (int d = 0; d < n; ++d) {
    if (vertex_of_[d] >= 0) continue;
    const int v = static_cast<int>(vertex_darts_.size());
    auto& cyc = vertex_darts_.emplace_back();
    for (Dart x = d; vertex_of_[x] < 0; x = rot_[x]) {
      vertex_of_[x] = v;
      slot_[x] = static_cast<int>(cyc.size());
      cyc.push_back(x);
    }
  }
}

int RibbonGraph::ccw_steps(Dart from, Dart to) const {
  const int deg = degree(vertex_of_[from]);
  return ((slot_[to] - slot_[from]) % deg + deg) % deg;
}

int RibbonGraph::genus() const {
  const int b = static_cast<int>(boundary_walks(*this).size());
  const int twice = 2 - euler_characteristic() - b;
  if (twice < 0 || twice % 2 != 0) throw InvariantError("ribbon graph has inconsistent Euler characteristic");
  return twice / 2;
}

std::vector<Walk> boundary_walks(const RibbonGraph& r) {
  std::vector<char> keep(static_cast<std::size_t>(r.num_darts()), 1);
  return sub_boundary_walks(r, keep);
}

std::vector<Walk> sub_boundary_walks(const RibbonGraph& r, std::span<const char> keep) {
  const int n = r.num_darts();
  auto sub_rot = [&](Dart d) {
    Dart x = r.rot(d);
    while (!keep[x]) x = r.rot(x);
    return x;
  };
  std::vector<char> used(n, 0);
  std::vector<Walk> walks;
  for (Dart d = 0; d < n; ++d) {
    if (!keep[d] || used[d]) continue;
    if (!keep[r.rev(d)]) throw DomainError("sub-ribbon graph closed under rev", "kept dart without its reverse");
    Walk w;
    for (Dart x = d; !used[x]; x = sub_rot(r.rev(x))) {
      used[x] = 1;
      w.darts.push_back(x);
    }
    walks.push_back(std::move(w));
  }
  return walks;
}

void Interval::validate(int genus) const {
  if (j < 1 || m < j || m > 2 * genus)
    throw DomainError("interval 1 <= j <= m <= 2g",
                      "interval " + std::to_string(j) + "-" + std::to_string(m) + " is empty or out of range");
  if (j == 1 && m == 2 * genus)
    throw DomainError("interval is a proper subset of {1..2g}",
                      "interval 1-" + std::to_string(m) + " is the full index set");
}

std::vector<Interval> proper_intervals(int genus) {
  std::vector<Interval> out;
  for (int j = 1; j <= 2 * genus; ++j)
    for (int m = j; m <= 2 * genus; ++m)
      if (!(j == 1 && m == 2 * genus)) out.push_back({j, m});
  return out;
}

ChainSurface ChainSurface::standard(int genus) {
  if (genus < 2) throw DomainError("-chi >= 2 (genus >= 2)", "chain surface needs genus >= 2, got " + std::to_string(genus));
  const int n_circles = 2 * genus;
  // Dart layout: loops z'_1, z'_2g carry (c+, c-); middle circles carry (f+, f-, c+, c-).
  std::vector<int> first(n_circles + 2, 0);
  int next = 0;
  for (int i = 1; i <= n_circles; ++i) {
    first[i] = next;
    next += (i == 1 || i == n_circles) ? 2 : 4;
  }
  const int n = next;
  std::vector<Dart> rev(n), rot(n, -1);
  std::vector<int> gen(n, 0), circle(n, 0);
  for (int i = 1; i <= n_circles; ++i) {
    const int b = first[i];
    if (i == 1 || i == n_circles) {
      rev[b] = b + 1;
      rev[b + 1] = b;
      gen[b] = i;
      gen[b + 1] = -i;
      circle[b] = circle[b + 1] = i;
    } else {
      rev[b] = b + 1;  // f_i: p_{i-1} -> p_i
      rev[b + 1] = b;
      rev[b + 2] = b + 3;  // c_i: p_i -> p_{i-1}
      rev[b + 3] = b + 2;
      gen[b + 2] = i;
      gen[b + 3] = -i;
      for (int k = 0; k < 4; ++k) circle[b + k] = i;
    }
  }
  // Vertex p_k sits where z'_k ends and z'_{k+1} starts; darts alternate
  // (z'_k in, z'_{k+1} in, z'_k out, z'_{k+1} out).
  for (int k = 1; k <= n_circles - 1; ++k) {
    const int bk = first[k], bn = first[k + 1];
    Dart in_k, out_k, in_n, out_n;
    if (k == 1) {
      out_k = bk;
      in_k = bk + 1;
    } else {
      in_k = bk + 1;   // f_k-
      out_k = bk + 2;  // c_k+
    }
    if (k + 1 == n_circles) {
      out_n = bn;
      in_n = bn + 1;
    } else {
      out_n = bn;     // f_{k+1}+
      in_n = bn + 3;  // c_{k+1}-
    }
    rot[in_k] = in_n;
    rot[in_n] = out_k;
    rot[out_k] = out_n;
    rot[out_n] = in_k;
  }
  return from_parts(RibbonGraph(std::move(rev), std::move(rot)), genus, std::move(gen), std::move(circle));
}

ChainSurface ChainSurface::from_parts(RibbonGraph graph, int genus, std::vector<int> dart_generator,
                                      std::vector<int> dart_circle) {
  if (genus < 2) throw DomainError("-chi >= 2 (genus >= 2)", "chain surface needs genus >= 2, got " + std::to_string(genus));
  const int n = graph.num_darts();
  if (static_cast<int>(dart_generator.size()) != n || static_cast<int>(dart_circle.size()) != n)
    throw DomainError("labels cover every dart", "label tables have the wrong size");
  ChainSurface s;
  s.graph_ = std::move(graph);
  s.genus_ = genus;
  s.dart_generator_ = std::move(dart_generator);
  s.dart_circle_ = std::move(dart_circle);
  s.finish();
  return s;
}

void ChainSurface::finish() {
  const auto& g = graph_;
  const int n = g.num_darts();
  const int r = rank();
  auto fail = [](const std::string& what) { throw DomainError("chain surface invariants", what); };

  chord_.assign(r + 1, -1);
  for (Dart d = 0; d < n; ++d) {
    const int x = dart_generator_[d];
    if (x < -r || x > r) fail("generator label out of range");
    if (dart_generator_[g.rev(d)] != -x) fail("generator labels are not antisymmetric under rev");
    if (x > 0) {
      if (chord_[x] >= 0) fail("generator g" + std::to_string(x) + " labels two chords");
      chord_[x] = d;
    }
    if (dart_circle_[d] < 1 || dart_circle_[d] > r || dart_circle_[g.rev(d)] != dart_circle_[d])
      fail("circle labels invalid");
  }
  for (int i = 1; i <= r; ++i)
    if (chord_[i] < 0) fail("generator g" + std::to_string(i) + " has no chord");

  // One boundary walk and the expected Euler characteristic.
  if (g.euler_characteristic() != 1 - 2 * genus_) fail("Euler characteristic is not 1-2g");
  if (boundary_walks(g).size() != 1) fail("surface must have exactly one boundary walk");

  // Transversality: every vertex has degree 4 alternating between two circles.
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& ds = g.vertex_darts(v);
    if (ds.size() != 4) fail("chain vertex without degree 4");
    const int a = dart_circle_[ds[0]], b = dart_circle_[ds[1]];
    if (a == b || dart_circle_[ds[2]] != a || dart_circle_[ds[3]] != b) fail("circles do not alternate at a vertex");
    if (std::abs(a - b) != 1) fail("non-consecutive chain circles meet");
  }

  // Tree darts form a spanning tree; BFS from the vertex carrying g1's chord.
  base_vertex_ = g.tail(chord_[1]);
  tree_path_.assign(g.num_vertices(), {});
  std::vector<char> reached(g.num_vertices(), 0);
  std::queue<int> q;
  q.push(base_vertex_);
  reached[base_vertex_] = 1;
  int tree_darts = 0;
  for (Dart d = 0; d < n; ++d) tree_darts += dart_generator_[d] == 0;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (Dart d : g.vertex_darts(v)) {
      if (dart_generator_[d] != 0 || reached[g.head(d)]) continue;
      reached[g.head(d)] = 1;
      tree_path_[g.head(d)] = tree_path_[v];
      tree_path_[g.head(d)].push_back(d);
      q.push(g.head(d));
    }
  }
  if (std::count(reached.begin(), reached.end(), 1) != g.num_vertices() || tree_darts != 2 * (g.num_vertices() - 1))
    fail("tree darts do not form a spanning tree");

  // Each circle is a closed cycle whose word is a conjugate of its generator.
  for (int i = 1; i <= r; ++i) {
    const auto w = word_of_walk(core_walk(i));
    if (w.letters().size() != 1 || w.letters()[0] != i) fail("circle z'" + std::to_string(i) + " does not spell g" + std::to_string(i));
  }

  boundary_word_ = word_of_walk(boundary_walks(g).front());
}

Walk ChainSurface::core_walk(int i) const {
  if (i < 1 || i > rank()) throw DomainError("circle index 1 <= i <= 2g", "no circle z'" + std::to_string(i));
  const auto& g = graph_;
  Walk w;
  Dart d = chord_[i];
  for (int guard = 0; guard <= g.num_darts(); ++guard) {
    w.darts.push_back(d);
    Dart nxt = -1;
    for (Dart x : g.vertex_darts(g.head(d)))
      if (dart_circle_[x] == i && x != g.rev(d)) nxt = x;
    if (nxt < 0) throw DomainError("chain surface invariants", "circle z'" + std::to_string(i) + " is not a closed cycle");
    if (nxt == chord_[i]) break;
    d = nxt;
  }
  // Present tree edges first, so z'_i reads f_i c_i.
  auto it = std::find_if(w.darts.begin(), w.darts.end(), [&](Dart x) { return dart_generator_[x] == 0; });
  if (it != w.darts.end()) std::rotate(w.darts.begin(), it, w.darts.end());
  return w;
}

CyclicWord ChainSurface::word_of_walk(std::span<const Dart> darts) const {
  std::vector<Letter> raw;
  for (Dart d : darts)
    if (dart_generator_[d] != 0) raw.push_back(dart_generator_[d]);
  return cyclic_reduce(raw);
}

std::vector<Walk> ChainSurface::subgraph_boundary_walks(const Interval& J) const {
  J.validate(genus_);
  std::vector<char> keep(static_cast<std::size_t>(graph_.num_darts()));
  for (Dart d = 0; d < graph_.num_darts(); ++d) keep[d] = J.contains(dart_circle_[d]);
  return sub_boundary_walks(graph_, keep);
}

std::vector<Dart> ChainSurface::path_of(const CyclicWord& w) const {
  const auto& g = graph_;
  std::vector<Dart> raw;
  auto push_back_path = [&](int v) {  // tree path v -> base
    const auto& p = tree_path_[v];
    for (auto it = p.rbegin(); it != p.rend(); ++it) raw.push_back(g.rev(*it));
  };
  for (Letter l : w.letters()) {
    const int i = l < 0 ? -l : l;
    if (i > rank()) throw DomainError("generators within g1..g2g", "generator g" + std::to_string(i) + " exceeds 2g");
    const Dart c = l > 0 ? chord_[i] : g.rev(chord_[i]);
    raw.insert(raw.end(), tree_path_[g.tail(c)].begin(), tree_path_[g.tail(c)].end());
    raw.push_back(c);
    push_back_path(g.head(c));
  }
  std::vector<Dart> out;
  for (Dart d : raw) {
    if (!out.empty() && out.back() == g.rev(d))
      out.pop_back();
    else
      out.push_back(d);
  }
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo] == g.rev(out[hi - 1])) {
    ++lo;
    --hi;
  }
  return {out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi)};
}

}  // namespace diskcx
