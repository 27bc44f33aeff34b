#include "diskcx/scomplex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "diskcx/error.hpp"
#include "diskcx/kernels.hpp"

namespace diskcx {

namespace {

bool is_subset(const Simplex& small, const Simplex& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> facets) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw DomainError("facets have distinct vertices", "facet repeats a vertex");
    if (f.empty()) throw DomainError("facets are nonempty", "empty facet");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  // Larger facets first; index kept facets by their vertices.
  std::vector<std::size_t> order(facets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return facets[a].size() > facets[b].size(); });
  std::map<int, std::vector<std::size_t>> containing;
  std::vector<char> keep(facets.size(), 0);
  for (auto i : order) {
    const auto& f = facets[i];
    bool covered = false;
    for (auto k : containing[f.front()])
      if (facets[k].size() > f.size() && is_subset(f, facets[k])) {
        covered = true;
        break;
      }
    if (covered) continue;
    keep[i] = 1;
    for (int v : f) containing[v].push_back(i);
  }
  SimplicialComplex c;
  for (std::size_t i = 0; i < facets.size(); ++i)
    if (keep[i]) c.facets_.push_back(std::move(facets[i]));
  for (const auto& f : c.facets_) c.vertices_.insert(c.vertices_.end(), f.begin(), f.end());
  std::sort(c.vertices_.begin(), c.vertices_.end());
  c.vertices_.erase(std::unique(c.vertices_.begin(), c.vertices_.end()), c.vertices_.end());
  return c;
}

int SimplicialComplex::dimension() const noexcept {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

std::vector<std::vector<Simplex>> SimplicialComplex::faces(int max_dim) const {
  const int top = max_dim < 0 ? dimension() : std::min(max_dim, dimension());
  std::vector<std::vector<Simplex>> out(static_cast<std::size_t>(std::max(top + 1, 0)));
  for (const auto& f : facets_) {
    const int n = static_cast<int>(f.size());
    const unsigned long limit = 1UL << n;
    for (unsigned long mask = 1; mask < limit; ++mask) {
      const int k = __builtin_popcountl(mask) - 1;
      if (k > top) continue;
      Simplex s;
      s.reserve(static_cast<std::size_t>(k + 1));
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1UL) s.push_back(f[i]);
      out[k].push_back(std::move(s));
    }
  }
  for (auto& level : out) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  return out;
}

std::vector<long> SimplicialComplex::f_vector() const {
  std::vector<long> f;
  for (const auto& level : faces()) f.push_back(static_cast<long>(level.size()));
  return f;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0, sign = 1;
  for (long n : f_vector()) {
    chi += sign * n;
    sign = -sign;
  }
  return chi;
}

SimplicialComplex SimplicialComplex::relabeled(const std::vector<std::pair<int, int>>& mapping) const {
  std::map<int, int> m(mapping.begin(), mapping.end());
  std::vector<int> images;
  for (int v : vertices_) {
    auto it = m.find(v);
    if (it == m.end()) throw DomainError("relabeling covers every vertex", "vertex " + std::to_string(v) + " has no image");
    images.push_back(it->second);
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end())
    throw DomainError("relabeling is injective", "two vertices share an image");
  std::vector<Simplex> fs = facets_;
  for (auto& f : fs)
    for (auto& v : f) v = m.at(v);
  return from_facets(std::move(fs));
}

namespace {

struct Adjacency {
  std::vector<std::vector<int>> nbrs;  // by dense index, sorted
};

Adjacency build_adjacency(const std::vector<int>& vertices, const std::vector<std::pair<int, int>>& edges,
                          std::map<int, int>& index) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (!index.emplace(vertices[i], static_cast<int>(i)).second) throw DomainError("simple graph", "duplicate vertex id");
  Adjacency adj;
  adj.nbrs.resize(vertices.size());
  for (auto [a, b] : edges) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end()) throw DomainError("edges join listed vertices", "edge endpoint not in vertex list");
    if (a == b) throw DomainError("simple graph", "self-loop on vertex " + std::to_string(a));
    adj.nbrs[ia->second].push_back(ib->second);
    adj.nbrs[ib->second].push_back(ia->second);
  }
  for (auto& n : adj.nbrs) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
  }
  return adj;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Bron–Kerbosch with Tomita pivoting; `visit` sees every maximal clique.
template <class Visit>
void bron_kerbosch(const Adjacency& adj, std::vector<int>& r, std::vector<int> p, std::vector<int> x, Visit& visit) {
  if (p.empty() && x.empty()) {
    visit(r);
    return;
  }
  int pivot = -1;
  std::size_t best = 0;
  for (const auto* set : {&p, &x})
    for (int u : *set) {
      const std::size_t k = intersect(adj.nbrs[u], p).size();
      if (pivot < 0 || k > best) {
        pivot = u;
        best = k;
      }
    }
  std::vector<int> candidates;
  std::set_difference(p.begin(), p.end(), adj.nbrs[pivot].begin(), adj.nbrs[pivot].end(), std::back_inserter(candidates));
  for (int v : candidates) {
    r.push_back(v);
    bron_kerbosch(adj, r, intersect(p, adj.nbrs[v]), intersect(x, adj.nbrs[v]), visit);
    r.pop_back();
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

}  // namespace

SimplicialComplex flag_from_graph(const std::vector<int>& vertices, const std::vector<std::pair<int, int>>& edges) {
  std::map<int, int> index;
  const auto adj = build_adjacency(vertices, edges, index);
  std::vector<Simplex> facets;
  std::vector<int> r, p(vertices.size());
  std::iota(p.begin(), p.end(), 0);
  auto visit = [&](const std::vector<int>& clique) {
    Simplex s;
    for (int i : clique) s.push_back(vertices[i]);
    facets.push_back(std::move(s));
  };
  bron_kerbosch(adj, r, p, {}, visit);
  return SimplicialComplex::from_facets(std::move(facets));
}

int max_clique_size(const std::vector<int>& vertices, const std::vector<std::pair<int, int>>& edges) {
  std::map<int, int> index;
  const auto adj = build_adjacency(vertices, edges, index);
  std::size_t best = 0;
  std::vector<int> r, p(vertices.size());
  std::iota(p.begin(), p.end(), 0);
  auto visit = [&](const std::vector<int>& clique) { best = std::max(best, clique.size()); };
  bron_kerbosch(adj, r, p, {}, visit);
  return static_cast<int>(best);
}

IntegerMatrix boundary_matrix(const std::vector<Simplex>& k_faces, const std::vector<Simplex>& lower_faces) {
  return kernels::boundary_matrix(k_faces, lower_faces, kernels::Exec::parallel);
}

bool HomologyProfile::is_homology_sphere(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(degrees.size())) return false;
  for (int k = 0; k < static_cast<int>(degrees.size()); ++k) {
    const auto& h = degrees[k];
    if (k == dim ? (h.betti != 1 || !h.torsion.empty()) : !h.trivial()) return false;
  }
  return true;
}

long HomologyProfile::euler_characteristic() const {
  long chi = 1, sign = 1;
  for (const auto& h : degrees) {
    chi += sign * h.betti;
    sign = -sign;
  }
  return chi;
}

std::string HomologyProfile::summary() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    if (k) os << ", ";
    const auto& h = degrees[k];
    if (h.trivial()) {
      os << '0';
      continue;
    }
    bool first = true;
    if (h.betti > 0) {
      os << (h.betti == 1 ? std::string("Z") : "Z^" + std::to_string(h.betti));
      first = false;
    }
    for (const auto& t : h.torsion) {
      os << (first ? "" : "+") << "Z/" << t.get_str();
      first = false;
    }
  }
  os << ')';
  return os.str();
}

HomologyProfile reduced_homology(const SimplicialComplex& c, int max_degree) {
  HomologyProfile out;
  if (c.empty()) return out;
  const int dim = c.dimension();
  const int top = max_degree < 0 ? dim : std::min(max_degree, dim);
  const auto faces = c.faces(std::min(top + 1, dim));
  const int levels = static_cast<int>(faces.size());
  // Smith forms of ∂_k for k = 0..levels-1 (∂_0 is the augmentation).
  std::vector<SmithForm> snf(static_cast<std::size_t>(levels));
  for (int k = 0; k < levels; ++k) {
    static const std::vector<Simplex> none;
    snf[k] = smith_normal_form(boundary_matrix(faces[k], k == 0 ? none : faces[k - 1]));
  }
  for (int k = 0; k <= top; ++k) {
    HomologyGroup h;
    const long rank_out = static_cast<long>(snf[k].rank);
    const long rank_in = k + 1 < levels ? static_cast<long>(snf[k + 1].rank) : 0;
    h.betti = static_cast<long>(faces[k].size()) - rank_out - rank_in;
    if (k + 1 < levels) h.torsion = snf[k + 1].torsion();
    if (h.betti < 0) throw InvariantError("negative Betti number");
    out.degrees.push_back(std::move(h));
  }
  return out;
}

PseudomanifoldReport pseudomanifold_check(const SimplicialComplex& c, int dim) {
  PseudomanifoldReport rep;
  const auto& fs = c.facets();
  rep.pure = !fs.empty() && std::all_of(fs.begin(), fs.end(), [&](const Simplex& f) { return static_cast<int>(f.size()) == dim + 1; });
  std::map<Simplex, std::vector<int>> ridges;
  for (int i = 0; i < static_cast<int>(fs.size()); ++i)
    for (std::size_t drop = 0; drop < fs[i].size(); ++drop) {
      if (fs[i].size() < 2) continue;
      Simplex r = fs[i];
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(drop));
      ridges[r].push_back(i);
    }
  UnionFind uf(fs.size());
  for (const auto& [r, owners] : ridges) {
    if (owners.size() != 2) ++rep.bad_ridges;
    for (std::size_t k = 1; k < owners.size(); ++k) uf.unite(owners[0], owners[k]);
  }
  rep.ridges_in_two_facets = rep.pure && rep.bad_ridges == 0;
  for (int i = 0; i < static_cast<int>(fs.size()); ++i) rep.components += uf.find(i) == i;
  rep.facets_connected = rep.components == 1;
  return rep;
}

}  // namespace diskcx
