#include "diskcx/curvealg.hpp"

#include <optional>
#include <string>

#include "diskcx/error.hpp"

namespace diskcx {

namespace {

// A ray in the tree cover leaving the lift of a path vertex: forward reads
// path[start], path[start+1], ...; backward reads the reversed darts
// path[start-1], path[start-2], ...
struct Ray {
  const std::vector<Dart>* path;
  int start;
  bool forward;

  Dart at(const RibbonGraph& g, long k) const {
    const long n = static_cast<long>(path->size());
    if (forward) return (*path)[static_cast<std::size_t>((start + k) % n)];
    const long i = ((start - 1 - k) % n + n) % n;
    return g.rev((*path)[static_cast<std::size_t>(i)]);
  }
  long period() const { return static_cast<long>(path->size()); }
};

struct Divergence {
  int steps_a;  // ccw steps from the reference dart at the divergence vertex
  int steps_b;
};

// Follows two rays leaving the same vertex until they take different darts.
// At the first step the reference is `ref`; afterwards it is the dart
// pointing back along the common prefix. Periodic rays that agree for
// longer than the sum of their periods are equal (Fine–Wilf).
std::optional<Divergence> diverge(const RibbonGraph& g, const Ray& a, const Ray& b, Dart ref) {
  const long limit = a.period() + b.period() + 1;
  for (long k = 0; k <= limit; ++k) {
    const Dart da = a.at(g, k), db = b.at(g, k);
    if (da != db) return Divergence{g.ccw_steps(ref, da), g.ccw_steps(ref, db)};
    ref = g.rev(da);
  }
  return std::nullopt;
}

bool ray_less(const RibbonGraph& g, const Ray& a, const Ray& b, Dart ref) {
  auto d = diverge(g, a, b, ref);
  if (!d) throw InvariantError("rays of distinct classes coincide");
  return d->steps_a < d->steps_b;
}

void require_nontrivial(const CyclicWord& w) {
  if (w.trivial()) throw DomainError("nontrivial word", "trivial word has no curve representative");
}

}  // namespace

namespace detail {

int linked_pairs(const RibbonGraph& g, const std::vector<Dart>& u, const std::vector<Dart>& v, bool same) {
  const int n = static_cast<int>(u.size()), m = static_cast<int>(v.size());
  int count = 0;
  for (int i = 0; i < n; ++i) {
    const int vertex = g.tail(u[i]);
    const Dart back_u = g.rev(u[(i + n - 1) % n]);
    for (int j = 0; j < m; ++j) {
      if (same && i == j) continue;
      if (g.tail(v[j]) != vertex) continue;
      const Dart back_v = g.rev(v[(j + m - 1) % m]);
      const Dart fwd_v = v[j];
      // Count each shared segment once, at its first vertex along u.
      if (back_u == back_v || back_u == fwd_v) continue;
      const Ray b{&u, i, true};
      const Ray c{&v, j, false};
      const Ray d{&v, j, true};
      // Circular order cut at u's backward ray; u's ends separate v's ends
      // iff exactly one of v's rays precedes u's forward ray.
      if (ray_less(g, b, c, back_u) != ray_less(g, b, d, back_u)) ++count;
    }
  }
  return count;
}

int side_order(const RibbonGraph& g, const std::vector<Dart>& a, int pos_a, const std::vector<Dart>& b, int pos_b) {
  const Dart d = a[static_cast<std::size_t>(pos_a)];
  if (b[static_cast<std::size_t>(pos_b)] != d) throw InvariantError("side_order: lines do not share the dart");
  const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  const Ray fa{&a, (pos_a + 1) % na, true}, fb{&b, (pos_b + 1) % nb, true};
  const Ray ba{&a, pos_a, false}, bb{&b, pos_b, false};
  auto fwd = diverge(g, fa, fb, g.rev(d));
  auto bwd = diverge(g, ba, bb, d);
  if (!fwd || !bwd) throw InvariantError("parallel strands coincide: curves are not distinct");
  // Forward: fewer ccw steps from the back dart means further right.
  const int by_fwd = fwd->steps_a < fwd->steps_b ? -1 : 1;
  // Backward, measured from the forward dart: fewer steps means further left.
  const int by_bwd = bwd->steps_a < bwd->steps_b ? 1 : -1;
  if (by_fwd != by_bwd) throw InvariantError("strands cross: curves are not disjoint and simple");
  return by_fwd;
}

}  // namespace detail

bool same_class(const CyclicWord& u, const CyclicWord& v) { return canonical(u) == canonical(v); }

bool is_essential(const ChainSurface& s, const CyclicWord& u) {
  if (u.trivial()) return false;
  return !same_class(u, s.boundary_word());
}

int geometric_intersection(const ChainSurface& s, const CyclicWord& u, const CyclicWord& v) {
  require_nontrivial(u);
  require_nontrivial(v);
  const auto ru = primitive_root(canonical(u));
  const auto rv = primitive_root(canonical(v));
  if (same_class(ru.root, rv.root))
    throw DomainError("distinct curve classes", "both words lie in the class of '" + render(canonical(ru.root)) +
                                                    "'; use self-intersection instead");
  const auto pu = s.path_of(ru.root);
  const auto pv = s.path_of(rv.root);
  return ru.exponent * rv.exponent * detail::linked_pairs(s.graph(), pu, pv, false);
}

int self_intersection(const ChainSurface& s, const CyclicWord& u) {
  require_nontrivial(u);
  const auto r = primitive_root(canonical(u));
  const auto p = s.path_of(r.root);
  const int twice = detail::linked_pairs(s.graph(), p, p, true);
  if (twice % 2 != 0) throw InvariantError("odd ordered self-intersection count");
  const int k = r.exponent;
  return k * k * (twice / 2) + k - 1;
}

CurveClass CurveClass::make(const ChainSurface& s, const CyclicWord& w) {
  if (w.trivial()) throw DomainError("nontrivial word", "trivial word is not a curve");
  auto c = canonical(w);
  if (max_generator(c.letters()) > s.rank())
    throw DomainError("generators within g1..g2g", "word '" + render(c) + "' uses a generator beyond g" + std::to_string(s.rank()));
  if (!is_essential(s, c)) throw DomainError("essential curve", "word '" + render(c) + "' is peripheral");
  if (diskcx::self_intersection(s, c) != 0) throw DomainError("simple curve", "word '" + render(c) + "' is not simple");
  return CurveClass(std::move(c));
}

std::vector<int> abelianize(const ChainSurface& s, const CyclicWord& u) {
  std::vector<int> h(static_cast<std::size_t>(s.rank()), 0);
  for (Letter l : u.letters()) h[static_cast<std::size_t>((l < 0 ? -l : l) - 1)] += l < 0 ? -1 : 1;
  return h;
}

int algebraic_intersection(const ChainSurface& s, const CyclicWord& u, const CyclicWord& v) {
  const auto a = abelianize(s, u), b = abelianize(s, v);
  int total = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) total += a[i] * b[i + 1] - a[i + 1] * b[i];
  return total;
}

}  // namespace diskcx
