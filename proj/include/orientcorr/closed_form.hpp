#pragma once

// Closed-form correlations on cycles and forests.

#include <stdexcept>
#include <string>

#include "orientcorr/dyadic.hpp"
#include "orientcorr/enumerate.hpp"
#include "orientcorr/graph.hpp"

namespace orientcorr {

/// Triple on C_n given by arc lengths: c edges from a to s, d edges from s to
/// b, and n - c - d edges from b back to a.
struct CycleTriple {
  unsigned n = 0;
  unsigned c = 0;
  unsigned d = 0;
};

inline void validate(const CycleTriple &t) {
  if (t.n < 3 || t.n > kMaxVertices || t.c < 1 || t.d < 1 || t.c + t.d >= t.n)
    throw std::invalid_argument(
        "cycle triple needs 3 <= n <= 62, c >= 1, d >= 1, c + d <= n - 1; got n=" +
        std::to_string(t.n) + " c=" + std::to_string(t.c) +
        " d=" + std::to_string(t.d));
}

/// Arc lengths for a labeled triple on cycle_graph(n). The a->s arc is taken
/// in the direction of increasing labels when b lies outside it, otherwise in
/// the opposite direction.
inline CycleTriple cycle_triple_from_labels(unsigned n, const Triple &t) {
  if (n < 3 || t.a >= n || t.s >= n || t.b >= n || t.a == t.s ||
      t.s == t.b || t.a == t.b)
    throw std::invalid_argument("invalid triple for a cycle of length " +
                                std::to_string(n));
  const unsigned c = (t.s + n - t.a) % n;
  const unsigned d = (t.b + n - t.s) % n;
  if (c + d < n)
    return {n, c, d};
  return {n, n - c, n - d};
}

///   P(C)     = 2^-c + 2^-(n-c) - 2^-n
///   P(D)     = 2^-d + 2^-(n-d) - 2^-n
///   P(C & D) = 2^-(c+d) + 2^-n
/// The 2^-n term of P(C & D) is the directed cycle s->a->b->s.
inline TripleCorrelation cycle_correlation(const CycleTriple &t) {
  validate(t);
  const auto h = Dyadic::half_pow;
  const Dyadic p_c = h(t.c) + h(t.n - t.c) - h(t.n);
  const Dyadic p_d = h(t.d) + h(t.n - t.d) - h(t.n);
  const Dyadic p_cd = h(t.c + t.d) + h(t.n);
  return TripleCorrelation::from_probabilities(DyadicProb(p_c), DyadicProb(p_d),
                                               DyadicProb(p_cd));
}

enum class ForestKind { independent, mutually_exclusive };

inline const char *to_string(ForestKind k) {
  return k == ForestKind::independent ? "independent" : "mutually_exclusive";
}

struct ForestVerdict {
  ForestKind kind = ForestKind::independent;
  DyadicProb p_c;
  DyadicProb p_d;
  DyadicProb p_cd;
  SignedDyadic cov;

  TripleCorrelation correlation() const { return {p_c, p_d, p_cd, cov}; }
};

/// On a forest every pair of vertices is joined by at most one path, so
/// P(u->v) = 2^-dist(u,v) (or 0 across trees). The events are independent
/// when the a-b path runs through s or the triple spans several trees, and
/// mutually exclusive otherwise.
inline ForestVerdict forest_correlation(const Graph &g, const Triple &t) {
  validate_triple(g, t);
  if (!is_forest(g))
    throw std::invalid_argument(
        "graph contains a cycle; use exact enumeration instead");
  const auto from_s = distances_from(g, t.s);
  const auto from_a = distances_from(g, t.a);
  const unsigned as = from_a[t.s], sb = from_s[t.b], ab = from_a[t.b];

  auto path_prob = [](unsigned dist) {
    return dist == kUnreachable ? DyadicProb::zero() : DyadicProb(1, dist);
  };
  ForestVerdict v;
  v.p_c = path_prob(as);
  v.p_d = path_prob(sb);
  if (as == kUnreachable || sb == kUnreachable) {
    v.kind = ForestKind::independent;
    v.p_cd = DyadicProb::zero();
  } else if (as + sb == ab) {
    v.kind = ForestKind::independent;
    v.p_cd = DyadicProb(1, as + sb);
  } else {
    v.kind = ForestKind::mutually_exclusive;
    v.p_cd = DyadicProb::zero();
  }
  v.cov = SignedDyadic::from(v.p_cd.value() - v.p_c.value() * v.p_d.value());
  return v;
}

} // namespace orientcorr
