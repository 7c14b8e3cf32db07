#pragma once

// Exhaustive enumeration over all 2^m orientations of a graph.
//
// Orientation x in [0, 2^m) directs edge i = (u, v), u < v, as u->v when bit
// i of x is set and v->u otherwise. Work is split into contiguous index
// ranges; each worker counts into machine words and the partial counts are
// summed exactly, so results never depend on the number of workers.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "orientcorr/dyadic.hpp"
#include "orientcorr/errors.hpp"
#include "orientcorr/graph.hpp"

namespace orientcorr {

inline constexpr unsigned kDefaultEnumerationCap = 30;
inline constexpr unsigned kMaxEnumerationCap = 62;

/// Environment variable consulted when the thread count is 0 (auto).
inline constexpr const char *kThreadsEnvVar = "ORIENTCORR_THREADS";

struct EnumOptions {
  unsigned cap = kDefaultEnumerationCap; ///< max edge count enumerated
  unsigned threads = 1;                  ///< 0 = auto
};

/// Worker count for a request: explicit values win, then ORIENTCORR_THREADS,
/// then the hardware concurrency.
inline unsigned resolve_threads(unsigned requested) {
  if (requested)
    return requested;
  if (const char *env = std::getenv(kThreadsEnvVar)) {
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

inline void check_cap(const Graph &g, unsigned cap) {
  if (cap > kMaxEnumerationCap)
    throw std::invalid_argument("enumeration cap above " +
                                std::to_string(kMaxEnumerationCap) +
                                " bits is not supported");
  if (g.m() > cap)
    throw CapExceededError(g.m(), cap);
}

/// Splits [0, total) into `parts` contiguous ranges, runs `body(lo, hi)` on
/// each (in parallel when parts > 1) and returns the results in range order.
template <class Body>
auto run_chunked(std::uint64_t total, unsigned parts, Body body) {
  using Result = decltype(body(std::uint64_t{0}, std::uint64_t{0}));
  parts = static_cast<unsigned>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(parts, total)));
  std::vector<Result> results(parts);
  auto bounds = [&](unsigned i) { return total / parts * i + std::min<std::uint64_t>(i, total % parts); };
  if (parts == 1) {
    results[0] = body(0, total);
    return results;
  }
  std::vector<std::thread> workers;
  workers.reserve(parts);
  for (unsigned i = 0; i < parts; ++i)
    workers.emplace_back(
        [&, i] { results[i] = body(bounds(i), bounds(i + 1)); });
  for (auto &w : workers)
    w.join();
  return results;
}

// ---------------------------------------------------------------------------
// Reachability

struct Orientation {
  std::uint64_t bits = 0;
};

/// Out-neighbour sets of g under orientation bits. `out` must have g.n()
/// entries.
inline void orient(const Graph &g, std::uint64_t bits, std::span<VertexSet> out) {
  std::fill(out.begin(), out.end(), 0);
  const auto &edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if ((bits >> i) & 1u)
      out[u] |= bit(v);
    else
      out[v] |= bit(u);
  }
}

/// Vertices with a directed path from `from` (including `from`).
inline VertexSet reach_set(std::span<const VertexSet> out, Vertex from) {
  VertexSet seen = bit(from), frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1)
      next |= out[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

/// Same as reach_set, but stops as soon as `target` is reached.
inline bool reaches(std::span<const VertexSet> out, Vertex from, Vertex target) {
  VertexSet seen = bit(from), frontier = seen;
  const VertexSet goal = bit(target);
  while (frontier && !(seen & goal)) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1)
      next |= out[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= frontier;
  }
  return (seen & goal) != 0;
}

inline bool reachable(const Graph &g, Orientation o, Vertex from, Vertex to) {
  if (from >= g.n() || to >= g.n())
    throw std::invalid_argument("reachable: vertex out of range");
  std::vector<VertexSet> out(g.n());
  orient(g, o.bits, out);
  return reaches(out, from, to);
}

// ---------------------------------------------------------------------------
// Single-triple counting

/// Orientation counts for C = {a->s}, D = {s->b} and C and D over all 2^m
/// orientations.
struct OrientationCounts {
  std::size_t m = 0;
  BigInt n_c = 0;
  BigInt n_d = 0;
  BigInt n_cd = 0;

  friend bool operator==(const OrientationCounts &,
                         const OrientationCounts &) = default;
};

struct RawCounts {
  std::uint64_t c = 0, d = 0, cd = 0;
};

/// Counts over orientation indices [lo, hi) only.
inline RawCounts count_events_range(const Graph &g, const Triple &t,
                                    std::uint64_t lo, std::uint64_t hi) {
  std::vector<VertexSet> out(g.n());
  RawCounts raw;
  for (std::uint64_t x = lo; x < hi; ++x) {
    orient(g, x, out);
    const bool c = reaches(out, t.a, t.s);
    const bool d = reaches(out, t.s, t.b);
    raw.c += c;
    raw.d += d;
    raw.cd += c && d;
  }
  return raw;
}

inline OrientationCounts count_events(const Graph &g, const Triple &t,
                                      const EnumOptions &opts = {}) {
  validate_triple(g, t);
  check_cap(g, opts.cap);
  const std::uint64_t total = std::uint64_t{1} << g.m();
  const auto parts = run_chunked(
      total, resolve_threads(opts.threads),
      [&](std::uint64_t lo, std::uint64_t hi) {
        return count_events_range(g, t, lo, hi);
      });
  OrientationCounts counts{g.m()};
  for (const auto &p : parts) {
    counts.n_c += p.c;
    counts.n_d += p.d;
    counts.n_cd += p.cd;
  }
  return counts;
}

// ---------------------------------------------------------------------------
// Correlation

struct TripleCorrelation {
  DyadicProb p_c;
  DyadicProb p_d;
  DyadicProb p_cd;
  SignedDyadic cov; ///< p_cd - p_c * p_d

  static TripleCorrelation from_probabilities(DyadicProb p_c, DyadicProb p_d,
                                              DyadicProb p_cd) {
    SignedDyadic cov =
        SignedDyadic::from(p_cd.value() - p_c.value() * p_d.value());
    return {std::move(p_c), std::move(p_d), std::move(p_cd), std::move(cov)};
  }

  /// cov = (n_cd * 2^m - n_c * n_d) / 2^(2m), evaluated as one exact integer.
  static TripleCorrelation from_counts(const OrientationCounts &k) {
    const auto m = static_cast<unsigned>(k.m);
    const BigInt numerator = (k.n_cd << m) - k.n_c * k.n_d;
    return {DyadicProb::from_count(k.n_c, m), DyadicProb::from_count(k.n_d, m),
            DyadicProb::from_count(k.n_cd, m),
            SignedDyadic::from(Dyadic(numerator, 2 * m))};
  }

  friend bool operator==(const TripleCorrelation &,
                         const TripleCorrelation &) = default;
};

inline TripleCorrelation exact_correlation(const Graph &g, const Triple &t,
                                           const EnumOptions &opts = {}) {
  return TripleCorrelation::from_counts(count_events(g, t, opts));
}

// ---------------------------------------------------------------------------
// All ordered triples in one pass
//
// Each orientation's full reachability relation is computed once and every
// ordered triple's counters are bumped from it. This is the fast path for
// classification; count_events is the per-triple reference.

class TripleCountTable {
public:
  TripleCountTable() = default;
  explicit TripleCountTable(Vertex n, std::size_t m)
      : n_(n), m_(m), pair_(std::size_t{n} * n, 0),
        joint_(std::size_t{n} * n * n, 0) {}

  Vertex n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }

  /// Orientations in which `from` reaches `to`.
  std::uint64_t reach_count(Vertex from, Vertex to) const {
    return pair_[std::size_t{from} * n_ + to];
  }
  /// Orientations in which a reaches s and s reaches b.
  std::uint64_t joint_count(const Triple &t) const {
    return joint_[(std::size_t{t.a} * n_ + t.s) * n_ + t.b];
  }

  OrientationCounts counts(const Triple &t) const {
    return {m_, reach_count(t.a, t.s), reach_count(t.s, t.b), joint_count(t)};
  }

  /// Sign of n_cd * 2^m - n_c * n_d.
  int covariance_sign(const Triple &t) const {
    const auto k = counts(t);
    const BigInt v = (k.n_cd << static_cast<unsigned>(m_)) - k.n_c * k.n_d;
    return v.sign();
  }

  void add_orientation(std::span<const VertexSet> out) {
    reach_.resize(n_);
    for (Vertex v = 0; v < n_; ++v)
      reach_[v] = reach_set(out, v);
    for (Vertex s = 0; s < n_; ++s) {
      const VertexSet after = reach_[s] & ~bit(s);
      for (Vertex a = 0; a < n_; ++a) {
        if (a == s || !(reach_[a] & bit(s)))
          continue;
        ++pair_[std::size_t{a} * n_ + s];
        std::uint64_t *row = &joint_[(std::size_t{a} * n_ + s) * n_];
        for (VertexSet rest = after & ~bit(a); rest; rest &= rest - 1)
          ++row[std::countr_zero(rest)];
      }
    }
  }

  void merge(const TripleCountTable &other) {
    for (std::size_t i = 0; i < pair_.size(); ++i)
      pair_[i] += other.pair_[i];
    for (std::size_t i = 0; i < joint_.size(); ++i)
      joint_[i] += other.joint_[i];
  }

private:
  Vertex n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> pair_;
  std::vector<std::uint64_t> joint_;
  std::vector<VertexSet> reach_;
};

inline TripleCountTable count_all_triples(const Graph &g,
                                          const EnumOptions &opts = {}) {
  check_cap(g, opts.cap);
  const std::uint64_t total = std::uint64_t{1} << g.m();
  auto parts = run_chunked(
      total, resolve_threads(opts.threads),
      [&](std::uint64_t lo, std::uint64_t hi) {
        TripleCountTable table(g.n(), g.m());
        std::vector<VertexSet> out(g.n());
        for (std::uint64_t x = lo; x < hi; ++x) {
          orient(g, x, out);
          table.add_orientation(out);
        }
        return table;
      });
  for (std::size_t i = 1; i < parts.size(); ++i)
    parts[0].merge(parts[i]);
  return std::move(parts[0]);
}

} // namespace orientcorr
