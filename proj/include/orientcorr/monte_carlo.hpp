#pragma once

// Seeded Monte Carlo estimation of the triple correlation, and a G(n,p)
// generator.
//
// Randomness contract
// -------------------
// All random bits come from Philox-4x32-10 (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3", SC'11), a counter-based generator: each call
// maps a 128-bit counter and a 64-bit key to 128 output bits with no hidden
// state. The key is the user seed (low word first).
//
//   orientation bits of sample i:
//     block j = philox(counter = {lo32(i), hi32(i), j, 0}, key = seed)
//     output word w of block j supplies orientation bits 128j + 32w .. +31,
//     least significant bit first
//   G(n,p) candidate pair e (canonical (u,v), u<v order):
//     block = philox(counter = {lo32(e), hi32(e), 0, 1}, key = seed)
//     u = (word1 * 2^32 + word0) >> 11, scaled by 2^-53; edge kept iff u < p
//
// Because every sample is a pure function of (seed, index), splitting the
// sample range across workers cannot change the result.
//
// Standard errors
// ---------------
// With cell frequencies p11 = P(C&D), p10 = P(C&!D), p01 = P(!C&D),
// p00 = P(!C&!D) estimated from N samples, cov = p11 - (p11+p10)(p11+p01)
// has gradient (1 - p_c - p_d, -p_d, -p_c, 0) in (p11, p10, p01, p00), and the
// delta-method variance is
//
//   Var = ( sum_k grad_k^2 p_k - (sum_k grad_k p_k)^2 ) / N.
//
// Single-cell probabilities use the binomial error sqrt(p(1-p)/N).

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "orientcorr/enumerate.hpp"
#include "orientcorr/graph.hpp"

namespace orientcorr {

using PhiloxBlock = std::array<std::uint32_t, 4>;

inline PhiloxBlock philox4x32_10(PhiloxBlock ctr, std::array<std::uint32_t, 2> key) {
  constexpr std::uint32_t kMul0 = 0xD2511F53, kMul1 = 0xCD9E8D57;
  constexpr std::uint32_t kWeyl0 = 0x9E3779B9, kWeyl1 = 0xBB67AE85;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
    const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
           static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
           static_cast<std::uint32_t>(p0)};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

inline std::array<std::uint32_t, 2> philox_key(std::uint64_t seed) {
  return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
}

/// Orientation bits of one Monte Carlo sample, packed into 64-bit words.
inline void sample_orientation(std::uint64_t seed, std::uint64_t index,
                               std::size_t m, std::vector<std::uint64_t> &words) {
  const auto key = philox_key(seed);
  words.assign((m + 63) / 64, 0);
  const std::size_t blocks = (m + 127) / 128;
  for (std::size_t j = 0; j < blocks; ++j) {
    const auto out = philox4x32_10({static_cast<std::uint32_t>(index),
                                    static_cast<std::uint32_t>(index >> 32),
                                    static_cast<std::uint32_t>(j), 0},
                                   key);
    for (std::size_t w = 0; w < 4; ++w) {
      const std::size_t at = 128 * j + 32 * w;
      if (at < m)
        words[at / 64] |= std::uint64_t{out[w]} << (at % 64);
    }
  }
  if (m % 64)
    words.back() &= (std::uint64_t{1} << (m % 64)) - 1;
}

/// Out-neighbour sets for an orientation of arbitrary length.
inline void orient_words(const Graph &g, const std::vector<std::uint64_t> &words,
                         std::span<VertexSet> out) {
  std::fill(out.begin(), out.end(), 0);
  const auto &edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if ((words[i / 64] >> (i % 64)) & 1u)
      out[u] |= bit(v);
    else
      out[v] |= bit(u);
  }
}

struct McEstimate {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t n_c = 0; ///< samples with a->s
  std::uint64_t n_d = 0; ///< samples with s->b
  std::uint64_t n_cd = 0;
  double p_c_hat = 0;
  double p_d_hat = 0;
  double p_cd_hat = 0;
  double p_neither_hat = 0; ///< a -/-> s and s -/-> b
  double cov_hat = 0;
  double se_cov = 0;
  double se_cd = 0;
  double se_neither = 0;

  friend bool operator==(const McEstimate &, const McEstimate &) = default;
};

inline double binomial_se(double p, std::uint64_t samples) {
  return std::sqrt(p * (1 - p) / static_cast<double>(samples));
}

inline McEstimate estimate_from_counts(std::uint64_t samples, std::uint64_t seed,
                                       std::uint64_t n_c, std::uint64_t n_d,
                                       std::uint64_t n_cd) {
  McEstimate e{samples, seed, n_c, n_d, n_cd};
  const auto total = static_cast<double>(samples);
  e.p_c_hat = static_cast<double>(n_c) / total;
  e.p_d_hat = static_cast<double>(n_d) / total;
  e.p_cd_hat = static_cast<double>(n_cd) / total;
  e.p_neither_hat = static_cast<double>(samples - n_c - n_d + n_cd) / total;
  e.cov_hat = e.p_cd_hat - e.p_c_hat * e.p_d_hat;

  const double p11 = e.p_cd_hat;
  const double p10 = static_cast<double>(n_c - n_cd) / total;
  const double p01 = static_cast<double>(n_d - n_cd) / total;
  const double g11 = 1 - e.p_c_hat - e.p_d_hat, g10 = -e.p_d_hat,
               g01 = -e.p_c_hat;
  const double second = g11 * g11 * p11 + g10 * g10 * p10 + g01 * g01 * p01;
  const double first = g11 * p11 + g10 * p10 + g01 * p01;
  e.se_cov = std::sqrt(std::max(0.0, second - first * first) / total);
  e.se_cd = binomial_se(e.p_cd_hat, samples);
  e.se_neither = binomial_se(e.p_neither_hat, samples);
  return e;
}

inline McEstimate mc_estimate(const Graph &g, const Triple &t,
                              std::uint64_t samples, std::uint64_t seed,
                              unsigned threads = 1) {
  validate_triple(g, t);
  if (samples < 1)
    throw std::invalid_argument("mc_estimate needs at least one sample");
  const auto parts = run_chunked(
      samples, resolve_threads(threads),
      [&](std::uint64_t lo, std::uint64_t hi) {
        RawCounts raw;
        std::vector<std::uint64_t> words;
        std::vector<VertexSet> out(g.n());
        for (std::uint64_t i = lo; i < hi; ++i) {
          sample_orientation(seed, i, g.m(), words);
          orient_words(g, words, out);
          const bool c = reaches(out, t.a, t.s);
          const bool d = reaches(out, t.s, t.b);
          raw.c += c;
          raw.d += d;
          raw.cd += c && d;
        }
        return raw;
      });
  RawCounts total;
  for (const auto &p : parts) {
    total.c += p.c;
    total.d += p.d;
    total.cd += p.cd;
  }
  return estimate_from_counts(samples, seed, total.c, total.d, total.cd);
}

/// Erdos-Renyi G(n,p): each of the C(n,2) pairs kept independently with
/// probability p.
inline Graph gnp_generate(Vertex n, double p, std::uint64_t seed) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("gnp_generate needs 1 <= n <= 62");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("gnp_generate needs 0 <= p <= 1");
  const auto key = philox_key(seed);
  std::vector<Edge> edges;
  std::uint64_t e = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++e) {
      const auto out = philox4x32_10({static_cast<std::uint32_t>(e),
                                      static_cast<std::uint32_t>(e >> 32), 0, 1},
                                     key);
      const std::uint64_t bits = (std::uint64_t{out[1]} << 32) | out[0];
      const double uniform = std::ldexp(static_cast<double>(bits >> 11), -53);
      if (uniform < p)
        edges.emplace_back(u, v);
    }
  return Graph::from_edges(n, edges);
}

} // namespace orientcorr
