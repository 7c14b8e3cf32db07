#pragma once

// Correlation classes of connected graphs, from the exact covariance sign of
// every ordered triple (a, s, b):
//
//   Class I   : no triple is positively correlated
//   Class II  : some triple negative and some triple positive, or some triple
//               independent
//   Class III : no triple is negatively correlated
//
// Class II's independence clause makes the classes overlap (K4 is in all
// three); flags are reported literally together with the raw sign counts.
//
// Also provides brute-force minor testing for K4 and K2,3, used to probe
// outerplanarity of small graphs.

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orientcorr/enumerate.hpp"
#include "orientcorr/graph.hpp"

namespace orientcorr {

struct ClassFlags {
  bool class_i = false;
  bool class_ii = false;
  bool class_iii = false;
  std::uint64_t neg_triples = 0;
  std::uint64_t zero_triples = 0;
  std::uint64_t pos_triples = 0;

  static ClassFlags from_counts(std::uint64_t neg, std::uint64_t zero,
                                std::uint64_t pos) {
    return {pos == 0, (neg > 0 && pos > 0) || zero > 0, neg == 0, neg, zero, pos};
  }

  friend bool operator==(const ClassFlags &, const ClassFlags &) = default;
};

struct ClassifyOptions {
  EnumOptions enumeration;
  bool allow_disconnected = false;
  /// Per-triple reference counting instead of the single all-triples sweep.
  bool per_triple = false;
};

inline void for_each_ordered_triple(Vertex n,
                                    const std::function<void(const Triple &)> &fn) {
  for (Vertex a = 0; a < n; ++a)
    for (Vertex s = 0; s < n; ++s)
      for (Vertex b = 0; b < n; ++b)
        if (a != s && s != b && a != b)
          fn({a, s, b});
}

inline ClassFlags classify(const Graph &g, const ClassifyOptions &opts = {}) {
  if (g.n() < 3)
    throw std::invalid_argument("classification needs at least 3 vertices");
  if (!opts.allow_disconnected && !is_connected(g))
    throw std::invalid_argument("graph is disconnected; classes are defined "
                                "for connected graphs only");
  check_cap(g, opts.enumeration.cap);

  std::uint64_t neg = 0, zero = 0, pos = 0;
  auto tally = [&](int sign) { (sign < 0 ? neg : sign > 0 ? pos : zero) += 1; };
  if (opts.per_triple) {
    for_each_ordered_triple(g.n(), [&](const Triple &t) {
      tally(exact_correlation(g, t, opts.enumeration).cov.sign);
    });
  } else {
    const auto table = count_all_triples(g, opts.enumeration);
    for_each_ordered_triple(g.n(), [&](const Triple &t) {
      tally(table.covariance_sign(t));
    });
  }
  return ClassFlags::from_counts(neg, zero, pos);
}

// ---------------------------------------------------------------------------
// Minors

inline constexpr Vertex kMinorMaxVertices = 10;

enum class MinorPattern { k4, k23 };

/// Brute-force minor test: searches for disjoint connected branch sets in g,
/// one per pattern vertex, with an edge of g between the branch sets of every
/// adjacent pattern pair.
inline bool has_minor(const Graph &g, MinorPattern pattern) {
  if (g.n() > kMinorMaxVertices)
    throw std::invalid_argument("minor search supports at most " +
                                std::to_string(kMinorMaxVertices) + " vertices");

  // Pattern vertices are ordered so each one after the first has an earlier
  // neighbour; K2,3 is {0,2} x {1,3,4}.
  struct Pattern {
    unsigned size;
    std::vector<std::pair<unsigned, unsigned>> edges;
  };
  const Pattern h = pattern == MinorPattern::k4
                        ? Pattern{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}}
                        : Pattern{5, {{0, 1}, {0, 3}, {0, 4}, {2, 1}, {2, 3}, {2, 4}}};
  if (g.n() < h.size || g.m() < h.edges.size())
    return false;

  // earlier[i]: pattern neighbours of i that precede it.
  std::vector<std::vector<unsigned>> earlier(h.size);
  for (auto [u, v] : h.edges)
    earlier[std::max(u, v)].push_back(std::min(u, v));

  const std::size_t subsets = std::size_t{1} << g.n();
  std::vector<VertexSet> neighborhood(subsets, 0);
  std::vector<VertexSet> connected_sets;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const auto low = static_cast<Vertex>(std::countr_zero(mask));
    neighborhood[mask] = neighborhood[mask & (mask - 1)] | g.neighbors(low);
    // Grow from the lowest vertex inside the mask.
    VertexSet seen = bit(low), frontier = seen;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1)
        next |= g.neighbors(static_cast<Vertex>(std::countr_zero(f)));
      frontier = next & mask & ~seen;
      seen |= frontier;
    }
    if (seen == mask)
      connected_sets.push_back(mask);
  }

  std::vector<VertexSet> chosen(h.size, 0);
  std::function<bool(unsigned, VertexSet)> place = [&](unsigned i,
                                                       VertexSet used) -> bool {
    if (i == h.size)
      return true;
    for (VertexSet set : connected_sets) {
      if (set & used)
        continue;
      bool touches_all = true;
      for (unsigned j : earlier[i])
        if (!(neighborhood[set] & chosen[j])) {
          touches_all = false;
          break;
        }
      if (!touches_all)
        continue;
      chosen[i] = set;
      if (place(i + 1, used | set))
        return true;
    }
    return false;
  };
  return place(0, 0);
}

inline bool is_outerplanar(const Graph &g) {
  return !has_minor(g, MinorPattern::k4) && !has_minor(g, MinorPattern::k23);
}

// ---------------------------------------------------------------------------
// Streams of graph6 records

enum class RecordStatus { classified, disconnected, over_cap, error };

inline const char *to_string(RecordStatus s) {
  switch (s) {
  case RecordStatus::classified:
    return "classified";
  case RecordStatus::disconnected:
    return "skipped_disconnected";
  case RecordStatus::over_cap:
    return "skipped_over_cap";
  case RecordStatus::error:
    return "error";
  }
  return "error";
}

struct StreamRecord {
  std::size_t id = 0; ///< 0-based position among non-blank input lines
  std::string graph6;
  RecordStatus status = RecordStatus::error;
  Vertex n = 0;
  std::size_t m = 0;
  std::optional<ClassFlags> flags;
  std::optional<bool> outerplanar;
  bool disconnected = false; ///< set when evaluated with allow_disconnected
  std::string message;
};

struct StreamSummary {
  std::size_t records = 0;
  std::size_t classified = 0;
  std::size_t class_i = 0;
  std::size_t class_ii = 0;
  std::size_t class_iii = 0;
  std::size_t outerplanar = 0;
  std::size_t skipped_disconnected = 0;
  std::size_t skipped_over_cap = 0;
  std::size_t errors = 0;
};

struct StreamOptions {
  ClassifyOptions classify;
  bool outerplanar = false; ///< also run the minor probe (n <= 10 only)
};

inline StreamRecord classify_record(std::size_t id, const std::string &line,
                                    const StreamOptions &opts) {
  StreamRecord rec;
  rec.id = id;
  rec.graph6 = line;
  Graph g;
  try {
    g = parse_graph6(line);
  } catch (const ParseError &e) {
    rec.message = e.what();
    return rec;
  }
  rec.n = g.n();
  rec.m = g.m();
  if (g.n() < 3) {
    rec.message = "classification needs at least 3 vertices";
    return rec;
  }
  rec.disconnected = !is_connected(g);
  if (rec.disconnected && !opts.classify.allow_disconnected) {
    rec.status = RecordStatus::disconnected;
    rec.message = "graph is disconnected";
    return rec;
  }
  if (g.m() > opts.classify.enumeration.cap) {
    rec.status = RecordStatus::over_cap;
    rec.message = CapExceededError(g.m(), opts.classify.enumeration.cap).what();
    return rec;
  }
  rec.flags = classify(g, opts.classify);
  if (opts.outerplanar && g.n() <= kMinorMaxVertices)
    rec.outerplanar = is_outerplanar(g);
  rec.status = RecordStatus::classified;
  if (rec.disconnected)
    rec.message = "disconnected: triples spanning components are independent "
                  "or have zero probability";
  return rec;
}

/// Classifies one graph6 record per non-blank line, handing each record to
/// `sink` in input order. Malformed lines produce error records and the scan
/// continues.
inline StreamSummary classify_stream(std::istream &in, const StreamOptions &opts,
                                     const std::function<void(const StreamRecord &)> &sink) {
  StreamSummary summary;
  std::string line;
  std::size_t id = 0;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t'))
      line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos)
      continue;
    line.erase(0, first);

    const StreamRecord rec = classify_record(id++, line, opts);
    ++summary.records;
    switch (rec.status) {
    case RecordStatus::classified:
      ++summary.classified;
      summary.class_i += rec.flags->class_i;
      summary.class_ii += rec.flags->class_ii;
      summary.class_iii += rec.flags->class_iii;
      summary.outerplanar += rec.outerplanar.value_or(false);
      break;
    case RecordStatus::disconnected:
      ++summary.skipped_disconnected;
      break;
    case RecordStatus::over_cap:
      ++summary.skipped_over_cap;
      break;
    case RecordStatus::error:
      ++summary.errors;
      break;
    }
    sink(rec);
  }
  return summary;
}

} // namespace orientcorr
