#pragma once

// Depth-first enumeration of geodesic words.  Every prefix of a geodesic is a
// geodesic, so the geodesic words of length <= n form a tree rooted at the
// empty word whose edges are exactly the length-increasing generators; the
// traversal walks it in lexicographic order (a < A < b < B).
//
// Sphere sizes come out of the same walk: summing over the geodesic words of
// length n the product of 1/|d-(prefix)| over all nonempty prefixes counts
// every group element exactly once, because the geodesic witnesses of an
// element are distributed among its shortening edges.  The products are kept
// as exact rationals and the per-length totals must come out integral —
// anything else signals a defect in multiplication or classification.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "geodesic_classifier.hpp"
#include "series.hpp"

namespace thompsonf {

struct IntegralityError : std::logic_error {
  using std::logic_error::logic_error;
};

using GeneratorOrder = std::array<Generator, 4>;
inline constexpr GeneratorOrder kLexOrder = kGenerators;

struct SphereCounts {
  GrowthSeries elements;   // |S(n)|: group elements of geodesic length n
  GrowthSeries geodesics;  // number of geodesic words of length n
};

namespace detail {

struct DfsTotals {
  std::vector<Rational> sphere;
  std::vector<Int> words;

  explicit DfsTotals(std::size_t n_max) : sphere(n_max + 1), words(n_max + 1) {}

  void merge(const DfsTotals& other) {
    for (std::size_t i = 0; i < sphere.size(); ++i) {
      sphere[i] += other.sphere[i];
      words[i] += other.words[i];
    }
  }
};

// parent_product = product of 1/|d-| over the proper prefixes of this node
inline void geodesic_dfs(const ForestDiagram& d, long long len, std::size_t depth,
                         std::size_t max_depth, const Rational& parent_product,
                         const GeneratorOrder& order, DfsTotals& totals) {
  ClassifiedNeighbors c = classify_neighbors(d, len);
  Rational product = parent_product;
  if (depth > 0) product /= static_cast<int>(c.partition.down.size());
  totals.sphere[depth] += product;
  totals.words[depth] += 1;
  if (depth == max_depth) return;
  for (Generator g : order) {
    std::size_t i = static_cast<std::size_t>(g);
    if (c.neighbor_length[i] == len + 1)
      geodesic_dfs(c.neighbor[i], len + 1, depth + 1, max_depth, product, order, totals);
  }
}

}  // namespace detail

// One traversal to depth n_max produces both series for all lengths 0..n_max.
// With threads > 1 the subtrees below the geodesic two-letter prefixes run on
// a small thread pool; totals are merged in prefix order, and exact-rational
// addition makes the result independent of scheduling either way.
inline SphereCounts count_spheres(std::size_t n_max, unsigned threads = 1,
                                  const GeneratorOrder& order = kLexOrder) {
  detail::DfsTotals totals(n_max);
  if (threads <= 1 || n_max < 2) {
    detail::geodesic_dfs(identity_diagram(), 0, 0, n_max, Rational(1), order, totals);
  } else {
    totals.sphere[0] = 1;
    totals.words[0] = 1;
    struct Task {
      ForestDiagram diagram;
      Rational parent_product;
    };
    std::vector<Task> tasks;
    ClassifiedNeighbors root = classify_neighbors(identity_diagram(), 0);
    for (Generator g : order) {
      std::size_t i = static_cast<std::size_t>(g);
      ClassifiedNeighbors child = classify_neighbors(root.neighbor[i], 1);
      Rational child_product = Rational(1) / static_cast<int>(child.partition.down.size());
      totals.sphere[1] += child_product;
      totals.words[1] += 1;
      for (Generator h : order) {
        std::size_t j = static_cast<std::size_t>(h);
        if (child.neighbor_length[j] == 2) tasks.push_back({child.neighbor[j], child_product});
      }
    }
    std::size_t workers = std::min<std::size_t>(threads, tasks.size());
    std::vector<detail::DfsTotals> partial(tasks.size(), detail::DfsTotals(n_max));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t k = t; k < tasks.size(); k += workers)
          detail::geodesic_dfs(tasks[k].diagram, 2, 2, n_max, tasks[k].parent_product, order,
                               partial[k]);
      });
    }
    for (std::thread& th : pool) th.join();
    for (const detail::DfsTotals& p : partial) totals.merge(p);
  }

  SphereCounts out;
  out.elements.kind = SeriesKind::elements;
  out.elements.source = SeriesSource::algorithm_a;
  out.geodesics.kind = SeriesKind::geodesics;
  out.geodesics.source = SeriesSource::algorithm_a;
  out.elements.values.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Rational& r = totals.sphere[n];
    if (denominator(r) != 1)
      throw IntegralityError("sphere total at length " + std::to_string(n) +
                             " is not an integer");
    out.elements.values.push_back(numerator(r));
  }
  out.geodesics.values = std::move(totals.words);
  return out;
}

inline Int count_sphere(std::size_t n, unsigned threads = 1) {
  return count_spheres(n, threads).elements.values[n];
}

inline Int count_geodesics(std::size_t n, unsigned threads = 1) {
  return count_spheres(n, threads).geodesics.values[n];
}

// Visits every geodesic word of length exactly n, in lexicographic order.
inline void enumerate_geodesics(std::size_t n, const std::function<void(const Word&)>& visit,
                                const GeneratorOrder& order = kLexOrder) {
  Word word;
  word.reserve(n);
  std::function<void(const ForestDiagram&, long long)> walk =
      [&](const ForestDiagram& d, long long len) {
        if (word.size() == n) {
          visit(word);
          return;
        }
        ClassifiedNeighbors c = classify_neighbors(d, len);
        for (Generator g : order) {
          std::size_t i = static_cast<std::size_t>(g);
          if (c.neighbor_length[i] != len + 1) continue;
          word.push_back(g);
          walk(c.neighbor[i], len + 1);
          word.pop_back();
        }
      };
  walk(identity_diagram(), 0);
}

// Lexicographic successor of w among geodesic words of length <= n: extend
// when possible, otherwise backtrack to the deepest prefix with a later
// length-increasing letter.  Returns nullopt after the last geodesic.
inline std::optional<Word> next_geodesic(const Word& w, std::size_t n,
                                         const GeneratorOrder& order = kLexOrder) {
  if (w.size() > n)
    throw std::invalid_argument("next_geodesic: word is longer than the enumeration bound");
  std::vector<ForestDiagram> chain;
  chain.reserve(w.size() + 1);
  chain.push_back(identity_diagram());
  for (std::size_t i = 0; i < w.size(); ++i) {
    chain.push_back(multiply(chain.back(), w[i]));
    if (weight(chain.back()) != static_cast<long long>(i) + 1)
      throw std::invalid_argument("next_geodesic: input word is not geodesic");
  }

  if (w.size() < n) {
    ClassifiedNeighbors c =
        classify_neighbors(chain.back(), static_cast<long long>(w.size()));
    for (Generator g : order) {
      std::size_t i = static_cast<std::size_t>(g);
      if (c.neighbor_length[i] == static_cast<long long>(w.size()) + 1) {
        Word next = w;
        next.push_back(g);
        return next;
      }
    }
  }

  for (std::size_t j = w.size(); j >= 1; --j) {
    ClassifiedNeighbors c =
        classify_neighbors(chain[j - 1], static_cast<long long>(j) - 1);
    bool after_current = false;
    for (Generator g : order) {
      if (g == w[j - 1]) {
        after_current = true;
        continue;
      }
      if (!after_current) continue;
      if (c.neighbor_length[static_cast<std::size_t>(g)] == static_cast<long long>(j)) {
        Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j) - 1);
        next.push_back(g);
        return next;
      }
    }
  }
  return std::nullopt;
}

}  // namespace thompsonf
