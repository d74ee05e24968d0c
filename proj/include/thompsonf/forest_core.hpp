#pragma once

// Forest diagrams for Thompson's group F over the generating set
// {x0, x0^-1, x1, x1^-1}.
//
// A forest diagram is a pair of pointed forests (top and bottom) drawn over a
// shared row of leaves; top and bottom always carry the same number of
// leaves.  Multiplication on the right acts on the bottom forest (left
// multiplication would act on the top one; inverting an element swaps the two
// rows):
//
//   x0    moves the bottom pointer one tree to the left,
//   x0^-1 moves it one tree to the right,
//   x1    splits the root caret of the pointed bottom tree or, when that tree
//         is a bare leaf, grows a caret on the matching top leaf,
//   x1^-1 joins the pointed bottom tree and its right neighbour under a caret.
//
// Pointer moves past the end of the forest grow an aligned trivial column.
// The identities that pin these rules down are exercised in the tests: the
// defining relators [x0 x1^-1, x0^-1 x1 x0] and [x0 x1^-1, x0^-2 x1 x0^2]
// collapse to the identity diagram, and breadth-first sphere counts over the
// resulting Cayley graph agree with the known growth of F.
//
// A diagram is reduced when no column holds a caret immediately above and
// immediately below the leaf row (a "common caret": both would have two bare
// leaves as children) and neither boundary column is a bare unpointed leaf in
// both forests.  Reduced diagrams are canonical: two words represent the same
// group element exactly when they reduce to equal diagrams.
//
// Each gap between adjacent leaves is labelled per forest, in priority order:
//   L  exterior, left of the pointed tree
//   N  interior, immediately left of a caret (the leaf after the gap hangs
//      off its parent as a left child)
//   X  exterior, immediately left of a caret (the next tree is nontrivial)
//   R  exterior, right of the pointed tree
//   I  interior otherwise
// The word length of the element is the sum over gaps of a fixed 5x5 weight
// for the (top, bottom) label pair.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "series.hpp"
#include "tree_codec.hpp"
#include "types.hpp"

namespace thompsonf {

// ---------------------------------------------------------------- words ----

enum class Generator : int { x0 = 0, x0_inv = 1, x1 = 2, x1_inv = 3 };

inline constexpr std::array<Generator, 4> kGenerators = {
    Generator::x0, Generator::x0_inv, Generator::x1, Generator::x1_inv};

inline Generator inverse(Generator g) {
  switch (g) {
    case Generator::x0: return Generator::x0_inv;
    case Generator::x0_inv: return Generator::x0;
    case Generator::x1: return Generator::x1_inv;
    case Generator::x1_inv: return Generator::x1;
  }
  throw std::invalid_argument("inverse: bad generator");
}

// One letter per generator: a = x0, A = x0^-1, b = x1, B = x1^-1.  The
// ordering a < A < b < B fixes all lexicographic traversals.
inline char generator_char(Generator g) {
  static constexpr char chars[4] = {'a', 'A', 'b', 'B'};
  return chars[static_cast<int>(g)];
}

inline const char* generator_name(Generator g) {
  static constexpr const char* names[4] = {"x0", "x0^-1", "x1", "x1^-1"};
  return names[static_cast<int>(g)];
}

using Word = std::vector<Generator>;

inline std::string word_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Generator g : w) out.push_back(generator_char(g));
  return out;
}

// Accepts the compact form ("abA") and, when the string contains an 'x', a
// verbose form of x0/x1 tokens with optional ^-1, separated by commas,
// spaces or dots: "x0,x1,x0^-1".
inline Word parse_word(const std::string& s) {
  Word w;
  if (s.find('x') != std::string::npos) {
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '.' || c == '\t'; };
    while (i < s.size()) {
      if (is_sep(s[i])) {
        ++i;
        continue;
      }
      if (s[i] != 'x' || i + 1 >= s.size() || (s[i + 1] != '0' && s[i + 1] != '1'))
        throw std::invalid_argument("parse_word: expected x0 or x1 at position " +
                                    std::to_string(i));
      bool one = s[i + 1] == '1';
      i += 2;
      bool inv = false;
      if (i + 2 < s.size() + 1 && s.compare(i, 3, "^-1") == 0) {
        inv = true;
        i += 3;
      }
      if (i < s.size() && !is_sep(s[i]) && s[i] != 'x')
        throw std::invalid_argument("parse_word: malformed token at position " +
                                    std::to_string(i));
      w.push_back(one ? (inv ? Generator::x1_inv : Generator::x1)
                      : (inv ? Generator::x0_inv : Generator::x0));
    }
    return w;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    switch (s[i]) {
      case 'a': w.push_back(Generator::x0); break;
      case 'A': w.push_back(Generator::x0_inv); break;
      case 'b': w.push_back(Generator::x1); break;
      case 'B': w.push_back(Generator::x1_inv); break;
      case ' ': break;
      default:
        throw std::invalid_argument(std::string("parse_word: bad letter '") + s[i] +
                                    "' at position " + std::to_string(i));
    }
  }
  return w;
}

// ------------------------------------------------------------- diagrams ----

struct Forest {
  std::vector<Tree> trees;   // left to right; never empty
  std::size_t pointer = 0;   // index of the pointed tree
};

struct ForestDiagram {
  Forest top;
  Forest bottom;
};

inline std::size_t total_leaves(const Forest& f) {
  std::size_t n = 0;
  for (const Tree& t : f.trees) n += leaf_count(t);
  return n;
}

inline ForestDiagram identity_diagram() {
  return ForestDiagram{Forest{{leaf()}, 0}, Forest{{leaf()}, 0}};
}

// ----------------------------------------------------------- gap labels ----

enum class GapLabel : int { I = 0, N = 1, L = 2, R = 3, X = 4 };

inline char gap_label_char(GapLabel l) {
  static constexpr char chars[5] = {'I', 'N', 'L', 'R', 'X'};
  return chars[static_cast<int>(l)];
}

// Word length contributed by one gap column, by (top, bottom) label.  The
// table is symmetric; interior labels carry the cost of their caret, which is
// why e.g. (I, R) costs 1 but (N, N) costs 4.
inline int column_weight(GapLabel top, GapLabel bottom) {
  static constexpr int w[5][5] = {
      //           I  N  L  R  X
      /* I */     {2, 4, 2, 1, 3},
      /* N */     {4, 4, 2, 3, 3},
      /* L */     {2, 2, 2, 1, 1},
      /* R */     {1, 3, 1, 2, 2},
      /* X */     {3, 3, 1, 2, 2},
  };
  return w[static_cast<int>(top)][static_cast<int>(bottom)];
}

namespace detail {

// In-order labels of the gaps strictly inside one tree: N when the leaf to
// the right of the gap is a left child, I when it is a right child.  This is
// the upper-case part of the tree's code word.
inline void append_interior_labels(const Tree& t, std::vector<GapLabel>& out) {
  const TreeNode* cur = t.get();
  bool as_right = false;
  bool first_leaf = true;
  std::vector<const TreeNode*> pending;
  for (;;) {
    while (cur) {
      pending.push_back(cur);
      cur = cur->left.get();
      as_right = false;
    }
    if (first_leaf)
      first_leaf = false;
    else
      out.push_back(as_right ? GapLabel::I : GapLabel::N);
    if (pending.empty()) break;
    cur = pending.back()->right.get();
    pending.pop_back();
    as_right = true;
  }
}

}  // namespace detail

inline std::vector<GapLabel> forest_labels(const Forest& f) {
  std::vector<GapLabel> out;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    detail::append_interior_labels(f.trees[i], out);
    if (i + 1 < f.trees.size()) {
      if (i < f.pointer)
        out.push_back(GapLabel::L);
      else
        out.push_back(is_leaf(f.trees[i + 1]) ? GapLabel::R : GapLabel::X);
    }
  }
  return out;
}

inline std::vector<std::pair<GapLabel, GapLabel>> label_gaps(const ForestDiagram& d) {
  std::vector<GapLabel> top = forest_labels(d.top);
  std::vector<GapLabel> bottom = forest_labels(d.bottom);
  if (top.size() != bottom.size())
    throw std::logic_error("label_gaps: top and bottom leaf rows are misaligned");
  std::vector<std::pair<GapLabel, GapLabel>> out;
  out.reserve(top.size());
  for (std::size_t i = 0; i < top.size(); ++i) out.emplace_back(top[i], bottom[i]);
  return out;
}

inline long long weight(const ForestDiagram& d) {
  long long sum = 0;
  for (auto [t, b] : label_gaps(d)) sum += column_weight(t, b);
  return sum;
}

// ------------------------------------------------------------ reduction ----

namespace detail {

// Marks every gap spanned by a caret whose children are both bare leaves.
// Returns the leaf count of t.
inline std::size_t flag_low_carets(const Tree& t, std::size_t offset, std::vector<bool>& flags) {
  if (is_leaf(t)) return 1;
  std::size_t lc = flag_low_carets(t->left, offset, flags);
  std::size_t rc = flag_low_carets(t->right, offset + lc, flags);
  if (is_leaf(t->left) && is_leaf(t->right)) flags[offset] = true;
  return lc + rc;
}

inline std::vector<bool> low_caret_gaps(const Forest& f, std::size_t gaps) {
  std::vector<bool> flags(gaps, false);
  std::size_t offset = 0;
  for (const Tree& t : f.trees) offset += flag_low_carets(t, offset, flags);
  return flags;
}

// Collapses the caret spanning tree-local gap k (children must be leaves).
inline Tree collapse_caret_at_gap(const Tree& t, std::size_t k) {
  std::size_t lc = leaf_count(t->left);
  if (k + 1 == lc) {
    if (!is_leaf(t->left) || !is_leaf(t->right))
      throw std::logic_error("collapse_caret_at_gap: caret is not adjacent to the leaf row");
    return leaf();
  }
  if (k + 1 < lc) return caret(collapse_caret_at_gap(t->left, k), t->right);
  return caret(t->left, collapse_caret_at_gap(t->right, k - lc));
}

inline void collapse_in_forest(Forest& f, std::size_t gap) {
  std::size_t offset = 0;
  for (Tree& t : f.trees) {
    std::size_t leaves = leaf_count(t);
    if (gap < offset + leaves - 1 && gap >= offset) {
      t = collapse_caret_at_gap(t, gap - offset);
      return;
    }
    offset += leaves;
  }
  throw std::logic_error("collapse_in_forest: gap is not interior to any tree");
}

// Replaces the ordinal-th leaf (left to right) of t by a caret on two leaves.
inline Tree expand_leaf(const Tree& t, std::size_t ordinal) {
  if (is_leaf(t)) return caret(leaf(), leaf());
  std::size_t lc = leaf_count(t->left);
  if (ordinal < lc) return caret(expand_leaf(t->left, ordinal), t->right);
  return caret(t->left, expand_leaf(t->right, ordinal - lc));
}

}  // namespace detail

// Cancels common carets and strips unpointed bare boundary columns until the
// diagram is canonical.  Idempotent.
inline ForestDiagram reduce(ForestDiagram d) {
  for (;;) {
    std::size_t leaves = total_leaves(d.top);
    if (leaves != total_leaves(d.bottom))
      throw std::logic_error("reduce: top and bottom leaf rows are misaligned");
    if (leaves < 2) break;
    std::vector<bool> top_low = detail::low_caret_gaps(d.top, leaves - 1);
    std::vector<bool> bottom_low = detail::low_caret_gaps(d.bottom, leaves - 1);
    std::optional<std::size_t> found;
    for (std::size_t g = 0; g < leaves - 1; ++g) {
      if (top_low[g] && bottom_low[g]) {
        found = g;
        break;
      }
    }
    if (!found) break;
    detail::collapse_in_forest(d.top, *found);
    detail::collapse_in_forest(d.bottom, *found);
  }
  for (;;) {
    if (d.top.trees.size() >= 2 && d.bottom.trees.size() >= 2 && is_leaf(d.top.trees.front()) &&
        is_leaf(d.bottom.trees.front()) && d.top.pointer > 0 && d.bottom.pointer > 0) {
      d.top.trees.erase(d.top.trees.begin());
      d.bottom.trees.erase(d.bottom.trees.begin());
      --d.top.pointer;
      --d.bottom.pointer;
      continue;
    }
    if (d.top.trees.size() >= 2 && d.bottom.trees.size() >= 2 && is_leaf(d.top.trees.back()) &&
        is_leaf(d.bottom.trees.back()) && d.top.pointer + 1 < d.top.trees.size() &&
        d.bottom.pointer + 1 < d.bottom.trees.size()) {
      d.top.trees.pop_back();
      d.bottom.trees.pop_back();
      continue;
    }
    break;
  }
  return d;
}

inline bool is_reduced(const ForestDiagram& d) {
  std::size_t leaves = total_leaves(d.top);
  if (leaves != total_leaves(d.bottom)) return false;
  if (leaves >= 2) {
    std::vector<bool> top_low = detail::low_caret_gaps(d.top, leaves - 1);
    std::vector<bool> bottom_low = detail::low_caret_gaps(d.bottom, leaves - 1);
    for (std::size_t g = 0; g + 1 < leaves; ++g)
      if (top_low[g] && bottom_low[g]) return false;
  }
  if (is_leaf(d.top.trees.front()) && is_leaf(d.bottom.trees.front()) && d.top.pointer > 0 &&
      d.bottom.pointer > 0)
    return false;
  if (is_leaf(d.top.trees.back()) && is_leaf(d.bottom.trees.back()) &&
      d.top.pointer + 1 < d.top.trees.size() && d.bottom.pointer + 1 < d.bottom.trees.size())
    return false;
  return true;
}

// -------------------------------------------------------- multiplication ----

namespace detail {

// Appends one aligned bare column on the right of both forests.
inline void widen_right(ForestDiagram& d) {
  d.top.trees.push_back(leaf());
  d.bottom.trees.push_back(leaf());
}

inline void widen_left(ForestDiagram& d) {
  d.top.trees.insert(d.top.trees.begin(), leaf());
  d.bottom.trees.insert(d.bottom.trees.begin(), leaf());
  ++d.top.pointer;
  ++d.bottom.pointer;
}

}  // namespace detail

inline ForestDiagram multiply(const ForestDiagram& d, Generator g) {
  ForestDiagram r = d;
  switch (g) {
    case Generator::x0: {
      if (r.bottom.pointer == 0) {
        detail::widen_left(r);  // bumps both pointers
      }
      --r.bottom.pointer;
      break;
    }
    case Generator::x0_inv: {
      if (r.bottom.pointer + 1 == r.bottom.trees.size()) detail::widen_right(r);
      ++r.bottom.pointer;
      break;
    }
    case Generator::x1: {
      std::size_t p = r.bottom.pointer;
      Tree t = r.bottom.trees[p];
      if (!is_leaf(t)) {
        // split the root caret; the left subtree keeps the pointer
        r.bottom.trees[p] = t->left;
        r.bottom.trees.insert(r.bottom.trees.begin() + static_cast<std::ptrdiff_t>(p) + 1,
                              t->right);
      } else {
        // refine the column: the pointed bare leaf splits in two below, and
        // the matching top leaf grows a caret
        std::size_t leaf_index = 0;
        for (std::size_t i = 0; i < p; ++i) leaf_index += leaf_count(r.bottom.trees[i]);
        r.bottom.trees.insert(r.bottom.trees.begin() + static_cast<std::ptrdiff_t>(p) + 1,
                              leaf());
        std::size_t offset = 0;
        bool done = false;
        for (Tree& tt : r.top.trees) {
          std::size_t leaves = leaf_count(tt);
          if (leaf_index < offset + leaves) {
            tt = detail::expand_leaf(tt, leaf_index - offset);
            done = true;
            break;
          }
          offset += leaves;
        }
        if (!done) throw std::logic_error("multiply: top leaf row too short");
      }
      break;
    }
    case Generator::x1_inv: {
      std::size_t p = r.bottom.pointer;
      if (p + 1 == r.bottom.trees.size()) detail::widen_right(r);
      Tree joined = caret(r.bottom.trees[p], r.bottom.trees[p + 1]);
      r.bottom.trees[p] = joined;
      r.bottom.trees.erase(r.bottom.trees.begin() + static_cast<std::ptrdiff_t>(p) + 1);
      break;
    }
  }
  return reduce(std::move(r));
}

inline ForestDiagram diagram_of(const Word& w) {
  ForestDiagram d = identity_diagram();
  for (Generator g : w) d = multiply(d, g);
  return d;
}

inline long long geodesic_length(const Word& w) { return weight(diagram_of(w)); }

// ---------------------------------------------------------- canonical key ----

// Pointer indices and per-tree code words; injective on reduced diagrams.
inline std::string canonical_key(const ForestDiagram& d) {
  std::string key;
  auto emit = [&key](const Forest& f) {
    key += std::to_string(f.pointer);
    key += ':';
    for (std::size_t i = 0; i < f.trees.size(); ++i) {
      if (i) key += ',';
      key += encode_tree(f.trees[i]);
    }
  };
  emit(d.top);
  key += '/';
  emit(d.bottom);
  return key;
}

inline bool diagram_equal(const ForestDiagram& a, const ForestDiagram& b) {
  return canonical_key(a) == canonical_key(b);
}

// ------------------------------------------------------------ BFS oracle ----

struct BfsOptions {
  std::size_t max_radius = 10;
  std::size_t element_budget = 10'000'000;
};

struct BfsElement {
  ForestDiagram diagram;
  int distance;
};

struct BfsBall {
  std::vector<BfsElement> elements;  // in discovery order (level by level)
  std::vector<Int> sphere_sizes;     // sphere_sizes[n] = #elements at distance n
};

// Breadth-first exploration of the Cayley graph from the identity, deduplicated
// by canonical key.  All relators have even length, so the graph is bipartite
// and level order equals word-metric distance.
inline BfsBall bfs_ball(std::size_t radius, const BfsOptions& opts = {}) {
  if (radius > opts.max_radius)
    throw std::invalid_argument("bfs_ball: radius " + std::to_string(radius) +
                                " exceeds the configured bound of " +
                                std::to_string(opts.max_radius));
  BfsBall ball;
  std::unordered_set<std::string> seen;
  ForestDiagram id = identity_diagram();
  seen.insert(canonical_key(id));
  ball.elements.push_back({id, 0});
  ball.sphere_sizes.push_back(1);
  std::size_t level_begin = 0, level_end = 1;
  for (std::size_t dist = 1; dist <= radius; ++dist) {
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Generator g : kGenerators) {
        ForestDiagram next = multiply(ball.elements[i].diagram, g);
        if (seen.insert(canonical_key(next)).second) {
          if (seen.size() > opts.element_budget)
            throw ResourceLimitError("bfs_ball: element budget of " +
                                     std::to_string(opts.element_budget) + " exceeded");
          ball.elements.push_back({std::move(next), static_cast<int>(dist)});
        }
      }
    }
    ball.sphere_sizes.push_back(Int(ball.elements.size() - level_end));
    level_begin = level_end;
    level_end = ball.elements.size();
  }
  return ball;
}

inline GrowthSeries bfs_sphere_counts(std::size_t n_max, const BfsOptions& opts = {}) {
  BfsBall ball = bfs_ball(n_max, opts);
  GrowthSeries s;
  s.values = std::move(ball.sphere_sizes);
  s.kind = SeriesKind::elements;
  s.source = SeriesSource::bfs_oracle;
  return s;
}

}  // namespace thompsonf
