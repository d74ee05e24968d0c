#pragma once

// Linear encoding of finite binary trees over the alphabet {n, N, i, I}.
//
// The code word lists the nodes of a tree in in-order, skipping the leftmost
// leaf.  Lower case marks a caret (internal node), upper case marks a leaf.
// The letter is n/N when the node is a left child (or the root), i/I when it
// is a right child.  A tree with k carets encodes as a word of length 2k in
// which carets and leaves alternate; the trivial tree encodes as the empty
// word.
//
// A word is a valid code (is "admissible") iff
//   (1) it starts with n,
//   (2) it ends with I,
//   (3) lower-case and upper-case letters alternate, starting lower-case,
//   (4) every prefix u satisfies |u|_n + |u|_N >= |u|_i + |u|_I,
//   (5) the two totals in (4) are equal for the whole word.
// The excess of an even-length prefix u is half the difference in (4); it
// measures how many carets are still waiting for their right subtree.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "types.hpp"

namespace thompsonf {

struct TreeNode;
using Tree = std::shared_ptr<const TreeNode>;  // nullptr is a bare leaf

struct TreeNode {
  Tree left;
  Tree right;
};

inline Tree leaf() { return nullptr; }

inline Tree caret(Tree left, Tree right) {
  return std::make_shared<const TreeNode>(TreeNode{std::move(left), std::move(right)});
}

inline bool is_leaf(const Tree& t) { return t == nullptr; }

inline std::size_t caret_count(const Tree& t) {
  std::size_t n = 0;
  std::vector<const TreeNode*> stack;
  if (t) stack.push_back(t.get());
  while (!stack.empty()) {
    const TreeNode* p = stack.back();
    stack.pop_back();
    ++n;
    if (p->left) stack.push_back(p->left.get());
    if (p->right) stack.push_back(p->right.get());
  }
  return n;
}

inline std::size_t leaf_count(const Tree& t) { return caret_count(t) + 1; }

using CodeWord = std::string;
using Excess = int;

struct CodecError : std::runtime_error {
  // 1-based index of the first violated admissibility condition; 0 when the
  // word contains a letter outside {n, N, i, I}.
  int condition;
  CodecError(int cond, const std::string& what) : std::runtime_error(what), condition(cond) {}
};

namespace detail {

inline bool is_code_letter(char c) { return c == 'n' || c == 'N' || c == 'i' || c == 'I'; }
inline bool is_caret_letter(char c) { return c == 'n' || c == 'i'; }
inline bool is_left_letter(char c) { return c == 'n' || c == 'N'; }

}  // namespace detail

// Checks conditions (1)-(5) above, throwing CodecError for the first
// violation in reading order.  The empty word is admissible (trivial tree).
inline void validate_code_word(const CodeWord& w) {
  if (w.empty()) return;
  if (w.front() != 'n') throw CodecError(1, "code word must start with 'n'");
  int balance = 0;  // (#n + #N) - (#i + #I) over the prefix read so far
  for (std::size_t k = 0; k < w.size(); ++k) {
    char c = w[k];
    if (!detail::is_code_letter(c))
      throw CodecError(0, std::string("letter '") + c + "' not in {n, N, i, I} at position " +
                              std::to_string(k));
    bool want_lower = (k % 2 == 0);
    if (detail::is_caret_letter(c) != want_lower)
      throw CodecError(3, "lower/upper case letters must alternate, violated at position " +
                              std::to_string(k));
    balance += detail::is_left_letter(c) ? 1 : -1;
    if (balance < 0)
      throw CodecError(4, "prefix ending at position " + std::to_string(k) +
                              " has more i/I than n/N");
  }
  if (w.size() % 2 != 0 || w.back() != 'I')
    throw CodecError(2, "code word is incomplete: it must end with 'I' (excess " +
                            std::to_string((balance + 1) / 2) + ")");
  if (balance != 0)
    throw CodecError(5, "totals unbalanced: excess " + std::to_string(balance / 2) +
                            " left at end of word");
}

inline bool is_admissible(const CodeWord& w) {
  try {
    validate_code_word(w);
    return true;
  } catch (const CodecError&) {
    return false;
  }
}

inline CodeWord encode_tree(const Tree& t) {
  CodeWord out;
  out.reserve(2 * caret_count(t));
  // In-order walk with an explicit stack; `as_right` tracks whether the node
  // about to be visited hangs off its parent as a right child.
  std::vector<std::pair<const TreeNode*, bool>> pending;
  const TreeNode* cur = t.get();
  bool as_right = false;  // the root reads as a left child
  bool first_leaf = true;
  for (;;) {
    while (cur) {
      pending.emplace_back(cur, as_right);
      cur = cur->left.get();
      as_right = false;
    }
    if (first_leaf)
      first_leaf = false;
    else
      out.push_back(as_right ? 'I' : 'N');
    if (pending.empty()) break;
    auto [node, node_as_right] = pending.back();
    pending.pop_back();
    out.push_back(node_as_right ? 'i' : 'n');
    cur = node->right.get();
    as_right = true;
  }
  return out;
}

// Inverse of encode_tree.  Parses with a stack: a leaf N, a caret letter and
// a leaf I standing next to each other in in-order form one caret, which then
// reads as a single leaf of its parent (upper case of the caret letter).
inline Tree decode_word(const CodeWord& w) {
  validate_code_word(w);
  if (w.empty()) return leaf();
  struct Item {
    char letter;
    Tree tree;
  };
  std::vector<Item> stack;
  stack.push_back({'N', leaf()});  // stands in for the skipped leftmost leaf
  for (char c : w) {
    if (detail::is_caret_letter(c))
      stack.push_back({c, nullptr});
    else
      stack.push_back({c, leaf()});
    while (stack.size() >= 3) {
      const Item& a = stack[stack.size() - 3];
      const Item& b = stack[stack.size() - 2];
      const Item& d = stack[stack.size() - 1];
      if (a.letter != 'N' || !detail::is_caret_letter(b.letter) || d.letter != 'I') break;
      Item merged{b.letter == 'n' ? 'N' : 'I', caret(a.tree, d.tree)};
      stack.pop_back();
      stack.pop_back();
      stack.pop_back();
      stack.push_back(std::move(merged));
    }
  }
  if (stack.size() != 1 || stack.front().letter != 'N')
    throw CodecError(5, "code word did not reduce to a single tree");
  return stack.front().tree;
}

// Excess of an even-length alternating word (not necessarily complete).
inline Excess excess_of(const CodeWord& w) {
  if (w.size() % 2 != 0)
    throw std::invalid_argument("excess_of: word must have even length");
  int balance = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    char c = w[k];
    if (!detail::is_code_letter(c))
      throw std::invalid_argument("excess_of: letter not in {n, N, i, I}");
    if (detail::is_caret_letter(c) != (k % 2 == 0))
      throw std::invalid_argument("excess_of: cases must alternate starting lower-case");
    balance += detail::is_left_letter(c) ? 1 : -1;
    if (balance < 0)
      throw CodecError(4, "negative excess at position " + std::to_string(k));
  }
  return balance / 2;
}

inline std::string upper_case_view(const CodeWord& w) {
  std::string out;
  out.reserve(w.size() / 2);
  for (char c : w)
    if (c == 'N' || c == 'I') out.push_back(c);
  return out;
}

// Number of admissible words of each length, tabulated by the excess
// recurrence.  Entry l-1 of the result counts binary trees with l-1 carets
// (1, 1, 2, 5, 14, ...): appending a letter pair nN/nI/iN/iI moves the
// excess by +1/0/0/-1, and both 0-moves are available once the excess is
// positive.
inline std::vector<Int> count_trees(std::size_t max_len) {
  std::vector<Int> out;
  if (max_len == 0) return out;
  std::vector<Int> row(max_len + 2, 0), next(max_len + 2, 0);
  row[0] = 1;
  out.push_back(row[0]);
  for (std::size_t l = 2; l <= max_len; ++l) {
    for (std::size_t h = 0; h + 1 < row.size(); ++h) {
      if (h == 0)
        next[h] = row[0] + row[1];
      else
        next[h] = row[h + 1] + 2 * row[h] + row[h - 1];
    }
    next[row.size() - 1] = 0;
    row.swap(next);
    out.push_back(row[0]);
  }
  return out;
}

}  // namespace thompsonf
