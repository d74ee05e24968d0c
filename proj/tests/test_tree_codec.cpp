#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "thompsonf/tree_codec.hpp"

using namespace thompsonf;

namespace {

// Exhaustive oracle: every binary tree with k carets, built by splitting the
// carets between the two subtrees.
std::vector<Tree> all_trees(int k) {
  if (k == 0) return {leaf()};
  std::vector<Tree> out;
  for (int i = 0; i < k; ++i)
    for (const Tree& l : all_trees(i))
      for (const Tree& r : all_trees(k - 1 - i)) out.push_back(caret(l, r));
  return out;
}

bool tree_equal(const Tree& a, const Tree& b) {
  if (is_leaf(a) || is_leaf(b)) return is_leaf(a) && is_leaf(b);
  return tree_equal(a->left, b->left) && tree_equal(a->right, b->right);
}

int codec_condition(const CodeWord& w) {
  try {
    decode_word(w);
    return -1;
  } catch (const CodecError& e) {
    return e.condition;
  }
}

}  // namespace

TEST_CASE("encoding of small trees", "[codec]") {
  CHECK(encode_tree(leaf()) == "");
  CHECK(encode_tree(caret(leaf(), leaf())) == "nI");
  CHECK(encode_tree(caret(leaf(), caret(leaf(), leaf()))) == "nNiI");
  CHECK(encode_tree(caret(caret(leaf(), leaf()), leaf())) == "nInI");
  CHECK(decode_word("") == nullptr);
}

TEST_CASE("six-caret sample word round-trips", "[codec]") {
  const CodeWord w = "nInNiInNnIiI";
  Tree t = decode_word(w);
  CHECK(caret_count(t) == 6);
  CHECK(encode_tree(t) == w);
  CHECK(upper_case_view(w) == "ININII");
}

TEST_CASE("admissibility violations are reported in order", "[codec]") {
  CHECK(codec_condition("In") == 1);
  CHECK(codec_condition("iI") == 1);
  CHECK(codec_condition("nN") == 2);   // incomplete: excess 1 left open
  CHECK(codec_condition("nIn") == 2);  // odd length
  CHECK(codec_condition("nn") == 3);
  CHECK(codec_condition("nIiInN") == 4);
  CHECK(codec_condition("nIiI") == 4);
  CHECK(codec_condition("nz") == 0);
  CHECK(is_admissible("nI"));
  CHECK(is_admissible(""));
  CHECK_FALSE(is_admissible("nN"));
}

TEST_CASE("round-trip over all trees with up to 7 carets", "[codec]") {
  std::size_t expected[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int k = 0; k <= 7; ++k) {
    std::vector<Tree> trees = all_trees(k);
    REQUIRE(trees.size() == expected[k]);
    std::set<CodeWord> seen;
    for (const Tree& t : trees) {
      CodeWord w = encode_tree(t);
      REQUIRE(w.size() == 2 * static_cast<std::size_t>(k));
      REQUIRE(is_admissible(w));
      REQUIRE(tree_equal(decode_word(w), t));
      seen.insert(w);
    }
    // distinct trees get distinct words
    CHECK(seen.size() == trees.size());
  }
}

TEST_CASE("excess of prefixes", "[codec]") {
  CHECK(excess_of("") == 0);
  CHECK(excess_of("nN") == 1);
  CHECK(excess_of("nI") == 0);
  CHECK(excess_of("nNnNiIiI") == 0);
  CHECK(excess_of("nNnN") == 2);
  CHECK_THROWS_AS(excess_of("iI"), CodecError);
  CHECK_THROWS_AS(excess_of("nIn"), std::invalid_argument);

  // every even prefix of an admissible word is a valid partial code
  for (int k = 0; k <= 6; ++k) {
    for (const Tree& t : all_trees(k)) {
      CodeWord w = encode_tree(t);
      for (std::size_t j = 0; j <= w.size(); j += 2) {
        CodeWord prefix = w.substr(0, j);
        int h = excess_of(prefix);
        CHECK(h >= 0);
        CHECK(upper_case_view(prefix).size() == j / 2);
      }
      CHECK(excess_of(w) == 0);
    }
  }
}

TEST_CASE("tree counts by length", "[codec]") {
  std::vector<Int> c = count_trees(7);
  std::vector<Int> frozen = {1, 1, 2, 5, 14, 42, 132};
  CHECK(c == frozen);

  // against the exhaustive generator: words of length l <-> trees with l-1 carets
  std::vector<Int> c9 = count_trees(9);
  for (int k = 0; k <= 7; ++k)
    CHECK(c9[static_cast<std::size_t>(k)] == Int(all_trees(k).size()));

  // independent tabulation of the full excess table, with the row-sum check:
  // each row totals 4x the previous row minus twice its excess-0 entry.
  std::vector<std::vector<Int>> rows;
  rows.push_back(std::vector<Int>(12, 0));
  rows[0][0] = 1;
  for (std::size_t l = 2; l <= 9; ++l) {
    const std::vector<Int>& prev = rows.back();
    std::vector<Int> row(12, 0);
    for (std::size_t h = 0; h + 1 < row.size(); ++h) {
      if (h == 0)
        row[h] = prev[0] + prev[1];
      else
        row[h] = prev[h + 1] + 2 * prev[h] + prev[h - 1];
    }
    Int prev_sum = 0, row_sum = 0;
    for (const Int& v : prev) prev_sum += v;
    for (const Int& v : row) row_sum += v;
    CHECK(row_sum == 4 * prev_sum - 2 * prev[0]);
    rows.push_back(row);
  }
  for (std::size_t l = 1; l <= 9; ++l) CHECK(rows[l - 1][0] == c9[l - 1]);
}
