#pragma once

// Weight-ordered enumeration of reduced diagrams, one column at a time.  A
// reduced diagram is read left to right as a sequence of columns; each half
// (top and bottom) of the growing diagram is summarized by a three-field
// state: the label of its last gap, whether that gap sits left or right of
// the pointer, and how many carets are still open.  Appending a column maps
// each half-state to a small successor set, and the only inadmissible
// combination is the one that would close a common caret: both halves
// entering I from halves that were not already inside a tree.
//
// The dynamic program walks weight levels upward from a single seed column
// [L/L] of weight 2, keeping just five consecutive levels alive (a column
// weighs between 1 and 4).  Diagram counts are read off at the all-[R/R]
// sink, giving a padded series h; stripping the mandatory boundary padding
// with f(n) = h(n+4) - 2 h(n+2) + h(n) yields the number of group elements
// of geodesic length n in time O(n^3) and space O(n^2).

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "forest_core.hpp"
#include "series.hpp"

namespace thompsonf {

enum class Side : unsigned char { left = 0, right = 1 };

struct HalfState {
  GapLabel label;
  Side side;
  unsigned excess;  // carets opened but not yet closed

  friend bool operator==(const HalfState& a, const HalfState& b) {
    return a.label == b.label && a.side == b.side && a.excess == b.excess;
  }
};

struct NegativityError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void validate_half_state(const HalfState& s) {
  switch (s.label) {
    case GapLabel::L:
      if (s.side != Side::left || s.excess != 0)
        throw std::invalid_argument("half-state: L must sit left of the pointer with excess 0");
      break;
    case GapLabel::R:
    case GapLabel::X:
      if (s.side != Side::right || s.excess != 0)
        throw std::invalid_argument(
            "half-state: R and X must sit right of the pointer with excess 0");
      break;
    case GapLabel::N:
      if (s.excess == 0) throw std::invalid_argument("half-state: N requires excess >= 1");
      break;
    case GapLabel::I:
      break;
  }
}

namespace detail {

// successors of a valid half-state; returns how many were written
inline std::size_t half_transitions(const HalfState& s, std::array<HalfState, 7>& out) {
  const Side L = Side::left;
  const Side R = Side::right;
  switch (s.label) {
    case GapLabel::L:
      out = {{{GapLabel::L, L, 0},
              {GapLabel::N, L, 1},
              {GapLabel::I, L, 0},
              {GapLabel::N, R, 1},
              {GapLabel::I, R, 0},
              {GapLabel::R, R, 0},
              {GapLabel::X, R, 0}}};
      return 7;
    case GapLabel::R:
      out[0] = {GapLabel::R, R, 0};
      out[1] = {GapLabel::X, R, 0};
      return 2;
    case GapLabel::X:
      out[0] = {GapLabel::N, R, 1};
      out[1] = {GapLabel::I, R, 0};
      return 2;
    case GapLabel::N:
    case GapLabel::I:
      if (s.excess > 0) {
        out[0] = {GapLabel::N, s.side, s.excess + 1};
        out[1] = {GapLabel::N, s.side, s.excess};
        out[2] = {GapLabel::I, s.side, s.excess};
        out[3] = {GapLabel::I, s.side, s.excess - 1};
        return 4;
      }
      // a finished tree: left of the pointer it may close out to L, right of
      // it the diagram may end in R or X
      if (s.side == Side::left) {
        out[0] = {GapLabel::N, L, 1};
        out[1] = {GapLabel::I, L, 0};
        out[2] = {GapLabel::L, L, 0};
        return 3;
      }
      out[0] = {GapLabel::N, R, 1};
      out[1] = {GapLabel::I, R, 0};
      out[2] = {GapLabel::R, R, 0};
      out[3] = {GapLabel::X, R, 0};
      return 4;
  }
  throw std::logic_error("half_transitions: unreachable label");
}

inline std::uint32_t pack_half(const HalfState& s) {
  return (static_cast<std::uint32_t>(s.label) << 24) |
         (static_cast<std::uint32_t>(s.side) << 20) | s.excess;
}

inline std::uint64_t pack_pair(const HalfState& top, const HalfState& bottom) {
  return (static_cast<std::uint64_t>(pack_half(top)) << 32) | pack_half(bottom);
}

inline HalfState unpack_half(std::uint32_t k) {
  return {static_cast<GapLabel>(k >> 24), static_cast<Side>((k >> 20) & 1),
          k & 0xfffffu};
}

using LevelMap = std::unordered_map<std::uint64_t, Int>;

// Runs the whole dynamic program up to weight M, reporting h_n for every
// n = 0..M in order.  With prune set, states that cannot wind their open
// carets down to zero within the remaining weight budget are dropped early;
// the reachable totals are identical either way.  A nonzero max_states caps
// the number of live window entries and aborts with ResourceLimitError when
// the cap would be exceeded.
inline void run_column_transfer(std::size_t M, bool prune,
                                const std::function<void(std::size_t, const Int&)>& on_h,
                                std::size_t max_states = 0) {
  if (M < 4) throw std::invalid_argument("run_column_transfer: weight bound must be >= 4");
  std::array<LevelMap, 5> window;
  const HalfState seed{GapLabel::L, Side::left, 0};
  const HalfState sink{GapLabel::R, Side::right, 0};
  window[2 % 5][pack_pair(seed, seed)] = 1;
  const std::uint64_t sink_key = pack_pair(sink, sink);
  const Int zero = 0;

  for (std::size_t n = 0; n <= M; ++n) {
    LevelMap& level = window[n % 5];
    auto hit = level.find(sink_key);
    on_h(n, hit == level.end() ? zero : hit->second);

    if (n >= 2 && n + 1 <= M) {
      std::array<HalfState, 7> tops;
      std::array<HalfState, 7> bottoms;
      for (const auto& [key, count] : level) {
        HalfState top = unpack_half(static_cast<std::uint32_t>(key >> 32));
        HalfState bottom = unpack_half(static_cast<std::uint32_t>(key));
        bool caret_possible = top.label != GapLabel::I && bottom.label != GapLabel::I;
        std::size_t tn = half_transitions(top, tops);
        std::size_t bn = half_transitions(bottom, bottoms);
        for (std::size_t i = 0; i < tn; ++i) {
          for (std::size_t j = 0; j < bn; ++j) {
            if (caret_possible && tops[i].label == GapLabel::I &&
                bottoms[j].label == GapLabel::I)
              continue;  // the new column would close a common caret
            std::size_t w = n + static_cast<std::size_t>(
                                    column_weight(tops[i].label, bottoms[j].label));
            if (w > M) continue;
            if (prune && (tops[i].excess > M - w || bottoms[j].excess > M - w)) continue;
            window[w % 5][pack_pair(tops[i], bottoms[j])] += count;
          }
        }
      }
      if (max_states > 0) {
        std::size_t live = 0;
        for (const LevelMap& m : window) live += m.size();
        if (live > max_states)
          throw ResourceLimitError("run_column_transfer: " + std::to_string(live) +
                                   " live states exceed the budget of " +
                                   std::to_string(max_states));
      }
    }
    level.clear();
  }
}

}  // namespace detail

inline std::vector<HalfState> transitions_left(const HalfState& s) {
  validate_half_state(s);
  if (s.side != Side::left)
    throw std::invalid_argument("transitions_left: state sits right of the pointer");
  std::array<HalfState, 7> buf;
  std::size_t k = detail::half_transitions(s, buf);
  return {buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(k)};
}

inline std::vector<HalfState> transitions_right(const HalfState& s) {
  validate_half_state(s);
  if (s.side != Side::right)
    throw std::invalid_argument("transitions_right: state sits left of the pointer");
  std::array<HalfState, 7> buf;
  std::size_t k = detail::half_transitions(s, buf);
  return {buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(k)};
}

struct PaddedSeries {
  std::vector<Int> h;  // h[n] = padded diagrams of total weight exactly n
};

inline PaddedSeries enumerate_padded(std::size_t M, bool prune = false) {
  PaddedSeries out;
  out.h.reserve(M + 1);
  detail::run_column_transfer(M, prune,
                              [&](std::size_t, const Int& hn) { out.h.push_back(hn); });
  return out;
}

inline GrowthSeries correct_series(const PaddedSeries& padded) {
  if (padded.h.size() < 5)
    throw std::invalid_argument("correct_series: need the padded series up to weight 4");
  GrowthSeries out;
  out.kind = SeriesKind::elements;
  out.source = SeriesSource::algorithm_b;
  std::size_t M = padded.h.size() - 1;
  out.values.reserve(M - 3);
  for (std::size_t n = 0; n + 4 <= M; ++n) {
    Int f = padded.h[n + 4] - 2 * padded.h[n + 2] + padded.h[n];
    if (f < 0)
      throw NegativityError("correct_series: negative count at length " + std::to_string(n));
    out.values.push_back(std::move(f));
  }
  return out;
}

// f(0..N) in one pass, emitting each value as soon as its weight level closes
inline void stream_growth(std::size_t N,
                          const std::function<void(std::size_t, const Int&)>& emit,
                          bool prune = false, std::size_t max_states = 0) {
  std::array<Int, 5> recent;
  detail::run_column_transfer(N + 4, prune, [&](std::size_t n, const Int& hn) {
    recent[n % 5] = hn;
    if (n < 4) return;
    Int f = recent[n % 5] - 2 * recent[(n - 2) % 5] + recent[(n - 4) % 5];
    if (f < 0)
      throw NegativityError("stream_growth: negative count at length " +
                            std::to_string(n - 4));
    emit(n - 4, f);
  }, max_states);
}

inline GrowthSeries growth_series(std::size_t N, bool prune = false,
                                  std::size_t max_states = 0) {
  GrowthSeries out;
  out.kind = SeriesKind::elements;
  out.source = SeriesSource::algorithm_b;
  out.values.resize(N + 1);
  stream_growth(N, [&](std::size_t n, const Int& fn) { out.values[n] = fn; }, prune,
                max_states);
  return out;
}

}  // namespace thompsonf
