// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "nanophrase/decide.hpp"
#include "nanophrase/moves.hpp"
#include "nanophrase/phrase.hpp"
#include "nanophrase/triple.hpp"

namespace testutil {

using namespace nanophrase;

inline HomotopyDataTriple alpha_g() {
  return HomotopyDataTriple::make_named({"a"}, {}, {{{"a", "a", "a"}}});
}

inline HomotopyDataTriple alpha_f() {
  return HomotopyDataTriple::make_named({"a", "b"}, {{"a", "b"}},
                                        {{{"a", "a", "a"}}, {{"b", "b", "b"}}});
}

// tau swaps a,b and fixes c; S = {(a,b,c),(c,b,a)} couples both orbits.
inline HomotopyDataTriple triple_swap_fix() {
  return HomotopyDataTriple::make_named({"a", "b", "c"}, {{"a", "b"}},
                                        {{{"a", "b", "c"}}, {{"c", "b", "a"}}});
}

// Two free orbits a<->b and c<->d; S diagonal.
inline HomotopyDataTriple triple_two_swaps() {
  return HomotopyDataTriple::make_named(
      {"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}},
      {{{"a", "a", "a"}}, {{"b", "b", "b"}}, {{"c", "c", "c"}}, {{"d", "d", "d"}}});
}

// Composite all-empty-S: orbits {a}, {b,c} are the two prime factors.
inline HomotopyDataTriple empty_s_composite() {
  return HomotopyDataTriple::make_named({"a", "b", "c"}, {{"b", "c"}}, {});
}

// Two identity-orbit factors {a}, {b}; S empty.
inline HomotopyDataTriple empty_s_two_singletons() {
  return HomotopyDataTriple::make_named({"a", "b"}, {}, {});
}

// Diagonal S over {a,b} with identity tau: factors alpha_G x alpha_G.
inline HomotopyDataTriple diag_two_singletons() {
  return HomotopyDataTriple::make_named({"a", "b"}, {},
                                        {{{"a", "a", "a"}}, {{"b", "b", "b"}}});
}

inline std::string symbol_name(std::size_t i) { return std::string(1, char('a' + i)); }

enum class SKind { Empty, Diagonal, Random };

inline HomotopyDataTriple random_triple(std::mt19937& rng, std::size_t max_symbols,
                                        SKind skind) {
  std::uniform_int_distribution<std::size_t> nsym(1, max_symbols);
  std::size_t n = nsym(rng);
  std::vector<std::string> alpha;
  for (std::size_t i = 0; i < n; ++i) alpha.push_back(symbol_name(i));
  std::vector<std::size_t> tau(n);
  std::iota(tau.begin(), tau.end(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (tau[i] != i) continue;
    std::vector<std::size_t> avail;
    for (std::size_t j = i + 1; j < n; ++j)
      if (tau[j] == j) avail.push_back(j);
    if (!avail.empty() && rng() % 2 == 0) {
      std::size_t j = avail[rng() % avail.size()];
      tau[i] = j;
      tau[j] = i;
    }
  }
  std::vector<std::array<std::size_t, 3>> s;
  if (skind == SKind::Diagonal) {
    for (std::size_t i = 0; i < n; ++i) s.push_back({i, i, i});
  } else if (skind == SKind::Random) {
    std::size_t count = rng() % 4;
    for (std::size_t k = 0; k < count; ++k)
      s.push_back({rng() % n, rng() % n, rng() % n});
  }
  return HomotopyDataTriple::make(std::move(alpha), std::move(tau), std::move(s));
}

inline Nanophrase random_gauss_phrase(std::mt19937& rng, const HomotopyDataTriple& t,
                                      std::size_t max_rank, std::size_t max_comps) {
  std::uniform_int_distribution<std::size_t> rrank(0, max_rank);
  std::uniform_int_distribution<std::size_t> rcomp(1, max_comps);
  std::size_t r = rrank(rng);
  std::size_t n = rcomp(rng);
  std::vector<std::size_t> positions(2 * r);
  std::iota(positions.begin(), positions.end(), 0);
  std::shuffle(positions.begin(), positions.end(), rng);

  std::vector<std::size_t> letter_of(2 * r);
  for (std::size_t k = 0; k < r; ++k) {
    letter_of[positions[2 * k]] = k;
    letter_of[positions[2 * k + 1]] = k;
  }
  // random composition of 2r into n parts
  std::vector<std::size_t> sizes(n, 0);
  for (std::size_t i = 0; i < 2 * r; ++i) ++sizes[rng() % n];

  std::vector<Letter> letters;
  for (std::size_t k = 0; k < r; ++k)
    letters.push_back(Letter{"L" + std::to_string(k + 1), t.symbol(rng() % t.size())});
  std::vector<std::vector<LetterId>> comps;
  std::size_t pos = 0;
  for (std::size_t size : sizes) {
    std::vector<LetterId> word;
    for (std::size_t i = 0; i < size; ++i) word.push_back(letter_of[pos++]);
    comps.push_back(std::move(word));
  }
  return Nanophrase::make(std::move(letters), std::move(comps));
}

/// Applies up to `count` uniformly chosen legal moves (augmenting included
/// while the rank stays under rank_cap).
inline Nanophrase apply_random_moves(std::mt19937& rng, Nanophrase p,
                                     const HomotopyDataTriple& t, std::size_t count,
                                     std::size_t rank_cap) {
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<MoveSite> sites = enumerate_moves(p, t, p.rank() + 2 <= rank_cap);
    if (sites.empty()) break;
    p = apply_move(p, sites[rng() % sites.size()]).result;
  }
  return p;
}

/// Independent matching oracle: number of perfect matchings of `points`
/// points, computed by direct recursion (not via the library).
inline std::size_t count_matchings_oracle(std::size_t points) {
  if (points % 2 == 1) return 0;
  if (points == 0) return 1;
  // first point pairs with any of the others
  return (points - 1) * count_matchings_oracle(points - 2);
}

/// Renames letters through an explicit random bijection and shuffles the
/// registry order; the result is isomorphic to p by construction.
inline Nanophrase random_relabel(std::mt19937& rng, const Nanophrase& p) {
  std::size_t r = p.rank();
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Letter> letters(r);
  for (std::size_t id = 0; id < r; ++id)
    letters[perm[id]] = Letter{"R" + std::to_string(perm[id] + 1), p.letters()[id].symbol};
  std::vector<std::vector<LetterId>> comps;
  for (const auto& word : p.components()) {
    std::vector<LetterId> w;
    for (LetterId id : word) w.push_back(perm[id]);
    comps.push_back(std::move(w));
  }
  return Nanophrase::make(std::move(letters), std::move(comps));
}

}  // namespace testutil
