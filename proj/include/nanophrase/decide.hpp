// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nanophrase/moves.hpp"
#include "nanophrase/triple.hpp"

namespace nanophrase {

struct SearchBudget {
  int rank_delta = 2;
  long node_budget = 200000;
};

enum class Verdict { Yes, No, Unknown };

/// A certified-No carries the invariant that separates; both values are
/// recomputable from the inputs.
struct Obstruction {
  std::string kind;  // "component-count", "parity", "linking", "V", "U",
                     // "normal-form", "theta_R", "factor", "subword-V", "subword-U"
  std::string detail;
};

/// Three-valued certified answer.  Yes paths are move scripts applied to the
/// successive *canonicalized* phrases: replay as
///   q0 = canonicalize(p); q_{k+1} = canonicalize(apply_move(q_k, path[k])).
struct Decision {
  Verdict verdict = Verdict::Unknown;
  std::vector<MoveSite> path_p;  // from p to the meeting form
  std::vector<MoveSite> path_q;  // from q to the same form (empty for one-sided asks)
  std::optional<Obstruction> obstruction;
  std::string note;  // budget report or route description

  bool yes() const { return verdict == Verdict::Yes; }
  bool no() const { return verdict == Verdict::No; }
  bool unknown() const { return verdict == Verdict::Unknown; }
};

std::string render_decision(const Decision& d);

/// Replays a Yes path; returns the final canonical form.
Nanophrase replay_path(const Nanophrase& p, const std::vector<MoveSite>& path);

/// First invariant separating p from q, if any (parities, linking matrix, V,
/// then U when S is diagonal).
std::optional<Obstruction> invariant_obstruction(const Nanophrase& p, const Nanophrase& q,
                                                 const HomotopyDataTriple& t);

/// Bounded bidirectional search over canonicalized phrases of rank at most
/// max(rank p, rank q) + rank_delta.  Yes on meet (with move paths), No only
/// via the invariant prefilter, Unknown on budget exhaustion.
Decision bfs_equivalent(const Nanophrase& p, const Nanophrase& q, const HomotopyDataTriple& t,
                        const SearchBudget& budget = {});

/// Is p homotopic to a phrase whose comp-th component is empty?  Exact for
/// S = {} via the minimizing normal form; otherwise obstructions then a
/// bounded search.  comp is 0-based.
Decision decide_reducible(const Nanophrase& p, std::size_t comp, const HomotopyDataTriple& t,
                          const SearchBudget& budget = {});

/// Certified equality decider.  Dispatch: number of components; exact normal
/// forms when S = {}; invariant prefilter; the factorization route for
/// composite triples; bounded search.  Never returns a wrong certified
/// verdict; Unknown is a first-class result.
Decision decide_equal(const Nanophrase& p, const Nanophrase& q, const HomotopyDataTriple& t,
                      const SearchBudget& budget = {});

/// Minimum rank among phrases visited by a bounded one-sided search from p;
/// an upper bound for the homotopy rank hr(p).
std::size_t min_rank_reachable(const Nanophrase& p, const HomotopyDataTriple& t,
                               const SearchBudget& budget = {});

}  // namespace nanophrase
