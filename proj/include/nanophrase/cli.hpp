// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nanophrase/decide.hpp"
#include "nanophrase/triple.hpp"

namespace nanophrase {

/// One equivalence class inside a census bucket.
struct CensusClass {
  std::string representative;         // lexicographically least canonical render
  std::vector<std::string> members;   // canonical renders, discovery order
};

/// Phrases sharing one invariant fingerprint, split into certified classes.
struct CensusBucket {
  std::string fingerprint;
  std::vector<CensusClass> classes;
};

/// Enumerates every canonical Gauss phrase with the given component count and
/// rank <= max_rank, over all projection assignments into t's alpha; buckets
/// by invariant fingerprint and merges within buckets by certified search.
/// Refuses max_rank > 5 unless force is set.
std::vector<CensusBucket> tabulate(const HomotopyDataTriple& t, std::size_t max_rank,
                                   std::size_t components, const SearchBudget& budget = {},
                                   bool force = false);

/// Test-friendly entry point behind the `nanophrase` binary.  Exit codes:
/// 0 = Yes/success, 1 = No, 2 = Unknown, 3 = error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nanophrase
