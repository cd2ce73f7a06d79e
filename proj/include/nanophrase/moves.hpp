// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "nanophrase/triple.hpp"

namespace nanophrase {

enum class MoveKind { H1Reduce, H2Reduce, H3, H1Augment, H2Augment };

/// A concrete move match.  Positions refer to the phrase the site was
/// enumerated on; applying a site to a different phrase throws StaleSiteError.
///
///   H1Reduce:  a = first of the two adjacent occurrences of one letter.
///   H2Reduce:  a = start of the AB block, b = start of the BA block.
///   H3:        a,b,c = starts of the three adjacent pairs; backward selects
///              the xBAyCAzCBt -> xAByACzBCt direction.
///   H1Augment: a = insertion gap (off may equal the component length),
///              sym_a = label.
///   H2Augment: a,b = insertion gaps for the AB / BA blocks, sym_a / sym_b =
///              the labels (sym_b = tau(sym_a)).
struct MoveSite {
  MoveKind kind;
  Occurrence a, b, c;
  bool backward = false;
  std::string sym_a, sym_b;
};

std::string render_site(const MoveSite& s);

/// All reducing H1/H2 sites, both-direction H3 sites, and (optionally) the
/// finite family of augmenting sites: every insertion gap x every alpha label.
/// H2 matches require the inner pair to be non-adjacent; the adjacent case is
/// exactly two H1 moves and is enumerated as such.
std::vector<MoveSite> enumerate_moves(const Nanophrase& p, const HomotopyDataTriple& t,
                                      bool include_augmenting = true);

struct MoveResult {
  Nanophrase result;
  MoveSite inverse;  // valid on `result`, undoes the move
};

MoveResult apply_move(const Nanophrase& p, const MoveSite& site);

/// Unique minimizing normal form for S = {}: reducing H1/H2
/// moves applied to exhaustion, then canonicalized.  Component indices are
/// stable, so the i-th component of the result answers i-reducibility.
Nanophrase normal_form_empty_s(const Nanophrase& p, const HomotopyDataTriple& t);

/// Same, also reporting the applied reduction script (sites on the successive
/// uncanonicalized phrases).
struct NormalFormTrace {
  Nanophrase normal_form;  // canonicalized
  std::vector<MoveSite> script;
};
NormalFormTrace normal_form_empty_s_traced(const Nanophrase& p, const HomotopyDataTriple& t);

}  // namespace nanophrase
