// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "nanophrase/pi.hpp"
#include "nanophrase/triple.hpp"

namespace nanophrase {

/// Symmetric matrix of pi-products of the projections of letters shared
/// between component pairs; the diagonal is the identity.
struct LinkingMatrix {
  std::size_t n = 0;
  std::vector<PiElement> cells;  // row-major

  const PiElement& at(std::size_t i, std::size_t j) const { return cells[i * n + j]; }
  bool trivial() const;
  bool operator==(const LinkingMatrix&) const = default;
};

LinkingMatrix linking_matrix(const Nanophrase& p, const HomotopyDataTriple& t);
std::string render_linking(const LinkingMatrix& m, const HomotopyDataTriple& t);
/// True iff some off-diagonal entry of row i is not the identity.
bool linking_row_nontrivial(const LinkingMatrix& m, std::size_t i);

using K2Vector = std::vector<int>;  // (Z/2)^n, entries 0/1

std::string k2_render(const K2Vector& v);

/// The V invariant: for each (component, orbit representative), a
/// finite-support map from (Z/2)^n - {0} to Z (free orbit) or Z/2 (fixed).
/// V^{i,tau(a)} = -V^{i,a} is recovered from the stored representative.
struct VMap {
  std::size_t n = 0;
  // (component, orbit) -> nonzero values
  std::map<std::pair<std::size_t, std::size_t>, std::map<K2Vector, int>> entries;

  int value(std::size_t comp, std::size_t symbol, const K2Vector& v,
            const HomotopyDataTriple& t) const;
  bool component_trivial(std::size_t comp) const;
  bool operator==(const VMap&) const = default;
};

VMap v_invariant(const Nanophrase& p, const HomotopyDataTriple& t);
std::string render_v(const VMap& v, const HomotopyDataTriple& t);

using PiVector = std::vector<PiElement>;

/// The U invariant (diagonal S only): as V but with pi^n linking vectors.
struct UMap {
  std::size_t n = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::map<PiVector, int>> entries;

  int value(std::size_t comp, std::size_t symbol, const PiVector& v,
            const HomotopyDataTriple& t) const;
  bool component_trivial(std::size_t comp) const;
  bool operator==(const UMap&) const = default;
};

UMap u_invariant(const Nanophrase& p, const HomotopyDataTriple& t);
std::string render_u(const UMap& u, const HomotopyDataTriple& t);

/// pi^n linking vector of a letter whose occurrences both lie in one
/// component; exposed for the golden l_u values.
PiVector u_linking_vector(const Nanophrase& p, const HomotopyDataTriple& t, LetterId id);
/// (Z/2)^n linking vector of such a letter (the V building block).
K2Vector v_linking_vector(const Nanophrase& p, LetterId id);

/// Pushforward along the elementwise exponent-sum map x : pi^n -> (Z/2)^n.
VMap u_to_v(const UMap& u, const HomotopyDataTriple& t);

/// Realizability conditions: delta_a(U^{i,b}) + delta_b(U^{i,a}) = 0
/// and delta_a(U^{i,a}) = 0 for all i and a, b in alpha_0.
bool u_realizability_check(const UMap& u, const HomotopyDataTriple& t);
long u_delta(const UMap& u, const HomotopyDataTriple& t, std::size_t comp,
             std::size_t orbit_a, std::size_t orbit_b);

/// Fukunaga's S_o invariant over the block lattice K = prod K_{s,t} with
/// orbits reordered free-first.  Vectors are flat int arrays indexed by
/// (component j, s, t); the i-th map B_i drops type-(iii) vectors.
struct SoMap {
  std::size_t n = 0;
  std::size_t free_orbits = 0;   // l
  std::size_t fixed_orbits = 0;  // m
  std::map<std::size_t, std::map<std::vector<int>, int>> b;  // component -> support

  bool operator==(const SoMap&) const = default;
};

SoMap fukunaga_so(const Nanophrase& p, const HomotopyDataTriple& t);
std::string render_so(const SoMap& so, const HomotopyDataTriple& t);

/// h_{a,i}: pi^n -> K^n and kappa_i: script-K -> pi^n, the translation maps
/// between U and S_o.  kappa_i inverts h_{a,i} on the single-orbit block.
std::vector<int> so_h_map(const HomotopyDataTriple& t, std::size_t orbit_a, std::size_t comp,
                          const PiVector& v);
PiVector so_kappa_map(const HomotopyDataTriple& t, std::size_t comp, const std::vector<int>& v,
                      std::size_t* orbit_out = nullptr);

UMap so_to_u(const SoMap& so, const HomotopyDataTriple& t);
SoMap u_to_so(const UMap& u, const HomotopyDataTriple& t);

/// Cheap-first fingerprint used by the decision prefilter and the census:
/// parities, linking, V, plus U when S is diagonal.
std::string invariant_fingerprint(const Nanophrase& p, const HomotopyDataTriple& t);

}  // namespace nanophrase
