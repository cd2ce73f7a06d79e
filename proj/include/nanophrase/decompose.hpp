// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "nanophrase/decide.hpp"
#include "nanophrase/triple.hpp"

namespace nanophrase {

/// A pair (m, theta): a nanomultiphrase plus a factor assignment per
/// component.  theta is locally variable (equal neighbours only across phrase
/// boundaries) and every letter of component i projects into factor theta(i).
/// A nanoword decomposes to a single-phrase value; a nanophrase to one phrase
/// per component, empty components becoming 0-component phrases.
struct DecomposedPhrase {
  Nanomultiphrase m;
  std::vector<std::size_t> theta;  // 0-based factor indices
  Factorization factorization;

  static DecomposedPhrase make(Nanomultiphrase m, std::vector<std::size_t> theta,
                               Factorization f, const HomotopyDataTriple& t);
};

std::string render_decomposed(const DecomposedPhrase& d);

/// The decomposing map: maximal same-factor runs become components.
/// Omega(psi(p)) = p.  Throws UnitFactorizationError when f has no factors.
DecomposedPhrase psi(const Nanophrase& p, const Factorization& f, const HomotopyDataTriple& t);

/// Deletes every letter with an occurrence whose component factor does not
/// match its projection; lands in the theta-compatible set.  Idempotent.
DecomposedPhrase gamma(const Nanophrase& p, const std::vector<std::size_t>& theta,
                       const Factorization& f, const HomotopyDataTriple& t);

/// Forgets theta and concatenates: one component per phrase of m.
Nanophrase omega(const DecomposedPhrase& d);

enum class PhraseMoveKind {
  SimpleReduction,
  ConcatenatingReduction,
  SimpleAugmentation,
  SplittingAugmentation
};

/// Reductions name the empty component to remove; exactly one reduction kind
/// is legal for it.  SimpleAugmentation inserts an empty component into
/// phrase `phrase` at local position `index` with factor label `factor`;
/// SplittingAugmentation splits component `index` at `split_off` around a new
/// empty component labelled `factor`.
struct PhraseMove {
  PhraseMoveKind kind;
  std::size_t index = 0;
  std::size_t phrase = 0;
  std::size_t split_off = 0;
  std::size_t factor = 0;
};

/// The unique reduction removing empty component i (multiphrase rule: a
/// first/last component of its phrase reduces simply irrespective of theta).
PhraseMove reduction_of(const DecomposedPhrase& d, std::size_t comp);

DecomposedPhrase apply_phrase_move(const DecomposedPhrase& d, const PhraseMove& mv,
                                   const HomotopyDataTriple& t);

/// Components with theta == factor, keeping phrase boundaries.
Nanomultiphrase split_by_factor(const DecomposedPhrase& d, std::size_t factor);

enum class Certification { Certified, ModuloUnknown };

/// The reduced class R_K: theta_R, the per-factor phrases P_{R,i}, and a
/// representative.  ModuloUnknown marks classes built past an Unknown
/// reducibility answer; their No-style conclusions are demoted downstream.
struct ReducedClass {
  DecomposedPhrase representative;
  Certification cert = Certification::Certified;
  std::vector<Nanomultiphrase> per_factor;

  const std::vector<std::size_t>& theta() const { return representative.theta; }
  std::size_t c_r() const { return representative.theta.size(); }
};

/// Lowest-index-first scan; a certified-reducible component has its letters
/// deleted and the value renormalized through omega then psi, repeating until
/// no component is certified reducible.
ReducedClass reduce_fully(const DecomposedPhrase& d, const HomotopyDataTriple& t,
                          const SearchBudget& budget = {});

/// psi then reduce_fully.  Throws PrimeTripleError unless the factorization
/// has at least two factors (the invariant is trivial for prime triples).
ReducedClass complete_invariant(const Nanophrase& p, const HomotopyDataTriple& t,
                                const SearchBudget& budget = {});

/// Certified comparison of two reduced classes over one triple: theta and
/// structure first, then the per-factor deciders.  No requires both sides
/// Certified; Yes is sound regardless.
Decision compare_reduced(const ReducedClass& a, const ReducedClass& b, const Factorization& f,
                         const SearchBudget& budget = {});

/// `theta: i1 i2 ... ; cert: full|partial` then one rendered multiphrase per
/// factor.
std::string render_reduced(const ReducedClass& rc);

struct ParsedReducedClass {
  std::vector<std::size_t> theta;
  Certification cert;
  std::vector<Nanomultiphrase> per_factor;
};
ParsedReducedClass parse_reduced_class(std::string_view text,
                                       TokenMode mode = TokenMode::Tokens);

struct SymmetryObstruction {
  Decision symmetric;  // No or Unknown; the condition is necessary only
  Decision skew;
};

/// Necessary conditions from theta_R: even c_R >= 2 or an asymmetric theta_R
/// certifies No.  Requires S invariant under kappa_i (and kappa_tau for the
/// skew check); contractible or prime cases stay Unknown.
SymmetryObstruction symmetry_obstruction(const Nanophrase& w, const HomotopyDataTriple& t,
                                         const SearchBudget& budget = {});

struct FactorHr {
  std::size_t factor = 0;
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool exact = false;
};

/// Bounds on the homotopy rank; exact (lower == upper) when every factor has
/// S = {}, via hr(w) = sum_i hr(P_{R,i}(w)).
struct HrReport {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::vector<FactorHr> per_factor;
  Certification cert = Certification::Certified;
};

HrReport hr_report(const Nanophrase& w, const HomotopyDataTriple& t,
                   const SearchBudget& budget = {});

}  // namespace nanophrase
