// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nanophrase/phrase.hpp"

namespace nanophrase {

/// A homotopy data triple (alpha, tau, S): a finite ordered symbol set, an
/// involution on it, and a set of symbol triples.  tau-orbits and the
/// orientation alpha_0 (declaration-first element of every orbit) are fixed at
/// construction so that downstream exponent vectors are deterministic.
class HomotopyDataTriple {
 public:
  HomotopyDataTriple() = default;

  static HomotopyDataTriple make(std::vector<std::string> alpha,
                                 std::vector<std::size_t> tau,
                                 std::vector<std::array<std::size_t, 3>> s);
  static HomotopyDataTriple make_named(
      std::vector<std::string> alpha,
      const std::vector<std::pair<std::string, std::string>>& tau_pairs,
      const std::vector<std::array<std::string, 3>>& s);

  std::size_t size() const { return alpha_.size(); }
  bool empty_alpha() const { return alpha_.empty(); }
  const std::vector<std::string>& alpha() const { return alpha_; }
  const std::string& symbol(std::size_t i) const { return alpha_[i]; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  std::size_t tau(std::size_t i) const { return tau_[i]; }
  bool fixed(std::size_t i) const { return tau_[i] == i; }
  const std::vector<std::array<std::size_t, 3>>& s() const { return s_; }
  bool s_empty() const { return s_.empty(); }
  bool s_diagonal() const;

  std::size_t orbit_count() const { return orbit_rep_.size(); }
  std::size_t orbit_of(std::size_t sym) const { return orbit_of_[sym]; }
  /// Declaration-first element of the orbit; the orientation alpha_0.
  std::size_t orbit_rep(std::size_t orbit) const { return orbit_rep_[orbit]; }
  bool orbit_free(std::size_t orbit) const { return orbit_free_[orbit]; }

  bool operator==(const HomotopyDataTriple& o) const {
    return alpha_ == o.alpha_ && tau_ == o.tau_ && s_ == o.s_;
  }

 private:
  std::vector<std::string> alpha_;
  std::vector<std::size_t> tau_;
  std::vector<std::array<std::size_t, 3>> s_;  // sorted, unique
  std::vector<std::size_t> orbit_of_;
  std::vector<std::size_t> orbit_rep_;
  std::vector<bool> orbit_free_;
};

/// File format:
///   alpha: a b c d
///   tau: a<->b c<->d        (unlisted or singleton symbols are fixed points)
///   S: (a,b,a) (c,d,c)      (or `S: diagonal`; omitted or empty means S = {})
/// Lines starting with '#' are comments.
HomotopyDataTriple parse_triple(std::string_view text);
std::string render_triple(const HomotopyDataTriple& t);

/// Tagged-disjoint-union product; symbols are renamed "1.x" / "2.x".
HomotopyDataTriple product(const HomotopyDataTriple& t1, const HomotopyDataTriple& t2);

/// True iff beta is tau-invariant and every S-triple lies wholly inside beta
/// or wholly inside its complement.
bool is_factor(const std::vector<std::size_t>& beta, const HomotopyDataTriple& t);

/// Restriction of t to a tau-invariant symbol subset (given by parent indices,
/// in parent declaration order).
HomotopyDataTriple restrict_triple(const HomotopyDataTriple& t,
                                   const std::vector<std::size_t>& beta);

struct Factorization {
  std::vector<HomotopyDataTriple> factors;
  /// Per factor, the parent-alpha index of each factor symbol.
  std::vector<std::vector<std::size_t>> embeddings;

  std::size_t k() const { return factors.size(); }
  /// Factor index owning a parent symbol.
  std::size_t factor_of(std::size_t parent_sym) const;

 private:
  friend Factorization prime_factorize(const HomotopyDataTriple& t);
  std::vector<std::size_t> factor_of_;
};

/// Finest factor partition: union-find over tau-orbits, merging the orbits of
/// the three coordinates of every S-triple.  Factors are sorted by
/// (|alpha|, sorted symbol names) and are all prime.
Factorization prime_factorize(const HomotopyDataTriple& t);

/// Exhaustive search over orbit-structure-compatible bijections.  On success
/// the witness (if requested) maps t1 symbol indices to t2 symbol indices.
bool triples_isomorphic(const HomotopyDataTriple& t1, const HomotopyDataTriple& t2,
                        std::vector<std::size_t>* witness = nullptr);

bool is_prime(const HomotopyDataTriple& t);

/// "alpha_G" / "alpha_F" for the two diagonal primes, "" otherwise.
std::string classify_diagonal_prime(const HomotopyDataTriple& t);

/// Throws UnknownSymbolError if some projection target is not in t's alpha.
void validate_projections(const Nanophrase& p, const HomotopyDataTriple& t);
void validate_projections(const Nanomultiphrase& m, const HomotopyDataTriple& t);

enum class WhichTransform { Opposite, Inverse };

/// Opposite reverses component order and each component; Inverse composes the
/// projections with tau.  Both are involutions and they commute.
Nanophrase opposite_inverse(const Nanophrase& p, const HomotopyDataTriple& t,
                            WhichTransform which);

}  // namespace nanophrase
