// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "nanophrase/triple.hpp"

namespace nanophrase {

/// An element of the abelian group pi generated by alpha with a*tau(a) = 1:
/// integer exponents on free tau-orbits, mod-2 exponents on fixed orbits,
/// indexed by the triple's orbit order (orientation alpha_0).  Stored in
/// canonical form, so equality and ordering are structural.
class PiElement {
 public:
  PiElement() = default;
  explicit PiElement(std::vector<int> exps) : exps_(std::move(exps)) {}

  const std::vector<int>& exps() const { return exps_; }
  bool is_identity() const;
  auto operator<=>(const PiElement&) const = default;

 private:
  std::vector<int> exps_;
};

PiElement pi_identity(const HomotopyDataTriple& t);
PiElement pi_generator(const HomotopyDataTriple& t, std::size_t symbol);
PiElement pi_mul(const HomotopyDataTriple& t, const PiElement& a, const PiElement& b);
PiElement pi_inv(const HomotopyDataTriple& t, const PiElement& a);
PiElement pi_pow(const HomotopyDataTriple& t, const PiElement& a, int n);

/// Canonical form of a word in the generators (symbol, exponent)*.
PiElement pi_from_word(const HomotopyDataTriple& t,
                       const std::vector<std::pair<std::size_t, int>>& word);

/// Sum of all exponents over alpha_0, mod 2.
int pi_x_project(const HomotopyDataTriple& t, const PiElement& a);

/// gamma_a: exponent of the representative of `orbit`.
int pi_exponent(const PiElement& a, std::size_t orbit);

/// Sorted sym^exp product; identity renders as "1".
std::string pi_render(const HomotopyDataTriple& t, const PiElement& a);

std::string pi_vector_render(const HomotopyDataTriple& t, const std::vector<PiElement>& v);

}  // namespace nanophrase
