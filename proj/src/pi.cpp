// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nanophrase/pi.hpp"

#include "nanophrase/errors.hpp"

namespace nanophrase {

namespace {

int normalize_exp(const HomotopyDataTriple& t, std::size_t orbit, long e) {
  if (!t.orbit_free(orbit)) return static_cast<int>(((e % 2) + 2) % 2);
  return static_cast<int>(e);
}

void check_size(const HomotopyDataTriple& t, const PiElement& a) {
  if (a.exps().size() != t.orbit_count())
    throw MixedTripleError("pi element does not belong to this triple");
}

}  // namespace

bool PiElement::is_identity() const {
  for (int e : exps_)
    if (e != 0) return false;
  return true;
}

PiElement pi_identity(const HomotopyDataTriple& t) {
  return PiElement(std::vector<int>(t.orbit_count(), 0));
}

PiElement pi_generator(const HomotopyDataTriple& t, std::size_t symbol) {
  std::vector<int> exps(t.orbit_count(), 0);
  std::size_t orbit = t.orbit_of(symbol);
  // tau(rep) carries exponent -1 on a free orbit; fixed orbits live mod 2.
  int e = (t.orbit_free(orbit) && t.orbit_rep(orbit) != symbol) ? -1 : 1;
  exps[orbit] = normalize_exp(t, orbit, e);
  return PiElement(std::move(exps));
}

PiElement pi_mul(const HomotopyDataTriple& t, const PiElement& a, const PiElement& b) {
  check_size(t, a);
  check_size(t, b);
  std::vector<int> exps(t.orbit_count());
  for (std::size_t o = 0; o < exps.size(); ++o)
    exps[o] = normalize_exp(t, o, static_cast<long>(a.exps()[o]) + b.exps()[o]);
  return PiElement(std::move(exps));
}

PiElement pi_inv(const HomotopyDataTriple& t, const PiElement& a) {
  check_size(t, a);
  std::vector<int> exps(t.orbit_count());
  for (std::size_t o = 0; o < exps.size(); ++o)
    exps[o] = normalize_exp(t, o, -static_cast<long>(a.exps()[o]));
  return PiElement(std::move(exps));
}

PiElement pi_pow(const HomotopyDataTriple& t, const PiElement& a, int n) {
  check_size(t, a);
  std::vector<int> exps(t.orbit_count());
  for (std::size_t o = 0; o < exps.size(); ++o)
    exps[o] = normalize_exp(t, o, static_cast<long>(a.exps()[o]) * n);
  return PiElement(std::move(exps));
}

PiElement pi_from_word(const HomotopyDataTriple& t,
                       const std::vector<std::pair<std::size_t, int>>& word) {
  PiElement acc = pi_identity(t);
  for (const auto& [sym, e] : word)
    acc = pi_mul(t, acc, pi_pow(t, pi_generator(t, sym), e));
  return acc;
}

int pi_x_project(const HomotopyDataTriple& t, const PiElement& a) {
  check_size(t, a);
  long sum = 0;
  for (int e : a.exps()) sum += e;
  return static_cast<int>(((sum % 2) + 2) % 2);
}

int pi_exponent(const PiElement& a, std::size_t orbit) {
  if (orbit >= a.exps().size()) throw IndexOutOfRangeError("orbit index out of range");
  return a.exps()[orbit];
}

std::string pi_render(const HomotopyDataTriple& t, const PiElement& a) {
  check_size(t, a);
  std::string out;
  for (std::size_t o = 0; o < a.exps().size(); ++o) {
    int e = a.exps()[o];
    if (e == 0) continue;
    out += t.symbol(t.orbit_rep(o));
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string pi_vector_render(const HomotopyDataTriple& t, const std::vector<PiElement>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += pi_render(t, v[i]);
  }
  return out + ")";
}

}  // namespace nanophrase
