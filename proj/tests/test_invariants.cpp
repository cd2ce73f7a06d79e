// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "nanophrase/errors.hpp"
#include "nanophrase/invariants.hpp"
#include "testutil.hpp"

using namespace nanophrase;

namespace {

// Phrase with trivial linking matrix but nontrivial V.
Nanophrase v_sample_phrase() {
  return parse_nanophrase("A:a D:a B:b F:b C:c E:c G:c ; ADBAEBFG|CDCF|EG");
}

// Diagonal-S phrase whose U separates it from u_sample_q.
Nanophrase u_sample_p() {
  return parse_nanophrase("A:a C:a E:a B:c D:d F:d ; ACDEABFB|CE|DF");
}

Nanophrase u_sample_q() { return parse_nanophrase("C:a E:a D:d F:d ; CDEF|CE|DF"); }

}  // namespace

TEST_CASE("linking matrix golden") {
  // tau is irrelevant to the displayed entries with all symbols fixed.
  HomotopyDataTriple t = HomotopyDataTriple::make_named({"a", "b", "c"}, {}, {});
  Nanophrase p = parse_nanophrase("A:a B:b C:c ; ABC|AC|B");
  LinkingMatrix m = linking_matrix(p, t);
  CHECK(render_linking(m, t) == "1 ac b\nac 1 1\nb 1 1\n");
  CHECK(linking_row_nontrivial(m, 0));
  CHECK(linking_row_nontrivial(m, 1));
  CHECK(linking_row_nontrivial(m, 2));
}

TEST_CASE("linking matrix is symmetric with unit diagonal; empty phrase trivial") {
  std::mt19937 rng(43);
  HomotopyDataTriple t = testutil::random_triple(rng, 4, testutil::SKind::Random);
  for (int i = 0; i < 20; ++i) {
    Nanophrase p = testutil::random_gauss_phrase(rng, t, 5, 4);
    LinkingMatrix m = linking_matrix(p, t);
    for (std::size_t a = 0; a < m.n; ++a) {
      CHECK(m.at(a, a).is_identity());
      for (std::size_t b = 0; b < m.n; ++b) CHECK(m.at(a, b) == m.at(b, a));
    }
  }
  Nanophrase empty = parse_nanophrase("; _|_|_");
  CHECK(linking_matrix(empty, t).trivial());
}

TEST_CASE("V invariant golden") {
  HomotopyDataTriple t = testutil::triple_swap_fix();
  Nanophrase p = v_sample_phrase();
  CHECK(linking_matrix(p, t).trivial());

  LetterId A = 0, B = 2, C = 4;  // registry order A,D,B,F,C,E,G
  REQUIRE(p.letters()[A].name == "A");
  REQUIRE(p.letters()[B].name == "B");
  REQUIRE(p.letters()[C].name == "C");
  CHECK(v_linking_vector(p, A) == K2Vector{1, 1, 0});
  CHECK(v_linking_vector(p, B) == K2Vector{1, 0, 1});
  CHECK(v_linking_vector(p, C) == K2Vector{1, 0, 0});

  VMap v = v_invariant(p, t);
  std::size_t a = t.index_of("a"), b = t.index_of("b"), c = t.index_of("c");
  CHECK(v.value(0, a, {1, 1, 0}, t) == 1);
  CHECK(v.value(0, a, {1, 0, 1}, t) == -1);
  CHECK(v.value(0, b, {1, 1, 0}, t) == -1);  // V^{1,b} = -V^{1,a}
  CHECK(v.value(0, b, {1, 0, 1}, t) == 1);
  CHECK(v.value(1, c, {1, 0, 0}, t) == 1);
  CHECK(v.value(2, c, {1, 0, 0}, t) == 0);
  CHECK(!v.component_trivial(0));
  CHECK(!v.component_trivial(1));
  CHECK(v.component_trivial(2));
}

TEST_CASE("V vanishes without single-component letters") {
  HomotopyDataTriple t = testutil::triple_swap_fix();
  Nanophrase p = parse_nanophrase("A:a B:b ; AB|BA");
  CHECK(v_invariant(p, t).entries.empty());
}

TEST_CASE("V invariant survives every single move on the V sample") {
  HomotopyDataTriple t = testutil::triple_swap_fix();
  Nanophrase p = v_sample_phrase();
  VMap v = v_invariant(p, t);
  for (const MoveSite& s : enumerate_moves(p, t, true)) {
    Nanophrase q = apply_move(p, s).result;
    CHECK(v_invariant(q, t) == v);
  }
}

TEST_CASE("U invariant golden") {
  HomotopyDataTriple t = testutil::triple_two_swaps();
  Nanophrase p = u_sample_p();
  LetterId A = 0, B = 3;
  REQUIRE(p.letters()[A].name == "A");
  REQUIRE(p.letters()[B].name == "B");
  CHECK(pi_vector_render(t, u_linking_vector(p, t, A)) == "(1,a^2,c^-1)");
  CHECK(pi_vector_render(t, u_linking_vector(p, t, B)) == "(1,1,c^-1)");

  UMap u = u_invariant(p, t);
  std::size_t a = t.index_of("a"), c = t.index_of("c");
  PiVector lu_a = u_linking_vector(p, t, A);
  PiVector lu_b = u_linking_vector(p, t, B);
  CHECK(u.value(0, a, lu_a, t) == 1);
  // With <B> = c the definition gives +1 (e_{1,c} counts B).
  CHECK(u.value(0, c, lu_b, t) == 1);
  CHECK(u.value(0, t.index_of("d"), lu_b, t) == -1);

  // Flipping B's projection to d negates the value.
  Nanophrase pd = parse_nanophrase("A:a C:a E:a B:d D:d F:d ; ACDEABFB|CE|DF");
  UMap ud = u_invariant(pd, t);
  CHECK(ud.value(0, c, lu_b, t) == -1);

  CHECK(u_invariant(u_sample_q(), t).entries.empty());
  CHECK(linking_matrix(p, t) == linking_matrix(u_sample_q(), t));

  HomotopyDataTriple nondiag = testutil::triple_swap_fix();
  CHECK_THROWS_AS(u_invariant(v_sample_phrase(), nondiag), SNotDiagonalError);
}

TEST_CASE("U distinguishes ABCA|BC from the trivial pair where V cannot") {
  HomotopyDataTriple t = testutil::alpha_f();
  Nanophrase p = parse_nanophrase("A:a B:a C:a ; ABCA|BC");
  CHECK(v_invariant(p, t).entries.empty());
  UMap u = u_invariant(p, t);
  REQUIRE(!u.entries.empty());
  PiVector lu = u_linking_vector(p, t, 0);
  CHECK(pi_vector_render(t, lu) == "(1,a^2)");
  CHECK(u.value(0, t.index_of("a"), lu, t) == 1);
}

TEST_CASE("u_to_v matches the direct V computation") {
  HomotopyDataTriple t = testutil::triple_two_swaps();
  Nanophrase p = u_sample_p();
  VMap direct = v_invariant(p, t);
  VMap pushed = u_to_v(u_invariant(p, t), t);
  CHECK(direct == pushed);
  CHECK(direct.value(0, t.index_of("a"), {0, 0, 1}, t) == 1);

  CHECK(u_to_v(UMap{3, {}}, t).entries.empty());

  std::mt19937 rng(47);
  for (int i = 0; i < 20; ++i) {
    HomotopyDataTriple rt = testutil::random_triple(rng, 4, testutil::SKind::Diagonal);
    Nanophrase q = testutil::random_gauss_phrase(rng, rt, 6, 3);
    CHECK(u_to_v(u_invariant(q, rt), rt) == v_invariant(q, rt));
  }
}

TEST_CASE("U antisymmetry via representative storage") {
  std::mt19937 rng(53);
  for (int i = 0; i < 15; ++i) {
    HomotopyDataTriple t = testutil::random_triple(rng, 4, testutil::SKind::Diagonal);
    Nanophrase p = testutil::random_gauss_phrase(rng, t, 6, 3);
    UMap u = u_invariant(p, t);
    VMap v = v_invariant(p, t);
    for (const auto& [key, values] : u.entries) {
      std::size_t rep = t.orbit_rep(key.second);
      if (!t.orbit_free(key.second)) continue;
      for (const auto& [vec, val] : values)
        CHECK(u.value(key.first, t.tau(rep), vec, t) == -val);
    }
    for (const auto& [key, values] : v.entries) {
      std::size_t rep = t.orbit_rep(key.second);
      if (!t.orbit_free(key.second)) continue;
      for (const auto& [vec, val] : values)
        CHECK(v.value(key.first, t.tau(rep), vec, t) == -val);
    }
  }
}

TEST_CASE("realizability holds for phrase-derived U and fails for the forged one") {
  std::mt19937 rng(59);
  for (int i = 0; i < 25; ++i) {
    HomotopyDataTriple t = testutil::random_triple(rng, 4, testutil::SKind::Diagonal);
    Nanophrase p = testutil::random_gauss_phrase(rng, t, 6, 3);
    CHECK(u_realizability_check(u_invariant(p, t), t));
  }
  HomotopyDataTriple t = testutil::alpha_f();
  CHECK(u_realizability_check(UMap{1, {}}, t));

  // U^{1,a}(a^2) = 1 over alpha_F: delta_a(U^{1,a}) = 2 != 0 in Z.
  UMap forged;
  forged.n = 1;
  PiVector vec{pi_pow(t, pi_generator(t, 0), 2)};
  forged.entries[{0, 0}][vec] = 1;
  CHECK(u_delta(forged, t, 0, 0, 0) == 2);
  CHECK(!u_realizability_check(forged, t));
}

TEST_CASE("S_o and U determine each other pointwise") {
  std::mt19937 rng(61);
  for (int i = 0; i < 20; ++i) {
    HomotopyDataTriple t = testutil::random_triple(rng, 4, testutil::SKind::Diagonal);
    Nanophrase p = testutil::random_gauss_phrase(rng, t, 6, 3);
    UMap u = u_invariant(p, t);
    SoMap so = fukunaga_so(p, t);

    // U^{i,a}(v) = B_i(h_{a,i}(v)) on the stored support
    for (const auto& [key, values] : u.entries) {
      for (const auto& [vec, val] : values) {
        std::vector<int> k = so_h_map(t, key.second, key.first, vec);
        auto it = so.b.find(key.first);
        REQUIRE(it != so.b.end());
        auto jt = it->second.find(k);
        REQUIRE(jt != it->second.end());
        CHECK(jt->second == val);
      }
    }
    // B_i(v) = U^{i,a_{r(v)}}(kappa_i(v)) on the S_o support
    for (const auto& [comp, values] : so.b) {
      for (const auto& [vec, val] : values) {
        std::size_t orbit;
        PiVector back = so_kappa_map(t, comp, vec, &orbit);
        CHECK(u.value(comp, t.orbit_rep(orbit), back, t) == val);
      }
    }
    CHECK(so_to_u(u_to_so(u, t), t) == u);
    CHECK(u_to_so(so_to_u(so, t), t) == so);
  }
}

TEST_CASE("S_o of the empty phrase is trivial; ABCA|BC has one support vector") {
  HomotopyDataTriple t = testutil::alpha_f();
  CHECK(fukunaga_so(parse_nanophrase("; _|_"), t).b.empty());
  SoMap so = fukunaga_so(parse_nanophrase("A:a B:a C:a ; ABCA|BC"), t);
  REQUIRE(so.b.count(0) == 1);
  CHECK(so.b.at(0).size() == 1);
  CHECK_THROWS_AS(fukunaga_so(v_sample_phrase(), testutil::triple_swap_fix()), SNotDiagonalError);
}

TEST_CASE("kappa rejects malformed support") {
  HomotopyDataTriple t = testutil::triple_two_swaps();  // two free orbits
  // vector with nonzero cells in two different orbit rows
  std::vector<int> bad(1 * 2 * 2, 0);
  bad[0] = 1;  // (s=0,t=0)
  bad[3] = 1;  // (s=1,t=1)
  CHECK_THROWS_AS(so_kappa_map(t, 0, bad, nullptr), MalformedSupportError);
  CHECK_THROWS_AS(so_kappa_map(t, 0, std::vector<int>(4, 0), nullptr),
                  MalformedSupportError);
}

TEST_CASE("full invariance battery under random move sequences") {
  std::mt19937 rng(67);
  for (int i = 0; i < 40; ++i) {
    bool diagonal = i % 2 == 0;
    HomotopyDataTriple t = testutil::random_triple(
        rng, 4, diagonal ? testutil::SKind::Diagonal : testutil::SKind::Random);
    Nanophrase p = testutil::random_gauss_phrase(rng, t, 5, 3);
    Nanophrase q = testutil::apply_random_moves(rng, p, t, 4, p.rank() + 4);
    CHECK(component_parities(q) == component_parities(p));
    CHECK(linking_matrix(q, t) == linking_matrix(p, t));
    CHECK(v_invariant(q, t) == v_invariant(p, t));
    if (diagonal) {
      CHECK(u_invariant(q, t) == u_invariant(p, t));
      CHECK(fukunaga_so(q, t) == fukunaga_so(p, t));
    }
  }
}
