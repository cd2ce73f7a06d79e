// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "nanophrase/errors.hpp"
#include "testutil.hpp"

using namespace nanophrase;

TEST_CASE("parse: declared three-component phrase") {
  Nanophrase p = parse_nanophrase("A:a B:b C:c ; ABC|AC|B");
  CHECK(p.nc() == 3);
  CHECK(p.rank() == 3);
  CHECK(p.component(0).size() == 3);
  CHECK(p.component(1).size() == 2);
  CHECK(p.component(2).size() == 1);
  CHECK(p.symbol_of(0) == "a");
  CHECK(render_phrase(p) == "A:a B:b C:c ; ABC|AC|B");
}

TEST_CASE("parse: single empty component vs empty phrase") {
  Nanophrase w = parse_nanophrase("; _");
  CHECK(w.nc() == 1);
  CHECK(w.component(0).empty());
  Nanophrase none = parse_nanophrase("; ");
  CHECK(none.nc() == 0);
  CHECK(!(w == none));
  CHECK(render_phrase(w) == "; _");
}

TEST_CASE("parse: Gauss condition violations") {
  CHECK_THROWS_AS(parse_nanophrase("A:a ; ABA"), NonGaussError);   // B undeclared, A fine
  CHECK_THROWS_AS(parse_nanophrase("A:a B:b ; ABA"), NonGaussError);
  CHECK_THROWS_AS(parse_nanophrase("A:a B:b ; AA"), NonGaussError);  // declared, absent
  CHECK_THROWS_AS(parse_nanophrase("; AA"), SyntaxError);            // no declaration
  CHECK_THROWS_AS(parse_nanophrase("A:a AA"), SyntaxError);          // missing ';'
  CHECK_THROWS_AS(parse_nanophrase("A:a ; A|A|"), SyntaxError);      // empty component text
}

TEST_CASE("parse: token mode and multiphrases") {
  Nanophrase p = parse_nanophrase("X1:a X2:a ; X1 X2 | X2 X1", TokenMode::Tokens);
  CHECK(p.nc() == 2);
  CHECK(render_phrase(p) == "X1:a X2:a ; X1 X2 | X2 X1");

  Nanomultiphrase m = parse_multiphrase("A:a B:a C:a D:a ; A|B||AC||D|B|CD");
  CHECK(m.n_phrases() == 3);
  CHECK(m.phrase_sizes() == std::vector<std::size_t>{2, 1, 3});
  CHECK(render_multiphrase(m) == "A:a B:a C:a D:a ; A|B||AC||D|B|CD");

  // A||B and A|_|B are different values.
  Nanomultiphrase ab = parse_multiphrase("A:a B:a ; AB||BA");
  Nanophrase a_b = parse_nanophrase("A:a B:a ; AB|_|BA");
  CHECK(ab.nc() == 2);
  CHECK(a_b.nc() == 3);

  // empty phrase between separators
  Nanomultiphrase with_empty = parse_multiphrase("A:a ; AA||||_");
  CHECK(with_empty.n_phrases() == 3);
  CHECK(with_empty.phrase_sizes() == std::vector<std::size_t>{1, 0, 1});
  CHECK(render_multiphrase(with_empty) == "A:a ; AA||||_");
}

TEST_CASE("canonicalize: isomorphic phrases collide, others do not") {
  // xCyCz and xAyAz over the same alpha with equal projections are isomorphic.
  Nanophrase p1 = parse_nanophrase("X:a C:a Y:b ; XCYCXY");
  Nanophrase p2 = parse_nanophrase("X:a A:a Y:b ; XAYAXY");
  CHECK(canonical_key(p1) == canonical_key(p2));

  Nanophrase q = parse_nanophrase("X:b C:a Y:b ; XCYCXY");  // different projection
  CHECK(canonical_key(p1) != canonical_key(q));

  Nanophrase c = canonicalize(p1);
  CHECK(canonicalize(c) == c);
  CHECK(c.letters()[0].name == "X1");
}

TEST_CASE("canonicalize: random relabelings collapse") {
  std::mt19937 rng(7);
  HomotopyDataTriple t = testutil::random_triple(rng, 4, testutil::SKind::Random);
  for (int i = 0; i < 20; ++i) {
    Nanophrase p = testutil::random_gauss_phrase(rng, t, 6, 3);
    Nanophrase r1 = testutil::random_relabel(rng, p);
    Nanophrase r2 = testutil::random_relabel(rng, p);
    CHECK(canonical_key(r1) == canonical_key(r2));
    CHECK(canonical_key(r1) == canonical_key(p));
  }
}

TEST_CASE("chi: concatenating map") {
  Nanomultiphrase m = parse_multiphrase("A:a B:a C:a D:a ; A|B||AC||D|B|CD");
  CHECK(render_body(chi(m), TokenMode::Compact) == "AB|AC|DBCD");

  Nanophrase empty_p = parse_nanophrase("; ");
  Nanophrase word = chi(empty_p);
  CHECK(word.nc() == 1);
  CHECK(word.component(0).empty());

  Nanophrase one = parse_nanophrase("A:a ; AA");
  CHECK(chi(one) == one);
}

TEST_CASE("project_out: keep and drop modes") {
  Nanophrase p = parse_nanophrase("A:a B:b C:c ; ABC|AC|B");
  Nanophrase kept = project_out(p, {1}, ProjectionMode::KeepComponents);
  CHECK(render_body(kept, TokenMode::Compact) == "B|_|B");
  Nanophrase dropped = project_out(p, {1}, ProjectionMode::DropComponents);
  CHECK(render_body(dropped, TokenMode::Compact) == "B|B");
  CHECK(project_out(p, {}, ProjectionMode::KeepComponents) == p);
  CHECK(project_out(p, {}, ProjectionMode::DropComponents) == p);
  CHECK_THROWS_AS(project_out(p, {3}, ProjectionMode::KeepComponents), IndexOutOfRangeError);
}

TEST_CASE("chi commutes with dropping components") {
  std::mt19937 rng(11);
  HomotopyDataTriple t = testutil::random_triple(rng, 3, testutil::SKind::Empty);
  for (int i = 0; i < 20; ++i) {
    Nanophrase p = testutil::random_gauss_phrase(rng, t, 5, 4);
    std::set<std::size_t> O;
    for (std::size_t c = 0; c < p.nc(); ++c)
      if (rng() % 2) O.insert(c);
    Nanophrase via_drop = chi(project_out(p, O, ProjectionMode::DropComponents));
    // manual concatenation of the kept, filtered components
    Nanophrase filtered = project_out(p, O, ProjectionMode::KeepComponents);
    std::vector<LetterId> word;
    for (std::size_t c = 0; c < filtered.nc(); ++c)
      if (!O.count(c))
        word.insert(word.end(), filtered.component(c).begin(), filtered.component(c).end());
    Nanophrase manual = Nanophrase::make(filtered.letters(), {word});
    CHECK(canonical_key(via_drop) == canonical_key(manual));
  }
}

TEST_CASE("opposite and inverse") {
  HomotopyDataTriple t = HomotopyDataTriple::make_named({"a", "b"}, {{"a", "b"}}, {});
  Nanophrase p = parse_nanophrase("A:a B:b C:a ; ABC|AC|B");
  Nanophrase opp = opposite_inverse(p, t, WhichTransform::Opposite);
  CHECK(render_body(opp, TokenMode::Compact) == "B|CA|CBA");
  CHECK(opp.symbol_of(opp.component(0)[0]) == "b");

  Nanophrase inv = opposite_inverse(p, t, WhichTransform::Inverse);
  CHECK(render_body(inv, TokenMode::Compact) == "ABC|AC|B");
  CHECK(inv.letters()[0].symbol == "b");
  CHECK(inv.letters()[1].symbol == "a");
  CHECK(inv.letters()[2].symbol == "b");

  CHECK(opposite_inverse(opp, t, WhichTransform::Opposite) == p);
  CHECK(opposite_inverse(inv, t, WhichTransform::Inverse) == p);
}

TEST_CASE("opposite and inverse are commuting involutions") {
  std::mt19937 rng(13);
  HomotopyDataTriple t = testutil::random_triple(rng, 4, testutil::SKind::Random);
  for (int i = 0; i < 20; ++i) {
    Nanophrase p = testutil::random_gauss_phrase(rng, t, 5, 3);
    auto opp = [&](const Nanophrase& x) {
      return opposite_inverse(x, t, WhichTransform::Opposite);
    };
    auto inv = [&](const Nanophrase& x) {
      return opposite_inverse(x, t, WhichTransform::Inverse);
    };
    CHECK(opp(opp(p)) == p);
    CHECK(inv(inv(p)) == p);
    CHECK(opp(inv(p)) == inv(opp(p)));
  }
}

TEST_CASE("component parities") {
  CHECK(component_parities(parse_nanophrase("A:a B:a C:a ; ABC|A|B|C")) ==
        std::vector<int>{1, 1, 1, 1});
  CHECK(component_parities(parse_nanophrase("; _")) == std::vector<int>{0});
  CHECK(component_parities(parse_nanophrase("A:a B:a ; AA|BB")) == std::vector<int>{0, 0});
}

TEST_CASE("parities are invariant under single legal moves") {
  std::mt19937 rng(17);
  for (int i = 0; i < 25; ++i) {
    HomotopyDataTriple t = testutil::random_triple(rng, 3, testutil::SKind::Random);
    Nanophrase p = testutil::random_gauss_phrase(rng, t, 5, 3);
    for (const MoveSite& s : enumerate_moves(p, t, true)) {
      Nanophrase q = apply_move(p, s).result;
      CHECK(component_parities(q) == component_parities(p));
      CHECK(q.nc() == p.nc());
    }
  }
}

TEST_CASE("render round-trips bit-exactly through parse") {
  std::mt19937 rng(19);
  HomotopyDataTriple t = testutil::random_triple(rng, 4, testutil::SKind::Random);
  for (int i = 0; i < 25; ++i) {
    Nanophrase p = testutil::random_gauss_phrase(rng, t, 6, 3);
    std::string text = render_phrase(p, TokenMode::Tokens);
    CHECK(parse_nanophrase(text, TokenMode::Tokens) == p);
    std::string canon = render_phrase(canonicalize(p), TokenMode::Tokens);
    CHECK(render_phrase(canonicalize(parse_nanophrase(canon, TokenMode::Tokens)),
                        TokenMode::Tokens) == canon);
  }
}

TEST_CASE("parser fuzz: hostile inputs fail cleanly") {
  std::mt19937 rng(137);
  const std::string charset = "ABab|_;: ()<>-x1,";
  for (int i = 0; i < 3000; ++i) {
    std::string text;
    std::size_t len = rng() % 24;
    for (std::size_t k = 0; k < len; ++k) text += charset[rng() % charset.size()];
    try {
      ParsedPhrase v = parse_phrase(text, rng() % 2 ? TokenMode::Compact : TokenMode::Tokens);
      // anything that parses must render and re-parse to the same value
      if (auto* p = std::get_if<Nanophrase>(&v)) {
        CHECK(parse_nanophrase(render_phrase(*p, TokenMode::Tokens), TokenMode::Tokens) == *p);
      } else {
        auto& m = std::get<Nanomultiphrase>(v);
        CHECK(parse_multiphrase(render_multiphrase(m, TokenMode::Tokens), TokenMode::Tokens) ==
              m);
      }
    } catch (const Error&) {
      // rejected inputs are fine; crashes or foreign exceptions are not
    }
  }
  for (int i = 0; i < 2000; ++i) {
    std::string text = "alpha: a b\ntau: a<->b\nS: (a,b,a)\n";
    text[rng() % text.size()] = charset[rng() % charset.size()];
    try {
      HomotopyDataTriple t = parse_triple(text);
      CHECK(parse_triple(render_triple(t)) == t);
    } catch (const Error&) {
    }
  }
}
