// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nanophrase/moves.hpp"

#include <algorithm>

#include "nanophrase/errors.hpp"

namespace nanophrase {

namespace {

bool adjacent_in_component(const Occurrence& x, const Occurrence& y) {
  return x.comp == y.comp && y.off == x.off + 1;
}

std::string occ_str(const Occurrence& o) {
  return std::to_string(o.comp + 1) + ":" + std::to_string(o.off);
}

}  // namespace

std::string render_site(const MoveSite& s) {
  switch (s.kind) {
    case MoveKind::H1Reduce:
      return "H1- @" + occ_str(s.a);
    case MoveKind::H2Reduce:
      return "H2- @" + occ_str(s.a) + "/" + occ_str(s.b);
    case MoveKind::H3:
      return std::string("H3") + (s.backward ? "b" : "f") + " @" + occ_str(s.a) + "/" +
             occ_str(s.b) + "/" + occ_str(s.c);
    case MoveKind::H1Augment:
      return "H1+ @" + occ_str(s.a) + " " + s.sym_a;
    case MoveKind::H2Augment:
      return "H2+ @" + occ_str(s.a) + "/" + occ_str(s.b) + " " + s.sym_a + "," + s.sym_b;
  }
  return "?";
}

std::vector<MoveSite> enumerate_moves(const Nanophrase& p, const HomotopyDataTriple& t,
                                      bool include_augmenting) {
  if (t.empty_alpha()) throw EmptyAlphaError("the unit triple gives no homotopy");
  validate_projections(p, t);
  std::vector<MoveSite> sites;

  std::vector<std::size_t> sym(p.rank());
  for (LetterId id = 0; id < p.rank(); ++id) sym[id] = t.index_of(p.symbol_of(id));

  // Reducing H1: xAAy.
  for (LetterId id = 0; id < p.rank(); ++id) {
    const auto& occ = p.occurrences(id);
    if (adjacent_in_component(occ[0], occ[1]))
      sites.push_back(MoveSite{MoveKind::H1Reduce, occ[0], {}, {}, false, {}, {}});
  }

  // Reducing H2: xAByBAz with tau(<A>) = <B>; the inner pair must not be
  // letter-adjacent (that pattern is two H1 sites).
  for (LetterId a = 0; a < p.rank(); ++a) {
    const auto& ao = p.occurrences(a);
    const auto& word1 = p.component(ao[0].comp);
    if (ao[0].off + 1 >= word1.size()) continue;
    LetterId b = word1[ao[0].off + 1];
    if (b == a) continue;
    if (t.tau(sym[a]) != sym[b]) continue;
    if (ao[1].off == 0) continue;
    const auto& word2 = p.component(ao[1].comp);
    if (word2[ao[1].off - 1] != b) continue;
    const auto& bo = p.occurrences(b);
    Occurrence b1{ao[0].comp, ao[0].off + 1};
    Occurrence b2{ao[1].comp, ao[1].off - 1};
    if (!(bo[0] == b1 && bo[1] == b2)) continue;  // order: x A B y B A z
    if (adjacent_in_component(b1, b2)) continue;
    sites.push_back(MoveSite{MoveKind::H2Reduce, ao[0], b2, {}, false, {}, {}});
  }

  // H3 forward: xAByACzBCt -> xBAyCAzCBt, needing (<A>,<B>,<C>) in S.
  // H3 backward matches the right side and rewrites to the left.
  for (int backward = 0; backward < 2; ++backward) {
    for (LetterId a = 0; a < p.rank(); ++a) {
      const auto& ao = p.occurrences(a);
      // Forward: A first in both of its adjacent pairs; backward: A second.
      Occurrence pa1 = ao[0], pa2 = ao[1];
      LetterId bl, cl;
      Occurrence pair1, pair2;
      if (!backward) {
        if (pa1.off + 1 >= p.component(pa1.comp).size()) continue;
        if (pa2.off + 1 >= p.component(pa2.comp).size()) continue;
        bl = p.component(pa1.comp)[pa1.off + 1];
        cl = p.component(pa2.comp)[pa2.off + 1];
        pair1 = pa1;
        pair2 = pa2;
      } else {
        if (pa1.off == 0 || pa2.off == 0) continue;
        bl = p.component(pa1.comp)[pa1.off - 1];
        cl = p.component(pa2.comp)[pa2.off - 1];
        pair1 = Occurrence{pa1.comp, pa1.off - 1};
        pair2 = Occurrence{pa2.comp, pa2.off - 1};
      }
      if (bl == a || cl == a || bl == cl) continue;
      const auto& bo = p.occurrences(bl);
      const auto& co = p.occurrences(cl);
      // The second B and second C must form the trailing adjacent pair, in
      // phrase order after pair2.
      Occurrence b2 = bo[0] == (backward ? Occurrence{pa1.comp, pa1.off - 1}
                                         : Occurrence{pa1.comp, pa1.off + 1})
                          ? bo[1]
                          : bo[0];
      Occurrence c2 = co[0] == (backward ? Occurrence{pa2.comp, pa2.off - 1}
                                         : Occurrence{pa2.comp, pa2.off + 1})
                          ? co[1]
                          : co[0];
      Occurrence pair3;
      if (!backward) {
        // trailing pair is B C
        if (!adjacent_in_component(b2, c2)) continue;
        pair3 = b2;
      } else {
        // trailing pair is C B
        if (!adjacent_in_component(c2, b2)) continue;
        pair3 = c2;
      }
      // Pattern order and non-overlap: pair1 < pair2 < pair3 with gaps.
      if (!(pair1 < pair2 && pair2 < pair3)) continue;
      Occurrence pair1_end{pair1.comp, pair1.off + 1};
      Occurrence pair2_end{pair2.comp, pair2.off + 1};
      if (!(pair1_end < pair2) || !(pair2_end < pair3)) continue;
      std::size_t sa = sym[a], sb = sym[bl], sc = sym[cl];
      if (!std::binary_search(t.s().begin(), t.s().end(),
                              std::array<std::size_t, 3>{sa, sb, sc}))
        continue;
      sites.push_back(
          MoveSite{MoveKind::H3, pair1, pair2, pair3, static_cast<bool>(backward), {}, {}});
    }
  }

  if (include_augmenting) {
    std::vector<Occurrence> gaps;
    for (std::size_t c = 0; c < p.nc(); ++c)
      for (std::size_t o = 0; o <= p.component(c).size(); ++o)
        gaps.push_back(Occurrence{c, o});
    for (const Occurrence& g : gaps)
      for (std::size_t s = 0; s < t.size(); ++s)
        sites.push_back(MoveSite{MoveKind::H1Augment, g, {}, {}, false, t.symbol(s), {}});
    for (std::size_t i = 0; i < gaps.size(); ++i)
      for (std::size_t j = i + 1; j < gaps.size(); ++j)
        for (std::size_t s = 0; s < t.size(); ++s)
          sites.push_back(MoveSite{MoveKind::H2Augment, gaps[i], gaps[j], {}, false,
                                   t.symbol(s), t.symbol(t.tau(s))});
  }
  return sites;
}

namespace {

struct Editor {
  std::vector<Letter> letters;
  std::vector<std::vector<LetterId>> comps;

  explicit Editor(const Nanophrase& p) : letters(p.letters()), comps(p.components()) {}

  Nanophrase build() { return Nanophrase::make(std::move(letters), std::move(comps)); }

  void check_position(const Occurrence& o) const {
    if (o.comp >= comps.size() || o.off >= comps[o.comp].size())
      throw StaleSiteError("site position out of range");
  }

  // Removes the given occurrences (sorted descending within processing) and
  // drops letters that no longer occur.
  void erase_occurrences(std::vector<Occurrence> occs) {
    std::sort(occs.rbegin(), occs.rend());
    for (const Occurrence& o : occs) comps[o.comp].erase(comps[o.comp].begin() + o.off);
    std::vector<std::size_t> count(letters.size(), 0);
    for (const auto& w : comps)
      for (LetterId id : w) ++count[id];
    std::vector<std::size_t> remap(letters.size(), SIZE_MAX);
    std::vector<Letter> kept;
    for (std::size_t id = 0; id < letters.size(); ++id)
      if (count[id] > 0) {
        remap[id] = kept.size();
        kept.push_back(letters[id]);
      }
    for (auto& w : comps)
      for (LetterId& id : w) id = remap[id];
    letters = std::move(kept);
  }

  LetterId add_letter(const std::string& name, const std::string& symbol) {
    letters.push_back(Letter{name, symbol});
    return letters.size() - 1;
  }
};

}  // namespace

MoveResult apply_move(const Nanophrase& p, const MoveSite& site) {
  Editor ed(p);
  switch (site.kind) {
    case MoveKind::H1Reduce: {
      ed.check_position(site.a);
      Occurrence second{site.a.comp, site.a.off + 1};
      if (second.off >= ed.comps[site.a.comp].size() ||
          ed.comps[site.a.comp][site.a.off] != ed.comps[site.a.comp][second.off])
        throw StaleSiteError("H1 site does not match the phrase");
      LetterId id = ed.comps[site.a.comp][site.a.off];
      std::string sym = ed.letters[id].symbol;
      ed.erase_occurrences({site.a, second});
      MoveSite inv{MoveKind::H1Augment, site.a, {}, {}, false, sym, {}};
      return MoveResult{ed.build(), inv};
    }
    case MoveKind::H2Reduce: {
      ed.check_position(site.a);
      ed.check_position(site.b);
      Occurrence a1 = site.a, b1{site.a.comp, site.a.off + 1};
      Occurrence b2 = site.b, a2{site.b.comp, site.b.off + 1};
      if (b1.off >= ed.comps[a1.comp].size() || a2.off >= ed.comps[b2.comp].size())
        throw StaleSiteError("H2 site out of range");
      LetterId la = ed.comps[a1.comp][a1.off];
      LetterId lb = ed.comps[b1.comp][b1.off];
      if (ed.comps[b2.comp][b2.off] != lb || ed.comps[a2.comp][a2.off] != la || la == lb)
        throw StaleSiteError("H2 site does not match the phrase");
      std::string sa = ed.letters[la].symbol;
      std::string sb = ed.letters[lb].symbol;
      ed.erase_occurrences({a1, b1, b2, a2});
      // Gap positions after removal: the trailing block shifts by 2 when it
      // sits in the same component behind the leading block.
      Occurrence g1 = a1;
      Occurrence g2 = b2;
      if (g2.comp == a1.comp) g2.off -= 2;
      MoveSite inv{MoveKind::H2Augment, g1, g2, {}, false, sa, sb};
      return MoveResult{ed.build(), inv};
    }
    case MoveKind::H3: {
      ed.check_position(site.a);
      ed.check_position(site.b);
      ed.check_position(site.c);
      for (const Occurrence& o : {site.a, site.b, site.c}) {
        if (o.off + 1 >= ed.comps[o.comp].size())
          throw StaleSiteError("H3 pair out of range");
      }
      auto swap_pair = [&](const Occurrence& o) {
        std::swap(ed.comps[o.comp][o.off], ed.comps[o.comp][o.off + 1]);
      };
      swap_pair(site.a);
      swap_pair(site.b);
      swap_pair(site.c);
      MoveSite inv = site;
      inv.backward = !site.backward;
      return MoveResult{ed.build(), inv};
    }
    case MoveKind::H1Augment: {
      if (site.a.comp >= ed.comps.size() || site.a.off > ed.comps[site.a.comp].size())
        throw StaleSiteError("insertion gap out of range");
      LetterId id = ed.add_letter(fresh_letter_name(p), site.sym_a);
      auto& w = ed.comps[site.a.comp];
      w.insert(w.begin() + site.a.off, 2, id);
      MoveSite inv{MoveKind::H1Reduce, site.a, {}, {}, false, {}, {}};
      return MoveResult{ed.build(), inv};
    }
    case MoveKind::H2Augment: {
      if (site.a.comp >= ed.comps.size() || site.a.off > ed.comps[site.a.comp].size() ||
          site.b.comp >= ed.comps.size() || site.b.off > ed.comps[site.b.comp].size())
        throw StaleSiteError("insertion gap out of range");
      if (site.a == site.b)
        throw StaleSiteError("H2 augmentation gaps must differ");
      if (site.b < site.a) throw StaleSiteError("H2 augmentation gaps out of order");
      std::set<std::string> used;
      for (const Letter& l : p.letters()) used.insert(l.name);
      std::vector<std::string> fresh;
      for (std::size_t i = 1; fresh.size() < 2; ++i) {
        std::string cand = "Z" + std::to_string(i);
        if (!used.count(cand)) fresh.push_back(cand);
      }
      LetterId la = ed.add_letter(fresh[0], site.sym_a);
      LetterId lb = ed.add_letter(fresh[1], site.sym_b);
      Occurrence g2 = site.b;
      if (g2.comp == site.a.comp) g2.off += 2;
      auto& w1 = ed.comps[site.a.comp];
      w1.insert(w1.begin() + site.a.off, {la, lb});
      auto& w2 = ed.comps[g2.comp];
      w2.insert(w2.begin() + g2.off, {lb, la});
      MoveSite inv{MoveKind::H2Reduce, site.a, g2, {}, false, {}, {}};
      return MoveResult{ed.build(), inv};
    }
  }
  throw StaleSiteError("unknown move kind");
}

NormalFormTrace normal_form_empty_s_traced(const Nanophrase& p, const HomotopyDataTriple& t) {
  if (!t.s_empty()) throw SNotEmptyError("normal form requires S = {}");
  NormalFormTrace out;
  Nanophrase cur = p;
  for (;;) {
    std::vector<MoveSite> sites = enumerate_moves(cur, t, /*include_augmenting=*/false);
    const MoveSite* pick = nullptr;
    for (const MoveSite& s : sites) {
      if (s.kind != MoveKind::H1Reduce && s.kind != MoveKind::H2Reduce) continue;
      if (!pick || s.a < pick->a) pick = &s;
    }
    if (!pick) break;
    out.script.push_back(*pick);
    cur = apply_move(cur, *pick).result;
  }
  out.normal_form = canonicalize(cur);
  return out;
}

Nanophrase normal_form_empty_s(const Nanophrase& p, const HomotopyDataTriple& t) {
  return normal_form_empty_s_traced(p, t).normal_form;
}

}  // namespace nanophrase
