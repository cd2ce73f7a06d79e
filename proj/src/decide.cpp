// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nanophrase/decide.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nanophrase/decompose.hpp"
#include "nanophrase/errors.hpp"
#include "nanophrase/invariants.hpp"

namespace nanophrase {

std::string render_decision(const Decision& d) {
  switch (d.verdict) {
    case Verdict::Yes: {
      std::string out = "Yes";
      if (!d.path_p.empty() || !d.path_q.empty()) {
        out += " [";
        for (std::size_t i = 0; i < d.path_p.size(); ++i)
          out += (i ? "; " : "") + render_site(d.path_p[i]);
        if (!d.path_q.empty()) {
          out += " | reverse:";
          for (const MoveSite& s : d.path_q) out += " " + render_site(s);
        }
        out += "]";
      }
      if (!d.note.empty()) out += " (" + d.note + ")";
      return out;
    }
    case Verdict::No:
      return "No [" + (d.obstruction ? d.obstruction->kind + ": " + d.obstruction->detail
                                     : std::string("unspecified")) +
             "]";
    case Verdict::Unknown:
      return "Unknown" + (d.note.empty() ? "" : " (" + d.note + ")");
  }
  return "?";
}

Nanophrase replay_path(const Nanophrase& p, const std::vector<MoveSite>& path) {
  Nanophrase cur = canonicalize(p);
  for (const MoveSite& s : path) cur = canonicalize(apply_move(cur, s).result);
  return cur;
}

namespace {

std::string parity_string(const Nanophrase& p) {
  std::string s;
  for (int b : component_parities(p)) s += std::to_string(b);
  return s;
}

Decision yes(std::vector<MoveSite> path_p = {}, std::vector<MoveSite> path_q = {},
             std::string note = {}) {
  Decision d;
  d.verdict = Verdict::Yes;
  d.path_p = std::move(path_p);
  d.path_q = std::move(path_q);
  d.note = std::move(note);
  return d;
}

Decision no(std::string kind, std::string detail) {
  Decision d;
  d.verdict = Verdict::No;
  d.obstruction = Obstruction{std::move(kind), std::move(detail)};
  return d;
}

Decision unknown(std::string note) {
  Decision d;
  d.verdict = Verdict::Unknown;
  d.note = std::move(note);
  return d;
}

}  // namespace

std::optional<Obstruction> invariant_obstruction(const Nanophrase& p, const Nanophrase& q,
                                                 const HomotopyDataTriple& t) {
  if (p.nc() != q.nc())
    return Obstruction{"component-count",
                       std::to_string(p.nc()) + " vs " + std::to_string(q.nc())};
  if (parity_string(p) != parity_string(q))
    return Obstruction{"parity", parity_string(p) + " vs " + parity_string(q)};
  LinkingMatrix lp = linking_matrix(p, t), lq = linking_matrix(q, t);
  if (!(lp == lq))
    return Obstruction{"linking", render_linking(lp, t) + "vs\n" + render_linking(lq, t)};
  VMap vp = v_invariant(p, t), vq = v_invariant(q, t);
  if (!(vp == vq)) return Obstruction{"V", render_v(vp, t) + "vs\n" + render_v(vq, t)};
  if (t.s_diagonal()) {
    UMap up = u_invariant(p, t), uq = u_invariant(q, t);
    if (!(up == uq)) return Obstruction{"U", render_u(up, t) + "vs\n" + render_u(uq, t)};
  }
  return std::nullopt;
}

namespace {

struct SearchSide {
  // canonical key -> (parent key, site applied to the parent)
  std::map<std::string, std::pair<std::string, MoveSite>> parent;
  std::map<std::string, Nanophrase> repr;
  std::vector<std::string> frontier;
  std::string start;
};

std::vector<MoveSite> path_from_start(const SearchSide& side, std::string key) {
  std::vector<MoveSite> path;
  while (key != side.start) {
    const auto& [prev, site] = side.parent.at(key);
    path.push_back(site);
    key = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Expands one frontier layer; returns the meet key if the other side already
// knows a generated child.
std::optional<std::pair<std::string, MoveSite>> expand_layer(
    SearchSide& side, const SearchSide& other, const HomotopyDataTriple& t,
    std::size_t max_rank, long node_budget, long& nodes, std::string* meet_parent) {
  std::vector<std::string> next;
  std::sort(side.frontier.begin(), side.frontier.end());
  for (const std::string& key : side.frontier) {
    const Nanophrase cur = side.repr.at(key);
    bool allow_aug = cur.rank() < max_rank;
    for (const MoveSite& site : enumerate_moves(cur, t, allow_aug)) {
      if (site.kind == MoveKind::H1Augment && cur.rank() + 1 > max_rank) continue;
      if (site.kind == MoveKind::H2Augment && cur.rank() + 2 > max_rank) continue;
      Nanophrase child = canonicalize(apply_move(cur, site).result);
      std::string ck = render_phrase(child, TokenMode::Tokens);
      if (side.repr.count(ck)) continue;
      side.repr.emplace(ck, std::move(child));
      side.parent.emplace(ck, std::make_pair(key, site));
      next.push_back(ck);
      ++nodes;
      if (other.repr.count(ck)) {
        *meet_parent = key;
        return std::make_pair(ck, site);
      }
      if (nodes >= node_budget) return std::nullopt;
    }
  }
  side.frontier = std::move(next);
  return std::nullopt;
}

}  // namespace

Decision bfs_equivalent(const Nanophrase& p, const Nanophrase& q, const HomotopyDataTriple& t,
                        const SearchBudget& budget) {
  if (p.nc() != q.nc())
    return no("component-count", std::to_string(p.nc()) + " vs " + std::to_string(q.nc()));
  std::string kp = canonical_key(p), kq = canonical_key(q);
  if (kp == kq) return yes({}, {}, "isomorphic");
  if (auto obs = invariant_obstruction(p, q, t)) {
    Decision d;
    d.verdict = Verdict::No;
    d.obstruction = std::move(obs);
    return d;
  }

  std::size_t max_rank = std::max(p.rank(), q.rank()) + static_cast<std::size_t>(budget.rank_delta);
  SearchSide sp, sq;
  sp.start = kp;
  sp.repr.emplace(kp, canonicalize(p));
  sp.frontier.push_back(kp);
  sq.start = kq;
  sq.repr.emplace(kq, canonicalize(q));
  sq.frontier.push_back(kq);

  long nodes = 2;
  while (!sp.frontier.empty() || !sq.frontier.empty()) {
    if (nodes >= budget.node_budget)
      return unknown("node budget " + std::to_string(budget.node_budget) + " exhausted");
    SearchSide& grow = (sq.frontier.empty() ||
                        (!sp.frontier.empty() && sp.frontier.size() <= sq.frontier.size()))
                           ? sp
                           : sq;
    SearchSide& fixed = &grow == &sp ? sq : sp;
    std::string meet_parent;
    auto meet = expand_layer(grow, fixed, t, max_rank, budget.node_budget, nodes, &meet_parent);
    if (meet) {
      std::vector<MoveSite> to_meet = path_from_start(grow, meet->first);
      std::vector<MoveSite> other = path_from_start(fixed, meet->first);
      if (&grow == &sp) return yes(std::move(to_meet), std::move(other), "bfs meet");
      return yes(std::move(other), std::move(to_meet), "bfs meet");
    }
    if (nodes >= budget.node_budget)
      return unknown("node budget " + std::to_string(budget.node_budget) + " exhausted");
  }
  return unknown("move graph exhausted at rank <= " + std::to_string(max_rank) +
                 "; no meet");
}

Decision decide_reducible(const Nanophrase& p, std::size_t comp, const HomotopyDataTriple& t,
                          const SearchBudget& budget) {
  if (comp >= p.nc()) throw IndexOutOfRangeError("component index out of range");
  if (p.component(comp).empty()) return yes({}, {}, "component already empty");

  if (component_parities(p)[comp] == 1)
    return no("parity", "component " + std::to_string(comp + 1) + " has odd length");
  LinkingMatrix lm = linking_matrix(p, t);
  if (linking_row_nontrivial(lm, comp))
    return no("linking", "row " + std::to_string(comp + 1) + " of\n" + render_linking(lm, t));
  VMap v = v_invariant(p, t);
  if (!v.component_trivial(comp))
    return no("V", "nonzero V^{" + std::to_string(comp + 1) + ",*}:\n" + render_v(v, t));
  if (t.s_diagonal()) {
    UMap u = u_invariant(p, t);
    if (!u.component_trivial(comp))
      return no("U", "nonzero U^{" + std::to_string(comp + 1) + ",*}:\n" + render_u(u, t));
  }

  // Subphrase obstruction: the component's own nanoword must be contractible.
  if (p.nc() > 1) {
    std::set<std::size_t> others;
    for (std::size_t i = 0; i < p.nc(); ++i)
      if (i != comp) others.insert(i);
    Nanophrase w = project_out(p, others, ProjectionMode::DropComponents);
    if (!w.component(0).empty()) {
      VMap vw = v_invariant(w, t);
      if (!vw.component_trivial(0))
        return no("subword-V", "w_i(p) has nonzero V:\n" + render_v(vw, t));
      if (t.s_diagonal()) {
        UMap uw = u_invariant(w, t);
        if (!uw.component_trivial(0))
          return no("subword-U", "w_i(p) has nonzero U:\n" + render_u(uw, t));
      }
    }
  }

  if (t.s_empty()) {
    NormalFormTrace nf = normal_form_empty_s_traced(p, t);
    if (nf.normal_form.component(comp).empty()) return yes(std::move(nf.script), {}, "normal form");
    return no("normal-form", "minimizing normal form has nonempty component " +
                                 std::to_string(comp + 1) + ": " +
                                 render_phrase(nf.normal_form, TokenMode::Tokens));
  }

  // One-sided bounded search for a reachable phrase with the component empty.
  std::size_t max_rank = p.rank() + static_cast<std::size_t>(budget.rank_delta);
  SearchSide side;
  side.start = canonical_key(p);
  side.repr.emplace(side.start, canonicalize(p));
  side.frontier.push_back(side.start);
  long nodes = 1;
  while (!side.frontier.empty() && nodes < budget.node_budget) {
    std::vector<std::string> next;
    std::sort(side.frontier.begin(), side.frontier.end());
    for (const std::string& key : side.frontier) {
      const Nanophrase cur = side.repr.at(key);
      for (const MoveSite& site : enumerate_moves(cur, t, cur.rank() < max_rank)) {
        if (site.kind == MoveKind::H1Augment && cur.rank() + 1 > max_rank) continue;
        if (site.kind == MoveKind::H2Augment && cur.rank() + 2 > max_rank) continue;
        Nanophrase child = canonicalize(apply_move(cur, site).result);
        std::string ck = render_phrase(child, TokenMode::Tokens);
        if (side.repr.count(ck)) continue;
        bool hit = child.component(comp).empty();
        side.parent.emplace(ck, std::make_pair(key, site));
        side.repr.emplace(ck, std::move(child));
        next.push_back(ck);
        ++nodes;
        if (hit) return yes(path_from_start(side, ck), {}, "search witness");
        if (nodes >= budget.node_budget) break;
      }
      if (nodes >= budget.node_budget) break;
    }
    side.frontier = std::move(next);
  }
  if (side.frontier.empty())
    return unknown("move graph exhausted at rank <= " + std::to_string(max_rank));
  return unknown("node budget " + std::to_string(budget.node_budget) + " exhausted");
}

Decision decide_equal(const Nanophrase& p, const Nanophrase& q, const HomotopyDataTriple& t,
                      const SearchBudget& budget) {
  if (p.nc() != q.nc())
    return no("component-count", std::to_string(p.nc()) + " vs " + std::to_string(q.nc()));

  if (t.s_empty()) {
    NormalFormTrace np = normal_form_empty_s_traced(p, t);
    NormalFormTrace nq = normal_form_empty_s_traced(q, t);
    std::string rp = render_phrase(np.normal_form, TokenMode::Tokens);
    std::string rq = render_phrase(nq.normal_form, TokenMode::Tokens);
    if (rp == rq) return yes(std::move(np.script), std::move(nq.script), "normal forms equal");
    return no("normal-form", rp + " vs " + rq);
  }

  if (auto obs = invariant_obstruction(p, q, t)) {
    Decision d;
    d.verdict = Verdict::No;
    d.obstruction = std::move(obs);
    return d;
  }

  Factorization f = prime_factorize(t);
  if (f.k() >= 2) {
    ReducedClass rp = reduce_fully(psi(p, f, t), t, budget);
    ReducedClass rq = reduce_fully(psi(q, f, t), t, budget);
    Decision via = compare_reduced(rp, rq, f, budget);
    if (!via.unknown()) return via;
  }

  Decision d = bfs_equivalent(p, q, t, budget);
  if (d.no()) return d;  // prefilter inside the oracle
  if (d.yes()) return d;
  return d;
}

std::size_t min_rank_reachable(const Nanophrase& p, const HomotopyDataTriple& t,
                               const SearchBudget& budget) {
  std::size_t best = p.rank();
  std::size_t max_rank = p.rank() + static_cast<std::size_t>(budget.rank_delta);
  std::set<std::string> seen;
  std::vector<Nanophrase> frontier{canonicalize(p)};
  seen.insert(canonical_key(p));
  long nodes = 1;
  while (!frontier.empty() && nodes < budget.node_budget) {
    std::vector<Nanophrase> next;
    for (const Nanophrase& cur : frontier) {
      for (const MoveSite& site : enumerate_moves(cur, t, cur.rank() < max_rank)) {
        if (site.kind == MoveKind::H1Augment && cur.rank() + 1 > max_rank) continue;
        if (site.kind == MoveKind::H2Augment && cur.rank() + 2 > max_rank) continue;
        Nanophrase child = canonicalize(apply_move(cur, site).result);
        std::string ck = render_phrase(child, TokenMode::Tokens);
        if (!seen.insert(ck).second) continue;
        best = std::min(best, child.rank());
        next.push_back(std::move(child));
        if (++nodes >= budget.node_budget) break;
      }
      if (nodes >= budget.node_budget) break;
    }
    frontier = std::move(next);
  }
  return best;
}

}  // namespace nanophrase
