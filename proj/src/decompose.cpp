// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nanophrase/decompose.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "nanophrase/errors.hpp"
#include "nanophrase/invariants.hpp"
#include "nanophrase/moves.hpp"

namespace nanophrase {

namespace {

std::vector<std::size_t> resolve_factors(const Nanophrase& p, const Factorization& f,
                                         const HomotopyDataTriple& t) {
  std::vector<std::size_t> out;
  out.reserve(p.rank());
  for (const Letter& l : p.letters()) out.push_back(f.factor_of(t.index_of(l.symbol)));
  return out;
}

void check_theta(const Nanomultiphrase& m, const std::vector<std::size_t>& theta,
                 const Factorization& f) {
  if (theta.size() != m.nc()) throw SideConditionError("theta size mismatch");
  for (std::size_t v : theta)
    if (v >= f.k()) throw FactorOutOfRangeError("theta value out of range");
  for (std::size_t i = 0; i + 1 < theta.size(); ++i)
    if (theta[i] == theta[i + 1] && m.phrase_of(i) == m.phrase_of(i + 1))
      throw SideConditionError("theta is not locally variable at component " +
                               std::to_string(i + 1));
}

}  // namespace

DecomposedPhrase DecomposedPhrase::make(Nanomultiphrase m, std::vector<std::size_t> theta,
                                        Factorization f, const HomotopyDataTriple& t) {
  check_theta(m, theta, f);
  std::vector<std::size_t> lf = resolve_factors(m.underlying(), f, t);
  for (std::size_t c = 0; c < m.nc(); ++c)
    for (LetterId id : m.underlying().component(c))
      if (lf[id] != theta[c])
        throw SideConditionError("letter '" + m.underlying().letters()[id].name +
                                 "' does not project into factor of component " +
                                 std::to_string(c + 1));
  DecomposedPhrase d;
  d.m = std::move(m);
  d.theta = std::move(theta);
  d.factorization = std::move(f);
  return d;
}

std::string render_decomposed(const DecomposedPhrase& d) {
  std::string out = "theta:";
  for (std::size_t v : d.theta) out += " " + std::to_string(v + 1);
  out += "\n" + render_multiphrase(d.m) + "\n";
  return out;
}

DecomposedPhrase psi(const Nanophrase& p, const Factorization& f,
                     const HomotopyDataTriple& t) {
  if (f.k() == 0) throw UnitFactorizationError("factorization has no factors");
  validate_projections(p, t);
  std::vector<std::size_t> lf = resolve_factors(p, f, t);

  std::vector<std::vector<LetterId>> comps;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> theta;
  for (const auto& word : p.components()) {
    std::size_t count = 0;
    std::vector<LetterId> run;
    for (std::size_t o = 0; o < word.size(); ++o) {
      run.push_back(word[o]);
      bool boundary = o + 1 == word.size() || lf[word[o + 1]] != lf[word[o]];
      if (boundary) {
        theta.push_back(lf[run.front()]);
        comps.push_back(std::move(run));
        run.clear();
        ++count;
      }
    }
    sizes.push_back(count);  // empty component -> 0-component phrase
  }
  Nanomultiphrase m = Nanomultiphrase::make(
      Nanophrase::make(p.letters(), std::move(comps)), std::move(sizes));
  return DecomposedPhrase::make(std::move(m), std::move(theta), f, t);
}

DecomposedPhrase gamma(const Nanophrase& p, const std::vector<std::size_t>& theta,
                       const Factorization& f, const HomotopyDataTriple& t) {
  validate_projections(p, t);
  Nanomultiphrase shell = Nanomultiphrase::make(p, {p.nc()});
  check_theta(shell, theta, f);
  std::vector<std::size_t> lf = resolve_factors(p, f, t);

  std::vector<bool> dead(p.rank(), false);
  for (std::size_t c = 0; c < p.nc(); ++c)
    for (LetterId id : p.component(c))
      if (lf[id] != theta[c]) dead[id] = true;

  std::vector<Letter> letters;
  std::vector<std::size_t> remap(p.rank(), SIZE_MAX);
  for (std::size_t id = 0; id < p.rank(); ++id)
    if (!dead[id]) {
      remap[id] = letters.size();
      letters.push_back(p.letters()[id]);
    }
  std::vector<std::vector<LetterId>> comps;
  for (const auto& word : p.components()) {
    std::vector<LetterId> w;
    for (LetterId id : word)
      if (!dead[id]) w.push_back(remap[id]);
    comps.push_back(std::move(w));
  }
  Nanophrase filtered = Nanophrase::make(std::move(letters), std::move(comps));
  std::size_t n = filtered.nc();
  return DecomposedPhrase::make(Nanomultiphrase::make(std::move(filtered), {n}),
                                theta, f, t);
}

Nanophrase omega(const DecomposedPhrase& d) { return chi(d.m); }

PhraseMove reduction_of(const DecomposedPhrase& d, std::size_t comp) {
  if (comp >= d.m.nc()) throw IndexOutOfRangeError("component index out of range");
  if (!d.m.underlying().component(comp).empty())
    throw ComponentNotEmptyError("component " + std::to_string(comp + 1) + " is not empty");
  std::size_t f = d.m.phrase_of(comp);
  std::size_t begin = d.m.phrase_begin(f);
  std::size_t end = begin + d.m.phrase_sizes()[f];
  bool boundary = comp == begin || comp + 1 == end;
  PhraseMove mv;
  mv.index = comp;
  if (boundary || d.theta[comp - 1] != d.theta[comp + 1])
    mv.kind = PhraseMoveKind::SimpleReduction;
  else
    mv.kind = PhraseMoveKind::ConcatenatingReduction;
  return mv;
}

DecomposedPhrase apply_phrase_move(const DecomposedPhrase& d, const PhraseMove& mv,
                                   const HomotopyDataTriple& t) {
  const Nanophrase& p = d.m.underlying();
  switch (mv.kind) {
    case PhraseMoveKind::SimpleReduction:
    case PhraseMoveKind::ConcatenatingReduction: {
      PhraseMove legal = reduction_of(d, mv.index);
      if (legal.kind != mv.kind)
        throw SideConditionError("the unique reduction of this component has the other kind");
      std::vector<std::size_t> sizes = d.m.phrase_sizes();
      std::size_t f = d.m.phrase_of(mv.index);
      std::vector<std::vector<LetterId>> comps = p.components();
      std::vector<std::size_t> theta = d.theta;
      if (mv.kind == PhraseMoveKind::SimpleReduction) {
        comps.erase(comps.begin() + mv.index);
        theta.erase(theta.begin() + mv.index);
        sizes[f] -= 1;
      } else {
        std::vector<LetterId> merged = comps[mv.index - 1];
        merged.insert(merged.end(), comps[mv.index + 1].begin(), comps[mv.index + 1].end());
        comps[mv.index - 1] = std::move(merged);
        comps.erase(comps.begin() + mv.index, comps.begin() + mv.index + 2);
        theta.erase(theta.begin() + mv.index, theta.begin() + mv.index + 2);
        sizes[f] -= 2;
      }
      Nanomultiphrase m = Nanomultiphrase::make(
          Nanophrase::make(p.letters(), std::move(comps)), std::move(sizes));
      return DecomposedPhrase::make(std::move(m), std::move(theta), d.factorization, t);
    }
    case PhraseMoveKind::SimpleAugmentation: {
      if (mv.phrase >= d.m.n_phrases()) throw IndexOutOfRangeError("phrase index out of range");
      if (mv.index > d.m.phrase_sizes()[mv.phrase])
        throw IndexOutOfRangeError("insertion position out of range");
      std::size_t global = d.m.phrase_begin(mv.phrase) + mv.index;
      std::vector<std::vector<LetterId>> comps = p.components();
      std::vector<std::size_t> theta = d.theta;
      std::vector<std::size_t> sizes = d.m.phrase_sizes();
      comps.insert(comps.begin() + global, std::vector<LetterId>{});
      theta.insert(theta.begin() + global, mv.factor);
      sizes[mv.phrase] += 1;
      Nanomultiphrase m = Nanomultiphrase::make(
          Nanophrase::make(p.letters(), std::move(comps)), std::move(sizes));
      return DecomposedPhrase::make(std::move(m), std::move(theta), d.factorization, t);
    }
    case PhraseMoveKind::SplittingAugmentation: {
      if (mv.index >= d.m.nc()) throw IndexOutOfRangeError("component index out of range");
      const auto& word = p.component(mv.index);
      if (mv.split_off > word.size()) throw IndexOutOfRangeError("split offset out of range");
      if (mv.factor == d.theta[mv.index])
        throw SideConditionError("split label must differ from the component's factor");
      std::size_t f = d.m.phrase_of(mv.index);
      std::vector<std::vector<LetterId>> comps = p.components();
      std::vector<std::size_t> theta = d.theta;
      std::vector<std::size_t> sizes = d.m.phrase_sizes();
      std::vector<LetterId> prefix(word.begin(), word.begin() + mv.split_off);
      std::vector<LetterId> suffix(word.begin() + mv.split_off, word.end());
      comps[mv.index] = std::move(prefix);
      comps.insert(comps.begin() + mv.index + 1, {std::vector<LetterId>{}, std::move(suffix)});
      theta.insert(theta.begin() + mv.index + 1, {mv.factor, theta[mv.index]});
      sizes[f] += 2;
      Nanomultiphrase m = Nanomultiphrase::make(
          Nanophrase::make(p.letters(), std::move(comps)), std::move(sizes));
      return DecomposedPhrase::make(std::move(m), std::move(theta), d.factorization, t);
    }
  }
  throw SideConditionError("unknown phrase move kind");
}

Nanomultiphrase split_by_factor(const DecomposedPhrase& d, std::size_t factor) {
  if (factor >= d.factorization.k()) throw FactorOutOfRangeError("factor index out of range");
  std::set<std::size_t> drop;
  for (std::size_t c = 0; c < d.m.nc(); ++c)
    if (d.theta[c] != factor) drop.insert(c);
  return project_out(d.m, drop, ProjectionMode::DropComponents);
}

ReducedClass reduce_fully(const DecomposedPhrase& d, const HomotopyDataTriple& t,
                          const SearchBudget& budget) {
  DecomposedPhrase cur = d;
  Certification cert = Certification::Certified;
  for (bool progressed = true; progressed;) {
    progressed = false;
    bool saw_unknown = false;
    for (std::size_t c = 0; c < cur.m.nc() && !progressed; ++c) {
      std::size_t fi = cur.theta[c];
      Nanomultiphrase s = split_by_factor(cur, fi);
      std::size_t local = 0;
      for (std::size_t j = 0; j < c; ++j)
        if (cur.theta[j] == fi) ++local;
      Decision dec =
          decide_reducible(s.underlying(), local, cur.factorization.factors[fi], budget);
      if (dec.yes()) {
        Nanomultiphrase emptied = project_out(cur.m, {c}, ProjectionMode::KeepComponents);
        Nanophrase w = chi(emptied);
        cur = psi(w, cur.factorization, t);
        progressed = true;
      } else if (dec.unknown()) {
        saw_unknown = true;
      }
    }
    if (!progressed) cert = saw_unknown ? Certification::ModuloUnknown : Certification::Certified;
  }

  ReducedClass rc;
  rc.representative = cur;
  rc.cert = cert;
  for (std::size_t i = 0; i < cur.factorization.k(); ++i)
    rc.per_factor.push_back(split_by_factor(cur, i));
  return rc;
}

ReducedClass complete_invariant(const Nanophrase& p, const HomotopyDataTriple& t,
                                const SearchBudget& budget) {
  Factorization f = prime_factorize(t);
  if (f.k() < 2)
    throw PrimeTripleError("the reduction invariant is trivial over a prime triple");
  return reduce_fully(psi(p, f, t), t, budget);
}

Decision compare_reduced(const ReducedClass& a, const ReducedClass& b, const Factorization& f,
                         const SearchBudget& budget) {
  bool certified =
      a.cert == Certification::Certified && b.cert == Certification::Certified;
  auto no_or_unknown = [&](std::string kind, std::string detail) {
    Decision d;
    if (certified) {
      d.verdict = Verdict::No;
      d.obstruction = Obstruction{std::move(kind), std::move(detail)};
    } else {
      d.verdict = Verdict::Unknown;
      d.note = "reduction only partial; would separate by " + kind;
    }
    return d;
  };

  if (a.theta() != b.theta()) {
    std::string da, db;
    for (std::size_t v : a.theta()) da += " " + std::to_string(v + 1);
    for (std::size_t v : b.theta()) db += " " + std::to_string(v + 1);
    return no_or_unknown("theta_R", "theta" + da + " vs theta" + db);
  }
  if (a.representative.m.phrase_sizes() != b.representative.m.phrase_sizes())
    return no_or_unknown("theta_R", "reduced phrase structures differ");

  bool any_unknown = false;
  for (std::size_t i = 0; i < f.k(); ++i) {
    const Nanomultiphrase& pa = a.per_factor[i];
    const Nanomultiphrase& pb = b.per_factor[i];
    if (pa.phrase_sizes() != pb.phrase_sizes())
      return no_or_unknown("factor", "factor " + std::to_string(i + 1) +
                                         " component structures differ");
    Decision sub = decide_equal(pa.underlying(), pb.underlying(), f.factors[i], budget);
    if (sub.no())
      return no_or_unknown("factor",
                           "factor " + std::to_string(i + 1) + ": " +
                               (sub.obstruction ? sub.obstruction->kind + ": " +
                                                      sub.obstruction->detail
                                                : "separated"));
    if (sub.unknown()) any_unknown = true;
  }
  if (any_unknown) {
    Decision d;
    d.verdict = Verdict::Unknown;
    d.note = "some factor comparison is unresolved";
    return d;
  }
  Decision d;
  d.verdict = Verdict::Yes;
  d.note = "theta_R and all factor classes agree";
  return d;
}

std::string render_reduced(const ReducedClass& rc) {
  std::string out = "theta:";
  for (std::size_t v : rc.theta()) out += " " + std::to_string(v + 1);
  out += " ; cert: ";
  out += rc.cert == Certification::Certified ? "full" : "partial";
  out += "\n";
  for (const Nanomultiphrase& m : rc.per_factor)
    out += render_multiphrase(m, TokenMode::Tokens) + "\n";
  return out;
}

ParsedReducedClass parse_reduced_class(std::string_view text, TokenMode mode) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) throw SyntaxError("empty reduced-class text");
  auto semi = header.find(';');
  if (header.rfind("theta:", 0) != 0 || semi == std::string::npos)
    throw SyntaxError("expected 'theta: ... ; cert: ...' header");
  ParsedReducedClass out;
  {
    std::istringstream hs(header.substr(6, semi - 6));
    long v;
    while (hs >> v) {
      if (v < 1) throw SyntaxError("theta entries are 1-based positive");
      out.theta.push_back(static_cast<std::size_t>(v - 1));
    }
  }
  std::string cert = header.substr(semi + 1);
  cert.erase(std::remove_if(cert.begin(), cert.end(), ::isspace), cert.end());
  if (cert == "cert:full")
    out.cert = Certification::Certified;
  else if (cert == "cert:partial")
    out.cert = Certification::ModuloUnknown;
  else
    throw SyntaxError("expected cert: full|partial");
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.per_factor.push_back(parse_multiphrase(line, mode));
  }
  return out;
}

namespace {

bool s_invariant_under_reversal(const HomotopyDataTriple& t) {
  for (const auto& tr : t.s())
    if (!std::binary_search(t.s().begin(), t.s().end(),
                            std::array<std::size_t, 3>{tr[2], tr[1], tr[0]}))
      return false;
  return true;
}

bool s_invariant_under_tau(const HomotopyDataTriple& t) {
  for (const auto& tr : t.s())
    if (!std::binary_search(
            t.s().begin(), t.s().end(),
            std::array<std::size_t, 3>{t.tau(tr[0]), t.tau(tr[1]), t.tau(tr[2])}))
      return false;
  return true;
}

Decision symmetry_unknown(std::string note) {
  Decision d;
  d.verdict = Verdict::Unknown;
  d.note = std::move(note);
  return d;
}

}  // namespace

SymmetryObstruction symmetry_obstruction(const Nanophrase& w, const HomotopyDataTriple& t,
                                         const SearchBudget& budget) {
  SymmetryObstruction out{symmetry_unknown("no obstruction found"),
                          symmetry_unknown("no obstruction found")};
  bool rev = s_invariant_under_reversal(t);
  bool tauinv = s_invariant_under_tau(t);
  if (!rev) {
    out.symmetric = symmetry_unknown("S is not invariant under (a,b,c)->(c,b,a)");
    out.skew = symmetry_unknown("S is not invariant under (a,b,c)->(c,b,a)");
    return out;
  }
  if (!tauinv) out.skew = symmetry_unknown("S is not invariant under tau x tau x tau");

  Factorization f = prime_factorize(t);
  if (f.k() < 2) {
    Decision d = symmetry_unknown("prime triple: condition is vacuous");
    out.symmetric = d;
    if (tauinv) out.skew = d;
    return out;
  }
  ReducedClass rc = reduce_fully(psi(w, f, t), t, budget);
  if (rc.cert != Certification::Certified) {
    Decision d = symmetry_unknown("reduction only partial; theta_R uncertified");
    out.symmetric = d;
    if (tauinv) out.skew = d;
    return out;
  }
  const auto& theta = rc.theta();
  std::size_t n = theta.size();
  Decision verdict;
  if (n == 0) {
    verdict = symmetry_unknown("contractible: condition is vacuous");
  } else if (n % 2 == 0) {
    verdict.verdict = Verdict::No;
    verdict.obstruction = Obstruction{"theta_R", "c_R = " + std::to_string(n) + " is even"};
  } else {
    verdict = symmetry_unknown("theta_R is palindromic");
    for (std::size_t i = 0; i < n; ++i) {
      if (theta[i] != theta[n - 1 - i]) {
        verdict.note.clear();
        verdict.verdict = Verdict::No;
        verdict.obstruction =
            Obstruction{"theta_R", "theta_R(" + std::to_string(i + 1) + ") != theta_R(" +
                                       std::to_string(n - i) + ")"};
        break;
      }
    }
  }
  out.symmetric = verdict;
  if (tauinv) out.skew = verdict;
  return out;
}

namespace {

bool invariants_nontrivial(const Nanophrase& p, const HomotopyDataTriple& t) {
  for (int b : component_parities(p))
    if (b) return true;
  if (!linking_matrix(p, t).trivial()) return true;
  if (!v_invariant(p, t).entries.empty()) return true;
  if (t.s_diagonal() && !u_invariant(p, t).entries.empty()) return true;
  return false;
}

}  // namespace

HrReport hr_report(const Nanophrase& w, const HomotopyDataTriple& t,
                   const SearchBudget& budget) {
  HrReport out;
  Factorization f = prime_factorize(t);

  if (f.k() < 2) {
    FactorHr fh;
    fh.factor = 0;
    if (t.s_empty()) {
      fh.lower = fh.upper = normal_form_empty_s(w, t).rank();
      fh.exact = true;
    } else {
      fh.lower = invariants_nontrivial(w, t) ? 1 : 0;
      fh.upper = min_rank_reachable(w, t, budget);
    }
    out.per_factor.push_back(fh);
    out.lower = fh.lower;
    out.upper = fh.upper;
    return out;
  }

  ReducedClass rc = reduce_fully(psi(w, f, t), t, budget);
  out.cert = rc.cert;
  bool all_exact = true;
  std::size_t sum_lower = 0, sum_upper = 0;
  for (std::size_t i = 0; i < f.k(); ++i) {
    const Nanophrase& pi = rc.per_factor[i].underlying();
    FactorHr fh;
    fh.factor = i;
    if (f.factors[i].s_empty()) {
      fh.lower = fh.upper = normal_form_empty_s(pi, f.factors[i]).rank();
      fh.exact = true;
    } else {
      fh.lower = invariants_nontrivial(pi, f.factors[i]) ? 1 : 0;
      fh.upper = min_rank_reachable(pi, f.factors[i], budget);
      all_exact = false;
    }
    sum_lower += fh.lower;
    sum_upper += fh.upper;
    out.per_factor.push_back(fh);
  }
  if (rc.cert == Certification::ModuloUnknown)
    out.lower = invariants_nontrivial(w, t) ? 1 : 0;
  else
    out.lower = sum_lower;
  if (all_exact && rc.cert == Certification::Certified)
    out.upper = sum_upper;
  else
    out.upper = std::min(sum_upper, min_rank_reachable(w, t, budget));
  return out;
}

}  // namespace nanophrase
