// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nanophrase/triple.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "nanophrase/errors.hpp"

namespace nanophrase {

HomotopyDataTriple HomotopyDataTriple::make(std::vector<std::string> alpha,
                                            std::vector<std::size_t> tau,
                                            std::vector<std::array<std::size_t, 3>> s) {
  HomotopyDataTriple t;
  t.alpha_ = std::move(alpha);
  t.tau_ = std::move(tau);

  std::set<std::string> seen;
  for (const std::string& a : t.alpha_) {
    if (a.empty()) throw SyntaxError("empty symbol name");
    if (!seen.insert(a).second) throw SyntaxError("duplicate symbol '" + a + "'");
  }
  if (t.tau_.size() != t.alpha_.size()) throw SyntaxError("tau size mismatch");
  for (std::size_t i = 0; i < t.tau_.size(); ++i) {
    if (t.tau_[i] >= t.alpha_.size()) throw SyntaxError("tau image out of range");
    if (t.tau_[t.tau_[i]] != i)
      throw SyntaxError("tau is not an involution at '" + t.alpha_[i] + "'");
  }
  for (const auto& tr : s)
    for (std::size_t c : tr)
      if (c >= t.alpha_.size()) throw SyntaxError("S coordinate out of range");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  t.s_ = std::move(s);

  t.orbit_of_.assign(t.alpha_.size(), SIZE_MAX);
  for (std::size_t i = 0; i < t.alpha_.size(); ++i) {
    if (t.orbit_of_[i] != SIZE_MAX) continue;
    std::size_t orbit = t.orbit_rep_.size();
    t.orbit_rep_.push_back(i);
    t.orbit_free_.push_back(t.tau_[i] != i);
    t.orbit_of_[i] = orbit;
    t.orbit_of_[t.tau_[i]] = orbit;
  }
  return t;
}

HomotopyDataTriple HomotopyDataTriple::make_named(
    std::vector<std::string> alpha,
    const std::vector<std::pair<std::string, std::string>>& tau_pairs,
    const std::vector<std::array<std::string, 3>>& s) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < alpha.size(); ++i) idx[alpha[i]] = i;
  auto at = [&](const std::string& n) {
    auto it = idx.find(n);
    if (it == idx.end()) throw UnknownSymbolError("symbol '" + n + "' is not in alpha");
    return it->second;
  };
  std::vector<std::size_t> tau(alpha.size());
  std::iota(tau.begin(), tau.end(), 0);
  for (const auto& [a, b] : tau_pairs) {
    std::size_t i = at(a), j = at(b);
    tau[i] = j;
    tau[j] = i;
  }
  std::vector<std::array<std::size_t, 3>> si;
  si.reserve(s.size());
  for (const auto& tr : s) si.push_back({at(tr[0]), at(tr[1]), at(tr[2])});
  return make(std::move(alpha), std::move(tau), std::move(si));
}

std::optional<std::size_t> HomotopyDataTriple::find(std::string_view name) const {
  for (std::size_t i = 0; i < alpha_.size(); ++i)
    if (alpha_[i] == name) return i;
  return std::nullopt;
}

std::size_t HomotopyDataTriple::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownSymbolError("symbol '" + std::string(name) + "' is not in alpha");
}

bool HomotopyDataTriple::s_diagonal() const {
  if (s_.size() != alpha_.size()) return false;
  for (std::size_t i = 0; i < alpha_.size(); ++i)
    if (!std::binary_search(s_.begin(), s_.end(), std::array<std::size_t, 3>{i, i, i}))
      return false;
  return true;
}

namespace {

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

HomotopyDataTriple parse_triple(std::string_view text) {
  std::vector<std::string> alpha;
  std::vector<std::pair<std::string, std::string>> tau_pairs;
  std::vector<std::array<std::string, 3>> s;
  bool diagonal = false;

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto colon = line.find(':');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (colon == std::string::npos) throw SyntaxError("expected 'key: ...' line: " + line);
    std::string key = line.substr(0, colon);
    key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
    std::string rest = line.substr(colon + 1);
    if (key == "alpha") {
      for (auto& tok : split_ws(rest)) alpha.push_back(tok);
    } else if (key == "tau") {
      for (auto& tok : split_ws(rest)) {
        auto arrow = tok.find("<->");
        if (arrow == std::string::npos) continue;  // singleton: fixed point
        tau_pairs.emplace_back(tok.substr(0, arrow), tok.substr(arrow + 3));
      }
    } else if (key == "S") {
      std::string body;
      for (auto& tok : split_ws(rest)) body += tok;
      if (body == "diagonal") {
        diagonal = true;
        continue;
      }
      std::size_t i = 0;
      while (i < body.size()) {
        if (body[i] != '(') throw SyntaxError("expected '(' in S entry", i);
        auto close = body.find(')', i);
        if (close == std::string::npos) throw SyntaxError("unterminated S entry", i);
        std::string entry = body.substr(i + 1, close - i - 1);
        std::array<std::string, 3> tr;
        std::size_t k = 0;
        std::string cur;
        for (char c : entry) {
          if (c == ',') {
            if (k >= 2) throw SyntaxError("S entry has more than 3 coordinates");
            tr[k++] = cur;
            cur.clear();
          } else {
            cur.push_back(c);
          }
        }
        if (k != 2) throw SyntaxError("S entry must have 3 coordinates");
        tr[2] = cur;
        s.push_back(tr);
        i = close + 1;
      }
    } else {
      throw SyntaxError("unknown triple key '" + key + "'");
    }
  }
  if (diagonal)
    for (const std::string& a : alpha) s.push_back({a, a, a});
  return HomotopyDataTriple::make_named(std::move(alpha), tau_pairs, s);
}

std::string render_triple(const HomotopyDataTriple& t) {
  std::string out = "alpha:";
  for (const auto& a : t.alpha()) out += " " + a;
  out += "\ntau:";
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.tau(i) > i) out += " " + t.symbol(i) + "<->" + t.symbol(t.tau(i));
  out += "\nS:";
  if (t.s_diagonal()) {
    out += " diagonal";
  } else {
    for (const auto& tr : t.s())
      out += " (" + t.symbol(tr[0]) + "," + t.symbol(tr[1]) + "," + t.symbol(tr[2]) + ")";
  }
  out += "\n";
  return out;
}

HomotopyDataTriple product(const HomotopyDataTriple& t1, const HomotopyDataTriple& t2) {
  std::vector<std::string> alpha;
  std::vector<std::size_t> tau;
  std::vector<std::array<std::size_t, 3>> s;
  for (std::size_t i = 0; i < t1.size(); ++i) alpha.push_back("1." + t1.symbol(i));
  for (std::size_t i = 0; i < t2.size(); ++i) alpha.push_back("2." + t2.symbol(i));
  tau.resize(alpha.size());
  for (std::size_t i = 0; i < t1.size(); ++i) tau[i] = t1.tau(i);
  for (std::size_t i = 0; i < t2.size(); ++i) tau[t1.size() + i] = t1.size() + t2.tau(i);
  for (const auto& tr : t1.s()) s.push_back({tr[0], tr[1], tr[2]});
  for (const auto& tr : t2.s())
    s.push_back({t1.size() + tr[0], t1.size() + tr[1], t1.size() + tr[2]});
  return HomotopyDataTriple::make(std::move(alpha), std::move(tau), std::move(s));
}

bool is_factor(const std::vector<std::size_t>& beta, const HomotopyDataTriple& t) {
  std::vector<bool> in_beta(t.size(), false);
  for (std::size_t i : beta) {
    if (i >= t.size()) throw IndexOutOfRangeError("beta index out of range");
    in_beta[i] = true;
  }
  for (std::size_t i : beta)
    if (!in_beta[t.tau(i)]) return false;
  for (const auto& tr : t.s()) {
    bool any = in_beta[tr[0]] || in_beta[tr[1]] || in_beta[tr[2]];
    bool all = in_beta[tr[0]] && in_beta[tr[1]] && in_beta[tr[2]];
    if (any != all) return false;
  }
  return true;
}

HomotopyDataTriple restrict_triple(const HomotopyDataTriple& t,
                                   const std::vector<std::size_t>& beta) {
  std::map<std::size_t, std::size_t> local;
  std::vector<std::string> alpha;
  for (std::size_t i : beta) {
    local[i] = alpha.size();
    alpha.push_back(t.symbol(i));
  }
  std::vector<std::size_t> tau(alpha.size());
  for (std::size_t i : beta) {
    auto it = local.find(t.tau(i));
    if (it == local.end()) throw SideConditionError("subset is not tau-invariant");
    tau[local[i]] = it->second;
  }
  std::vector<std::array<std::size_t, 3>> s;
  for (const auto& tr : t.s()) {
    if (local.count(tr[0]) && local.count(tr[1]) && local.count(tr[2]))
      s.push_back({local[tr[0]], local[tr[1]], local[tr[2]]});
  }
  return HomotopyDataTriple::make(std::move(alpha), std::move(tau), std::move(s));
}

std::size_t Factorization::factor_of(std::size_t parent_sym) const {
  if (parent_sym >= factor_of_.size()) throw IndexOutOfRangeError("symbol index out of range");
  return factor_of_[parent_sym];
}

Factorization prime_factorize(const HomotopyDataTriple& t) {
  if (t.empty_alpha()) throw EmptyAlphaError("cannot factorize the unit triple");

  // Union-find over tau-orbits; S-triples merge the orbits of their coords.
  std::vector<std::size_t> parent(t.orbit_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto merge = [&](std::size_t a, std::size_t b) { parent[root(a)] = root(b); };
  for (const auto& tr : t.s()) {
    merge(t.orbit_of(tr[0]), t.orbit_of(tr[1]));
    merge(t.orbit_of(tr[1]), t.orbit_of(tr[2]));
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;  // root -> symbol indices
  for (std::size_t i = 0; i < t.size(); ++i) groups[root(t.orbit_of(i))].push_back(i);

  struct Entry {
    HomotopyDataTriple triple;
    std::vector<std::size_t> embedding;
    std::vector<std::string> sorted_names;
  };
  std::vector<Entry> entries;
  for (auto& [r, symbols] : groups) {
    Entry e;
    e.embedding = symbols;
    e.triple = restrict_triple(t, symbols);
    e.sorted_names = e.triple.alpha();
    std::sort(e.sorted_names.begin(), e.sorted_names.end());
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.triple.size() != b.triple.size()) return a.triple.size() < b.triple.size();
    return a.sorted_names < b.sorted_names;
  });

  Factorization f;
  f.factor_of_.assign(t.size(), SIZE_MAX);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    for (std::size_t sym : entries[k].embedding) f.factor_of_[sym] = k;
    f.factors.push_back(std::move(entries[k].triple));
    f.embeddings.push_back(std::move(entries[k].embedding));
  }
  return f;
}

namespace {

bool check_bijection(const HomotopyDataTriple& t1, const HomotopyDataTriple& t2,
                     const std::vector<std::size_t>& f) {
  for (std::size_t i = 0; i < t1.size(); ++i)
    if (f[t1.tau(i)] != t2.tau(f[i])) return false;
  std::set<std::array<std::size_t, 3>> s2(t2.s().begin(), t2.s().end());
  std::set<std::array<std::size_t, 3>> image;
  for (const auto& tr : t1.s()) image.insert({f[tr[0]], f[tr[1]], f[tr[2]]});
  return image == s2;
}

bool search_orbit_map(const HomotopyDataTriple& t1, const HomotopyDataTriple& t2,
                      std::size_t orbit, std::vector<bool>& used,
                      std::vector<std::size_t>& f, std::vector<std::size_t>* witness) {
  if (orbit == t1.orbit_count()) {
    if (!check_bijection(t1, t2, f)) return false;
    if (witness) *witness = f;
    return true;
  }
  std::size_t rep = t1.orbit_rep(orbit);
  for (std::size_t o2 = 0; o2 < t2.orbit_count(); ++o2) {
    if (used[o2] || t1.orbit_free(orbit) != t2.orbit_free(o2)) continue;
    used[o2] = true;
    std::size_t rep2 = t2.orbit_rep(o2);
    // Free orbits admit two alignments; fixed ones just one.
    std::size_t choices = t1.orbit_free(orbit) ? 2 : 1;
    for (std::size_t c = 0; c < choices; ++c) {
      std::size_t image = c == 0 ? rep2 : t2.tau(rep2);
      f[rep] = image;
      f[t1.tau(rep)] = t2.tau(image);
      if (search_orbit_map(t1, t2, orbit + 1, used, f, witness)) {
        used[o2] = false;
        return true;
      }
    }
    used[o2] = false;
  }
  return false;
}

}  // namespace

bool triples_isomorphic(const HomotopyDataTriple& t1, const HomotopyDataTriple& t2,
                        std::vector<std::size_t>* witness) {
  if (t1.size() != t2.size() || t1.s().size() != t2.s().size()) return false;
  if (t1.orbit_count() != t2.orbit_count()) return false;
  std::vector<bool> used(t2.orbit_count(), false);
  std::vector<std::size_t> f(t1.size(), SIZE_MAX);
  return search_orbit_map(t1, t2, 0, used, f, witness);
}

bool is_prime(const HomotopyDataTriple& t) {
  if (t.empty_alpha()) return false;
  return prime_factorize(t).k() == 1;
}

std::string classify_diagonal_prime(const HomotopyDataTriple& t) {
  static const HomotopyDataTriple alpha_g =
      HomotopyDataTriple::make_named({"a"}, {}, {{{"a", "a", "a"}}});
  static const HomotopyDataTriple alpha_f =
      HomotopyDataTriple::make_named({"a", "b"}, {{"a", "b"}},
                                     {{{"a", "a", "a"}}, {{"b", "b", "b"}}});
  if (triples_isomorphic(t, alpha_g)) return "alpha_G";
  if (triples_isomorphic(t, alpha_f)) return "alpha_F";
  return "";
}

void validate_projections(const Nanophrase& p, const HomotopyDataTriple& t) {
  for (const Letter& l : p.letters())
    if (!t.find(l.symbol))
      throw UnknownSymbolError("projection '" + l.symbol + "' of letter '" + l.name +
                               "' is not in alpha");
}

void validate_projections(const Nanomultiphrase& m, const HomotopyDataTriple& t) {
  validate_projections(m.underlying(), t);
}

Nanophrase opposite_inverse(const Nanophrase& p, const HomotopyDataTriple& t,
                            WhichTransform which) {
  if (which == WhichTransform::Opposite) {
    std::vector<std::vector<LetterId>> comps(p.components().rbegin(), p.components().rend());
    for (auto& word : comps) std::reverse(word.begin(), word.end());
    return Nanophrase::make(p.letters(), std::move(comps));
  }
  std::vector<Letter> letters = p.letters();
  for (Letter& l : letters) l.symbol = t.symbol(t.tau(t.index_of(l.symbol)));
  return Nanophrase::make(std::move(letters), p.components());
}

}  // namespace nanophrase
