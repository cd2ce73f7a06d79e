// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nanophrase/phrase.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "nanophrase/errors.hpp"

namespace nanophrase {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '\'';
}

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

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Nanophrase Nanophrase::make(std::vector<Letter> letters,
                            std::vector<std::vector<LetterId>> components) {
  Nanophrase p;
  p.letters_ = std::move(letters);
  p.components_ = std::move(components);

  std::set<std::string> names;
  for (const Letter& l : p.letters_) {
    if (l.name.empty()) throw SyntaxError("empty letter name");
    if (!names.insert(l.name).second)
      throw SyntaxError("duplicate letter '" + l.name + "'");
  }

  std::vector<std::size_t> counts(p.letters_.size(), 0);
  p.occ_.assign(p.letters_.size(), {});
  for (std::size_t c = 0; c < p.components_.size(); ++c) {
    for (std::size_t o = 0; o < p.components_[c].size(); ++o) {
      LetterId id = p.components_[c][o];
      if (id >= p.letters_.size()) throw SyntaxError("letter id out of range");
      if (counts[id] < 2) p.occ_[id][counts[id]] = Occurrence{c, o};
      ++counts[id];
    }
  }
  for (std::size_t id = 0; id < counts.size(); ++id) {
    if (counts[id] != 2)
      throw NonGaussError("letter '" + p.letters_[id].name + "' occurs " +
                          std::to_string(counts[id]) + " times, expected 2");
  }
  return p;
}

Nanomultiphrase Nanomultiphrase::make(Nanophrase underlying,
                                      std::vector<std::size_t> phrase_sizes) {
  std::size_t total = 0;
  for (std::size_t s : phrase_sizes) total += s;
  if (total != underlying.nc())
    throw SyntaxError("phrase sizes do not sum to the component count");
  Nanomultiphrase m;
  m.phrase_ = std::move(underlying);
  m.sizes_ = std::move(phrase_sizes);
  return m;
}

std::size_t Nanomultiphrase::phrase_of(std::size_t comp) const {
  std::size_t acc = 0;
  for (std::size_t f = 0; f < sizes_.size(); ++f) {
    acc += sizes_[f];
    if (comp < acc) return f;
  }
  throw IndexOutOfRangeError("component index out of range");
}

std::size_t Nanomultiphrase::phrase_begin(std::size_t f) const {
  std::size_t acc = 0;
  for (std::size_t i = 0; i < f; ++i) acc += sizes_[i];
  return acc;
}

namespace {

struct Decl {
  std::string letter;
  std::string symbol;
};

std::vector<Decl> parse_decls(std::string_view text, TokenMode mode) {
  std::vector<Decl> out;
  for (const std::string& tok : split_ws(text)) {
    auto colon = tok.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= tok.size())
      throw SyntaxError("malformed declaration '" + tok + "', expected LETTER:symbol");
    Decl d{tok.substr(0, colon), tok.substr(colon + 1)};
    if (mode == TokenMode::Compact &&
        (d.letter.size() != 1 || !std::isupper(static_cast<unsigned char>(d.letter[0]))))
      throw SyntaxError("compact-mode letter must be a single uppercase char: '" + d.letter + "'");
    if (!is_ident_start(d.letter[0]))
      throw SyntaxError("letter must start with a letter character: '" + d.letter + "'");
    for (char c : d.symbol)
      if (!is_ident_char(c) && !is_ident_start(c))
        throw SyntaxError("malformed symbol name '" + d.symbol + "'");
    out.push_back(std::move(d));
  }
  return out;
}

// Splits a body into phrase chunks on "||"; a chunk may be empty (the
// 0-component phrase between consecutive separators).
std::vector<std::string> split_phrases(std::string_view body) {
  std::vector<std::string> chunks;
  std::size_t start = 0;
  for (std::size_t i = 0; i + 1 < body.size(); ++i) {
    if (body[i] == '|' && body[i + 1] == '|') {
      chunks.emplace_back(body.substr(start, i - start));
      start = i + 2;
      ++i;
    }
  }
  chunks.emplace_back(body.substr(start));
  return chunks;
}

std::vector<std::string> split_components(std::string_view chunk) {
  std::vector<std::string> comps;
  std::size_t start = 0;
  for (std::size_t i = 0; i < chunk.size(); ++i) {
    if (chunk[i] == '|') {
      comps.emplace_back(chunk.substr(start, i - start));
      start = i + 1;
    }
  }
  comps.emplace_back(chunk.substr(start));
  return comps;
}

std::vector<std::string> component_tokens(std::string_view comp, TokenMode mode) {
  std::vector<std::string> toks;
  if (mode == TokenMode::Compact) {
    for (char c : comp) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (!std::isupper(static_cast<unsigned char>(c)))
        throw SyntaxError(std::string("unexpected character '") + c + "' in compact body");
      toks.emplace_back(1, c);
    }
  } else {
    toks = split_ws(comp);
    for (const std::string& t : toks)
      if (!is_ident_start(t[0]))
        throw SyntaxError("unexpected token '" + t + "' in body");
  }
  return toks;
}

}  // namespace

ParsedPhrase parse_phrase(std::string_view text, TokenMode mode) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos)
    throw SyntaxError("missing ';' between declarations and body");
  std::vector<Decl> decls = parse_decls(text.substr(0, semi), mode);
  std::string_view body = text.substr(semi + 1);

  bool multi = body.find("||") != std::string_view::npos;
  std::vector<std::string> phrase_chunks = split_phrases(body);

  std::vector<std::vector<std::string>> component_names;
  std::vector<std::size_t> sizes;
  for (const std::string& chunk : phrase_chunks) {
    std::string_view tchunk = trim(chunk);
    if (tchunk.empty()) {
      sizes.push_back(0);
      continue;
    }
    std::size_t count = 0;
    for (const std::string& comp : split_components(tchunk)) {
      std::string_view tcomp = trim(comp);
      if (tcomp.empty())
        throw SyntaxError("empty component text; write '_' for an empty component");
      std::vector<std::string> word;
      if (tcomp != "_") {
        word = component_tokens(tcomp, mode);
        for (const std::string& tok : word)
          if (tok == "_") throw SyntaxError("'_' must be the only token of a component");
      }
      component_names.push_back(std::move(word));
      ++count;
    }
    sizes.push_back(count);
  }

  // The Gauss condition is checked before declarations so that a letter
  // occurring once reports NonGauss rather than a missing declaration.
  std::map<std::string, std::size_t> counts;
  for (const auto& word : component_names)
    for (const std::string& tok : word) ++counts[tok];
  for (const auto& [name, count] : counts)
    if (count != 2)
      throw NonGaussError("letter '" + name + "' occurs " + std::to_string(count) +
                          " times, expected 2");

  std::vector<Letter> letters;
  std::map<std::string, LetterId> by_name;
  for (const Decl& d : decls) {
    if (by_name.count(d.letter)) throw SyntaxError("duplicate declaration for '" + d.letter + "'");
    by_name[d.letter] = letters.size();
    letters.push_back(Letter{d.letter, d.symbol});
    if (!counts.count(d.letter))
      throw NonGaussError("letter '" + d.letter + "' occurs 0 times, expected 2");
  }
  for (const auto& [name, count] : counts)
    if (!by_name.count(name))
      throw SyntaxError("letter '" + name + "' has no projection declaration");

  std::vector<std::vector<LetterId>> components;
  components.reserve(component_names.size());
  for (const auto& word : component_names) {
    std::vector<LetterId> ids;
    ids.reserve(word.size());
    for (const std::string& tok : word) ids.push_back(by_name.at(tok));
    components.push_back(std::move(ids));
  }

  Nanophrase p = Nanophrase::make(std::move(letters), std::move(components));
  if (multi) return Nanomultiphrase::make(std::move(p), std::move(sizes));
  return p;
}

Nanophrase parse_nanophrase(std::string_view text, TokenMode mode) {
  ParsedPhrase v = parse_phrase(text, mode);
  if (auto* p = std::get_if<Nanophrase>(&v)) return *p;
  throw SyntaxError("expected a nanophrase, found a multiphrase ('||' present)");
}

Nanomultiphrase parse_multiphrase(std::string_view text, TokenMode mode) {
  ParsedPhrase v = parse_phrase(text, mode);
  if (auto* m = std::get_if<Nanomultiphrase>(&v)) return *m;
  Nanophrase p = std::get<Nanophrase>(std::move(v));
  std::size_t n = p.nc();
  return Nanomultiphrase::make(std::move(p), {n});
}

namespace {

bool compact_renderable(const Nanophrase& p) {
  for (const Letter& l : p.letters())
    if (l.name.size() != 1 || !std::isupper(static_cast<unsigned char>(l.name[0]))) return false;
  return true;
}

std::string render_decls(const Nanophrase& p) {
  std::string out;
  for (const Letter& l : p.letters()) {
    if (!out.empty()) out += ' ';
    out += l.name + ":" + l.symbol;
  }
  return out;
}

std::string render_chunk(const Nanophrase& p, std::size_t begin, std::size_t end,
                         TokenMode mode) {
  std::string out;
  for (std::size_t c = begin; c < end; ++c) {
    if (c > begin) out += mode == TokenMode::Compact ? "|" : " | ";
    const auto& word = p.component(c);
    if (word.empty()) {
      out += "_";
      continue;
    }
    for (std::size_t o = 0; o < word.size(); ++o) {
      if (mode == TokenMode::Tokens && o > 0) out += ' ';
      out += p.letters()[word[o]].name;
    }
  }
  return out;
}

}  // namespace

std::string render_body(const Nanophrase& p, TokenMode mode) {
  return render_chunk(p, 0, p.nc(), mode);
}

std::string render_phrase(const Nanophrase& p, TokenMode mode) {
  std::string decls = render_decls(p);
  return decls.empty() ? "; " + render_body(p, mode) : decls + " ; " + render_body(p, mode);
}

std::string render_phrase(const Nanophrase& p) {
  return render_phrase(p, compact_renderable(p) ? TokenMode::Compact : TokenMode::Tokens);
}

std::string render_multiphrase(const Nanomultiphrase& m, TokenMode mode) {
  const Nanophrase& p = m.underlying();
  std::string body;
  std::size_t begin = 0;
  for (std::size_t f = 0; f < m.n_phrases(); ++f) {
    if (f > 0) body += mode == TokenMode::Compact ? "||" : " || ";
    body += render_chunk(p, begin, begin + m.phrase_sizes()[f], mode);
    begin += m.phrase_sizes()[f];
  }
  std::string decls = render_decls(p);
  return decls.empty() ? "; " + body : decls + " ; " + body;
}

std::string render_multiphrase(const Nanomultiphrase& m) {
  return render_multiphrase(m, compact_renderable(m.underlying()) ? TokenMode::Compact
                                                                  : TokenMode::Tokens);
}

std::string canonical_letter_name(std::size_t i) { return "X" + std::to_string(i + 1); }

std::string fresh_letter_name(const Nanophrase& p) {
  std::set<std::string> used;
  for (const Letter& l : p.letters()) used.insert(l.name);
  for (std::size_t i = 1;; ++i) {
    std::string cand = "Z" + std::to_string(i);
    if (!used.count(cand)) return cand;
  }
}

Nanophrase canonicalize(const Nanophrase& p) {
  std::vector<std::size_t> new_id(p.rank(), SIZE_MAX);
  std::vector<Letter> letters;
  letters.reserve(p.rank());
  for (const auto& word : p.components()) {
    for (LetterId id : word) {
      if (new_id[id] == SIZE_MAX) {
        new_id[id] = letters.size();
        letters.push_back(Letter{canonical_letter_name(letters.size()), p.symbol_of(id)});
      }
    }
  }
  std::vector<std::vector<LetterId>> comps;
  comps.reserve(p.nc());
  for (const auto& word : p.components()) {
    std::vector<LetterId> w;
    w.reserve(word.size());
    for (LetterId id : word) w.push_back(new_id[id]);
    comps.push_back(std::move(w));
  }
  return Nanophrase::make(std::move(letters), std::move(comps));
}

Nanomultiphrase canonicalize(const Nanomultiphrase& m) {
  return Nanomultiphrase::make(canonicalize(m.underlying()), m.phrase_sizes());
}

std::string canonical_key(const Nanophrase& p) {
  return render_phrase(canonicalize(p), TokenMode::Tokens);
}

std::string canonical_key(const Nanomultiphrase& m) {
  return render_multiphrase(canonicalize(m), TokenMode::Tokens);
}

Nanophrase chi(const Nanophrase& p) {
  std::vector<LetterId> word;
  for (const auto& c : p.components()) word.insert(word.end(), c.begin(), c.end());
  return Nanophrase::make(p.letters(), {std::move(word)});
}

Nanophrase chi(const Nanomultiphrase& m) {
  const Nanophrase& p = m.underlying();
  std::vector<std::vector<LetterId>> comps;
  std::size_t begin = 0;
  for (std::size_t s : m.phrase_sizes()) {
    std::vector<LetterId> word;
    for (std::size_t c = begin; c < begin + s; ++c)
      word.insert(word.end(), p.component(c).begin(), p.component(c).end());
    comps.push_back(std::move(word));
    begin += s;
  }
  return Nanophrase::make(p.letters(), std::move(comps));
}

namespace {

// Drops the given letters, renumbering the survivors; component list is kept.
Nanophrase drop_letters(const Nanophrase& p, const std::vector<bool>& dead) {
  std::vector<std::size_t> new_id(p.rank(), SIZE_MAX);
  std::vector<Letter> letters;
  for (std::size_t id = 0; id < p.rank(); ++id) {
    if (!dead[id]) {
      new_id[id] = letters.size();
      letters.push_back(p.letters()[id]);
    }
  }
  std::vector<std::vector<LetterId>> comps;
  comps.reserve(p.nc());
  for (const auto& word : p.components()) {
    std::vector<LetterId> w;
    for (LetterId id : word)
      if (!dead[id]) w.push_back(new_id[id]);
    comps.push_back(std::move(w));
  }
  return Nanophrase::make(std::move(letters), std::move(comps));
}

}  // namespace

Nanophrase project_out(const Nanophrase& p, const std::set<std::size_t>& O,
                       ProjectionMode mode) {
  for (std::size_t i : O)
    if (i >= p.nc()) throw IndexOutOfRangeError("component index " + std::to_string(i));
  std::vector<bool> dead(p.rank(), false);
  for (std::size_t id = 0; id < p.rank(); ++id)
    for (const Occurrence& o : p.occurrences(id))
      if (O.count(o.comp)) dead[id] = true;
  Nanophrase filtered = drop_letters(p, dead);
  if (mode == ProjectionMode::KeepComponents) return filtered;
  std::vector<std::vector<LetterId>> comps;
  for (std::size_t c = 0; c < filtered.nc(); ++c)
    if (!O.count(c)) comps.push_back(filtered.component(c));
  return Nanophrase::make(filtered.letters(), std::move(comps));
}

Nanomultiphrase project_out(const Nanomultiphrase& m, const std::set<std::size_t>& O,
                            ProjectionMode mode) {
  Nanophrase q = project_out(m.underlying(), O, mode);
  if (mode == ProjectionMode::KeepComponents)
    return Nanomultiphrase::make(std::move(q), m.phrase_sizes());
  std::vector<std::size_t> sizes = m.phrase_sizes();
  for (std::size_t c : O) --sizes[m.phrase_of(c)];
  return Nanomultiphrase::make(std::move(q), std::move(sizes));
}

std::vector<int> component_parities(const Nanophrase& p) {
  std::vector<int> out;
  out.reserve(p.nc());
  for (const auto& word : p.components()) out.push_back(static_cast<int>(word.size() % 2));
  return out;
}

}  // namespace nanophrase
