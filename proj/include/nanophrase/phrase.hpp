// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nanophrase {

using LetterId = std::size_t;

/// A letter of the phrase alphabet together with its projection into alpha.
struct Letter {
  std::string name;
  std::string symbol;
  auto operator<=>(const Letter&) const = default;
};

/// Position of one occurrence of a letter.
struct Occurrence {
  std::size_t comp = 0;
  std::size_t off = 0;
  auto operator<=>(const Occurrence&) const = default;
};

/// A nanophrase: an ordered list of words over a projected alphabet in which
/// every letter occurs exactly twice (the Gauss condition).  The 0-component
/// phrase and phrases with empty components are distinct values.
class Nanophrase {
 public:
  Nanophrase() = default;

  /// Validates the Gauss condition and builds the occurrence index.
  /// Throws NonGaussError / SyntaxError on malformed input.
  static Nanophrase make(std::vector<Letter> letters,
                         std::vector<std::vector<LetterId>> components);

  const std::vector<Letter>& letters() const { return letters_; }
  const std::vector<std::vector<LetterId>>& components() const { return components_; }
  const std::vector<LetterId>& component(std::size_t i) const { return components_[i]; }

  std::size_t nc() const { return components_.size(); }
  std::size_t rank() const { return letters_.size(); }
  bool is_empty_phrase() const { return components_.empty(); }

  /// Both occurrences of a letter, in phrase order.
  const std::array<Occurrence, 2>& occurrences(LetterId id) const { return occ_[id]; }
  LetterId letter_at(Occurrence o) const { return components_[o.comp][o.off]; }
  const std::string& symbol_of(LetterId id) const { return letters_[id].symbol; }

  bool operator==(const Nanophrase& other) const {
    return letters_ == other.letters_ && components_ == other.components_;
  }

 private:
  std::vector<Letter> letters_;
  std::vector<std::vector<LetterId>> components_;
  std::vector<std::array<Occurrence, 2>> occ_;
};

/// A sequence of phrases sharing one letter namespace; the boundaries are part
/// of the value (A||B differs from A|_|B).  Phrases may have zero components.
class Nanomultiphrase {
 public:
  Nanomultiphrase() = default;
  static Nanomultiphrase make(Nanophrase underlying, std::vector<std::size_t> phrase_sizes);

  const Nanophrase& underlying() const { return phrase_; }
  const std::vector<std::size_t>& phrase_sizes() const { return sizes_; }
  std::size_t n_phrases() const { return sizes_.size(); }
  std::size_t nc() const { return phrase_.nc(); }

  /// Phrase index containing global component i.
  std::size_t phrase_of(std::size_t comp) const;
  /// First global component index of phrase f.
  std::size_t phrase_begin(std::size_t f) const;

  bool operator==(const Nanomultiphrase& other) const {
    return phrase_ == other.phrase_ && sizes_ == other.sizes_;
  }

 private:
  Nanophrase phrase_;
  std::vector<std::size_t> sizes_;
};

enum class TokenMode { Compact, Tokens };

using ParsedPhrase = std::variant<Nanophrase, Nanomultiphrase>;

/// Parses `decls ';' body`.  Bodies containing `||` produce a Nanomultiphrase.
ParsedPhrase parse_phrase(std::string_view text, TokenMode mode = TokenMode::Compact);
Nanophrase parse_nanophrase(std::string_view text, TokenMode mode = TokenMode::Compact);
Nanomultiphrase parse_multiphrase(std::string_view text, TokenMode mode = TokenMode::Compact);

/// Renders in compact mode when every letter name is a single uppercase ASCII
/// character, token mode otherwise.  Round-trips through parse_phrase.
std::string render_phrase(const Nanophrase& p);
std::string render_phrase(const Nanophrase& p, TokenMode mode);
std::string render_multiphrase(const Nanomultiphrase& m);
std::string render_multiphrase(const Nanomultiphrase& m, TokenMode mode);

/// Body only, without the projection declarations.
std::string render_body(const Nanophrase& p, TokenMode mode);

/// Letters renamed X1, X2, ... in order of first occurrence.  Two phrases have
/// equal canonical forms iff they are isomorphic over the same alpha.
Nanophrase canonicalize(const Nanophrase& p);
Nanomultiphrase canonicalize(const Nanomultiphrase& m);

/// Token-mode render of the canonical form; usable as a hash/visited-set key.
std::string canonical_key(const Nanophrase& p);
std::string canonical_key(const Nanomultiphrase& m);

/// The concatenating map: all components joined into a single-component
/// phrase (a nanoword).  chi of the 0-component phrase is the empty word.
Nanophrase chi(const Nanophrase& p);
/// Phrase-level concatenation: one component per phrase of m.
Nanophrase chi(const Nanomultiphrase& m);

enum class ProjectionMode { KeepComponents, DropComponents };

/// KeepComponents deletes every letter that occurs in a component indexed by
/// O (both occurrences go); DropComponents additionally removes the emptied
/// components.  Indices are 0-based.
Nanophrase project_out(const Nanophrase& p, const std::set<std::size_t>& O, ProjectionMode mode);
Nanomultiphrase project_out(const Nanomultiphrase& m, const std::set<std::size_t>& O,
                            ProjectionMode mode);

/// Number of letters in each component, mod 2.
std::vector<int> component_parities(const Nanophrase& p);

/// X1, X2, ... name for 0-based index i.
std::string canonical_letter_name(std::size_t i);

/// A name of the form Z1, Z2, ... not used by any letter of p.
std::string fresh_letter_name(const Nanophrase& p);

}  // namespace nanophrase
