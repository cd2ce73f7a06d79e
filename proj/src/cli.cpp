// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nanophrase/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "nanophrase/decompose.hpp"
#include "nanophrase/errors.hpp"
#include "nanophrase/invariants.hpp"

namespace nanophrase {

namespace {

// ---- census enumeration ----------------------------------------------------

void enumerate_matchings(std::size_t points, std::vector<std::size_t>& partner,
                         std::vector<std::vector<std::size_t>>& out) {
  std::size_t first = SIZE_MAX;
  for (std::size_t i = 0; i < points; ++i)
    if (partner[i] == SIZE_MAX) {
      first = i;
      break;
    }
  if (first == SIZE_MAX) {
    out.push_back(partner);
    return;
  }
  for (std::size_t j = first + 1; j < points; ++j) {
    if (partner[j] != SIZE_MAX) continue;
    partner[first] = j;
    partner[j] = first;
    enumerate_matchings(points, partner, out);
    partner[first] = SIZE_MAX;
    partner[j] = SIZE_MAX;
  }
}

void enumerate_compositions(std::size_t total, std::size_t parts,
                            std::vector<std::size_t>& acc,
                            std::vector<std::vector<std::size_t>>& out) {
  if (parts == 1) {
    acc.push_back(total);
    out.push_back(acc);
    acc.pop_back();
    return;
  }
  for (std::size_t head = 0; head <= total; ++head) {
    acc.push_back(head);
    enumerate_compositions(total - head, parts - 1, acc, out);
    acc.pop_back();
  }
}

Nanophrase build_census_phrase(const std::vector<std::size_t>& partner,
                               const std::vector<std::size_t>& comp_sizes,
                               const std::vector<std::size_t>& projection,
                               const HomotopyDataTriple& t) {
  std::size_t points = partner.size();
  std::vector<std::size_t> letter_of(points, SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t i = 0; i < points; ++i) {
    if (letter_of[i] != SIZE_MAX) continue;
    letter_of[i] = next;
    letter_of[partner[i]] = next;
    ++next;
  }
  std::vector<Letter> letters;
  for (std::size_t k = 0; k < next; ++k)
    letters.push_back(Letter{canonical_letter_name(k), t.symbol(projection[k])});
  std::vector<std::vector<LetterId>> comps;
  std::size_t pos = 0;
  for (std::size_t size : comp_sizes) {
    std::vector<LetterId> word;
    for (std::size_t i = 0; i < size; ++i) word.push_back(letter_of[pos++]);
    comps.push_back(std::move(word));
  }
  return Nanophrase::make(std::move(letters), std::move(comps));
}

}  // namespace

std::vector<CensusBucket> tabulate(const HomotopyDataTriple& t, std::size_t max_rank,
                                   std::size_t components, const SearchBudget& budget,
                                   bool force) {
  if (t.empty_alpha()) throw EmptyAlphaError("census needs a non-empty alpha");
  if (components == 0) throw IndexOutOfRangeError("component count must be positive");
  if (max_rank > 5 && !force)
    throw BudgetRefusedError("max rank " + std::to_string(max_rank) +
                             " needs --force (guard is 5)");

  struct Entry {
    Nanophrase phrase;
    std::string key;
  };
  std::map<std::string, std::vector<Entry>> buckets;

  for (std::size_t r = 0; r <= max_rank; ++r) {
    std::vector<std::vector<std::size_t>> matchings;
    std::vector<std::size_t> partner(2 * r, SIZE_MAX);
    enumerate_matchings(2 * r, partner, matchings);
    std::vector<std::vector<std::size_t>> comp_sizes;
    std::vector<std::size_t> acc;
    enumerate_compositions(2 * r, components, acc, comp_sizes);
    for (const auto& sizes : comp_sizes) {
      for (const auto& match : matchings) {
        std::vector<std::size_t> projection(r, 0);
        for (;;) {
          Nanophrase p = build_census_phrase(match, sizes, projection, t);
          buckets[invariant_fingerprint(p, t)].push_back(
              Entry{p, render_phrase(canonicalize(p), TokenMode::Tokens)});
          // next projection assignment, mixed radix over alpha
          std::size_t d = 0;
          while (d < r && ++projection[d] == t.size()) projection[d++] = 0;
          if (d == r || r == 0) break;
        }
      }
    }
  }

  std::vector<CensusBucket> out;
  for (auto& [fingerprint, entries] : buckets) {
    CensusBucket bucket;
    bucket.fingerprint = fingerprint;

    // Phase 1: union through the downhill closure (reducing and H3 moves
    // only).  Rank never grows, so the per-phrase graph is small, and every
    // union is certified by an explicit move path.
    std::vector<std::size_t> cls(entries.size());
    std::iota(cls.begin(), cls.end(), std::size_t{0});
    auto root = [&](std::size_t x) {
      while (cls[x] != x) x = cls[x] = cls[cls[x]];
      return x;
    };
    std::map<std::string, std::size_t> seen_by;  // canonical key -> entry
    long closure_cap = std::min<long>(budget.node_budget, 20000);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      std::vector<Nanophrase> frontier{canonicalize(entries[i].phrase)};
      std::set<std::string> visited{entries[i].key};
      long nodes = 1;
      auto note = [&](const std::string& key) {
        auto [it, fresh] = seen_by.emplace(key, i);
        if (!fresh) cls[root(i)] = root(it->second);
      };
      note(entries[i].key);
      while (!frontier.empty() && nodes < closure_cap) {
        std::vector<Nanophrase> next;
        for (const Nanophrase& cur : frontier) {
          for (const MoveSite& site : enumerate_moves(cur, t, false)) {
            Nanophrase child = canonicalize(apply_move(cur, site).result);
            std::string ck = render_phrase(child, TokenMode::Tokens);
            if (!visited.insert(ck).second) continue;
            note(ck);
            next.push_back(std::move(child));
            if (++nodes >= closure_cap) break;
          }
          if (nodes >= closure_cap) break;
        }
        frontier = std::move(next);
      }
    }

    // Phase 2: budgeted bidirectional search between surviving class reps.
    std::vector<std::size_t> reps;  // entry index of each class rep
    std::map<std::size_t, std::size_t> class_of_root;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      std::size_t r = root(i);
      if (class_of_root.count(r)) continue;
      bool placed = false;
      for (std::size_t c = 0; c < reps.size() && !placed; ++c) {
        if (bfs_equivalent(entries[r].phrase, entries[reps[c]].phrase, t, budget).yes()) {
          class_of_root[r] = class_of_root.at(root(reps[c]));
          placed = true;
        }
      }
      if (!placed) {
        class_of_root[r] = reps.size();
        reps.push_back(r);
      }
    }

    bucket.classes.resize(reps.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      CensusClass& c = bucket.classes[class_of_root.at(root(i))];
      c.members.push_back(entries[i].key);
      c.representative = c.representative.empty()
                             ? entries[i].key
                             : std::min(c.representative, entries[i].key);
    }
    out.push_back(std::move(bucket));
  }
  return out;
}

namespace {

// ---- CLI plumbing ----------------------------------------------------------

std::string read_input(const std::string& file_or_string) {
  std::error_code ec;
  if (std::filesystem::exists(file_or_string, ec)) {
    std::ifstream in(file_or_string);
    if (!in) throw Error("cannot read '" + file_or_string + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return file_or_string;
}

// First non-empty line: phrase files hold one phrase per line.
std::string first_phrase_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  return text;
}

struct CommandConfig {
  std::string triple_arg;
  std::vector<std::string> phrase_args;
  std::string which = "parities,linking,v,u,so";
  int rank_delta = 2;
  long node_budget = 200000;
  std::size_t max_rank = 3;
  std::size_t components = 1;
  bool force = false;
  bool tokens = false;
  std::string format = "human";

  TokenMode mode() const { return tokens ? TokenMode::Tokens : TokenMode::Compact; }
  SearchBudget budget() const {
    if (rank_delta < 0 || node_budget < 0) throw BudgetRefusedError("budgets must be >= 0");
    return SearchBudget{rank_delta, node_budget};
  }
  HomotopyDataTriple triple() const { return parse_triple(read_input(triple_arg)); }
  Nanophrase phrase(std::size_t i, const HomotopyDataTriple& t) const {
    Nanophrase p = parse_nanophrase(first_phrase_line(read_input(phrase_args.at(i))), mode());
    validate_projections(p, t);
    return p;
  }
};

int exit_code(const Decision& d) {
  switch (d.verdict) {
    case Verdict::Yes:
      return 0;
    case Verdict::No:
      return 1;
    case Verdict::Unknown:
      return 2;
  }
  return 3;
}

bool wants(const CommandConfig& cfg, const std::string& section) {
  std::stringstream ss(cfg.which);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (tok == section) return true;
  return false;
}

int cmd_factor(const CommandConfig& cfg, std::ostream& out) {
  HomotopyDataTriple t = cfg.triple();
  Factorization f = prime_factorize(t);
  if (cfg.format == "lines") {
    for (std::size_t i = 0; i < f.k(); ++i) {
      std::string names;
      for (const auto& a : f.factors[i].alpha()) names += (names.empty() ? "" : " ") + a;
      std::string cls = classify_diagonal_prime(f.factors[i]);
      out << "factor " << i + 1 << " alpha: " << names
          << (cls.empty() ? "" : " class: " + cls) << "\n";
    }
    return 0;
  }
  out << (f.k() == 1 ? "prime" : "composite") << ": " << f.k() << " prime factor"
      << (f.k() == 1 ? "" : "s") << "\n";
  for (std::size_t i = 0; i < f.k(); ++i) {
    out << "factor " << i + 1;
    std::string cls = classify_diagonal_prime(f.factors[i]);
    if (!cls.empty()) out << " (" << cls << ")";
    out << ":\n" << render_triple(f.factors[i]);
  }
  return 0;
}

int cmd_invariants(const CommandConfig& cfg, std::ostream& out) {
  HomotopyDataTriple t = cfg.triple();
  Nanophrase p = cfg.phrase(0, t);
  if (wants(cfg, "parities")) {
    out << "parities: (";
    auto par = component_parities(p);
    for (std::size_t i = 0; i < par.size(); ++i) out << (i ? "," : "") << par[i];
    out << ")\n";
  }
  if (wants(cfg, "linking")) out << "linking:\n" << render_linking(linking_matrix(p, t), t);
  if (wants(cfg, "v")) out << "V:\n" << render_v(v_invariant(p, t), t);
  if (t.s_diagonal()) {
    if (wants(cfg, "u")) out << "U:\n" << render_u(u_invariant(p, t), t);
    if (wants(cfg, "so")) out << "S_o:\n" << render_so(fukunaga_so(p, t), t);
  }
  return 0;
}

int cmd_decompose(const CommandConfig& cfg, std::ostream& out) {
  HomotopyDataTriple t = cfg.triple();
  Nanophrase p = cfg.phrase(0, t);
  out << render_decomposed(psi(p, prime_factorize(t), t));
  return 0;
}

int cmd_reduce(const CommandConfig& cfg, std::ostream& out) {
  HomotopyDataTriple t = cfg.triple();
  Nanophrase p = cfg.phrase(0, t);
  ReducedClass rc = reduce_fully(psi(p, prime_factorize(t), t), t, cfg.budget());
  if (cfg.format == "human")
    out << "representative:\n" << render_decomposed(rc.representative);
  out << render_reduced(rc);
  return 0;
}

int cmd_decide(const CommandConfig& cfg, std::ostream& out) {
  HomotopyDataTriple t = cfg.triple();
  Nanophrase p = cfg.phrase(0, t);
  Nanophrase q = cfg.phrase(1, t);
  Decision d = decide_equal(p, q, t, cfg.budget());
  if (cfg.format == "lines") {
    out << (d.yes() ? "yes" : d.no() ? "no" : "unknown") << "\n";
  } else {
    out << render_decision(d) << "\n";
  }
  return exit_code(d);
}

int cmd_tabulate(const CommandConfig& cfg, std::ostream& out) {
  HomotopyDataTriple t = cfg.triple();
  auto buckets = tabulate(t, cfg.max_rank, cfg.components, cfg.budget(), cfg.force);
  std::size_t bi = 0;
  for (const CensusBucket& b : buckets) {
    ++bi;
    if (cfg.format == "lines") {
      for (std::size_t c = 0; c < b.classes.size(); ++c)
        out << "bucket " << bi << " class " << c + 1 << " size "
            << b.classes[c].members.size() << " rep " << b.classes[c].representative << "\n";
      continue;
    }
    out << "bucket " << bi << " (" << b.classes.size() << " class"
        << (b.classes.size() == 1 ? "" : "es") << "):\n";
    for (const CensusClass& cls : b.classes) {
      out << "  " << cls.representative << "  [" << cls.members.size() << " phrase"
          << (cls.members.size() == 1 ? "" : "s") << "]\n";
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"nanophrase: factorization-based homotopy tools for nanowords and nanophrases",
               "nanophrase"};
  app.require_subcommand(1);

  CommandConfig cfg;
  auto add_common = [&](CLI::App* sub, bool phrases, std::size_t min_phrases) {
    sub->add_option("-t,--triple", cfg.triple_arg, "triple file or inline text")->required();
    if (phrases)
      sub->add_option("-p,--phrase", cfg.phrase_args, "phrase file or inline text")
          ->required()
          ->expected(static_cast<int>(min_phrases), -1);
    sub->add_option("--rank-delta", cfg.rank_delta, "extra rank allowed in searches");
    sub->add_option("--node-budget", cfg.node_budget, "max canonical forms visited");
    sub->add_flag("--tokens", cfg.tokens, "parse phrases in token mode");
    sub->add_option("--format", cfg.format, "human|lines")
        ->check(CLI::IsMember({"human", "lines"}));
  };

  CLI::App* factor = app.add_subcommand("factor", "prime factorization of a triple");
  add_common(factor, false, 0);
  CLI::App* invariants = app.add_subcommand("invariants", "invariant suite of a phrase");
  add_common(invariants, true, 1);
  invariants->add_option("--which", cfg.which, "comma list: parities,linking,v,u,so");
  CLI::App* decompose = app.add_subcommand("decompose", "decomposing map psi");
  add_common(decompose, true, 1);
  CLI::App* reduce = app.add_subcommand("reduce", "reduced class R_K with certification");
  add_common(reduce, true, 1);
  CLI::App* decide = app.add_subcommand("decide", "equality decision for two phrases");
  add_common(decide, true, 2);
  CLI::App* tab = app.add_subcommand("tabulate", "census of small canonical phrases");
  add_common(tab, false, 0);
  tab->add_option("--max-rank", cfg.max_rank, "enumerate ranks 0..N (guard 5)");
  tab->add_option("--components", cfg.components, "component count");
  tab->add_flag("--force", cfg.force, "lift the max-rank guard");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 3;
  }

  try {
    if (factor->parsed()) return cmd_factor(cfg, out);
    if (invariants->parsed()) return cmd_invariants(cfg, out);
    if (decompose->parsed()) return cmd_decompose(cfg, out);
    if (reduce->parsed()) return cmd_reduce(cfg, out);
    if (decide->parsed()) return cmd_decide(cfg, out);
    if (tab->parsed()) return cmd_tabulate(cfg, out);
    err << "no command\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace nanophrase
