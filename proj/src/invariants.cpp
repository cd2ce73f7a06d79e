// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nanophrase/invariants.hpp"

#include <algorithm>

#include "nanophrase/errors.hpp"
#include "nanophrase/phrase.hpp"

namespace nanophrase {

namespace {

// Per-letter symbol indices resolved against the triple once.
std::vector<std::size_t> resolve_symbols(const Nanophrase& p, const HomotopyDataTriple& t) {
  std::vector<std::size_t> out;
  out.reserve(p.rank());
  for (const Letter& l : p.letters()) out.push_back(t.index_of(l.symbol));
  return out;
}

int mod2(long v) { return static_cast<int>(((v % 2) + 2) % 2); }

}  // namespace

bool LinkingMatrix::trivial() const {
  for (const PiElement& e : cells)
    if (!e.is_identity()) return false;
  return true;
}

LinkingMatrix linking_matrix(const Nanophrase& p, const HomotopyDataTriple& t) {
  validate_projections(p, t);
  std::vector<std::size_t> sym = resolve_symbols(p, t);
  LinkingMatrix m;
  m.n = p.nc();
  m.cells.assign(m.n * m.n, pi_identity(t));
  for (LetterId id = 0; id < p.rank(); ++id) {
    const auto& occ = p.occurrences(id);
    std::size_t i = occ[0].comp, j = occ[1].comp;
    if (i == j) continue;
    PiElement g = pi_generator(t, sym[id]);
    m.cells[i * m.n + j] = pi_mul(t, m.cells[i * m.n + j], g);
    m.cells[j * m.n + i] = pi_mul(t, m.cells[j * m.n + i], g);
  }
  return m;
}

std::string render_linking(const LinkingMatrix& m, const HomotopyDataTriple& t) {
  std::string out;
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) {
      if (j > 0) out += " ";
      out += pi_render(t, m.at(i, j));
    }
    out += "\n";
  }
  return out;
}

bool linking_row_nontrivial(const LinkingMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.n; ++j)
    if (!m.at(i, j).is_identity()) return true;
  return false;
}

std::string k2_render(const K2Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

K2Vector v_linking_vector(const Nanophrase& p, LetterId id) {
  const auto& occ = p.occurrences(id);
  if (occ[0].comp != occ[1].comp)
    throw IndexOutOfRangeError("letter does not lie in a single component");
  std::size_t comp = occ[0].comp;
  K2Vector v(p.nc(), 0);
  const auto& word = p.component(comp);
  for (std::size_t o = occ[0].off + 1; o < occ[1].off; ++o) {
    LetterId b = word[o];
    if (b == id) continue;
    const auto& bo = p.occurrences(b);
    // Counted only when exactly one occurrence of b lies strictly between.
    auto inside = [&](const Occurrence& x) {
      return x.comp == comp && x.off > occ[0].off && x.off < occ[1].off;
    };
    if (inside(bo[0]) && inside(bo[1])) continue;
    const Occurrence& mate = inside(bo[0]) ? bo[1] : bo[0];
    v[mate.comp] ^= 1;
  }
  return v;
}

VMap v_invariant(const Nanophrase& p, const HomotopyDataTriple& t) {
  validate_projections(p, t);
  std::vector<std::size_t> sym = resolve_symbols(p, t);

  // d_{i,a} counts letters of A_{ii} with projection a by linking vector.
  std::map<std::pair<std::size_t, std::size_t>, std::map<K2Vector, int>> d;
  for (LetterId id = 0; id < p.rank(); ++id) {
    const auto& occ = p.occurrences(id);
    if (occ[0].comp != occ[1].comp) continue;
    K2Vector v = v_linking_vector(p, id);
    if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) continue;
    d[{occ[0].comp, sym[id]}][v] += 1;
  }

  VMap out;
  out.n = p.nc();
  for (const auto& [key, values] : d) {
    auto [comp, a] = key;
    std::size_t orbit = t.orbit_of(a);
    std::size_t rep = t.orbit_rep(orbit);
    for (const auto& [vec, count] : values) {
      int val;
      if (!t.orbit_free(orbit)) {
        val = mod2(count);
      } else {
        int other = 0;
        auto it = d.find({comp, t.tau(a)});
        if (it != d.end()) {
          auto jt = it->second.find(vec);
          if (jt != it->second.end()) other = jt->second;
        }
        val = a == rep ? count - other : other - count;
      }
      if (val != 0) out.entries[{comp, orbit}][vec] = val;
    }
  }
  // Duplicate contributions (a and tau(a) both seen) resolve to one entry.
  return out;
}

int VMap::value(std::size_t comp, std::size_t symbol, const K2Vector& v,
                const HomotopyDataTriple& t) const {
  std::size_t orbit = t.orbit_of(symbol);
  auto it = entries.find({comp, orbit});
  if (it == entries.end()) return 0;
  auto jt = it->second.find(v);
  if (jt == it->second.end()) return 0;
  bool rep = t.orbit_rep(orbit) == symbol;
  return rep || !t.orbit_free(orbit) ? jt->second : -jt->second;
}

bool VMap::component_trivial(std::size_t comp) const {
  for (const auto& [key, values] : entries)
    if (key.first == comp && !values.empty()) return false;
  return true;
}

std::string render_v(const VMap& v, const HomotopyDataTriple& t) {
  std::string out;
  for (const auto& [key, values] : v.entries) {
    for (const auto& [vec, val] : values) {
      out += "V^{" + std::to_string(key.first + 1) + "," +
             t.symbol(t.orbit_rep(key.second)) + "}" + k2_render(vec) + " = " +
             std::to_string(val) + "\n";
    }
  }
  return out.empty() ? "0\n" : out;
}

namespace {

// Interleaving sign of two letters given their ordered occurrence positions.
int interleave_sign(std::size_t a1, std::size_t a2, std::size_t b1, std::size_t b2) {
  if (a1 < b1 && b1 < a2 && a2 < b2) return 1;   // A B A B
  if (b1 < a1 && a1 < b2 && b2 < a2) return -1;  // B A B A
  return 0;
}

}  // namespace

PiVector u_linking_vector(const Nanophrase& p, const HomotopyDataTriple& t, LetterId id) {
  std::vector<std::size_t> sym = resolve_symbols(p, t);
  const auto& occ = p.occurrences(id);
  if (occ[0].comp != occ[1].comp)
    throw IndexOutOfRangeError("letter does not lie in a single component");
  std::size_t comp = occ[0].comp;
  PiVector v(p.nc(), pi_identity(t));

  for (LetterId b = 0; b < p.rank(); ++b) {
    if (b == id) continue;
    const auto& bo = p.occurrences(b);
    if (bo[0].comp == comp && bo[1].comp == comp) {
      int s = interleave_sign(occ[0].off, occ[1].off, bo[0].off, bo[1].off);
      if (s != 0)
        v[comp] = pi_mul(t, v[comp], pi_pow(t, pi_generator(t, sym[b]), s));
    } else if (bo[0].comp == comp || bo[1].comp == comp) {
      const Occurrence& here = bo[0].comp == comp ? bo[0] : bo[1];
      const Occurrence& there = bo[0].comp == comp ? bo[1] : bo[0];
      if (here.off > occ[0].off && here.off < occ[1].off)
        v[there.comp] = pi_mul(t, v[there.comp], pi_generator(t, sym[b]));
    }
  }
  return v;
}

UMap u_invariant(const Nanophrase& p, const HomotopyDataTriple& t) {
  if (!t.s_diagonal()) throw SNotDiagonalError("U invariant requires diagonal S");
  validate_projections(p, t);
  std::vector<std::size_t> sym = resolve_symbols(p, t);

  std::map<std::pair<std::size_t, std::size_t>, std::map<PiVector, int>> e;
  for (LetterId id = 0; id < p.rank(); ++id) {
    const auto& occ = p.occurrences(id);
    if (occ[0].comp != occ[1].comp) continue;
    PiVector v = u_linking_vector(p, t, id);
    if (std::all_of(v.begin(), v.end(), [](const PiElement& g) { return g.is_identity(); }))
      continue;
    e[{occ[0].comp, sym[id]}][v] += 1;
  }

  UMap out;
  out.n = p.nc();
  for (const auto& [key, values] : e) {
    auto [comp, a] = key;
    std::size_t orbit = t.orbit_of(a);
    std::size_t rep = t.orbit_rep(orbit);
    for (const auto& [vec, count] : values) {
      int val;
      if (!t.orbit_free(orbit)) {
        val = mod2(count);
      } else {
        int other = 0;
        auto it = e.find({comp, t.tau(a)});
        if (it != e.end()) {
          auto jt = it->second.find(vec);
          if (jt != it->second.end()) other = jt->second;
        }
        val = a == rep ? count - other : other - count;
      }
      if (val != 0) out.entries[{comp, orbit}][vec] = val;
    }
  }
  return out;
}

int UMap::value(std::size_t comp, std::size_t symbol, const PiVector& v,
                const HomotopyDataTriple& t) const {
  std::size_t orbit = t.orbit_of(symbol);
  auto it = entries.find({comp, orbit});
  if (it == entries.end()) return 0;
  auto jt = it->second.find(v);
  if (jt == it->second.end()) return 0;
  bool rep = t.orbit_rep(orbit) == symbol;
  return rep || !t.orbit_free(orbit) ? jt->second : -jt->second;
}

bool UMap::component_trivial(std::size_t comp) const {
  for (const auto& [key, values] : entries)
    if (key.first == comp && !values.empty()) return false;
  return true;
}

std::string render_u(const UMap& u, const HomotopyDataTriple& t) {
  std::string out;
  for (const auto& [key, values] : u.entries) {
    for (const auto& [vec, val] : values) {
      out += "U^{" + std::to_string(key.first + 1) + "," +
             t.symbol(t.orbit_rep(key.second)) + "}" + pi_vector_render(t, vec) + " = " +
             std::to_string(val) + "\n";
    }
  }
  return out.empty() ? "0\n" : out;
}

VMap u_to_v(const UMap& u, const HomotopyDataTriple& t) {
  VMap out;
  out.n = u.n;
  for (const auto& [key, values] : u.entries) {
    bool fixed = !t.orbit_free(key.second);
    for (const auto& [vec, val] : values) {
      K2Vector img(vec.size());
      for (std::size_t i = 0; i < vec.size(); ++i) img[i] = pi_x_project(t, vec[i]);
      if (std::all_of(img.begin(), img.end(), [](int x) { return x == 0; })) continue;
      int& cell = out.entries[{key.first, key.second}][img];
      cell = fixed ? mod2(cell + val) : cell + val;
    }
  }
  for (auto it = out.entries.begin(); it != out.entries.end();) {
    for (auto jt = it->second.begin(); jt != it->second.end();)
      jt = jt->second == 0 ? it->second.erase(jt) : std::next(jt);
    it = it->second.empty() ? out.entries.erase(it) : std::next(it);
  }
  return out;
}

long u_delta(const UMap& u, const HomotopyDataTriple& t, std::size_t comp,
             std::size_t orbit_a, std::size_t orbit_b) {
  long sum = 0;
  auto it = u.entries.find({comp, orbit_b});
  if (it != u.entries.end()) {
    for (const auto& [vec, val] : it->second) {
      const PiElement& g = vec[comp];
      if (g.is_identity()) continue;
      sum += static_cast<long>(val) * pi_exponent(g, orbit_a);
    }
  }
  if (!t.orbit_free(orbit_a) || !t.orbit_free(orbit_b)) sum = mod2(sum);
  return sum;
}

bool u_realizability_check(const UMap& u, const HomotopyDataTriple& t) {
  for (std::size_t comp = 0; comp < u.n; ++comp) {
    for (std::size_t a = 0; a < t.orbit_count(); ++a) {
      for (std::size_t b = a; b < t.orbit_count(); ++b) {
        long lhs = u_delta(u, t, comp, a, b) + u_delta(u, t, comp, b, a);
        if (!t.orbit_free(a) || !t.orbit_free(b)) lhs = mod2(lhs);
        if (a == b) lhs = u_delta(u, t, comp, a, a);
        if (lhs != 0) return false;
      }
    }
  }
  return true;
}

namespace {

// Fukunaga's orbit order: free orbits first, then fixed, each in declaration
// order.  fuku[orbit] = slot, inv[slot] = orbit.
struct FukuOrder {
  std::vector<std::size_t> slot_of_orbit;
  std::vector<std::size_t> orbit_of_slot;
  std::size_t l = 0;  // free orbit count
  std::size_t m = 0;  // fixed orbit count
};

FukuOrder fuku_order(const HomotopyDataTriple& t) {
  FukuOrder f;
  f.slot_of_orbit.assign(t.orbit_count(), 0);
  for (std::size_t o = 0; o < t.orbit_count(); ++o)
    if (t.orbit_free(o)) {
      f.slot_of_orbit[o] = f.orbit_of_slot.size();
      f.orbit_of_slot.push_back(o);
    }
  f.l = f.orbit_of_slot.size();
  for (std::size_t o = 0; o < t.orbit_count(); ++o)
    if (!t.orbit_free(o)) {
      f.slot_of_orbit[o] = f.orbit_of_slot.size();
      f.orbit_of_slot.push_back(o);
    }
  f.m = f.orbit_of_slot.size() - f.l;
  return f;
}

// Flat index of (component j, row s, column t) in K^n.
std::size_t kvec_index(std::size_t j, std::size_t s, std::size_t tt, std::size_t dim) {
  return (j * dim + s) * dim + tt;
}

// A cell is mod-2 exactly when the column orbit is fixed: those generators
// square to the identity in pi, so only their parity exists.  Free-column
// cells stay integral even on fixed rows; reducing them would collapse
// distinct l_u supports and break the U <-> S_o translation.
bool kst_is_z2(std::size_t /*s*/, std::size_t tt, std::size_t l) { return tt >= l; }

// Type (i): all nonzero rows s < l.  Type (ii): all nonzero rows s >= l.
enum class KType { TypeI, TypeII, TypeIII };

KType kvec_type(const std::vector<int>& v, std::size_t n, std::size_t dim, std::size_t l) {
  bool low = false, high = false;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t s = 0; s < dim; ++s)
      for (std::size_t tt = 0; tt < dim; ++tt)
        if (v[kvec_index(j, s, tt, dim)] != 0) (s < l ? low : high) = true;
  if (low && high) return KType::TypeIII;
  return high ? KType::TypeII : KType::TypeI;
}

}  // namespace

SoMap fukunaga_so(const Nanophrase& p, const HomotopyDataTriple& t) {
  if (!t.s_diagonal()) throw SNotDiagonalError("S_o invariant requires diagonal S");
  validate_projections(p, t);
  std::vector<std::size_t> sym = resolve_symbols(p, t);
  FukuOrder f = fuku_order(t);
  std::size_t dim = f.l + f.m;
  std::size_t n = p.nc();

  // Global position (for whole-phrase interleaving) of every occurrence.
  std::vector<std::array<std::size_t, 2>> gpos(p.rank());
  {
    std::vector<std::size_t> count(p.rank(), 0);
    std::size_t g = 0;
    for (const auto& word : p.components())
      for (LetterId id : word) gpos[id][count[id]++] = g++;
  }

  auto epsilon = [&](LetterId a) {
    std::size_t orbit = t.orbit_of(sym[a]);
    return t.orbit_rep(orbit) == sym[a] ? 1 : -1;
  };

  SoMap out;
  out.n = n;
  out.free_orbits = f.l;
  out.fixed_orbits = f.m;

  std::map<std::size_t, std::map<std::vector<int>, int>> eta;
  for (LetterId a = 0; a < p.rank(); ++a) {
    const auto& ao = p.occurrences(a);
    if (ao[0].comp != ao[1].comp) continue;
    std::size_t comp = ao[0].comp;
    std::size_t s_row = f.slot_of_orbit[t.orbit_of(sym[a])];

    std::vector<int> lvec(n * dim * dim, 0);
    for (LetterId b = 0; b < p.rank(); ++b) {
      if (b == a) continue;
      int nab = interleave_sign(gpos[a][0], gpos[a][1], gpos[b][0], gpos[b][1]);
      if (nab == 0) continue;
      std::size_t orbit_b = t.orbit_of(sym[b]);
      std::size_t t_col = f.slot_of_orbit[orbit_b];
      bool b_is_rep = t.orbit_rep(orbit_b) == sym[b];
      const auto& bo = p.occurrences(b);
      // Five-case sigma table; the two occurrences of b pick the component.
      std::size_t j;
      int contrib;
      if (nab == 1) {
        j = bo[1].comp;  // I_2(B)
        contrib = b_is_rep ? 1 : -1;
      } else {
        j = bo[0].comp;  // I_1(B)
        contrib = b_is_rep ? -1 : 1;
      }
      std::size_t idx = kvec_index(j, s_row, t_col, dim);
      lvec[idx] += contrib;
      if (kst_is_z2(s_row, t_col, f.l)) lvec[idx] = mod2(lvec[idx]);
    }
    if (std::all_of(lvec.begin(), lvec.end(), [](int x) { return x == 0; })) continue;
    eta[comp][lvec] += epsilon(a);
  }

  for (const auto& [comp, values] : eta) {
    for (const auto& [vec, sum] : values) {
      int val;
      switch (kvec_type(vec, n, dim, f.l)) {
        case KType::TypeI:
          val = sum;
          break;
        case KType::TypeII:
          val = mod2(sum);
          break;
        case KType::TypeIII:
          val = 0;
          break;
      }
      if (val != 0) out.b[comp][vec] = val;
    }
  }
  return out;
}

std::string render_so(const SoMap& so, const HomotopyDataTriple& t) {
  std::size_t dim = so.free_orbits + so.fixed_orbits;
  FukuOrder f = fuku_order(t);
  std::string out;
  for (const auto& [comp, values] : so.b) {
    for (const auto& [vec, val] : values) {
      out += "B_" + std::to_string(comp + 1) + "(";
      bool first = true;
      for (std::size_t j = 0; j < so.n; ++j)
        for (std::size_t s = 0; s < dim; ++s)
          for (std::size_t tt = 0; tt < dim; ++tt) {
            int c = vec[kvec_index(j, s, tt, dim)];
            if (c == 0) continue;
            if (!first) out += " ";
            first = false;
            out += std::to_string(c) + "*r[" + std::to_string(j + 1) + ";" +
                   t.symbol(t.orbit_rep(f.orbit_of_slot[s])) + "," +
                   t.symbol(t.orbit_rep(f.orbit_of_slot[tt])) + "]";
          }
      out += ") = " + std::to_string(val) + "\n";
    }
  }
  return out.empty() ? "0\n" : out;
}

std::vector<int> so_h_map(const HomotopyDataTriple& t, std::size_t orbit_a, std::size_t comp,
                          const PiVector& v) {
  FukuOrder f = fuku_order(t);
  std::size_t dim = f.l + f.m;
  std::size_t n = v.size();
  std::size_t s_row = f.slot_of_orbit[orbit_a];
  std::vector<int> out(n * dim * dim, 0);
  for (std::size_t j = 0; j < n; ++j) {
    int sign = j >= comp ? 1 : -1;
    for (std::size_t tt = 0; tt < dim; ++tt) {
      int e = pi_exponent(v[j], f.orbit_of_slot[tt]);
      int cell = sign * e;
      if (kst_is_z2(s_row, tt, f.l)) cell = mod2(cell);
      out[kvec_index(j, s_row, tt, dim)] = cell;
    }
  }
  return out;
}

PiVector so_kappa_map(const HomotopyDataTriple& t, std::size_t comp, const std::vector<int>& v,
                      std::size_t* orbit_out) {
  FukuOrder f = fuku_order(t);
  std::size_t dim = f.l + f.m;
  if (dim == 0 || v.size() % (dim * dim) != 0)
    throw MalformedSupportError("vector length does not match the K lattice");
  std::size_t n = v.size() / (dim * dim);

  std::size_t row = SIZE_MAX;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t s = 0; s < dim; ++s)
      for (std::size_t tt = 0; tt < dim; ++tt)
        if (v[kvec_index(j, s, tt, dim)] != 0) {
          if (row != SIZE_MAX && row != s)
            throw MalformedSupportError("support vector spans multiple orbit rows");
          row = s;
        }
  if (row == SIZE_MAX) throw MalformedSupportError("zero vector has no orbit row");
  if (orbit_out) *orbit_out = f.orbit_of_slot[row];

  PiVector out(n, pi_identity(t));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::pair<std::size_t, int>> word;
    for (std::size_t tt = 0; tt < dim; ++tt) {
      int e = v[kvec_index(j, row, tt, dim)];
      if (e == 0) continue;
      std::size_t rep = t.orbit_rep(f.orbit_of_slot[tt]);
      word.emplace_back(rep, j >= comp ? e : -e);
    }
    out[j] = pi_from_word(t, word);
  }
  return out;
}

UMap so_to_u(const SoMap& so, const HomotopyDataTriple& t) {
  UMap out;
  out.n = so.n;
  for (const auto& [comp, values] : so.b) {
    for (const auto& [vec, val] : values) {
      std::size_t orbit;
      PiVector u = so_kappa_map(t, comp, vec, &orbit);
      out.entries[{comp, orbit}][u] = val;
    }
  }
  return out;
}

SoMap u_to_so(const UMap& u, const HomotopyDataTriple& t) {
  FukuOrder f = fuku_order(t);
  SoMap out;
  out.n = u.n;
  out.free_orbits = f.l;
  out.fixed_orbits = f.m;
  for (const auto& [key, values] : u.entries) {
    auto [comp, orbit] = key;
    for (const auto& [vec, val] : values)
      out.b[comp][so_h_map(t, orbit, comp, vec)] = val;
  }
  return out;
}

std::string invariant_fingerprint(const Nanophrase& p, const HomotopyDataTriple& t) {
  std::string out = "parities:";
  for (int b : component_parities(p)) out += std::to_string(b);
  out += "\nlinking:\n" + render_linking(linking_matrix(p, t), t);
  out += "V:\n" + render_v(v_invariant(p, t), t);
  if (t.s_diagonal()) out += "U:\n" + render_u(u_invariant(p, t), t);
  return out;
}

}  // namespace nanophrase
