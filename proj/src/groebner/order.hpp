#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polycore/monomial.hpp"

namespace logvec {

enum class OrderKind { grevlex, lex, elimination };

/// Monomial order on a polynomial ring. The elimination order compares the
/// first `eliminated` variables by grevlex before looking at the rest.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::size_t eliminated = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder elimination(std::size_t block) { return {OrderKind::elimination, block}; }

  bool is_graded() const { return kind == OrderKind::grevlex; }

  int cmp(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case OrderKind::grevlex:
        return grevlex_cmp(a, b);
      case OrderKind::lex:
        return lex_cmp(a, b);
      case OrderKind::elimination: {
        Monomial ha, hb, ta, tb;
        split(a, ha, ta);
        split(b, hb, tb);
        int c = grevlex_cmp(ha, hb);
        return c != 0 ? c : grevlex_cmp(ta, tb);
      }
    }
    return 0;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && a.eliminated == b.eliminated;
  }

private:
  void split(const Monomial& m, Monomial& head, Monomial& tail) const {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (i < eliminated) {
        head.exp[i] = m.exp[i];
        head.deg += m.exp[i];
      } else {
        tail.exp[i] = m.exp[i];
        tail.deg += m.exp[i];
      }
    }
  }
};

enum class ModuleOrderKind { term_over_position, position_over_term };

/// Order on monomials m*e_i of a graded free module with basis degrees
/// `shifts`. Components below `upper_block` dominate every component at or
/// above it, which turns the order into an elimination order for the
/// leading block (used to read off syzygies). Lower component index wins
/// ties and ranks first under position-over-term.
struct ModuleOrder {
  MonomialOrder base;
  ModuleOrderKind kind = ModuleOrderKind::term_over_position;
  std::vector<int> shifts;
  std::size_t upper_block = 0;

  static ModuleOrder ideal(MonomialOrder base = {}) { return {base, ModuleOrderKind::term_over_position, {0}, 0}; }

  std::size_t rank() const { return shifts.size(); }

  int shifted_degree(const Monomial& m, std::uint32_t comp) const {
    return static_cast<int>(m.deg) + shifts[comp];
  }

  int cmp(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    if (upper_block != 0) {
      bool ua = ca < upper_block, ub = cb < upper_block;
      if (ua != ub) return ua ? 1 : -1;
    }
    if (kind == ModuleOrderKind::position_over_term && ca != cb) return ca < cb ? 1 : -1;
    if (base.is_graded()) {
      int da = shifted_degree(a, ca), db = shifted_degree(b, cb);
      if (da != db) return da > db ? 1 : -1;
    }
    int c = base.cmp(a, b);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
};

}  // namespace logvec
