#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "groebner/order.hpp"
#include "polycore/polynomial.hpp"

namespace logvec {

/// Raised when a Buchberger run exceeds its configured pair-queue bound.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct EngineLimits {
  /// Maximum number of queued critical pairs; 0 means unbounded.
  std::size_t max_pairs = 0;
};

/// Reads LOGVEC_MAX_PAIRS; unset or unparsable means unbounded.
inline EngineLimits limits_from_environment() {
  EngineLimits l;
  if (const char* v = std::getenv("LOGVEC_MAX_PAIRS")) {
    char* end = nullptr;
    unsigned long long n = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0') l.max_pairs = static_cast<std::size_t>(n);
  }
  return l;
}

/// A term m*e_comp of a free module.
template <class C>
struct ETerm {
  Monomial m;
  std::uint32_t comp;
  C c;
};

/// Module polynomial as used inside the engine: terms strictly decreasing
/// in the engine's module order.
template <class C>
using EPoly = std::vector<ETerm<C>>;

/// Coefficient arithmetic used by the engine. Over Q the engine works with
/// integer coefficients and fraction-free reduction, stripping content as it
/// goes; over Z/p it works with monic polynomials.
template <class K>
struct EngineArith;

template <>
struct EngineArith<Rational> {
  using C = Integer;
  Field<Rational> field;

  static bool zero(const C& c) { return sgn(c) == 0; }

  /// Returns (a, b) with a*lf == b*lg, a > 0.
  static void multipliers(const C& lf, const C& lg, C& a, C& b) {
    C g;
    mpz_gcd(g.get_mpz_t(), lf.get_mpz_t(), lg.get_mpz_t());
    a = lg / g;
    b = lf / g;
    if (sgn(a) < 0) {
      a = -a;
      b = -b;
    }
  }
  static bool is_unit_multiplier(const C& a) { return a == 1; }

  /// Divides out the content and makes the leading coefficient positive.
  /// Returns the divisor used (negative if the sign flipped).
  static C normalize(EPoly<C>& p) {
    if (p.empty()) return 1;
    C g = 0;
    for (const auto& t : p) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
      if (g == 1) break;
    }
    if (sgn(p.front().c) < 0) g = -g;
    if (g != 1)
      for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    return g;
  }
  Rational to_field(const C& c) const { return Rational(c); }

  /// Clears denominators of a family of polynomials that form one element.
  EPoly<C> convert(const std::vector<Term<Rational>>* parts, const std::uint32_t* comps, std::size_t n) const {
    Integer den = 1;
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& t : parts[k]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
    EPoly<C> out;
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& t : parts[k]) {
        Integer v = t.coef.get_num() * (den / t.coef.get_den());
        out.push_back({t.mono, comps[k], v});
      }
    return out;
  }
};

template <>
struct EngineArith<ModP> {
  using C = ModP;
  Field<ModP> field;

  static bool zero(const C& c) { return c.value() == 0; }
  static void multipliers(const C& lf, const C& lg, C& a, C& b) {
    a = ModP(1, lf.prime());
    b = lf / lg;
  }
  static bool is_unit_multiplier(const C& a) { return a.value() == 1; }
  static C normalize(EPoly<C>& p) {
    if (p.empty()) return {};
    C lead = p.front().c;
    if (lead.value() != 1) {
      C inv = lead.inverse();
      for (auto& t : p) t.c *= inv;
    }
    return lead;
  }
  ModP to_field(const C& c) const { return c; }
  EPoly<C> convert(const std::vector<Term<ModP>>* parts, const std::uint32_t* comps, std::size_t n) const {
    EPoly<C> out;
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& t : parts[k]) out.push_back({t.mono, comps[k], t.coef});
    return out;
  }
};

namespace detail {

/// Bit signature for fast non-divisibility tests: bit (8*i + k) is set when
/// the exponent of variable i is at least 2^k - 1 ... approximately; a clear
/// bit in b where a has it set proves a does not divide b.
inline std::uint64_t divmask(const Monomial& m) {
  static constexpr unsigned thresholds[8] = {1, 2, 3, 4, 6, 8, 12, 16};
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = m.exp[i];
    if (e == 0) continue;
    for (unsigned k = 0; k < 8; ++k)
      if (e >= thresholds[k]) mask |= std::uint64_t(1) << (8 * i + k);
  }
  return mask;
}

}  // namespace detail

/// Buchberger's algorithm for submodules of a graded free module S^r
/// (ideals are the case r = 1). Critical pairs are handled with the
/// Gebauer-Moeller criteria and selected by sugar degree, which for
/// homogeneous input is the normal strategy processed degree by degree.
/// Generators are queued like pairs so a run can be truncated at a degree.
template <class K>
class Buchberger {
public:
  using Arith = EngineArith<K>;
  using C = typename Arith::C;

  Buchberger(std::size_t nvars, ModuleOrder order, Field<K> field = {},
             EngineLimits limits = limits_from_environment())
      : nvars_(nvars), order_(std::move(order)), arith_{field}, limits_(limits) {
    if (order_.shifts.empty()) order_.shifts.assign(1, 0);
  }

  std::size_t nvars() const { return nvars_; }
  const ModuleOrder& order() const { return order_; }
  const Field<K>& field() const { return arith_.field; }

  /// Sorts terms into the module order and merges duplicates.
  EPoly<C> sorted(EPoly<C> p) const {
    std::sort(p.begin(), p.end(), [&](const ETerm<C>& a, const ETerm<C>& b) {
      return order_.cmp(a.m, a.comp, b.m, b.comp) > 0;
    });
    EPoly<C> out;
    for (auto& t : p) {
      if (!out.empty() && out.back().m == t.m && out.back().comp == t.comp)
        out.back().c += t.c;
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [](const ETerm<C>& t) { return Arith::zero(t.c); });
    return out;
  }

  /// Element of S^r from its coordinates (coordinate i lands in component i).
  EPoly<C> element(const std::vector<Poly<K>>& coords) const {
    std::vector<std::vector<Term<K>>> parts;
    std::vector<std::uint32_t> comps;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i].is_zero()) continue;
      parts.push_back(coords[i].terms());
      comps.push_back(static_cast<std::uint32_t>(i));
    }
    return sorted(arith_.convert(parts.data(), comps.data(), parts.size()));
  }
  EPoly<C> element(const Poly<K>& p) const { return element(std::vector<Poly<K>>{p}); }

  /// Coordinates of an engine element, scaled to the field (monic over Z/p,
  /// primitive integral over Q).
  std::vector<Poly<K>> coordinates(const EPoly<C>& p, std::size_t rank) const {
    std::vector<std::vector<Term<K>>> parts(rank);
    for (const auto& t : p) parts.at(t.comp).push_back({t.m, arith_.to_field(t.c)});
    std::vector<Poly<K>> out;
    for (auto& part : parts) out.push_back(Poly<K>::from_terms(nvars_, std::move(part), arith_.field));
    return out;
  }

  /// Queues a generator; it is reduced and inserted when the run reaches
  /// its sugar degree.
  void add_generator(EPoly<C> f) {
    if (f.empty()) return;
    int sugar = max_shifted_degree(f);
    generators_.push_back(std::move(f));
    pairs_.push_back(Pair{generators_.size() - 1, kGenerator, Monomial{}, 0, sugar});
    check_limits();
  }

  /// Inserts an element that is already fully reduced against the basis.
  void insert_reduced(EPoly<C> f) {
    if (f.empty()) return;
    Arith::normalize(f);
    int sugar = max_shifted_degree(f);
    insert(std::move(f), sugar);
  }

  /// Processes pairs and generators with sugar <= max_sugar.
  void run(int max_sugar = INT_MAX) {
    for (;;) {
      std::size_t best = pairs_.size();
      for (std::size_t k = 0; k < pairs_.size(); ++k) {
        if (pairs_[k].sugar > max_sugar) continue;
        if (best == pairs_.size() || before(pairs_[k], pairs_[best])) best = k;
      }
      if (best == pairs_.size()) break;
      Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<long>(best));
      EPoly<C> s;
      if (pr.j == kGenerator) {
        s = std::move(generators_[pr.i]);
      } else {
        s = spoly(pr);
        ++spairs_reduced_;
      }
      reduce_in_place(s, nullptr);
      if (s.empty()) {
        if (pr.j != kGenerator) ++zero_reductions_;
        continue;
      }
      Arith::normalize(s);
      insert(std::move(s), pr.sugar);
    }
  }

  bool done(int max_sugar = INT_MAX) const {
    return std::none_of(pairs_.begin(), pairs_.end(), [&](const Pair& p) { return p.sugar <= max_sugar; });
  }

  /// Full normal form against the current basis. If scale is given it
  /// receives s with result = s * (f - sum q_i g_i) exactly.
  EPoly<C> reduce(EPoly<C> f, K* scale = nullptr) const {
    reduce_in_place(f, scale);
    return f;
  }

  /// Leading terms of the current (non-redundant) basis.
  std::vector<std::pair<Monomial, std::uint32_t>> leading_terms() const {
    std::vector<std::pair<Monomial, std::uint32_t>> out;
    for (const auto& e : basis_)
      if (!e.redundant) out.emplace_back(e.p.front().m, e.p.front().comp);
    return out;
  }

  /// Reduced Groebner basis of everything processed so far, sorted by
  /// increasing leading term.
  std::vector<EPoly<C>> reduced_basis() const {
    std::vector<const Element*> keep;
    for (const auto& e : basis_)
      if (!e.redundant) keep.push_back(&e);
    std::sort(keep.begin(), keep.end(), [&](const Element* a, const Element* b) {
      return order_.cmp(a->p.front().m, a->p.front().comp, b->p.front().m, b->p.front().comp) < 0;
    });
    std::vector<EPoly<C>> out;
    for (std::size_t k = 0; k < keep.size(); ++k) {
      // tail-reduce against the other minimal elements
      EPoly<C> f = keep[k]->p;
      std::size_t pos = 1;
      reduce_from(f, pos, nullptr, keep[k]);
      Arith::normalize(f);
      out.push_back(std::move(f));
    }
    return out;
  }

  std::size_t basis_size() const { return basis_.size(); }
  std::size_t pending_pairs() const { return pairs_.size(); }
  std::size_t spairs_reduced() const { return spairs_reduced_; }
  std::size_t zero_reductions() const { return zero_reductions_; }

private:
  static constexpr std::size_t kGenerator = static_cast<std::size_t>(-1);

  struct Element {
    EPoly<C> p;
    std::uint64_t mask;
    int sugar;
    bool redundant;
  };

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t comp;
    int sugar;
  };

  int max_shifted_degree(const EPoly<C>& f) const {
    int d = INT_MIN;
    for (const auto& t : f) d = std::max(d, order_.shifted_degree(t.m, t.comp));
    return d;
  }

  bool before(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    bool ga = a.j == kGenerator, gb = b.j == kGenerator;
    if (ga != gb) return gb;  // S-pairs of a degree before new generators
    if (ga) return a.i < b.i;
    return order_.cmp(a.lcm, a.comp, b.lcm, b.comp) < 0;
  }

  EPoly<C> spoly(const Pair& pr) const {
    const EPoly<C>& f = basis_[pr.i].p;
    const EPoly<C>& g = basis_[pr.j].p;
    Monomial mf = f.front().m.quotient_of(pr.lcm);
    Monomial mg = g.front().m.quotient_of(pr.lcm);
    C a, b;
    Arith::multipliers(f.front().c, g.front().c, a, b);
    // a*lc(f) == b*lc(g): s = a*mf*f - b*mg*g, leading terms cancel
    EPoly<C> out;
    out.reserve(f.size() + g.size());
    std::size_t i = 1, j = 1;
    while (i < f.size() || j < g.size()) {
      int c;
      Monomial ti, tj;
      if (i < f.size()) ti = f[i].m * mf;
      if (j < g.size()) tj = g[j].m * mg;
      if (i == f.size())
        c = -1;
      else if (j == g.size())
        c = 1;
      else
        c = order_.cmp(ti, f[i].comp, tj, g[j].comp);
      if (c > 0) {
        out.push_back({ti, f[i].comp, C(a * f[i].c)});
        ++i;
      } else if (c < 0) {
        out.push_back({tj, g[j].comp, C(-(b * g[j].c))});
        ++j;
      } else {
        C v = a * f[i].c - b * g[j].c;
        if (!Arith::zero(v)) out.push_back({ti, f[i].comp, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  const Element* find_reducer(const Monomial& m, std::uint32_t comp, std::uint64_t mask,
                              const Element* skip) const {
    for (const auto& e : basis_) {
      if (e.redundant || &e == skip) continue;
      const auto& lt = e.p.front();
      if (lt.comp != comp || (e.mask & ~mask) != 0) continue;
      if (lt.m.divides(m)) return &e;
    }
    return nullptr;
  }

  void reduce_in_place(EPoly<C>& f, K* scale) const {
    std::size_t pos = 0;
    reduce_from(f, pos, scale, nullptr);
  }

  /// Reduces every term of f at index >= pos.
  void reduce_from(EPoly<C>& f, std::size_t pos, K* scale, const Element* skip) const {
    K total = arith_.field.one();
    EPoly<C> buf;
    unsigned steps = 0;
    while (pos < f.size()) {
      const auto& t = f[pos];
      const Element* r = find_reducer(t.m, t.comp, detail::divmask(t.m), skip);
      if (!r) {
        ++pos;
        continue;
      }
      const EPoly<C>& g = r->p;
      Monomial mult = g.front().m.quotient_of(t.m);
      C a, b;
      Arith::multipliers(t.c, g.front().c, a, b);
      // f <- a*f - b*mult*g
      bool scale_f = !Arith::is_unit_multiplier(a);
      if (scale_f) total *= arith_.to_field(a);
      buf.clear();
      buf.reserve(f.size() + g.size());
      for (std::size_t k = 0; k < pos; ++k) buf.push_back({f[k].m, f[k].comp, scale_f ? C(a * f[k].c) : f[k].c});
      std::size_t i = pos + 1, j = 1;
      while (i < f.size() || j < g.size()) {
        int c;
        Monomial tj;
        if (j < g.size()) tj = g[j].m * mult;
        if (i == f.size())
          c = -1;
        else if (j == g.size())
          c = 1;
        else
          c = order_.cmp(f[i].m, f[i].comp, tj, g[j].comp);
        if (c > 0) {
          buf.push_back({f[i].m, f[i].comp, scale_f ? C(a * f[i].c) : f[i].c});
          ++i;
        } else if (c < 0) {
          buf.push_back({tj, g[j].comp, C(-(b * g[j].c))});
          ++j;
        } else {
          C v = scale_f ? C(a * f[i].c - b * g[j].c) : C(f[i].c - b * g[j].c);
          if (!Arith::zero(v)) buf.push_back({f[i].m, f[i].comp, std::move(v)});
          ++i;
          ++j;
        }
      }
      f.swap(buf);
      if (++steps % 16 == 0 && scale_f) strip(f, total);
    }
    strip(f, total);
    if (scale) *scale = total;
  }

  void strip(EPoly<C>& f, K& total) const {
    if constexpr (std::is_same_v<C, Integer>) {
      if (f.empty()) return;
      C g = 0;
      for (const auto& t : f) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) return;
      }
      for (auto& t : f) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
      total /= arith_.to_field(g);
    } else {
      (void)f;
      (void)total;
    }
  }

  void insert(EPoly<C> h, int sugar) {
    const std::size_t k = basis_.size();
    const Monomial lt = h.front().m;
    const std::uint32_t comp = h.front().comp;
    basis_.push_back(Element{std::move(h), detail::divmask(lt), sugar, false});
    const bool product_ok = order_.rank() == 1;

    // candidate new pairs (i, k)
    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
      bool alive;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& e = basis_[i];
      if (e.redundant || e.p.front().comp != comp) continue;
      const Monomial& li = e.p.front().m;
      cands.push_back({i, lcm(li, lt), product_ok && coprime(li, lt), true});
    }
    // chain criterion among the new pairs
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].alive) continue;
        if (cands[b].lcm.divides(cands[a].lcm) && (cands[b].lcm != cands[a].lcm || b < a)) {
          cands[a].alive = false;
          break;
        }
      }
    }
    // keep a coprime pair only as a witness: it dominates equal-lcm pairs
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!cands[a].coprime) continue;
      for (std::size_t b = 0; b < cands.size(); ++b)
        if (b != a && cands[b].alive && cands[b].lcm == cands[a].lcm) cands[b].alive = false;
    }
    // old pairs made redundant by the new leading term
    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.j == kGenerator || p.comp != comp) return false;
      if (!lt.divides(p.lcm)) return false;
      Monomial li = basis_[p.i].p.front().m, lj = basis_[p.j].p.front().m;
      return lcm(li, lt) != p.lcm && lcm(lj, lt) != p.lcm;
    });
    for (const auto& c : cands) {
      if (!c.alive || c.coprime) continue;
      const auto& e = basis_[c.i];
      int s = std::max(e.sugar + static_cast<int>(c.lcm.deg - e.p.front().m.deg),
                       sugar + static_cast<int>(c.lcm.deg - lt.deg));
      pairs_.push_back(Pair{c.i, k, c.lcm, comp, s});
    }
    for (std::size_t i = 0; i < k; ++i) {
      auto& e = basis_[i];
      if (!e.redundant && e.p.front().comp == comp && lt.divides(e.p.front().m)) e.redundant = true;
    }
    check_limits();
  }

  void check_limits() const {
    if (limits_.max_pairs != 0 && pairs_.size() > limits_.max_pairs)
      throw ResourceLimitError("critical pair queue exceeded LOGVEC_MAX_PAIRS=" +
                               std::to_string(limits_.max_pairs));
  }

  std::size_t nvars_;
  ModuleOrder order_;
  Arith arith_;
  EngineLimits limits_;
  std::vector<Element> basis_;
  std::vector<Pair> pairs_;
  std::vector<EPoly<C>> generators_;
  std::size_t spairs_reduced_ = 0;
  std::size_t zero_reductions_ = 0;
};

}  // namespace logvec
