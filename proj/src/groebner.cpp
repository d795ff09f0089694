#include "nonic/groebner.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>

#include "nonic/matrix.hpp"

namespace nonic {

Monomial Monomial::from_exponents(const std::vector<int>& e) {
  if (e.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("too many variables");
  Monomial m;
  int deg = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > 255) throw std::invalid_argument("exponent out of range");
    m.key[1 + i] = static_cast<std::uint8_t>(255 - e[i]);
    deg += e[i];
  }
  if (deg > 255) throw std::overflow_error("monomial degree exceeds 255");
  m.key[0] = static_cast<std::uint8_t>(deg);
  return m;
}

Monomial Monomial::variable(int i, int power) {
  std::vector<int> e(i + 1, 0);
  e[i] = power;
  return from_exponents(e);
}

bool Monomial::divides(const Monomial& b) const {
  if (key[0] > b.key[0]) return false;
  for (int i = 1; i <= kMaxVars; ++i)
    if (key[i] < b.key[i]) return false;
  return true;
}

std::uint32_t Monomial::support() const {
  std::uint32_t s = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (key[1 + i] != 255) s |= 1u << i;
  return s;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  int deg = a.key[0] + b.key[0];
  if (deg > 255) throw std::overflow_error("monomial degree exceeds 255");
  m.key[0] = static_cast<std::uint8_t>(deg);
  for (int i = 1; i <= kMaxVars; ++i) m.key[i] = static_cast<std::uint8_t>(a.key[i] + b.key[i] - 255);
  return m;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.key[0] = static_cast<std::uint8_t>(a.key[0] - b.key[0]);
  for (int i = 1; i <= kMaxVars; ++i) m.key[i] = static_cast<std::uint8_t>(255 - (b.key[i] - a.key[i]));
  return m;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  int deg = 0;
  for (int i = 1; i <= kMaxVars; ++i) {
    m.key[i] = std::min(a.key[i], b.key[i]);
    deg += 255 - m.key[i];
  }
  m.key[0] = static_cast<std::uint8_t>(deg);
  return m;
}

bool mono_coprime(const Monomial& a, const Monomial& b) { return (a.support() & b.support()) == 0; }

SparsePoly::SparsePoly(int nvars, std::vector<Term> terms) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("unsupported variable count");
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.m > y.m; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().m == t.m)
      throw std::invalid_argument("duplicate monomial in SparsePoly constructor");
    if (!t.c.is_zero()) terms_.push_back(t);
  }
}

SparsePoly SparsePoly::constant(int nvars, Fp c) {
  SparsePoly p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
  return p;
}

SparsePoly SparsePoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
  SparsePoly p(nvars);
  p.terms_.push_back({Monomial::variable(i), Fp(1)});
  return p;
}

int SparsePoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

Fp SparsePoly::evaluate(const PrimeField& F, const std::vector<Fp>& x) const {
  if (x.size() != static_cast<std::size_t>(nvars_)) throw std::invalid_argument("evaluate: arity");
  Fp acc(0);
  for (const auto& t : terms_) {
    Fp v = t.c;
    for (int i = 0; i < nvars_; ++i) {
      int e = t.m.exponent(i);
      if (e) v = F.mul(v, F.pow(x[i], e));
    }
    acc = F.add(acc, v);
  }
  return acc;
}

std::string SparsePoly::to_string(const PrimeField& F) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    s += std::to_string(F.balanced(t.c));
    for (int i = 0; i < nvars_; ++i) {
      int e = t.m.exponent(i);
      if (!e) continue;
      s += "*x" + std::to_string(i);
      if (e > 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

SparsePoly poly_sub_mul(const PrimeField& F, const SparsePoly& a, Fp c, const Monomial& m,
                        const SparsePoly& b) {
  SparsePoly r(a.nvars());
  auto& out = r.mutable_terms();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0, j = 0;
  const Fp nc = F.neg(c);
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size()) {
      out.push_back(ta[i++]);
      continue;
    }
    Monomial mb = mono_mul(m, tb[j].m);
    if (i == ta.size() || mb > ta[i].m) {
      out.push_back({mb, F.mul(nc, tb[j].c)});
      ++j;
    } else if (ta[i].m > mb) {
      out.push_back(ta[i++]);
    } else {
      Fp v = F.add(ta[i].c, F.mul(nc, tb[j].c));
      if (!v.is_zero()) out.push_back({mb, v});
      ++i;
      ++j;
    }
  }
  return r;
}

SparsePoly poly_add(const PrimeField& F, const SparsePoly& a, const SparsePoly& b) {
  return poly_sub_mul(F, a, F.neg(Fp(1)), Monomial(), b);
}

SparsePoly poly_sub(const PrimeField& F, const SparsePoly& a, const SparsePoly& b) {
  return poly_sub_mul(F, a, Fp(1), Monomial(), b);
}

SparsePoly poly_scale(const PrimeField& F, Fp c, const SparsePoly& a) {
  SparsePoly r(a.nvars());
  if (c.is_zero()) return r;
  for (const auto& t : a.terms()) r.mutable_terms().push_back({t.m, F.mul(c, t.c)});
  return r;
}

SparsePoly poly_mul(const PrimeField& F, const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r(a.nvars());
  for (const auto& t : a.terms()) r = poly_sub_mul(F, r, F.neg(t.c), t.m, b);
  return r;
}

SparsePoly make_monic(const PrimeField& F, const SparsePoly& a) {
  if (a.is_zero()) return a;
  return poly_scale(F, F.inv(a.lc()), a);
}

namespace {

const SparsePoly* find_reducer(const Monomial& m, const std::vector<const SparsePoly*>& G) {
  for (const SparsePoly* g : G)
    if (g->lm().divides(m)) return g;
  return nullptr;
}

SparsePoly nf_impl(const PrimeField& F, SparsePoly p, const std::vector<const SparsePoly*>& G) {
  SparsePoly rem(p.nvars());
  while (!p.is_zero()) {
    const Term lt = p.terms().front();
    const SparsePoly* g = find_reducer(lt.m, G);
    if (g) {
      Fp c = F.mul(lt.c, F.inv(g->lc()));
      p = poly_sub_mul(F, p, c, mono_div(lt.m, g->lm()), *g);
    } else {
      rem.mutable_terms().push_back(lt);
      auto& t = p.mutable_terms();
      t.erase(t.begin());
    }
  }
  return rem;
}

}  // namespace

SparsePoly normal_form(const PrimeField& F, const SparsePoly& f, const std::vector<SparsePoly>& G) {
  std::vector<const SparsePoly*> ptrs;
  for (const auto& g : G)
    if (!g.is_zero()) ptrs.push_back(&g);
  return nf_impl(F, f, ptrs);
}

SparsePoly s_polynomial(const PrimeField& F, const SparsePoly& f, const SparsePoly& g) {
  Monomial l = mono_lcm(f.lm(), g.lm());
  SparsePoly a = poly_scale(F, F.inv(f.lc()), f);
  SparsePoly sa(f.nvars());
  sa = poly_sub_mul(F, sa, F.neg(Fp(1)), mono_div(l, f.lm()), a);
  return poly_sub_mul(F, sa, F.inv(g.lc()), mono_div(l, g.lm()), g);
}

namespace {

// Gaussian elimination on the coefficient matrix of the input: distinct
// leading monomials, fully interreduced as a linear system.
std::vector<SparsePoly> linear_interreduce(const PrimeField& F, int nvars,
                                           const std::vector<SparsePoly>& gens) {
  std::map<Monomial, std::size_t, std::greater<Monomial>> cols;
  for (const auto& g : gens)
    for (const auto& t : g.terms()) cols.emplace(t.m, 0);
  std::vector<Monomial> col_mono;
  for (auto& [m, idx] : cols) {
    idx = col_mono.size();
    col_mono.push_back(m);
  }
  DenseMatrix mat(0, col_mono.size());
  std::vector<Fp> row(col_mono.size());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    std::fill(row.begin(), row.end(), Fp(0));
    for (const auto& t : g.terms()) row[cols[t.m]] = t.c;
    mat.append_row(row);
  }
  RowEchelon e = rref(F, mat);
  std::vector<SparsePoly> out;
  for (std::size_t r = 0; r < e.rank(); ++r) {
    SparsePoly p(nvars);
    for (std::size_t c = 0; c < col_mono.size(); ++c)
      if (!e.reduced.at(r, c).is_zero()) p.mutable_terms().push_back({col_mono[c], e.reduced.at(r, c)});
    out.push_back(std::move(p));
  }
  return out;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const PrimeField& F, int nvars, const BuchbergerOptions& o, GroebnerStats* s)
      : F_(F), nvars_(nvars), opts_(o), stats_(s) {}

  GroebnerBasis run(const std::vector<SparsePoly>& gens) {
    for (const auto& g : gens)
      if (g.nvars() != nvars_) throw std::invalid_argument("buchberger: variable count mismatch");
    auto start = linear_interreduce(F_, nvars_, gens);
    // add in increasing leading monomial order so small elements reduce the rest
    std::reverse(start.begin(), start.end());
    for (auto& g : start) {
      SparsePoly h = make_monic(F_, nf_impl(F_, g, active_ptrs()));
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit();
      update(std::move(h));
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (better(pairs_[k], pairs_[best])) best = k;
      Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      if (stats_) ++stats_->pairs_reduced;
      SparsePoly s = s_polynomial(F_, polys_[pr.i], polys_[pr.j]);
      SparsePoly h = make_monic(F_, nf_impl(F_, s, active_ptrs()));
      if (h.is_zero()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      if (h.is_constant() && opts_.stop_on_constant) return unit();
      update(std::move(h));
    }
    return finish();
  }

 private:
  const PrimeField& F_;
  int nvars_;
  BuchbergerOptions opts_;
  GroebnerStats* stats_;
  std::vector<SparsePoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::size_t created_ = 0;

  static bool better(const Pair& a, const Pair& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    if (a.lcm != b.lcm) return a.lcm < b.lcm;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  }

  GroebnerBasis unit() const {
    GroebnerBasis gb;
    gb.nvars = nvars_;
    gb.generators.push_back(SparsePoly::constant(nvars_, Fp(1)));
    return gb;
  }

  std::vector<const SparsePoly*> active_ptrs() const {
    std::vector<const SparsePoly*> v;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) v.push_back(&polys_[k]);
    return v;
  }

  // Gebauer-Moeller installation of a new basis element h.
  void update(SparsePoly h) {
    const std::size_t hi = polys_.size();
    const Monomial lh = h.lm();
    polys_.push_back(std::move(h));
    active_.push_back(true);
    std::vector<Pair> C;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) C.push_back({g, hi, mono_lcm(polys_[g].lm(), lh)});
    if (stats_) stats_->pairs_considered += C.size();
    std::vector<Pair> D;
    for (std::size_t k = 0; k < C.size(); ++k) {
      const Pair& p = C[k];
      bool keep = mono_coprime(lh, polys_[p.i].lm());
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < C.size() && keep; ++q)
          if (C[q].lcm.divides(p.lcm)) keep = false;
        for (std::size_t q = 0; q < D.size() && keep; ++q)
          if (D[q].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> E;
    for (const auto& p : D)
      if (!mono_coprime(lh, polys_[p.i].lm())) E.push_back(p);
    std::vector<Pair> B;
    for (const auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && mono_lcm(polys_[p.i].lm(), lh) != p.lcm &&
                  mono_lcm(polys_[p.j].lm(), lh) != p.lcm;
      if (!drop) B.push_back(p);
    }
    for (auto& p : E) B.push_back(p);
    pairs_ = std::move(B);
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(polys_[g].lm())) active_[g] = false;
    ++created_;
  }

  GroebnerBasis finish() {
    std::vector<SparsePoly> G;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) G.push_back(polys_[k]);
    // minimal basis
    std::vector<SparsePoly> M;
    for (std::size_t a = 0; a < G.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < G.size() && !redundant; ++b) {
        if (a == b) continue;
        if (G[b].lm().divides(G[a].lm()) && (G[b].lm() != G[a].lm() || b < a)) redundant = true;
      }
      if (!redundant) M.push_back(G[a]);
    }
    std::sort(M.begin(), M.end(), [](const SparsePoly& x, const SparsePoly& y) { return x.lm() < y.lm(); });
    // tail reduction
    for (std::size_t a = 0; a < M.size(); ++a) {
      std::vector<const SparsePoly*> others;
      for (std::size_t b = 0; b < M.size(); ++b)
        if (b != a) others.push_back(&M[b]);
      SparsePoly lead(nvars_);
      lead.mutable_terms().push_back(M[a].terms().front());
      SparsePoly tail = M[a];
      tail.mutable_terms().erase(tail.mutable_terms().begin());
      M[a] = make_monic(F_, poly_add(F_, lead, nf_impl(F_, tail, others)));
    }
    GroebnerBasis gb;
    gb.nvars = nvars_;
    gb.generators = std::move(M);
    return gb;
  }
};

}  // namespace

GroebnerBasis buchberger(const PrimeField& F, int nvars, const std::vector<SparsePoly>& gens,
                         const BuchbergerOptions& opts, GroebnerStats* stats) {
  return Buchberger(F, nvars, opts, stats).run(gens);
}

bool ideal_is_trivial(const PrimeField& F, int nvars, const std::vector<SparsePoly>& gens) {
  return buchberger(F, nvars, gens).is_trivial();
}

int ideal_dimension(const GroebnerBasis& gb) {
  if (gb.is_trivial()) return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb.generators)
    if (!g.is_zero()) supports.push_back(g.lm().support());
  const std::uint32_t full = (1u << gb.nvars) - 1;
  int best = 0;
  // U is independent iff no leading monomial is supported inside U
  for (std::uint32_t U = full;; --U) {
    const int pc = std::popcount(U);
    if (pc > best) {
      bool ok = true;
      for (auto s : supports)
        if ((s & ~U) == 0) {
          ok = false;
          break;
        }
      if (ok) best = pc;
    }
    if (U == 0) break;
  }
  return best;
}

std::size_t zero_dim_degree(const GroebnerBasis& gb) {
  if (ideal_dimension(gb) != 0) throw std::domain_error("not zero-dimensional");
  std::vector<Monomial> lts;
  for (const auto& g : gb.generators) lts.push_back(g.lm());
  const int n = gb.nvars;
  // bound on each exponent: the pure power in that variable
  std::vector<int> bound(n, 0);
  for (const auto& m : lts) {
    auto s = m.support();
    if (std::popcount(s) == 1) {
      int v = std::countr_zero(s);
      int e = m.exponent(v);
      if (bound[v] == 0 || e < bound[v]) bound[v] = e;
    }
  }
  std::size_t count = 0;
  std::vector<int> e(n, 0);
  // depth-first over the staircase; a monomial outside the ideal has all
  // divisors outside the ideal, so pruning at the first hit is exact
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      ++count;
      if (count > 100'000'000) throw std::length_error("too many standard monomials");
      return;
    }
    for (int k = 0; k < bound[v]; ++k) {
      e[v] = k;
      std::vector<int> partial(e.begin(), e.end());
      for (int w = v + 1; w < n; ++w) partial[w] = 0;
      Monomial m = Monomial::from_exponents(partial);
      bool in = false;
      for (const auto& l : lts)
        if (l.divides(m)) {
          in = true;
          break;
        }
      if (in) break;
      rec(v + 1);
    }
    e[v] = 0;
  };
  rec(0);
  return count;
}

std::optional<std::vector<Fp>> unique_solution(const PrimeField& F, const GroebnerBasis& gb) {
  if (gb.is_trivial() || ideal_dimension(gb) != 0 || zero_dim_degree(gb) != 1) return std::nullopt;
  // reduced basis of a single rational point: x_i - c_i
  std::vector<Fp> x(gb.nvars);
  for (const auto& g : gb.generators) {
    if (g.lm().degree() != 1 || g.terms().size() > 2) return std::nullopt;
    int v = std::countr_zero(g.lm().support());
    x[v] = g.terms().size() == 2 ? F.neg(g.terms()[1].c) : Fp(0);
  }
  return x;
}

}  // namespace nonic
