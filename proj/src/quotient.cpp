#include "hessberg/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace hessberg {

namespace {

// full division: remainder has no term divisible by any LM of the reducers
Poly reduce_full(Poly p, const std::vector<Poly>& reducers) {
  const int nv = p.nvars();
  auto divisor_of = [&](const Monomial& m) -> const Poly* {
    for (const Poly& g : reducers)
      if (!g.is_zero() && g.leading_monomial().divides(m)) return &g;
    return nullptr;
  };
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    if (const Poly* red = divisor_of(lt.mono)) {
      Rat c = lt.coef / red->leading_term().coef;
      p = p - red->mul_term(lt.mono / red->leading_monomial(), c);
    } else {
      // the whole irreducible prefix moves to the remainder in one pass
      const auto& ts = p.terms();
      size_t k = 1;
      remainder.push_back(ts[0]);
      while (k < ts.size() && divisor_of(ts[k].mono) == nullptr) {
        remainder.push_back(ts[k]);
        ++k;
      }
      p = Poly::from_sorted_terms(
          nv, std::vector<Term>(ts.begin() + static_cast<long>(k), ts.end()));
    }
  }
  return Poly::from_sorted_terms(nv, std::move(remainder));
}

Poly spoly(const Poly& f, const Poly& g) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Poly a = f.mul_term(l / f.leading_monomial(), Rat(1) / f.leading_term().coef);
  Poly b = g.mul_term(l / g.leading_monomial(), Rat(1) / g.leading_term().coef);
  return a - b;
}

struct SPair {
  int i, j;
  Monomial lcm;
};

bool pair_less(const SPair& a, const SPair& b) {
  if (a.lcm != b.lcm) return degrevlex_less(a.lcm, b.lcm);
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

class Buchberger {
 public:
  explicit Buchberger(std::vector<Poly> input) {
    for (Poly& f : input)
      if (!f.is_zero()) add(reduce_full(std::move(f), basis_).monic());
  }

  std::vector<Poly> run() {
    while (!pairs_.empty()) {
      SPair p = pairs_.front();
      pairs_.erase(pairs_.begin());
      Poly r = reduce_full(spoly(basis_[p.i], basis_[p.j]), basis_).monic();
      if (!r.is_zero()) add(std::move(r));
    }
    return reduced();
  }

 private:
  void add(Poly f) {
    if (f.is_zero()) return;
    const int t = static_cast<int>(basis_.size());
    const Monomial& lt = f.leading_monomial();

    // Gebauer-Moller: prune old pairs whose lcm the new LM strictly refines
    pairs_.erase(
        std::remove_if(pairs_.begin(), pairs_.end(),
                       [&](const SPair& p) {
                         if (!lt.divides(p.lcm)) return false;
                         Monomial li =
                             Monomial::lcm(basis_[p.i].leading_monomial(), lt);
                         Monomial lj =
                             Monomial::lcm(basis_[p.j].leading_monomial(), lt);
                         return li != p.lcm && lj != p.lcm;
                       }),
        pairs_.end());

    // candidate new pairs against active elements
    std::vector<SPair> cand;
    for (int i = 0; i < t; ++i)
      if (active_[i])
        cand.push_back({i, t, Monomial::lcm(basis_[i].leading_monomial(), lt)});
    // criterion M: drop candidates whose lcm is a proper multiple of another
    std::vector<bool> drop(cand.size(), false);
    for (size_t a = 0; a < cand.size(); ++a)
      for (size_t b = 0; b < cand.size(); ++b) {
        if (a == b || drop[a] || drop[b]) continue;
        if (cand[b].lcm != cand[a].lcm && cand[b].lcm.divides(cand[a].lcm))
          drop[a] = true;
      }
    // criterion F: keep a single representative of each equal-lcm class
    for (size_t a = 0; a < cand.size(); ++a)
      for (size_t b = a + 1; b < cand.size(); ++b)
        if (!drop[a] && !drop[b] && cand[a].lcm == cand[b].lcm) drop[b] = true;
    // product criterion
    for (size_t a = 0; a < cand.size(); ++a)
      if (!drop[a] &&
          Monomial::coprime(basis_[cand[a].i].leading_monomial(), lt))
        drop[a] = true;
    for (size_t a = 0; a < cand.size(); ++a)
      if (!drop[a]) insert_pair(cand[a]);

    for (int i = 0; i < t; ++i)
      if (active_[i] && lt.divides(basis_[i].leading_monomial()))
        active_[i] = false;
    basis_.push_back(std::move(f));
    active_.push_back(true);
  }

  void insert_pair(SPair p) {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p, pair_less);
    pairs_.insert(it, std::move(p));
  }

  std::vector<Poly> reduced() {
    std::vector<Poly> minimal;
    for (size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) minimal.push_back(basis_[i]);
    // each tail reduced against the others; LMs are pairwise indivisible so
    // one pass yields the reduced basis
    std::vector<Poly> out = minimal;
    for (size_t i = 0; i < out.size(); ++i) {
      std::vector<Poly> others;
      for (size_t j = 0; j < out.size(); ++j)
        if (j != i) others.push_back(out[j]);
      out[i] = reduce_full(out[i], others).monic();
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
      return degrevlex_less(a.leading_monomial(), b.leading_monomial());
    });
    return out;
  }

  std::vector<Poly> basis_;
  std::vector<bool> active_;
  std::vector<SPair> pairs_;  // sorted ascending by pair_less
};

}  // namespace

std::vector<Poly> groebner_basis(std::vector<Poly> gens) {
  return Buchberger(std::move(gens)).run();
}

namespace {

std::vector<Monomial> standard_monomials(int nvars,
                                         const std::vector<Poly>& gb) {
  for (const Poly& g : gb)
    if (!g.is_zero() && g.leading_monomial().is_one())
      return {};  // unit ideal, zero ring
  std::vector<int> bound(static_cast<size_t>(nvars), -1);
  for (const Poly& g : gb) {
    const Monomial& lm = g.leading_monomial();
    for (int v = 1; v <= nvars; ++v)
      if (lm.exp(v) == lm.deg() && lm.deg() > 0) {
        int& b = bound[static_cast<size_t>(v - 1)];
        if (b < 0 || lm.deg() < b) b = lm.deg();
      }
  }
  for (int b : bound)
    if (b < 0)
      throw std::runtime_error(
          "not Artinian: generators are not a regular sequence");

  std::vector<Monomial> out;
  Monomial cur(nvars);
  // odometer over the box below the pure powers
  while (true) {
    bool standard = true;
    for (const Poly& g : gb)
      if (g.leading_monomial().divides(cur)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(cur);
    int v = 1;
    for (; v <= nvars; ++v) {
      if (cur.exp(v) + 1 < bound[static_cast<size_t>(v - 1)]) {
        cur.set_exp(v, cur.exp(v) + 1);
        break;
      }
      cur.set_exp(v, 0);
    }
    if (v > nvars) break;
  }
  std::sort(out.begin(), out.end(), degrevlex_less);
  return out;
}

}  // namespace

QuotientRing build_quotient_raw(int nvars, std::vector<Poly> gens) {
  QuotientRing qr;
  qr.nvars = nvars;
  qr.gens = gens;
  qr.gb = groebner_basis(std::move(gens));
  qr.std_monomials = standard_monomials(nvars, qr.gb);
  if (qr.std_monomials.empty())
    throw std::runtime_error("quotient ring is zero: ideal contains 1");
  int topdeg = qr.std_monomials.back().deg();
  qr.hilbert.assign(static_cast<size_t>(topdeg) + 1, 0);
  for (const Monomial& m : qr.std_monomials)
    ++qr.hilbert[static_cast<size_t>(m.deg())];
  return qr;
}

QuotientRing build_quotient(const GeneratorSet& gs) {
  QuotientRing qr = build_quotient_raw(gs.h.type.nvars(), gs.gens);
  qr.h = gs.h;
  return qr;
}

int QuotientRing::monomial_index(const Monomial& m) const {
  auto it = std::lower_bound(std_monomials.begin(), std_monomials.end(), m,
                             degrevlex_less);
  if (it == std_monomials.end() || !(*it == m)) return -1;
  return static_cast<int>(it - std_monomials.begin());
}

Poly normal_form(const Poly& p, const QuotientRing& qr) {
  if (p.nvars() != qr.nvars)
    throw std::invalid_argument("variable-count mismatch");
  return reduce_full(p, qr.gb);
}

std::vector<Rat> coordinates(const Poly& p, const QuotientRing& qr) {
  Poly nf = normal_form(p, qr);
  std::vector<Rat> coords(static_cast<size_t>(qr.dim()), Rat(0));
  for (const Term& t : nf.terms()) {
    int idx = qr.monomial_index(t.mono);
    if (idx < 0)
      throw std::logic_error("normal form left the standard monomial span");
    coords[static_cast<size_t>(idx)] = t.coef;
  }
  return coords;
}

std::vector<long> hilbert_series(const QuotientRing& qr) { return qr.hilbert; }

std::vector<long> product_formula_series(const HessFn& h) {
  ValidityReport rep = validate(h);
  if (!rep.ok)
    throw std::invalid_argument("invalid Hessenberg function " + h.text() +
                                ": " + rep.message());
  std::vector<long> poly{1};
  for (int i = 1; i <= h.n(); ++i) {
    const int e = h(i) - i;
    std::vector<long> next(poly.size() + static_cast<size_t>(e), 0);
    for (size_t a = 0; a < poly.size(); ++a)
      for (int b = 0; b <= e; ++b) next[a + static_cast<size_t>(b)] += poly[a];
    poly = std::move(next);
  }
  return poly;
}

std::shared_ptr<const QuotientRing> QuotientCache::get(const HessFn& h) {
  const std::string key = h.text();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = store_.find(key);
    if (it != store_.end()) return it->second;
  }
  auto qr = std::make_shared<const QuotientRing>(build_quotient(generators(h)));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = store_.emplace(key, std::move(qr));
  return it->second;
}

}  // namespace hessberg
