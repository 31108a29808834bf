#include "hessberg/basis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hessberg/linalg.hpp"

namespace hessberg {

namespace {

void require_valid(const HessFn& h) {
  ValidityReport rep = validate(h);
  if (!rep.ok)
    throw std::invalid_argument("invalid Hessenberg function " + h.text() +
                                ": " + rep.message());
}

// all m with 0 <= m_i <= h(i)-i, ascending lexicographically in m
std::vector<std::vector<int>> exponent_vectors(const HessFn& h) {
  const int n = h.n();
  std::vector<std::vector<int>> out;
  std::vector<int> m(static_cast<size_t>(n), 0);
  while (true) {
    out.push_back(m);
    int i = n - 1;
    for (; i >= 0; --i) {
      if (m[static_cast<size_t>(i)] < h(i + 1) - (i + 1)) {
        ++m[static_cast<size_t>(i)];
        break;
      }
      m[static_cast<size_t>(i)] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace

BasisSpec identity_spec(const HessFn& h) {
  require_valid(h);
  BasisSpec spec{h, {}};
  for (int i = 1; i <= h.n(); ++i) {
    std::vector<int> w;
    for (int j = i + 1; j <= h(i); ++j) w.push_back(j);
    spec.perms.push_back(std::move(w));
  }
  return spec;
}

BasisSpec random_spec(const HessFn& h, std::mt19937_64& rng) {
  BasisSpec spec = identity_spec(h);
  for (auto& w : spec.perms)
    for (size_t k = w.size(); k > 1; --k)
      std::swap(w[k - 1], w[rng() % k]);
  return spec;
}

namespace {

void check_spec(const BasisSpec& spec) {
  require_valid(spec.h);
  if (spec.h.type.family == LieFamily::D)
    throw std::invalid_argument(
        "type D admits no permutation parameter; use basis_elements_D");
  if (static_cast<int>(spec.perms.size()) != spec.h.n())
    throw std::invalid_argument("invalid permutation window");
  for (int i = 1; i <= spec.h.n(); ++i) {
    std::vector<int> w = spec.perms[static_cast<size_t>(i - 1)];
    std::sort(w.begin(), w.end());
    std::vector<int> expect;
    for (int j = i + 1; j <= spec.h(i); ++j) expect.push_back(j);
    if (w != expect) throw std::invalid_argument("invalid permutation window");
  }
}

}  // namespace

std::vector<BasisElement> basis_elements(const BasisSpec& spec,
                                         const RootTable& table) {
  check_spec(spec);
  const HessFn& h = spec.h;
  const int nv = h.type.nvars();
  std::vector<BasisElement> out;
  for (auto& m : exponent_vectors(h)) {
    Poly prod = Poly::constant(nv, 1);
    for (int i = 1; i <= h.n(); ++i) {
      const auto& w = spec.perms[static_cast<size_t>(i - 1)];
      for (int s = 0; s < m[static_cast<size_t>(i - 1)]; ++s) {
        int pos = h(i) - s;  // w^(i)(pos)
        int j = w[static_cast<size_t>(pos - (i + 1))];
        prod *= table.root(i, j).linear_form();
      }
    }
    out.push_back({m, std::move(prod), {}});
  }
  return out;
}

const char* dstep_name(DStep s) {
  switch (s) {
    case DStep::proc1r: return "proc1r";
    case DStep::proc3r: return "proc3r";
    case DStep::proc2r: return "proc2r";
    case DStep::proc2n: return "proc2n";
    case DStep::proc3n: return "proc3n";
  }
  return "?";
}

std::string DTrace::str() const {
  std::ostringstream os;
  for (size_t k = 0; k < vectors.size(); ++k) {
    if (k) os << " -" << dstep_name(steps[k - 1]) << "-> ";
    os << '(';
    for (size_t t = 0; t < vectors[k].size(); ++t) {
      if (t) os << ',';
      os << vectors[k][t];
    }
    os << ')';
  }
  if (terminal) os << " [" << dstep_name(*terminal) << ']';
  return os.str();
}

DTrace d_procedure(const std::vector<int>& l) {
  const int n = static_cast<int>(l.size());
  if (n < 1) throw std::invalid_argument("empty l");
  for (int i = 1; i <= n - 1; ++i)
    if (l[static_cast<size_t>(i - 1)] < i ||
        l[static_cast<size_t>(i - 1)] > 2 * n - 1 - i)
      throw std::invalid_argument("l out of range at position " +
                                  std::to_string(i));
  if (l[static_cast<size_t>(n - 1)] < n ||
      l[static_cast<size_t>(n - 1)] > 2 * n - 1)
    throw std::invalid_argument("l out of range at position " +
                                std::to_string(n));

  DTrace trace;
  std::vector<int> cur = l;
  trace.vectors.push_back(cur);
  while (cur.size() >= 2) {
    const int nu = static_cast<int>(cur.size());
    const int first = cur.front(), last = cur.back();
    std::vector<int> next;
    DStep label;
    if (last < 2 * nu - 1) {
      label = (first <= nu) ? DStep::proc1r : DStep::proc3r;
      for (int k = 1; k < nu; ++k)
        next.push_back(cur[static_cast<size_t>(k)] - 1);
    } else if (first <= nu - 1) {
      label = DStep::proc2r;
      for (int k = 1; k < nu - 1; ++k)
        next.push_back(cur[static_cast<size_t>(k)] - 1);
      next.push_back(first + nu - 2);
    } else {
      trace.terminal = (first == nu) ? DStep::proc2n : DStep::proc3n;
      break;
    }
    trace.steps.push_back(label);
    trace.vectors.push_back(next);
    cur = std::move(next);
  }
  return trace;
}

Poly d_alpha(const DTrace& trace, int i, int j, const RootTable& table) {
  const int n = static_cast<int>(trace.vectors.front().size());
  const int nv = table.nvars();
  if (table.type.family != LieFamily::D || n != table.type.rank)
    throw std::invalid_argument("trace/table mismatch");
  if (i == n) {
    const int r = 2 * n - j;
    if (r < 1 || r > n - 1) throw std::out_of_range("chain index");
    if (trace.transition_is(r, DStep::proc3r))
      return Poly::variable(nv, r);  // x_r
    return table.root(n, j).linear_form();
  }
  if (i < 1 || i > n - 1 || j < i + 1 || j > 2 * n - 1 - i)
    throw std::out_of_range("chain index");
  const int k = n - j + i;
  if (k > i && trace.transition_is(i, DStep::proc2r)) {
    if (trace.transition_is(k, DStep::proc3r)) return Poly::variable(nv, k);
    if (trace.transition_is(k, DStep::proc1r)) {
      Poly p = Poly::variable(nv, i);
      return p - Poly::variable(nv, k);
    }
  }
  return table.root(i, j).linear_form();
}

Poly d_alpha(const std::vector<int>& l, int i, int j, const RootTable& table) {
  return d_alpha(d_procedure(l), i, j, table);
}

std::vector<BasisElement> basis_elements_D(const HessFn& h,
                                           const RootTable& table) {
  require_valid(h);
  if (h.type.family != LieFamily::D)
    throw std::invalid_argument("basis_elements_D needs a type D function");
  const int nv = h.type.nvars();
  std::vector<BasisElement> out;
  for (auto& m : exponent_vectors(h)) {
    std::vector<int> l(m.size());
    for (size_t t = 0; t < m.size(); ++t) l[t] = h.values[t] - m[t];
    DTrace trace = d_procedure(l);
    Poly prod = Poly::constant(nv, 1);
    for (int i = 1; i <= h.n(); ++i)
      for (int s = 0; s < m[static_cast<size_t>(i - 1)]; ++s)
        prod *= d_alpha(trace, i, h(i) - s, table);
    out.push_back({m, std::move(prod), {}});
  }
  return out;
}

BasisReport verify_basis(const QuotientRing& qr,
                         std::vector<BasisElement>& elements) {
  BasisReport rep;
  rep.count = static_cast<long>(elements.size());
  rep.dim = qr.dim();
  RatMatrix cols;
  cols.reserve(elements.size());
  for (BasisElement& el : elements) {
    el.coords = coordinates(el.poly, qr);
    cols.push_back(el.coords);
  }
  rep.rank = rank_exact(cols);
  rep.is_basis = (rep.count == rep.dim && rep.rank == rep.dim);
  return rep;
}

}  // namespace hessberg
