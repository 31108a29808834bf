#include "hessberg/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hessberg {

char family_letter(LieFamily f) {
  switch (f) {
    case LieFamily::A: return 'A';
    case LieFamily::B: return 'B';
    case LieFamily::C: return 'C';
    case LieFamily::D: return 'D';
    case LieFamily::G: return 'G';
  }
  return '?';
}

int LieType::nvars() const {
  switch (family) {
    case LieFamily::A: return rank + 1;
    case LieFamily::B:
    case LieFamily::C:
    case LieFamily::D: return rank;
    case LieFamily::G: return 3;
  }
  return 0;
}

std::string LieType::name() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

void check_supported(const LieType& type) {
  switch (type.family) {
    case LieFamily::A:
      if (type.rank < 1) throw std::invalid_argument("unsupported type");
      break;
    case LieFamily::B:
    case LieFamily::C:
      if (type.rank < 1) throw std::invalid_argument("unsupported type");
      break;
    case LieFamily::D:
      if (type.rank < 2) throw std::invalid_argument("unsupported type");
      break;
    case LieFamily::G:
      if (type.rank != 2) throw std::invalid_argument("unsupported type");
      break;
    default:
      throw std::invalid_argument("unsupported type");
  }
  if (type.nvars() > kMaxVars) throw std::invalid_argument("unsupported type");
}

Poly PositiveRoot::linear_form() const {
  return Poly::linear(static_cast<int>(coeffs.size()), coeffs);
}

const PositiveRoot& RootTable::root(int i, int j) const {
  const auto& chain = chains.at(static_cast<size_t>(i - 1));
  int pos = j - i - 1;
  if (pos < 0 || pos >= static_cast<int>(chain.size()))
    throw std::out_of_range("chain index (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range");
  return chain[static_cast<size_t>(pos)];
}

size_t RootTable::root_count() const {
  size_t n = 0;
  for (const auto& c : chains) n += c.size();
  return n;
}

std::vector<const PositiveRoot*> RootTable::all_roots() const {
  std::vector<const PositiveRoot*> out;
  out.reserve(root_count());
  for (const auto& c : chains)
    for (const auto& r : c) out.push_back(&r);
  return out;
}

std::vector<const PositiveRoot*> RootTable::simple_roots() const {
  std::vector<const PositiveRoot*> out;
  for (const auto& c : chains)
    if (!c.empty()) out.push_back(&c.front());
  return out;
}

namespace {

PositiveRoot make_root(int nvars, int i, int j,
                       std::initializer_list<std::pair<int, int>> entries) {
  PositiveRoot r;
  r.coeffs.assign(static_cast<size_t>(nvars), 0);
  r.row = i;
  r.col = j;
  for (auto [var, c] : entries) r.coeffs[static_cast<size_t>(var - 1)] += c;
  return r;
}

}  // namespace

RootTable build_root_table(const LieType& type) {
  check_supported(type);
  RootTable table;
  table.type = type;
  const int nv = type.nvars();
  table.chains.resize(static_cast<size_t>(nv));

  switch (type.family) {
    case LieFamily::A: {
      const int n = nv;  // A_{n-1} in n variables
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          table.chains[i - 1].push_back(make_root(nv, i, j, {{i, 1}, {j, -1}}));
      break;
    }
    case LieFamily::B: {
      const int n = type.rank;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= 2 * n + 1 - i; ++j) {
          if (j <= n)
            table.chains[i - 1].push_back(
                make_root(nv, i, j, {{i, 1}, {j, -1}}));
          else if (j == n + 1)
            table.chains[i - 1].push_back(make_root(nv, i, j, {{i, 1}}));
          else
            table.chains[i - 1].push_back(
                make_root(nv, i, j, {{i, 1}, {2 * n + 2 - j, 1}}));
        }
      break;
    }
    case LieFamily::C: {
      const int n = type.rank;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= 2 * n + 1 - i; ++j) {
          if (j <= n)
            table.chains[i - 1].push_back(
                make_root(nv, i, j, {{i, 1}, {j, -1}}));
          else if (j <= 2 * n - i)
            table.chains[i - 1].push_back(
                make_root(nv, i, j, {{i, 1}, {2 * n + 1 - j, 1}}));
          else  // j == 2n+1-i
            table.chains[i - 1].push_back(make_root(nv, i, j, {{i, 2}}));
        }
      break;
    }
    case LieFamily::D: {
      const int n = type.rank;
      for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 1; j <= 2 * n - 1 - i; ++j) {
          if (j <= n)
            table.chains[i - 1].push_back(
                make_root(nv, i, j, {{i, 1}, {j, -1}}));
          else
            table.chains[i - 1].push_back(
                make_root(nv, i, j, {{i, 1}, {2 * n - j, 1}}));
        }
      for (int j = n + 1; j <= 2 * n - 1; ++j)
        table.chains[n - 1].push_back(
            make_root(nv, n, j, {{2 * n - j, 1}, {n, 1}}));
      break;
    }
    case LieFamily::G: {
      auto& c1 = table.chains[0];
      c1.push_back(make_root(3, 1, 2, {{1, 1}, {2, -1}}));
      c1.push_back(make_root(3, 1, 3, {{1, -1}, {3, 1}}));
      c1.push_back(make_root(3, 1, 4, {{2, -1}, {3, 1}}));
      c1.push_back(make_root(3, 1, 5, {{1, 1}, {2, -2}, {3, 1}}));
      c1.push_back(make_root(3, 1, 6, {{1, -1}, {2, -1}, {3, 2}}));
      table.chains[1].push_back(make_root(3, 2, 3, {{1, -2}, {2, 1}, {3, 1}}));
      break;
    }
  }
  return table;
}

namespace {

// exact solve S*c = v where S has the simple roots as columns; returns false
// if inconsistent
bool solve_simple_basis(const std::vector<const PositiveRoot*>& simples,
                        const std::vector<int>& v, std::vector<Rat>& c) {
  const size_t rows = v.size(), cols = simples.size();
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t k = 0; k < cols; ++k) m[r][k] = simples[k]->coeffs[r];
    m[r][cols] = v[r];
  }
  size_t pr = 0;
  std::vector<int> pivot_col(rows, -1);
  for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
    size_t sel = pr;
    while (sel < rows && m[sel][pc] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[pr]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == pr || m[r][pc] == 0) continue;
      Rat f = m[r][pc] / m[pr][pc];
      for (size_t k = pc; k <= cols; ++k) m[r][k] -= f * m[pr][k];
    }
    pivot_col[pr] = static_cast<int>(pc);
    ++pr;
  }
  for (size_t r = pr; r < rows; ++r)
    if (m[r][cols] != 0) return false;
  c.assign(cols, Rat(0));
  for (size_t r = 0; r < pr; ++r)
    c[static_cast<size_t>(pivot_col[r])] =
        m[r][cols] / m[r][static_cast<size_t>(pivot_col[r])];
  return true;
}

}  // namespace

int height(const PositiveRoot& root, const RootTable& table) {
  const PositiveRoot& own = table.root(root.row, root.col);
  if (!(own == root))
    throw std::invalid_argument("root does not belong to the table");
  auto simples = table.simple_roots();
  std::vector<Rat> c;
  if (!solve_simple_basis(simples, root.coeffs, c))
    throw std::runtime_error(
        "internal consistency: root is not in the simple-root span");
  long h = 0;
  for (const Rat& q : c) {
    if (q.get_den() != 1 || q < 0)
      throw std::runtime_error(
          "internal consistency: root has non-nonnegative-integer "
          "simple-root coordinates");
    h += q.get_num().get_si();
  }
  return static_cast<int>(h);
}

Int parabolic_weyl_order(const RootTable& table, const LowerIdeal& ideal) {
  // rows whose simple root alpha_{i,i+1} lies in the ideal
  std::vector<int> nodes;
  for (size_t ci = 0; ci < table.chains.size(); ++ci) {
    int i = static_cast<int>(ci) + 1;
    if (!table.chains[ci].empty() && ideal.contains(i, i + 1))
      nodes.push_back(i);
  }
  if (nodes.empty()) return 1;

  const LieFamily fam = table.type.family;
  const int n = (fam == LieFamily::G) ? 2 : table.type.rank;
  auto adjacent = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    switch (fam) {
      case LieFamily::A: return b == a + 1;
      case LieFamily::B:
      case LieFamily::C: return b == a + 1;
      case LieFamily::D:
        if (b == n) return a == n - 2;  // fork edge
        return b == a + 1 && b <= n - 1;
      case LieFamily::G: return a == 1 && b == 2;
    }
    return false;
  };

  std::map<int, bool> seen;
  for (int v : nodes) seen[v] = false;
  Int order = 1;
  for (int start : nodes) {
    if (seen[start]) continue;
    std::vector<int> comp{start};
    seen[start] = true;
    for (size_t qi = 0; qi < comp.size(); ++qi)
      for (int w : nodes)
        if (!seen[w] && adjacent(comp[qi], w)) {
          seen[w] = true;
          comp.push_back(w);
        }
    const long k = static_cast<long>(comp.size());
    auto has = [&](int v) {
      return std::find(comp.begin(), comp.end(), v) != comp.end();
    };
    switch (fam) {
      case LieFamily::A:
        order *= factorial(k + 1);
        break;
      case LieFamily::B:
      case LieFamily::C:
        // the double edge (n-1,n) lies inside iff both its ends do
        if (has(n - 1) && has(n))
          order *= pow2(k) * factorial(k);
        else
          order *= factorial(k + 1);
        break;
      case LieFamily::D:
        if (has(n - 1) && has(n))
          order *= pow2(k - 1) * factorial(k);
        else
          order *= factorial(k + 1);
        break;
      case LieFamily::G:
        order *= (k == 2) ? Int(12) : Int(2);
        break;
    }
  }
  return order;
}

}  // namespace hessberg
