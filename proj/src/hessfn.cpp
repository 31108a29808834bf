#include "hessberg/hessfn.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hessberg {

std::string HessFn::text() const {
  std::ostringstream os;
  os << type.name() << ':';
  for (size_t k = 0; k < values.size(); ++k) {
    if (k) os << ',';
    os << values[k];
  }
  return os.str();
}

HessFn parse_hessfn(const std::string& spec) {
  auto bad = [&](const std::string& why) {
    throw std::invalid_argument("bad Hessenberg spec \"" + spec + "\": " + why);
  };
  size_t pos = 0;
  while (pos < spec.size() && std::isspace(static_cast<unsigned char>(spec[pos])))
    ++pos;
  if (pos >= spec.size()) bad("empty");
  LieFamily fam;
  switch (std::toupper(static_cast<unsigned char>(spec[pos]))) {
    case 'A': fam = LieFamily::A; break;
    case 'B': fam = LieFamily::B; break;
    case 'C': fam = LieFamily::C; break;
    case 'D': fam = LieFamily::D; break;
    case 'G': fam = LieFamily::G; break;
    default: bad("unknown family letter"); return {};
  }
  ++pos;
  size_t colon = spec.find(':', pos);
  if (colon == std::string::npos) bad("missing ':'");
  int rank = 0;
  try {
    rank = std::stoi(spec.substr(pos, colon - pos));
  } catch (const std::exception&) {
    bad("bad rank");
  }
  LieType type{fam, rank};
  check_supported(type);
  HessFn h{type, {}};
  std::string rest = spec.substr(colon + 1);
  std::istringstream is(rest);
  std::string item;
  while (std::getline(is, item, ',')) {
    try {
      h.values.push_back(std::stoi(item));
    } catch (const std::exception&) {
      bad("bad value \"" + item + "\"");
    }
  }
  if (h.n() != type.nvars()) throw std::invalid_argument("arity error");
  return h;
}

std::string ValidityReport::message() const {
  if (ok) return "ok";
  std::ostringstream os;
  os << "violates condition";
  if (violated.size() > 1) os << 's';
  for (size_t k = 0; k < violated.size(); ++k)
    os << (k ? ", (" : " (") << violated[k] << ")";
  return os.str();
}

ValidityReport validate(const HessFn& h) {
  check_supported(h.type);
  const int nv = h.type.nvars();
  if (h.n() != nv) throw std::invalid_argument("arity error");
  ValidityReport rep;
  auto flag = [&](int cond) {
    if (std::find(rep.violated.begin(), rep.violated.end(), cond) ==
        rep.violated.end())
      rep.violated.push_back(cond);
  };
  switch (h.type.family) {
    case LieFamily::A: {
      const int n = nv;
      for (int i = 1; i <= n; ++i)
        if (h(i) < 1 || h(i) > n) flag(0);
      for (int i = 1; i < n; ++i)
        if (h(i) > h(i + 1)) flag(1);
      for (int i = 1; i <= n; ++i)
        if (h(i) < i) flag(2);
      break;
    }
    case LieFamily::B:
    case LieFamily::C: {
      const int n = h.type.rank;
      for (int i = 1; i <= n; ++i)
        if (h(i) < i || h(i) > 2 * n + 1 - i) flag(1);
      for (int i = 1; i <= n - 1; ++i) {
        if (h(i) != 2 * n + 1 - i) {
          if (h(i) > h(i + 1)) flag(2);
        } else {
          if (h(i + 1) != 2 * n + 1 - (i + 1)) flag(3);
        }
      }
      break;
    }
    case LieFamily::D: {
      const int n = h.type.rank;
      for (int i = 1; i <= n - 1; ++i)
        if (h(i) < i || h(i) > 2 * n - 1 - i) flag(1);
      if (h(n) < n || h(n) > 2 * n - 1) flag(2);
      for (int i = 1; i <= n - 2; ++i) {
        if (h(i) != 2 * n - 1 - i) {
          if (h(i) > h(i + 1)) flag(3);
        } else {
          if (h(i + 1) != 2 * n - 1 - (i + 1)) flag(4);
        }
      }
      // (5) is vacuous at i = n-1: h(n-1) is n-1 or n there
      for (int i = 1; i <= n - 2; ++i)
        if (h(i) >= n + 1 && h(n) < 2 * n - i) flag(5);
      for (int i = 1; i <= n - 2; ++i)
        if (h(n) >= 2 * n - i && h(i) < n - 1) flag(6);
      break;
    }
    case LieFamily::G: {
      if (h(1) < 1 || h(1) > 6 || h(2) < 2 || h(2) > 3 || h(3) != 3) flag(1);
      if (h(1) >= 3 && h(2) != 3) flag(2);
      break;
    }
  }
  std::sort(rep.violated.begin(), rep.violated.end());
  rep.ok = rep.violated.empty();
  return rep;
}

LowerIdeal to_ideal(const HessFn& h) {
  ValidityReport rep = validate(h);
  if (!rep.ok)
    throw std::invalid_argument("invalid Hessenberg function " + h.text() +
                                ": " + rep.message());
  LowerIdeal ideal;
  for (int i = 1; i <= h.n(); ++i)
    for (int j = i + 1; j <= h(i); ++j) ideal.members.insert({i, j});
  return ideal;
}

HessFn from_ideal(const LowerIdeal& ideal, const RootTable& table) {
  const int nv = table.nvars();
  HessFn h{table.type, std::vector<int>(static_cast<size_t>(nv), 0)};
  for (int i = 1; i <= nv; ++i) {
    int count = 0, maxj = i;
    for (int j = i + 1; j <= i + table.exponent(i); ++j)
      if (ideal.contains(i, j)) {
        ++count;
        maxj = j;
      }
    if (maxj != i + count)
      throw std::invalid_argument(
          "not a lower ideal: chain " + std::to_string(i) +
          " membership is not a prefix");
    h.values[static_cast<size_t>(i - 1)] = i + count;
  }
  for (const auto& [i, j] : ideal.members)
    if (i < 1 || i > nv || j <= i || j > i + table.exponent(i))
      throw std::invalid_argument("not a lower ideal: index out of range");
  ValidityReport rep = validate(h);
  if (!rep.ok)
    throw std::invalid_argument(
        "not a lower ideal: induced function " + h.text() + " " +
        rep.message());
  return h;
}

std::vector<HessFn> enumerate_all(const LieType& type) {
  check_supported(type);
  const int nv = type.nvars();
  std::vector<HessFn> out;
  std::vector<int> vals;
  // value ranges per row; monotone couplings pruned on the fly, the global
  // (5)/(6) couplings of type D filtered by the final validate
  std::function<void(int)> rec = [&](int i) {
    if (i > nv) {
      HessFn h{type, vals};
      if (validate(h).ok) out.push_back(std::move(h));
      return;
    }
    int lo = i, hi = i;
    switch (type.family) {
      case LieFamily::A: hi = nv; break;
      case LieFamily::B:
      case LieFamily::C: hi = 2 * type.rank + 1 - i; break;
      case LieFamily::D:
        if (i < type.rank) {
          hi = 2 * type.rank - 1 - i;
        } else {
          lo = type.rank;
          hi = 2 * type.rank - 1;
        }
        break;
      case LieFamily::G:
        if (i == 1) {
          lo = 1; hi = 6;
        } else if (i == 2) {
          lo = 2; hi = 3;
        } else {
          lo = hi = 3;
        }
        break;
    }
    if (type.family == LieFamily::A && i > 1)
      lo = std::max(lo, vals[static_cast<size_t>(i - 2)]);
    for (int v = lo; v <= hi; ++v) {
      vals.push_back(v);
      rec(i + 1);
      vals.pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

bool includes(const HessFn& h, const HessFn& h_sub) {
  if (!(h.type == h_sub.type)) return false;
  LowerIdeal big = to_ideal(h), small = to_ideal(h_sub);
  return std::includes(big.members.begin(), big.members.end(),
                       small.members.begin(), small.members.end());
}

std::vector<HessFn> enumerate_sub(const HessFn& h) {
  ValidityReport rep = validate(h);
  if (!rep.ok)
    throw std::invalid_argument("invalid Hessenberg function " + h.text() +
                                ": " + rep.message());
  std::vector<HessFn> out;
  for (HessFn& cand : enumerate_all(h.type))
    if (includes(h, cand)) out.push_back(std::move(cand));
  return out;
}

long complex_dimension(const HessFn& h) {
  ValidityReport rep = validate(h);
  if (!rep.ok)
    throw std::invalid_argument("invalid Hessenberg function " + h.text() +
                                ": " + rep.message());
  long d = 0;
  for (int i = 1; i <= h.n(); ++i) d += h(i) - i;
  return d;
}

}  // namespace hessberg
