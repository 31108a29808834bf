#include <doctest.h>

#include <algorithm>
#include <set>

#include "hessberg/hessfn.hpp"

using namespace hessberg;

namespace {

// independent root-order oracle: alpha <= beta iff beta - alpha is a
// nonnegative integer combination of simple roots (exact rational solve,
// written here so it shares nothing with the library path)
bool root_leq(const std::vector<int>& a, const std::vector<int>& b,
              const std::vector<std::vector<int>>& simples) {
  const size_t rows = a.size(), cols = simples.size();
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) m[r][c] = simples[c][r];
    m[r][cols] = b[r] - a[r];
  }
  size_t pr = 0;
  std::vector<int> piv(rows, -1);
  for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
    size_t s = pr;
    while (s < rows && m[s][pc] == 0) ++s;
    if (s == rows) continue;
    std::swap(m[s], m[pr]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == pr || m[r][pc] == 0) continue;
      Rat f = m[r][pc] / m[pr][pc];
      for (size_t c = pc; c <= cols; ++c) m[r][c] -= f * m[pr][c];
    }
    piv[pr] = static_cast<int>(pc);
    ++pr;
  }
  for (size_t r = pr; r < rows; ++r)
    if (m[r][cols] != 0) return false;
  for (size_t r = 0; r < pr; ++r) {
    Rat v = m[r][cols] / m[r][static_cast<size_t>(piv[r])];
    if (v < 0 || v.get_den() != 1) return false;
  }
  return true;
}

// every chain-prefix set is downward closed iff its value vector validates:
// the oracle walks all prefix combinations, not just the enumerated ones
void check_ideal_bijection(const LieType& type) {
  RootTable table = build_root_table(type);
  std::vector<std::vector<int>> simples;
  for (const PositiveRoot* s : table.simple_roots()) simples.push_back(s->coeffs);
  auto roots = table.all_roots();
  const int nv = type.nvars();

  std::vector<int> counts(static_cast<size_t>(nv), 0);
  while (true) {
    LowerIdeal ideal;
    HessFn h{type, {}};
    for (int i = 1; i <= nv; ++i) {
      int c = counts[static_cast<size_t>(i - 1)];
      for (int j = i + 1; j <= i + c; ++j) ideal.members.insert({i, j});
      h.values.push_back(i + c);
    }
    bool closed = true;
    for (const PositiveRoot* beta : roots) {
      if (!closed) break;
      if (!ideal.contains(beta->row, beta->col)) continue;
      for (const PositiveRoot* alpha : roots) {
        if (alpha == beta) continue;
        if (root_leq(alpha->coeffs, beta->coeffs, simples) &&
            !ideal.contains(alpha->row, alpha->col)) {
          closed = false;
          break;
        }
      }
    }
    CHECK(validate(h).ok == closed);

    int i = nv - 1;
    for (; i >= 0; --i) {
      if (counts[static_cast<size_t>(i)] < table.exponent(i + 1)) {
        ++counts[static_cast<size_t>(i)];
        break;
      }
      counts[static_cast<size_t>(i)] = 0;
    }
    if (i < 0) break;
  }
}

}  // namespace

TEST_CASE("validity per type") {
  CHECK(validate({{LieFamily::A, 4}, {3, 5, 5, 5, 5}}).ok);
  CHECK(validate({{LieFamily::D, 4}, {3, 5, 4, 7}}).ok);

  ValidityReport bad = validate({{LieFamily::D, 4}, {5, 4, 3, 4}});
  CHECK_FALSE(bad.ok);
  CHECK(std::count(bad.violated.begin(), bad.violated.end(), 5) == 1);

  CHECK_FALSE(validate({{LieFamily::A, 2}, {2, 1, 3}}).ok);
  CHECK_FALSE(validate({{LieFamily::G, 2}, {4, 2, 3}}).ok);  // coupling (2)
  CHECK_FALSE(validate({{LieFamily::G, 2}, {1, 2, 2}}).ok);
  CHECK_THROWS_AS(validate({{LieFamily::A, 2}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("to_ideal: the A4 example ideal") {
  HessFn h{{LieFamily::A, 4}, {3, 5, 5, 5, 5}};
  LowerIdeal ideal = to_ideal(h);
  CHECK(ideal.size() == 8);  // = complex dimension
  CHECK(ideal.contains(1, 2));
  CHECK(ideal.contains(1, 3));
  CHECK_FALSE(ideal.contains(1, 4));
  CHECK(ideal.contains(2, 5));
  CHECK(ideal.contains(4, 5));
}

TEST_CASE("to_ideal: the D4 example ideal") {
  HessFn h{{LieFamily::D, 4}, {3, 5, 4, 7}};
  LowerIdeal ideal = to_ideal(h);
  CHECK(ideal.contains(4, 7));       // x1+x4
  CHECK_FALSE(ideal.contains(1, 6)); // x1+x2
  CHECK(ideal.contains(2, 5));       // x2+x3
  CHECK(ideal.size() == static_cast<size_t>(complex_dimension(h)));
}

TEST_CASE("from_ideal inverts to_ideal") {
  RootTable g2 = build_root_table({LieFamily::G, 2});
  HessFn full{{LieFamily::G, 2}, {6, 3, 3}};
  CHECK(from_ideal(to_ideal(full), g2) == full);

  RootTable a2 = build_root_table({LieFamily::A, 2});
  HessFn min_a{{LieFamily::A, 2}, {1, 2, 3}};
  CHECK(to_ideal(min_a).size() == 0);
  CHECK(from_ideal(LowerIdeal{}, a2) == min_a);
}

TEST_CASE("from_ideal rejects non-ideals") {
  RootTable a2 = build_root_table({LieFamily::A, 2});
  LowerIdeal gap;
  gap.members.insert({1, 3});  // chain 1 membership skips (1,2)
  CHECK_THROWS_WITH_AS(from_ideal(gap, a2),
                       doctest::Contains("not a lower ideal"),
                       std::invalid_argument);
  // prefix on each chain but not downward closed across chains:
  // {x1-x2, x1-x3} without x2-x3 gives h=(3,2,3), not monotone
  LowerIdeal cross;
  cross.members.insert({1, 2});
  cross.members.insert({1, 3});
  CHECK_THROWS_WITH_AS(from_ideal(cross, a2),
                       doctest::Contains("not a lower ideal"),
                       std::invalid_argument);
}

TEST_CASE("round-trip on every desk-scale instance") {
  for (const LieType& t :
       {LieType{LieFamily::A, 3}, LieType{LieFamily::B, 3},
        LieType{LieFamily::C, 2}, LieType{LieFamily::D, 4},
        LieType{LieFamily::G, 2}}) {
    RootTable table = build_root_table(t);
    for (const HessFn& h : enumerate_all(t)) {
      CHECK(from_ideal(to_ideal(h), table) == h);
      CHECK(to_ideal(h).size() == static_cast<size_t>(complex_dimension(h)));
    }
  }
}

TEST_CASE("enumerations") {
  auto a2 = enumerate_all({LieFamily::A, 2});
  std::vector<std::vector<int>> got;
  for (const HessFn& h : a2) got.push_back(h.values);
  CHECK(got == std::vector<std::vector<int>>{
                   {1, 2, 3}, {1, 3, 3}, {2, 2, 3}, {2, 3, 3}, {3, 3, 3}});

  auto g2 = enumerate_all({LieFamily::G, 2});
  std::vector<std::vector<int>> gotg;
  for (const HessFn& h : g2) gotg.push_back(h.values);
  CHECK(gotg == std::vector<std::vector<int>>{{1, 2, 3},
                                              {1, 3, 3},
                                              {2, 2, 3},
                                              {2, 3, 3},
                                              {3, 3, 3},
                                              {4, 3, 3},
                                              {5, 3, 3},
                                              {6, 3, 3}});

  CHECK(enumerate_all({LieFamily::A, 1}).size() == 2);
  // Catalan numbers for type A
  CHECK(enumerate_all({LieFamily::A, 3}).size() == 14);
  CHECK(enumerate_all({LieFamily::A, 4}).size() == 42);
  CHECK(enumerate_all({LieFamily::A, 5}).size() == 132);
  CHECK(enumerate_all({LieFamily::B, 2}).size() == 6);
  CHECK(enumerate_all({LieFamily::B, 3}).size() == 20);
  CHECK(enumerate_all({LieFamily::C, 3}).size() == 20);
  CHECK(enumerate_all({LieFamily::D, 2}).size() == 4);
  CHECK(enumerate_all({LieFamily::D, 3}).size() == 14);
  CHECK(enumerate_all({LieFamily::D, 4}).size() == 50);
  CHECK(enumerate_all({LieFamily::D, 5}).size() == 182);
}

TEST_CASE("sub-function enumeration") {
  HessFn minimal{{LieFamily::A, 2}, {1, 2, 3}};
  auto subs = enumerate_sub(minimal);
  CHECK(subs.size() == 1);
  CHECK(subs[0] == minimal);

  HessFn flag{{LieFamily::A, 2}, {3, 3, 3}};
  CHECK(enumerate_sub(flag).size() == 5);

  HessFn mid{{LieFamily::A, 2}, {2, 3, 3}};
  auto m = enumerate_sub(mid);
  CHECK(m.size() == 4);
  for (const HessFn& s : m) CHECK_FALSE(s.values == std::vector<int>{3, 3, 3});
}

TEST_CASE("sub-functions always include the minimal function") {
  for (const LieType& t :
       {LieType{LieFamily::B, 3}, LieType{LieFamily::D, 4}}) {
    std::vector<int> minimal;
    for (int i = 1; i <= t.nvars(); ++i) minimal.push_back(i);
    for (const HessFn& h : enumerate_all(t)) {
      auto subs = enumerate_sub(h);
      CHECK(std::count_if(subs.begin(), subs.end(), [&](const HessFn& s) {
              return s.values == minimal;
            }) == 1);
      CHECK(std::count(subs.begin(), subs.end(), h) == 1);
    }
  }
}

TEST_CASE("sub-function sets are closed under ideal intersection") {
  for (const LieType& t :
       {LieType{LieFamily::A, 3}, LieType{LieFamily::D, 4},
        LieType{LieFamily::G, 2}}) {
    RootTable table = build_root_table(t);
    for (const HessFn& h : enumerate_all(t)) {
      auto subs = enumerate_sub(h);
      for (size_t a = 0; a < subs.size(); ++a)
        for (size_t b = a + 1; b < subs.size(); ++b) {
          LowerIdeal ia = to_ideal(subs[a]), ib = to_ideal(subs[b]);
          LowerIdeal meet;
          for (const auto& m : ia.members)
            if (ib.members.count(m)) meet.members.insert(m);
          HessFn hm = from_ideal(meet, table);  // must be a lower ideal
          CHECK(std::count(subs.begin(), subs.end(), hm) == 1);
        }
    }
  }
}

TEST_CASE("complex dimension") {
  CHECK(complex_dimension({{LieFamily::A, 2}, {1, 2, 3}}) == 0);
  CHECK(complex_dimension({{LieFamily::A, 4}, {3, 5, 5, 5, 5}}) == 8);
  CHECK(complex_dimension({{LieFamily::G, 2}, {6, 3, 3}}) == 6);
}

TEST_CASE("hessenberg functions are exactly the lower ideals") {
  check_ideal_bijection({LieFamily::A, 3});
  check_ideal_bijection({LieFamily::B, 3});
  check_ideal_bijection({LieFamily::C, 3});
  check_ideal_bijection({LieFamily::D, 4});
  check_ideal_bijection({LieFamily::G, 2});
}

TEST_CASE("text form parses back") {
  HessFn h = parse_hessfn("D4:3,5,4,7");
  CHECK(h.type.family == LieFamily::D);
  CHECK(h.values == std::vector<int>{3, 5, 4, 7});
  CHECK(h.text() == "D4:3,5,4,7");
  CHECK(parse_hessfn("A4:3,5,5,5,5").n() == 5);
  CHECK(parse_hessfn("G2:6,3,3").type.nvars() == 3);
  CHECK_THROWS_AS(parse_hessfn("A4:1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hessfn("X4:1,2,3,4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hessfn("A4"), std::invalid_argument);
}
