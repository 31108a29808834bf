#include "hessberg/suite.hpp"

#include <atomic>
#include <thread>

#include "hessberg/hash.hpp"

namespace hessberg {

std::vector<HessFn> covering_subs(const HessFn& h) {
  std::vector<HessFn> out;
  const long d = complex_dimension(h);
  for (HessFn& sub : enumerate_sub(h))
    if (complex_dimension(sub) == d - 1) out.push_back(std::move(sub));
  return out;
}

InstanceChecks run_instance_checks(const HessFn& h, const RootTable& table,
                                   QuotientCache& cache, uint64_t seed,
                                   int perm_tuples) {
  InstanceChecks c;
  c.h_text = h.text();
  auto qr = cache.get(h);
  c.dim = qr->dim();

  c.hilbert_match = (qr->hilbert == product_formula_series(h));

  long prod = 1;
  for (int i = 1; i <= h.n(); ++i) prod *= h(i) - i + 1;
  c.dim_product = (c.dim == prod);

  const long top = complex_dimension(h);
  c.palindromic = (static_cast<long>(qr->hilbert.size()) == top + 1);
  for (long d = 0; d <= top && c.palindromic; ++d)
    if (qr->hilbert[static_cast<size_t>(d)] !=
        qr->hilbert[static_cast<size_t>(top - d)])
      c.palindromic = false;

  if (h.type.family == LieFamily::D) {
    auto elems = basis_elements_D(h, table);
    c.basis_identity = verify_basis(*qr, elems).is_basis;
    c.random_perm_tuples = 0;
  } else {
    auto elems = basis_elements(identity_spec(h), table);
    c.basis_identity = verify_basis(*qr, elems).is_basis;
    c.random_perm_tuples = perm_tuples;
    std::mt19937_64 rng(seed ^ fnv1a64(c.h_text));
    for (int t = 0; t < perm_tuples && c.basis_random_perms; ++t) {
      auto relems = basis_elements(random_spec(h, rng), table);
      if (!verify_basis(*qr, relems).is_basis) c.basis_random_perms = false;
    }
  }

  IndependenceReport ir = verify_duals_independent(h, *qr, table);
  c.dual_count = ir.count;
  c.duals_independent = ir.independent;

  c.gysin_all_injective = true;
  for (const HessFn& sub : covering_subs(h)) {
    ++c.gysin_pairs;
    auto sub_qr = cache.get(sub);
    GysinReport gr = gysin_injective(*sub_qr, *qr, table);
    if (!gr.injective) c.gysin_all_injective = false;
  }
  return c;
}

SuiteReport run_suite(const LieType& type, uint64_t seed, int jobs,
                      int perm_tuples) {
  SuiteReport report;
  report.type = type;
  report.seed = seed;
  RootTable table = build_root_table(type);
  std::vector<HessFn> all = enumerate_all(type);
  report.results.resize(all.size());
  QuotientCache cache;

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t idx = next.fetch_add(1);
      if (idx >= all.size()) break;
      report.results[idx] =
          run_instance_checks(all[idx], table, cache, seed, perm_tuples);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  report.all_pass = true;
  for (const InstanceChecks& c : report.results)
    if (!c.pass()) report.all_pass = false;
  return report;
}

}  // namespace hessberg
