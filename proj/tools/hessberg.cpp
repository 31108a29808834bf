// hessberg: construct cohomology presentations of regular nilpotent
// Hessenberg varieties as exact polynomial quotient rings and verify the
// basis, Hilbert-series, Poincare-dual and Gysin properties at desk scale.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hessberg/hash.hpp"
#include "hessberg/json_io.hpp"
#include "hessberg/suite.hpp"
#include "hessberg/version.hpp"

using nlohmann::json;
using namespace hessberg;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

int ceiling_for(LieFamily fam) {
  switch (fam) {
    case LieFamily::A: return 5;
    case LieFamily::B:
    case LieFamily::C: return 4;
    case LieFamily::D: return 5;
    case LieFamily::G: return 2;
  }
  return 0;
}

void enforce_ceiling(const LieType& type, bool override_flag) {
  if (!override_flag && type.rank > ceiling_for(type.family))
    throw CLI::ValidationError("rank exceeds desk-scale ceiling (" +
                               type.name() + "); pass --ceiling-override");
}

// ceiling enforcement happens before supportedness so an oversized rank gets
// the desk-scale refusal rather than the engine limit
LieType parse_type(const std::string& letter, int rank, bool override_flag) {
  if (letter.size() != 1) throw CLI::ValidationError("bad --type");
  LieFamily fam;
  switch (std::toupper(static_cast<unsigned char>(letter[0]))) {
    case 'A': fam = LieFamily::A; break;
    case 'B': fam = LieFamily::B; break;
    case 'C': fam = LieFamily::C; break;
    case 'D': fam = LieFamily::D; break;
    case 'G': fam = LieFamily::G; rank = 2; break;
    default: throw CLI::ValidationError("bad --type");
  }
  LieType t{fam, rank};
  enforce_ceiling(t, override_flag);
  check_supported(t);
  return t;
}

// --h accepts both the text form "D4:3,5,4,7" and the JSON form
// {"type":"D","rank":4,"h":[3,5,4,7]}
HessFn parse_h_arg(const std::string& s) {
  size_t k = s.find_first_not_of(" \t");
  if (k != std::string::npos && s[k] == '{')
    return hessfn_from_json(json::parse(s));
  return parse_hessfn(s);
}

std::string coords_digest(const std::vector<Rat>& coords) {
  std::string blob;
  for (const Rat& q : coords) {
    blob += q.get_str();
    blob += ';';
  }
  std::ostringstream os;
  os << "0x" << std::hex << std::setw(16) << std::setfill('0')
     << fnv1a64(blob);
  return os.str();
}

struct Options {
  std::string h_spec;
  std::string sub_spec;
  std::string type_letter;
  int rank = 0;
  uint64_t seed = kDefaultSeed;
  uint64_t perm_seed = 0;
  bool perm_seed_set = false;
  int jobs = 0;
  bool as_json = false;
  bool dump = false;
  bool ceiling_override = false;
};

int resolve_jobs(const Options& opt) {
  if (opt.jobs > 0) return opt.jobs;
  if (const char* env = std::getenv("HESSBERG_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

void emit(const json& j, bool as_json, const std::string& fallback) {
  if (as_json)
    std::cout << j.dump() << '\n';
  else
    std::cout << fallback;
}

int cmd_roots(const Options& opt) {
  LieType type = parse_type(opt.type_letter, opt.rank, opt.ceiling_override);
  RootTable table = build_root_table(type);
  if (opt.as_json) {
    json j = root_table_json(table);
    j["version"] = kVersion;
    std::cout << j.dump() << '\n';
    return kExitPass;
  }
  std::cout << type.name() << ": " << table.root_count()
            << " positive roots\n";
  for (size_t ci = 0; ci < table.chains.size(); ++ci) {
    std::cout << "  chain " << ci + 1 << ":";
    for (const PositiveRoot& r : table.chains[ci])
      std::cout << "  a(" << r.row << ',' << r.col << ")="
                << r.linear_form().str();
    std::cout << '\n';
  }
  return kExitPass;
}

int cmd_hess(const Options& opt) {
  if (!opt.h_spec.empty()) {
    HessFn h = parse_h_arg(opt.h_spec);
    ValidityReport rep = validate(h);
    json j{{"version", kVersion},
           {"h", h.text()},
           {"valid", rep.ok},
           {"violated", rep.violated}};
    if (rep.ok) {
      j["dimension"] = complex_dimension(h);
      j["ideal_size"] = static_cast<long>(to_ideal(h).size());
      j["sub_functions"] = static_cast<long>(enumerate_sub(h).size());
    }
    std::ostringstream os;
    os << h.text() << ": " << rep.message();
    if (rep.ok)
      os << "  dim=" << complex_dimension(h)
         << " |I|=" << to_ideal(h).size()
         << " subs=" << enumerate_sub(h).size();
    os << '\n';
    emit(j, opt.as_json, os.str());
    return rep.ok ? kExitPass : kExitCheckFailure;
  }
  LieType type = parse_type(opt.type_letter, opt.rank, opt.ceiling_override);
  auto all = enumerate_all(type);
  json list = json::array();
  std::ostringstream os;
  for (const HessFn& h : all) {
    list.push_back(h.text());
    os << h.text() << '\n';
  }
  emit(json{{"version", kVersion},
            {"type", type.name()},
            {"count", all.size()},
            {"functions", list}},
       opt.as_json, os.str());
  return kExitPass;
}

int cmd_ideal(const Options& opt) {
  HessFn h = parse_h_arg(opt.h_spec);
  GeneratorSet gs = generators(h);
  json rows = json::array();
  std::ostringstream os;
  for (int i = 1; i <= h.n(); ++i) {
    const Poly& f = gs.gens[static_cast<size_t>(i - 1)];
    rows.push_back(
        {{"row", i}, {"degree", f.degree()}, {"poly", f.str()}});
    os << "f_" << i << ',' << h(i) << " (deg " << f.degree()
       << ") = " << f.str() << '\n';
  }
  emit(json{{"version", kVersion}, {"h", h.text()}, {"generators", rows}},
       opt.as_json, os.str());
  return kExitPass;
}

int cmd_hilbert(const Options& opt) {
  HessFn h = parse_h_arg(opt.h_spec);
  enforce_ceiling(h.type, opt.ceiling_override);
  QuotientRing qr = build_quotient(generators(h));
  auto series = hilbert_series(qr);
  auto formula = product_formula_series(h);
  bool match = (series == formula);
  json j{{"version", kVersion},
         {"h", h.text()},
         {"hilbert", series},
         {"product_formula", formula},
         {"match", match},
         {"dim", qr.dim()}};
  std::ostringstream os;
  os << h.text() << ": dim=" << qr.dim() << " hilbert=[";
  for (size_t k = 0; k < series.size(); ++k)
    os << (k ? "," : "") << series[k];
  os << "] match=" << (match ? "true" : "false") << '\n';
  emit(j, opt.as_json, os.str());
  return match ? kExitPass : kExitCheckFailure;
}

int cmd_basis(const Options& opt) {
  HessFn h = parse_h_arg(opt.h_spec);
  enforce_ceiling(h.type, opt.ceiling_override);
  RootTable table = build_root_table(h.type);
  QuotientRing qr = build_quotient(generators(h, table));

  std::vector<BasisElement> elems;
  std::vector<std::string> traces;
  const bool type_d = h.type.family == LieFamily::D;
  std::string perm_mode = "identity";
  if (type_d) {
    perm_mode = "none";
    elems = basis_elements_D(h, table);
    for (const BasisElement& el : elems) {
      std::vector<int> l(el.m.size());
      for (size_t t = 0; t < el.m.size(); ++t)
        l[t] = h.values[t] - el.m[t];
      traces.push_back(d_procedure(l).str());
    }
  } else if (opt.perm_seed_set) {
    std::mt19937_64 rng(opt.perm_seed);
    elems = basis_elements(random_spec(h, rng), table);
    perm_mode = "random";
  } else {
    elems = basis_elements(identity_spec(h), table);
  }

  BasisReport rep = verify_basis(qr, elems);
  json j{{"version", kVersion},
         {"h", h.text()},
         {"perms", perm_mode},
         {"seed", opt.perm_seed_set ? opt.perm_seed : 0},
         {"count", rep.count},
         {"dim", rep.dim},
         {"rank", rep.rank},
         {"is_basis", rep.is_basis}};
  std::ostringstream os;
  os << h.text() << ": count=" << rep.count << " dim=" << rep.dim
     << " rank=" << rep.rank
     << " is_basis=" << (rep.is_basis ? "true" : "false") << '\n';
  if (opt.dump) {
    json dump = json::array();
    for (size_t k = 0; k < elems.size(); ++k) {
      json e{{"m", elems[k].m}, {"poly", elems[k].poly.str()}};
      if (type_d) e["trace"] = traces[k];
      dump.push_back(std::move(e));
      os << "  m=(";
      for (size_t t = 0; t < elems[k].m.size(); ++t)
        os << (t ? "," : "") << elems[k].m[t];
      os << ") " << elems[k].poly.str();
      if (type_d) os << "   " << traces[k];
      os << '\n';
    }
    j["elements"] = std::move(dump);
  }
  emit(j, opt.as_json, os.str());
  return rep.is_basis ? kExitPass : kExitCheckFailure;
}

int cmd_pdual(const Options& opt) {
  HessFn h = parse_h_arg(opt.h_spec);
  enforce_ceiling(h.type, opt.ceiling_override);
  RootTable table = build_root_table(h.type);
  QuotientRing qr = build_quotient(generators(h, table));
  json classes = json::array();
  std::ostringstream os;
  RatMatrix cols;
  for (const HessFn& sub : enumerate_sub(h)) {
    DualClass dc = pdual_class(h, sub, table);
    dc.coords = coordinates(dc.product, qr);
    cols.push_back(dc.coords);
    long deg = dc.product.degree();
    classes.push_back({{"h_sub", sub.text()},
                       {"degree", deg},
                       {"scalar", dc.scalar.get_str()},
                       {"coords_fnv1a64", coords_digest(dc.coords)}});
    os << "  " << sub.text() << " deg=" << deg
       << " scalar=" << dc.scalar.get_str() << ' '
       << coords_digest(dc.coords) << '\n';
  }
  long rank = rank_exact(cols);
  bool independent = (rank == static_cast<long>(cols.size()));
  json j{{"version", kVersion},
         {"h", h.text()},
         {"classes", classes},
         {"count", cols.size()},
         {"rank", rank},
         {"independent", independent}};
  std::ostringstream head;
  head << h.text() << ": " << cols.size() << " duals, rank=" << rank
       << " independent=" << (independent ? "true" : "false") << '\n'
       << os.str();
  emit(j, opt.as_json, head.str());
  return independent ? kExitPass : kExitCheckFailure;
}

int cmd_gysin(const Options& opt) {
  HessFn h = parse_h_arg(opt.h_spec);
  enforce_ceiling(h.type, opt.ceiling_override);
  RootTable table = build_root_table(h.type);
  QuotientCache cache;
  auto amb = cache.get(h);
  std::vector<HessFn> subs;
  if (!opt.sub_spec.empty())
    subs.push_back(parse_h_arg(opt.sub_spec));
  else
    subs = covering_subs(h);
  json pairs = json::array();
  std::ostringstream os;
  bool all_ok = true;
  for (const HessFn& sub : subs) {
    auto sub_qr = cache.get(sub);
    GysinReport rep = gysin_injective(*sub_qr, *amb, table);
    all_ok = all_ok && rep.injective;
    pairs.push_back({{"h_sub", sub.text()},
                     {"dim_sub", rep.dim_sub},
                     {"dim_amb", rep.dim_amb},
                     {"rank", rep.rank},
                     {"degree_shift", rep.degree_shift},
                     {"injective", rep.injective}});
    os << "  " << sub.text() << " -> " << h.text() << ": rank=" << rep.rank
       << "/" << rep.dim_sub
       << " injective=" << (rep.injective ? "true" : "false") << '\n';
  }
  json j{{"version", kVersion},
         {"h", h.text()},
         {"pairs", pairs},
         {"all_injective", all_ok}};
  std::ostringstream head;
  head << h.text() << ": " << subs.size() << " Gysin maps\n" << os.str();
  emit(j, opt.as_json, head.str());
  return all_ok ? kExitPass : kExitCheckFailure;
}

int cmd_suite(const Options& opt) {
  LieType type = parse_type(opt.type_letter, opt.rank, opt.ceiling_override);
  SuiteReport report = run_suite(type, opt.seed, resolve_jobs(opt));
  json results = json::array();
  std::ostringstream os;
  for (const InstanceChecks& c : report.results) {
    results.push_back({{"h", c.h_text},
                       {"dim", c.dim},
                       {"hilbert_match", c.hilbert_match},
                       {"dim_product", c.dim_product},
                       {"palindromic", c.palindromic},
                       {"basis_identity", c.basis_identity},
                       {"random_perm_tuples", c.random_perm_tuples},
                       {"basis_random_perms", c.basis_random_perms},
                       {"dual_count", c.dual_count},
                       {"duals_independent", c.duals_independent},
                       {"gysin_pairs", c.gysin_pairs},
                       {"gysin_all_injective", c.gysin_all_injective},
                       {"pass", c.pass()}});
    os << (c.pass() ? "pass " : "FAIL ") << c.h_text << " dim=" << c.dim
       << '\n';
  }
  json j{{"version", kVersion},
         {"type", type.name()},
         {"seed", report.seed},
         {"results", results},
         {"all_pass", report.all_pass}};
  std::ostringstream head;
  head << "suite " << type.name() << ": " << report.results.size()
       << " Hessenberg functions, "
       << (report.all_pass ? "all checks pass" : "CHECK FAILURES") << '\n'
       << os.str();
  emit(j, opt.as_json, head.str());
  return report.all_pass ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cohomology rings of regular nilpotent Hessenberg "
               "varieties: bases, Poincare duals, Gysin maps"};
  app.set_help_flag("--help", "print help and exit");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options opt;
  int rc = kExitPass;

  auto add_common = [&](CLI::App* sub, bool with_h, bool with_type) {
    sub->set_help_flag("--help", "print help and exit");
    if (with_h)
      sub->add_option("--h", opt.h_spec, "Hessenberg function, e.g. D4:3,5,4,7");
    if (with_type) {
      sub->add_option("--type", opt.type_letter, "family letter A/B/C/D/G");
      sub->add_option("--rank", opt.rank, "rank (ignored for G)");
    }
    sub->add_flag("--json", opt.as_json, "machine-readable JSON output");
    sub->add_flag("--ceiling-override", opt.ceiling_override,
                  "lift the desk-scale rank ceiling");
  };

  CLI::App* roots = app.add_subcommand("roots", "positive-root table");
  add_common(roots, false, true);
  roots->callback([&] { rc = cmd_roots(opt); });

  CLI::App* hess =
      app.add_subcommand("hess", "validate or enumerate Hessenberg functions");
  add_common(hess, true, true);
  hess->callback([&] { rc = cmd_hess(opt); });

  CLI::App* ideal = app.add_subcommand("ideal", "defining ideal generators");
  add_common(ideal, true, false);
  ideal->callback([&] { rc = cmd_ideal(opt); });

  CLI::App* hilbert = app.add_subcommand(
      "hilbert", "Hilbert series against the product formula");
  add_common(hilbert, true, false);
  hilbert->callback([&] { rc = cmd_hilbert(opt); });

  CLI::App* basis =
      app.add_subcommand("basis", "construct and rank the candidate basis");
  add_common(basis, true, false);
  basis->add_option("--perm-seed", opt.perm_seed,
                    "seed for a random permutation tuple (A/B/C/G2)")
      ->each([&](const std::string&) { opt.perm_seed_set = true; });
  basis->add_flag("--dump", opt.dump, "print every element");
  basis->callback([&] { rc = cmd_basis(opt); });

  CLI::App* pdual =
      app.add_subcommand("pdual", "Poincare duals of all subfunctions");
  add_common(pdual, true, false);
  pdual->callback([&] { rc = cmd_pdual(opt); });

  CLI::App* gysin = app.add_subcommand("gysin", "Gysin multiplication maps");
  add_common(gysin, true, false);
  gysin->add_option("--sub", opt.sub_spec,
                    "single subfunction (default: all covering pairs)");
  gysin->callback([&] { rc = cmd_gysin(opt); });

  CLI::App* suite = app.add_subcommand(
      "suite", "run every check for every Hessenberg function of a type");
  add_common(suite, false, true);
  suite->add_option("--seed", opt.seed, "seed for randomized permutations");
  suite->add_option("--jobs", opt.jobs,
                    "parallel workers (HESSBERG_JOBS as fallback)");
  suite->callback([&] { rc = cmd_suite(opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return rc;
}
