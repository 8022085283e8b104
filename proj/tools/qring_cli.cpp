// qring: command-line front end for quandles, quandle rings and their
// idempotents. Reports are JSON on stdout (or -o), logs go to stderr.
// Exit codes: 0 success, 1 domain or input error, 2 budget exceeded.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qring/qring.hpp"

using namespace qring;
using io::Json;

namespace {

struct Common {
  std::string out;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t budget = 100'000'000;
  bool timing = false;
};

Common common;

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<std::size_t> index_list(const std::string& s) {
  std::vector<std::size_t> v;
  for (const auto& t : split(s)) {
    try {
      std::size_t pos = 0;
      long long x = std::stoll(t, &pos);
      if (pos != t.size() || x < 0) throw std::invalid_argument(t);
      v.push_back(static_cast<std::size_t>(x));
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad index '" + t + "'");
    }
  }
  return v;
}

std::vector<std::int64_t> int_list(const std::string& s) {
  std::vector<std::int64_t> v;
  for (const auto& t : split(s)) {
    try {
      std::size_t pos = 0;
      long long x = std::stoll(t, &pos);
      if (pos != t.size()) throw std::invalid_argument(t);
      v.push_back(x);
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad integer '" + t + "'");
    }
  }
  return v;
}

std::vector<Scalar> scalar_list(const std::string& s, const CoeffRing& ring) {
  std::vector<Scalar> v;
  for (const auto& t : split(s)) v.push_back(ring.parse_scalar(t));
  return v;
}

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

FiniteQuandle load_quandle(const std::string& path) { return io::quandle_from_json(io::read_json_file(path)); }
Magma load_magma(const std::string& path) { return io::magma_from_json(io::read_json_file(path)); }

Json load_json_arg(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return io::parse_json(arg);
  return io::read_json_file(arg);
}

/// An element given inline as "0:2,3:-1", as inline JSON, or as a JSON file.
Element load_element(const std::string& arg, const CoeffRing& ring, bool ring_given) {
  if (!arg.empty() && arg.find(':') != std::string::npos && arg.front() != '{' && !std::filesystem::exists(arg)) {
    std::vector<Element::Term> t;
    for (const auto& item : split(arg)) {
      auto colon = item.find(':');
      if (colon == std::string::npos) fail(Errc::ParseError, "element terms are index:coefficient");
      t.emplace_back(index_list(item.substr(0, colon)).at(0), ring.parse_scalar(item.substr(colon + 1)));
    }
    return Element::from_terms(ring, std::move(t));
  }
  Json j = load_json_arg(arg);
  return io::element_from_json(j, ring_given || !j.contains("ring") ? std::optional<CoeffRing>(ring) : std::nullopt);
}

CoeffRing parse_ring(const std::string& r, bool force_composite = false) { return CoeffRing::parse(r, force_composite); }

void emit(const Json& j) {
  const std::string text = io::dump(j);
  if (common.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(common.out);
    if (!f) fail(Errc::ParseError, "cannot write " + common.out);
    f << text;
  }
}

void log_time(const std::string& what, double ms) { std::cerr << "[qring] " << what << ": " << ms << " ms\n"; }

Json index_sets(const std::vector<IndexSet>& sets, const std::vector<std::string>& labels) {
  Json a = Json::array();
  for (const auto& s : sets) {
    if (labels.empty()) {
      a.push_back(s);
    } else {
      Json l = Json::array();
      for (std::size_t i : s) l.push_back(labels[i]);
      a.push_back(l);
    }
  }
  return a;
}

Json element_json(const Element& u, const std::vector<std::string>& labels = {}) {
  Json j = io::to_json(u);
  j["display"] = io::display(u, labels);
  j["augmentation"] = io::scalar_json(augmentation(u));
  return j;
}

Json magma_tag(Json j) {
  j["mode"] = "magma";
  j["tag"] = "not a quandle";
  return j;
}

Covering load_covering(const std::string& total, const std::string& base, const std::string& map) {
  return check_covering(QuandleHom(load_quandle(total), load_quandle(base), index_list(map)));
}

Json covering_json(const Covering& c) {
  Json j;
  j["covering"] = true;
  j["nontrivial"] = c.nontrivial();
  j["map"] = c.hom().images();
  j["fibers"] = c.fibers();
  return j;
}

// ---------------------------------------------------------------- quandle

void add_quandle(CLI::App& app) {
  auto* q = app.add_subcommand("quandle", "construct, validate and inspect finite quandles");
  q->require_subcommand(1);

  {
    auto* c = q->add_subcommand("check", "validate a quandle table");
    static std::string file;
    static bool as_magma = false;
    c->add_option("file", file, "quandle JSON")->required();
    c->add_flag("--as-magma", as_magma, "accept any square table; report quandle axioms separately");
    c->callback([] {
      if (!as_magma) {
        auto X = load_quandle(file);
        emit(Json{{"valid", true}, {"order", X.order()}});
        return;
      }
      Magma m = load_magma(file);
      Json j{{"order", m.order()}};
      try {
        FiniteQuandle::validate(m.table(), m.labels());
        j["quandle_axioms"] = Json{{"valid", true}};
      } catch (const Error& e) {
        j["quandle_axioms"] = Json{{"valid", false}, {"error", errc_name(e.code())}, {"where", e.where()},
                                   {"message", e.what()}};
      }
      emit(magma_tag(j));
    });
  }
  {
    auto* c = q->add_subcommand("make", "build a quandle: trivial N | dihedral N | core A.. | conj G.json | "
                                        "product X Y | union X.. | twisted-union X Y --f .. --g .. | cocycle C.json");
    static std::vector<std::string> args;
    static std::string f, g;
    static bool one_based = false;
    c->add_option("args", args, "kind followed by its parameters")->required();
    c->add_option("--f", f, "permutation of the first part (twisted-union)");
    c->add_option("--g", g, "permutation of the second part (twisted-union)");
    c->add_flag("--one-based-labels", one_based, "label elements 1..n");
    c->callback([] {
      const std::string kind = args.front();
      std::vector<std::string> rest(args.begin() + 1, args.end());
      auto need = [&](std::size_t k) {
        if (rest.size() < k) fail(Errc::InvalidParams, kind + " needs " + std::to_string(k) + " parameter(s)");
      };
      auto num = [&](const std::string& s) { return index_list(s).at(0); };
      std::optional<FiniteQuandle> X;
      if (kind == "trivial") {
        need(1);
        X = make::trivial(num(rest[0]));
      } else if (kind == "dihedral") {
        need(1);
        X = make::dihedral(num(rest[0]));
      } else if (kind == "core") {
        need(1);
        std::vector<std::size_t> fs;
        for (const auto& r : rest) fs.push_back(num(r));
        X = make::core(fs);
      } else if (kind == "conj") {
        need(1);
        X = make::conj(io::get<Table>(io::read_json_file(rest[0]), "table"));
      } else if (kind == "product") {
        need(2);
        X = make::product(load_quandle(rest[0]), load_quandle(rest[1]));
      } else if (kind == "union") {
        need(2);
        std::vector<FiniteQuandle> parts;
        for (const auto& r : rest) parts.push_back(load_quandle(r));
        X = make::disjoint_union(parts);
      } else if (kind == "twisted-union") {
        need(2);
        X = make::twisted_union(load_quandle(rest[0]), load_quandle(rest[1]), index_list(f), index_list(g));
      } else if (kind == "cocycle") {
        need(1);
        Json j = io::read_json_file(rest[0]);
        CocycleData d{io::quandle_from_json(io::get<Json>(j, "base")), io::get<std::size_t>(j, "group_order"),
                      io::get<std::vector<std::vector<std::size_t>>>(j, "alpha")};
        X = make::cocycle_extension(d);
      } else {
        fail(Errc::InvalidParams, "unknown kind '" + kind + "'");
      }
      if (one_based) X = X->with_labels(one_based_labels(X->order()));
      emit(io::to_json(*X));
    });
  }
  {
    auto* c = q->add_subcommand("props", "structural properties");
    static std::string file;
    c->add_option("file", file)->required();
    c->callback([] {
      auto X = load_quandle(file);
      auto p = properties(X);
      emit(Json{{"quandle", stem(file)},
                {"order", X.order()},
                {"connected", p.connected},
                {"latin", p.latin},
                {"semi_latin", p.semi_latin},
                {"medial", p.medial},
                {"faithful", p.faithful},
                {"involutory", p.involutory},
                {"finite_type_orders", p.finite_type_orders}});
    });
  }
  {
    auto* c = q->add_subcommand("subquandles", "trivial subquandles");
    static std::string file;
    static std::size_t max = 0;
    c->add_option("file", file)->required();
    c->add_option("--max", max, "largest size listed (default: order)");
    c->callback([] {
      auto X = load_quandle(file);
      const std::size_t m = max ? max : X.order();
      auto all = trivial_subquandles(X, m);
      auto maximal = maximal_trivial_subquandles(X);
      std::erase_if(maximal, [&](const IndexSet& s) { return s.size() > m; });
      std::map<std::size_t, std::size_t> by_size;
      for (const auto& s : all) ++by_size[s.size()];
      Json counts = Json::object();
      for (auto [k, v] : by_size) counts[std::to_string(k)] = v;
      emit(Json{{"quandle", stem(file)},
                {"max_size", m},
                {"maximal", index_sets(maximal, X.labels())},
                {"counts_by_size", counts},
                {"all", index_sets(all, X.labels())}});
    });
  }
  {
    auto* c = q->add_subcommand("orbits", "orbits of the inner automorphism group");
    static std::string file;
    c->add_option("file", file)->required();
    c->callback([] {
      auto X = load_quandle(file);
      emit(Json{{"quandle", stem(file)}, {"orbits", index_sets(inner_orbits(X), X.labels())}});
    });
  }
  {
    auto* c = q->add_subcommand("cocycle", "check a Z_a-valued quandle 2-cocycle");
    static std::string file;
    c->add_option("file", file, "{\"base\": quandle, \"group_order\": a, \"alpha\": [[..]]}")->required();
    c->callback([] {
      Json j = io::read_json_file(file);
      CocycleData d{io::quandle_from_json(io::get<Json>(j, "base")), io::get<std::size_t>(j, "group_order"),
                    io::get<std::vector<std::vector<std::size_t>>>(j, "alpha")};
      auto r = validate_cocycle(d);
      Json out{{"valid", r.valid}, {"involutory_compatible", r.involutory_compatible}};
      if (r.counterexample) out["counterexample"] = *r.counterexample;
      if (r.involutory_counterexample) out["involutory_counterexample"] = *r.involutory_counterexample;
      emit(out);
    });
  }
}

// ---------------------------------------------------------------- covering

struct CoveringArgs {
  std::string total, base, map;
};

void covering_opts(CLI::App* c, CoveringArgs& a, bool need_map = true) {
  c->add_option("--total", a.total, "total quandle JSON")->required();
  c->add_option("--base", a.base, "base quandle JSON")->required();
  auto* m = c->add_option("--map", a.map, "images, comma separated");
  if (need_map) m->required();
}

void add_covering(CLI::App& app) {
  auto* cv = app.add_subcommand("covering", "quandle coverings and their idempotent families");
  cv->require_subcommand(1);
  static CoveringArgs a;
  static std::string ring_s = "z", element, grid = "-1,0,1", alphas;
  static std::size_t max_j = 2, fiber = 0;

  {
    auto* c = cv->add_subcommand("check", "check that a map is a covering");
    covering_opts(c, a);
    c->callback([] { emit(covering_json(load_covering(a.total, a.base, a.map))); });
  }
  {
    auto* c = cv->add_subcommand("find", "all coverings from total onto base");
    covering_opts(c, a, false);
    c->callback([] {
      auto X = load_quandle(a.total), Y = load_quandle(a.base);
      auto cs = find_coverings(X, Y, common.budget, common.jobs);
      Json list = Json::array();
      for (const auto& c : cs) list.push_back(Json{{"map", c.hom().images()}, {"nontrivial", c.nontrivial()}});
      emit(Json{{"total", stem(a.total)}, {"base", stem(a.base)}, {"count", cs.size()}, {"coverings", list}});
    });
  }
  {
    auto* c = cv->add_subcommand("family-verify", "grid-certify idempotency of the covering family");
    covering_opts(c, a);
    c->add_option("--grid", grid, "grid values per free coefficient");
    c->add_option("--max-j", max_j, "largest |J| swept");
    c->add_option("--ring", ring_s, "z | q | zp:P");
    c->callback([] {
      auto cov = load_covering(a.total, a.base, a.map);
      FamilyVerifyOptions o;
      o.grid = int_list(grid);
      o.max_J = max_j;
      o.ring = parse_ring(ring_s);
      o.budget = common.budget;
      auto r = covering_family_verify(cov, o);
      Json j{{"verified", r.verified},
             {"certifies_all_coefficients", r.certifies_all_coefficients},
             {"grid", o.grid},
             {"max_J", o.max_J},
             {"structures", r.structures},
             {"members_checked", r.members_checked}};
      if (r.counterexample) j["counterexample"] = io::to_json(*r.counterexample);
      emit(j);
    });
  }
  {
    auto* c = cv->add_subcommand("classify", "decide membership of an idempotent in the covering family");
    covering_opts(c, a);
    c->add_option("--element", element, "element: index:coeff list, JSON, or JSON file")->required();
    c->add_option("--ring", ring_s, "z | q | zp:P");
    c->callback([] {
      auto cov = load_covering(a.total, a.base, a.map);
      auto u = load_element(element, parse_ring(ring_s), false);
      auto r = covering_classify(u, cov);
      Json j{{"element", element_json(u)}, {"in_family", r.in_family}, {"flags", r.flags}};
      if (r.params) j["params"] = io::to_json(*r.params);
      if (!r.in_family) j["reason"] = r.reason;
      emit(j);
    });
  }
  {
    auto* c = cv->add_subcommand("zero-divisor", "right zero-divisor supported on one fibre");
    covering_opts(c, a);
    c->add_option("--fiber", fiber, "base index y")->required();
    c->add_option("--alphas", alphas, "coefficients over the sorted fibre, summing to 0")->required();
    c->add_option("--ring", ring_s, "z | q | zp:P");
    c->callback([] {
      auto cov = load_covering(a.total, a.base, a.map);
      auto ring = parse_ring(ring_s);
      auto r = right_zero_divisor_from_fiber(cov, fiber, scalar_list(alphas, ring), ring);
      emit(Json{{"element", element_json(r.element)},
                {"verified", r.verified},
                {"basis_annihilates", r.basis_annihilates},
                {"right_mult_matrix_zero", r.matrix_zero}});
    });
  }
}

// ---------------------------------------------------------------- idem

struct EnumArgs {
  std::string ring = "z";
  std::int64_t bound = 0;
  std::string max_support = "all";
  std::string augmentation = "0,1";
  bool force_composite = false;
};

void enum_opts(CLI::App* c, EnumArgs& e) {
  c->add_option("--ring", e.ring, "z | zp:P");
  c->add_option("--bound", e.bound, "coefficient box B over Z");
  c->add_option("--max-support", e.max_support, "largest support size, or 'all'");
  c->add_option("--augmentation", e.augmentation, "strata to search: 0,1 | 0 | 1 | any");
  c->add_flag("--force-composite", e.force_composite, "allow Z/m with m composite (non-domain)");
}

SearchSpec make_spec(const EnumArgs& e) {
  SearchSpec s;
  s.ring = parse_ring(e.ring, e.force_composite);
  s.box_bound = e.bound;
  if (e.max_support != "all") s.max_support = index_list(e.max_support).at(0);
  if (e.augmentation == "any") {
    s.augmentation.any = true;
  } else {
    auto v = int_list(e.augmentation);
    s.augmentation.zero = std::find(v.begin(), v.end(), 0) != v.end();
    s.augmentation.one = std::find(v.begin(), v.end(), 1) != v.end();
  }
  s.budget = common.budget;
  s.jobs = common.jobs;
  return s;
}

IdempotentReport<std::size_t> run_enumeration(const Magma& m, const SearchSpec& s, const std::string& name) {
  if (s.ring.kind() == CoeffRing::Kind::IntegersMod)
    return enumerate_mod_p(m, s.ring.modulus(), s, name, !s.ring.is_domain());
  return enumerate_boxed_Z(m, s, name);
}

void add_idem(CLI::App& app) {
  auto* id = app.add_subcommand("idem", "idempotent enumeration and families");
  id->require_subcommand(1);
  static EnumArgs e;

  {
    auto* c = id->add_subcommand("enumerate", "all idempotents within a box or modulo p");
    static std::string file;
    static bool as_magma = false;
    c->add_option("file", file)->required();
    enum_opts(c, e);
    c->add_flag("--as-magma", as_magma, "run on a table that need not be a quandle");
    c->callback([] {
      Magma m = as_magma ? load_magma(file) : load_quandle(file).magma();
      auto rep = run_enumeration(m, make_spec(e), stem(file));
      log_time("enumerate " + stem(file), rep.elapsed_ms);
      Json j = io::to_json(rep, common.timing);
      emit(as_magma ? magma_tag(j) : j);
    });
  }
  {
    auto* c = id->add_subcommand("family", "covering family member from parameters");
    static CoveringArgs a;
    static std::string params;
    covering_opts(c, a);
    c->add_option("--params", params, "parameter JSON (file or inline)")->required();
    c->callback([] {
      auto cov = load_covering(a.total, a.base, a.map);
      auto p = io::params_from_json(load_json_arg(params));
      auto u = covering_idempotent(cov, p);
      emit(Json{{"params", io::to_json(p)}, {"element", element_json(u)}, {"idempotent", is_idempotent(u, cov.total())}});
    });
  }
  {
    auto* c = id->add_subcommand("even-dihedral", "even dihedral family member in k[R_2n]");
    static std::size_t n = 3, j = 0;
    static std::string beta = "1", alphas, ring_s = "z";
    c->add_option("--n", n, "odd n")->required();
    c->add_option("--j", j, "0 <= j < n")->required();
    c->add_option("--beta", beta);
    c->add_option("--alphas", alphas, "m+1 values")->required();
    c->add_option("--ring", ring_s);
    c->callback([] {
      auto ring = parse_ring(ring_s);
      auto u = dihedral_even_family(n, j, ring.parse_scalar(beta), scalar_list(alphas, ring), ring);
      emit(Json{{"quandle", "R" + std::to_string(2 * n)}, {"element", element_json(u)}, {"idempotent", true}});
    });
  }
  {
    auto* c = id->add_subcommand("union", "union-quandle idempotent families");
    static std::vector<std::string> parts;
    static int kind = 1;
    static std::vector<std::string> elements;
    static std::string alphas, ring_s = "z";
    static std::size_t unit_part = 0;
    static bool cross = false;
    static EnumArgs ce;
    c->add_option("--parts", parts, "part quandle files")->required()->delimiter(',');
    c->add_option("--kind", kind, "1 weighted idempotents | 2 nilpotent perturbation | 3 component mass");
    c->add_option("--alphas", alphas, "one weight per part (kinds 1, 3)");
    c->add_option("--elements", elements, "one part-local element per part (kinds 1, 2)");
    c->add_option("--unit-part", unit_part, "part carrying the idempotent (kind 2)");
    c->add_option("--ring", ring_s);
    c->add_flag("--cross-check", cross, "also enumerate the union ring and list idempotents outside all families");
    c->add_option("--check-ring", ce.ring, "cross-check ring: z | zp:P");
    c->add_option("--check-bound", ce.bound, "cross-check box over Z");
    c->callback([] {
      std::vector<FiniteQuandle> qs;
      for (const auto& p : parts) qs.push_back(load_quandle(p));
      auto ring = parse_ring(ring_s);
      UnionParams p;
      if (!alphas.empty()) p.alphas = scalar_list(alphas, ring);
      for (const auto& s : elements) p.parts.push_back(load_element(s, ring, true));
      p.unit_part = unit_part;
      auto u = union_idempotents(qs, static_cast<UnionKind>(kind), p, ring);
      Json j{{"kind", kind}, {"element", element_json(u)}, {"idempotent", true}};
      if (cross) {
        auto r = union_cross_check(qs, make_spec(ce));
        Json gap = Json::array();
        for (const auto& g : r.observed_gap) gap.push_back(element_json(g));
        j["cross_check"] = Json{{"enumeration", io::to_json(r.enumeration, common.timing)},
                                {"observed_gap", gap},
                                {"status", r.observed_gap.empty() ? "no gap observed" : "observed gap"}};
      }
      emit(j);
    });
  }
  {
    auto* c = id->add_subcommand("twisted-union", "classify idempotents of a twisted union of trivial quandles");
    static std::size_t n = 0, m = 0;
    static std::string f, g;
    c->add_option("--n", n, "order of X")->required();
    c->add_option("--m", m, "order of Y")->required();
    c->add_option("--f", f, "permutation of X")->required();
    c->add_option("--g", g, "permutation of Y")->required();
    enum_opts(c, e);
    c->callback([] {
      auto r = twisted_union_classify(n, m, index_list(f), index_list(g), make_spec(e));
      Json missing = Json::array(), extra = Json::array();
      for (const auto& u : r.missing) missing.push_back(io::to_json(u));
      for (const auto& u : r.extra) extra.push_back(io::to_json(u));
      emit(Json{{"n", n},
                {"m", m},
                {"classification", r.description},
                {"classified_in_scope", r.members.size()},
                {"enumerated", r.enumeration.idempotents.size()},
                {"cross_check", r.cross_check},
                {"missing", missing},
                {"extra", extra},
                {"enumeration", io::to_json(r.enumeration, common.timing)}});
    });
  }
  {
    auto* c = id->add_subcommand("scan", "search semi-latin quandles for nontrivial idempotents");
    static std::vector<std::string> files;
    static std::int64_t bound = 2;
    static std::string primes, max_support = "all";
    c->add_option("files", files, "quandle JSON files")->required();
    c->add_option("--bound", bound);
    c->add_option("--primes", primes, "moduli, comma separated");
    c->add_option("--max-support", max_support);
    c->callback([] {
      std::vector<CatalogEntry> cat;
      for (const auto& f : files) {
        Magma m = load_magma(f);
        cat.push_back({stem(f), m.table(), m.labels()});
      }
      ScanSpec s;
      s.box_bound = bound;
      s.primes = int_list(primes);
      if (max_support != "all") s.max_support = index_list(max_support).at(0);
      s.budget = common.budget;
      s.jobs = common.jobs;
      emit(io::to_json(conjecture_scan(cat, s), common.timing));
    });
  }
  {
    auto* c = id->add_subcommand("fq-search", "bounded idempotent search in Z[FQ_n]");
    static std::size_t rank = 2, max_len = 3, max_support = 3;
    static std::int64_t bound = 2;
    c->add_option("--rank", rank);
    c->add_option("--max-len", max_len);
    c->add_option("--max-support", max_support);
    c->add_option("--bound", bound);
    c->callback([] {
      auto rep = fq_idempotent_search(rank, max_len, max_support, bound, common.jobs, common.budget);
      log_time("fq-search", rep.elapsed_ms);
      emit(io::to_json(rep, common.timing));
    });
  }
  {
    auto* c = id->add_subcommand("core3", "supports of size <= 3 in Z[Core(G)]");
    static std::string factors;
    static std::int64_t bound = 2;
    c->add_option("--factors", factors, "cyclic factor orders")->required();
    c->add_option("--bound", bound);
    c->callback([] {
      auto r = core_three_support_check(index_list(factors), bound, common.jobs, common.budget);
      Json nt = Json::array();
      for (const auto& u : r.nontrivial) nt.push_back(io::to_json(u));
      emit(Json{{"factors", r.factors},
                {"nontrivial", nt},
                {"status", r.nontrivial.empty() ? "none found" : "nontrivial idempotent found"},
                {"enumeration", io::to_json(r.enumeration, common.timing)}});
    });
  }
  {
    auto* c = id->add_subcommand("quandle-check", "do these idempotents form a quandle under multiplication?");
    static std::string file, sample, ring_s = "z";
    c->add_option("file", file)->required();
    c->add_option("--sample", sample, "JSON list of elements (file or inline)")->required();
    c->add_option("--ring", ring_s);
    c->callback([] {
      auto X = load_quandle(file);
      auto ring = parse_ring(ring_s);
      Json j = load_json_arg(sample);
      if (j.is_object()) j = io::get<Json>(j, "elements");
      std::vector<Element> els;
      for (const auto& e : j) els.push_back(io::element_from_json(e, e.contains("ring") ? std::nullopt : std::optional(ring)));
      auto r = idempotent_quandle_check(els, X);
      emit(Json{{"sample_size", r.sample_size},
                {"idempotency", r.idempotency},
                {"closure", r.closure},
                {"self_distributivity", r.self_distributivity},
                {"right_translation_is_basis", r.right_translation_is_basis},
                {"all_pass", r.all_pass()},
                {"failure_count", r.failure_count},
                {"failures", r.failures}});
    });
  }
}

// ---------------------------------------------------------------- ring

void add_ring(CLI::App& app) {
  auto* rg = app.add_subcommand("ring", "arithmetic in k[X]");
  rg->require_subcommand(1);
  static std::string file, ring_s = "z", u_s, v_s, w_s;
  static bool as_magma = false;

  auto base = [](CLI::App* c) {
    c->add_option("file", file, "quandle (or, with --as-magma, any square table)")->required();
    c->add_option("--ring", ring_s, "z | q | zp:P");
    c->add_flag("--as-magma", as_magma, "skip quandle validation; output is tagged");
  };
  auto carrier = [] { return as_magma ? load_magma(file) : load_quandle(file).magma(); };
  auto labels_of = [](const Magma& m) { return m.labels(); };
  auto finish = [](Json j) { emit(as_magma ? magma_tag(std::move(j)) : std::move(j)); };

  {
    auto* c = rg->add_subcommand("mul", "u v");
    base(c);
    c->add_option("--u", u_s)->required();
    c->add_option("--v", v_s)->required();
    c->callback([=] {
      Magma m = carrier();
      auto ring = parse_ring(ring_s);
      auto u = load_element(u_s, ring, true), v = load_element(v_s, ring, true);
      finish(Json{{"u", element_json(u, labels_of(m))},
                  {"v", element_json(v, labels_of(m))},
                  {"product", element_json(mul(u, v, m), labels_of(m))}});
    });
  }
  {
    auto* c = rg->add_subcommand("idempotent", "is u idempotent?");
    base(c);
    c->add_option("--u", u_s)->required();
    c->callback([=] {
      Magma m = carrier();
      auto u = load_element(u_s, parse_ring(ring_s), true);
      finish(Json{{"u", element_json(u, labels_of(m))},
                  {"square", element_json(mul(u, u, m), labels_of(m))},
                  {"idempotent", is_idempotent(u, m)}});
    });
  }
  {
    auto* c = rg->add_subcommand("distributivity", "compare (u v) w with (u w)(v w)");
    base(c);
    c->add_option("--u", u_s)->required();
    c->add_option("--v", v_s)->required();
    c->add_option("--w", w_s)->required();
    c->callback([=] {
      Magma m = carrier();
      auto ring = parse_ring(ring_s);
      auto u = load_element(u_s, ring, true), v = load_element(v_s, ring, true), w = load_element(w_s, ring, true);
      auto lhs = mul(mul(u, v, m), w, m), rhs = mul(mul(u, w, m), mul(v, w, m), m);
      finish(Json{{"(uv)w", element_json(lhs, labels_of(m))},
                  {"(uw)(vw)", element_json(rhs, labels_of(m))},
                  {"equal", lhs == rhs}});
    });
  }
  {
    auto* c = rg->add_subcommand("matrix", "matrix of w -> w u (column k = e_k u)");
    base(c);
    c->add_option("--u", u_s)->required();
    c->callback([=] {
      Magma m = carrier();
      auto u = load_element(u_s, parse_ring(ring_s), true);
      auto M = right_mult_matrix(u, m);
      finish(Json{{"u", element_json(u, labels_of(m))}, {"matrix", io::to_json(M)}, {"zero", M.is_zero()}});
    });
  }
  {
    auto* c = rg->add_subcommand("annihilator", "non-zero w with w u = 0, if any");
    base(c);
    c->add_option("--u", u_s)->required();
    c->callback([=] {
      Magma m = carrier();
      auto u = load_element(u_s, parse_ring(ring_s), true);
      auto r = has_nontrivial_right_annihilator(u, m);
      Json j{{"u", element_json(u, labels_of(m))}, {"has_right_annihilator", r.answer}};
      if (r.witness) j["witness"] = element_json(*r.witness, labels_of(m));
      finish(j);
    });
  }
  {
    auto* c = rg->add_subcommand("endomorphism", "is w -> w u a ring endomorphism?");
    base(c);
    c->add_option("--u", u_s)->required();
    c->callback([=] {
      Magma m = carrier();
      auto u = load_element(u_s, parse_ring(ring_s), true);
      finish(Json{{"u", element_json(u, labels_of(m))}, {"endomorphism", is_ring_endomorphism(u, m)}});
    });
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qring: quandles, quandle rings and idempotents"};
  app.require_subcommand(1);
  app.add_option("-o,--output", common.out, "write the report here instead of stdout");
  app.add_option("--jobs", common.jobs, "worker threads (output does not depend on this)");
  app.add_option("--budget", common.budget, "candidate evaluations allowed per search");
  app.add_flag("--timing", common.timing, "include elapsed_ms in reports");
  app.fallthrough();
  add_quandle(app);
  add_covering(app);
  add_idem(app);
  add_ring(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << io::Json{{"error", errc_name(e.code())}, {"message", e.what()}, {"where", e.where()}}.dump() << "\n";
    return e.is_budget() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << io::Json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
