#pragma once

// Evidence scan for the semi-latin trivial-idempotent question: each
// catalogue entry is validated, filtered by semi-latinness, then searched in
// a coefficient box and modulo a few primes. Results only ever speak about
// the searched scope.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "search.hpp"
#include "structure.hpp"

namespace qring {

struct CatalogEntry {
  std::string name;
  Table table;
  std::vector<std::string> labels;
};

struct ScanSpec {
  std::int64_t box_bound = 2;
  std::vector<std::int64_t> primes;
  std::optional<std::size_t> max_support;
  std::uint64_t budget = 100'000'000;
  unsigned jobs = 1;
};

struct ScanRun {
  std::string ring;  // "Z" or "Zmod:p"
  std::optional<IdempotentReport<std::size_t>> report;
  std::vector<Element> nontrivial;
  std::string status;
};

struct ScanItem {
  std::string name;
  std::string status;  // "rejected", "skipped", "scanned"
  std::string detail;
  bool latin = false;
  bool semi_latin = false;
  std::vector<ScanRun> runs;
};

struct ScanReport {
  std::vector<ScanItem> items;
  bool counterexample_found = false;
};

inline ScanReport conjecture_scan(const std::vector<CatalogEntry>& catalog, const ScanSpec& spec) {
  ScanReport rep;
  for (const auto& entry : catalog) {
    ScanItem item;
    item.name = entry.name;
    std::optional<FiniteQuandle> X;
    try {
      X = FiniteQuandle::validate(entry.table, entry.labels);
    } catch (const Error& e) {
      item.status = "rejected";
      item.detail = std::string(errc_name(e.code())) + ": " + e.what();
      rep.items.push_back(std::move(item));
      continue;
    }
    const auto props = properties(*X);
    item.latin = props.latin;
    item.semi_latin = props.semi_latin;
    if (!props.semi_latin) {
      item.status = "skipped";
      item.detail = "not semi-latin";
      rep.items.push_back(std::move(item));
      continue;
    }
    item.status = "scanned";
    auto run = [&](std::optional<std::int64_t> p) {
      ScanRun r;
      SearchSpec s;
      s.box_bound = spec.box_bound;
      s.max_support = spec.max_support;
      s.budget = spec.budget;
      s.jobs = spec.jobs;
      try {
        r.report = p ? enumerate_mod_p(X->magma(), *p, s, entry.name) : enumerate_boxed_Z(X->magma(), s, entry.name);
        r.ring = r.report->spec.ring.name();
        for (const auto& u : r.report->idempotents)
          if (!is_trivial_idempotent(u)) r.nontrivial.push_back(u);
        if (!p)
          r.status = r.nontrivial.empty() ? "no counterexample within box" : "counterexample";
        else  // a mod-p idempotent need not lift to Z
          r.status = r.nontrivial.empty() ? "no counterexample within modulus" : "nontrivial idempotents mod p";
        rep.counterexample_found = rep.counterexample_found || (!r.nontrivial.empty() && !p);
      } catch (const Error& e) {
        if (!e.is_budget()) throw;
        r.ring = p ? "Zmod:" + std::to_string(*p) : "Z";
        r.status = "skipped: budget exceeded";
      }
      item.runs.push_back(std::move(r));
    };
    run(std::nullopt);
    for (std::int64_t p : spec.primes) run(p);
    rep.items.push_back(std::move(item));
  }
  return rep;
}

}  // namespace qring
