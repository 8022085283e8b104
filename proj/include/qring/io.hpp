#pragma once

// JSON forms used by the command-line tool and the fixtures.
//   quandle:  {"order": n, "table": [[...]], "labels": [...]}
//   hom:      {"images": [...]}
//   element:  {"ring": "Z" | "Q" | "Zmod:m", "coeffs": [[key, "c"], ...]}
// Free-quandle keys are expression strings such as "g0*g1^-1".

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "families.hpp"
#include "fq_search.hpp"
#include "linear.hpp"
#include "quandle.hpp"
#include "scan.hpp"
#include "search.hpp"

namespace qring::io {

using Json = nlohmann::ordered_json;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, path + ": " + e.what());
  }
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, e.what());
  }
}

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(Errc::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(Errc::ParseError, std::string("bad field '") + key + "'");
  }
}

// ---- quandles

inline Json to_json(const Magma& m) {
  Json j;
  j["order"] = m.order();
  j["table"] = m.table();
  if (!m.labels().empty()) j["labels"] = m.labels();
  return j;
}
inline Json to_json(const FiniteQuandle& X) { return to_json(X.magma()); }

/// Raw table and labels; checks only shape.
inline Magma magma_from_json(const Json& j) {
  auto table = get<Table>(j, "table");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = get<std::vector<std::string>>(j, "labels");
  if (j.contains("order") && get<std::size_t>(j, "order") != table.size())
    fail(Errc::ParseError, "order does not match the table");
  return Magma(table, std::move(labels));
}

inline FiniteQuandle quandle_from_json(const Json& j) {
  Magma m = magma_from_json(j);
  return FiniteQuandle::validate(m.table(), m.labels());
}

// ---- scalars and elements

inline Json scalar_json(const Scalar& s) { return CoeffRing::format(s); }

inline Scalar scalar_from_json(const Json& j, const CoeffRing& ring) {
  if (j.is_number_integer()) return ring.normalize(Scalar(j.get<long>()));
  if (j.is_string()) return ring.parse_scalar(j.get<std::string>());
  fail(Errc::ParseError, "coefficient must be an integer or a string");
}

inline std::string key_string(std::size_t k) { return std::to_string(k); }
inline std::string key_string(const FreeQuandleElement& k) { return to_string(k); }

template <class Key>
Json to_json(const RingElement<Key>& u) {
  Json j;
  j["ring"] = u.ring().name();
  Json c = Json::array();
  for (const auto& [k, v] : u.terms()) {
    if constexpr (std::is_same_v<Key, std::size_t>)
      c.push_back(Json::array({k, scalar_json(v)}));
    else
      c.push_back(Json::array({key_string(k), scalar_json(v)}));
  }
  j["coeffs"] = std::move(c);
  return j;
}

/// "2e0 - e3", or with labels "2e[1] - e[4]".
template <class Key>
std::string display(const RingElement<Key>& u, const std::vector<std::string>& labels = {}) {
  if (u.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : u.terms()) {
    Scalar a = c;
    if (!first) {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    } else if (a < 0) {
      s += "-";
      a = -a;
    }
    first = false;
    if (a != 1) s += a.get_str();
    std::string key;
    if constexpr (std::is_same_v<Key, std::size_t>)
      key = labels.empty() ? std::to_string(k) : "[" + labels.at(k) + "]";
    else
      key = "[" + to_string(k) + "]";
    s += "e" + key;
  }
  return s;
}

inline CoeffRing ring_from_json(const Json& j) { return CoeffRing::parse(get<std::string>(j, "ring")); }

inline Element element_from_json(const Json& j, std::optional<CoeffRing> ring = std::nullopt) {
  CoeffRing r = ring ? *ring : (j.contains("ring") ? ring_from_json(j) : CoeffRing::integers());
  std::vector<Element::Term> t;
  for (const auto& pair : get<Json>(j, "coeffs")) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned())
      fail(Errc::ParseError, "coefficient entries are [index, value]");
    t.emplace_back(pair[0].get<std::size_t>(), scalar_from_json(pair[1], r));
  }
  return Element::from_terms(r, std::move(t));
}

inline FreeElement free_element_from_json(const Json& j, std::size_t rank) {
  CoeffRing r = j.contains("ring") ? ring_from_json(j) : CoeffRing::integers();
  std::vector<FreeElement::Term> t;
  for (const auto& pair : get<Json>(j, "coeffs")) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string())
      fail(Errc::ParseError, "coefficient entries are [expression, value]");
    t.emplace_back(parse_element(pair[0].get<std::string>(), rank), scalar_from_json(pair[1], r));
  }
  return FreeElement::from_terms(r, std::move(t));
}

// ---- homs, matrices

inline Json to_json(const QuandleHom& h) { return Json{{"images", h.images()}}; }

inline std::vector<std::size_t> images_from_json(const Json& j) { return get<std::vector<std::size_t>>(j, "images"); }

inline Json to_json(const SquareMatrix& M) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < M.dimension(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < M.dimension(); ++c) row.push_back(scalar_json(M.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---- covering family parameters

inline Json coeffs_json(const Coeffs& c) {
  Json a = Json::array();
  for (const auto& [x, v] : c) a.push_back(Json::array({x, scalar_json(v)}));
  return a;
}

inline Coeffs coeffs_from_json(const Json& j, const CoeffRing& ring) {
  Coeffs c;
  if (!j.is_array()) fail(Errc::ParseError, "coefficient list must be an array");
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned())
      fail(Errc::ParseError, "coefficient entries are [index, value]");
    c.emplace_back(pair[0].get<std::size_t>(), scalar_from_json(pair[1], ring));
  }
  return c;
}

inline Json to_json(const CoveringFamilyParams& p) {
  Json j;
  j["ring"] = p.ring.name();
  Json J = Json::array();
  for (const auto& b : p.blocks) J.push_back(Json{{"y", b.y}, {"alphas", coeffs_json(b.alphas)}});
  j["J"] = std::move(J);
  j["y0"] = p.y0;
  j["I_y0"] = coeffs_json(p.unit_block);
  j["x0"] = p.x0;
  return j;
}

inline CoveringFamilyParams params_from_json(const Json& j) {
  CoveringFamilyParams p;
  p.ring = j.contains("ring") ? ring_from_json(j) : CoeffRing::integers();
  if (j.contains("J"))
    for (const auto& b : j.at("J")) p.blocks.push_back({get<std::size_t>(b, "y"), coeffs_from_json(get<Json>(b, "alphas"), p.ring)});
  p.y0 = get<std::size_t>(j, "y0");
  p.unit_block = coeffs_from_json(get<Json>(j, "I_y0"), p.ring);
  p.x0 = get<std::size_t>(j, "x0");
  return p;
}

// ---- reports

inline Json to_json(const SearchSpec& s) {
  Json j;
  j["ring"] = s.ring.name();
  if (s.ring.kind() == CoeffRing::Kind::Integers) j["box_bound"] = s.box_bound;
  j["max_support"] = s.max_support ? Json(*s.max_support) : Json("all");
  j["augmentation"] = s.augmentation.describe();
  j["budget"] = s.budget;
  return j;
}

template <class Key>
Json to_json(const IdempotentReport<Key>& r, bool timing = false) {
  Json j;
  j["quandle"] = r.quandle;
  j["spec"] = to_json(r.spec);
  Json list = Json::array();
  for (const auto& u : r.idempotents) list.push_back(to_json(u));
  j["idempotents"] = std::move(list);
  j["count"] = r.idempotents.size();
  j["nontrivial_count"] = r.nontrivial_count();
  j["exhaustive"] = r.exhaustive;
  j["flags"] = r.flags;
  j["candidates_tested"] = r.candidates_tested;
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline Json to_json(const ScanReport& r, bool timing = false) {
  Json items = Json::array();
  for (const auto& it : r.items) {
    Json j;
    j["name"] = it.name;
    j["status"] = it.status;
    if (!it.detail.empty()) j["detail"] = it.detail;
    if (it.status == "scanned") {
      j["latin"] = it.latin;
      j["semi_latin"] = it.semi_latin;
      Json runs = Json::array();
      for (const auto& run : it.runs) {
        Json rj;
        rj["ring"] = run.ring;
        rj["status"] = run.status;
        if (run.report) {
          rj["idempotent_count"] = run.report->idempotents.size();
          rj["candidates_tested"] = run.report->candidates_tested;
          rj["flags"] = run.report->flags;
          if (timing) rj["elapsed_ms"] = run.report->elapsed_ms;
        }
        Json nt = Json::array();
        for (const auto& u : run.nontrivial) nt.push_back(to_json(u));
        rj["nontrivial"] = std::move(nt);
        runs.push_back(std::move(rj));
      }
      j["runs"] = std::move(runs);
    }
    items.push_back(std::move(j));
  }
  return Json{{"items", std::move(items)}, {"counterexample_found", r.counterexample_found}};
}

namespace detail {

inline bool flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  return std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive() || (e.is_array() && flat(e) && e.size() <= 4); });
}

inline void write(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' '), in(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += in + Json(it.key()).dump() + ": ";
      write(out, it.value(), indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else if (j.is_array() && !j.empty() && !flat(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += in;
      write(out, j[i], indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace detail

/// Two-space indented JSON with short arrays kept on one line.
inline std::string dump(const Json& j) {
  std::string out;
  detail::write(out, j, 0);
  return out + "\n";
}

}  // namespace qring::io
