#pragma once

// Bounded idempotent search in Z[FQ_n]. Only the support of a candidate is
// restricted to short elements; its square is computed over the full free
// quandle, with products that leave the universe mapped to extra slots.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "free_quandle.hpp"
#include "search.hpp"

namespace qring {

using FreeElement = RingElement<FreeQuandleElement>;

inline ProductTable free_product_table(const std::vector<FreeQuandleElement>& universe) {
  std::map<FreeQuandleElement, std::uint32_t> slot;
  for (std::size_t i = 0; i < universe.size(); ++i) slot.emplace(universe[i], static_cast<std::uint32_t>(i));
  ProductTable t{universe.size(), universe.size(), {}};
  t.prod.resize(universe.size() * universe.size());
  for (std::size_t a = 0; a < universe.size(); ++a)
    for (std::size_t b = 0; b < universe.size(); ++b) {
      auto [it, fresh] = slot.emplace(fq_op(universe[a], universe[b]), static_cast<std::uint32_t>(t.slots));
      if (fresh) ++t.slots;
      t.prod[a * universe.size() + b] = it->second;
    }
  return t;
}

inline IdempotentReport<FreeQuandleElement> fq_idempotent_search(std::size_t rank, std::size_t max_len,
                                                                 std::size_t max_support, std::int64_t B,
                                                                 unsigned jobs = 1,
                                                                 std::uint64_t budget = 100'000'000) {
  const FreeQuandle F(rank);
  const auto universe = enumerate_elements(rank, max_len);
  SearchSpec spec;
  spec.ring = CoeffRing::integers();
  spec.box_bound = B;
  spec.max_support = std::min(max_support, universe.size());
  spec.jobs = jobs;
  spec.budget = budget;
  auto rep = support_search<FreeQuandleElement>(
      free_product_table(universe), universe, spec, "FQ_" + std::to_string(rank),
      [&](const FreeElement& u) { return is_idempotent(u, F); });
  rep.flags.push_back("scope: support elements of length <= " + std::to_string(max_len) + " (" +
                      std::to_string(universe.size()) + " elements)");
  return rep;
}

}  // namespace qring
