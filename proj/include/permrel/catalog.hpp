#pragma once

// Abelian subgroups of Sym_n for small n, and named presets.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permrel/permgroup.hpp"
#include "permrel/word.hpp"

namespace permrel {

struct CatalogEntry {
  PermutationGroup    group;
  bool                abelian             = false;
  bool                transitive          = false;
  bool                semiregular         = false;
  bool                contains_full_cycle = false;
  std::optional<bool> predicted_cancellative;  // abelian groups only

  [[nodiscard]] std::size_t n() const noexcept { return group.degree(); }
  [[nodiscard]] std::size_t order() const noexcept { return group.order(); }
  [[nodiscard]] json        to_json() const;
};

CatalogEntry describe(PermutationGroup group);

// Every abelian subgroup of Sym_n, 2 <= n <= 5, found by adjoining commuting
// elements one at a time from the trivial group. Each subgroup appears once,
// with the first generator list reached. Sorted by (order, elements).
std::vector<CatalogEntry> enumerate_abelian_subgroups(std::size_t n);

// "trivial", "cyclic", "klein4" (n = 4) and "symN". n may be 0 for "symN"
// and "klein4", where the name fixes the degree. Throws std::invalid_argument.
PermutationGroup preset_group(std::string_view name, std::size_t n);

}  // namespace permrel
