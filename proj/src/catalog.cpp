#include "permrel/catalog.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

#include "permrel/theorems.hpp"

namespace permrel {

json CatalogEntry::to_json() const {
  json j;
  j["n"]                   = n();
  j["generators"]          = group.generators_string();
  j["order"]               = order();
  j["abelian"]             = abelian;
  j["transitive"]          = transitive;
  j["semiregular"]         = semiregular;
  j["contains_full_cycle"] = contains_full_cycle;
  j["predicted_cancellative"]
      = predicted_cancellative ? json(*predicted_cancellative) : json(nullptr);
  return j;
}

CatalogEntry describe(PermutationGroup group) {
  CatalogEntry e;
  e.abelian             = is_abelian(group);
  e.transitive          = is_transitive(group);
  e.semiregular         = is_semiregular(group);
  e.contains_full_cycle = contains_full_cycle(group);
  if (e.abelian) {
    e.predicted_cancellative = predict_cancellative(group);
  }
  e.group = std::move(group);
  return e;
}

namespace {

bool commutes(Permutation const& x, PermutationGroup const& g) {
  return std::all_of(g.generators().begin(), g.generators().end(),
                     [&](Permutation const& y) {
                       return compose(x, y) == compose(y, x);
                     });
}

}  // namespace

std::vector<CatalogEntry> enumerate_abelian_subgroups(std::size_t n) {
  if (n < 2 || n > 5) {
    throw std::invalid_argument("abelian subgroup catalog supports 2 <= n <= 5");
  }
  auto const all = symmetric_group(n);
  std::set<std::vector<Permutation>> seen;
  std::vector<PermutationGroup>      found;
  std::deque<PermutationGroup>       queue;

  auto const start = trivial_group(n);
  seen.insert({start.elements().begin(), start.elements().end()});
  queue.push_back(start);
  while (!queue.empty()) {
    PermutationGroup g = std::move(queue.front());
    queue.pop_front();
    for (auto const& x : all.elements()) {
      if (g.contains(x) || !commutes(x, g)) {
        continue;
      }
      std::vector<Permutation> gens(g.generators().begin(), g.generators().end());
      gens.push_back(x);
      PermutationGroup h = generate(gens, n);
      if (seen.insert({h.elements().begin(), h.elements().end()}).second) {
        queue.push_back(h);
      }
    }
    found.push_back(std::move(g));
  }
  std::sort(found.begin(), found.end(),
            [](PermutationGroup const& a, PermutationGroup const& b) {
              if (a.order() != b.order()) {
                return a.order() < b.order();
              }
              return std::lexicographical_compare(
                  a.elements().begin(), a.elements().end(),
                  b.elements().begin(), b.elements().end());
            });
  std::vector<CatalogEntry> out;
  out.reserve(found.size());
  for (auto& g : found) {
    out.push_back(describe(std::move(g)));
  }
  return out;
}

PermutationGroup preset_group(std::string_view name, std::size_t n) {
  auto need_n = [&] {
    if (n == 0) {
      throw std::invalid_argument("preset '" + std::string(name)
                                  + "' needs -n");
    }
  };
  if (name == "trivial") {
    need_n();
    return trivial_group(n);
  }
  if (name == "cyclic") {
    need_n();
    return cyclic_group(n);
  }
  if (name == "klein4") {
    if (n != 0 && n != 4) {
      throw std::invalid_argument("preset klein4 has degree 4");
    }
    return klein_four();
  }
  if (name.substr(0, 3) == "sym" && name.size() > 3) {
    std::size_t degree = 0;
    for (char c : name.substr(3)) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
      }
      degree = degree * 10 + static_cast<std::size_t>(c - '0');
    }
    if (n != 0 && n != degree) {
      throw std::invalid_argument("preset " + std::string(name)
                                  + " has degree " + std::to_string(degree));
    }
    if (degree < 1 || degree > 8) {
      throw std::invalid_argument("symN presets support 1 <= N <= 8");
    }
    return symmetric_group(degree);
  }
  throw std::invalid_argument("unknown preset '" + std::string(name)
                              + "' (expected trivial, cyclic, klein4 or symN)");
}

}  // namespace permrel
