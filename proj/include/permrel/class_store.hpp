#pragma once

// Memo of congruence classes shared by all class-based queries of a Monoid.
// Every member word indexes its class. Capacity is counted in member words;
// when it is exceeded the least recently used classes are evicted until the
// store is back to three quarters of capacity.
//
// Lookups take a shared lock and bump an atomic recency stamp; inserts and
// evictions take the exclusive lock.

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "permrel/rewrite.hpp"

namespace permrel {

class ClassStore {
 public:
  explicit ClassStore(std::size_t capacity_words)
      : capacity_(capacity_words) {}

  std::shared_ptr<CongruenceClass const> find(Word const& w) const;
  // Returns the stored class; if another thread inserted the same class
  // first, that one is returned.
  std::shared_ptr<CongruenceClass const>
  insert(std::shared_ptr<CongruenceClass const> cls);

  [[nodiscard]] std::size_t size_words() const;
  [[nodiscard]] std::size_t capacity() const noexcept { return capacity_; }

 private:
  struct Slot {
    std::shared_ptr<CongruenceClass const> cls;
    mutable std::atomic<std::uint64_t>     stamp{0};
  };

  void evict_locked();

  std::size_t                                               capacity_;
  std::size_t                                               size_words_ = 0;
  mutable std::shared_mutex                                 mutex_;
  mutable std::atomic<std::uint64_t>                        clock_{0};
  std::unordered_map<Word, std::shared_ptr<Slot>, WordHash> index_;
  std::vector<std::shared_ptr<Slot>>                        slots_;
};

}  // namespace permrel
