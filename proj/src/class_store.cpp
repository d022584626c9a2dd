#include "permrel/class_store.hpp"

#include <algorithm>
#include <mutex>

namespace permrel {

std::shared_ptr<CongruenceClass const> ClassStore::find(Word const& w) const {
  std::shared_lock lock(mutex_);
  auto             it = index_.find(w);
  if (it == index_.end()) {
    return nullptr;
  }
  it->second->stamp.store(clock_.fetch_add(1, std::memory_order_relaxed),
                          std::memory_order_relaxed);
  return it->second->cls;
}

std::shared_ptr<CongruenceClass const>
ClassStore::insert(std::shared_ptr<CongruenceClass const> cls) {
  std::unique_lock lock(mutex_);
  if (auto it = index_.find(cls->canonical()); it != index_.end()) {
    return it->second->cls;
  }
  auto slot = std::make_shared<Slot>();
  slot->cls = cls;
  slot->stamp.store(clock_.fetch_add(1, std::memory_order_relaxed),
                    std::memory_order_relaxed);
  for (auto const& w : cls->members) {
    index_.emplace(w, slot);
  }
  slots_.push_back(slot);
  size_words_ += cls->size();
  if (size_words_ > capacity_) {
    evict_locked();
  }
  return cls;
}

std::size_t ClassStore::size_words() const {
  std::shared_lock lock(mutex_);
  return size_words_;
}

void ClassStore::evict_locked() {
  std::sort(slots_.begin(), slots_.end(), [](auto const& a, auto const& b) {
    return a->stamp.load(std::memory_order_relaxed)
           > b->stamp.load(std::memory_order_relaxed);
  });
  std::size_t const target = capacity_ / 4 * 3;
  while (size_words_ > target && !slots_.empty()) {
    auto const& victim = slots_.back();
    for (auto const& w : victim->cls->members) {
      index_.erase(w);
    }
    size_words_ -= victim->cls->size();
    slots_.pop_back();
  }
}

}  // namespace permrel
