#pragma once

#include <map>
#include <memory>
#include <mutex>

namespace hfischer::detail {

/// Process-wide memo table. Values are computed outside the lock; when two threads race
/// on a key they compute identical values and the first insertion is kept. References
/// stay valid until clear().
template <typename Key, typename Value>
class MemoTable {
 public:
  template <typename Compute>
  const Value& get(const Key& key, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = entries_.find(key); it != entries_.end()) return *it->second;
    }
    auto value = std::make_unique<const Value>(compute());
    std::lock_guard lock(mutex_);
    return *entries_.try_emplace(key, std::move(value)).first->second;
  }

  void clear() {
    std::lock_guard lock(mutex_);
    entries_.clear();
  }

 private:
  std::mutex mutex_;
  std::map<Key, std::unique_ptr<const Value>> entries_;
};

}  // namespace hfischer::detail
