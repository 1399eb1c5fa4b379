#ifndef LMSF_MEMO_HPP
#define LMSF_MEMO_HPP

#include <map>
#include <mutex>
#include <utility>

namespace lmsf {

/// Thread-safe memo table. Values are computed outside the lock (so the
/// computation may recurse into the same table); the first insert wins.
/// References stay valid for the program lifetime.
template <class Key, class Value>
class Memo {
 public:
  template <class F>
  const Value& get(const Key& key, F&& compute) {
    {
      std::lock_guard lock(mu_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value value = compute();
    std::lock_guard lock(mu_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<Key, Value> table_;
};

}  // namespace lmsf

#endif  // LMSF_MEMO_HPP
