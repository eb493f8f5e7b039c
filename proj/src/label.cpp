#include "entroscope/label.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "entroscope/error.hpp"

namespace entroscope {
namespace {

class LabelPool {
 public:
  Label::Id intern(std::string_view name) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = ids_.try_emplace(std::string(name), 0);
    if (inserted) {
      it->second = static_cast<Label::Id>(names_.size()) + Label::kFirstUserId;
      names_.push_back(it->first);
    }
    return it->second;
  }

  std::string name(Label::Id id) const {
    std::shared_lock lock(mutex_);
    return names_.at(id - Label::kFirstUserId);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Label::Id> ids_;
  std::deque<std::string> names_;
};

LabelPool& pool() {
  static LabelPool instance;
  return instance;
}

}  // namespace

Label Label::intern(std::string_view name) {
  if (name == kReservedChiSpelling)
    throw InvalidArgument("label \"__chi__\" is reserved");
  return Label{pool().intern(name)};
}

std::string Label::name() const {
  if (is_silent()) return "τ";
  if (is_chi()) return "χ";
  return pool().name(id_);
}

}  // namespace entroscope
