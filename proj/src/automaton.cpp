#include "entroscope/automaton.hpp"

#include <algorithm>
#include <string>

#include "entroscope/error.hpp"

namespace entroscope {
namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Nfa::Nfa(std::size_t state_count, std::vector<Label> alphabet,
         std::vector<Transition> transitions, State start, std::vector<State> accepts)
    : state_count_(state_count),
      alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)),
      start_(start),
      accepts_(std::move(accepts)) {
  if (state_count_ == 0) throw InvalidArgument("automaton needs at least one state");
  if (start_ >= state_count_)
    throw InvalidArgument("start state " + std::to_string(start_) + " out of range");

  sort_unique(alphabet_);
  if (!alphabet_.empty() && alphabet_.front().is_silent())
    throw InvalidArgument("alphabet must not contain the silent label");

  sort_unique(accepts_);
  accepting_.assign(state_count_, false);
  for (State q : accepts_) {
    if (q >= state_count_)
      throw InvalidArgument("accept state " + std::to_string(q) + " out of range");
    accepting_[q] = true;
  }

  sort_unique(transitions_);
  offsets_.assign(state_count_ + 1, 0);
  for (const Transition& t : transitions_) {
    if (t.from >= state_count_ || t.to >= state_count_)
      throw InvalidArgument("transition endpoint out of range");
    if (!t.label.is_silent() &&
        !std::binary_search(alphabet_.begin(), alphabet_.end(), t.label))
      throw InvalidArgument("transition label '" + t.label.name() + "' not in alphabet");
    ++offsets_[t.from + 1];
  }
  for (std::size_t q = 0; q < state_count_; ++q) offsets_[q + 1] += offsets_[q];
}

Nfa Nfa::empty_language(std::vector<Label> alphabet) {
  return Nfa(1, std::move(alphabet), {}, 0, {});
}

bool Nfa::has_silent_transitions() const {
  return std::any_of(transitions_.begin(), transitions_.end(),
                     [](const Transition& t) { return t.label.is_silent(); });
}

bool Nfa::is_short_circuited() const {
  return std::binary_search(alphabet_.begin(), alphabet_.end(), Label::chi());
}

Dfa::Dfa(Nfa nfa) : nfa_(std::move(nfa)) {
  for (State q = 0; q < nfa_.state_count(); ++q) {
    auto out = nfa_.outgoing(q);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].label.is_silent())
        throw InvalidArgument("deterministic automaton has a silent transition");
      if (i > 0 && out[i - 1].label == out[i].label)
        throw InvalidArgument("state " + std::to_string(q) + " has two moves on '" +
                              out[i].label.name() + "'");
    }
  }
}

std::optional<State> Dfa::next(State q, Label label) const {
  auto out = outgoing(q);
  auto it = std::lower_bound(out.begin(), out.end(), label,
                             [](const Transition& t, Label l) { return t.label < l; });
  if (it == out.end() || it->label != label) return std::nullopt;
  return it->to;
}

}  // namespace entroscope
