#include <algorithm>
#include <deque>
#include <map>

#include "entroscope/automata.hpp"

namespace entroscope {

bool is_deterministic(const Nfa& a) {
  for (State q = 0; q < a.state_count(); ++q) {
    auto out = a.outgoing(q);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].label.is_silent()) return false;
      if (i > 0 && out[i - 1].label == out[i].label) return false;
    }
  }
  return true;
}

std::vector<State> silent_closure(const Nfa& a, std::span<const State> states) {
  std::vector<bool> seen(a.state_count(), false);
  std::vector<State> stack;
  for (State q : states) {
    if (!seen[q]) {
      seen[q] = true;
      stack.push_back(q);
    }
  }
  std::vector<State> closure;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    closure.push_back(q);
    // Silent moves sort first: Label::silent() has the smallest id.
    for (const Transition& t : a.outgoing(q)) {
      if (!t.label.is_silent()) break;
      if (!seen[t.to]) {
        seen[t.to] = true;
        stack.push_back(t.to);
      }
    }
  }
  std::sort(closure.begin(), closure.end());
  return closure;
}

Dfa determinize(const Nfa& a) {
  using Subset = std::vector<State>;
  std::map<Subset, State> index;
  std::vector<Subset> subsets;
  std::deque<State> queue;

  auto intern = [&](Subset s) {
    auto [it, inserted] = index.try_emplace(std::move(s), static_cast<State>(subsets.size()));
    if (inserted) {
      subsets.push_back(it->first);
      queue.push_back(it->second);
    }
    return it->second;
  };

  const State start_state[] = {a.start()};
  intern(silent_closure(a, start_state));

  std::vector<Transition> transitions;
  std::vector<State> accepts;
  while (!queue.empty()) {
    const State current = queue.front();
    queue.pop_front();
    // Copy: intern() may grow `subsets`.
    const Subset members = subsets[current];

    std::map<Label, Subset> moves;
    bool accepting = false;
    for (State q : members) {
      accepting = accepting || a.is_accepting(q);
      for (const Transition& t : a.outgoing(q))
        if (!t.label.is_silent()) moves[t.label].push_back(t.to);
    }
    if (accepting) accepts.push_back(current);

    for (auto& [label, targets] : moves) {
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      const State target = intern(silent_closure(a, targets));
      transitions.push_back({current, label, target});
    }
  }

  return Dfa(Nfa(subsets.size(), std::vector<Label>(a.alphabet().begin(), a.alphabet().end()),
                 std::move(transitions), 0, std::move(accepts)));
}

Dfa to_dfa(const Nfa& a) {
  if (is_deterministic(a)) return Dfa(a);
  return determinize(a);
}

}  // namespace entroscope
