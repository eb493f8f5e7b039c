#include <algorithm>
#include <deque>
#include <unordered_map>

#include "entroscope/automata.hpp"
#include "entroscope/error.hpp"

namespace entroscope {
namespace {

std::vector<bool> forward_reachable(const Nfa& a, State from) {
  std::vector<bool> seen(a.state_count(), false);
  std::vector<State> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (const Transition& t : a.outgoing(q)) {
      if (!seen[t.to]) {
        seen[t.to] = true;
        stack.push_back(t.to);
      }
    }
  }
  return seen;
}

std::vector<bool> backward_reachable(const Nfa& a, std::span<const State> targets) {
  std::vector<std::vector<State>> predecessors(a.state_count());
  for (const Transition& t : a.transitions()) predecessors[t.to].push_back(t.from);
  std::vector<bool> seen(a.state_count(), false);
  std::vector<State> stack;
  for (State q : targets) {
    if (!seen[q]) {
      seen[q] = true;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State p : predecessors[q]) {
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

// Topological order of a trim deterministic automaton, or empty if cyclic.
std::vector<State> topological_order(const Dfa& d) {
  std::vector<std::size_t> indegree(d.state_count(), 0);
  for (const Transition& t : d.transitions()) ++indegree[t.to];
  std::vector<State> order;
  for (State q = 0; q < d.state_count(); ++q)
    if (indegree[q] == 0) order.push_back(q);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Transition& t : d.outgoing(order[i]))
      if (--indegree[t.to] == 0) order.push_back(t.to);
  }
  if (order.size() != d.state_count()) order.clear();
  return order;
}

}  // namespace

Nfa trim(const Nfa& a) {
  const auto reachable = forward_reachable(a, a.start());
  const auto productive = backward_reachable(a, a.accepts());
  std::vector<Label> alphabet(a.alphabet().begin(), a.alphabet().end());
  if (!productive[a.start()]) return Nfa::empty_language(std::move(alphabet));

  constexpr State kDropped = ~State{0};
  std::vector<State> renumber(a.state_count(), kDropped);
  State next_id = 0;
  for (State q = 0; q < a.state_count(); ++q)
    if (reachable[q] && productive[q]) renumber[q] = next_id++;

  std::vector<Transition> transitions;
  for (const Transition& t : a.transitions())
    if (renumber[t.from] != kDropped && renumber[t.to] != kDropped)
      transitions.push_back({renumber[t.from], t.label, renumber[t.to]});
  std::vector<State> accepts;
  for (State q : a.accepts())
    if (renumber[q] != kDropped) accepts.push_back(renumber[q]);

  return Nfa(next_id, std::move(alphabet), std::move(transitions), renumber[a.start()],
             std::move(accepts));
}

Dfa trim(const Dfa& d) { return Dfa(trim(d.nfa())); }

bool is_trim(const Nfa& a) { return trim(a) == a; }

Dfa short_circuit(const Dfa& d) {
  if (d.is_short_circuited()) throw InvalidArgument("automaton is already short-circuited");
  const Dfa t = trim(d);
  if (t.accepts().empty()) return t;

  std::vector<Label> alphabet(t.alphabet().begin(), t.alphabet().end());
  alphabet.push_back(Label::chi());
  std::vector<Transition> transitions(t.transitions().begin(), t.transitions().end());
  for (State q : t.accepts()) transitions.push_back({q, Label::chi(), t.start()});
  return Dfa(Nfa(t.state_count(), std::move(alphabet), std::move(transitions), t.start(),
                 std::vector<State>(t.accepts().begin(), t.accepts().end())));
}

Dfa intersect(const Dfa& x, const Dfa& y) {
  if (x.is_short_circuited() || y.is_short_circuited())
    throw InvalidArgument("intersection operands must not be short-circuited");

  std::unordered_map<std::uint64_t, State> index;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State p, State q) {
    const std::uint64_t key = (std::uint64_t{p} << 32) | q;
    auto [it, inserted] = index.try_emplace(key, static_cast<State>(pairs.size()));
    if (inserted) pairs.emplace_back(p, q);
    return it->second;
  };
  intern(x.start(), y.start());

  std::vector<Transition> transitions;
  std::vector<State> accepts;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [p, q] = pairs[i];
    const auto current = static_cast<State>(i);
    if (x.is_accepting(p) && y.is_accepting(q)) accepts.push_back(current);
    // Both lists are sorted by label: merge.
    auto left = x.outgoing(p);
    auto right = y.outgoing(q);
    auto l = left.begin();
    auto r = right.begin();
    while (l != left.end() && r != right.end()) {
      if (l->label < r->label) {
        ++l;
      } else if (r->label < l->label) {
        ++r;
      } else {
        transitions.push_back({current, l->label, intern(l->to, r->to)});
        ++l;
        ++r;
      }
    }
  }

  std::vector<Label> alphabet(x.alphabet().begin(), x.alphabet().end());
  alphabet.insert(alphabet.end(), y.alphabet().begin(), y.alphabet().end());
  return trim(Dfa(Nfa(pairs.size(), std::move(alphabet), std::move(transitions), 0,
                      std::move(accepts))));
}

bool is_ergodic(const Nfa& a) {
  const auto forward = forward_reachable(a, 0);
  const State origin[] = {0};
  const auto backward = backward_reachable(a, origin);
  return std::all_of(forward.begin(), forward.end(), [](bool b) { return b; }) &&
         std::all_of(backward.begin(), backward.end(), [](bool b) { return b; });
}

bool has_finite_language(const Dfa& d) {
  const Dfa t = trim(d);
  return !topological_order(t).empty();
}

std::uint64_t count_words(const Dfa& d) {
  const Dfa t = trim(d);
  if (t.accepts().empty()) return 0;
  const auto order = topological_order(t);
  if (order.empty()) throw InfiniteLanguage();

  std::vector<std::uint64_t> paths(t.state_count(), 0);
  paths[t.start()] = 1;
  std::uint64_t total = 0;
  for (State q : order) {
    if (t.is_accepting(q) && __builtin_add_overflow(total, paths[q], &total))
      throw std::overflow_error("word count exceeds 64 bits");
    for (const Transition& tr : t.outgoing(q))
      if (__builtin_add_overflow(paths[tr.to], paths[q], &paths[tr.to]))
        throw std::overflow_error("word count exceeds 64 bits");
  }
  return total;
}

bool accepts(const Dfa& d, std::span<const Label> word) {
  State q = d.start();
  for (Label l : word) {
    auto next = d.next(q, l);
    if (!next) return false;
    q = *next;
  }
  return d.is_accepting(q);
}

Dfa canonical(const Dfa& d) {
  constexpr State kUnseen = ~State{0};
  std::vector<State> renumber(d.state_count(), kUnseen);
  std::vector<State> order{d.start()};
  renumber[d.start()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Transition& t : d.outgoing(order[i])) {
      if (renumber[t.to] == kUnseen) {
        renumber[t.to] = static_cast<State>(order.size());
        order.push_back(t.to);
      }
    }
  }

  std::vector<Transition> transitions;
  for (const Transition& t : d.transitions())
    if (renumber[t.from] != kUnseen) transitions.push_back({renumber[t.from], t.label, renumber[t.to]});
  std::vector<State> accepts;
  for (State q : d.accepts())
    if (renumber[q] != kUnseen) accepts.push_back(renumber[q]);
  return Dfa(Nfa(order.size(), std::vector<Label>(d.alphabet().begin(), d.alphabet().end()),
                 std::move(transitions), 0, std::move(accepts)));
}

bool isomorphic(const Dfa& x, const Dfa& y) {
  const Dfa cx = canonical(x);
  const Dfa cy = canonical(y);
  return cx.state_count() == cy.state_count() &&
         std::ranges::equal(cx.transitions(), cy.transitions()) &&
         std::ranges::equal(cx.accepts(), cy.accepts());
}

bool language_equal(const Dfa& x, const Dfa& y) { return isomorphic(minimize(x), minimize(y)); }

}  // namespace entroscope
