#include "entroscope/log.hpp"

#include <algorithm>
#include <deque>

#include "entroscope/error.hpp"

namespace entroscope {

EventLog::EventLog(std::initializer_list<Trace> traces) {
  for (const Trace& t : traces) add(t);
}

void EventLog::add(Trace trace, std::uint64_t count) {
  if (count == 0) throw InvalidArgument("trace multiplicity must be positive");
  for (Label l : trace)
    if (l.is_reserved()) throw InvalidArgument("trace contains reserved label " + l.name());
  entries_[std::move(trace)] += count;
}

std::uint64_t EventLog::multiplicity(const Trace& trace) const {
  auto it = entries_.find(trace);
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t EventLog::total_count() const {
  std::uint64_t total = 0;
  for (const auto& [trace, count] : entries_) total += count;
  return total;
}

std::vector<Label> EventLog::alphabet() const {
  std::vector<Label> labels;
  for (const auto& [trace, count] : entries_) labels.insert(labels.end(), trace.begin(), trace.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

EventLog operator+(const EventLog& x, const EventLog& y) {
  EventLog result = x;
  for (const auto& [trace, count] : y.entries()) result.add(trace, count);
  return result;
}

std::vector<Trace> distinct_language(const EventLog& log) {
  std::vector<Trace> traces;
  traces.reserve(log.distinct_count());
  for (const auto& [trace, count] : log.entries()) traces.push_back(trace);
  return traces;
}

Dfa prefix_tree_acceptor(const EventLog& log) {
  if (log.empty()) return Dfa::empty_language();

  // Trie first, then breadth-first renumbering.
  struct Node {
    std::map<Label, State> children;
    bool accepting = false;
  };
  std::vector<Node> nodes(1);
  for (const auto& [trace, count] : log.entries()) {
    State q = 0;
    for (Label l : trace) {
      auto it = nodes[q].children.find(l);
      if (it == nodes[q].children.end()) {
        const auto fresh = static_cast<State>(nodes.size());
        nodes[q].children.emplace(l, fresh);
        nodes.emplace_back();
        q = fresh;
      } else {
        q = it->second;
      }
    }
    nodes[q].accepting = true;
  }

  std::vector<State> renumber(nodes.size(), 0);
  std::vector<State> order{0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& [label, child] : nodes[order[i]].children) {
      renumber[child] = static_cast<State>(order.size());
      order.push_back(child);
    }
  }

  std::vector<Transition> transitions;
  std::vector<State> accepts;
  for (State q = 0; q < nodes.size(); ++q) {
    if (nodes[q].accepting) accepts.push_back(renumber[q]);
    for (const auto& [label, child] : nodes[q].children)
      transitions.push_back({renumber[q], label, renumber[child]});
  }
  return Dfa(Nfa(nodes.size(), log.alphabet(), std::move(transitions), 0, std::move(accepts)));
}

Trace make_trace(std::initializer_list<const char*> names) {
  Trace trace;
  for (const char* n : names) trace.push_back(Label::intern(n));
  return trace;
}

}  // namespace entroscope
