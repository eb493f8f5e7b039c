#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

#include "entroscope/automaton.hpp"

namespace entroscope {

using Trace = std::vector<Label>;

/// Finite multiset of traces. Traces never contain the silent or
/// short-circuit label; multiplicities are always positive.
class EventLog {
 public:
  using Entries = std::map<Trace, std::uint64_t>;

  EventLog() = default;
  /// One instance per listed trace; repeats accumulate.
  EventLog(std::initializer_list<Trace> traces);

  /// Adds `count` instances of `trace`. Throws InvalidArgument for reserved
  /// labels or a zero count.
  void add(Trace trace, std::uint64_t count = 1);

  std::uint64_t multiplicity(const Trace& trace) const;
  const Entries& entries() const { return entries_; }
  std::size_t distinct_count() const { return entries_.size(); }
  std::uint64_t total_count() const;
  bool empty() const { return entries_.empty(); }

  /// Labels occurring in at least one trace, sorted by id.
  std::vector<Label> alphabet() const;

  friend bool operator==(const EventLog&, const EventLog&) = default;

 private:
  Entries entries_;
};

/// Multiset union: multiplicities add.
EventLog operator+(const EventLog& x, const EventLog& y);

/// The set of distinct traces, in lexicographic label-id order.
std::vector<Trace> distinct_language(const EventLog& log);

/// Acyclic automaton with one state per distinct prefix of the log's traces.
/// States are numbered in breadth-first order; the empty log maps to
/// Dfa::empty_language().
Dfa prefix_tree_acceptor(const EventLog& log);

Trace make_trace(std::initializer_list<const char*> names);

}  // namespace entroscope
