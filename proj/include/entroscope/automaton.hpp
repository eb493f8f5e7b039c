#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "entroscope/label.hpp"

namespace entroscope {

using State = std::uint32_t;

struct Transition {
  State from = 0;
  Label label;
  State to = 0;

  friend constexpr auto operator<=>(const Transition&, const Transition&) = default;
};

/// Finite automaton with optional silent transitions.
///
/// States are the dense range [0, state_count). Values are immutable once
/// built; the constructor validates every invariant and throws
/// InvalidArgument on violation. Alphabet, transitions and accept states are
/// kept sorted and duplicate-free, so two automata built from the same sets
/// compare equal regardless of input order.
class Nfa {
 public:
  Nfa(std::size_t state_count, std::vector<Label> alphabet,
      std::vector<Transition> transitions, State start,
      std::vector<State> accepts);

  /// One state, no transitions, no accepts.
  static Nfa empty_language(std::vector<Label> alphabet = {});

  std::size_t state_count() const { return state_count_; }
  std::span<const Label> alphabet() const { return alphabet_; }
  std::span<const Transition> transitions() const { return transitions_; }
  State start() const { return start_; }
  std::span<const State> accepts() const { return accepts_; }
  bool is_accepting(State q) const { return accepting_[q]; }

  /// Transitions leaving `q`, ordered by (label, to).
  std::span<const Transition> outgoing(State q) const {
    return std::span(transitions_).subspan(offsets_[q], offsets_[q + 1] - offsets_[q]);
  }

  bool has_silent_transitions() const;
  bool is_short_circuited() const;

  friend bool operator==(const Nfa& a, const Nfa& b) {
    return a.state_count_ == b.state_count_ && a.start_ == b.start_ &&
           a.alphabet_ == b.alphabet_ && a.transitions_ == b.transitions_ &&
           a.accepts_ == b.accepts_;
  }

 private:
  std::size_t state_count_;
  std::vector<Label> alphabet_;
  std::vector<Transition> transitions_;
  State start_;
  std::vector<State> accepts_;
  std::vector<bool> accepting_;
  std::vector<std::size_t> offsets_;
};

/// Nfa without silent transitions and with at most one successor per
/// (state, label). Converts implicitly to `const Nfa&`.
class Dfa {
 public:
  /// Throws InvalidArgument when `nfa` is not deterministic.
  explicit Dfa(Nfa nfa);

  static Dfa empty_language(std::vector<Label> alphabet = {}) {
    return Dfa(Nfa::empty_language(std::move(alphabet)));
  }

  const Nfa& nfa() const { return nfa_; }
  operator const Nfa&() const { return nfa_; }

  std::size_t state_count() const { return nfa_.state_count(); }
  std::span<const Label> alphabet() const { return nfa_.alphabet(); }
  std::span<const Transition> transitions() const { return nfa_.transitions(); }
  State start() const { return nfa_.start(); }
  std::span<const State> accepts() const { return nfa_.accepts(); }
  bool is_accepting(State q) const { return nfa_.is_accepting(q); }
  std::span<const Transition> outgoing(State q) const { return nfa_.outgoing(q); }
  bool is_short_circuited() const { return nfa_.is_short_circuited(); }

  std::optional<State> next(State q, Label label) const;

  friend bool operator==(const Dfa& a, const Dfa& b) { return a.nfa_ == b.nfa_; }

 private:
  Nfa nfa_;
};

}  // namespace entroscope
