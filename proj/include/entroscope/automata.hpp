#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "entroscope/automaton.hpp"

namespace entroscope {

bool is_deterministic(const Nfa& a);

/// Smallest superset of `states` closed under silent moves. Sorted.
std::vector<State> silent_closure(const Nfa& a, std::span<const State> states);

/// Subset construction with silent closure. Only subsets reachable from the
/// closure of the start state are built, in breadth-first order with labels
/// taken in id order.
Dfa determinize(const Nfa& a);

/// `a` itself when already deterministic, otherwise determinize(a).
Dfa to_dfa(const Nfa& a);

/// Hopcroft partition refinement on the trimmed, partial automaton. The
/// result is canonically numbered (see canonical()).
Dfa minimize(const Dfa& d);

/// Drops states that are unreachable or cannot reach an accept state. An
/// automaton with no useful state becomes Nfa::empty_language().
Nfa trim(const Nfa& a);
Dfa trim(const Dfa& d);
bool is_trim(const Nfa& a);

/// Adds a chi-labelled move from every accept state to the start state.
/// The input is trimmed first; throws InvalidArgument if it already uses chi.
Dfa short_circuit(const Dfa& d);

/// Trimmed product automaton. Throws InvalidArgument for short-circuited
/// operands.
Dfa intersect(const Dfa& x, const Dfa& y);

/// Strong connectivity of the labelled transition graph.
bool is_ergodic(const Nfa& a);

bool has_finite_language(const Dfa& d);

/// Number of accepted words. Throws InfiniteLanguage when a cycle survives
/// trimming and std::overflow_error past 2^64-1.
std::uint64_t count_words(const Dfa& d);

bool accepts(const Dfa& d, std::span<const Label> word);

/// Reachable part renumbered in breadth-first order from the start state,
/// following moves in label-id order.
Dfa canonical(const Dfa& d);

/// Same canonical form (alphabets are not compared).
bool isomorphic(const Dfa& x, const Dfa& y);

/// Language equality via isomorphism of minimal automata.
bool language_equal(const Dfa& x, const Dfa& y);

/// |C_n(L(d))|, the number of accepted words of length n. Integral `Count`
/// throws std::overflow_error on overflow; floating `Count` saturates to inf.
template <typename Count = std::uint64_t>
Count count_words_of_length(const Dfa& d, std::size_t n) {
  std::vector<Count> current(d.state_count(), Count{0});
  std::vector<Count> next(d.state_count(), Count{0});
  current[d.start()] = Count{1};
  for (std::size_t step = 0; step < n; ++step) {
    std::fill(next.begin(), next.end(), Count{0});
    for (const Transition& t : d.transitions()) {
      if constexpr (std::is_integral_v<Count>) {
        if (__builtin_add_overflow(next[t.to], current[t.from], &next[t.to]))
          throw std::overflow_error("word count exceeds counter range");
      } else {
        next[t.to] += current[t.from];
      }
    }
    current.swap(next);
  }
  Count total{0};
  for (State q : d.accepts()) {
    if constexpr (std::is_integral_v<Count>) {
      if (__builtin_add_overflow(total, current[q], &total))
        throw std::overflow_error("word count exceeds counter range");
    } else {
      total += current[q];
    }
  }
  return total;
}

}  // namespace entroscope
