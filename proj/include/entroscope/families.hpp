#pragma once

#include "entroscope/automaton.hpp"
#include "entroscope/log.hpp"

// Synthetic specification/log families for monotonicity experiments.
namespace entroscope::families {

/// Log with language a{0,2}b: [b, ab, aab].
EventLog bounded_repeat_log();

/// Minimal automaton of a{0,x}b, x in [2, 20].
Dfa bounded_repeat(int x);

/// Minimal automaton of a*b.
Dfa kleene();

/// Log of abcde, abced, abdec, abdce, abecd.
EventLog permutation_log();

/// Union of `count` explicit permutations of a..e, count in [5, 120]: the
/// five logged words first, then the rest in lexicographic order. Each word
/// is its own branch, so the result is nondeterministic.
Nfa permutations(int count);

/// Interleaving of a..e in any order, built as the lattice of executed
/// subsets (32 states).
Dfa parallel_block();

}  // namespace entroscope::families
