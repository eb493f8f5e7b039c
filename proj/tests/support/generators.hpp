#pragma once

#include <entroscope/automata.hpp>
#include <entroscope/log.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace gen {

using namespace entroscope;
using Rng = std::mt19937_64;

inline std::vector<Label> alphabet(std::size_t k) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f"};
  std::vector<Label> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(Label::intern(names[i]));
  return out;
}

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline std::vector<State> random_accepts(Rng& rng, std::size_t n) {
  std::vector<State> acc;
  for (State q = 0; q < n; ++q)
    if (coin(rng, 0.3)) acc.push_back(q);
  if (acc.empty()) acc.push_back(static_cast<State>(uniform(rng, 0, n - 1)));
  return acc;
}

/// NFA with up to `max_states` states, possibly with silent moves.
inline Nfa random_nfa(Rng& rng, std::size_t max_states = 8, std::size_t max_alphabet = 3) {
  const std::size_t n = uniform(rng, 1, max_states);
  const auto sigma = alphabet(uniform(rng, 1, max_alphabet));
  std::vector<Transition> ts;
  for (State q = 0; q < n; ++q) {
    for (Label l : sigma)
      for (std::size_t k = 0; k < 2; ++k)
        if (coin(rng, 0.35)) ts.push_back({q, l, static_cast<State>(uniform(rng, 0, n - 1))});
    if (coin(rng, 0.15)) ts.push_back({q, Label::silent(), static_cast<State>(uniform(rng, 0, n - 1))});
  }
  return Nfa(n, sigma, std::move(ts), 0, random_accepts(rng, n));
}

inline Dfa random_dfa(Rng& rng, std::size_t max_states = 10, std::size_t max_alphabet = 3,
                      double density = 0.6) {
  const std::size_t n = uniform(rng, 1, max_states);
  const auto sigma = alphabet(uniform(rng, 1, max_alphabet));
  std::vector<Transition> ts;
  for (State q = 0; q < n; ++q)
    for (Label l : sigma)
      if (coin(rng, density)) ts.push_back({q, l, static_cast<State>(uniform(rng, 0, n - 1))});
  return Dfa(Nfa(n, sigma, std::move(ts), 0, random_accepts(rng, n)));
}

/// Trim DFA with a nonempty language.
inline Dfa random_trim_dfa(Rng& rng, std::size_t max_states = 10, std::size_t max_alphabet = 3) {
  for (;;) {
    Dfa d = trim(random_dfa(rng, max_states, max_alphabet));
    if (!d.accepts().empty()) return d;
  }
}

inline Trace random_word(Rng& rng, const std::vector<Label>& sigma, std::size_t max_length) {
  Trace w(uniform(rng, 0, max_length));
  for (Label& l : w) l = sigma[uniform(rng, 0, sigma.size() - 1)];
  return w;
}

/// Between `min_words` and `max_words` distinct words.
inline std::vector<Trace> random_words(Rng& rng, std::size_t min_words, std::size_t max_words,
                                       std::size_t max_alphabet = 3, std::size_t max_length = 6) {
  const auto sigma = alphabet(uniform(rng, 1, max_alphabet));
  const std::size_t target = uniform(rng, min_words, max_words);
  std::set<Trace> words;
  for (std::size_t tries = 0; words.size() < target && tries < 1000; ++tries)
    words.insert(random_word(rng, sigma, max_length));
  std::vector<Trace> out(words.begin(), words.end());
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

inline EventLog to_log(Rng& rng, const std::vector<Trace>& words) {
  EventLog log;
  for (const Trace& w : words) log.add(w, uniform(rng, 1, 3));
  return log;
}

inline EventLog random_log(Rng& rng, std::size_t max_traces = 6, std::size_t max_alphabet = 3,
                           std::size_t max_length = 6) {
  return to_log(rng, random_words(rng, 0, max_traces, max_alphabet, max_length));
}

inline Dfa words_dfa(const std::vector<Trace>& words) {
  EventLog log;
  for (const Trace& w : words) log.add(w);
  return prefix_tree_acceptor(log);
}

/// `d` without transition number `index`, trimmed.
inline Dfa without_transition(const Dfa& d, std::size_t index) {
  std::vector<Transition> ts(d.transitions().begin(), d.transitions().end());
  ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(index));
  return trim(Dfa(Nfa(d.state_count(), {d.alphabet().begin(), d.alphabet().end()}, std::move(ts),
                      d.start(), {d.accepts().begin(), d.accepts().end()})));
}

/// Random state relabelling that keeps the automaton's language.
inline Nfa permute_states(Rng& rng, const Nfa& a) {
  std::vector<State> p(a.state_count());
  for (State q = 0; q < p.size(); ++q) p[q] = q;
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<Transition> ts;
  for (const Transition& t : a.transitions()) ts.push_back({p[t.from], t.label, p[t.to]});
  std::vector<State> acc;
  for (State q : a.accepts()) acc.push_back(p[q]);
  return Nfa(a.state_count(), {a.alphabet().begin(), a.alphabet().end()}, std::move(ts), p[a.start()],
             std::move(acc));
}

/// Language-preserving blow-up: every state gets a twin, and each move
/// goes to a randomly chosen copy of its target.
inline Dfa split_states(Rng& rng, const Dfa& d) {
  const std::size_t n = d.state_count();
  std::vector<Transition> ts;
  for (State copy = 0; copy < 2; ++copy)
    for (const Transition& t : d.transitions())
      ts.push_back({static_cast<State>(t.from + copy * n), t.label,
                    static_cast<State>(t.to + (coin(rng, 0.5) ? n : 0))});
  std::vector<State> acc;
  for (State q : d.accepts()) {
    acc.push_back(q);
    acc.push_back(static_cast<State>(q + n));
  }
  return Dfa(Nfa(2 * n, {d.alphabet().begin(), d.alphabet().end()}, std::move(ts), d.start(),
                 std::move(acc)));
}

}  // namespace gen
