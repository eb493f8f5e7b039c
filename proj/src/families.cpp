#include "entroscope/families.hpp"

#include <algorithm>
#include <string>

#include "entroscope/error.hpp"

namespace entroscope::families {
namespace {

constexpr const char* kPermutationLog[] = {"abcde", "abced", "abdec", "abdce", "abecd"};

Trace spell(const std::string& word) {
  Trace t;
  for (char c : word) t.push_back(Label::intern(std::string(1, c)));
  return t;
}

std::vector<Label> letters(std::string_view word) {
  std::vector<Label> out;
  for (char c : word) out.push_back(Label::intern(std::string(1, c)));
  return out;
}

}  // namespace

EventLog bounded_repeat_log() { return EventLog{spell("b"), spell("ab"), spell("aab")}; }

Dfa bounded_repeat(int x) {
  if (x < 2 || x > 20) throw InvalidArgument("bounded-repeat x must lie in [2, 20]");
  const Label a = Label::intern("a");
  const Label b = Label::intern("b");
  const auto final_state = static_cast<State>(x + 1);
  std::vector<Transition> transitions;
  for (State i = 0; i <= static_cast<State>(x); ++i) {
    if (i < static_cast<State>(x)) transitions.push_back({i, a, i + 1});
    transitions.push_back({i, b, final_state});
  }
  return Dfa(Nfa(x + 2, {a, b}, std::move(transitions), 0, {final_state}));
}

Dfa kleene() {
  const Label a = Label::intern("a");
  const Label b = Label::intern("b");
  return Dfa(Nfa(2, {a, b}, {{0, a, 0}, {0, b, 1}}, 0, {1}));
}

EventLog permutation_log() {
  EventLog log;
  for (const char* w : kPermutationLog) log.add(spell(w));
  return log;
}

Nfa permutations(int count) {
  if (count < 5 || count > 120) throw InvalidArgument("permutation count must lie in [5, 120]");
  std::vector<std::string> words(std::begin(kPermutationLog), std::end(kPermutationLog));
  std::string p = "abcde";
  do {
    if (std::find(words.begin(), words.end(), p) == words.end()) words.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  words.resize(static_cast<std::size_t>(count));

  // State 0 starts every branch; each branch owns five further states.
  std::vector<Transition> transitions;
  std::vector<State> accepts;
  State next = 1;
  for (const std::string& w : words) {
    State from = 0;
    for (char c : w) {
      transitions.push_back({from, Label::intern(std::string(1, c)), next});
      from = next++;
    }
    accepts.push_back(from);
  }
  return Nfa(next, letters("abcde"), std::move(transitions), 0, std::move(accepts));
}

Dfa parallel_block() {
  const auto alphabet = letters("abcde");
  std::vector<Transition> transitions;
  for (State done = 0; done < 32; ++done)
    for (State i = 0; i < 5; ++i)
      if (!(done & (1u << i))) transitions.push_back({done, alphabet[i], done | (1u << i)});
  return Dfa(Nfa(32, alphabet, std::move(transitions), 0, {31}));
}

}  // namespace entroscope::families
