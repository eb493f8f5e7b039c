#pragma once

#include <entroscope/automaton.hpp>
#include <entroscope/log.hpp>

#include <initializer_list>
#include <set>
#include <vector>

namespace fixtures {

using namespace entroscope;

struct Edge {
  State from;
  const char* label;  // nullptr for a silent move
  State to;
};

inline Nfa build(std::size_t states, std::initializer_list<Edge> edges, State start,
                 std::vector<State> accepts) {
  std::set<Label> alphabet;
  std::vector<Transition> transitions;
  for (const Edge& e : edges) {
    const Label l = e.label ? Label::intern(e.label) : Label::silent();
    if (!l.is_silent()) alphabet.insert(l);
    transitions.push_back({e.from, l, e.to});
  }
  return Nfa(states, {alphabet.begin(), alphabet.end()}, std::move(transitions), start,
             std::move(accepts));
}

// A=0 B=1 C=2 D=3 E=4; b from B is nondeterministic.
inline Nfa s2() {
  return build(5, {{0, "a", 1}, {1, "b", 2}, {1, "b", 3}, {2, "c", 1}, {3, "d", 4}, {4, "e", 0}},
               0, {0});
}

// {abde, abcde}
inline Nfa s3() {
  return build(7,
               {{0, "a", 1}, {1, "b", 2}, {2, "d", 3}, {3, "e", 4}, {2, "c", 5}, {5, "d", 6},
                {6, "e", 4}},
               0, {4});
}

// (a(bc)+bde)*
inline Nfa s5() {
  return build(6,
               {{0, "a", 1}, {1, "b", 2}, {2, "c", 3}, {3, "b", 4}, {4, "c", 3}, {4, "d", 5},
                {5, "e", 0}},
               0, {0});
}

// V=0 VI=1 VII=2
inline Nfa s1() {
  return build(3,
               {{0, "a", 1}, {1, "b", 1}, {1, "c", 1}, {1, "d", 2}, {1, "f", 2}, {2, "e", 0}},
               0, {0});
}

// Phi* over {a,b,c,d,e}
inline Nfa phi_star() {
  return build(1, {{0, "a", 0}, {0, "b", 0}, {0, "c", 0}, {0, "d", 0}, {0, "e", 0}}, 0, {0});
}

// {abc}
inline Nfa s_abc() { return build(4, {{0, "a", 1}, {1, "b", 2}, {2, "c", 3}}, 0, {3}); }

inline EventLog l1() {
  return {make_trace({"a", "b", "d", "e"}), make_trace({"a", "b", "c", "b", "c", "d", "e"})};
}

inline EventLog l2() {
  return l1() + EventLog{make_trace({"a", "b", "c", "c", "d", "e"}), make_trace({"a", "f", "e"}),
                         make_trace({"a", "f", "e"})};
}

inline EventLog l3() {
  return {make_trace({"a", "b", "c", "b", "c", "d", "e"}), make_trace({"a", "b", "b", "f"}),
          make_trace({"a", "f", "e"})};
}

// Short-circuited adjacency of the minimal automaton of L(S2).
inline const std::vector<std::vector<int>>& s4_matrix() {
  static const std::vector<std::vector<int>> m{{1, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 0, 0}};
  return m;
}

inline const std::vector<std::vector<int>>& s5_matrix() {
  static const std::vector<std::vector<int>> m{{1, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                                               {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0},
                                               {0, 0, 0, 1, 0, 1}, {1, 0, 0, 0, 0, 0}};
  return m;
}

inline const std::vector<std::vector<int>>& s1_matrix() {
  static const std::vector<std::vector<int>> m{{1, 1, 0}, {0, 2, 2}, {1, 0, 0}};
  return m;
}

}  // namespace fixtures
