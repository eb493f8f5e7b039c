#pragma once

// Reference implementations used to check the library. They work on the raw
// transition lists and share no code with the algorithms under test.

#include <entroscope/automaton.hpp>
#include <entroscope/log.hpp>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using namespace entroscope;
using Word = std::vector<Label>;
using Language = std::set<Word>;

inline std::set<State> closure(const Nfa& a, std::set<State> states) {
  std::vector<State> stack(states.begin(), states.end());
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (const Transition& t : a.transitions())
      if (t.from == q && t.label.is_silent() && states.insert(t.to).second) stack.push_back(t.to);
  }
  return states;
}

/// Set simulation with silent closure.
inline bool accepts(const Nfa& a, const Word& w) {
  std::set<State> current = closure(a, {a.start()});
  for (Label l : w) {
    std::set<State> next;
    for (const Transition& t : a.transitions())
      if (t.label == l && current.count(t.from)) next.insert(t.to);
    current = closure(a, std::move(next));
    if (current.empty()) return false;
  }
  return std::any_of(current.begin(), current.end(), [&](State q) {
    const auto acc = a.accepts();
    return std::find(acc.begin(), acc.end(), q) != acc.end();
  });
}

/// Every word over `alphabet` of length at most `max_length`.
inline std::vector<Word> all_words(const std::vector<Label>& alphabet, std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (Label l : alphabet) {
        Word w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

inline Language bounded_language(const Nfa& a, const std::vector<Label>& alphabet,
                                 std::size_t max_length) {
  Language out;
  for (const Word& w : all_words(alphabet, max_length))
    if (accepts(a, w)) out.insert(w);
  return out;
}

inline std::vector<Label> alphabet_of(const Nfa& a) { return {a.alphabet().begin(), a.alphabet().end()}; }

inline std::vector<Label> alphabet_union(const Nfa& a, const Nfa& b) {
  std::set<Label> s(a.alphabet().begin(), a.alphabet().end());
  s.insert(b.alphabet().begin(), b.alphabet().end());
  return {s.begin(), s.end()};
}

/// States from which an accept state is reachable.
inline std::vector<bool> live_states(const Nfa& a) {
  std::vector<bool> live(a.state_count(), false);
  for (State q : a.accepts()) live[q] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (const Transition& t : a.transitions())
      if (live[t.to] && !live[t.from]) live[t.from] = changed = true;
  }
  return live;
}

/// All accepted words of a silent-free automaton with a finite language,
/// found by walking every path through live states.
inline Language enumerate_finite(const Nfa& a, std::size_t max_length = 64) {
  Language out;
  const std::vector<bool> live = live_states(a);
  Word w;
  auto walk = [&](auto&& self, State q) -> void {
    if (!live[q]) return;
    if (w.size() > max_length) throw std::logic_error("oracle: language looks infinite");
    if (a.is_accepting(q)) out.insert(w);
    for (const Transition& t : a.transitions()) {
      if (t.from != q) continue;
      w.push_back(t.label);
      self(self, t.to);
      w.pop_back();
    }
  };
  walk(walk, a.start());
  return out;
}

/// True iff L(a) is a subset of the finite set `words`. `a` must be free of
/// silent moves.
inline bool contained_in(const Nfa& a, const Language& words) {
  std::size_t longest = 0;
  for (const Word& w : words) longest = std::max(longest, w.size());
  const std::vector<bool> live = live_states(a);
  Word w;
  bool ok = true;
  auto walk = [&](auto&& self, State q) -> void {
    if (!ok || !live[q]) return;
    if (w.size() > longest || (a.is_accepting(q) && !words.count(w))) {
      ok = false;
      return;
    }
    for (const Transition& t : a.transitions()) {
      if (t.from != q) continue;
      w.push_back(t.label);
      self(self, t.to);
      w.pop_back();
    }
  };
  walk(walk, a.start());
  return ok;
}

inline Language language_of(const EventLog& log) {
  Language out;
  for (const auto& [trace, count] : log.entries()) out.insert(trace);
  return out;
}

/// Every prefix of every trace, including the empty one.
inline std::set<Word> prefixes(const EventLog& log) {
  std::set<Word> out;
  for (const auto& [trace, count] : log.entries())
    for (std::size_t i = 0; i <= trace.size(); ++i) out.insert(Word(trace.begin(), trace.begin() + i));
  return out;
}

inline Eigen::MatrixXd dense(const std::vector<std::vector<int>>& rows) {
  Eigen::MatrixXd m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

/// Dense adjacency built straight from the transition list.
inline Eigen::MatrixXd dense_adjacency(const Nfa& a) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(a.state_count(), a.state_count());
  for (const Transition& t : a.transitions()) m(t.from, t.to) += 1.0;
  return m;
}

/// Spectral radius from full eigen-decompositions of the irreducible
/// diagonal blocks. Blocks come from a transitive-closure reachability
/// matrix; a whole-matrix decomposition is inaccurate for defective
/// eigenvalues, while each block's Perron root is simple.
inline double spectral_radius(const Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) reach[i][j] = m(i, j) != 0.0;
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
  double best = 0.0;
  std::vector<bool> done(n, false);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (done[i] || !reach[i][i]) continue;
    std::vector<Eigen::Index> block;
    for (Eigen::Index j = 0; j < n; ++j)
      if (reach[i][j] && reach[j][i]) block.push_back(j), done[j] = true;
    Eigen::MatrixXd sub(block.size(), block.size());
    for (std::size_t a = 0; a < block.size(); ++a)
      for (std::size_t b = 0; b < block.size(); ++b) sub(a, b) = m(block[a], block[b]);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(sub, false);
    best = std::max(best, solver.eigenvalues().cwiseAbs().maxCoeff());
  }
  return best;
}

/// Second-largest eigenvalue modulus.
inline double second_modulus(const Eigen::MatrixXd& m) {
  if (m.rows() < 2) return 0.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  Eigen::VectorXd mods = solver.eigenvalues().cwiseAbs();
  std::sort(mods.data(), mods.data() + mods.size(), std::greater<>());
  return mods[1];
}

/// Equality of two square matrices up to a simultaneous row/column
/// permutation, by trying every permutation.
inline bool equal_up_to_permutation(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows()) return false;
  std::vector<int> p(a.rows());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool same = true;
    for (int i = 0; i < a.rows() && same; ++i)
      for (int j = 0; j < a.rows() && same; ++j) same = a(i, j) == b(p[i], p[j]);
    if (same) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Period of a strongly connected graph: gcd over edges of
/// level(u) + 1 - level(v) for breadth-first levels from state 0.
inline long period(const Nfa& a) {
  std::vector<long> level(a.state_count(), -1);
  level[0] = 0;
  std::vector<State> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const Transition& t : a.transitions())
      if (t.from == queue[i] && level[t.to] < 0) {
        level[t.to] = level[t.from] + 1;
        queue.push_back(t.to);
      }
  long g = 0;
  for (const Transition& t : a.transitions())
    if (level[t.from] >= 0 && level[t.to] >= 0) g = std::gcd(g, std::abs(level[t.from] + 1 - level[t.to]));
  return g;
}

}  // namespace oracle
