#include "entroscope/spectral.hpp"

#include "entroscope/automata.hpp"
#include "entroscope/error.hpp"

namespace entroscope {

namespace detail {

// Iterative Tarjan.
std::vector<std::vector<Eigen::Index>> strongly_connected_components(
    const std::vector<std::vector<Eigen::Index>>& successors) {
  const std::size_t n = successors.size();
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Eigen::Index> stack;
  std::vector<std::pair<std::size_t, std::size_t>> frames;  // vertex, next successor
  std::vector<std::vector<Eigen::Index>> components;
  std::size_t counter = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next == 0) {
        index[v] = low[v] = counter++;
        stack.push_back(static_cast<Eigen::Index>(v));
        on_stack[v] = true;
      }
      if (next < successors[v].size()) {
        const auto w = static_cast<std::size_t>(successors[v][next++]);
        if (index[w] == kUnvisited) {
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<Eigen::Index> component;
        Eigen::Index w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          component.push_back(w);
        } while (static_cast<std::size_t>(w) != v);
        components.push_back(std::move(component));
      }
      const std::size_t finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        const std::size_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  return components;
}

}  // namespace detail

double entropy(const Dfa& d, SolverOptions options) {
  if (!is_ergodic(d)) throw DomainError("entropy requires an ergodic automaton");
  const auto result = perron_frobenius(adjacency_matrix<double>(d), options);
  if (result.value <= 0.0) throw DomainError("entropy of the empty language is undefined");
  return std::log2(result.value);
}

}  // namespace entroscope
