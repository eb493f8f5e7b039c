#include <algorithm>
#include <vector>

#include "entroscope/automata.hpp"

namespace entroscope {
namespace {

// Hopcroft refinement over a completed transition table. State `n` of the
// table is the sink that absorbs every missing move.
class Refinement {
 public:
  Refinement(std::size_t states, std::size_t labels, std::vector<State> table,
             const std::vector<bool>& accepting)
      : states_(states), labels_(labels), block_of_(states, 0) {
    // Inverse table in CSR form, one slice per (label, target).
    inverse_offsets_.assign(labels_ * states_ + 1, 0);
    for (std::size_t q = 0; q < states_; ++q)
      for (std::size_t c = 0; c < labels_; ++c) ++inverse_offsets_[c * states_ + table[q * labels_ + c] + 1];
    for (std::size_t i = 0; i + 1 < inverse_offsets_.size(); ++i)
      inverse_offsets_[i + 1] += inverse_offsets_[i];
    inverse_.resize(states_ * labels_);
    std::vector<std::size_t> fill(inverse_offsets_.begin(), inverse_offsets_.end() - 1);
    for (std::size_t q = 0; q < states_; ++q)
      for (std::size_t c = 0; c < labels_; ++c)
        inverse_[fill[c * states_ + table[q * labels_ + c]]++] = static_cast<State>(q);

    std::vector<State> accept_block, reject_block;
    for (std::size_t q = 0; q < states_; ++q)
      (accepting[q] ? accept_block : reject_block).push_back(static_cast<State>(q));
    add_block(std::move(reject_block));
    if (!accept_block.empty()) {
      const std::size_t id = add_block(std::move(accept_block));
      for (std::size_t c = 0; c < labels_; ++c) push_work(id, c);
    }
    mark_.assign(states_, false);
  }

  void run() {
    std::vector<State> splitter;
    std::vector<std::size_t> touched;
    while (!work_.empty()) {
      auto [block, label] = work_.back();
      work_.pop_back();
      in_work_[block * labels_ + label] = false;

      splitter.clear();
      for (State target : blocks_[block]) {
        const std::size_t slot = label * states_ + target;
        for (std::size_t i = inverse_offsets_[slot]; i < inverse_offsets_[slot + 1]; ++i)
          splitter.push_back(inverse_[i]);
      }

      touched.clear();
      for (State q : splitter) {
        if (mark_[q]) continue;
        mark_[q] = true;
        const std::size_t b = block_of_[q];
        if (marked_count_[b]++ == 0) touched.push_back(b);
      }

      for (std::size_t b : touched) {
        if (marked_count_[b] < blocks_[b].size()) split(b);
        marked_count_[b] = 0;
      }
      for (State q : splitter) mark_[q] = false;
    }
  }

  std::size_t block_of(State q) const { return block_of_[q]; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<State>& members(std::size_t b) const { return blocks_[b]; }

 private:
  std::size_t add_block(std::vector<State> members) {
    const std::size_t id = blocks_.size();
    for (State q : members) block_of_[q] = id;
    blocks_.push_back(std::move(members));
    marked_count_.push_back(0);
    in_work_.resize(blocks_.size() * labels_, false);
    return id;
  }

  void push_work(std::size_t block, std::size_t label) {
    if (in_work_[block * labels_ + label]) return;
    in_work_[block * labels_ + label] = true;
    work_.emplace_back(block, label);
  }

  void split(std::size_t b) {
    std::vector<State> marked, rest;
    for (State q : blocks_[b]) (mark_[q] ? marked : rest).push_back(q);
    blocks_[b] = std::move(rest);
    const std::size_t fresh = add_block(std::move(marked));
    for (std::size_t c = 0; c < labels_; ++c) {
      if (in_work_[b * labels_ + c])
        push_work(fresh, c);
      else
        push_work(blocks_[fresh].size() < blocks_[b].size() ? fresh : b, c);
    }
  }

  std::size_t states_;
  std::size_t labels_;
  std::vector<std::size_t> block_of_;
  std::vector<std::vector<State>> blocks_;
  std::vector<std::size_t> marked_count_;
  std::vector<bool> mark_;
  std::vector<bool> in_work_;
  std::vector<std::pair<std::size_t, std::size_t>> work_;
  std::vector<std::size_t> inverse_offsets_;
  std::vector<State> inverse_;
};

}  // namespace

Dfa minimize(const Dfa& d) {
  const Dfa t = trim(d);
  std::vector<Label> alphabet(t.alphabet().begin(), t.alphabet().end());
  if (t.accepts().empty()) return Dfa::empty_language(std::move(alphabet));

  std::vector<Label> labels;
  for (const Transition& tr : t.transitions()) labels.push_back(tr.label);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto label_index = [&](Label l) {
    return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };

  const std::size_t n = t.state_count();
  const auto sink = static_cast<State>(n);
  const std::size_t k = std::max<std::size_t>(labels.size(), 1);
  std::vector<State> table((n + 1) * k, sink);
  for (const Transition& tr : t.transitions()) table[tr.from * k + label_index(tr.label)] = tr.to;

  std::vector<bool> accepting(n + 1, false);
  for (State q : t.accepts()) accepting[q] = true;

  Refinement refinement(n + 1, k, std::move(table), accepting);
  refinement.run();

  // Trim states all reach an accept state, so none shares the sink's block.
  const std::size_t sink_block = refinement.block_of(sink);
  std::vector<State> renumber(refinement.block_count(), 0);
  State next_id = 0;
  for (std::size_t b = 0; b < refinement.block_count(); ++b)
    if (b != sink_block) renumber[b] = next_id++;

  std::vector<Transition> transitions;
  std::vector<State> accepts;
  for (std::size_t b = 0; b < refinement.block_count(); ++b) {
    if (b == sink_block) continue;
    const State representative = refinement.members(b).front();
    if (t.is_accepting(representative)) accepts.push_back(renumber[b]);
    for (const Transition& tr : t.outgoing(representative))
      transitions.push_back({renumber[b], tr.label, renumber[refinement.block_of(tr.to)]});
  }

  return canonical(Dfa(Nfa(next_id, std::move(alphabet), std::move(transitions),
                           renumber[refinement.block_of(t.start())], std::move(accepts))));
}

}  // namespace entroscope
