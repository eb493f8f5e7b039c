#include <doctest.h>

#include <entroscope/automata.hpp>
#include <entroscope/error.hpp>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/property_checks.hpp"

using namespace entroscope;

namespace {

constexpr std::size_t kMaxLength = 6;

// Structural invariants every automaton must satisfy.
bool well_formed(const Nfa& a) {
  if (a.state_count() == 0 || a.start() >= a.state_count()) return false;
  for (State q : a.accepts())
    if (q >= a.state_count()) return false;
  for (const Transition& t : a.transitions()) {
    if (t.from >= a.state_count() || t.to >= a.state_count()) return false;
    if (!t.label.is_silent() &&
        std::find(a.alphabet().begin(), a.alphabet().end(), t.label) == a.alphabet().end())
      return false;
  }
  return std::adjacent_find(a.transitions().begin(), a.transitions().end()) == a.transitions().end();
}

bool same_bounded_language(const Nfa& expected, const Nfa& actual) {
  const auto sigma = oracle::alphabet_union(expected, actual);
  for (const auto& w : oracle::all_words(sigma, kMaxLength))
    if (oracle::accepts(expected, w) != oracle::accepts(actual, w)) return false;
  return true;
}

// w = u1 χ u2 χ ... χ uk with every ui in L(d).
bool in_short_circuit_language(const Dfa& d, const oracle::Word& w) {
  oracle::Word piece;
  for (Label l : w) {
    if (l != Label::chi()) {
      piece.push_back(l);
      continue;
    }
    if (!oracle::accepts(d, piece)) return false;
    piece.clear();
  }
  return oracle::accepts(d, piece);
}

void require_clean(const props::Outcome& o) {
  CHECK_MESSAGE(o.violations == 0, o.example);
}

}  // namespace

TEST_CASE("determinize preserves the language") {
  gen::Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    const Nfa a = gen::random_nfa(rng);
    const Dfa d = determinize(a);
    CHECK(well_formed(d));
    CHECK(is_deterministic(d));
    CHECK(same_bounded_language(a, d));
  }
}

TEST_CASE("minimize preserves the language and is idempotent") {
  gen::Rng rng(42);
  for (int i = 0; i < 300; ++i) {
    const Dfa d = determinize(gen::random_nfa(rng));
    const Dfa m = minimize(d);
    CHECK(well_formed(m));
    CHECK(is_trim(m));
    CHECK(m.state_count() <= std::max<std::size_t>(1, trim(d).state_count()));
    CHECK(same_bounded_language(d, m));
    CHECK(isomorphic(minimize(m), m));
  }
}

TEST_CASE("trim preserves the language") {
  gen::Rng rng(43);
  for (int i = 0; i < 300; ++i) {
    const Nfa a = gen::random_nfa(rng);
    const Nfa t = trim(a);
    CHECK(well_formed(t));
    CHECK(is_trim(t));
    CHECK(same_bounded_language(a, t));
  }
}

TEST_CASE("intersect is the product language") {
  gen::Rng rng(44);
  for (int i = 0; i < 300; ++i) {
    const Dfa x = gen::random_dfa(rng, 6, 3), y = gen::random_dfa(rng, 6, 3);
    const Dfa both = intersect(x, y);
    CHECK(well_formed(both));
    const auto sigma = oracle::alphabet_union(x, y);
    for (const auto& w : oracle::all_words(sigma, 5))
      CHECK(oracle::accepts(both, w) == (oracle::accepts(x, w) && oracle::accepts(y, w)));
  }
}

TEST_CASE("short_circuit language and ergodicity") {
  gen::Rng rng(45);
  for (int i = 0; i < 200; ++i) {
    const Dfa d = gen::random_trim_dfa(rng, 6, 2);
    const Dfa s = short_circuit(d);
    CHECK(well_formed(s));
    CHECK(is_deterministic(s));
    CHECK(is_ergodic(s));
    std::vector<Label> sigma(d.alphabet().begin(), d.alphabet().end());
    sigma.push_back(Label::chi());
    for (const auto& w : oracle::all_words(sigma, 5))
      CHECK(accepts(s, w) == in_short_circuit_language(d, w));
  }
}

TEST_CASE("count_words matches enumeration") {
  gen::Rng rng(46);
  int checked = 0;
  while (checked < 300) {
    const Dfa d = gen::random_dfa(rng, 12, 3, 0.4);
    if (!has_finite_language(d)) {
      CHECK_THROWS_AS(count_words(d), InfiniteLanguage);
      continue;
    }
    CHECK(count_words(d) == oracle::enumerate_finite(d).size());
    ++checked;
  }
}

TEST_CASE("count_words_of_length matches enumeration") {
  gen::Rng rng(47);
  for (int i = 0; i < 100; ++i) {
    const Dfa d = gen::random_dfa(rng, 6, 3);
    const auto lang = oracle::bounded_language(d, oracle::alphabet_of(d), 5);
    for (std::size_t n = 0; n <= 5; ++n) {
      const auto expected = std::count_if(lang.begin(), lang.end(), [n](const auto& w) { return w.size() == n; });
      CHECK(count_words_of_length(d, n) == static_cast<std::uint64_t>(expected));
    }
  }
}

TEST_CASE("quotient and precision properties") {
  gen::Rng rng(48);
  constexpr std::size_t n = 200;
  require_clean(props::fixed_numerator(rng, n));
  require_clean(props::fixed_denominator(rng, n));
  require_clean(props::fixed_numerator_universe(rng, n));
  require_clean(props::precision_over_designs(rng, n));
  require_clean(props::precision_over_executions(rng, n));
  require_clean(props::intervals(rng, n));
  require_clean(props::maximal(rng, n));
  require_clean(props::minimal(rng, n));
}
