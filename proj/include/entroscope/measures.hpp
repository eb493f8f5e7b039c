#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "entroscope/automaton.hpp"
#include "entroscope/log.hpp"
#include "entroscope/spectral.hpp"

namespace entroscope {

enum class MeasureKind {
  Cardinality,             ///< |L|; finite languages only
  ShortCircuitEigenvalue,  ///< Perron-Frobenius eigenvalue of the short-circuited minimal DFA
};

std::string_view to_string(MeasureKind kind);
/// Accepts "eig" / "card" and the long enumerator names.
MeasureKind parse_measure_kind(std::string_view text);

struct AutomatonStats {
  std::size_t states = 0;
  std::size_t transitions = 0;
};

/// Measure of a single language plus what it took to get it.
struct Measurement {
  double value = 0.0;
  AutomatonStats stats;  ///< of the automaton actually measured
  std::optional<EigenResult<double>> solver;
};

struct MeasureReport {
  std::string comparison = "quotient";  ///< precision | recall | coverage | quotient
  MeasureKind kind = MeasureKind::ShortCircuitEigenvalue;
  Measurement numerator;
  Measurement denominator;
  double value = 0.0;
  /// Set when the denominator measure is zero; `value` is then 0.
  bool undefined = false;
  std::vector<std::string> warnings;
  double runtime_ms = 0.0;

  bool converged() const {
    return (!numerator.solver || numerator.solver->converged) &&
           (!denominator.solver || denominator.solver->converged);
  }
};

/// perron_frobenius(adjacency_matrix(short_circuit(minimize(d)))).value, 0
/// for the empty language. Throws InvalidArgument for short-circuited input.
Measurement eig_short_circuit(const Dfa& d, SolverOptions options = {});
double eig_short_circuit_measure(const Dfa& d, SolverOptions options = {});

/// count_words(d). Throws InfiniteLanguage.
Measurement cardinality(const Dfa& d);
double cardinality_measure(const Dfa& d);

Measurement measure(MeasureKind kind, const Dfa& d, SolverOptions options = {});

/// m(L(numerator)) / m(L(denominator)).
MeasureReport quotient(MeasureKind kind, const Dfa& numerator, const Dfa& denominator,
                       SolverOptions options = {});

/// m(L(spec) ∩ L(log)) / m(L(spec)).
MeasureReport precision(const Nfa& spec, const EventLog& log,
                        MeasureKind kind = MeasureKind::ShortCircuitEigenvalue,
                        SolverOptions options = {});

/// m(L(spec) ∩ L(log)) / m(L(log)).
MeasureReport recall(const Nfa& spec, const EventLog& log,
                     MeasureKind kind = MeasureKind::ShortCircuitEigenvalue,
                     SolverOptions options = {});

/// Precision and recall of `retrieved` against `relevant`, sharing one
/// intersection. The three measurements run concurrently.
std::pair<MeasureReport, MeasureReport> precision_and_recall(
    const Nfa& retrieved, const Nfa& relevant,
    MeasureKind kind = MeasureKind::ShortCircuitEigenvalue, SolverOptions options = {});

/// m(L(x) ∩ L(y)) / m(L(x)); 1 iff L(x) ⊆ L(y).
MeasureReport coverage(const Nfa& x, const Nfa& y,
                       MeasureKind kind = MeasureKind::ShortCircuitEigenvalue,
                       SolverOptions options = {});

}  // namespace entroscope
