#include "entroscope/measures.hpp"

#include <algorithm>
#include <chrono>
#include <future>

#include "entroscope/automata.hpp"
#include "entroscope/error.hpp"

namespace entroscope {
namespace {

AutomatonStats stats_of(const Dfa& d) { return {d.state_count(), d.transitions().size()}; }

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
};

MeasureReport make_report(std::string comparison, MeasureKind kind, Measurement numerator,
                          Measurement denominator, bool bounded) {
  MeasureReport report;
  report.comparison = std::move(comparison);
  report.kind = kind;
  report.numerator = std::move(numerator);
  report.denominator = std::move(denominator);

  if (report.denominator.value > 0.0) {
    report.value = report.numerator.value / report.denominator.value;
    if (bounded) report.value = std::clamp(report.value, 0.0, 1.0);
  } else {
    report.value = 0.0;
    report.undefined = true;
    report.warnings.push_back(report.numerator.value > 0.0
                                  ? "division by zero: denominator language is empty"
                                  : "0/0: numerator and denominator languages are empty");
  }
  if (report.numerator.solver && !report.numerator.solver->converged)
    report.warnings.push_back("eigenvalue solver did not converge for the numerator");
  if (report.denominator.solver && !report.denominator.solver->converged)
    report.warnings.push_back("eigenvalue solver did not converge for the denominator");
  return report;
}

struct Operands {
  Dfa left;
  Dfa right;
  Dfa shared;
};

Operands prepare(const Nfa& left, const Dfa& right) {
  Dfa l = minimize(to_dfa(left));
  Dfa r = minimize(right);
  Dfa shared = minimize(intersect(l, r));
  return {std::move(l), std::move(r), std::move(shared)};
}

}  // namespace

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::Cardinality:
      return "card";
    case MeasureKind::ShortCircuitEigenvalue:
      return "eig";
  }
  return "?";
}

MeasureKind parse_measure_kind(std::string_view text) {
  if (text == "eig" || text == "ShortCircuitEigenvalue") return MeasureKind::ShortCircuitEigenvalue;
  if (text == "card" || text == "Cardinality") return MeasureKind::Cardinality;
  throw InvalidArgument("unknown measure '" + std::string(text) + "'");
}

Measurement eig_short_circuit(const Dfa& d, SolverOptions options) {
  if (d.is_short_circuited()) throw InvalidArgument("automaton is already short-circuited");
  const Dfa circuit = short_circuit(minimize(d));
  Measurement m;
  m.stats = stats_of(circuit);
  m.solver = perron_frobenius(adjacency_matrix<double>(circuit), options);
  m.value = m.solver->value;
  return m;
}

double eig_short_circuit_measure(const Dfa& d, SolverOptions options) {
  return eig_short_circuit(d, options).value;
}

Measurement cardinality(const Dfa& d) {
  const Dfa t = trim(d);
  Measurement m;
  m.stats = stats_of(t);
  m.value = static_cast<double>(count_words(t));
  return m;
}

double cardinality_measure(const Dfa& d) { return cardinality(d).value; }

Measurement measure(MeasureKind kind, const Dfa& d, SolverOptions options) {
  return kind == MeasureKind::Cardinality ? cardinality(d) : eig_short_circuit(d, options);
}

MeasureReport quotient(MeasureKind kind, const Dfa& numerator, const Dfa& denominator,
                       SolverOptions options) {
  Timer timer;
  auto report = make_report("quotient", kind, measure(kind, numerator, options),
                            measure(kind, denominator, options), false);
  report.runtime_ms = timer.elapsed_ms();
  return report;
}

MeasureReport precision(const Nfa& spec, const EventLog& log, MeasureKind kind,
                        SolverOptions options) {
  Timer timer;
  const Operands ops = prepare(spec, prefix_tree_acceptor(log));
  auto report = make_report("precision", kind, measure(kind, ops.shared, options),
                            measure(kind, ops.left, options), true);
  if (report.denominator.value == 0.0) report.warnings.push_back("specification language is empty");
  report.runtime_ms = timer.elapsed_ms();
  return report;
}

MeasureReport recall(const Nfa& spec, const EventLog& log, MeasureKind kind,
                     SolverOptions options) {
  Timer timer;
  const Operands ops = prepare(spec, prefix_tree_acceptor(log));
  auto report = make_report("recall", kind, measure(kind, ops.shared, options),
                            measure(kind, ops.right, options), true);
  if (report.denominator.value == 0.0) report.warnings.push_back("log language is empty");
  report.runtime_ms = timer.elapsed_ms();
  return report;
}

std::pair<MeasureReport, MeasureReport> precision_and_recall(const Nfa& retrieved,
                                                             const Nfa& relevant,
                                                             MeasureKind kind,
                                                             SolverOptions options) {
  Timer timer;
  const Operands ops = prepare(retrieved, to_dfa(relevant));
  auto run = [&](const Dfa& d) {
    return std::async(std::launch::async, [&d, kind, options] { return measure(kind, d, options); });
  };
  auto shared = run(ops.shared);
  auto left = run(ops.left);
  auto right = run(ops.right);
  const Measurement shared_measure = shared.get();

  auto p = make_report("precision", kind, shared_measure, left.get(), true);
  auto r = make_report("recall", kind, shared_measure, right.get(), true);
  p.runtime_ms = r.runtime_ms = timer.elapsed_ms();
  return {std::move(p), std::move(r)};
}

MeasureReport coverage(const Nfa& x, const Nfa& y, MeasureKind kind, SolverOptions options) {
  Timer timer;
  const Operands ops = prepare(x, to_dfa(y));
  auto report = make_report("coverage", kind, measure(kind, ops.shared, options),
                            measure(kind, ops.left, options), true);
  report.runtime_ms = timer.elapsed_ms();
  return report;
}

}  // namespace entroscope
