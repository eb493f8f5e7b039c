#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <variant>

#include "entroscope/automata.hpp"
#include "entroscope/error.hpp"
#include "entroscope/families.hpp"
#include "entroscope/formats.hpp"
#include "entroscope/measures.hpp"

namespace entroscope::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Options {
  std::string measure = "eig";
  double tolerance = SolverOptions{}.tolerance;
  std::size_t max_iterations = SolverOptions{}.max_iterations;
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 0;  // reserved; the pipeline is deterministic
  bool timing = false;
};

/// An input file is either an automaton document or a log.
using Input = std::variant<Nfa, EventLog>;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Input load(const std::string& path) {
  const std::string text = slurp(path);
  const std::string ext = fs::path(path).extension().string();
  try {
    if (ext == ".json") return read_automaton(text);
    if (ext == ".xes") return read_xes(text);
    return read_log(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.where(), e.what());
  }
}

Nfa as_automaton(const Input& in) {
  if (const auto* nfa = std::get_if<Nfa>(&in)) return *nfa;
  return prefix_tree_acceptor(std::get<EventLog>(in));
}

class Command {
 public:
  Command(const Options& options, std::ostream& out, std::ostream& err)
      : options_(options), out_(out), err_(err) {}

  SolverOptions solver() const {
    return {options_.tolerance, options_.max_iterations};
  }
  MeasureKind kind() const { return parse_measure_kind(options_.measure); }
  ReportFormat format() const { return parse_report_format(options_.format); }

  void emit(const std::string& text) {
    if (options_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(options_.out, std::ios::binary);
    if (!file) throw ParseError(options_.out, "cannot write file");
    file << text;
  }

  int report(MeasureReport r) {
    if (!options_.timing) r.runtime_ms = 0.0;
    for (const std::string& w : r.warnings) err_ << "warning: " << w << "\n";
    emit(write_report(r, format()));
    return kOk;
  }

  int precision_or_recall(bool want_precision, const std::string& spec_path,
                          const std::string& log_path) {
    const Nfa spec = as_automaton(load(spec_path));
    const Input log = load(log_path);
    if (const auto* l = std::get_if<EventLog>(&log))
      return report(want_precision ? precision(spec, *l, kind(), solver())
                                   : recall(spec, *l, kind(), solver()));
    auto [p, r] = precision_and_recall(spec, std::get<Nfa>(log), kind(), solver());
    return report(want_precision ? p : r);
  }

  int coverage_of(const std::string& x, const std::string& y) {
    return report(coverage(as_automaton(load(x)), as_automaton(load(y)), kind(), solver()));
  }

  int eigenvalue(const std::string& path, bool as_entropy) {
    const Measurement m = eig_short_circuit(to_dfa(as_automaton(load(path))), solver());
    if (!m.solver->converged) err_ << "warning: eigenvalue solver did not converge\n";
    if (as_entropy && m.value <= 0.0) throw DomainError("entropy of the empty language is undefined");
    const double value = as_entropy ? std::log2(m.value) : m.value;
    const char* name = as_entropy ? "entropy" : "eigenvalue";
    if (format() == ReportFormat::Text) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%s: %.3f\n", name, value);
      emit(buf);
    } else {
      emit(record({{name, value},
                   {"iterations", m.solver->iterations},
                   {"converged", m.solver->converged},
                   {"states", m.stats.states},
                   {"transitions", m.stats.transitions}}));
    }
    return kOk;
  }

  int cardinality_of(const std::string& path) {
    const std::uint64_t n = count_words(to_dfa(as_automaton(load(path))));
    if (format() == ReportFormat::Text)
      emit("cardinality: " + std::to_string(n) + "\n");
    else
      emit(record({{"cardinality", n}}));
    return kOk;
  }

  int inspect(const std::string& path) {
    const Input in = load(path);
    json stats;
    if (const auto* log = std::get_if<EventLog>(&in)) {
      stats = {{"kind", "log"},
               {"distinct_traces", log->distinct_count()},
               {"total_traces", log->total_count()},
               {"alphabet", log->alphabet().size()}};
    } else {
      const Nfa& a = std::get<Nfa>(in);
      stats = {{"kind", "automaton"},
               {"states", a.state_count()},
               {"transitions", a.transitions().size()},
               {"alphabet", a.alphabet().size()},
               {"deterministic", is_deterministic(a)},
               {"trim", is_trim(a)},
               {"ergodic", is_ergodic(a)},
               {"finite_language", has_finite_language(to_dfa(a))}};
    }
    emit(record(stats));
    return kOk;
  }

  int convert(const std::string& path, const std::string& to) {
    const Input in = load(path);
    const std::string name = fs::path(path).stem().string();
    if (to == "json") {
      emit(write_automaton(as_automaton(in), name));
    } else if (to == "dot") {
      emit(export_dot(as_automaton(in), name));
    } else if (to == "log") {
      if (const auto* log = std::get_if<EventLog>(&in))
        emit(write_log(*log));
      else
        emit(write_log(enumerate(to_dfa(std::get<Nfa>(in)))));
    } else {
      throw InvalidArgument("unknown conversion target '" + to + "'");
    }
    return kOk;
  }

  int family(const std::string& name, int x, int count) {
    if (options_.out.empty()) throw InvalidArgument("family needs --out DIR");
    const fs::path dir(options_.out);
    fs::create_directories(dir);
    auto save = [&](const std::string& file, const std::string& text) {
      std::ofstream(dir / file, std::ios::binary) << text;
      out_ << (dir / file).string() << "\n";
    };
    if (name == "bounded-repeat") {
      save("a02b.log", write_log(families::bounded_repeat_log()));
      save("M_" + std::to_string(x) + ".json",
           write_automaton(families::bounded_repeat(x), "M_" + std::to_string(x)));
    } else if (name == "kleene") {
      save("a02b.log", write_log(families::bounded_repeat_log()));
      save("M_star.json", write_automaton(families::kleene(), "M_star"));
    } else if (name == "permutations") {
      save("L5par.log", write_log(families::permutation_log()));
      save("M_" + std::to_string(count) + "par.json",
           write_automaton(families::permutations(count), "M_" + std::to_string(count) + "par"));
    } else if (name == "parallel-block") {
      save("L5par.log", write_log(families::permutation_log()));
      save("M_par.json", write_automaton(families::parallel_block(), "M_par"));
    } else {
      throw InvalidArgument("unknown family '" + name + "'");
    }
    return kOk;
  }

 private:
  std::string record(const json& fields) {
    if (format() == ReportFormat::Json) return fields.dump(2) + "\n";
    std::string header, row, text;
    for (auto it = fields.begin(); it != fields.end(); ++it) {
      const std::string value = it->is_string() ? it->get<std::string>() : it->dump();
      header += (header.empty() ? "" : ",") + it.key();
      row += (row.empty() ? "" : ",") + value;
      text += it.key() + ": " + value + "\n";
    }
    return format() == ReportFormat::Csv ? header + "\n" + row + "\n" : text;
  }

  static EventLog enumerate(const Dfa& d) {
    const Dfa t = trim(d);
    if (!has_finite_language(t)) throw InfiniteLanguage();
    EventLog log;
    if (t.accepts().empty()) return log;
    Trace word;
    auto walk = [&](auto&& self, State q) -> void {
      if (t.is_accepting(q)) log.add(word);
      for (const Transition& tr : t.outgoing(q)) {
        word.push_back(tr.label);
        self(self, tr.to);
        word.pop_back();
      }
    };
    walk(walk, t.start());
    return log;
  }

  const Options& options_;
  std::ostream& out_;
  std::ostream& err_;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--measure", o.measure, "Language measure")->check(CLI::IsMember({"eig", "card"}));
  cmd->add_option("--tol", o.tolerance, "Relative tolerance of the eigenvalue solver");
  cmd->add_option("--max-iter", o.max_iterations, "Iteration cap of the eigenvalue solver");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", o.out, "Output file (directory for `family`)");
  cmd->add_option("--seed", o.seed, "Reserved");
  cmd->add_flag("--timing", o.timing, "Report wall-clock runtime");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options options;
  if (const char* cap = std::getenv("ENTROSCOPE_MAX_ITER")) {
    try {
      options.max_iterations = std::stoull(cap);
    } catch (const std::exception&) {
      err << "error: ENTROSCOPE_MAX_ITER is not a number\n";
      return kUsage;
    }
  }

  CLI::App app{"Entropy-based precision, recall and coverage of automata and event logs",
               "entroscope"};
  app.require_subcommand(1);

  std::string first, second, to = "json", family_name;
  int x = 2, count = 120;

  auto* precision_cmd = app.add_subcommand("precision", "Precision of a specification w.r.t. a log");
  auto* recall_cmd = app.add_subcommand("recall", "Recall of a specification w.r.t. a log");
  auto* coverage_cmd = app.add_subcommand("coverage", "Share of X's behaviour that Y also has");
  for (auto* cmd : {precision_cmd, recall_cmd, coverage_cmd}) {
    cmd->add_option("first", first, "Specification (.json) or log")->required();
    cmd->add_option("second", second, "Log (.log/.txt/.xes) or specification (.json)")->required();
  }
  auto* eigenvalue_cmd = app.add_subcommand("eigenvalue", "Short-circuit eigenvalue measure");
  auto* entropy_cmd = app.add_subcommand("entropy", "Entropy of the short-circuited language");
  auto* cardinality_cmd = app.add_subcommand("cardinality", "Number of words of a finite language");
  auto* inspect_cmd = app.add_subcommand("inspect", "Structural statistics");
  auto* convert_cmd = app.add_subcommand("convert", "Convert between formats");
  for (auto* cmd : {eigenvalue_cmd, entropy_cmd, cardinality_cmd, inspect_cmd, convert_cmd})
    cmd->add_option("file", first, "Automaton or log")->required();
  convert_cmd->add_option("--to", to, "Target format")->check(CLI::IsMember({"json", "dot", "log"}));

  auto* family_cmd = app.add_subcommand("family", "Write a synthetic experiment family");
  family_cmd->add_option("name", family_name, "Family")
      ->required()
      ->check(CLI::IsMember({"bounded-repeat", "kleene", "permutations", "parallel-block"}));
  family_cmd->add_option("--x", x, "Repetition bound")->check(CLI::Range(2, 20));
  family_cmd->add_option("--count", count, "Number of permutations")->check(CLI::Range(5, 120));

  for (auto* cmd : app.get_subcommands({})) add_common(cmd, options);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  Command command(options, out, err);
  try {
    if (*precision_cmd) return command.precision_or_recall(true, first, second);
    if (*recall_cmd) return command.precision_or_recall(false, first, second);
    if (*coverage_cmd) return command.coverage_of(first, second);
    if (*eigenvalue_cmd) return command.eigenvalue(first, false);
    if (*entropy_cmd) return command.eigenvalue(first, true);
    if (*cardinality_cmd) return command.cardinality_of(first);
    if (*inspect_cmd) return command.inspect(first);
    if (*convert_cmd) return command.convert(first, to);
    if (*family_cmd) return command.family(family_name, x, count);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const InfiniteLanguage& e) {
    err << "error: " << e.what() << "\n";
    return kInapplicable;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInapplicable;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace entroscope::cli
