#include <cmath>
#include <cstdio>
#include <json.hpp>

#include "entroscope/error.hpp"
#include "entroscope/formats.hpp"

namespace entroscope {
namespace {

using nlohmann::json;

std::size_t total_iterations(const MeasureReport& r) {
  std::size_t total = 0;
  if (r.numerator.solver) total += r.numerator.solver->iterations;
  if (r.denominator.solver) total += r.denominator.solver->iterations;
  return total;
}

json solver_json(const std::optional<EigenResult<double>>& solver) {
  if (!solver) return nullptr;
  return {{"iterations", solver->iterations},
          {"converged", solver->converged},
          {"residual", std::isfinite(solver->residual) ? json(solver->residual) : json(nullptr)}};
}

std::optional<EigenResult<double>> solver_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  EigenResult<double> s;
  s.iterations = j.at("iterations").get<std::size_t>();
  s.converged = j.at("converged").get<bool>();
  const json& residual = j.at("residual");
  s.residual = residual.is_null() ? std::numeric_limits<double>::infinity() : residual.get<double>();
  return s;
}

json to_json(const MeasureReport& r) {
  return {{"comparison", r.comparison},
          {"kind", std::string(to_string(r.kind))},
          {"numerator", r.numerator.value},
          {"denominator", r.denominator.value},
          {"value", r.value},
          {"undefined", r.undefined},
          {"converged", r.converged()},
          {"iterations", total_iterations(r)},
          {"states_numerator", r.numerator.stats.states},
          {"states_denominator", r.denominator.stats.states},
          {"transitions_numerator", r.numerator.stats.transitions},
          {"transitions_denominator", r.denominator.stats.transitions},
          {"solver_numerator", solver_json(r.numerator.solver)},
          {"solver_denominator", solver_json(r.denominator.solver)},
          {"warnings", r.warnings},
          {"runtime_ms", r.runtime_ms}};
}

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

constexpr const char* kCsvHeader =
    "comparison,kind,numerator,denominator,value,undefined,converged,iterations,"
    "states_numerator,states_denominator,transitions_numerator,transitions_denominator,"
    "runtime_ms\n";

std::string csv_row(const MeasureReport& r) {
  return r.comparison + "," + std::string(to_string(r.kind)) + "," + number(r.numerator.value) +
         "," + number(r.denominator.value) + "," + number(r.value) + "," +
         (r.undefined ? "true" : "false") + "," + (r.converged() ? "true" : "false") + "," +
         std::to_string(total_iterations(r)) + "," + std::to_string(r.numerator.stats.states) +
         "," + std::to_string(r.denominator.stats.states) + "," +
         std::to_string(r.numerator.stats.transitions) + "," +
         std::to_string(r.denominator.stats.transitions) + "," + number(r.runtime_ms) + "\n";
}

std::string text(const MeasureReport& r) {
  std::string out = r.comparison + " (" + std::string(to_string(r.kind)) + "): " + fixed3(r.value);
  if (r.undefined) out += " (undefined)";
  out += "\n  numerator:   " + fixed3(r.numerator.value) + "  [" +
         std::to_string(r.numerator.stats.states) + " states, " +
         std::to_string(r.numerator.stats.transitions) + " transitions]\n";
  out += "  denominator: " + fixed3(r.denominator.value) + "  [" +
         std::to_string(r.denominator.stats.states) + " states, " +
         std::to_string(r.denominator.stats.transitions) + " transitions]\n";
  for (const std::string& w : r.warnings) out += "  warning: " + w + "\n";
  return out;
}

}  // namespace

ReportFormat parse_report_format(std::string_view t) {
  if (t == "json") return ReportFormat::Json;
  if (t == "csv") return ReportFormat::Csv;
  if (t == "text") return ReportFormat::Text;
  throw InvalidArgument("unknown report format '" + std::string(t) + "'");
}

std::string write_report(const MeasureReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json:
      return to_json(report).dump(2) + "\n";
    case ReportFormat::Csv:
      return kCsvHeader + csv_row(report);
    case ReportFormat::Text:
      return text(report);
  }
  return {};
}

std::string write_reports_csv(std::span<const MeasureReport> reports) {
  std::string out = kCsvHeader;
  for (const MeasureReport& r : reports) out += csv_row(r);
  return out;
}

MeasureReport read_report(std::string_view json_text) {
  try {
    const json j = json::parse(json_text);
    MeasureReport r;
    r.comparison = j.at("comparison").get<std::string>();
    r.kind = parse_measure_kind(j.at("kind").get<std::string>());
    r.numerator.value = j.at("numerator").get<double>();
    r.denominator.value = j.at("denominator").get<double>();
    r.value = j.at("value").get<double>();
    r.undefined = j.at("undefined").get<bool>();
    r.numerator.stats = {j.at("states_numerator").get<std::size_t>(),
                         j.at("transitions_numerator").get<std::size_t>()};
    r.denominator.stats = {j.at("states_denominator").get<std::size_t>(),
                           j.at("transitions_denominator").get<std::size_t>()};
    r.numerator.solver = solver_from(j.at("solver_numerator"));
    r.denominator.solver = solver_from(j.at("solver_denominator"));
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    r.runtime_ms = j.at("runtime_ms").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError("report", e.what());
  }
}

}  // namespace entroscope
