#pragma once

#include <span>
#include <string>
#include <string_view>

#include "entroscope/automaton.hpp"
#include "entroscope/log.hpp"
#include "entroscope/measures.hpp"

namespace entroscope {

// Automaton documents are JSON objects:
//
//   { "name": "S2",
//     "alphabet": ["a", "b"],
//     "states": 3,                      // or a list of state names
//     "start": 0,                       // index, or name when states are named
//     "accepts": [0],
//     "transitions": [ {"from": 0, "label": "a", "to": 1},
//                      {"from": 1, "label": null, "to": 2} ] }
//
// A null or absent label is a silent move. "__chi__" is rejected.

struct AutomatonDocument {
  std::string name;
  Nfa automaton;
};

AutomatonDocument read_automaton_document(std::string_view text);
Nfa read_automaton(std::string_view text);
/// Throws InvalidArgument for short-circuited automata.
std::string write_automaton(const Nfa& a, std::string_view name = {});

// Log documents: one trace per line, events separated by single spaces,
// identical lines accumulate, a blank line is the empty trace and lines
// starting with '#' are comments.

EventLog read_log(std::string_view text);
/// Throws InvalidArgument for labels the line format cannot carry.
std::string write_log(const EventLog& log);

/// <log>/<trace>/<event> with <string key="concept:name" value="..."/>.
/// Every other element and attribute is ignored.
EventLog read_xes(std::string_view text);

std::string export_dot(const Nfa& a, std::string_view name = "automaton");

enum class ReportFormat { Json, Csv, Text };

ReportFormat parse_report_format(std::string_view text);
std::string write_report(const MeasureReport& report, ReportFormat format);
/// Header plus one row per report.
std::string write_reports_csv(std::span<const MeasureReport> reports);
MeasureReport read_report(std::string_view json_text);

}  // namespace entroscope
