#include "entroscope/formats.hpp"

namespace entroscope {
namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string export_dot(const Nfa& a, std::string_view name) {
  std::string out = "digraph " + quoted(name) + " {\n";
  out += "  rankdir=LR;\n";
  out += "  node [shape=circle];\n";
  out += "  __start [shape=point];\n";
  for (State q = 0; q < a.state_count(); ++q) {
    out += "  " + std::to_string(q);
    if (a.is_accepting(q)) out += " [shape=doublecircle]";
    out += ";\n";
  }
  out += "  __start -> " + std::to_string(a.start()) + ";\n";
  for (const Transition& t : a.transitions())
    out += "  " + std::to_string(t.from) + " -> " + std::to_string(t.to) +
           " [label=" + quoted(t.label.name()) + "];\n";
  out += "}\n";
  return out;
}

}  // namespace entroscope
