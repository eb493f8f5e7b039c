#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <optional>
#include <sstream>

#include "entroscope/error.hpp"
#include "entroscope/formats.hpp"

namespace entroscope {

namespace pt = boost::property_tree;

EventLog read_xes(std::string_view text) {
  pt::ptree tree;
  try {
    std::istringstream in{std::string(text)};
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    throw ParseError("line " + std::to_string(e.line()), e.message());
  }

  auto root = tree.get_child_optional("log");
  if (!root) throw ParseError("", "XES document has no <log> element");

  EventLog log;
  std::size_t trace_index = 0;
  for (const auto& [tag, trace_node] : *root) {
    if (tag != "trace") continue;
    Trace trace;
    std::size_t event_index = 0;
    for (const auto& [event_tag, event_node] : trace_node) {
      if (event_tag != "event") continue;
      std::optional<std::string> name;
      for (const auto& [attr_tag, attr_node] : event_node) {
        if (attr_tag != "string") continue;
        if (attr_node.get<std::string>("<xmlattr>.key", "") == "concept:name") {
          if (auto value = attr_node.get_optional<std::string>("<xmlattr>.value")) name = *value;
          break;
        }
      }
      const std::string where =
          "trace " + std::to_string(trace_index) + ", event " + std::to_string(event_index);
      if (!name) throw ParseError(where, "event has no concept:name");
      try {
        trace.push_back(Label::intern(*name));
      } catch (const InvalidArgument& e) {
        throw ParseError(where, e.what());
      }
      ++event_index;
    }
    log.add(std::move(trace));
    ++trace_index;
  }
  return log;
}

}  // namespace entroscope
