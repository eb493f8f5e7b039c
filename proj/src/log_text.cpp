#include "entroscope/error.hpp"
#include "entroscope/formats.hpp"

namespace entroscope {

EventLog read_log(std::string_view text) {
  EventLog log;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;

    const std::string where = "line " + std::to_string(line_number);
    Trace trace;
    if (!line.empty()) {
      std::size_t start = 0;
      while (true) {
        const std::size_t space = line.find(' ', start);
        const std::string_view event = line.substr(start, space == std::string_view::npos ? space : space - start);
        if (event.empty())
          throw ParseError(where + ", column " + std::to_string(start + 1),
                           "empty event (events are separated by single spaces)");
        try {
          trace.push_back(Label::intern(event));
        } catch (const InvalidArgument& e) {
          throw ParseError(where + ", column " + std::to_string(start + 1), e.what());
        }
        if (space == std::string_view::npos) break;
        start = space + 1;
      }
    }
    log.add(std::move(trace));
  }
  return log;
}

std::string write_log(const EventLog& log) {
  std::string out;
  for (const auto& [trace, count] : log.entries()) {
    std::string line;
    for (std::size_t i = 0; i < trace.size(); ++i) {
      const std::string name = trace[i].name();
      if (name.empty() || name.find_first_of(" \t\r\n") != std::string::npos)
        throw InvalidArgument("label '" + name + "' cannot be written to a line log");
      if (i == 0 && name.front() == '#')
        throw InvalidArgument("trace starting with '" + name + "' would read back as a comment");
      if (i > 0) line += ' ';
      line += name;
    }
    for (std::uint64_t k = 0; k < count; ++k) {
      out += line;
      out += '\n';
    }
  }
  return out;
}

}  // namespace entroscope
