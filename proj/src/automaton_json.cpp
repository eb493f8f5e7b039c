#include <algorithm>
#include <json.hpp>
#include <unordered_map>

#include "entroscope/error.hpp"
#include "entroscope/formats.hpp"

namespace entroscope {
namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

class DocumentReader {
 public:
  explicit DocumentReader(const json& doc) : doc_(doc) {}

  AutomatonDocument read() {
    if (!doc_.is_object()) throw ParseError("/", "automaton document must be an object");

    std::string name;
    if (auto it = doc_.find("name"); it != doc_.end() && !it->is_null()) {
      if (!it->is_string()) throw ParseError("/name", "expected a string");
      name = it->get<std::string>();
    }

    std::vector<Label> alphabet;
    const json& letters = require("alphabet");
    if (!letters.is_array()) throw ParseError("/alphabet", "expected an array of strings");
    for (std::size_t i = 0; i < letters.size(); ++i)
      alphabet.push_back(label_at(letters[i], "/alphabet/" + std::to_string(i)));

    read_states(require("states"));
    const State start = state_at(require("start"), "/start");

    std::vector<State> accepts;
    const json& accept_list = require("accepts");
    if (!accept_list.is_array()) throw ParseError("/accepts", "expected an array");
    for (std::size_t i = 0; i < accept_list.size(); ++i)
      accepts.push_back(state_at(accept_list[i], "/accepts/" + std::to_string(i)));

    std::vector<Transition> transitions;
    const json& moves = require("transitions");
    if (!moves.is_array()) throw ParseError("/transitions", "expected an array");
    for (std::size_t i = 0; i < moves.size(); ++i) {
      const std::string where = "/transitions/" + std::to_string(i);
      const json& move = moves[i];
      if (!move.is_object()) throw ParseError(where, "expected an object");
      if (!move.contains("from")) throw ParseError(where, "missing field 'from'");
      if (!move.contains("to")) throw ParseError(where, "missing field 'to'");
      Transition t;
      t.from = state_at(move["from"], where + "/from");
      t.to = state_at(move["to"], where + "/to");
      if (auto it = move.find("label"); it != move.end() && !it->is_null()) {
        t.label = label_at(*it, where + "/label");
        if (std::find(alphabet.begin(), alphabet.end(), t.label) == alphabet.end())
          throw ParseError(where + "/label", "label '" + t.label.name() + "' not in alphabet");
      }
      transitions.push_back(t);
    }

    try {
      return {std::move(name), Nfa(state_count_, std::move(alphabet), std::move(transitions),
                                   start, std::move(accepts))};
    } catch (const InvalidArgument& e) {
      throw ParseError("/", e.what());
    }
  }

 private:
  const json& require(const char* field) const {
    auto it = doc_.find(field);
    if (it == doc_.end()) throw ParseError("/", std::string("missing field '") + field + "'");
    return *it;
  }

  static Label label_at(const json& value, const std::string& where) {
    if (!value.is_string()) throw ParseError(where, "expected a label string");
    try {
      return Label::intern(value.get<std::string>());
    } catch (const InvalidArgument& e) {
      throw ParseError(where, e.what());
    }
  }

  void read_states(const json& states) {
    if (states.is_number_unsigned()) {
      state_count_ = states.get<std::size_t>();
    } else if (states.is_array()) {
      state_count_ = states.size();
      for (std::size_t i = 0; i < states.size(); ++i) {
        if (!states[i].is_string())
          throw ParseError("/states/" + std::to_string(i), "expected a state name");
        if (!names_.emplace(states[i].get<std::string>(), static_cast<State>(i)).second)
          throw ParseError("/states/" + std::to_string(i), "duplicate state name");
      }
    } else {
      throw ParseError("/states", "expected a state count or a list of names");
    }
    if (state_count_ == 0) throw ParseError("/states", "automaton needs at least one state");
  }

  State state_at(const json& value, const std::string& where) const {
    if (value.is_number_unsigned()) {
      const auto q = value.get<std::uint64_t>();
      if (q >= state_count_)
        throw ParseError(where, "state " + std::to_string(q) + " out of range (" +
                                    std::to_string(state_count_) + " states)");
      return static_cast<State>(q);
    }
    if (value.is_string()) {
      auto it = names_.find(value.get<std::string>());
      if (it == names_.end())
        throw ParseError(where, "unknown state '" + value.get<std::string>() + "'");
      return it->second;
    }
    throw ParseError(where, "expected a state index or name");
  }

  const json& doc_;
  std::size_t state_count_ = 0;
  std::unordered_map<std::string, State> names_;
};

}  // namespace

AutomatonDocument read_automaton_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line_column(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
  return DocumentReader(doc).read();
}

Nfa read_automaton(std::string_view text) { return read_automaton_document(text).automaton; }

std::string write_automaton(const Nfa& a, std::string_view name) {
  if (a.is_short_circuited())
    throw InvalidArgument("short-circuited automata have no document form");
  json doc;
  doc["name"] = std::string(name);
  doc["alphabet"] = json::array();
  for (Label l : a.alphabet()) doc["alphabet"].push_back(l.name());
  doc["states"] = a.state_count();
  doc["start"] = a.start();
  doc["accepts"] = std::vector<State>(a.accepts().begin(), a.accepts().end());
  doc["transitions"] = json::array();
  for (const Transition& t : a.transitions()) {
    json move = {{"from", t.from}, {"label", nullptr}, {"to", t.to}};
    if (!t.label.is_silent()) move["label"] = t.label.name();
    doc["transitions"].push_back(std::move(move));
  }
  return doc.dump(2) + "\n";
}

}  // namespace entroscope
