// Copyright 2026 The paraconsistent-lts Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "plts/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "plts/format.hpp"

namespace plts::io {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void schema_error(const std::string& msg) {
  throw ParseError(1, 1, "schema: " + msg);
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where + " lacks \"" + key + "\"");
  if (!it->is_string()) schema_error(where + ": \"" + key + "\" must be a string");
  return it->get<std::string>();
}

double number_field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where + " lacks \"" + key + "\"");
  if (!it->is_number()) schema_error(where + ": \"" + key + "\" must be a number");
  return it->get<double>();
}

std::vector<std::string> string_array(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) schema_error(std::string("document lacks \"") + key + "\"");
  if (!it->is_array()) schema_error(std::string("\"") + key + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& v : *it) {
    if (!v.is_string()) schema_error(std::string("\"") + key + "\" must contain strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

json weight(double w) { return json(round_weight(w)); }

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

RawPlts parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(line, col, "invalid JSON");
  }
  if (!doc.is_object()) schema_error("top level must be an object");

  RawPlts raw;
  raw.states = string_array(doc, "states");
  raw.labels = string_array(doc, "labels");
  if (auto it = doc.find("initial"); it != doc.end() && !it->is_null()) {
    if (!it->is_string()) schema_error("\"initial\" must be a string");
    raw.initial = it->get<std::string>();
  }
  auto ts = doc.find("transitions");
  if (ts == doc.end()) schema_error("document lacks \"transitions\"");
  if (!ts->is_array()) schema_error("\"transitions\" must be an array");
  std::size_t k = 0;
  for (const auto& t : *ts) {
    const std::string where = "transition #" + std::to_string(++k);
    if (!t.is_object()) schema_error(where + " must be an object");
    raw.transitions.push_back({string_field(t, "from", where), string_field(t, "label", where),
                               string_field(t, "to", where), number_field(t, "pos", where),
                               number_field(t, "neg", where)});
  }
  return raw;
}

Plts load_plts(std::string_view text) { return from_raw(parse_json(text)); }

PointedPlts load_pointed(std::string_view text) {
  RawPlts raw = parse_json(text);
  if (!raw.initial) throw DomainError("pointed system requires an \"initial\" state");
  const StateId initial = *raw.initial;
  return PointedPlts(from_raw(raw), initial);
}

std::string to_json(const Plts& t, const std::optional<StateId>& initial) {
  json doc = json::object();
  doc["states"] = t.states();
  doc["labels"] = t.labels();
  if (initial) doc["initial"] = *initial;
  json edges = json::array();
  for (const auto& e : t.transitions()) {
    json edge = json::object();
    edge["from"] = e.from;
    edge["label"] = e.label;
    edge["to"] = e.to;
    edge["pos"] = weight(e.pos.value());
    edge["neg"] = weight(e.neg.value());
    edges.push_back(std::move(edge));
  }
  doc["transitions"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string to_json(const PointedPlts& t) { return to_json(t.system(), t.initial()); }

std::string to_dot(const Plts& t, const std::optional<StateId>& initial) {
  std::ostringstream out;
  out << "digraph plts {\n  rankdir=LR;\n";
  if (initial) {
    out << "  __start [shape=point];\n  __start -> " << dot_quote(*initial) << ";\n";
  }
  for (const auto& s : t.states()) out << "  " << dot_quote(s) << " [shape=circle];\n";
  for (const auto& e : t.transitions()) {
    out << "  " << dot_quote(e.from) << " -> " << dot_quote(e.to) << " [label="
        << dot_quote("(" + e.label + "," + format_weight(e.pos.value()) + "," +
                     format_weight(e.neg.value()) + ")")
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const PointedPlts& t) { return to_dot(t.system(), t.initial()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace plts::io
