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

#include "plts/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "plts/algebra.hpp"
#include "plts/behavior.hpp"
#include "plts/format.hpp"
#include "plts/io.hpp"
#include "plts/quantum.hpp"

namespace plts::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string model = "example";
  std::string mode = "full";
  std::optional<int> depth;
  std::string out_path;
  std::string format;
};

void add_out(CLI::App* app, Options& o, std::vector<std::string> formats) {
  app->add_option("--out", o.out_path, "Write the result to PATH instead of stdout");
  app->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember(std::move(formats)));
}

void add_model(CLI::App* app, Options& o) {
  app->add_option("--model", o.model, "Quantum weight model")
      ->check(CLI::IsMember({"example", "literal"}));
}

void add_mode(CLI::App* app, Options& o) {
  app->add_option("--mode", o.mode, "Simulation variant")
      ->check(CLI::IsMember({"full", "positive", "negative"}));
}

// Requested output format, or the command's default.
std::string format_or(const Options& o, const char* fallback) {
  return o.format.empty() ? fallback : o.format;
}

quantum::WeightModel model_of(const Options& o) {
  return o.model == "literal" ? quantum::WeightModel::LiteralFormula
                              : quantum::WeightModel::ExampleConsistent;
}

SimulationMode mode_of(const Options& o) {
  if (o.mode == "positive") return SimulationMode::PositiveOnly;
  if (o.mode == "negative") return SimulationMode::NegativeOnly;
  return SimulationMode::Full;
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
  } else {
    io::write_file(o.out_path, text);
  }
}

std::string pair(LatticeValue p, LatticeValue n) {
  return "(" + format_weight(p.value()) + "," + format_weight(n.value()) + ")";
}

std::string render_text(const PointedPlts& t) {
  std::ostringstream s;
  s << "initial: " << t.initial() << "\n";
  for (const auto& e : t.system().transitions()) {
    s << e.from << " -[" << e.label << "]-> " << e.to << " " << pair(e.pos, e.neg) << " "
      << to_string(classify(e.pos, e.neg)) << "\n";
  }
  return s.str();
}

std::string render(const PointedPlts& t, const std::string& format) {
  if (format == "dot") return io::to_dot(t);
  if (format == "text") return render_text(t);
  return io::to_json(t);
}

bool is_json_path(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

PointedPlts load_pointed_file(const std::string& path) {
  return io::load_pointed(io::read_file(path));
}

Plts load_plts_file(const std::string& path) { return io::load_plts(io::read_file(path)); }

quantum::Circuit load_circuit_file(const std::string& path) {
  quantum::Circuit c = quantum::parse_circuit(io::read_file(path));
  quantum::validate(c);
  return c;
}

// A circuit file or an already-translated chain in JSON.
PointedPlts load_chain(const std::string& path, quantum::WeightModel model) {
  if (is_json_path(path)) return load_pointed_file(path);
  return quantum::circuit_to_plts(load_circuit_file(path), model);
}

double parse_number(const std::string& s, const char* what) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(1, 1, std::string("expected a number for ") + what + ", found '" + s + "'");
  }
  return v;
}

json load_json_object(const std::string& path) {
  const std::string text = io::read_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(1, 1, path + ": invalid JSON (byte " + std::to_string(e.byte) + ")");
  }
  if (!doc.is_object()) throw ParseError(1, 1, path + ": expected a JSON object");
  return doc;
}

std::map<std::string, std::string> string_map(const json& obj, const std::string& where) {
  std::map<std::string, std::string> out;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!it->is_string()) throw ParseError(1, 1, where + ": values must be strings");
    out.emplace(it.key(), it->get<std::string>());
  }
  return out;
}

// Longest path length from `start`, or nullopt when a cycle is reachable.
std::optional<int> longest_path(const Plts& t, const StateId& start) {
  enum Mark { kNew, kActive, kDone };
  std::vector<Mark> mark(t.states().size(), kNew);
  std::vector<int> best(t.states().size(), 0);
  bool cyclic = false;
  std::function<int(const StateId&)> visit = [&](const StateId& s) -> int {
    const std::size_t i = t.state_index(s);
    if (mark[i] == kActive) {
      cyclic = true;
      return 0;
    }
    if (mark[i] == kDone) return best[i];
    mark[i] = kActive;
    int len = 0;
    for (std::size_t idx : t.outgoing(s)) len = std::max(len, 1 + visit(t.transitions()[idx].to));
    mark[i] = kDone;
    best[i] = len;
    return len;
  };
  const int len = visit(start);
  if (cyclic) return std::nullopt;
  return len;
}

std::string relation_text(const StateRelation& r, const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& [p, q] : r) arr.push_back(json::array({p, q}));
    return arr.dump(2) + "\n";
  }
  std::string s;
  for (const auto& [p, q] : r) s += "(" + p + "," + q + ")\n";
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<ScopedTolerance> eps;
  if (const char* env = std::getenv("PLTS_EPSILON")) {
    try {
      eps.emplace(parse_number(env, "PLTS_EPSILON"));
    } catch (const std::exception& e) {
      err << "error: PLTS_EPSILON: " << e.what() << "\n";
      return kParseError;
    }
  }

  CLI::App app{"Build, combine and compare paraconsistent labelled transition systems", "plts"};
  app.require_subcommand(1);
  Options o;
  std::function<void()> action;

  // build
  std::string circuit_path;
  auto* build = app.add_subcommand("build", "Translate a circuit file into a pointed system");
  build->add_option("circuit", circuit_path, "Circuit text file")->required();
  add_model(build, o);
  add_out(build, o, {"json", "dot", "text"});
  build->callback([&] {
    action = [&] {
      const auto c = load_circuit_file(circuit_path);
      emit(render(quantum::circuit_to_plts(c, model_of(o)), format_or(o, "json")), o, out);
    };
  });

  // compare
  std::string left_path, right_path;
  auto* compare = app.add_subcommand(
      "compare", "Rank two circuits (circuit files or translated JSON chains) by effectiveness");
  compare->add_option("left", left_path)->required();
  compare->add_option("right", right_path)->required();
  add_model(compare, o);
  compare->callback([&] {
    action = [&] {
      const auto first = quantum::maximal_weighted_trace(load_chain(left_path, model_of(o)));
      const auto second = quantum::maximal_weighted_trace(load_chain(right_path, model_of(o)));
      const auto verdict = quantum::compare_traces(first, second).verdict;
      const std::string p1 = pair(first.pos, first.neg);
      const std::string p2 = pair(second.pos, second.neg);
      std::ostringstream s;
      switch (verdict) {
        case quantum::Verdict::SecondMoreEffective:
          s << "right more effective: " << p2 << " dominates " << p1 << "\n";
          break;
        case quantum::Verdict::FirstMoreEffective:
          s << "left more effective: " << p1 << " dominates " << p2 << "\n";
          break;
        case quantum::Verdict::Equal:
          s << "equal: " << p1 << "\n";
          break;
        case quantum::Verdict::Incomparable:
          s << "incomparable: " << p1 << " vs " << p2 << "\n";
          break;
      }
      s << "left: " << to_string(first) << "\n";
      s << "right: " << to_string(second) << "\n";
      emit(s.str(), o, out);
    };
  });

  // sim / bisim
  std::vector<std::string> state_pair;
  std::string sys_a, sys_b;
  auto* sim = app.add_subcommand("sim", "Similarity of two systems");
  sim->add_option("left", sys_a)->required();
  sim->add_option("right", sys_b)->required();
  sim->add_option("--states", state_pair, "Check one pair: LEFT_STATE RIGHT_STATE")
      ->expected(2);
  add_mode(sim, o);
  add_out(sim, o, {"text", "json"});
  sim->callback([&] {
    action = [&] {
      const Plts a = load_plts_file(sys_a);
      const Plts b = load_plts_file(sys_b);
      if (!state_pair.empty()) {
        const bool r = similar(state_pair[0], state_pair[1], a, b, mode_of(o));
        emit(std::string("similar: ") + (r ? "true" : "false") + "\n", o, out);
      } else {
        emit(relation_text(largest_simulation(a, b, mode_of(o)), format_or(o, "text")), o, out);
      }
    };
  });

  auto* bisim = app.add_subcommand("bisim", "Bisimilarity of two systems");
  bisim->add_option("left", sys_a)->required();
  bisim->add_option("right", sys_b)->required();
  bisim->add_option("--states", state_pair, "Check one pair: LEFT_STATE RIGHT_STATE")
      ->expected(2);
  add_out(bisim, o, {"text", "json"});
  bisim->callback([&] {
    action = [&] {
      const Plts a = load_plts_file(sys_a);
      const Plts b = load_plts_file(sys_b);
      if (!state_pair.empty()) {
        const bool r = bisimilar(state_pair[0], state_pair[1], a, b);
        emit(std::string("bisimilar: ") + (r ? "true" : "false") + "\n", o, out);
      } else {
        emit(relation_text(largest_bisimulation(a, b), format_or(o, "text")), o, out);
      }
    };
  });

  // traces
  std::string trace_file, trace_from;
  bool maximal = false;
  auto* traces = app.add_subcommand("traces", "Enumerate weighted traces");
  traces->add_option("system", trace_file)->required();
  traces->add_option("--from", trace_from, "Start state (default: the initial state)");
  traces->add_option("--depth", o.depth, "Longest path to enumerate")
      ->check(CLI::PositiveNumber);
  traces->add_flag("--maximal", maximal, "Only paths that cannot be extended");
  add_out(traces, o, {"text", "json"});
  traces->callback([&] {
    action = [&] {
      const RawPlts raw = io::parse_json(io::read_file(trace_file));
      const Plts t = from_raw(raw);
      StateId start = trace_from;
      if (start.empty()) {
        if (!raw.initial) throw DomainError("no initial state: pass --from");
        start = *raw.initial;
      }
      int depth = 0;
      if (o.depth) {
        depth = *o.depth;
      } else {
        const auto len = longest_path(t, start);
        if (!len) throw DomainError("a cycle is reachable from '" + start + "': pass --depth");
        depth = std::max(1, *len);
      }
      const TraceSet set =
          weighted_traces(t, start, depth, maximal ? TraceFilter::MaximalOnly : TraceFilter::All);
      if (format_or(o, "text") == "json") {
        json arr = json::array();
        for (const auto& tr : set) {
          arr.push_back({{"labels", tr.labels},
                         {"pos", round_weight(tr.pos.value())},
                         {"neg", round_weight(tr.neg.value())}});
        }
        emit(arr.dump(2) + "\n", o, out);
      } else {
        std::string s;
        for (const auto& tr : set) s += to_string(tr) + "\n";
        emit(s, o, out);
      }
    };
  });

  // classify
  std::vector<std::string> classify_args;
  auto* cls = app.add_subcommand("classify",
                                 "Classify a weight pair (POS NEG) or every move of a system");
  cls->add_option("input", classify_args, "POS NEG, or a system file")->required()->expected(1, 2);
  cls->callback([&] {
    action = [&] {
      if (classify_args.size() == 2) {
        const LatticeValue p(parse_number(classify_args[0], "POS"));
        const LatticeValue n(parse_number(classify_args[1], "NEG"));
        out << to_string(classify(p, n)) << "\n";
        return;
      }
      const Plts t = load_plts_file(classify_args[0]);
      for (const auto& e : t.transitions()) {
        out << "(" << e.from << "," << e.label << "," << e.to << ") " << pair(e.pos, e.neg) << " "
            << to_string(classify(e.pos, e.neg)) << "\n";
      }
    };
  });

  // morphism
  std::string map_path;
  bool pointed = false;
  auto* morph = app.add_subcommand("morphism", "Check a state map (or pointed morphism)");
  morph->add_option("source", sys_a)->required();
  morph->add_option("target", sys_b)->required();
  morph->add_option("--map", map_path,
                    "JSON state map {\"w\":\"v\"}, or {\"sigma\":{..},\"lambda\":{..}} with --pointed")
      ->required();
  morph->add_flag("--pointed", pointed, "Check a pointed morphism with a partial label map");
  morph->callback([&] {
    action = [&] {
      const json doc = load_json_object(map_path);
      std::vector<std::string> lines;
      bool ok = false;
      if (pointed) {
        PointedMorphism m;
        if (doc.contains("sigma")) m.sigma = string_map(doc.at("sigma"), map_path);
        if (doc.contains("lambda")) m.lambda = string_map(doc.at("lambda"), map_path);
        const auto rep = is_pointed_morphism(m, load_pointed_file(sys_a), load_pointed_file(sys_b));
        ok = rep.ok;
        lines = rep.violations;
      } else {
        const auto rep = is_morphism(string_map(doc, map_path), load_plts_file(sys_a),
                                     load_plts_file(sys_b));
        ok = rep.ok;
        for (const auto& v : rep.violations) {
          lines.push_back(v.kind + " (" + v.label + "," + v.from + "," + v.to + "): " +
                          format_weight(v.source_weight) +
                          (v.kind == "positive" ? " > " : " < ") + format_weight(v.image_weight));
        }
      }
      std::string s = std::string("morphism: ") + (ok ? "true" : "false") + "\n";
      for (const auto& l : lines) s += "violation " + l + "\n";
      emit(s, o, out);
    };
  });

  // op
  auto* op = app.add_subcommand("op", "Apply an operator and print the resulting system");
  op->require_subcommand(1);
  std::string op_a, op_b, op_label, op_map, op_target = "positive";
  std::vector<std::string> op_labels;
  double op_pos = 1.0, op_neg = 0.0, op_v = 0.0, op_p = 0.0, op_n = 1.0;
  auto unary = [&](const char* name, const char* help) {
    auto* sub = op->add_subcommand(name, help);
    sub->add_option("system", op_a)->required();
    add_out(sub, o, {"json", "dot", "text"});
    return sub;
  };
  auto binary = [&](const char* name, const char* help,
                    PointedPlts (*fn)(const PointedPlts&, const PointedPlts&)) {
    auto* sub = op->add_subcommand(name, help);
    sub->add_option("left", op_a)->required();
    sub->add_option("right", op_b)->required();
    add_out(sub, o, {"json", "dot", "text"});
    sub->callback([&, fn] {
      action = [&, fn] {
        emit(render(fn(load_pointed_file(op_a), load_pointed_file(op_b)), format_or(o, "json")), o, out);
      };
    });
  };
  binary("product", "Parallel composition", &product);
  binary("interleave", "Asynchronous product", &interleave);
  binary("sync", "Synchronous product", &sync_product);
  binary("sum", "Non-deterministic sum", &sum);

  auto* op_restrict = unary("restrict", "Keep only the given labels");
  op_restrict->add_option("--labels", op_labels, "Labels to keep")->delimiter(',');
  op_restrict->callback([&] {
    action = [&] {
      const std::set<Label> keep(op_labels.begin(), op_labels.end());
      emit(render(restrict(load_pointed_file(op_a), keep), format_or(o, "json")), o, out);
    };
  });
  auto* op_reach = unary("reachable", "Trim to the states reachable from the initial state");
  op_reach->callback([&] {
    action = [&] { emit(render(reachable_part(load_pointed_file(op_a)), format_or(o, "json")), o, out); };
  });
  auto* op_relabel = unary("relabel", "Rename labels through a total map");
  op_relabel->add_option("--map", op_map, "JSON object label -> new label")->required();
  op_relabel->callback([&] {
    action = [&] {
      const auto lam = string_map(load_json_object(op_map), op_map);
      emit(render(relabel(load_pointed_file(op_a), lam), format_or(o, "json")), o, out);
    };
  });
  auto* op_prefix = unary("prefix", "Prepend a fresh initial state and one move");
  op_prefix->add_option("--label", op_label)->required();
  op_prefix->add_option("--pos", op_pos)->required();
  op_prefix->add_option("--neg", op_neg)->required();
  op_prefix->callback([&] {
    action = [&] {
      emit(render(prefix(op_label, LatticeValue(op_pos), LatticeValue(op_neg),
                         load_pointed_file(op_a)),
                  format_or(o, "json")),
           o, out);
    };
  });
  auto* op_approx = unary("approx", "Shift weights by v in [-1,1] with truncated addition");
  op_approx->add_option("--v", op_v)->required();
  op_approx->add_option("--target", op_target)
      ->check(CLI::IsMember({"positive", "negative", "both"}));
  op_approx->callback([&] {
    action = [&] {
      const ApproxTarget target = op_target == "negative" ? ApproxTarget::Negative
                                  : op_target == "both"   ? ApproxTarget::Both
                                                          : ApproxTarget::Positive;
      emit(render(v_approx(load_pointed_file(op_a), op_v, target), format_or(o, "json")), o, out);
    };
  });
  auto* op_purge = unary("purge", "Drop moves with pos < p or neg > n");
  op_purge->add_option("--p", op_p)->required();
  op_purge->add_option("--n", op_n)->required();
  op_purge->callback([&] {
    action = [&] {
      emit(render(purge(load_pointed_file(op_a), LatticeValue(op_p), LatticeValue(op_n)),
                  format_or(o, "json")),
           o, out);
    };
  });

  // validate
  std::string validate_path;
  auto* val = app.add_subcommand("validate", "Check every structural invariant of a system file");
  val->add_option("system", validate_path)->required();
  int validate_status = kOk;
  val->callback([&] {
    action = [&] {
      const auto violations = validate(io::parse_json(io::read_file(validate_path)));
      if (violations.empty()) {
        out << "ok\n";
        return;
      }
      for (const auto& v : violations) out << "violation [" << v.kind << "]: " << v.detail << "\n";
      validate_status = kDomainError;
    };
  });

  // export-dot
  std::string dot_path;
  auto* dot = app.add_subcommand("export-dot", "Render a system file as Graphviz DOT");
  dot->add_option("system", dot_path)->required();
  add_out(dot, o, {"dot"});
  dot->callback([&] {
    action = [&] {
      const RawPlts raw = io::parse_json(io::read_file(dot_path));
      std::optional<StateId> initial = raw.initial;
      emit(io::to_dot(from_raw(raw), initial), o, out);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (action) action();
    return validate_status;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const io::IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace plts::cli
