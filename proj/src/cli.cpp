#include "h10/cli.hpp"

#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "h10/codec.hpp"
#include "h10/engines.hpp"
#include "h10/errors.hpp"
#include "h10/foursquare.hpp"
#include "h10/parser.hpp"

namespace h10 {

namespace {

using Json = nlohmann::ordered_json;

// exit codes
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kBudget = 2;

struct Output {
  bool json = false;
  Json doc;
  std::string text;
  int code = kOk;

  void finish(std::ostream& out) const {
    if (json) {
      out << doc.dump(2) << "\n";
    } else {
      out << text << "\n";
    }
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

std::unique_ptr<Oracle> oracle_from_file(const std::string& path, const Equation& eq,
                                         const RingSpec& ring) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open oracle file " + path);
  }
  Json doc = Json::parse(in, nullptr, true, true);
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "table") {
    std::vector<QTuple> solutions;
    for (const auto& item : doc.value("solutions", Json::array())) {
      QTuple tuple;
      for (const auto& component : item) {
        tuple.push_back(Rational::parse(component.get<std::string>()));
      }
      solutions.push_back(std::move(tuple));
    }
    return make_table_oracle(eq, ring, std::move(solutions), doc.value("infinite", false));
  }
  if (kind == "univariate-linear") {
    return make_univariate_linear_oracle();
  }
  if (kind == "bounded-search") {
    return make_bounded_search_oracle(doc.at("bound").get<std::uint64_t>());
  }
  throw ValidationError("unknown oracle kind \"" + kind + "\" in " + path);
}

// "table:v1,v2,...", "linear", "bounded:B", or a JSON oracle file path.
std::unique_ptr<Oracle> parse_oracle_spec(const std::string& spec, const Equation& eq,
                                          const RingSpec& ring) {
  if (spec.rfind("table:", 0) == 0) {
    if (eq.arity != 1) {
      throw ValidationError("table:<values> oracles cover arity-1 equations only; "
                            "use a JSON oracle file for higher arities");
    }
    std::vector<QTuple> solutions;
    const std::string values = spec.substr(6);
    if (!values.empty()) {
      for (const std::string& value : split(values, ',')) {
        solutions.push_back(QTuple{Rational::parse(value)});
      }
    }
    return make_table_oracle(eq, ring, std::move(solutions), false);
  }
  if (spec == "linear" || spec == "univariate-linear") {
    return make_univariate_linear_oracle();
  }
  if (spec.rfind("bounded:", 0) == 0) {
    return make_bounded_search_oracle(std::stoull(spec.substr(8)));
  }
  if (std::filesystem::exists(spec)) {
    return oracle_from_file(spec, eq, ring);
  }
  throw ValidationError("not an oracle spec: \"" + spec +
                        "\" (expected table:v1,v2,..., linear, bounded:B, or a file)");
}

FiniteListEnumerator list_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open list file " + path);
  }
  Json doc = Json::parse(in, nullptr, true, true);
  std::vector<Equation> items;
  for (const auto& text : doc.at("equations")) {
    items.push_back(parse_equation(text.get<std::string>()));
  }
  return make_cycling_list(doc.value("declared_complete_for", std::string{}), std::move(items));
}

struct TraceFile {
  std::ofstream stream;
  std::ostream* sink = nullptr;

  explicit TraceFile(const std::string& path) {
    if (path.empty()) return;
    stream.open(path);
    if (!stream) {
      throw ValidationError("cannot open trace file " + path);
    }
    sink = &stream;
  }
};

Json tuples_json(std::span<const QTuple> tuples) {
  Json arr = Json::array();
  for (const QTuple& t : tuples) arr.push_back(render_tuple(t));
  return arr;
}

void fill_outcome(Output& output, const EngineOutcome& outcome,
                  const char* halt_word_solvable) {
  if (const auto* halted = std::get_if<Halted>(&outcome)) {
    switch (halted->verdict) {
      case Verdict::finite:
        output.text = "finite k=" + std::to_string(halted->index);
        output.doc["result"] = "finite";
        output.doc["evidence"] = Json{{"k", halted->index},
                                      {"excluded", tuples_json(halted->excluded)}};
        break;
      case Verdict::solvable:
        output.text = std::string(halt_word_solvable) + " witness=" +
                      render_tuple(*halted->witness) + " i=" + std::to_string(halted->index);
        output.doc["result"] = halt_word_solvable;
        output.doc["evidence"] = Json{{"witness", render_tuple(*halted->witness)},
                                      {"index", halted->index}};
        break;
      case Verdict::unsolvable:
        output.text = "unsolvable i=" + std::to_string(halted->index) +
                      " matched=" + render_equation(*halted->matched);
        output.doc["result"] = "unsolvable";
        output.doc["evidence"] = Json{{"matched", render_equation(*halted->matched)},
                                      {"index", halted->index}};
        break;
    }
    return;
  }
  const auto& exhausted = std::get<BudgetExhausted>(outcome);
  output.text = "budget-exhausted steps=" + std::to_string(exhausted.steps) +
                " last-index=" + std::to_string(exhausted.last_index);
  output.doc["result"] = "budget-exhausted";
  output.doc["evidence"] = Json{{"steps", exhausted.steps},
                                {"last_index", exhausted.last_index}};
  output.code = kBudget;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diophantine decidability toolkit: exact rational codecs, ring models, "
               "equation gadgets, and semi-decision engines"};
  app.require_subcommand(1);

  bool json = false;
  app.add_flag("--json", json, "emit one JSON document instead of text");

  // Shared option storage; each subcommand binds the pieces it needs.
  std::string equation_text, tuple_text, rational_text, ring_text, oracle_spec, list_path,
      trace_path, mode = "direct", integer_text, m_text;
  std::uint64_t n = 1, budget = 1000, index_k = 0;
  std::vector<std::string> point_texts;

  auto* cmd_parse = app.add_subcommand("parse", "parse an equation and print its canonical form");
  cmd_parse->add_option("equation", equation_text)->required();

  auto* cmd_eval = app.add_subcommand("eval", "evaluate an equation at a rational tuple");
  cmd_eval->add_option("equation", equation_text)->required();
  cmd_eval->add_option("tuple", tuple_text)->required();

  auto* cmd_encode = app.add_subcommand("encode", "index of a rational tuple under the prime-exponent code");
  cmd_encode->add_option("tuple", tuple_text)->required();

  auto* cmd_decode = app.add_subcommand("decode", "rational tuple decoded from a natural number");
  cmd_decode->add_option("x", integer_text)->required();
  cmd_decode->add_option("--n", n, "tuple length")->capture_default_str();

  auto* cmd_contains = app.add_subcommand("ring-contains", "decide ring membership of a rational");
  cmd_contains->add_option("--ring", ring_text)->required();
  cmd_contains->add_option("rational", rational_text)->required();

  auto* cmd_find_m = app.add_subcommand("ring-find-m", "non-zero integer member of a subring");
  cmd_find_m->add_option("--ring", ring_text)->required();
  cmd_find_m->add_option("--mode", mode, "direct|constructive")->capture_default_str();

  auto* cmd_enumerate = app.add_subcommand("ring-enumerate", "k-th element of the ring enumeration");
  cmd_enumerate->add_option("--ring", ring_text)->required();
  cmd_enumerate->add_option("k", index_k)->required();

  auto* cmd_four = app.add_subcommand("four-squares", "least non-increasing four-square decomposition");
  cmd_four->add_option("n", integer_text)->required();

  auto* cmd_dummy = app.add_subcommand("gadget-dummy", "same equation with one extra (unused) variable");
  cmd_dummy->add_option("equation", equation_text)->required();

  auto* cmd_nonzero = app.add_subcommand("gadget-nonzero",
                                         "four-square non-zero test equation, or its witness for a given b");
  cmd_nonzero->add_option("--m", m_text)->required();
  auto* opt_b = cmd_nonzero->add_option("--b", rational_text, "ring element to witness");
  cmd_nonzero->add_option("--ring", ring_text)->needs(opt_b);
  opt_b->needs(cmd_nonzero->get_option("--ring"));

  auto* cmd_exclude = app.add_subcommand("gadget-exclude", "polynomial vanishing exactly on the given tuples");
  cmd_exclude->add_option("points", point_texts, "tuples like \"(1/2, 3)\"");
  cmd_exclude->add_option("--n", n, "arity (required when no points are given)")->capture_default_str();

  auto* cmd_avoid = app.add_subcommand("gadget-avoid",
                                       "single equation solvable iff the given one has a solution outside the excluded tuples");
  cmd_avoid->add_option("equation", equation_text)->required();
  cmd_avoid->add_option("--m", m_text)->required();
  cmd_avoid->add_option("--exclude", point_texts, "excluded tuple (repeatable)");

  auto* cmd_search = app.add_subcommand("search", "dovetailed witness search along the ring enumeration");
  cmd_search->add_option("equation", equation_text)->required();
  cmd_search->add_option("--ring", ring_text)->required();
  cmd_search->add_option("--budget", budget)->capture_default_str();
  cmd_search->add_option("--trace", trace_path, "write one TSV line per step");

  auto* cmd_semi = app.add_subcommand("semidecide-finite",
                                      "halts iff the equation has finitely many solutions (oracle-driven)");
  cmd_semi->add_option("equation", equation_text)->required();
  cmd_semi->add_option("--ring", ring_text)->required();
  cmd_semi->add_option("--oracle", oracle_spec)->required();
  cmd_semi->add_option("--m", m_text, "non-zero integer in the ring (default: computed)");
  cmd_semi->add_option("--budget", budget)->capture_default_str();
  cmd_semi->add_option("--trace", trace_path, "write one TSV line per step");

  auto* cmd_decide = app.add_subcommand("decide",
                                        "decide solvability against a finite-solutions equation list");
  cmd_decide->add_option("equation", equation_text)->required();
  cmd_decide->add_option("--ring", ring_text)->required();
  cmd_decide->add_option("--list", list_path)->required();
  cmd_decide->add_option("--budget", budget)->capture_default_str();
  cmd_decide->add_option("--trace", trace_path, "write one TSV line per step");

  std::vector<std::string> argv = args;
  argv.insert(argv.begin(), "h10");
  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const std::string& a : argv) raw.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Output output;
  output.json = json;

  try {
    if (*cmd_parse) {
      Equation eq = parse_equation(equation_text);
      output.doc["subcommand"] = "parse";
      output.doc["inputs"] = Json{{"equation", equation_text}};
      output.text = render_equation(eq);
      output.doc["result"] = output.text;
      output.doc["evidence"] = nullptr;
    } else if (*cmd_eval) {
      Equation eq = parse_equation(equation_text);
      QTuple point = parse_tuple(tuple_text);
      Rational value = eq.evaluate(point);
      output.doc["subcommand"] = "eval";
      output.doc["inputs"] = Json{{"equation", render_equation(eq)}, {"point", render_tuple(point)}};
      output.text = value.str();
      output.doc["result"] = output.text;
      output.doc["evidence"] = nullptr;
    } else if (*cmd_encode) {
      QTuple tuple = parse_tuple(tuple_text);
      BigInt x = encode_tuple(tuple);
      output.doc["subcommand"] = "encode";
      output.doc["inputs"] = Json{{"tuple", render_tuple(tuple)}};
      output.text = x.str();
      output.doc["result"] = output.text;
      output.doc["evidence"] = nullptr;
    } else if (*cmd_decode) {
      BigInt x{integer_text};
      QTuple tuple = decode_tuple(x, static_cast<unsigned>(n));
      output.doc["subcommand"] = "decode";
      output.doc["inputs"] = Json{{"x", integer_text}, {"n", n}};
      output.text = render_tuple(tuple);
      output.doc["result"] = output.text;
      output.doc["evidence"] = nullptr;
    } else if (*cmd_contains) {
      RingSpec ring = RingSpec::parse(ring_text);
      Rational r = Rational::parse(rational_text);
      const bool member = contains(ring, r);
      output.doc["subcommand"] = "ring-contains";
      output.doc["inputs"] = Json{{"ring", ring.str()}, {"rational", r.str()}};
      output.text = member ? "true" : "false";
      output.doc["result"] = member;
      output.doc["evidence"] = nullptr;
    } else if (*cmd_find_m) {
      RingSpec ring = RingSpec::parse(ring_text);
      FindMode find_mode;
      if (mode == "direct") {
        find_mode = FindMode::direct;
      } else if (mode == "constructive") {
        find_mode = FindMode::constructive;
      } else {
        throw ValidationError("--mode must be direct or constructive");
      }
      NonzeroInteger found = find_nonzero_integer(ring, find_mode);
      output.doc["subcommand"] = "ring-find-m";
      output.doc["inputs"] = Json{{"ring", ring.str()}, {"mode", mode}};
      output.text = "m=" + found.value.str();
      if (found.index) output.text += " i=" + std::to_string(*found.index);
      output.doc["result"] = found.value.str();
      output.doc["evidence"] =
          found.index ? Json{{"index", *found.index}} : Json(nullptr);
    } else if (*cmd_enumerate) {
      RingSpec ring = RingSpec::parse(ring_text);
      Rational element = enumerate_element(ring, BigInt(index_k));
      output.doc["subcommand"] = "ring-enumerate";
      output.doc["inputs"] = Json{{"ring", ring.str()}, {"k", index_k}};
      output.text = element.str();
      output.doc["result"] = output.text;
      output.doc["evidence"] = nullptr;
    } else if (*cmd_four) {
      BigInt value{integer_text};
      FourSquareWitness w = four_squares(value);
      output.doc["subcommand"] = "four-squares";
      output.doc["inputs"] = Json{{"n", integer_text}};
      output.text = "(" + w.t1.str() + ", " + w.t2.str() + ", " + w.t3.str() + ", " + w.t4.str() + ")";
      output.doc["result"] = output.text;
      output.doc["evidence"] = nullptr;
    } else if (*cmd_dummy) {
      Equation eq = parse_equation(equation_text);
      Equation extended = add_dummy(eq);
      output.doc["subcommand"] = "gadget-dummy";
      output.doc["inputs"] = Json{{"equation", render_equation(eq)}};
      output.text = render_equation(extended);
      output.doc["result"] = output.text;
      output.doc["evidence"] = nullptr;
    } else if (*cmd_nonzero) {
      BigInt m{m_text};
      output.doc["subcommand"] = "gadget-nonzero";
      if (rational_text.empty()) {
        Equation eq = build_nonzero_equation(m);
        output.doc["inputs"] = Json{{"m", m.str()}};
        output.text = render_equation(eq);
        output.doc["result"] = output.text;
        output.doc["evidence"] = nullptr;
      } else {
        RingSpec ring = RingSpec::parse(ring_text);
        Rational b = Rational::parse(rational_text);
        std::optional<Assignment> witness = witness_nonzero(b, m, ring);
        output.doc["inputs"] = Json{{"m", m.str()}, {"b", b.str()}, {"ring", ring.str()}};
        if (witness) {
          output.text = render_tuple(*witness);
          output.doc["result"] = output.text;
          output.doc["evidence"] = Json{{"equation", render_equation(build_nonzero_equation(m))}};
        } else {
          output.text = "none";
          output.doc["result"] = nullptr;
          output.doc["evidence"] = nullptr;
        }
      }
    } else if (*cmd_exclude) {
      std::vector<QTuple> points;
      for (const std::string& text : point_texts) points.push_back(parse_tuple(text));
      unsigned arity = static_cast<unsigned>(n);
      if (!points.empty() && cmd_exclude->get_option("--n")->count() == 0) {
        arity = static_cast<unsigned>(points.front().size());
      }
      Polynomial product = exclusion_product(points, arity);
      output.doc["subcommand"] = "gadget-exclude";
      Json inputs = Json{{"n", arity}};
      inputs["points"] = tuples_json(points);
      output.doc["inputs"] = inputs;
      output.text = product.str();
      output.doc["result"] = output.text;
      output.doc["evidence"] = nullptr;
    } else if (*cmd_avoid) {
      Equation eq = parse_equation(equation_text);
      BigInt m{m_text};
      std::vector<QTuple> points;
      for (const std::string& text : point_texts) points.push_back(parse_tuple(text));
      Equation avoid = avoidance_equation(eq, points, m);
      output.doc["subcommand"] = "gadget-avoid";
      Json inputs = Json{{"equation", render_equation(eq)}, {"m", m.str()}};
      inputs["excluded"] = tuples_json(points);
      output.doc["inputs"] = inputs;
      output.text = render_equation(avoid);
      output.doc["result"] = output.text;
      output.doc["evidence"] = nullptr;
    } else if (*cmd_search) {
      Equation eq = parse_equation(equation_text);
      RingSpec ring = RingSpec::parse(ring_text);
      TraceFile trace(trace_path);
      std::optional<SearchHit> hit = dovetail_search(eq, ring, budget, trace.sink);
      output.doc["subcommand"] = "search";
      output.doc["inputs"] =
          Json{{"equation", render_equation(eq)}, {"ring", ring.str()}, {"budget", budget}};
      if (hit) {
        output.text = "witness=" + render_tuple(hit->witness) + " i=" + std::to_string(hit->index);
        output.doc["result"] = "witness";
        output.doc["evidence"] =
            Json{{"witness", render_tuple(hit->witness)}, {"index", hit->index}};
      } else {
        output.text = "exhausted";
        output.doc["result"] = "exhausted";
        output.doc["evidence"] = Json{{"steps", budget}};
        output.code = kBudget;
      }
    } else if (*cmd_semi) {
      Equation eq = parse_equation(equation_text);
      RingSpec ring = RingSpec::parse(ring_text);
      BigInt m = m_text.empty() ? find_nonzero_integer(ring, FindMode::direct).value
                                : BigInt{m_text};
      std::unique_ptr<Oracle> oracle = parse_oracle_spec(oracle_spec, eq, ring);
      TraceFile trace(trace_path);
      EngineOutcome outcome = semidecide_finite(eq, ring, *oracle, m, budget, trace.sink);
      output.doc["subcommand"] = "semidecide-finite";
      output.doc["inputs"] = Json{{"equation", render_equation(eq)},
                                  {"ring", ring.str()},
                                  {"oracle", oracle->kind()},
                                  {"m", m.str()},
                                  {"budget", budget}};
      fill_outcome(output, outcome, "solvable");
    } else if (*cmd_decide) {
      Equation eq = parse_equation(equation_text);
      RingSpec ring = RingSpec::parse(ring_text);
      FiniteListEnumerator list = list_from_file(list_path);
      TraceFile trace(trace_path);
      EngineOutcome outcome = decide_solvability(eq, ring, list, budget, trace.sink);
      output.doc["subcommand"] = "decide";
      output.doc["inputs"] = Json{{"equation", render_equation(eq)},
                                  {"ring", ring.str()},
                                  {"list", list.declared_complete_for},
                                  {"budget", budget}};
      fill_outcome(output, outcome, "solvable");
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " [" << parse_error_kind_name(e.kind()) << " at bytes "
        << e.span().begin << ".." << e.span().end << "]\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  output.finish(out);
  return output.code;
}

}  // namespace h10
