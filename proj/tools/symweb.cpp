// Command line front end: evaluate web expressions, compute coloured Jones
// polynomials of braid closures, inspect projectors, and sweep the relation
// catalogue.
//
// Exit codes: 0 success, 1 input errors (parse or usage), 2 verification
// failures, 3 internal exact-arithmetic errors.

#include <symweb/symweb.hpp>
#include <symweb/json_io.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using namespace symweb;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerify = 2;
constexpr int kExitInternal = 3;

int thread_count_from_env() {
  const char* env = std::getenv("SYMWEB_THREADS");
  if (!env) return 1;
  const long v = std::strtol(env, nullptr, 10);
  return v >= 1 ? static_cast<int>(v) : 1;
}

std::vector<int> parse_colors(const std::string& spec) {
  std::vector<int> colors;
  size_t i = 0;
  while (i < spec.size()) {
    if (spec[i] == ',' || spec[i] == ' ') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(spec[i])))
      throw parse_error("bad colour list '" + spec + "'", 1, static_cast<int>(i) + 1);
    int v = 0;
    while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i])))
      v = v * 10 + (spec[i++] - '0');
    colors.push_back(v);
  }
  if (colors.empty()) throw parse_error("empty colour list", 1, 1);
  return colors;
}

std::string params_str(const Params& p) {
  std::string s;
  for (const auto& [name, value] : p) {
    if (!s.empty()) s += " ";
    s += name + "=" + std::to_string(value);
  }
  return s;
}

int run_eval(const std::string& expr_text, bool json) {
  ElaborationResult res = elaborate(expr_text);
  for (const std::string& w : res.warnings) std::cerr << "warning: " << w << "\n";
  const WebMorphism& u = res.morphism;
  const bool closed = u.domain().is_empty() && u.codomain().is_empty();
  if (closed) {
    const LaurentHalf value = u.is_zero() ? LaurentHalf() : eval_closed(u);
    if (json) {
      nlohmann::json doc{{"schema", 1}, {"kind", "polynomial"}, {"value", json_of(value)}};
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << value.str() << "\n";
    }
    return kExitOk;
  }
  if (u.domain().is_zero() || u.codomain().is_zero()) {
    // A pure zero morphism with collapsed boundaries evaluates to zero.
    if (json) {
      nlohmann::json doc{{"schema", 1}, {"kind", "zero"}};
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "0\n";
    }
    return kExitOk;
  }
  const IntertwinerMatrix m = eval(u);
  if (json) {
    nlohmann::json doc = json_of(m);
    doc["schema"] = 1;
    doc["kind"] = "matrix";
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << m.str() << "\n";
  }
  return kExitOk;
}

int run_jones(const std::string& colors_text, const std::string& word, const std::string& mode_name,
              bool json) {
  NormalizationMode mode;
  if (mode_name == "framed")
    mode = NormalizationMode::framed;
  else if (mode_name == "paper")
    mode = NormalizationMode::paper;
  else if (mode_name == "self-writhe")
    mode = NormalizationMode::self_writhe;
  else
    throw parse_error("unknown mode '" + mode_name + "' (framed, paper, self-writhe)", 1, 1);
  const ColoredBraidWord braid = ColoredBraidWord::parse(parse_colors(colors_text), word);
  const LaurentHalf value = colored_jones(braid, mode);
  if (json) {
    nlohmann::json doc{{"schema", 1},
                       {"kind", "polynomial"},
                       {"mode", mode_name},
                       {"colors", parse_colors(colors_text)},
                       {"word", word},
                       {"value", json_of(value)}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << value.str() << "\n";
  }
  return kExitOk;
}

int run_jw(int k, bool verify, bool json) {
  if (k < 1) throw parse_error("--k must be at least 1", 1, 1);
  const WebMorphism w = jw_word(k);
  const IntertwinerMatrix& m = jw_matrix(k);
  nlohmann::json doc{{"schema", 1},
                     {"k", k},
                     {"dimension", m.rows()},
                     {"word_terms", static_cast<long>(w.term_count())},
                     {"trace", json_of(m.trace().require_polynomial("projector trace"))}};
  int code = kExitOk;
  if (verify) {
    const JwReport rep = verify_jw(k);
    if (json) {
      doc["verify"] = {{"idempotent", rep.idempotent},
                       {"cap_kill", rep.cap_kill},
                       {"recursion", rep.recursion_match}};
    } else {
      std::cout << "idempotent: " << (rep.idempotent ? "OK" : "FAIL") << "\n";
      std::cout << "cap-kill: " << (rep.cap_kill ? "OK" : "FAIL") << "\n";
      std::cout << "recursion: " << (rep.recursion_match ? "OK" : "FAIL") << "\n";
    }
    if (!rep.ok()) code = kExitVerify;
  } else if (!json) {
    std::cout << "k: " << k << "\n";
    std::cout << "dimension: " << m.rows() << "\n";
    std::cout << "trace: " << m.trace().require_polynomial("projector trace").str() << "\n";
  }
  if (json) std::cout << doc.dump(2) << "\n";
  return code;
}

int run_check_relations(int max_thickness, bool json) {
  if (max_thickness < 1) throw parse_error("--max-thickness must be at least 1", 1, 1);
  const std::vector<SweepLine> lines = check_all_relations(max_thickness, thread_count_from_env());
  bool all_ok = true;
  nlohmann::json jlines = nlohmann::json::array();
  for (const SweepLine& line : lines) {
    all_ok = all_ok && line.ok;
    if (json) {
      nlohmann::json jp;
      for (const auto& [n, v] : line.params) jp[n] = v;
      jlines.push_back({{"rule", line.rule}, {"params", jp}, {"ok", line.ok}});
    } else {
      const std::string ps = params_str(line.params);
      std::cout << line.rule << (ps.empty() ? "" : " " + ps) << " : "
                << (line.ok ? "OK" : "FAIL") << "\n";
    }
  }
  if (json) {
    nlohmann::json doc{{"schema", 1}, {"ok", all_ok}, {"checks", std::move(jlines)}};
    std::cout << doc.dump(2) << "\n";
  }
  return all_ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for the symmetric web calculus"};
  app.require_subcommand(1);

  std::string expr_text;
  bool eval_json = false;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a web expression");
  eval_cmd->add_option("expr", expr_text, "expression, e.g. \"cap(1) ; cup(1)\"")->required();
  eval_cmd->add_flag("--json", eval_json, "JSON output");

  std::string colors_text, word_text, mode_name = "paper";
  bool jones_json = false;
  CLI::App* jones_cmd = app.add_subcommand("jones", "Coloured Jones value of a braid closure");
  jones_cmd->add_option("--colors", colors_text, "comma-separated strand colours")->required();
  jones_cmd->add_option("--word", word_text, "braid word, e.g. \"s1 S2 s1\"")->required();
  jones_cmd->add_option("--mode", mode_name, "framed | paper | self-writhe");
  jones_cmd->add_flag("--json", jones_json, "JSON output");

  int jw_k = 2;
  bool jw_verify = false, jw_json = false;
  CLI::App* jw_cmd = app.add_subcommand("jw", "Symmetrising projector on k thin strands");
  jw_cmd->add_option("--k", jw_k, "number of strands")->required();
  jw_cmd->add_flag("--verify", jw_verify, "check idempotence, hook-kill, recursion");
  jw_cmd->add_flag("--json", jw_json, "JSON output");

  int max_thickness = 4;
  bool rel_json = false;
  CLI::App* rel_cmd = app.add_subcommand("check-relations", "Verify the relation catalogue");
  rel_cmd->add_option("--max-thickness", max_thickness, "bound on total strand labels");
  rel_cmd->add_flag("--json", rel_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (app.got_subcommand(eval_cmd)) return run_eval(expr_text, eval_json);
    if (app.got_subcommand(jones_cmd)) return run_jones(colors_text, word_text, mode_name, jones_json);
    if (app.got_subcommand(jw_cmd)) return run_jw(jw_k, jw_verify, jw_json);
    if (app.got_subcommand(rel_cmd)) return run_check_relations(max_thickness, rel_json);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const exact_division_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
