// ugeo: command-line front end. Data commands (solve, grundy, construct,
// reduce, sum) always print JSON; --json switches the remaining commands and
// error diagnostics to JSON as well. Exit codes: 0 success, 1 domain error,
// 2 usage error.

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ugeo/bab.hpp"
#include "ugeo/constructor.hpp"
#include "ugeo/degree3.hpp"
#include "ugeo/exact.hpp"
#include "ugeo/graph_io.hpp"
#include "ugeo/http_server.hpp"
#include "ugeo/matching.hpp"
#include "ugeo/reductions.hpp"
#include "ugeo/service.hpp"
#include "ugeo/uno.hpp"
#include "ugeo/variants.hpp"
#include "ugeo/variants_io.hpp"
#include "ugeo/verify.hpp"

namespace {

using namespace ugeo;

bool g_json = false;

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("io_error", message) {}
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text << '\n';
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

// A variant envelope if the document carries a "variant" tag, else nullopt.
std::optional<VariantState> as_variant(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{') return std::nullopt;
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("variant")) return std::nullopt;
  return variant_from_json(doc);
}

Position read_position(const std::string& path) { return parse_position(read_input(path)); }

SolveBudget budget_from(std::uint64_t states, std::uint64_t millis) { return SolveBudget{states, millis}; }

int run_solve(const std::string& path, SolveBudget budget) {
  std::string text = read_input(path);
  if (auto v = as_variant(text)) {
    FastSolve r = fast_variant_solve(*v, budget);
    Advice a = r.winnable.value_or(false) ? advise(*v, budget) : Advice{};
    Json out{{"winnable", r.winnable ? Json(*r.winnable) : Json(nullptr)},
             {"winning_move", a.move ? move_to_json(*a.move) : Json(nullptr)},
             {"value", r.value ? Json(r.value->value()) : Json(nullptr)},
             {"method", r.method}};
    emit(out);
    return 0;
  }
  AnyPosition any = parse_graph(text);
  if (auto* d = std::get_if<DirectedPosition>(&any)) {
    emit(Json{{"winnable", gg_winnable(*d)}, {"method", "gg_search"}});
    return 0;
  }
  const Position& p = std::get<Position>(any);
  Determination d = determine(p.graph, VertexMask(p.graph.vertex_count()), p.token);
  emit(Json{{"winnable", d.winnable},
            {"winning_move", d.winning_move ? Json(*d.winning_move) : Json(nullptr)},
            {"method", "matching"}});
  return 0;
}

int run_grundy(const std::string& path, const std::string& method, SolveBudget budget) {
  std::string text = read_input(path);
  if (auto v = as_variant(text)) {
    emit(Json{{"nimber", variant_grundy(*v, budget).value()}});
    return 0;
  }
  Position p = parse_position(text);
  std::string m = method;
  if (m == "auto") m = p.graph.max_degree() <= 3 ? "degree3" : "bab";
  Nimber value(0);
  if (m == "exact")
    value = exact_grundy(p, budget);
  else if (m == "degree3")
    value = grundy_degree3(p);
  else
    value = grundy_bab(p, BabOptions{3, budget});
  emit(Json{{"nimber", value.value()}});
  return 0;
}

int run_construct(std::uint32_t n, const std::string& labels_path) {
  LabeledConstruction c = build_nimber_position(n);
  if (!labels_path.empty()) write_file(labels_path, c.labels_json());
  std::cout << serialize_graph(c.position) << '\n';
  return 0;
}

int run_sum(const std::vector<std::string>& paths, SolveBudget budget) {
  SumState sum;
  for (const auto& path : paths) sum.parts.push_back(make_plain(read_position(path)));
  FastSolve r = fast_variant_solve(sum, budget);
  if (!r.value) throw BudgetExceeded(budget.max_states);
  Json parts = Json::array();
  for (const auto& part : sum.parts) parts.push_back(fast_variant_solve(SumState{{part}}, budget).value->value());
  emit(Json{{"nimber", r.value->value()}, {"components", parts}, {"winnable", *r.winnable}, {"method", r.method}});
  return 0;
}

int run_verify(const std::string& suite, bool quick) {
  namespace v = ugeo::verify;
  const auto scale = quick ? v::Scale::quick : v::Scale::full;
  std::vector<v::Report> reports;
  auto want = [&](const char* name) { return suite == "all" || suite == name; };
  if (want("algebra")) reports.push_back(v::algebra(scale));
  if (want("matching")) reports.push_back(v::matching(scale));
  if (want("degree3")) reports.push_back(v::degree3(scale));
  if (want("constructor")) reports.push_back(v::constructor(scale));
  if (want("reductions")) {
    reports.push_back(v::reductions(scale));
    reports.push_back(v::chains(scale));
    reports.push_back(v::uno(scale));
  }
  if (want("variants")) reports.push_back(v::variants(scale));
  bool ok = true;
  Json out = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed;
    if (g_json) {
      out.push_back(Json{{"check", r.name},
                         {"passed", r.passed},
                         {"checks", r.checks},
                         {"failures", r.failures},
                         {"seconds", r.seconds},
                         {"detail", r.detail},
                         {"first_failure", r.first_failure}});
    } else {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << " (" << r.checks
                << " checks, " << r.failures << " failures, " << r.seconds << " s)";
      if (!r.passed) std::cout << "\n  first failure: " << r.first_failure;
      std::cout << '\n';
    }
  }
  if (g_json) emit(Json{{"suite", suite}, {"passed", ok}, {"reports", out}});
  return ok ? 0 : 1;
}

int run_reduce(const std::string& mode, const std::string& path, bool prelude, std::uint32_t from,
               std::uint32_t to, std::uint32_t k, std::uint32_t target, const std::string& gadgets_path) {
  if (mode == "gg2ug") {
    auto red = gg_to_ug(parse_directed_position(read_input(path)));
    if (!gadgets_path.empty()) {
      Json arcs = Json::array();
      for (const auto& g : red.gadgets.arcs)
        arcs.push_back(Json{{"x", g.x}, {"a", g.a}, {"a0", g.a0}, {"b", g.b}, {"c", g.c}, {"c0", g.c0},
                            {"f", g.f}, {"d", g.d}, {"d0", g.d0}, {"y", g.y}});
      write_file(gadgets_path, Json{{"arcs", arcs}, {"singleton", red.gadgets.singleton}}.dump());
    }
    std::cout << serialize_graph(prelude ? add_prelude(red.position) : red.position) << '\n';
  } else if (mode == "chain") {
    std::cout << serialize_graph(shift_nimber_chain(read_position(path), from, to)) << '\n';
  } else if (mode == "separate") {
    std::cout << serialize_graph(build_separation_instance(read_position(path), k, target)) << '\n';
  } else {
    auto red = gg_to_ug(parse_directed_position(read_input(path)));
    SwapUnoState s = uno_from_labeling(label_for_uno(red.position, red.gadgets));
    emit(variant_to_json(s));
  }
  return 0;
}

std::string describe_move(const Json& m) {
  std::string type = m.at("type");
  if (type == "traverse") return "to " + m.at("to").dump();
  if (type == "multi_traverse") return "token " + m.at("token_index").dump() + " to " + m.at("to").dump();
  if (type == "component_move") return "component " + m.at("component_index").dump() + " to " + m.at("to").dump();
  if (type == "uno_play") return "play " + m.at("card").dump();
  return type;
}

// Terminal game through the in-process service handlers.
int run_play(const std::string& path, const std::string& ai, SolveBudget budget) {
  std::string text = read_input(path);
  Json game;
  if (auto v = as_variant(text))
    game = variant_to_json(*v);
  else
    game = variant_to_json(make_plain(parse_position(text)));
  Json ai_players = Json::array();
  if (ai != "none") ai_players.push_back(std::stoi(ai));
  GameService service(ServiceConfig{budget, std::nullopt});
  ServiceResponse r = service.create(Json{{"game", game}, {"ai_players", ai_players}}.dump());
  if (r.status != 201) throw Error(r.body["error"]["kind"], r.body["error"]["message"]);
  const std::string id = r.body["id"];
  Json state = r.body;
  auto show_ai = [&](const Json& replies) {
    for (const auto& rep : replies)
      std::cout << "AI plays " << describe_move(rep["move"]) << " (" << rep["advice_quality"].get<std::string>()
                << ")\n";
  };
  show_ai(state["ai_replies"]);
  while (!state["terminal"].get<bool>()) {
    std::cout << "state: " << state["state"].dump() << "\nplayer " << state["to_move"] << " to move:\n";
    const auto& legal = state["legal_moves"];
    for (std::size_t i = 0; i < legal.size(); ++i) std::cout << "  [" << i << "] " << describe_move(legal[i]) << '\n';
    std::cout << "choose a move number, 'hint' or 'quit': " << std::flush;
    std::string line;
    if (!std::getline(std::cin, line) || line == "quit") return 0;
    if (line == "hint") {
      Json h = service.hint(id).body;
      std::cout << "hint: " << (h["move"].is_null() ? h["reason"].get<std::string>() : describe_move(h["move"])) << '\n';
      continue;
    }
    std::size_t pick = 0;
    try {
      pick = std::stoul(line);
    } catch (const std::exception&) {
      pick = legal.size();
    }
    if (pick >= legal.size()) {
      std::cout << "not a move number\n";
      continue;
    }
    ServiceResponse m = service.move(id, legal[pick].dump());
    if (m.status != 200) {
      std::cout << "rejected: " << m.body["error"]["message"].get<std::string>() << '\n';
      continue;
    }
    state = m.body;
    show_ai(state["ai_replies"]);
  }
  std::cout << "game over: player " << state["winner"] << " wins\n";
  return 0;
}

int run_serve(int port, const std::string& ui_dir, SolveBudget budget) {
  ServiceConfig config{budget, std::nullopt};
  if (const char* dir = std::getenv("GEO_SNAPSHOT_DIR"); dir && *dir) config.snapshot_dir = dir;
  GameService service(config);
  HttpOptions opts;
  if (const char* origin = std::getenv("GEO_CORS_ORIGIN"); origin && *origin) opts.cors_origin = origin;
  opts.ui_dir = ui_dir;
  httplib::Server server;
  mount_api(server, service, opts);
  int bound = port;
  if (port == 0) {
    bound = server.bind_to_any_port("127.0.0.1");
  } else if (!server.bind_to_port("0.0.0.0", port)) {
    throw IoError("cannot bind port " + std::to_string(port));
  }
  if (bound < 0) throw IoError("cannot bind a port");
  std::cout << "listening on http://127.0.0.1:" << bound << std::endl;
  server.listen_after_bind();
  return 0;
}

int report_error(const std::string& kind, const std::string& message, int code) {
  if (g_json)
    emit(Json{{"error", {{"kind", kind}, {"message", message}}}});
  else
    std::cerr << "error (" << kind << "): " << message << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Undirected Geography solver, constructor and game service"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "JSON output for every command and for errors");
  std::uint64_t max_states = SolveBudget{}.max_states, max_millis = SolveBudget{}.max_millis;
  app.add_option("--max-states", max_states, "search budget: memoized states");
  app.add_option("--max-millis", max_millis, "search budget: wall-clock milliseconds");

  std::string input = "-";
  auto* solve = app.add_subcommand("solve", "winnability and a winning move");
  solve->add_option("input", input, "graph or variant file, '-' for stdin");

  std::string method = "auto";
  auto* grundy = app.add_subcommand("grundy", "Grundy value");
  grundy->add_option("input", input, "graph or variant file, '-' for stdin");
  grundy->add_option("--method", method, "auto|exact|degree3|bab")
      ->check(CLI::IsMember({"auto", "exact", "degree3", "bab"}));

  std::uint32_t nimber = 0;
  std::string labels;
  auto* construct = app.add_subcommand("construct", "position of a requested nimber");
  construct->add_option("--nimber", nimber, "target value")->required();
  construct->add_option("--labels", labels, "write vertex labels to this file");

  auto* reduce = app.add_subcommand("reduce", "hardness-instance transformations");
  reduce->require_subcommand(1);
  bool prelude = false;
  std::string gadgets;
  std::uint32_t from = 2, to = 2, k = 2, target = 3;
  auto* gg2ug = reduce->add_subcommand("gg2ug", "directed position to undirected position");
  gg2ug->add_option("input", input, "directed position");
  gg2ug->add_flag("--prelude", prelude, "prepend the prelude gadget");
  gg2ug->add_option("--gadgets", gadgets, "write the gadget map to this file");
  auto* chain = reduce->add_subcommand("chain", "shift a two-valued position upward");
  chain->add_option("input", input, "position");
  chain->add_option("--from", from, "current upper value")->required();
  chain->add_option("--to", to, "target upper value")->required();
  auto* separate = reduce->add_subcommand("separate", "separation instance");
  separate->add_option("input", input, "position");
  separate->add_option("--k", k, "upper value of the input")->required();
  separate->add_option("--target", target, "value signalling the upper case")->required();
  auto* uno = reduce->add_subcommand("uno", "directed position to Swap Uno hands");
  uno->add_option("input", input, "directed position");

  std::vector<std::string> sum_inputs;
  auto* sum = app.add_subcommand("sum", "value of a disjunctive sum");
  sum->add_option("inputs", sum_inputs, "component positions")->required();

  std::string suite = "all";
  bool quick = false;
  auto* verify = app.add_subcommand("verify", "run property checks");
  verify->add_option("--suite", suite, "algebra|matching|degree3|constructor|reductions|variants|all")
      ->check(CLI::IsMember({"algebra", "matching", "degree3", "constructor", "reductions", "variants", "all"}));
  verify->add_flag("--quick", quick, "reduced instance counts");

  std::string ai = "1";
  auto* play = app.add_subcommand("play", "play against the AI in the terminal");
  play->add_option("input", input, "graph or variant file");
  play->add_option("--ai", ai, "AI player: 0, 1 or none")->check(CLI::IsMember({"0", "1", "none"}));

  int port = -1;
  std::string ui_dir;
  auto* serve = app.add_subcommand("serve", "HTTP/JSON game service");
  serve->add_option("--port", port, "port (0 picks a free one; default GEO_PORT or 8080)");
  serve->add_option("--ui", ui_dir, "directory served under /ui");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return report_error("usage", e.what(), 2);
  }

  const SolveBudget budget = budget_from(max_states, max_millis);
  try {
    if (*solve) return run_solve(input, budget);
    if (*grundy) return run_grundy(input, method, budget);
    if (*construct) return run_construct(nimber, labels);
    if (*reduce) {
      std::string mode = *gg2ug ? "gg2ug" : *chain ? "chain" : *separate ? "separate" : "uno";
      return run_reduce(mode, input, prelude, from, to, k, target, gadgets);
    }
    if (*sum) return run_sum(sum_inputs, budget);
    if (*verify) return run_verify(suite, quick);
    if (*play) return run_play(input, ai, budget);
    if (*serve) {
      if (port < 0) {
        const char* env = std::getenv("GEO_PORT");
        port = env && *env ? std::atoi(env) : 8080;
      }
      return run_serve(port, ui_dir, SolveBudget{2'000'000, 5'000});
    }
  } catch (const Error& e) {
    return report_error(e.kind(), e.what(), 1);
  } catch (const Json::exception& e) {
    return report_error("malformed_syntax", e.what(), 1);
  }
  return 0;
}
