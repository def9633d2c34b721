#include "arbor/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "arbor/acyclic_cover.hpp"
#include "arbor/cover.hpp"
#include "arbor/errors.hpp"
#include "arbor/families.hpp"
#include "arbor/oracle.hpp"
#include "arbor/td_cover.hpp"
#include "arbor/tw2.hpp"
#include "arbor/tw_general.hpp"
#include "arbor/validity.hpp"

namespace arbor::cli {

namespace {

using json = nlohmann::ordered_json;

// Small enough that the oracle comparison in `cover` stays quick.
constexpr int kCompareCap = 12;

// A path to an edge-list file, or a generator string such as "wheel:7" or "clique-tail:3,2".
Graph load_input(const std::string& input) {
  if (std::filesystem::exists(input)) return read_edge_list_file(input);
  auto colon = input.find(':');
  std::string family = input.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string::npos) {
    std::stringstream ss(input.substr(colon + 1));
    for (std::string tok; std::getline(ss, tok, ',');) {
      try {
        params.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw InputError("bad generator parameter '" + tok + "'");
      }
    }
  }
  auto names = families::family_names();
  if (std::find(names.begin(), names.end(), family) == names.end()) {
    throw InputError("no such file or generator: " + input);
  }
  return families::generate(family, params);
}

SearchBudget budget_from(long ms) { return ms > 0 ? SearchBudget::millis(ms) : SearchBudget::unlimited(); }

void maybe_dot(const std::string& path, const Graph& g, const std::vector<VertexSet>& overlay) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  write_dot(f, g, overlay);
}

// Never let an invalid cover out.
void emit_cover(std::ostream& out, const Graph& g, const ForestCover& c) {
  require_valid(g, c);
  out << "cover: " << cover_to_json(c) << "\n";
}

struct Options {
  std::string input;
  int k = 1;
  bool exact = false;
  bool bound_only = false;
  long budget_ms = 0;
  int max_vertices = 0;
  std::string method = "main";
  std::string route = "best";
  int t = 0;
  int d = 0;
  bool as_json = false;
  std::string dot;
  std::string family;
  std::vector<int> params;
  std::string out_path;
};

int cmd_fk(const Options& o, std::ostream& out) {
  if (o.exact && o.bound_only) throw CLI::ValidationError("--exact and --bound-only exclude each other");
  Graph g = load_input(o.input);
  ExactResult<ForestCover> r =
      o.bound_only ? f_k_bounds(g, o.k) : exact_f_k(g, o.k, FkLimits{budget_from(o.budget_ms), o.max_vertices});
  out << "k: " << o.k << "\n";
  if (r.exact()) {
    out << "f_k: " << r.value() << "\n";
  } else {
    out << "f_k: [" << r.lower << ", " << r.upper << "]\n";
  }
  out << "proof: " << to_string(r.mode) << "\n";
  if (r.certificate) {
    emit_cover(out, g, *r.certificate);
    maybe_dot(o.dot, g, r.certificate->forests);
  }
  return r.exact() ? ok : budget_exhausted;
}

int cmd_cover(const Options& o, std::ostream& out) {
  Graph g = load_input(o.input);
  SearchBudget budget = budget_from(o.budget_ms);
  ForestCover cover;
  std::string bound = "-";
  const std::string& m = o.method;
  if (m == "tw2") {
    if (!has_treewidth_at_most_2(g)) throw PreconditionError("method tw2 needs tree-width at most 2");
    if (o.k == 1) {
      cover = cover_f1_tw(g, 2);
      bound = "3";
    } else if (o.k == 2) {
      cover = cover_2valid_tw2(g);
      bound = "3";
    } else {
      throw PreconditionError("method tw2 covers k = 1 or k = 2 only");
    }
  } else if (m == "tw") {
    int t = o.t > 0 ? o.t : std::max(1, exact_treewidth(g));
    if (o.k == 1) {
      cover = cover_f1_tw(g, t);
      bound = std::to_string(binomial(t + 1, 2));
    } else if (o.k == 2) {
      cover = cover_f2_tw(g, t);
      bound = std::to_string(3 * binomial(t + 1, 3));
    } else {
      throw PreconditionError("method tw covers k = 1 or k = 2 only");
    }
  } else if (m == "td") {
    int d = o.d;
    if (d <= 0) {
      auto r = exact_tree_depth(g, budget);
      if (!r.exact()) throw BudgetExceeded("tree-depth search ran out of budget");
      d = r.value();
    }
    auto tree = underlying_tree(g, d);
    if (!tree) throw PreconditionError("method td needs tree-depth at most " + std::to_string(d));
    cover = cover_td(g, *tree, o.k);
    bound = std::to_string(int_pow(2 * o.k, d));
  } else if (m == "acyclic") {
    if (o.k == 1) {
      cover = cover_f1_acyclic(g, budget);
      auto x = exact_acyclic_chromatic(g, budget);
      bound = std::to_string(binomial(x.value(), 2));
    } else if (o.k == 2) {
      AcyclicRoute route = o.route == "pair"     ? AcyclicRoute::pair
                           : o.route == "vizing" ? AcyclicRoute::vizing
                                                 : AcyclicRoute::best;
      auto res = cover_f2_acyclic_detailed(g, route, budget);
      cover = res.cover;
      bound = std::to_string(res.bound) + " (" + to_string(res.route) + " route, x = " + std::to_string(res.x) + ")";
    } else {
      throw PreconditionError("method acyclic covers k = 1 or k = 2 only");
    }
  } else if (m == "main") {
    cover = cover_via_low_td_coloring(g, o.k, budget);
  } else {
    throw CLI::ValidationError("unknown method '" + m + "'");
  }
  require_valid(g, cover);
  out << "method: " << m << "\n";
  out << "size: " << cover.size() << "\n";
  out << "bound: " << bound << "\n";
  if (g.order() <= kCompareCap) {
    try {
      auto r = exact_f_k(g, o.k, FkLimits{SearchBudget::millis(5000), 0});
      if (r.exact()) {
        out << "exact_f_k: " << r.value() << "\n";
      } else {
        out << "exact_f_k: [" << r.lower << ", " << r.upper << "]\n";
      }
    } catch (const PreconditionError&) {
      out << "exact_f_k: unknown\n";
    }
  }
  emit_cover(out, g, cover);
  maybe_dot(o.dot, g, cover.forests);
  return ok;
}

template <typename C>
json interval(const ExactResult<C>& r) {
  if (r.exact()) return r.value();
  return json{{"unknown", true}, {"lower", r.lower}, {"upper", r.upper}};
}

int cmd_stats(const Options& o, std::ostream& out) {
  Graph g = load_input(o.input);
  SearchBudget budget = budget_from(o.budget_ms);
  json s;
  s["n"] = g.order();
  s["m"] = g.size();
  if (g.order() <= kExactTreewidthCap) {
    s["tw"] = exact_treewidth(g);
  } else {
    s["tw"] = json{{"unknown", true}};
  }
  s["td"] = interval(exact_tree_depth(g, budget));
  s["acyclic_chromatic"] = interval(exact_acyclic_chromatic(g, budget));
  try {
    s["arboricity"] = nash_williams_arboricity(g);
  } catch (const PreconditionError&) {
    s["arboricity"] = json{{"unknown", true}};
  }
  s["twin_edges"] = twin_edges(g).size();
  json profile = json::array();
  for (int k = 1; k < std::max(2, g.order()); ++k) {
    auto valid = k_valid_edges(g, k);
    if (valid.empty()) break;
    profile.push_back(json{{"k", k}, {"valid_edges", valid.size()}});
  }
  s["k_valid"] = profile;
  if (o.as_json) {
    out << s.dump(2) << "\n";
    return ok;
  }
  for (auto it = s.begin(); it != s.end(); ++it) {
    if (it.key() == "k_valid") continue;
    out << it.key() << ": " << it.value().dump() << "\n";
  }
  for (const auto& row : profile) {
    out << "k=" << row["k"].get<int>() << " valid edges: " << row["valid_edges"].get<int>() << "\n";
  }
  return ok;
}

int cmd_gen(const Options& o, std::ostream& out) {
  Graph g = families::generate(o.family, o.params);
  if (o.out_path.empty()) {
    write_edge_list(out, g);
  } else {
    std::ofstream f(o.out_path);
    if (!f) throw InputError("cannot write " + o.out_path);
    write_edge_list(f, g);
  }
  maybe_dot(o.dot, g, {});
  return ok;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"arbor: k-strong induced arboricity toolkit"};
  app.require_subcommand(1);
  Options o;
  long env_budget = 0;
  if (const char* e = std::getenv("ARBOR_BUDGET_MS")) env_budget = std::atol(e);
  o.budget_ms = env_budget;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "edge-list file or generator string such as wheel:7")->required();
    sub->add_option("--k", o.k, "forest strength k")->check(CLI::PositiveNumber);
    sub->add_option("--budget", o.budget_ms, "search budget in milliseconds (default $ARBOR_BUDGET_MS, 0 = none)");
    sub->add_option("--dot", o.dot, "also write a DOT drawing to this file");
  };

  auto* fk = app.add_subcommand("fk", "exact f_k with an optimal cover, or an interval");
  add_input(fk);
  fk->add_flag("--exact", o.exact, "run the exact search (default)");
  fk->add_flag("--bound-only", o.bound_only, "only the greedy and conflict bounds");
  fk->add_option("--max-vertices", o.max_vertices, "vertex cap for the exact search");

  auto* cover = app.add_subcommand("cover", "constructive cover with its bound");
  add_input(cover);
  cover->add_option("--method", o.method, "tw2, tw, td, acyclic or main")
      ->check(CLI::IsMember({"tw2", "tw", "td", "acyclic", "main"}));
  cover->add_option("--t", o.t, "tree-width bound for method tw (default: exact)");
  cover->add_option("--d", o.d, "tree-depth bound for method td (default: exact)");
  cover->add_option("--route", o.route, "acyclic route: pair, vizing or best")
      ->check(CLI::IsMember({"pair", "vizing", "best"}));

  auto* stats = app.add_subcommand("stats", "tw, td, acyclic chromatic number, arboricity, valid-edge profile");
  stats->add_option("input", o.input, "edge-list file or generator string")->required();
  stats->add_option("--budget", o.budget_ms, "search budget in milliseconds");
  stats->add_flag("--json", o.as_json, "machine-readable output");

  auto* gen = app.add_subcommand("gen", "write a generated family as an edge list");
  gen->add_option("family", o.family, "family name")->required();
  gen->add_option("params", o.params, "integer parameters");
  gen->add_option("--out", o.out_path, "output file (default stdout)");
  gen->add_option("--dot", o.dot, "also write a DOT drawing to this file");

  try {
    app.parse(argc, argv);
    if (*fk) return cmd_fk(o, out);
    if (*cover) return cmd_cover(o, out);
    if (*stats) return cmd_stats(o, out);
    return cmd_gen(o, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return parse_error;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return parse_error;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return precondition_failed;
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return budget_exhausted;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return verification_failed;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> storage{"arbor"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace arbor::cli
