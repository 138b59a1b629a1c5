#include "teamlogic_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "teamlogic/teamlogic.hpp"

namespace teamlogic::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kArityWarning = 8;

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

Json model_json(const KripkeModel& k) { return Json::parse(save_model(k)); }

struct TeamArgs {
  std::string name;
  std::string inline_list;
  bool inline_given = false;
};

Team resolve_team(const ModelDocument& doc, const TeamArgs& a, const char* flag) {
  if (!a.name.empty() && a.inline_given) {
    throw ModelError(std::string("give only one of --") + flag + " and --" + flag + "-inline");
  }
  if (a.inline_given) return doc.model.team(split_names(a.inline_list));
  if (!a.name.empty()) return doc.team(a.name);
  throw ModelError(std::string("one of --") + flag + " or --" + flag + "-inline is required");
}

Formula read_formula(const std::string& text, std::ostream& err) {
  Formula f = parse_formula(text);
  bool warned = false;
  for (const Position& p : positions(f)) {
    const Formula& g = subformula_at(f, p);
    if (!warned && g.op() == Op::Incl && g.arity() > kArityWarning) {
      err << "warning: inclusion atom of arity " << g.arity() << " (witness teams grow as 2^n)\n";
      warned = true;
    }
  }
  return f;
}

EvalConfig make_config(const std::string& mode, std::uint64_t max_steps) {
  EvalConfig c;
  c.max_steps = max_steps;
  if (mode == "reference") {
    c.mode = EvalMode::Reference;
  } else if (mode == "optimized") {
    c.mode = EvalMode::Optimized;
  } else {
    throw ModelError("unknown evaluation mode '" + mode + "'");
  }
  return c;
}

// Each subcommand fills `json` and `text`, and returns an exit code.
struct Result {
  int code = kHolds;
  Json json = Json::object();
  std::string text;
};

struct Common {
  bool json = false;
  std::uint64_t max_steps = EvalConfig{}.max_steps;
  std::string mode = "optimized";
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Team-semantics model checker for ML, MINC and ML(nab)", "teamlogic"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--json", common.json, "Structured output");
  app.add_option("--max-steps", common.max_steps, "Evaluation step budget per query")->capture_default_str();
  app.add_option("--mode", common.mode, "Evaluator: optimized or reference")->capture_default_str();

  std::string model_path, model2_path, formula_text, world, world2;
  std::string out_path, manifest_path, props_list, rewrite_to, strategy_path, audit_text;
  std::string property = "all", kind = "eta", bot = "constant";
  TeamArgs team, team2;
  unsigned depth = 0, n = 2, parallel = 1;
  std::size_t max_worlds = 3;
  std::optional<unsigned> closure_k;
  bool essential = false;
  std::vector<std::string> remove_worlds;

  auto add_team = [](CLI::App* sub, TeamArgs& t, const std::string& flag) {
    sub->add_option("--" + flag, t.name, "Named team from the model file");
    sub->add_option("--" + flag + "-inline", t.inline_list, "Comma-separated world names")
        ->each([&t](const std::string&) { t.inline_given = true; });
  };

  auto* check = app.add_subcommand("check", "Evaluate a formula on a team");
  check->add_option("--model", model_path, "Model file")->required();
  add_team(check, team, "team");
  check->add_option("--formula", formula_text, "Formula")->required();

  auto* bisim = app.add_subcommand("bisim", "Bounded bisimilarity of two worlds");
  bisim->add_option("--model", model_path, "Model file")->required();
  bisim->add_option("--model2", model2_path, "Second model file (default: --model)");
  bisim->add_option("--world", world, "World of the first model")->required();
  bisim->add_option("--world2", world2, "World of the second model")->required();
  bisim->add_option("-k,--depth", depth, "Bisimulation depth")->required();

  auto* teambisim = app.add_subcommand("teambisim", "Bounded team bisimilarity");
  teambisim->add_option("--model", model_path, "Model file")->required();
  teambisim->add_option("--model2", model2_path, "Second model file (default: --model)");
  add_team(teambisim, team, "team");
  add_team(teambisim, team2, "team2");
  teambisim->add_option("-k,--depth", depth, "Bisimulation depth")->required();

  auto* hintikka_cmd = app.add_subcommand("hintikka", "Hintikka and characteristic formulas");
  hintikka_cmd->add_option("--model", model_path, "Model file")->required();
  hintikka_cmd->add_option("--world", world, "World for chi");
  add_team(hintikka_cmd, team, "team");
  hintikka_cmd->add_option("--kind", kind, "For teams: eta, psi or zeta")->capture_default_str();
  hintikka_cmd->add_option("-k,--depth", depth, "Depth")->required();
  hintikka_cmd->add_option("--bot", bot, "bot encoding: constant or literal-pair")->capture_default_str();
  bool minimize = false;
  hintikka_cmd->add_flag("--minimize", minimize, "Drop [chi <= chi] atoms from psi");

  auto* synth = app.add_subcommand("synthesize", "Characteristic-formula synthesis from a manifest");
  synth->add_option("--manifest", manifest_path, "Manifest file")->required();

  auto* closure = app.add_subcommand("closure", "Closure-property checks over all small models");
  closure->add_option("--formula", formula_text, "Formula")->required();
  closure->add_option("--property", property, "downward, union, empty-team, bisim or all")->capture_default_str();
  closure->add_option("--max-worlds", max_worlds, "Largest model size")->capture_default_str();
  closure->add_option("--props", props_list, "Comma-separated propositions (default: those of the formula)");
  closure->add_option("-k,--depth", closure_k, "Bisimulation depth (default: modal depth)");
  closure->add_option("--parallel", parallel, "Worker threads")->capture_default_str();

  auto* game = app.add_subcommand("game", "Winning strategies of the semantic game");
  game->add_option("--model", model_path, "Model file")->required();
  add_team(game, team, "team");
  game->add_option("--formula", formula_text, "ML(nab) formula")->required();
  game->add_option("--verify", strategy_path, "Verify this strategy file instead of searching");
  game->add_option("--remove", remove_worlds, "Remove a world from the found strategy");
  game->add_flag("--essential", essential, "Report the essential elements of the team");

  auto* witness = app.add_subcommand("witness", "Lower-bound witness model for the n-ary inclusion atom");
  witness->add_option("-n", n, "Arity")->required();
  witness->add_option("--out", out_path, "Write the model (team 'T') to this file");
  witness->add_option("--audit", audit_text, "Run the removal argument for this ML(nab) formula");

  auto* props_cmd = app.add_subcommand("props", "Structural facts about a formula");
  props_cmd->add_option("--formula", formula_text, "Formula")->required();

  auto* rewrite_cmd = app.add_subcommand("rewrite", "Rewrite between nab and nonempty disjunction");
  rewrite_cmd->add_option("--formula", formula_text, "Formula")->required();
  rewrite_cmd->add_option("--to", rewrite_to, "nedis or nab")->required()->check(CLI::IsMember({"nedis", "nab"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    if (e.get_exit_code() != 0) err << app.help();
    return kUsage;
  }

  Result r;
  try {
    const EvalConfig config = make_config(common.mode, common.max_steps);

    if (*check) {
      ModelDocument doc = load_model_file(model_path);
      const Team t = resolve_team(doc, team, "team");
      const Formula f = read_formula(formula_text, err);
      Evaluator ev(doc.model, config);
      const bool holds = ev.eval(t, f);
      r.code = holds ? kHolds : kFails;
      r.json["verdict"] = holds ? "SAT" : "UNSAT";
      r.json["formula"] = print_formula(f);
      r.json["team"] = doc.model.names(t);
      r.json["dialect"] = std::string(to_string(dialect_of(f)));
      r.json["steps"] = ev.last_steps();
      r.text = holds ? "SAT\n" : "UNSAT\n";
    } else if (*bisim || *teambisim) {
      ModelDocument doc = load_model_file(model_path);
      ModelDocument doc2 = model2_path.empty() ? doc : load_model_file(model2_path);
      BisimChecker checker(doc.model, doc2.model);
      bool same = false;
      if (*bisim) {
        same = checker.bisimilar(doc.model.world(world), doc2.model.world(world2), depth);
      } else {
        const Team t = resolve_team(doc, team, "team");
        const Team t2 = resolve_team(doc2, team2, "team2");
        same = checker.team_bisimilar(t, t2, depth);
      }
      r.code = same ? kHolds : kFails;
      r.json["bisimilar"] = same;
      r.json["k"] = depth;
      r.text = same ? "BISIMILAR\n" : "NOT BISIMILAR\n";
    } else if (*hintikka_cmd) {
      ModelDocument doc = load_model_file(model_path);
      CharOptions opts;
      if (bot == "literal-pair") {
        opts.bot = BotEncoding::LiteralPair;
      } else if (bot != "constant") {
        throw ModelError("unknown bot encoding '" + bot + "'");
      }
      opts.minimize = minimize;
      Formula f = Formula::top();
      if (!world.empty()) {
        if (!team.name.empty() || team.inline_given) throw ModelError("give either --world or a team");
        f = hintikka(doc.model, doc.model.world(world), depth);
        if (opts.bot == BotEncoding::LiteralPair) f = encode_bot(f, doc.model.props());
      } else {
        const Team t = resolve_team(doc, team, "team");
        if (kind == "eta") {
          f = eta(doc.model, t, depth, opts);
        } else if (kind == "psi") {
          f = psi(doc.model, t, depth, opts);
        } else if (kind == "zeta") {
          f = zeta(doc.model, t, depth, opts);
        } else {
          throw ModelError("unknown kind '" + kind + "'");
        }
      }
      r.json["formula"] = print_formula(f);
      r.json["nodes"] = f.node_count();
      r.text = print_formula(f) + "\n";
    } else if (*synth) {
      std::ifstream in(manifest_path);
      if (!in) throw ModelError("cannot open manifest '" + manifest_path + "'");
      nlohmann::json m;
      try {
        m = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw ModelError(std::string("malformed manifest: ") + e.what());
      }
      if (!m.is_object() || !m.contains("k") || !m["k"].is_number_unsigned() || !m.contains("pairs") ||
          !m["pairs"].is_array()) {
        throw ModelError("manifest needs an unsigned 'k' and a 'pairs' list");
      }
      const std::string dialect = m.value("dialect", std::string("MINC"));
      TargetLogic logic;
      if (dialect == "MINC") {
        logic = TargetLogic::MINC;
      } else if (dialect == "MLNab") {
        logic = TargetLogic::MLNab;
      } else {
        throw ModelError("manifest dialect must be MINC or MLNab");
      }
      CharOptions opts;
      const std::string enc = m.value("bot_encoding", std::string("constant"));
      if (enc == "literal-pair") {
        opts.bot = BotEncoding::LiteralPair;
      } else if (enc != "constant") {
        throw ModelError("manifest bot_encoding must be constant or literal-pair");
      }
      opts.minimize = m.value("minimize", false);
      const std::filesystem::path base = std::filesystem::path(manifest_path).parent_path();
      Synthesizer s(m["k"].get<unsigned>(), logic, opts);
      for (const auto& pair : m["pairs"]) {
        if (!pair.is_object() || !pair.contains("model") || !pair["model"].is_string() || !pair.contains("team")) {
          throw ModelError("each manifest pair needs 'model' and 'team'");
        }
        const ModelDocument doc = load_model_file(base / pair["model"].get<std::string>());
        if (pair["team"].is_string()) {
          s.add(doc.model, doc.team(pair["team"].get<std::string>()));
        } else if (pair["team"].is_array()) {
          s.add(doc.model, doc.model.team(pair["team"].get<std::vector<std::string>>()));
        } else {
          throw ModelError("manifest team must be a team name or a list of worlds");
        }
      }
      const Formula f = s.result();
      r.json["formula"] = print_formula(f);
      r.json["disjuncts"] = s.distinct_disjuncts();
      r.text = print_formula(f) + "\n";
    } else if (*closure) {
      const Formula f = read_formula(formula_text, err);
      Domain domain;
      domain.max_worlds = max_worlds;
      domain.props = props_list.empty() ? props_of(f) : split_names(props_list);
      const unsigned k = closure_k.value_or(static_cast<unsigned>(modal_depth(f)));
      domain.max_k = k;
      ClosureOptions opts;
      opts.eval = config;
      opts.threads = parallel;

      if (property != "all" && property != "downward" && property != "union" && property != "empty-team" &&
          property != "bisim") {
        throw ModelError("unknown property '" + property + "'");
      }
      const bool all = property == "all";
      std::vector<ClosureReport> reports;
      if (all || property == "downward") reports.push_back(check_downward(f, domain, opts));
      if (all || property == "union") reports.push_back(check_union(f, domain, opts));
      if (all || property == "empty-team") reports.push_back(check_empty_team(f, domain, opts));
      if (all || property == "bisim") reports.push_back(check_bisim_invariance(f, k, domain, opts));

      std::ostringstream text;
      Json list = Json::array();
      for (const ClosureReport& rep : reports) {
        Json j;
        j["property"] = std::string(to_string(rep.property));
        j["passed"] = rep.passed;
        j["instances"] = rep.instances_checked;
        text << to_string(rep.property) << ": " << (rep.passed ? "PASS" : "FAIL") << " (" << rep.instances_checked
             << " instances)\n";
        if (rep.counterexample) {
          Json parts = Json::array();
          for (const Instance& part : rep.counterexample->parts) {
            Json pj;
            pj["model"] = model_json(part.model);
            pj["team"] = part.model.names(part.team);
            pj["satisfies"] = part.satisfies;
            text << "  " << (part.satisfies ? "satisfied" : "violated ") << " on team {"
                 << join(part.model.names(part.team)) << "} of " << model_json(part.model).dump() << "\n";
            parts.push_back(std::move(pj));
          }
          j["counterexample"] = std::move(parts);
          if (rep.counterexample->k) j["k"] = *rep.counterexample->k;
          r.code = kFails;
        }
        list.push_back(std::move(j));
      }
      r.json["formula"] = print_formula(f);
      r.json["max_worlds"] = max_worlds;
      r.json["props"] = domain.props;
      r.json["k"] = k;
      r.json["reports"] = std::move(list);
      r.text = text.str();
    } else if (*game) {
      ModelDocument doc = load_model_file(model_path);
      const Team t = resolve_team(doc, team, "team");
      const Formula f = read_formula(formula_text, err);
      std::ostringstream text;
      if (!strategy_path.empty()) {
        std::ifstream in(strategy_path);
        if (!in) throw ModelError("cannot open strategy '" + strategy_path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        const Strategy s = strategy_from_json(doc.model, buf.str());
        const auto violation = strategy_violation(doc.model, t, f, s);
        r.code = violation ? kFails : kHolds;
        r.json["winning"] = !violation;
        if (violation) r.json["violation"] = *violation;
        text << (violation ? "LOSING: " + *violation : std::string("WINNING")) << "\n";
      } else {
        std::optional<Strategy> s = find_strategy(doc.model, t, f, common.max_steps);
        r.code = s ? kHolds : kFails;
        r.json["winning"] = s.has_value();
        if (s) {
          for (const std::string& name : remove_worlds) {
            *s = remove_element(doc.model, *s, doc.model.world(name));
          }
          Team reduced = t;
          for (const std::string& name : remove_worlds) reduced.erase(doc.model.world(name));
          if (!remove_worlds.empty()) {
            const bool ok = verify_strategy(doc.model, reduced, f, *s);
            r.json["reduced_team"] = doc.model.names(reduced);
            r.json["reduced_verifies"] = ok;
            if (!ok) r.code = kFails;
          }
          r.json["strategy"] = Json::parse(strategy_to_json(doc.model, *s));
          text << "WINNING\n" << strategy_to_json(doc.model, *s);
        } else {
          text << "NO STRATEGY\n";
        }
      }
      if (essential) {
        const EssentialSet a = essential_elements(doc.model, t, f, config);
        r.json["essential"] = doc.model.names(a.members);
        text << "essential: {" << join(doc.model.names(a.members)) << "}\n";
      }
      r.text = text.str();
    } else if (*witness) {
      const LowerBoundWitness w = lower_bound_witness(n);
      if (n > kArityWarning) err << "warning: inclusion atom of arity " << n << "\n";
      std::ostringstream text;
      r.json["atom"] = print_formula(w.atom);
      r.json["team"] = w.model.names(w.team);
      r.json["worlds"] = w.model.size();
      text << "atom: " << print_formula(w.atom) << "\nT = {" << join(w.model.names(w.team)) << "}\n";
      if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw ModelError("cannot write '" + out_path + "'");
        std::vector<NamedTeam> teams{{"T", w.team}};
        file << save_model(w.model, teams);
        r.json["out"] = out_path;
      }
      if (!audit_text.empty()) {
        const Formula f = read_formula(audit_text, err);
        const AuditReport rep = audit_lower_bound(f, n, common.max_steps);
        Json a;
        a["formula"] = print_formula(f);
        a["nabla_count"] = rep.nabla_count;
        a["team_size"] = rep.team_size;
        a["certified"] = rep.removable.has_value();
        if (rep.removable) {
          a["removable"] = w.model.worlds()[*rep.removable];
          text << "certificate: removing " << w.model.worlds()[*rep.removable]
               << " keeps the formula true but falsifies the atom\n";
        } else {
          text << "no certificate: " << rep.nabla_count << " nab occurrences for a team of " << rep.team_size
               << "\n";
        }
        r.json["audit"] = std::move(a);
      }
      r.text = text.str();
    } else if (*props_cmd) {
      const Formula f = read_formula(formula_text, err);
      r.json["formula"] = print_formula(f);
      r.json["dialect"] = std::string(to_string(dialect_of(f)));
      r.json["modal_depth"] = modal_depth(f);
      r.json["nabla_count"] = occ_nabla(f);
      r.json["nodes"] = f.node_count();
      r.json["props"] = props_of(f);
      std::ostringstream text;
      text << "formula: " << print_formula(f) << "\ndialect: " << to_string(dialect_of(f))
           << "\nmodal depth: " << modal_depth(f) << "\nnab occurrences: " << occ_nabla(f)
           << "\nnodes: " << f.node_count() << "\nprops: " << join(props_of(f)) << "\n";
      r.text = text.str();
    } else if (*rewrite_cmd) {
      const Formula f = read_formula(formula_text, err);
      const Formula g = rewrite_to == "nedis" ? nabla_to_nedis(f) : nedis_to_nabla(f);
      r.json["formula"] = print_formula(g);
      r.text = print_formula(g) + "\n";
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (common.json) {
    out << r.json.dump(2) << "\n";
  } else {
    out << r.text;
  }
  return r.code;
}

}  // namespace teamlogic::cli
