// Copyright 2026 The sharpcsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sharpcsp/cli.h"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "sharpcsp/affine_count.h"
#include "sharpcsp/chain.h"
#include "sharpcsp/classifier.h"
#include "sharpcsp/downsets.h"
#include "sharpcsp/gadget_library.h"
#include "sharpcsp/graph.h"
#include "sharpcsp/pinning.h"
#include "sharpcsp/reductions.h"
#include "sharpcsp/rounding.h"

namespace sharpcsp::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

/// An identity check that should hold did not.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Resolves `language <path>` relative to the including file.
LanguageLoader loader_for(const std::string& path) {
  const fs::path dir = fs::path(path).parent_path();
  return [dir](const std::string& p) {
    const fs::path target = fs::path(p).is_absolute() ? fs::path(p) : dir / p;
    return read_file(target.string());
  };
}

Instance load_instance(const std::string& path) { return Instance::parse(read_file(path), loader_for(path)); }

ConstraintLanguage load_language(const std::string& path) { return ConstraintLanguage::parse(read_file(path)); }

json to_json(const RecoveryRecipe& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    json j{{"op", to_string(s.op)}};
    if (s.op == RecoveryStep::Op::FloorDivide) j["scale"] = to_string(s.scale);
    steps.push_back(std::move(j));
  }
  return json{{"steps", std::move(steps)}};
}

std::string recipe_text(const RecoveryRecipe& r) {
  std::string s;
  for (const auto& step : r.steps) {
    if (!s.empty()) s += ", ";
    s += to_string(step.op);
    if (step.op == RecoveryStep::Op::FloorDivide) s += "(" + to_string(step.scale) + ")";
  }
  return s;
}

json to_json(const AffineWitness& w) {
  json j{{"a", w.a.to_string()}, {"b", w.b.to_string()}};
  if (w.c) j["c"] = w.c->to_string();
  j["d"] = w.d.to_string();
  return j;
}

json to_json(const Im2Witness& w) {
  return json{{"t", w.t.to_string()}, {"t2", w.t2.to_string()}, {"op", to_string(w.op)}, {"result", w.result.to_string()}};
}

std::string witness_text(const AffineWitness& w) {
  if (w.is_pair()) return w.a.to_string() + " ^ " + w.b.to_string() + " = " + w.d.to_string() + " (not in R)";
  return w.a.to_string() + " ^ " + w.b.to_string() + " ^ " + w.c->to_string() + " = " + w.d.to_string() +
         " (not in R)";
}

std::string witness_text(const Im2Witness& w) {
  return w.t.to_string() + " " + to_string(w.op) + " " + w.t2.to_string() + " = " + w.result.to_string() +
         " (not in R)";
}

Count brute(const Instance& i, const RunConfig& cfg) { return brute_force_count(i, {cfg.max_brute_vars, 0}); }

void emit(std::ostream& out, const RunConfig& cfg, const json& j, const std::string& text) {
  if (cfg.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

// classify

int cmd_classify(const RunConfig& cfg, const std::string& path, std::ostream& out) {
  const auto lang = load_language(path);
  const auto c = classify(lang);
  json rels = json::array();
  std::ostringstream t;
  t << "verdict: " << to_string(c.verdict) << "\n";
  for (const auto& r : c.per_relation) {
    rels.push_back(json{{"name", r.name}, {"affine", r.affine}, {"im2", r.im2}});
    t << "  " << r.name << ": affine=" << (r.affine ? "yes" : "no") << " im2=" << (r.im2 ? "yes" : "no") << "\n";
  }
  json wit = json::object();
  if (c.affine_evidence) {
    json a = to_json(*c.affine_evidence);
    a["relation"] = *c.affine_relation;
    wit["affine"] = std::move(a);
    t << "non-affine " << *c.affine_relation << ": " << witness_text(*c.affine_evidence) << "\n";
  }
  if (c.im2_evidence) {
    json a = to_json(*c.im2_evidence);
    a["relation"] = *c.im2_relation;
    wit["im2"] = std::move(a);
    t << "outside IM2 " << *c.im2_relation << ": " << witness_text(*c.im2_evidence) << "\n";
  }
  emit(out, cfg, json{{"verdict", to_string(c.verdict)}, {"relations", rels}, {"witnesses", wit}}, t.str());
  return kOk;
}

// count

int cmd_count(const RunConfig& cfg, const std::string& path, const std::string& method, std::ostream& out) {
  const auto inst = load_instance(path);
  Count value;
  std::string used;
  if (method == "affine") {
    if (!uses_only_affine(inst)) throw PreconditionError("affine counting requested but a used relation is not affine");
    value = count_solutions(instance_to_system(inst));
    used = "affine";
  } else if (method == "brute") {
    value = brute(inst, cfg);
    used = "brute";
  } else {
    const auto r = count(inst, {cfg.max_brute_vars, 0});
    value = r.value;
    used = r.method == CountMethod::Affine ? "affine" : "brute";
  }
  json j{{"count", to_string(value)}, {"method", used}, {"variables", inst.num_variables()}};
  if (cfg.verify && used == "affine") {
    const Count b = brute(inst, cfg);
    j["verify"] = json{{"brute", to_string(b)}, {"pass", b == value}};
    if (b != value) throw VerificationFailure("affine count " + to_string(value) + " != brute force " + to_string(b));
  }
  emit(out, cfg, j, to_string(value) + "\n");
  return kOk;
}

// gadget

json gadget_json(const Gadget& g, bool verified) {
  return json{{"claims", g.claimed_name},
              {"claimed", g.claimed.to_string()},
              {"distinguished", g.distinguished},
              {"auxiliaries", g.auxiliaries()},
              {"trace", g.trace},
              {"verified", verified},
              {"gadget", g.to_text()}};
}

int cmd_gadget(const RunConfig& cfg, const std::string& source, const std::string& relation, const std::string& kind,
               int pin, std::ostream& out) {
  std::vector<Gadget> gadgets;
  std::string name;
  if (kind == "nand-xor") {
    gadgets.push_back(nand_from_implies_xor());
  } else {
    if (source.empty()) throw InputError("gadget needs a relation name or file");
    std::optional<Relation> r;
    if (is_reserved_name(source)) {
      name = source;
      r = builtin(source);
    } else {
      const auto lang = load_language(source);
      name = relation.empty() ? lang.entries().front().first : relation;
      r = lang.at(name);
    }
    if (kind == "non-affine") {
      if (is_affine(*r)) {
        throw PreconditionError("relation " + name + " is affine, so #CSP over it is exactly solvable and no " +
                                "OR/IMPLIES/NAND gadget exists");
      }
      gadgets.push_back(from_non_affine(name, *r, pin));
    } else if (kind == "ternary") {
      gadgets.push_back(from_ternary_case(name, *r));
    } else if (kind == "validity") {
      gadgets.push_back(pin_from_validity(name, *r));
    } else if (kind == "complement") {
      gadgets = from_non_complement_closed(name, *r);
    } else if (kind == "im2") {
      gadgets.push_back(or_or_xor_from_im2_violation(name, *r, im2_witness(*r)));
    }
  }
  json arr = json::array();
  std::string text;
  bool all = true;
  for (const auto& g : gadgets) {
    const bool ok = verify_implementation(g, cfg.max_brute_vars);
    all = all && ok;
    arr.push_back(gadget_json(g, ok));
    text += g.to_text() + "# verified: " + (ok ? "true" : "false") + "\n";
  }
  json j{{"relation", name}, {"kind", kind}, {"gadgets", arr}};
  if (kind == "non-affine") j["pin"] = pin;
  emit(out, cfg, j, text);
  if (!all) throw VerificationFailure("a constructed gadget failed verification");
  return kOk;
}

// reduce

struct Check {
  json j = json::object();
  std::string text;
  bool pass = true;
};

Check check_recovery(const RunConfig& cfg, const Instance& source, const Reduction& r) {
  Check c;
  if (!cfg.verify) return c;
  const Count a = brute(source, cfg);
  const Count b = brute(r.instance, cfg);
  const Count rec = r.recipe.apply(b);
  c.pass = rec == a;
  c.j = json{{"source", to_string(a)}, {"transformed", to_string(b)}, {"recovered", to_string(rec)}, {"pass", c.pass}};
  c.text = "# verify: source " + to_string(a) + ", transformed " + to_string(b) + ", recovered " + to_string(rec) +
           (c.pass ? ", PASS\n" : ", FAIL\n");
  return c;
}

int finish_reduction(const RunConfig& cfg, std::ostream& out, const Reduction& r, json extra, std::string text_extra,
                     const Check& check) {
  json j{{"instance", r.instance.to_text()}, {"recipe", to_json(r.recipe)}};
  for (auto& [k, v] : extra.items()) j[k] = v;
  if (cfg.verify) j["verify"] = check.j;
  emit(out, cfg, j, r.instance.to_text() + "# recipe: " + recipe_text(r.recipe) + "\n" + text_extra + check.text);
  if (!check.pass) throw VerificationFailure("recovered count differs from the source count");
  return kOk;
}

struct PinArgs {
  int value = 0;
  std::string relation;
  int position = 0;
  double epsilon = 0.0;
  std::string noise = "worst";
};

int cmd_reduce_pin(const RunConfig& cfg, const std::string& path, const PinArgs& a, std::ostream& out) {
  const auto inst = load_instance(path);
  const std::string pin = a.value == 0 ? "delta0" : "delta1";
  std::string name = a.relation;
  std::optional<Relation> table;
  if (!name.empty()) {
    if (inst.language().contains(name)) {
      table = inst.language().at(name);
    } else if (is_reserved_name(name)) {
      table = builtin(name);
    } else {
      throw PreconditionError("relation " + name + " is not available");
    }
  } else {
    for (const auto& [n, r] : inst.language().entries()) {
      if (n == "delta0" || n == "delta1") continue;
      if (majority_column(r, a.value)) {
        name = n;
        table = r;
        break;
      }
    }
    if (!table) {
      throw PreconditionError("no relation of the instance has a column with more " + std::to_string(a.value) +
                              "s than " + std::to_string(1 - a.value) + "s");
    }
  }
  const auto plan = make_pinning_plan(inst, name, *table, a.value,
                                      a.position > 0 ? std::optional<int>(a.position) : std::nullopt);
  const auto r = pinning_reduce(inst, plan);
  json pj{{"relation", plan.relation}, {"position", plan.position}, {"value", plan.value}, {"w", to_string(plan.w)},
          {"w2", to_string(plan.w2)}, {"m", plan.m}, {"n", plan.n}, {"n0", plan.n0}};
  std::string text = "# plan: " + pin + " via " + plan.relation + " column " + std::to_string(plan.position) +
                     ", w=" + to_string(plan.w) + ", w2=" + to_string(plan.w2) + ", m=" + std::to_string(plan.m) +
                     ", n=" + std::to_string(plan.n) + ", n0=" + std::to_string(plan.n0) + "\n";
  Check check = check_recovery(cfg, inst, r);
  json extra{{"plan", pj}};
  if (a.epsilon > 0.0) {
    const Count n = brute(inst, cfg);
    const Count scale = r.recipe.steps.front().scale;
    const auto rep = ap_rounding_simulate(n, scale, a.epsilon, a.noise == "random" ? NoiseMode::Random
                                                                                  : NoiseMode::WorstCase,
                                          cfg.seed);
    json trials = json::array();
    for (const auto& t : rep.trials) {
      trials.push_back(json{{"q", static_cast<double>(t.q)},
                            {"q_hat", static_cast<double>(t.q_hat)},
                            {"recovered", to_string(t.recovered)},
                            {"ok", t.ok}});
    }
    extra["rounding"] = json{{"n", to_string(n)},
                             {"epsilon", a.epsilon},
                             {"delta", static_cast<double>(rep.delta)},
                             {"exact_required", rep.exact_required},
                             {"trials", trials},
                             {"pass", rep.pass}};
    text += "# rounding: N=" + to_string(n) + ", epsilon=" + std::to_string(a.epsilon) + ", " +
            std::to_string(rep.trials.size()) + " trials, " + (rep.pass ? "PASS" : "FAIL") + "\n";
    if (!rep.pass) check.pass = false;
  }
  return finish_reduction(cfg, out, r, extra, text, check);
}

int cmd_reduce_merge(const RunConfig& cfg, const std::string& path, int value, std::ostream& out) {
  const auto inst = load_instance(path);
  const auto r = merge_reduce(inst, value);
  return finish_reduction(cfg, out, r, json::object(), "", check_recovery(cfg, inst, r));
}

int cmd_reduce_inline(const RunConfig& cfg, const std::string& path, const std::string& gadget_path,
                      const std::string& target, std::ostream& out) {
  const auto inst = load_instance(path);
  const auto g = Gadget::parse(read_file(gadget_path), loader_for(gadget_path));
  const std::string t = target.empty() ? g.claimed_name : target;
  const auto r = inline_gadget_reduce(inst, g, t);
  return finish_reduction(cfg, out, r, json{{"target", t}}, "", check_recovery(cfg, inst, r));
}

int cmd_reduce_downsets(const RunConfig& cfg, const std::string& path, std::ostream& out) {
  const auto source = load_instance(path);
  const bool atomic = is_atomic(source);
  const Instance inst = atomic ? source : atomize(source);
  const auto poset = im2_to_downsets(inst);
  json j{{"atomized", !atomic}};
  std::string text;
  if (!atomic) text += "# atomized:\n" + inst.to_text();
  if (poset) {
    json leq = json::array();
    for (std::size_t a = 0; a < poset->elements.size(); ++a) {
      for (std::size_t b = 0; b < poset->elements.size(); ++b) {
        if (a != b && poset->leq[a][b]) leq.push_back(json::array({poset->elements[a], poset->elements[b]}));
      }
    }
    j["unsatisfiable"] = false;
    j["poset"] = json{{"elements", poset->elements}, {"leq", leq}};
    text += poset->to_text();
  } else {
    j["unsatisfiable"] = true;
    text += "unsatisfiable\n";
  }
  bool pass = true;
  if (cfg.verify) {
    const Count a = brute(source, cfg);
    const Count b = poset ? count_downsets(*poset, cfg.max_brute_vars) : Count(0);
    pass = a == b;
    j["verify"] = json{{"count", to_string(a)}, {"downsets", to_string(b)}, {"pass", pass}};
    text += "# verify: " + to_string(a) + " = " + to_string(b) + (pass ? ", PASS\n" : ", FAIL\n");
  }
  emit(out, cfg, j, text);
  if (!pass) throw VerificationFailure("downset count differs from the instance count");
  return kOk;
}

int cmd_reduce_graph(const RunConfig& cfg, const std::string& path, bool bipartite, const std::string& encoding,
                     std::ostream& out) {
  const auto g = parse_graph(read_file(path));
  Instance inst = [&] {
    if (bipartite) {
      if (!std::holds_alternative<BipartiteGraph>(g)) throw PreconditionError("graph-bis needs a bipartite graph");
      return encode_bis(std::get<BipartiteGraph>(g));
    }
    if (!std::holds_alternative<Graph>(g)) throw PreconditionError("graph-is needs a graph file ('graph n')");
    return encoding == "or" ? encode_is_or(std::get<Graph>(g)) : encode_is_nand(std::get<Graph>(g));
  }();
  const Reduction r{inst, RecoveryRecipe::identity()};
  Check c;
  if (cfg.verify) {
    const Count is = std::visit([](const auto& x) { return count_independent_sets(x); }, g);
    const Count b = brute(inst, cfg);
    c.pass = is == b;
    c.j = json{{"independent_sets", to_string(is)}, {"count", to_string(b)}, {"pass", c.pass}};
    c.text = "# verify: " + to_string(is) + " independent sets, count " + to_string(b) + (c.pass ? ", PASS\n" : ", FAIL\n");
  }
  return finish_reduction(cfg, out, r, json::object(), "", c);
}

int cmd_reduce_chain(const RunConfig& cfg, const std::string& lang_path, const std::string& graph_path,
                     std::ostream& out) {
  const auto lang = load_language(lang_path);
  const auto g = parse_graph(read_file(graph_path));
  const auto chain = compile_hardness_chain(lang, g, {cfg.verify, cfg.max_brute_vars});
  json steps = json::array();
  std::ostringstream t;
  t << "# verdict: " << to_string(chain.classification.verdict) << "\n";
  for (const auto& n : chain.notes) t << "# " << n << "\n";
  for (const auto& s : chain.steps) {
    json js{{"label", s.label},
            {"variables", s.instance.num_variables()},
            {"constraints", s.instance.constraints().size()},
            {"recipe", to_json(s.recipe)}};
    t << "# step: " << s.label << " (" << s.instance.num_variables() << " variables";
    if (s.count) {
      js["count"] = to_string(*s.count);
      js["identity_ok"] = s.identity_ok;
      t << ", count " << to_string(*s.count) << (s.identity_ok ? ", ok" : ", FAIL");
    }
    t << ")\n";
    steps.push_back(std::move(js));
  }
  json j{{"verdict", to_string(chain.classification.verdict)},
         {"source_count", to_string(chain.source_count)},
         {"notes", chain.notes},
         {"steps", steps},
         {"instance", chain.final_instance().to_text()},
         {"recipe", to_json(chain.recipe)}};
  t << chain.final_instance().to_text() << "# recipe: " << recipe_text(chain.recipe) << "\n";
  if (chain.recovered) {
    j["recovered"] = to_string(*chain.recovered);
    j["pass"] = chain.pass();
    t << "# recovered " << to_string(*chain.recovered) << " (source " << to_string(chain.source_count) << "), "
      << (chain.pass() ? "PASS" : "FAIL") << "\n";
  }
  emit(out, cfg, j, t.str());
  if (chain.recovered && !chain.pass()) throw VerificationFailure("chain recovered a different count");
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify and reduce Boolean counting CSPs", "sharpcsp"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-brute-vars", cfg.max_brute_vars, "Brute-force enumeration cap")
      ->check(CLI::Range(std::size_t{1}, std::size_t{63}));
  app.add_option("--seed", cfg.seed, "Seed for randomized simulations");
  app.add_flag("--verify", cfg.verify, "Brute-force both sides and check the identity");

  std::string path;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a constraint language");
  classify_cmd->add_option("language", path, "Language file")->required();

  std::string method = "auto";
  auto* count_cmd = app.add_subcommand("count", "Count satisfying assignments");
  count_cmd->add_option("instance", path, "Instance file")->required();
  count_cmd->add_option("--method", method)->check(CLI::IsMember({"auto", "affine", "brute"}));

  std::string relation;
  std::string kind = "non-affine";
  int pin = 0;
  auto* gadget_cmd = app.add_subcommand("gadget", "Derive a gadget from a relation");
  gadget_cmd->add_option("source", path, "Built-in name or language file");
  gadget_cmd->add_option("--relation", relation, "Relation to use from the language file");
  gadget_cmd->add_option("--pin", pin, "Available constant (non-affine construction)")->check(CLI::Range(0, 1));
  gadget_cmd->add_option("--kind", kind, "Construction")
      ->check(CLI::IsMember({"non-affine", "ternary", "validity", "complement", "im2", "nand-xor"}));

  auto* reduce_cmd = app.add_subcommand("reduce", "Apply a reduction");
  reduce_cmd->require_subcommand(1);

  PinArgs pa;
  auto* pin_cmd = reduce_cmd->add_subcommand("pin", "Eliminate delta0/delta1 by replication");
  pin_cmd->add_option("instance", path)->required();
  pin_cmd->add_option("--value", pa.value, "Pinned constant")->check(CLI::Range(0, 1));
  pin_cmd->add_option("--relation", pa.relation, "Relation to replicate");
  pin_cmd->add_option("--position", pa.position, "1-based majority column");
  pin_cmd->add_option("--epsilon", pa.epsilon, "Also simulate rounding an approximate oracle")
      ->check(CLI::Range(0.0, 1.0));
  pin_cmd->add_option("--noise", pa.noise)->check(CLI::IsMember({"worst", "random"}));

  int merge_value = 0;
  auto* merge_cmd = reduce_cmd->add_subcommand("merge", "Eliminate delta0/delta1 by merging (complement-closed)");
  merge_cmd->add_option("instance", path)->required();
  merge_cmd->add_option("--value", merge_value)->check(CLI::Range(0, 1));

  std::string gadget_path;
  std::string target;
  auto* inline_cmd = reduce_cmd->add_subcommand("inline", "Substitute a gadget for a relation");
  inline_cmd->add_option("instance", path)->required();
  inline_cmd->add_option("--gadget", gadget_path, "Gadget file")->required();
  inline_cmd->add_option("--target", target, "Relation to replace (default: the gadget's claim)");

  auto* downsets_cmd = reduce_cmd->add_subcommand("downsets", "IM2 instance to a poset");
  downsets_cmd->add_option("instance", path)->required();

  std::string encoding = "nand";
  auto* is_cmd = reduce_cmd->add_subcommand("graph-is", "Encode #IS");
  is_cmd->add_option("graph", path)->required();
  is_cmd->add_option("--encoding", encoding)->check(CLI::IsMember({"nand", "or"}));

  auto* bis_cmd = reduce_cmd->add_subcommand("graph-bis", "Encode #BIS");
  bis_cmd->add_option("graph", path)->required();

  std::string lang_path;
  std::string graph_path;
  auto* chain_cmd = reduce_cmd->add_subcommand("chain", "Compose the hardness reductions for a language");
  chain_cmd->add_option("--language", lang_path)->required();
  chain_cmd->add_option("--graph", graph_path)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*classify_cmd) return cmd_classify(cfg, path, out);
    if (*count_cmd) return cmd_count(cfg, path, method, out);
    if (*gadget_cmd) return cmd_gadget(cfg, path, relation, kind, pin, out);
    if (*pin_cmd) return cmd_reduce_pin(cfg, path, pa, out);
    if (*merge_cmd) return cmd_reduce_merge(cfg, path, merge_value, out);
    if (*inline_cmd) return cmd_reduce_inline(cfg, path, gadget_path, target, out);
    if (*downsets_cmd) return cmd_reduce_downsets(cfg, path, out);
    if (*is_cmd) return cmd_reduce_graph(cfg, path, false, encoding, out);
    if (*bis_cmd) return cmd_reduce_graph(cfg, path, true, encoding, out);
    if (*chain_cmd) return cmd_reduce_chain(cfg, lang_path, graph_path, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kParse;
  } catch (const NameError& e) {
    err << "name error: " << e.what() << "\n";
    return kParse;
  } catch (const ArityError& e) {
    err << "arity error: " << e.what() << "\n";
    return kParse;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerification;
  } catch (const InternalError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kVerification;
  }
  return kOk;
}

}  // namespace sharpcsp::cli
