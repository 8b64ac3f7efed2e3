#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "em1/extract.hpp"
#include "em1/laws.hpp"
#include "em1/parser.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUserError = 1;
constexpr int kExitInternalError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw em1::Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// "x=9,y=3" -> {x: 9, y: 3}
std::map<std::string, em1::Nat> parse_env_spec(const std::string& spec) {
  std::map<std::string, em1::Nat> values;
  if (spec.empty()) return values;
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw em1::Error("bad --env entry: '" + item + "' (expected name=number)");
    values[item.substr(0, eq)] = em1::nat_from_string(item.substr(eq + 1));
  }
  return values;
}

em1::State parse_state_spec(const em1::Registry& reg, const std::string& spec) {
  if (spec.empty()) return em1::State::bottom();
  nlohmann::json j = nlohmann::json::parse(spec, nullptr, true);
  return em1::State::from_json(reg, j);
}

int cmd_check(const std::string& path) {
  em1::Program program = em1::parse_program(read_file(path));
  for (const auto& [kind, name] : program.order) {
    if (kind != "proof") continue;
    em1::Formula conclusion =
        em1::check_proof(*program.registry, program.proof(name));
    std::cout << name << ": " << conclusion.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_eval(const std::string& path, const std::string& term_name,
             const std::string& formula_name, const std::string& state_spec,
             const std::string& env_spec) {
  em1::Program program = em1::parse_program(read_file(path));
  em1::State s = parse_state_spec(*program.registry, state_spec);
  em1::Environment env = em1::Environment::of_numerals(parse_env_spec(env_spec));
  if (term_name.empty() == formula_name.empty())
    throw em1::Error("eval needs exactly one of --term or --formula");
  if (!term_name.empty()) {
    em1::Individual v =
        em1::denote_term(program.term(term_name), env, program.registry_ptr());
    std::cout << v.eval(s).str() << "\n";
  } else {
    em1::BoolIndividual v = em1::denote_formula(program.formula(formula_name),
                                                env, program.registry_ptr());
    std::cout << (v.eval(s) ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_run(const std::string& path, const std::string& proof_name,
            const std::string& env_spec, const std::string& state_spec,
            const std::string& policy_name, std::size_t cap,
            const std::string& trace_path, const std::string& witness_pred) {
  em1::Program program = em1::parse_program(read_file(path));
  em1::RegistryPtr reg = program.registry_ptr();
  const em1::Proof& proof = program.proof(proof_name);
  em1::MergePolicy policy = em1::merge_policy_from_string(policy_name);
  em1::State s0 = parse_state_spec(*reg, state_spec);
  em1::Environment env = em1::Environment::of_numerals(parse_env_spec(env_spec));

  em1::Formula conclusion = em1::check_proof(*reg, proof);
  em1::Realizer realizer = em1::extract_realizer(reg, proof, env, policy);
  em1::ForcesResult result =
      em1::forces_check(realizer, reg, env, conclusion, s0, cap);

  std::cout << "conclusion: " << conclusion.to_string() << "\n";
  std::cout << "policy: " << em1::to_string(policy) << "\n";
  std::cout << "realizer: " << realizer.tag().to_string() << "\n";
  std::cout << "expansions: " << result.trace.expansions() << "\n";
  std::cout << "final state: " << result.final_state.to_json().dump() << "\n";
  std::cout << "formula: " << (result.holds ? "true" : "false") << "\n";
  if (!witness_pred.empty()) {
    em1::WitnessResult w = em1::extract_witness(reg, proof, env, witness_pred,
                                                s0, cap, policy);
    std::cout << "witness " << witness_pred << ": " << w.witness.str() << "\n";
  }
  if (!trace_path.empty()) {
    std::ofstream out(trace_path, std::ios::binary);
    if (!out) throw em1::Error("cannot write " + trace_path);
    out << result.trace.to_json().dump() << "\n";
  }
  if (!result.holds)
    throw em1::ExtractionError("conclusion false at the reached prefix point");
  return kExitOk;
}

int cmd_laws(std::uint64_t seed, std::size_t iters) {
  using namespace em1::laws;
  bool ok = true;
  for (const SuiteResult& r :
       {merge_axiom_suite(seed, iters),
        state_monad_suite(seed + 1, std::max<std::size_t>(1, iters / 2)),
        realizer_monad_suite(seed + 2, std::max<std::size_t>(1, iters / 5)),
        prefix_intersection_suite(seed + 3, std::max<std::size_t>(1, iters / 10),
                                  50)}) {
    std::cout << r.summary() << "\n";
    ok = ok && r.ok();
  }
  if (!ok) throw em1::ExtractionError("law suite failed");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proof checker and interactive-realizer extractor for "
               "quantifier-free arithmetic with Skolemized Sigma-0-1 "
               "excluded middle"};
  app.require_subcommand(1);

  std::string path, term_name, formula_name, state_spec, env_spec;
  std::string proof_name, policy_name = "override", trace_path, witness_pred;
  std::size_t cap = em1::kDefaultIterationCap;
  std::uint64_t seed = 42;
  std::size_t iters = 1000;

  CLI::App* check = app.add_subcommand("check", "parse a file and check its proofs");
  check->add_option("file", path, "source file")->required();

  CLI::App* eval = app.add_subcommand("eval", "evaluate a named term or formula at a state");
  eval->add_option("file", path, "source file")->required();
  eval->add_option("--term", term_name, "term name");
  eval->add_option("--formula", formula_name, "formula name");
  eval->add_option("--state", state_spec, "state as JSON (default: empty state)");
  eval->add_option("--env", env_spec, "numeral bindings, e.g. x=9,y=3");

  CLI::App* run = app.add_subcommand("run", "extract a realizer and run the learning loop");
  run->add_option("file", path, "source file")->required();
  run->add_option("--proof", proof_name, "proof name")->required();
  run->add_option("--env", env_spec, "numeral bindings, e.g. x=9,y=3");
  run->add_option("--state", state_spec, "initial state as JSON (default: empty)");
  run->add_option("--merge", policy_name, "merge policy: first|override|min")
      ->check(CLI::IsMember({"first", "override", "min"}));
  run->add_option("--cap", cap, "iteration cap for the learning loop");
  run->add_option("--trace", trace_path, "write the learning trace as JSON");
  run->add_option("--witness", witness_pred, "report the Skolem value of this predicate");

  CLI::App* laws = app.add_subcommand("laws", "run the randomized law suites");
  laws->add_option("--seed", seed, "random seed");
  laws->add_option("--iters", iters, "iterations per suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(path);
    if (eval->parsed())
      return cmd_eval(path, term_name, formula_name, state_spec, env_spec);
    if (run->parsed())
      return cmd_run(path, proof_name, env_spec, state_spec, policy_name, cap,
                     trace_path, witness_pred);
    if (laws->parsed()) return cmd_laws(seed, iters);
  } catch (const em1::ContractError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const em1::ExtractionError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const em1::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUserError;
  }
  return kExitUserError;
}
