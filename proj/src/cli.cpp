#include "dyncore/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dyncore/dynamic.hpp"
#include "dyncore/errors.hpp"
#include "dyncore/oracle.hpp"
#include "dyncore/reducts.hpp"
#include "dyncore/report.hpp"
#include "dyncore/table.hpp"

namespace dyncore::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string decision;
  std::string fractions;
  std::size_t samples = 1;
  std::uint64_t seed = 0;
  std::string lambda = "1";
  bool exact = false;
  EnumerationLimits limits;
};

/// Engine and oracle disagree under --exact.
class OracleMismatch : public Error {
 public:
  using Error::Error;
};

std::vector<Rational> parse_fractions(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw ParameterError("--fractions needs at least one value");
  for (const auto& f : out) {
    if (f.num == 0 || f.num > f.den) {
      throw ParameterError("sampling fraction " + f.to_string() + " outside (0, 1]");
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json params_section(const RunConfig& cfg) {
  json fractions = json::array();
  std::stringstream ss(cfg.fractions);
  for (std::string item; std::getline(ss, item, ',');) fractions.push_back(item);
  return {{"subcommand", cfg.subcommand},
          {"decision", cfg.decision},
          {"fractions", fractions},
          {"samples", cfg.samples},
          {"seed", cfg.seed},
          {"lambda", cfg.lambda},
          {"exact", cfg.exact},
          {"max_attrs", cfg.limits.max_attributes},
          {"max_reducts", cfg.limits.max_reducts}};
}

void check_against_oracle(const SubSystem& table, const ReductSet* reducts,
                          AttrSet core, const std::string& what) {
  if (reducts != nullptr && oracle::brute_force_reducts(table) != *reducts) {
    throw OracleMismatch("engine and oracle reducts disagree for " + what);
  }
  if (oracle::brute_force_core(table) != core) {
    throw OracleMismatch("engine and oracle core disagree for " + what);
  }
}

json execute(const RunConfig& cfg, bool& verification_failed) {
  // Parameters are validated before touching the input.
  const Lambda lambda = Lambda::parse(cfg.lambda);
  std::optional<SamplingPlan> plan;
  if (cfg.subcommand == "dynamic" || cfg.subcommand == "verify") {
    if (cfg.fractions.empty()) {
      throw ParameterError("--fractions is required for '" + cfg.subcommand + "'");
    }
    if (cfg.samples == 0) throw ParameterError("--samples must be positive");
    plan = SamplingPlan{cfg.seed, parse_fractions(cfg.fractions), cfg.samples};
  } else if (!cfg.fractions.empty()) {
    parse_fractions(cfg.fractions);
  }

  auto system = std::make_shared<const DecisionSystem>(
      parse_decision_table(read_file(cfg.input), cfg.decision, cfg.input));
  const auto whole = SubSystem::whole(system);

  json doc;
  doc["input"] = report::input_section(*system, cfg.input);
  doc["params"] = params_section(cfg);

  if (cfg.subcommand == "core") {
    const AttrSet core = core_of(whole);
    if (cfg.exact) check_against_oracle(whole, nullptr, core, "the input table");
    doc["static"] = report::static_section(*system, nullptr, core);
    return doc;
  }
  if (cfg.subcommand == "reducts") {
    const auto reducts = all_reducts(whole, cfg.limits);
    const AttrSet core = core_of(whole);
    if (cfg.exact) check_against_oracle(whole, &reducts, core, "the input table");
    doc["static"] = report::static_section(*system, &reducts, core);
    return doc;
  }

  auto family = sample_family(system, *plan);
  const auto analysis = analyze_family(system, std::move(family), cfg.limits);
  if (cfg.exact) {
    check_against_oracle(whole, &analysis.red_s, analysis.core_s, "the input table");
    const auto members = analysis.family.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      check_against_oracle(members[i], &analysis.per_member[i].reducts,
                           analysis.per_member[i].core,
                           "family member " + std::to_string(i));
    }
  }
  const auto stability = stability_report(analysis, {lambda});
  doc["static"] = report::static_section(*system, &analysis.red_s, analysis.core_s);
  doc["family"] = report::family_section(analysis);
  doc["dynamic"] = report::dynamic_section(*system, stability.per_lambda.front());
  doc["stability"] = report::stability_section(*system, stability);
  if (cfg.subcommand == "verify") {
    const auto record = verify_theorems(analysis, lambda);
    doc["verification"] = report::verification_section(*system, record);
    verification_failed = !record.ok();
  }
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Reducts, cores and dynamic cores of decision tables", "dyncore"};
  app.require_subcommand(1);

  const auto add_options = [&cfg](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "CSV decision table")->required();
    sub->add_option("--decision", cfg.decision, "Decision column name")->required();
    sub->add_option("--fractions", cfg.fractions,
                    "Comma-separated sampling fractions in (0, 1]");
    sub->add_option("--samples", cfg.samples, "Samples per fraction");
    sub->add_option("--seed", cfg.seed, "Sampling seed");
    sub->add_option("--lambda", cfg.lambda, "Precision coefficient in (0.5, 1]");
    sub->add_flag("--exact", cfg.exact, "Cross-check every result with the brute-force oracle");
    sub->add_option("--max-attrs", cfg.limits.max_attributes,
                    "Enumeration limit on condition attributes");
    sub->add_option("--max-reducts", cfg.limits.max_reducts,
                    "Enumeration limit on reducts");
  };
  for (const auto& [name, help] :
       {std::pair{"reducts", "Enumerate all reducts and the core"},
        std::pair{"core", "Compute the core only"},
        std::pair{"dynamic", "Dynamic reducts and cores over a sampled family"},
        std::pair{"verify", "Dynamic analysis plus theorem verification"}}) {
    add_options(app.add_subcommand(name, help));
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    bool failed = false;
    const json doc = execute(cfg, failed);
    out << doc.dump(2) << '\n';
    if (failed) {
      err << "error: theorem verification failed\n";
      return kVerification;
    }
    return kSuccess;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const OracleMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kVerification;
  }
}

}  // namespace dyncore::cli
