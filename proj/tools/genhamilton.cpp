// genhamilton: batch front end for the generating graph analyses.
//
// Exit codes: 0 success, 1 other error, 2 usage or parse error, 3 order cap
// exceeded, 4 no faithful transitive constituent, 5 group not transitive,
// 6 oracle inconsistency.  With several files the first failing file (in
// argument order) determines the code.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "genhamilton/pipelines.hpp"

namespace gh = genhamilton;

namespace {

struct Outcome {
  std::string text;    // stdout lines
  gh::Json json;       // report object (or null)
  std::string error;   // stderr message
  int code = 0;
};

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const gh::ParseError*>(&e)) return 2;
  if (dynamic_cast<const gh::OrderCapExceeded*>(&e)) return 3;
  if (dynamic_cast<const gh::NoFaithfulConstituent*>(&e)) return 4;
  if (dynamic_cast<const gh::NotTransitive*>(&e)) return 5;
  if (dynamic_cast<const gh::OracleInconsistency*>(&e)) return 6;
  return 1;
}

// Runs `work` on every file, `jobs` at a time, and emits the results in
// argument order.
int run_batch(const std::vector<std::string>& files, unsigned jobs, bool json,
              const std::function<Outcome(const std::string&)>& work) {
  std::vector<Outcome> outcomes(files.size());
  const auto one = [&](std::size_t k) {
    try {
      outcomes[k] = work(files[k]);
    } catch (const std::exception& e) {
      outcomes[k].error = files[k] + ": " + e.what();
      outcomes[k].code = exit_code_for(e);
    }
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(files.size())));
  if (jobs == 1) {
    for (std::size_t k = 0; k < files.size(); ++k) one(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < files.size(); k = next++) one(k);
      });
    }
  }

  int code = 0;
  gh::Json all = gh::Json::array();
  for (const Outcome& o : outcomes) {
    if (o.code != 0) {
      std::cerr << "error: " << o.error << '\n';
      if (code == 0) code = o.code;
      continue;
    }
    if (json) {
      all.push_back(o.json);
    } else {
      std::cout << o.text;
    }
  }
  if (json) std::cout << all.dump(2) << '\n';
  std::cout.flush();
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian cycle criteria for generating graphs of finite groups"};
  app.require_subcommand(1);

  gh::AnalysisOptions options;
  std::vector<std::string> files;
  bool json = false;
  bool quiet_posa0 = false;
  unsigned jobs = 1;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("files", files, "input JSON files")->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", json, "print a JSON array of reports");
    sub->add_option("--jobs", jobs, "files processed concurrently")->check(CLI::PositiveNumber);
  };
  bool reference_rules = false;
  const auto add_rules_flag = [&](CLI::App* sub) {
    sub->add_flag("--reference-rules", reference_rules,
                  "use the classical code's Chvatal bound and closure diagonal");
  };
  const auto add_group_flags = [&](CLI::App* sub) {
    sub->add_option("--cap", options.order_cap, "maximal group order to enumerate");
    sub->add_option("--quotient-cap", options.quotient_cap, "maximal order of G/G' to enumerate");
    sub->add_option("--threads", options.threads, "threads for the degree matrix (0: all cores)");
  };

  auto* analyze_group = app.add_subcommand("analyze-group", "exact degrees from generators, then closures");
  add_common(analyze_group);
  add_rules_flag(analyze_group);
  add_group_flags(analyze_group);
  analyze_group->add_flag("--quiet-posa0", quiet_posa0, "suppress \"Posa for 0th closure\" lines");

  auto* analyze_chartable = app.add_subcommand("analyze-chartable", "character-theoretic bounds, then closures");
  add_common(analyze_chartable);
  add_rules_flag(analyze_chartable);
  analyze_chartable->add_flag("--quiet-posa0", quiet_posa0, "suppress \"Posa for 0th closure\" lines");

  auto* oracle = app.add_subcommand("oracle", "compare with the explicit generating graph");
  add_common(oracle);
  add_rules_flag(oracle);
  add_group_flags(oracle);
  oracle->add_option("--oracle-cap", options.oracle_cap, "maximal group order for the explicit graph");
  oracle->add_option("--budget", options.search_budget, "step budget of the Hamiltonian cycle search");

  auto* l2q = app.add_subcommand("l2q", "row-sum checks of the delta bounds by element order");
  add_common(l2q);

  auto* make = app.add_subcommand("make-chartable", "character table file from listed maximal subgroups");
  add_common(make);
  add_group_flags(make);
  std::string name_override;
  make->add_option("--name", name_override, "name written to the output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (reference_rules) options.rules = gh::Rules::reference;

  const auto verdict_text = [&](const gh::Analysis& a) {
    if (quiet_posa0 && a.verdict() == "Posa for 0th closure") return std::string();
    return a.line() + "\n";
  };

  if (analyze_group->parsed()) {
    return run_batch(files, jobs, json, [&](const std::string& path) {
      const gh::Analysis a = gh::analyze_group(gh::load_group_spec(path), options);
      return Outcome{verdict_text(a), gh::analysis_to_json(a), {}, 0};
    });
  }
  if (analyze_chartable->parsed()) {
    return run_batch(files, jobs, json, [&](const std::string& path) {
      const gh::Analysis a = gh::analyze_chartable(gh::load_chartable_spec(path), options);
      return Outcome{verdict_text(a), gh::analysis_to_json(a), {}, 0};
    });
  }
  if (oracle->parsed()) {
    return run_batch(files, jobs, json, [&](const std::string& path) {
      const gh::OracleReport r = gh::run_oracle(gh::load_group_spec(path), options);
      return Outcome{r.line() + "\n", gh::oracle_to_json(r), {}, 0};
    });
  }
  if (l2q->parsed()) {
    return run_batch(files, jobs, json, [&](const std::string& path) {
      const gh::CharTableSpec spec = gh::load_chartable_spec(path);
      const gh::L2qReport r = gh::l2q_lemma_check(spec.data);
      return Outcome{gh::l2q_line(spec.name, r) + "\n", gh::l2q_to_json(spec.name, r), {}, 0};
    });
  }
  if (make->parsed()) {
    if (files.size() != 1) {
      std::cerr << "error: make-chartable takes exactly one input file\n";
      return 2;
    }
    return run_batch(files, 1, false, [&](const std::string& path) {
      gh::CharTableSpec spec = gh::make_chartable(gh::load_group_spec(path), options);
      if (!name_override.empty()) spec.name = name_override;
      return Outcome{gh::chartable_to_json(spec).dump(2) + "\n", {}, {}, 0};
    });
  }
  return 2;
}
