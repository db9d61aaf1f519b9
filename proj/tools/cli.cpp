#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "specneg/evaluation.hpp"
#include "specneg/scenario_io.hpp"

namespace specneg::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f.flush()) throw UsageError("write to " + path + " failed");
}

// Sweeps print the table itself when no --csv path is given.
void emit_table(const CliConfig& config, const std::string& csv, std::size_t rows,
                std::ostream& out) {
  if (config.csv_path) {
    write_file(*config.csv_path, csv);
    out << "wrote " << rows << " rows to " << *config.csv_path << "\n";
  } else {
    out << csv;
  }
}

int do_run(const CliConfig& config, std::ostream& out) {
  const Scenario scenario = load_scenario(config.scenario_path);
  const RunResult result = run_negotiation(scenario);
  const auto& o = result.outcome;

  if (config.trace_path) {
    std::ostringstream buf;
    write_trace(result.trace, buf);
    write_file(*config.trace_path, buf.str());
  }

  if (const Success* s = o.success()) {
    out << "status: success\n"
        << "winner: " << s->winner.to_string() << "\n"
        << "unit_price: " << s->unit_price << "\n"
        << "amount_paid: " << s->amount_paid << "\n";
  } else {
    out << "status: failure\n"
        << "winner: none\n";
  }
  out << "value: " << to_string(classify(o, scenario)) << "\n"
      << "responses: " << o.responses << "\n"
      << "elapsed: " << format_fixed3(o.elapsed) << "\n"
      << "message_count: " << o.message_count << "\n";
  return o.succeeded() ? kExitOk : kExitNoDeal;
}

}  // namespace

int dispatch(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::kRun:
        return do_run(config, out);
      case Command::kSweepPus: {
        const Scenario base = load_scenario(config.scenario_path);
        const auto rows = sweep_num_pus(base, config.n_max.value_or(base.pus.size()));
        emit_table(config, latency_csv(rows), rows.size(), out);
        return kExitOk;
      }
      case Command::kSweepCost: {
        if (config.runs % 10 != 0) throw UsageError("--runs must be a multiple of 10");
        const auto rows = sweep_success_rate(config.p_success, config.p_fail, config.runs);
        emit_table(config, cost_csv(rows), rows.size(), out);
        return kExitOk;
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"One-to-many spectrum negotiation simulator"};
  app.require_subcommand(1);

  CliConfig config;
  std::string trace, csv;
  std::size_t n_max = 0;

  auto* run = app.add_subcommand("run", "Run one negotiation and print its outcome");
  run->add_option("--scenario", config.scenario_path, "Scenario JSON file")->required();
  run->add_option("--trace", trace, "Write the message trace (JSON Lines) here");

  auto* sweep_pus = app.add_subcommand("sweep-pus", "SU decision time vs. number of PUs");
  sweep_pus->add_option("--scenario", config.scenario_path, "Scenario JSON file")->required();
  auto* n_max_opt = sweep_pus->add_option("--n-max", n_max, "Largest PU prefix (default: all)")
                        ->check(CLI::PositiveNumber);
  sweep_pus->add_option("--csv", csv, "Write CSV here instead of stdout");

  auto* sweep_cost = app.add_subcommand("sweep-cost", "SU spend vs. negotiation success rate");
  sweep_cost->add_option("--p-success", config.p_success, "Price paid when negotiation helps")
      ->check(CLI::PositiveNumber);
  sweep_cost->add_option("--p-fail", config.p_fail, "Price paid otherwise")
      ->check(CLI::PositiveNumber);
  sweep_cost->add_option("--runs", config.runs, "Negotiations per batch (multiple of 10)")
      ->check(CLI::NonNegativeNumber);
  sweep_cost->add_option("--csv", csv, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (run->parsed()) {
    config.command = Command::kRun;
  } else if (sweep_pus->parsed()) {
    config.command = Command::kSweepPus;
    if (n_max_opt->count() > 0) config.n_max = n_max;
  } else {
    config.command = Command::kSweepCost;
  }
  if (!trace.empty()) config.trace_path = trace;
  if (!csv.empty()) config.csv_path = csv;

  return dispatch(config, out, err);
}

}  // namespace specneg::cli
