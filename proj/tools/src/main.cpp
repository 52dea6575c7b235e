#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ccrsim/cli/config.hpp"
#include "ccrsim/cli/csv.hpp"
#include "ccrsim/cli/figures.hpp"
#include "ccrsim/cli/scenario.hpp"
#include "ccrsim/cli/selfcheck.hpp"
#include "ccrsim/errors.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kNumericalError = 2;

const char* const kFooter = R"(
CSV output (header line, 17 significant digits):
  run        <sweep variable or "row">,coherence,predictability,entropy,visibility,
             overlap_modulus,detector_p0,delta_theta,distinguishability
  figure 2   fig2.csv: alpha,coherence,predictability,entropy
  figure 3   fig3.csv: overlap,coherence,predictability,entropy
  figure 4   fig4a_coherence.csv: alpha,overlap,coherence
             fig4b_entanglement.csv: alpha,overlap,entropy
  figure 5   fig5.csv: size_m,t_s,delta_theta,distinguishability
  figure 6   fig6.csv: alpha,delta_t,visibility

Angles are radians unless suffixed with "deg" (e.g. --alpha 45deg).
Sweeps: --sweep var:start:stop:steps with var in alpha, phi, overlap, t, deltaT, L, h.
Exit codes: 0 success, 1 usage error, 2 numerical or consistency failure.)";

struct RunFlags {
  std::string config_path;
  std::string out_path;
  std::map<std::string, std::string> values;
};

void add_scenario_flags(CLI::App& run, RunFlags& flags) {
  struct Flag {
    const char* name;
    const char* key;
    const char* help;
  };
  static const Flag kFlags[] = {
      {"--experiment", "experiment", "qdce or qcre (default qcre)"},
      {"--alpha", "alpha", "controlled beam splitter angle in [0, pi/2]"},
      {"--phi", "phi", "phase on path 1"},
      {"--mode", "mode", "flat or newtonian (default flat)"},
      {"--g", "g", "gravitational acceleration, m/s^2 (default 10)"},
      {"--x0", "x0", "height of the lower arm, m (default 0)"},
      {"--h", "h", "interferometer height, m (default 1)"},
      {"--L", "L", "horizontal length, m (default 1)"},
      {"--u", "u", "particle speed as a fraction of c (default 0.1)"},
      {"--sweep", "sweep", "var:start:stop:steps"},
      {"--overlap", "overlap", "flat mode: |<tau0|tau1>| (default 1)"},
      {"--t", "t", "newtonian mode: lab time in s (default L/u)"},
      {"--deltaT", "deltaT", "newtonian mode: use |cos(rate deltaT)| as the overlap"},
      {"--phase-rate", "phase_rate", "rate gamma dV/2 in 1/s for deltaT (default from g, h, u)"},
      {"--spin-theta", "spin_theta", "Bloch polar angle of the initial spin (default pi/2)"},
  };
  for (const auto& f : kFlags) {
    run.add_option_function<std::string>(
        f.name, [&flags, key = std::string(f.key)](const std::string& v) { flags.values[key] = v; }, f.help);
  }
  run.add_option("--config", flags.config_path, "key=value file; flags override it");
  run.add_option("--out", flags.out_path, "output CSV (default stdout)");
}

int run_command(const RunFlags& flags) {
  ccrsim::cli::ScenarioConfig config;
  if (!flags.config_path.empty()) config = ccrsim::cli::load_config(flags.config_path, config);
  for (const auto& [key, value] : flags.values) config.set(key, value);
  const auto table = ccrsim::cli::to_table(ccrsim::cli::run_scenario(config));
  if (flags.out_path.empty()) {
    std::cout << ccrsim::cli::to_csv(table);
  } else {
    ccrsim::cli::write_csv(table, flags.out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ccrsim: complete complementarity relations in quantum-controlled interferometers"};
  app.footer(kFooter);
  app.require_subcommand(1);

  RunFlags run_flags;
  auto* run = app.add_subcommand("run", "evaluate one scenario or a sweep and emit CSV");
  run->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  add_scenario_flags(*run, run_flags);

  int figure_number = 0;
  std::string figure_dir = ".";
  auto* figure = app.add_subcommand("figure", "write the CSV data for figure 2, 3, 4, 5 or 6");
  figure->add_option("n", figure_number, "figure number")->required()->check(CLI::Range(2, 6));
  figure->add_option("--out", figure_dir, "output directory (default .)");

  bool inject = false;
  auto* check = app.add_subcommand("selfcheck", "run the invariant suite; exit 0 iff every check passes");
  check->add_flag("--inject-lambda-bug", inject, "use the cos^2 exponent in the QCRE closed form (must fail)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*run) return run_command(run_flags);
    if (*figure) {
      for (const auto& p : ccrsim::cli::write_figure(figure_number, figure_dir)) std::cout << p.string() << '\n';
      return 0;
    }
    ccrsim::cli::SelfcheckOptions options;
    if (inject) options.lambda_form = ccrsim::interferometer::QcreLambdaForm::kAsPrinted;
    const auto results = ccrsim::cli::selfcheck(options);
    ccrsim::cli::print_report(results, std::cout);
    return ccrsim::cli::all_passed(results) ? 0 : kNumericalError;
  } catch (const ccrsim::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericalError;
  }
}
