// cplxmine: pairwise comparison, fixed-antecedent rule mining and
// complexity/effort trend analysis over a COCOMO81-style dataset.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cplxmine/cplxmine.hpp"

#ifndef CPLXMINE_DEFAULT_DATASET
#define CPLXMINE_DEFAULT_DATASET "data/cocomo81.csv"
#endif

namespace {

constexpr int kExitDataset = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

template <typename T>
std::vector<std::string> keys(const std::map<std::string, T>& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace cplxmine;

  CLI::App app{"Fixed-antecedent rule mining over pairwise project comparisons"};

  PipelineConfig config;
  config.dataset_path = CPLXMINE_DEFAULT_DATASET;
  std::string antecedent = "CPLX=+,ACTUAL=-";
  std::string output_path;
  std::string plot_path;

  const std::map<std::string, Analysis> analyses{{"transform", Analysis::Transform},
                                                 {"mine", Analysis::Mine},
                                                 {"trend", Analysis::Trend},
                                                 {"all", Analysis::All}};
  const std::map<std::string, Scope> scopes{{"general", Scope::General},
                                            {"organic", Scope::Organic},
                                            {"semidetached", Scope::Semidetached},
                                            {"embedded", Scope::Embedded},
                                            {"each", Scope::Each}};
  const std::map<std::string, Engine> engines{{"faithful", Engine::Faithful},
                                              {"optimized", Engine::Optimized}};
  const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::Csv},
                                                    {"text", OutputFormat::Text}};

  app.add_option("--dataset", config.dataset_path, "Dataset CSV")->capture_default_str();
  std::string analysis = "all";
  std::string scope = "each";
  std::string engine = "optimized";
  std::string format = "text";
  app.add_option("--analysis", analysis, "Stages to run")
      ->transform(CLI::IsMember(keys(analyses), CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--scope", scope, "Project scope")
      ->transform(CLI::IsMember(keys(scopes), CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--min-freq", config.mining.min_frequency, "Strict minimum frequency")
      ->capture_default_str();
  app.add_option("--min-acc", config.mining.min_accuracy, "Strict minimum accuracy")
      ->capture_default_str();
  app.add_option("--antecedent", antecedent, "ATTR=SIGN,... (first entry is the pivot)")
      ->capture_default_str();
  app.add_option("--max-consequent", config.mining.max_consequent_size,
                 "Largest consequent size")
      ->capture_default_str();
  app.add_option("--engine", engine, "Mining engine")
      ->transform(CLI::IsMember(keys(engines), CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--format", format, "Report format")
      ->transform(CLI::IsMember(keys(formats), CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--out", output_path, "Output file (default: standard output)");
  app.add_option("--plot-data", plot_path, "Write per-pair distribution JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  config.analysis = analyses.at(analysis);
  config.scope = scopes.at(scope);
  config.engine = engines.at(engine);
  config.format = formats.at(format);

  try {
    config.mining.antecedent = parse_antecedent(antecedent);
    if (!output_path.empty()) config.output_path = output_path;
    if (!plot_path.empty()) config.plot_data_path = plot_path;

    const auto report = run_pipeline(config);
    if (config.output_path)
      emit_report(report, config.format, *config.output_path);
    else
      emit_report(report, config.format, std::cout);
    if (config.plot_data_path) write_plot_data(report, *config.plot_data_path);
    for (const auto& s : report.scopes)
      for (const auto& w : s.warnings) std::cerr << "warning [" << s.name << "]: " << w << '\n';
  } catch (const DatasetError& e) {
    std::cerr << "dataset error: " << e.what() << '\n';
    return kExitDataset;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
  return EXIT_SUCCESS;
}
