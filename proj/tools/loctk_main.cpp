#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "loctk/dsl.hpp"
#include "loctk/error.hpp"
#include "loctk/report.hpp"
#include "loctk/suite.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::error_code ec;
  const auto st = std::filesystem::status(path, ec);
  if (ec || !std::filesystem::exists(st))
    loctk::fail(loctk::Errc::syntax_error, "cannot open '" + path + "'");
  // an ifstream happily opens a directory and reads nothing, which would
  // make a typo'd path look like a valid empty declaration file
  if (!std::filesystem::is_regular_file(st))
    loctk::fail(loctk::Errc::syntax_error, "'" + path + "' is not a regular file");
  std::ifstream in(path, std::ios::binary);
  if (!in) loctk::fail(loctk::Errc::syntax_error, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

loctk::Workspace load(const std::vector<std::string>& files) {
  std::vector<std::pair<std::string, std::string>> sources;
  sources.reserve(files.size());
  for (const std::string& f : files) sources.emplace_back(f, slurp(f));
  return loctk::parse_files(sources);
}

void emit(const loctk::Json& doc, const std::string& format) {
  if (format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << loctk::render_text(doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite frames and locales: points, spectra, coproducts"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  int cap_elements = 0;
  app.add_option("--cap-elements", cap_elements,
                 "Override the per-construction element cap")
      ->envname("LOCTK_CAP_ELEMENTS")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> files;
  std::string frame, joins, left, right, from, to, ring;
  bool verify_spatial = false;

  CLI::App* c_check = app.add_subcommand("check", "Parse and validate declaration files");
  c_check->add_option("files", files, "Declaration files");

  CLI::App* c_analyze =
      app.add_subcommand("analyze", "Properties and spectrum of one frame");
  c_analyze->add_option("files", files, "Declaration files")->required();
  c_analyze->add_option("--frame", frame, "Frame name")->required();
  c_analyze->add_option("--joins", joins, "Joins declaration (default: all joins)");

  CLI::App* c_points = app.add_subcommand("points", "Points of a frame");
  c_points->add_option("files", files, "Declaration files")->required();
  c_points->add_option("--frame", frame, "Frame name")->required();
  c_points->add_option("--joins", joins, "Joins declaration (default: all joins)");

  CLI::App* c_coproduct = app.add_subcommand("coproduct", "Coproduct of two frames");
  c_coproduct->add_option("files", files, "Declaration files")->required();
  c_coproduct->add_option("--left", left, "Left frame")->required();
  c_coproduct->add_option("--right", right, "Right frame")->required();
  c_coproduct->add_flag("--verify-spatial", verify_spatial,
                        "Check the comparison with the product of the spectra");

  CLI::App* c_maps = app.add_subcommand("maps", "All frame maps between two frames");
  c_maps->add_option("files", files, "Declaration files")->required();
  c_maps->add_option("--from", from, "Domain frame")->required();
  c_maps->add_option("--to", to, "Codomain frame")->required();

  CLI::App* c_spec = app.add_subcommand("spec", "Prime spectrum of a ring");
  c_spec->add_option("files", files, "Declaration files")->required();
  c_spec->add_option("--ring", ring, "Ring name")->required();

  loctk::SuiteOptions sopt;
  int max_poset = sopt.corpus.max_poset;
  int max_ring = sopt.corpus.max_ring;
  CLI::App* c_suite =
      app.add_subcommand("suite", "Cross-check the toolkit on its built-in corpus");
  c_suite->add_option("--max-poset", max_poset, "Largest poset size in the corpus")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  c_suite->add_option("--max-ring", max_ring, "Largest cyclic ring in the corpus")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  c_suite->add_option("--mono-trials", sopt.mono_trials,
                      "Randomized monotonicity trials")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  c_suite->add_option("--family-trials", sopt.family_trials,
                      "Randomized join-family trials")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  c_suite->add_option("--seed", sopt.seed, "Random seed")->capture_default_str();
  c_suite->add_flag("--inject-defect", sopt.inject_defect,
                    "Corrupt one corpus frame first; the run must then fail");

  // global flags may follow the subcommand
  for (CLI::App* sub : {c_check, c_analyze, c_points, c_coproduct, c_maps, c_spec, c_suite})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cap_elements > 0) loctk::limits().max_elements = cap_elements;

    if (*c_check) {
      emit(loctk::check_report(load(files)), format);
    } else if (*c_analyze) {
      emit(loctk::analyze_report(load(files), frame, joins), format);
    } else if (*c_points) {
      emit(loctk::points_report(load(files), frame, joins), format);
    } else if (*c_coproduct) {
      emit(loctk::coproduct_report(load(files), left, right, verify_spatial), format);
    } else if (*c_maps) {
      emit(loctk::maps_report(load(files), from, to), format);
    } else if (*c_spec) {
      emit(loctk::ring_report(load(files), ring), format);
    } else if (*c_suite) {
      sopt.corpus.max_poset = max_poset;
      sopt.corpus.max_space_points = std::min(3, max_poset);
      sopt.corpus.max_boolean = std::min(3, max_poset);
      sopt.corpus.max_chain = max_poset > 0 ? 5 : 0;
      sopt.corpus.max_ring = max_ring;
      sopt.corpus.max_cyclic_factor = max_ring >= 2 ? std::min(6, max_ring) : 0;
      loctk::SuiteResult result = loctk::run_suite(sopt);
      emit(loctk::suite_report(sopt, result), format);
      if (!result.all_pass) return 1;
    }
  } catch (const loctk::ToolError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
