#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hss/catalog.hpp"
#include "hss/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic verification workbench for Hermitian symmetric "
               "space rigidity case checks"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "Enumerate supported objects");
  list->require_subcommand(1);
  auto* list_spaces = list->add_subcommand("spaces", "Supported ambient spaces");
  std::optional<int> list_max_rank;
  list_spaces->add_option("--max-rank", list_max_rank, "Cap on the symmetric-space rank");
  auto* list_embeddings =
      list->add_subcommand("embeddings", "Catalogued embeddings of one ambient");
  std::string emb_space;
  list_embeddings->add_option("--space", emb_space, "Ambient space label")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::optional<std::string> space;
  std::optional<int> max_rank;
  std::string format = "text";
  std::optional<std::string> out_path;
  verify->add_option("--suite", suite, "Suite id")
      ->required()
      ->check(CLI::IsMember(hss::known_suites()));
  verify->add_option("--space", space, "Restrict to one ambient space");
  verify->add_option("--max-rank", max_rank, "Cap on the symmetric-space rank");
  verify->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "Write the report to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list_spaces->parsed()) {
      for (const auto& label : hss::spaces_in_range(list_max_rank))
        std::cout << label << "\n";
      return 0;
    }
    if (list_embeddings->parsed()) {
      const hss::HSSDescriptor hss = hss::build_hss(emb_space);
      for (const auto& e : hss::catalog_embeddings(hss)) {
        std::cout << e.name << " dim=" << e.dim_m
                  << " diagonal=" << (e.diagonal_type ? "yes" : "no") << " ("
                  << e.diagonal_source << ")";
        if (e.catalog_error) std::cout << " CATALOG-ERROR: " << e.note;
        std::cout << "\n";
      }
      return 0;
    }

    const hss::RunReport report =
        hss::run_suite(hss::SuiteSpec{suite, space, max_rank});
    const std::string rendered = format == "json"
                                     ? hss::render_json(report).dump(2) + "\n"
                                     : hss::render_text(report);
    if (out_path) {
      std::ofstream f(*out_path);
      if (!f) {
        std::cerr << "error: cannot open " << *out_path << "\n";
        return 2;
      }
      f << rendered;
    } else {
      std::cout << rendered;
    }
    return report.ok() ? 0 : 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
