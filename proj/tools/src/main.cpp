#include <iostream>

#include "CLI11.hpp"

#include "commands.hpp"
#include "gscomm/version.hpp"

int main(int argc, char** argv) {
  using namespace gscomm::cli;

  CLI::App app{"graph-state dense coding and teleportation toolkit"};
  app.set_version_flag("--version", std::string(gscomm::kVersion));
  app.require_subcommand(1);

  CheckOptions check_opt;
  auto* check = app.add_subcommand("check", "Decide whether a graph supports the protocols");
  check->add_option("file", check_opt.path, "graph file ('-' for stdin)")->required();
  check->add_flag("--json", check_opt.json, "emit a JSON report");

  DenseOptions dense_opt;
  auto* dense = app.add_subcommand("dense", "Run the dense-coding pipeline");
  dense->add_option("file", dense_opt.path, "graph file ('-' for stdin)")->required();
  dense->add_flag("--all", dense_opt.all, "sweep all 4^n messages");
  dense->add_option("--message", dense_opt.message, "single message '<a-bits>,<b-bits>'");
  dense->add_flag("--oracle", dense_opt.oracle, "confirm against the state-vector oracle");
  dense->add_flag("--json", dense_opt.json, "emit a JSON report");

  TeleportOptions tele_opt;
  auto* teleport = app.add_subcommand("teleport", "Simulate teleportation of random inputs");
  teleport->add_option("file", tele_opt.path, "graph file ('-' for stdin)")->required();
  teleport->add_option("--trials", tele_opt.trials, "number of random inputs")
      ->check(CLI::PositiveNumber);
  teleport->add_flag("--all-outcomes", tele_opt.all_outcomes,
                     "list every measurement outcome in the text report");
  teleport->add_option("--seed", tele_opt.seed, "seed for the reproducible input generator");
  teleport->add_flag("--json", tele_opt.json, "emit a JSON report");

  LcOptions lc_opt;
  auto* lc = app.add_subcommand("lc", "Locally complement at a vertex and print the graph");
  lc->add_option("file", lc_opt.path, "graph file ('-' for stdin)")->required();
  lc->add_option("vertex", lc_opt.vertex, "vertex id (original labeling)")->required();
  lc->add_flag("--check-rank", lc_opt.check_rank, "print rank before/after and assert equality");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  if (check->parsed()) return cmd_check(check_opt, std::cout, std::cerr);
  if (dense->parsed()) return cmd_dense(dense_opt, std::cout, std::cerr);
  if (teleport->parsed()) return cmd_teleport(tele_opt, std::cout, std::cerr);
  if (lc->parsed()) return cmd_lc(lc_opt, std::cout, std::cerr);
  return kExitError;
}
