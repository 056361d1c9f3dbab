#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact desk-scale calculator for prefix-closed trace languages, their parallel "
               "composition, vector firing sequences, and the algebraic translations between "
               "languages and finite partial algebras."};
  app.require_subcommand(1);

  landin::cli::RunConfig config;

  auto add_common = [&](CLI::App* sub, bool needs_in) {
    CLI::Option* in = sub->add_option("--in", config.input_path, "process spec file");
    if (needs_in) in->required();
    sub->add_option("--depth", config.depth, "depth bound override");
    sub->add_option("--format", config.format, "output format: json|dot|text");
    sub->add_option("--out", config.out_path, "write the document to FILE instead of stdout");
  };

  CLI::App* compose = app.add_subcommand("compose", "parallel composition of the processes");
  add_common(compose, true);
  CLI::App* vfs = app.add_subcommand("vfs", "vector firing sequences of the processes");
  add_common(vfs, true);
  CLI::App* algebra = app.add_subcommand("algebra", "state algebra of each process");
  add_common(algebra, true);
  CLI::App* closure =
      app.add_subcommand("closure", "reachable part of the product of the process algebras");
  add_common(closure, true);

  CLI::App* nf = app.add_subcommand("nf", "normal form of a word of vector operations");
  add_common(nf, true);
  nf->add_option("word", config.word, "space-separated symbols")->required();

  CLI::App* check = app.add_subcommand("check", "run theorem checks");
  add_common(check, false);
  check->add_option("target", config.check_target, "SUITE or a check id (CHARTH, CORRTH_I, ...)")
      ->default_val("SUITE");
  check->add_option("--seed", config.seed, "suite seed")->default_val(7);
  check->add_option("--instances", config.instances, "instances per check id")->default_val(25);
  check->add_option("--max-alphabet", config.max_alphabet, "largest run alphabet")->default_val(5);
  check->add_option("--max-components", config.max_components, "most components per instance")
      ->default_val(3);
  check->add_option("--max-depth", config.max_depth, "largest language depth")->default_val(6);

  CLI11_PARSE(app, argc, argv);

  for (CLI::App* sub : {compose, vfs, algebra, closure, nf, check})
    if (sub->parsed()) config.command = sub->get_name();

  landin::cli::RunResult result = landin::cli::run_command(config);
  if (!result.diagnostics.empty()) std::cerr << result.diagnostics;
  if (!result.output.empty()) {
    if (config.out_path.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(config.out_path, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write \"" << config.out_path << "\"\n";
        return 2;
      }
      out << result.output;
    }
  }
  return result.exit_code;
}
