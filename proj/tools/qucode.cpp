#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "qucode/cli.hpp"

using namespace qucode::cli;

int main(int argc, char** argv)
{
  CLI::App app{"Quasi-uniform codes from finite groups"};
  app.require_subcommand(1);

  RunConfig config;
  const std::map<std::string, OutputFormat> formats{{"table", OutputFormat::Table},
                                                    {"json", OutputFormat::Json}};

  auto add_group_flags = [&](CLI::App* sub) {
    sub->add_option("-g,--group", config.group_spec, "Group, e.g. C3xC3, S3, D12, Q8, Dic12");
    sub->add_option("-s,--subgroups", config.subgroup_spec,
                    "Subgroup selection, e.g. \"gens:(1,0)|gens:(0,1)\" or all-nontrivial");
  };
  auto add_common_flags = [&](CLI::App* sub) {
    sub->add_option("-o,--output", config.output, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--cap-order", config.caps.max_order, "Largest group order accepted");
    sub->add_option("--cap-enum", config.caps.max_enumeration, "Largest subgroup lattice enumerated");
    sub->add_option("--cap-search", config.caps.max_search,
                    "Largest group order for representability search");
  };

  auto* construct = app.add_subcommand("construct", "Coset table and labeled code");
  add_group_flags(construct);
  add_common_flags(construct);

  auto* analyze = app.add_subcommand("analyze", "Profile, weight enumerator, distance, almost-affine");
  add_group_flags(analyze);
  add_common_flags(analyze);
  analyze->add_option("--input", config.input_path, "Code JSON written by construct -o json");
  analyze->add_option("--center", config.center, "Codeword index for the distance profile");
  analyze->add_option("-q", config.q, "Base for the almost-affine check");

  auto* represent = app.add_subcommand("represent", "Search for an abelian representation");
  add_group_flags(represent);
  add_common_flags(represent);
  represent->add_option("--order-multiple", config.order_multiple,
                        "Also try abelian groups whose order divides this multiple of |G|");

  auto* verify = app.add_subcommand("verify", "Check quasi-uniformity");
  add_group_flags(verify);
  add_common_flags(verify);
  verify->add_option("--input", config.input_path, "Code JSON written by construct -o json");

  auto* regen = app.add_subcommand("regen-paper-examples", "Write the golden example files");
  regen->add_option("--out-dir", config.out_dir, "Output directory");
  add_common_flags(regen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  }

  config.command = command_from_string(app.get_subcommands().front()->get_name());
  return run(config, std::cout, std::cerr);
}
