#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace cli = sullivan::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with minimal Sullivan algebras", "sullivan"};
  app.set_version_flag("--version", cli::kToolVersion);

  cli::Options opts;
  std::string file;
  std::string format = "text";
  std::vector<std::string> algebras;

  std::string commands;
  for (const auto& c : cli::command_names()) commands += (commands.empty() ? "" : ", ") + c;
  app.add_option("command", opts.command, "One of: " + commands)->required();
  app.add_option("file", file, "DSL document")->required();
  app.add_option("items", opts.items, "Items to analyze (default: every applicable item)");
  app.add_option("--algebra", algebras, "Item to analyze; may be repeated");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-degree", opts.max_degree, "Cutoff degree")->check(CLI::PositiveNumber);
  app.add_option("--split-depth", opts.split_depth, "Case-split budget for iso-search")->check(CLI::NonNegativeNumber);
  app.add_option("--target", opts.target, "Target algebra for iso-search (default: the coformal limit)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsageError;
  }
  opts.items.insert(opts.items.end(), algebras.begin(), algebras.end());

  std::ifstream in(file);
  if (!in) {
    std::cerr << "sullivan: cannot read " << file << '\n';
    return cli::kUsageError;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  sullivan::Document doc;
  try {
    doc = sullivan::parse(buffer.str());
  } catch (const sullivan::Error& e) {
    std::cerr << file << ": " << e.what() << '\n';
    return cli::kValidationFailure;
  }

  try {
    const auto result = cli::run(opts, doc);
    if (format == "json") {
      std::cout << result.json.dump(2) << '\n';
    } else {
      std::cout << result.text;
    }
    return result.exit_code;
  } catch (const cli::UsageError& e) {
    std::cerr << "sullivan: " << e.what() << '\n';
    return cli::kUsageError;
  }
}
