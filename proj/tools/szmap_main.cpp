// Command-line front end: compute, hin, hom, verify, diagram.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "szmap/cli.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    const int value = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("not an integer: '" + item + "'");
    out.push_back(value);
  }
  return out;
}

szmap::RunConfig::Format parse_format(const std::string& name) {
  using Format = szmap::RunConfig::Format;
  static const std::map<std::string, Format> table = {{"text", Format::text},
                                                      {"json", Format::json},
                                                      {"dot", Format::dot},
                                                      {"tikz", Format::tikz}};
  return table.at(name);
}

int default_max_n() {
  if (const char* env = std::getenv(szmap::kMaxNEnvVar)) {
    const int value = std::atoi(env);
    if (value >= 1) return value;
  }
  return 6;
}

int emit(const szmap::RunResult& result, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << result.document;
  } else {
    std::ofstream out(output_path);
    if (!out) {
      std::cerr << "error: cannot open output file '" << output_path << "'\n";
      return 2;
    }
    out << result.document;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"szmap: exact combinatorics of the Szczarba comparison map on standard simplices"};
  app.require_subcommand(1);

  szmap::RunConfig cfg;
  cfg.max_n = default_max_n();
  std::string seq_text, subset_text, family = "c", format;
  std::string output_path;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", output_path, "write the document to a file");
  };

  CLI::App* compute = app.add_subcommand(
      "compute", "Szczarba value of one sequence-indexed simplex, via the operator route");
  compute->add_option("-n", cfg.n, "ambient simplex dimension")->required();
  compute->add_option("-p", cfg.p, "source object")->required();
  compute->add_option("-q", cfg.q, "target object")->required();
  compute->add_option("--seq", seq_text,
                      "comma-separated sequence, e.g. 2,1; omit for the empty sequence");
  compute->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  add_output(compute);

  CLI::App* hin = app.add_subcommand("hin", "image of one subset morphism");
  hin->add_option("-n", cfg.n, "ambient simplex dimension")->required();
  hin->add_option("--subset", subset_text,
                  "comma-separated subset including both endpoints, e.g. 0,2,4")
      ->required();
  hin->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  add_output(hin);

  CLI::App* hom = app.add_subcommand("hom", "enumerate one hom poset or its nerve");
  hom->add_option("--family", family, "'c' (subset side) or 'g' (loop-group side)")
      ->check(CLI::IsMember({"c", "g"}));
  hom->add_option("-n", cfg.n, "ambient simplex dimension")->required();
  hom->add_option("-p", cfg.p, "source object")->required();
  hom->add_option("-q", cfg.q, "target object")->required();
  hom->add_option("--nerve", cfg.nerve_level, "list chains of this length instead of elements");
  hom->add_flag("--nondegenerate", cfg.nondegenerate_only, "strictly increasing chains only");
  hom->add_flag("--descending", cfg.descending, "print chains top-down");
  hom->add_option("--format", format, "text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  add_output(hom);

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check the operator route against the element-wise route");
  verify->add_option("--max-n", cfg.max_n,
                     "largest ambient dimension (default from " +
                         std::string(szmap::kMaxNEnvVar) + " or 6)");
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  add_output(verify);

  CLI::App* diagram = app.add_subcommand("diagram", "category picture or two-panel hom figure");
  diagram->add_option("-n", cfg.n, "ambient simplex dimension")->required();
  diagram->add_option("-p", cfg.p, "source object (tikz)");
  diagram->add_option("-q", cfg.q, "target object (tikz)");
  diagram->add_option("--family", family, "'c' or 'g' (dot)")
      ->check(CLI::IsMember({"c", "g"}));
  diagram->add_option("--format", format, "dot or tikz")
      ->check(CLI::IsMember({"dot", "tikz"}));
  add_output(diagram);

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) {
      cfg.command = szmap::RunConfig::Command::compute;
      cfg.sequence = parse_int_list(seq_text);
      cfg.format = parse_format(format.empty() ? "text" : format);
    } else if (hin->parsed()) {
      cfg.command = szmap::RunConfig::Command::hin;
      cfg.subset = parse_int_list(subset_text);
      cfg.format = parse_format(format.empty() ? "text" : format);
    } else if (hom->parsed()) {
      cfg.command = szmap::RunConfig::Command::hom;
      cfg.family = family[0];
      cfg.format = parse_format(format.empty() ? "text" : format);
    } else if (verify->parsed()) {
      cfg.command = szmap::RunConfig::Command::verify;
      cfg.format = parse_format(format.empty() ? "text" : format);
    } else {
      cfg.command = szmap::RunConfig::Command::diagram;
      cfg.family = family[0];
      cfg.format = parse_format(format.empty() ? "dot" : format);
      if (cfg.format == szmap::RunConfig::Format::tikz && diagram->count("-q") == 0)
        cfg.q = cfg.n;
    }
    cfg.output_path = output_path;
    return emit(szmap::run(cfg), output_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
