#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "stargraph/edst.hpp"
#include "stargraph/factors.hpp"
#include "stargraph/product_edst.hpp"
#include "stargraph/report.hpp"
#include "stargraph/serialize.hpp"
#include "stargraph/star_product.hpp"

namespace fs = std::filesystem;
using namespace stargraph;

namespace {

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t value) {
  if (opt->count()) return value;
  if (const char* env = std::getenv("STARGRAPH_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file " + path.string());
  out << text;
}

std::string slug(std::string name) {
  for (char& c : name)
    if (c == ':' || c == ',' || c == '*') c = '_';
  return name;
}

int cmd_generate(const std::string& preset, const std::string& outdir, std::uint64_t seed,
                 const std::string& bijection_file) {
  StarProduct sp;
  if (!bijection_file.empty()) {
    // star:<gen>*<gen> with the family loaded from a file
    auto colon = preset.find(':');
    if (preset.substr(0, colon) != "star")
      throw UsageError("--bijection=<file> only applies to star:<gen>*<gen>");
    std::string rest = preset.substr(colon + 1);
    auto starpos = rest.find('*');
    StarProduct base = make_preset("star:" + rest + ":identity", seed);
    std::ifstream in(bijection_file);
    if (!in) throw UsageError("cannot read bijection file " + bijection_file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    BijectionFamily f =
        bijections_from_json(text, base.structure, base.supernode.vertex_count());
    sp = star_product(base.structure, base.supernode, std::move(f), preset);
  } else {
    sp = make_preset(preset, seed);
  }
  fs::path dir(outdir);
  std::string base = slug(sp.name);
  write_file(dir / (base + ".json"), graph_to_json(sp.product));
  write_file(dir / (base + ".dot"), graph_to_dot(sp.product, "product"));
  write_file(dir / (base + ".structure.json"), graph_to_json(sp.structure));
  write_file(dir / (base + ".supernode.json"), graph_to_json(sp.supernode));
  std::cout << sp.name << ": |V|=" << sp.product.vertex_count()
            << " |E|=" << sp.product.edge_count() << " -> " << (dir / (base + ".json")).string()
            << "\n";
  return 0;
}

int cmd_edst(const std::string& preset, const std::string& mode_str, std::uint64_t seed,
             const std::string& out, std::uint64_t budget) {
  StarProduct sp = make_preset(preset, seed);
  Mode mode = parse_mode(mode_str);
  RunResult res = run_edst(sp, mode, budget);
  std::string payload = treeset_to_json(sp, res.ts, mode, seed);
  if (!out.empty()) write_file(out, payload);

  std::cout << sp.name << ": " << res.ts.trees.size() << " trees, verdict "
            << verdict_name(res.report.verdict) << " (" << res.ts.construction << ")\n";
  std::cout << "  tau=" << res.report.tau << " sigma=" << res.report.sigma << " ["
            << sigma_case_name(res.report.sigma_case) << "]"
            << " t_s=" << res.t_s << " r_s=" << res.r_s << " t_n=" << res.t_n
            << " r_n=" << res.r_n << "\n";
  for (const auto& row : depth_report(res.ts))
    std::cout << "  " << tree_kind_name(row.kind)
              << (row.index ? ":" + std::to_string(row.index) : "")
              << " depth=" << row.measured << " bound<=" << row.bound << "\n";
  if (!out.empty()) std::cout << "  wrote " << out << "\n";
  return 0;
}

int cmd_table(const std::string& presets_file, bool factors, const std::string& format,
              const std::string& out, std::uint64_t seed) {
  Table t;
  if (factors) {
    t = factor_table();
  } else {
    std::vector<std::string> presets = kDefaultPresets;
    if (!presets_file.empty()) {
      presets.clear();
      std::ifstream in(presets_file);
      if (!in) throw UsageError("cannot read preset list " + presets_file);
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) presets.push_back(line);
    }
    t = network_table(presets, seed);
  }
  std::string text = t.render(format);
  if (out.empty())
    std::cout << text;
  else {
    write_file(out, text);
    std::cout << "wrote " << out << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw UsageError("cannot read " + file);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  verify_treeset_json(text);
  std::cout << file << ": pass\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"star-product topology and edge-disjoint spanning tree toolkit"};
  app.require_subcommand(1);

  std::string preset, outdir = "out", mode = "auto", out, format = "csv";
  std::string presets_file, bijection_file, verify_file;
  std::uint64_t seed = 0, budget = 1000000;
  bool factors = false;

  auto* gen = app.add_subcommand("generate", "build a topology and write graph files");
  gen->add_option("preset", preset, "topology preset, e.g. slimfly:5")->required();
  gen->add_option("-o,--out", outdir, "output directory");
  auto* gen_seed = gen->add_option("--seed", seed, "bijection seed");
  gen->add_option("--bijection", bijection_file, "bijection family JSON for star: presets");

  auto* edst = app.add_subcommand("edst", "construct and verify EDSTs on a preset");
  edst->add_option("preset", preset, "topology preset")->required();
  edst->add_option("--mode", mode, "universal|lowdepth|maximum|property1|auto");
  auto* edst_seed = edst->add_option("--seed", seed, "bijection seed");
  edst->add_option("--out", out, "tree set JSON output path");
  edst->add_option("--budget", budget, "Property-1 search budget");

  auto* table = app.add_subcommand("table", "network or factor characterization table");
  table->add_option("--presets", presets_file, "file with one preset per line");
  table->add_flag("--factors", factors, "emit the factor-graph table instead");
  table->add_option("--format", format, "csv|json|md");
  table->add_option("--out", out, "output path (stdout if omitted)");
  auto* table_seed = table->add_option("--seed", seed, "bijection seed");

  auto* verify = app.add_subcommand("verify", "re-check a serialized tree set");
  verify->add_option("file", verify_file, "tree set JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_generate(preset, outdir, resolve_seed(gen_seed, seed),
                                           bijection_file);
    if (edst->parsed())
      return cmd_edst(preset, mode, resolve_seed(edst_seed, seed), out, budget);
    if (table->parsed())
      return cmd_table(presets_file, factors, format, out, resolve_seed(table_seed, seed));
    if (verify->parsed()) return cmd_verify(verify_file);
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 3;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 4;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
