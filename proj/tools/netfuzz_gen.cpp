// netfuzz-gen: deterministic benchmark circuit generator (BENCH output).

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "netfuzz/bench.hpp"
#include "netfuzz/synth.hpp"

int main(int argc, char** argv) {
  CLI::App app{"generate deterministic benchmark netlists"};
  app.require_subcommand(1);

  netfuzz::RandomNetlistSpec spec;
  std::uint32_t mult_width = 16;
  std::string out_path;

  CLI::App* random = app.add_subcommand("random", "random ISCAS-style netlist");
  random->add_option("--name", spec.name)->capture_default_str();
  random->add_option("--inputs", spec.inputs)->capture_default_str();
  random->add_option("--outputs", spec.outputs)->capture_default_str();
  random->add_option("--gates", spec.gates)->capture_default_str();
  random->add_option("--dffs", spec.dffs)->capture_default_str();
  random->add_option("--max-arity", spec.max_arity)->capture_default_str();
  random->add_option("--seed", spec.rng_seed)->capture_default_str();
  random->add_option("--out", out_path, "output .bench (default stdout)");

  CLI::App* mult = app.add_subcommand("mult", "array multiplier");
  mult->add_option("--width", mult_width)->capture_default_str();
  mult->add_option("--out", out_path, "output .bench (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    const netfuzz::Netlist nl = mult->parsed()
                                    ? netfuzz::gen_multiplier(mult_width)
                                    : netfuzz::gen_random_netlist(spec);
    const std::string text = netfuzz::write_bench(nl);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 1;
      }
      out << text;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
