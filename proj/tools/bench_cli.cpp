#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "manifolds/bench/bench.hpp"

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) out += (out.empty() ? "" : ",") + item;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  namespace mb = manifolds::bench;
  CLI::App app{"Times distance, retraction and inverse retraction on the benchmark manifolds"};

  std::string manifolds = join(mb::manifold_ids());
  std::string ops = join(mb::op_ids());
  mb::BenchConfig cfg;
  std::string out = "-";
  app.add_option("--manifolds", manifolds, "Comma list of " + join(mb::manifold_ids()))->capture_default_str();
  app.add_option("--ops", ops, "Comma list of " + join(mb::op_ids()))->capture_default_str();
  app.add_option("--min-seconds", cfg.min_seconds, "Minimum wall time of the measured loop")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for input generation")->capture_default_str();
  app.add_option("--out", out, "CSV output path, - for stdout")->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads (only 1 is supported)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    cfg.manifolds = mb::split_list(manifolds);
    cfg.ops = mb::split_list(ops);
    const std::string csv = mb::emit_csv(mb::run_bench(cfg));
    if (out == "-") {
      std::cout << csv;
      std::cout.flush();
      if (!std::cout) throw std::runtime_error("failed to write CSV to stdout");
    } else {
      std::ofstream file(out, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output file " + out);
      file << csv;
      if (!file.flush()) throw std::runtime_error("failed to write " + out);
    }
  } catch (const std::exception& e) {
    std::cerr << "bench-cli: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
