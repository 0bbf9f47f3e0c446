#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rectpack::cli {

enum ExitCode { kOk = 0, kInvalid = 1, kUsage = 2, kBudget = 3 };

struct Config {
  std::string input;
  std::string output = "-";

  // generate
  std::string family = "random";
  std::string profile = "uniform";
  std::size_t n = 10;
  std::int64_t N = 100;
  unsigned long long seed = 0;
  bool rotation = false;
  std::vector<std::int64_t> values;
  int k = 9;
  bool ksum = false;
  bool force = false;
  std::string split_path;
  std::string split_out;
  std::string packing_out;
  std::int64_t max_value = 50;
  std::size_t distractors = 3;
  int bends = 2;
  bool closed = false;

  // solve / oracle / search
  std::string algo = "container";
  int c = 2;
  std::string eps = "1/4";
  std::int64_t grid = 16;
  std::size_t budget = 2000;
  std::size_t max_items = 10;
  double time_budget = 60.0;
  int oracle_c = -1;
  int extract_k = 0;

  // verify
  bool containers = false;
  bool lcstar = false;
  std::string aux;
  std::string report;

  // transform
  std::string op;
  std::string packing;
  int container = 0;
  std::string delta = "1/4";
  std::string mode = "weighted";
  std::string eps_large = "1/16";
  std::string eps_thin = "1/64";
  std::string mu;
  std::string thickness = "1/16";
  std::string orientation = "horizontal";
  std::string corridor;
  std::string small = "1/50";
  std::string large = "1/5";

  // gap
  std::size_t k_max = 8;
  unsigned long long state_budget = 1ull << 26;
  std::int64_t coarsen = 1;

  // render
  std::string overlay;
  int size = 600;

  // bench
  std::string suite;
  std::size_t count = 20;
};

int cmd_generate(const Config& cfg);
int cmd_solve(const Config& cfg);
int cmd_verify(const Config& cfg);
int cmd_transform(const Config& cfg);
int cmd_gap(const Config& cfg);
int cmd_oracle(const Config& cfg);
int cmd_extract(const Config& cfg);
int cmd_render(const Config& cfg);
int cmd_bench(const Config& cfg);

// Parses argv, dispatches, and maps errors to exit codes.
int run(int argc, char** argv);

}  // namespace rectpack::cli
