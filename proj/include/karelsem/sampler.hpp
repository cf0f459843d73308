#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "karelsem/karel.hpp"
#include "karelsem/rng.hpp"

namespace karelsem {

// Depth-limited straight-line grammar:
//   Prog p := def run(): s        (depth 1)
//   Stmt s := s1; s2 | a          (initial statement at depth 2)
//   Action a := one of the 5 operations
// Each right hand side is chosen uniformly; at the depth cap the statement
// rule is forced to the terminal alternative, so max_depth 5 yields programs
// of 1 to 8 actions.
struct GrammarConfig {
  int max_depth = 5;
};

struct InputSamplerConfig {
  int rows = 8;
  int cols = 8;
  double obstacle_prob = 0.1;
  double marker_prob = 0.1;  // per non-obstacle cell; count uniform on [1, kMaxMarkers]
};

// One training record: the specification plus the program that generated it.
struct Example {
  Spec spec;  // n_ios (input, output) observation pairs
  Program reference;

  bool operator==(const Example&) const = default;
};

struct DatasetConfig {
  int n_examples = 0;
  int n_ios = 5;
  GrammarConfig grammar;
  InputSamplerConfig input;
};

struct Dataset {
  std::vector<Example> examples;
  std::string split;
  uint64_t seed = 0;
  DatasetConfig config;
};

Program sample_program(const GrammarConfig& cfg, Rng& rng);

// Robot uniform over non-obstacle cells, facing uniform. The robot's start
// cell is cleared of markers so that decoding the input observation recovers
// the sampled world exactly.
WorldState sample_input(const InputSamplerConfig& cfg, Rng& rng);

// Deterministic given (cfg, seed); each example draws from its own derived
// stream, so generation order (or parallelism) cannot change the result.
// Every example is validated against check_correct before being returned.
Dataset build_dataset(const DatasetConfig& cfg, const std::string& split, uint64_t seed);

Example build_example(const DatasetConfig& cfg, uint64_t example_seed);

}  // namespace karelsem
