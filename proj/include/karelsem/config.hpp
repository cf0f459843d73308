#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "karelsem/lm.hpp"
#include "karelsem/sampler.hpp"

namespace karelsem {

// Linear probe training schedule: 100 epochs of AdamW at lr 0.01 decaying by
// 0.1 at epochs 75 and 90, batch 256, weight decay 1e-4.
struct ProbeConfig {
  int max_train_records = 100000;  // "first N aligned traces"
  int epochs = 100;
  int batch_size = 256;
  float lr = 0.01f;
  float weight_decay = 1e-4f;
  std::vector<int> decay_epochs = {75, 90};
  float decay_factor = 0.1f;
  // If true, the layer norm in front of the linear map carries no learned
  // affine parameters (flagged alternative; default keeps them).
  bool plain_norm = false;
  uint64_t seed = 1;
};

struct CaptureConfig {
  // Training-split trace capture walks the split in order and stops after
  // this many examples, but keeps going until min_records op-token records
  // exist (early checkpoints decode mostly malformed text).
  int train_examples = 8000;
  int min_records = 500;
  bool write_jsonl = true;  // canonical trace format
  bool write_binary = true; // packed twin, used when present
};

struct AnalysisConfig {
  int bootstrap_resamples = 9999;
  double confidence = 0.95;
  int train_ppl_examples = 10000;  // fixed training subsample for perplexity
};

// One structured config drives every pipeline stage; the master seed derives
// each stage's stream.
struct RunConfig {
  std::string name = "run";
  uint64_t master_seed = 1;

  int rows = 8;
  int cols = 8;
  int n_ios = 5;
  int n_train = 100000;
  int n_test = 2000;

  GrammarConfig grammar;
  InputSamplerConfig input;  // rows/cols filled from the grid settings
  lm::LMConfig lm;
  bool lm_seed_override = false;  // set when the config file pins lm.seed
  ProbeConfig probe;
  CaptureConfig capture;
  std::vector<std::string> interventions = {"opposite", "swap", "shift", "random"};
  std::vector<int> offsets = {-2, -1, 0, 1, 2};
  AnalysisConfig analysis;
  int workers = 2;

  uint64_t train_data_seed() const { return derive_seed(master_seed, "data-train"); }
  uint64_t test_data_seed() const { return derive_seed(master_seed, "data-test"); }
  uint64_t probe_seed() const { return derive_seed(master_seed, "probe"); }

  DatasetConfig train_dataset_config() const;
  DatasetConfig test_dataset_config() const;

  void finalize();  // fills derived fields and validates; throws on error
};

RunConfig run_config_from_json(const std::string& json_text);
RunConfig load_run_config(const std::string& path);
std::string run_config_to_json(const RunConfig& cfg);

// Stable content hash of the canonical config serialization.
std::string config_hash(const RunConfig& cfg);

}  // namespace karelsem
