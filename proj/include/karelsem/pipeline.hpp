#pragma once

#include <string>
#include <vector>

#include "karelsem/config.hpp"

namespace karelsem::pipeline {

// Layout of a run directory. Every artifact lives under one root so a run is
// self-contained and reproducible from its manifest.
struct Paths {
  std::string root;

  std::string manifest() const { return root + "/manifest.json"; }
  std::string corpus_dir() const { return root + "/corpus"; }
  std::string train_corpus() const { return corpus_dir() + "/train.txt"; }
  std::string test_corpus() const { return corpus_dir() + "/test.txt"; }
  std::string vocab_file() const { return corpus_dir() + "/vocab.json"; }
  std::string lm_dir() const { return root + "/lm"; }
  std::string ckpt_file(int step) const;
  std::string eval_dir() const { return root + "/eval"; }
  std::string gen_acc_csv() const { return eval_dir() + "/gen_acc.csv"; }
  std::string decodes_file(int step, const std::string& split) const;
  std::string trace_dir() const { return root + "/traces"; }
  std::string trace_file(int step, const std::string& split, bool binary) const;
  std::string probe_dir() const { return root + "/probes"; }
  std::string probe_results_csv() const { return probe_dir() + "/results.csv"; }
  std::string future_baseline_csv() const { return probe_dir() + "/future_baseline.csv"; }
  std::string analysis_dir() const { return root + "/analysis"; }
  std::string report_json() const { return analysis_dir() + "/report.json"; }
  std::string figures_dir() const { return analysis_dir() + "/figures"; }
};

// Steps at which checkpoints exist for a config: 0, interval, ..., total.
std::vector<int> checkpoint_steps(const RunConfig& cfg);

// Creates the run directory and manifest, or validates the existing manifest
// against the config hash. A hash mismatch aborts unless force is set, in
// which case the directory is reinitialized.
Paths open_run(const RunConfig& cfg, const std::string& run_dir, bool force = false);

bool stage_done(const Paths& paths, const std::string& stage);
void mark_stage_done(const Paths& paths, const std::string& stage);

// Stages. Each is idempotent: a completed stage (per the manifest) returns
// immediately unless force is set.
void gen_data(const RunConfig& cfg, const Paths& paths, bool force = false);
void train_lm_stage(const RunConfig& cfg, const Paths& paths, bool force = false);
void eval_gen_stage(const RunConfig& cfg, const Paths& paths, bool force = false);
void capture_stage(const RunConfig& cfg, const Paths& paths, bool force = false);
void train_probe_stage(const RunConfig& cfg, const Paths& paths, bool force = false);
void intervene_stage(const RunConfig& cfg, const Paths& paths, bool force = false);
void analyze_stage(const RunConfig& cfg, const Paths& paths, bool force = false);
void report_stage(const RunConfig& cfg, const Paths& paths, bool force = false);

void run_all(const RunConfig& cfg, const Paths& paths, bool force = false);

}  // namespace karelsem::pipeline
