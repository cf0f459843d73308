#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "karelsem/codec.hpp"

namespace karelsem::lm {

// Decoder-only pre-norm transformer with learned positions, trained from
// scratch by next-token prediction over the whole sequence.
struct LMConfig {
  int n_layers = 4;
  int n_heads = 4;
  int d_model = 128;
  int context = 256;
  int vocab = Vocab::kSize;

  float lr = 3e-4f;
  int warmup_steps = 100;
  int batch_size = 16;
  int total_steps = 20000;
  int ckpt_interval = 1000;
  float beta1 = 0.9f;
  float beta2 = 0.999f;
  float adam_eps = 1e-8f;
  float weight_decay = 0.0f;
  float init_std = 0.02f;
  uint64_t seed = 1;

  int decode_cap = 16;
  // If set, the model state averages the embedding stream in with the
  // per-block outputs.
  bool mean_includes_embedding = false;

  void validate() const;  // throws std::invalid_argument
};

std::string lm_config_to_json(const LMConfig& cfg);
LMConfig lm_config_from_json(const std::string& json_text);

struct TensorSpec {
  std::string name;
  size_t offset = 0;
  size_t size = 0;
};

template <typename T>
class Model {
 public:
  using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

  explicit Model(LMConfig cfg);

  const LMConfig& config() const { return cfg_; }
  size_t n_params() const { return params_.size(); }
  std::vector<T>& params() { return params_; }
  const std::vector<T>& params() const { return params_; }
  const std::vector<TensorSpec>& tensors() const { return tensors_; }

  void init(uint64_t seed);

  struct ForwardResult {
    Mat logits;               // vocab x n
    Mat embed;                // d_model x n, the pre-block stream
    std::vector<Mat> hidden;  // n_layers entries, d_model x n, post-block
  };

  // Causal forward over the whole sequence.
  ForwardResult forward(std::span<const TokenId> ids) const;

  // Teacher-forced next-token loss; returns (nll sum, target count). Targets
  // equal to PAD are excluded. If grad is non-null, d(nll sum)/d(params) is
  // accumulated into it (same layout as params()).
  std::pair<double, int> loss(std::span<const TokenId> ids, std::vector<T>* grad) const;

  // nll of predicting ids[t+1] for t in [0, n-2].
  std::vector<double> position_nll(std::span<const TokenId> ids) const;

  // Layer-mean model state at every position (d_model x n).
  Mat hidden_mean(const ForwardResult& f) const;

 private:
  friend class Decoder;
  LMConfig cfg_;
  std::vector<T> params_;
  std::vector<TensorSpec> tensors_;

  size_t add_tensor(const std::string& name, size_t size);

  // layout offsets
  size_t tok_ = 0, pos_ = 0, lnf_g_ = 0, lnf_b_ = 0, head_w_ = 0, head_b_ = 0;
  struct LayerOffsets {
    size_t ln1_g, ln1_b, qkv_w, qkv_b, o_w, o_b, ln2_g, ln2_b, fc_w, fc_b, pr_w, pr_b;
  };
  std::vector<LayerOffsets> layers_;

  struct Workspace;
  void run_forward(std::span<const TokenId> ids, Workspace& ws) const;
};

// ---------------------------------------------------------------------------
// Greedy decoding with a per-layer KV cache
// ---------------------------------------------------------------------------

class Decoder {
 public:
  explicit Decoder(const Model<float>& model);

  void reset();
  void prefill(std::span<const TokenId> ids);
  void push(TokenId id);
  int pos() const { return pos_; }

  // Greedy next token; exact ties resolve to the lowest id.
  TokenId argmax_next() const;
  const Eigen::VectorXf& last_logits() const { return last_logits_; }
  // Layer-mean hidden state at the most recently fed position.
  const Eigen::VectorXf& last_hidden_mean() const { return last_hidden_mean_; }

 private:
  const Model<float>& m_;
  int pos_ = 0;
  std::vector<Eigen::MatrixXf> k_cache_, v_cache_;  // per layer, d_model x context
  Eigen::VectorXf last_logits_;
  Eigen::VectorXf last_hidden_mean_;
  void feed(TokenId id);
};

struct DecodeResult {
  std::vector<TokenId> generated;  // everything emitted after the prefix
  bool well_formed = false;        // parsed as (op token)* END
  Program program;                 // meaningful iff well_formed
  // Layer-mean model state at each generated op token (well-formed decodes).
  std::vector<Eigen::VectorXf> op_states;
};

DecodeResult greedy_decode(const Model<float>& model, std::span<const TokenId> prefix, int cap,
                           bool capture_states);

// ---------------------------------------------------------------------------
// Perplexity
// ---------------------------------------------------------------------------

// Token subsets are selected per sequence as target positions (the position
// of the token being predicted).
enum class MaskKind {
  AllTokens,
  ProgramRegion,  // op tokens plus the closing END
  InputGrid,      // the k-th input's grid tokens
  OutputGrid,     // the k-th output's grid tokens
};

std::vector<int> mask_positions(std::span<const TokenId> ids, MaskKind kind, int k);

// exp(mean nll) over the masked positions of all sequences; throws if the
// mask selects nothing.
double perplexity(const Model<float>& model,
                  const std::vector<std::vector<TokenId>>& sequences, MaskKind kind, int k,
                  int workers);

// ---------------------------------------------------------------------------
// Optimizer, checkpoints, training
// ---------------------------------------------------------------------------

// Adam with decoupled weight decay over a flat parameter vector.
template <typename T>
class AdamW {
 public:
  AdamW(size_t n, T beta1, T beta2, T eps) : b1_(beta1), b2_(beta2), eps_(eps), m_(n, 0), v_(n, 0) {}

  void step(std::vector<T>& params, const std::vector<T>& grad, T lr, T weight_decay);

  int t() const { return t_; }
  std::vector<T>& m() { return m_; }
  std::vector<T>& v() { return v_; }
  void set_t(int t) { t_ = t; }

 private:
  T b1_, b2_, eps_;
  int t_ = 0;
  std::vector<T> m_, v_;
};

struct Checkpoint {
  LMConfig config;
  int step = 0;
  int adam_t = 0;
  std::vector<float> params;
  std::vector<float> m, v;  // empty when saved without optimizer state
};

// Layout: magic "KSLMCKP1", u32 header length, header JSON, then raw
// little-endian float32 blocks (params, and if present adam m and v).
void save_checkpoint(const std::string& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::string& path);
Model<float> model_from_checkpoint(const Checkpoint& ckpt);

struct TrainOutput {
  std::vector<std::pair<int, std::string>> checkpoints;  // (step, path)
  std::vector<std::pair<int, double>> loss_log;          // (step, mean nll)
};

// Trains by next-token prediction; writes ckpt_<step>.bin files and
// train_log.csv under out_dir. Checkpoints are written at step 0, every
// ckpt_interval steps, and at total_steps. Batches are drawn from a stream
// derived from (seed, step), so training resumed from a checkpoint
// reproduces the uninterrupted run bit for bit.
TrainOutput train_lm(const LMConfig& cfg, const std::vector<std::vector<TokenId>>& corpus,
                     const std::string& out_dir, int workers, int resume_from_step = -1,
                     const std::function<void(int, double)>& on_step = {});

}  // namespace karelsem::lm
