#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "karelsem/karel.hpp"
#include "karelsem/sampler.hpp"

namespace karelsem {

using TokenId = int32_t;

// Fixed 26-token vocabulary. Grid ids coincide with ObsCell codes, program
// ids follow in Op order, then the structural tokens.
//
//   0  .          empty space          16 move
//   1  #          obstacle             17 turnRight
//   2  M1..M10    marker counts        18 turnLeft
//   12 ^ > v <    robot heading        19 pickMarker
//                                      20 putMarker
//   21 IN   22 OUT   23 RUN   24 END   25 PAD
class Vocab {
 public:
  static constexpr TokenId kIn = 21;
  static constexpr TokenId kOut = 22;
  static constexpr TokenId kRun = 23;
  static constexpr TokenId kEnd = 24;
  static constexpr TokenId kPad = 25;
  static constexpr int kSize = 26;
  static constexpr TokenId kFirstOp = 16;

  static const Vocab& instance();

  const std::string& token(TokenId id) const;
  std::optional<TokenId> id(const std::string& token) const;

  static bool is_grid(TokenId id) { return id >= 0 && id < kFirstOp; }
  static bool is_op(TokenId id) { return id >= kFirstOp && id < kIn; }
  static TokenId op_id(Op op) { return kFirstOp + static_cast<TokenId>(op); }
  static Op id_op(TokenId id) { return static_cast<Op>(id - kFirstOp); }
  static TokenId grid_id(ObsCell c) { return static_cast<TokenId>(c); }
  static ObsCell id_grid(TokenId id) { return static_cast<ObsCell>(id); }

  // token -> id map as a JSON object string.
  std::string to_json() const;

 private:
  Vocab();
  std::vector<std::string> tokens_;
};

// Sequence layout: for each io pair IN <grid> OUT <grid>, then RUN <ops> END.
std::vector<TokenId> encode_example(const Example& e);

// Exact token count of an encoded example.
size_t encoded_length(int rows, int cols, int n_ios, size_t program_len);

// Inverse of encode_example; throws std::invalid_argument on any structural
// violation. The grid shape is part of the corpus contract, not the stream.
Example decode_example(std::span<const TokenId> ids, int rows, int cols);

// Parses the token stream a model produced after RUN. Returns the program iff
// the stream is (op token)* END; anything else (including a missing END) is
// malformed and yields nullopt.
std::optional<Program> decode_program(std::span<const TokenId> ids);

// The specification prefix of an encoded example: everything up to and
// including RUN. Greedy decoding starts from this prefix.
std::span<const TokenId> spec_prefix(std::span<const TokenId> ids);

// ---------------------------------------------------------------------------
// Corpus files
// ---------------------------------------------------------------------------
// Line 1 is a JSON header (seeds, configs, counts); each following line is
// one example as whitespace-separated token strings.

struct Corpus {
  std::string header_json;
  int rows = 0;
  int cols = 0;
  int n_ios = 0;
  std::vector<std::vector<TokenId>> sequences;
};

void write_corpus(const std::string& path, const Dataset& ds, const std::string& header_json);
Corpus read_corpus(const std::string& path);

std::string tokens_to_line(std::span<const TokenId> ids);
std::vector<TokenId> line_to_tokens(const std::string& line);

}  // namespace karelsem
