#pragma once

// Zero-error block codes over product input states and per-use measurements.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "zecap/adjacency.hpp"
#include "zecap/independence.hpp"
#include "zecap/quantum.hpp"

namespace zecap {

inline constexpr std::size_t kMaxSupportWords = 1'000'000;

/// n outcome indices, one per channel use (0-based).
using OutputWord = std::vector<std::size_t>;
/// n state indices into the source state set (0-based).
using Codeword = std::vector<std::size_t>;

struct QuantumBlockCode {
  std::size_t n = 0;
  std::vector<Codeword> codewords;  // sorted lexicographically; message k + 1 is codewords[k]
  StateSet source;
  Povm povm;
  double eps = kDefaultSupportEps;

  std::size_t size() const { return codewords.size(); }
  /// log2(K) / n bits per channel use.
  double rate() const;
};

/// Codewords = a maximum independent set of G^n, so K = alpha(G^n).
/// Throws SizeLimit when |S|^n exceeds max_vertices.
QuantumBlockCode build_code(const ConfusabilityGraph& g, const StateSet& s, const Povm& p, std::size_t n,
                            std::size_t max_vertices = kMaxExactVertices);

/// Wraps an arbitrary codeword list (sorted and de-duplicated) without
/// checking the zero-error property; build_decoder and verify_zero_error
/// decide that. Throws std::invalid_argument on malformed tuples.
QuantumBlockCode make_code(const StateSet& s, const Povm& p, std::size_t n, std::vector<Codeword> codewords,
                           double eps = kDefaultSupportEps);

/// For each codeword, the Cartesian product A_{c1} x ... x A_{cn} of the
/// per-use supports, in lexicographic order. Throws SizeLimit if one product
/// has more than max_words words.
std::vector<std::vector<OutputWord>> reachable_supports(const QuantumBlockCode& code, const QuantumChannel& ch,
                                                        std::size_t max_words = kMaxSupportWords);

class DecoderTable {
 public:
  DecoderTable(std::map<OutputWord, std::size_t> table, std::size_t total_words)
      : table_(std::move(table)), total_words_(total_words) {}

  /// Message in [1, K], or nullopt for a word no codeword can produce.
  std::optional<std::size_t> decode(const OutputWord& w) const;

  std::size_t mapped_count() const { return table_.size(); }
  /// N^n, saturating.
  std::size_t total_words() const { return total_words_; }
  std::size_t unreachable_count() const { return total_words_ - table_.size(); }
  const std::map<OutputWord, std::size_t>& entries() const { return table_; }

 private:
  std::map<OutputWord, std::size_t> table_;
  std::size_t total_words_;
};

/// Maps every reachable word to the message of the unique codeword that can
/// produce it. Throws AmbiguousSupports(message_a, message_b) if two
/// codewords share a reachable word.
DecoderTable build_decoder(const QuantumBlockCode& code, const QuantumChannel& ch);

struct ZeroErrorReport {
  bool pass = false;
  double eps = kDefaultSupportEps;
  std::size_t overlapping_pairs = 0;
  /// max over ordered codeword pairs (a, b) of P(output reachable from b | a sent).
  double max_overlap_mass = 0.0;
  std::optional<std::pair<std::size_t, std::size_t>> worst_pair;  // messages, 1-based
  bool tensor_path_checked = false;
  /// Tensor-path supports equal the Cartesian product supports (when checked).
  bool tensor_matches_product = false;
};

struct VerifyOptions {
  std::size_t max_tensor_dim = 64;         // d^n
  std::size_t max_tensor_kraus = 10'000;   // (Kraus count)^n
  std::size_t max_tensor_words = 100'000;  // N^n
};

/// Certifies zero error by exact support disjointness under eps. The supports
/// are recomputed along a second path when small enough: the n-fold product
/// input state goes through the n-fold product channel and is measured with
/// the product POVM in dimension d^n.
ZeroErrorReport verify_zero_error(const QuantumBlockCode& code, const QuantumChannel& ch,
                                  const VerifyOptions& opts = {});

}  // namespace zecap
