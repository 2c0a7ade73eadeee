#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctcseg/logprob_matrix.hpp"
#include "ctcseg/vocab.hpp"

namespace ctcseg {

struct AlignError : std::runtime_error {
    enum class Kind { InfeasibleAlignment, DimensionMismatch, EmptySegment };
    Kind kind;
    AlignError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Emission of one token on the best path.
struct CharTiming {
    int token_index = 0;
    std::int64_t frame = 0;
    double token_logprob = 0.0;  // log-probability of the token at its emission frame
};

struct AlignmentResult {
    std::vector<CharTiming> timings;      // one per input token, in order
    double path_logprob = 0.0;            // total log-probability of the non-free frames
    std::int64_t trailing_start_frame = 0;  // first frame of the free trailing region
};

struct SegmentScoreConfig {
    int window_tokens = 8;  // W
};

struct AlignOptions {
    bool validate_input = true;  // row-normalization check on the matrix
};

// Viterbi over the alignment trellis:
//   score[t][j] = max( score[t-1][j] + max(lp(t, blank), lp(t, token_j)),   // stay
//                      score[t-1][j-1] + lp(t, token_j) )                   // advance
// with a free (zero-cost) preamble (score[t][0] = 0 for all t) and a free
// trailing region (the answer maximizes score[t][M] over t). Ties prefer the
// stay transition; ties in the final maximum prefer the latest frame.
// -inf inputs are treated as -1e30 per frame so path structure stays defined.
//
// Memory: one back-pointer bit per (frame, token) cell plus two rolling score
// rows.
AlignmentResult align(const LogProbMatrix& m, const TokenSequence& tokens,
                      const AlignOptions& opts = {});

// Minimum over all contiguous windows of min(W, len) tokens of the window's
// mean token_logprob. The segment confidence used by the filter.
double score_segment(std::span<const CharTiming> timings, const SegmentScoreConfig& cfg);

}  // namespace ctcseg
