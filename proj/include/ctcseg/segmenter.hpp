#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctcseg/ctc_align.hpp"
#include "ctcseg/logprob_matrix.hpp"

namespace ctcseg {

struct RangeOutOfBounds : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One utterance candidate: a sentence with its aligned time span and score.
struct AlignedSegment {
    std::string text;      // normalized sentence
    std::string raw_text;  // pre-normalization sentence
    std::int64_t start_frame = 0;
    std::int64_t end_frame = 0;
    double start_s = 0.0;
    double end_s = 0.0;
    double score = 0.0;
};

// Half-open token index range [token_begin, token_end) of one sentence.
struct SentenceTokenRange {
    std::size_t token_begin = 0;
    std::size_t token_end = 0;
    std::string text;
    std::string raw_text;
};

// Builds one AlignedSegment per sentence range. Ranges must partition the
// token sequence in order. Boundary times are the emission frames padded
// outward by pad_s, clamped to [0, T*frame_duration] and to the midpoint
// between adjacent segments so segments never overlap; end_s additionally
// gets a one-frame floor so every segment has positive duration.
std::vector<AlignedSegment> segment(const AlignmentResult& result,
                                    const std::vector<SentenceTokenRange>& ranges,
                                    const LogProbMatrix& m, const SegmentScoreConfig& cfg,
                                    double pad_s);

}  // namespace ctcseg
