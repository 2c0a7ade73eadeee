#include "ctcseg/ctc_align.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ctcseg {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Floor for -inf log-probabilities; keeps unreachable trellis states
// distinguishable from reachable zero-probability ones.
constexpr double kLogProbFloor = -1e30;

double floored(float lp) { return std::max(static_cast<double>(lp), kLogProbFloor); }

class BackPointers {
public:
    BackPointers(std::int64_t frames, std::int64_t tokens)
        : tokens_(tokens),
          bits_(static_cast<std::size_t>((frames * tokens + 63) / 64), 0ULL) {}

    // bit set = the advance transition was taken into (t, j)
    void set_advance(std::int64_t t, std::int64_t j) {
        const std::int64_t idx = t * tokens_ + (j - 1);
        bits_[static_cast<std::size_t>(idx >> 6)] |= 1ULL << (idx & 63);
    }
    bool is_advance(std::int64_t t, std::int64_t j) const {
        const std::int64_t idx = t * tokens_ + (j - 1);
        return (bits_[static_cast<std::size_t>(idx >> 6)] >> (idx & 63)) & 1ULL;
    }

private:
    std::int64_t tokens_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace

AlignmentResult align(const LogProbMatrix& m, const TokenSequence& tokens,
                      const AlignOptions& opts) {
    const std::int64_t T = m.frames();
    const std::int64_t M = static_cast<std::int64_t>(tokens.ids.size());
    if (M == 0)
        throw AlignError(AlignError::Kind::EmptySegment, "align: empty token sequence");
    for (int id : tokens.ids) {
        if (id < 0 || id >= m.vocab_size())
            throw AlignError(AlignError::Kind::DimensionMismatch,
                             "token id " + std::to_string(id) + " outside vocabulary of size " +
                                 std::to_string(m.vocab_size()));
        if (id == m.blank_id())
            throw AlignError(AlignError::Kind::DimensionMismatch,
                             "token sequence contains the blank id " + std::to_string(id));
    }
    if (T < M)
        throw AlignError(AlignError::Kind::InfeasibleAlignment,
                         "not enough frames (" + std::to_string(T) + ") for " +
                             std::to_string(M) + " tokens");
    if (opts.validate_input) m.validate();

    const int blank = m.blank_id();
    BackPointers bp(T, M);
    std::vector<double> prev(static_cast<std::size_t>(M) + 1, kNegInf);
    std::vector<double> cur(static_cast<std::size_t>(M) + 1, kNegInf);

    // t = 0: free preamble, or the first token emitted immediately
    prev[0] = 0.0;
    prev[1] = floored(m.at(0, tokens.ids[0]));
    bp.set_advance(0, 1);

    double best_score = prev[static_cast<std::size_t>(M)];
    std::int64_t best_t = 0;

    for (std::int64_t t = 1; t < T; ++t) {
        const auto row = m.row(t);
        const double lp_blank = floored(row[static_cast<std::size_t>(blank)]);
        cur[0] = 0.0;
        const std::int64_t jmax = std::min<std::int64_t>(M, t + 1);
        for (std::int64_t j = 1; j <= jmax; ++j) {
            const double lp_tok =
                floored(row[static_cast<std::size_t>(tokens.ids[static_cast<std::size_t>(j - 1)])]);
            const double stay = prev[static_cast<std::size_t>(j)] + std::max(lp_blank, lp_tok);
            const double advance = prev[static_cast<std::size_t>(j - 1)] + lp_tok;
            if (advance > stay) {
                cur[static_cast<std::size_t>(j)] = advance;
                bp.set_advance(t, j);
            } else {
                cur[static_cast<std::size_t>(j)] = stay;
            }
        }
        for (std::int64_t j = jmax + 1; j <= M; ++j) cur[static_cast<std::size_t>(j)] = kNegInf;
        if (cur[static_cast<std::size_t>(M)] >= best_score) {  // ties -> latest frame
            best_score = cur[static_cast<std::size_t>(M)];
            best_t = t;
        }
        std::swap(prev, cur);
    }

    AlignmentResult result;
    result.timings.resize(static_cast<std::size_t>(M));
    result.path_logprob = best_score;
    result.trailing_start_frame = best_t + 1;

    std::int64_t t = best_t;
    std::int64_t j = M;
    while (j > 0) {
        if (bp.is_advance(t, j)) {
            auto& timing = result.timings[static_cast<std::size_t>(j - 1)];
            timing.token_index = static_cast<int>(j - 1);
            timing.frame = t;
            timing.token_logprob =
                static_cast<double>(m.at(t, tokens.ids[static_cast<std::size_t>(j - 1)]));
            --j;
        }
        --t;
    }
    return result;
}

double score_segment(std::span<const CharTiming> timings, const SegmentScoreConfig& cfg) {
    if (timings.empty())
        throw AlignError(AlignError::Kind::EmptySegment, "score_segment: empty timing slice");
    if (cfg.window_tokens < 1)
        throw std::invalid_argument("score_segment: window_tokens must be >= 1");

    const std::size_t n = timings.size();
    const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(cfg.window_tokens), n);

    double window_sum = 0.0;
    for (std::size_t i = 0; i < w; ++i) window_sum += timings[i].token_logprob;
    double min_mean = window_sum / static_cast<double>(w);
    for (std::size_t i = w; i < n; ++i) {
        window_sum += timings[i].token_logprob - timings[i - w].token_logprob;
        min_mean = std::min(min_mean, window_sum / static_cast<double>(w));
    }
    return min_mean;
}

}  // namespace ctcseg
