#include "ctcseg/segmenter.hpp"

#include <algorithm>

namespace ctcseg {

std::vector<AlignedSegment> segment(const AlignmentResult& result,
                                    const std::vector<SentenceTokenRange>& ranges,
                                    const LogProbMatrix& m, const SegmentScoreConfig& cfg,
                                    double pad_s) {
    if (pad_s < 0.0) throw std::invalid_argument("segment: pad_s must be >= 0");
    const std::size_t total_tokens = result.timings.size();

    std::size_t expected_begin = 0;
    for (const auto& r : ranges) {
        if (r.token_begin != expected_begin || r.token_end < r.token_begin ||
            r.token_end > total_tokens)
            throw RangeOutOfBounds("sentence ranges must partition tokens in order (got [" +
                                   std::to_string(r.token_begin) + ", " +
                                   std::to_string(r.token_end) + ") expecting begin " +
                                   std::to_string(expected_begin) + ")");
        expected_begin = r.token_end;
    }
    if (expected_begin != total_tokens)
        throw RangeOutOfBounds("sentence ranges cover " + std::to_string(expected_begin) +
                               " of " + std::to_string(total_tokens) + " tokens");

    const double fd = m.frame_duration_s();
    const double total_s = m.total_duration_s();

    std::vector<AlignedSegment> segments;
    segments.reserve(ranges.size());
    for (const auto& r : ranges) {
        if (r.token_begin == r.token_end) continue;  // empty sentences are dropped upstream
        AlignedSegment seg;
        seg.text = r.text;
        seg.raw_text = r.raw_text;
        seg.start_frame = result.timings[r.token_begin].frame;
        seg.end_frame = result.timings[r.token_end - 1].frame;
        const std::span<const CharTiming> slice(result.timings.data() + r.token_begin,
                                                r.token_end - r.token_begin);
        seg.score = score_segment(slice, cfg);
        segments.push_back(std::move(seg));
    }

    for (std::size_t i = 0; i < segments.size(); ++i) {
        auto& seg = segments[i];
        const double start_raw = static_cast<double>(seg.start_frame) * fd;
        const double end_raw = static_cast<double>(seg.end_frame) * fd;

        double start_s = start_raw - pad_s;
        if (i > 0) {
            const double prev_end_raw = static_cast<double>(segments[i - 1].end_frame) * fd;
            start_s = std::max(start_s, (prev_end_raw + start_raw) / 2.0);
        }
        seg.start_s = std::max(start_s, 0.0);

        double end_s = std::max(end_raw + pad_s, seg.start_s + fd);  // one-frame floor
        if (i + 1 < segments.size()) {
            const double next_start_raw = static_cast<double>(segments[i + 1].start_frame) * fd;
            end_s = std::min(end_s, (end_raw + next_start_raw) / 2.0);
        }
        seg.end_s = std::min(end_s, total_s);
    }
    return segments;
}

}  // namespace ctcseg
