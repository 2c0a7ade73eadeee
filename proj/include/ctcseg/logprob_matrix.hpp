#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctcseg {

struct MatrixError : std::runtime_error {
    enum class Kind { BadFile, UnknownVersion, InvalidMatrix, IncompatibleParts };
    Kind kind;
    MatrixError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// T x V frame-level CTC log-probabilities (natural log), row-major float32.
// Rows are expected to be log-softmax normalized; validate() checks that.
class LogProbMatrix {
public:
    LogProbMatrix(std::int64_t frames, int vocab_size, int blank_id, double frame_duration_s);

    std::int64_t frames() const { return frames_; }
    int vocab_size() const { return vocab_size_; }
    int blank_id() const { return blank_id_; }
    double frame_duration_s() const { return frame_duration_s_; }
    double total_duration_s() const { return static_cast<double>(frames_) * frame_duration_s_; }

    std::span<float> row(std::int64_t t) {
        return {values_.data() + t * vocab_size_, static_cast<std::size_t>(vocab_size_)};
    }
    std::span<const float> row(std::int64_t t) const {
        return {values_.data() + t * vocab_size_, static_cast<std::size_t>(vocab_size_)};
    }
    float at(std::int64_t t, int v) const {
        return values_[static_cast<std::size_t>(t * vocab_size_ + v)];
    }
    std::vector<float>& values() { return values_; }
    const std::vector<float>& values() const { return values_; }

    // Checks every value <= 1e-4 and per-row log-sum-exp within 1e-3 of 0.
    // Throws MatrixError{InvalidMatrix} naming the offending row.
    void validate() const;

    // "CTCM v1": magic 43 54 43 4D, u32 version=1, u32 T, u32 V, u32 blank_id,
    // f32 frame_duration_s, then T*V float32 values row-major, little-endian.
    static LogProbMatrix read_ctcm(const std::filesystem::path& path);
    void write_ctcm(const std::filesystem::path& path) const;

private:
    std::int64_t frames_;
    int vocab_size_;
    int blank_id_;
    double frame_duration_s_;
    std::vector<float> values_;
};

// Frame-wise concatenation. Parts must share V, blank_id and frame duration.
LogProbMatrix stitch(std::span<const LogProbMatrix> parts);

}  // namespace ctcseg
