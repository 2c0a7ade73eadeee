#include "ctcseg/logprob_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

namespace ctcseg {

static_assert(std::endian::native == std::endian::little,
              "CTCM i/o assumes a little-endian host");
static_assert(sizeof(float) == 4);

namespace {

constexpr std::uint32_t kMagic = 0x4D435443;  // "CTCM" as little-endian u32
constexpr std::uint32_t kVersion = 1;

template <typename T>
T read_le(std::istream& in, const std::string& what) {
    T v;
    if (!in.read(reinterpret_cast<char*>(&v), sizeof(T)))
        throw MatrixError(MatrixError::Kind::BadFile, "truncated CTCM file reading " + what);
    return v;
}

template <typename T>
void write_le(std::ostream& out, T v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

}  // namespace

LogProbMatrix::LogProbMatrix(std::int64_t frames, int vocab_size, int blank_id,
                             double frame_duration_s)
    : frames_(frames),
      vocab_size_(vocab_size),
      blank_id_(blank_id),
      frame_duration_s_(frame_duration_s) {
    if (frames_ < 1)
        throw MatrixError(MatrixError::Kind::InvalidMatrix, "T must be >= 1");
    if (vocab_size_ < 2)
        throw MatrixError(MatrixError::Kind::InvalidMatrix, "V must be >= 2");
    if (blank_id_ < 0 || blank_id_ >= vocab_size_)
        throw MatrixError(MatrixError::Kind::InvalidMatrix,
                          "blank_id outside [0, V): " + std::to_string(blank_id_));
    if (!(frame_duration_s_ > 0.0))
        throw MatrixError(MatrixError::Kind::InvalidMatrix, "frame_duration_s must be positive");
    values_.assign(static_cast<std::size_t>(frames_) * static_cast<std::size_t>(vocab_size_),
                   0.0f);
}

void LogProbMatrix::validate() const {
    constexpr double kValueTol = 1e-4;
    constexpr double kRowTol = 1e-3;
    for (std::int64_t t = 0; t < frames_; ++t) {
        const auto r = row(t);
        double max_lp = -std::numeric_limits<double>::infinity();
        for (float v : r) {
            if (v > kValueTol)
                throw MatrixError(MatrixError::Kind::InvalidMatrix,
                                  "row " + std::to_string(t) + ": log-probability " +
                                      std::to_string(v) + " > 0");
            max_lp = std::max(max_lp, static_cast<double>(v));
        }
        double sum = 0.0;
        for (float v : r) sum += std::exp(static_cast<double>(v) - max_lp);
        const double lse = max_lp + std::log(sum);
        if (std::abs(lse) > kRowTol)
            throw MatrixError(MatrixError::Kind::InvalidMatrix,
                              "row " + std::to_string(t) + ": log-sum-exp " +
                                  std::to_string(lse) + " not within 1e-3 of 0");
    }
}

LogProbMatrix LogProbMatrix::read_ctcm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw MatrixError(MatrixError::Kind::BadFile, "cannot open: " + path.string());

    if (read_le<std::uint32_t>(in, "magic") != kMagic)
        throw MatrixError(MatrixError::Kind::BadFile, "bad magic (not a CTCM file): " +
                                                          path.string());
    const auto version = read_le<std::uint32_t>(in, "version");
    if (version != kVersion)
        throw MatrixError(MatrixError::Kind::UnknownVersion,
                          "unsupported CTCM version " + std::to_string(version));
    const auto t = read_le<std::uint32_t>(in, "T");
    const auto v = read_le<std::uint32_t>(in, "V");
    const auto blank = read_le<std::uint32_t>(in, "blank_id");
    const auto fd = read_le<float>(in, "frame_duration_s");

    if (v > static_cast<std::uint32_t>(std::numeric_limits<int>::max()) ||
        blank > static_cast<std::uint32_t>(std::numeric_limits<int>::max()))
        throw MatrixError(MatrixError::Kind::BadFile, "header fields out of range");

    LogProbMatrix m(static_cast<std::int64_t>(t), static_cast<int>(v), static_cast<int>(blank),
                    static_cast<double>(fd));
    const std::size_t count = m.values_.size();
    if (!in.read(reinterpret_cast<char*>(m.values_.data()),
                 static_cast<std::streamsize>(count * sizeof(float))))
        throw MatrixError(MatrixError::Kind::BadFile,
                          "truncated CTCM values in " + path.string());
    char extra;
    if (in.read(&extra, 1))
        throw MatrixError(MatrixError::Kind::BadFile,
                          "trailing bytes after CTCM values in " + path.string());
    return m;
}

void LogProbMatrix::write_ctcm(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw MatrixError(MatrixError::Kind::BadFile, "cannot write: " + path.string());
    write_le(out, kMagic);
    write_le(out, kVersion);
    write_le(out, static_cast<std::uint32_t>(frames_));
    write_le(out, static_cast<std::uint32_t>(vocab_size_));
    write_le(out, static_cast<std::uint32_t>(blank_id_));
    write_le(out, static_cast<float>(frame_duration_s_));
    out.write(reinterpret_cast<const char*>(values_.data()),
              static_cast<std::streamsize>(values_.size() * sizeof(float)));
    if (!out)
        throw MatrixError(MatrixError::Kind::BadFile, "write failed: " + path.string());
}

LogProbMatrix stitch(std::span<const LogProbMatrix> parts) {
    if (parts.empty())
        throw MatrixError(MatrixError::Kind::IncompatibleParts, "stitch: no parts");
    const auto& first = parts.front();
    std::int64_t total = 0;
    for (const auto& p : parts) {
        if (p.vocab_size() != first.vocab_size() || p.blank_id() != first.blank_id() ||
            p.frame_duration_s() != first.frame_duration_s())
            throw MatrixError(MatrixError::Kind::IncompatibleParts,
                              "stitch: parts disagree on V, blank_id or frame duration");
        total += p.frames();
    }
    LogProbMatrix out(total, first.vocab_size(), first.blank_id(), first.frame_duration_s());
    std::size_t offset = 0;
    for (const auto& p : parts) {
        std::copy(p.values().begin(), p.values().end(), out.values().begin() + offset);
        offset += p.values().size();
    }
    return out;
}

}  // namespace ctcseg
