#pragma once

#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace ctcseg {

struct EmptyReference : std::runtime_error {
    EmptyReference() : std::runtime_error("reference is empty") {}
};

struct ErrorRates {
    double wer = 0.0;
    double cer = 0.0;
    double cer_edge_head = 0.0;
    double cer_edge_tail = 0.0;
};

// Levenshtein distance, unit insert/delete/substitute costs.
std::size_t edit_distance(const std::vector<std::string_view>& a,
                          const std::vector<std::string_view>& b);
std::size_t edit_distance(const std::vector<char32_t>& a, const std::vector<char32_t>& b);

// Word error rate over whitespace-delimited words. ref must have >= 1 word.
double wer(std::string_view ref, std::string_view hyp);

// Character error rate over Unicode scalar values, spaces included.
double cer(std::string_view ref, std::string_view hyp);

// CER restricted to the first min(edge_len, len) characters of each string
// (head) and the last ones (tail).
struct EdgeCer {
    double head = 0.0;
    double tail = 0.0;
};
EdgeCer edge_cer(std::string_view ref, std::string_view hyp, std::size_t edge_len = 5);

ErrorRates error_rates(std::string_view ref, std::string_view hyp, std::size_t edge_len = 5);

}  // namespace ctcseg
