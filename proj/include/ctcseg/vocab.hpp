#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ctcseg {

struct VocabError : std::runtime_error {
    enum class Kind { DuplicateToken, NonContiguousIds, MissingBlank, BadFormat };
    Kind kind;
    VocabError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct TokenizeError : std::runtime_error {
    std::size_t byte_offset;
    std::string character;
    TokenizeError(std::size_t offset, std::string ch)
        : std::runtime_error("no vocabulary token matches '" + ch + "' at byte offset " +
                             std::to_string(offset)),
          byte_offset(offset),
          character(std::move(ch)) {}
};

// Token-string <-> id table. Ids are exactly 0..size()-1.
class Vocab {
public:
    Vocab(std::vector<std::string> tokens, int blank_id);

    // File format: header "#blank_id=<n>", then one "id<TAB>token" per line.
    // Token field is taken byte-exact (only the trailing newline is removed).
    static Vocab load(const std::filesystem::path& path);

    int size() const { return static_cast<int>(tokens_.size()); }
    int blank_id() const { return blank_id_; }
    const std::string& token(int id) const { return tokens_[static_cast<std::size_t>(id)]; }
    const std::vector<std::string>& tokens() const { return tokens_; }

private:
    std::vector<std::string> tokens_;
    int blank_id_;
    friend struct TokenMatcher;
};

// Byte span [begin, end) of one token in the source text.
struct TokenSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

struct TokenSequence {
    std::vector<int> ids;          // never contains blank_id
    std::vector<TokenSpan> spans;  // contiguous, ordered, covers the text
};

// Greedy longest-match tokenization against the vocab's token strings
// (blank excluded). Longest is measured in bytes; ties cannot occur since
// token strings are unique. Throws TokenizeError on an uncovered character.
TokenSequence tokenize(std::string_view text, const Vocab& vocab);

}  // namespace ctcseg
