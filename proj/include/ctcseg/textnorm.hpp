#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ctcseg {

// Raw machine transcript: punctuated, digit-bearing, possibly code-switched.
struct RawTranscript {
    std::string text;
    std::string source_id;
};

// Lowercase Cyrillic letters, apostrophe (U+0027) and single spaces only.
// Produced by normalize(); the alphabet the aligner and metrics operate on.
struct NormalizedText {
    std::string text;
};

struct TranslitTableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ordered Latin->Cyrillic rewrite rules, longest source first.
// Sources are lowercase Latin letter sequences; matching is case-insensitive.
class TransliterationTable {
public:
    struct Rule {
        std::string source;  // lowercase a-z, non-empty
        std::string target;  // UTF-8 Cyrillic
    };

    // Validates: unique sources, every letter a-z covered by a single-letter rule.
    explicit TransliterationTable(std::vector<Rule> rules);

    // File format: one "source<TAB>target" per line, '#' starts a comment.
    static TransliterationTable load(const std::filesystem::path& path);

    // The table shipped with this project (data/translit_uk.tsv mirrors it).
    static const TransliterationTable& builtin();

    const std::vector<Rule>& rules() const { return rules_; }

    // Longest rule matching s at byte pos (case-insensitively), or nullptr.
    const Rule* match(std::string_view s, std::size_t pos) const;

private:
    std::vector<Rule> rules_;  // sorted by length desc, then source asc
};

// One sentence located inside the raw transcript. Byte offsets cover the
// sentence text including its terminal punctuation run; whitespace between
// sentences falls in the gaps.
struct SentenceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

// Splits after runs of sentence-final punctuation (. ? ! …). Whitespace-only
// pieces are dropped. Text after the last terminal mark forms a final sentence.
std::vector<SentenceSpan> split_sentence_spans(std::string_view text);
std::vector<std::string> split_sentences(const RawTranscript& raw);

// Replaces every maximal ASCII digit run with its Ukrainian cardinal spelling.
// Throws DigitRunTooLarge for runs longer than 12 digits.
std::string normalize_numbers(std::string_view s);

// Rewrites Latin letter sequences via the table; everything else unchanged.
std::string transliterate(std::string_view s, const TransliterationTable& table);

// Full normalization: numbers -> transliteration -> punctuation strip
// (keep Cyrillic letters, apostrophe, whitespace; U+2019 becomes U+0027)
// -> lowercase -> whitespace collapse. Idempotent.
NormalizedText normalize(const RawTranscript& raw, const TransliterationTable& table);
NormalizedText normalize(std::string_view text, const TransliterationTable& table);

// True for code points the normalized alphabet keeps as letters:
// Cyrillic letters (U+0400..U+04FF minus the U+0482..U+0489 signs).
bool is_cyrillic_letter(char32_t cp);

// Cyrillic + ASCII lowercase mapping; other code points unchanged.
char32_t to_lower(char32_t cp);

}  // namespace ctcseg
