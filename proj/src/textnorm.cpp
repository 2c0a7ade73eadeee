#include "ctcseg/textnorm.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "ctcseg/uk_numbers.hpp"
#include "ctcseg/utf8.hpp"

namespace ctcseg {

namespace {

bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
bool is_latin_letter(char32_t cp) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
}

bool is_terminal_punct(char32_t cp) {
    return cp == '.' || cp == '?' || cp == '!' || cp == U'…';  // …
}

bool is_space_cp(char32_t cp) {
    return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' || cp == '\v';
}

}  // namespace

bool is_cyrillic_letter(char32_t cp) {
    if (cp < 0x0400 || cp > 0x04FF) return false;
    return cp < 0x0482 || cp > 0x0489;  // exclude signs and combining marks
}

char32_t to_lower(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;  // А-Я
    if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;  // Ѐ-Џ (incl. Є І Ї)
    if (cp >= 0x0460 && cp <= 0x04FF && (cp & 1) == 0 &&
        (cp <= 0x0480 || cp >= 0x048A)) {
        return cp + 1;  // cased pairs, e.g. Ґ U+0490 -> ґ U+0491
    }
    return cp;
}

// ---------------------------------------------------------------------------
// TransliterationTable

TransliterationTable::TransliterationTable(std::vector<Rule> rules) : rules_(std::move(rules)) {
    std::set<std::string> seen;
    for (const auto& r : rules_) {
        if (r.source.empty()) throw TranslitTableError("empty rule source");
        for (char c : r.source) {
            if (c < 'a' || c > 'z')
                throw TranslitTableError("rule source must be lowercase a-z: " + r.source);
        }
        if (r.target.empty()) throw TranslitTableError("empty rule target: " + r.source);
        if (!seen.insert(r.source).second)
            throw TranslitTableError("duplicate rule source: " + r.source);
    }
    for (char c = 'a'; c <= 'z'; ++c) {
        if (!seen.count(std::string(1, c)))
            throw TranslitTableError(std::string("no rule for letter: ") + c);
    }
    std::sort(rules_.begin(), rules_.end(), [](const Rule& a, const Rule& b) {
        if (a.source.size() != b.source.size()) return a.source.size() > b.source.size();
        return a.source < b.source;
    });
}

TransliterationTable TransliterationTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw TranslitTableError("cannot open transliteration table: " + path.string());
    std::vector<Rule> rules;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw TranslitTableError("line " + std::to_string(lineno) +
                                     ": expected source<TAB>target");
        rules.push_back({line.substr(0, tab), line.substr(tab + 1)});
    }
    return TransliterationTable(std::move(rules));
}

const TransliterationTable& TransliterationTable::builtin() {
    static const TransliterationTable table{std::vector<Rule>{
        // multigraphs first in spirit; ordering is normalized by the constructor
        {"shch", "щ"}, {"sch", "щ"},
        {"ch", "ч"},   {"sh", "ш"},  {"zh", "ж"},  {"kh", "х"},  {"ts", "ц"},
        {"ya", "я"},   {"yu", "ю"},  {"yo", "йо"}, {"ye", "є"},  {"yi", "ї"},
        {"ja", "я"},   {"ju", "ю"},  {"je", "є"},  {"ji", "ї"},
        {"oo", "у"},   {"ee", "і"},  {"th", "т"},  {"ph", "ф"},  {"ck", "к"},
        {"qu", "кв"},
        {"a", "а"}, {"b", "б"}, {"c", "к"}, {"d", "д"}, {"e", "е"}, {"f", "ф"},
        {"g", "г"}, {"h", "г"}, {"i", "і"}, {"j", "дж"}, {"k", "к"}, {"l", "л"},
        {"m", "м"}, {"n", "н"}, {"o", "о"}, {"p", "п"}, {"q", "к"}, {"r", "р"},
        {"s", "с"}, {"t", "т"}, {"u", "у"}, {"v", "в"}, {"w", "в"}, {"x", "кс"},
        {"y", "и"}, {"z", "з"},
    }};
    return table;
}

const TransliterationTable::Rule* TransliterationTable::match(std::string_view s,
                                                              std::size_t pos) const {
    for (const auto& r : rules_) {
        if (pos + r.source.size() > s.size()) continue;
        bool ok = true;
        for (std::size_t i = 0; i < r.source.size(); ++i) {
            char c = s[pos + i];
            if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 0x20);
            if (c != r.source[i]) {
                ok = false;
                break;
            }
        }
        if (ok) return &r;
    }
    return nullptr;
}

// ---------------------------------------------------------------------------
// Sentence splitting

std::vector<SentenceSpan> split_sentence_spans(std::string_view text) {
    std::vector<SentenceSpan> spans;
    std::size_t pos = 0;
    std::size_t start = 0;
    bool in_terminal_run = false;

    const auto flush = [&](std::size_t end) {
        // drop pieces that are whitespace-only; trim edges off the span
        std::size_t b = start;
        std::size_t e = end;
        while (b < e) {
            std::size_t p = b;
            if (!is_space_cp(utf8::decode_next(text, p))) break;
            b = p;
        }
        while (e > b) {
            // walk back one code point
            std::size_t p = e - 1;
            while (p > b && (static_cast<unsigned char>(text[p]) & 0xC0) == 0x80) --p;
            std::size_t q = p;
            if (!is_space_cp(utf8::decode_next(text, q))) break;
            e = p;
        }
        if (b < e) spans.push_back({b, e});
        start = end;
    };

    while (pos < text.size()) {
        std::size_t cp_start = pos;
        const char32_t cp = utf8::decode_next(text, pos);
        if (is_terminal_punct(cp)) {
            in_terminal_run = true;
        } else if (in_terminal_run) {
            flush(cp_start);
            in_terminal_run = false;
        }
    }
    flush(text.size());
    return spans;
}

std::vector<std::string> split_sentences(const RawTranscript& raw) {
    std::vector<std::string> out;
    for (const auto& span : split_sentence_spans(raw.text))
        out.emplace_back(raw.text.substr(span.begin, span.end - span.begin));
    return out;
}

// ---------------------------------------------------------------------------
// Normalization stages

std::string normalize_numbers(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        if (!is_ascii_digit(s[i])) {
            out.push_back(s[i]);
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < s.size() && is_ascii_digit(s[j])) ++j;
        const std::string_view run = s.substr(i, j - i);
        std::string_view significant = run;
        while (significant.size() > 1 && significant.front() == '0') significant.remove_prefix(1);
        if (significant.size() > 12) throw DigitRunTooLarge(std::string(run));
        std::uint64_t value = 0;
        for (char c : significant) value = value * 10 + static_cast<std::uint64_t>(c - '0');
        out += uk_cardinal(value);
        i = j;
    }
    return out;
}

std::string transliterate(std::string_view s, const TransliterationTable& table) {
    std::string out;
    out.reserve(s.size());
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t cp_start = pos;
        const char32_t cp = utf8::decode_next(s, pos);
        if (is_latin_letter(cp)) {
            const auto* rule = table.match(s, cp_start);
            // table covers a-z, so a match always exists for Latin letters
            out += rule->target;
            pos = cp_start + rule->source.size();
        } else {
            out.append(s.substr(cp_start, pos - cp_start));
        }
    }
    return out;
}

NormalizedText normalize(std::string_view text, const TransliterationTable& table) {
    const std::string with_words = normalize_numbers(text);
    const std::string cyrillic = transliterate(with_words, table);

    // strip + lowercase + collapse in one pass over code points
    std::string out;
    out.reserve(cyrillic.size());
    bool pending_space = false;
    std::size_t pos = 0;
    while (pos < cyrillic.size()) {
        char32_t cp = utf8::decode_next(cyrillic, pos);
        if (cp == U'’') cp = '\'';
        if (is_space_cp(cp)) {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (!is_cyrillic_letter(cp) && cp != '\'') continue;
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        utf8::append(out, to_lower(cp));
    }
    return NormalizedText{std::move(out)};
}

NormalizedText normalize(const RawTranscript& raw, const TransliterationTable& table) {
    return normalize(std::string_view(raw.text), table);
}

}  // namespace ctcseg
