#include "ctcseg/vocab.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>

#include "ctcseg/utf8.hpp"

namespace ctcseg {

Vocab::Vocab(std::vector<std::string> tokens, int blank_id)
    : tokens_(std::move(tokens)), blank_id_(blank_id) {
    if (tokens_.empty())
        throw VocabError(VocabError::Kind::BadFormat, "vocab is empty");
    if (blank_id_ < 0 || blank_id_ >= size())
        throw VocabError(VocabError::Kind::MissingBlank,
                         "blank_id " + std::to_string(blank_id_) + " outside [0, " +
                             std::to_string(size()) + ")");
    std::set<std::string_view> seen;
    for (const auto& t : tokens_) {
        if (t.empty())
            throw VocabError(VocabError::Kind::BadFormat, "empty token string");
        if (!seen.insert(t).second)
            throw VocabError(VocabError::Kind::DuplicateToken, "duplicate token: " + t);
    }
}

Vocab Vocab::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw VocabError(VocabError::Kind::BadFormat, "cannot open vocab: " + path.string());

    std::string line;
    if (!std::getline(in, line))
        throw VocabError(VocabError::Kind::BadFormat, "empty vocab file: " + path.string());
    if (!line.empty() && line.back() == '\r') line.pop_back();
    constexpr std::string_view kHeader = "#blank_id=";
    if (line.rfind(kHeader, 0) != 0)
        throw VocabError(VocabError::Kind::MissingBlank,
                         "missing #blank_id= header: " + path.string());
    int blank_id;
    try {
        blank_id = std::stoi(line.substr(kHeader.size()));
    } catch (const std::exception&) {
        throw VocabError(VocabError::Kind::MissingBlank, "unparseable blank_id: " + line);
    }

    std::vector<std::pair<int, std::string>> entries;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw VocabError(VocabError::Kind::BadFormat,
                             "line " + std::to_string(lineno) + ": expected id<TAB>token");
        int id;
        try {
            id = std::stoi(line.substr(0, tab));
        } catch (const std::exception&) {
            throw VocabError(VocabError::Kind::BadFormat,
                             "line " + std::to_string(lineno) + ": unparseable id");
        }
        entries.emplace_back(id, line.substr(tab + 1));
    }

    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::string> tokens;
    tokens.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].first != static_cast<int>(i))
            throw VocabError(VocabError::Kind::NonContiguousIds,
                             "ids are not exactly 0..V-1 (got id " +
                                 std::to_string(entries[i].first) + " at position " +
                                 std::to_string(i) + ")");
        tokens.push_back(std::move(entries[i].second));
    }
    return Vocab(std::move(tokens), blank_id);
}

TokenSequence tokenize(std::string_view text, const Vocab& vocab) {
    // bucket non-blank tokens by first byte, longest first
    std::array<std::vector<int>, 256> buckets;
    for (int id = 0; id < vocab.size(); ++id) {
        if (id == vocab.blank_id()) continue;
        buckets[static_cast<unsigned char>(vocab.token(id)[0])].push_back(id);
    }
    for (auto& bucket : buckets) {
        std::sort(bucket.begin(), bucket.end(), [&](int a, int b) {
            return vocab.token(a).size() > vocab.token(b).size();
        });
    }

    TokenSequence seq;
    std::size_t pos = 0;
    while (pos < text.size()) {
        int best = -1;
        for (int id : buckets[static_cast<unsigned char>(text[pos])]) {
            const std::string& tok = vocab.token(id);
            if (text.substr(pos, tok.size()) == tok) {
                best = id;
                break;
            }
        }
        if (best == -1) {
            std::size_t p = pos;
            utf8::decode_next(text, p);
            throw TokenizeError(pos, std::string(text.substr(pos, p - pos)));
        }
        const std::size_t len = vocab.token(best).size();
        seq.ids.push_back(best);
        seq.spans.push_back({pos, pos + len});
        pos += len;
    }
    return seq;
}

}  // namespace ctcseg
