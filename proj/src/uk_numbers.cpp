#include "ctcseg/uk_numbers.hpp"

#include <array>

namespace ctcseg {
namespace {

constexpr const char* kZero = "нуль";

constexpr std::array<const char*, 10> kOnes = {
    "", "один", "два", "три", "чотири", "п'ять",
    "шість", "сім", "вісім", "дев'ять",
};

// Thousands take feminine agreement on 1 and 2.
constexpr std::array<const char*, 10> kOnesFeminine = {
    "", "одна", "дві", "три", "чотири", "п'ять",
    "шість", "сім", "вісім", "дев'ять",
};

constexpr std::array<const char*, 10> kTeens = {
    "десять", "одинадцять", "дванадцять", "тринадцять", "чотирнадцять",
    "п'ятнадцять", "шістнадцять", "сімнадцять", "вісімнадцять", "дев'ятнадцять",
};

constexpr std::array<const char*, 10> kTens = {
    "", "", "двадцять", "тридцять", "сорок", "п'ятдесят",
    "шістдесят", "сімдесят", "вісімдесят", "дев'яносто",
};

constexpr std::array<const char*, 10> kHundreds = {
    "", "сто", "двісті", "триста", "чотириста", "п'ятсот",
    "шістсот", "сімсот", "вісімсот", "дев'ятсот",
};

struct ScaleForms {
    const char* one;   // 1 тисяча
    const char* few;   // 2-4 тисячі
    const char* many;  // 5+ тисяч
};

constexpr std::array<ScaleForms, 4> kScales = {{
    {"", "", ""},  // units group, no scale word
    {"тисяча", "тисячі", "тисяч"},
    {"мільйон", "мільйони", "мільйонів"},
    {"мільярд", "мільярди", "мільярдів"},
}};

const char* pluralize(std::uint64_t n, const ScaleForms& forms) {
    const std::uint64_t two = n % 100;
    if (two < 10 || two > 20) {
        const std::uint64_t one = n % 10;
        if (one == 1) return forms.one;
        if (one > 1 && one < 5) return forms.few;
    }
    return forms.many;
}

void append_word(std::string& out, const char* word) {
    if (*word == '\0') return;
    if (!out.empty()) out.push_back(' ');
    out += word;
}

}  // namespace

std::string uk_cardinal(std::uint64_t n) {
    if (n > 999'999'999'999ULL) throw DigitRunTooLarge(std::to_string(n));
    if (n == 0) return kZero;

    // groups[0] = units, groups[1] = thousands, ...
    std::array<std::uint64_t, 4> groups{};
    std::size_t ngroups = 0;
    for (std::uint64_t rest = n; rest > 0; rest /= 1000) groups[ngroups++] = rest % 1000;

    std::string out;
    for (std::size_t gi = ngroups; gi-- > 0;) {
        const std::uint64_t g = groups[gi];
        if (g == 0) continue;
        const std::uint64_t h = g / 100;
        const std::uint64_t t = (g / 10) % 10;
        const std::uint64_t u = g % 10;
        append_word(out, kHundreds[h]);
        if (t == 1) {
            append_word(out, kTeens[u]);
        } else {
            append_word(out, kTens[t]);
            if (u > 0) append_word(out, gi == 1 ? kOnesFeminine[u] : kOnes[u]);
        }
        if (gi > 0) append_word(out, pluralize(g, kScales[gi]));
    }
    return out;
}

}  // namespace ctcseg
