#!/usr/bin/env python3
"""Generate golden files for Ukrainian cardinal number spelling.

The algorithm below is a transcription of the Ukrainian cardinal logic of the
num2words python package (num2words.lang_UK at its default settings), kept
here so the golden files can be regenerated without the package installed.

Usage: gen_uk_numbers_golden.py <out_dir>
Writes uk_numbers_0_1000.golden and uk_numbers_large.golden, one
"<number>\t<words>" pair per line.
"""

import sys

ZERO = "нуль"

ONES = {
    1: "один", 2: "два", 3: "три", 4: "чотири", 5: "п'ять",
    6: "шість", 7: "сім", 8: "вісім", 9: "дев'ять",
}

ONES_FEMININE = {
    1: "одна", 2: "дві", 3: "три", 4: "чотири", 5: "п'ять",
    6: "шість", 7: "сім", 8: "вісім", 9: "дев'ять",
}

TENS = {
    0: "десять", 1: "одинадцять", 2: "дванадцять", 3: "тринадцять",
    4: "чотирнадцять", 5: "п'ятнадцять", 6: "шістнадцять",
    7: "сімнадцять", 8: "вісімнадцять", 9: "дев'ятнадцять",
}

TWENTIES = {
    2: "двадцять", 3: "тридцять", 4: "сорок", 5: "п'ятдесят",
    6: "шістдесят", 7: "сімдесят", 8: "вісімдесят", 9: "дев'яносто",
}

HUNDREDS = {
    1: "сто", 2: "двісті", 3: "триста", 4: "чотириста", 5: "п'ятсот",
    6: "шістсот", 7: "сімсот", 8: "вісімсот", 9: "дев'ятсот",
}

THOUSANDS = {
    1: ("тисяча", "тисячі", "тисяч"),
    2: ("мільйон", "мільйони", "мільйонів"),
    3: ("мільярд", "мільярди", "мільярдів"),
    4: ("трильйон", "трильйони", "трильйонів"),
}


def pluralize(n, forms):
    if n % 100 < 10 or n % 100 > 20:
        if n % 10 == 1:
            return forms[0]
        if 1 < n % 10 < 5:
            return forms[1]
    return forms[2]


def splitbyx(n):
    s = str(n)
    chunks = []
    start = len(s) % 3
    if start:
        chunks.append(int(s[:start]))
    for i in range(start, len(s), 3):
        chunks.append(int(s[i:i + 3]))
    return chunks


def int2word(n):
    if n == 0:
        return ZERO
    words = []
    chunks = splitbyx(n)
    i = len(chunks)
    for x in chunks:
        i -= 1
        if x == 0:
            continue
        n1 = x % 10
        n2 = (x // 10) % 10
        n3 = (x // 100) % 10
        if n3 > 0:
            words.append(HUNDREDS[n3])
        if n2 > 1:
            words.append(TWENTIES[n2])
        if n2 == 1:
            words.append(TENS[n1])
        elif n1 > 0:
            words.append(ONES_FEMININE[n1] if i == 1 else ONES[n1])
        if i > 0:
            words.append(pluralize(x, THOUSANDS[i]))
    return " ".join(words)


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "."
    with open(f"{out_dir}/uk_numbers_0_1000.golden", "w", encoding="utf-8") as f:
        for n in range(0, 1001):
            f.write(f"{n}\t{int2word(n)}\n")

    large = [
        1001, 1100, 2000, 2001, 4004, 5000, 11000, 21000, 100000, 123456,
        200300, 999999, 1000000, 1000001, 2000000, 5000001, 21000021,
        300000000, 999999999, 1000000000, 2147483647, 123456789012,
        999999999999,
    ]
    with open(f"{out_dir}/uk_numbers_large.golden", "w", encoding="utf-8") as f:
        for n in large:
            f.write(f"{n}\t{int2word(n)}\n")


if __name__ == "__main__":
    main()
