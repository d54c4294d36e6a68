#include "priordan/word.hpp"

#include <stdexcept>

namespace priordan {

namespace {

void check_components(const std::vector<Letter>& letters, const Modulus& p) {
    for (const Letter& l : letters)
        if (l.gpart < 0 || l.gpart >= p.value() || l.fpart < 0 || l.fpart >= p.value())
            throw std::invalid_argument("letter component out of range");
}

// p=2 compact alphabet
constexpr char kCompact[2][2] = {{'a', 'c'}, {'b', 'd'}};

Letter compact_letter(char c) {
    switch (c) {
        case 'a': return {0, 0};
        case 'b': return {1, 0};
        case 'c': return {0, 1};
        case 'd': return {1, 1};
        default: throw std::invalid_argument(std::string("unknown letter '") + c + "'");
    }
}

} // namespace

bool validate_word(const std::vector<Letter>& letters, Modulus p) {
    check_components(letters, p);
    for (const Letter& l : letters) {
        if (l.is_zero()) continue;
        return l.fpart == 0 && l.gpart >= 1;
    }
    return true; // all (0,0), including the empty word
}

PRiordanWord::PRiordanWord(Modulus p, std::vector<Letter> letters)
    : mod_(p), letters_(std::move(letters)) {
    if (!validate_word(letters_, mod_))
        throw std::invalid_argument("letters violate the word prefix condition");
}

bool PRiordanWord::operator==(const PRiordanWord& o) const {
    return mod_ == o.mod_ && letters_ == o.letters_;
}

std::string word_to_string(const PRiordanWord& w) {
    std::string out;
    if (w.modulus().value() == 2) {
        for (const Letter& l : w.letters()) out += kCompact[l.gpart][l.fpart];
        return out;
    }
    for (const Letter& l : w.letters()) {
        if (!out.empty()) out += ',';
        out += std::to_string(l.gpart) + ':' + std::to_string(l.fpart);
    }
    return out;
}

PRiordanWord word_from_string(std::string_view text, Modulus p) {
    std::vector<Letter> letters;
    if (text.empty()) return PRiordanWord(p, {});
    if (p.value() == 2 && text.find(':') == std::string_view::npos) {
        for (char c : text) letters.push_back(compact_letter(c));
        return PRiordanWord(p, std::move(letters));
    }
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(start, end - start);
        size_t colon = tok.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("word token must look like i:j");
        try {
            int i = std::stoi(std::string(tok.substr(0, colon)));
            int j = std::stoi(std::string(tok.substr(colon + 1)));
            letters.push_back({i, j});
        } catch (const std::exception&) {
            throw std::invalid_argument("bad word token: " + std::string(tok));
        }
        start = end + 1;
        if (end == text.size()) break;
    }
    return PRiordanWord(p, std::move(letters));
}

PRiordanWord encode_word(const CanonicalPair& pair) {
    if (!pair.modulus().is_prime())
        throw std::invalid_argument("word encoding requires a prime modulus");
    const int n = pair.order() - 1; // word length
    std::vector<Letter> letters;
    letters.reserve(static_cast<size_t>(n));
    if (pair.is_empty_graph()) {
        letters.assign(static_cast<size_t>(n), Letter{0, 0});
        return PRiordanWord(pair.modulus(), std::move(letters));
    }
    const int b = *pair.bstar();
    for (int i = 0; i < b; ++i) letters.push_back({0, 0});
    letters.push_back({pair.g().at(b), 0});
    for (int k = 1; k <= n - 1 - b; ++k)
        letters.push_back({pair.g().at(b + k), pair.f().at(k)});
    return PRiordanWord(pair.modulus(), std::move(letters));
}

CanonicalPair decode_word(const PRiordanWord& word) {
    const Modulus p = word.modulus();
    if (!p.is_prime())
        throw std::invalid_argument("word decoding requires a prime modulus");
    const auto& letters = word.letters();
    const int n = word.length();
    const int order = n + 1;

    int pivot = -1;
    for (int i = 0; i < n; ++i)
        if (!letters[static_cast<size_t>(i)].is_zero()) { pivot = i; break; }
    if (pivot < 0) return CanonicalPair::empty(p, order);

    const int b = pivot;
    std::vector<int> gt(static_cast<size_t>(order - 1), 0);
    gt[static_cast<size_t>(b)] = letters[static_cast<size_t>(b)].gpart;
    std::vector<int> ft(static_cast<size_t>(order - b), 0);
    for (int k = 1; k <= n - 1 - b; ++k) {
        gt[static_cast<size_t>(b + k)] = letters[static_cast<size_t>(b + k)].gpart;
        ft[static_cast<size_t>(k)] = letters[static_cast<size_t>(b + k)].fpart;
    }
    return CanonicalPair(p, order, b, CoeffSeq(p, std::move(gt)), CoeffSeq(p, std::move(ft)));
}

Integer count_words(int n, Modulus p) {
    if (n < 0) throw std::invalid_argument("word length must be non-negative");
    if (n == 0) return 1;
    const Integer pv = p.value();
    Integer s = pv;
    for (int m = 1; m < n; ++m) s = pv * pv * (s - 1) + pv;
    return s;
}

GraphClassSet word_class(const PRiordanWord& word) {
    if (word.modulus().value() != 2)
        throw std::invalid_argument("word classes are defined for p=2 only");
    const auto& ls = word.letters();
    const size_t n = ls.size();
    GraphClassSet out;

    const Letter a{0, 0}, b{1, 0};
    auto is_ab = [&](const Letter& l) { return l == a || l == b; };
    auto is_ad = [&](const Letter& l) { return l == a || l.gpart == 1 && l.fpart == 1; };
    auto is_cd = [&](const Letter& l) { return l.fpart == 1; };

    // "b" followed by letters in {a,d}
    if (n >= 1 && ls[0] == b) {
        bool opf = true;
        for (size_t i = 1; i < n; ++i)
            if (!is_ad(ls[i])) { opf = false; break; }
        if (opf) out.add(GraphClass::OnePlusF);
    }

    // "b" alone, or "bc...", "bd..."
    if ((n == 1 && ls[0] == b) || (n >= 2 && ls[0] == b && is_cd(ls[1])))
        out.add(GraphClass::Proper);

    // "a...a", "a...ab", "a...abxw" with x in {c,d} and w over {a,b}
    size_t lead = 0;
    while (lead < n && ls[lead] == a) ++lead;
    if (lead == n) {
        out.add(GraphClass::Appell);
    } else if (ls[lead] == b) {
        if (lead + 1 == n) {
            out.add(GraphClass::Appell);
        } else if (is_cd(ls[lead + 1])) {
            bool tail_ab = true;
            for (size_t i = lead + 2; i < n; ++i)
                if (!is_ab(ls[i])) { tail_ab = false; break; }
            if (tail_ab) out.add(GraphClass::Appell);
        }
    }
    return out;
}

} // namespace priordan
