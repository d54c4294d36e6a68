#pragma once

#include <string>
#include <vector>

#include "priordan/bigint.hpp"
#include "priordan/graph.hpp"
#include "priordan/series.hpp"

namespace priordan {

/// One letter of the graph-word alphabet: a pair of residues, the first
/// carrying a g coefficient and the second an f coefficient.
struct Letter {
    Residue gpart = 0;
    Residue fpart = 0;

    bool operator==(const Letter& o) const = default;
    bool is_zero() const { return gpart == 0 && fpart == 0; }
};

/// True iff the letters satisfy the prefix condition: all letters are
/// (0,0), or some prefix of (0,0) letters is followed by a letter (b,0)
/// with b >= 1 (the rest unrestricted). Components must lie in 0..p-1.
bool validate_word(const std::vector<Letter>& letters, Modulus p);

/// Word over the (p*p)-letter alphabet satisfying the prefix condition;
/// the constructor enforces it. A word of length n encodes a graph of
/// order n+1.
class PRiordanWord {
public:
    PRiordanWord(Modulus p, std::vector<Letter> letters);

    const Modulus& modulus() const { return mod_; }
    const std::vector<Letter>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }

    bool operator==(const PRiordanWord& o) const;

private:
    Modulus mod_;
    std::vector<Letter> letters_;
};

/// Text form: for p=2 the compact letters a=(0,0), b=(1,0), c=(0,1),
/// d=(1,1); otherwise comma-separated "i:j" tokens. Empty word <-> "".
std::string word_to_string(const PRiordanWord& w);
PRiordanWord word_from_string(std::string_view text, Modulus p);

/// Encodes a graph of order n+1 as a word of length n: bstar copies of
/// (0,0), the pivot (g_bstar, 0), then (g_(bstar+k), f_k) for the
/// remaining k. Requires prime p.
PRiordanWord encode_word(const CanonicalPair& pair);

/// Inverse of encode_word; reads bstar off the first non-(0,0) letter.
CanonicalPair decode_word(const PRiordanWord& word);

/// Number of valid words of length n >= 0: s(0)=1, s(1)=p,
/// s(n+1) = p^2(s(n)-1) + p. Defined for any p >= 2.
Integer count_words(int n, Modulus p);

/// Word-shape membership tests for p=2, covering the classes with a purely
/// syntactic characterization: OnePlusF ("b" then letters in {a,d}),
/// Proper ("b", "bc...", "bd..."), Appell ("a...a", "a...ab", "a...abxw"
/// with x in {c,d} and w over {a,b}).
GraphClassSet word_class(const PRiordanWord& word);

} // namespace priordan
