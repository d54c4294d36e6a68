#pragma once

#include <string>
#include <vector>

#include "priordan/bigint.hpp"
#include "priordan/graph.hpp"
#include "priordan/series.hpp"

namespace priordan {

/// Parity check: every letter of {0,1,2} occurs an even number of times
/// (which forces even length). Letters outside the alphabet are an error.
bool is_balanced(std::string_view word);

/// Word over {0,1,2} with an even count of each letter; the constructor
/// enforces balance. A word of length 2n encodes a p=3 graph of order n+1.
class BalancedWord {
public:
    explicit BalancedWord(std::string letters);

    const std::string& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }

    bool operator==(const BalancedWord& o) const { return letters_ == o.letters_; }
    bool operator!=(const BalancedWord& o) const { return letters_ != o.letters_; }

private:
    std::string letters_;
};

/// Flips the leftmost letter of {x,y} to the other one and appends xy.
/// Bijection from the balanced words other than the constant word in the
/// third letter onto the balanced words two letters longer ending in xy.
BalancedWord balanced_extend(const BalancedWord& w, int x, int y);

/// Inverse: drops the final two (distinct) letters and flips back the
/// leftmost occurrence of either of them.
BalancedWord balanced_shrink(const BalancedWord& v);

/// Encodes a p=3 graph of order n+1 as a balanced word of length 2n,
/// recursing over the order-m prefixes of the determining coefficients:
/// a vanishing (or absent) new f coefficient appends the new g coefficient
/// twice; otherwise one of the six balanced_extend subcases applies, with
/// the constant-word substitution where the natural input is excluded.
BalancedWord encode_balanced(const CanonicalPair& pair);

/// Inverse of encode_balanced, peeling two letters at a time.
CanonicalPair decode_balanced(const BalancedWord& word);

/// Walk on the k-cube starting at the origin, given by the 1-based
/// coordinate flipped at each step.
struct CubeWalk {
    int dim = 3;
    std::vector<int> steps;

    // Vertices visited, as coordinate bitmasks, origin first.
    std::vector<unsigned> vertices() const;
    bool is_closed() const;
};

/// Letter x at each position becomes a step in coordinate x+1 of the
/// 3-cube; the walk is closed iff the word is balanced.
CubeWalk word_to_walk(std::string_view word);
std::string walk_to_word(const CubeWalk& walk); // requires dim == 3

/// Closed walks of length L on the k-cube from the origin, via the
/// (origin,origin) entry of the L-th power of the cube adjacency matrix.
Integer count_closed_walks_matrix(int k, int L);

/// The same count in closed form: (1/2^k) * sum_j C(k,j) (k-2j)^L.
/// Throws consistency_error if the division is not exact.
Integer count_closed_walks_formula(int k, int L);

/// Number of balanced words of length 2n: recursion b(n+1) = 9 b(n) - 6,
/// cross-checked against the closed form (9^n+3)/4 and both walk oracles.
Integer count_balanced(int n);

} // namespace priordan
