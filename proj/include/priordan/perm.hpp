#pragma once

#include <string>
#include <vector>

#include "priordan/graph.hpp"
#include "priordan/series.hpp"

namespace priordan {

/// Permutation of 1..m in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values); // validates

    int size() const { return static_cast<int>(vals_.size()); }
    int at(int pos) const { return vals_.at(static_cast<size_t>(pos) - 1); } // 1-based
    const std::vector<int>& values() const { return vals_; }

    bool operator==(const Permutation& o) const { return vals_ == o.vals_; }
    bool operator!=(const Permutation& o) const { return vals_ != o.vals_; }

    std::vector<int> fixed_points() const;

private:
    std::vector<int> vals_;
};

/// Order-isomorphic relabelling of distinct integers onto 1..m.
Permutation reduce(const std::vector<int>& seq);

/// Brute-force pattern containment: some subsequence reduces to `pattern`.
bool contains_pattern(const Permutation& perm, const Permutation& pattern);

/// Builds the length-(bits+1) permutation avoiding 123 and 132 by inserting
/// 1,2,... into the left (bit 0) or right (bit 1) of the two rightmost empty
/// slots; the last element takes the one remaining slot.
Permutation insertion_perm(const std::vector<int>& bits);

/// Replays the insertion to recover the bits; throws if the permutation
/// contains 123 or 132 (the replay gets stuck exactly then).
std::vector<int> insertion_bits(const Permutation& perm);

/// True iff the replay succeeds, i.e. the permutation avoids 123 and 132.
bool avoids_123_132(const Permutation& perm);

/// True iff perm has even length, avoids 123 and 132, and has exactly two
/// fixed points -- the image domain of encode_permutation. Odd length is an
/// error.
bool is_graph_code_perm(const Permutation& perm);

/// Encodes a p=2 graph of order n as such a permutation of length 2n:
/// fixed points at n and b = bstar+n+1 (b = 2n for the empty graph), a
/// descending middle run, the g word inserted above b and the f word below.
Permutation encode_permutation(const CanonicalPair& pair);

/// Inverse of encode_permutation. Validates the block structure and throws
/// on permutations outside the image.
CanonicalPair decode_permutation(const Permutation& perm);

/// Class membership read off the permutation blocks (graph order n,
/// permutation length 2n). OnePlusF, Proper, Appell and Pascal are shape
/// tests on the blocks; Bell and Derivative check the replayed insertion
/// bits of both blocks against each other.
GraphClassSet perm_class(const Permutation& perm);

/// Text form "10,8,9,6,5,4,7,3,1,2".
std::string perm_to_string(const Permutation& p);
Permutation perm_from_string(std::string_view text);

std::vector<int> bits_from_string(std::string_view text); // "0110..." -> {0,1,1,0,...}
std::string bits_to_string(const std::vector<int>& bits);

} // namespace priordan
