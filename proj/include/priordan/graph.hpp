#pragma once

#include <functional>
#include <string>
#include <vector>

#include "priordan/bigint.hpp"
#include "priordan/series.hpp"

namespace priordan {

/// Symmetric adjacency matrix with zero diagonal and entries in 0..p-1.
/// Vertices are 1-based to match the usual labelling of these graphs.
class AdjMatrix {
public:
    AdjMatrix(Modulus p, int order);

    int order() const { return n_; }
    const Modulus& modulus() const { return mod_; }

    Residue at(int i, int j) const; // 1-based
    void set(int i, int j, Residue v); // sets both (i,j) and (j,i)

    bool operator==(const AdjMatrix& o) const;
    bool operator!=(const AdjMatrix& o) const { return !(*this == o); }

    // Row-major flat entries, for hashing/dedup.
    const std::vector<Residue>& entries() const { return e_; }

    std::string to_text() const; // aligned rows of residues

private:
    Modulus mod_;
    int n_;
    std::vector<Residue> e_;
};

enum class GraphClass {
    Empty,
    Star,
    Appell,
    Bell,
    Pascal,
    Derivative,
    Proper,
    OnePlusF,
};

const char* class_name(GraphClass c);
GraphClass class_from_name(const std::string& name);

/// Small ordered set of GraphClass values.
class GraphClassSet {
public:
    void add(GraphClass c) { bits_ |= 1u << static_cast<unsigned>(c); }
    bool has(GraphClass c) const { return bits_ & (1u << static_cast<unsigned>(c)); }

    bool operator==(const GraphClassSet& o) const { return bits_ == o.bits_; }
    bool operator!=(const GraphClassSet& o) const { return bits_ != o.bits_; }

    // Intersection with a list of classes, for comparing classifications
    // that only speak about a subset of the classes.
    GraphClassSet restricted_to(std::initializer_list<GraphClass> classes) const;

    std::vector<GraphClass> to_list() const;
    std::string to_string() const; // comma-separated class names

private:
    unsigned bits_ = 0;
};

/// Adjacency from the determining coefficients: for 1 <= j < i <= n the
/// entry (i,j) is the coefficient of t^(i-2) in g*f^(j-1) mod p.
AdjMatrix adjacency(const CanonicalPair& pair);

/// Same formula applied to raw, uncanonicalized series.
AdjMatrix adjacency_from_series(const CoeffSeq& g, const CoeffSeq& f, int n);

/// Labelled equality via canonical fields. Throws on order or modulus
/// mismatch.
bool graphs_equal(const CanonicalPair& x, const CanonicalPair& y);

/// Membership in the named presentation classes, decided on determining
/// coefficients: a graph belongs to a class iff some series pair of that
/// shape produces it.
GraphClassSet classify(const CanonicalPair& pair);

/// Visits every distinct graph of order n exactly once: the empty graph
/// first, then bstar ascending, then the g and f coefficient vectors in
/// lexicographic order (leading g coefficient most significant).
void for_each_graph(int n, Modulus p, const std::function<void(const CanonicalPair&)>& fn);

std::vector<CanonicalPair> enumerate_graphs(int n, Modulus p);

/// Number of distinct graphs of order n for prime p. Evaluates the closed
/// form (p^(2(n-1)) + p) / (p+1) and the recursion r(n+1) = p^2(r(n)-1) + p
/// independently and throws consistency_error if they disagree.
Integer count_graphs(int n, Modulus p);

} // namespace priordan
