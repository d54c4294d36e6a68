#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace priordan {

using Residue = int;

/// Modulus of the coefficient ring Z_p, p >= 2. Primality is computed once
/// at construction; operations that rely on invertibility (counting,
/// bijections) check the flag and refuse composite p.
class Modulus {
public:
    explicit Modulus(int p);

    int value() const { return p_; }
    bool is_prime() const { return prime_; }

    Residue reduce(long long v) const;

    bool operator==(const Modulus& o) const { return p_ == o.p_; }
    bool operator!=(const Modulus& o) const { return p_ != o.p_; }

private:
    int p_;
    bool prime_;
};

/// Truncated formal power series over Z_p, stored dense: coefficient of t^k
/// at index k. Trailing zeros are stripped, so two series are equal iff they
/// take the same value at every degree.
class CoeffSeq {
public:
    // Reduces entries mod p; negative entries are rejected.
    CoeffSeq(Modulus m, std::vector<int> coeffs = {});

    const Modulus& modulus() const { return mod_; }

    // Coefficient of t^k (0 beyond the stored degree).
    Residue at(int k) const;
    Residue operator[](int k) const { return at(k); }

    // Index one past the last nonzero coefficient (0 for the zero series).
    int size() const { return static_cast<int>(coeffs_.size()); }
    bool is_zero() const { return coeffs_.empty(); }

    const std::vector<Residue>& coeffs() const { return coeffs_; }

    bool operator==(const CoeffSeq& o) const;
    bool operator!=(const CoeffSeq& o) const { return !(*this == o); }

private:
    Modulus mod_;
    std::vector<Residue> coeffs_;
};

/// The determining data of a graph of the given order: the pivot index
/// bstar (least i <= n-2 with a nonzero g coefficient, absent for the empty
/// graph), g truncated to bstar..n-2 and f truncated to 1..n-2-bstar.
class CanonicalPair {
public:
    CanonicalPair(Modulus p, int order, std::optional<int> bstar,
                  CoeffSeq gtilde, CoeffSeq ftilde);

    static CanonicalPair empty(Modulus p, int order);

    const Modulus& modulus() const { return mod_; }
    int order() const { return order_; }
    const std::optional<int>& bstar() const { return bstar_; }
    const CoeffSeq& g() const { return gtilde_; }
    const CoeffSeq& f() const { return ftilde_; }

    bool is_empty_graph() const { return !bstar_.has_value(); }

    // Top index of the kept f range 1..order-2-bstar (0 or negative means
    // the range is empty and ftilde is forced to zero).
    int f_top() const;

    bool operator==(const CanonicalPair& o) const;
    bool operator!=(const CanonicalPair& o) const { return !(*this == o); }

private:
    Modulus mod_;
    int order_;
    std::optional<int> bstar_;
    CoeffSeq gtilde_, ftilde_;
};

/// Parses "1+2t^2+t^3" style polynomial text. Grammar: sums of
/// INT | INT t | INT t^INT | t | t^INT, whitespace ignored; "0" or empty
/// text is the zero series. Coefficients are reduced mod p; negative
/// coefficients and exponents are rejected.
CoeffSeq parse_poly(std::string_view text, Modulus p);

/// Inverse of parse_poly up to reduction: zero terms omitted, unit
/// coefficients implicit, "0" for the zero series.
std::string poly_to_string(const CoeffSeq& s);

/// Coefficient of t^k in g * f^j mod p, computed with truncation at
/// degree k throughout.
Residue product_coeff(const CoeffSeq& g, const CoeffSeq& f, int j, int k);

/// Formal derivative: coefficient i of the result is (i+1)*f_{i+1} mod p.
CoeffSeq derivative(const CoeffSeq& f);

/// Truncates (g, f) to the coefficients that determine the order-n graph.
CanonicalPair canonicalize(const CoeffSeq& g, const CoeffSeq& f, int n);

} // namespace priordan
