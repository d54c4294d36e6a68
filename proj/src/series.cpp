#include "priordan/series.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace priordan {

namespace {

bool trial_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void strip_trailing_zeros(std::vector<Residue>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

} // namespace

Modulus::Modulus(int p) : p_(p), prime_(trial_prime(p)) {
    if (p < 2) throw std::invalid_argument("modulus must be at least 2");
}

Residue Modulus::reduce(long long v) const {
    long long r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Residue>(r);
}

CoeffSeq::CoeffSeq(Modulus m, std::vector<int> coeffs) : mod_(m) {
    coeffs_.reserve(coeffs.size());
    for (int c : coeffs) {
        if (c < 0) throw std::invalid_argument("negative coefficient");
        coeffs_.push_back(mod_.reduce(c));
    }
    strip_trailing_zeros(coeffs_);
}

Residue CoeffSeq::at(int k) const {
    if (k < 0 || k >= size()) return 0;
    return coeffs_[static_cast<size_t>(k)];
}

bool CoeffSeq::operator==(const CoeffSeq& o) const {
    return mod_ == o.mod_ && coeffs_ == o.coeffs_;
}

CanonicalPair::CanonicalPair(Modulus p, int order, std::optional<int> bstar,
                             CoeffSeq gtilde, CoeffSeq ftilde)
    : mod_(p), order_(order), bstar_(bstar),
      gtilde_(std::move(gtilde)), ftilde_(std::move(ftilde)) {
    if (order < 1) throw std::invalid_argument("order must be at least 1");
    if (gtilde_.modulus() != mod_ || ftilde_.modulus() != mod_)
        throw std::invalid_argument("modulus mismatch");
    if (!bstar_) {
        if (!gtilde_.is_zero() || !ftilde_.is_zero())
            throw std::invalid_argument("empty graph must have zero series");
        return;
    }
    int b = *bstar_;
    if (b < 0 || b > order - 2)
        throw std::invalid_argument("bstar out of range");
    if (gtilde_.at(b) == 0)
        throw std::invalid_argument("pivot coefficient must be nonzero");
    for (int i = 0; i < b; ++i)
        if (gtilde_.at(i) != 0)
            throw std::invalid_argument("g coefficients below bstar must vanish");
    if (gtilde_.size() > order - 1)
        throw std::invalid_argument("g coefficient beyond kept range");
    if (ftilde_.at(0) != 0 || ftilde_.size() > order - 1 - b)
        throw std::invalid_argument("f coefficient beyond kept range");
}

CanonicalPair CanonicalPair::empty(Modulus p, int order) {
    return CanonicalPair(p, order, std::nullopt, CoeffSeq(p), CoeffSeq(p));
}

int CanonicalPair::f_top() const {
    return bstar_ ? order_ - 2 - *bstar_ : 0;
}

bool CanonicalPair::operator==(const CanonicalPair& o) const {
    return mod_ == o.mod_ && order_ == o.order_ && bstar_ == o.bstar_ &&
           gtilde_ == o.gtilde_ && ftilde_ == o.ftilde_;
}

CoeffSeq parse_poly(std::string_view text, Modulus p) {
    std::vector<int> coeffs;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto fail = [&](const std::string& msg) -> void {
        throw std::invalid_argument("poly syntax error at position " + std::to_string(i) + ": " + msg);
    };
    auto read_int = [&]() -> long long {
        if (i < text.size() && text[i] == '-') fail("negative values are not accepted");
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            fail("expected an integer");
        long long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > (1LL << 40)) fail("integer too large");
            ++i;
        }
        return v;
    };

    skip_ws();
    if (i == text.size()) return CoeffSeq(p); // empty text is the zero series

    bool expect_term = true;
    while (expect_term) {
        skip_ws();
        long long coef = 1;
        long long expo = -1;
        bool saw_coef = false;
        if (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '-')) {
            coef = read_int();
            saw_coef = true;
            expo = 0;
        }
        skip_ws();
        if (i < text.size() && text[i] == 't') {
            ++i;
            expo = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                if (i < text.size() && text[i] == '-') fail("negative exponent");
                expo = read_int();
                if (expo > 100000) fail("exponent too large");
            }
        } else if (!saw_coef) {
            fail("expected a term");
        }
        if (static_cast<size_t>(expo) >= coeffs.size())
            coeffs.resize(static_cast<size_t>(expo) + 1, 0);
        coeffs[static_cast<size_t>(expo)] = p.reduce(coeffs[static_cast<size_t>(expo)] + coef);
        skip_ws();
        if (i < text.size() && text[i] == '+') {
            ++i;
            expect_term = true;
        } else {
            expect_term = false;
        }
    }
    skip_ws();
    if (i != text.size()) fail("unexpected trailing input");
    return CoeffSeq(p, std::move(coeffs));
}

std::string poly_to_string(const CoeffSeq& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (int k = 0; k < s.size(); ++k) {
        Residue c = s.at(k);
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (k == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += 't';
            if (k > 1) out += '^' + std::to_string(k);
        }
    }
    return out;
}

Residue product_coeff(const CoeffSeq& g, const CoeffSeq& f, int j, int k) {
    if (g.modulus() != f.modulus()) throw std::invalid_argument("modulus mismatch");
    if (j < 0 || k < 0) throw std::invalid_argument("indices must be non-negative");
    const int p = g.modulus().value();

    // f^j truncated at degree k, then one convolution with g.
    std::vector<long long> pw(static_cast<size_t>(k) + 1, 0);
    pw[0] = 1;
    for (int rep = 0; rep < j; ++rep) {
        std::vector<long long> next(static_cast<size_t>(k) + 1, 0);
        for (int a = 0; a <= k; ++a) {
            if (pw[static_cast<size_t>(a)] == 0) continue;
            for (int b = 0; a + b <= k; ++b)
                next[static_cast<size_t>(a + b)] =
                    (next[static_cast<size_t>(a + b)] + pw[static_cast<size_t>(a)] * f.at(b)) % p;
        }
        pw = std::move(next);
    }
    long long acc = 0;
    for (int a = 0; a <= k; ++a)
        acc = (acc + static_cast<long long>(g.at(a)) * pw[static_cast<size_t>(k - a)]) % p;
    return static_cast<Residue>(acc);
}

CoeffSeq derivative(const CoeffSeq& f) {
    std::vector<int> out;
    for (int i = 0; i + 1 < f.size(); ++i)
        out.push_back(f.modulus().reduce(static_cast<long long>(i + 1) * f.at(i + 1)));
    return CoeffSeq(f.modulus(), std::move(out));
}

CanonicalPair canonicalize(const CoeffSeq& g, const CoeffSeq& f, int n) {
    if (g.modulus() != f.modulus()) throw std::invalid_argument("modulus mismatch");
    if (n < 1) throw std::invalid_argument("order must be at least 1");
    const Modulus p = g.modulus();

    std::optional<int> bstar;
    for (int i = 0; i <= n - 2; ++i) {
        if (g.at(i) != 0) {
            bstar = i;
            break;
        }
    }
    if (!bstar) return CanonicalPair::empty(p, n);

    std::vector<int> gt(static_cast<size_t>(n - 1), 0);
    for (int i = *bstar; i <= n - 2; ++i) gt[static_cast<size_t>(i)] = g.at(i);
    std::vector<int> ft(static_cast<size_t>(std::max(0, n - 1 - *bstar)), 0);
    for (int i = 1; i <= n - 2 - *bstar; ++i) ft[static_cast<size_t>(i)] = f.at(i);
    return CanonicalPair(p, n, bstar, CoeffSeq(p, std::move(gt)), CoeffSeq(p, std::move(ft)));
}

} // namespace priordan
