#include "priordan/graph.hpp"

#include <array>
#include <stdexcept>

#include "priordan/errors.hpp"

namespace priordan {

AdjMatrix::AdjMatrix(Modulus p, int order) : mod_(p), n_(order) {
    if (order < 1) throw std::invalid_argument("order must be at least 1");
    e_.assign(static_cast<size_t>(n_) * n_, 0);
}

Residue AdjMatrix::at(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("vertex index");
    return e_[static_cast<size_t>(i - 1) * n_ + (j - 1)];
}

void AdjMatrix::set(int i, int j, Residue v) {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("vertex index");
    if (i == j && v != 0) throw std::invalid_argument("diagonal entries must be zero");
    e_[static_cast<size_t>(i - 1) * n_ + (j - 1)] = v;
    e_[static_cast<size_t>(j - 1) * n_ + (i - 1)] = v;
}

bool AdjMatrix::operator==(const AdjMatrix& o) const {
    return mod_ == o.mod_ && n_ == o.n_ && e_ == o.e_;
}

std::string AdjMatrix::to_text() const {
    int width = 1;
    for (int v = mod_.value() - 1; v >= 10; v /= 10) ++width;
    std::string out;
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            std::string cell = std::to_string(at(i, j));
            if (j > 1) out += ' ';
            out.append(static_cast<size_t>(width) - cell.size(), ' ');
            out += cell;
        }
        out += '\n';
    }
    return out;
}

const char* class_name(GraphClass c) {
    switch (c) {
        case GraphClass::Empty: return "empty";
        case GraphClass::Star: return "star";
        case GraphClass::Appell: return "appell";
        case GraphClass::Bell: return "bell";
        case GraphClass::Pascal: return "pascal";
        case GraphClass::Derivative: return "derivative";
        case GraphClass::Proper: return "proper";
        case GraphClass::OnePlusF: return "one-plus-f";
    }
    throw std::logic_error("unknown class");
}

GraphClass class_from_name(const std::string& name) {
    static const std::array<GraphClass, 8> all = {
        GraphClass::Empty,    GraphClass::Star,       GraphClass::Appell,
        GraphClass::Bell,     GraphClass::Pascal,     GraphClass::Derivative,
        GraphClass::Proper,   GraphClass::OnePlusF,
    };
    for (GraphClass c : all)
        if (name == class_name(c)) return c;
    throw std::invalid_argument("unknown graph class: " + name);
}

GraphClassSet GraphClassSet::restricted_to(std::initializer_list<GraphClass> classes) const {
    GraphClassSet out;
    for (GraphClass c : classes)
        if (has(c)) out.add(c);
    return out;
}

std::vector<GraphClass> GraphClassSet::to_list() const {
    std::vector<GraphClass> out;
    for (unsigned i = 0; i < 8; ++i)
        if (bits_ & (1u << i)) out.push_back(static_cast<GraphClass>(i));
    return out;
}

std::string GraphClassSet::to_string() const {
    std::string out;
    for (GraphClass c : to_list()) {
        if (!out.empty()) out += ',';
        out += class_name(c);
    }
    return out;
}

AdjMatrix adjacency_from_series(const CoeffSeq& g, const CoeffSeq& f, int n) {
    if (g.modulus() != f.modulus()) throw std::invalid_argument("modulus mismatch");
    const Modulus p = g.modulus();
    AdjMatrix m(p, n);

    // Column j holds coefficients of g*f^(j-1); build the rows incrementally.
    std::vector<long long> row(static_cast<size_t>(std::max(n - 1, 1)), 0);
    for (int k = 0; k <= n - 2; ++k) row[static_cast<size_t>(k)] = g.at(k);
    for (int j = 1; j <= n - 1; ++j) {
        for (int i = j + 1; i <= n; ++i)
            m.set(i, j, static_cast<Residue>(row[static_cast<size_t>(i - 2)]));
        if (j == n - 1) break;
        std::vector<long long> next(row.size(), 0);
        for (int a = 0; a <= n - 2; ++a) {
            if (row[static_cast<size_t>(a)] == 0) continue;
            for (int b = 0; a + b <= n - 2; ++b)
                next[static_cast<size_t>(a + b)] =
                    (next[static_cast<size_t>(a + b)] + row[static_cast<size_t>(a)] * f.at(b)) % p.value();
        }
        row = std::move(next);
    }
    return m;
}

AdjMatrix adjacency(const CanonicalPair& pair) {
    return adjacency_from_series(pair.g(), pair.f(), pair.order());
}

bool graphs_equal(const CanonicalPair& x, const CanonicalPair& y) {
    if (x.order() != y.order()) throw std::invalid_argument("order mismatch");
    if (x.modulus() != y.modulus()) throw std::invalid_argument("modulus mismatch");
    return x == y;
}

GraphClassSet classify(const CanonicalPair& pair) {
    GraphClassSet out;
    const int n = pair.order();
    const int p = pair.modulus().value();

    if (pair.is_empty_graph()) {
        // The empty graph arises from (0, f) for any f, from (g, t g) with
        // g = 0, and from (f', f) with f' vanishing on the kept range.
        out.add(GraphClass::Empty);
        out.add(GraphClass::Appell);
        out.add(GraphClass::Bell);
        out.add(GraphClass::Derivative);
        return out;
    }

    const int b = *pair.bstar();
    const CoeffSeq& g = pair.g();
    const CoeffSeq& f = pair.f();
    const int ftop = pair.f_top(); // kept f range is 1..ftop

    if (f.is_zero()) out.add(GraphClass::Star);

    bool appell = true;
    for (int i = 1; i <= ftop; ++i)
        if (f.at(i) != (i == 1 ? 1 : 0)) { appell = false; break; }
    if (appell) out.add(GraphClass::Appell);

    bool bell = true;
    for (int i = 1; i <= ftop; ++i)
        if (f.at(i) != g.at(i - 1)) { bell = false; break; }
    if (bell) out.add(GraphClass::Bell);

    if (b == 0) {
        bool pascal = true;
        for (int i = 0; i <= n - 2 && pascal; ++i) pascal = g.at(i) == 1;
        for (int i = 1; i <= ftop && pascal; ++i) pascal = f.at(i) == 1;
        if (pascal) out.add(GraphClass::Pascal);

        if (ftop < 1 || f.at(1) != 0) out.add(GraphClass::Proper);

        if (g.at(0) == 1) {
            bool opf = true;
            for (int i = 1; i <= n - 2; ++i)
                if (g.at(i) != f.at(i)) { opf = false; break; }
            if (opf) out.add(GraphClass::OnePlusF);
        }
    }

    // (f', f) form: coefficient i of the g side must be (i+1) f_{i+1};
    // f coefficients above the kept range are free, so the condition there
    // is only unsatisfiable when p divides i+1 and g_i is nonzero.
    bool deriv = true;
    for (int i = 0; i <= n - 2 && deriv; ++i) {
        const int target = g.at(i);
        const int c = (i + 1) % p;
        if (i + 1 <= ftop)
            deriv = (c * f.at(i + 1)) % p == target;
        else
            deriv = c != 0 || target == 0;
    }
    if (deriv) out.add(GraphClass::Derivative);

    return out;
}

void for_each_graph(int n, Modulus p, const std::function<void(const CanonicalPair&)>& fn) {
    if (!p.is_prime()) throw std::invalid_argument("enumeration requires a prime modulus");
    if (n < 1) throw std::invalid_argument("order must be at least 1");

    fn(CanonicalPair::empty(p, n));
    const int pv = p.value();
    for (int b = 0; b <= n - 2; ++b) {
        const int gfree = n - 2 - b; // indices b+1..n-2
        const int flen = n - 2 - b;  // indices 1..n-2-b
        std::vector<int> digits(static_cast<size_t>(gfree + flen), 0);
        for (int lead = 1; lead < pv; ++lead) {
            std::fill(digits.begin(), digits.end(), 0);
            for (;;) {
                std::vector<int> gt(static_cast<size_t>(n - 1), 0);
                gt[static_cast<size_t>(b)] = lead;
                for (int k = 0; k < gfree; ++k)
                    gt[static_cast<size_t>(b + 1 + k)] = digits[static_cast<size_t>(k)];
                std::vector<int> ft(static_cast<size_t>(flen + 1), 0);
                for (int k = 0; k < flen; ++k)
                    ft[static_cast<size_t>(1 + k)] = digits[static_cast<size_t>(gfree + k)];
                fn(CanonicalPair(p, n, b, CoeffSeq(p, std::move(gt)), CoeffSeq(p, std::move(ft))));

                // odometer, rightmost digit fastest
                int pos = static_cast<int>(digits.size()) - 1;
                while (pos >= 0 && digits[static_cast<size_t>(pos)] == pv - 1) {
                    digits[static_cast<size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
                ++digits[static_cast<size_t>(pos)];
            }
        }
    }
}

std::vector<CanonicalPair> enumerate_graphs(int n, Modulus p) {
    std::vector<CanonicalPair> out;
    for_each_graph(n, p, [&](const CanonicalPair& pair) { out.push_back(pair); });
    return out;
}

Integer count_graphs(int n, Modulus p) {
    if (!p.is_prime()) throw std::invalid_argument("graph counting requires a prime modulus");
    if (n < 1) throw std::invalid_argument("order must be at least 1");

    const Integer pv = p.value();
    Integer numerator = ipow(pv, static_cast<unsigned>(2 * (n - 1))) + pv;
    if (numerator % (pv + 1) != 0)
        throw consistency_error("graph count closed form is not an integer");
    Integer closed = numerator / (pv + 1);

    Integer rec = 1;
    for (int m = 1; m < n; ++m) rec = pv * pv * (rec - 1) + pv;

    if (closed != rec)
        throw consistency_error("graph count closed form and recursion disagree");
    return closed;
}

} // namespace priordan
