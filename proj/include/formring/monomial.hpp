#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "formring/errors.hpp"

namespace formring {

// Exponent vector of fixed length (= number of ring variables).
struct Monomial {
    std::vector<int> exp;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exp(std::move(e)) {}
    static Monomial unit(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    int nvars() const { return static_cast<int>(exp.size()); }
    int degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }
    bool is_unit() const { return degree() == 0; }

    bool divides(const Monomial& m) const {
        for (int i = 0; i < nvars(); ++i)
            if (exp[i] > m.exp[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (int i = 0; i < nvars(); ++i) r.exp[i] += m.exp[i];
        return r;
    }

    // this / m, when m divides this.
    std::optional<Monomial> try_divide(const Monomial& m) const {
        Monomial r(*this);
        for (int i = 0; i < nvars(); ++i) {
            r.exp[i] -= m.exp[i];
            if (r.exp[i] < 0) return std::nullopt;
        }
        return r;
    }

    Monomial lcm(const Monomial& m) const {
        Monomial r(*this);
        for (int i = 0; i < nvars(); ++i) r.exp[i] = std::max(r.exp[i], m.exp[i]);
        return r;
    }

    bool operator==(const Monomial& m) const { return exp == m.exp; }
};

struct MonomialOrder {
    enum class Kind { Grevlex, Lex, Block };

    Kind kind = Kind::Grevlex;
    int block = 0;  // size of the leading variable block for Kind::Block

    static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    // Block order eliminating the first k variables: compares the leading
    // k-variable block by grevlex first, then the tail by grevlex.
    static MonomialOrder elimination(int k) { return {Kind::Block, k}; }

    bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
};

namespace detail {

// grevlex on exponent slice [lo, hi): total degree, ties broken by the
// smallest exponent in the last differing position.
inline int cmp_grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) { da += a.exp[i]; db += b.exp[i]; }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    return 0;
}

}  // namespace detail

// Returns <0, 0, >0 when a < b, a == b, a > b under ord.
inline int compare(const MonomialOrder& ord, const Monomial& a, const Monomial& b) {
    const int n = a.nvars();
    switch (ord.kind) {
        case MonomialOrder::Kind::Grevlex:
            return detail::cmp_grevlex_range(a, b, 0, n);
        case MonomialOrder::Kind::Lex:
            for (int i = 0; i < n; ++i)
                if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
            return 0;
        case MonomialOrder::Kind::Block: {
            int c = detail::cmp_grevlex_range(a, b, 0, ord.block);
            if (c != 0) return c;
            return detail::cmp_grevlex_range(a, b, ord.block, n);
        }
    }
    return 0;
}

}  // namespace formring
