#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "formring/errors.hpp"

namespace formring {

// Exact coefficient field. Two models: PrimeField (F_p, default p = 32003)
// and RationalField (arbitrary-precision rationals via GMP).
template <class F>
concept CoefficientField = requires(const F f, const typename F::Elem a,
                                    const typename F::Elem b, long long n,
                                    const std::string& s) {
    { f.zero() } -> std::same_as<typename F::Elem>;
    { f.one() } -> std::same_as<typename F::Elem>;
    { f.add(a, b) } -> std::same_as<typename F::Elem>;
    { f.sub(a, b) } -> std::same_as<typename F::Elem>;
    { f.mul(a, b) } -> std::same_as<typename F::Elem>;
    { f.neg(a) } -> std::same_as<typename F::Elem>;
    { f.inv(a) } -> std::same_as<typename F::Elem>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.eq(a, b) } -> std::same_as<bool>;
    { f.from_int(n) } -> std::same_as<typename F::Elem>;
    { f.from_decimal(s) } -> std::same_as<typename F::Elem>;
    { f.to_string(a) } -> std::same_as<std::string>;
    { f.characteristic() } -> std::same_as<long long>;
    { f == f } -> std::same_as<bool>;
};

class PrimeField {
public:
    using Elem = long long;  // canonical representative in [0, p)

    static constexpr long long kDefaultPrime = 32003;

    explicit PrimeField(long long p = kDefaultPrime) : p_(p) {
        if (p < 2 || !is_prime(p)) throw InputError("field characteristic must be prime, got " + std::to_string(p));
        if (p > (1LL << 31)) throw InputError("prime too large (must fit 31 bits)");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
    Elem sub(Elem a, Elem b) const { Elem s = a - b; return s < 0 ? s + p_ : s; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem inv(Elem a) const {
        if (a == 0) throw InputError("division by zero in F_p");
        // extended Euclid
        long long t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t; t = new_t; new_t = tmp;
            tmp = r - q * new_r; r = new_r; new_r = tmp;
        }
        return t < 0 ? t + p_ : t;
    }

    Elem from_int(long long n) const {
        long long v = n % p_;
        return v < 0 ? v + p_ : v;
    }

    Elem from_decimal(const std::string& digits) const {
        Elem v = 0;
        for (char c : digits) {
            if (c < '0' || c > '9') throw InputError("bad decimal literal: " + digits);
            v = add(mul(v, 10 % p_), from_int(c - '0'));
        }
        return v;
    }

    std::string to_string(Elem a) const { return std::to_string(a); }
    long long characteristic() const { return p_; }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    long long p_;

    static bool is_prime(long long n) {
        if (n < 2) return false;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
};

class RationalField {
public:
    using Elem = mpq_class;

    Elem zero() const { return mpq_class(0); }
    Elem one() const { return mpq_class(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem inv(const Elem& a) const {
        if (a == 0) throw InputError("division by zero in Q");
        return 1 / a;
    }

    Elem from_int(long long n) const { return mpq_class(static_cast<long>(n)); }

    Elem from_decimal(const std::string& digits) const {
        mpz_class z(digits, 10);
        return mpq_class(z);
    }

    std::string to_string(const Elem& a) const {
        mpq_class c(a);
        c.canonicalize();
        return c.get_str();
    }

    long long characteristic() const { return 0; }

    bool operator==(const RationalField&) const { return true; }
};

static_assert(CoefficientField<PrimeField>);
static_assert(CoefficientField<RationalField>);

}  // namespace formring
