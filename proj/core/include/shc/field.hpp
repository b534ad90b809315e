#pragma once

// Ground fields for exact arithmetic. A field is a small value object that
// owns the arithmetic; elements are plain values of Field::Elem.

#include <gmpxx.h>

#include <array>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "shc/errors.hpp"

namespace shc {

/// Field of rational numbers backed by GMP.
class Rationals {
public:
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }
    Elem from_rational(const mpq_class& q) const { return q; }

    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const;

    /// acc += a * b
    void add_mul(Elem& acc, const Elem& a, const Elem& b) const { acc += a * b; }

    std::string format(const Elem& a) const;
    Elem parse(std::string_view text) const;
    std::string name() const { return "Q"; }

    bool operator==(const Rationals&) const = default;
};

/// Prime field Z/p with p < 2^31.
class PrimeField {
public:
    using Elem = std::uint32_t;

    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long v) const;
    Elem from_rational(const mpq_class& q) const;

    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }
    bool equal(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const
    {
        return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const;

    void add_mul(Elem& acc, Elem a, Elem b) const { acc = add(acc, mul(a, b)); }

    std::string format(Elem a) const { return std::to_string(a); }
    Elem parse(std::string_view text) const;
    std::string name() const { return "Fp(" + std::to_string(p_) + ")"; }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

template <class F>
concept Field = requires(const F& f, const typename F::Elem& a, typename F::Elem& acc) {
    { f.zero() } -> std::convertible_to<typename F::Elem>;
    { f.one() } -> std::convertible_to<typename F::Elem>;
    { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.inv(a) } -> std::convertible_to<typename F::Elem>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    f.add_mul(acc, a, a);
    { f.format(a) } -> std::convertible_to<std::string>;
};

bool is_prime(std::uint64_t n);

/// Primes tried in order when a modular computation needs a fallback.
inline constexpr std::array<std::uint32_t, 5> kDefaultPrimes = {101, 103, 107, 109, 113};

/// Parse "num/den", "num" or "-num/den" into an exact rational.
mpq_class parse_rational(std::string_view text);

/// Canonical "num/den" (or "num" when den = 1) rendering.
std::string format_rational(const mpq_class& q);

}  // namespace shc
