#pragma once

// Exact scalar fields: GF(p) for a prime p < 2^31, and the rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>

#include "relcr/errors.hpp"

namespace relcr {

/// Element of GF(p). Carries its modulus so that operators need no context.
class Fp {
public:
    Fp() = default;
    Fp(std::int64_t v, std::uint32_t p) : p_(p)
    {
        auto r = v % static_cast<std::int64_t>(p);
        v_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }

    std::uint32_t value() const noexcept { return v_; }
    std::uint32_t modulus() const noexcept { return p_; }

    friend Fp operator+(Fp a, Fp b) noexcept
    {
        std::uint64_t s = std::uint64_t(a.v_) + b.v_;
        if (s >= a.p_) s -= a.p_;
        return raw(static_cast<std::uint32_t>(s), a.p_);
    }
    friend Fp operator-(Fp a, Fp b) noexcept
    {
        return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + (a.p_ - b.v_), a.p_);
    }
    friend Fp operator*(Fp a, Fp b) noexcept
    {
        return raw(static_cast<std::uint32_t>(std::uint64_t(a.v_) * b.v_ % a.p_), a.p_);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const noexcept { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp& operator+=(Fp b) noexcept { return *this = *this + b; }
    Fp& operator-=(Fp b) noexcept { return *this = *this - b; }
    Fp& operator*=(Fp b) noexcept { return *this = *this * b; }
    friend bool operator==(Fp a, Fp b) noexcept { return a.v_ == b.v_; }

    Fp inverse() const
    {
        if (v_ == 0) throw Error("division by zero in GF(p)");
        // extended Euclid on (v, p)
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        return Fp(x0, p_);
    }

private:
    static Fp raw(std::uint32_t v, std::uint32_t p) noexcept
    {
        Fp r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 2;
};

// Expression templates off: `auto x = a * b` must yield a value, not a proxy.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// Runtime description of a field, used for I/O and reports.
struct FieldSpec {
    enum class Kind { Prime, Rationals };
    Kind kind = Kind::Rationals;
    std::uint32_t p = 0;

    std::uint32_t characteristic() const noexcept { return kind == Kind::Prime ? p : 0; }
    std::string name() const { return kind == Kind::Prime ? "GF(" + std::to_string(p) + ")" : "Q"; }
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

class PrimeField {
public:
    using value_type = Fp;

    explicit PrimeField(std::uint32_t p) : p_(p)
    {
        if (p >= (1u << 31) || !is_prime(p))
            throw InvalidInput("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
    }

    Fp zero() const noexcept { return Fp(0, p_); }
    Fp one() const noexcept { return Fp(1, p_); }
    Fp from_int(std::int64_t v) const { return Fp(v, p_); }
    Fp from_fraction(const BigInt& num, const BigInt& den) const
    {
        auto reduce = [this](const BigInt& x) {
            BigInt r = x % p_;
            if (r < 0) r += p_;
            return Fp(static_cast<std::int64_t>(r), p_);
        };
        Fp d = reduce(den);
        if (d == zero()) throw InvalidInput("denominator vanishes in " + spec().name());
        return reduce(num) / d;
    }

    bool is_zero(Fp a) const noexcept { return a.value() == 0; }
    std::uint32_t characteristic() const noexcept { return p_; }
    std::optional<std::uint64_t> order() const noexcept { return p_; }
    /// The k-th element in the canonical order 0, 1, ..., p-1.
    Fp element(std::uint64_t k) const { return Fp(static_cast<std::int64_t>(k), p_); }
    std::strong_ordering compare(Fp a, Fp b) const noexcept { return a.value() <=> b.value(); }
    std::string to_string(Fp a) const { return std::to_string(a.value()); }
    FieldSpec spec() const noexcept { return {FieldSpec::Kind::Prime, p_}; }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

class RationalField {
public:
    using value_type = Rational;

    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational from_int(std::int64_t v) const { return Rational(v); }
    Rational from_fraction(const BigInt& num, const BigInt& den) const
    {
        if (den == 0) throw InvalidInput("zero denominator in rational literal");
        return Rational(num, den);
    }

    bool is_zero(const Rational& a) const { return a == 0; }
    std::uint32_t characteristic() const noexcept { return 0; }
    std::optional<std::uint64_t> order() const noexcept { return std::nullopt; }
    Rational element(std::uint64_t k) const { return Rational(static_cast<std::int64_t>(k)); }
    std::strong_ordering compare(const Rational& a, const Rational& b) const
    {
        if (a < b) return std::strong_ordering::less;
        if (b < a) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    std::string to_string(const Rational& a) const
    {
        if (boost::multiprecision::denominator(a) == 1) return boost::multiprecision::numerator(a).str();
        return boost::multiprecision::numerator(a).str() + "/" + boost::multiprecision::denominator(a).str();
    }
    FieldSpec spec() const noexcept { return {FieldSpec::Kind::Rationals, 0}; }

    friend bool operator==(const RationalField&, const RationalField&) = default;
};

template <class F>
concept ExactField = std::copy_constructible<F> && requires(const F f, typename F::value_type a, std::int64_t i) {
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.from_int(i) } -> std::same_as<typename F::value_type>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.characteristic() } -> std::convertible_to<std::uint32_t>;
    { f.spec() } -> std::same_as<FieldSpec>;
    { a + a } -> std::convertible_to<typename F::value_type>;
    { a * a } -> std::convertible_to<typename F::value_type>;
    { a / a } -> std::convertible_to<typename F::value_type>;
    { a == a } -> std::convertible_to<bool>;
};

template <class F>
concept FiniteField = ExactField<F> && std::same_as<F, PrimeField>;

} // namespace relcr
