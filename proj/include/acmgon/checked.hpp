#pragma once

// Overflow-checked 64-bit integer arithmetic. Genera and form values grow
// polynomially in the degree, so every formula in the library goes through
// `Checked` and fails hard instead of wrapping.

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "error.hpp"

namespace acm {

using Int = std::int64_t;

class Checked {
public:
    constexpr Checked() = default;
    constexpr Checked(Int v) : v_(v) {} // NOLINT(google-explicit-constructor)

    constexpr Int get() const noexcept { return v_; }

    friend Checked operator+(Checked a, Checked b) {
        Int r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) overflow("+");
        return r;
    }
    friend Checked operator-(Checked a, Checked b) {
        Int r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) overflow("-");
        return r;
    }
    friend Checked operator*(Checked a, Checked b) {
        Int r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) overflow("*");
        return r;
    }
    Checked operator-() const { return Checked{0} - *this; }

    Checked& operator+=(Checked o) { return *this = *this + o; }
    Checked& operator-=(Checked o) { return *this = *this - o; }
    Checked& operator*=(Checked o) { return *this = *this * o; }

    friend constexpr auto operator<=>(Checked, Checked) = default;
    friend constexpr bool operator==(Checked, Checked) = default;

private:
    [[noreturn]] static void overflow(const char* op) {
        throw Error(ErrorCode::Overflow, std::string("64-bit overflow in '") + op + "'");
    }

    Int v_ = 0;
};

inline Checked sq(Checked a) { return a * a; }

/// Exact rational with positive denominator, always in lowest terms.
class Rational {
public:
    Rational(Int num = 0, Int den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw Error(ErrorCode::NotIntegral, "zero denominator");
        if (den_ < 0) {
            num_ = (-Checked{num_}).get();
            den_ = (-Checked{den_}).get();
        }
        Int g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num() const noexcept { return num_; }
    Int den() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

    friend bool operator==(const Rational&, const Rational&) = default;

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    Int num_;
    Int den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace acm
