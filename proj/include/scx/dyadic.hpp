#pragma once

#include <compare>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "scx/error.hpp"

namespace scx {

/// Arbitrary-precision signed integer used for face counts, binomials and
/// dyadic numerators. Exact arithmetic only; nothing here ever rounds.
using BigInt = boost::multiprecision::cpp_int;

/// An exact dyadic rational numerator / 2^exponent.
///
/// Normal form: exponent is 0 when the numerator is 0, and otherwise the
/// fraction is fully reduced (odd numerator unless the value is an integer,
/// in which case the exponent is 0). The exponent is never negative.
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}

    Dyadic(long long n) : num_(n), exp_(0) {}  // NOLINT: implicit by design

    Dyadic(BigInt numerator, unsigned exponent) : num_(std::move(numerator)), exp_(exponent) {
        normalize();
    }

    static Dyadic zero() { return Dyadic(); }
    static Dyadic one() { return Dyadic(1); }

    const BigInt& numerator() const noexcept { return num_; }
    unsigned exponent() const noexcept { return exp_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return exp_ == 0; }

    int sign() const noexcept {
        if (num_ == 0) return 0;
        return num_ > 0 ? 1 : -1;
    }

    Dyadic operator-() const { return Dyadic(-num_, exp_); }

    Dyadic operator+(const Dyadic& o) const {
        const unsigned e = std::max(exp_, o.exp_);
        BigInt a = num_ * pow2(e - exp_);
        BigInt b = o.num_ * pow2(e - o.exp_);
        return Dyadic(a + b, e);
    }

    Dyadic operator-(const Dyadic& o) const { return *this + (-o); }

    /// Exact halving.
    Dyadic half() const { return Dyadic(num_, exp_ + 1); }

    /// Exact multiplication by 2^k, k >= 0.
    Dyadic times_pow2(unsigned k) const {
        if (k >= exp_) return Dyadic(num_ * pow2(k - exp_), 0);
        return Dyadic(num_, exp_ - k);
    }

    Dyadic times_int(const BigInt& m) const { return Dyadic(num_ * m, exp_); }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num_ == b.num_ && a.exp_ == b.exp_;
    }

    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
        const unsigned e = std::max(a.exp_, b.exp_);
        BigInt x = a.num_ * pow2(e - a.exp_);
        BigInt y = b.num_ * pow2(e - b.exp_);
        if (x < y) return std::strong_ordering::less;
        if (x > y) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "n/2^e", or plain "n" for integers.
    std::string to_fraction_string() const {
        if (exp_ == 0) return num_.str();
        return num_.str() + "/2^" + std::to_string(exp_);
    }

    /// Exact decimal expansion (a dyadic has a finite one: n/2^e = n*5^e / 10^e).
    std::string to_decimal_string() const {
        if (exp_ == 0) return num_.str();
        BigInt scaled = num_ * boost::multiprecision::pow(BigInt(5), exp_);
        const bool neg = scaled < 0;
        const BigInt magnitude = neg ? BigInt(-scaled) : scaled;
        std::string digits = magnitude.str();
        if (digits.size() <= exp_) digits.insert(0, exp_ + 1 - digits.size(), '0');
        digits.insert(digits.size() - exp_, ".");
        return (neg ? "-" : "") + digits;
    }

private:
    static BigInt pow2(unsigned k) {
        BigInt r = 1;
        r <<= k;
        return r;
    }

    void normalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && num_ % 2 == 0) {
            num_ /= 2;
            --exp_;
        }
    }

    BigInt num_;
    unsigned exp_;
};

}  // namespace scx
