#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace virasoro {

using BigInt = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(int v) : value_(v) {}
    Rat(long v) : value_(v) {}
    Rat(long long v) : value_(static_cast<long>(v)) {}
    Rat(const BigInt& v) : value_(v) {}
    Rat(const BigInt& num, const BigInt& den);
    explicit Rat(const mpq_class& v) : value_(v) { value_.canonicalize(); }

    // Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
    static Rat parse(std::string_view text);

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    // Largest integer <= this.
    BigInt floor() const;
    // this - floor(this), in [0, 1).
    Rat frac() const { return *this - Rat(floor()); }

    // Requires is_integer() and a value that fits in int64.
    std::int64_t to_int64() const;

    Rat operator-() const { return Rat(mpq_class(-value_)); }
    Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
    Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
    Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // "p" or "p/q", sign carried by the numerator.
    std::string str() const;

private:
    mpq_class value_;
};

Rat pow(const Rat& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace virasoro
