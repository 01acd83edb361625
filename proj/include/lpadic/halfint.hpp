#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace lpadic {

// Element of (1/2)Z, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(long v) : twice_(2 * v) {}  // NOLINT(google-explicit-constructor)

    static constexpr HalfInt from_twice(long t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }

    constexpr long twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    // Only meaningful when is_integer().
    constexpr long as_integer() const { return twice_ / 2; }
    long floor() const { return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2); }

    mpq_class to_mpq() const {
        mpq_class q(twice_, 2);
        q.canonicalize();
        return q;
    }

    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt operator*(long k) const { return from_twice(twice_ * k); }
    HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
    HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

    constexpr auto operator<=>(const HalfInt&) const = default;

    // "r" or "r/2".
    std::string str() const;
    static HalfInt parse(const std::string& s);

private:
    long twice_ = 0;
};

}  // namespace lpadic
