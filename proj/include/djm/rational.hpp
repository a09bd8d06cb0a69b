#pragma once

// Exact rational numbers.
//
// Values that fit a reduced int64 fraction are stored inline and combined
// with 128-bit intermediates; anything larger spills to a heap-allocated
// boost::multiprecision rational. The representation is canonical (a value
// is big only when it does not fit the small form), so equality and
// hashing never need to look across representations.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace djm {

class Rational {
public:
    using Big = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by intent
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const Big& value);

    Rational(const Rational& other);
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    // Accepts "p" or "p/q" with q != 0; the result is reduced.
    static Rational parse(std::string_view text);
    std::string to_string() const;

    bool is_small() const { return !big_; }
    bool is_integer() const;
    // Inline numerator/denominator; only meaningful when is_small().
    std::int64_t small_num() const { return num_; }
    std::int64_t small_den() const { return den_; }
    Big to_big() const;
    // Nearest double; for display only.
    double to_double() const;

    int sign() const { return big_ ? big_sign() : (num_ > 0) - (num_ < 0); }
    std::size_t hash() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        return equal_slow(a, b);
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) {
            if (a.den_ == b.den_) return a.num_ <=> b.num_;
            return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
        }
        return compare_slow(a, b);
    }

    // Builds num/den from 128-bit parts, reducing and spilling as needed.
    static Rational from_i128(__int128 num, __int128 den);

private:
    static Rational from_big(Big value);
    int big_sign() const;
    static bool equal_slow(const Rational& a, const Rational& b);
    static std::strong_ordering compare_slow(const Rational& a, const Rational& b);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<Big> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace djm
