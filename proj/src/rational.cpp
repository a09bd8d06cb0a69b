#include "djm/rational.hpp"

#include <charconv>
#include <functional>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace djm {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;
using BigInt = boost::multiprecision::cpp_int;

constexpr i128 kI64Max = std::numeric_limits<std::int64_t>::max();
constexpr i128 kI64Min = std::numeric_limits<std::int64_t>::min();

u128 gcd_u128(u128 a, u128 b)
{
    if (a == 0) return b;
    if (b == 0) return a;
    auto ctz = [](u128 x) {
        auto lo = static_cast<std::uint64_t>(x);
        if (lo != 0) return __builtin_ctzll(lo);
        return 64 + __builtin_ctzll(static_cast<std::uint64_t>(x >> 64));
    };
    int shift = ctz(a | b);
    a >>= ctz(a);
    do {
        b >>= ctz(b);
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b)
{
    if (a == 0) return b;
    if (b == 0) return a;
    int shift = __builtin_ctzll(a | b);
    a >>= __builtin_ctzll(a);
    do {
        b >>= __builtin_ctzll(b);
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

u128 magnitude(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

BigInt to_bigint(i128 v)
{
    u128 m = magnitude(v);
    BigInt r = static_cast<std::uint64_t>(m >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(m);
    return v < 0 ? BigInt(-r) : r;
}

bool fits_i64(const BigInt& v)
{
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    return v >= lo && v <= hi;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    *this = from_i128(num, den);
}

Rational::Rational(const Big& value) { *this = from_big(value); }

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<Big>(*other.big_) : nullptr)
{
}

Rational& Rational::operator=(const Rational& other)
{
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<Big>(*other.big_) : nullptr;
    }
    return *this;
}

Rational Rational::from_i128(i128 num, i128 den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        // -(-2^127) overflows; route the extreme through big arithmetic.
        if (num == std::numeric_limits<i128>::min() || den == std::numeric_limits<i128>::min())
            return from_big(Big(to_bigint(num), to_bigint(den)));
        num = -num;
        den = -den;
    }
    u128 mn = magnitude(num);
    u128 g = (mn >> 64) == 0 && (u128(den) >> 64) == 0
                 ? gcd_u64(static_cast<std::uint64_t>(mn), static_cast<std::uint64_t>(den))
                 : gcd_u128(mn, u128(den));
    if (g > 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    if (num >= kI64Min && num <= kI64Max && den <= kI64Max) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }
    Rational r;
    r.big_ = std::make_unique<Big>(to_bigint(num), to_bigint(den));
    return r;
}

Rational Rational::from_big(Big value)
{
    const BigInt& n = boost::multiprecision::numerator(value);
    const BigInt& d = boost::multiprecision::denominator(value);
    Rational r;
    if (fits_i64(n) && fits_i64(d)) {
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
    } else {
        r.big_ = std::make_unique<Big>(std::move(value));
    }
    return r;
}

Rational::Big Rational::to_big() const
{
    if (big_) return *big_;
    return Big(BigInt(num_), BigInt(den_));
}

double Rational::to_double() const
{
    if (big_) return big_->convert_to<double>();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

bool Rational::is_integer() const
{
    if (big_) return boost::multiprecision::denominator(*big_) == 1;
    return den_ == 1;
}

int Rational::big_sign() const { return big_->sign(); }

std::size_t Rational::hash() const
{
    if (big_) return std::hash<std::string>{}(to_string());
    std::uint64_t h = static_cast<std::uint64_t>(num_) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(den_) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view ns = text.substr(0, slash);
    std::string_view ds = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    auto valid_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t k = (s[0] == '-') ? 1 : 0;
        if (k == s.size()) return false;
        for (; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') return false;
        return true;
    };
    if (!valid_int(ns) || (slash != std::string_view::npos && (!valid_int(ds) || ds[0] == '-')))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

    std::int64_t n = 0;
    std::int64_t d = 1;
    auto rn = std::from_chars(ns.data(), ns.data() + ns.size(), n);
    bool small = rn.ec == std::errc{};
    if (small && slash != std::string_view::npos) {
        auto rd = std::from_chars(ds.data(), ds.data() + ds.size(), d);
        small = rd.ec == std::errc{};
    }
    if (small) {
        if (d == 0) throw std::invalid_argument("rational with zero denominator");
        return from_i128(n, d);
    }
    BigInt bn{std::string(ns)};
    BigInt bd = slash == std::string_view::npos ? BigInt(1) : BigInt(std::string(ds));
    if (bd == 0) throw std::invalid_argument("rational with zero denominator");
    return from_big(Big(bn, bd));
}

std::string Rational::to_string() const
{
    if (big_) {
        const BigInt& n = boost::multiprecision::numerator(*big_);
        const BigInt& d = boost::multiprecision::denominator(*big_);
        return d == 1 ? n.str() : n.str() + "/" + d.str();
    }
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const
{
    if (big_) return from_big(-*big_);
    return from_i128(-i128(num_), den_);
}

Rational operator+(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_) return Rational::from_big(a.to_big() + b.to_big());
    if (a.den_ == 1 && b.den_ == 1) return Rational::from_i128(i128(a.num_) + b.num_, 1);
    return Rational::from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_) return Rational::from_big(a.to_big() - b.to_big());
    if (a.den_ == 1 && b.den_ == 1) return Rational::from_i128(i128(a.num_) - b.num_, 1);
    return Rational::from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_) return Rational::from_big(a.to_big() * b.to_big());
    return Rational::from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.sign() == 0) throw std::domain_error("rational division by zero");
    if (a.big_ || b.big_) return Rational::from_big(a.to_big() / b.to_big());
    return Rational::from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

bool Rational::equal_slow(const Rational& a, const Rational& b)
{
    if (!a.big_ || !b.big_) return false;  // canonical form
    return *a.big_ == *b.big_;
}

std::strong_ordering Rational::compare_slow(const Rational& a, const Rational& b)
{
    Big x = a.to_big();
    Big y = b.to_big();
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace djm
