#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace lctkit {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number extended by +infinity.
///
/// Finite values are kept reduced with a positive denominator. The order is
/// the rational order with +inf above every finite value. Arithmetic is only
/// defined where the result is unambiguous; inf - inf and 0 * inf throw.
class ExtRational {
public:
    ExtRational() = default;
    ExtRational(std::int64_t value) : num_(value) {} // NOLINT(implicit)
    ExtRational(BigInt num, BigInt den);

    static ExtRational infinity();

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    /// "p/q", "p" when q = 1, or "inf".
    std::string str() const;
    /// Same as str() but renders infinity as the unicode glyph.
    std::string pretty() const;

    /// Accepts "p/q", "p", "-p/q", "inf", "+inf", "infinity".
    static ExtRational parse(std::string_view text);

    friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
    friend ExtRational operator-(const ExtRational& a, const ExtRational& b);
    friend ExtRational operator*(const ExtRational& a, const ExtRational& b);
    friend ExtRational operator/(const ExtRational& a, const ExtRational& b);
    ExtRational operator-() const;

    friend bool operator==(const ExtRational& a, const ExtRational& b);
    friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

private:
    void normalize();

    BigInt num_ = 0;
    BigInt den_ = 1;
    bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtRational& q);

/// Exact a/b for integers, b != 0.
ExtRational ratio(std::int64_t a, std::int64_t b);

} // namespace lctkit
