#include "lctkit/ext_rational.hpp"

#include "lctkit/errors.hpp"

#include <cctype>
#include <ostream>

namespace lctkit {

ExtRational::ExtRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_ == 0)
        throw InputError("zero denominator");
    normalize();
}

ExtRational ExtRational::infinity()
{
    ExtRational q;
    q.infinite_ = true;
    q.num_ = 1;
    q.den_ = 0;
    return q;
}

void ExtRational::normalize()
{
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string ExtRational::str() const
{
    if (infinite_)
        return "inf";
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

std::string ExtRational::pretty() const
{
    return infinite_ ? std::string("∞") : str();
}

namespace {

BigInt parse_int(std::string_view s, std::string_view whole)
{
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size())
        throw InputError("malformed rational '" + std::string(whole) + "'");
    BigInt v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw InputError("malformed rational '" + std::string(whole) + "'");
        v = v * 10 + (s[i] - '0');
    }
    return neg ? BigInt(-v) : v;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

ExtRational ExtRational::parse(std::string_view text)
{
    std::string_view s = trim(text);
    if (s == "inf" || s == "+inf" || s == "infinity" || s == "∞")
        return infinity();
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return ExtRational(parse_int(s, text), 1);
    return ExtRational(parse_int(s.substr(0, slash), text), parse_int(s.substr(slash + 1), text));
}

ExtRational operator+(const ExtRational& a, const ExtRational& b)
{
    if (a.infinite_ || b.infinite_)
        return ExtRational::infinity();
    return ExtRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ExtRational ExtRational::operator-() const
{
    if (infinite_)
        throw InputError("negative infinity is not representable");
    ExtRational q = *this;
    q.num_ = -q.num_;
    return q;
}

ExtRational operator-(const ExtRational& a, const ExtRational& b)
{
    if (b.infinite_)
        throw InputError("subtraction of infinity is undefined");
    return a + (-b);
}

ExtRational operator*(const ExtRational& a, const ExtRational& b)
{
    if (a.infinite_ || b.infinite_) {
        const ExtRational& other = a.infinite_ ? b : a;
        if (other.is_finite() && other.num_ <= 0)
            throw InputError("product of infinity with a non-positive value");
        return ExtRational::infinity();
    }
    return ExtRational(a.num_ * b.num_, a.den_ * b.den_);
}

ExtRational operator/(const ExtRational& a, const ExtRational& b)
{
    if (b.infinite_) {
        if (a.infinite_)
            throw InputError("inf / inf is undefined");
        return ExtRational(0);
    }
    if (b.num_ == 0)
        throw InputError("division by zero");
    if (a.infinite_) {
        if (b.num_ < 0)
            throw InputError("negative infinity is not representable");
        return ExtRational::infinity();
    }
    return ExtRational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const ExtRational& a, const ExtRational& b)
{
    if (a.infinite_ || b.infinite_)
        return a.infinite_ == b.infinite_;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b)
{
    if (a.infinite_ || b.infinite_) {
        if (a.infinite_ == b.infinite_)
            return std::strong_ordering::equal;
        return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ExtRational& q)
{
    return os << q.str();
}

ExtRational ratio(std::int64_t a, std::int64_t b)
{
    return ExtRational(BigInt(a), BigInt(b));
}

} // namespace lctkit
