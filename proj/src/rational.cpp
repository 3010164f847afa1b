#include "cch/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace cch {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < -std::numeric_limits<std::int64_t>::max()) {
        throw std::overflow_error("rational overflow");
    }
    return static_cast<std::int64_t>(v);
}

Wide wgcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make(Wide n, Wide d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Wide g = wgcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(narrow(n), narrow(d));
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    Wide wn = n, wd = d;
    if (wd < 0) {
        wn = -wn;
        wd = -wd;
    }
    Wide g = wgcd(wn, wd);
    if (g > 1) {
        wn /= g;
        wd /= g;
    }
    num_ = narrow(wn);
    den_ = narrow(wd);
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational& Rational::operator+=(const Rational& o) {
    *this = make(Wide(num_) * o.den_ + Wide(o.num_) * den_, Wide(den_) * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    *this = make(Wide(num_) * o.den_ - Wide(o.num_) * den_, Wide(den_) * o.den_);
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    *this = make(Wide(num_) * o.num_, Wide(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    *this = make(Wide(num_) * o.den_, Wide(den_) * o.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Wide l = Wide(a.num_) * b.den_;
    Wide r = Wide(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    std::int64_t n = parse_int(text.substr(0, slash), text);
    std::int64_t d = parse_int(text.substr(slash + 1), text);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace cch
