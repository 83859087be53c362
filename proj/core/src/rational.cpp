#include "amp/rational.hpp"

#include <cctype>

namespace amp {

void Rational::reduce() {
    if (den_ == 0) throw DivisionByZeroValue();
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::to_string() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt pow10(size_t k) {
    BigInt p = 1;
    for (size_t i = 0; i < k; ++i) p *= 10;
    return p;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw NumberParseError(std::string(text));

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view p = s.substr(0, slash);
        std::string_view q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) throw NumberParseError(std::string(text));
        BigInt den{std::string(q)};
        if (den == 0) throw NumberParseError(std::string(text));
        value = Rational(BigInt(std::string(p)), den);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) throw NumberParseError(std::string(text));
        if (!ip.empty() && !all_digits(ip)) throw NumberParseError(std::string(text));
        if (!fp.empty() && !all_digits(fp)) throw NumberParseError(std::string(text));
        BigInt whole = ip.empty() ? BigInt(0) : BigInt(std::string(ip));
        BigInt frac = fp.empty() ? BigInt(0) : BigInt(std::string(fp));
        BigInt scale = pow10(fp.size());
        value = Rational(whole * scale + frac, scale);
    } else {
        if (!all_digits(s)) throw NumberParseError(std::string(text));
        value = Rational(BigInt(std::string(s)));
    }
    return negative ? -value : value;
}

}  // namespace amp
