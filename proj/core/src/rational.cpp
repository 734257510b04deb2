#include "fq/rational.hpp"

#include <cctype>

namespace fq {

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw InvalidInput("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        try {
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) throw InvalidInput("zero denominator in '" + text + "'");
            return Rational(num, den);
        } catch (const std::exception&) {
            throw InvalidInput("malformed rational '" + text + "'");
        }
    }

    auto dot = s.find('.');
    try {
        if (dot == std::string::npos) return Rational(BigInt(s));
        std::string head = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (frac.empty()) return Rational(BigInt(head.empty() ? "0" : head));
        bool neg = !head.empty() && head[0] == '-';
        if (neg) head = head.substr(1);
        if (head.empty()) head = "0";
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt value = BigInt(head) * scale + BigInt(frac);
        Rational q(value, scale);
        return neg ? -q : q;
    } catch (const std::exception&) {
        throw InvalidInput("malformed rational '" + text + "'");
    }
}

std::string rational_to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

BigInt isqrt_floor(const BigInt& v) {
    if (v < 0) throw InvalidInput("isqrt of negative value");
    if (v == 0) return 0;
    BigInt x = v, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + v / x) / 2;
    }
    return x;
}

bool exact_sqrt(const Rational& q, Rational* root) {
    if (q < 0) return false;
    BigInt n = numerator(q), d = denominator(q);
    BigInt rn = isqrt_floor(n), rd = isqrt_floor(d);
    if (rn * rn != n || rd * rd != d) return false;
    if (root) *root = Rational(rn, rd);
    return true;
}

Rational sqrt_lower_bound(const Rational& q, std::int64_t denom) {
    if (q < 0) throw InvalidInput("sqrt of negative value");
    Rational exact;
    if (exact_sqrt(q, &exact)) return exact;
    BigInt d(denom);
    // floor(sqrt(q * d^2)) / d <= sqrt(q), within 1/d.
    BigInt scaled_num = numerator(q) * d * d;
    BigInt den = denominator(q);
    // floor(sqrt(scaled_num / den)) = floor(sqrt(scaled_num * den) / den)
    BigInt r = isqrt_floor(scaled_num * den) / den;
    return Rational(r, d);
}

std::int64_t ceil_sqrt(const Rational& q) {
    if (q < 0) throw InvalidInput("ceil_sqrt of negative value");
    if (q == 0) return 0;
    BigInt n = numerator(q), d = denominator(q);
    BigInt lo = isqrt_floor(n / d);
    while (lo * lo * d < n) ++lo;
    return lo.convert_to<std::int64_t>();
}

} // namespace fq
