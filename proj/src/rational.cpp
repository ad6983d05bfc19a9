#include "bookx/rational.hpp"

#include <stdexcept>

#include "bookx/error.hpp"

namespace bookx {

namespace {

BigInt pow10(int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= 10;
    return r;
}

// x >= 10^e for x > 0
bool at_least_pow10(const Rational& x, int e) {
    const BigInt p = boost::multiprecision::numerator(x);
    const BigInt q = boost::multiprecision::denominator(x);
    if (e >= 0) return p >= q * pow10(e);
    return p * pow10(-e) >= q;
}

BigInt round_nonnegative(const Rational& s, Rounding mode) {
    BigInt fl = floor(s);
    if (mode == Rounding::Truncate) return fl;
    const Rational frac = s - Rational(fl);
    const Rational half(1, 2);
    if (frac > half) return fl + 1;
    if (frac == half && (fl % 2) != 0) return fl + 1;
    return fl;
}

}  // namespace

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    return Rational(num, den);
}

BigInt floor(const Rational& x) {
    const BigInt p = boost::multiprecision::numerator(x);
    const BigInt q = boost::multiprecision::denominator(x);
    BigInt r = p / q;  // truncates toward zero
    if (p < 0 && r * q != p) r -= 1;
    return r;
}

BigInt ceil(const Rational& x) { return -floor(-x); }

bool is_integer(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

std::int64_t to_int64(const Rational& x) {
    if (!is_integer(x)) throw std::domain_error("expected an integer, got " + to_string(x));
    return boost::multiprecision::numerator(x).convert_to<std::int64_t>();
}

std::string to_string(const Rational& x) {
    const BigInt q = boost::multiprecision::denominator(x);
    if (q == 1) return boost::multiprecision::numerator(x).str();
    return boost::multiprecision::numerator(x).str() + "/" + q.str();
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
        return make_rational(BigInt(std::string(text.substr(0, slash))),
                             BigInt(std::string(text.substr(slash + 1))));
    } catch (const std::runtime_error&) {
        throw InputError("malformed rational: " + std::string(text));
    }
}

std::string to_scientific(const Rational& x, int digits, Rounding mode) {
    if (digits < 1) throw InputError("need at least one significant digit");
    if (x == 0) return "0." + std::string(digits - 1, '0') + "e0";
    const bool negative = x < 0;
    const Rational a = negative ? Rational(-x) : x;

    int e = static_cast<int>(boost::multiprecision::numerator(a).str().size()) -
            static_cast<int>(boost::multiprecision::denominator(a).str().size());
    while (!at_least_pow10(a, e)) --e;
    while (at_least_pow10(a, e + 1)) ++e;

    const int shift = digits - 1 - e;
    Rational scaled = shift >= 0 ? a * Rational(pow10(shift)) : a / Rational(pow10(-shift));
    BigInt m = round_nonnegative(scaled, mode);
    if (m == pow10(digits)) {
        m /= 10;
        ++e;
    }
    std::string s = m.str();
    std::string out = negative ? "-" : "";
    out += s.substr(0, 1);
    if (digits > 1) out += "." + s.substr(1);
    out += "e" + std::to_string(e);
    return out;
}

std::string to_fixed(const Rational& x, int decimals, Rounding mode) {
    if (decimals < 0) throw InputError("negative decimal count");
    const bool negative = x < 0;
    const Rational a = negative ? Rational(-x) : x;
    const BigInt m = round_nonnegative(a * Rational(pow10(decimals)), mode);
    std::string s = m.str();
    if (static_cast<int>(s.size()) <= decimals) s.insert(0, decimals + 1 - s.size(), '0');
    std::string out = (negative && m != 0) ? "-" : "";
    out += s.substr(0, s.size() - decimals);
    if (decimals > 0) out += "." + s.substr(s.size() - decimals);
    return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt big_binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::uint64_t isqrt(std::uint64_t v) {
    std::uint64_t lo = 0, hi = std::min<std::uint64_t>(v, 4294967295ULL);
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (mid * mid <= v) lo = mid;
        else hi = mid - 1;
    }
    return lo;
}

}  // namespace bookx
