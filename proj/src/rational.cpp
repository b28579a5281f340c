#include "recess/rational.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "recess/error.hpp"

namespace recess {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

Integer pow10(long e)
{
    Integer r = 1;
    for (long i = 0; i < e; ++i) r *= 10;
    return r;
}

Integer decimal_integer(std::string_view digits)
{
    // A leading zero would make the string constructor read octal.
    digits.remove_prefix(std::min(digits.find_first_not_of('0'), digits.size()));
    return digits.empty() ? Integer(0) : Integer(std::string(digits));
}

Rational parse_decimal(std::string_view text, std::string_view original)
{
    auto bad = [&] { return Error(ErrorCode::InvalidInput, "malformed number '" + std::string(original) + "'"); };
    bool negative = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        negative = text[0] == '-';
        text.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = text.substr(e + 1);
        text = text.substr(0, e);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text[0] == '+' || exp_text[0] == '-')) {
            exp_negative = exp_text[0] == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6) throw bad();
        exponent = std::stol(std::string(exp_text));
        if (exp_negative) exponent = -exponent;
    }
    std::string_view int_part = text;
    std::string_view frac_part;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        int_part = text.substr(0, dot);
        frac_part = text.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw bad();
    if (!int_part.empty() && !all_digits(int_part)) throw bad();
    if (!frac_part.empty() && !all_digits(frac_part)) throw bad();

    std::string digits = std::string(int_part) + std::string(frac_part);
    Integer mantissa = decimal_integer(digits);
    exponent -= static_cast<long>(frac_part.size());
    Rational value = exponent >= 0 ? Rational(mantissa * pow10(exponent))
                                   : Rational(mantissa, pow10(-exponent));
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view original = text;
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw Error(ErrorCode::InvalidInput, "empty number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        bool negative = false;
        if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
            negative = num[0] == '-';
            num.remove_prefix(1);
        }
        if (!all_digits(num) || !all_digits(den))
            throw Error(ErrorCode::InvalidInput, "malformed fraction '" + std::string(original) + "'");
        Integer d = decimal_integer(den);
        if (d == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + std::string(original) + "'");
        Integer n = decimal_integer(num);
        Rational q(n, d);
        return negative ? Rational(-q) : q;
    }
    return parse_decimal(text, original);
}

std::string to_fraction_string(const Rational& q)
{
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::string to_decimal_string(double v)
{
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string to_decimal_string(const Rational& q)
{
    if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
    return to_decimal_string(to_double(q));
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational from_double(double v)
{
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidInput, "non-finite value cannot be made rational");
    return Rational(v);
}

int sign(const Rational& q) { return q.sign(); }

Rational abs(const Rational& q) { return q.sign() < 0 ? Rational(-q) : q; }

std::optional<Rational> exact_sqrt(const Rational& q)
{
    if (q.sign() < 0) return std::nullopt;
    const Integer n = boost::multiprecision::numerator(q);
    const Integer d = boost::multiprecision::denominator(q);
    Integer rn = boost::multiprecision::sqrt(n);
    Integer rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Rational(rn, rd);
}

namespace {

// floor(sqrt(q) * 10^digits) together with the scale denominator.
std::pair<Integer, Integer> scaled_root(const Rational& q, unsigned digits)
{
    const Integer n = boost::multiprecision::numerator(q);
    const Integer d = boost::multiprecision::denominator(q);
    const Integer scale = pow10(digits);
    // sqrt(n/d) = sqrt(n*d)/d
    const Integer radicand = n * d * scale * scale;
    Integer root = boost::multiprecision::sqrt(radicand);
    return {root, d * scale};
}

}  // namespace

Rational sqrt_lower(const Rational& q, unsigned digits)
{
    if (q.sign() < 0) throw Error(ErrorCode::InvalidInput, "square root of a negative value");
    if (auto r = exact_sqrt(q)) return *r;
    auto [root, den] = scaled_root(q, digits);
    return Rational(root, den);
}

Rational sqrt_upper(const Rational& q, unsigned digits)
{
    if (q.sign() < 0) throw Error(ErrorCode::InvalidInput, "square root of a negative value");
    if (auto r = exact_sqrt(q)) return *r;
    auto [root, den] = scaled_root(q, digits);
    return Rational(Integer(root + 1), den);
}

Rational round_to_denominator(const Rational& q, const Integer& denominator)
{
    Rational scaled = q * denominator;
    const Integer n = boost::multiprecision::numerator(scaled);
    const Integer d = boost::multiprecision::denominator(scaled);
    const Integer magnitude = n < 0 ? Integer(-n) : n;
    Integer rounded = (2 * magnitude + d) / (2 * d);
    if (n < 0) rounded = -rounded;
    return Rational(rounded, denominator);
}

}  // namespace recess
