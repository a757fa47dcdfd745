#include "llcert/scalar.hpp"

#include <cctype>
#include <cstdlib>

namespace llcert {

Sign sign_of(const Rational& x) {
    const int s = sgn(x);
    if (s < 0) return Sign::Negative;
    if (s > 0) return Sign::Positive;
    return Sign::Zero;
}

Sign sign_of(double x, double epsilon) {
    if (!std::isfinite(x)) throw Error("non-finite value in sign decision");
    if (std::fabs(x) <= epsilon) return Sign::Zero;
    return x < 0 ? Sign::Negative : Sign::Positive;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    if (!is_integer_token(s))
        throw Error("malformed number '" + std::string(whole) + "'");
    return mpz_class(std::string(s), 10);
}

mpz_class pow10z(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw Error("empty number");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(trim(s.substr(0, slash)), s);
        mpz_class den = parse_integer(trim(s.substr(slash + 1)), s);
        if (den == 0) throw Error("zero denominator in '" + std::string(s) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    // [sign] digits [. digits] [e/E [sign] digits], converted exactly.
    std::string_view mant = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mant = trim(s.substr(0, e));
        const std::string_view etok = trim(s.substr(e + 1));
        if (!is_integer_token(etok) || etok.size() > 6)
            throw Error("malformed exponent in '" + std::string(s) + "'");
        exponent = std::strtol(std::string(etok).c_str(), nullptr, 10);
    }

    bool negative = false;
    if (!mant.empty() && (mant.front() == '+' || mant.front() == '-')) {
        negative = mant.front() == '-';
        mant.remove_prefix(1);
    }

    std::string digits;
    long frac_len = 0;
    bool seen_dot = false;
    for (char c : mant) {
        if (c == '.') {
            if (seen_dot) throw Error("malformed number '" + std::string(s) + "'");
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_dot) ++frac_len;
        } else {
            throw Error("malformed number '" + std::string(s) + "'");
        }
    }
    if (digits.empty()) throw Error("malformed number '" + std::string(s) + "'");

    mpz_class num(digits, 10);
    if (negative) num = -num;

    const long scale = frac_len - exponent; // value = num / 10^scale
    Rational r;
    if (scale > 0) {
        r = Rational(num, pow10z(static_cast<unsigned long>(scale)));
    } else {
        r = Rational(num * pow10z(static_cast<unsigned long>(-scale)));
    }
    r.canonicalize();
    return r;
}

std::string fraction_str(const Rational& x) {
    return x.get_str();
}

Rational make_rational(long num, long den) {
    if (den == 0) throw Error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rational_pow(const Rational& base, unsigned long exp) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exp);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rationalize(double x, unsigned long max_den) {
    if (!std::isfinite(x)) throw Error("cannot rationalize a non-finite value");
    if (max_den == 0) throw Error("rationalize: max_den must be positive");

    const bool negative = x < 0;
    Rational target(std::fabs(x)); // exact binary value of the double

    // Continued-fraction convergents until the denominator cap.
    mpz_class num = target.get_num(), den = target.get_den();
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    while (den != 0) {
        mpz_class a = num / den;
        mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > static_cast<unsigned long>(max_den)) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        mpz_class rem = num - a * den;
        num = den;
        den = rem;
    }
    Rational r(p1, q1);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

} // namespace llcert
