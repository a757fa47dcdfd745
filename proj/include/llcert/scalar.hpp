#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "llcert/error.hpp"

namespace llcert {

// Exact arithmetic mode. All probability inputs are parsed into rationals
// first; the float mode converts at the engine boundary.
using Rational = mpq_class;

inline constexpr double kDefaultEpsilon = 1e-12;

enum class Sign { Negative, Zero, Positive };

enum class NumericMode { Exact, Float };

// Mode plus the tolerance applied wherever a float comparison decides an
// outcome. Exact mode ignores epsilon.
struct NumericPolicy {
    NumericMode mode = NumericMode::Exact;
    double epsilon = kDefaultEpsilon;
};

Sign sign_of(const Rational& x);

// Zero iff |x| <= epsilon. Throws on non-finite x.
Sign sign_of(double x, double epsilon);

inline Sign sign_of(const Rational& x, const NumericPolicy&) { return sign_of(x); }
inline Sign sign_of(double x, const NumericPolicy& policy) { return sign_of(x, policy.epsilon); }

// Accepts "a/b", integers, and decimal strings with optional exponent
// ("1/3", "-2", "0.25", "2.5e-3"). Decimal forms convert exactly, so user
// probabilities never inherit binary rounding.
Rational parse_rational(std::string_view text);

// Canonical "a/b", or plain "a" when the denominator is 1.
std::string fraction_str(const Rational& x);

// Canonicalized num/den; the raw two-integer mpq constructor does not reduce.
Rational make_rational(long num, long den);

Rational rational_pow(const Rational& base, unsigned long exp);

// Closest continued-fraction convergent to x with denominator <= max_den.
Rational rationalize(double x, unsigned long max_den = 1000000000ul);

// Uniform surface over the two scalar modes. Engines are templates over
// Num in {Rational, double}; the epsilon argument only participates in the
// double specialization.
template <class Num>
struct NumOps;

template <>
struct NumOps<Rational> {
    static constexpr bool is_exact = true;
    static Rational from(const Rational& r) { return r; }
    static Sign sign(const Rational& x, double) { return sign_of(x); }
    static bool eq(const Rational& a, const Rational& b, double) { return a == b; }
    static bool ge(const Rational& a, const Rational& b, double) { return a >= b; }
    static double to_double(const Rational& x) { return x.get_d(); }
};

template <>
struct NumOps<double> {
    static constexpr bool is_exact = false;
    static double from(const Rational& r) { return r.get_d(); }
    static Sign sign(double x, double epsilon) { return sign_of(x, epsilon); }
    static bool eq(double a, double b, double epsilon) { return std::fabs(a - b) <= epsilon; }
    static bool ge(double a, double b, double epsilon) { return a >= b - epsilon; }
    static double to_double(double x) { return x; }
};

} // namespace llcert
