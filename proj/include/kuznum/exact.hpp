#pragma once

// Exact scalars: arbitrary-precision integers and rationals (GMP backed) and
// real quadratic numbers a + b*sqrt(m).

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace kuznum {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Raised when an operation's mathematical precondition fails.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised for malformed textual input (tokens, config values).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }
inline int sign(const Rational& q) { return q.sign(); }
inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Parses "p", "-p", "p/q" (q != 0). Whitespace around the token is ignored.
Rational parse_rational(std::string_view text);

/// "p/q" reduced; integers print without "/1".
std::string to_string(const Rational& q);
/// Always "p/q", integers as "p/1".
std::string to_canonical_string(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
/// gcd of two rationals: the largest rational g with a/g, b/g integers.
Rational rational_gcd(const Rational& a, const Rational& b);

Integer floor_div(const Integer& a, const Integer& b);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);
/// true iff q = r*r for some rational r; r is written to root.
bool rational_sqrt(const Rational& q, Rational& root);

Rational pow(const Rational& base, int exponent);
Integer factorial(int n);

/// Real quadratic number a + b*sqrt(m), m a squarefree positive integer or
/// m = 0 for rationals. Construction from an arbitrary rational radicand
/// extracts square factors, so two values share a radicand iff their field
/// representations agree.
class QuadNumber {
public:
    QuadNumber() = default;
    QuadNumber(const Rational& a);  // NOLINT(google-explicit-constructor)
    QuadNumber(int a) : QuadNumber(Rational(a)) {}  // NOLINT
    /// a + b*sqrt(F), F >= 0 rational.
    QuadNumber(const Rational& a, const Rational& b, const Rational& F);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    /// Squarefree radicand; 0 when the value is rational.
    const Integer& radicand() const { return m_; }
    bool is_rational() const { return b_ == 0; }

    int sign() const;

    QuadNumber operator-() const;
    /// Arithmetic requires matching radicands (or a rational operand).
    friend QuadNumber operator+(const QuadNumber& x, const QuadNumber& y);
    friend QuadNumber operator-(const QuadNumber& x, const QuadNumber& y);
    friend QuadNumber operator*(const QuadNumber& x, const QuadNumber& y);
    friend QuadNumber operator*(const QuadNumber& x, const Rational& s);

    friend bool operator==(const QuadNumber& x, const QuadNumber& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.m_ == y.m_;
    }

    /// Human form: "a", "a + b*sqrt(m)", "-sqrt(m)".
    std::string to_string() const;

private:
    static QuadNumber make(Rational a, Rational b, Integer m);
    void normalize();

    Rational a_{0};
    Rational b_{0};
    Integer m_{0};
};

/// Exact order of two quadratic numbers over the same radicand. A rational
/// operand is compatible with any radicand. Distinct irrational radicands
/// raise DomainError("incomparable radicands").
std::strong_ordering quad_compare(const QuadNumber& x, const QuadNumber& y);

/// Exact order for arbitrary radicands (used where numbers from different
/// quadratic fields must be sorted, e.g. interval endpoints).
std::strong_ordering compare_any(const QuadNumber& x, const QuadNumber& y);

/// Rational lower/upper bounds with upper - lower <= 10^-digits.
std::pair<Rational, Rational> enclose(const QuadNumber& x, int digits);

/// A rational strictly between x < y.
Rational rational_between(const QuadNumber& x, const QuadNumber& y);

/// floor of an arbitrary quadratic number.
Integer floor(const QuadNumber& x);

/// Decimal string truncated toward zero to the given number of places.
std::string fixed_truncated(const Rational& q, int places);
/// Decimal string of sqrt(q) (q >= 0) truncated to the given number of places.
std::string fixed_truncated_sqrt(const Rational& q, int places);

}  // namespace kuznum
