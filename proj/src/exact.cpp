#include "kuznum/exact.hpp"

#include <algorithm>
#include <cctype>

namespace kuznum {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
    Integer value{std::string(s)};
    return negative ? Integer(-value) : value;
}

Integer pow10(int k) {
    Integer r = 1;
    for (int i = 0; i < k; ++i) r *= 10;
    return r;
}

// Largest square s^2 dividing n (n > 0) is split off: n = s^2 * rest.
void split_square(Integer n, Integer& s, Integer& rest) {
    s = 1;
    for (Integer p = 2; p * p <= n && p <= 1000000; ++p) {
        const Integer p2 = p * p;
        while (n % p2 == 0) {
            n /= p2;
            s *= p;
        }
    }
    // Cofactors beyond the trial bound are only folded when they are squares.
    const Integer r = isqrt(n);
    if (r * r == n) {
        s *= r;
        n = 1;
    }
    rest = n;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty rational");
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, whole));
    }
    const Integer num = parse_integer(text.substr(0, slash), whole);
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("malformed rational '" + std::string(whole) + "'");
    const Integer den(std::string{den_text});
    if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_canonical_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::abs(a / gcd(a, b) * b);
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return boost::multiprecision::abs(b);
    if (b == 0) return boost::multiprecision::abs(a);
    const Integer den = lcm(denominator(a), denominator(b));
    const Integer na = numerator(a) * (den / denominator(a));
    const Integer nb = numerator(b) * (den / denominator(b));
    return Rational(gcd(na, nb), den);
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Integer floor(const Rational& q) { return floor_div(numerator(q), denominator(q)); }

Integer ceil(const Rational& q) { return -floor(Rational(-q)); }

Integer isqrt(const Integer& n) {
    if (n < 0) throw DomainError("isqrt of negative number");
    return boost::multiprecision::sqrt(n);
}

bool rational_sqrt(const Rational& q, Rational& root) {
    if (q < 0) return false;
    const Integer p = numerator(q);
    const Integer d = denominator(q);
    const Integer rp = isqrt(p);
    const Integer rd = isqrt(d);
    if (rp * rp != p || rd * rd != d) return false;
    root = Rational(rp, rd);
    return true;
}

Rational pow(const Rational& base, int exponent) {
    Rational r = 1;
    const bool invert = exponent < 0;
    for (int i = 0; i < (invert ? -exponent : exponent); ++i) r *= base;
    return invert ? Rational(1 / r) : r;
}

Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// ---------------------------------------------------------------------------
// QuadNumber

QuadNumber::QuadNumber(const Rational& a) : a_(a) {}

QuadNumber::QuadNumber(const Rational& a, const Rational& b, const Rational& F) : a_(a), b_(b) {
    if (F < 0) throw DomainError("negative radicand");
    if (b_ == 0 || F == 0) {
        b_ = 0;
        return;
    }
    // sqrt(p/q) = sqrt(p*q)/q = (s/q) sqrt(m)
    Integer s;
    Integer m;
    split_square(numerator(F) * denominator(F), s, m);
    b_ *= Rational(s, denominator(F));
    m_ = m;
    normalize();
}

QuadNumber QuadNumber::make(Rational a, Rational b, Integer m) {
    QuadNumber x;
    x.a_ = std::move(a);
    x.b_ = std::move(b);
    x.m_ = std::move(m);
    x.normalize();
    return x;
}

void QuadNumber::normalize() {
    if (m_ == 1) {
        a_ += b_;
        b_ = 0;
    }
    if (b_ == 0) m_ = 0;
}

int QuadNumber::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * Rational(m_);
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    return 0;
}

QuadNumber QuadNumber::operator-() const { return make(-a_, -b_, m_); }

namespace {
const Integer& common_radicand(const QuadNumber& x, const QuadNumber& y) {
    if (x.is_rational()) return y.radicand();
    if (y.is_rational() || x.radicand() == y.radicand()) return x.radicand();
    throw DomainError("incomparable radicands");
}
}  // namespace

QuadNumber operator+(const QuadNumber& x, const QuadNumber& y) {
    const Integer m = common_radicand(x, y);
    return QuadNumber::make(x.a_ + y.a_, x.b_ + y.b_, m);
}

QuadNumber operator-(const QuadNumber& x, const QuadNumber& y) { return x + (-y); }

QuadNumber operator*(const QuadNumber& x, const QuadNumber& y) {
    const Integer m = common_radicand(x, y);
    return QuadNumber::make(x.a_ * y.a_ + x.b_ * y.b_ * Rational(m), x.a_ * y.b_ + x.b_ * y.a_, m);
}

QuadNumber operator*(const QuadNumber& x, const Rational& s) { return QuadNumber::make(x.a_ * s, x.b_ * s, x.m_); }

std::string QuadNumber::to_string() const {
    if (is_rational()) return kuznum::to_string(a_);
    std::string irr;
    const Rational mag = boost::multiprecision::abs(b_);
    if (mag != 1) irr = kuznum::to_string(mag) + "*";
    irr += "sqrt(" + m_.str() + ")";
    if (a_ == 0) return (b_ < 0 ? "-" : "") + irr;
    return kuznum::to_string(a_) + (b_ < 0 ? " - " : " + ") + irr;
}

std::strong_ordering quad_compare(const QuadNumber& x, const QuadNumber& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering compare_any(const QuadNumber& x, const QuadNumber& y) {
    if (x.is_rational() || y.is_rational() || x.radicand() == y.radicand()) return quad_compare(x, y);
    // x - y = P - Q with P = (x.a - y.a) + x.b sqrt(m1), Q = y.b sqrt(m2)
    const QuadNumber p(x.a() - y.a(), x.b(), Rational(x.radicand()));
    const int sp = p.sign();
    const int sq = y.b().sign();
    int s = 0;
    if (sp == 0) {
        s = -sq;
    } else if (sq == 0 || sp != sq) {
        s = sp;
    } else {
        // same sign: sign(P - Q) = sp * sign(P^2 - Q^2)
        const QuadNumber diff = p * p - QuadNumber(y.b() * y.b() * Rational(y.radicand()));
        s = sp * diff.sign();
    }
    return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::pair<Rational, Rational> enclose(const QuadNumber& x, int digits) {
    if (x.is_rational()) return {x.a(), x.a()};
    const Rational t = x.b() * x.b() * Rational(x.radicand());  // (b sqrt m)^2
    const Integer scale = pow10(digits);
    const Integer root = isqrt(numerator(t) * denominator(t) * scale * scale);
    const Rational unit(1, denominator(t) * scale);
    Rational lo = Rational(root) * unit;
    Rational hi = lo + unit;
    if (x.b() < 0) {
        std::swap(lo, hi);
        lo = -lo;
        hi = -hi;
    }
    return {x.a() + lo, x.a() + hi};
}

Rational rational_between(const QuadNumber& x, const QuadNumber& y) {
    if (compare_any(x, y) != std::strong_ordering::less) throw DomainError("rational_between needs x < y");
    for (int digits = 4;; digits *= 2) {
        const auto ex = enclose(x, digits);
        const auto ey = enclose(y, digits);
        if (ex.second < ey.first) return (ex.second + ey.first) / 2;
        if (x.is_rational() && y.is_rational()) return (x.a() + y.a()) / 2;
    }
}

Integer floor(const QuadNumber& x) {
    if (x.is_rational()) return floor(x.a());
    for (int digits = 4;; digits *= 2) {
        const auto [lo, hi] = enclose(x, digits);
        const Integer flo = floor(lo);
        if (flo == floor(hi)) return flo;
    }
}

std::string fixed_truncated(const Rational& q, int places) {
    const Integer scale = pow10(places);
    const Integer scaled = numerator(q) * scale / denominator(q);  // truncation toward zero
    const bool negative = scaled < 0;
    const Integer mag = negative ? Integer(-scaled) : scaled;
    std::string whole = Integer(mag / scale).str();
    std::string frac = Integer(mag % scale).str();
    frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
    return (negative ? "-" : "") + whole + (places > 0 ? "." + frac : "");
}

std::string fixed_truncated_sqrt(const Rational& q, int places) {
    if (q < 0) throw DomainError("square root of negative number");
    const Integer scale = pow10(places);
    const Integer inner = numerator(q) * scale * scale / denominator(q);
    return fixed_truncated(Rational(isqrt(inner), scale), places);
}

}  // namespace kuznum
