#include "kuznum/tilt.hpp"

#include <algorithm>
#include <functional>

namespace kuznum {

namespace {

void require_truncation(const ChernVector& v) {
    if (v.size() < 3) throw DomainError("class needs at least (c0, c1, c2)");
}

Rational shift_sign(int shift) { return (shift % 2 == 0) ? Rational(1) : Rational(-1); }

void require_alpha(const TiltParams& p) {
    if (p.alpha <= 0) throw DomainError("alpha must be positive");
}

std::string class_name(long k) { return "O(" + std::to_string(k) + ")"; }

// Polynomial a0 + a1 t + a2 t^2 with a relation to zero.
struct Atom {
    enum class Rel { positive, nonpositive, nonzero, constant };
    Rel rel = Rel::constant;
    Rational a0, a1, a2;
    bool value = true;  // for constants

    bool holds(const QuadNumber& t) const {
        if (rel == Rel::constant) return value;
        const QuadNumber y = QuadNumber(a0) + t * a1 + (t * t) * a2;
        switch (rel) {
            case Rel::positive: return y.sign() > 0;
            case Rel::nonpositive: return y.sign() <= 0;
            case Rel::nonzero: return y.sign() != 0;
            case Rel::constant: break;
        }
        return value;
    }
};

Atom constant(bool b) {
    Atom a;
    a.value = b;
    return a;
}

// mu_tilt(F) > mu (greater = true) or <= mu, as a sign condition in alpha.
Atom tilt_atom(const ChernVector& v, const Rational& beta, const Rational& mu, bool greater) {
    const Rational e = v(1) - beta * v(0);
    if (e == 0) return constant(greater);  // slope +infinity
    const Rational s = sign(e);
    Atom a;
    a.rel = greater ? Atom::Rel::positive : Atom::Rel::nonpositive;
    a.a2 = s * (-v(0) / 2);
    a.a1 = s * (-mu * e);
    a.a0 = s * (beta * beta / 2 * v(0) - beta * v(1) + v(2));
    return a;
}

void heart_atoms(const VarietyDesc& x, const ChernVector& v, int shift, const Rational& beta, const Rational& mu,
                 std::vector<Atom>& out) {
    const ExtSlope mh = slope_h(x, v);
    switch (shift) {
        case 0:
            out.push_back(constant(mh > beta));
            out.push_back(tilt_atom(v, beta, mu, true));
            return;
        case 1:
            out.push_back(tilt_atom(v, beta, mu, mh <= beta));
            return;
        case 2:
            out.push_back(constant(mh <= beta));
            out.push_back(tilt_atom(v, beta, mu, false));
            return;
        default: throw DomainError("shift out of range for double tilt");
    }
}

std::vector<long> member_twists(const VarietyDesc& x, const Collection& c) {
    std::vector<long> twists;
    for (const auto& e : c) {
        const auto k = line_bundle_twist(x, e);
        if (!k) throw DomainError("semistability not certified");
        twists.push_back(*k);
    }
    return twists;
}

// Condition (3): no nonzero class with c_0 = c_1 = c_2 = 0 lies in the right
// orthogonal.
BlmsCondition zero_charge_condition(const VarietyDesc& x, const Collection& c) {
    BlmsCondition cond;
    cond.id = 3;
    if (!x.low_deg_H_generated) {
        cond.details.push_back("hypothesis not satisfied: cohomology not generated by H in degree <= 4");
        return cond;
    }
    const Eigen::Index k = x.rank() - 3;
    if (k <= 0) {
        cond.passed = true;
        cond.details.push_back("no nonzero class with vanishing charge");
        return cond;
    }
    RatMatrix pairing(static_cast<Eigen::Index>(c.size()), k);
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
            ChernVector z = ChernVector::Zero(x.rank());
            z(3 + j) = 1;
            pairing(static_cast<Eigen::Index>(i), j) = euler_pairing(x, c[i], z);
        }
    }
    cond.passed = rank(pairing) == k;
    if (cond.passed) {
        cond.details.push_back("zero-charge classes pair nontrivially with the collection (chi(O, pt) = " +
                               to_string(euler_pairing(x, line_bundle_class(x, 0), point_class(x))) + ")");
    } else {
        cond.details.push_back("a zero-charge class is orthogonal to the collection");
    }
    return cond;
}

}  // namespace

std::strong_ordering operator<=>(const ExtSlope& x, const ExtSlope& y) {
    if (x.infinite || y.infinite) return x.infinite <=> y.infinite;
    const int c = x.value.compare(y.value);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(const ExtSlope& s) { return s.infinite ? "+inf" : to_string(s.value); }

std::string to_string(const Charge& z) {
    std::string out = to_string(z.re);
    if (z.im < 0) return out + " - " + to_string(Rational(-z.im)) + "i";
    return out + " + " + to_string(z.im) + "i";
}

Charge charge_h(const VarietyDesc& x, const ChernVector& v, int shift) {
    require_truncation(v);
    const Rational d(x.degree);
    const Rational s = shift_sign(shift);
    return {s * (-v(1) * d), s * (v(0) * d)};
}

ExtSlope slope_h(const VarietyDesc& x, const ChernVector& v) {
    require_truncation(v);
    (void)x;
    if (v(0) == 0) return ExtSlope::plus_infinity();
    return {false, v(1) / v(0)};
}

Charge charge_tilt(const VarietyDesc& x, const ChernVector& v, int shift, const TiltParams& p) {
    require_truncation(v);
    require_alpha(p);
    const Rational d(x.degree);
    const Rational s = shift_sign(shift);
    const Rational& a = p.alpha;
    const Rational& b = p.beta;
    const Rational re = ((a * a - b * b) / 2 * v(0) + b * v(1) - v(2)) * d;
    const Rational im = (-a * b * v(0) + a * v(1)) * d;
    return {s * re, s * im};
}

ExtSlope slope_tilt(const VarietyDesc& x, const ChernVector& v, const TiltParams& p) {
    const Charge z = charge_tilt(x, v, 0, p);
    if (z.im == 0) return ExtSlope::plus_infinity();
    return {false, -z.re / z.im};
}

Rational discriminant_h(const VarietyDesc& x, const ChernVector& v) {
    require_truncation(v);
    const Rational d(x.degree);
    return (v(1) * d) * (v(1) * d) - 2 * (v(0) * d) * (v(2) * d);
}

HeartVerdict heart_case(const VarietyDesc& x, const ChernVector& v, int shift, const TiltParams& p) {
    if (shift < 0 || shift > 2) throw DomainError("shift out of range for double tilt");
    require_alpha(p);
    const ExtSlope mh = slope_h(x, v);
    const ExtSlope mt = slope_tilt(x, v, p);
    const SlopeCheck h_gt{"mu_H", ">", mh, p.beta, mh > p.beta};
    const SlopeCheck h_le{"mu_H", "<=", mh, p.beta, mh <= p.beta};
    const SlopeCheck t_gt{"mu_tilt", ">", mt, p.mu, mt > p.mu};
    const SlopeCheck t_le{"mu_tilt", "<=", mt, p.mu, mt <= p.mu};

    HeartVerdict out;
    out.shift_of_sheaf = shift;
    int candidate = 0;
    switch (shift) {
        case 0:
            candidate = 1;
            out.slope_checks = {h_gt, t_gt};
            break;
        case 1:
            if (h_le.satisfied) {
                candidate = 2;
                out.slope_checks = {h_le, t_gt};
            } else {
                candidate = 3;
                out.slope_checks = {h_gt, t_le};
            }
            break;
        default:
            candidate = 4;
            out.slope_checks = {h_le, t_le};
            break;
    }
    const bool ok = std::all_of(out.slope_checks.begin(), out.slope_checks.end(),
                                [](const SlopeCheck& c) { return c.satisfied; });
    out.case_id = ok ? candidate : 0;
    return out;
}

bool zero_charge_class(const VarietyDesc& x, const ChernVector& v) {
    if (!x.low_deg_H_generated) throw DomainError("hypothesis not satisfied");
    require_truncation(v);
    return v(0) == 0 && v(1) == 0 && v(2) == 0;
}

std::optional<long> line_bundle_twist(const VarietyDesc& x, const ChernVector& v) {
    if (v.size() != x.rank() || v(0) != 1 || !is_integer(v(1))) return std::nullopt;
    const Integer k = numerator(v(1));
    if (k > 1000000 || k < -1000000) return std::nullopt;
    const long kl = k.convert_to<long>();
    if (v != line_bundle_class(x, kl)) return std::nullopt;
    return kl;
}

BlmsReport blms_check(const VarietyDesc& x, const Collection& c, const TiltParams& p) {
    require_alpha(p);
    const std::vector<long> twists = member_twists(x, c);
    const int serre_shift = x.dim - 1;

    BlmsCondition heart{1, true, {}};
    BlmsCondition nonzero{2, true, {}};
    for (std::size_t i = 0; i < c.size(); ++i) {
        const long k = twists[i];
        const HeartVerdict direct = heart_case(x, c[i], 0, p);
        const ChernVector serre_image = line_bundle_class(x, k - x.index);
        const HeartVerdict rotated = heart_case(x, serre_image, serre_shift, p);
        auto describe = [](const std::string& label, const HeartVerdict& h) {
            std::string s = label + ": ";
            if (h.in_heart()) return s + "case " + std::to_string(h.case_id);
            s += "not in heart";
            for (const auto& chk : h.slope_checks) {
                if (!chk.satisfied) s += " (" + chk.name + " = " + to_string(chk.value) + " not " + chk.relation + " " +
                                         to_string(chk.threshold) + ")";
            }
            return s;
        };
        heart.details.push_back(describe(class_name(k), direct));
        heart.details.push_back(describe(class_name(k - x.index) + "[" + std::to_string(serre_shift) + "]", rotated));
        heart.passed = heart.passed && direct.in_heart() && rotated.in_heart();

        const Charge z = charge_tilt(x, c[i], 0, p);
        nonzero.details.push_back("Z(" + class_name(k) + ") = " + to_string(z));
        nonzero.passed = nonzero.passed && !z.is_zero();
    }

    BlmsReport out;
    out.conditions = {heart, nonzero, zero_charge_condition(x, c)};
    out.passed = std::all_of(out.conditions.begin(), out.conditions.end(),
                             [](const BlmsCondition& cond) { return cond.passed; });
    return out;
}

std::string to_string(const AlphaInterval& interval) {
    std::string out = interval.lower_closed ? "[" : "(";
    out += interval.lower.to_string() + ", ";
    out += interval.upper ? interval.upper->to_string() : "+inf";
    out += (interval.upper && interval.upper_closed) ? "]" : ")";
    return out;
}

std::vector<AlphaInterval> alpha_range(const VarietyDesc& x, const Collection& c, const Rational& beta,
                                       const Rational& mu) {
    const std::vector<long> twists = member_twists(x, c);
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < c.size(); ++i) {
        heart_atoms(x, c[i], 0, beta, mu, atoms);
        heart_atoms(x, line_bundle_class(x, twists[i] - x.index), x.dim - 1, beta, mu, atoms);
        const ChernVector& v = c[i];
        if (v(1) - beta * v(0) == 0) {
            // Im Z vanishes identically; Re Z must not.
            Atom a;
            a.rel = Atom::Rel::nonzero;
            a.a2 = v(0) / 2;
            a.a0 = -beta * beta / 2 * v(0) + beta * v(1) - v(2);
            atoms.push_back(a);
        }
    }
    atoms.push_back(constant(zero_charge_condition(x, c).passed));

    std::vector<QuadNumber> roots;
    for (const auto& a : atoms) {
        if (a.rel == Atom::Rel::constant) continue;
        if (a.a2 == 0) {
            if (a.a1 != 0) roots.emplace_back(-a.a0 / a.a1);
            continue;
        }
        const Rational disc = a.a1 * a.a1 - 4 * a.a2 * a.a0;
        if (disc < 0) continue;
        const Rational center = -a.a1 / (2 * a.a2);
        const Rational half = 1 / (2 * a.a2);
        roots.emplace_back(center, half, disc);
        roots.emplace_back(center, -half, disc);
    }
    std::erase_if(roots, [](const QuadNumber& r) { return r.sign() <= 0; });
    std::sort(roots.begin(), roots.end(), [](const QuadNumber& a, const QuadNumber& b) { return compare_any(a, b) < 0; });
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](const QuadNumber& a, const QuadNumber& b) { return compare_any(a, b) == 0; }),
                roots.end());

    auto passes = [&](const QuadNumber& t) {
        return std::all_of(atoms.begin(), atoms.end(), [&](const Atom& a) { return a.holds(t); });
    };

    // Pieces: open cell (0, r_1), point r_1, open cell (r_1, r_2), ..., open cell (r_k, +inf).
    struct Piece {
        bool is_point;
        QuadNumber lo;
        std::optional<QuadNumber> hi;
        bool ok;
    };
    std::vector<Piece> pieces;
    QuadNumber lo(0);
    for (const auto& r : roots) {
        pieces.push_back({false, lo, r, passes(QuadNumber(rational_between(lo, r)))});
        pieces.push_back({true, r, r, passes(r)});
        lo = r;
    }
    pieces.push_back({false, lo, std::nullopt, passes(QuadNumber(Rational(floor(lo) + 1)))});

    std::vector<AlphaInterval> out;
    for (std::size_t i = 0; i < pieces.size();) {
        if (!pieces[i].ok) {
            ++i;
            continue;
        }
        AlphaInterval iv;
        iv.lower = pieces[i].lo;
        iv.lower_closed = pieces[i].is_point;
        std::size_t j = i;
        while (j + 1 < pieces.size() && pieces[j + 1].ok) ++j;
        iv.upper = pieces[j].hi;
        iv.upper_closed = pieces[j].is_point;
        out.push_back(iv);
        i = j + 1;
    }
    return out;
}

bool contains(const std::vector<AlphaInterval>& intervals, const QuadNumber& alpha) {
    for (const auto& iv : intervals) {
        const auto lo = compare_any(alpha, iv.lower);
        const bool above = iv.lower_closed ? lo >= 0 : lo > 0;
        bool below = true;
        if (iv.upper) {
            const auto hi = compare_any(alpha, *iv.upper);
            below = iv.upper_closed ? hi <= 0 : hi < 0;
        }
        if (above && below) return true;
    }
    return false;
}

}  // namespace kuznum
