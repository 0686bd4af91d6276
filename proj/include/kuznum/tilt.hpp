#pragma once

// Weak stability sigma_H and tilt stability sigma_{alpha,beta} at the level of
// Chern vectors. Only (c_0, c_1, c_2) enter, so truncated vectors are fine.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "kuznum/semiorth.hpp"

namespace kuznum {

struct TiltParams {
    Rational alpha;
    Rational beta;
    Rational mu{0};
};

/// re + im * sqrt(-1).
struct Charge {
    Rational re;
    Rational im;

    friend Charge operator+(const Charge& x, const Charge& y) { return {x.re + y.re, x.im + y.im}; }
    friend Charge operator-(const Charge& x) { return {-x.re, -x.im}; }
    friend bool operator==(const Charge&, const Charge&) = default;
    bool is_zero() const { return re == 0 && im == 0; }
};

/// Rational or +infinity.
struct ExtSlope {
    bool infinite = false;
    Rational value;

    static ExtSlope plus_infinity() { return {true, Rational(0)}; }
    friend bool operator==(const ExtSlope& x, const ExtSlope& y) {
        return x.infinite == y.infinite && (x.infinite || x.value == y.value);
    }
    friend std::strong_ordering operator<=>(const ExtSlope& x, const ExtSlope& y);
    friend bool operator>(const ExtSlope& x, const Rational& t) { return x.infinite || x.value > t; }
    friend bool operator<=(const ExtSlope& x, const Rational& t) { return !x.infinite && x.value <= t; }
};

std::string to_string(const ExtSlope& s);
std::string to_string(const Charge& z);

/// Z_H = -c_1 d + sqrt(-1) c_0 d, times (-1)^shift.
Charge charge_h(const VarietyDesc& x, const ChernVector& v, int shift = 0);
ExtSlope slope_h(const VarietyDesc& x, const ChernVector& v);

/// Z_{alpha,beta} = -int H^{n-2} ch^{beta + i alpha}, times (-1)^shift.
Charge charge_tilt(const VarietyDesc& x, const ChernVector& v, int shift, const TiltParams& p);
/// -Re/Im, +infinity when Im = 0. Independent of the shift.
ExtSlope slope_tilt(const VarietyDesc& x, const ChernVector& v, const TiltParams& p);

/// (c_1 d)^2 - 2 (c_0 d)(c_2 d).
Rational discriminant_h(const VarietyDesc& x, const ChernVector& v);

struct SlopeCheck {
    std::string name;      // "mu_H" or "mu_tilt"
    std::string relation;  // ">" or "<="
    ExtSlope value;
    Rational threshold;
    bool satisfied = false;
};

struct HeartVerdict {
    int case_id = 0;  // 1..4, 0 = not in the heart
    int shift_of_sheaf = 0;
    std::vector<SlopeCheck> slope_checks;

    bool in_heart() const { return case_id != 0; }
};

/// Membership of F[shift] in Coh^mu_{alpha,beta}, where v = ch(F) for a sheaf
/// F and F[shift] is assumed sigma_H- and sigma_{alpha,beta}-semistable.
/// Throws DomainError("shift out of range for double tilt") unless shift is 0, 1 or 2.
HeartVerdict heart_case(const VarietyDesc& x, const ChernVector& v, int shift, const TiltParams& p);

/// c_0 = c_1 = c_2 = 0. Throws DomainError("hypothesis not satisfied") unless
/// x.low_deg_H_generated.
bool zero_charge_class(const VarietyDesc& x, const ChernVector& v);

/// k with v = ch O(k), if v is a line bundle class.
std::optional<long> line_bundle_twist(const VarietyDesc& x, const ChernVector& v);

struct BlmsCondition {
    int id = 0;
    bool passed = false;
    std::vector<std::string> details;
};

struct BlmsReport {
    bool passed = false;
    std::vector<BlmsCondition> conditions;
};

/// The three hypotheses for inducing a stability condition on the right
/// orthogonal of C from sigma_{alpha,beta} on Coh^mu_{alpha,beta}.
/// Throws DomainError("semistability not certified") unless every member is a
/// line bundle class, and DomainError("alpha must be positive").
BlmsReport blms_check(const VarietyDesc& x, const Collection& c, const TiltParams& p);

struct AlphaInterval {
    QuadNumber lower;
    bool lower_closed = false;
    std::optional<QuadNumber> upper;  // nullopt = +infinity
    bool upper_closed = false;
};

std::string to_string(const AlphaInterval& interval);

/// {alpha > 0 : blms_check passes at (alpha, beta, mu)} as disjoint sorted
/// intervals with exact endpoints.
std::vector<AlphaInterval> alpha_range(const VarietyDesc& x, const Collection& c, const Rational& beta,
                                       const Rational& mu = 0);

/// Membership test for an exact alpha.
bool contains(const std::vector<AlphaInterval>& intervals, const QuadNumber& alpha);

}  // namespace kuznum
