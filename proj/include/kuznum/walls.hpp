#pragma once

// Numerical walls for truncated classes (c_0, c_1, c_2) in the (alpha, beta)
// half-plane, the beta_0 line and no-wall certificates.

#include <optional>
#include <string>
#include <vector>

#include "kuznum/tilt.hpp"

namespace kuznum {

struct BetaZero {
    Rational F;
    QuadNumber beta0;  // c_1/c_0 - sqrt(F)
    QuadNumber bound;  // sqrt(F) c_0 d
};

/// Throws DomainError("rank not positive") or DomainError("no positive discriminant").
BetaZero beta_zero(const VarietyDesc& x, const ChernVector& v);

/// ch_1^{beta_0}(w) H^{n-1} = (c_1' - beta_0 c_0') d.
QuadNumber beta_zero_value(const VarietyDesc& x, const BetaZero& bz, const Rational& c0w, const Rational& c1w);

struct NoWallCertificate {
    BetaZero beta0;
    bool certified = false;
    // Generator of the value group when beta_0 is rational.
    std::optional<Rational> lattice_step;
    // A lattice (c_0', c_1') whose value lies in (0, bound), when not certified.
    std::optional<std::pair<Rational, Rational>> witness;
    std::optional<QuadNumber> witness_value;
    std::string conclusion;
};

NoWallCertificate nowall_certificate(const VarietyDesc& x, const ChernVector& v);

struct WallCircle {
    enum class Kind { circle, vertical_line, empty, degenerate };
    Kind kind = Kind::empty;
    Rational center;     // circle
    Rational radius_sq;  // circle
    Rational line_beta;  // vertical line
    std::vector<ChernVector> witnesses;
};

std::string to_string(WallCircle::Kind kind);

/// Locus mu_{alpha,beta}(v) = mu_{alpha,beta}(w), alpha > 0.
WallCircle wall_circle(const ChernVector& v, const ChernVector& w);

/// Same geometry (kind, center, radius, line), witnesses ignored.
bool same_wall(const WallCircle& a, const WallCircle& b);

struct ScanBounds {
    int max_rank = 3;
    int max_c1 = 3;
};

/// Candidate numerical walls for v from lattice classes w with |c_0'| <= max_rank,
/// |c_1'| <= max_c1, Delta(w) >= 0, Delta(v - w) >= 0, Delta(w) + Delta(v - w) <= Delta(v),
/// and 0 < ch_1^{beta_0}(w) H^{n-1} < ch_1^{beta_0}(v) H^{n-1} when beta_0 exists.
/// Deduplicated, sorted by (center, radius); vertical lines last.
std::vector<WallCircle> wall_scan(const VarietyDesc& x, const ChernVector& v, const ScanBounds& bounds,
                                  unsigned threads = 1);

}  // namespace kuznum
