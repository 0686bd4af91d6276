#include "kuznum/walls.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <tuple>

namespace kuznum {

namespace {

Rational truncated_discriminant(const Rational& c0, const Rational& c1, const Rational& c2) {
    return c1 * c1 - 2 * c0 * c2;
}

struct Range {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    bool feasible = true;

    // k t + b >= 0
    void require(const Rational& k, const Rational& b) {
        if (k == 0) {
            if (b < 0) feasible = false;
            return;
        }
        const Rational t = -b / k;
        if (k > 0) {
            if (!lo || t > *lo) lo = t;
        } else {
            if (!hi || t < *hi) hi = t;
        }
    }
};

Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : Integer(-a);
    }
    Integer x1, y1;
    const Integer g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

using WallKey = std::tuple<int, Rational, Rational, Rational>;

WallKey key_of(const WallCircle& w) {
    return {static_cast<int>(w.kind), w.center, w.radius_sq, w.line_beta};
}

// Walls for one c_0' value, witnesses in enumeration order.
struct CellResult {
    std::vector<WallCircle> walls;
};

}  // namespace

BetaZero beta_zero(const VarietyDesc& x, const ChernVector& v) {
    if (v.size() < 3) throw DomainError("class needs at least (c0, c1, c2)");
    if (v(0) * Rational(x.degree) <= 0) throw DomainError("rank not positive");
    const Rational F = truncated_discriminant(v(0), v(1), v(2)) / (v(0) * v(0));
    if (F <= 0) throw DomainError("no positive discriminant");
    BetaZero bz;
    bz.F = F;
    bz.beta0 = QuadNumber(v(1) / v(0), Rational(-1), F);
    bz.bound = QuadNumber(Rational(0), v(0) * Rational(x.degree), F);
    return bz;
}

QuadNumber beta_zero_value(const VarietyDesc& x, const BetaZero& bz, const Rational& c0w, const Rational& c1w) {
    return (QuadNumber(c1w) - bz.beta0 * c0w) * Rational(x.degree);
}

NoWallCertificate nowall_certificate(const VarietyDesc& x, const ChernVector& v) {
    NoWallCertificate cert;
    cert.beta0 = beta_zero(x, v);
    const BetaZero& bz = cert.beta0;
    const Rational d(x.degree);
    const Integer l0 = x.denoms.at(0);
    const Integer l1 = x.denoms.at(1);

    if (bz.beta0.is_rational()) {
        const Rational p = bz.beta0.a();
        // Values (m/l1 - p k/l0) d form the group g d Z.
        const Rational g = rational_gcd(Rational(1) / Rational(l1), p / Rational(l0));
        const Rational step = g * d;
        cert.lattice_step = step;
        cert.certified = quad_compare(QuadNumber(step), bz.bound) >= 0;
        if (cert.certified) {
            cert.conclusion = "values of ch1^beta0 . H^" + std::to_string(x.dim - 1) + " are multiples of " +
                              to_string(step) + "; none lies in (0, " + bz.bound.to_string() + ")";
        } else {
            const Integer common = lcm(l1, denominator(p / Rational(l0)));
            const Integer a = numerator(Rational(common) / Rational(l1));
            const Integer b = numerator(Rational(common) * p / Rational(l0));
            Integer s, t;
            ext_gcd(a, b, s, t);
            // s/l1 + t p/l0 = g, so w = (c0', c1') = (-t/l0, s/l1).
            const Rational c0w = Rational(-t) / Rational(l0);
            const Rational c1w = Rational(s) / Rational(l1);
            cert.witness = std::make_pair(c0w, c1w);
            cert.witness_value = beta_zero_value(x, bz, c0w, c1w);
            cert.conclusion = "lattice value " + cert.witness_value->to_string() + " lies in (0, " +
                              bz.bound.to_string() + ")";
        }
        return cert;
    }

    // Irrational beta_0: the values are dense, so a witness exists; find the
    // one with smallest |c_0'| (then c_0' >= 0 first).
    for (long k = 0; k <= 1000000; ++k) {
        for (const long sgn : {1L, -1L}) {
            if (k == 0 && sgn < 0) continue;
            const Rational c0w = Rational(sgn * k) / Rational(l0);
            const QuadNumber t = bz.beta0 * c0w;  // need c1' in (t, t + bound/d)
            const Rational c1w = Rational(floor(t * Rational(l1)) + 1) / Rational(l1);
            const QuadNumber value = beta_zero_value(x, bz, c0w, c1w);
            if (value.sign() > 0 && quad_compare(value, bz.bound) < 0) {
                cert.witness = std::make_pair(c0w, c1w);
                cert.witness_value = value;
                cert.conclusion = "beta0 is irrational; lattice value " + value.to_string() + " lies in (0, " +
                                  bz.bound.to_string() + ")";
                return cert;
            }
        }
    }
    cert.conclusion = "no witness found in search range";
    return cert;
}

std::string to_string(WallCircle::Kind kind) {
    switch (kind) {
        case WallCircle::Kind::circle: return "circle";
        case WallCircle::Kind::vertical_line: return "vertical-line";
        case WallCircle::Kind::empty: return "empty";
        case WallCircle::Kind::degenerate: return "degenerate";
    }
    return "";
}

WallCircle wall_circle(const ChernVector& v, const ChernVector& w) {
    if (v.size() < 3 || w.size() < 3) throw DomainError("class needs at least (c0, c1, c2)");
    // Re Z(v) Im Z(w) - Re Z(w) Im Z(v) is alpha d^2 times
    // A (alpha^2 + beta^2)/2 + B beta + C.
    const Rational A = v(0) * w(1) - v(1) * w(0);
    const Rational B = v(2) * w(0) - w(2) * v(0);
    const Rational C = w(2) * v(1) - v(2) * w(1);
    WallCircle out;
    if (A != 0) {
        const Rational center = -B / A;
        const Rational r2 = center * center - 2 * C / A;
        if (r2 > 0) {
            out.kind = WallCircle::Kind::circle;
            out.center = center;
            out.radius_sq = r2;
        }
    } else if (B != 0) {
        out.kind = WallCircle::Kind::vertical_line;
        out.line_beta = -C / B;
    } else if (C == 0) {
        out.kind = WallCircle::Kind::degenerate;
    }
    return out;
}

bool same_wall(const WallCircle& a, const WallCircle& b) { return key_of(a) == key_of(b); }

std::vector<WallCircle> wall_scan(const VarietyDesc& x, const ChernVector& v, const ScanBounds& bounds,
                                  unsigned threads) {
    if (v.size() < 3) throw DomainError("class needs at least (c0, c1, c2)");
    const Rational c0 = v(0), c1 = v(1), c2 = v(2);
    const Rational delta_v = truncated_discriminant(c0, c1, c2);
    std::optional<BetaZero> bz;
    try {
        bz = beta_zero(x, v);
    } catch (const DomainError&) {
    }
    const Integer l0 = x.denoms.at(0), l1 = x.denoms.at(1), l2 = x.denoms.at(2);
    const bool left_region = c0 > 0;
    const Rational mu_v = left_region ? c1 / c0 : Rational(0);

    const long r_lo = -static_cast<long>(bounds.max_rank) * l0.convert_to<long>();
    const long r_hi = static_cast<long>(bounds.max_rank) * l0.convert_to<long>();
    const long m_hi = static_cast<long>(bounds.max_c1) * l1.convert_to<long>();

    auto scan_cell = [&](long r) {
        CellResult cell;
        std::map<WallKey, std::size_t> index;
        const Rational c0w = Rational(r) / Rational(l0);
        for (long m = -m_hi; m <= m_hi; ++m) {
            const Rational c1w = Rational(m) / Rational(l1);
            if (c0w == 0 && c1w == 0) continue;
            if (bz) {
                const QuadNumber value = beta_zero_value(x, *bz, c0w, c1w);
                if (value.sign() <= 0 || quad_compare(value, bz->bound) >= 0) continue;
            }
            Range range;
            range.require(-2 * c0w, c1w * c1w);
            const Rational du0 = c0 - c0w, du1 = c1 - c1w;
            range.require(2 * du0, du1 * du1 - 2 * du0 * c2);
            range.require(-(-2 * c0w + 2 * du0), delta_v - c1w * c1w - (du1 * du1 - 2 * du0 * c2));
            if (!range.feasible || !range.lo || !range.hi || *range.lo > *range.hi) continue;
            const Integer n_lo = ceil(*range.lo * Rational(l2));
            const Integer n_hi = floor(*range.hi * Rational(l2));
            for (Integer n = n_lo; n <= n_hi; ++n) {
                ChernVector w(3);
                w << c0w, c1w, Rational(n) / Rational(l2);
                WallCircle wall = wall_circle(v, w);
                if (wall.kind == WallCircle::Kind::empty || wall.kind == WallCircle::Kind::degenerate) continue;
                if (left_region) {
                    if (wall.kind == WallCircle::Kind::circle) {
                        const Rational gap = wall.center - mu_v;
                        if (wall.center >= mu_v && gap * gap >= wall.radius_sq) continue;
                    } else if (wall.line_beta >= mu_v) {
                        continue;
                    }
                }
                const WallKey key = key_of(wall);
                const auto it = index.find(key);
                if (it == index.end()) {
                    wall.witnesses.push_back(w);
                    index.emplace(key, cell.walls.size());
                    cell.walls.push_back(std::move(wall));
                } else {
                    cell.walls[it->second].witnesses.push_back(w);
                }
            }
        }
        return cell;
    };

    std::vector<CellResult> cells(static_cast<std::size_t>(r_hi - r_lo + 1));
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cells.size())));
    if (workers == 1) {
        for (long r = r_lo; r <= r_hi; ++r) cells[static_cast<std::size_t>(r - r_lo)] = scan_cell(r);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                for (long r = r_lo + t; r <= r_hi; r += workers) cells[static_cast<std::size_t>(r - r_lo)] = scan_cell(r);
            });
        }
        for (auto& th : pool) th.join();
    }

    std::map<WallKey, std::size_t> index;
    std::vector<WallCircle> merged;
    for (auto& cell : cells) {
        for (auto& wall : cell.walls) {
            const WallKey key = key_of(wall);
            const auto it = index.find(key);
            if (it == index.end()) {
                index.emplace(key, merged.size());
                merged.push_back(std::move(wall));
            } else {
                auto& dst = merged[it->second].witnesses;
                dst.insert(dst.end(), wall.witnesses.begin(), wall.witnesses.end());
            }
        }
    }
    std::stable_sort(merged.begin(), merged.end(), [](const WallCircle& a, const WallCircle& b) {
        const bool la = a.kind == WallCircle::Kind::vertical_line, lb = b.kind == WallCircle::Kind::vertical_line;
        if (la != lb) return lb;
        if (la) return a.line_beta < b.line_beta;
        if (a.center != b.center) return a.center < b.center;
        return a.radius_sq < b.radius_sq;
    });
    return merged;
}

}  // namespace kuznum
