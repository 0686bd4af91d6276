#include "kuznum/linalg.hpp"

#include <utility>

namespace kuznum {

namespace {

// g = x*a + y*b with g = gcd(a, b) >= 0.
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const Integer q = floor_div(old_r, r);
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    g = old_r;
    x = old_s;
    y = old_t;
}

// Unimodular row echelon form restricted to the first `cols` columns.
// Returns the number of pivot rows.
Eigen::Index integer_echelon(IntMatrix& t, Eigen::Index cols, std::vector<Eigen::Index>* pivots = nullptr) {
    Eigen::Index p = 0;
    for (Eigen::Index c = 0; c < cols && p < t.rows(); ++c) {
        for (Eigen::Index i = p + 1; i < t.rows(); ++i) {
            if (t(i, c) == 0) continue;
            if (t(p, c) == 0) {
                t.row(p).swap(t.row(i));
                continue;
            }
            Integer g, x, y;
            extended_gcd(t(p, c), t(i, c), g, x, y);
            const Integer a = t(p, c) / g;
            const Integer b = t(i, c) / g;
            const IntVector rp = t.row(p).transpose();
            const IntVector ri = t.row(i).transpose();
            t.row(p) = (x * rp + y * ri).transpose();
            t.row(i) = (b * rp - a * ri).transpose();
        }
        if (t(p, c) != 0) {
            if (pivots != nullptr) pivots->push_back(c);
            ++p;
        }
    }
    return p;
}

}  // namespace

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
    std::vector<RatVector> basis = rref_kernel(m);
    const std::vector<Integer> unit(static_cast<std::size_t>(m.cols()), Integer(1));
    for (auto& v : basis) v = lattice_primitive(v, unit).cast<Rational>();
    return basis;
}

IntVector lattice_primitive(const RatVector& v, const std::vector<Integer>& denoms) {
    if (static_cast<std::size_t>(v.size()) != denoms.size()) throw DomainError("not in lattice span");
    for (const auto& d : denoms) {
        if (d <= 0) throw DomainError("not in lattice span");
    }
    if (v.isZero()) throw DomainError("zero class");
    RatVector coords(v.size());
    Integer common = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        coords(i) = v(i) * Rational(denoms[static_cast<std::size_t>(i)]);
        common = lcm(common, denominator(coords(i)));
    }
    IntVector x(v.size());
    Integer content = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        x(i) = numerator(coords(i)) * (common / denominator(coords(i)));
        content = gcd(content, x(i));
    }
    int lead = 0;
    for (Eigen::Index i = 0; i < x.size() && lead == 0; ++i) lead = x(i).sign();
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = x(i) / content * lead;
    return x;
}

IntMatrix hermite_normal_form(IntMatrix m) {
    std::vector<Eigen::Index> pivots;
    const Eigen::Index r = integer_echelon(m, m.cols(), &pivots);
    IntMatrix h = m.topRows(r);
    for (Eigen::Index i = 0; i < r; ++i) {
        const Eigen::Index c = pivots[static_cast<std::size_t>(i)];
        if (h(i, c) < 0) h.row(i) *= Integer(-1);
        for (Eigen::Index k = 0; k < i; ++k) {
            const Integer q = floor_div(h(k, c), h(i, c));
            if (q != 0) h.row(k) -= q * h.row(i);
        }
    }
    return h;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    const Eigen::Index n = m.cols();
    IntMatrix t(n, m.rows() + n);
    t << m.transpose(), IntMatrix::Identity(n, n);
    const Eigen::Index rank = integer_echelon(t, m.rows());
    const IntMatrix kernel = t.bottomRows(n - rank).rightCols(n);
    if (kernel.rows() == 0) return IntMatrix(0, n);
    return hermite_normal_form(kernel);
}

std::optional<IntVector> lattice_coordinates(const IntMatrix& basis, const IntVector& target) {
    const Eigen::Index k = basis.rows();
    RatMatrix aug(basis.cols(), k + 1);
    aug << to_rational(basis).transpose(), target.cast<Rational>();
    std::vector<Eigen::Index> pivots;
    const RatMatrix r = rref(aug, &pivots);
    if (!pivots.empty() && pivots.back() == k) return std::nullopt;  // inconsistent
    IntVector x = IntVector::Zero(k);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const Rational value = r(static_cast<Eigen::Index>(i), k);
        if (!is_integer(value)) return std::nullopt;
        x(pivots[i]) = numerator(value);
    }
    return x;
}

RatMatrix to_rational(const IntMatrix& m) { return m.cast<Rational>(); }

}  // namespace kuznum
