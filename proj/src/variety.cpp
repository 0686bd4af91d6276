#include "kuznum/variety.hpp"

#include <algorithm>
#include <cctype>

namespace kuznum {

namespace {

RatVector rat_vector(std::initializer_list<Rational> values) {
    RatVector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (const auto& value : values) v(i++) = value;
    return v;
}

ChernVector exp_class(int dim, long k) {
    ChernVector v(dim + 1);
    for (int i = 0; i <= dim; ++i) v(i) = pow(Rational(k), i) / Rational(factorial(i));
    return v;
}

// Threefold with ch(O_line) = L + c P where L = H^2/degree, P = H^3/degree
// and chi(O_line) = 1 forces c = 1 - t_1.
VarietyDesc threefold(std::string name, long degree, int index, RatVector todd, std::vector<Integer> denoms) {
    VarietyDesc x;
    x.name = std::move(name);
    x.dim = 3;
    x.degree = degree;
    x.index = index;
    x.todd = std::move(todd);
    x.denoms = std::move(denoms);
    x.low_deg_H_generated = true;
    const Rational d(degree);
    ChernVector line = ChernVector::Zero(4);
    line(2) = 1 / d;
    line(3) = (1 - x.todd(1)) / d;
    x.generators = {exp_class(3, 0), exp_class(3, 1), line, point_class(x)};
    return x;
}

std::vector<VarietyDesc> build_presets() {
    std::vector<VarietyDesc> out;

    VarietyDesc p4;
    p4.name = "p4";
    p4.dim = 4;
    p4.degree = 1;
    p4.index = 5;
    p4.todd = rat_vector({1, Rational(5, 2), Rational(35, 12), Rational(25, 12), 1});
    p4.denoms = {1, 1, 2, 6, 24};
    p4.low_deg_H_generated = true;
    for (long k = 0; k < 5; ++k) p4.generators.push_back(exp_class(4, k));
    out.push_back(std::move(p4));

    out.push_back(threefold("q3", 2, 3, rat_vector({1, Rational(3, 2), Rational(13, 12), Rational(1, 2)}), {1, 1, 2, 12}));
    out.push_back(threefold("y4", 4, 2, rat_vector({1, 1, Rational(7, 12), Rational(1, 4)}), {1, 1, 4, 12}));
    out.push_back(threefold("y2", 2, 2, rat_vector({1, 1, Rational(5, 6), Rational(1, 2)}), {1, 1, 2, 6}));
    return out;
}

}  // namespace

const std::vector<VarietyDesc>& preset_varieties() {
    static const std::vector<VarietyDesc> presets = build_presets();
    return presets;
}

const VarietyDesc* find_preset(std::string_view name) {
    std::string lowered(name);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (const auto& x : preset_varieties()) {
        if (x.name == lowered) return &x;
    }
    return nullptr;
}

std::vector<std::string> consistency_warnings(const VarietyDesc& x) {
    std::vector<std::string> warnings;
    if (x.todd.size() != x.rank() || static_cast<Eigen::Index>(x.denoms.size()) != x.rank()) {
        warnings.push_back(x.name + ": todd/denoms length differs from dim + 1");
        return warnings;
    }
    if (x.todd(0) != 1) warnings.push_back(x.name + ": todd t_0 is not 1");
    if (2 * x.todd(1) != Rational(x.index)) warnings.push_back(x.name + ": 2 t_1 differs from the index");
    const Rational chi_o = Rational(x.degree) * x.todd(x.dim);
    if (!is_integer(chi_o)) warnings.push_back(x.name + ": chi(O) = " + to_string(chi_o) + " is not an integer");
    for (const auto& g : x.generators) {
        if (g.size() != x.rank() || !in_lattice(x, g)) {
            warnings.push_back(x.name + ": lattice generator outside the coordinate lattice");
            break;
        }
    }
    return warnings;
}

ChernVector line_bundle_class(const VarietyDesc& x, long k) { return exp_class(x.dim, k); }

ChernVector point_class(const VarietyDesc& x) {
    ChernVector v = ChernVector::Zero(x.rank());
    v(x.dim) = Rational(1) / Rational(x.degree);
    return v;
}

RatMatrix twist_matrix(Eigen::Index rank, const Rational& gamma) {
    // (v e^{gH})_i = sum_{j <= i} v_j g^{i-j} / (i-j)!
    RatMatrix t = RatMatrix::Zero(rank, rank);
    for (Eigen::Index i = 0; i < rank; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            t(i, j) = pow(gamma, static_cast<int>(i - j)) / Rational(factorial(static_cast<int>(i - j)));
        }
    }
    return t;
}

ChernVector exp_twist(const ChernVector& v, const Rational& gamma) { return twist_matrix(v.size(), gamma) * v; }

ChernVector dual(const ChernVector& v) {
    ChernVector out = v;
    for (Eigen::Index i = 1; i < v.size(); i += 2) out(i) = -out(i);
    return out;
}

Rational euler_pairing(const VarietyDesc& x, const ChernVector& v, const ChernVector& w) {
    const ChernVector vd = dual(v);
    const Eigen::Index n = x.dim;
    Rational top = 0;
    for (Eigen::Index i = 0; i <= n; ++i) {
        for (Eigen::Index j = 0; i + j <= n; ++j) top += vd(i) * w(j) * x.todd(n - i - j);
    }
    return Rational(x.degree) * top;
}

RatMatrix gram_matrix(const VarietyDesc& x, GramConvention convention) {
    const Eigen::Index r = x.rank();
    RatMatrix g(r, r);
    const RatMatrix basis = RatMatrix::Identity(r, r);
    for (Eigen::Index i = 0; i < r; ++i) {
        for (Eigen::Index j = 0; j < r; ++j) g(i, j) = euler_pairing(x, basis.col(i), basis.col(j));
    }
    if (convention == GramConvention::paper) g /= Rational(x.degree);
    return g;
}

RatMatrix serre_numeric(const VarietyDesc& x) {
    const RatMatrix g = gram_matrix(x);
    RatMatrix g_inv;
    try {
        g_inv = inverse(g);
    } catch (const DomainError&) {
        throw DomainError("degenerate pairing");
    }
    return g_inv * g.transpose();
}

bool in_lattice(const VarietyDesc& x, const ChernVector& v) {
    if (v.size() != x.rank()) return false;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!is_integer(v(i) * Rational(x.denoms[static_cast<std::size_t>(i)]))) return false;
    }
    return true;
}

IntVector lattice_coords(const VarietyDesc& x, const ChernVector& v) {
    if (!in_lattice(x, v)) throw DomainError("class not in the lattice");
    IntVector c(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) c(i) = numerator(v(i) * Rational(x.denoms[static_cast<std::size_t>(i)]));
    return c;
}

ChernVector from_lattice_coords(const VarietyDesc& x, const IntVector& coords) {
    ChernVector v(coords.size());
    for (Eigen::Index i = 0; i < coords.size(); ++i) v(i) = Rational(coords(i), x.denoms[static_cast<std::size_t>(i)]);
    return v;
}

IntMatrix numerical_lattice_basis(const VarietyDesc& x) {
    if (x.generators.empty()) return IntMatrix::Identity(x.rank(), x.rank());
    IntMatrix rows(static_cast<Eigen::Index>(x.generators.size()), x.rank());
    for (std::size_t i = 0; i < x.generators.size(); ++i) {
        rows.row(static_cast<Eigen::Index>(i)) = lattice_coords(x, x.generators[i]).transpose();
    }
    return hermite_normal_form(rows);
}

bool in_numerical_lattice(const VarietyDesc& x, const ChernVector& v) {
    if (!in_lattice(x, v)) return false;
    return lattice_coordinates(numerical_lattice_basis(x), lattice_coords(x, v)).has_value();
}

}  // namespace kuznum
