#include "kuznum/semiorth.hpp"

namespace kuznum {

namespace {

IntMatrix coordinate_rows(const VarietyDesc& x, const std::vector<ChernVector>& classes) {
    IntMatrix rows(static_cast<Eigen::Index>(classes.size()), x.rank());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        rows.row(static_cast<Eigen::Index>(i)) = lattice_coords(x, classes[i]).transpose();
    }
    return rows;
}

RatMatrix basis_columns(const std::vector<ChernVector>& basis, Eigen::Index rank) {
    RatMatrix k(rank, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) k.col(static_cast<Eigen::Index>(j)) = basis[j];
    return k;
}

bool is_residual(const VarietyDesc& x, const Collection& c, const ChernVector& v) {
    for (const auto& e : c) {
        if (euler_pairing(x, e, v) != 0) return false;
    }
    return true;
}

}  // namespace

Collection standard_collection(const VarietyDesc& x) {
    Collection c;
    for (long k = 0; k < x.index; ++k) c.push_back(line_bundle_class(x, k));
    return c;
}

RatMatrix collection_gram(const VarietyDesc& x, const Collection& c) {
    const auto m = static_cast<Eigen::Index>(c.size());
    RatMatrix g(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            g(i, j) = euler_pairing(x, c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]);
        }
    }
    return g;
}

bool is_numerically_exceptional(const VarietyDesc& x, const Collection& c) {
    const RatMatrix g = collection_gram(x, c);
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        if (g(i, i) != 1) return false;
        for (Eigen::Index j = 0; j < i; ++j) {
            if (g(i, j) != 0) return false;
        }
    }
    return true;
}

std::vector<ChernVector> right_orthogonal(const VarietyDesc& x, const Collection& c) {
    const IntMatrix lattice = numerical_lattice_basis(x);
    const Eigen::Index m = lattice.rows();
    // Row i: chi(E_i, b_j) over the numerical lattice basis, cleared to integers.
    IntMatrix constraints(static_cast<Eigen::Index>(c.size()), m);
    for (std::size_t i = 0; i < c.size(); ++i) {
        RatVector row(m);
        Integer common = 1;
        for (Eigen::Index j = 0; j < m; ++j) {
            row(j) = euler_pairing(x, c[i], from_lattice_coords(x, lattice.row(j).transpose()));
            common = lcm(common, denominator(row(j)));
        }
        for (Eigen::Index j = 0; j < m; ++j) {
            constraints(static_cast<Eigen::Index>(i), j) = numerator(row(j) * Rational(common));
        }
    }
    const IntMatrix kernel = integer_kernel(constraints);
    if (kernel.rows() == 0) return {};
    const IntMatrix coords = hermite_normal_form(IntMatrix(kernel * lattice));
    std::vector<ChernVector> basis;
    for (Eigen::Index i = 0; i < coords.rows(); ++i) basis.push_back(from_lattice_coords(x, coords.row(i).transpose()));
    return basis;
}

ChernVector sod_project(const VarietyDesc& x, const Collection& c, const ChernVector& v) {
    if (c.empty()) return v;
    const RatMatrix g = collection_gram(x, c);
    RatVector rhs(g.rows());
    for (std::size_t i = 0; i < c.size(); ++i) rhs(static_cast<Eigen::Index>(i)) = euler_pairing(x, c[i], v);
    RatMatrix g_inv;
    try {
        g_inv = inverse(g);
    } catch (const DomainError&) {
        throw DomainError("degenerate collection");
    }
    const RatVector coeffs = g_inv * rhs;
    ChernVector out = v;
    for (std::size_t i = 0; i < c.size(); ++i) out -= coeffs(static_cast<Eigen::Index>(i)) * c[i];
    return out;
}

ChernVector rotate(const VarietyDesc& x, const Collection& c, const ChernVector& v) {
    return sod_project(x, c, exp_twist(v, 1));
}

RatVector residual_coordinates(const std::vector<ChernVector>& basis, const ChernVector& v) {
    const RatMatrix k = basis_columns(basis, v.size());
    RatMatrix aug(k.rows(), k.cols() + 1);
    aug << k, v;
    std::vector<Eigen::Index> pivots;
    const RatMatrix r = rref(aug, &pivots);
    if (static_cast<Eigen::Index>(pivots.size()) != k.cols() || (!pivots.empty() && pivots.back() == k.cols())) {
        throw DomainError("not residual");
    }
    return r.col(k.cols()).head(k.cols());
}

RatMatrix residual_serre(const VarietyDesc& x, const Collection& c) {
    const auto basis = right_orthogonal(x, c);
    const auto r = static_cast<Eigen::Index>(basis.size());
    RatMatrix g(r, r);
    for (Eigen::Index i = 0; i < r; ++i) {
        for (Eigen::Index j = 0; j < r; ++j) {
            g(i, j) = euler_pairing(x, basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
        }
    }
    if (r == 0) return g;
    try {
        return inverse(g) * g.transpose();
    } catch (const DomainError&) {
        throw DomainError("degenerate pairing");
    }
}

RatMatrix residual_serre_via_projection(const VarietyDesc& x, const Collection& c) {
    const auto basis = right_orthogonal(x, c);
    const auto r = static_cast<Eigen::Index>(basis.size());
    RatMatrix inverse_serre(r, r);
    const Rational sign = (x.dim % 2 == 0) ? 1 : -1;
    for (Eigen::Index j = 0; j < r; ++j) {
        // S_X^{-1}(v) = v(index)[-n]
        const ChernVector image = sod_project(x, c, sign * exp_twist(basis[static_cast<std::size_t>(j)], x.index));
        inverse_serre.col(j) = residual_coordinates(basis, image);
    }
    if (r == 0) return inverse_serre;
    return inverse(inverse_serre);
}

std::string to_string(SerreEigenvalue e) {
    switch (e) {
        case SerreEigenvalue::plus_one: return "+1";
        case SerreEigenvalue::minus_one: return "-1";
        case SerreEigenvalue::none: break;
    }
    return "none";
}

std::string to_string(ClassLabel label) {
    switch (label) {
        case ClassLabel::numerically_exceptional: return "numerically-exceptional";
        case ClassLabel::isotropic: return "isotropic";
        case ClassLabel::point_object_even: return "numerical-point-object-even";
        case ClassLabel::point_object_odd: return "numerical-point-object-odd";
    }
    return "";
}

ClassReport classify_class(const VarietyDesc& x, const Collection& c, const ChernVector& v) {
    if (v.isZero()) throw DomainError("zero class");
    if (!is_residual(x, c, v)) throw DomainError("not residual");
    const auto basis = right_orthogonal(x, c);
    const RatVector coords = residual_coordinates(basis, v);
    const RatVector image = residual_serre(x, c) * coords;

    ClassReport report;
    report.chi_self = euler_pairing(x, v, v);
    if (image == coords) {
        report.serre_eigenvalue = SerreEigenvalue::plus_one;
        report.labels.insert(ClassLabel::point_object_even);
    } else if (image == -coords) {
        report.serre_eigenvalue = SerreEigenvalue::minus_one;
        report.labels.insert(ClassLabel::point_object_odd);
    }
    if (report.chi_self == 1) report.labels.insert(ClassLabel::numerically_exceptional);
    if (report.chi_self == 0) report.labels.insert(ClassLabel::isotropic);
    return report;
}

std::string to_string(Fullness f) {
    switch (f) {
        case Fullness::numerically_full: return "numerically-full";
        case Fullness::full_modulo_phantoms_excluded: return "full-modulo-phantoms-excluded";
        case Fullness::inconclusive: break;
    }
    return "inconclusive";
}

FullnessVerdict fullness_report(const VarietyDesc& x, const Collection& c, const std::vector<ChernVector>& residual_gens,
                                bool stability_assumed) {
    FullnessVerdict out;
    out.collection_rank = static_cast<int>(c.size());
    out.total_rank = static_cast<int>(x.rank());
    out.stability_assumed = stability_assumed;

    const bool exceptional = is_numerically_exceptional(x, c);
    out.checks.push_back({"collection numerically exceptional", exceptional,
                          exceptional ? "triangular Gram with unit diagonal" : "Gram matrix not unipotent triangular"});

    const auto residual = right_orthogonal(x, c);
    out.residual_rank = static_cast<int>(residual.size());

    bool spans = true;
    std::string span_detail = "generators span the residual lattice over Z";
    for (const auto& g : residual_gens) {
        if (g.size() != x.rank() || !in_numerical_lattice(x, g) || !is_residual(x, c, g)) {
            spans = false;
            span_detail = "a generator is not a residual lattice class";
            break;
        }
    }
    if (spans) {
        const IntMatrix target = residual.empty() ? IntMatrix(0, x.rank()) : coordinate_rows(x, residual);
        const IntMatrix given = residual_gens.empty() ? IntMatrix(0, x.rank())
                                                      : hermite_normal_form(coordinate_rows(x, residual_gens));
        if (given.rows() != target.rows() || given != target) {
            spans = false;
            span_detail = "generators span a sublattice of rank " + std::to_string(given.rows()) + " (index > 1 or rank " +
                          std::to_string(target.rows()) + " expected)";
        }
    }
    out.checks.push_back({"residual lattice spanned", spans, span_detail});

    const bool gens_exceptional = is_numerically_exceptional(x, residual_gens);
    out.checks.push_back({"generators numerically exceptional", gens_exceptional,
                          gens_exceptional ? "chi(g_i, g_i) = 1, chi(g_j, g_i) = 0 for j > i"
                                           : "generators are not a numerically exceptional sequence"});

    out.checks.push_back({"numerical stability condition on the residual", stability_assumed,
                          stability_assumed ? "assumed by caller (excludes phantomic summands)"
                                            : "not assumed; phantoms cannot be excluded"});

    const bool ranks_add_up = out.collection_rank + out.residual_rank == out.total_rank;
    if (exceptional && spans && out.residual_rank == 0 && ranks_add_up) {
        out.verdict = Fullness::numerically_full;
    } else if (exceptional && spans && gens_exceptional && stability_assumed && ranks_add_up) {
        out.verdict = Fullness::full_modulo_phantoms_excluded;
    } else {
        out.verdict = Fullness::inconclusive;
    }
    return out;
}

}  // namespace kuznum
