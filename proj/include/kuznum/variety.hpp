#pragma once

// Picard-rank-one polarized varieties and their numerical K-theory: classes
// are Chern vectors (c_0, ..., c_n) standing for sum c_i H^i, and everything
// is computed from the degree, the Todd class and the Fano index.

#include <string>
#include <string_view>
#include <vector>

#include "kuznum/linalg.hpp"

namespace kuznum {

/// Coefficients (c_0, ..., c_n) of sum c_i H^i.
using ChernVector = RatVector;

struct VarietyDesc {
    std::string name;
    int dim = 0;
    Integer degree = 1;  // integral of H^n
    int index = 0;       // omega_X = O(-index)
    RatVector todd;      // (1, t_1, ..., t_n)
    // Coordinate lattice (+) Z H^i / denoms_i.
    std::vector<Integer> denoms;
    // Integral cohomology generated by H in degree <= 4.
    bool low_deg_H_generated = false;
    // Generators of the numerical Grothendieck lattice when it is a proper
    // sublattice of the coordinate lattice; empty means the coordinate lattice.
    std::vector<ChernVector> generators;

    Eigen::Index rank() const { return dim + 1; }
};

const std::vector<VarietyDesc>& preset_varieties();
/// Case-insensitive lookup among the presets ("p4", "q3", "y4", "y2").
const VarietyDesc* find_preset(std::string_view name);

/// Descriptor sanity checks (t_0 = 1, 2 t_1 = index, integral chi(O), lattice
/// generators inside the coordinate lattice). Returns human-readable warnings.
std::vector<std::string> consistency_warnings(const VarietyDesc& x);

ChernVector line_bundle_class(const VarietyDesc& x, long k);
/// ch of a skyscraper sheaf: H^n / degree.
ChernVector point_class(const VarietyDesc& x);

/// v * e^{gamma H}, truncated at degree n. ch^beta in the usual notation is
/// exp_twist(v, -beta).
ChernVector exp_twist(const ChernVector& v, const Rational& gamma);
/// Matrix of v -> exp_twist(v, gamma) in the basis {1, H, ..., H^n}.
RatMatrix twist_matrix(Eigen::Index rank, const Rational& gamma);
/// v^vee: odd-degree coefficients negated.
ChernVector dual(const ChernVector& v);

/// chi(v, w) = degree * [v^vee . w . td]_n.
Rational euler_pairing(const VarietyDesc& x, const ChernVector& v, const ChernVector& w);

enum class GramConvention {
    chi,    // entry (i, j) = chi(H^i, H^j)
    paper,  // chi(H^i, H^j) / degree: top-degree classes read as numbers
};

RatMatrix gram_matrix(const VarietyDesc& x, GramConvention convention = GramConvention::chi);

/// Numerical Serre action S = G^{-1} G^T, so that chi(v, S w) = chi(w, v).
/// Throws DomainError("degenerate pairing") when chi is degenerate.
RatMatrix serre_numeric(const VarietyDesc& x);

/// True iff denoms_i * c_i is an integer for every i.
bool in_lattice(const VarietyDesc& x, const ChernVector& v);
/// Integer coordinates denoms_i * c_i; throws DomainError if v is off-lattice.
IntVector lattice_coords(const VarietyDesc& x, const ChernVector& v);
ChernVector from_lattice_coords(const VarietyDesc& x, const IntVector& coords);

/// Basis (HNF rows, coordinate-lattice coordinates) of the numerical lattice.
IntMatrix numerical_lattice_basis(const VarietyDesc& x);
/// Membership in the numerical lattice spanned by x.generators.
bool in_numerical_lattice(const VarietyDesc& x, const ChernVector& v);

}  // namespace kuznum
