#pragma once

// Exceptional collections and their residual (right orthogonal) lattices.

#include <set>
#include <string>
#include <vector>

#include "kuznum/variety.hpp"

namespace kuznum {

/// An ordered list of classes (E_1, ..., E_m) on a variety.
using Collection = std::vector<ChernVector>;

/// (O, O(1), ..., O(index - 1)).
Collection standard_collection(const VarietyDesc& x);

/// chi(E_i, E_i) = 1 and chi(E_j, E_i) = 0 for j > i.
bool is_numerically_exceptional(const VarietyDesc& x, const Collection& c);

/// Matrix (chi(E_i, E_j))_{ij}.
RatMatrix collection_gram(const VarietyDesc& x, const Collection& c);

/// Primitive basis of {v in lattice : chi(E_i, v) = 0 for all i}, as the rows
/// of a Hermite normal form in coordinate-lattice coordinates.
std::vector<ChernVector> right_orthogonal(const VarietyDesc& x, const Collection& c);

/// Numerical projection onto the right orthogonal: v - u with u in span(C)
/// and chi(E_i, v - u) = 0. Throws DomainError for a degenerate collection.
ChernVector sod_project(const VarietyDesc& x, const Collection& c, const ChernVector& v);

/// Rotation v -> sod_project(v e^H).
ChernVector rotate(const VarietyDesc& x, const Collection& c, const ChernVector& v);

/// Serre action of the residual category in the basis right_orthogonal(x, c):
/// S = G^{-1} G^T with G the restricted Euler pairing.
RatMatrix residual_serre(const VarietyDesc& x, const Collection& c);

/// The same action computed as the inverse of v -> sod_project(S_X^{-1} v).
RatMatrix residual_serre_via_projection(const VarietyDesc& x, const Collection& c);

/// Coefficients of a residual class in the residual basis.
RatVector residual_coordinates(const std::vector<ChernVector>& basis, const ChernVector& v);

enum class SerreEigenvalue { plus_one, minus_one, none };

enum class ClassLabel {
    numerically_exceptional,
    isotropic,
    point_object_even,
    point_object_odd,
};

struct ClassReport {
    Rational chi_self;
    SerreEigenvalue serre_eigenvalue = SerreEigenvalue::none;
    std::set<ClassLabel> labels;
};

std::string to_string(SerreEigenvalue e);
std::string to_string(ClassLabel label);

/// Throws DomainError("zero class") or DomainError("not residual").
ClassReport classify_class(const VarietyDesc& x, const Collection& c, const ChernVector& v);

enum class Fullness { numerically_full, full_modulo_phantoms_excluded, inconclusive };

std::string to_string(Fullness f);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct FullnessVerdict {
    int collection_rank = 0;
    int residual_rank = 0;
    int total_rank = 0;
    bool stability_assumed = false;
    Fullness verdict = Fullness::inconclusive;
    std::vector<Check> checks;
};

FullnessVerdict fullness_report(const VarietyDesc& x, const Collection& c, const std::vector<ChernVector>& residual_gens,
                                bool stability_assumed);

}  // namespace kuznum
