#pragma once

#include <initializer_list>
#include <random>
#include <string>

#include "kuznum/walls.hpp"

namespace support {

using kuznum::ChernVector;
using kuznum::Rational;

inline Rational q(const char* text) { return kuznum::parse_rational(text); }

inline ChernVector cv(std::initializer_list<Rational> values) {
    ChernVector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (const auto& x : values) v(i++) = x;
    return v;
}

inline const kuznum::VarietyDesc& preset(const char* name) { return *kuznum::find_preset(name); }

inline ChernVector spinor() { return cv({2, -1, 0, Rational(1, 12)}); }

// Random element of the numerical lattice: integer combination of its basis.
inline ChernVector random_lattice_class(const kuznum::VarietyDesc& x, std::mt19937_64& rng, int bound = 5) {
    const kuznum::IntMatrix basis = kuznum::numerical_lattice_basis(x);
    std::uniform_int_distribution<int> coeff(-bound, bound);
    kuznum::IntVector coords = kuznum::IntVector::Zero(x.rank());
    for (Eigen::Index i = 0; i < basis.rows(); ++i) coords += kuznum::Integer(coeff(rng)) * basis.row(i).transpose();
    return kuznum::from_lattice_coords(x, coords);
}

inline std::string str(const ChernVector& v) {
    std::string s = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + kuznum::to_string(v(i));
    return s + ")";
}

}  // namespace support
