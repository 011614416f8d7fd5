#pragma once

#include <vector>

#include "koszul/poly.hpp"

namespace koszul {

// Left partial derivative with respect to a coordinate c: on a normally
// ordered monomial, delete one factor of c, multiply by the exponent and by
// the Koszul sign (-1)^{|c| * deg(prefix)} accumulated while commuting
// d/dc to the factor's position.  Hence d(a*b)/db = -a for odd a, b.
GradedPoly partial_derivative(const GradedPoly& f, int ordinal);
GradedPoly partial_derivative(const GradedPoly& f, const std::string& name);

// A graded derivation X of degree k, determined by its coordinate images:
//   X(fg) = X(f) g + (-1)^{|f| k} f X(g).
// Images must be homogeneous of degree |c| + k (zero images always legal).
struct Derivation {
    ChartPtr chart;
    int degree = 0;
    std::vector<GradedPoly> images;  // indexed by ordinal

    static Derivation make(ChartPtr chart, int degree,
                           std::vector<GradedPoly> images);
};

// X(f) = sum_c images[c] * d f / d c  (images multiply from the left);
// this is the unique degree-k derivation with the given coordinate images.
GradedPoly apply(const Derivation& X, const GradedPoly& f);

// Graded commutator [X, Y] = X Y - (-1)^{|X||Y|} Y X, again a derivation.
Derivation lie_bracket(const Derivation& X, const Derivation& Y);

// Euler vector field E = sum |c| c d/dc;  E(f) = |f| f on homogeneous f.
Derivation euler_field(ChartPtr chart);

// For |Q| = 1: whether [Q, Q] = 0, i.e. Q(Q(c)) = 0 on every coordinate.
// Throws std::invalid_argument when Q does not have degree 1.
bool is_homological(const Derivation& Q);

}  // namespace koszul
