#pragma once

#include <map>

#include "koszul/derivation.hpp"

namespace koszul {

// A polynomial 1-form alpha = sum_i dx_i * c_i with coefficients written on
// the right.  comps[i] is the coefficient of dx_i.
struct OneForm {
    ChartPtr chart;
    std::vector<GradedPoly> comps;  // indexed by ordinal

    static OneForm make(ChartPtr chart, std::vector<GradedPoly> comps);
    bool operator==(const OneForm& o) const;

    // Degree of dx_i * c_i is |x_i| + |c_i|.  Zero form: 0 by convention;
    // nullopt when components have mixed form degrees.
    std::optional<int> form_degree() const;

    std::string render() const;  // "d(x)*c + ..." canonical, re-parseable
};

// df = sum_i dx_i * (df/dx_i).
OneForm exterior_derivative(const GradedPoly& f);

// The graded curl of a 1-form, i.e. the coefficient skeleton of d(alpha):
// the (i, j) component (i < j) is
//     d(comps[j])/dx_i - (-1)^{|x_i||x_j|} d(comps[i])/dx_j ,
// stored antisymmetrized: the (j, i) value is recovered from (i, j) via
// C_ji = -(-1)^{|x_i||x_j|} C_ij.  Only nonzero components are stored.
struct TwoFormSkeleton {
    ChartPtr chart;
    std::map<std::pair<int, int>, GradedPoly> comps;  // keys i < j

    // Component for arbitrary index order (applies the Koszul sign).
    GradedPoly component(int i, int j) const;
    bool is_zero() const { return comps.empty(); }
};

TwoFormSkeleton curl(const OneForm& alpha);

// Closedness: all graded-curl components vanish.  Calibrated so that
// one_form_closed(exterior_derivative(f)) holds identically (left partials
// commute in the graded sense, d_a d_b = (-1)^{|a||b|} d_b d_a).
bool one_form_closed(const OneForm& alpha);

}  // namespace koszul
