#pragma once

#include "koszul/forms.hpp"

namespace koszul {

// ------------------------------------------------------------------------
// Canonical Poisson bracket of degree -n on a shifted cotangent chart
// T*[n]L.  Generated by the coordinate table
//     {q_i, p^j} = -delta_ij,   {q, q} = {p, p} = 0,
// extended by graded skew symmetry
//     {f, g} = -(-1)^{(|f|-n)(|g|-n)} {g, f}
// and the Leibniz laws
//     {f, gh} = {f, g} h + (-1)^{|g|(|f|-n)} g {f, h}
//     {fg, h} = f {g, h} + (-1)^{|g|(|h|-n)} {f, h} g .
// Inhomogeneous inputs are bracketed termwise (monomials are homogeneous);
// pass `inhomogeneous` to learn whether that happened.
// ------------------------------------------------------------------------
GradedPoly canonical_bracket(const GradedPoly& f, const GradedPoly& g,
                             bool* inhomogeneous = nullptr);

// Hamiltonian vector field X_f = {f, .} of degree |f| - n (f homogeneous).
// Satisfies X_{{f,g}} = [X_f, X_g].
Derivation hamiltonian_vf(const GradedPoly& f);

// Momentum lifting J of base vector fields: the unique extension of
//     J(d/dq_i) = (-1)^{|q_i|(n - |q_i|)} p_i
// to a left module morphism, J(X) = sum_i (-1)^{|q_i|(n-|q_i|)} X(q_i) p_i.
// X must be a base vector field: base images on base coordinates only.
// Satisfies {J(X), f} = X(f) for base f, and J([X,Y]) = {J(X), J(Y)}.
GradedPoly j_map(const Derivation& X);

// Pullback along the zero section L -> T*[n]L: kill every monomial with a
// momentum factor.  A projection onto base polynomials satisfying
//   0*{f, g} = 0*{pi* 0* f, g} + 0*{f, pi* 0* g}.
GradedPoly zero_section_pullback(const GradedPoly& f);

// Multivector reading: a polynomial on T*[n]L decomposed by momentum
// multidegree; the multidegree-k piece is a k-vector on the base.  The
// Schouten bracket of multivectors is the canonical bracket transported
// through J, which on this chart is the canonical bracket itself.
std::map<int, GradedPoly> multivector_components(const GradedPoly& f);
GradedPoly schouten_bracket(const GradedPoly& P, const GradedPoly& R);

// ------------------------------------------------------------- graphs ---
// The graph of a base 1-form alpha = sum dq_i * c_i of form degree n is the
// subspace cut out by the ideal with generators
//     g_i = p_i - (-1)^{|q_i|(n-|q_i|)} c_i
// (the sign matches J, i.e. the section q -> (q, alpha(q)) pulls p_i back
// to (-1)^{|q_i|(n-|q_i|)} c_i).

// Substitution p_i -> (-1)^{|q_i|(n-|q_i|)} c_i; its kernel is the graph
// ideal, so F lies in the ideal iff graph_substitute(alpha, F) == 0.
GradedPoly graph_substitute(const OneForm& alpha, const GradedPoly& F);
std::vector<GradedPoly> graph_ideal_generators(const OneForm& alpha);

// Lagrangian criterion: the graph is Lagrangian iff d(alpha) = 0.
// Preconditions: cotangent chart, base components, form degree n.
bool graph_is_lagrangian(const OneForm& alpha);

}  // namespace koszul
