#pragma once

#include <functional>
#include <stdexcept>
#include <utility>

#include "koszul/bracket.hpp"

namespace koszul {

// Thrown when a Hamiltonian fails the master equation {theta, theta} = 0.
// Carries the defect {theta, theta}/2 for diagnostics.
struct MasterEquationError : std::runtime_error {
    GradedPoly defect;
    explicit MasterEquationError(GradedPoly d)
        : std::runtime_error("master equation fails: {theta,theta}/2 = " +
                             d.render()),
          defect(std::move(d)) {}
};

// ------------------------------------------------------------------------
// The homotopy Poisson structure derived from a degree-(n+1) Hamiltonian
// theta on T*[n]L with {theta, theta} = 0.  The k-ary brackets on base
// polynomials are Voronov's higher derived brackets
//   l^k(f_1..f_k) = (-1)^{sum_i (k-i)(|f_i|-n)} 0*{...{theta, f_1}.., f_k},
// the arity-0 bracket (curvature) is 0* theta; the structure is strict when
// the curvature vanishes.  Each bracket with a base argument lowers the
// momentum multidegree by exactly one, so l^k = 0 for k beyond the momentum
// multidegree of theta — the structural nilpotence bound used to terminate
// every series below.
// ------------------------------------------------------------------------
class LinftyStructure {
public:
    // Validates: cotangent chart, theta homogeneous of degree n+1, master
    // equation (throws MasterEquationError with the defect otherwise).
    static LinftyStructure build(GradedPoly theta);

    const ChartPtr& chart() const { return chart_; }
    const GradedPoly& theta() const { return theta_; }
    int shift() const { return chart_->shift(); }
    const GradedPoly& curvature() const { return curvature_; }  // l^0
    bool is_strict() const { return curvature_.is_zero(); }
    // momentum multidegree of theta = max arity with l^k possibly nonzero
    int arity_bound() const { return arity_bound_; }
    // cached l^1 images on the base coordinates (the restriction Q|_L)
    const std::vector<GradedPoly>& l1_on_generators() const { return l1_gen_; }

private:
    LinftyStructure() = default;
    ChartPtr chart_;
    GradedPoly theta_;
    GradedPoly curvature_;
    int arity_bound_ = 0;
    std::vector<GradedPoly> l1_gen_;
};

// Plain nested derived bracket 0*{...{theta, f_1}..., f_k} (no decalage
// prefactor); the shifted-convention bracket.  Arguments must be base
// polynomials (the nilpotence certificate). k = 0 gives the curvature.
GradedPoly nested_bracket(const LinftyStructure& S,
                          const std::vector<GradedPoly>& args);

// l^k: nested bracket with the decalage prefactor.  Arguments must be base
// and homogeneous (a zero argument contributes degree 0 and yields 0).
GradedPoly linfty_bracket(const LinftyStructure& S,
                          const std::vector<GradedPoly>& args);

// Decalage transport sign for V-degrees d_1..d_k:
//   dec(x_1 v ... v x_k) = (-1)^{sum_i (k-i)(d_i - 1)} x_1 ^ ... ^ x_k.
int decalage_sign(const std::vector<int>& v_degrees);

// Generalized Jacobi residual at arity m, evaluated in the shifted
// (symmetric) convention:
//   sum_{k=0}^{m} sum_{sigma in Sh(k, m-k)} eps(sigma)
//       Q^{m-k+1}(Q^k(x_sigma(1..k)), x_sigma(k+1..m))
// with eps the Koszul sign on shifted degrees |x|-n and Q^k the plain
// nested bracket (k = 0 inserts the curvature).  Zero for every valid
// theta; equivalent to the antisymmetric-convention relation through the
// invertible decalage.  Requires m >= 1 and m <= arity_cap.
GradedPoly linfty_identity_residual(const LinftyStructure& S,
                                    const std::vector<GradedPoly>& elems,
                                    int arity_cap);

// Maurer-Cartan residual sum_{k>=0} l^k(f,..,f)/k! for base homogeneous f
// of degree n; the series terminates at the structural arity bound.
GradedPoly mc_residual(const LinftyStructure& S, const GradedPoly& f);

// A formal family F = sum_{k>=1} coefficients[k-1] nu^k (constant term
// zero, each coefficient homogeneous of degree n).
struct FormalElement {
    std::vector<GradedPoly> coefficients;
};

// Residuals of the Maurer-Cartan equation for F order by order in nu:
// result[m-1] = sum_{j=1}^{m} 1/j! sum_{i_1+..+i_j=m, i_l>=1}
//                   l^j(g_{i_1}, .., g_{i_j}),  m = 1..order.
std::vector<GradedPoly> mc_formal_residual(const LinftyStructure& S,
                                           const FormalElement& F, int order);

// Exponential flow e^{-{f, .}} g = sum_k (-1)^k {f,.}^k g / k!.  The base
// certificate on f makes {f,.} nilpotent on g (momentum multidegree drops
// by one per application); refused for non-base f.
GradedPoly exp_flow(const LinftyStructure& S, const GradedPoly& f,
                    const GradedPoly& g);

// Gauge right-hand side sum_{k>=0} l^{1+k}(f,..,f,lambda)/k! for base f of
// degree n and base lambda of degree n-1.  For strict structures equals
// 0*{lambda, exp_flow(f, theta)}.
GradedPoly gauge_rhs(const LinftyStructure& S, const GradedPoly& f,
                     const GradedPoly& lambda);

// Kuranishi obstruction map f -> l^2(f, f), defined on l^1-closed f
// (throws std::invalid_argument when l^1(f) != 0).
GradedPoly kuranishi(const LinftyStructure& S, const GradedPoly& f);

// ------------------------------------------------------------------------
// V-algebras: an ambient graded Lie-type bracket, an abelian subalgebra,
// and a projection p onto it with p[x, y] = p[i p x, y] + p[x, i p y].
// The higher derived brackets of an odd Delta with [Delta, Delta] = 0 are
//   Q^i_Delta(a_1..a_i) = p [ .. [Delta, a_1], .., a_i ],
// with curvature p(Delta).  The canonical instantiation (functions on
// T*[n]L, base polynomials, 0*) recovers nested_bracket above.
// ------------------------------------------------------------------------
struct VAlgebra {
    std::function<GradedPoly(const GradedPoly&, const GradedPoly&)> bracket;
    std::function<bool(const GradedPoly&)> is_abelian;  // membership test
    std::function<GradedPoly(const GradedPoly&)> project;
};

VAlgebra canonical_v_algebra(const LinftyStructure& S);

// p [ .. [Delta, a_1], .., a_k ]; validates [Delta, Delta] = 0 and that
// every argument lies in the abelian subalgebra.
GradedPoly voronov_bracket(const VAlgebra& V, const GradedPoly& Delta,
                           const std::vector<GradedPoly>& args);

// ------------------------------------------------------------------------
// Extended brackets on base (+) ambient[1]: the L-infinity structure of the
// deformation complex of a strict structure.  An element is a pair
// (base part f, ambient part x); homogeneous when the parts' shifted
// degrees |f| - (n-1) and |x| - n agree.
//   L^1(f + x)        = (0* x + 0*{theta, f})  +  (-{theta, x})
//   L^2(x_1, x_2)     = -{x_1, x_2}                       (two ambient)
//   L^{1+k}(x, f_1..f_k) = (-1)^{k(|x|-n+1) + sum_i (k-i)(|f_i|-n)}
//                          0*{..{x, f_1}.., f_k}          (one ambient)
//   L^k(f_1..f_k)     = l^k                               (all base)
// and zero otherwise (two ambient with bases, or three+ ambient).
// ------------------------------------------------------------------------
struct ExtendedElement {
    GradedPoly base;     // element of C_L (base polynomials)
    GradedPoly ambient;  // element of C_{T*[n]L}

    static ExtendedElement make(GradedPoly base, GradedPoly ambient);
    bool is_zero() const { return base.is_zero() && ambient.is_zero(); }
};

// Multilinear evaluation of the arity-k extended bracket.  Requires a
// strict structure and arity == args.size() >= 1 (error: invalid arity
// pattern otherwise); mixed patterns that the families declare zero
// contribute zero.
ExtendedElement extended_brackets(const LinftyStructure& S, int arity,
                                  const std::vector<ExtendedElement>& args);

// Extended Maurer-Cartan residual of (f, theta_t) with base f of degree n
// and ambient theta_t of degree n+1, for strict S:
//   ambient part  {theta, theta_t} + {theta_t, theta_t}/2
//   base part     sum_{k>=0} ( l^k(f..f) + L^{1+k}(theta_t, f..f) ) / k! .
// Returned as (ambient residual, base residual).
std::pair<GradedPoly, GradedPoly> mc_extended_residual(
    const LinftyStructure& S, const GradedPoly& f, const GradedPoly& theta_t);

}  // namespace koszul
