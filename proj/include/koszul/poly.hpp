#pragma once

#include <map>
#include <optional>
#include <vector>

#include "koszul/chart.hpp"
#include "koszul/rational.hpp"

namespace koszul {

// A normally ordered monomial: factors (ordinal, exponent) sorted by
// ordinal, exponents >= 1, odd ordinals with exponent exactly 1.  The empty
// factor list is the constant monomial 1.
struct Monomial {
    std::vector<std::pair<int, int>> factors;

    bool empty() const { return factors.empty(); }
    auto operator<=>(const Monomial&) const = default;
};

// An element of the free graded-commutative polynomial algebra on a chart:
// a finite sum of normally ordered monomials with exact rational
// coefficients.  The term map is kept ordered so that iteration, rendering
// and reports are canonical and reproducible.
class GradedPoly {
public:
    GradedPoly() = default;  // invalid until given a chart
    static GradedPoly zero(ChartPtr chart);
    static GradedPoly constant(ChartPtr chart, const Rational& c);
    static GradedPoly coordinate(ChartPtr chart, int ordinal);
    static GradedPoly coordinate(ChartPtr chart, const std::string& name);

    const ChartPtr& chart() const { return chart_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GradedPoly operator+(const GradedPoly& o) const;
    GradedPoly operator-(const GradedPoly& o) const;
    GradedPoly operator-() const;
    GradedPoly operator*(const GradedPoly& o) const;
    GradedPoly operator*(const Rational& c) const;
    GradedPoly& operator+=(const GradedPoly& o);
    bool operator==(const GradedPoly& o) const;

    // Degree of a monomial in this chart's grading.
    int monomial_degree(const Monomial& m) const;

    // Degree of the polynomial: 0 for the zero polynomial (by convention),
    // the common term degree when homogeneous, nullopt when inhomogeneous.
    std::optional<int> degree() const;
    bool is_homogeneous() const { return degree().has_value(); }

    // Decomposition into homogeneous pieces, keyed by degree.
    std::map<int, GradedPoly> homogeneous_parts() const;

    // Degree-preserving algebra morphism determined by coordinate images.
    // Keys are ordinals; unassigned coordinates map to themselves.  Each
    // image must be homogeneous of the coordinate's degree (throws
    // std::invalid_argument otherwise).
    GradedPoly substitute(const std::map<int, GradedPoly>& images) const;

    // Canonical rendering, re-parseable by the scenario expression grammar:
    // terms in canonical monomial order, exponents as repeated factors,
    // e.g. "x*x + -3/2*x*y" renders as "x*x - 3/2*x*y".
    std::string render() const;

    // --- cotangent-chart helpers -----------------------------------------
    // Number of momentum factors of a monomial / max over the terms.
    int momentum_multidegree(const Monomial& m) const;
    int momentum_multidegree() const;
    bool is_base() const { return momentum_multidegree() == 0; }

    // Internal: add c * m (normally ordered) to the term map.
    void add_term(const Monomial& m, const Rational& c);

private:
    explicit GradedPoly(ChartPtr chart) : chart_(std::move(chart)) {}
    ChartPtr chart_;
    std::map<Monomial, Rational> terms_;
};

// Degree of a normally ordered monomial in a chart's grading.
int monomial_degree(const Chart& chart, const Monomial& m);

// Product of two normally ordered monomials: merges the factor lists,
// accumulating (-1)^{|x||y|} per transposition of odd factors; returns
// sign 0 when an odd coordinate would acquire exponent 2.
std::pair<int, Monomial> monomial_product(const Chart& chart,
                                          const Monomial& a,
                                          const Monomial& b);

inline GradedPoly operator*(const Rational& c, const GradedPoly& p) { return p * c; }

}  // namespace koszul
