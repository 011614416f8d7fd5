#include "koszul/bracket.hpp"

#include <stdexcept>

namespace koszul {

namespace {

// {c1, c2} on generators: {q_i, p^i} = -1; {p^i, q_i} follows from skew,
//   {p, q} = -(-1)^{(|p|-n)(|q|-n)} {q, p};
// every other pair brackets to zero.
Rational coord_table(const Chart& ch, int c1, int c2) {
    if (ch.momentum_of(c1) == c2) return Rational(-1);
    if (ch.base_of(c1) == c2) {
        const int n = ch.shift();
        const long long e = static_cast<long long>(ch.degree(c1) - n) *
                            (ch.degree(c2) - n);
        return Rational(parity_sign(e));  // = -(-1)^e * (-1)
    }
    return Rational(0);
}

GradedPoly mono_poly(const ChartPtr& ch, const Monomial& m) {
    GradedPoly p = GradedPoly::zero(ch);
    p.add_term(m, Rational(1));
    return p;
}

// Split one power of the leading factor off a nonempty monomial.
std::pair<int, Monomial> peel(const Monomial& m) {
    auto [o, e] = m.factors.front();
    Monomial rest;
    rest.factors.assign(m.factors.begin(), m.factors.end());
    if (e > 1)
        rest.factors.front().second = e - 1;
    else
        rest.factors.erase(rest.factors.begin());
    return {o, rest};
}

// {c, m2} for a single coordinate c: peel m2 with the right Leibniz law
//   {c, d rest} = {c, d} rest + (-1)^{|d|(|c|-n)} d {c, rest}.
GradedPoly bracket_coord(const ChartPtr& ch, int c, const Monomial& m2) {
    if (m2.empty()) return GradedPoly::zero(ch);
    if (m2.factors.size() == 1 && m2.factors[0].second == 1)
        return GradedPoly::constant(ch, coord_table(*ch, c, m2.factors[0].first));
    auto [d, rest] = peel(m2);
    GradedPoly out = mono_poly(ch, rest) * coord_table(*ch, c, d);
    const int s = parity_sign(static_cast<long long>(ch->degree(d)) *
                              (ch->degree(c) - ch->shift()));
    out += GradedPoly::coordinate(ch, d) * bracket_coord(ch, c, rest) * Rational(s);
    return out;
}

// {m1, m2}: peel m1 with the left Leibniz law
//   {c rest, g} = c {rest, g} + (-1)^{|rest|(|g|-n)} {c, g} rest.
GradedPoly bracket_mono(const ChartPtr& ch, const Monomial& m1,
                        const Monomial& m2) {
    if (m1.empty() || m2.empty()) return GradedPoly::zero(ch);
    if (m1.factors.size() == 1 && m1.factors[0].second == 1)
        return bracket_coord(ch, m1.factors[0].first, m2);
    auto [c, rest] = peel(m1);
    GradedPoly out = GradedPoly::coordinate(ch, c) * bracket_mono(ch, rest, m2);
    const int s = parity_sign(static_cast<long long>(monomial_degree(*ch, rest)) *
                              (monomial_degree(*ch, m2) - ch->shift()));
    out += bracket_coord(ch, c, m2) * mono_poly(ch, rest) * Rational(s);
    return out;
}

}  // namespace

GradedPoly canonical_bracket(const GradedPoly& f, const GradedPoly& g,
                             bool* inhomogeneous) {
    if (!same_chart(f.chart(), g.chart()))
        throw std::invalid_argument("bracket arguments over different charts");
    const ChartPtr& ch = f.chart();
    if (!ch->is_cotangent())
        throw std::invalid_argument("canonical bracket needs a cotangent chart");
    if (inhomogeneous) *inhomogeneous = !f.is_homogeneous() || !g.is_homogeneous();
    GradedPoly out = GradedPoly::zero(ch);
    for (const auto& [m1, c1] : f.terms())
        for (const auto& [m2, c2] : g.terms())
            out += bracket_mono(ch, m1, m2) * (c1 * c2);
    return out;
}

Derivation hamiltonian_vf(const GradedPoly& f) {
    auto d = f.degree();
    if (!d) throw std::invalid_argument("Hamiltonian must be homogeneous");
    const ChartPtr& ch = f.chart();
    std::vector<GradedPoly> images;
    images.reserve(ch->size());
    for (int c = 0; c < ch->size(); ++c)
        images.push_back(canonical_bracket(f, GradedPoly::coordinate(ch, c)));
    return Derivation::make(ch, *d - ch->shift(), std::move(images));
}

GradedPoly j_map(const Derivation& X) {
    const ChartPtr& ch = X.chart;
    const int n = ch->shift();
    GradedPoly out = GradedPoly::zero(ch);
    for (int c = 0; c < ch->size(); ++c) {
        if (X.images[c].is_zero()) continue;
        if (ch->is_momentum(c))
            throw std::invalid_argument("j_map needs a base vector field");
        if (!X.images[c].is_base())
            throw std::invalid_argument("j_map image must be a base polynomial");
        const int i = ch->degree(c);
        const int s = parity_sign(static_cast<long long>(i) * (n - i));
        out += X.images[c] *
               GradedPoly::coordinate(ch, ch->momentum_of(c)) * Rational(s);
    }
    return out;
}

GradedPoly zero_section_pullback(const GradedPoly& f) {
    const ChartPtr& ch = f.chart();
    if (!ch->is_cotangent())
        throw std::invalid_argument("zero section needs a cotangent chart");
    GradedPoly out = GradedPoly::zero(ch);
    for (const auto& [m, c] : f.terms())
        if (f.momentum_multidegree(m) == 0) out.add_term(m, c);
    return out;
}

std::map<int, GradedPoly> multivector_components(const GradedPoly& f) {
    std::map<int, GradedPoly> out;
    for (const auto& [m, c] : f.terms()) {
        int k = f.momentum_multidegree(m);
        auto it = out.find(k);
        if (it == out.end()) it = out.emplace(k, GradedPoly::zero(f.chart())).first;
        it->second.add_term(m, c);
    }
    return out;
}

GradedPoly schouten_bracket(const GradedPoly& P, const GradedPoly& R) {
    // Multivectors are momentum polynomials; their Schouten bracket is the
    // canonical bracket transported through J, i.e. the bracket itself.
    return canonical_bracket(P, R);
}

static void check_graph_form(const OneForm& alpha) {
    const ChartPtr& ch = alpha.chart;
    if (!ch->is_cotangent())
        throw std::invalid_argument("graphs live in a cotangent chart");
    for (int i = 0; i < ch->size(); ++i)
        if (!alpha.comps[i].is_zero() &&
            (ch->is_momentum(i) || !alpha.comps[i].is_base()))
            throw std::invalid_argument("graph takes a base one-form");
    auto fd = alpha.form_degree();
    if (!fd)
        throw std::invalid_argument("graph one-form must have a single form degree");
    if (!(alpha == OneForm::make(ch, std::vector<GradedPoly>(
                                         ch->size(), GradedPoly::zero(ch)))) &&
        *fd != ch->shift())
        throw std::invalid_argument(
            "graph one-form degree " + std::to_string(*fd) +
            " does not match the shift " + std::to_string(ch->shift()));
}

GradedPoly graph_substitute(const OneForm& alpha, const GradedPoly& F) {
    check_graph_form(alpha);
    const ChartPtr& ch = alpha.chart;
    const int n = ch->shift();
    std::map<int, GradedPoly> images;
    for (int q = 0; q < ch->base_count(); ++q) {
        const int i = ch->degree(q);
        const int s = parity_sign(static_cast<long long>(i) * (n - i));
        images[ch->momentum_of(q)] = alpha.comps[q] * Rational(s);
    }
    return F.substitute(images);
}

std::vector<GradedPoly> graph_ideal_generators(const OneForm& alpha) {
    check_graph_form(alpha);
    const ChartPtr& ch = alpha.chart;
    const int n = ch->shift();
    std::vector<GradedPoly> gens;
    gens.reserve(ch->base_count());
    for (int q = 0; q < ch->base_count(); ++q) {
        const int i = ch->degree(q);
        const int s = parity_sign(static_cast<long long>(i) * (n - i));
        gens.push_back(GradedPoly::coordinate(ch, ch->momentum_of(q)) -
                       alpha.comps[q] * Rational(s));
    }
    return gens;
}

bool graph_is_lagrangian(const OneForm& alpha) {
    check_graph_form(alpha);
    return one_form_closed(alpha);
}

}  // namespace koszul
