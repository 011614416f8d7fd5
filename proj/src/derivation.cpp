#include "koszul/derivation.hpp"

#include <stdexcept>

namespace koszul {

GradedPoly partial_derivative(const GradedPoly& f, int ordinal) {
    const ChartPtr& ch = f.chart();
    if (ordinal < 0 || ordinal >= ch->size())
        throw std::invalid_argument("partial ordinal out of range");
    const int cdeg = ch->degree(ordinal);
    GradedPoly out = GradedPoly::zero(ch);
    for (const auto& [m, c] : f.terms()) {
        int prefix = 0;  // degree of the factors left of the hit
        for (size_t k = 0; k < m.factors.size(); ++k) {
            auto [o, e] = m.factors[k];
            if (o == ordinal) {
                const int sign = parity_sign(static_cast<long long>(cdeg) * prefix);
                Monomial rest;
                rest.factors.reserve(m.factors.size());
                for (size_t t = 0; t < m.factors.size(); ++t) {
                    if (t == k) {
                        if (e > 1) rest.factors.emplace_back(o, e - 1);
                    } else {
                        rest.factors.push_back(m.factors[t]);
                    }
                }
                out.add_term(rest, c * e * sign);
                break;  // sorted factors: the coordinate occurs once
            }
            prefix += ch->degree(o) * e;
        }
    }
    return out;
}

GradedPoly partial_derivative(const GradedPoly& f, const std::string& name) {
    int o = f.chart()->ordinal(name);
    if (o < 0) throw std::invalid_argument("unknown coordinate '" + name + "'");
    return partial_derivative(f, o);
}

Derivation Derivation::make(ChartPtr chart, int degree,
                            std::vector<GradedPoly> images) {
    if (static_cast<int>(images.size()) != chart->size())
        throw std::invalid_argument("derivation needs one image per coordinate");
    for (int i = 0; i < chart->size(); ++i) {
        const auto& img = images[i];
        if (!same_chart(img.chart(), chart))
            throw std::invalid_argument("derivation image over a different chart");
        auto d = img.degree();
        if (!d)
            throw std::invalid_argument("derivation image of '" + chart->name(i) +
                                        "' is inhomogeneous");
        if (!img.is_zero() && *d != chart->degree(i) + degree)
            throw std::invalid_argument(
                "derivation image of '" + chart->name(i) + "' has degree " +
                std::to_string(*d) + ", expected " +
                std::to_string(chart->degree(i) + degree));
    }
    return Derivation{std::move(chart), degree, std::move(images)};
}

GradedPoly apply(const Derivation& X, const GradedPoly& f) {
    if (!same_chart(X.chart, f.chart()))
        throw std::invalid_argument("derivation and argument over different charts");
    GradedPoly out = GradedPoly::zero(f.chart());
    for (int c = 0; c < X.chart->size(); ++c) {
        if (X.images[c].is_zero()) continue;
        out += X.images[c] * partial_derivative(f, c);
    }
    return out;
}

Derivation lie_bracket(const Derivation& X, const Derivation& Y) {
    if (!same_chart(X.chart, Y.chart))
        throw std::invalid_argument("derivations over different charts");
    const int s = parity_sign(static_cast<long long>(X.degree) * Y.degree);
    std::vector<GradedPoly> images;
    images.reserve(X.chart->size());
    for (int c = 0; c < X.chart->size(); ++c)
        images.push_back(apply(X, Y.images[c]) - apply(Y, X.images[c]) * Rational(s));
    return Derivation::make(X.chart, X.degree + Y.degree, std::move(images));
}

Derivation euler_field(ChartPtr chart) {
    std::vector<GradedPoly> images;
    images.reserve(chart->size());
    for (int c = 0; c < chart->size(); ++c)
        images.push_back(GradedPoly::coordinate(chart, c) *
                         Rational(chart->degree(c)));
    return Derivation::make(chart, 0, std::move(images));
}

bool is_homological(const Derivation& Q) {
    if (Q.degree != 1)
        throw std::invalid_argument("homological fields have degree 1");
    // [Q, Q] = 2 Q^2 for odd Q; vanishes iff Q(Q(c)) = 0 on generators.
    for (int c = 0; c < Q.chart->size(); ++c)
        if (!apply(Q, Q.images[c]).is_zero()) return false;
    return true;
}

}  // namespace koszul
