#include "koszul/forms.hpp"

#include <stdexcept>

namespace koszul {

OneForm OneForm::make(ChartPtr chart, std::vector<GradedPoly> comps) {
    if (static_cast<int>(comps.size()) != chart->size())
        throw std::invalid_argument("one-form needs one component per coordinate");
    for (const auto& c : comps)
        if (!same_chart(c.chart(), chart))
            throw std::invalid_argument("one-form component over a different chart");
    return OneForm{std::move(chart), std::move(comps)};
}

bool OneForm::operator==(const OneForm& o) const {
    if (!same_chart(chart, o.chart)) return false;
    for (size_t i = 0; i < comps.size(); ++i)
        if (!(comps[i] == o.comps[i])) return false;
    return true;
}

std::optional<int> OneForm::form_degree() const {
    std::optional<int> deg;
    for (int i = 0; i < chart->size(); ++i) {
        if (comps[i].is_zero()) continue;
        auto d = comps[i].degree();
        if (!d) return std::nullopt;  // inhomogeneous coefficient
        int fd = chart->degree(i) + *d;
        if (deg && *deg != fd) return std::nullopt;
        deg = fd;
    }
    return deg ? deg : std::optional<int>(0);
}

std::string OneForm::render() const {
    std::string out;
    for (int i = 0; i < chart->size(); ++i) {
        if (comps[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "d(" + chart->name(i) + ")*(" + comps[i].render() + ")";
    }
    return out.empty() ? "0" : out;
}

OneForm exterior_derivative(const GradedPoly& f) {
    std::vector<GradedPoly> comps;
    comps.reserve(f.chart()->size());
    for (int i = 0; i < f.chart()->size(); ++i)
        comps.push_back(partial_derivative(f, i));
    return OneForm::make(f.chart(), std::move(comps));
}

GradedPoly TwoFormSkeleton::component(int i, int j) const {
    if (i == j) {
        auto it = comps.find({i, i});
        return it == comps.end() ? GradedPoly::zero(chart) : it->second;
    }
    const bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = comps.find({i, j});
    if (it == comps.end()) return GradedPoly::zero(chart);
    if (!flip) return it->second;
    const int s = -parity_sign(static_cast<long long>(chart->degree(i)) *
                               chart->degree(j));
    return it->second * Rational(s);
}

TwoFormSkeleton curl(const OneForm& alpha) {
    const ChartPtr& ch = alpha.chart;
    TwoFormSkeleton sk{ch, {}};
    for (int i = 0; i < ch->size(); ++i) {
        // dx_i ^ dx_i survives for odd x_i: the (i,i) condition is
        // (1 - (-1)^{|x_i|^2}) d(comps[i])/dx_i = 2 d(comps[i])/dx_i.
        if (ch->is_odd(i)) {
            GradedPoly c = partial_derivative(alpha.comps[i], i) * Rational(2);
            if (!c.is_zero()) sk.comps.emplace(std::make_pair(i, i), std::move(c));
        }
    }
    for (int i = 0; i < ch->size(); ++i)
        for (int j = i + 1; j < ch->size(); ++j) {
            const int s = parity_sign(static_cast<long long>(ch->degree(i)) *
                                      ch->degree(j));
            GradedPoly c = partial_derivative(alpha.comps[j], i) -
                           partial_derivative(alpha.comps[i], j) * Rational(s);
            if (!c.is_zero()) sk.comps.emplace(std::make_pair(i, j), std::move(c));
        }
    return sk;
}

bool one_form_closed(const OneForm& alpha) { return curl(alpha).is_zero(); }

}  // namespace koszul
