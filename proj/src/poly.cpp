#include "koszul/poly.hpp"

#include <stdexcept>

namespace koszul {

int monomial_degree(const Chart& chart, const Monomial& m) {
    int d = 0;
    for (auto [o, e] : m.factors) d += chart.degree(o) * e;
    return d;
}

std::pair<int, Monomial> monomial_product(const Chart& chart, const Monomial& a,
                                          const Monomial& b) {
    // Merge the sorted factor lists.  Moving a factor of b left past the
    // remaining tail of a transposes it with each tail factor; only
    // odd-odd transpositions contribute -1.  odd_tail[i] counts the odd
    // factors (with multiplicity) in a.factors[i:].
    std::vector<int> odd_tail(a.factors.size() + 1, 0);
    for (int i = static_cast<int>(a.factors.size()) - 1; i >= 0; --i) {
        auto [o, e] = a.factors[i];
        odd_tail[i] = odd_tail[i + 1] + (chart.is_odd(o) ? e : 0);
    }
    Monomial out;
    out.factors.reserve(a.factors.size() + b.factors.size());
    int sign = 1;
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        auto [o1, e1] = a.factors[i];
        auto [o2, e2] = b.factors[j];
        if (o1 < o2) {
            out.factors.emplace_back(o1, e1);
            ++i;
        } else if (o1 > o2) {
            if (chart.is_odd(o2)) {
                if (e2 > 1) return {0, {}};
                if (odd_tail[i] % 2 != 0) sign = -sign;
            }
            out.factors.emplace_back(o2, e2);
            ++j;
        } else {
            if (chart.is_odd(o1)) return {0, {}};  // odd square
            out.factors.emplace_back(o1, e1 + e2);
            ++i;
            ++j;
        }
    }
    for (; i < a.factors.size(); ++i) out.factors.push_back(a.factors[i]);
    for (; j < b.factors.size(); ++j) out.factors.push_back(b.factors[j]);
    return {sign, out};
}

GradedPoly GradedPoly::zero(ChartPtr chart) { return GradedPoly(std::move(chart)); }

GradedPoly GradedPoly::constant(ChartPtr chart, const Rational& c) {
    GradedPoly p(std::move(chart));
    if (c != 0) p.terms_[Monomial{}] = c;
    return p;
}

GradedPoly GradedPoly::coordinate(ChartPtr chart, int ordinal) {
    if (ordinal < 0 || ordinal >= chart->size())
        throw std::invalid_argument("coordinate ordinal out of range");
    GradedPoly p(std::move(chart));
    p.terms_[Monomial{{{ordinal, 1}}}] = 1;
    return p;
}

GradedPoly GradedPoly::coordinate(ChartPtr chart, const std::string& name) {
    int o = chart->ordinal(name);
    if (o < 0) throw std::invalid_argument("unknown coordinate '" + name + "'");
    return coordinate(std::move(chart), o);
}

void GradedPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

static void require_same_chart(const GradedPoly& a, const GradedPoly& b) {
    if (!same_chart(a.chart(), b.chart()))
        throw std::invalid_argument("polynomials over different charts");
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
    require_same_chart(*this, o);
    GradedPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
    require_same_chart(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const {
    require_same_chart(*this, o);
    GradedPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly r(chart_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
    require_same_chart(*this, o);
    GradedPoly r(chart_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            auto [s, m] = monomial_product(*chart_, m1, m2);
            if (s != 0) r.add_term(m, c1 * c2 * s);
        }
    return r;
}

GradedPoly GradedPoly::operator*(const Rational& c) const {
    GradedPoly r(chart_);
    if (c == 0) return r;
    for (const auto& [m, a] : terms_) r.terms_[m] = a * c;
    return r;
}

bool GradedPoly::operator==(const GradedPoly& o) const {
    return same_chart(chart_, o.chart_) && terms_ == o.terms_;
}

int GradedPoly::monomial_degree(const Monomial& m) const {
    int d = 0;
    for (auto [o, e] : m.factors) d += chart_->degree(o) * e;
    return d;
}

std::optional<int> GradedPoly::degree() const {
    if (terms_.empty()) return 0;
    int d = monomial_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (monomial_degree(m) != d) return std::nullopt;
    return d;
}

std::map<int, GradedPoly> GradedPoly::homogeneous_parts() const {
    std::map<int, GradedPoly> parts;
    for (const auto& [m, c] : terms_) {
        int d = monomial_degree(m);
        auto it = parts.find(d);
        if (it == parts.end()) it = parts.emplace(d, GradedPoly(chart_)).first;
        it->second.add_term(m, c);
    }
    return parts;
}

GradedPoly GradedPoly::substitute(const std::map<int, GradedPoly>& images) const {
    for (const auto& [o, v] : images) {
        if (o < 0 || o >= chart_->size())
            throw std::invalid_argument("substitution ordinal out of range");
        require_same_chart(*this, v);
        auto d = v.degree();
        if (!d)
            throw std::invalid_argument("substitution image for '" +
                                        chart_->name(o) + "' is inhomogeneous");
        if (!v.is_zero() && *d != chart_->degree(o))
            throw std::invalid_argument(
                "substitution image for '" + chart_->name(o) + "' has degree " +
                std::to_string(*d) + ", expected " +
                std::to_string(chart_->degree(o)));
    }
    GradedPoly r(chart_);
    for (const auto& [m, c] : terms_) {
        GradedPoly term = GradedPoly::constant(chart_, c);
        for (auto [o, e] : m.factors) {
            auto it = images.find(o);
            const GradedPoly img =
                it == images.end() ? GradedPoly::coordinate(chart_, o) : it->second;
            for (int k = 0; k < e; ++k) term = term * img;
        }
        r += term;
    }
    return r;
}

int GradedPoly::momentum_multidegree(const Monomial& m) const {
    int d = 0;
    for (auto [o, e] : m.factors)
        if (chart_->base_of(o) >= 0) d += e;
    return d;
}

int GradedPoly::momentum_multidegree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, momentum_multidegree(m));
    return d;
}

std::string GradedPoly::render() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string factors;
        for (auto [o, e] : m.factors)
            for (int k = 0; k < e; ++k) {
                if (!factors.empty()) factors += "*";
                factors += chart_->name(o);
            }
        if (factors.empty()) {
            out += render_rational(a);
        } else if (a == 1) {
            out += factors;
        } else {
            out += render_rational(a) + "*" + factors;
        }
        first = false;
    }
    return out;
}

}  // namespace koszul
