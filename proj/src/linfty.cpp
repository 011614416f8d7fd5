#include "koszul/linfty.hpp"

#include <algorithm>
#include <string>

namespace koszul {

namespace {

void require_base_args(const std::vector<GradedPoly>& args, const char* who) {
    for (const auto& f : args)
        if (!f.is_base())
            throw std::invalid_argument(
                std::string(who) +
                ": arguments must be base polynomials (momentum-free), the "
                "certificate that the derived series terminates");
}

// Homogeneous degree of f, with the zero polynomial counting as degree 0.
int homogeneous_degree(const GradedPoly& f, const char* who) {
    auto d = f.degree();
    if (!d)
        throw std::invalid_argument(std::string(who) +
                                    ": arguments must be homogeneous");
    return *d;
}

void require_degree(const GradedPoly& f, int want, const char* who,
                    const char* what) {
    if (f.is_zero()) return;
    auto d = f.degree();
    if (!d || *d != want)
        throw std::invalid_argument(std::string(who) + ": " + what +
                                    " must be homogeneous of degree " +
                                    std::to_string(want));
}

Rational inv_factorial(int k) { return Rational(1) / Rational(factorial(k)); }

}  // namespace

LinftyStructure LinftyStructure::build(GradedPoly theta) {
    const ChartPtr& ch = theta.chart();
    if (!ch->is_cotangent())
        throw std::invalid_argument(
            "LinftyStructure: theta must live on a shifted cotangent chart");
    const int n = ch->shift();
    if (!theta.is_zero()) {
        auto d = theta.degree();
        if (!d || *d != n + 1)
            throw std::invalid_argument(
                "LinftyStructure: theta must be homogeneous of degree n + 1 = " +
                std::to_string(n + 1));
    }
    GradedPoly defect2 = canonical_bracket(theta, theta);
    if (!defect2.is_zero())
        throw MasterEquationError(defect2 * Rational(1, 2));

    LinftyStructure S;
    S.chart_ = ch;
    S.curvature_ = zero_section_pullback(theta);
    S.arity_bound_ = theta.momentum_multidegree();
    S.l1_gen_.reserve(ch->base_count());
    for (int i = 0; i < ch->base_count(); ++i)
        S.l1_gen_.push_back(zero_section_pullback(
            canonical_bracket(theta, GradedPoly::coordinate(ch, i))));
    S.theta_ = std::move(theta);
    return S;
}

GradedPoly nested_bracket(const LinftyStructure& S,
                          const std::vector<GradedPoly>& args) {
    require_base_args(args, "nested_bracket");
    GradedPoly cur = S.theta();
    for (const auto& f : args) {
        if (cur.is_zero()) break;
        cur = canonical_bracket(cur, f);
    }
    return zero_section_pullback(cur);
}

GradedPoly linfty_bracket(const LinftyStructure& S,
                          const std::vector<GradedPoly>& args) {
    require_base_args(args, "linfty_bracket");
    const int k = static_cast<int>(args.size());
    const int n = S.shift();
    long long e = 0;
    for (int i = 1; i <= k; ++i) {
        const auto& f = args[i - 1];
        if (f.is_zero()) return GradedPoly::zero(S.chart());
        e += static_cast<long long>(k - i) *
             (homogeneous_degree(f, "linfty_bracket") - n);
    }
    return nested_bracket(S, args) * Rational(parity_sign(e));
}

int decalage_sign(const std::vector<int>& v_degrees) {
    const int k = static_cast<int>(v_degrees.size());
    long long e = 0;
    for (int i = 1; i <= k; ++i)
        e += static_cast<long long>(k - i) * (v_degrees[i - 1] - 1);
    return parity_sign(e);
}

GradedPoly linfty_identity_residual(const LinftyStructure& S,
                                    const std::vector<GradedPoly>& elems,
                                    int arity_cap) {
    const int m = static_cast<int>(elems.size());
    if (m < 1)
        throw std::invalid_argument(
            "linfty_identity_residual: at least one element required");
    if (m > arity_cap)
        throw std::invalid_argument(
            "linfty_identity_residual: arity exceeds the configured cap (" +
            std::to_string(arity_cap) + ")");
    require_base_args(elems, "linfty_identity_residual");
    const int n = S.shift();
    std::vector<int> sdeg(m, 0);
    for (int i = 0; i < m; ++i)
        if (!elems[i].is_zero())
            sdeg[i] = homogeneous_degree(elems[i], "linfty_identity_residual") - n;

    GradedPoly out = GradedPoly::zero(S.chart());
    // Subsets of {0..m-1} as the head block of a (k, m-k) shuffle; both
    // blocks keep the original relative order.
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> head, tail;
        for (int i = 0; i < m; ++i)
            ((mask >> i) & 1u ? head : tail).push_back(i);
        // Koszul sign on shifted degrees of unshuffling 1..m into head|tail:
        // one factor per inverted pair (h in head, t in tail, t before h).
        long long e = 0;
        for (int h : head)
            for (int t : tail)
                if (t < h) e += static_cast<long long>(sdeg[h]) * sdeg[t];
        std::vector<GradedPoly> inner_args;
        inner_args.reserve(head.size());
        for (int i : head) inner_args.push_back(elems[i]);
        std::vector<GradedPoly> outer_args;
        outer_args.reserve(tail.size() + 1);
        outer_args.push_back(nested_bracket(S, inner_args));
        for (int i : tail) outer_args.push_back(elems[i]);
        out += nested_bracket(S, outer_args) * Rational(parity_sign(e));
    }
    return out;
}

GradedPoly mc_residual(const LinftyStructure& S, const GradedPoly& f) {
    if (!f.is_base())
        throw std::invalid_argument("mc_residual: element must be base");
    require_degree(f, S.shift(), "mc_residual", "element");
    GradedPoly out = S.curvature();
    std::vector<GradedPoly> args;
    for (int k = 1; k <= S.arity_bound(); ++k) {
        args.push_back(f);
        out += linfty_bracket(S, args) * inv_factorial(k);
    }
    return out;
}

std::vector<GradedPoly> mc_formal_residual(const LinftyStructure& S,
                                           const FormalElement& F, int order) {
    if (order < 0)
        throw std::invalid_argument("mc_formal_residual: negative order");
    const int n = S.shift();
    for (const auto& g : F.coefficients) {
        if (!g.is_base())
            throw std::invalid_argument(
                "mc_formal_residual: coefficients must be base");
        require_degree(g, n, "mc_formal_residual", "each coefficient");
    }
    auto coeff_at = [&](int i) -> GradedPoly {
        // g_i for F = sum_i g_i nu^i, i >= 1; absent coefficients are zero.
        if (i >= 1 && i <= static_cast<int>(F.coefficients.size()))
            return F.coefficients[i - 1];
        return GradedPoly::zero(S.chart());
    };

    std::vector<GradedPoly> out;
    out.reserve(order);
    for (int m = 1; m <= order; ++m) {
        GradedPoly res = GradedPoly::zero(S.chart());
        const int jmax = std::min(m, S.arity_bound());
        for (int j = 1; j <= jmax; ++j) {
            // Ordered compositions i_1 + .. + i_j = m with every i_l >= 1.
            std::vector<int> comp(j, 1);
            GradedPoly inner = GradedPoly::zero(S.chart());
            std::function<void(int, int)> rec = [&](int pos, int left) {
                if (pos == j) {
                    if (left != 0) return;
                    std::vector<GradedPoly> args;
                    args.reserve(j);
                    for (int l = 0; l < j; ++l) args.push_back(coeff_at(comp[l]));
                    inner += linfty_bracket(S, args);
                    return;
                }
                for (int v = 1; v <= left - (j - pos - 1); ++v) {
                    comp[pos] = v;
                    rec(pos + 1, left - v);
                }
            };
            rec(0, m);
            res += inner * inv_factorial(j);
        }
        out.push_back(res);
    }
    return out;
}

GradedPoly exp_flow(const LinftyStructure& S, const GradedPoly& f,
                    const GradedPoly& g) {
    if (!f.is_base())
        throw std::invalid_argument(
            "exp_flow: the flow generator must be base (momentum-free), the "
            "certificate that {f, .} is nilpotent on g");
    if (!same_chart(f.chart(), S.chart()) || !same_chart(g.chart(), S.chart()))
        throw std::invalid_argument("exp_flow: chart mismatch");
    GradedPoly out = g;
    GradedPoly cur = g;
    const int bound = g.momentum_multidegree();
    for (int k = 1; !cur.is_zero(); ++k) {
        if (k > bound + 1)
            throw std::logic_error("exp_flow: series failed to terminate");
        cur = canonical_bracket(f, cur);
        out += cur * (Rational(parity_sign(k)) / Rational(factorial(k)));
    }
    return out;
}

GradedPoly gauge_rhs(const LinftyStructure& S, const GradedPoly& f,
                     const GradedPoly& lambda) {
    if (!f.is_base() || !lambda.is_base())
        throw std::invalid_argument("gauge_rhs: arguments must be base");
    require_degree(f, S.shift(), "gauge_rhs", "the flowed element");
    require_degree(lambda, S.shift() - 1, "gauge_rhs", "the gauge parameter");
    GradedPoly out = GradedPoly::zero(S.chart());
    std::vector<GradedPoly> args;
    args.push_back(lambda);
    for (int k = 0; 1 + k <= S.arity_bound(); ++k) {
        if (k > 0) args.insert(args.end() - 1, f);
        out += linfty_bracket(S, args) * inv_factorial(k);
    }
    return out;
}

GradedPoly kuranishi(const LinftyStructure& S, const GradedPoly& f) {
    if (!f.is_base())
        throw std::invalid_argument("kuranishi: element must be base");
    require_degree(f, S.shift(), "kuranishi", "element");
    if (!linfty_bracket(S, {f}).is_zero())
        throw std::invalid_argument(
            "kuranishi: element is not l^1-closed; the quadratic obstruction "
            "class is defined on closed elements only");
    return linfty_bracket(S, {f, f});
}

VAlgebra canonical_v_algebra(const LinftyStructure& S) {
    (void)S;
    VAlgebra V;
    V.bracket = [](const GradedPoly& a, const GradedPoly& b) {
        return canonical_bracket(a, b);
    };
    V.is_abelian = [](const GradedPoly& a) { return a.is_base(); };
    V.project = [](const GradedPoly& a) { return zero_section_pullback(a); };
    return V;
}

GradedPoly voronov_bracket(const VAlgebra& V, const GradedPoly& Delta,
                           const std::vector<GradedPoly>& args) {
    if (!V.bracket(Delta, Delta).is_zero())
        throw std::invalid_argument(
            "voronov_bracket: [Delta, Delta] != 0; the higher derived "
            "brackets require a square-zero element");
    GradedPoly cur = Delta;
    for (const auto& a : args) {
        if (!V.is_abelian(a))
            throw std::invalid_argument(
                "voronov_bracket: arguments must lie in the abelian "
                "subalgebra");
        cur = V.bracket(cur, a);
    }
    return V.project(cur);
}

ExtendedElement ExtendedElement::make(GradedPoly base, GradedPoly ambient) {
    if (!same_chart(base.chart(), ambient.chart()))
        throw std::invalid_argument("ExtendedElement: chart mismatch");
    if (!base.chart()->is_cotangent())
        throw std::invalid_argument(
            "ExtendedElement: requires a shifted cotangent chart");
    if (!base.is_base())
        throw std::invalid_argument(
            "ExtendedElement: the first component must be a base polynomial");
    return ExtendedElement{std::move(base), std::move(ambient)};
}

namespace {

// Degree of an extended element in the deformation complex: |f| - (n - 1)
// on the base summand, |x| - n on the ambient one; a homogeneous element
// has both (the families below are graded antisymmetric for this degree).
int extended_degree(const ExtendedElement& x, int n) {
    std::optional<int> d;
    if (!x.base.is_zero()) {
        auto db = x.base.degree();
        if (!db)
            throw std::invalid_argument(
                "extended_brackets: base components must be homogeneous");
        d = *db - (n - 1);
    }
    if (!x.ambient.is_zero()) {
        auto da = x.ambient.degree();
        if (!da)
            throw std::invalid_argument(
                "extended_brackets: ambient components must be homogeneous");
        if (d && *d != *da - n)
            throw std::invalid_argument(
                "extended_brackets: element components sit in different "
                "degrees of the deformation complex");
        d = *da - n;
    }
    return d.value_or(0);
}

// One ambient argument in front of k base arguments:
//   L^{1+k}(x, b_1..b_k) =
//     (-1)^{k(|x|-n+1) + sum_i (k-i)(|b_i|-n)} 0*{..{x, b_1}.., b_k}.
GradedPoly one_ambient_family(const LinftyStructure& S, const GradedPoly& x,
                              const std::vector<GradedPoly>& bases) {
    const int n = S.shift();
    const int k = static_cast<int>(bases.size());
    long long e = static_cast<long long>(k) *
                  (homogeneous_degree(x, "extended_brackets") - n + 1);
    for (int i = 1; i <= k; ++i)
        e += static_cast<long long>(k - i) *
             (homogeneous_degree(bases[i - 1], "extended_brackets") - n);
    GradedPoly cur = x;
    for (const auto& b : bases) {
        if (cur.is_zero()) break;
        cur = canonical_bracket(cur, b);
    }
    return zero_section_pullback(cur) * Rational(parity_sign(e));
}

}  // namespace

ExtendedElement extended_brackets(const LinftyStructure& S, int arity,
                                  const std::vector<ExtendedElement>& args) {
    if (!S.is_strict())
        throw std::invalid_argument(
            "extended_brackets: the structure must be strict (vanishing "
            "curvature 0*theta); the component families presuppose it");
    if (arity < 1 || arity != static_cast<int>(args.size()))
        throw std::invalid_argument("extended_brackets: invalid arity pattern");
    const int n = S.shift();
    const int k = arity;

    std::vector<int> edeg(k, 0);
    for (int i = 0; i < k; ++i) edeg[i] = extended_degree(args[i], n);

    GradedPoly out_base = GradedPoly::zero(S.chart());
    GradedPoly out_ambient = GradedPoly::zero(S.chart());

    // Multilinear expansion: each slot contributes its base or its ambient
    // component; the picks are reordered ambient-first (stable), one factor
    // -(-1)^{d_i d_j} per transposition of the antisymmetric grading.
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> amb, bas;
        for (int i = 0; i < k; ++i)
            ((mask >> i) & 1u ? amb : bas).push_back(i);
        bool skip = false;
        for (int i : amb)
            if (args[i].ambient.is_zero()) { skip = true; break; }
        for (int i : bas)
            if (skip || args[i].base.is_zero()) { skip = true; break; }
        if (skip) continue;

        long long e = 0;  // chi: ambient pick j crosses every base pick i < j
        for (int j : amb)
            for (int i : bas)
                if (i < j)
                    e += 1 + static_cast<long long>(edeg[i]) * edeg[j];
        const Rational chi(parity_sign(e));

        const size_t na = amb.size(), nb = bas.size();
        if (na == 0) {
            std::vector<GradedPoly> fs;
            fs.reserve(nb);
            for (int i : bas) fs.push_back(args[i].base);
            out_base += linfty_bracket(S, fs) * chi;
        } else if (na == 1 && nb == 0 && k == 1) {
            // L^1 on a pure ambient element: 0*x on the base summand and
            // -{theta, x} on the ambient one.
            const GradedPoly& x = args[amb[0]].ambient;
            out_base += zero_section_pullback(x) * chi;
            out_ambient += canonical_bracket(S.theta(), x) * (-chi);
        } else if (na == 1) {
            std::vector<GradedPoly> fs;
            fs.reserve(nb);
            for (int i : bas) fs.push_back(args[i].base);
            out_base += one_ambient_family(S, args[amb[0]].ambient, fs) * chi;
        } else if (na == 2 && nb == 0) {
            out_ambient += canonical_bracket(args[amb[0]].ambient,
                                             args[amb[1]].ambient) *
                           (-chi);
        }
        // two ambient picks with base picks, or three and more ambient
        // picks: the family vanishes.
    }
    return ExtendedElement{std::move(out_base), std::move(out_ambient)};
}

std::pair<GradedPoly, GradedPoly> mc_extended_residual(
    const LinftyStructure& S, const GradedPoly& f, const GradedPoly& theta_t) {
    if (!S.is_strict())
        throw std::invalid_argument(
            "mc_extended_residual: the structure must be strict");
    if (!f.is_base())
        throw std::invalid_argument(
            "mc_extended_residual: the first component must be base");
    require_degree(f, S.shift(), "mc_extended_residual", "the base component");
    require_degree(theta_t, S.shift() + 1, "mc_extended_residual",
                   "the ambient component");

    GradedPoly ambient = canonical_bracket(S.theta(), theta_t) +
                         canonical_bracket(theta_t, theta_t) * Rational(1, 2);

    const int cap = std::max(S.arity_bound(), theta_t.momentum_multidegree());
    GradedPoly base = GradedPoly::zero(S.chart());
    std::vector<GradedPoly> fs;
    for (int k = 0; k <= cap; ++k) {
        if (k > 0) fs.push_back(f);
        GradedPoly term = one_ambient_family(S, theta_t, fs);
        if (k <= S.arity_bound()) term += linfty_bracket(S, fs);
        base += term * inv_factorial(k);
    }
    return {std::move(ambient), std::move(base)};
}

}  // namespace koszul
