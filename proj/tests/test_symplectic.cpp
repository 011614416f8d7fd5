#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace koszul;
using namespace koszul::testutil;

namespace {

// The three reference charts: n = 1 over degrees {0,0}, n = 2 over {0,1},
// n = 3 over {0,1,2}.
std::vector<ChartPtr> reference_charts() {
    return {Chart::shifted_cotangent({{"x", 0}, {"y", 0}}, 1),
            Chart::shifted_cotangent({{"x", 0}, {"a", 1}}, 2),
            Chart::shifted_cotangent({{"x", 0}, {"a", 1}, {"w", 2}}, 3)};
}

// Random base vector field: base images on base coordinates, zero on the
// momenta (the domain of the J map).
Derivation random_base_field(const ChartPtr& ch, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kd(-2, 2);
    for (int attempt = 0; attempt < 30; ++attempt) {
        const int k = kd(rng);
        std::vector<GradedPoly> images(ch->size(), GradedPoly::zero(ch));
        bool nonzero = false;
        for (int c = 0; c < ch->base_count(); ++c) {
            if (ch->degree(c) + k < 0) continue;
            images[c] = random_homogeneous(ch, ch->degree(c) + k, rng, true);
            nonzero = nonzero || !images[c].is_zero();
        }
        if (nonzero) return Derivation::make(ch, k, std::move(images));
    }
    // fall back to the Euler field restricted to the base
    std::vector<GradedPoly> images(ch->size(), GradedPoly::zero(ch));
    for (int c = 0; c < ch->base_count(); ++c)
        images[c] = GradedPoly::coordinate(ch, c) * Rational(ch->degree(c));
    return Derivation::make(ch, 0, std::move(images));
}

}  // namespace

TEST_CASE("coordinate bracket table") {
    auto pl = plane_chart();
    auto x = GradedPoly::coordinate(pl, "x");
    auto y = GradedPoly::coordinate(pl, "y");
    auto px = GradedPoly::coordinate(pl, "p(x)");
    auto py = GradedPoly::coordinate(pl, "p(y)");
    auto one = GradedPoly::constant(pl, 1);

    CHECK(canonical_bracket(x, px) == -one);
    CHECK(canonical_bracket(px, x) == one);  // (-1)^{(|p|-n)(|q|-n)} = +1
    CHECK(canonical_bracket(x, y).is_zero());
    CHECK(canonical_bracket(px, py).is_zero());
    CHECK(canonical_bracket(x, py).is_zero());
    CHECK(canonical_bracket(py, x).is_zero());

    // |a| = 1, n = 2: {p(a), a} = (-1)^{(1-2)(1-2)} = -1
    auto ch2 = Chart::shifted_cotangent({{"a", 1}, {"b", 1}}, 2);
    auto a = GradedPoly::coordinate(ch2, "a");
    auto pa = GradedPoly::coordinate(ch2, "p(a)");
    CHECK(canonical_bracket(a, pa) == GradedPoly::constant(ch2, -1));
    CHECK(canonical_bracket(pa, a) == GradedPoly::constant(ch2, -1));

    // n = 3: {p(a), a} = +1 for |a| = 1 and {p(w), w} = +1 for |w| = 2
    auto ch3 = Chart::shifted_cotangent({{"x", 0}, {"a", 1}, {"w", 2}}, 3);
    auto a3 = GradedPoly::coordinate(ch3, "a");
    auto pa3 = GradedPoly::coordinate(ch3, "p(a)");
    auto w3 = GradedPoly::coordinate(ch3, "w");
    auto pw3 = GradedPoly::coordinate(ch3, "p(w)");
    CHECK(canonical_bracket(pa3, a3) == GradedPoly::constant(ch3, 1));
    CHECK(canonical_bracket(pw3, w3) == GradedPoly::constant(ch3, 1));
    CHECK(canonical_bracket(a3, pa3) == GradedPoly::constant(ch3, -1));
    CHECK(canonical_bracket(w3, pw3) == GradedPoly::constant(ch3, -1));

    // exhaustive: off-diagonal pairs vanish on every reference chart
    for (const auto& ch : reference_charts()) {
        for (int i = 0; i < ch->size(); ++i)
            for (int j = 0; j < ch->size(); ++j) {
                if (ch->momentum_of(i) == j || ch->base_of(i) == j) continue;
                CHECK(canonical_bracket(GradedPoly::coordinate(ch, i),
                                        GradedPoly::coordinate(ch, j))
                          .is_zero());
            }
    }

    // non-cotangent charts have no canonical bracket
    auto plain = Chart::make({{"a", 1}});
    CHECK_THROWS_AS(canonical_bracket(GradedPoly::coordinate(plain, 0),
                                      GradedPoly::coordinate(plain, 0)),
                    std::invalid_argument);
}

TEST_CASE("bracket laws on random homogeneous triples") {
    std::mt19937_64 rng(0x5CA1AB1E);
    for (const auto& ch : reference_charts()) {
        const int n = ch->shift();
        for (int it = 0; it < 80; ++it) {
            GradedPoly f = random_any_degree(ch, rng, false, n + 2);
            GradedPoly g = random_any_degree(ch, rng, false, n + 2);
            GradedPoly h = random_any_degree(ch, rng, false, n + 2);
            const long long sf = *f.degree() - n, sg = *g.degree() - n;
            // graded skew symmetry
            CHECK(canonical_bracket(f, g) ==
                  -(canonical_bracket(g, f) * Rational(parity_sign(sf * sg))));
            // right Leibniz
            CHECK(canonical_bracket(f, g * h) ==
                  canonical_bracket(f, g) * h +
                      g * canonical_bracket(f, h) *
                          Rational(parity_sign(
                              static_cast<long long>(*g.degree()) * sf)));
            // graded Jacobi (left Leibniz for the adjoint action)
            CHECK(canonical_bracket(f, canonical_bracket(g, h)) ==
                  canonical_bracket(canonical_bracket(f, g), h) +
                      canonical_bracket(g, canonical_bracket(f, h)) *
                          Rational(parity_sign(sf * sg)));
            // degree -n
            GradedPoly fg = canonical_bracket(f, g);
            if (!fg.is_zero())
                CHECK(*fg.degree() == *f.degree() + *g.degree() - n);
        }
    }
}

TEST_CASE("inhomogeneous inputs bracket termwise and are flagged") {
    auto pl = plane_chart();
    auto x = GradedPoly::coordinate(pl, "x");
    auto px = GradedPoly::coordinate(pl, "p(x)");
    bool flag = false;
    GradedPoly r = canonical_bracket(x + px, px, &flag);
    CHECK(flag);
    CHECK(r == canonical_bracket(x, px) + canonical_bracket(px, px));
    flag = true;
    canonical_bracket(x, px, &flag);
    CHECK_FALSE(flag);
}

TEST_CASE("hamiltonian vector fields") {
    std::mt19937_64 rng(0x5CA1AB1F);
    for (const auto& ch : reference_charts()) {
        for (int it = 0; it < 30; ++it) {
            GradedPoly f = random_any_degree(ch, rng, false, ch->shift() + 2);
            GradedPoly g = random_any_degree(ch, rng, false, ch->shift() + 2);
            Derivation Xf = hamiltonian_vf(f);
            CHECK(Xf.degree == *f.degree() - ch->shift());
            CHECK(apply(Xf, g) == canonical_bracket(f, g));
            // X_{{f,g}} = [X_f, X_g]
            GradedPoly fg = canonical_bracket(f, g);
            if (fg.is_zero()) continue;
            Derivation Xfg = hamiltonian_vf(fg);
            Derivation C = lie_bracket(Xf, hamiltonian_vf(g));
            for (int c = 0; c < ch->size(); ++c)
                CHECK(Xfg.images[c] == C.images[c]);
        }
    }
    auto pl = plane_chart();
    CHECK_THROWS_AS(hamiltonian_vf(GradedPoly::coordinate(pl, "x") +
                                   GradedPoly::coordinate(pl, "p(x)")),
                    std::invalid_argument);
}

TEST_CASE("J map on generators") {
    // J(d/da) = (-1)^{|a|(n-|a|)} p(a) = -p(a) for |a| = 1, n = 2
    auto ch = Chart::shifted_cotangent({{"a", 1}, {"b", 1}}, 2);
    auto dda = Derivation::make(
        ch, -1,
        {GradedPoly::constant(ch, 1), GradedPoly::zero(ch),
         GradedPoly::zero(ch), GradedPoly::zero(ch)});
    CHECK(j_map(dda) == -GradedPoly::coordinate(ch, "p(a)"));

    // |x| = 0: the sign is +1
    auto pl = plane_chart();
    auto ddx = Derivation::make(
        pl, 0,
        {GradedPoly::constant(pl, 1), GradedPoly::zero(pl),
         GradedPoly::zero(pl), GradedPoly::zero(pl)});
    CHECK(j_map(ddx) == GradedPoly::coordinate(pl, "p(x)"));

    // fields with momentum images are rejected: d/dp(x) is not liftable
    auto bad = Derivation::make(
        pl, -1,
        {GradedPoly::zero(pl), GradedPoly::zero(pl),
         GradedPoly::constant(pl, 1), GradedPoly::zero(pl)});
    CHECK_THROWS_AS(j_map(bad), std::invalid_argument);
}

TEST_CASE("J map is a homomorphism onto hamiltonian momenta") {
    std::mt19937_64 rng(0x5CA1AB20);
    for (const auto& ch : reference_charts()) {
        for (int it = 0; it < 40; ++it) {
            Derivation X = random_base_field(ch, rng);
            Derivation Y = random_base_field(ch, rng);
            // {J(X), f} = X(f) on base f
            GradedPoly f =
                random_any_degree(ch, rng, true, ch->shift() + 1);
            CHECK(canonical_bracket(j_map(X), f) == apply(X, f));
            // J([X, Y]) = {J(X), J(Y)}
            CHECK(j_map(lie_bracket(X, Y)) ==
                  canonical_bracket(j_map(X), j_map(Y)));
        }
    }
}

TEST_CASE("zero section pullback") {
    auto so3 = so3_chart();
    CHECK(zero_section_pullback(so3_theta(so3)).is_zero());
    auto xi1 = GradedPoly::coordinate(so3, "xi1");
    auto p1 = GradedPoly::coordinate(so3, "p(xi1)");
    CHECK(zero_section_pullback(xi1 + xi1 * p1) == xi1);
    // projection: idempotent, kills momenta, fixes base
    std::mt19937_64 rng(0x5CA1AB21);
    for (int it = 0; it < 40; ++it) {
        GradedPoly f = random_any_degree(so3, rng, false, 4);
        GradedPoly pf = zero_section_pullback(f);
        CHECK(pf.is_base());
        CHECK(zero_section_pullback(pf) == pf);
        // derivation-like compatibility of the projection with the bracket:
        // 0*{f, g} = 0*{0*f, g} + 0*{f, 0*g}
        GradedPoly g = random_any_degree(so3, rng, false, 4);
        CHECK(zero_section_pullback(canonical_bracket(f, g)) ==
              zero_section_pullback(canonical_bracket(pf, g)) +
                  zero_section_pullback(
                      canonical_bracket(f, zero_section_pullback(g))));
    }
}

TEST_CASE("multivector decomposition and Schouten bracket") {
    auto pl = plane_chart();
    auto x = GradedPoly::coordinate(pl, "x");
    auto px = GradedPoly::coordinate(pl, "p(x)");
    auto py = GradedPoly::coordinate(pl, "p(y)");
    GradedPoly mixed = x + px + px * py;
    auto comps = multivector_components(mixed);
    CHECK(comps.size() == 3);
    CHECK(comps[0] == x);
    CHECK(comps[1] == px);
    CHECK(comps[2] == px * py);

    // Schouten bracket = canonical bracket on this chart; a bivector and a
    // function bracket to the vector field applied to the function
    GradedPoly pi = px * py;  // the plane Poisson bivector
    CHECK(schouten_bracket(pi, pi).is_zero());  // Poisson condition
    GradedPoly f = x * x;
    GradedPoly v = schouten_bracket(pi, f);
    CHECK(multivector_components(v).count(1) == 1);
    CHECK(schouten_bracket(pi, f) == canonical_bracket(pi, f));
}

TEST_CASE("graph substitution and ideal generators") {
    // n = 0: momenta in degree 0, every base polynomial is a legal
    // component
    auto ch = Chart::shifted_cotangent({{"u", 0}, {"v", 0}}, 0);
    auto u = GradedPoly::coordinate(ch, "u");
    auto v = GradedPoly::coordinate(ch, "v");
    auto pu = GradedPoly::coordinate(ch, "p(u)");
    auto pv = GradedPoly::coordinate(ch, "p(v)");

    // alpha = d(u)*v + d(v)*u = d(uv): closed, hence Lagrangian graph
    auto alpha = OneForm::make(ch, {v, u, GradedPoly::zero(ch),
                                    GradedPoly::zero(ch)});
    CHECK(graph_is_lagrangian(alpha));
    CHECK(graph_substitute(alpha, pu) == v);
    CHECK(graph_substitute(alpha, pu * pv - u * v).is_zero());
    auto gens = graph_ideal_generators(alpha);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0] == pu - v);
    CHECK(gens[1] == pv - u);
    for (const auto& g : gens) CHECK(graph_substitute(alpha, g).is_zero());

    // alpha' = d(u)*v - d(v)*u is not closed and its ideal is not closed
    // under the bracket
    auto beta = OneForm::make(ch, {v, -u, GradedPoly::zero(ch),
                                   GradedPoly::zero(ch)});
    CHECK_FALSE(graph_is_lagrangian(beta));
    auto bgens = graph_ideal_generators(beta);
    GradedPoly br = canonical_bracket(bgens[0], bgens[1]);
    CHECK_FALSE(graph_substitute(beta, br).is_zero());

    // so(3) chart, n = 2: the closed form d(xi1)*xi2 - d(xi2)*xi1
    auto so3 = so3_chart();
    std::vector<GradedPoly> comps(so3->size(), GradedPoly::zero(so3));
    comps[0] = GradedPoly::coordinate(so3, "xi2");
    comps[1] = -GradedPoly::coordinate(so3, "xi1");
    CHECK(graph_is_lagrangian(OneForm::make(so3, comps)));

    // validation: momentum components and wrong degrees are refused
    std::vector<GradedPoly> badc(so3->size(), GradedPoly::zero(so3));
    badc[3] = GradedPoly::coordinate(so3, "xi1");
    CHECK_THROWS_AS(graph_is_lagrangian(OneForm::make(so3, badc)),
                    std::invalid_argument);
    std::vector<GradedPoly> wrongdeg(so3->size(), GradedPoly::zero(so3));
    wrongdeg[0] = GradedPoly::constant(so3, 1);  // form degree 1 != n
    CHECK_THROWS_AS(graph_is_lagrangian(OneForm::make(so3, wrongdeg)),
                    std::invalid_argument);
}

TEST_CASE("graph criterion agrees with ideal closure under the bracket") {
    auto ch = Chart::shifted_cotangent({{"u", 0}, {"v", 0}}, 0);
    std::mt19937_64 rng(0x5CA1AB22);
    int closed_seen = 0, open_seen = 0;
    for (int it = 0; it < 30; ++it) {
        std::vector<GradedPoly> comps(ch->size(), GradedPoly::zero(ch));
        if (it % 2 == 0) {
            // exact form: guaranteed closed
            GradedPoly f = random_homogeneous(ch, 0, rng, true, 4);
            auto df = exterior_derivative(f);
            for (int c = 0; c < ch->base_count(); ++c) comps[c] = df.comps[c];
        } else {
            for (int c = 0; c < ch->base_count(); ++c)
                comps[c] = random_homogeneous(ch, 0, rng, true, 2);
        }
        auto alpha = OneForm::make(ch, comps);
        auto gens = graph_ideal_generators(alpha);
        bool ideal_closed = true;
        for (size_t i = 0; i < gens.size() && ideal_closed; ++i)
            for (size_t j = i; j < gens.size() && ideal_closed; ++j)
                ideal_closed = graph_substitute(
                                   alpha, canonical_bracket(gens[i], gens[j]))
                                   .is_zero();
        CHECK(graph_is_lagrangian(alpha) == ideal_closed);
        (graph_is_lagrangian(alpha) ? closed_seen : open_seen)++;
    }
    CHECK(closed_seen > 0);  // both branches of the equivalence exercised
    CHECK(open_seen > 0);
}
