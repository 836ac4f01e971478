#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperbound/homopoly.hpp"

using namespace hyperbound;

namespace {

HomoPoly quadric_x0x1_x2x3(const Field& f) {
    HomoPoly p(f, 4, 2);
    p.add_term({1, 1, 0, 0}, f.one());
    p.add_term({0, 0, 1, 1}, f.one());
    return p;
}

// Hermitian surface form over F_4: X0^2 X1 + X0 X1^2 + X2^2 X3 + X2 X3^2
HomoPoly hermitian_surface_f4() {
    const Field& f = make_field(2, 2);
    HomoPoly p(f, 4, 3);
    p.add_term({2, 1, 0, 0}, f.one());
    p.add_term({1, 2, 0, 0}, f.one());
    p.add_term({0, 0, 2, 1}, f.one());
    p.add_term({0, 0, 1, 2}, f.one());
    return p;
}

HomoPoly random_poly(const Field& f, int nvars, int degree, int nterms, std::mt19937_64& rng) {
    HomoPoly p(f, nvars, degree);
    std::uniform_int_distribution<int> var(0, nvars - 1);
    std::uniform_int_distribution<int> coeff(1, f.size() - 1);
    for (int t = 0; t < nterms; ++t) {
        std::vector<int> e(nvars, 0);
        for (int d = 0; d < degree; ++d) ++e[var(rng)];
        p.add_term(e, f.elem(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("evaluation") {
    const Field& f2 = make_field(2, 1);
    HomoPoly q = quadric_x0x1_x2x3(f2);
    CHECK(q.evaluate({f2.one(), f2.zero(), f2.one(), f2.zero()}).is_zero());
    CHECK(q.evaluate({f2.one(), f2.one(), f2.one(), f2.one()}).is_zero());  // 1+1 in char 2

    const Field& f4 = make_field(2, 2);
    HomoPoly h = hermitian_surface_f4();
    Fq w = f4.elem(2);
    // omega + omega^2 = 1 in F_4
    CHECK(h.evaluate({f4.one(), w, f4.zero(), f4.zero()}) == f4.one());

    CHECK_THROWS_AS(q.evaluate({f2.one()}), std::invalid_argument);
}

TEST_CASE("formal partial derivatives in characteristic p") {
    const Field& f2 = make_field(2, 1);
    HomoPoly q = quadric_x0x1_x2x3(f2);
    HomoPoly x1(f2, 4, 1);
    x1.add_term({0, 1, 0, 0}, f2.one());
    CHECK(q.partial(0) == x1);

    HomoPoly sq(f2, 1, 2);
    sq.add_term({2}, f2.one());
    CHECK(sq.partial(0).is_zero());  // exponent 2 = 0 mod 2

    // d/dX1 of the Hermitian surface form: X0^2 survives, 2*X0*X1 drops
    HomoPoly h = hermitian_surface_f4();
    const Field& f4 = make_field(2, 2);
    HomoPoly x0sq(f4, 4, 2);
    x0sq.add_term({2, 0, 0, 0}, f4.one());
    CHECK(h.partial(1) == x0sq);
}

TEST_CASE("partials commute") {
    std::mt19937_64 rng(7);
    for (int q : {2, 3, 4}) {
        const Field& f = make_field_q(q);
        for (int trial = 0; trial < 20; ++trial) {
            HomoPoly p = random_poly(f, 4, 3, 5, rng);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) CHECK(p.partial(i).partial(j) == p.partial(j).partial(i));
        }
    }
}

TEST_CASE("Euler relation sum X_i dF/dX_i = (d mod p) F") {
    std::mt19937_64 rng(11);
    for (int q : {2, 3, 4}) {
        const Field& f = make_field_q(q);
        for (int d : {2, 3, 4}) {
            for (int trial = 0; trial < 10; ++trial) {
                HomoPoly p = random_poly(f, 3, d, 4, rng);
                HomoPoly acc(f, 3, d);
                for (int i = 0; i < 3; ++i) {
                    std::vector<int> e(3, 0);
                    e[i] = 1;
                    acc = acc + HomoPoly::monomial(f, e, f.one()) * p.partial(i);
                }
                CHECK(acc == f.elem(d % f.characteristic()) * p);
            }
        }
    }
}

TEST_CASE("restriction to subspaces") {
    const Field& f2 = make_field(2, 1);
    HomoPoly q = quadric_x0x1_x2x3(f2);

    SUBCASE("contained coordinate subspaces restrict to zero") {
        // {X0 = X2 = 0} = span(e1, e3)
        LinearSubspace s(f2, 3, Mat{{f2.zero(), f2.one(), f2.zero(), f2.zero()},
                                    {f2.zero(), f2.zero(), f2.zero(), f2.one()}});
        CHECK(q.restricted_to(s).is_zero());
        // line through (1,0,0,0) and (0,0,0,1)
        LinearSubspace l(f2, 3, Mat{{f2.one(), f2.zero(), f2.zero(), f2.zero()},
                                    {f2.zero(), f2.zero(), f2.zero(), f2.one()}});
        CHECK(q.restricted_to(l).is_zero());
    }

    SUBCASE("Hermitian form restricted to a non-contained line") {
        const Field& f4 = make_field(2, 2);
        HomoPoly h = hermitian_surface_f4();
        LinearSubspace l(f4, 3, Mat{{f4.one(), f4.zero(), f4.zero(), f4.zero()},
                                    {f4.zero(), f4.one(), f4.zero(), f4.zero()}});
        HomoPoly r = h.restricted_to(l);
        CHECK(!r.is_zero());
        CHECK(r.degree() == 3);
        CHECK(r.nvars() == 2);
        int roots = 0;
        for_each_point(f4, 1, [&](const std::vector<int>& c) {
            if (r.evaluate_idx(c) == 0) ++roots;
        });
        CHECK(roots <= 3);
    }
}

TEST_CASE("evaluate commutes with restriction") {
    std::mt19937_64 rng(13);
    for (int q : {2, 3}) {
        const Field& f = make_field_q(q);
        for (int m = 1; m <= 3; ++m) {
            HomoPoly p = random_poly(f, m + 1, 2, 4, rng);
            for (int k = 0; k <= m; ++k) {
                for (const auto& s : all_subspaces(f, k, m)) {
                    HomoPoly r = p.restricted_to(s);
                    for (long long rank = 0; rank < s.point_count(); ++rank) {
                        ProjPoint amb = s.point_at(rank);
                        ProjPoint intr = point_at(f, k, rank);
                        CHECK(p.evaluate(amb.coords()) == r.evaluate(intr.coords()));
                    }
                }
            }
        }
    }
}

TEST_CASE("nonvanishing point witness") {
    const Field& f2 = make_field(2, 1);
    SUBCASE("zero polynomial has no witness") {
        CHECK(!nonvanishing_point(HomoPoly(f2, 2, 2)).has_value());
    }
    SUBCASE("degree above q is refused") {
        // X0^q X1 - X0 X1^q fills P^1 although nonzero, so the guarantee fails
        HomoPoly fill(f2, 2, 3);
        fill.add_term({2, 1}, f2.one());
        fill.add_term({1, 2}, f2.one());
        CHECK_THROWS_AS(nonvanishing_point(fill), std::invalid_argument);
    }
    SUBCASE("X0 X1 over F_2 on the projective line") {
        HomoPoly p(f2, 2, 2);
        p.add_term({1, 1}, f2.one());
        auto w = nonvanishing_point(p);
        REQUIRE(w.has_value());
        CHECK(w->to_string() == "1:1");
    }
    SUBCASE("every nonzero form of degree <= q has a witness") {
        std::mt19937_64 rng(17);
        for (int q : {2, 3, 4}) {
            const Field& f = make_field_q(q);
            for (int d = 1; d <= q; ++d)
                for (int trial = 0; trial < 25; ++trial) {
                    HomoPoly p = random_poly(f, 3, d, 3, rng);
                    if (p.is_zero()) continue;
                    CHECK(nonvanishing_point(p).has_value());
                }
        }
    }
}

TEST_CASE("division by linear forms") {
    const Field& f3 = make_field(3, 1);
    HomoPoly x0(f3, 3, 1), x1(f3, 3, 1), x2(f3, 3, 1);
    x0.add_term({1, 0, 0}, f3.one());
    x1.add_term({0, 1, 0}, f3.one());
    x2.add_term({0, 0, 1}, f3.one());
    HomoPoly sum = x0 + x1;
    HomoPoly prod = sum * x2;

    auto q1 = divide_by_linear(prod, x2);
    REQUIRE(q1.has_value());
    CHECK(*q1 == sum);
    auto q2 = divide_by_linear(prod, sum);
    REQUIRE(q2.has_value());
    CHECK(*q2 == x2);
    CHECK(!divide_by_linear(prod, x0).has_value());

    const Field& f2 = make_field(2, 1);
    HomoPoly q = quadric_x0x1_x2x3(f2);
    HomoPoly lin(f2, 4, 1);
    lin.add_term({1, 0, 0, 0}, f2.one());
    CHECK(!divide_by_linear(q, lin).has_value());
}

TEST_CASE("text format round trip") {
    const Field& f4 = make_field(2, 2);
    HomoPoly h = hermitian_surface_f4();
    std::string text = h.to_text();
    CHECK(text == "1*X0^2*X1^1+1*X0^1*X1^2+1*X2^2*X3^1+1*X2^1*X3^2");
    CHECK(HomoPoly::parse(f4, 4, text) == h);

    const Field& f2 = make_field(2, 1);
    CHECK(HomoPoly::parse(f2, 4, "1*X0*X1 + 1*X2*X3") == quadric_x0x1_x2x3(f2));
    CHECK_THROWS_AS(HomoPoly::parse(f2, 4, "1*X0*X1+1*X2"), std::invalid_argument);
    CHECK_THROWS_AS(HomoPoly::parse(f2, 2, "5*X0^2"), std::invalid_argument);
}

TEST_CASE("embedding coefficients into an extension") {
    const Field& f2 = make_field(2, 1);
    Extension x = extend_field(f2, 2);
    HomoPoly q = quadric_x0x1_x2x3(f2);
    HomoPoly lifted = q.embedded(x.embed);
    CHECK(&lifted.field() == x.field);
    // zero set over F_2 embeds into the zero set over F_4
    for_each_point(f2, 3, [&](const std::vector<int>& c) {
        if (q.evaluate_idx(c) != 0) return;
        std::vector<int> lift(c.size());
        for (size_t i = 0; i < c.size(); ++i) lift[i] = x.embed.map_i(c[i]);
        CHECK(lifted.evaluate_idx(lift) == 0);
    });
}
