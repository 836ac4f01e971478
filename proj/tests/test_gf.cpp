#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hyperbound/gf.hpp"

using namespace hyperbound;

TEST_CASE("prime field construction and arithmetic") {
    const Field& f2 = make_field(2, 1);
    CHECK(f2.size() == 2);
    CHECK(f2.div_i(1, 1) == 1);

    const Field& f3 = make_field(3, 1);
    CHECK(f3.add_i(2, 2) == 1);  // 2+2 = 1 mod 3
    CHECK(f3.mul_i(2, 2) == 1);
}

TEST_CASE("F_4 has the unique irreducible modulus x^2+x+1") {
    const Field& f4 = make_field(2, 2);
    CHECK(f4.modulus() == std::vector<int>{1, 1, 1});
    // omega = class of x has index 2 (digits (0,1)); omega * omega^2 = 1
    int w = 2;
    int w2 = f4.mul_i(w, w);
    CHECK(f4.mul_i(w, w2) == 1);
    CHECK(w2 != w);
}

TEST_CASE("F_9 modulus is the least irreducible, found by root exhaustion") {
    // Oracle: scan monic quadratics over F_3 in low-degree-first lex order and
    // pick the first with no root in F_3.
    int expect_c0 = -1, expect_c1 = -1;
    for (int c0 = 0; c0 < 3 && expect_c0 < 0; ++c0)
        for (int c1 = 0; c1 < 3 && expect_c0 < 0; ++c1) {
            bool has_root = false;
            for (int x = 0; x < 3; ++x)
                if ((x * x + c1 * x + c0) % 3 == 0) has_root = true;
            if (!has_root) {
                expect_c0 = c0;
                expect_c1 = c1;
            }
        }
    const Field& f9 = make_field(3, 2);
    CHECK(f9.modulus() == std::vector<int>{expect_c0, expect_c1, 1});
}

TEST_CASE("log/antilog multiplication agrees with schoolbook on all products") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128}) {
        const Field& f = make_field_q(q);
        for (int a = 0; a < f.size(); ++a)
            for (int b = 0; b < f.size(); ++b) CHECK(f.mul_i(a, b) == f.mul_schoolbook_i(a, b));
    }
}

TEST_CASE("field axioms hold exhaustively on small fields") {
    for (int q : {2, 3, 4, 8, 9}) {
        const Field& f = make_field_q(q);
        for (int a = 0; a < q; ++a) {
            if (a != 0) {
                CHECK(f.pow_i(a, q - 1) == 1);  // a^{q-1} = 1
                CHECK(f.mul_i(a, f.inv_i(a)) == 1);
            }
            CHECK(f.add_i(a, f.neg_i(a)) == 0);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add_i(a, b) == f.add_i(b, a));
                CHECK(f.mul_i(a, b) == f.mul_i(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.mul_i(a, f.add_i(b, c)) == f.add_i(f.mul_i(a, b), f.mul_i(a, c)));
                    CHECK(f.mul_i(a, f.mul_i(b, c)) == f.mul_i(f.mul_i(a, b), c));
                }
            }
        }
    }
}

TEST_CASE("power maps") {
    const Field& f4 = make_field(2, 2);
    CHECK(f4.sqrt_q() == 2);
    for (int a = 0; a < 4; ++a) {
        CHECK(f4.sqrt_q_power_i(f4.sqrt_q_power_i(a)) == a);  // involution
        CHECK(f4.q_power_i(a) == a);
    }
    const Field& f9 = make_field(3, 2);
    for (int a = 0; a < 9; ++a) CHECK(f9.pow_i(a, 9) == a);

    CHECK(f4.pow_i(0, 0) == 1);  // 0^0 = 1 by convention
    CHECK(f4.pow_i(0, 3) == 0);
    CHECK_THROWS_AS(make_field(2, 3).sqrt_q(), std::invalid_argument);
}

TEST_CASE("sqrt(q) power map is an order-2 automorphism fixing the subfield") {
    for (int q : {4, 9, 16, 25}) {
        const Field& f = make_field_q(q);
        int fixed = 0;
        for (int a = 0; a < q; ++a) {
            int fa = f.sqrt_q_power_i(a);
            CHECK(f.sqrt_q_power_i(fa) == a);
            if (fa == a) ++fixed;
            for (int b = 0; b < q; ++b) {
                CHECK(f.sqrt_q_power_i(f.add_i(a, b)) == f.add_i(fa, f.sqrt_q_power_i(b)));
                CHECK(f.sqrt_q_power_i(f.mul_i(a, b)) == f.mul_i(fa, f.sqrt_q_power_i(b)));
            }
        }
        CHECK(fixed == f.sqrt_q());  // exactly the sqrt(q)-element subfield
    }
}

TEST_CASE("extension embeddings are ring homomorphisms") {
    SUBCASE("F_2 into F_4") {
        Extension x = extend_field(make_field(2, 1), 2);
        CHECK(x.field->size() == 4);
        CHECK(x.embed.map_i(1) == 1);
        // image = fixed points of squaring
        std::set<int> image;
        for (int a = 0; a < 2; ++a) image.insert(x.embed.map_i(a));
        std::set<int> fixed;
        for (int a = 0; a < 4; ++a)
            if (x.field->mul_i(a, a) == a) fixed.insert(a);
        CHECK(image == fixed);
    }
    SUBCASE("F_3 into F_9, all pairs") {
        const Field& f3 = make_field(3, 1);
        Extension x = extend_field(f3, 2);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                CHECK(x.embed.map_i(f3.add_i(a, b)) == x.field->add_i(x.embed.map_i(a), x.embed.map_i(b)));
                CHECK(x.embed.map_i(f3.mul_i(a, b)) == x.field->mul_i(x.embed.map_i(a), x.embed.map_i(b)));
            }
    }
    SUBCASE("F_4 into F_16, all pairs") {
        const Field& f4 = make_field(2, 2);
        Extension x = extend_field(f4, 2);
        CHECK(x.field->size() == 16);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                CHECK(x.embed.map_i(f4.add_i(a, b)) == x.field->add_i(x.embed.map_i(a), x.embed.map_i(b)));
                CHECK(x.embed.map_i(f4.mul_i(a, b)) == x.field->mul_i(x.embed.map_i(a), x.embed.map_i(b)));
            }
    }
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);   // not prime
    CHECK_THROWS_AS(make_field(2, 8), BudgetError);             // 256 > budget
    CHECK_THROWS_AS(make_field_q(6), std::invalid_argument);    // not a prime power
    const Field& f3 = make_field(3, 1);
    CHECK_THROWS_AS(f3.div_i(1, 0), std::invalid_argument);
    Fq a = f3.elem(1);
    Fq b = make_field(2, 1).elem(1);
    CHECK_THROWS_AS(a + b, std::invalid_argument);  // mixed fields
}

TEST_CASE("Fq value semantics") {
    const Field& f4 = make_field(2, 2);
    Fq w = f4.elem(2);
    CHECK((w * w * w) == f4.one());
    CHECK((w + w) == f4.zero());
    CHECK(Fq() == Fq());
    CHECK(Fq() != f4.zero());
}
