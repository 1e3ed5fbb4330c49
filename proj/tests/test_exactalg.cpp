#include "doctest.h"

#include "oracle.hpp"
#include "pluck/dpoly.hpp"
#include "pluck/errors.hpp"
#include "pluck/rat.hpp"

using namespace pluck;

namespace {

DPoly poly(std::initializer_list<long> coeffs) {
    std::vector<Rat> v;
    for (long c : coeffs) v.emplace_back(c);
    return DPoly::dense(v);
}

Rat random_rat(oracle::Rng& rng) {
    const long num = rng.range(-9, 9);
    const long den = rng.range(1, 4);
    return Rat(BigInt(num), BigInt(den));
}

DPoly random_poly(oracle::Rng& rng) {
    DPoly p;
    const int terms = static_cast<int>(rng.range(0, 5));
    for (int k = 0; k < terms; ++k) p.add(static_cast<int>(rng.range(0, 6)), random_rat(rng));
    return p;
}

DLaurent random_laurent(oracle::Rng& rng) {
    DLaurent p;
    const int terms = static_cast<int>(rng.range(0, 5));
    for (int k = 0; k < terms; ++k) p.add(static_cast<int>(rng.range(-4, 4)), random_rat(rng));
    return p;
}

}  // namespace

TEST_CASE("rat canonical text round-trips") {
    for (const char* text : {"0", "1", "-1", "1/2", "-7/3", "123456789012345678901234567891/7"}) {
        CHECK(Rat::parse(text).to_string() == text);
    }
    CHECK(Rat(BigInt(6), BigInt(-4)).to_string() == "-3/2");
    for (const char* bad : {"2/4", "3/1", "-0", "+1", " 1", "1/0", "", "1/", "/2", "1/-2", "abc", "01"}) {
        CHECK_THROWS_AS(Rat::parse(bad), std::invalid_argument);
    }
}

TEST_CASE("rat arithmetic") {
    const Rat half(BigInt(1), BigInt(2));
    const Rat third(BigInt(1), BigInt(3));
    CHECK(half + third == Rat(BigInt(5), BigInt(6)));
    CHECK(half - third == Rat(BigInt(1), BigInt(6)));
    CHECK(half * third == Rat(BigInt(1), BigInt(6)));
    CHECK(half / third == Rat(BigInt(3), BigInt(2)));
    CHECK((half * 2).is_integer());
    CHECK(third < half);
    CHECK_THROWS(half / Rat(0));
}

TEST_CASE("dpoly_eval") {
    CHECK(dpoly_eval(poly({0, -1, 1}), 4) == Rat(12));
    CHECK(dpoly_eval(DPoly(), 100) == Rat(0));
    // 1/2 d (d-2)(d-3)(d+3)
    const DPoly d = DPoly::d();
    const DPoly pl22 = Rat(BigInt(1), BigInt(2)) * d * (d - Rat(2)) * (d - Rat(3)) * (d + Rat(3));
    CHECK(dpoly_eval(pl22, 4) == Rat(28));
}

TEST_CASE("dpoly_shift") {
    CHECK(dpoly_shift(poly({0, 0, 1}), -2) == poly({4, -4, 1}));
    CHECK(dpoly_shift(poly({7}), 5) == poly({7}));
    CHECK(dpoly_shift(poly({0, -1, 1}), 2) == poly({2, 3, 1}));
    CHECK(dpoly_shift(DPoly(), 3).is_zero());
}

TEST_CASE("laurent_reduce") {
    DLaurent l;
    l.add(2, 3);
    l.add(1, 1);
    CHECK(laurent_reduce(l) == poly({0, 1, 3}));

    DLaurent inverse;
    inverse.add(-1, 1);
    CHECK_THROWS_AS(laurent_reduce(inverse), NonPolynomial);
    try {
        laurent_reduce(inverse);
    } catch (const NonPolynomial& e) {
        REQUIRE(e.offending().size() == 1);
        CHECK(e.offending()[0].first == -1);
        CHECK(e.offending()[0].second == Rat(1));
    }

    // (d^3 - d^2) d^-2 + d^-1 - d^-1 = d - 1
    DLaurent cubic;
    cubic.add(3, 1);
    cubic.add(2, -1);
    DLaurent cancel = times_d_power(cubic, -2);
    cancel.add(-1, 1);
    cancel.add(-1, -1);
    CHECK(laurent_reduce(cancel) == poly({-1, 1}));
    CHECK(to_laurent(poly({-1, 1})) == times_d_power(cubic, -2));
}

TEST_CASE("dpoly rejects negative exponents") {
    DPoly p;
    CHECK_THROWS_AS(p.add(-1, 1), std::invalid_argument);
}

TEST_CASE("dpoly rendering") {
    CHECK(to_text(poly({0, -6, 3})) == "3d^2 - 6d");
    CHECK(to_text(poly({0, -6, 3}), true) == "3d^2-6d");
    CHECK(to_text(poly({0, 2, -3, 1}), true) == "d^3-3d^2+2d");
    CHECK(to_text(DPoly()) == "0");
    CHECK(to_text(poly({-1})) == "-1");
    CHECK(to_text(DPoly::monomial(Rat(BigInt(1), BigInt(2)), 4)) == "(1/2)d^4");
    CHECK(to_text(DPoly::monomial(Rat(BigInt(-1), BigInt(2)), 1)) == "-(1/2)d");
    CHECK(to_latex(DPoly::monomial(Rat(BigInt(1), BigInt(2)), 4)) == "\\frac{1}{2}d^{4}");
    CHECK(dense_coefficients(poly({0, -6, 3})) == std::vector<Rat>{0, -6, 3});
    CHECK(dense_coefficients(DPoly()).empty());
}

TEST_CASE("ring axioms on random polynomials") {
    oracle::Rng rng(20240611);
    for (int trial = 0; trial < 300; ++trial) {
        const DPoly p = random_poly(rng);
        const DPoly q = random_poly(rng);
        const DPoly r = random_poly(rng);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p + DPoly() == p);
        CHECK(p * DPoly(1) == p);
        CHECK((p - p).is_zero());
        if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());

        const DLaurent lp = random_laurent(rng);
        const DLaurent lq = random_laurent(rng);
        const DLaurent lr = random_laurent(rng);
        CHECK((lp + lq) * lr == lp * lr + lq * lr);
        if (!lp.is_zero() && !lq.is_zero()) CHECK((lp * lq).degree() == lp.degree() + lq.degree());
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    oracle::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const DPoly p = random_poly(rng);
        const DPoly q = random_poly(rng);
        const long x = rng.range(-20, 20);
        CHECK(dpoly_eval(p * q, x) == dpoly_eval(p, x) * dpoly_eval(q, x));
        CHECK(dpoly_eval(p + q, x) == dpoly_eval(p, x) + dpoly_eval(q, x));
    }
}

TEST_CASE("shift properties") {
    oracle::Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const DPoly p = random_poly(rng);
        const long delta = rng.range(-10, 10);
        const long x = rng.range(-15, 15);
        CHECK(dpoly_shift(dpoly_shift(p, delta), -delta) == p);
        CHECK(dpoly_eval(dpoly_shift(p, delta), x) == dpoly_eval(p, x + delta));
        if (!p.is_zero()) {
            CHECK(dpoly_shift(p, delta).degree() == p.degree());
            CHECK(dpoly_shift(p, delta).leading_coefficient() == p.leading_coefficient());
        }
    }
}

TEST_CASE("times_d_power then back is the identity") {
    oracle::Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const DPoly p = random_poly(rng);
        const int k = static_cast<int>(rng.range(0, 5));
        CHECK(laurent_reduce(times_d_power(times_d_power(to_laurent(p), -k), k)) == p);
    }
}
