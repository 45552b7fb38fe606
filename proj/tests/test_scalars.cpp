#include <catch2/catch_amalgamated.hpp>

#include "naka/scalars.hpp"

#include <random>

using namespace naka;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Rational>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Rational>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Rational>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Rational>{1, 0, 1});
    // frozen against the division oracle (x^5-1)/(x-1)
    CHECK(cyclotomic_polynomial(5) == std::vector<Rational>{1, 1, 1, 1, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Rational>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Rational>{1, 0, -1, 0, 1});
    // degree phi(n)
    CHECK(cyclotomic_polynomial(15).size() == 9);
    CHECK(cyclotomic_polynomial(30).size() == 9);
}

TEST_CASE("root of unity arithmetic") {
    auto F = make_field(3);
    Scalar z = Scalar::zeta(F);
    CHECK((z * z * z).is_one());
    CHECK(z.inverse() == z * z);
    Scalar half = Scalar::from_rational(F, Rational(1, 2));
    CHECK((half + z) + (half - z) == Scalar::one(F));
    // 1 + z + z^2 = 0 in Q(zeta_3)
    CHECK((Scalar::one(F) + z + z * z).is_zero());
}

TEST_CASE("primitivity for n up to 30") {
    for (unsigned n = 1; n <= 30; ++n) {
        auto F = make_field(n);
        Scalar z = Scalar::zeta(F);
        CHECK(z.pow(n).is_one());
        for (unsigned k = 1; k < n; ++k) CHECK(!z.pow(k).is_one());
        // Phi_n(zeta_n) = 0
        Scalar v = Scalar::zero(F);
        const auto& phi = F->modulus();
        for (std::size_t i = 0; i < phi.size(); ++i)
            v += Scalar::from_rational(F, phi[i]) * z.pow(static_cast<long>(i));
        CHECK(v.is_zero());
    }
}

TEST_CASE("parse and format") {
    auto Q = make_field(1);
    CHECK(parse_scalar(Q, "3/4").rational_value() == Rational(3, 4));
    CHECK(parse_scalar(Q, "-7").rational_value() == Rational(-7));

    auto F3 = make_field(3);
    CHECK(parse_scalar(F3, "z").coeffs() == std::vector<Rational>{0, 1});

    auto F5 = make_field(5);
    CHECK(parse_scalar(F5, "1 - 2/5*z^2").coeffs() ==
          std::vector<Rational>{1, 0, Rational(-2, 5), 0});
    CHECK(parse_scalar(F5, "z^5").is_one());
    CHECK(parse_scalar(F5, "2*z*z^3 - 1").coeffs() ==
          (Scalar::zeta_pow(F5, 4) * Scalar::from_rational(F5, 2) - Scalar::one(F5)).coeffs());

    // round trips
    for (const char* t : {"0", "1", "-1/2", "z", "1 + z", "2/3 - z^3", "1/7*z^2 + 4*z^3"}) {
        Scalar s = parse_scalar(F5, t);
        CHECK(parse_scalar(F5, format_scalar(s)) == s);
    }
    CHECK_THROWS_AS(parse_scalar(Q, "z"), ParseError);
    CHECK_THROWS_AS(parse_scalar(Q, "1 +"), ParseError);
    CHECK_THROWS_AS(parse_scalar(Q, "1/0"), ParseError);
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937 rng(0);
    auto F = make_field(12);
    auto rnd = [&] {
        std::vector<Rational> c(F->degree());
        for (auto& x : c)
            x = Rational(static_cast<int>(rng() % 11) - 5, static_cast<int>(rng() % 4) + 1);
        return Scalar(F, std::move(c));
    };
    for (int i = 0; i < 25; ++i) {
        Scalar a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
    CHECK_THROWS_AS(Scalar::zero(F).inverse(), FieldError);
}
