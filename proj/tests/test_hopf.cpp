#include <catch2/catch_amalgamated.hpp>

#include "naka/hopf_builders.hpp"

using namespace naka;

TEST_CASE("group algebra hopf") {
    auto Q = make_field(1);
    HopfAlgebra h = group_algebra_hopf(Q, 2);
    auto rep = check_hopf_axioms(h);
    INFO(rep.witness);
    REQUIRE(rep.pass());
    IntegralData ints = integral_spaces(h);
    // integral 1 + g, alpha = eps, g_H = 1
    CHECK(ints.left_integral == Vec{Scalar::one(Q), Scalar::one(Q)});
    CHECK(ints.unimodular);
    CHECK(ints.counimodular);
    auto nak = hopf_nakayama(h, ints);
    CHECK(nak.nu == Matrix::identity(Q, 2));
    CHECK(nak.order == 1);
    CHECK(radford_s4_verify(h, ints));
}

TEST_CASE("sweedler H4 = taft(2, -1)") {
    auto Q = make_field(1);
    HopfAlgebra h = taft(Q, 2, Scalar::from_rational(Q, -1));
    auto rep = check_hopf_axioms(h);
    INFO(rep.witness);
    REQUIRE(rep.pass());
    IntegralData ints = integral_spaces(h);
    CHECK(!ints.unimodular);             // alpha != eps
    CHECK(!ints.counimodular);           // g_H = g
    CHECK(ints.distinguished_grouplike.element == h.algebra->basis_vector(2));  // g = g^1 x^0
    auto nak = hopf_nakayama(h, ints);
    CHECK(nak.order == 2);
    CHECK(radford_s4_verify(h, ints));
    // classification: Frobenius but not symmetric
    CHECK(classify(h.algebra).verdict == FrobeniusClass::Frobenius);
}

TEST_CASE("taft(3) over Q(zeta_3)") {
    auto F = make_field(3);
    HopfAlgebra h = taft(F, 3, Scalar::zeta(F));
    auto rep = check_hopf_axioms(h);
    INFO(rep.witness);
    REQUIRE(rep.pass());
    IntegralData ints = integral_spaces(h);
    CHECK(!ints.unimodular);
    CHECK(radford_s4_verify(h, ints));
}

TEST_CASE("uq_sl2 at N=3") {
    HopfAlgebra u = uq_sl2(3);
    REQUIRE(u.dim() == 27);
    auto arep = check_algebra_axioms(*u.algebra);
    INFO(arep.witness);
    REQUIRE(arep.pass());
    auto rep = check_hopf_axioms(u);
    INFO(rep.witness);
    REQUIRE(rep.pass());

    const unsigned N = 3;
    auto idx = [N](unsigned r, unsigned s, unsigned t) { return (r * N + s) * N + t; };
    const auto& a = *u.algebra;
    // K^3 = 1, E^3 = 0, F^3 = 0
    Vec K = a.basis_vector(idx(0, 0, 1)), E = a.basis_vector(idx(1, 0, 0)),
        F = a.basis_vector(idx(0, 1, 0));
    CHECK(a.element_power(K, 3) == a.unit());
    CHECK(a.element_power(E, 3) == Vec(27, Scalar::zero(u.ctx())));
    CHECK(a.element_power(F, 3) == Vec(27, Scalar::zero(u.ctx())));
    // KE = q^2 EK
    Scalar q = Scalar::zeta(u.ctx());
    Vec lhs = a.multiply(K, E);
    Vec rhs = a.multiply(E, K);
    for (auto& x : rhs) x *= q.pow(2);
    CHECK(lhs == rhs);
    // EF - FE = (K - K^{-1})/(q - q^{-1})
    Vec comm = a.multiply(E, F);
    Vec fe = a.multiply(F, E);
    for (std::size_t i = 0; i < 27; ++i) comm[i] -= fe[i];
    Vec target(27, Scalar::zero(u.ctx()));
    Scalar c = (q - q.pow(-1)).inverse();
    target[idx(0, 0, 1)] = c;
    target[idx(0, 0, 2)] = -c;
    CHECK(comm == target);
    // K is invertible with inverse K^2, E is nilpotent
    CHECK(a.try_invert(K) == a.basis_vector(idx(0, 0, 2)));
    CHECK(!a.try_invert(E));

    IntegralData ints = integral_spaces(u);
    // lambda_U = delta at E^2 F^2 K^1
    Vec lam(27, Scalar::zero(u.ctx()));
    lam[idx(2, 2, 1)] = Scalar::one(u.ctx());
    CHECK(ints.right_cointegral == lam);
    // g_U = K^2, alpha_U = eps
    CHECK(ints.distinguished_grouplike.element == a.basis_vector(idx(0, 0, 2)));
    CHECK(ints.unimodular);

    auto nak = hopf_nakayama(u, ints);
    CHECK(nak.nu == u.antipode * u.antipode);  // nu = S^2 since alpha = eps
    CHECK(nak.order == 3);                     // S^2 = conjugation by K
    CHECK(radford_s4_verify(u, ints));

    // grouplikes are the K^t
    REQUIRE(u.grouplike_list.size() == 3);
    for (const Vec& g : u.grouplike_list) CHECK(is_grouplike(u, g));
}

TEST_CASE("the literal relation KE = q^2 FK breaks the bialgebra axioms") {
    HopfAlgebra bad = uq_sl2_literal_relation(3);
    auto rep = check_hopf_axioms(bad);
    CHECK(!rep.pass());
    CHECK(!rep.witness.empty());
}

TEST_CASE("dual, cop and op of H4") {
    auto Q = make_field(1);
    HopfAlgebra h = taft(Q, 2, Scalar::from_rational(Q, -1));
    for (const HopfAlgebra& v : {dual_hopf(h), cop_hopf(h), op_hopf(h)}) {
        auto rep = check_hopf_axioms(v);
        INFO(rep.witness);
        CHECK(rep.pass());
    }
    // double dual is the original up to the canonical identification
    HopfAlgebra dd = dual_hopf(dual_hopf(h));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Vec a = h.algebra->multiply(h.algebra->basis_vector(i), h.algebra->basis_vector(j));
            Vec b = dd.algebra->multiply(dd.algebra->basis_vector(i), dd.algebra->basis_vector(j));
            CHECK(a == b);
        }
}

TEST_CASE("uq_sl2_dual at N=3 and the pairing") {
    HopfAlgebra u = uq_sl2(3);
    HopfAlgebra hd = uq_sl2_dual(3);
    REQUIRE(hd.dim() == 27);
    auto rep = check_hopf_axioms(hd);
    INFO(rep.witness);
    REQUIRE(rep.pass());

    const unsigned N = 3;
    auto idx = [N](unsigned r, unsigned s, unsigned t) { return (r * N + s) * N + t; };
    const auto& alg = *hd.algebra;
    Scalar q = Scalar::zeta(hd.ctx());
    Vec a = alg.basis_vector(idx(1, 0, 0)), b = alg.basis_vector(idx(0, 1, 0)),
        c = alg.basis_vector(idx(0, 0, 1));
    // ba = q ab
    Vec ba = alg.multiply(b, a), ab = alg.multiply(a, b);
    for (auto& x : ab) x *= q;
    CHECK(ba == ab);
    // ad - q^{-1} bc = 1 and da - q bc = 1 with the eliminated d
    Vec d(27, Scalar::zero(hd.ctx()));
    d[idx(2, 0, 0)] = Scalar::one(hd.ctx());
    d[idx(2, 1, 1)] = q.pow(-1);
    Vec ad = alg.multiply(a, d), bc = alg.multiply(b, c);
    for (std::size_t i = 0; i < 27; ++i) ad[i] -= q.pow(-1) * bc[i];
    CHECK(ad == alg.unit());
    Vec da = alg.multiply(d, a);
    for (std::size_t i = 0; i < 27; ++i) da[i] -= q * bc[i];
    CHECK(da == alg.unit());

    // pairing with U is non-degenerate
    Matrix p = uq_pairing_matrix(hd, u, 3);
    CHECK(rank(p) == 27);

    // grouplikes: characters of U. The candidates K -> zeta^j, E, F -> 0
    // fail the relation EF - FE = (K - K^{-1})/(q - q^{-1}) unless j = 0,
    // so only the trivial character survives and G(H) = {1}.
    auto gs = uq_dual_grouplikes(hd, u, 3);
    REQUIRE(gs.size() == 1);
    CHECK(gs[0] == alg.unit());
    IntegralData ints = integral_spaces(hd);
    CHECK(radford_s4_verify(hd, ints));
}

TEST_CASE("drinfeld doubles are unimodular") {
    auto Q = make_field(1);
    HopfAlgebra c2 = group_algebra_hopf(Q, 2);
    HopfAlgebra d2 = drinfeld_double(c2);
    REQUIRE(d2.dim() == 4 * 4 / 4);  // dim (kC2)^2 = 4
    auto rep = check_hopf_axioms(d2);
    INFO(rep.witness);
    REQUIRE(rep.pass());
    IntegralData i2 = integral_spaces(d2);
    CHECK(i2.unimodular);
    CHECK(i2.counimodular);

    auto F3 = make_field(3);
    HopfAlgebra c3 = group_algebra_hopf(F3, 3);
    HopfAlgebra d3 = drinfeld_double(c3);
    REQUIRE(d3.dim() == 9);
    auto rep3 = check_hopf_axioms(d3);
    INFO(rep3.witness);
    REQUIRE(rep3.pass());
    CHECK(integral_spaces(d3).unimodular);

    HopfAlgebra h4 = taft(Q, 2, Scalar::from_rational(Q, -1));
    HopfAlgebra dh4 = drinfeld_double(h4);
    REQUIRE(dh4.dim() == 16);
    auto rep4 = check_hopf_axioms(dh4);
    INFO(rep4.witness);
    REQUIRE(rep4.pass());
    IntegralData i4 = integral_spaces(dh4);
    CHECK(i4.unimodular);  // the double of any f.d. Hopf algebra is unimodular
}
