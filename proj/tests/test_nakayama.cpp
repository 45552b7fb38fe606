#include <catch2/catch_amalgamated.hpp>

#include "naka/nakayama.hpp"

using namespace naka;

namespace {

// Sweedler's 4-dimensional algebra: g^2 = 1, x^2 = 0, xg = -gx,
// basis {1, g, x, gx}
AlgebraPtr sweedler_algebra(const FieldCtxPtr& ctx) {
    auto a = std::make_shared<Algebra>(ctx, 4, std::vector<std::string>{"1", "g", "x", "gx"});
    auto one = Scalar::one(ctx);
    auto neg = Scalar::from_rational(ctx, -1);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
        a->add_product_term(i, j, k, c);
    };
    for (std::size_t j = 0; j < 4; ++j) set(0, j, j, one);
    set(1, 0, 1, one);
    set(2, 0, 2, one);
    set(3, 0, 3, one);
    set(1, 1, 0, one);
    set(1, 2, 3, one);
    set(1, 3, 2, one);
    set(2, 1, 3, neg);
    set(3, 1, 2, neg);
    set(2, 3, 0, Scalar::zero(ctx));
    a->set_unit_basis(0);
    return a;
}

// the two indecomposable projectives of UT2 in the basis {E00, E01, E11}
LeftModule ut2_p1(const AlgebraPtr& ut) {
    return character_left_module(
        ut, {Scalar::one(ut->ctx()), Scalar::zero(ut->ctx()), Scalar::zero(ut->ctx())});
}
LeftModule ut2_p2(const AlgebraPtr& ut) {
    auto ctx = ut->ctx();
    LeftModule m(ut, 2);  // basis (E01, E11) inside the regular module
    m.action_of_basis(0).at(0, 0) = Scalar::one(ctx);
    m.action_of_basis(1).at(0, 1) = Scalar::one(ctx);
    m.action_of_basis(2).at(1, 1) = Scalar::one(ctx);
    return m;
}

}  // namespace

TEST_CASE("nakayama over the ground field is the identity") {
    auto Q = make_field(1);
    auto k = cyclic_group_algebra(Q, 1);
    LeftModule m(k, 3);
    m.action_of_basis(0) = Matrix::identity(Q, 3);
    auto nak = nakayama_functor(k, m);
    CHECK(nak.module.dim() == 3);
    CHECK(is_isomorphic(nak.module, m).verdict == IsoResult::Verdict::Isomorphic);
    LeftModule ra = nakayama_right_adjoint(k, m);
    CHECK(ra.dim() == 3);
}

TEST_CASE("nakayama swaps the projective dimensions of UT2") {
    auto Q = make_field(1);
    auto ut = upper_triangular_2(Q);
    LeftModule p1 = ut2_p1(ut), p2 = ut2_p2(ut);
    CHECK(check_module_axioms(p1).pass());
    CHECK(check_module_axioms(p2).pass());
    auto n1 = nakayama_functor(ut, p1), n2 = nakayama_functor(ut, p2);
    CHECK(n1.module.dim() == 2);
    CHECK(n2.module.dim() == 1);
    CHECK(check_module_axioms(n1.module).pass());
    CHECK(check_module_axioms(n2.module).pass());
    // the opposite algebra swaps the roles
    auto op = ut->opposite();
    LeftModule q1 = character_left_module(
        op, {Scalar::zero(Q), Scalar::zero(Q), Scalar::one(Q)});
    CHECK(nakayama_functor(op, q1).module.dim() == 2);
}

TEST_CASE("nakayama is the identity up to iso for the symmetric algebra kC2") {
    auto Q = make_field(1);
    auto c2 = cyclic_group_algebra(Q, 2);
    LeftModule reg = regular_left_module(c2);
    LeftModule triv = character_left_module(c2, {Scalar::one(Q), Scalar::one(Q)});
    LeftModule sgn = character_left_module(c2, {Scalar::one(Q), Scalar::from_rational(Q, -1)});
    for (const LeftModule* m : {&reg, &triv, &sgn}) {
        auto nak = nakayama_functor(c2, *m);
        CHECK(is_isomorphic(nak.module, *m).verdict == IsoResult::Verdict::Isomorphic);
    }
}

TEST_CASE("nakayama functoriality and right exactness") {
    auto Q = make_field(1);
    auto ut = upper_triangular_2(Q);
    LeftModule reg = regular_left_module(ut);
    LeftModule p1 = ut2_p1(ut);
    auto nr = nakayama_functor(ut, reg), n1 = nakayama_functor(ut, p1);
    // identity maps to identity
    Matrix nid = nakayama_map(ut, nr, nr, Matrix::identity(Q, 3));
    CHECK(nid == Matrix::identity(Q, nr.module.dim()));
    // a surjection reg -> p1 stays surjective after Nak
    Subspace hom = hom_space(reg, p1);
    REQUIRE(hom.dim() >= 1);
    Matrix f = unvectorize(Q, hom.basis_vector(0), 1, 3);
    REQUIRE(rank(f) == 1);
    Matrix nf = nakayama_map(ut, nr, n1, f);
    CHECK(rank(nf) == n1.module.dim());
    // composition law against the composite map
    Matrix comp = nakayama_map(ut, nr, n1, f) * nakayama_map(ut, nr, nr, Matrix::identity(Q, 3));
    CHECK(comp == nf);
}

TEST_CASE("adjunction dimension identity for UT2") {
    auto Q = make_field(1);
    auto ut = upper_triangular_2(Q);
    std::vector<LeftModule> corpus{ut2_p1(ut), ut2_p2(ut), regular_left_module(ut)};
    for (const auto& m : corpus)
        for (const auto& n : corpus) {
            auto nak = nakayama_functor(ut, m);
            LeftModule ra = nakayama_right_adjoint(ut, n);
            CHECK(check_module_axioms(ra).pass());
            CHECK(hom_space(nak.module, n).dim() == hom_space(m, ra).dim());
        }
}

TEST_CASE("right adjoint inverts nakayama on Frobenius algebras") {
    auto Q = make_field(1);
    auto c2 = cyclic_group_algebra(Q, 2);
    LeftModule reg = regular_left_module(c2);
    auto nak = nakayama_functor(c2, reg);
    LeftModule back = nakayama_right_adjoint(c2, nak.module);
    CHECK(is_isomorphic(back, reg).verdict == IsoResult::Verdict::Isomorphic);
}

TEST_CASE("frobenius trace search") {
    auto Q = make_field(1);
    auto m2 = matrix_algebra(Q, 2);
    auto r = frobenius_trace_search(m2);
    REQUIRE(r.status == TraceSearch::Status::Found);
    // matrix trace itself works
    Vec tr(4, Scalar::zero(Q));
    tr[0] = Scalar::one(Q);
    tr[3] = Scalar::one(Q);
    CHECK(try_matrix_inverse(gram_matrix(*m2, tr)).has_value());

    auto ut = upper_triangular_2(Q);
    CHECK(frobenius_trace_search(ut).status == TraceSearch::Status::CertifiedNone);
}

TEST_CASE("nakayama automorphism by gram transport") {
    auto Q = make_field(1);
    // symmetric trace on M2 gives nu = id
    auto m2 = matrix_algebra(Q, 2);
    Vec tr(4, Scalar::zero(Q));
    tr[0] = Scalar::one(Q);
    tr[3] = Scalar::one(Q);
    FrobeniusTrace t{m2, tr, gram_matrix(*m2, tr)};
    auto data = nakayama_automorphism(t);
    CHECK(data.nu.matrix == Matrix::identity(Q, 4));

    // commutative Frobenius k[t]/(t^2) with lambda = coefficient of t
    auto kt = truncated_polynomial_algebra(Q, 2);
    Vec lam{Scalar::zero(Q), Scalar::one(Q)};
    FrobeniusTrace t2{kt, lam, gram_matrix(*kt, lam)};
    CHECK(nakayama_automorphism(t2).nu.matrix == Matrix::identity(Q, 2));

    // defining relation holds on every basis pair
    auto c2 = cyclic_group_algebra(Q, 2);
    auto tc = frobenius_trace_search(c2);
    REQUIRE(tc.status == TraceSearch::Status::Found);
    auto dc = nakayama_automorphism(tc.trace);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Vec ba = c2->multiply(c2->basis_vector(i), c2->basis_vector(j));
            Vec nuab = c2->multiply(dc.nu.apply(c2->basis_vector(j)), c2->basis_vector(i));
            CHECK(apply_functional(tc.trace.lambda, ba) == apply_functional(tc.trace.lambda, nuab));
        }
}

TEST_CASE("classification") {
    auto Q = make_field(1);
    auto kc2 = classify(cyclic_group_algebra(Q, 2));
    CHECK(kc2.verdict == FrobeniusClass::SymmetricFrobenius);
    CHECK(kc2.certified);

    auto ut = classify(upper_triangular_2(Q));
    CHECK(ut.verdict == FrobeniusClass::NotFrobenius);
    CHECK(ut.certified);

    auto h4 = classify(sweedler_algebra(Q));
    CHECK(h4.verdict == FrobeniusClass::Frobenius);
    CHECK(h4.certified);
}

TEST_CASE("nakayama functor is twisting by nu for Frobenius algebras") {
    auto Q = make_field(1);
    auto h4 = sweedler_algebra(Q);
    REQUIRE(check_algebra_axioms(*h4).pass());
    auto ts = frobenius_trace_search(h4);
    REQUIRE(ts.status == TraceSearch::Status::Found);
    auto data = nakayama_automorphism(ts.trace);
    LeftModule reg = regular_left_module(h4);
    auto nak = nakayama_functor(h4, reg);
    LeftModule twisted = twist_module(reg, data.nu);
    CHECK(check_module_axioms(twisted).pass());
    CHECK(is_isomorphic(nak.module, twisted).verdict == IsoResult::Verdict::Isomorphic);
}
