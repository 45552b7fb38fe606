#include <catch2/catch_amalgamated.hpp>

#include "naka/monad.hpp"

using namespace naka;

namespace {

MonadRing ring_over_field(const AlgebraPtr& lam) {
    auto k = product_of_fields(lam->ctx(), 1);
    Matrix eta(lam->ctx(), lam->dim(), 1);
    Vec u = lam->unit();
    for (std::size_t i = 0; i < lam->dim(); ++i) eta.at(i, 0) = u[i];
    return make_monad_ring(k, lam, eta);
}

struct Instance {
    std::string name;
    MonadRing ring;
};

std::vector<Instance> corpus(const FieldCtxPtr& q) {
    std::vector<Instance> v;
    v.push_back({"group algebra over the field", ring_over_field(cyclic_group_algebra(q, 2))});
    v.push_back({"upper triangular over the field", ring_over_field(upper_triangular_2(q))});
    v.push_back({"matrix algebra over the field", ring_over_field(matrix_algebra(q, 2))});

    auto one = Scalar::one(q);
    {
        auto k2 = product_of_fields(q, 2);
        auto ut = upper_triangular_2(q);
        Matrix eta(q, 3, 2);  // diagonal embedding p0 -> E00, p1 -> E11
        eta.at(0, 0) = one;
        eta.at(2, 1) = one;
        v.push_back({"diagonal in upper triangular", make_monad_ring(k2, ut, eta)});
    }
    {
        auto c2 = cyclic_group_algebra(q, 2);
        auto lam = tensor_algebra(c2, truncated_polynomial_algebra(q, 2));
        Matrix eta(q, 4, 2);  // g^i -> g^i (x) 1
        eta.at(0, 0) = one;
        eta.at(2, 1) = one;
        v.push_back({"scalar extension by dual numbers", make_monad_ring(c2, lam, eta)});
    }
    {
        auto c2 = cyclic_group_algebra(q, 2);
        auto c4 = cyclic_group_algebra(q, 4);
        Matrix eta(q, 4, 2);  // index-two subgroup g -> h^2
        eta.at(0, 0) = one;
        eta.at(2, 1) = one;
        v.push_back({"index two subgroup", make_monad_ring(c2, c4, eta)});
    }
    return v;
}

}  // namespace

TEST_CASE("ring corpus: duals, unit law, adjunctions, factorization") {
    auto q = make_field(1);
    for (Instance& inst : corpus(q)) {
        DYNAMIC_SECTION(inst.name) {
            const MonadRing& ring = inst.ring;
            const AlgebraPtr& lam = ring.lambda;
            const AlgebraPtr& base = ring.base;
            AdjointBimodule adj = left_adjoint_bimodule(ring);
            const std::size_t dl = lam->dim(), d1 = adj.ladj_basis.dim();
            CHECK(d1 == dl);
            CHECK(adj.lladj_basis.dim() == dl);
            CHECK(adj.lladj_ring.lambda->dim() == dl);

            // second triangle identity: sum_i f(e_i) . pi_i = f
            for (std::size_t b = 0; b < d1; ++b) {
                Matrix f = unvectorize(q, adj.ladj_basis.basis_vector(b), base->dim(), dl);
                Vec acc(d1, Scalar::zero(q));
                for (std::size_t i = 0; i < dl; ++i) {
                    Vec moved = adj.ladj_kk.left().act(f.col(i)) * adj.dual_basis.col(i);
                    for (std::size_t t = 0; t < d1; ++t) acc[t] += moved[t];
                }
                Vec expect(d1, Scalar::zero(q));
                expect[b] = Scalar::one(q);
                CHECK(acc == expect);
            }

            MonadModule mreg = make_monad_module(ring, regular_left_module(lam));

            // unit law: L (x)_L M is isomorphic to M
            auto [unit_m, unit_space] = tensor_over_monad(regular_bimodule(lam), mreg);
            REQUIRE(unit_m.dim() == mreg.module.dim());
            CHECK(is_isomorphic(unit_m, mreg.module).verdict == IsoResult::Verdict::Isomorphic);

            LeftModule x = regular_left_module(base);
            CHECK(check_module_axioms(forg_radj_module(ring, x)).pass());
            PsiResult psi = psi_iso(adj, x);
            CHECK(psi.source.dim() == psi.target.dim());

            AdjunctionDims dims = adjunction_dimensions(adj, mreg, x);
            CHECK(dims.hom_ring_m_free_x == dims.hom_base_ladj_m_x);
            CHECK(dims.hom_base_forg_m_x == dims.hom_ring_m_radj_x);

            TheoremResult thm = nakayama_via_theorem(adj, mreg);
            CHECK(thm.underlying.verdict == IsoResult::Verdict::Isomorphic);
            CHECK(thm.full.verdict == IsoResult::Verdict::Isomorphic);
        }
    }
}

TEST_CASE("factorization on non-free modules") {
    auto q = make_field(1);
    auto one = Scalar::one(q);

    SECTION("column module over the matrix algebra") {
        MonadRing ring = ring_over_field(matrix_algebra(q, 2));
        AdjointBimodule adj = left_adjoint_bimodule(ring);
        LeftModule col(ring.lambda, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) col.action_of_basis(i * 2 + j).at(i, j) = one;
        TheoremResult thm = nakayama_via_theorem(adj, make_monad_module(ring, col));
        CHECK(thm.underlying.verdict == IsoResult::Verdict::Isomorphic);
        CHECK(thm.full.verdict == IsoResult::Verdict::Isomorphic);
    }

    SECTION("sign character of the cyclic group of order four") {
        auto c2 = cyclic_group_algebra(q, 2);
        auto c4 = cyclic_group_algebra(q, 4);
        Matrix eta(q, 4, 2);
        eta.at(0, 0) = one;
        eta.at(2, 1) = one;
        MonadRing ring = make_monad_ring(c2, c4, eta);
        AdjointBimodule adj = left_adjoint_bimodule(ring);
        Vec chi{one, -one, one, -one};
        LeftModule sgn = character_left_module(c4, chi);
        TheoremResult thm = nakayama_via_theorem(adj, make_monad_module(ring, sgn));
        CHECK(thm.underlying.verdict == IsoResult::Verdict::Isomorphic);
        CHECK(thm.full.verdict == IsoResult::Verdict::Isomorphic);
    }

    SECTION("a simple module over the diagonal-in-upper-triangular ring") {
        auto k2 = product_of_fields(q, 2);
        auto ut = upper_triangular_2(q);
        Matrix eta(q, 3, 2);
        eta.at(0, 0) = one;
        eta.at(2, 1) = one;
        MonadRing ring = make_monad_ring(k2, ut, eta);
        AdjointBimodule adj = left_adjoint_bimodule(ring);
        // one-dimensional module E00 -> 1, E01, E11 -> 0
        Vec chi{one, Scalar::zero(q), Scalar::zero(q)};
        LeftModule s0 = character_left_module(ut, chi);
        TheoremResult thm = nakayama_via_theorem(adj, make_monad_module(ring, s0));
        CHECK(thm.underlying.verdict == IsoResult::Verdict::Isomorphic);
        CHECK(thm.full.verdict == IsoResult::Verdict::Isomorphic);
    }
}

TEST_CASE("monads presented as functor data") {
    auto q = make_field(1);
    auto one = Scalar::one(q);

    SECTION("the identity monad on a product of fields") {
        auto k2 = product_of_fields(q, 2);
        MonadFunctorData d{k2, regular_bimodule(k2), Matrix(q, 2, 4), k2->unit()};
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                Vec p = k2->multiply(k2->basis_vector(i), k2->basis_vector(j));
                for (std::size_t t = 0; t < 2; ++t) d.mult.at(t, i * 2 + j) = p[t];
            }
        MonadRing ring = monad_from_functor(d);
        CHECK(ring.lambda->dim() == 2);
        CHECK(ring.unit_map == Matrix::identity(q, 2));
        CHECK(left_adjoint_bimodule(ring).ladj_basis.dim() == 2);
    }

    SECTION("tensoring with a group algebra over the field") {
        auto k = product_of_fields(q, 1);
        auto c2 = cyclic_group_algebra(q, 2);
        Bimodule carrier(k, k, 2);
        carrier.left().action_of_basis(0) = Matrix::identity(q, 2);
        carrier.right().action_of_basis(0) = Matrix::identity(q, 2);
        Matrix mult(q, 2, 4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                Vec p = c2->multiply(c2->basis_vector(i), c2->basis_vector(j));
                for (std::size_t t = 0; t < 2; ++t) mult.at(t, i * 2 + j) = p[t];
            }
        Vec unit_elem{one, Scalar::zero(q)};
        MonadRing ring = monad_from_functor({k, carrier, mult, unit_elem});
        CHECK(is_isomorphic(regular_left_module(ring.lambda), regular_left_module(c2)).verdict ==
              IsoResult::Verdict::Isomorphic);

        // breaking unitality of the multiplication is caught
        Matrix bad = mult;
        bad.at(1, 0 * 2 + 1) = Scalar::zero(q);
        CHECK_THROWS_AS(monad_from_functor({k, carrier, bad, unit_elem}), MonadAxiomFailure);
    }

    SECTION("a non-central unit element is caught") {
        auto k2 = product_of_fields(q, 2);
        MonadFunctorData d{k2, regular_bimodule(k2), Matrix(q, 2, 4), Vec{one, Scalar::zero(q)}};
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                Vec p = k2->multiply(k2->basis_vector(i), k2->basis_vector(j));
                for (std::size_t t = 0; t < 2; ++t) d.mult.at(t, i * 2 + j) = p[t];
            }
        CHECK_THROWS_AS(monad_from_functor(d), MonadAxiomFailure);
    }
}

TEST_CASE("projectivity over the base is required") {
    auto q = make_field(1);
    auto base = truncated_polynomial_algebra(q, 2);
    auto lam = product_of_fields(q, 1);
    Matrix eta(q, 1, 2);  // the quotient by the nilpotent ideal
    eta.at(0, 0) = Scalar::one(q);
    MonadRing ring = make_monad_ring(base, lam, eta);
    CHECK_THROWS_AS(left_adjoint_bimodule(ring), NotProjective);
}

TEST_CASE("structure mismatches and bad units are reported") {
    auto q = make_field(1);
    auto k = product_of_fields(q, 1);
    auto c2 = cyclic_group_algebra(q, 2);

    Matrix bad_eta(q, 2, 1);  // 1 -> g is not unital
    bad_eta.at(1, 0) = Scalar::one(q);
    CHECK_THROWS_AS(make_monad_ring(k, c2, bad_eta), MonadAxiomFailure);

    MonadRing ring = ring_over_field(c2);
    MonadModule m = make_monad_module(ring, regular_left_module(c2));
    CHECK_THROWS_AS(tensor_over_monad(regular_bimodule(k), m), StructureMismatch);
    CHECK_THROWS_AS(make_monad_module(ring, regular_left_module(k)), StructureMismatch);
}

TEST_CASE("canonical map reduces to the unit identification on the regular bimodule") {
    auto q = make_field(1);
    auto k = cyclic_group_algebra(q, 2);
    Bimodule b = regular_bimodule(k);
    CanonicalIsoData cd = canonical_iso_data(k, k, b);
    LeftModule m = regular_left_module(k);
    CanonicalIso can = canonical_iso(cd, m);

    // u : M -> K (x)_K M, m -> 1 (x) m
    Matrix ufull(q, k->dim() * m.dim(), m.dim());
    Vec unit = k->unit();
    for (std::size_t j = 0; j < k->dim(); ++j)
        for (std::size_t t = 0; t < m.dim(); ++t) ufull.at(j * m.dim() + t, t) = unit[j];
    Matrix u = can.gm_space.projection * ufull;
    Matrix nak_u = nakayama_map(k, can.nak_m, can.nak_gm, u);

    // the double-dual element evaluating at the unit
    const std::size_t dbr = cd.br_basis.dim();
    Matrix fn(q, k->dim(), dbr);
    for (std::size_t c = 0; c < dbr; ++c) {
        Matrix xc = unvectorize(q, cd.br_basis.basis_vector(c), k->dim(), k->dim());
        Vec val = xc * unit;
        for (std::size_t t = 0; t < k->dim(); ++t) fn.at(t, c) = val[t];
    }
    auto i1 = solve(cd.brr_basis.basis(), detail::vectorize_mat(fn));
    REQUIRE(i1);
    Matrix incl(q, cd.brr_basis.dim() * can.nak_m.module.dim(), can.nak_m.module.dim());
    for (std::size_t a = 0; a < cd.brr_basis.dim(); ++a)
        for (std::size_t t = 0; t < can.nak_m.module.dim(); ++t)
            incl.at(a * can.nak_m.module.dim() + t, t) = (*i1)[a];
    CHECK(can.map * (can.domain_space.projection * incl) == nak_u);
}

TEST_CASE("canonical map is natural") {
    auto q = make_field(1);
    auto c2 = cyclic_group_algebra(q, 2);
    auto lam = tensor_algebra(c2, truncated_polynomial_algebra(q, 2));
    Matrix eta(q, 4, 2);
    eta.at(0, 0) = Scalar::one(q);
    eta.at(2, 1) = Scalar::one(q);
    AdjointBimodule adj = left_adjoint_bimodule(make_monad_ring(c2, lam, eta));
    CanonicalIsoData cd = canonical_iso_data(c2, c2, adj.lladj_ring.kbimodule);

    LeftModule m = regular_left_module(c2);
    Vec chi{Scalar::one(q), -Scalar::one(q)};
    LeftModule sgn = character_left_module(c2, chi);
    Matrix f(q, 1, 2);  // the sign-equivariant projection
    f.at(0, 0) = Scalar::one(q);
    f.at(0, 1) = -Scalar::one(q);
    REQUIRE(intertwines(m, sgn, f));
    CHECK(check_can_naturality(cd, m, sgn, f));
}

TEST_CASE("canonical map is coherent under composition of bimodules") {
    auto q = make_field(1);
    auto k = product_of_fields(q, 1);
    auto vecspace = [&](std::size_t n) {
        Bimodule b(k, k, n);
        b.left().action_of_basis(0) = Matrix::identity(q, n);
        b.right().action_of_basis(0) = Matrix::identity(q, n);
        return b;
    };
    Bimodule b = vecspace(2), bp = vecspace(3), bpp = vecspace(6);  // bpp = bp (x) b
    CanonicalIsoData cdb = canonical_iso_data(k, k, b);
    CanonicalIsoData cdbp = canonical_iso_data(k, k, bp);
    CanonicalIsoData cdbpp = canonical_iso_data(k, k, bpp);

    LeftModule m(k, 2);
    m.action_of_basis(0) = Matrix::identity(q, 2);
    CanonicalIso canb = canonical_iso(cdb, m);
    CanonicalIso canbp = canonical_iso(cdbp, canb.gm);
    CanonicalIso canbpp = canonical_iso(cdbpp, m);

    // coordinates of the evaluation-at-e_i double-dual basis
    auto std_coords = [&](const CanonicalIsoData& cd, std::size_t n) {
        Matrix s(q, cd.brr_basis.dim(), n);
        for (std::size_t i = 0; i < n; ++i) {
            Matrix fn(q, 1, cd.br_basis.dim());
            for (std::size_t c = 0; c < cd.br_basis.dim(); ++c)
                fn.at(0, c) = unvectorize(q, cd.br_basis.basis_vector(c), 1, n).at(0, i);
            auto x = solve(cd.brr_basis.basis(), detail::vectorize_mat(fn));
            REQUIRE(x);
            for (std::size_t a = 0; a < cd.brr_basis.dim(); ++a) s.at(a, i) = (*x)[a];
        }
        return s;
    };
    Matrix sb = std_coords(cdb, 2), sbp = std_coords(cdbp, 3), sbpp = std_coords(cdbpp, 6);
    auto sb_inv = try_matrix_inverse(sb);
    auto sbp_inv = try_matrix_inverse(sbp);
    REQUIRE(sb_inv);
    REQUIRE(sbp_inv);
    Matrix omega = sbpp * kron(*sbp_inv, *sb_inv);
    auto omega_inv = try_matrix_inverse(omega);
    REQUIRE(omega_inv);

    // associativity on the underlying modules
    Matrix assoc = canbpp.gm_space.projection *
                   (kron(Matrix::identity(q, 3), canb.gm_space.section) * canbp.gm_space.section);
    Matrix nak_assoc = nakayama_map(k, canbp.nak_gm, canbpp.nak_gm, assoc);

    const std::size_t nm = canb.nak_m.module.dim();
    Matrix paste =
        nak_assoc *
        (canbp.map *
         (canbp.domain_space.projection *
          (kron(Matrix::identity(q, cdbp.brr_basis.dim()),
                canb.map * canb.domain_space.projection) *
           (kron(*omega_inv, Matrix::identity(q, nm)) * canbpp.domain_space.section))));
    CHECK(paste == canbpp.map);
}
