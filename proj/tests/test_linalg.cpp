#include <catch2/catch_amalgamated.hpp>

#include "naka/linalg.hpp"

#include <random>

using namespace naka;

namespace {
Matrix random_matrix(const FieldCtxPtr& F, std::mt19937& rng, std::size_t r, std::size_t c) {
    Matrix m(F, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = Scalar::from_rational(F, Rational(static_cast<int>(rng() % 7) - 3));
    return m;
}
}  // namespace

TEST_CASE("rref basics") {
    auto Q = make_field(1);
    Matrix I = Matrix::identity(Q, 3);
    auto rr = rref(I);
    CHECK(rr.reduced == I);
    CHECK(rr.rank == 3);

    Matrix Z(Q, 2, 5);
    CHECK(rref(Z).rank == 0);

    auto F = make_field(3);
    Scalar z = Scalar::zeta(F);
    Matrix M(F, 2, 2);
    M.at(0, 0) = Scalar::one(F);
    M.at(0, 1) = z;
    M.at(1, 0) = z;
    M.at(1, 1) = z * z;
    CHECK(rref(M).rank == 1);
}

TEST_CASE("kernel basis") {
    auto Q = make_field(1);
    CHECK(kernel_basis(Matrix(Q, 3, 3)).dim() == 3);
    CHECK(kernel_basis(Matrix::identity(Q, 4)).dim() == 0);
    Matrix M(Q, 1, 2);
    M.at(0, 0) = Scalar::one(Q);
    M.at(0, 1) = Scalar::one(Q);
    Subspace K = kernel_basis(M);
    REQUIRE(K.dim() == 1);
    Vec v = K.basis_vector(0);
    CHECK(v[0] + v[1] == Scalar::zero(Q));
    CHECK(!v[0].is_zero());
}

TEST_CASE("cokernel") {
    auto Q = make_field(1);
    CHECK(cokernel(Matrix::identity(Q, 3)).dim == 0);
    auto ck = cokernel(Matrix(Q, 2, 4));
    CHECK(ck.dim == 2);
    CHECK(ck.projection == Matrix::identity(Q, 2));

    Matrix M(Q, 2, 1);
    M.at(0, 0) = Scalar::one(Q);
    M.at(1, 0) = Scalar::one(Q);
    auto c2 = cokernel(M);
    CHECK(c2.dim == 1);
    CHECK((c2.projection * M).is_zero());
    CHECK(c2.projection * c2.section == Matrix::identity(Q, 1));
}

TEST_CASE("solve") {
    auto Q = make_field(1);
    Matrix I = Matrix::identity(Q, 3);
    Vec b{Scalar::from_rational(Q, 1), Scalar::from_rational(Q, 2), Scalar::from_rational(Q, 3)};
    auto x = solve(I, b);
    REQUIRE(x);
    CHECK(*x == b);

    Matrix A(Q, 1, 2);
    A.at(0, 0) = Scalar::one(Q);
    A.at(0, 1) = Scalar::one(Q);
    auto y = solve(A, Vec{Scalar::from_rational(Q, 2)});
    REQUIRE(y);
    CHECK((*y)[0] == Scalar::from_rational(Q, 2));
    CHECK((*y)[1].is_zero());

    Matrix B(Q, 2, 1);
    B.at(0, 0) = Scalar::one(Q);
    CHECK(!solve(B, Vec{Scalar::zero(Q), Scalar::one(Q)}));
}

TEST_CASE("kron") {
    auto Q = make_field(1);
    CHECK(kron(Matrix::identity(Q, 2), Matrix::identity(Q, 3)) == Matrix::identity(Q, 6));

    std::mt19937 rng(1);
    Matrix A = random_matrix(Q, rng, 2, 2);
    Matrix c(Q, 1, 1);
    c.at(0, 0) = Scalar::from_rational(Q, Rational(5, 3));
    CHECK(kron(A, c) == c.at(0, 0) * A);

    Matrix B = random_matrix(Q, rng, 2, 2), C = random_matrix(Q, rng, 2, 2);
    CHECK(kron(kron(A, B), C) == kron(A, kron(B, C)));
    CHECK(rank(kron(A, B)) == rank(A) * rank(B));
}

TEST_CASE("rank nullity and cokernel composition on random matrices") {
    auto F = make_field(4);
    std::mt19937 rng(7);
    for (int t = 0; t < 10; ++t) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        Matrix m(F, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m.at(i, j) = Scalar::zeta_pow(F, static_cast<long>(rng() % 4)) *
                             Scalar::from_rational(F, Rational(static_cast<int>(rng() % 5) - 2));
        CHECK(rank(m) + kernel_basis(m).dim() == c);
        auto ck = cokernel(m);
        CHECK((ck.projection * m).is_zero());
        CHECK(ck.dim == r - rank(m));
        if (ck.dim > 0)
            CHECK(ck.projection * ck.section == Matrix::identity(F, ck.dim));
    }
}

TEST_CASE("incremental cokernel matches dense cokernel") {
    auto Q = make_field(1);
    std::mt19937 rng(3);
    for (int t = 0; t < 8; ++t) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        Matrix m = random_matrix(Q, rng, r, c);
        // columns of m fed as sparse rows over r unknowns
        IncrementalKernel ik(Q, r);
        for (std::size_t j = 0; j < c; ++j) {
            IncrementalKernel::SparseRow row;
            for (std::size_t i = 0; i < r; ++i)
                if (!m.at(i, j).is_zero()) row[i] = m.at(i, j);
            ik.add_row(std::move(row));
        }
        auto sparse = ik.cokernel();
        auto dense = cokernel(m);
        CHECK(sparse.dim == dense.dim);
        CHECK(sparse.projection == dense.projection);
        CHECK(sparse.section == dense.section);
    }
}

TEST_CASE("incremental kernel matches dense kernel") {
    auto Q = make_field(1);
    std::mt19937 rng(11);
    for (int t = 0; t < 8; ++t) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        Matrix m = random_matrix(Q, rng, r, c);
        IncrementalKernel ik(Q, c);
        for (std::size_t i = 0; i < r; ++i) {
            IncrementalKernel::SparseRow row;
            for (std::size_t j = 0; j < c; ++j)
                if (!m.at(i, j).is_zero()) row[j] = m.at(i, j);
            ik.add_row(std::move(row));
        }
        CHECK(ik.rank() == rank(m));
        Subspace k1 = ik.kernel(), k2 = kernel_basis(m);
        CHECK(k1.dim() == k2.dim());
        for (std::size_t j = 0; j < k1.dim(); ++j)
            CHECK((m * k1.basis_vector(j)) == Vec(r, Scalar::zero(Q)));
        CHECK(k1.basis() == k2.basis());
    }
}
