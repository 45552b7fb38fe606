// Nakayama functor A* (x)_A (-), its right adjoint Hom_A(A*, -), Frobenius
// trace search with grid certificates, Nakayama automorphisms, and the
// Frobenius / symmetric-Frobenius classification.
#pragma once

#include "naka/modrep.hpp"

namespace naka {

struct DegenerateTrace : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NakayamaResult {
    LeftModule module;
    TensorSpace space;  // over dim(A*) * dim(M)
};

inline NakayamaResult nakayama_functor(const AlgebraPtr& a, const LeftModule& m) {
    auto [mod, ts] = tensor_over_algebra(dual_regular_bimodule(a), m);
    return {std::move(mod), std::move(ts)};
}

// induced map Nak(f) : Nak(M) -> Nak(N) for f : M -> N
inline Matrix nakayama_map(const AlgebraPtr& a, const NakayamaResult& nm,
                           const NakayamaResult& nn, const Matrix& f) {
    return nn.space.projection *
           (kron(Matrix::identity(a->ctx(), a->dim()), f) * nm.space.section);
}

// Hom_A(A*, N) with (a . phi)(f) = phi(f . a)
inline LeftModule nakayama_right_adjoint(const AlgebraPtr& a, const LeftModule& n) {
    Bimodule astar = dual_regular_bimodule(a);
    Subspace hom = hom_space(astar.left(), n);
    const auto& ctx = a->ctx();
    LeftModule out(a, hom.dim());
    if (hom.dim() == 0) return out;
    Matrix basis = hom.basis();  // columns = vectorized intertwiners, dimN x dimA
    for (std::size_t i = 0; i < a->dim(); ++i) {
        Matrix r = astar.right().action_of_basis(i);
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < hom.dim(); ++j) {
            Matrix phi = unvectorize(ctx, hom.basis_vector(j), n.dim(), a->dim());
            Matrix moved = phi * r;
            Vec v(n.dim() * a->dim(), Scalar::zero(ctx));
            for (std::size_t p = 0; p < n.dim(); ++p)
                for (std::size_t q = 0; q < a->dim(); ++q) v[p * a->dim() + q] = moved.at(p, q);
            auto coords = solve(basis, v);
            if (!coords) throw AlgebraMismatch("hom space not action stable");
            cols.push_back(std::move(*coords));
        }
        out.action_of_basis(i) = Matrix::from_cols(ctx, cols);
    }
    return out;
}

struct FrobeniusTrace {
    AlgebraPtr algebra;
    Vec lambda;   // functional on A in the dual basis
    Matrix gram;  // gram[i][j] = lambda(e_i e_j)
};

inline Scalar apply_functional(const Vec& lambda, const Vec& x) {
    Scalar s = Scalar::zero(x.empty() ? lambda[0].ctx() : x[0].ctx());
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (!lambda[i].is_zero() && !x[i].is_zero()) s += lambda[i] * x[i];
    return s;
}

inline Matrix gram_matrix(const Algebra& a, const Vec& lambda) {
    Matrix g(a.ctx(), a.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Scalar s = Scalar::zero(a.ctx());
            for (const auto& [k, c] : a.product_of_basis(i, j))
                if (!lambda[k].is_zero()) s += c * lambda[k];
            g.at(i, j) = s;
        }
    return g;
}

struct TraceSearch {
    enum class Status { Found, CertifiedNone, Inconclusive };
    Status status;
    FrobeniusTrace trace;  // when Found
};

// Search a linear space L of functionals for one with invertible Gram.
// det(Gram) has degree <= dim A in each grid coordinate, so an exhaustive
// grid of side dim A + 1 decides existence; we run it when dim L is small
// enough and fall back to seeded sampling otherwise.
inline TraceSearch search_nondegenerate_trace(const AlgebraPtr& a, const Subspace& l,
                                              unsigned seed = 0) {
    TraceSearch out;
    const std::size_t d = l.dim();
    if (d == 0) {
        out.status = TraceSearch::Status::CertifiedNone;
        return out;
    }
    auto candidate = [&](const std::vector<long>& t) -> bool {
        Vec lam(a->dim(), Scalar::zero(a->ctx()));
        for (std::size_t i = 0; i < d; ++i) {
            if (t[i] == 0) continue;
            Scalar c = Scalar::from_rational(a->ctx(), Rational(t[i]));
            Vec b = l.basis_vector(i);
            for (std::size_t k = 0; k < lam.size(); ++k) lam[k] += c * b[k];
        }
        Matrix g = gram_matrix(*a, lam);
        if (!try_matrix_inverse(g)) return false;
        out.status = TraceSearch::Status::Found;
        out.trace = {a, std::move(lam), std::move(g)};
        return true;
    };
    const long side = static_cast<long>(a->dim()) + 1;
    if (d <= 5) {
        std::vector<long> t(d, 0);
        while (true) {
            if (candidate(t)) return out;
            std::size_t i = 0;
            while (i < d && ++t[i] == side) t[i++] = 0;
            if (i == d) break;
        }
        out.status = TraceSearch::Status::CertifiedNone;
        return out;
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> dist(0, side - 1);
    for (int tries = 0; tries < 200; ++tries) {
        std::vector<long> t(d);
        for (auto& x : t) x = dist(rng);
        if (candidate(t)) return out;
    }
    out.status = TraceSearch::Status::Inconclusive;
    return out;
}

inline Subspace full_functional_space(const AlgebraPtr& a) {
    return Subspace::span(Matrix::identity(a->ctx(), a->dim()));
}

// functionals with lambda(ab) = lambda(ba) for all basis pairs
inline Subspace symmetric_functional_space(const AlgebraPtr& a) {
    IncrementalKernel ik(a->ctx(), a->dim());
    for (std::size_t i = 0; i < a->dim(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            IncrementalKernel::SparseRow row;
            for (const auto& [k, c] : a->product_of_basis(i, j)) {
                auto [it, fresh] = row.try_emplace(k, Scalar::zero(a->ctx()));
                it->second += c;
            }
            for (const auto& [k, c] : a->product_of_basis(j, i)) {
                auto [it, fresh] = row.try_emplace(k, Scalar::zero(a->ctx()));
                it->second -= c;
            }
            ik.add_row(std::move(row));
        }
    return ik.kernel();
}

inline TraceSearch frobenius_trace_search(const AlgebraPtr& a, unsigned seed = 0) {
    return search_nondegenerate_trace(a, full_functional_space(a), seed);
}

struct NakayamaData {
    FrobeniusTrace trace;
    AlgebraMorphism nu;
};

// nu solves lambda(b a) = lambda(nu(a) b); in Gram terms G^T nu = G
inline NakayamaData nakayama_automorphism(const FrobeniusTrace& trace) {
    auto ginv = try_matrix_inverse(trace.gram.transpose());
    if (!ginv) throw DegenerateTrace("gram matrix is singular");
    Matrix nu = *ginv * trace.gram;
    AlgebraMorphism mor{trace.algebra, trace.algebra, nu};
    if (!mor.is_valid()) throw DegenerateTrace("transport is not an algebra morphism");
    if (!try_matrix_inverse(nu)) throw DegenerateTrace("transport is not invertible");
    return {trace, std::move(mor)};
}

enum class FrobeniusClass { NotFrobenius, Frobenius, SymmetricFrobenius };

struct ClassifyResult {
    FrobeniusClass verdict;
    bool certified;  // false when a randomized search came back empty-handed
    std::optional<FrobeniusTrace> trace;
};

inline ClassifyResult classify(const AlgebraPtr& a, unsigned seed = 0) {
    TraceSearch any = frobenius_trace_search(a, seed);
    if (any.status == TraceSearch::Status::CertifiedNone)
        return {FrobeniusClass::NotFrobenius, true, std::nullopt};
    if (any.status == TraceSearch::Status::Inconclusive)
        return {FrobeniusClass::NotFrobenius, false, std::nullopt};
    TraceSearch sym = search_nondegenerate_trace(a, symmetric_functional_space(a), seed);
    if (sym.status == TraceSearch::Status::Found)
        return {FrobeniusClass::SymmetricFrobenius, true, std::move(sym.trace)};
    return {FrobeniusClass::Frobenius, sym.status == TraceSearch::Status::CertifiedNone,
            std::move(any.trace)};
}

// M with action a . m = nu(a) . m
inline LeftModule twist_module(const LeftModule& m, const AlgebraMorphism& nu) {
    LeftModule out(m.algebra(), m.dim());
    for (std::size_t i = 0; i < m.algebra()->dim(); ++i)
        out.action_of_basis(i) = m.act(nu.apply(m.algebra()->basis_vector(i)));
    return out;
}

}  // namespace naka
