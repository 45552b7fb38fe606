#pragma once

// Concrete comodule algebras over the small quantum group and its dual.

#include <string>

#include "naka/comodalg.hpp"
#include "naka/hopf_builders.hpp"

namespace naka {

// H itself, coacting on itself by the comultiplication.
inline ComoduleAlgebra comod_from_hopf(const HopfAlgebra& h) {
    const std::size_t d = h.dim();
    Matrix co(h.ctx(), d * d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (const auto& [p, q, c] : h.comul[j]) co.at(p * d + q, j) += c;
    return {h, h.algebra, std::move(co), Matrix::identity(h.ctx(), d)};
}

// The base field as a comodule algebra, embedded as the span of 1_H.
inline ComoduleAlgebra trivial_comodalg(const HopfAlgebra& h) {
    const auto& ctx = h.ctx();
    auto a = std::make_shared<Algebra>(ctx, 1, std::vector<std::string>{"1"});
    a->set_product(0, 0, {{0, Scalar::one(ctx)}});
    a->set_unit_basis(0);
    Matrix co = Matrix::from_cols(ctx, {Vec{h.algebra->unit()}});
    Matrix emb = Matrix::from_cols(ctx, {h.algebra->unit()});
    return {h, a, std::move(co), std::move(emb)};
}

struct BuiltComodAlg {
    ComoduleAlgebra alg;
    Vec g;       // grouplike of H
    Vec lambda;  // the g-cointegral, in A^* coordinates
};

namespace detail {
inline std::size_t uq_index(unsigned N, unsigned r, unsigned s, unsigned t) {
    return (static_cast<std::size_t>(r) * N + s) * N + t;
}
}  // namespace detail

// Algebra <G, Y | G^d = 1, GY = q^{-2m} YG, Y^N = xi> with m = N/d, coacting
// by G -> K^m (x) G and Y -> F (x) 1 + K^{-1} (x) Y.  Basis Y^r G^s.
inline BuiltComodAlg example1(const HopfAlgebra& u, unsigned d, const Scalar& xi) {
    const auto& ctx = u.ctx();
    const unsigned N = ctx->conductor();
    if (d == 0 || N % d != 0) throw InvalidParameter("d must divide N");
    const unsigned m = N / d;
    Scalar q = Scalar::zeta(ctx);

    std::vector<std::string> labels;
    for (unsigned r = 0; r < N; ++r)
        for (unsigned s = 0; s < d; ++s)
            labels.push_back("Y^" + std::to_string(r) + " G^" + std::to_string(s));
    auto a = std::make_shared<Algebra>(ctx, std::size_t(N) * d, labels);
    auto idx = [d](unsigned r, unsigned s) { return std::size_t(r) * d + s; };
    for (unsigned r = 0; r < N; ++r)
        for (unsigned s = 0; s < d; ++s)
            for (unsigned r2 = 0; r2 < N; ++r2)
                for (unsigned s2 = 0; s2 < d; ++s2) {
                    Scalar c = q.pow(-2L * m * s * r2);
                    unsigned rr = r + r2, ss = (s + s2) % d;
                    if (rr >= N) {
                        rr -= N;
                        c *= xi;
                    }
                    if (!c.is_zero()) a->set_product(idx(r, s), idx(r2, s2), {{idx(rr, ss), c}});
                }
    a->set_unit_basis(idx(0, 0));
    std::vector<Vec> gens{a->basis_vector(idx(1, 0))};
    if (d > 1) gens.push_back(a->basis_vector(idx(0, 1)));
    a->set_generators(gens);

    const Algebra& hu = *u.algebra;
    const std::size_t dA = a->dim();
    Vec tY(hu.dim() * dA, Scalar::zero(ctx)), tG(hu.dim() * dA, Scalar::zero(ctx));
    tY[detail::uq_index(N, 0, 1, 0) * dA + idx(0, 0)] = Scalar::one(ctx);
    tY[detail::uq_index(N, 0, 0, N - 1) * dA + idx(1, 0)] = Scalar::one(ctx);
    tG[detail::uq_index(N, 0, 0, m % N) * dA + idx(0, 1 % d)] = Scalar::one(ctx);
    Matrix co(ctx, hu.dim() * dA, dA);
    for (unsigned r = 0; r < N; ++r) {
        Vec yr = tensor_element_power(hu, *a, tY, r);
        for (unsigned s = 0; s < d; ++s) {
            Vec v = tensor_multiply(hu, *a, yr, tensor_element_power(hu, *a, tG, s));
            for (std::size_t p = 0; p < v.size(); ++p) co.at(p, idx(r, s)) = v[p];
        }
    }

    BuiltComodAlg out{{u, a, std::move(co), std::nullopt},
                      u.algebra->basis_vector(detail::uq_index(N, 0, 0, 1)),
                      Vec(dA, Scalar::zero(ctx))};
    out.lambda[idx(N - 1, 0)] = Scalar::one(ctx);
    return out;
}

// The coideal subalgebra k[Y] of U generated by Y = F + xi K^{-1}.
inline BuiltComodAlg example2(const HopfAlgebra& u, const Scalar& xi) {
    const auto& ctx = u.ctx();
    const unsigned N = ctx->conductor();

    std::vector<std::string> labels;
    for (unsigned r = 0; r < N; ++r) labels.push_back("Y^" + std::to_string(r));
    auto a = std::make_shared<Algebra>(ctx, N, labels);
    Scalar xiN = Scalar::one(ctx);
    for (unsigned i = 0; i < N; ++i) xiN *= xi;
    for (unsigned r = 0; r < N; ++r)
        for (unsigned r2 = 0; r2 < N; ++r2) {
            unsigned rr = r + r2;
            Scalar c = Scalar::one(ctx);
            if (rr >= N) {
                rr -= N;
                c = xiN;
            }
            if (!c.is_zero()) a->set_product(r, r2, {{rr, c}});
        }
    a->set_unit_basis(0);
    a->set_generators({a->basis_vector(1 % N)});

    Vec yu(u.dim(), Scalar::zero(ctx));
    yu[detail::uq_index(N, 0, 1, 0)] = Scalar::one(ctx);
    yu[detail::uq_index(N, 0, 0, N - 1)] = xi;
    std::vector<Vec> cols;
    for (unsigned r = 0; r < N; ++r) cols.push_back(u.algebra->element_power(yu, r));
    Matrix emb = Matrix::from_cols(ctx, cols);
    if (rank(emb) != N) throw CrossCheckFailure("powers of Y are dependent in U");

    const Algebra& hu = *u.algebra;
    Vec tY(hu.dim() * N, Scalar::zero(ctx));
    tY[detail::uq_index(N, 0, 1, 0) * N + 0] = Scalar::one(ctx);
    tY[detail::uq_index(N, 0, 0, N - 1) * N + 1] = Scalar::one(ctx);
    Matrix co(ctx, u.dim() * N, N);
    for (unsigned r = 0; r < N; ++r) {
        Vec v = tensor_element_power(hu, *a, tY, r);
        for (std::size_t p = 0; p < v.size(); ++p) co.at(p, r) = v[p];
    }

    BuiltComodAlg out{{u, a, std::move(co), std::move(emb)},
                      u.algebra->basis_vector(detail::uq_index(N, 0, 0, 1)),
                      Vec(N, Scalar::zero(ctx))};
    out.lambda[N - 1] = Scalar::one(ctx);
    return out;
}

// The Hopf subalgebra k[K^m] of U.
inline BuiltComodAlg example3(const HopfAlgebra& u, unsigned m) {
    const auto& ctx = u.ctx();
    const unsigned N = ctx->conductor();
    if (m == 0 || N % m != 0) throw InvalidParameter("m must divide N");
    const unsigned n = N / m;

    std::vector<std::string> labels;
    for (unsigned r = 0; r < n; ++r) labels.push_back("G^" + std::to_string(r));
    auto a = std::make_shared<Algebra>(ctx, n, labels);
    for (unsigned r = 0; r < n; ++r)
        for (unsigned r2 = 0; r2 < n; ++r2)
            a->set_product(r, r2, {{(r + r2) % n, Scalar::one(ctx)}});
    a->set_unit_basis(0);
    a->set_generators({a->basis_vector(1 % n)});

    std::vector<Vec> cols;
    for (unsigned r = 0; r < n; ++r)
        cols.push_back(u.algebra->basis_vector(detail::uq_index(N, 0, 0, (m * r) % N)));
    Matrix emb = Matrix::from_cols(ctx, cols);
    Matrix co(ctx, u.dim() * n, n);
    for (unsigned r = 0; r < n; ++r)
        co.at(detail::uq_index(N, 0, 0, (m * r) % N) * n + r, r) = Scalar::one(ctx);

    BuiltComodAlg out{{u, a, std::move(co), std::move(emb)}, u.algebra->unit(),
                      Vec(n, Scalar::zero(ctx))};
    out.lambda[0] = Scalar::one(ctx);
    return out;
}

// The right coideal subalgebra of the dual Hopf algebra spanned by the
// homogeneous monomials a^{N-s} b^s (s = 0..N-1; the would-be top monomial
// b^N vanishes), viewed as a left comodule algebra over the co-opposite.
// Also returns the action matrices of E, F, K transported through the
// pairing, after verifying the ladder formulas
//   E . w_s = [s] w_{s-1},  F . w_s = [N-s] w_{s+1},  K . w_s = q^{-2s} w_s.
struct VNCoideal {
    ComoduleAlgebra alg;
    Matrix e_act, f_act, k_act;
};

inline VNCoideal vN_coideal(unsigned N) {
    HopfAlgebra u = uq_sl2(N);
    HopfAlgebra hd = uq_sl2_dual(N);
    uq_dual_grouplikes(hd, u, N);
    Matrix pair = uq_pairing_matrix(hd, u, N);
    HopfAlgebra hcop = cop_hopf(hd);
    const auto& ctx = hd.ctx();
    Scalar q = Scalar::zeta(ctx);
    const std::size_t dH = hd.dim();

    auto hidx = [N](unsigned r, unsigned s, unsigned t) {
        return (static_cast<std::size_t>(r) * N + s) * N + t;
    };
    std::vector<std::string> labels;
    std::vector<Vec> cols;
    std::map<std::size_t, std::size_t> monomial;  // hd basis index -> A index
    for (unsigned s = 0; s < N; ++s) {
        labels.push_back("a^" + std::to_string((N - s) % N) + " b^" + std::to_string(s));
        std::size_t h = hidx((N - s) % N, s, 0);
        monomial[h] = s;
        cols.push_back(hd.algebra->basis_vector(h));
    }
    Matrix emb = Matrix::from_cols(ctx, cols);

    auto a = std::make_shared<Algebra>(ctx, N, labels);
    for (unsigned s = 0; s < N; ++s)
        for (unsigned t = 0; t < N; ++t) {
            Vec prod = hd.algebra->multiply(emb.col(s), emb.col(t));
            auto coords = solve(emb, prod);
            if (!coords) throw NotCoideal("span is not closed under multiplication");
            SparseVec terms;
            for (std::size_t k = 0; k < N; ++k)
                if (!(*coords)[k].is_zero()) terms.emplace_back(k, (*coords)[k]);
            a->set_product(s, t, terms);
        }
    a->set_unit_basis(0);
    a->set_generators({a->basis_vector(1 % N)});

    // coaction over the co-opposite: w -> w_(2) (x) w_(1), first legs of
    // Delta(w) are again monomials of the span
    Matrix co(ctx, dH * N, N);
    Matrix e_act(ctx, N, N), f_act(ctx, N, N), k_act(ctx, N, N);
    std::size_t iE = hidx(1, 0, 0), iF = hidx(0, 1, 0), iK = hidx(0, 0, 1);
    for (unsigned s = 0; s < N; ++s) {
        TensorElem te = comul_of(hd, emb.col(s));
        for (const auto& [pq, c] : te) {
            auto [p1, p2] = pq;
            auto it = monomial.find(p1);
            if (it == monomial.end()) throw NotCoideal("first comultiplication leg escapes");
            co.at(p2 * N + it->second, s) += c;
            e_act.at(it->second, s) += c * pair.at(p2, iE);
            f_act.at(it->second, s) += c * pair.at(p2, iF);
            k_act.at(it->second, s) += c * pair.at(p2, iK);
        }
    }

    // ladder formulas, [x] = (q^x - q^{-x}) / (q - q^{-1})
    auto qint = [&](long x) { return (q.pow(x) - q.pow(-x)) / (q - q.pow(-1)); };
    for (unsigned s = 0; s < N; ++s) {
        Vec ev(N, Scalar::zero(ctx)), fv(N, Scalar::zero(ctx)), kv(N, Scalar::zero(ctx));
        if (s > 0) ev[s - 1] = qint(s);
        if (s + 1 < N) fv[s + 1] = qint(long(N) - s);
        kv[s] = q.pow(-2L * s);
        if (e_act.col(s) != ev || f_act.col(s) != fv || k_act.col(s) != kv)
            throw CrossCheckFailure("ladder action formulas fail");
    }

    return {{hcop, a, std::move(co), std::move(emb)}, std::move(e_act), std::move(f_act),
            std::move(k_act)};
}

}  // namespace naka
