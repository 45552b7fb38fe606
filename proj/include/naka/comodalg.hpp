#pragma once

// Left H-comodule algebras, grouplike-cointegrals, their Nakayama
// automorphisms, coideal subalgebras and unimodularity verdicts.

#include <optional>
#include <sstream>
#include <utility>

#include "naka/hopf.hpp"
#include "naka/nakayama.hpp"

namespace naka {

struct NotCoideal : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OrderCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite-dimensional left H-comodule algebra.  The coaction matrix has
// shape (dimH * dimA) x dimA; column j is the vectorization of delta(e_j)
// with h_i (x) e_k at row i * dimA + k.  When the algebra is a coideal
// subalgebra of H, `embedding` (dimH x dimA) witnesses the inclusion and
// the coaction is the restricted comultiplication.
struct ComoduleAlgebra {
    HopfAlgebra hopf;
    AlgebraPtr algebra;
    Matrix coaction;
    std::optional<Matrix> embedding;

    const FieldCtxPtr& ctx() const { return algebra->ctx(); }
    std::size_t dim() const { return algebra->dim(); }
    std::size_t hdim() const { return hopf.dim(); }
};

struct ComodAlgReport {
    bool coassociative = true;
    bool counital = true;
    bool algebra_map = true;
    bool unit_compat = true;
    bool coideal_ok = true;  // vacuous without an embedding
    std::string witness;

    bool pass() const {
        return coassociative && counital && algebra_map && unit_compat && coideal_ok;
    }
};

inline ComodAlgReport check_comodule_algebra(const ComoduleAlgebra& ca) {
    ComodAlgReport rep;
    const Algebra& a = *ca.algebra;
    const Algebra& h = *ca.hopf.algebra;
    const auto& ctx = ca.ctx();
    const std::size_t dA = a.dim(), dH = h.dim();
    if (ca.coaction.rows() != dH * dA || ca.coaction.cols() != dA)
        throw ShapeMismatch("coaction matrix shape");

    // (Delta (x) id) delta = (id (x) delta) delta, as sparse 3-tensors
    using Triple = std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar>;
    auto triple_add = [](Triple& t, std::size_t p, std::size_t q, std::size_t r,
                         const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t.try_emplace({p, q, r}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    };
    for (std::size_t j = 0; j < dA && rep.coassociative; ++j) {
        Triple lhs, rhs;
        for (std::size_t i = 0; i < dH; ++i)
            for (std::size_t k = 0; k < dA; ++k) {
                const Scalar& c = ca.coaction.at(i * dA + k, j);
                if (c.is_zero()) continue;
                for (const auto& [p, q, c2] : ca.hopf.comul[i]) triple_add(lhs, p, q, k, c * c2);
                for (std::size_t i2 = 0; i2 < dH; ++i2)
                    for (std::size_t k2 = 0; k2 < dA; ++k2)
                        triple_add(rhs, i, i2, k2, c * ca.coaction.at(i2 * dA + k2, k));
            }
        if (lhs != rhs) {
            rep.coassociative = false;
            rep.witness = "coassociativity fails on basis element " + std::to_string(j);
        }
    }

    // (eps (x) id) delta = id
    for (std::size_t j = 0; j < dA && rep.counital; ++j) {
        Vec out(dA, Scalar::zero(ctx));
        for (std::size_t i = 0; i < dH; ++i)
            for (std::size_t k = 0; k < dA; ++k) {
                const Scalar& c = ca.coaction.at(i * dA + k, j);
                if (!c.is_zero()) out[k] += c * ca.hopf.counit[i];
            }
        if (out != a.basis_vector(j)) {
            rep.counital = false;
            rep.witness = "counit law fails on basis element " + std::to_string(j);
        }
    }

    // delta is an algebra map H (x) A <- A; the tensor algebra index matches
    // the coaction vectorization
    for (std::size_t i = 0; i < dA && rep.algebra_map; ++i)
        for (std::size_t j = 0; j < dA && rep.algebra_map; ++j) {
            Vec lhs = tensor_multiply(h, a, ca.coaction.col(i), ca.coaction.col(j));
            Vec rhs = ca.coaction * a.multiply(a.basis_vector(i), a.basis_vector(j));
            if (lhs != rhs) {
                rep.algebra_map = false;
                rep.witness = "delta(e_" + std::to_string(i) + " e_" + std::to_string(j) +
                              ") != delta(e_i) delta(e_j)";
            }
        }
    if (ca.coaction * a.unit() != tensor_unit(h, a)) {
        rep.unit_compat = false;
        rep.witness = "delta(1) != 1 (x) 1";
    }

    // coideal subalgebras: the embedding is an injective algebra morphism and
    // the coaction is the restriction of the comultiplication
    if (ca.embedding) {
        const Matrix& emb = *ca.embedding;
        AlgebraMorphism mor{ca.algebra, ca.hopf.algebra, emb};
        if (rank(emb) != dA || !mor.is_valid()) {
            rep.coideal_ok = false;
            rep.witness = "embedding is not an injective algebra morphism";
        }
        for (std::size_t j = 0; j < dA && rep.coideal_ok; ++j) {
            TensorElem lhs = comul_of(ca.hopf, emb.col(j));
            TensorElem rhs;
            for (std::size_t i = 0; i < dH; ++i)
                for (std::size_t k = 0; k < dA; ++k) {
                    const Scalar& c = ca.coaction.at(i * dA + k, j);
                    if (c.is_zero()) continue;
                    for (std::size_t p = 0; p < dH; ++p)
                        tensor_add(rhs, i, p, c * emb.at(p, k));
                }
            if (lhs != rhs) {
                rep.coideal_ok = false;
                rep.witness = "coaction is not the restricted comultiplication at basis " +
                              std::to_string(j);
            }
        }
    }
    return rep;
}

// Solution space of a_(-1) <lambda, a_(0)> = lambda(a) g, lambda in A^*.
inline Subspace g_cointegral_space(const ComoduleAlgebra& ca, const Vec& g) {
    const std::size_t dA = ca.dim(), dH = ca.hdim();
    IncrementalKernel ik(ca.ctx(), dA);
    for (std::size_t j = 0; j < dA; ++j)
        for (std::size_t i = 0; i < dH; ++i) {
            IncrementalKernel::SparseRow row;
            for (std::size_t k = 0; k < dA; ++k) {
                const Scalar& c = ca.coaction.at(i * dA + k, j);
                if (!c.is_zero()) row[k] = c;
            }
            if (!g[i].is_zero()) {
                auto [it, fresh] = row.try_emplace(j, -g[i]);
                if (!fresh) it->second -= g[i];
            }
            ik.add_row(std::move(row));
        }
    return ik.kernel();
}

struct GCointegralScan {
    bool complete;  // true when the grouplike list of H is certified complete
    std::vector<std::pair<Vec, Subspace>> per_grouplike;

    std::size_t total_dim() const {
        std::size_t n = 0;
        for (const auto& [g, s] : per_grouplike) n += s.dim();
        return n;
    }
};

inline GCointegralScan scan_grouplike_cointegrals(const ComoduleAlgebra& ca) {
    GCointegralScan out;
    out.complete = ca.hopf.grouplikes_complete;
    for (const Vec& g : ca.hopf.grouplike_list)
        out.per_grouplike.emplace_back(g, g_cointegral_space(ca, g));
    return out;
}

// Non-degenerate g-cointegral together with its Nakayama automorphism.
struct GCointegral {
    Vec g, g_inv;
    FrobeniusTrace trace;
    AlgebraMorphism nu;
    Matrix nu_inv;
};

// Completes (g, lambda) to a GCointegral.  Verifies the defining identity,
// decides Gram invertibility exactly, transports nu, and asserts both
// comodule-compatibility identities for nu and nu^{-1}.
inline GCointegral comod_nakayama(const ComoduleAlgebra& ca, const Vec& g, const Vec& lambda) {
    const Algebra& a = *ca.algebra;
    const Algebra& h = *ca.hopf.algebra;
    const auto& ctx = ca.ctx();
    const std::size_t dA = a.dim(), dH = h.dim();

    // defining identity on every basis element
    for (std::size_t j = 0; j < dA; ++j) {
        Vec lhs(dH, Scalar::zero(ctx));
        for (std::size_t i = 0; i < dH; ++i)
            for (std::size_t k = 0; k < dA; ++k) {
                const Scalar& c = ca.coaction.at(i * dA + k, j);
                if (!c.is_zero()) lhs[i] += c * lambda[k];
            }
        Vec rhs = g;
        for (auto& x : rhs) x *= lambda[j];
        if (lhs != rhs) throw CrossCheckFailure("g-cointegral identity fails");
    }

    Matrix gram = gram_matrix(a, lambda);
    Subspace ker = kernel_basis(gram);
    if (ker.dim() != 0) {
        std::ostringstream msg;
        msg << "degenerate cointegral; gram kernel dimension " << ker.dim();
        throw DegenerateTrace(msg.str());
    }
    NakayamaData data = nakayama_automorphism(FrobeniusTrace{ca.algebra, lambda, gram});
    Matrix nu = data.nu.matrix;
    Matrix nu_inv = *try_matrix_inverse(nu);

    auto ginv = h.try_invert(g);
    if (!ginv) throw CrossCheckFailure("g is not invertible in H");
    auto sinv = try_matrix_inverse(ca.hopf.antipode);
    if (!sinv) throw CrossCheckFailure("antipode not invertible");
    Matrix s2 = ca.hopf.antipode * ca.hopf.antipode;
    Matrix sinv2 = *sinv * *sinv;

    // delta(nu(a)) = g S^{-2}(a_(-1)) g^{-1} (x) nu(a_(0))
    // delta(nu^{-1}(a)) = g^{-1} S^2(a_(-1)) g (x) nu^{-1}(a_(0))
    Matrix conj1 = h.left_mult_matrix(g) * sinv2 * h.right_mult_matrix(*ginv);
    Matrix conj2 = h.left_mult_matrix(*ginv) * s2 * h.right_mult_matrix(g);
    for (std::size_t j = 0; j < dA; ++j) {
        Vec lhs1 = ca.coaction * nu.col(j);
        Vec lhs2 = ca.coaction * nu_inv.col(j);
        Vec rhs1(dH * dA, Scalar::zero(ctx)), rhs2(dH * dA, Scalar::zero(ctx));
        for (std::size_t i = 0; i < dH; ++i)
            for (std::size_t k = 0; k < dA; ++k) {
                const Scalar& c = ca.coaction.at(i * dA + k, j);
                if (c.is_zero()) continue;
                for (std::size_t p = 0; p < dH; ++p) {
                    if (!conj1.at(p, i).is_zero())
                        for (std::size_t q = 0; q < dA; ++q) {
                            const Scalar& nk = nu.at(q, k);
                            if (!nk.is_zero()) rhs1[p * dA + q] += c * conj1.at(p, i) * nk;
                        }
                    if (!conj2.at(p, i).is_zero())
                        for (std::size_t q = 0; q < dA; ++q) {
                            const Scalar& nk = nu_inv.at(q, k);
                            if (!nk.is_zero()) rhs2[p * dA + q] += c * conj2.at(p, i) * nk;
                        }
                }
            }
        if (lhs1 != rhs1) throw CrossCheckFailure("nu comodule compatibility fails");
        if (lhs2 != rhs2) throw CrossCheckFailure("nu^{-1} comodule compatibility fails");
    }
    return {g, *ginv, std::move(data.trace), std::move(data.nu), std::move(nu_inv)};
}

// Multiplicative order of nu, iterated with a hard cap.
inline unsigned nakayama_order(const GCointegral& gc, unsigned cap) {
    const auto& ctx = gc.nu.matrix.ctx();
    Matrix id = Matrix::identity(ctx, gc.nu.matrix.rows());
    Matrix p = gc.nu.matrix;
    for (unsigned k = 1; k <= cap; ++k) {
        if (p == id) return k;
        p = p * gc.nu.matrix;
    }
    throw OrderCapExceeded("nakayama order exceeds cap " + std::to_string(cap));
}

// a <- f = <f, a_(-1)> a_(0) for a functional f on H (as a vector in H^*).
inline Matrix coaction_harpoon(const ComoduleAlgebra& ca, const Vec& f) {
    const std::size_t dA = ca.dim(), dH = ca.hdim();
    Matrix m(ca.ctx(), dA, dA);
    for (std::size_t j = 0; j < dA; ++j)
        for (std::size_t i = 0; i < dH; ++i) {
            if (f[i].is_zero()) continue;
            for (std::size_t k = 0; k < dA; ++k) {
                const Scalar& c = ca.coaction.at(i * dA + k, j);
                if (!c.is_zero()) m.at(k, j) += f[i] * c;
            }
        }
    return m;
}

// f -> a = a_(-1) <f, a_(0)> in H for a functional f on A.
inline Vec coaction_harpoon_into_h(const ComoduleAlgebra& ca, const Vec& f, std::size_t j) {
    const std::size_t dA = ca.dim(), dH = ca.hdim();
    Vec out(dH, Scalar::zero(ca.ctx()));
    for (std::size_t i = 0; i < dH; ++i)
        for (std::size_t k = 0; k < dA; ++k) {
            const Scalar& c = ca.coaction.at(i * dA + k, j);
            if (!c.is_zero()) out[i] += c * f[k];
        }
    return out;
}

// nu^k(a) = g^k S^{-2k}((eps nu^k) -> a) g^{-k}, verified on the basis for
// |k| <= bound.  Requires the coideal embedding.
inline bool coideal_power_identity_check(const ComoduleAlgebra& ca, const GCointegral& gc,
                                         unsigned bound) {
    if (!ca.embedding) throw NotCoideal("power identity needs a coideal embedding");
    const Algebra& h = *ca.hopf.algebra;
    const Matrix& emb = *ca.embedding;
    const std::size_t dA = ca.dim();
    auto sinv = try_matrix_inverse(ca.hopf.antipode);
    if (!sinv) throw CrossCheckFailure("antipode not invertible");
    Matrix s2 = ca.hopf.antipode * ca.hopf.antipode;
    Matrix sinv2 = *sinv * *sinv;

    // eps restricted to A
    Vec eps(dA, Scalar::zero(ca.ctx()));
    for (std::size_t j = 0; j < dA; ++j) eps[j] = ca.hopf.counit_of(emb.col(j));

    for (int sign : {+1, -1}) {
        const Matrix& step = sign > 0 ? gc.nu.matrix : gc.nu_inv;
        const Matrix& twist = sign > 0 ? sinv2 : s2;
        Vec gk = sign > 0 ? gc.g : gc.g_inv;
        Vec gk_inv = sign > 0 ? gc.g_inv : gc.g;
        Matrix nuk = step;
        Vec gpow = gk, gpow_inv = gk_inv;
        for (unsigned k = 1; k <= bound; ++k) {
            Vec f(dA, Scalar::zero(ca.ctx()));  // eps o nu^{sign k} on A
            for (std::size_t j = 0; j < dA; ++j)
                for (std::size_t t = 0; t < dA; ++t) f[j] += eps[t] * nuk.at(t, j);
            Matrix twist_k = Matrix::identity(ca.ctx(), ca.hdim());
            for (unsigned i = 0; i < k; ++i) twist_k = twist_k * twist;
            for (std::size_t j = 0; j < dA; ++j) {
                Vec inner = coaction_harpoon_into_h(ca, f, j);
                Vec rhs = h.multiply(gpow, h.multiply(twist_k * inner, gpow_inv));
                if (emb * nuk.col(j) != rhs) return false;
            }
            nuk = nuk * step;
            gpow = h.multiply(gpow, gk);
            gpow_inv = h.multiply(gpow_inv, gk_inv);
        }
    }
    return true;
}

enum class UnimodularVerdict { Unimodular, NotUnimodular, Inconclusive };

struct UnimodularityReport {
    UnimodularVerdict verdict;
    bool certified;
    std::optional<Vec> witness;  // invertible g realizing the isomorphism
    std::size_t solution_dim = 0;
};

// General criterion: {}_A C_A is unimodular iff some invertible g in A has
// g a = nu^2(a <- alpha_bar) g for all a and delta(g) = g_H^{-1} g_A^2 (x) g.
inline UnimodularityReport unimodularity_general(const ComoduleAlgebra& ca, const GCointegral& gc,
                                                 const IntegralData& hints, unsigned seed = 0) {
    const Algebra& a = *ca.algebra;
    const Algebra& h = *ca.hopf.algebra;
    const std::size_t dA = a.dim(), dH = h.dim();

    Vec abar = alpha_bar(ca.hopf, hints.modular_function);
    Matrix m1 = gc.nu.matrix * gc.nu.matrix * coaction_harpoon(ca, abar);
    Vec gh_inv = *h.try_invert(hints.distinguished_grouplike.element);
    Vec h0 = h.multiply(gh_inv, h.multiply(gc.g, gc.g));

    IncrementalKernel ik(ca.ctx(), dA);
    for (std::size_t t = 0; t < dA; ++t) {
        // (R_{e_t} - L_{nu^2(e_t <- abar)}) g = 0
        Matrix rows = a.right_mult_matrix(a.basis_vector(t)) - a.left_mult_matrix(m1.col(t));
        for (std::size_t r = 0; r < dA; ++r) {
            IncrementalKernel::SparseRow row;
            for (std::size_t c = 0; c < dA; ++c)
                if (!rows.at(r, c).is_zero()) row[c] = rows.at(r, c);
            ik.add_row(std::move(row));
        }
    }
    for (std::size_t i = 0; i < dH; ++i)
        for (std::size_t k = 0; k < dA; ++k) {
            IncrementalKernel::SparseRow row;
            for (std::size_t j = 0; j < dA; ++j) {
                const Scalar& c = ca.coaction.at(i * dA + k, j);
                if (!c.is_zero()) row[j] = c;
            }
            if (!h0[i].is_zero()) {
                auto [it, fresh] = row.try_emplace(k, -h0[i]);
                if (!fresh) it->second -= h0[i];
            }
            ik.add_row(std::move(row));
        }

    Subspace sols = ik.kernel();
    UnimodularityReport out;
    out.solution_dim = sols.dim();
    SubspaceInvertSearch search = find_invertible_in_subspace(a, sols, seed);
    switch (search.status) {
        case SubspaceInvertSearch::Status::Found:
            out.verdict = UnimodularVerdict::Unimodular;
            out.certified = true;
            out.witness = search.element;
            break;
        case SubspaceInvertSearch::Status::CertifiedNone:
            out.verdict = UnimodularVerdict::NotUnimodular;
            out.certified = true;
            break;
        default:
            out.verdict = UnimodularVerdict::Inconclusive;
            out.certified = false;
    }
    return out;
}

// Coideal criterion: unimodular iff g_H^{-1} g_A^2 lies in A and
// eps o nu^2 agrees with alpha_H on A.
inline UnimodularityReport unimodularity_coideal(const ComoduleAlgebra& ca, const GCointegral& gc,
                                                 const IntegralData& hints) {
    if (!ca.embedding) throw NotCoideal("coideal criterion needs an embedding");
    const Algebra& h = *ca.hopf.algebra;
    const Matrix& emb = *ca.embedding;
    const std::size_t dA = ca.dim();

    Vec gh_inv = *h.try_invert(hints.distinguished_grouplike.element);
    Vec h0 = h.multiply(gh_inv, h.multiply(gc.g, gc.g));
    auto member = solve(emb, h0);

    Matrix nu2 = gc.nu.matrix * gc.nu.matrix;
    bool characters_match = true;
    for (std::size_t j = 0; j < dA && characters_match; ++j) {
        Scalar lhs = ca.hopf.counit_of(emb * nu2.col(j));
        Scalar rhs = apply_functional(hints.modular_function, emb.col(j));
        if (lhs != rhs) characters_match = false;
    }

    UnimodularityReport out;
    out.certified = true;
    if (member && characters_match) {
        out.verdict = UnimodularVerdict::Unimodular;
        out.witness = *member;  // h0 in A coordinates
    } else {
        out.verdict = UnimodularVerdict::NotUnimodular;
    }
    return out;
}

}  // namespace naka
