// Finite-dimensional Hopf algebras over a FieldCtx.
//
// Comultiplication is stored as sparse triples d_ijk with
// Delta(e_i) = sum d_ijk e_j (x) e_k. Sweedler indices follow the paper
// conventions: h <- f = <f, h_(1)> h_(2) and f -> h = h_(1) <f, h_(2)>.
// Right cointegral: lambda(h_(1)) h_(2) = lambda(h) 1.
// Distinguished grouplike: h_(1) lambda(h_(2)) = lambda(h) g_H.
// Left integral: h L = eps(h) L; modular function: L h = alpha(h) L.
#pragma once

#include "naka/nakayama.hpp"

#include <tuple>

namespace naka {

struct DimensionAnomaly : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CrossCheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using ComulRow = std::vector<std::tuple<std::size_t, std::size_t, Scalar>>;

struct HopfAlgebra {
    AlgebraPtr algebra;
    std::vector<ComulRow> comul;  // per basis element
    Vec counit;
    Matrix antipode;
    std::vector<Vec> grouplike_list;  // certified by the builder
    bool grouplikes_complete = false;

    const FieldCtxPtr& ctx() const { return algebra->ctx(); }
    std::size_t dim() const { return algebra->dim(); }

    Scalar counit_of(const Vec& h) const { return apply_functional(counit, h); }
    Vec antipode_of(const Vec& h) const { return antipode * h; }
};

// sparse tensor-square element, keyed by (i, j)
using TensorElem = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

inline void tensor_add(TensorElem& t, std::size_t i, std::size_t j, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.try_emplace({i, j}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

inline TensorElem comul_of_basis(const HopfAlgebra& h, std::size_t i) {
    TensorElem t;
    for (const auto& [j, k, c] : h.comul[i]) tensor_add(t, j, k, c);
    return t;
}

inline TensorElem comul_of(const HopfAlgebra& h, const Vec& x) {
    TensorElem t;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (const auto& [j, k, c] : h.comul[i]) tensor_add(t, j, k, x[i] * c);
    }
    return t;
}

// multiplication inside A (x) A from the structure constants of A
inline TensorElem tensor_multiply(const Algebra& a, const TensorElem& x, const TensorElem& y) {
    TensorElem out;
    for (const auto& [px, cx] : x)
        for (const auto& [py, cy] : y) {
            Scalar f = cx * cy;
            for (const auto& [k1, c1] : a.product_of_basis(px.first, py.first))
                for (const auto& [k2, c2] : a.product_of_basis(px.second, py.second))
                    tensor_add(out, k1, k2, f * c1 * c2);
        }
    return out;
}

inline TensorElem tensor_of(const Vec& x, const Vec& y) {
    TensorElem t;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j) tensor_add(t, i, j, x[i] * y[j]);
    }
    return t;
}

struct HopfAxiomReport {
    bool coassociative = true;
    bool counit_law = true;
    bool comul_algebra_map = true;
    bool counit_algebra_map = true;
    bool antipode_law = true;
    std::string witness;
    bool pass() const {
        return coassociative && counit_law && comul_algebra_map && counit_algebra_map &&
               antipode_law;
    }
};

inline HopfAxiomReport check_hopf_axioms(const HopfAlgebra& h) {
    HopfAxiomReport rep;
    const Algebra& a = *h.algebra;
    const std::size_t d = a.dim();
    const auto& ctx = h.ctx();

    // coassociativity as sparse 3-tensors
    for (std::size_t i = 0; i < d && rep.coassociative; ++i) {
        std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> lhs, rhs;
        auto add3 = [](auto& m, std::size_t x, std::size_t y, std::size_t z, const Scalar& c) {
            auto [it, fresh] = m.try_emplace(std::make_tuple(x, y, z), c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) m.erase(it);
            }
        };
        for (const auto& [j, k, c] : h.comul[i]) {
            for (const auto& [p, q, e] : h.comul[j]) add3(lhs, p, q, k, c * e);
            for (const auto& [p, q, e] : h.comul[k]) add3(rhs, j, p, q, c * e);
        }
        if (lhs != rhs) {
            rep.coassociative = false;
            rep.witness = "coassociativity fails on e" + std::to_string(i);
        }
    }
    // counit law
    for (std::size_t i = 0; i < d && rep.counit_law; ++i) {
        Vec left(d, Scalar::zero(ctx)), right(d, Scalar::zero(ctx));
        for (const auto& [j, k, c] : h.comul[i]) {
            left[k] += c * h.counit[j];
            right[j] += c * h.counit[k];
        }
        if (left != a.basis_vector(i) || right != a.basis_vector(i)) {
            rep.counit_law = false;
            rep.witness = "counit law fails on e" + std::to_string(i);
        }
    }
    // Delta is an algebra map, Delta(1) = 1 (x) 1
    if (comul_of(h, a.unit()) != tensor_of(a.unit(), a.unit())) {
        rep.comul_algebra_map = false;
        rep.witness = "Delta(1) != 1 (x) 1";
    }
    for (std::size_t i = 0; i < d && rep.comul_algebra_map; ++i) {
        TensorElem di = comul_of_basis(h, i);
        for (std::size_t j = 0; j < d; ++j) {
            Vec prod(d, Scalar::zero(ctx));
            for (const auto& [k, c] : a.product_of_basis(i, j)) prod[k] += c;
            if (comul_of(h, prod) != tensor_multiply(a, di, comul_of_basis(h, j))) {
                rep.comul_algebra_map = false;
                rep.witness = "Delta not multiplicative on (e" + std::to_string(i) + ", e" +
                              std::to_string(j) + ")";
                break;
            }
        }
    }
    // eps is an algebra map
    if (!h.counit_of(a.unit()).is_one()) {
        rep.counit_algebra_map = false;
        rep.witness = "eps(1) != 1";
    }
    for (std::size_t i = 0; i < d && rep.counit_algebra_map; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Scalar lhs = Scalar::zero(ctx);
            for (const auto& [k, c] : a.product_of_basis(i, j)) lhs += c * h.counit[k];
            if (lhs != h.counit[i] * h.counit[j]) {
                rep.counit_algebra_map = false;
                rep.witness = "eps not multiplicative on (e" + std::to_string(i) + ", e" +
                              std::to_string(j) + ")";
                break;
            }
        }
    // antipode: m(S (x) id)Delta = u eps = m(id (x) S)Delta
    for (std::size_t i = 0; i < d && rep.antipode_law; ++i) {
        Vec left(d, Scalar::zero(ctx)), right(d, Scalar::zero(ctx));
        for (const auto& [j, k, c] : h.comul[i]) {
            Vec sj = h.antipode * a.basis_vector(j);
            Vec l = a.multiply(sj, a.basis_vector(k));
            Vec sk = h.antipode * a.basis_vector(k);
            Vec r = a.multiply(a.basis_vector(j), sk);
            for (std::size_t m = 0; m < d; ++m) {
                left[m] += c * l[m];
                right[m] += c * r[m];
            }
        }
        Vec expect = a.scalar_multiple_of_unit(h.counit[i]);
        if (left != expect || right != expect) {
            rep.antipode_law = false;
            rep.witness = "antipode law fails on e" + std::to_string(i);
        }
    }
    return rep;
}

inline bool is_grouplike(const HopfAlgebra& h, const Vec& g) {
    if (!h.counit_of(g).is_one()) return false;
    if (comul_of(h, g) != tensor_of(g, g)) return false;
    return h.algebra->try_invert(g).has_value();
}

// --- hit actions -----------------------------------------------------------

// matrix of h |-> h <- f = <f, h_(1)> h_(2)
inline Matrix harpoon_from_left(const HopfAlgebra& h, const Vec& f) {
    Matrix m(h.ctx(), h.dim(), h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i)
        for (const auto& [j, k, c] : h.comul[i])
            if (!f[j].is_zero()) m.at(k, i) += c * f[j];
    return m;
}

// matrix of h |-> f -> h = h_(1) <f, h_(2)>
inline Matrix harpoon_from_right(const HopfAlgebra& h, const Vec& f) {
    Matrix m(h.ctx(), h.dim(), h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i)
        for (const auto& [j, k, c] : h.comul[i])
            if (!f[k].is_zero()) m.at(j, i) += c * f[k];
    return m;
}

// --- integrals and cointegrals --------------------------------------------

struct Grouplike {
    Vec element;
    Vec inverse;
};

struct IntegralData {
    Subspace left_integrals, right_integrals;      // in H
    Subspace left_cointegrals, right_cointegrals;  // in H*
    Vec left_integral, right_integral;             // normalized representatives
    Vec right_cointegral;
    Grouplike distinguished_grouplike;  // g_H
    Vec modular_function;               // alpha_H as a functional
    bool unimodular = false;            // alpha_H = eps
    bool counimodular = false;          // g_H = 1
};

inline Vec normalize_first_nonzero(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) {
            Vec out = v;
            Scalar inv = c.inverse();
            for (auto& x : out) x *= inv;
            return out;
        }
    return v;
}

inline IntegralData integral_spaces(const HopfAlgebra& h) {
    const Algebra& a = *h.algebra;
    const std::size_t d = a.dim();
    const auto& ctx = h.ctx();
    IntegralData out;

    // right cointegrals: for all i, m: sum_j d_ijm lambda_j - unit_m lambda_i = 0
    {
        IncrementalKernel ik(ctx, d);
        for (std::size_t i = 0; i < d; ++i) {
            std::map<std::size_t, IncrementalKernel::SparseRow> rows;
            for (const auto& [j, k, c] : h.comul[i]) {
                auto [it, fresh] = rows[k].try_emplace(j, Scalar::zero(ctx));
                it->second += c;
            }
            for (std::size_t m = 0; m < d; ++m) {
                if (!a.unit()[m].is_zero()) {
                    auto [it, fresh] = rows[m].try_emplace(i, Scalar::zero(ctx));
                    it->second -= a.unit()[m];
                }
            }
            for (auto& [m, row] : rows) ik.add_row(std::move(row));
        }
        out.right_cointegrals = ik.kernel();
    }
    // left cointegrals: h_(1) lambda(h_(2)) = lambda(h) 1
    {
        IncrementalKernel ik(ctx, d);
        for (std::size_t i = 0; i < d; ++i) {
            std::map<std::size_t, IncrementalKernel::SparseRow> rows;
            for (const auto& [j, k, c] : h.comul[i]) {
                auto [it, fresh] = rows[j].try_emplace(k, Scalar::zero(ctx));
                it->second += c;
            }
            for (std::size_t m = 0; m < d; ++m) {
                if (!a.unit()[m].is_zero()) {
                    auto [it, fresh] = rows[m].try_emplace(i, Scalar::zero(ctx));
                    it->second -= a.unit()[m];
                }
            }
            for (auto& [m, row] : rows) ik.add_row(std::move(row));
        }
        out.left_cointegrals = ik.kernel();
    }
    // left integrals: e_i x = eps(e_i) x; right integrals: x e_i = eps(e_i) x
    auto integral_side = [&](bool left) {
        IncrementalKernel ik(ctx, d);
        for (std::size_t i = 0; i < d; ++i) {
            Matrix m = left ? a.left_mult_matrix(a.basis_vector(i))
                            : a.right_mult_matrix(a.basis_vector(i));
            for (std::size_t r = 0; r < d; ++r) {
                IncrementalKernel::SparseRow row;
                for (std::size_t c = 0; c < d; ++c) {
                    Scalar v = m.at(r, c);
                    if (r == c) v -= h.counit[i];
                    if (!v.is_zero()) row[c] = v;
                }
                ik.add_row(std::move(row));
            }
        }
        return ik.kernel();
    };
    out.left_integrals = integral_side(true);
    out.right_integrals = integral_side(false);

    if (out.left_integrals.dim() != 1 || out.right_integrals.dim() != 1 ||
        out.left_cointegrals.dim() != 1 || out.right_cointegrals.dim() != 1)
        throw DimensionAnomaly("integral space is not one-dimensional");

    out.left_integral = normalize_first_nonzero(out.left_integrals.basis_vector(0));
    out.right_integral = normalize_first_nonzero(out.right_integrals.basis_vector(0));
    out.right_cointegral = normalize_first_nonzero(out.right_cointegrals.basis_vector(0));

    // g_H from h_(1) lambda(h_(2)) = lambda(h) g
    {
        const Vec& lam = out.right_cointegral;
        std::size_t pick = d;
        for (std::size_t i = 0; i < d; ++i)
            if (!lam[i].is_zero()) {
                pick = i;
                break;
            }
        Vec g(d, Scalar::zero(ctx));
        for (const auto& [j, k, c] : h.comul[pick]) g[j] += c * lam[k];
        Scalar inv = lam[pick].inverse();
        for (auto& x : g) x *= inv;
        // verify on every basis element
        for (std::size_t i = 0; i < d; ++i) {
            Vec lhs(d, Scalar::zero(ctx));
            for (const auto& [j, k, c] : h.comul[i]) lhs[j] += c * lam[k];
            Vec rhs = g;
            for (auto& x : rhs) x *= lam[i];
            if (lhs != rhs) throw CrossCheckFailure("distinguished grouplike equation fails");
        }
        if (!is_grouplike(h, g)) throw CrossCheckFailure("g_H is not grouplike");
        out.distinguished_grouplike = {g, *h.algebra->try_invert(g)};
    }
    // alpha_H from L h = alpha(h) L
    {
        const Vec& L = out.left_integral;
        std::size_t pick = d;
        for (std::size_t i = 0; i < d; ++i)
            if (!L[i].is_zero()) {
                pick = i;
                break;
            }
        Vec alpha(d, Scalar::zero(ctx));
        for (std::size_t i = 0; i < d; ++i) {
            Vec Lh = a.multiply(L, a.basis_vector(i));
            alpha[i] = Lh[pick] / L[pick];
            Vec rhs = L;
            for (auto& x : rhs) x *= alpha[i];
            if (Lh != rhs) throw CrossCheckFailure("modular function equation fails");
        }
        out.modular_function = std::move(alpha);
    }
    out.unimodular = out.modular_function == h.counit;
    out.counimodular = out.distinguished_grouplike.element == a.unit();
    return out;
}

// alpha composed with the antipode; the convolution inverse of alpha
inline Vec alpha_bar(const HopfAlgebra& h, const Vec& alpha) {
    Vec out(h.dim(), Scalar::zero(h.ctx()));
    for (std::size_t j = 0; j < h.dim(); ++j)
        for (std::size_t i = 0; i < h.dim(); ++i)
            if (!h.antipode.at(i, j).is_zero()) out[j] += alpha[i] * h.antipode.at(i, j);
    return out;
}

struct HopfNakayama {
    NakayamaData data;           // from the Gram transport of the right cointegral
    Matrix nu;                   // the common value of the three computations
    unsigned order;              // order of nu as a linear map (0 if not found quickly)
};

// nu computed three ways: Gram transport of lambda, S^2(- <- alpha), and
// g S^{-2}(alpha -> -) g^{-1}; all must agree
inline HopfNakayama hopf_nakayama(const HopfAlgebra& h, const IntegralData& ints) {
    const Algebra& a = *h.algebra;
    Matrix gram = gram_matrix(a, ints.right_cointegral);
    FrobeniusTrace trace{h.algebra, ints.right_cointegral, gram};
    NakayamaData data = nakayama_automorphism(trace);

    Matrix s2 = h.antipode * h.antipode;
    Matrix nu2 = s2 * harpoon_from_left(h, ints.modular_function);
    if (data.nu.matrix != nu2)
        throw CrossCheckFailure("gram transport disagrees with S^2(- <- alpha)");

    auto sinv = try_matrix_inverse(h.antipode);
    if (!sinv) throw CrossCheckFailure("antipode not invertible");
    Matrix sinv2 = *sinv * *sinv;
    const Vec& g = ints.distinguished_grouplike.element;
    const Vec& gi = ints.distinguished_grouplike.inverse;
    Matrix nu3 = a.left_mult_matrix(g) *
                 (a.right_mult_matrix(gi) * (sinv2 * harpoon_from_right(h, ints.modular_function)));
    if (data.nu.matrix != nu3)
        throw CrossCheckFailure("gram transport disagrees with g S^-2(alpha -> -) g^-1");

    unsigned order = 0;
    Matrix id = Matrix::identity(h.ctx(), h.dim());
    Matrix pow = data.nu.matrix;
    for (unsigned k = 1; k <= 8 * h.dim(); ++k) {
        if (pow == id) {
            order = k;
            break;
        }
        pow = pow * data.nu.matrix;
    }
    Matrix nu = data.nu.matrix;
    return {std::move(data), std::move(nu), order};
}

// S^4(h) = g_H (alpha_H -> h <- alpha_bar_H) g_H^{-1} on every basis
// element, plus centrality of g_H among the known grouplikes
inline bool radford_s4_verify(const HopfAlgebra& h, const IntegralData& ints) {
    const Algebra& a = *h.algebra;
    Matrix s2 = h.antipode * h.antipode;
    Matrix s4 = s2 * s2;
    Vec ab = alpha_bar(h, ints.modular_function);
    const Vec& g = ints.distinguished_grouplike.element;
    const Vec& gi = ints.distinguished_grouplike.inverse;
    Matrix rhs = a.left_mult_matrix(g) *
                 (a.right_mult_matrix(gi) *
                  (harpoon_from_right(h, ints.modular_function) * harpoon_from_left(h, ab)));
    if (s4 != rhs) return false;
    for (const Vec& x : h.grouplike_list)
        if (a.multiply(g, x) != a.multiply(x, g)) return false;
    return true;
}

// --- duals and twists ------------------------------------------------------

inline HopfAlgebra dual_hopf(const HopfAlgebra& h) {
    const Algebra& a = *h.algebra;
    const std::size_t d = a.dim();
    const auto& ctx = h.ctx();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) labels.push_back(a.labels()[i] + "*");
    auto dual = std::make_shared<Algebra>(ctx, d, labels);
    // convolution: (e_i* e_j*)(e_k) = d_kij
    for (std::size_t k = 0; k < d; ++k)
        for (const auto& [i, j, c] : h.comul[k]) dual->add_product_term(i, j, k, c);
    dual->set_unit(h.counit);

    HopfAlgebra out;
    out.algebra = dual;
    out.comul.resize(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, c] : a.product_of_basis(i, j))
                if (!c.is_zero()) out.comul[k].emplace_back(i, j, c);
    out.counit = a.unit();
    out.antipode = h.antipode.transpose();
    return out;
}

// reversed comultiplication; antipode becomes S^{-1}
inline HopfAlgebra cop_hopf(const HopfAlgebra& h) {
    HopfAlgebra out = h;
    for (auto& row : out.comul)
        for (auto& [j, k, c] : row) std::swap(j, k);
    auto sinv = try_matrix_inverse(h.antipode);
    if (!sinv) throw CrossCheckFailure("antipode not invertible");
    out.antipode = std::move(*sinv);
    return out;
}

// opposite multiplication; antipode becomes S^{-1}
inline HopfAlgebra op_hopf(const HopfAlgebra& h) {
    HopfAlgebra out = h;
    out.algebra = h.algebra->opposite();
    auto sinv = try_matrix_inverse(h.antipode);
    if (!sinv) throw CrossCheckFailure("antipode not invertible");
    out.antipode = std::move(*sinv);
    return out;
}

// --- Drinfeld double -------------------------------------------------------
// D(H) = H^{*cop} (x) H, basis index p * dim + i for e_p^* (x) e_i.
// The antipode is not taken on faith from a formula: it is solved for as
// the convolution inverse of the identity and then axiom-checked.

inline std::optional<Matrix> solve_antipode(const AlgebraPtr& a,
                                            const std::vector<ComulRow>& comul,
                                            const Vec& counit) {
    const std::size_t d = a->dim();
    const auto& ctx = a->ctx();
    // unknowns S[m, j] (row-major); equations sum_{j,k} d_ijk S(e_j) e_k = eps_i 1
    IncrementalKernel ik(ctx, d * d + 1);  // last unknown is the inhomogeneous marker
    for (std::size_t i = 0; i < d; ++i) {
        std::map<std::size_t, IncrementalKernel::SparseRow> rows;  // per output coordinate m
        for (const auto& [j, k, c] : comul[i]) {
            Matrix r = a->right_mult_matrix(a->basis_vector(k));
            for (std::size_t m = 0; m < d; ++m)
                for (std::size_t mp = 0; mp < d; ++mp)
                    if (!r.at(m, mp).is_zero()) {
                        auto [it, fresh] = rows[m].try_emplace(mp * d + j, Scalar::zero(ctx));
                        it->second += c * r.at(m, mp);
                    }
        }
        for (std::size_t m = 0; m < d; ++m) {
            Scalar rhs = counit[i] * a->unit()[m];
            if (!rhs.is_zero()) {
                auto [it, fresh] = rows[m].try_emplace(d * d, Scalar::zero(ctx));
                it->second -= rhs;
            }
        }
        for (auto& [m, row] : rows) ik.add_row(std::move(row));
    }
    Subspace sol = ik.kernel();
    // look for a kernel vector with marker coordinate 1
    for (std::size_t c = 0; c < sol.dim(); ++c) {
        Vec v = sol.basis_vector(c);
        if (v[d * d].is_zero()) continue;
        Scalar inv = v[d * d].inverse();
        Matrix s(ctx, d, d);
        for (std::size_t m = 0; m < d; ++m)
            for (std::size_t j = 0; j < d; ++j) s.at(m, j) = v[m * d + j] * inv;
        return s;
    }
    return std::nullopt;
}

inline HopfAlgebra drinfeld_double(const HopfAlgebra& h) {
    const Algebra& a = *h.algebra;
    const std::size_t d = a.dim();
    const auto& ctx = h.ctx();
    auto sinv_opt = try_matrix_inverse(h.antipode);
    if (!sinv_opt) throw CrossCheckFailure("antipode not invertible");
    const Matrix& sinv = *sinv_opt;

    // Delta^2(e_i) as sparse triples (x, y, z)
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>>> comul2(d);
    for (std::size_t i = 0; i < d; ++i)
        for (const auto& [j, k, c] : h.comul[i])
            for (const auto& [x, y, e] : h.comul[j]) comul2[i].emplace_back(x, y, k, c * e);

    std::vector<std::string> labels;
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t i = 0; i < d; ++i)
            labels.push_back(a.labels()[p] + "*(x)" + a.labels()[i]);
    auto dalg = std::make_shared<Algebra>(ctx, d * d, labels);

    // (e_p* (x) e_i)(e_q* (x) e_j) =
    //   sum over Delta^2(e_i) = x (x) y (x) z of
    //   e_p* . w  (x)  e_y e_j,  where w(t) = e_q*(S^{-1}(e_z) t e_x)
    // and the H* factor multiplies by convolution.
    for (std::size_t i = 0; i < d; ++i) {
        for (const auto& [x, y, z, c] : comul2[i]) {
            Vec sz = sinv * a.basis_vector(z);
            Matrix t = a.left_mult_matrix(sz) * a.right_mult_matrix(a.basis_vector(x));
            for (std::size_t q = 0; q < d; ++q) {
                // w as a functional on H: w_m = t[q, m]
                // convolution e_p* * w at coordinate r: sum d_{r,p,m} w_m
                for (std::size_t j = 0; j < d; ++j) {
                    const SparseVec& yj = a.product_of_basis(y, j);
                    if (yj.empty()) continue;
                    for (std::size_t p = 0; p < d; ++p) {
                        // coefficient of e_r* in e_p* * w
                        for (std::size_t r = 0; r < d; ++r) {
                            Scalar coeff = Scalar::zero(ctx);
                            for (const auto& [jj, kk, cc] : h.comul[r])
                                if (jj == p && !t.at(q, kk).is_zero()) coeff += cc * t.at(q, kk);
                            if (coeff.is_zero()) continue;
                            coeff *= c;
                            for (const auto& [m, cm] : yj)
                                dalg->add_product_term(p * d + i, q * d + j, r * d + m,
                                                       coeff * cm);
                        }
                    }
                }
            }
        }
    }
    // collapse duplicate triples
    for (std::size_t i = 0; i < d * d; ++i)
        for (std::size_t j = 0; j < d * d; ++j) {
            const SparseVec& sv = dalg->product_of_basis(i, j);
            if (sv.size() <= 1) continue;
            std::map<std::size_t, Scalar> acc;
            for (const auto& [k, c] : sv) {
                auto [it, fresh] = acc.try_emplace(k, c);
                if (!fresh) it->second += c;
            }
            SparseVec merged;
            for (const auto& [k, c] : acc)
                if (!c.is_zero()) merged.emplace_back(k, c);
            dalg->set_product(i, j, std::move(merged));
        }
    // unit = eps (x) 1
    Vec unit(d * d, Scalar::zero(ctx));
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t i = 0; i < d; ++i) unit[p * d + i] = h.counit[p] * a.unit()[i];
    dalg->set_unit(unit);

    HopfAlgebra out;
    out.algebra = dalg;
    out.comul.resize(d * d);
    // Delta_D(e_p* (x) e_i): H* factor uses the reversed dual coproduct
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t u = 0; u < d; ++u)
                for (std::size_t v = 0; v < d; ++v)
                    for (const auto& [pp, cc] : a.product_of_basis(u, v)) {
                        if (pp != p || cc.is_zero()) continue;
                        for (const auto& [j, k, e] : h.comul[i])
                            out.comul[p * d + i].emplace_back(v * d + j, u * d + k, cc * e);
                    }
    // merge duplicates in comul rows
    for (auto& row : out.comul) {
        std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
        for (const auto& [j, k, c] : row) {
            auto [it, fresh] = acc.try_emplace(std::make_pair(j, k), c);
            if (!fresh) it->second += c;
        }
        row.clear();
        for (const auto& [jk, c] : acc)
            if (!c.is_zero()) row.emplace_back(jk.first, jk.second, c);
    }
    out.counit.assign(d * d, Scalar::zero(ctx));
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t i = 0; i < d; ++i)
            out.counit[p * d + i] = a.unit()[p] * h.counit[i];

    auto s = solve_antipode(dalg, out.comul, out.counit);
    if (!s) throw CrossCheckFailure("drinfeld double has no antipode");
    out.antipode = std::move(*s);
    return out;
}

}  // namespace naka
