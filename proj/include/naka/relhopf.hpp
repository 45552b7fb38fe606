// Relative Hopf bimodules: left H-comodules with H-colinear left A- and
// right B-actions for comodule algebras A, B over the same H.  Provides the
// structure check, the Nakayama twist and the modular object in closed form,
// and an independent oracle that realizes everything as modules over the
// two-sided smash ring A # H^* # B and compares with the categorical
// Nakayama construction there.
#pragma once

#include "naka/comodalg.hpp"

namespace naka {

struct MissingCointegral : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The coaction matrix has shape (dimH * dimM) x dimM; column j is the
// vectorization of delta(e_j) with h_i (x) e_k at row i * dimM + k, as for
// comodule algebras.  actions.left() is the A-action, actions.right() the
// B-action.
struct RelHopfBimodule {
    ComoduleAlgebra a, b;
    Matrix coaction;
    Bimodule actions;

    const FieldCtxPtr& ctx() const { return a.ctx(); }
    std::size_t dim() const { return actions.dim(); }
    std::size_t hdim() const { return a.hdim(); }
};

struct RelHopfReport {
    bool comodule = true;
    bool bimodule = true;
    bool left_colinear = true;
    bool right_colinear = true;
    std::string witness;

    bool pass() const { return comodule && bimodule && left_colinear && right_colinear; }
};

namespace detail {

// delta(a e_j) for a an algebra basis element acting through `act`, expanded
// against the algebra's own coaction; used for both colinearity directions.
inline Vec colinear_rhs(const HopfAlgebra& h, const Matrix& alg_coaction, std::size_t alg_dim,
                        std::size_t t, const Vec& mod_col, std::size_t dm,
                        const std::vector<Matrix>& act) {
    Vec rhs(h.dim() * dm, Scalar::zero(h.ctx()));
    for (std::size_t p = 0; p < h.dim(); ++p)
        for (std::size_t k = 0; k < alg_dim; ++k) {
            const Scalar& ca = alg_coaction.at(p * alg_dim + k, t);
            if (ca.is_zero()) continue;
            for (std::size_t u = 0; u < h.dim(); ++u)
                for (std::size_t v = 0; v < dm; ++v) {
                    const Scalar& cm = mod_col[u * dm + v];
                    if (cm.is_zero()) continue;
                    Scalar f = ca * cm;
                    for (const auto& [w, ch] : h.algebra->product_of_basis(p, u)) {
                        const Matrix& am = act[k];
                        for (std::size_t r = 0; r < dm; ++r)
                            if (!am.at(r, v).is_zero()) rhs[w * dm + r] += f * ch * am.at(r, v);
                    }
                }
        }
    return rhs;
}

}  // namespace detail

inline RelHopfReport check_relhopf(const RelHopfBimodule& m) {
    RelHopfReport rep;
    const HopfAlgebra& h = m.a.hopf;
    if (m.a.hopf.algebra != m.b.hopf.algebra)
        throw AlgebraMismatch("check_relhopf: the two comodule algebras coact over different "
                              "hopf algebras");
    const std::size_t dm = m.dim(), dh = h.dim();
    if (m.coaction.rows() != dh * dm || m.coaction.cols() != dm)
        throw ShapeMismatch("relhopf coaction shape");
    const auto& ctx = m.ctx();

    // coassociativity and counit law of the coaction
    using Triple = std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar>;
    auto triple_add = [](Triple& t, std::size_t p, std::size_t q, std::size_t r, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t.try_emplace({p, q, r}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    };
    for (std::size_t j = 0; j < dm && rep.comodule; ++j) {
        Triple lhs, rhs;
        Vec eps(dm, Scalar::zero(ctx));
        for (std::size_t i = 0; i < dh; ++i)
            for (std::size_t k = 0; k < dm; ++k) {
                const Scalar& c = m.coaction.at(i * dm + k, j);
                if (c.is_zero()) continue;
                eps[k] += c * h.counit[i];
                for (const auto& [p, q, c2] : h.comul[i]) triple_add(lhs, p, q, k, c * c2);
                for (std::size_t i2 = 0; i2 < dh; ++i2)
                    for (std::size_t k2 = 0; k2 < dm; ++k2)
                        triple_add(rhs, i, i2, k2, c * m.coaction.at(i2 * dm + k2, k));
            }
        if (lhs != rhs) {
            rep.comodule = false;
            rep.witness = "coassociativity fails on basis element " + std::to_string(j);
        } else if (Vec bj(dm, Scalar::zero(ctx)); (bj[j] = Scalar::one(ctx), eps != bj)) {
            rep.comodule = false;
            rep.witness = "counit law fails on basis element " + std::to_string(j);
        }
    }

    AxiomReport bim = check_bimodule_axioms(m.actions);
    if (!bim.pass()) {
        rep.bimodule = false;
        rep.witness = bim.witness;
    }

    // both actions are comodule maps for the diagonal coaction
    const std::size_t da = m.a.dim(), db = m.b.dim();
    std::vector<Matrix> lact, ract;
    for (std::size_t i = 0; i < da; ++i) lact.push_back(m.actions.left().action_of_basis(i));
    for (std::size_t i = 0; i < db; ++i) ract.push_back(m.actions.right().action_of_basis(i));
    for (std::size_t i = 0; i < da && rep.left_colinear; ++i)
        for (std::size_t j = 0; j < dm && rep.left_colinear; ++j) {
            Vec lhs = m.coaction * lact[i].col(j);
            Vec col = m.coaction.col(j);
            if (lhs != detail::colinear_rhs(h, m.a.coaction, da, i, col, dm, lact)) {
                rep.left_colinear = false;
                rep.witness = "left action is not colinear at (e" + std::to_string(i) + ", e" +
                              std::to_string(j) + ")";
            }
        }
    for (std::size_t i = 0; i < db && rep.right_colinear; ++i)
        for (std::size_t j = 0; j < dm && rep.right_colinear; ++j) {
            Vec lhs = m.coaction * ract[i].col(j);
            Vec col = m.coaction.col(j);
            // delta(e_j b) = e_(-1) b_(-1) (x) e_(0) b_(0): reuse the helper
            // with the roles of the two legs swapped by commuting H factors
            // through an explicit expansion
            Vec rhs(dh * dm, Scalar::zero(ctx));
            for (std::size_t u = 0; u < dh; ++u)
                for (std::size_t v = 0; v < dm; ++v) {
                    const Scalar& cm = col[u * dm + v];
                    if (cm.is_zero()) continue;
                    for (std::size_t p = 0; p < dh; ++p)
                        for (std::size_t k = 0; k < db; ++k) {
                            const Scalar& cb = m.b.coaction.at(p * db + k, i);
                            if (cb.is_zero()) continue;
                            Scalar f = cm * cb;
                            for (const auto& [w, ch] : h.algebra->product_of_basis(u, p))
                                for (std::size_t r = 0; r < dm; ++r)
                                    if (!ract[k].at(r, v).is_zero())
                                        rhs[w * dm + r] += f * ch * ract[k].at(r, v);
                        }
                }
            if (lhs != rhs) {
                rep.right_colinear = false;
                rep.witness = "right action is not colinear at (e" + std::to_string(i) + ", e" +
                              std::to_string(j) + ")";
            }
        }
    return rep;
}

// --- builders ---------------------------------------------------------------

// A as an (A, A)-object: regular actions, the comodule-algebra coaction.
inline RelHopfBimodule relhopf_regular(const ComoduleAlgebra& ca) {
    return {ca, ca, ca.coaction, regular_bimodule(ca.algebra)};
}

// The free object A (x) B with outer actions and the diagonal coaction;
// basis index i * dimB + k.
inline RelHopfBimodule relhopf_free(const ComoduleAlgebra& a, const ComoduleAlgebra& b) {
    const auto& ctx = a.ctx();
    const Algebra& h = *a.hopf.algebra;
    const std::size_t da = a.dim(), db = b.dim(), dm = da * db, dh = h.dim();
    Bimodule bm(a.algebra, b.algebra, dm);
    Matrix ia = Matrix::identity(ctx, da), ib = Matrix::identity(ctx, db);
    for (std::size_t t = 0; t < da; ++t)
        bm.left().action_of_basis(t) = kron(a.algebra->left_mult_matrix(a.algebra->basis_vector(t)), ib);
    for (std::size_t t = 0; t < db; ++t)
        bm.right().action_of_basis(t) =
            kron(ia, b.algebra->right_mult_matrix(b.algebra->basis_vector(t)));
    Matrix co(ctx, dh * dm, dm);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t k = 0; k < db; ++k)
            for (std::size_t p = 0; p < dh; ++p)
                for (std::size_t i2 = 0; i2 < da; ++i2) {
                    const Scalar& ca = a.coaction.at(p * da + i2, i);
                    if (ca.is_zero()) continue;
                    for (std::size_t r = 0; r < dh; ++r)
                        for (std::size_t k2 = 0; k2 < db; ++k2) {
                            const Scalar& cb = b.coaction.at(r * db + k2, k);
                            if (cb.is_zero()) continue;
                            for (const auto& [w, ch] : h.product_of_basis(p, r))
                                co.at(w * dm + (i2 * db + k2), i * db + k) += ca * cb * ch;
                        }
                }
    return {a, b, std::move(co), std::move(bm)};
}

// Any H-comodule as an object over a pair of one-dimensional comodule
// algebras (scalars act as scalars).
inline RelHopfBimodule relhopf_comodule(const ComoduleAlgebra& a, const ComoduleAlgebra& b,
                                        Matrix coaction) {
    if (a.dim() != 1 || b.dim() != 1)
        throw AlgebraMismatch("relhopf_comodule needs one-dimensional comodule algebras");
    const std::size_t dm = coaction.cols();
    Bimodule bm(a.algebra, b.algebra, dm);
    bm.left().action_of_basis(0) = Matrix::identity(a.ctx(), dm);
    bm.right().action_of_basis(0) = Matrix::identity(a.ctx(), dm);
    return {a, b, std::move(coaction), std::move(bm)};
}

// First grouplike-cointegral pair with an invertible gram matrix.
inline GCointegral find_gcointegral(const ComoduleAlgebra& ca) {
    for (const Vec& g : ca.hopf.grouplike_list) {
        Subspace sp = g_cointegral_space(ca, g);
        for (std::size_t j = 0; j < sp.dim(); ++j) {
            try {
                return comod_nakayama(ca, g, sp.basis_vector(j));
            } catch (const DegenerateTrace&) {
            }
        }
    }
    throw MissingCointegral("no grouplike-cointegral with invertible gram matrix");
}

// --- morphisms and isomorphism testing --------------------------------------

inline bool is_relhopf_morphism(const RelHopfBimodule& m, const RelHopfBimodule& n,
                                const Matrix& f) {
    const std::size_t dm = m.dim(), dn = n.dim(), dh = m.hdim();
    if (f.rows() != dn || f.cols() != dm) return false;
    for (std::size_t i = 0; i < m.a.dim(); ++i)
        if (f * m.actions.left().action_of_basis(i) != n.actions.left().action_of_basis(i) * f)
            return false;
    for (std::size_t i = 0; i < m.b.dim(); ++i)
        if (f * m.actions.right().action_of_basis(i) != n.actions.right().action_of_basis(i) * f)
            return false;
    // (id (x) f) delta_m = delta_n f
    for (std::size_t j = 0; j < dm; ++j) {
        Vec rhs = n.coaction * f.col(j);
        Vec lhs(dh * dn, Scalar::zero(m.ctx()));
        for (std::size_t p = 0; p < dh; ++p)
            for (std::size_t v = 0; v < dm; ++v) {
                const Scalar& c = m.coaction.at(p * dm + v, j);
                if (c.is_zero()) continue;
                for (std::size_t r = 0; r < dn; ++r)
                    if (!f.at(r, v).is_zero()) lhs[p * dn + r] += c * f.at(r, v);
            }
        if (lhs != rhs) return false;
    }
    return true;
}

namespace detail {

// matrix of the functional kappa on H acting on a comodule via its coaction
inline Matrix comodule_functional_action(const Matrix& coaction, std::size_t dm,
                                         const Vec& kappa) {
    Matrix out(coaction.ctx(), dm, dm);
    for (std::size_t j = 0; j < dm; ++j)
        for (std::size_t i = 0; i < kappa.size(); ++i) {
            if (kappa[i].is_zero()) continue;
            for (std::size_t k = 0; k < dm; ++k) {
                const Scalar& c = coaction.at(i * dm + k, j);
                if (!c.is_zero()) out.at(k, j) += kappa[i] * c;
            }
        }
    return out;
}

inline void sylvester_rows(IncrementalKernel& ik, const Matrix& am, const Matrix& an,
                           std::size_t dm, std::size_t dn) {
    for (std::size_t r = 0; r < dn; ++r)
        for (std::size_t c = 0; c < dm; ++c) {
            IncrementalKernel::SparseRow row;
            for (std::size_t y = 0; y < dm; ++y) {
                const Scalar& v = am.at(y, c);
                if (v.is_zero()) continue;
                auto [it, fresh] = row.try_emplace(r * dm + y, v);
                if (!fresh) it->second += v;
            }
            for (std::size_t x = 0; x < dn; ++x) {
                const Scalar& v = an.at(r, x);
                if (v.is_zero()) continue;
                auto [it, fresh] = row.try_emplace(x * dm + c, -v);
                if (!fresh) it->second -= v;
            }
            ik.add_row(std::move(row));
        }
}

}  // namespace detail

// Maps F with F a = a F for the algebra generators on both sides and
// F kappa = kappa F for functionals kappa generating H^* under convolution
// (H-colinearity is equivalent to H^*-linearity; empty kgens means the full
// dual basis).  Both objects must have passed check_relhopf, so their
// coactions induce genuine H^*-module structures.
inline Subspace relhopf_hom_space(const RelHopfBimodule& m, const RelHopfBimodule& n,
                                  const std::vector<Vec>& kgens = {}) {
    if (m.a.algebra != n.a.algebra || m.b.algebra != n.b.algebra)
        throw AlgebraMismatch("relhopf_hom_space: objects over different pairs");
    const std::size_t dm = m.dim(), dn = n.dim(), dh = m.hdim();
    IncrementalKernel ik(m.ctx(), dn * dm);
    for (const Vec& g : m.a.algebra->effective_generators())
        detail::sylvester_rows(ik, m.actions.left().act(g), n.actions.left().act(g), dm, dn);
    for (const Vec& g : m.b.algebra->effective_generators())
        detail::sylvester_rows(ik, m.actions.right().act(g), n.actions.right().act(g), dm, dn);
    auto kact = [&](const Vec& kappa) {
        detail::sylvester_rows(ik, detail::comodule_functional_action(m.coaction, dm, kappa),
                               detail::comodule_functional_action(n.coaction, dn, kappa), dm, dn);
    };
    if (kgens.empty())
        for (std::size_t i = 0; i < dh; ++i) {
            Vec kappa(dh, Scalar::zero(m.ctx()));
            kappa[i] = Scalar::one(m.ctx());
            kact(kappa);
        }
    else
        for (const Vec& kappa : kgens) kact(kappa);
    return ik.kernel();
}

inline IsoResult relhopf_is_isomorphic(const RelHopfBimodule& m, const RelHopfBimodule& n,
                                       const std::vector<Vec>& kgens = {}, unsigned seed = 0) {
    IsoResult out;
    out.seed = seed;
    if (m.dim() != n.dim()) {
        out.verdict = IsoResult::Verdict::NotIsomorphic;
        return out;
    }
    Subspace hom = relhopf_hom_space(m, n, kgens);
    if (hom.dim() == 0) {
        out.verdict = IsoResult::Verdict::NotIsomorphic;
        return out;
    }
    auto search = find_invertible_matrix_in_subspace(m.ctx(), m.dim(), hom, seed);
    switch (search.status) {
        case MatrixInvertSearch::Status::Found:
            out.verdict = IsoResult::Verdict::Isomorphic;
            out.map = std::move(search.element);
            break;
        case MatrixInvertSearch::Status::CertifiedNone:
            out.verdict = IsoResult::Verdict::NotIsomorphic;
            break;
        default:
            out.verdict = IsoResult::Verdict::Inconclusive;
    }
    return out;
}

// --- the Nakayama twist and the modular object ------------------------------

namespace detail {

// apply an H-linear map to the first tensor leg of a coaction matrix
inline Matrix twist_coaction_leg(const Matrix& hmap, const Matrix& coact, std::size_t dm) {
    const std::size_t dh = hmap.rows();
    Matrix out(coact.ctx(), dh * dm, dm);
    for (std::size_t j = 0; j < dm; ++j)
        for (std::size_t i = 0; i < dh; ++i)
            for (std::size_t k = 0; k < dm; ++k) {
                const Scalar& c = coact.at(i * dm + k, j);
                if (c.is_zero()) continue;
                for (std::size_t p = 0; p < dh; ++p)
                    if (!hmap.at(p, i).is_zero()) out.at(p * dm + k, j) += hmap.at(p, i) * c;
            }
    return out;
}

}  // namespace detail

// Nak(M): coaction m |-> g_A^{-1} S^2(m_(-1)) g_B^{-1} g_H (x) m_(0),
// actions a.m.b = nu_A(a) m nu_B^{-1}(b <- alpha_H).
inline RelHopfBimodule nakayama_relhopf(const RelHopfBimodule& m, const GCointegral& gca,
                                        const GCointegral& gcb, const IntegralData& ints) {
    const HopfAlgebra& hh = m.a.hopf;
    const Algebra& h = *hh.algebra;
    const std::size_t dm = m.dim();
    Matrix s2 = hh.antipode * hh.antipode;
    Vec u = h.multiply(gcb.g_inv, ints.distinguished_grouplike.element);
    Matrix hmap = h.left_mult_matrix(gca.g_inv) * h.right_mult_matrix(u) * s2;

    RelHopfBimodule out{m.a, m.b, detail::twist_coaction_leg(hmap, m.coaction, dm),
                        Bimodule(m.a.algebra, m.b.algebra, dm)};
    for (std::size_t i = 0; i < m.a.dim(); ++i)
        out.actions.left().action_of_basis(i) = m.actions.left().act(gca.nu.matrix.col(i));
    Matrix harp = coaction_harpoon(m.b, ints.modular_function);
    for (std::size_t i = 0; i < m.b.dim(); ++i)
        out.actions.right().action_of_basis(i) = m.actions.right().act(gcb.nu_inv * harp.col(i));

    auto rep = check_relhopf(out);
    if (!rep.pass()) throw CrossCheckFailure("nakayama twist is not a relhopf bimodule: " + rep.witness);
    return out;
}

struct ModularObjectReport {
    RelHopfBimodule object;
    Matrix xi;  // verified isomorphism onto the Nakayama twist of the regular object
    UnimodularVerdict verdict;
    bool certified;
    std::optional<Vec> witness;  // invertible g in A with object ~ A via right mult transport
};

// The modular object: A with coaction x |-> g_A^{-2} g_H x_(-1) (x) x_(0),
// left action a.x = nu_A^2(a <- alpha_bar) x, regular right action.  It is
// isomorphic to Nak(A) via xi : x |-> nu^{-1}(x <- alpha_H), and trivial
// exactly when A is unimodular; both facts are machine-checked here and the
// verdict is cross-checked against the direct unimodularity criterion.
inline ModularObjectReport modular_object(const ComoduleAlgebra& ca, const GCointegral& gc,
                                          const IntegralData& ints,
                                          const std::vector<Vec>& kgens = {}, unsigned seed = 0) {
    const Algebra& a = *ca.algebra;
    const Algebra& h = *ca.hopf.algebra;
    const std::size_t da = ca.dim();

    Vec abar = alpha_bar(ca.hopf, ints.modular_function);
    Matrix tw = gc.nu.matrix * gc.nu.matrix * coaction_harpoon(ca, abar);
    Vec w = h.multiply(h.multiply(gc.g_inv, gc.g_inv), ints.distinguished_grouplike.element);

    RelHopfBimodule obj{ca, ca, detail::twist_coaction_leg(h.left_mult_matrix(w), ca.coaction, da),
                        Bimodule(ca.algebra, ca.algebra, da)};
    for (std::size_t i = 0; i < da; ++i) {
        obj.actions.left().action_of_basis(i) = a.left_mult_matrix(tw.col(i));
        obj.actions.right().action_of_basis(i) = a.right_mult_matrix(a.basis_vector(i));
    }
    auto rep = check_relhopf(obj);
    if (!rep.pass()) throw CrossCheckFailure("modular object is not a relhopf bimodule: " + rep.witness);

    RelHopfBimodule nak = nakayama_relhopf(relhopf_regular(ca), gc, gc, ints);
    Matrix xi = gc.nu_inv * coaction_harpoon(ca, ints.modular_function);
    if (!try_matrix_inverse(xi) || !is_relhopf_morphism(obj, nak, xi))
        throw CrossCheckFailure("xi is not an isomorphism onto the nakayama twist");

    IsoResult iso = relhopf_is_isomorphic(obj, relhopf_regular(ca), kgens, seed);
    UnimodularityReport ug = unimodularity_general(ca, gc, ints, seed);
    auto to_verdict = [](IsoResult::Verdict v) {
        switch (v) {
            case IsoResult::Verdict::Isomorphic: return UnimodularVerdict::Unimodular;
            case IsoResult::Verdict::NotIsomorphic: return UnimodularVerdict::NotUnimodular;
            default: return UnimodularVerdict::Inconclusive;
        }
    };
    UnimodularVerdict mine = to_verdict(iso.verdict);
    if (mine != UnimodularVerdict::Inconclusive && ug.verdict != UnimodularVerdict::Inconclusive &&
        mine != ug.verdict)
        throw CrossCheckFailure("modular object verdict disagrees with the direct criterion");

    ModularObjectReport out{std::move(obj), std::move(xi), UnimodularVerdict::Inconclusive, false,
                            std::nullopt};
    if (mine != UnimodularVerdict::Inconclusive) {
        out.verdict = mine;
        out.certified = true;
        if (iso.verdict == IsoResult::Verdict::Isomorphic) out.witness = iso.map * a.unit();
    } else if (ug.verdict != UnimodularVerdict::Inconclusive) {
        out.verdict = ug.verdict;
        out.certified = true;
        out.witness = ug.witness;
    }
    return out;
}

// --- the smash-ring oracle ---------------------------------------------------
//
// Left H-comodules are left modules over K = H^* with the opposite
// convolution (f g)(h) = f(h_(2)) g(h_(1)); relative Hopf bimodules over
// (A, B) are left modules over the two-sided smash ring Lambda = A (x) K (x) B.
// Lambda is built sparsely (its regular bimodule would be too large for a
// dense treatment) and every step of the construction is certified: unit
// laws, multiplicativity of the K-unit map, generation by the embedded
// algebra generators, associativity against the generators (which extends to
// full associativity by induction on word length), and the transported module
// structures on all basis pairs.

struct SmashRing {
    FieldCtxPtr ctx;
    std::size_t da, dk, db, dim;
    using SRow = std::map<std::size_t, Scalar>;
    std::vector<std::vector<SparseVec>> table;  // basis products
    SRow unit;
    std::vector<SRow> gens;

    std::size_t index(std::size_t i, std::size_t g, std::size_t k) const {
        return (i * dk + g) * db + k;
    }
};

namespace detail {

inline void sadd(SmashRing::SRow& m, std::size_t k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

inline SmashRing::SRow smul_basis(const SmashRing& sr, const SmashRing::SRow& x, std::size_t y) {
    SmashRing::SRow out;
    for (const auto& [i, c] : x)
        for (const auto& [k, c2] : sr.table[i][y]) sadd(out, k, c * c2);
    return out;
}

inline SmashRing::SRow smul(const SmashRing& sr, const SmashRing::SRow& x,
                            const SmashRing::SRow& y) {
    SmashRing::SRow out;
    for (const auto& [j, cy] : y)
        for (const auto& [i, cx] : x)
            for (const auto& [k, c2] : sr.table[i][j]) sadd(out, k, cx * cy * c2);
    return out;
}

}  // namespace detail

// Builds and certifies Lambda.  kgens are algebra generators of K in dual
// coordinates (the vector of values on the H-basis); empty means the whole
// dual basis.
inline SmashRing smash_ring(const ComoduleAlgebra& a, const ComoduleAlgebra& b,
                            const std::vector<Vec>& kgens = {}) {
    if (a.hopf.algebra != b.hopf.algebra)
        throw AlgebraMismatch("smash_ring: comodule algebras over different hopf algebras");
    const HopfAlgebra& hh = a.hopf;
    const Algebra& h = *hh.algebra;
    const auto& ctx = a.ctx();
    const std::size_t dh = h.dim(), da = a.dim(), db = b.dim();

    SmashRing sr;
    sr.ctx = ctx;
    sr.da = da;
    sr.dk = dh;
    sr.db = db;
    sr.dim = da * dh * db;

    // delta_K(e_g^*) = sum_t [Delta(h_t) : c h_g (x) h_u] c h_u (x) e_t^*,
    // the coaction realizing left multiplication of K on itself
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> dK(dh);
    for (std::size_t t = 0; t < dh; ++t)
        for (const auto& [g, u, c] : hh.comul[t]) dK[g].emplace_back(u, t, c);

    // sparse columns of the two coactions
    auto cols_of = [&](const Matrix& co, std::size_t d) {
        std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> cols(d);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < dh; ++i)
                for (std::size_t k = 0; k < d; ++k)
                    if (!co.at(i * d + k, j).is_zero())
                        cols[j].emplace_back(i, k, co.at(i * d + k, j));
        return cols;
    };
    auto colsA = cols_of(a.coaction, da), colsB = cols_of(b.coaction, db);

    // diagonal coaction of Lambda, keyed by the H-basis index of the left leg
    std::vector<std::map<std::size_t, SmashRing::SRow>> dL(sr.dim);
    for (std::size_t i2 = 0; i2 < da; ++i2)
        for (std::size_t g2 = 0; g2 < dh; ++g2)
            for (std::size_t k2 = 0; k2 < db; ++k2) {
                auto& slot = dL[sr.index(i2, g2, k2)];
                for (const auto& [p, ia, ca] : colsA[i2])
                    for (const auto& [u, t, ck] : dK[g2])
                        for (const auto& [r, kb, cb] : colsB[k2]) {
                            Scalar f = ca * ck * cb;
                            for (const auto& [m1, c1] : h.product_of_basis(p, u))
                                for (const auto& [w, c2] : h.product_of_basis(m1, r))
                                    detail::sadd(slot[w], sr.index(ia, t, kb), f * c1 * c2);
                        }
            }

    // multiplication: (a (x) e_g^* (x) b) y = (L_a (x) id (x) R_b)(e_g^* . y)
    // with e_g^* acting through the diagonal coaction of Lambda
    sr.table.assign(sr.dim, std::vector<SparseVec>(sr.dim));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t g = 0; g < dh; ++g)
            for (std::size_t k = 0; k < db; ++k) {
                const std::size_t x = sr.index(i, g, k);
                for (std::size_t y = 0; y < sr.dim; ++y) {
                    auto it = dL[y].find(g);
                    if (it == dL[y].end()) continue;
                    SmashRing::SRow out;
                    for (const auto& [trip, c] : it->second) {
                        const std::size_t ia = trip / (dh * db), t = (trip / db) % dh,
                                          kb = trip % db;
                        for (const auto& [am, ac] : a.algebra->product_of_basis(i, ia))
                            for (const auto& [bm, bc] : b.algebra->product_of_basis(kb, k))
                                detail::sadd(out, sr.index(am, t, bm), c * ac * bc);
                    }
                    SparseVec sv;
                    for (auto& [p, c] : out) sv.emplace_back(p, std::move(c));
                    sr.table[x][y] = std::move(sv);
                }
            }

    // unit = 1_A (x) eps (x) 1_B
    const Vec& ua = a.algebra->unit();
    const Vec& ub = b.algebra->unit();
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t g = 0; g < dh; ++g)
            for (std::size_t k = 0; k < db; ++k)
                detail::sadd(sr.unit, sr.index(i, g, k), ua[i] * hh.counit[g] * ub[k]);
    for (std::size_t y = 0; y < sr.dim; ++y) {
        SmashRing::SRow ey{{y, Scalar::one(ctx)}};
        if (detail::smul(sr, sr.unit, ey) != ey || detail::smul(sr, ey, sr.unit) != ey)
            throw CrossCheckFailure("smash ring unit law fails");
    }

    // the K-unit map f |-> 1_A (x) f (x) 1_B is multiplicative
    auto eta = [&](std::size_t g) {
        SmashRing::SRow out;
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t k = 0; k < db; ++k)
                detail::sadd(out, sr.index(i, g, k), ua[i] * ub[k]);
        return out;
    };
    // K multiplication table (opposite convolution)
    std::vector<std::vector<SparseVec>> ktab(dh, std::vector<SparseVec>(dh));
    for (std::size_t t = 0; t < dh; ++t)
        for (const auto& [i, j, c] : hh.comul[t]) ktab[j][i].emplace_back(t, c);
    for (std::size_t f = 0; f < dh; ++f)
        for (std::size_t g = 0; g < dh; ++g) {
            SmashRing::SRow lhs = detail::smul(sr, eta(f), eta(g)), rhs;
            for (const auto& [t, c] : ktab[f][g])
                for (const auto& [p, c2] : eta(t)) detail::sadd(rhs, p, c * c2);
            if (lhs != rhs) throw CrossCheckFailure("K-unit map is not multiplicative");
        }

    // generators: embedded generators of A and B, unit images of the K
    // generators
    auto embed_a = [&](const Vec& v) {
        SmashRing::SRow out;
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t g = 0; g < dh; ++g)
                for (std::size_t k = 0; k < db; ++k)
                    detail::sadd(out, sr.index(i, g, k), v[i] * hh.counit[g] * ub[k]);
        return out;
    };
    auto embed_b = [&](const Vec& v) {
        SmashRing::SRow out;
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t g = 0; g < dh; ++g)
                for (std::size_t k = 0; k < db; ++k)
                    detail::sadd(out, sr.index(i, g, k), ua[i] * hh.counit[g] * v[k]);
        return out;
    };
    for (const Vec& v : a.algebra->effective_generators()) sr.gens.push_back(embed_a(v));
    if (kgens.empty())
        for (std::size_t g = 0; g < dh; ++g) sr.gens.push_back(eta(g));
    else
        for (const Vec& kappa : kgens) {
            SmashRing::SRow out;
            for (std::size_t g = 0; g < dh; ++g)
                if (!kappa[g].is_zero())
                    for (const auto& [p, c] : eta(g)) detail::sadd(out, p, kappa[g] * c);
            sr.gens.push_back(std::move(out));
        }
    for (const Vec& v : b.algebra->effective_generators()) sr.gens.push_back(embed_b(v));

    // the generators generate: span closure from the unit under left
    // multiplication reaches the full dimension
    {
        std::map<std::size_t, SmashRing::SRow> echelon;  // pivot -> normalized row
        std::vector<SmashRing::SRow> work{sr.unit};
        auto insert = [&](SmashRing::SRow v) -> bool {
            while (!v.empty()) {
                auto it = echelon.find(v.begin()->first);
                if (it == echelon.end()) break;
                Scalar f = v.begin()->second;
                for (const auto& [c, x] : it->second) detail::sadd(v, c, -(f * x));
            }
            if (v.empty()) return false;
            Scalar inv = v.begin()->second.inverse();
            for (auto& [c, x] : v) x *= inv;
            std::size_t piv = v.begin()->first;
            echelon.emplace(piv, std::move(v));
            return true;
        };
        insert(sr.unit);
        while (!work.empty()) {
            SmashRing::SRow v = std::move(work.back());
            work.pop_back();
            for (const auto& s : sr.gens) {
                SmashRing::SRow w = detail::smul(sr, s, v);
                if (insert(w)) work.push_back(std::move(w));
            }
        }
        if (echelon.size() != sr.dim)
            throw CrossCheckFailure("smash ring generators span only dimension " +
                                    std::to_string(echelon.size()));
    }

    // associativity for every generator in the first slot; with the
    // generation certificate this extends to full associativity by induction
    // on the word length of the first factor
    for (const auto& s : sr.gens) {
        std::vector<SmashRing::SRow> sy(sr.dim);
        for (std::size_t y = 0; y < sr.dim; ++y) sy[y] = detail::smul_basis(sr, s, y);
        for (std::size_t y = 0; y < sr.dim; ++y)
            for (std::size_t z = 0; z < sr.dim; ++z) {
                SmashRing::SRow lhs = detail::smul_basis(sr, sy[y], z);
                SmashRing::SRow rhs;
                for (const auto& [w, c] : sr.table[y][z])
                    for (const auto& [p, c2] : sy[w]) detail::sadd(rhs, p, c * c2);
                if (lhs != rhs) throw CrossCheckFailure("smash ring associativity fails");
            }
    }
    return sr;
}

// rho(a (x) e_g^* (x) b) = L(a) K(e_g^*) R(b) on a relhopf bimodule; the
// result is certified multiplicative and unital on all basis pairs, which is
// the convention cross-check between the closed formulas and the realization.
inline std::vector<Matrix> smash_actions(const SmashRing& sr, const RelHopfBimodule& m) {
    const auto& ctx = m.ctx();
    const std::size_t dm = m.dim();
    std::vector<Matrix> kg(sr.dk, Matrix(ctx, dm, dm));
    for (std::size_t g = 0; g < sr.dk; ++g)
        for (std::size_t j = 0; j < dm; ++j)
            for (std::size_t k = 0; k < dm; ++k) kg[g].at(k, j) = m.coaction.at(g * dm + k, j);

    std::vector<Matrix> rho;
    rho.reserve(sr.dim);
    for (std::size_t i = 0; i < sr.da; ++i)
        for (std::size_t g = 0; g < sr.dk; ++g)
            for (std::size_t k = 0; k < sr.db; ++k)
                // m |-> a (f . m) b: the K-action applies first, the two
                // (commuting) algebra actions after it
                rho.push_back(m.actions.left().action_of_basis(i) *
                              m.actions.right().action_of_basis(k) * kg[g]);

    Matrix uact(ctx, dm, dm);
    for (const auto& [p, c] : sr.unit) uact = uact + c * rho[p];
    if (uact != Matrix::identity(ctx, dm))
        throw CrossCheckFailure("smash unit does not act as identity");
    for (std::size_t x = 0; x < sr.dim; ++x)
        for (std::size_t y = 0; y < sr.dim; ++y) {
            Matrix lhs = rho[x] * rho[y];
            Matrix rhs(ctx, dm, dm);
            for (const auto& [p, c] : sr.table[x][y]) rhs = rhs + c * rho[p];
            if (lhs != rhs) throw CrossCheckFailure("transported action is not multiplicative");
        }
    return rho;
}

namespace detail {

inline Matrix smash_act(const SmashRing& sr, const std::vector<Matrix>& rho,
                        const SmashRing::SRow& s, std::size_t dm, const FieldCtxPtr& ctx) {
    Matrix out(ctx, dm, dm);
    for (const auto& [p, c] : s) out = out + c * rho[p];
    return out;
}

}  // namespace detail

struct SmashNakayama {
    std::size_t dim;
    Matrix projection, section;        // between the quotient and Lambda^* (x) M
    std::vector<Matrix> gen_actions;   // left actions of the ring generators
};

// Lambda^* (x)_Lambda M computed from generator relations
// (phi . s) (x) m - phi (x) (s . m); the quotient carries the left action
// through the dual, (s . phi)(x) = phi(x s).
inline SmashNakayama smash_nakayama(const SmashRing& sr, const std::vector<Matrix>& rho,
                                    std::size_t dm) {
    const auto& ctx = sr.ctx;
    const std::size_t amb = sr.dim * dm;
    IncrementalKernel ik(ctx, amb);
    for (const auto& s : sr.gens) {
        Matrix rs = detail::smash_act(sr, rho, s, dm, ctx);
        std::vector<IncrementalKernel::SparseRow> rows(amb);
        for (std::size_t v = 0; v < sr.dim; ++v)
            for (const auto& [p, c] : detail::smul_basis(sr, s, v))
                for (std::size_t j = 0; j < dm; ++j) detail::sadd(rows[p * dm + j], v * dm + j, c);
        for (std::size_t p = 0; p < sr.dim; ++p)
            for (std::size_t j = 0; j < dm; ++j)
                for (std::size_t k = 0; k < dm; ++k)
                    detail::sadd(rows[p * dm + j], p * dm + k, -rs.at(k, j));
        for (auto& r : rows) ik.add_row(std::move(r));
    }
    CokernelResult cok = ik.cokernel();

    SmashNakayama out{cok.dim, std::move(cok.projection), std::move(cok.section), {}};
    for (const auto& s : sr.gens) {
        // (s . phi_p) = sum_v (e_v s)_p phi_v
        std::vector<SmashRing::SRow> vs(sr.dim);
        for (std::size_t v = 0; v < sr.dim; ++v) {
            SmashRing::SRow ev{{v, Scalar::one(ctx)}};
            vs[v] = detail::smul(sr, ev, s);
        }
        Matrix mid(ctx, sr.dim * dm, out.dim);
        for (std::size_t c = 0; c < out.dim; ++c)
            for (std::size_t v = 0; v < sr.dim; ++v)
                for (const auto& [p, cc] : vs[v])
                    for (std::size_t j = 0; j < dm; ++j)
                        if (!out.section.at(p * dm + j, c).is_zero())
                            mid.at(v * dm + j, c) += cc * out.section.at(p * dm + j, c);
        out.gen_actions.push_back(out.projection * mid);
    }
    return out;
}

struct OracleReport {
    std::size_t ring_dim, nak_dim;
    IsoResult iso;
};

// End to end: realize M over the certified smash ring, compute the direct
// dual-tensor Nakayama module there, transport the closed-formula twist, and
// test the two for isomorphism over the ring generators.
inline OracleReport relhopf_oracle(const RelHopfBimodule& m, const GCointegral& gca,
                                   const GCointegral& gcb, const IntegralData& ints,
                                   const std::vector<Vec>& kgens = {}, unsigned seed = 0) {
    SmashRing sr = smash_ring(m.a, m.b, kgens);
    std::vector<Matrix> rho = smash_actions(sr, m);
    SmashNakayama direct = smash_nakayama(sr, rho, m.dim());

    RelHopfBimodule n = nakayama_relhopf(m, gca, gcb, ints);
    std::vector<Matrix> rho_n = smash_actions(sr, n);
    if (direct.dim != n.dim())
        throw CrossCheckFailure("smash nakayama dimension " + std::to_string(direct.dim) +
                                " does not match the closed formula " + std::to_string(n.dim()));

    IncrementalKernel ik(m.ctx(), n.dim() * direct.dim);
    for (std::size_t si = 0; si < sr.gens.size(); ++si)
        detail::sylvester_rows(ik, direct.gen_actions[si],
                               detail::smash_act(sr, rho_n, sr.gens[si], n.dim(), m.ctx()),
                               direct.dim, n.dim());
    Subspace hom = ik.kernel();

    OracleReport out{sr.dim, direct.dim, {}};
    out.iso.seed = seed;
    if (hom.dim() == 0) {
        out.iso.verdict = IsoResult::Verdict::NotIsomorphic;
        return out;
    }
    auto search = find_invertible_matrix_in_subspace(m.ctx(), direct.dim, hom, seed);
    switch (search.status) {
        case MatrixInvertSearch::Status::Found:
            out.iso.verdict = IsoResult::Verdict::Isomorphic;
            out.iso.map = std::move(search.element);
            break;
        case MatrixInvertSearch::Status::CertifiedNone:
            out.iso.verdict = IsoResult::Verdict::NotIsomorphic;
            break;
        default:
            out.iso.verdict = IsoResult::Verdict::Inconclusive;
    }
    return out;
}

}  // namespace naka
