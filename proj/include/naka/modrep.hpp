// Left/right modules and bimodules over structure-constant algebras,
// Hom spaces, tensor products over an algebra, duals, and iso testing.
//
// Action matrices act on coordinate columns. For a right module the matrix
// of b sends m to m*b, so rho(a)rho(b) = rho(ba).
#pragma once

#include "naka/algebra.hpp"

namespace naka {

struct AlgebraMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Side { Left, Right };

class ModuleBase {
  public:
    ModuleBase() = default;
    ModuleBase(AlgebraPtr alg, std::size_t dim)
        : algebra_(std::move(alg)), dim_(dim),
          action_(algebra_->dim(), Matrix(algebra_->ctx(), dim, dim)) {}

    const AlgebraPtr& algebra() const { return algebra_; }
    std::size_t dim() const { return dim_; }
    const FieldCtxPtr& ctx() const { return algebra_->ctx(); }
    Matrix& action_of_basis(std::size_t i) { return action_[i]; }
    const Matrix& action_of_basis(std::size_t i) const { return action_[i]; }

    Matrix act(const Vec& a) const {
        Matrix m(ctx(), dim_, dim_);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!a[i].is_zero()) m = m + a[i] * action_[i];
        return m;
    }

  protected:
    AlgebraPtr algebra_;
    std::size_t dim_ = 0;
    std::vector<Matrix> action_;
};

class LeftModule : public ModuleBase {
  public:
    using ModuleBase::ModuleBase;
};
class RightModule : public ModuleBase {
  public:
    using ModuleBase::ModuleBase;
};

inline AxiomReport check_module_axioms(const ModuleBase& m, Side side) {
    AxiomReport rep;
    const Algebra& a = *m.algebra();
    Matrix unit_action = m.act(a.unit());
    if (unit_action != Matrix::identity(m.ctx(), m.dim())) {
        rep.unital = false;
        rep.witness = "unit does not act as identity";
        return rep;
    }
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Matrix prod = m.action_of_basis(i) * m.action_of_basis(j);
            Vec ab = side == Side::Left
                         ? a.multiply(a.basis_vector(i), a.basis_vector(j))
                         : a.multiply(a.basis_vector(j), a.basis_vector(i));
            if (prod != m.act(ab)) {
                rep.associative = false;
                rep.witness = "action law fails on (e" + std::to_string(i) + ", e" +
                              std::to_string(j) + ")";
                return rep;
            }
        }
    return rep;
}

inline AxiomReport check_module_axioms(const LeftModule& m) {
    return check_module_axioms(m, Side::Left);
}
inline AxiomReport check_module_axioms(const RightModule& m) {
    return check_module_axioms(m, Side::Right);
}

class Bimodule {
  public:
    Bimodule() = default;
    Bimodule(AlgebraPtr left_alg, AlgebraPtr right_alg, std::size_t dim)
        : left_(std::move(left_alg), dim), right_(std::move(right_alg), dim) {}

    const AlgebraPtr& left_algebra() const { return left_.algebra(); }
    const AlgebraPtr& right_algebra() const { return right_.algebra(); }
    std::size_t dim() const { return left_.dim(); }
    const FieldCtxPtr& ctx() const { return left_.ctx(); }

    LeftModule& left() { return left_; }
    const LeftModule& left() const { return left_; }
    RightModule& right() { return right_; }
    const RightModule& right() const { return right_; }

    Matrix act_left(const Vec& a) const { return left_.act(a); }
    Matrix act_right(const Vec& b) const { return right_.act(b); }

  private:
    LeftModule left_;
    RightModule right_;
};

inline AxiomReport check_bimodule_axioms(const Bimodule& m) {
    AxiomReport rep = check_module_axioms(m.left());
    if (!rep.pass()) return rep;
    rep = check_module_axioms(m.right());
    if (!rep.pass()) return rep;
    for (std::size_t i = 0; i < m.left_algebra()->dim(); ++i)
        for (std::size_t j = 0; j < m.right_algebra()->dim(); ++j)
            if (m.left().action_of_basis(i) * m.right().action_of_basis(j) !=
                m.right().action_of_basis(j) * m.left().action_of_basis(i)) {
                rep.associative = false;
                rep.witness = "left and right actions do not commute at (e" + std::to_string(i) +
                              ", e" + std::to_string(j) + ")";
                return rep;
            }
    return rep;
}

// regular representations
inline LeftModule regular_left_module(const AlgebraPtr& a) {
    LeftModule m(a, a->dim());
    for (std::size_t i = 0; i < a->dim(); ++i)
        m.action_of_basis(i) = a->left_mult_matrix(a->basis_vector(i));
    return m;
}
inline RightModule regular_right_module(const AlgebraPtr& a) {
    RightModule m(a, a->dim());
    for (std::size_t i = 0; i < a->dim(); ++i)
        m.action_of_basis(i) = a->right_mult_matrix(a->basis_vector(i));
    return m;
}
inline Bimodule regular_bimodule(const AlgebraPtr& a) {
    Bimodule m(a, a, a->dim());
    m.left() = regular_left_module(a);
    m.right() = regular_right_module(a);
    return m;
}

// one-dimensional module from a character chi : A -> k
inline LeftModule character_left_module(const AlgebraPtr& a, const Vec& chi) {
    LeftModule m(a, 1);
    for (std::size_t i = 0; i < a->dim(); ++i) m.action_of_basis(i).at(0, 0) = chi[i];
    return m;
}

// dual of a left module is a right module with matrix rho(a)^T, and back
inline RightModule dual_module(const LeftModule& m) {
    RightModule d(m.algebra(), m.dim());
    for (std::size_t i = 0; i < m.algebra()->dim(); ++i)
        d.action_of_basis(i) = m.action_of_basis(i).transpose();
    return d;
}
inline LeftModule dual_module(const RightModule& m) {
    LeftModule d(m.algebra(), m.dim());
    for (std::size_t i = 0; i < m.algebra()->dim(); ++i)
        d.action_of_basis(i) = m.action_of_basis(i).transpose();
    return d;
}

// A* as an (A,A)-bimodule with (a . f . b)(x) = f(b x a)
inline Bimodule dual_regular_bimodule(const AlgebraPtr& a) {
    Bimodule m(a, a, a->dim());
    for (std::size_t i = 0; i < a->dim(); ++i) {
        m.left().action_of_basis(i) = a->right_mult_matrix(a->basis_vector(i)).transpose();
        m.right().action_of_basis(i) = a->left_mult_matrix(a->basis_vector(i)).transpose();
    }
    return m;
}

// --- Hom spaces ------------------------------------------------------------
// Matrices F with F rho_M(g) = rho_N(g) F for a generating set g; the
// subspace lives in row-major vectorized dim_N x dim_M matrices.

inline Subspace hom_space(const ModuleBase& m, const ModuleBase& n) {
    if (m.algebra()->dim() != n.algebra()->dim())
        throw AlgebraMismatch("hom_space: modules over different algebras");
    const auto& ctx = m.ctx();
    std::size_t dm = m.dim(), dn = n.dim();
    IncrementalKernel ik(ctx, dn * dm);
    for (const Vec& g : m.algebra()->effective_generators()) {
        Matrix rm = m.act(g), rn = n.act(g);
        // row (i,j): sum_k rn[i,k] F[k,j] - F[i,k] rm[k,j] = 0
        for (std::size_t i = 0; i < dn; ++i)
            for (std::size_t j = 0; j < dm; ++j) {
                IncrementalKernel::SparseRow row;
                for (std::size_t k = 0; k < dn; ++k)
                    if (!rn.at(i, k).is_zero()) {
                        auto [it, fresh] = row.try_emplace(k * dm + j, Scalar::zero(ctx));
                        it->second += rn.at(i, k);
                    }
                for (std::size_t k = 0; k < dm; ++k)
                    if (!rm.at(k, j).is_zero()) {
                        auto [it, fresh] = row.try_emplace(i * dm + k, Scalar::zero(ctx));
                        it->second -= rm.at(k, j);
                    }
                ik.add_row(std::move(row));
            }
    }
    return ik.kernel();
}

inline Matrix unvectorize(const FieldCtxPtr& ctx, const Vec& v, std::size_t rows,
                          std::size_t cols) {
    Matrix m(ctx, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = v[i * cols + j];
    return m;
}

struct ModuleMap {
    Matrix matrix;  // dim_target x dim_source
};

inline bool intertwines(const ModuleBase& m, const ModuleBase& n, const Matrix& f) {
    for (const Vec& g : m.algebra()->effective_generators())
        if (f * m.act(g) != n.act(g) * f) return false;
    return true;
}

// invertible matrix in a vectorized matrix subspace, grid certificate as in
// find_invertible_in_subspace (det has degree <= n per coordinate)
struct MatrixInvertSearch {
    enum class Status { Found, CertifiedNone, Inconclusive };
    Status status;
    Matrix element, inverse;
};

inline MatrixInvertSearch find_invertible_matrix_in_subspace(const FieldCtxPtr& ctx,
                                                             std::size_t n, const Subspace& s,
                                                             unsigned seed = 0) {
    MatrixInvertSearch out;
    const std::size_t d = s.dim();
    if (d == 0) {
        out.status = MatrixInvertSearch::Status::CertifiedNone;
        return out;
    }
    auto candidate = [&](const std::vector<long>& t) -> bool {
        Vec v(n * n, Scalar::zero(ctx));
        for (std::size_t i = 0; i < d; ++i) {
            if (t[i] == 0) continue;
            Scalar c = Scalar::from_rational(ctx, Rational(t[i]));
            Vec b = s.basis_vector(i);
            for (std::size_t k = 0; k < v.size(); ++k) v[k] += c * b[k];
        }
        Matrix f = unvectorize(ctx, v, n, n);
        auto inv = try_matrix_inverse(f);
        if (!inv) return false;
        out.status = MatrixInvertSearch::Status::Found;
        out.element = std::move(f);
        out.inverse = std::move(*inv);
        return true;
    };
    const long side = static_cast<long>(n) + 1;
    if (d <= 3) {
        std::vector<long> t(d, 0);
        while (true) {
            if (candidate(t)) return out;
            std::size_t i = 0;
            while (i < d && ++t[i] == side) t[i++] = 0;
            if (i == d) break;
        }
        out.status = MatrixInvertSearch::Status::CertifiedNone;
        return out;
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> dist(0, side - 1);
    for (int tries = 0; tries < 64; ++tries) {
        std::vector<long> t(d);
        for (auto& x : t) x = dist(rng);
        if (candidate(t)) return out;
    }
    out.status = MatrixInvertSearch::Status::Inconclusive;
    return out;
}

struct IsoResult {
    enum class Verdict { Isomorphic, NotIsomorphic, Inconclusive };
    Verdict verdict;
    Matrix map;      // when Isomorphic
    unsigned seed = 0;
};

inline IsoResult is_isomorphic(const ModuleBase& m, const ModuleBase& n, unsigned seed = 0) {
    IsoResult out;
    out.seed = seed;
    if (m.dim() != n.dim()) {
        out.verdict = IsoResult::Verdict::NotIsomorphic;
        return out;
    }
    Subspace hom = hom_space(m, n);
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

// --- tensor over an algebra ------------------------------------------------
// X (right B-module structure) tensored with M (left B-module) over B:
// quotient of X (x) M by x b (x) m - x (x) b m, b running over a generating
// set of B; composite relations reduce to generator relations.

struct TensorSpace {
    std::size_t dim;
    Matrix projection;  // dim x (dim X * dim M)
    Matrix section;     // (dim X * dim M) x dim
};

inline TensorSpace tensor_space(const RightModule& xr, const LeftModule& m) {
    if (xr.algebra()->dim() != m.algebra()->dim())
        throw AlgebraMismatch("tensor_space: middle algebras differ");
    const auto& ctx = xr.ctx();
    std::size_t dx = xr.dim(), dm = m.dim();
    IncrementalKernel ik(ctx, dx * dm);
    for (const Vec& b : xr.algebra()->effective_generators()) {
        Matrix rx = xr.act(b), lm = m.act(b);
        for (std::size_t x = 0; x < dx; ++x)
            for (std::size_t v = 0; v < dm; ++v) {
                // relation vector (x*b)(x)m - x(x)(b*m)
                IncrementalKernel::SparseRow row;
                for (std::size_t k = 0; k < dx; ++k)
                    if (!rx.at(k, x).is_zero()) {
                        auto [it, fresh] = row.try_emplace(k * dm + v, Scalar::zero(ctx));
                        it->second += rx.at(k, x);
                    }
                for (std::size_t k = 0; k < dm; ++k)
                    if (!lm.at(k, v).is_zero()) {
                        auto [it, fresh] = row.try_emplace(x * dm + k, Scalar::zero(ctx));
                        it->second -= lm.at(k, v);
                    }
                ik.add_row(std::move(row));
            }
    }
    auto ck = ik.cokernel();
    return {ck.dim, std::move(ck.projection), std::move(ck.section)};
}

// bimodule (A,B) tensor left B-module -> left A-module
inline std::pair<LeftModule, TensorSpace> tensor_over_algebra(const Bimodule& x,
                                                              const LeftModule& m) {
    TensorSpace ts = tensor_space(x.right(), m);
    LeftModule out(x.left_algebra(), ts.dim);
    std::size_t dm = m.dim();
    const auto& ctx = x.ctx();
    for (std::size_t i = 0; i < x.left_algebra()->dim(); ++i) {
        Matrix big = kron(x.left().action_of_basis(i), Matrix::identity(ctx, dm));
        out.action_of_basis(i) = ts.projection * (big * ts.section);
    }
    return {std::move(out), std::move(ts)};
}

// bimodule (A,B) tensor bimodule (B,C) -> bimodule (A,C)
inline std::pair<Bimodule, TensorSpace> tensor_over_algebra(const Bimodule& x,
                                                            const Bimodule& y) {
    TensorSpace ts = tensor_space(x.right(), y.left());
    Bimodule out(x.left_algebra(), y.right_algebra(), ts.dim);
    const auto& ctx = x.ctx();
    for (std::size_t i = 0; i < x.left_algebra()->dim(); ++i) {
        Matrix big = kron(x.left().action_of_basis(i), Matrix::identity(ctx, y.dim()));
        out.left().action_of_basis(i) = ts.projection * (big * ts.section);
    }
    for (std::size_t j = 0; j < y.right_algebra()->dim(); ++j) {
        Matrix big = kron(Matrix::identity(ctx, x.dim()), y.right().action_of_basis(j));
        out.right().action_of_basis(j) = ts.projection * (big * ts.section);
    }
    return {std::move(out), std::move(ts)};
}

// right B-module tensor bimodule (B,C) -> right C-module
inline std::pair<RightModule, TensorSpace> tensor_over_algebra(const RightModule& x,
                                                               const Bimodule& y) {
    TensorSpace ts = tensor_space(x, y.left());
    RightModule out(y.right_algebra(), ts.dim);
    const auto& ctx = x.ctx();
    for (std::size_t j = 0; j < y.right_algebra()->dim(); ++j) {
        Matrix big = kron(Matrix::identity(ctx, x.dim()), y.right().action_of_basis(j));
        out.action_of_basis(j) = ts.projection * (big * ts.section);
    }
    return {std::move(out), std::move(ts)};
}

}  // namespace naka
