// Finite-dimensional associative unital algebras by structure constants.
// Constants are kept as sparse lists per basis pair; e_i e_j = sum_k c_ijk e_k.
#pragma once

#include "naka/linalg.hpp"

#include <memory>
#include <random>
#include <string>
#include <variant>

namespace naka {

struct ParentMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra : public std::enable_shared_from_this<Algebra> {
  public:
    Algebra(FieldCtxPtr ctx, std::size_t dim, std::vector<std::string> labels)
        : ctx_(std::move(ctx)), dim_(dim), labels_(std::move(labels)),
          mult_(dim, std::vector<SparseVec>(dim)), unit_(dim, Scalar::zero(ctx_)) {
        if (labels_.empty())
            for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i));
    }

    const FieldCtxPtr& ctx() const { return ctx_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vec& unit() const { return unit_; }
    const SparseVec& product_of_basis(std::size_t i, std::size_t j) const { return mult_[i][j]; }

    void set_product(std::size_t i, std::size_t j, SparseVec v) { mult_[i][j] = std::move(v); }
    void add_product_term(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
        if (!c.is_zero()) mult_[i][j].emplace_back(k, c);
    }
    void set_unit(Vec u) { unit_ = std::move(u); }
    void set_unit_basis(std::size_t k) { unit_[k] = Scalar::one(ctx_); }

    // optional small generating set used to shrink intertwiner systems;
    // empty means every basis vector
    const std::vector<Vec>& generators() const { return generators_; }
    void set_generators(std::vector<Vec> g) { generators_ = std::move(g); }
    std::vector<Vec> effective_generators() const {
        if (!generators_.empty()) return generators_;
        std::vector<Vec> g;
        for (std::size_t i = 0; i < dim_; ++i) {
            Vec v(dim_, Scalar::zero(ctx_));
            v[i] = Scalar::one(ctx_);
            g.push_back(std::move(v));
        }
        return g;
    }

    Vec multiply(const Vec& a, const Vec& b) const {
        Vec out(dim_, Scalar::zero(ctx_));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (b[j].is_zero()) continue;
                Scalar f = a[i] * b[j];
                for (const auto& [k, c] : mult_[i][j]) out[k] += f * c;
            }
        }
        return out;
    }

    Vec element_power(const Vec& a, unsigned k) const {
        Vec acc = unit_;
        for (unsigned t = 0; t < k; ++t) acc = multiply(acc, a);
        return acc;
    }

    Matrix left_mult_matrix(const Vec& a) const {
        Matrix m(ctx_, dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                for (const auto& [k, c] : mult_[i][j]) m.at(k, j) += a[i] * c;
        }
        return m;
    }
    Matrix right_mult_matrix(const Vec& a) const {
        Matrix m(ctx_, dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            if (a[j].is_zero()) continue;
            for (std::size_t i = 0; i < dim_; ++i)
                for (const auto& [k, c] : mult_[i][j]) m.at(k, i) += a[j] * c;
        }
        return m;
    }

    Vec basis_vector(std::size_t i) const {
        Vec v(dim_, Scalar::zero(ctx_));
        v[i] = Scalar::one(ctx_);
        return v;
    }
    Vec scalar_multiple_of_unit(const Scalar& s) const {
        Vec v = unit_;
        for (auto& x : v) x *= s;
        return v;
    }

    std::optional<Vec> try_invert(const Vec& a) const {
        auto x = solve(left_mult_matrix(a), unit_);
        if (!x) return std::nullopt;
        if (multiply(*x, a) != unit_) return std::nullopt;
        return x;
    }

    AlgebraPtr opposite() const {
        auto op = std::make_shared<Algebra>(ctx_, dim_, labels_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) op->mult_[i][j] = mult_[j][i];
        op->unit_ = unit_;
        op->generators_ = generators_;
        return op;
    }

  private:
    FieldCtxPtr ctx_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<std::vector<SparseVec>> mult_;
    Vec unit_;
    std::vector<Vec> generators_;
};

struct AxiomReport {
    bool associative = true;
    bool unital = true;
    std::string witness;
    bool pass() const { return associative && unital; }
};

inline AxiomReport check_algebra_axioms(const Algebra& a) {
    AxiomReport rep;
    const std::size_t d = a.dim();
    auto expand = [&](const SparseVec& sv) {
        Vec v(d, Scalar::zero(a.ctx()));
        for (const auto& [k, c] : sv) v[k] += c;
        return v;
    };
    for (std::size_t i = 0; i < d && rep.associative; ++i)
        for (std::size_t j = 0; j < d && rep.associative; ++j) {
            Vec eij = expand(a.product_of_basis(i, j));
            for (std::size_t k = 0; k < d; ++k) {
                Vec lhs = a.multiply(eij, a.basis_vector(k));
                Vec rhs = a.multiply(a.basis_vector(i), expand(a.product_of_basis(j, k)));
                if (lhs != rhs) {
                    rep.associative = false;
                    rep.witness = "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" +
                                  std::to_string(k) + " != e" + std::to_string(i) + " (e" +
                                  std::to_string(j) + " e" + std::to_string(k) + ")";
                    break;
                }
            }
        }
    for (std::size_t i = 0; i < d; ++i) {
        Vec e = a.basis_vector(i);
        if (a.multiply(a.unit(), e) != e || a.multiply(e, a.unit()) != e) {
            rep.unital = false;
            if (rep.witness.empty()) rep.witness = "unit fails on e" + std::to_string(i);
            break;
        }
    }
    return rep;
}

struct AlgebraMorphism {
    AlgebraPtr source, target;
    Matrix matrix;  // dim_target x dim_source

    bool is_valid() const {
        if (matrix * Matrix::from_cols(source->ctx(), {source->unit()}) !=
            Matrix::from_cols(target->ctx(), {target->unit()}))
            return false;
        for (std::size_t i = 0; i < source->dim(); ++i)
            for (std::size_t j = 0; j < source->dim(); ++j) {
                Vec fi = matrix * source->basis_vector(i);
                Vec fj = matrix * source->basis_vector(j);
                Vec lhs = matrix * source->multiply(source->basis_vector(i), source->basis_vector(j));
                if (lhs != target->multiply(fi, fj)) return false;
            }
        return true;
    }
    Vec apply(const Vec& v) const { return matrix * v; }
};

// Search for an invertible element in a linear subspace of the algebra.
// det(L_x) has degree <= dim A in each grid coordinate, so vanishing on a
// grid of side dim A + 1 proves it vanishes identically; NoneFound is then a
// certificate. For larger subspaces we fall back to seeded random sampling
// from the same grid and report an inconclusive miss.
struct SubspaceInvertSearch {
    enum class Status { Found, CertifiedNone, Inconclusive };
    Status status;
    Vec element;   // when Found: the invertible element
    Vec inverse;   // its inverse
};

inline SubspaceInvertSearch find_invertible_in_subspace(const Algebra& a, const Subspace& s,
                                                        unsigned seed = 0) {
    SubspaceInvertSearch out;
    const std::size_t d = s.dim();
    if (d == 0) {
        out.status = SubspaceInvertSearch::Status::CertifiedNone;
        return out;
    }
    auto candidate = [&](const std::vector<long>& t) -> bool {
        Vec x(a.dim(), Scalar::zero(a.ctx()));
        for (std::size_t i = 0; i < d; ++i) {
            if (t[i] == 0) continue;
            Scalar c = Scalar::from_rational(a.ctx(), Rational(t[i]));
            Vec b = s.basis_vector(i);
            for (std::size_t k = 0; k < a.dim(); ++k) x[k] += c * b[k];
        }
        auto inv = a.try_invert(x);
        if (!inv) return false;
        out.status = SubspaceInvertSearch::Status::Found;
        out.element = std::move(x);
        out.inverse = std::move(*inv);
        return true;
    };
    const long side = static_cast<long>(a.dim()) + 1;
    if (d <= 3) {
        std::vector<long> t(d, 0);
        while (true) {
            if (candidate(t)) return out;
            std::size_t i = 0;
            while (i < d && ++t[i] == side) t[i++] = 0;
            if (i == d) break;
        }
        out.status = SubspaceInvertSearch::Status::CertifiedNone;
        return out;
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> dist(0, side - 1);
    for (int tries = 0; tries < 64; ++tries) {
        std::vector<long> t(d);
        for (auto& x : t) x = dist(rng);
        if (candidate(t)) return out;
    }
    out.status = SubspaceInvertSearch::Status::Inconclusive;
    return out;
}

// --- plain algebra builders ------------------------------------------------

// group algebra of the cyclic group C_n
inline AlgebraPtr cyclic_group_algebra(const FieldCtxPtr& ctx, unsigned n) {
    std::vector<std::string> labels;
    for (unsigned i = 0; i < n; ++i) labels.push_back("g^" + std::to_string(i));
    auto a = std::make_shared<Algebra>(ctx, n, labels);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            a->add_product_term(i, j, (i + j) % n, Scalar::one(ctx));
    a->set_unit_basis(0);
    return a;
}

// full matrix algebra M_n, basis E_{ij} at index i*n + j
inline AlgebraPtr matrix_algebra(const FieldCtxPtr& ctx, unsigned n) {
    std::vector<std::string> labels;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            labels.push_back("E" + std::to_string(i) + std::to_string(j));
    auto a = std::make_shared<Algebra>(ctx, n * n, labels);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k)
                for (unsigned l = 0; l < n; ++l)
                    if (j == k) a->add_product_term(i * n + j, k * n + l, i * n + l, Scalar::one(ctx));
    Vec u(n * n, Scalar::zero(ctx));
    for (unsigned i = 0; i < n; ++i) u[i * n + i] = Scalar::one(ctx);
    a->set_unit(u);
    return a;
}

// upper triangular 2x2 matrices, basis {E00, E01, E11}
inline AlgebraPtr upper_triangular_2(const FieldCtxPtr& ctx) {
    auto a = std::make_shared<Algebra>(ctx, 3, std::vector<std::string>{"E00", "E01", "E11"});
    auto one = Scalar::one(ctx);
    a->add_product_term(0, 0, 0, one);
    a->add_product_term(0, 1, 1, one);
    a->add_product_term(1, 2, 1, one);
    a->add_product_term(2, 2, 2, one);
    Vec u(3, Scalar::zero(ctx));
    u[0] = one;
    u[2] = one;
    a->set_unit(u);
    return a;
}

// split semisimple commutative algebra k x k x ... x k
inline AlgebraPtr product_of_fields(const FieldCtxPtr& ctx, unsigned n) {
    std::vector<std::string> labels;
    for (unsigned i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    auto a = std::make_shared<Algebra>(ctx, n, labels);
    for (unsigned i = 0; i < n; ++i) a->add_product_term(i, i, i, Scalar::one(ctx));
    Vec u(n, Scalar::one(ctx));
    a->set_unit(u);
    return a;
}

// truncated polynomial algebra k[t]/(t^n)
inline AlgebraPtr truncated_polynomial_algebra(const FieldCtxPtr& ctx, unsigned n) {
    std::vector<std::string> labels;
    for (unsigned i = 0; i < n; ++i) labels.push_back("t^" + std::to_string(i));
    auto a = std::make_shared<Algebra>(ctx, n, labels);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; i + j < n; ++j)
            a->add_product_term(i, j, i + j, Scalar::one(ctx));
    a->set_unit_basis(0);
    return a;
}

// tensor product algebra A (x) B, basis index i*dimB + j
inline AlgebraPtr tensor_algebra(const AlgebraPtr& A, const AlgebraPtr& B) {
    if (*A->ctx() != *B->ctx()) throw FieldError("tensor_algebra: field mismatch");
    std::size_t dA = A->dim(), dB = B->dim();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dA; ++i)
        for (std::size_t j = 0; j < dB; ++j)
            labels.push_back(A->labels()[i] + "(x)" + B->labels()[j]);
    auto t = std::make_shared<Algebra>(A->ctx(), dA * dB, labels);
    for (std::size_t i = 0; i < dA; ++i)
        for (std::size_t i2 = 0; i2 < dA; ++i2)
            for (const auto& [k, c] : A->product_of_basis(i, i2))
                for (std::size_t j = 0; j < dB; ++j)
                    for (std::size_t j2 = 0; j2 < dB; ++j2)
                        for (const auto& [l, e] : B->product_of_basis(j, j2))
                            t->add_product_term(i * dB + j, i2 * dB + j2, k * dB + l, c * e);
    Vec u(dA * dB, Scalar::zero(A->ctx()));
    for (std::size_t i = 0; i < dA; ++i)
        for (std::size_t j = 0; j < dB; ++j) u[i * dB + j] = A->unit()[i] * B->unit()[j];
    t->set_unit(u);
    return t;
}

// unit of A (x) B without materializing the tensor algebra
inline Vec tensor_unit(const Algebra& A, const Algebra& B) {
    const std::size_t dA = A.dim(), dB = B.dim();
    Vec u(dA * dB, Scalar::zero(A.ctx()));
    for (std::size_t i = 0; i < dA; ++i)
        for (std::size_t j = 0; j < dB; ++j) u[i * dB + j] = A.unit()[i] * B.unit()[j];
    return u;
}

// product in A (x) B computed term by term; avoids the dA^2 dB^2 table of
// tensor_algebra, which is prohibitive when dA * dB is large
inline Vec tensor_multiply(const Algebra& A, const Algebra& B, const Vec& x, const Vec& y) {
    const std::size_t dB = B.dim();
    Vec out(x.size(), Scalar::zero(A.ctx()));
    for (std::size_t p = 0; p < x.size(); ++p) {
        if (x[p].is_zero()) continue;
        const std::size_t i = p / dB, j = p % dB;
        for (std::size_t q = 0; q < y.size(); ++q) {
            if (y[q].is_zero()) continue;
            const Scalar coeff = x[p] * y[q];
            for (const auto& [k, c] : A.product_of_basis(i, q / dB))
                for (const auto& [l, e] : B.product_of_basis(j, q % dB))
                    out[k * dB + l] += coeff * c * e;
        }
    }
    return out;
}

inline Vec tensor_element_power(const Algebra& A, const Algebra& B, const Vec& x, unsigned n) {
    Vec out = tensor_unit(A, B);
    for (unsigned i = 0; i < n; ++i) out = tensor_multiply(A, B, out, x);
    return out;
}

}  // namespace naka
