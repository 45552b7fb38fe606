// Exact arithmetic over Q and cyclotomic fields Q(zeta_N).
// Elements are residues modulo the N-th cyclotomic polynomial Phi_N,
// so equality of coefficient vectors is equality in the field.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace naka {

using Rational = mpq_class;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Monic Phi_n with integer coefficients, low degree first.
// Computed by dividing x^n - 1 by Phi_d for every proper divisor d of n.
inline std::vector<Rational> cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, std::vector<Rational>> cache;
    if (n == 0) throw FieldError("cyclotomic_polynomial: n must be positive");
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // numerator x^n - 1
    std::vector<Rational> num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const std::vector<Rational> phi_d = cyclotomic_polynomial(d);
        // exact division, both polynomials monic over Z
        std::vector<Rational> quot(num.size() - phi_d.size() + 1, Rational(0));
        std::vector<Rational> rem = num;
        for (std::size_t i = quot.size(); i-- > 0;) {
            Rational c = rem[i + phi_d.size() - 1];
            quot[i] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j < phi_d.size(); ++j)
                rem[i + j] -= c * phi_d[j];
        }
        num = quot;
    }
    cache[n] = num;
    return num;
}

// Ground field context. kind rational is represented uniformly as the
// degree-1 case N=1 (modulus x - 1, so the residue class of z is 1).
class FieldCtx {
  public:
    explicit FieldCtx(unsigned n = 1) : n_(n), modulus_(cyclotomic_polynomial(n)) {
        degree_ = modulus_.size() - 1;
    }
    unsigned conductor() const { return n_; }
    std::size_t degree() const { return degree_; }
    bool is_rational() const { return degree_ == 1 && n_ <= 2; }
    const std::vector<Rational>& modulus() const { return modulus_; }
    bool operator==(const FieldCtx& o) const { return n_ == o.n_; }
    bool operator!=(const FieldCtx& o) const { return n_ != o.n_; }

  private:
    unsigned n_;
    std::vector<Rational> modulus_;
    std::size_t degree_;
};

using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

inline FieldCtxPtr make_field(unsigned n = 1) { return std::make_shared<FieldCtx>(n); }

// Residue modulo Phi_N with exactly degree() rational coefficients.
class Scalar {
  public:
    Scalar() = default;
    Scalar(FieldCtxPtr ctx, std::vector<Rational> coeffs) : ctx_(std::move(ctx)) {
        coeffs_ = reduce(*ctx_, std::move(coeffs));
    }
    static Scalar from_rational(const FieldCtxPtr& ctx, const Rational& r) {
        std::vector<Rational> c(ctx->degree(), Rational(0));
        c[0] = r;
        return raw(ctx, std::move(c));
    }
    static Scalar zero(const FieldCtxPtr& ctx) { return from_rational(ctx, Rational(0)); }
    static Scalar one(const FieldCtxPtr& ctx) { return from_rational(ctx, Rational(1)); }
    // class of z, the distinguished primitive N-th root
    static Scalar zeta(const FieldCtxPtr& ctx) {
        std::vector<Rational> c(ctx->degree() + 1, Rational(0));
        c[1] = 1;
        return Scalar(ctx, std::move(c));
    }
    static Scalar zeta_pow(const FieldCtxPtr& ctx, long k) {
        long n = static_cast<long>(ctx->conductor());
        long e = ((k % n) + n) % n;
        std::vector<Rational> c(static_cast<std::size_t>(e) + 1, Rational(0));
        c[static_cast<std::size_t>(e)] = 1;
        return Scalar(ctx, std::move(c));
    }

    const FieldCtxPtr& ctx() const { return ctx_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }
    bool is_one() const {
        if (coeffs_.empty() || coeffs_[0] != 1) return false;
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }
    // exact rational value; only valid when all higher coefficients vanish
    Rational rational_value() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) throw FieldError("scalar is not rational");
        return coeffs_.empty() ? Rational(0) : coeffs_[0];
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        check_ctx(a, b);
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar operator-() const {
        std::vector<Rational> c(coeffs_);
        for (auto& x : c) x = -x;
        return raw(ctx_, std::move(c));
    }
    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        check_ctx(a, b);
        std::vector<Rational> c(a.coeffs_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
        return raw(a.ctx_, std::move(c));
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        check_ctx(a, b);
        std::vector<Rational> c(a.coeffs_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
        return raw(a.ctx_, std::move(c));
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        check_ctx(a, b);
        const std::size_t d = a.coeffs_.size();
        std::vector<Rational> prod(2 * d - 1, Rational(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (b.coeffs_[j] == 0) continue;
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Scalar(a.ctx_, std::move(prod));
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    // extended Euclid against Phi_N: s*this + t*Phi = gcd = const
    Scalar inverse() const {
        if (is_zero()) throw FieldError("division by zero");
        if (ctx_->degree() == 1) {
            std::vector<Rational> c{Rational(1) / coeffs_[0]};
            return raw(ctx_, std::move(c));
        }
        using Poly = std::vector<Rational>;
        auto deg = [](const Poly& p) -> long {
            for (std::size_t i = p.size(); i-- > 0;)
                if (p[i] != 0) return static_cast<long>(i);
            return -1;
        };
        Poly r0 = ctx_->modulus(), r1 = coeffs_;
        Poly s0{Rational(0)}, s1{Rational(1)};  // s tracks the coefficient of `this`
        while (deg(r1) > 0) {
            // r0 = q*r1 + r2
            Poly q(static_cast<std::size_t>(deg(r0) - deg(r1)) + 1, Rational(0));
            Poly r2 = r0;
            long d1 = deg(r1);
            Rational lead = r1[static_cast<std::size_t>(d1)];
            for (long i = deg(r2); i >= d1; --i) {
                Rational c = r2[static_cast<std::size_t>(i)] / lead;
                if (c == 0) continue;
                q[static_cast<std::size_t>(i - d1)] = c;
                for (long j = 0; j <= d1; ++j)
                    r2[static_cast<std::size_t>(i - d1 + j)] -= c * r1[static_cast<std::size_t>(j)];
            }
            // s2 = s0 - q*s1
            Poly s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
            for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
            }
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        long d = deg(r1);
        if (d != 0) throw FieldError("element not invertible modulo Phi_N");
        Rational g = r1[0];
        for (auto& c : s1) c /= g;
        return Scalar(ctx_, std::move(s1));
    }

    Scalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar acc = one(ctx_), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

  private:
    static Scalar raw(const FieldCtxPtr& ctx, std::vector<Rational> c) {
        Scalar s;
        s.ctx_ = ctx;
        s.coeffs_ = std::move(c);
        for (auto& x : s.coeffs_) x.canonicalize();
        return s;
    }
    static std::vector<Rational> reduce(const FieldCtx& ctx, std::vector<Rational> c) {
        const auto& mod = ctx.modulus();
        const std::size_t d = ctx.degree();
        for (std::size_t i = c.size(); i-- > d;) {
            Rational lead = c[i];
            if (lead != 0) {
                c[i] = 0;
                for (std::size_t j = 0; j < d; ++j) c[i - d + j] -= lead * mod[j];
            }
        }
        c.resize(d, Rational(0));
        for (auto& x : c) x.canonicalize();
        return c;
    }
    static void check_ctx(const Scalar& a, const Scalar& b) {
        if (*a.ctx_ != *b.ctx_) throw FieldError("field context mismatch");
    }

    FieldCtxPtr ctx_;
    std::vector<Rational> coeffs_;
};

// --- text grammar ---------------------------------------------------------
// expr := ['+'|'-'] term (('+'|'-') term)*
// term := factor ('*' factor)*
// factor := rational | 'z' ['^' integer]
// rational := integer ['/' positive-integer]

inline Scalar parse_scalar(const FieldCtxPtr& ctx, const std::string& text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_integer = [&]() -> mpz_class {
        skip();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected integer", start);
        return mpz_class(text.substr(start, pos - start));
    };
    auto parse_factor = [&]() -> Scalar {
        skip();
        if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
        if (text[pos] == 'z') {
            ++pos;
            skip();
            long e = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                e = static_cast<long>(parse_integer().get_si());
            }
            if (ctx->is_rational() && ctx->conductor() == 1)
                throw ParseError("symbol z is not defined over the rationals", pos);
            return Scalar::zeta_pow(ctx, e);
        }
        mpz_class num = parse_integer();
        skip();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            mpz_class den = parse_integer();
            if (den == 0) throw ParseError("zero denominator", pos);
            return Scalar::from_rational(ctx, Rational(num, den));
        }
        return Scalar::from_rational(ctx, Rational(num));
    };
    auto parse_term = [&]() -> Scalar {
        Scalar v = parse_factor();
        skip();
        while (pos < text.size() && text[pos] == '*') {
            ++pos;
            v *= parse_factor();
            skip();
        }
        return v;
    };
    skip();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        neg = text[pos] == '-';
        ++pos;
    }
    Scalar v = parse_term();
    if (neg) v = -v;
    skip();
    while (pos < text.size()) {
        char op = text[pos];
        if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", pos);
        ++pos;
        Scalar t = parse_term();
        v = (op == '+') ? v + t : v - t;
        skip();
    }
    return v;
}

inline std::string format_rational(const Rational& r) {
    std::ostringstream os;
    os << r.get_num();
    if (r.get_den() != 1) os << "/" << r.get_den();
    return os.str();
}

inline std::string format_scalar(const Scalar& s) {
    const auto& c = s.coeffs();
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Rational a = c[i];
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        bool coeff_one = (a == 1) && i > 0;
        if (!coeff_one) out += format_rational(a);
        if (i > 0) {
            if (!coeff_one) out += "*";
            out += "z";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace naka
