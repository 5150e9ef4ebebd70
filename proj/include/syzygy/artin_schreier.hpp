#pragma once

// Finite-field realization of J(K) = K / wp(K), wp(x) = x^p - x, for towers
// K of degree p^m over F_p with cyclic Galois group generated by Frobenius.
// Degree-p extensions L = K[theta], theta^p = theta + a, are handled as
// K-algebras so the conjugates theta + j stay exact.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "decomp.hpp"
#include "fp.hpp"
#include "gmodule.hpp"
#include "heller.hpp"
#include "pgroup.hpp"

namespace syzygy {

namespace detail {

// Dense polynomials over F_p, coefficients ascending, no trailing zeros.
using Poly = std::vector<uint32_t>;

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic m.
inline Poly poly_mod(PrimeField f, Poly a, const Poly& m) {
    poly_trim(a);
    size_t dm = m.size() - 1;
    while (a.size() > dm) {
        uint32_t lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (lead != 0)
            for (size_t i = 0; i < dm; ++i)
                a[shift + i] = f.sub(a[shift + i], f.mul(lead, m[i]));
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

inline Poly poly_mulmod(PrimeField f, const Poly& a, const Poly& b, const Poly& m) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
    }
    return poly_mod(f, std::move(prod), m);
}

// Divisibility of monic candidate by monic divisor.
inline bool poly_divides(PrimeField f, const Poly& divisor, const Poly& candidate) {
    return poly_mod(f, candidate, divisor).empty();
}

// Trial division by every monic polynomial of degree 1 .. deg/2.
inline bool poly_irreducible(PrimeField f, const Poly& candidate) {
    size_t deg = candidate.size() - 1;
    uint32_t p = f.p();
    for (size_t d = 1; 2 * d <= deg; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            Poly div(d + 1, 0);
            div[d] = 1;
            uint64_t rest = idx;
            for (size_t i = 0; i < d; ++i) {
                div[i] = static_cast<uint32_t>(rest % p);
                rest /= p;
            }
            if (poly_divides(f, div, candidate)) return false;
        }
    }
    return true;
}

}  // namespace detail

// F_{p^k} as F_p[x] modulo the lexicographically smallest monic irreducible
// of degree k. Elements are coefficient vectors of length k.
class FFField {
public:
    static FFField make(uint32_t p, uint32_t degree) {
        if (degree == 0) throw std::invalid_argument("FFField: degree must be positive");
        PrimeField f(p);
        uint64_t count = 1;
        for (uint32_t i = 0; i < degree; ++i) {
            count *= p;
            if (count > (uint64_t{1} << 40)) throw std::domain_error("FFField: degree too large");
        }
        // Lexicographic: the top coefficient is the most significant digit.
        for (uint64_t idx = 0; idx < count; ++idx) {
            detail::Poly cand(degree + 1, 0);
            cand[degree] = 1;
            uint64_t rest = idx;
            for (uint32_t i = 0; i < degree; ++i) {
                cand[i] = static_cast<uint32_t>(rest % p);
                rest /= p;
            }
            if (detail::poly_irreducible(f, cand)) return FFField(f, degree, std::move(cand));
        }
        throw std::logic_error("FFField: no irreducible polynomial found");
    }

    PrimeField prime_field() const { return f_; }
    uint32_t p() const { return f_.p(); }
    uint32_t degree() const { return deg_; }
    const detail::Poly& modulus() const { return mod_; }
    uint64_t q() const {
        uint64_t v = 1;
        for (uint32_t i = 0; i < deg_; ++i) v *= f_.p();
        return v;
    }

    FpVec zero() const { return FpVec(deg_, 0); }
    FpVec one() const { return from_base(1); }
    FpVec from_base(uint32_t c) const {
        FpVec v(deg_, 0);
        v[0] = f_.reduce(c);
        return v;
    }
    FpVec gen() const {  // class of x
        detail::Poly x{0, 1};
        return from_poly(detail::poly_mod(f_, x, mod_));
    }

    bool is_zero(const FpVec& a) const {
        for (uint32_t x : a)
            if (x) return false;
        return true;
    }
    FpVec add(const FpVec& a, const FpVec& b) const {
        FpVec out(deg_);
        for (uint32_t i = 0; i < deg_; ++i) out[i] = f_.add(a[i], b[i]);
        return out;
    }
    FpVec sub(const FpVec& a, const FpVec& b) const {
        FpVec out(deg_);
        for (uint32_t i = 0; i < deg_; ++i) out[i] = f_.sub(a[i], b[i]);
        return out;
    }
    FpVec neg(const FpVec& a) const {
        FpVec out(deg_);
        for (uint32_t i = 0; i < deg_; ++i) out[i] = f_.neg(a[i]);
        return out;
    }
    FpVec scale(uint32_t c, const FpVec& a) const {
        FpVec out(deg_);
        for (uint32_t i = 0; i < deg_; ++i) out[i] = f_.mul(c, a[i]);
        return out;
    }
    FpVec mul(const FpVec& a, const FpVec& b) const {
        detail::Poly prod(2 * size_t{deg_} - 1, 0);
        for (uint32_t i = 0; i < deg_; ++i) {
            if (a[i] == 0) continue;
            for (uint32_t j = 0; j < deg_; ++j)
                prod[i + j] = f_.add(prod[i + j], f_.mul(a[i], b[j]));
        }
        return from_poly(detail::poly_mod(f_, std::move(prod), mod_));
    }
    FpVec pow(FpVec a, uint64_t e) const {
        FpVec acc = one();
        while (e) {
            if (e & 1) acc = mul(acc, a);
            a = mul(a, a);
            e >>= 1;
        }
        return acc;
    }
    FpVec inv(const FpVec& a) const {
        if (is_zero(a)) throw std::domain_error("FFField::inv: zero");
        return pow(a, q() - 2);
    }
    FpVec frobenius(const FpVec& a) const { return pow(a, f_.p()); }

    FpMatrix frobenius_matrix() const {
        FpMatrix m(f_, deg_, deg_);
        for (uint32_t j = 0; j < deg_; ++j) {
            FpVec e(deg_, 0);
            e[j] = 1;
            FpVec img = frobenius(e);
            for (uint32_t i = 0; i < deg_; ++i) m(i, j) = img[i];
        }
        return m;
    }

    // Sum of the Frobenius orbit; lands in the prime field.
    uint32_t absolute_trace(const FpVec& a) const {
        FpVec acc = a, cur = a;
        for (uint32_t i = 1; i < deg_; ++i) {
            cur = frobenius(cur);
            acc = add(acc, cur);
        }
        for (uint32_t i = 1; i < deg_; ++i)
            if (acc[i] != 0) throw std::logic_error("FFField: trace escaped the prime field");
        return acc[0];
    }

    uint64_t index_of(const FpVec& a) const {
        uint64_t idx = 0;
        for (uint32_t i = deg_; i-- > 0;) idx = idx * f_.p() + a[i];
        return idx;
    }
    FpVec element(uint64_t idx) const {
        FpVec v(deg_, 0);
        for (uint32_t i = 0; i < deg_; ++i) {
            v[i] = static_cast<uint32_t>(idx % f_.p());
            idx /= f_.p();
        }
        return v;
    }

private:
    FFField(PrimeField f, uint32_t deg, detail::Poly mod) : f_(f), deg_(deg), mod_(std::move(mod)) {}
    FpVec from_poly(const detail::Poly& p) const {
        FpVec v(deg_, 0);
        for (size_t i = 0; i < p.size(); ++i) v[i] = p[i];
        return v;
    }

    PrimeField f_;
    uint32_t deg_;
    detail::Poly mod_;
};

struct ASTower {
    uint32_t p = 0;
    uint32_t m = 0;
    FFField K;          // degree p^m over F_p
    PGroup G;           // cyclic of order p^m, trivial when m = 0
    GModule K_module;   // K with the Frobenius generator action
    FpMatrix frobenius; // x -> x^p as an F_p-linear map
};

inline constexpr uint64_t kTowerFieldLimit = uint64_t{1} << 20;

inline ASTower build_tower(uint32_t p, uint32_t m, bool force = false) {
    PrimeField f(p);
    uint64_t k = 1;
    for (uint32_t i = 0; i < m; ++i) {
        k *= p;
        if (k > 64) throw std::domain_error("build_tower: field degree beyond desk scale");
    }
    uint64_t q = 1;
    for (uint64_t i = 0; i < k; ++i) {
        q *= p;
        if (!force && q > kTowerFieldLimit)
            throw std::domain_error("build_tower: p^(p^m) exceeds the guard (use force)");
        if (q > (uint64_t{1} << 40)) throw std::domain_error("build_tower: field too large");
    }

    FFField K = FFField::make(p, static_cast<uint32_t>(k));
    FpMatrix frob = K.frobenius_matrix();
    FpMatrix id = FpMatrix::identity(f, K.degree());
    if (!(frob.pow(k) == id)) throw std::logic_error("build_tower: Frobenius order too large");
    if (m >= 1 && frob.pow(k / p) == id)
        throw std::logic_error("build_tower: Frobenius order too small");
    FpMatrix ker = kernel_basis(frob - id);
    if (ker.rows() != 1 || ker(0, 0) == 0)
        throw std::logic_error("build_tower: Frobenius fixes more than the prime field");

    PGroup G = m == 0 ? PGroup::trivial(p) : PGroup::abelian(p, {m});
    GModule KM = m == 0 ? GModule::over_trivial_group(G, K.degree(), "K")
                        : GModule(G, {frob}, "K");
    return ASTower{p, m, K, G, KM, frob};
}

struct JModule {
    ASTower tower;
    FpMatrix wp;         // frobenius - identity
    Submodule wp_image;  // wp(K) inside K_module
    Quotient j;          // J(K) = K / wp(K) with projection and section
    Submodule f_classes; // [F] = image of the embedded prime field
    bool action_trivial = false;
};

inline JModule j_module(const ASTower& t) {
    PrimeField f(t.p);
    uint32_t k = t.K.degree();
    FpMatrix wp = t.frobenius - FpMatrix::identity(f, k);
    FpMatrix ker = kernel_basis(wp);
    if (ker.rows() != 1) throw std::logic_error("j_module: wp kernel is not a line");
    Submodule img = make_submodule(t.K_module, RowSpan(wp.transpose()).basis(), true, "wp(K)");
    Quotient q = quotient_module(t.K_module, img, "J(K)");
    if (q.module.dim() != 1) throw std::logic_error("j_module: J(K) is not one-dimensional");

    bool trivial_action = true;
    for (uint32_t g : t.G.generators())
        if (!(q.module.action_matrix(g) == FpMatrix::identity(f, 1))) trivial_action = false;

    FpVec one(k, 0);
    one[0] = 1;
    FpMatrix f_row(f, 1, 1);
    f_row(0, 0) = q.projection.apply(one)[0];
    Submodule f_cls = make_submodule(q.module, f_row, true, "[F]");
    return JModule{t, wp, img, q, f_cls, trivial_action};
}

inline FpVec j_class(const JModule& jm, const FpVec& v) { return jm.j.projection.apply(v); }

// Degree-p Artin-Schreier extension L = K[theta], theta^p = theta + a,
// kept as a K-algebra. Elements are K-coefficient vectors in powers of theta.
class ASExtension {
public:
    using Elem = std::vector<FpVec>;

    ASExtension(const FFField& K, FpVec a) : K_(K), p_(K.p()), a_(std::move(a)) {}

    const FFField& base() const { return K_; }
    const FpVec& a() const { return a_; }

    Elem zero() const { return Elem(p_, K_.zero()); }
    Elem embed(const FpVec& c) const {
        Elem e = zero();
        e[0] = c;
        return e;
    }
    Elem one() const { return embed(K_.one()); }
    Elem theta() const {
        Elem e = zero();
        e[1] = K_.one();
        return e;
    }

    Elem add(const Elem& x, const Elem& y) const {
        Elem out = zero();
        for (uint32_t i = 0; i < p_; ++i) out[i] = K_.add(x[i], y[i]);
        return out;
    }
    Elem sub(const Elem& x, const Elem& y) const {
        Elem out = zero();
        for (uint32_t i = 0; i < p_; ++i) out[i] = K_.sub(x[i], y[i]);
        return out;
    }
    Elem scale_k(const FpVec& c, const Elem& x) const {
        Elem out = zero();
        for (uint32_t i = 0; i < p_; ++i) out[i] = K_.mul(c, x[i]);
        return out;
    }
    Elem neg(const Elem& x) const {
        Elem out = zero();
        for (uint32_t i = 0; i < p_; ++i) out[i] = K_.neg(x[i]);
        return out;
    }

    // theta^(p+i) folds down as theta^(i+1) + a theta^i.
    Elem mul(const Elem& x, const Elem& y) const {
        std::vector<FpVec> prod(2 * size_t{p_} - 1, K_.zero());
        for (uint32_t i = 0; i < p_; ++i) {
            if (K_.is_zero(x[i])) continue;
            for (uint32_t j = 0; j < p_; ++j)
                prod[i + j] = K_.add(prod[i + j], K_.mul(x[i], y[j]));
        }
        for (size_t d = prod.size(); d-- > p_;) {
            FpVec c = prod[d];
            if (K_.is_zero(c)) continue;
            prod[d - p_ + 1] = K_.add(prod[d - p_ + 1], c);
            prod[d - p_] = K_.add(prod[d - p_], K_.mul(a_, c));
            prod[d] = K_.zero();
        }
        Elem out = zero();
        for (uint32_t i = 0; i < p_; ++i) out[i] = prod[i];
        return out;
    }
    Elem pow(Elem x, uint64_t e) const {
        Elem acc = one();
        while (e) {
            if (e & 1) acc = mul(acc, x);
            x = mul(x, x);
            e >>= 1;
        }
        return acc;
    }

    // Frobenius generator of Gal(L/K): x -> x^|K|, iterated `power` times.
    Elem tau(Elem x, uint64_t power = 1) const {
        for (uint64_t i = 0; i < power; ++i) x = pow(x, K_.q());
        return x;
    }

    // Substitute theta -> theta + j (the Galois conjugates) and sum.
    FpVec trace_to_base(const Elem& x) const {
        Elem acc = zero();
        for (uint32_t j = 0; j < p_; ++j) {
            Elem conj = embed(K_.from_base(j));
            conj[1] = K_.one();  // theta + j
            Elem term = zero();
            Elem cp = one();
            for (uint32_t i = 0; i < p_; ++i) {
                term = add(term, scale_k(x[i], cp));
                if (i + 1 < p_) cp = mul(cp, conj);
            }
            acc = add(acc, term);
        }
        for (uint32_t i = 1; i < p_; ++i)
            if (!K_.is_zero(acc[i])) throw std::logic_error("ASExtension: trace escaped K");
        return acc[0];
    }

private:
    const FFField& K_;
    uint32_t p_;
    FpVec a_;
};

// Trace formula: Tr_{L/K}(-e theta_a^(p-1)) = e for L = K(theta_a).
inline bool trace_check(const ASTower& t, const FpVec& a, const FpVec& e) {
    if (t.K.absolute_trace(a) == 0)
        throw std::domain_error("trace_check: x^p - x - a is reducible over K");
    ASExtension L(t.K, a);
    ASExtension::Elem w = L.zero();
    w[t.p - 1] = t.K.neg(e);
    FpVec tr = L.trace_to_base(w);
    return tr == e;
}

// Galois pairing <tau^power, [n]> = tau^power(theta_n) - theta_n, an F_p value.
inline uint32_t pairing(const ASTower& t, const FpVec& n, uint64_t tau_power) {
    if (t.K.absolute_trace(n) == 0)
        throw std::domain_error("pairing: [n] is zero in J(K)");
    ASExtension L(t.K, n);
    ASExtension::Elem v = L.sub(L.tau(L.theta(), tau_power), L.theta());
    for (uint32_t i = 1; i < t.p; ++i)
        if (!t.K.is_zero(v[i])) throw std::logic_error("pairing: value escaped K");
    const FpVec& c = v[0];
    for (uint32_t i = 1; i < t.K.degree(); ++i)
        if (c[i] != 0) throw std::logic_error("pairing: value escaped the prime field");
    return c[0];
}

// End-to-end check of the decomposition J(K) = Omega^-2(F_p) (+) free(n - d)
// on a concrete tower, where n = dim J(F_p) = 1.
struct ConcreteDecomposition {
    uint32_t p = 0, m = 0;
    size_t dim_jk = 0;
    bool action_trivial = false;
    size_t f_classes_dim = 0;
    IsoResult iso;
    DecompositionBookkeeping bookkeeping;
    bool holds = false;
};

inline ConcreteDecomposition verify_decomposition_concrete(uint32_t p, uint32_t m,
                                                           bool force = false) {
    ASTower t = build_tower(p, m, force);
    JModule jm = j_module(t);
    size_t n = 1;
    size_t d = t.G.min_generators();

    ConcreteDecomposition rep;
    rep.p = p;
    rep.m = m;
    rep.dim_jk = jm.j.module.dim();
    rep.action_trivial = jm.action_trivial;
    rep.f_classes_dim = jm.f_classes.dim();
    GModule target = direct_sum(omega(trivial_module(t.G), -2), free_module(t.G, n - d));
    rep.iso = is_isomorphic(jm.j.module, target);
    rep.bookkeeping = verify_decomposition(t.G, n);
    rep.holds = rep.iso.is_iso() && rep.dim_jk == t.G.order() * (n - 1) + 1 &&
                rep.f_classes_dim == n - d && rep.bookkeeping.holds && rep.action_trivial;
    return rep;
}

// Classes of the embedded prime field inside J(L) for the degree-p extension
// L of F_p. Every such class is killed by the trace, so the follow-up norm
// equation has nothing to run on at this scale; callers report it skipped.
struct BaseClassSweep {
    uint32_t p = 0;
    std::vector<uint32_t> applicable;  // e in F_p^x with [e]_L nonzero
    bool ran_norm_equation = false;
};

inline BaseClassSweep base_class_sweep(uint32_t p) {
    ASTower t = build_tower(p, 1);
    JModule jm = j_module(t);
    BaseClassSweep out{p, {}, false};
    for (uint32_t e = 1; e < p; ++e) {
        FpVec v = t.K.scale(e, t.K.one());
        if (jm.j.projection.apply(v)[0] != 0) out.applicable.push_back(e);
    }
    if (!out.applicable.empty()) {
        out.ran_norm_equation = true;
        FpVec target(1, out.applicable.front());
        if (!solve(norm_matrix(jm.j.module), target))
            throw std::logic_error("base_class_sweep: norm equation unsolvable");
    }
    return out;
}

}  // namespace syzygy
