#pragma once

// Indecomposability certification by endomorphism scan, Fitting splits,
// dimension bookkeeping for the J(K) = X (+) Y decomposition, and the
// explicit kernel presentation of Omega^2 over C_p x C_p.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fp.hpp"
#include "gmodule.hpp"
#include "heller.hpp"
#include "pgroup.hpp"

namespace syzygy {

struct FittingSplit {
    bool split = false;
    std::optional<Submodule> image;   // of f^dim, when split
    std::optional<Submodule> kernel;  // of f^dim, when split
};

namespace detail {

// Fixed subspaces meet trivially iff the submodules do; cheap pre-test
// before the exact rank count.
inline void check_zero_intersection(const Submodule& U, const Submodule& V) {
    FpMatrix fu = fixed_submodule(U.module).basis * U.basis;
    FpMatrix fv = fixed_submodule(V.module).basis * V.basis;
    if (intersect_row_spaces(fu, fv).rows() != 0)
        throw std::logic_error("decomposition parts share fixed vectors");
    if (rank_of(FpMatrix::vstack(U.basis, V.basis)) != U.dim() + V.dim())
        throw std::logic_error("decomposition parts intersect");
}

}  // namespace detail

// Fitting decomposition along an equivariant endomorphism: the stable power
// splits M into its kernel and image unless f is nilpotent or invertible.
inline FittingSplit fitting_split(const GModule& M, const FpMatrix& f) {
    make_map(M, M, f);  // rejects non-endomorphisms
    size_t d = M.dim();
    if (d == 0) return FittingSplit{};
    FpMatrix h = f.pow(d);
    size_t r = rank_of(h);
    if (r == 0 || r == d) return FittingSplit{};
    Submodule im = make_submodule(M, RowSpan(h.transpose()).basis(), true, "im");
    Submodule ker = make_submodule(M, kernel_basis(h), true, "ker");
    if (im.dim() + ker.dim() != d) throw std::logic_error("fitting_split: dimension mismatch");
    detail::check_zero_intersection(im, ker);
    return FittingSplit{true, im, ker};
}

enum class DecompCertificate {
    indecomposable_certified,  // exhaustive scan, every endomorphism nilpotent or invertible
    indecomposable_heuristic,  // sampled scan only
    split,
};

struct DecompositionReport {
    GModule module;
    std::vector<Submodule> summands;
    DecompCertificate certificate = DecompCertificate::indecomposable_heuristic;
    std::optional<FpMatrix> witness;  // splitting endomorphism
    size_t endo_dim = 0;
    size_t candidates_checked = 0;
    uint64_t seed = 0;
};

// Scans End(M): basis elements first, then the whole ring when p^(dim End)
// fits the budget, otherwise `budget` random elements. A module is certified
// indecomposable exactly when the exhaustive scan sees only nilpotent and
// invertible elements.
inline DecompositionReport indecomposable(const GModule& M, size_t budget = size_t{1} << 20,
                                          uint64_t seed = 0xdec0deull) {
    if (M.dim() == 0) throw std::invalid_argument("indecomposable: zero module");
    PrimeField f = M.field();
    uint32_t p = f.p();
    size_t d = M.dim();
    std::vector<FpMatrix> basis = hom_space(M, M);
    size_t e = basis.size();

    DecompositionReport rep{M, {}, DecompCertificate::indecomposable_heuristic, std::nullopt,
                            e,  0,  seed};
    auto add_into = [&](FpMatrix& acc, const FpMatrix& b) {
        for (size_t r = 0; r < d; ++r)
            for (size_t c = 0; c < d; ++c) acc(r, c) = f.add(acc(r, c), b(r, c));
    };
    // Neither invertible nor nilpotent: a genuine Fitting witness.
    auto splits = [&](const FpMatrix& cand) {
        if (rank_of(cand) == d) return false;
        return rank_of(cand.pow(d)) != 0;
    };
    auto finish_split = [&](const FpMatrix& cand) {
        FittingSplit fs = fitting_split(M, cand);
        rep.certificate = DecompCertificate::split;
        rep.witness = cand;
        rep.summands = {*fs.image, *fs.kernel};
        return rep;
    };

    for (const FpMatrix& b : basis) {
        ++rep.candidates_checked;
        if (splits(b)) return finish_split(b);
    }

    size_t total = 1;
    bool exhaustive = true;
    for (size_t i = 0; i < e; ++i) {
        if (total > budget / p) {
            exhaustive = false;
            break;
        }
        total *= p;
    }
    if (total > budget) exhaustive = false;

    if (exhaustive) {
        FpMatrix cur(f, d, d);
        std::vector<uint32_t> digits(e, 0);
        for (size_t step = 1; step < total; ++step) {
            size_t i = 0;
            for (;;) {
                add_into(cur, basis[i]);
                if (++digits[i] == p) {
                    digits[i] = 0;
                    ++i;
                } else
                    break;
            }
            ++rep.candidates_checked;
            if (splits(cur)) return finish_split(cur);
        }
        rep.certificate = DecompCertificate::indecomposable_certified;
    } else {
        std::mt19937_64 rng(seed ^ (uint64_t{e} << 32) ^ d);
        std::uniform_int_distribution<uint32_t> coeff(0, p - 1);
        for (size_t trial = 0; trial < budget; ++trial) {
            FpMatrix cur(f, d, d);
            bool nonzero = false;
            for (size_t i = 0; i < e; ++i) {
                uint32_t c = coeff(rng);
                if (!c) continue;
                nonzero = true;
                for (size_t r = 0; r < d; ++r)
                    for (size_t cc = 0; cc < d; ++cc)
                        cur(r, cc) = f.add(cur(r, cc), f.mul(c, basis[i](r, cc)));
            }
            if (!nonzero) continue;
            ++rep.candidates_checked;
            if (splits(cur)) return finish_split(cur);
        }
        rep.certificate = DecompCertificate::indecomposable_heuristic;
    }
    rep.summands = {make_submodule(M, FpMatrix::identity(f, d), true, M.label())};
    return rep;
}

// Dimension bookkeeping for J(K) = Omega^-2(F_p) (+) free of rank n - d.
struct DecompositionBookkeeping {
    PGroup group;
    size_t n = 0;  // dim of the base-level source space
    size_t d = 0;  // minimal generator count of the group
    size_t dim_j_k = 0;
    size_t dim_x = 0;
    size_t free_rank = 0;
    bool x_has_free_summand = true;
    size_t free_fixed_dim = 0;
    bool consistent = false;  // dim_x + |G| free_rank == dim_j_k
    bool holds = false;
};

inline DecompositionBookkeeping verify_decomposition(const PGroup& G, size_t n) {
    size_t d = G.min_generators();
    if (n < d) throw std::domain_error("verify_decomposition: n must be at least d(G)");
    size_t ord = G.order();
    DecompositionBookkeeping rep;
    rep.group = G;
    rep.n = n;
    rep.d = d;
    rep.dim_j_k = ord * (n - 1) + 1;
    rep.free_rank = n - d;

    GModule X = omega(trivial_module(G), -2);
    rep.dim_x = X.dim();
    size_t expect_x = d == 0 ? 0 : (d - 1) * ord + 1;
    if (rep.dim_x != expect_x) throw std::logic_error("verify_decomposition: dim X off formula");
    rep.x_has_free_summand = has_free_summand(X);
    rep.free_fixed_dim = fixed_submodule(free_module(G, rep.free_rank)).dim();
    rep.consistent = rep.dim_x + ord * rep.free_rank == rep.dim_j_k;
    rep.holds = rep.consistent && !rep.x_has_free_summand && rep.free_fixed_dim == rep.free_rank;
    return rep;
}

// Explicit spanning set for Omega^2 inside the rank-2 free module over
// C_p x C_p: a0 = (s2-1)c1 - (s1-1)c2, a1 = (s1-1)^(p-1) c1,
// a2 = -(s2-1)^(p-1) c2, plus the grid (s1-1)^k (s2-1)^l a0.
struct CpCpPresentation {
    uint32_t p = 0;
    PGroup group;
    OmegaSquareByBoundary bd;
    FpVec a0, a1, a2;
    std::vector<std::pair<int, int>> grid;  // (k, l) for basis rows 2, 3, ...
    FpMatrix basis;                         // rows: a1, a2, then the grid
    GModule module;                         // action in basis coordinates
};

inline CpCpPresentation verify_presentation(uint32_t p, bool force = false) {
    if (!force && p != 2 && p != 3 && p != 5)
        throw std::domain_error("verify_presentation: p in {2,3,5} unless forced");
    PGroup G = PGroup::abelian(p, {1, 1});
    PrimeField f = G.field();
    size_t ord = G.order();
    OmegaSquareByBoundary bd = omega2_via_boundary(G);
    const FpMatrix& D = bd.boundary.matrix;

    FpMatrix s1 = bd.ambient.action_matrix(G.generators()[0]);
    FpMatrix s2 = bd.ambient.action_matrix(G.generators()[1]);
    FpMatrix id = FpMatrix::identity(f, 2 * ord);
    s1 = s1 - id;
    s2 = s2 - id;

    FpVec c1(2 * ord), c2(2 * ord);
    c1[0] = 1;
    c2[ord] = 1;

    auto apply_pow = [&](const FpMatrix& s, uint32_t k, FpVec v) {
        for (uint32_t i = 0; i < k; ++i) v = s.apply(v);
        return v;
    };
    auto is_zero_vec = [&](const FpVec& v) {
        for (uint32_t x : v)
            if (x) return false;
        return true;
    };
    auto neg_vec = [&](FpVec v) {
        for (uint32_t& x : v) x = f.neg(x);
        return v;
    };
    auto sub_vec = [&](const FpVec& a, const FpVec& b) {
        FpVec out(a.size());
        for (size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
        return out;
    };

    FpVec a0 = sub_vec(s2.apply(c1), s1.apply(c2));
    FpVec a1 = apply_pow(s1, p - 1, c1);
    FpVec a2 = neg_vec(apply_pow(s2, p - 1, c2));

    for (const FpVec* a : {&a0, &a1, &a2})
        if (!is_zero_vec(D.apply(*a)))
            throw std::logic_error("verify_presentation: a-vector escapes ker of the boundary");
    if (!is_zero_vec(sub_vec(apply_pow(s1, p - 1, a0), s2.apply(a1))))
        throw std::logic_error(
            "verify_presentation: relation (s1-1)^(p-1) a0 = (s2-1) a1 violated");
    if (!is_zero_vec(sub_vec(apply_pow(s2, p - 1, a0), s1.apply(a2))))
        throw std::logic_error(
            "verify_presentation: relation (s2-1)^(p-1) a0 = (s1-1) a2 violated");
    if (!is_zero_vec(apply_pow(s1, p - 1, apply_pow(s2, p - 1, a0))))
        throw std::logic_error(
            "verify_presentation: relation (s1-1)^(p-1) (s2-1)^(p-1) a0 = 0 violated");

    std::vector<std::pair<int, int>> grid;
    std::vector<FpVec> rows{a1, a2};
    std::vector<FpVec> prev_row;  // s2-chain at the previous k
    for (uint32_t k = 0; k < p; ++k) {
        std::vector<FpVec> chain(p, FpVec(2 * ord));
        chain[0] = k == 0 ? a0 : s1.apply(prev_row[0]);
        for (uint32_t l = 1; l < p; ++l)
            chain[l] = k == 0 ? s2.apply(chain[l - 1]) : s1.apply(prev_row[l]);
        for (uint32_t l = 0; l < p; ++l)
            if (k + l < 2 * p - 2) {
                grid.emplace_back(int(k), int(l));
                rows.push_back(chain[l]);
            }
        prev_row = std::move(chain);
    }
    if (rows.size() != size_t{p} * p + 1)
        throw std::logic_error("verify_presentation: spanning set size is not p^2+1");
    FpMatrix basis = FpMatrix::from_row_vectors(f, rows, 2 * ord);
    if (rank_of(basis) != rows.size())
        throw std::logic_error("verify_presentation: spanning set is dependent");
    for (const FpVec& r : rows)
        if (!is_zero_vec(D.apply(r)))
            throw std::logic_error("verify_presentation: spanning vector escapes the kernel");
    if (bd.kernel.dim() != rows.size())
        throw std::logic_error("verify_presentation: kernel dimension is not p^2+1");

    GModule module =
        make_submodule(bd.ambient, basis, false, "Omega^2 presentation p=" + std::to_string(p))
            .module;
    return CpCpPresentation{p, G, bd, a0, a1, a2, grid, basis, module};
}

}  // namespace syzygy
