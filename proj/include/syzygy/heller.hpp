#pragma once

// Projective covers and Heller shifts over F_p[G], G a finite p-group.
// The group algebra is local, so projective = free and the cover of M is
// the free module on a basis of M / rad M. Omega(M) is the cover kernel;
// negative shifts go through the dual.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fp.hpp"
#include "gmodule.hpp"
#include "pgroup.hpp"

namespace syzygy {

struct ProjectiveCover {
    GModule target;
    size_t rank = 0;    // free rank of the cover
    GModule free;       // free module of that rank
    GModuleMap cover;   // free -> target, surjective, kernel inside rad(free)
    Submodule kernel;   // of the free module
};

inline ProjectiveCover projective_cover(const GModule& M) {
    const PGroup& G = M.group();
    PrimeField f = M.field();
    size_t n = G.order();

    Submodule rad = radical(M);
    Quotient head = quotient_module(M, rad, "head(" + M.label() + ")");
    size_t t = head.module.dim();

    GModule F = free_module(G, t);
    FpMatrix C(f, M.dim(), t * n);
    for (size_t i = 0; i < t; ++i) {
        FpVec lift(M.dim());
        for (size_t r = 0; r < M.dim(); ++r) lift[r] = head.section(r, i);
        std::vector<FpVec> orbit = element_translates(M, lift);
        for (uint32_t g = 0; g < n; ++g)
            for (size_t r = 0; r < M.dim(); ++r) C(r, i * n + g) = orbit[g][r];
    }

    if (rank_of(C) != M.dim()) throw std::logic_error("projective_cover: lift not surjective");
    Submodule ker = make_submodule(F, kernel_basis(C), true, "Omega(" + M.label() + ")");
    if (M.dim() > 0 && !RowSpan(radical(F).basis).contains_rows(ker.basis))
        throw std::logic_error("projective_cover: kernel escapes the radical");
    return ProjectiveCover{M, t, F, make_map(F, M, C), ker};
}

inline GModule omega(const GModule& M, int n) {
    if (n == 0) return omega(omega(M, 1), -1).with_label("Omega^0(" + M.label() + ")");
    if (n < 0) {
        GModule d = omega(dual(M), -n);
        return dual(d).with_label("Omega^" + std::to_string(n) + "(" + M.label() + ")");
    }
    GModule cur = M;
    for (int i = 0; i < n; ++i) cur = projective_cover(cur).kernel.module;
    return cur.with_label("Omega^" + std::to_string(n) + "(" + M.label() + ")");
}

// Kernel presentation of the second shift of the trivial module: the free
// module on the group generators maps onto the augmentation ideal by
// c_i -> sigma_i - 1, and the kernel is Omega^2 with its embedding.
struct OmegaSquareByBoundary {
    GModule ambient;      // free module of rank d(G)
    GModule regular;      // F_p[G]
    GModuleMap boundary;  // ambient -> regular
    Submodule kernel;     // Omega^2 with embedding basis
};

inline OmegaSquareByBoundary omega2_via_boundary(const PGroup& G) {
    PrimeField f = G.field();
    size_t n = G.order();
    size_t d = G.generators().size();
    GModule reg = regular_module(G);
    GModule P1 = free_module(G, d);
    FpMatrix D(f, n, d * n);
    for (size_t i = 0; i < d; ++i) {
        uint32_t s = G.generators()[i];
        for (uint32_t g = 0; g < n; ++g) {
            uint32_t gs = G.mul(g, s);
            D(gs, i * n + g) = f.add(D(gs, i * n + g), 1);
            D(g, i * n + g) = f.sub(D(g, i * n + g), 1);
        }
    }
    if (n > 1 && rank_of(D) != n - 1)
        throw std::logic_error("omega2_via_boundary: image is not the augmentation ideal");
    Submodule ker = make_submodule(P1, kernel_basis(D), true, "Omega^2(triv)");
    return OmegaSquareByBoundary{P1, reg, make_map(P1, reg, D), ker};
}

struct MinimalResolution {
    PGroup group;
    std::vector<size_t> ranks;           // b_0 .. b_N
    std::vector<GModule> terms;          // P_0 .. P_N
    GModuleMap augmentation;             // P_0 -> trivial module
    std::vector<GModuleMap> boundaries;  // [i]: P_{i+1} -> P_i
};

// Minimal free resolution of the trivial module to homological degree N.
// Exactness and minimality are verified level by level.
inline MinimalResolution minimal_resolution(const PGroup& G, size_t N) {
    GModule triv = trivial_module(G);
    ProjectiveCover c0 = projective_cover(triv);
    MinimalResolution R{G, {c0.rank}, {c0.free}, c0.cover, {}};
    Submodule K = c0.kernel;
    for (size_t level = 1; level <= N; ++level) {
        ProjectiveCover c = projective_cover(K.module);
        // boundary = (kernel embedding) o (cover in kernel coordinates)
        FpMatrix emb = K.basis.transpose();  // prev term dim x kernel dim
        FpMatrix bnd = emb * c.cover.matrix;
        R.boundaries.push_back(make_map(c.free, R.terms.back(), bnd));
        R.ranks.push_back(c.rank);
        R.terms.push_back(c.free);
        K = c.kernel;
    }
    for (size_t i = 0; i + 1 <= N; ++i) {
        const FpMatrix& cur = (i == 0) ? R.augmentation.matrix : R.boundaries[i - 1].matrix;
        const FpMatrix& nxt = R.boundaries[i].matrix;
        if (!same_row_space(kernel_basis(cur), nxt.transpose()))
            throw std::logic_error("minimal_resolution: not exact at level " + std::to_string(i));
        if (!RowSpan(radical(R.terms[i]).basis).contains_rows(nxt.transpose()))
            throw std::logic_error("minimal_resolution: not minimal at level " + std::to_string(i));
    }
    if (R.ranks[0] != 1) throw std::logic_error("minimal_resolution: b_0 != 1");
    if (N >= 1 && R.ranks[1] != G.min_generators())
        throw std::logic_error("minimal_resolution: b_1 != d(G)");
    return R;
}

// Nonzero norm action detects a free direct summand (and conversely).
inline bool has_free_summand(const GModule& M) { return !norm_matrix(M).is_zero(); }

}  // namespace syzygy
