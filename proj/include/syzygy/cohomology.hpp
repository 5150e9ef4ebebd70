#pragma once

// Group cohomology H^i(G, M) by two independent routes: Hom along a minimal
// free resolution of the trivial module, and the normalized bar complex in
// degree two. Degree-two cocycles feed the extension-group constructor.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fp.hpp"
#include "gmodule.hpp"
#include "heller.hpp"
#include "pgroup.hpp"

namespace syzygy {

// Differential Hom(P_n, M) -> Hom(P_{n+1}, M) as a matrix on M^{b_n}.
// A Hom is determined by its values on the free generators; precomposition
// with the boundary sends value block i to sum_g coeff(i, g) rho(g).
inline FpMatrix hom_complex_matrix(const MinimalResolution& R, const GModule& M, size_t n) {
    if (n >= R.boundaries.size())
        throw std::out_of_range("hom_complex_matrix: resolution too short");
    if (M.group() != R.group) throw std::invalid_argument("hom_complex_matrix: wrong group");
    PrimeField f = M.field();
    size_t ord = R.group.order();
    size_t m = M.dim();
    size_t bn = R.ranks[n], bn1 = R.ranks[n + 1];
    const FpMatrix& bnd = R.boundaries[n].matrix;  // (bn*ord) x (bn1*ord)
    FpMatrix D(f, bn1 * m, bn * m);
    for (size_t j = 0; j < bn1; ++j)
        for (size_t i = 0; i < bn; ++i)
            for (uint32_t g = 0; g < ord; ++g) {
                uint32_t c = bnd(i * ord + g, j * ord);
                if (c == 0) continue;
                FpMatrix act = M.action_matrix(g);
                for (size_t r = 0; r < m; ++r)
                    for (size_t s = 0; s < m; ++s)
                        D(j * m + r, i * m + s) =
                            f.add(D(j * m + r, i * m + s), f.mul(c, act(r, s)));
            }
    return D;
}

// dim H^i(G, M) from a resolution of length at least i + 1.
inline size_t cohomology_dim(const MinimalResolution& R, const GModule& M, size_t i) {
    size_t m = M.dim();
    FpMatrix Di = hom_complex_matrix(R, M, i);
    size_t ker = R.ranks[i] * m - rank_of(Di);
    if (i == 0) return ker;
    FpMatrix Dprev = hom_complex_matrix(R, M, i - 1);
    if (!(Di * Dprev).is_zero())
        throw std::logic_error("cohomology_dim: differentials do not compose to zero");
    return ker - rank_of(Dprev);
}

inline size_t cohomology_dim(const PGroup& G, const GModule& M, size_t i) {
    return cohomology_dim(minimal_resolution(G, i + 1), M, i);
}

// Normalized bar cochains in degree two, stored as a (|G|^2) x dim M matrix
// whose row g*|G| + h is the value f(g, h); rows with g or h trivial vanish.
struct BarH2 {
    size_t dim = 0;
    size_t cochain_dim = 0;  // (|G|-1)^2 * dim M
    size_t rank_d2 = 0;
    size_t rank_d1 = 0;
    std::vector<FpMatrix> reps;  // cohomology basis as full cochain matrices
};

// Largest allowed normalized 2-cochain coordinate count.
inline constexpr size_t kBarCochainLimit = 100000;

inline BarH2 bar_h2(const PGroup& G, const GModule& M, bool want_reps = true) {
    if (M.group() != G) throw std::invalid_argument("bar_h2: wrong group");
    PrimeField f = M.field();
    size_t n = G.order();
    size_t q = n - 1;
    size_t m = M.dim();
    size_t n2 = q * q * m;
    if (n2 > kBarCochainLimit)
        throw std::domain_error("bar_h2: cochain space exceeds " + std::to_string(kBarCochainLimit));
    auto pair_block = [&](uint32_t g, uint32_t h) { return (size_t{g} - 1) * q + (h - 1); };

    // d2: value at (g,h,k) is g. f(h,k) - f(gh,k) + f(g,hk) - f(g,h),
    // terms with a trivial slot dropped by normalization.
    FpMatrix D2(f, q * q * q * m, n2);
    for (uint32_t g = 1; g < n; ++g) {
        FpMatrix act = M.action_matrix(g);
        for (uint32_t h = 1; h < n; ++h)
            for (uint32_t k = 1; k < n; ++k) {
                size_t row = ((pair_block(g, h) * q) + (k - 1)) * m;
                for (size_t r = 0; r < m; ++r)
                    for (size_t s = 0; s < m; ++s) {
                        size_t col = pair_block(h, k) * m + s;
                        D2(row + r, col) = f.add(D2(row + r, col), act(r, s));
                    }
                uint32_t gh = G.mul(g, h), hk = G.mul(h, k);
                for (size_t r = 0; r < m; ++r) {
                    if (gh != 0) {
                        size_t col = pair_block(gh, k) * m + r;
                        D2(row + r, col) = f.sub(D2(row + r, col), 1);
                    }
                    if (hk != 0) {
                        size_t col = pair_block(g, hk) * m + r;
                        D2(row + r, col) = f.add(D2(row + r, col), 1);
                    }
                    size_t col = pair_block(g, h) * m + r;
                    D2(row + r, col) = f.sub(D2(row + r, col), 1);
                }
            }
    }

    // d1: value at (g,h) is g. u(h) - u(gh) + u(g).
    FpMatrix D1(f, n2, q * m);
    for (uint32_t g = 1; g < n; ++g) {
        FpMatrix act = M.action_matrix(g);
        for (uint32_t h = 1; h < n; ++h) {
            size_t row = pair_block(g, h) * m;
            for (size_t r = 0; r < m; ++r)
                for (size_t s = 0; s < m; ++s) {
                    size_t col = (size_t{h} - 1) * m + s;
                    D1(row + r, col) = f.add(D1(row + r, col), act(r, s));
                }
            uint32_t gh = G.mul(g, h);
            for (size_t r = 0; r < m; ++r) {
                if (gh != 0) {
                    size_t col = (size_t{gh} - 1) * m + r;
                    D1(row + r, col) = f.sub(D1(row + r, col), 1);
                }
                size_t col = (size_t{g} - 1) * m + r;
                D1(row + r, col) = f.add(D1(row + r, col), 1);
            }
        }
    }

    if (!(D2 * D1).is_zero()) throw std::logic_error("bar_h2: d2 o d1 != 0");

    BarH2 out;
    out.cochain_dim = n2;
    out.rank_d2 = rank_of(D2);
    out.rank_d1 = rank_of(D1);
    out.dim = n2 - out.rank_d2 - out.rank_d1;
    if (want_reps && m > 0) {
        FpMatrix cocycles = kernel_basis(D2);
        RowSpan span(f, n2);
        span.add_rows(D1.transpose());
        for (size_t r = 0; r < cocycles.rows() && out.reps.size() < out.dim; ++r) {
            FpVec v(n2);
            for (size_t c = 0; c < n2; ++c) v[c] = cocycles(r, c);
            if (!span.add(v)) continue;
            FpMatrix full(f, n * n, m);
            for (uint32_t g = 1; g < n; ++g)
                for (uint32_t h = 1; h < n; ++h)
                    for (size_t s = 0; s < m; ++s)
                        full(size_t{g} * n + h, s) = v[pair_block(g, h) * m + s];
            out.reps.push_back(full);
        }
        if (out.reps.size() != out.dim) throw std::logic_error("bar_h2: rep extraction mismatch");
    }
    return out;
}

inline FpMatrix zero_cochain(const PGroup& G, const GModule& M) {
    return FpMatrix(M.field(), size_t{G.order()} * G.order(), M.dim());
}

// Checks normalization rows and the full cocycle identity over all triples.
inline bool is_normalized_2_cocycle(const PGroup& G, const GModule& M, const FpMatrix& c) {
    PrimeField f = M.field();
    size_t n = G.order();
    size_t m = M.dim();
    if (c.rows() != n * n || c.cols() != m)
        throw std::invalid_argument("is_normalized_2_cocycle: bad cochain shape");
    auto row = [&](uint32_t g, uint32_t h) {
        FpVec v(m);
        for (size_t s = 0; s < m; ++s) v[s] = c(size_t{g} * n + h, s);
        return v;
    };
    for (uint32_t g = 0; g < n; ++g)
        for (size_t s = 0; s < m; ++s)
            if (c(size_t{0} * n + g, s) != 0 || c(size_t{g} * n + 0, s) != 0) return false;
    for (uint32_t g = 0; g < n; ++g)
        for (uint32_t h = 0; h < n; ++h)
            for (uint32_t k = 0; k < n; ++k) {
                FpVec lhs = M.apply_element(g, row(h, k));
                FpVec rhs = row(G.mul(g, h), k);
                FpVec mid = row(g, G.mul(h, k));
                FpVec last = row(g, h);
                for (size_t s = 0; s < m; ++s) {
                    uint32_t v = f.sub(f.add(lhs[s], mid[s]), f.add(rhs[s], last[s]));
                    if (v != 0) return false;
                }
            }
    return true;
}

struct ExtensionGroup {
    PGroup base;          // G
    GModule kernel;       // M
    FpMatrix cocycle;     // the normalized 2-cochain used
    PGroup group;         // the extension, order |M| * |G|
    size_t kernel_order;  // p^dim M
    // element index: index(m)*|G| + g, with m_0 the most significant base-p digit
};

inline constexpr size_t kExtensionOrderLimit = size_t{1} << 14;

// Group extension of G by M along a normalized 2-cocycle:
// (m1, g1)(m2, g2) = (m1 + g1.m2 + f(g1, g2), g1 g2).
inline ExtensionGroup extension_group(const PGroup& G, const GModule& M, const FpMatrix& cocycle,
                                      const std::string& name = "extension") {
    PrimeField f = M.field();
    uint32_t p = f.p();
    size_t n = G.order();
    size_t m = M.dim();
    size_t pm = 1;
    for (size_t i = 0; i < m; ++i) {
        pm *= p;
        if (pm * n > kExtensionOrderLimit)
            throw std::domain_error("extension_group: order exceeds " +
                                    std::to_string(kExtensionOrderLimit));
    }
    size_t order = pm * n;
    if (!is_normalized_2_cocycle(G, M, cocycle))
        throw std::invalid_argument("extension_group: not a normalized cocycle");

    auto vec_of = [&](size_t idx) {
        FpVec v(m);
        for (size_t i = m; i-- > 0;) {  // m_0 most significant
            v[i] = static_cast<uint32_t>(idx % p);
            idx /= p;
        }
        return v;
    };
    auto idx_of = [&](const FpVec& v) {
        size_t idx = 0;
        for (size_t i = 0; i < m; ++i) idx = idx * p + v[i];
        return idx;
    };

    std::vector<std::vector<uint32_t>> table(order, std::vector<uint32_t>(order));
    for (size_t a = 0; a < pm; ++a) {
        FpVec m1 = vec_of(a);
        for (uint32_t g1 = 0; g1 < n; ++g1) {
            size_t row = a * n + g1;
            for (size_t b = 0; b < pm; ++b) {
                FpVec m2 = vec_of(b);
                FpVec t = M.apply_element(g1, m2);
                for (uint32_t g2 = 0; g2 < n; ++g2) {
                    FpVec sum(m);
                    for (size_t i = 0; i < m; ++i)
                        sum[i] = f.add(f.add(m1[i], t[i]), cocycle(size_t{g1} * n + g2, i));
                    table[row][b * n + g2] = static_cast<uint32_t>(idx_of(sum) * n + G.mul(g1, g2));
                }
            }
        }
    }
    PGroup E = PGroup::from_table_auto(p, table, name);

    // The kernel {(m, 1)} must be normal with the expected quotient map.
    for (size_t a = 0; a < pm; ++a) {
        uint32_t ka = static_cast<uint32_t>(a * n);
        for (uint32_t x = 0; x < order; ++x) {
            uint32_t conj = E.mul(E.mul(x, ka), E.inverse(x));
            if (conj % n != 0) throw std::logic_error("extension_group: kernel not normal");
        }
    }
    for (uint32_t x = 0; x < order; ++x)
        for (uint32_t y = 0; y < order; ++y)
            if (E.mul(x, y) % n != G.mul(x % n, y % n))
                throw std::logic_error("extension_group: quotient map not a homomorphism");
    return ExtensionGroup{G, M, cocycle, E, pm};
}

struct CohomologyChain {
    size_t h0_trivial = 0;   // H^0(G, F_p)
    size_t h1_omega1 = 0;    // H^1(G, Omega^1)
    size_t h2_omega2 = 0;    // H^2(G, Omega^2)
    size_t fixed_omega1 = 0;
    size_t fixed_regular = 0;
    bool all_one = false;
};

// The connecting isomorphisms along 0 -> Omega -> free -> quotient -> 0 force
// these three dimensions to agree (and to be 1 over a p-group); the fixed
// subspaces of Omega^1 and the regular module match in dimension too.
inline CohomologyChain cohomology_chain_check(const PGroup& G) {
    MinimalResolution R = minimal_resolution(G, 3);
    GModule triv = trivial_module(G);
    GModule om1 = omega(triv, 1);
    CohomologyChain out;
    out.h0_trivial = cohomology_dim(R, triv, 0);
    out.h1_omega1 = cohomology_dim(R, om1, 1);
    out.h2_omega2 = cohomology_dim(R, omega(triv, 2), 2);
    out.fixed_omega1 = fixed_submodule(om1).dim();
    out.fixed_regular = fixed_submodule(regular_module(G)).dim();
    out.all_one = out.h0_trivial == 1 && out.h1_omega1 == 1 && out.h2_omega2 == 1 &&
                  out.fixed_omega1 == 1 && out.fixed_regular == 1;
    return out;
}

}  // namespace syzygy
