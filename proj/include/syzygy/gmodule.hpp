#pragma once

// Finitely generated F_p[G]-modules for a finite p-group G, given as one
// invertible matrix per distinguished generator of G. Vectors are columns
// and maps act on the left. The action of an arbitrary element is derived
// from the group's canonical words; for desk-scale modules the per-element
// matrices are cached at construction and the homomorphism property is
// verified on all pairs.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fp.hpp"
#include "pgroup.hpp"

namespace syzygy {

class GModule {
public:
    GModule() = default;

    GModule(PGroup group, std::vector<FpMatrix> gen_action, std::string label = "") {
        auto d = std::make_shared<Data>();
        d->group = std::move(group);
        d->gen = std::move(gen_action);
        d->label = std::move(label);
        if (d->gen.size() != d->group.generators().size())
            throw std::invalid_argument("GModule: need one matrix per group generator");
        PrimeField f = d->group.field();
        d->dim = d->gen.empty() ? 0 : d->gen[0].rows();
        for (const FpMatrix& m : d->gen) {
            if (m.field() != f) throw std::invalid_argument("GModule: field mismatch");
            if (m.rows() != d->dim || m.cols() != d->dim)
                throw std::invalid_argument("GModule: generator actions must be square, equal size");
            if (!invert(m)) throw std::invalid_argument("GModule: generator action not invertible");
        }
        build_cache_and_validate(*d);
        d_ = std::move(d);
    }

    // A module with no group generators (over the trivial group) still
    // needs an explicit dimension.
    static GModule over_trivial_group(PGroup group, size_t dim, std::string label = "") {
        if (!group.generators().empty())
            throw std::invalid_argument("over_trivial_group: group has generators");
        auto d = std::make_shared<Data>();
        d->group = std::move(group);
        d->dim = dim;
        d->label = std::move(label);
        d->cache.assign(1, FpMatrix::identity(d->group.field(), dim));
        d->cached = true;
        GModule m;
        m.d_ = std::move(d);
        return m;
    }

    const PGroup& group() const { return d_->group; }
    size_t dim() const { return d_->dim; }
    PrimeField field() const { return d_->group.field(); }
    const std::string& label() const { return d_->label; }
    const std::vector<FpMatrix>& generator_actions() const { return d_->gen; }

    GModule with_label(std::string label) const {
        GModule m = *this;
        auto d = std::make_shared<Data>(*m.d_);
        d->label = std::move(label);
        m.d_ = std::move(d);
        return m;
    }

    bool has_action_cache() const { return d_->cached; }

    FpMatrix action_matrix(uint32_t g) const {
        if (g >= d_->group.order()) throw std::out_of_range("action_matrix: bad element");
        if (d_->cached) return d_->cache[g];
        FpMatrix m = FpMatrix::identity(field(), d_->dim);
        for (uint32_t i : d_->group.word(g)) m = m * d_->gen[i];
        return m;
    }

    FpVec apply_element(uint32_t g, const FpVec& v) const {
        if (g >= d_->group.order()) throw std::out_of_range("apply_element: bad element");
        if (d_->cached) return d_->cache[g].apply(v);
        const auto& w = d_->group.word(g);
        FpVec u = v;
        for (size_t i = w.size(); i-- > 0;) u = d_->gen[w[i]].apply(u);
        return u;
    }

    friend bool operator==(const GModule& a, const GModule& b) { return a.d_ == b.d_; }

private:
    struct Data {
        PGroup group;
        size_t dim = 0;
        std::vector<FpMatrix> gen;
        std::string label;
        std::vector<FpMatrix> cache;
        bool cached = false;
    };

    static void build_cache_and_validate(Data& d) {
        const PGroup& G = d.group;
        size_t n = G.order();
        PrimeField f = G.field();
        uint64_t cache_cost = uint64_t{n} * d.dim * d.dim;
        if (cache_cost <= (uint64_t{1} << 24)) {
            // Process elements shortest word first so the suffix element is
            // always already cached; word(g) = i . word(rest) needs exactly
            // one product per element.
            std::vector<uint32_t> by_length(n);
            for (uint32_t g = 0; g < n; ++g) by_length[g] = g;
            std::stable_sort(by_length.begin(), by_length.end(), [&](uint32_t x, uint32_t y) {
                return G.word(x).size() < G.word(y).size();
            });
            d.cache.assign(n, FpMatrix(f, d.dim, d.dim));
            for (uint32_t g : by_length) {
                const auto& w = G.word(g);
                if (w.empty()) {
                    d.cache[g] = FpMatrix::identity(f, d.dim);
                } else {
                    uint32_t rest = 0;
                    for (size_t k = w.size(); k-- > 1;) rest = G.mul(G.generators()[w[k]], rest);
                    d.cache[g] = d.gen[w[0]] * d.cache[rest];
                }
            }
            d.cached = true;
        }

        uint64_t dim3 = uint64_t{d.dim} * d.dim * std::max<size_t>(d.dim, 1);
        if (d.cached && uint64_t{n} * n * dim3 <= (uint64_t{1} << 31)) {
            for (uint32_t a = 0; a < n; ++a)
                for (uint32_t b = 0; b < n; ++b)
                    if (!(d.cache[a] * d.cache[b] == d.cache[G.mul(a, b)]))
                        throw std::invalid_argument("GModule: action is not a homomorphism");
            return;
        }
        if (d.cached && uint64_t{n} * G.generators().size() * dim3 <= (uint64_t{1} << 31)) {
            // Right-multiplication consistency plus samples; with BFS-derived
            // matrices this already pins the homomorphism property.
            for (uint32_t a = 0; a < n; ++a)
                for (size_t i = 0; i < G.generators().size(); ++i)
                    if (!(d.cache[a] * d.gen[i] == d.cache[G.mul(a, G.generators()[i])]))
                        throw std::invalid_argument("GModule: action is not a homomorphism");
        }
        // Sampled probe checks (also the only check for uncached modules).
        auto fold_apply = [&](uint32_t g, FpVec v) {
            const auto& w = G.word(g);
            for (size_t i = w.size(); i-- > 0;) v = d.gen[w[i]].apply(v);
            return v;
        };
        std::mt19937_64 rng(0x5851f42d4c957f2dull ^ (uint64_t{n} << 16) ^ d.dim);
        for (size_t t = 0; t < 64; ++t) {
            uint32_t a = static_cast<uint32_t>(rng() % n);
            uint32_t b = static_cast<uint32_t>(rng() % n);
            FpVec v(d.dim);
            for (auto& x : v) x = static_cast<uint32_t>(rng() % f.p());
            FpVec lhs = fold_apply(a, fold_apply(b, v));
            FpVec rhs = fold_apply(G.mul(a, b), v);
            if (lhs != rhs) throw std::invalid_argument("GModule: action is not a homomorphism");
        }
    }

    std::shared_ptr<const Data> d_;
};

// ---- constructions ----

inline GModule regular_module(const PGroup& G) {
    size_t n = G.order();
    PrimeField f = G.field();
    std::vector<FpMatrix> gen;
    for (uint32_t s : G.generators()) {
        FpMatrix m(f, n, n);
        for (uint32_t h = 0; h < n; ++h) m(G.mul(s, h), h) = 1;
        gen.push_back(std::move(m));
    }
    if (gen.empty()) return GModule::over_trivial_group(G, 1, "F" + std::to_string(f.p()) + "[C1]");
    return GModule(G, std::move(gen), "F" + std::to_string(f.p()) + "[" + G.name() + "]");
}

inline GModule trivial_module(const PGroup& G) {
    PrimeField f = G.field();
    if (G.generators().empty()) return GModule::over_trivial_group(G, 1, "triv");
    std::vector<FpMatrix> gen(G.generators().size(), FpMatrix::identity(f, 1));
    return GModule(G, std::move(gen), "triv");
}

inline GModule zero_module(const PGroup& G) {
    if (G.generators().empty()) return GModule::over_trivial_group(G, 0, "0");
    std::vector<FpMatrix> gen(G.generators().size(), FpMatrix(G.field(), 0, 0));
    return GModule(G, std::move(gen), "0");
}

inline GModule direct_sum(const GModule& A, const GModule& B) {
    if (A.group() != B.group()) throw std::invalid_argument("direct_sum: different groups");
    PrimeField f = A.field();
    size_t n = A.dim() + B.dim();
    if (A.group().generators().empty())
        return GModule::over_trivial_group(A.group(), n, A.label() + " + " + B.label());
    std::vector<FpMatrix> gen;
    for (size_t i = 0; i < A.group().generators().size(); ++i) {
        FpMatrix m(f, n, n);
        const FpMatrix& a = A.generator_actions()[i];
        const FpMatrix& b = B.generator_actions()[i];
        for (size_t r = 0; r < A.dim(); ++r)
            for (size_t c = 0; c < A.dim(); ++c) m(r, c) = a(r, c);
        for (size_t r = 0; r < B.dim(); ++r)
            for (size_t c = 0; c < B.dim(); ++c) m(A.dim() + r, A.dim() + c) = b(r, c);
        gen.push_back(std::move(m));
    }
    return GModule(A.group(), std::move(gen), A.label() + " + " + B.label());
}

inline GModule free_module(const PGroup& G, size_t rank) {
    GModule acc = zero_module(G);
    GModule reg = regular_module(G);
    for (size_t i = 0; i < rank; ++i) acc = direct_sum(acc, reg);
    return acc.with_label("free^" + std::to_string(rank));
}

// Contragredient: sigma acts by transpose of the inverse.
inline GModule dual(const GModule& M) {
    if (M.group().generators().empty())
        return GModule::over_trivial_group(M.group(), M.dim(), M.label() + "*");
    std::vector<FpMatrix> gen;
    for (const FpMatrix& a : M.generator_actions()) {
        auto inv = invert(a);
        if (!inv) throw std::logic_error("dual: generator action not invertible");
        gen.push_back(inv->transpose());
    }
    return GModule(M.group(), std::move(gen), M.label() + "*");
}

// ---- submodules, quotients, maps ----

struct Submodule {
    FpMatrix basis;  // rows are vectors of the ambient module
    GModule module;  // induced action in basis coordinates

    size_t dim() const { return basis.rows(); }
};

namespace detail {

inline FpMatrix stacked_generator_differences(const GModule& M) {
    PrimeField f = M.field();
    FpMatrix id = FpMatrix::identity(f, M.dim());
    FpMatrix stack(f, 0, M.dim());
    for (const FpMatrix& a : M.generator_actions()) stack = FpMatrix::vstack(stack, a - id);
    return stack;
}

}  // namespace detail

// Wraps basis rows (independent, span closed under the action) into a
// Submodule. With canonicalize the basis is replaced by its reduced
// echelon form; otherwise the given row order is kept.
inline Submodule make_submodule(const GModule& M, const FpMatrix& rows, bool canonicalize = true,
                                std::string label = "") {
    if (rows.cols() != M.dim()) throw std::invalid_argument("make_submodule: width mismatch");
    PrimeField f = M.field();
    FpMatrix basis = rows;
    if (canonicalize) {
        basis = RowSpan(rows).basis();
    } else if (rank_of(rows) != rows.rows()) {
        throw std::invalid_argument("make_submodule: rows are dependent");
    }
    size_t k = basis.rows();
    RrefTransform rt = rref_with_transform(basis);
    RowSpan span(rt.reduced);
    FpMatrix bt = basis.transpose();
    std::vector<FpMatrix> induced;
    for (const FpMatrix& a : M.generator_actions()) {
        FpMatrix img = a * bt;  // columns are images of basis rows
        FpMatrix coords(f, k, k);
        for (size_t col = 0; col < k; ++col) {
            FpVec v(M.dim());
            for (size_t j = 0; j < M.dim(); ++j) v[j] = img(j, col);
            if (!span.contains(v))
                throw std::invalid_argument("make_submodule: span not closed under the action");
            // coordinates against the echelon rows, then back through the
            // transform to the caller's basis order
            FpVec a_coords(k, 0);
            for (size_t i = 0; i < k; ++i) a_coords[i] = v[rt.pivot_cols[i]];
            for (size_t r = 0; r < k; ++r) {
                uint64_t acc = 0;
                for (size_t i = 0; i < k; ++i) acc += uint64_t{rt.transform(i, r)} * a_coords[i];
                coords(r, col) = f.reduce_u64(acc);
            }
        }
        if (!(bt * coords == img)) throw std::logic_error("make_submodule: coordinate solve failed");
        induced.push_back(std::move(coords));
    }
    Submodule s;
    s.basis = std::move(basis);
    if (label.empty()) label = M.label().empty() ? "sub" : "sub(" + M.label() + ")";
    if (M.group().generators().empty())
        s.module = GModule::over_trivial_group(M.group(), k, std::move(label));
    else
        s.module = GModule(M.group(), std::move(induced), std::move(label));
    return s;
}

// M^G: common kernel of (action - 1) over the generators. Fixed vectors of
// the generators are fixed by the whole group.
inline Submodule fixed_submodule(const GModule& M) {
    FpMatrix ker = kernel_basis(detail::stacked_generator_differences(M));
    return make_submodule(M, ker, true, "fix(" + M.label() + ")");
}

// rad M = sum of the images of (action - 1) over the generators.
inline Submodule radical(const GModule& M) {
    PrimeField f = M.field();
    FpMatrix id = FpMatrix::identity(f, M.dim());
    RowSpan span(f, M.dim());
    for (const FpMatrix& a : M.generator_actions()) {
        FpMatrix d = a - id;
        for (size_t j = 0; j < M.dim(); ++j) {
            FpVec col(M.dim());
            for (size_t i = 0; i < M.dim(); ++i) col[i] = d(i, j);
            span.add(std::move(col));
        }
    }
    return make_submodule(M, span.basis(), true, "rad(" + M.label() + ")");
}

// Images of v under every group element, indexed by element. Shortest
// words are handled first so each image costs one generator application.
inline std::vector<FpVec> element_translates(const GModule& M, const FpVec& v) {
    const PGroup& G = M.group();
    std::vector<uint32_t> by_length(G.order());
    for (uint32_t g = 0; g < G.order(); ++g) by_length[g] = g;
    std::stable_sort(by_length.begin(), by_length.end(), [&](uint32_t x, uint32_t y) {
        return G.word(x).size() < G.word(y).size();
    });
    std::vector<FpVec> u(G.order());
    u[0] = v;
    for (uint32_t g : by_length) {
        const auto& w = G.word(g);
        if (w.empty()) continue;
        uint32_t rest = 0;
        for (size_t k = w.size(); k-- > 1;) rest = G.mul(G.generators()[w[k]], rest);
        u[g] = M.generator_actions()[w[0]].apply(u[rest]);
    }
    return u;
}

// (sum over g of g) applied to v.
inline FpVec norm_apply(const GModule& M, const FpVec& v) {
    PrimeField f = M.field();
    FpVec acc(M.dim(), 0);
    for (const FpVec& t : element_translates(M, v))
        for (size_t i = 0; i < M.dim(); ++i) acc[i] = f.add(acc[i], t[i]);
    return acc;
}

inline FpMatrix norm_matrix(const GModule& M) {
    PrimeField f = M.field();
    FpMatrix n(f, M.dim(), M.dim());
    for (size_t j = 0; j < M.dim(); ++j) {
        FpVec e(M.dim(), 0);
        e[j] = 1;
        FpVec col = norm_apply(M, e);
        for (size_t i = 0; i < M.dim(); ++i) n(i, j) = col[i];
    }
    return n;
}

// Smallest submodule containing the seed vectors.
inline Submodule submodule_generated(const GModule& M, const std::vector<FpVec>& seeds,
                                     std::string label = "") {
    RowSpan span(M.field(), M.dim());
    std::vector<FpVec> work;
    for (const FpVec& s : seeds) {
        if (s.size() != M.dim()) throw std::invalid_argument("submodule_generated: bad seed");
        if (span.add(s)) work.push_back(s);
    }
    while (!work.empty()) {
        FpVec v = std::move(work.back());
        work.pop_back();
        for (const FpMatrix& a : M.generator_actions()) {
            FpVec img = a.apply(v);
            if (span.add(img)) work.push_back(std::move(img));
        }
    }
    return make_submodule(M, span.basis(), true,
                          label.empty() ? "gen-sub(" + M.label() + ")" : std::move(label));
}

struct GModuleMap {
    GModule source;
    GModule target;
    FpMatrix matrix;  // target.dim x source.dim
};

inline GModuleMap make_map(const GModule& source, const GModule& target, FpMatrix matrix) {
    if (source.group() != target.group()) throw std::invalid_argument("make_map: different groups");
    if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
        throw std::invalid_argument("make_map: shape mismatch");
    for (size_t i = 0; i < source.group().generators().size(); ++i)
        if (!(matrix * source.generator_actions()[i] == target.generator_actions()[i] * matrix))
            throw std::invalid_argument("make_map: not equivariant");
    return GModuleMap{source, target, std::move(matrix)};
}

struct Quotient {
    GModule module;
    FpMatrix projection;  // module.dim x ambient.dim
    FpMatrix section;     // ambient.dim x module.dim, projection * section = id
};

// M / S with the complement basis read off the echelon pivots of S.
inline Quotient quotient_module(const GModule& M, const Submodule& S, std::string label = "") {
    PrimeField f = M.field();
    RrefResult rr = rref(S.basis);
    if (rr.rank != S.basis.rows())
        throw std::invalid_argument("quotient_module: submodule basis is dependent");
    size_t n = M.dim(), k = rr.rank, q = n - k;
    std::vector<bool> is_pivot(n, false);
    for (size_t c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<size_t> comp;
    for (size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) comp.push_back(c);
    FpMatrix proj(f, q, n), sect(f, n, q);
    for (size_t t = 0; t < q; ++t) {
        proj(t, comp[t]) = 1;
        for (size_t l = 0; l < k; ++l) proj(t, rr.pivot_cols[l]) = f.neg(rr.reduced(l, comp[t]));
        sect(comp[t], t) = 1;
    }
    std::vector<FpMatrix> induced;
    for (const FpMatrix& a : M.generator_actions()) {
        FpMatrix ind = proj * a * sect;
        if (!(ind * proj == proj * a))
            throw std::invalid_argument("quotient_module: submodule not invariant");
        induced.push_back(std::move(ind));
    }
    Quotient out;
    if (label.empty()) label = M.label() + "/" + S.module.label();
    if (M.group().generators().empty())
        out.module = GModule::over_trivial_group(M.group(), q, std::move(label));
    else
        out.module = GModule(M.group(), std::move(induced), std::move(label));
    out.projection = std::move(proj);
    out.section = std::move(sect);
    return out;
}

// ---- hom spaces and isomorphism testing ----

// Basis of {X : X a_sigma = b_sigma X for all generators}, X of shape
// B.dim x A.dim. Deterministic: rows of the kernel of the stacked
// equivariance system, unflattened row-major.
inline std::vector<FpMatrix> hom_space(const GModule& A, const GModule& B) {
    if (A.group() != B.group()) throw std::invalid_argument("hom_space: different groups");
    PrimeField f = A.field();
    size_t a = A.dim(), b = B.dim();
    size_t unknowns = a * b;
    size_t gens = A.group().generators().size();
    FpMatrix sys(f, gens * unknowns, unknowns);
    for (size_t s = 0; s < gens; ++s) {
        const FpMatrix& ra = A.generator_actions()[s];
        const FpMatrix& rb = B.generator_actions()[s];
        for (size_t i = 0; i < b; ++i)
            for (size_t j = 0; j < a; ++j) {
                size_t row = s * unknowns + i * a + j;
                // (X ra)(i,j) contributes X(i,k) ra(k,j)
                for (size_t k = 0; k < a; ++k)
                    sys(row, i * a + k) = f.add(sys(row, i * a + k), ra(k, j));
                // -(rb X)(i,j) contributes -rb(i,k) X(k,j)
                for (size_t k = 0; k < b; ++k)
                    sys(row, k * a + j) = f.sub(sys(row, k * a + j), rb(i, k));
            }
    }
    FpMatrix ker = kernel_basis(sys);
    std::vector<FpMatrix> basis;
    for (size_t r = 0; r < ker.rows(); ++r) {
        FpMatrix X(f, b, a);
        for (size_t i = 0; i < b; ++i)
            for (size_t j = 0; j < a; ++j) X(i, j) = ker(r, i * a + j);
        basis.push_back(std::move(X));
    }
    return basis;
}

struct InvariantProfile {
    size_t dim = 0;
    size_t fixed_dim = 0;
    std::vector<size_t> radical_dims;  // dim rad^k M, k = 1.. until 0
    std::vector<size_t> socle_dims;    // dim soc^k M, k = 1.. until dim

    friend bool operator==(const InvariantProfile& a, const InvariantProfile& b) = default;

    std::string to_string() const {
        std::ostringstream os;
        os << "dim=" << dim << " fixed=" << fixed_dim << " rad=[";
        for (size_t i = 0; i < radical_dims.size(); ++i) os << (i ? "," : "") << radical_dims[i];
        os << "] soc=[";
        for (size_t i = 0; i < socle_dims.size(); ++i) os << (i ? "," : "") << socle_dims[i];
        os << "]";
        return os.str();
    }
};

inline std::vector<size_t> radical_series_dims(const GModule& M) {
    PrimeField f = M.field();
    FpMatrix id = FpMatrix::identity(f, M.dim());
    std::vector<FpMatrix> diffs;
    for (const FpMatrix& a : M.generator_actions()) diffs.push_back(a - id);
    std::vector<size_t> dims;
    FpMatrix layer = id;  // rows spanning rad^k
    while (true) {
        RowSpan next(f, M.dim());
        for (const FpMatrix& d : diffs)
            for (size_t r = 0; r < layer.rows(); ++r) next.add(d.apply(layer.row_vec(r)));
        if (next.rank() == 0) break;
        dims.push_back(next.rank());
        layer = next.basis();
    }
    return dims;
}

inline std::vector<size_t> socle_series_dims(const GModule& M) {
    std::vector<size_t> dims;
    RowSpan soc(M.field(), M.dim());
    soc.add_rows(fixed_submodule(M).basis);
    dims.push_back(soc.rank());
    while (soc.rank() < M.dim()) {
        Submodule s = make_submodule(M, soc.basis());
        Quotient q = quotient_module(M, s);
        FpMatrix qfix = fixed_submodule(q.module).basis;
        // lift back: rows times section^T
        bool grew = false;
        for (size_t r = 0; r < qfix.rows(); ++r) {
            FpVec lifted = q.section.apply(qfix.row_vec(r));
            grew = soc.add(std::move(lifted)) || grew;
        }
        if (!grew) throw std::logic_error("socle_series: stalled");
        dims.push_back(soc.rank());
    }
    return dims;
}

inline InvariantProfile invariant_profile(const GModule& M) {
    InvariantProfile p;
    p.dim = M.dim();
    p.fixed_dim = fixed_submodule(M).dim();
    p.radical_dims = radical_series_dims(M);
    if (M.dim() > 0) p.socle_dims = socle_series_dims(M);
    return p;
}

struct IsoResult {
    enum class Verdict { isomorphic, not_isomorphic, unknown };
    Verdict verdict = Verdict::unknown;
    std::optional<GModuleMap> iso;
    std::string detail;

    bool is_iso() const { return verdict == Verdict::isomorphic; }
};

struct IsoSearch {
    size_t random_trials = 128;
    uint64_t seed = 0x00c0ffee;
};

// Invariant screen first, then a search for an invertible element of
// Hom(A, B): basis elements, prefix sums, then seeded random combinations.
inline IsoResult is_isomorphic(const GModule& A, const GModule& B, IsoSearch opts = {}) {
    IsoResult out;
    if (A.group() != B.group()) throw std::invalid_argument("is_isomorphic: different groups");
    InvariantProfile pa = invariant_profile(A), pb = invariant_profile(B);
    if (!(pa == pb)) {
        out.verdict = IsoResult::Verdict::not_isomorphic;
        out.detail = "invariant mismatch: " + pa.to_string() + " vs " + pb.to_string();
        return out;
    }
    if (A.dim() == 0) {
        out.verdict = IsoResult::Verdict::isomorphic;
        out.iso = make_map(A, B, FpMatrix(A.field(), 0, 0));
        out.detail = "zero modules";
        return out;
    }
    std::vector<FpMatrix> hom = hom_space(A, B);
    if (hom.empty()) {
        out.verdict = IsoResult::Verdict::not_isomorphic;
        out.detail = "hom space is zero";
        return out;
    }
    PrimeField f = A.field();
    auto try_candidate = [&](const FpMatrix& X) -> bool {
        if (!invert(X)) return false;
        out.verdict = IsoResult::Verdict::isomorphic;
        out.iso = make_map(A, B, X);
        out.detail = "explicit isomorphism";
        return true;
    };
    for (const FpMatrix& X : hom)
        if (try_candidate(X)) return out;
    FpMatrix prefix(f, B.dim(), A.dim());
    for (const FpMatrix& X : hom) {
        prefix = prefix + X;
        if (try_candidate(prefix)) return out;
    }
    std::mt19937_64 rng(opts.seed);
    for (size_t t = 0; t < opts.random_trials; ++t) {
        FpMatrix cand(f, B.dim(), A.dim());
        for (const FpMatrix& X : hom) {
            uint32_t c = static_cast<uint32_t>(rng() % f.p());
            if (c) cand = cand + X.scaled(c);
        }
        if (try_candidate(cand)) return out;
    }
    out.verdict = IsoResult::Verdict::unknown;
    out.detail = "profiles agree (" + pa.to_string() + "), no isomorphism found in budget";
    return out;
}

}  // namespace syzygy
