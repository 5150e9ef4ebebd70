// Acceptance gate: one verdict line per criterion, nonzero exit on failure.
// Each criterion carries its own runtime budget where one is pinned.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "syzygy/syzygy.hpp"

using namespace syzygy;

namespace {

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;  // 0 = no pinned budget
    std::function<void(std::ostringstream&)> run;
};

std::vector<PGroup> standard_set() {
    return {PGroup::abelian(2, {1}),       PGroup::abelian(2, {2}),
            PGroup::abelian(2, {3}),       PGroup::abelian(2, {1, 1}),
            PGroup::abelian(2, {1, 1, 1}), PGroup::abelian(3, {1}),
            PGroup::abelian(3, {2}),       PGroup::abelian(3, {1, 1}),
            PGroup::abelian(5, {1, 1})};
}

void expect(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

FpVec random_vec(PrimeField f, size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint32_t> d(0, f.p() - 1);
    FpVec v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

void criterion_dimension_formula(std::ostringstream& note) {
    for (const PGroup& G : standard_set()) {
        size_t dim = omega(trivial_module(G), 2).dim();
        size_t want = (G.min_generators() - 1) * G.order() + 1;
        expect(dim == want, G.name() + ": dim " + std::to_string(dim) + " expected " +
                                std::to_string(want));
    }
    note << "9 groups";
}

void criterion_presentation(std::ostringstream& note) {
    for (uint32_t p : {2u, 3u, 5u}) {
        CpCpPresentation pres = verify_presentation(p);
        expect(pres.basis.rows() == size_t{p} * p + 1,
               "p=" + std::to_string(p) + ": spanning set size off");
        expect(rank_of(pres.basis) == pres.basis.rows(),
               "p=" + std::to_string(p) + ": spanning set dependent");
        expect(same_row_space(pres.basis, pres.bd.kernel.basis),
               "p=" + std::to_string(p) + ": span is not the kernel");
    }
    note << "p in {2,3,5}, sizes 5/10/26";
}

void criterion_boundary_agreement(std::ostringstream& note) {
    for (PGroup G : {PGroup::abelian(2, {1, 1}), PGroup::abelian(3, {1, 1}), PGroup::abelian(2, {2})}) {
        OmegaSquareByBoundary bd = omega2_via_boundary(G);
        GModule direct = omega(trivial_module(G), 2);
        IsoResult iso = is_isomorphic(bd.kernel.module, direct);
        expect(iso.verdict != IsoResult::Verdict::not_isomorphic, G.name() + ": routes disagree");
        if (iso.is_iso()) {
            expect(rank_of(iso.iso->matrix) == direct.dim(), G.name() + ": witness not invertible");
        } else {
            expect(invariant_profile(bd.kernel.module) == invariant_profile(direct),
                   G.name() + ": no witness and profiles differ");
        }
    }
    note << "explicit isomorphisms";
}

void criterion_cohomology(std::ostringstream& note) {
    for (PGroup G : {PGroup::abelian(2, {2}), PGroup::abelian(2, {1, 1}), PGroup::abelian(3, {1, 1})}) {
        MinimalResolution R = minimal_resolution(G, 3);
        GModule F1 = free_module(G, 1);
        expect(cohomology_dim(R, F1, 1) == 0, G.name() + ": H^1(G, free) != 0");
        expect(cohomology_dim(R, F1, 2) == 0, G.name() + ": H^2(G, free) != 0");
        GModule W = omega(trivial_module(G), 2);
        size_t h2 = cohomology_dim(R, W, 2);
        expect(h2 == 1, G.name() + ": dim H^2(G, Omega^2) = " + std::to_string(h2));
        CohomologyChain chain = cohomology_chain_check(G);
        expect(chain.all_one, G.name() + ": dimension-shift chain broken");
        // Independent route: the normalized bar complex.
        expect(bar_h2(G, W, false).dim == h2, G.name() + ": bar route disagrees on Omega^2");
        expect(bar_h2(G, F1, false).dim == 0, G.name() + ": bar route disagrees on free");
    }
    note << "resolution and bar routes agree";
}

void criterion_extensions(std::ostringstream& note) {
    PGroup G = PGroup::abelian(2, {1, 1});
    GModule W = omega(trivial_module(G), 2);
    ExtensionGroup split = extension_group(G, W, zero_cochain(G, W), "split");
    expect(split.group.order() == 128, "split extension: wrong order");
    expect(split.group.min_generators() == 5,
           "split extension: d = " + std::to_string(split.group.min_generators()));
    BarH2 bar = bar_h2(G, W);
    expect(bar.dim == 1, "H^2(G, Omega^2) basis size off");
    ExtensionGroup nonsplit = extension_group(G, W, bar.reps[0], "nonsplit");
    expect(nonsplit.group.order() == 128, "nonsplit extension: wrong order");
    expect(nonsplit.group.min_generators() == 2,
           "nonsplit extension: d = " + std::to_string(nonsplit.group.min_generators()));
    note << "d = 5 split, d = 2 nonsplit";
}

void criterion_property_suite(std::ostringstream& note) {
    std::mt19937_64 rng(0x5eed);
    size_t trials = 0;
    for (PGroup G : {PGroup::abelian(2, {1, 1}), PGroup::abelian(3, {1, 1}), PGroup::abelian(2, {2})}) {
        PrimeField f = G.field();
        GModule R = regular_module(G);
        GModule F2 = free_module(G, 2);

        // Exclusion lemma, both directions, on random cyclic submodules of F[G]^2.
        for (int t = 0; t < 200; ++t) {
            Submodule U = submodule_generated(F2, {random_vec(f, F2.dim(), rng)});
            Submodule V = submodule_generated(F2, {random_vec(f, F2.dim(), rng)});
            bool whole_zero =
                U.dim() == 0 || V.dim() == 0 ||
                rank_of(FpMatrix::vstack(U.basis, V.basis)) == U.dim() + V.dim();
            FpMatrix uf = fixed_submodule(U.module).basis * U.basis;
            FpMatrix vf = fixed_submodule(V.module).basis * V.basis;
            bool fixed_zero = intersect_row_spaces(uf, vf).rows() == 0;
            expect(whole_zero == fixed_zero, G.name() + ": exclusion lemma failed");
            ++trials;
        }

        // Fixed submodule of a free module: one dimension per free summand.
        std::uniform_int_distribution<size_t> rk(1, 3);
        for (int t = 0; t < 200; ++t) {
            size_t r = rk(rng);
            expect(fixed_submodule(free_module(G, r)).dim() == r,
                   G.name() + ": fixed dim of free rank " + std::to_string(r));
            ++trials;
        }

        // Norm element lies in every nonzero cyclic submodule of F[G].
        RowSpan norm_line(f, R.dim());
        norm_line.add(FpVec(R.dim(), 1));
        for (int t = 0; t < 200;) {
            FpVec seed = random_vec(f, R.dim(), rng);
            Submodule S = submodule_generated(R, {seed});
            if (S.dim() == 0) continue;
            RowSpan span(f, R.dim());
            span.add_rows(S.basis);
            expect(span.contains(FpVec(R.dim(), 1)), G.name() + ": norm escaped a cyclic submodule");
            ++t;
            ++trials;
        }
    }
    note << trials << " trials, zero failures";
}

void criterion_indecomposable(std::ostringstream& note) {
    size_t certified = 0;
    for (PGroup G : {PGroup::abelian(2, {1, 1}), PGroup::abelian(3, {1, 1})}) {
        GModule T = trivial_module(G);
        for (int n : {1, 2, -1, -2}) {
            DecompositionReport rep = indecomposable(omega(T, n));
            expect(rep.certificate == DecompCertificate::indecomposable_certified,
                   G.name() + ": Omega^" + std::to_string(n) + " not certified");
            ++certified;
        }
    }
    note << certified << " certificates, all exhaustive";
}

void criterion_artin_schreier(std::ostringstream& note) {
    for (auto [p, m] : {std::pair{2u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 1u}}) {
        std::string tag = "(" + std::to_string(p) + "," + std::to_string(m) + ")";
        ConcreteDecomposition rep = verify_decomposition_concrete(p, m);
        expect(rep.dim_jk == 1, tag + ": dim J(K) != 1");
        expect(rep.f_classes_dim == 0, tag + ": [F] classes survive");
        expect(rep.iso.is_iso(), tag + ": J(K) not matched to Omega^-2");
        expect(rep.holds, tag + ": decomposition bookkeeping failed");

        ASTower t = build_tower(p, m);
        PrimeField f(p);
        size_t valid = 0;
        for (uint64_t i = 0; i < t.K.q(); ++i) {
            FpVec a = t.K.element(i);
            uint32_t tr = t.K.absolute_trace(a);
            if (tr == 0) continue;
            ++valid;
            for (uint32_t e = 0; e < p; ++e)
                expect(trace_check(t, a, t.K.from_base(e)),
                       tag + ": trace formula failed at a-index " + std::to_string(i));
            for (uint64_t power = 0; power < p; ++power)
                expect(pairing(t, a, power) == f.reduce_u64(power * tr),
                       tag + ": pairing value off");
            expect(pairing(t, a, 1) != 0, tag + ": pairing degenerate");
        }
        expect(valid == t.K.q() - t.K.q() / p, tag + ": wrong number of valid coefficients");
    }
    note << "towers (2,1) (2,2) (2,3) (3,1), full sweeps";
}

void criterion_bookkeeping(std::ostringstream& note) {
    size_t cases = 0;
    for (const PGroup& G : standard_set()) {
        GModule X = omega(trivial_module(G), -2);
        expect(!has_free_summand(X), G.name() + ": Omega^-2 has a free summand");
        size_t d = G.min_generators();
        for (size_t n = d; n <= d + 3; ++n) {
            DecompositionBookkeeping b = verify_decomposition(G, n);
            expect(b.consistent, G.name() + " n=" + std::to_string(n) + ": dimensions off");
            expect(b.holds, G.name() + " n=" + std::to_string(n) + ": bookkeeping failed");
            ++cases;
        }
    }
    note << cases << " (G, n) pairs";
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "Omega^2 dimension formula on the standard set", 10.0, criterion_dimension_formula},
        {2, "explicit presentation over C_p x C_p, p in {2,3,5}", 30.0, criterion_presentation},
        {3, "boundary-map and cover routes to Omega^2 agree", 0.0, criterion_boundary_agreement},
        {4, "cohomology of free modules, Omega^2, and the shift chain", 60.0, criterion_cohomology},
        {5, "split and nonsplit extension generator counts", 60.0, criterion_extensions},
        {6, "exclusion lemma, fixed-of-free, norm membership property suite", 0.0,
         criterion_property_suite},
        {7, "indecomposability certificates for Omega^{+-1,+-2}", 0.0, criterion_indecomposable},
        {8, "Artin-Schreier towers end-to-end", 30.0, criterion_artin_schreier},
        {9, "decomposition bookkeeping across the standard set", 0.0, criterion_bookkeeping},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::ostringstream note;
        std::string verdict = "PASS";
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(note);
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (verdict == "PASS" && c.budget_seconds > 0 && secs > c.budget_seconds) {
            verdict = "FAIL";
            detail = "over budget of " + std::to_string(c.budget_seconds) + " s";
        }
        if (verdict == "FAIL") ++failures;
        std::printf("[%s] %d. %s (%.2f s)%s%s%s%s\n", verdict.c_str(), c.id, c.name.c_str(), secs,
                    note.str().empty() ? "" : " -- ", note.str().c_str(),
                    detail.empty() ? "" : ": ", detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
