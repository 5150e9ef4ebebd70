#pragma once

// Finite p-groups as explicit multiplication tables.
//
// Elements are indices 0..n-1 with 0 the identity. A group carries a
// distinguished minimal generating sequence; every element stores one
// canonical word over that sequence (left-composed, BFS-shortest), so
// module code can derive the action of any element from generator data.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "fp.hpp"

namespace syzygy {

namespace detail {

struct RawTable {
    size_t n = 0;
    std::vector<uint32_t> t;  // flattened n x n
    uint32_t mul(uint32_t a, uint32_t b) const { return t[size_t{a} * n + b]; }
};

inline std::vector<uint32_t> table_inverses(const RawTable& g) {
    std::vector<uint32_t> inv(g.n, uint32_t(-1));
    for (uint32_t a = 0; a < g.n; ++a) {
        for (uint32_t b = 0; b < g.n; ++b)
            if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
                inv[a] = b;
                break;
            }
        if (inv[a] == uint32_t(-1))
            throw std::invalid_argument("group table: element " + std::to_string(a) +
                                        " has no two-sided inverse");
    }
    return inv;
}

inline std::vector<uint32_t> table_closure(const RawTable& g, std::vector<uint32_t> seeds) {
    std::vector<bool> seen(g.n, false);
    seen[0] = true;
    std::vector<uint32_t> out{0};
    std::queue<uint32_t> q;
    q.push(0);
    for (uint32_t s : seeds)
        if (!seen[s]) {
            seen[s] = true;
            out.push_back(s);
            q.push(s);
        }
    while (!q.empty()) {
        uint32_t a = q.front();
        q.pop();
        for (uint32_t s : seeds) {
            uint32_t b = g.mul(a, s);
            if (!seen[b]) {
                seen[b] = true;
                out.push_back(b);
                q.push(b);
            }
            uint32_t c = g.mul(s, a);
            if (!seen[c]) {
                seen[c] = true;
                out.push_back(c);
                q.push(c);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline uint32_t table_element_order(const RawTable& g, uint32_t a) {
    uint32_t x = a, k = 1;
    while (x != 0) {
        x = g.mul(x, a);
        ++k;
        if (k > g.n) throw std::invalid_argument("group table: non-terminating power chain");
    }
    return k;
}

}  // namespace detail

struct FrattiniSubgroup {
    std::vector<uint32_t> elements;  // sorted, contains 0
    size_t rank = 0;                 // log_p of the quotient order
};

class PGroup {
public:
    PGroup() = default;

    static PGroup from_table(uint32_t p, const std::vector<std::vector<uint32_t>>& table,
                             std::vector<uint32_t> generators, std::string name,
                             bool allow_large = false) {
        detail::RawTable raw = flatten(table);
        return build(p, std::move(raw), std::move(generators), std::move(name), allow_large,
                     /*auto_generators=*/false);
    }

    // Chooses a minimal generating sequence via the Frattini quotient.
    static PGroup from_table_auto(uint32_t p, const std::vector<std::vector<uint32_t>>& table,
                                  std::string name, bool allow_large = false) {
        detail::RawTable raw = flatten(table);
        return build(p, std::move(raw), {}, std::move(name), allow_large,
                     /*auto_generators=*/true);
    }

    // Direct product of cyclic groups of order p^e_i, canonical generators
    // one per factor. Index order is mixed-radix with the first factor most
    // significant.
    static PGroup abelian(uint32_t p, const std::vector<uint32_t>& exponents,
                          bool allow_large = false) {
        PrimeField check(p);
        if (exponents.empty()) throw std::invalid_argument("PGroup::abelian: no factors");
        uint64_t order = 1;
        std::vector<uint64_t> radix;
        for (uint32_t e : exponents) {
            if (e == 0 || e > 20) throw std::invalid_argument("PGroup::abelian: bad exponent");
            uint64_t r = 1;
            for (uint32_t i = 0; i < e; ++i) r *= p;
            radix.push_back(r);
            order *= r;
            if (order > (1u << 20)) throw std::invalid_argument("PGroup::abelian: order overflow");
        }
        if (!allow_large && order > (1u << 14))
            throw std::invalid_argument("PGroup::abelian: order exceeds default guard 2^14");
        std::vector<uint64_t> stride(radix.size());
        uint64_t acc = 1;
        for (size_t i = radix.size(); i-- > 0;) {
            stride[i] = acc;
            acc *= radix[i];
        }
        size_t n = static_cast<size_t>(order);
        std::vector<std::vector<uint32_t>> table(n, std::vector<uint32_t>(n));
        std::vector<uint64_t> da(radix.size());
        for (size_t a = 0; a < n; ++a) {
            uint64_t ra = a;
            for (size_t i = 0; i < radix.size(); ++i) {
                da[i] = ra / stride[i];
                ra %= stride[i];
            }
            for (size_t b = 0; b < n; ++b) {
                uint64_t rb = b, out = 0;
                for (size_t i = 0; i < radix.size(); ++i) {
                    uint64_t db = rb / stride[i];
                    rb %= stride[i];
                    out += ((da[i] + db) % radix[i]) * stride[i];
                }
                table[a][b] = static_cast<uint32_t>(out);
            }
        }
        std::vector<uint32_t> gens;
        std::string name;
        for (size_t i = 0; i < radix.size(); ++i) {
            gens.push_back(static_cast<uint32_t>(stride[i]));
            if (i) name += "x";
            name += "C" + std::to_string(radix[i]);
        }
        return from_table(p, table, std::move(gens), std::move(name), allow_large);
    }

    static PGroup trivial(uint32_t p) { return from_table(p, {{0}}, {}, "C1"); }

    uint32_t p() const { return d_->p; }
    PrimeField field() const { return PrimeField(d_->p); }
    size_t order() const { return d_->raw.n; }
    const std::string& name() const { return d_->name; }

    uint32_t mul(uint32_t a, uint32_t b) const { return d_->raw.mul(a, b); }
    uint32_t inverse(uint32_t a) const { return d_->inverses[a]; }

    const std::vector<uint32_t>& generators() const { return d_->generators; }
    const std::vector<std::vector<uint32_t>>& words() const { return d_->words; }
    const std::vector<uint32_t>& word(uint32_t g) const { return d_->words[g]; }

    size_t min_generators() const { return d_->frattini.rank; }
    const FrattiniSubgroup& frattini() const { return d_->frattini; }

    uint32_t element_order(uint32_t g) const { return d_->orders[g]; }

    uint32_t exponent() const {
        uint32_t e = 1;
        for (uint32_t o : d_->orders) e = std::max(e, o);
        return e;
    }

    // order -> multiplicity, ascending
    std::vector<std::pair<uint32_t, size_t>> order_profile() const {
        std::map<uint32_t, size_t> m;
        for (uint32_t o : d_->orders) ++m[o];
        return {m.begin(), m.end()};
    }

    std::vector<uint32_t> subgroup_generated(const std::vector<uint32_t>& seeds) const {
        for (uint32_t s : seeds)
            if (s >= order()) throw std::out_of_range("subgroup_generated: bad element");
        return detail::table_closure(d_->raw, seeds);
    }

    std::vector<std::vector<uint32_t>> table_rows() const {
        std::vector<std::vector<uint32_t>> rows(order(), std::vector<uint32_t>(order()));
        for (size_t a = 0; a < order(); ++a)
            for (size_t b = 0; b < order(); ++b) rows[a][b] = d_->raw.t[a * order() + b];
        return rows;
    }

    // Identity of the underlying object, not isomorphism.
    friend bool operator==(const PGroup& a, const PGroup& b) { return a.d_ == b.d_; }
    friend bool operator!=(const PGroup& a, const PGroup& b) { return a.d_ != b.d_; }

private:
    struct Data {
        uint32_t p = 2;
        detail::RawTable raw;
        std::vector<uint32_t> inverses;
        std::vector<uint32_t> generators;
        std::vector<std::vector<uint32_t>> words;
        std::vector<uint32_t> orders;
        FrattiniSubgroup frattini;
        std::string name;
    };

    static detail::RawTable flatten(const std::vector<std::vector<uint32_t>>& table) {
        detail::RawTable raw;
        raw.n = table.size();
        if (raw.n == 0) throw std::invalid_argument("group table: empty");
        raw.t.reserve(raw.n * raw.n);
        for (const auto& row : table) {
            if (row.size() != raw.n) throw std::invalid_argument("group table: not square");
            for (uint32_t x : row) {
                if (x >= raw.n) throw std::invalid_argument("group table: entry out of range");
                raw.t.push_back(x);
            }
        }
        return raw;
    }

    static PGroup build(uint32_t p, detail::RawTable raw, std::vector<uint32_t> generators,
                        std::string name, bool allow_large, bool auto_generators) {
        PrimeField field(p);
        size_t n = raw.n;
        if (!allow_large && n > (1u << 14))
            throw std::invalid_argument("group table: order exceeds default guard 2^14");

        {
            size_t m = n;
            while (m % p == 0) m /= p;
            if (m != 1)
                throw std::invalid_argument("group table: order " + std::to_string(n) +
                                            " is not a power of " + std::to_string(p));
        }
        for (uint32_t x = 0; x < n; ++x)
            if (raw.mul(0, x) != x || raw.mul(x, 0) != x)
                throw std::invalid_argument("group table: index 0 is not an identity");

        auto d = std::make_shared<Data>();
        d->p = p;
        d->inverses = detail::table_inverses(raw);
        check_associativity(raw);

        d->orders.resize(n);
        for (uint32_t g = 0; g < n; ++g) {
            uint32_t o = detail::table_element_order(raw, g);
            uint32_t q = o;
            while (q % p == 0) q /= p;
            if (q != 1)
                throw std::invalid_argument("group table: element " + std::to_string(g) +
                                            " has order " + std::to_string(o) +
                                            ", not a power of " + std::to_string(p));
            d->orders[g] = o;
        }

        d->frattini = compute_frattini(raw, d->inverses, p);

        if (auto_generators) {
            generators = minimal_generators(raw, d->frattini);
        }
        for (uint32_t g : generators)
            if (g >= n) throw std::invalid_argument("group table: generator out of range");
        if (detail::table_closure(raw, generators).size() != n)
            throw std::invalid_argument("group table: generators do not generate");
        if (generators.size() != d->frattini.rank)
            throw std::invalid_argument("group table: generating sequence of size " +
                                        std::to_string(generators.size()) +
                                        " is not minimal (need " +
                                        std::to_string(d->frattini.rank) + ")");

        d->raw = std::move(raw);
        d->generators = std::move(generators);
        d->words = make_words(d->raw, d->generators);
        d->name = name.empty() ? "G" + std::to_string(n) : std::move(name);

        PGroup g;
        g.d_ = std::move(d);
        return g;
    }

    static void check_associativity(const detail::RawTable& g) {
        size_t n = g.n;
        if (n <= 512) {
            for (uint32_t a = 0; a < n; ++a)
                for (uint32_t b = 0; b < n; ++b) {
                    uint32_t ab = g.mul(a, b);
                    for (uint32_t c = 0; c < n; ++c)
                        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
                            throw std::invalid_argument("group table: not associative");
                }
            return;
        }
        std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ n);
        for (int k = 0; k < 4096; ++k) {
            uint32_t a = static_cast<uint32_t>(rng() % n);
            uint32_t b = static_cast<uint32_t>(rng() % n);
            uint32_t c = static_cast<uint32_t>(rng() % n);
            if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                throw std::invalid_argument("group table: not associative (sampled)");
        }
    }

    // Frattini subgroup = closure of all p-th powers and all commutators.
    static FrattiniSubgroup compute_frattini(const detail::RawTable& g,
                                             const std::vector<uint32_t>& inv, uint32_t p) {
        std::vector<uint32_t> seeds;
        for (uint32_t a = 0; a < g.n; ++a) {
            uint32_t x = a;
            for (uint32_t i = 1; i < p; ++i) x = g.mul(x, a);
            seeds.push_back(x);
        }
        for (uint32_t a = 0; a < g.n; ++a)
            for (uint32_t b = 0; b < g.n; ++b)
                seeds.push_back(g.mul(g.mul(inv[a], inv[b]), g.mul(a, b)));
        std::sort(seeds.begin(), seeds.end());
        seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
        FrattiniSubgroup f;
        f.elements = detail::table_closure(g, seeds);
        size_t index = g.n / f.elements.size();
        size_t rank = 0;
        while (index > 1) {
            if (index % p != 0)
                throw std::logic_error("frattini: quotient order is not a p-power");
            index /= p;
            ++rank;
        }
        f.rank = rank;
        return f;
    }

    // Greedy coset expansion: any lift of a basis of G/Phi(G) generates G.
    static std::vector<uint32_t> minimal_generators(const detail::RawTable& g,
                                                    const FrattiniSubgroup& phi) {
        std::vector<uint32_t> picked;
        std::vector<uint32_t> span = phi.elements;
        std::vector<bool> in_span(g.n, false);
        for (uint32_t x : span) in_span[x] = true;
        while (picked.size() < phi.rank) {
            uint32_t next = uint32_t(-1);
            for (uint32_t cand = 0; cand < g.n; ++cand)
                if (!in_span[cand]) {
                    next = cand;
                    break;
                }
            if (next == uint32_t(-1)) throw std::logic_error("frattini: rank inconsistent");
            picked.push_back(next);
            std::vector<uint32_t> seeds = phi.elements;
            seeds.insert(seeds.end(), picked.begin(), picked.end());
            span = detail::table_closure(g, seeds);
            std::fill(in_span.begin(), in_span.end(), false);
            for (uint32_t x : span) in_span[x] = true;
        }
        return picked;
    }

    // BFS-shortest words; element discovered as generator * known gets the
    // generator prepended, so folding the table over a word left to right
    // reproduces the element.
    static std::vector<std::vector<uint32_t>> make_words(const detail::RawTable& g,
                                                         const std::vector<uint32_t>& gens) {
        std::vector<std::vector<uint32_t>> words(g.n);
        std::vector<bool> seen(g.n, false);
        seen[0] = true;
        std::queue<uint32_t> q;
        q.push(0);
        while (!q.empty()) {
            uint32_t cur = q.front();
            q.pop();
            for (size_t i = 0; i < gens.size(); ++i) {
                uint32_t nxt = g.mul(gens[i], cur);
                if (seen[nxt]) continue;
                seen[nxt] = true;
                words[nxt].reserve(words[cur].size() + 1);
                words[nxt].push_back(static_cast<uint32_t>(i));
                words[nxt].insert(words[nxt].end(), words[cur].begin(), words[cur].end());
                q.push(nxt);
            }
        }
        for (size_t x = 0; x < g.n; ++x)
            if (!seen[x]) throw std::logic_error("make_words: generators do not reach element");
        return words;
    }

    std::shared_ptr<const Data> d_;
};

// "C4", "C2xC2", "C3xC9": direct products of cyclic p-groups, one shared
// prime, case-insensitive.
inline PGroup parse_group_spec(const std::string& spec, bool allow_large = false) {
    if (spec.empty()) throw std::invalid_argument("group spec: empty");
    std::vector<uint64_t> factor_orders;
    size_t i = 0;
    while (i < spec.size()) {
        if (spec[i] != 'C' && spec[i] != 'c')
            throw std::invalid_argument("group spec: expected 'C' at position " +
                                        std::to_string(i) + " in '" + spec + "'");
        ++i;
        size_t start = i;
        uint64_t v = 0;
        while (i < spec.size() && spec[i] >= '0' && spec[i] <= '9') {
            v = v * 10 + (spec[i] - '0');
            if (v > (1u << 20)) throw std::invalid_argument("group spec: factor too large");
            ++i;
        }
        if (i == start || v < 2) throw std::invalid_argument("group spec: bad cyclic order");
        factor_orders.push_back(v);
        if (i == spec.size()) break;
        if (spec[i] != 'x' && spec[i] != 'X')
            throw std::invalid_argument("group spec: expected 'x' separator in '" + spec + "'");
        ++i;
        if (i == spec.size()) throw std::invalid_argument("group spec: trailing separator");
    }
    uint64_t p = 0;
    std::vector<uint32_t> exponents;
    for (uint64_t n : factor_orders) {
        uint64_t q = 2;
        while (q <= n && n % q != 0) ++q;
        if (p == 0) p = q;
        if (q != p)
            throw std::invalid_argument("group spec: factors do not share one prime");
        uint32_t e = 0;
        uint64_t m = n;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (m != 1)
            throw std::invalid_argument("group spec: factor " + std::to_string(n) +
                                        " is not a power of " + std::to_string(p));
        exponents.push_back(e);
    }
    return PGroup::abelian(static_cast<uint32_t>(p), exponents, allow_large);
}

}  // namespace syzygy
