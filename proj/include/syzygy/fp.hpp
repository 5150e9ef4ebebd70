#pragma once

// Exact dense linear algebra over prime fields F_p, p < 2^16.
// Entries are canonical representatives in [0, p) stored row-major.
// All elimination is deterministic: pivots are chosen lowest-index first,
// so every basis this header emits is reproducible bit for bit.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace syzygy {

using FpVec = std::vector<uint32_t>;

class PrimeField {
public:
    explicit PrimeField(uint32_t p) : p_(p) {
        if (p < 2 || p >= (1u << 16) || !is_prime(p))
            throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                        " is not a prime below 2^16");
        magic_ = ~uint64_t{0} / p;  // floor(2^64/p) for odd p; fixup loop covers p = 2
    }

    uint32_t p() const { return p_; }

    // x may be any value below 2^48; result is the canonical representative.
    uint32_t reduce_u64(uint64_t x) const {
        uint64_t q = static_cast<uint64_t>((static_cast<unsigned __int128>(x) * magic_) >> 64);
        uint64_t r = x - q * p_;
        while (r >= p_) r -= p_;
        return static_cast<uint32_t>(r);
    }

    uint32_t reduce(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p_);
        return static_cast<uint32_t>(r < 0 ? r + p_ : r);
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const { return reduce_u64(uint64_t{a} * b); }

    uint32_t pow(uint32_t a, uint64_t e) const {
        uint32_t r = 1;
        uint32_t base = a % p_;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    uint32_t inv(uint32_t a) const {
        if (a % p_ == 0) throw std::domain_error("PrimeField::inv of zero");
        return pow(a, p_ - 2);
    }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }
    friend bool operator!=(const PrimeField& a, const PrimeField& b) { return a.p_ != b.p_; }

    static bool is_prime(uint32_t n) {
        if (n < 2) return false;
        for (uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    uint32_t p_;
    uint64_t magic_;
};

class FpMatrix {
public:
    // Empty placeholder; every real matrix carries its field explicitly.
    FpMatrix() : f_(2), rows_(0), cols_(0) {}

    FpMatrix(PrimeField f, size_t rows, size_t cols)
        : f_(f), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static FpMatrix identity(PrimeField f, size_t n) {
        FpMatrix m(f, n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static FpMatrix from_rows(PrimeField f, const std::vector<std::vector<int64_t>>& rows) {
        size_t r = rows.size();
        size_t c = r == 0 ? 0 : rows[0].size();
        FpMatrix m(f, r, c);
        for (size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("FpMatrix: ragged rows");
            for (size_t j = 0; j < c; ++j) m(i, j) = f.reduce(rows[i][j]);
        }
        return m;
    }

    static FpMatrix from_row_vectors(PrimeField f, const std::vector<FpVec>& rows, size_t cols) {
        FpMatrix m(f, rows.size(), cols);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("FpMatrix: ragged rows");
            for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j] % f.p();
        }
        return m;
    }

    const PrimeField& field() const { return f_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t operator()(size_t r, size_t c) const { return e_[r * cols_ + c]; }
    uint32_t& operator()(size_t r, size_t c) { return e_[r * cols_ + c]; }

    std::span<const uint32_t> row(size_t r) const { return {e_.data() + r * cols_, cols_}; }
    std::span<uint32_t> row(size_t r) { return {e_.data() + r * cols_, cols_}; }

    FpVec row_vec(size_t r) const { return FpVec(row(r).begin(), row(r).end()); }

    void set_row(size_t r, const FpVec& v) {
        if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
        for (size_t j = 0; j < cols_; ++j) e_[r * cols_ + j] = v[j] % f_.p();
    }

    bool is_zero() const {
        for (uint32_t x : e_)
            if (x) return false;
        return true;
    }

    friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
        return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    FpMatrix transpose() const {
        FpMatrix t(f_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    FpMatrix operator+(const FpMatrix& o) const {
        check_same_shape(o);
        FpMatrix r(f_, rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = f_.add(e_[k], o.e_[k]);
        return r;
    }

    FpMatrix operator-(const FpMatrix& o) const {
        check_same_shape(o);
        FpMatrix r(f_, rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = f_.sub(e_[k], o.e_[k]);
        return r;
    }

    FpMatrix scaled(uint32_t c) const {
        FpMatrix r(f_, rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = f_.mul(e_[k], c);
        return r;
    }

    FpMatrix operator*(const FpMatrix& o) const {
        if (f_ != o.f_) throw std::invalid_argument("FpMatrix::mul: field mismatch");
        if (cols_ != o.rows_) throw std::invalid_argument("FpMatrix::mul: shape mismatch");
        FpMatrix r(f_, rows_, o.cols_);
        if (f_.p() == 2 && o.cols_ >= 64) {
            mul_packed2(o, r);
            return r;
        }
        // Accumulate a whole output row at a time so the inner loop walks
        // contiguous memory in both operands.
        std::vector<uint64_t> acc(o.cols_);
        for (size_t i = 0; i < rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (size_t k = 0; k < cols_; ++k) {
                uint64_t a = (*this)(i, k);
                if (!a) continue;
                const uint32_t* brow = o.e_.data() + k * o.cols_;
                for (size_t j = 0; j < o.cols_; ++j) acc[j] += a * brow[j];
                // (p-1)^2 < 2^32 per product and cols < 2^16 keeps acc below 2^48
                if ((k & 0x3fff) == 0x3fff)
                    for (auto& x : acc) x = f_.reduce_u64(x);
            }
            for (size_t j = 0; j < o.cols_; ++j) r(i, j) = f_.reduce_u64(acc[j]);
        }
        return r;
    }

    FpVec apply(const FpVec& v) const {
        if (v.size() != cols_) throw std::invalid_argument("FpMatrix::apply: length mismatch");
        FpVec out(rows_, 0);
        for (size_t i = 0; i < rows_; ++i) {
            uint64_t acc = 0;
            const uint32_t* r = e_.data() + i * cols_;
            for (size_t j = 0; j < cols_; ++j) acc += uint64_t{r[j]} * v[j];
            out[i] = f_.reduce_u64(acc);
        }
        return out;
    }

    FpMatrix pow(uint64_t e) const {
        if (rows_ != cols_) throw std::invalid_argument("FpMatrix::pow: not square");
        FpMatrix acc = identity(f_, rows_);
        FpMatrix base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    static FpMatrix vstack(const FpMatrix& a, const FpMatrix& b) {
        if (a.f_ != b.f_ || a.cols_ != b.cols_) throw std::invalid_argument("vstack: mismatch");
        FpMatrix r(a.f_, a.rows_ + b.rows_, a.cols_);
        std::copy(a.e_.begin(), a.e_.end(), r.e_.begin());
        std::copy(b.e_.begin(), b.e_.end(), r.e_.begin() + a.e_.size());
        return r;
    }

    static FpMatrix hstack(const FpMatrix& a, const FpMatrix& b) {
        if (a.f_ != b.f_ || a.rows_ != b.rows_) throw std::invalid_argument("hstack: mismatch");
        FpMatrix r(a.f_, a.rows_, a.cols_ + b.cols_);
        for (size_t i = 0; i < a.rows_; ++i) {
            std::copy(a.row(i).begin(), a.row(i).end(), r.row(i).begin());
            std::copy(b.row(i).begin(), b.row(i).end(), r.row(i).begin() + a.cols_);
        }
        return r;
    }

    FpMatrix rows_subset(const std::vector<size_t>& idx) const {
        FpMatrix r(f_, idx.size(), cols_);
        for (size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] >= rows_) throw std::out_of_range("rows_subset");
            std::copy(row(idx[i]).begin(), row(idx[i]).end(), r.row(i).begin());
        }
        return r;
    }

    FpMatrix cols_subset(const std::vector<size_t>& idx) const {
        FpMatrix r(f_, rows_, idx.size());
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < idx.size(); ++j) {
                if (idx[j] >= cols_) throw std::out_of_range("cols_subset");
                r(i, j) = (*this)(i, idx[j]);
            }
        return r;
    }

private:
    void check_same_shape(const FpMatrix& o) const {
        if (f_ != o.f_ || rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("FpMatrix: shape or field mismatch");
    }

    // GF(2) product via word-packed rows of the right factor.
    void mul_packed2(const FpMatrix& o, FpMatrix& r) const {
        size_t words = (o.cols_ + 63) / 64;
        std::vector<uint64_t> packed(o.rows_ * words, 0);
        for (size_t k = 0; k < o.rows_; ++k)
            for (size_t j = 0; j < o.cols_; ++j)
                if (o(k, j)) packed[k * words + j / 64] |= uint64_t{1} << (j % 64);
        std::vector<uint64_t> acc(words);
        for (size_t i = 0; i < rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (size_t k = 0; k < cols_; ++k)
                if ((*this)(i, k)) {
                    const uint64_t* src = packed.data() + k * words;
                    for (size_t w = 0; w < words; ++w) acc[w] ^= src[w];
                }
            for (size_t j = 0; j < o.cols_; ++j) r(i, j) = (acc[j / 64] >> (j % 64)) & 1;
        }
    }

    PrimeField f_;
    size_t rows_, cols_;
    std::vector<uint32_t> e_;

    friend struct detail_rref_access;
};

struct RrefResult {
    FpMatrix reduced;
    std::vector<size_t> pivot_cols;
    size_t rank = 0;
};

namespace detail {

// In-place reduced row echelon form; returns pivot columns.
// Scans columns left to right and picks the lowest-index usable row.
inline std::vector<size_t> rref_generic(FpMatrix& m) {
    const PrimeField& f = m.field();
    const uint32_t p = f.p();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t sel = r;
        while (sel < m.rows() && m(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (size_t j = c; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
        uint32_t piv = m(r, c);
        if (piv != 1) {
            uint32_t s = f.inv(piv);
            for (size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), s);
        }
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            uint32_t factor = m(i, c);
            if (!factor) continue;
            uint64_t nf = p - factor;
            uint32_t* dst = &m(i, 0);
            const uint32_t* src = &m(r, 0);
            for (size_t j = c; j < m.cols(); ++j)
                dst[j] = f.reduce_u64(dst[j] + nf * src[j]);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Same contract as rref_generic, specialised to GF(2) with rows packed
// into 64-bit words so a row operation is a word-wise XOR.
inline std::vector<size_t> rref_packed2(FpMatrix& m) {
    size_t rows = m.rows(), cols = m.cols();
    size_t words = (cols + 63) / 64;
    std::vector<uint64_t> bits(rows * words, 0);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (m(i, j)) bits[i * words + j / 64] |= uint64_t{1} << (j % 64);
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t w = c / 64;
        uint64_t mask = uint64_t{1} << (c % 64);
        size_t sel = r;
        while (sel < rows && !(bits[sel * words + w] & mask)) ++sel;
        if (sel == rows) continue;
        if (sel != r)
            for (size_t k = 0; k < words; ++k) std::swap(bits[sel * words + k], bits[r * words + k]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            if (bits[i * words + w] & mask) {
                uint64_t* dst = bits.data() + i * words;
                const uint64_t* src = bits.data() + r * words;
                for (size_t k = w; k < words; ++k) dst[k] ^= src[k];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            m(i, j) = (bits[i * words + j / 64] >> (j % 64)) & 1;
    return pivots;
}

}  // namespace detail

inline RrefResult rref(FpMatrix m) {
    std::vector<size_t> pivots = (m.field().p() == 2 && m.cols() >= 64)
                                     ? detail::rref_packed2(m)
                                     : detail::rref_generic(m);
    size_t rank = pivots.size();
    return RrefResult{std::move(m), std::move(pivots), rank};
}

inline size_t rank_of(const FpMatrix& m) {
    // Rank is transpose-invariant; eliminating the orientation with fewer
    // rows keeps the hot loop on long contiguous spans.
    if (m.rows() > 2 * m.cols() && m.rows() > 64) return rref(m.transpose()).rank;
    return rref(m).rank;
}

struct RrefTransform {
    FpMatrix reduced;
    std::vector<size_t> pivot_cols;
    size_t rank = 0;
    FpMatrix transform;  // transform * input == reduced
};

inline RrefTransform rref_with_transform(const FpMatrix& m) {
    FpMatrix aug = FpMatrix::hstack(m, FpMatrix::identity(m.field(), m.rows()));
    // The identity block must not contribute pivots: eliminate manually over
    // the first m.cols() columns only.
    const PrimeField& f = m.field();
    const uint32_t p = f.p();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < aug.rows(); ++c) {
        size_t sel = r;
        while (sel < aug.rows() && aug(sel, c) == 0) ++sel;
        if (sel == aug.rows()) continue;
        if (sel != r)
            for (size_t j = 0; j < aug.cols(); ++j) std::swap(aug(sel, j), aug(r, j));
        uint32_t piv = aug(r, c);
        if (piv != 1) {
            uint32_t s = f.inv(piv);
            for (size_t j = 0; j < aug.cols(); ++j) aug(r, j) = f.mul(aug(r, j), s);
        }
        for (size_t i = 0; i < aug.rows(); ++i) {
            if (i == r) continue;
            uint32_t factor = aug(i, c);
            if (!factor) continue;
            uint64_t nf = p - factor;
            for (size_t j = 0; j < aug.cols(); ++j)
                aug(i, j) = f.reduce_u64(aug(i, j) + nf * aug(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    RrefTransform out{FpMatrix(f, m.rows(), m.cols()), pivots, pivots.size(),
                      FpMatrix(f, m.rows(), m.rows())};
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out.reduced(i, j) = aug(i, j);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.rows(); ++j) out.transform(i, j) = aug(i, m.cols() + j);
    return out;
}

// Rows form a basis of {x : m x = 0}, one row per free column of m,
// emitted in increasing free-column order.
inline FpMatrix kernel_basis(const FpMatrix& m) {
    RrefResult rr = rref(m);
    const PrimeField& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : rr.pivot_cols) is_pivot[c] = true;
    FpMatrix out(f, m.cols() - rr.rank, m.cols());
    size_t k = 0;
    for (size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        out(k, c) = 1;
        for (size_t i = 0; i < rr.rank; ++i)
            out(k, rr.pivot_cols[i]) = f.neg(rr.reduced(i, c));
        ++k;
    }
    return out;
}

// Least-index solution of m x = b, if any.
inline std::optional<FpVec> solve(const FpMatrix& m, const FpVec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    FpMatrix rhs(m.field(), m.rows(), 1);
    for (size_t i = 0; i < m.rows(); ++i) rhs(i, 0) = b[i] % m.field().p();
    RrefResult rr = rref(FpMatrix::hstack(m, rhs));
    for (size_t c : rr.pivot_cols)
        if (c == m.cols()) return std::nullopt;
    FpVec x(m.cols(), 0);
    for (size_t i = 0; i < rr.pivot_cols.size(); ++i) x[rr.pivot_cols[i]] = rr.reduced(i, m.cols());
    return x;
}

inline std::optional<FpMatrix> invert(const FpMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("invert: not square");
    RrefResult rr = rref(FpMatrix::hstack(m, FpMatrix::identity(m.field(), m.rows())));
    if (rr.rank < m.rows()) return std::nullopt;
    for (size_t i = 0; i < m.rows(); ++i)
        if (rr.pivot_cols[i] != i) return std::nullopt;
    FpMatrix inv(m.field(), m.rows(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.rows(); ++j) inv(i, j) = rr.reduced(i, m.cols() + j);
    return inv;
}

// Incrementally maintained row space kept in reduced echelon form.
class RowSpan {
public:
    RowSpan(PrimeField f, size_t cols) : f_(f), cols_(cols) {}

    explicit RowSpan(const FpMatrix& rows) : f_(rows.field()), cols_(rows.cols()) {
        add_rows(rows);
    }

    size_t cols() const { return cols_; }
    size_t rank() const { return rows_.size(); }

    // Reduces v against the current basis; inserts the remainder if nonzero.
    bool add(FpVec v) {
        reduce_inplace(v);
        size_t lead = cols_;
        for (size_t j = 0; j < cols_; ++j)
            if (v[j]) {
                lead = j;
                break;
            }
        if (lead == cols_) return false;
        uint32_t s = f_.inv(v[lead]);
        for (auto& x : v) x = f_.mul(x, s);
        // Back-eliminate the new pivot column from existing rows.
        for (size_t i = 0; i < rows_.size(); ++i) {
            uint32_t c = rows_[i][lead];
            if (!c) continue;
            uint64_t nc = f_.p() - c;
            for (size_t j = 0; j < cols_; ++j)
                rows_[i][j] = f_.reduce_u64(rows_[i][j] + nc * v[j]);
        }
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, lead);
        return true;
    }

    bool add_rows(const FpMatrix& m) {
        if (m.cols() != cols_) throw std::invalid_argument("RowSpan::add_rows: width mismatch");
        bool grew = false;
        for (size_t i = 0; i < m.rows(); ++i) grew = add(m.row_vec(i)) || grew;
        return grew;
    }

    bool contains(FpVec v) const {
        reduce_inplace(v);
        for (uint32_t x : v)
            if (x) return false;
        return true;
    }

    bool contains_rows(const FpMatrix& m) const {
        for (size_t i = 0; i < m.rows(); ++i)
            if (!contains(m.row_vec(i))) return false;
        return true;
    }

    FpMatrix basis() const {
        FpMatrix b(f_, rows_.size(), cols_);
        for (size_t i = 0; i < rows_.size(); ++i) b.set_row(i, rows_[i]);
        return b;
    }

private:
    void reduce_inplace(FpVec& v) const {
        if (v.size() != cols_) throw std::invalid_argument("RowSpan: width mismatch");
        for (size_t i = 0; i < rows_.size(); ++i) {
            uint32_t c = v[pivots_[i]];
            if (!c) continue;
            uint64_t nc = f_.p() - c;
            const FpVec& r = rows_[i];
            for (size_t j = 0; j < cols_; ++j) v[j] = f_.reduce_u64(v[j] + nc * r[j]);
        }
    }

    PrimeField f_;
    size_t cols_;
    std::vector<FpVec> rows_;     // echelon basis rows
    std::vector<size_t> pivots_;  // strictly increasing
};

inline bool same_row_space(const FpMatrix& a, const FpMatrix& b) {
    RowSpan sa(a), sb(b);
    return sa.rank() == sb.rank() && sa.contains_rows(b) && sb.contains_rows(a);
}

// Basis of rowspace(a) ∩ rowspace(b).
inline FpMatrix intersect_row_spaces(const FpMatrix& a, const FpMatrix& b) {
    if (a.field() != b.field() || a.cols() != b.cols())
        throw std::invalid_argument("intersect_row_spaces: mismatch");
    const PrimeField& f = a.field();
    // Solve x a = y b: kernel of [a^T | -b^T] gives coefficient pairs.
    FpMatrix stacked = FpMatrix::hstack(a.transpose(), b.transpose().scaled(f.p() - 1));
    FpMatrix ker = kernel_basis(stacked);
    RowSpan span(f, a.cols());
    for (size_t i = 0; i < ker.rows(); ++i) {
        FpVec v(a.cols(), 0);
        for (size_t r = 0; r < a.rows(); ++r) {
            uint32_t c = ker(i, r);
            if (!c) continue;
            for (size_t j = 0; j < a.cols(); ++j) v[j] = f.add(v[j], f.mul(c, a(r, j)));
        }
        span.add(std::move(v));
    }
    return span.basis();
}

}  // namespace syzygy
