#include "berman/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace berman::gf2 {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

void check_index(std::size_t i, std::size_t len) {
    if (i >= len) throw std::out_of_range("bit index out of range");
}
}  // namespace

BitVector::BitVector(std::size_t length) : len_(length), w_(words_for(length), 0) {}

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) v.set(i++, b != 0);
    return v;
}

BitVector BitVector::from_string(std::string_view s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("bitstring must contain only 0 and 1");
    }
    return v;
}

bool BitVector::get(std::size_t i) const {
    check_index(i, len_);
    return (w_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVector::set(std::size_t i, bool value) {
    check_index(i, len_);
    std::uint64_t mask = std::uint64_t(1) << (i % kWordBits);
    if (value)
        w_[i / kWordBits] |= mask;
    else
        w_[i / kWordBits] &= ~mask;
}

void BitVector::flip(std::size_t i) {
    check_index(i, len_);
    w_[i / kWordBits] ^= std::uint64_t(1) << (i % kWordBits);
}

std::size_t BitVector::weight() const {
    std::size_t total = 0;
    for (std::uint64_t word : w_) total += std::popcount(word);
    return total;
}

std::size_t BitVector::distance(const BitVector& other) const {
    if (len_ != other.len_) throw std::invalid_argument("length mismatch in distance");
    std::size_t total = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) total += std::popcount(w_[k] ^ other.w_[k]);
    return total;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (len_ != other.len_) throw std::invalid_argument("length mismatch in xor");
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= other.w_[k];
    return *this;
}

BitVector BitVector::slice(std::size_t begin, std::size_t length) const {
    if (begin + length > len_) throw std::out_of_range("slice out of range");
    BitVector out(length);
    std::size_t shift = begin % kWordBits;
    std::size_t base = begin / kWordBits;
    for (std::size_t k = 0; k < out.w_.size(); ++k) {
        std::uint64_t lo = w_[base + k] >> shift;
        std::uint64_t hi = 0;
        if (shift != 0 && base + k + 1 < w_.size()) hi = w_[base + k + 1] << (kWordBits - shift);
        out.w_[k] = lo | hi;
    }
    if (length % kWordBits != 0) out.w_.back() &= (std::uint64_t(1) << (length % kWordBits)) - 1;
    return out;
}

void BitVector::splice(std::size_t begin, const BitVector& v) {
    if (begin + v.len_ > len_) throw std::out_of_range("splice out of range");
    for (std::size_t i = 0; i < v.len_; ++i) set(begin + i, v.get(i));
}

bool BitVector::lex_less(const BitVector& other) const {
    if (len_ != other.len_) throw std::invalid_argument("length mismatch in lex_less");
    for (std::size_t k = 0; k < w_.size(); ++k) {
        std::uint64_t diff = w_[k] ^ other.w_[k];
        if (diff != 0) {
            std::size_t bit = std::countr_zero(diff);
            // 0 sorts before 1 at the first differing position.
            return ((other.w_[k] >> bit) & 1u) != 0;
        }
    }
    return false;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)), w_(rows * words_for(cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows) {
    if (rows.empty()) return BitMatrix();
    BitMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    check_index(r, rows_);
    check_index(c, cols_);
    return (w_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    check_index(r, rows_);
    check_index(c, cols_);
    std::uint64_t mask = std::uint64_t(1) << (c % kWordBits);
    if (value)
        w_[r * wpr_ + c / kWordBits] |= mask;
    else
        w_[r * wpr_ + c / kWordBits] &= ~mask;
}

BitVector BitMatrix::row(std::size_t r) const {
    check_index(r, rows_);
    BitVector v(cols_);
    for (std::size_t k = 0; k < wpr_; ++k) v.words()[k] = w_[r * wpr_ + k];
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    check_index(r, rows_);
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    for (std::size_t k = 0; k < wpr_; ++k) w_[r * wpr_ + k] = v.words()[k];
}

void BitMatrix::append_row(const BitVector& v) {
    if (rows_ == 0 && cols_ == 0) {
        cols_ = v.size();
        wpr_ = words_for(cols_);
    }
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    w_.resize((rows_ + 1) * wpr_, 0);
    ++rows_;
    set_row(rows_ - 1, v);
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    check_index(dst, rows_);
    check_index(src, rows_);
    std::uint64_t* d = w_.data() + dst * wpr_;
    const std::uint64_t* s = w_.data() + src * wpr_;
    for (std::size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::uint64_t* pa = w_.data() + a * wpr_;
    std::uint64_t* pb = w_.data() + b * wpr_;
    for (std::size_t k = 0; k < wpr_; ++k) std::swap(pa[k], pb[k]);
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < wpr_; ++k) {
            std::uint64_t word = w_[r * wpr_ + k];
            while (word != 0) {
                std::size_t bit = std::countr_zero(word);
                word &= word - 1;
                t.set(k * kWordBits + bit, r, true);
            }
        }
    return t;
}

BitVector BitMatrix::mul_left(const BitVector& x) const {
    if (x.size() != rows_) throw std::invalid_argument("dimension mismatch in mul_left");
    BitVector out(cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (!x.get(r)) continue;
        const std::uint64_t* src = row_data(r);
        for (std::size_t k = 0; k < wpr_; ++k) out.words()[k] ^= src[k];
    }
    return out;
}

BitVector BitMatrix::mul_right(const BitVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in mul_right");
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        const std::uint64_t* src = row_data(r);
        for (std::size_t k = 0; k < wpr_; ++k) acc ^= src[k] & v.words()[k];
        out.set(r, (std::popcount(acc) & 1) != 0);
    }
    return out;
}

BitMatrix BitMatrix::mul_transpose(const BitMatrix& other) const {
    if (cols_ != other.cols_) throw std::invalid_argument("dimension mismatch in mul_transpose");
    BitMatrix out(rows_, other.rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* a = row_data(r);
        for (std::size_t s = 0; s < other.rows_; ++s) {
            const std::uint64_t* b = other.row_data(s);
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < wpr_; ++k) acc ^= a[k] & b[k];
            out.set(r, s, (std::popcount(acc) & 1) != 0);
        }
    }
    return out;
}

bool BitMatrix::is_orthogonal_to(const BitMatrix& other) const {
    if (cols_ != other.cols_) throw std::invalid_argument("dimension mismatch in is_orthogonal_to");
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* a = row_data(r);
        for (std::size_t s = 0; s < other.rows_; ++s) {
            const std::uint64_t* b = other.row_data(s);
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < wpr_; ++k) acc ^= a[k] & b[k];
            if (std::popcount(acc) & 1) return false;
        }
    }
    return true;
}

BitMatrix BitMatrix::restrict_columns(const std::vector<std::size_t>& keep) const {
    BitMatrix out(rows_, keep.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < keep.size(); ++c)
            if (get(r, keep[c])) out.set(r, c, true);
    return out;
}

BitMatrix BitMatrix::stacked(const BitMatrix& below) const {
    if (rows_ == 0) return below;
    if (below.rows_ == 0) return *this;
    if (cols_ != below.cols_) throw std::invalid_argument("dimension mismatch in stacked");
    BitMatrix out(rows_ + below.rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < wpr_; ++k) out.w_[r * wpr_ + k] = w_[r * wpr_ + k];
    for (std::size_t r = 0; r < below.rows_; ++r)
        for (std::size_t k = 0; k < wpr_; ++k)
            out.w_[(rows_ + r) * wpr_ + k] = below.w_[r * wpr_ + k];
    return out;
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
    check_index(r, rows_);
    std::size_t total = 0;
    for (std::size_t k = 0; k < wpr_; ++k) total += std::popcount(w_[r * wpr_ + k]);
    return total;
}

RrefResult rank_and_rref(const BitMatrix& m) {
    BitMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols(), wpr = a.words_per_row();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t word = col / 64, bit = col % 64;
        std::size_t found = rows;
        for (std::size_t r = pivot_row; r < rows; ++r) {
            if ((a.row_data(r)[word] >> bit) & 1u) {
                found = r;
                break;
            }
        }
        if (found == rows) continue;
        a.swap_rows(pivot_row, found);
        const std::uint64_t* p = a.row_data(pivot_row);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row) continue;
            std::uint64_t* q = a.row_data(r);
            if ((q[word] >> bit) & 1u)
                for (std::size_t k = 0; k < wpr; ++k) q[k] ^= p[k];
        }
        ++pivot_row;
    }
    // Drop trailing zero rows so the normal form only carries the row space.
    BitMatrix reduced(pivot_row, cols);
    for (std::size_t r = 0; r < pivot_row; ++r)
        for (std::size_t k = 0; k < wpr; ++k) reduced.row_data(r)[k] = a.row_data(r)[k];
    return RrefResult{pivot_row, std::move(reduced)};
}

std::size_t rank(const BitMatrix& m) { return rank_and_rref(m).rank; }

BitMatrix null_space(const BitMatrix& m) {
    auto [rk, r] = rank_and_rref(m);
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    pivot_col.reserve(rk);
    for (std::size_t row = 0; row < rk; ++row) {
        std::size_t c = 0;
        while (c < cols && !r.get(row, c)) ++c;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    BitMatrix basis(cols - rk, cols);
    std::size_t out_row = 0;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.set(out_row, free_col, true);
        for (std::size_t row = 0; row < rk; ++row)
            if (r.get(row, free_col)) basis.set(out_row, pivot_col[row], true);
        ++out_row;
    }
    return basis;
}

bool row_space_equal(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("column count mismatch in row_space_equal");
    return rank_and_rref(a).rref == rank_and_rref(b).rref;
}

BitMatrix kronecker_power(const BitMatrix& a, unsigned m) {
    if (m == 0) throw std::invalid_argument("kronecker_power requires m >= 1");
    BitMatrix result = a;
    for (unsigned step = 1; step < m; ++step) {
        // result = a ⊗ result: the new factor supplies the most
        // significant digit, matching colexicographic tuple indexing.
        BitMatrix next(a.rows() * result.rows(), a.cols() * result.cols());
        for (std::size_t br = 0; br < a.rows(); ++br)
            for (std::size_t bc = 0; bc < a.cols(); ++bc) {
                if (!a.get(br, bc)) continue;
                for (std::size_t r = 0; r < result.rows(); ++r)
                    for (std::size_t c = 0; c < result.cols(); ++c)
                        if (result.get(r, c))
                            next.set(br * result.rows() + r, bc * result.cols() + c, true);
            }
        result = std::move(next);
    }
    return result;
}

}  // namespace berman::gf2
