#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace berman::gf2 {

/// Dense bit-packed vector over GF(2). Storage is little-endian within
/// 64-bit words: bit i lives in word i/64 at position i%64.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length);
    static BitVector from_bits(std::initializer_list<int> bits);
    static BitVector from_string(std::string_view s);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    void flip(std::size_t i);

    std::size_t weight() const;
    bool is_zero() const { return weight() == 0; }
    std::size_t distance(const BitVector& other) const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }
    bool operator==(const BitVector&) const = default;

    /// Copy of bits [begin, begin+length).
    BitVector slice(std::size_t begin, std::size_t length) const;
    /// Overwrite bits [begin, begin+v.size()) with v.
    void splice(std::size_t begin, const BitVector& v);

    /// Compare reading bits from position 0 onwards; used for
    /// deterministic tie-breaking.
    bool lex_less(const BitVector& other) const;

    std::string to_string() const;

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Dense bit-packed matrix over GF(2), row-major.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);
    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<BitVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);
    void append_row(const BitVector& v);
    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    BitMatrix transpose() const;

    /// x * M, with x of length rows(); result has length cols().
    BitVector mul_left(const BitVector& x) const;
    /// M * v^T, with v of length cols(); result has length rows().
    BitVector mul_right(const BitVector& v) const;
    /// M * other^T; requires cols() == other.cols().
    BitMatrix mul_transpose(const BitMatrix& other) const;
    bool is_orthogonal_to(const BitMatrix& other) const;

    BitMatrix restrict_columns(const std::vector<std::size_t>& keep) const;
    BitMatrix stacked(const BitMatrix& below) const;

    bool operator==(const BitMatrix&) const = default;

    std::size_t row_weight(std::size_t r) const;
    std::size_t words_per_row() const { return wpr_; }
    const std::uint64_t* row_data(std::size_t r) const { return w_.data() + r * wpr_; }
    std::uint64_t* row_data(std::size_t r) { return w_.data() + r * wpr_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

struct RrefResult {
    std::size_t rank;
    BitMatrix rref;
};

/// Reduced row-echelon form over GF(2). Pivots are chosen leftmost-first,
/// topmost available row, so the output is a normal form of the row space.
RrefResult rank_and_rref(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);

/// Basis (as rows) of {x : m x^T = 0}; row count is cols - rank.
BitMatrix null_space(const BitMatrix& m);

/// True iff the two matrices span the same row space. Requires equal
/// column counts.
bool row_space_equal(const BitMatrix& a, const BitMatrix& b);

/// m-fold Kronecker power a ⊗ ... ⊗ a. Row/column index digits are read
/// in colexicographic order: digit k of the index (base rows(a)) selects
/// the factor for tuple position k, the last digit being most significant.
BitMatrix kronecker_power(const BitMatrix& a, unsigned m);

}  // namespace berman::gf2
