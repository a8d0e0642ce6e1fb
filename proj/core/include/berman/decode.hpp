#pragma once

#include "berman/codes.hpp"
#include "berman/gf2.hpp"

namespace berman {

/// Work counter for the complexity checks: bit_ops accumulates the lengths
/// of the vectors touched by XOR, weight and distance computations.
struct DecodeStats {
    std::uint64_t bit_ops = 0;
};

struct DecodeResult {
    gf2::BitVector codeword;
    std::vector<std::size_t> corrected_positions;
};

/// Bounded-distance decoder for the dual Berman family. If some codeword c
/// satisfies d(y, c) < n^(m-r)/2 the result is c; the output is a valid
/// codeword for every input.
DecodeResult decode_dual_berman(const CodeSpec& spec, const gf2::BitVector& y,
                                DecodeStats* stats = nullptr);

/// Bounded-distance decoder for the Berman family. If some codeword c
/// satisfies d(y, c) < 2^r the result is c; the output is a valid codeword
/// for every input.
DecodeResult decode_berman(const CodeSpec& spec, const gf2::BitVector& y,
                           DecodeStats* stats = nullptr);

/// Exhaustive nearest-codeword search; requires dimension <= 20. Ties are
/// broken toward the lexicographically smallest codeword.
gf2::BitVector md_oracle_decode(const CodeSpec& spec, const gf2::BitVector& y);

}  // namespace berman
