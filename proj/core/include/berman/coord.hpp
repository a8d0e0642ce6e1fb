#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace berman {

/// An element of [n]^m addressing one codeword coordinate. Entry k is the
/// k-th tuple position; the linear index is colexicographic (last entry
/// most significant): index = sum_k entries[k] * n^k.
using CoordTuple = std::vector<unsigned>;

std::size_t coord_index(const CoordTuple& t, unsigned n);
CoordTuple coord_tuple(std::size_t index, unsigned n, unsigned m);

unsigned tuple_weight(const CoordTuple& t);

/// True iff inner ⪯ outer: every entry of inner is 0 or equals the
/// corresponding entry of outer.
bool tuple_contains(const CoordTuple& outer, const CoordTuple& inner);

/// n^m with an overflow check.
std::uint64_t checked_pow(std::uint64_t n, unsigned m);

}  // namespace berman
