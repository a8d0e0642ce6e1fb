#pragma once

#include "berman/codes.hpp"
#include "berman/coord.hpp"
#include "berman/gf2.hpp"

namespace berman {

/// H = { i in [n]^m : i restricted to `positions` equals `values` }.
struct DirectProductSubset {
    std::vector<unsigned> positions;
    CoordTuple values;
};

/// Either one permutation of [n] per tuple position, or a permutation of
/// the positions themselves.
class CoordinateAutomorphism {
public:
    enum class Kind { PerCoordinate, PositionPermutation };

    static CoordinateAutomorphism per_coordinate(std::vector<std::vector<unsigned>> sigma);
    static CoordinateAutomorphism position_permutation(std::vector<unsigned> gamma);

    Kind kind() const { return kind_; }
    CoordinateAutomorphism inverse() const;
    CoordTuple apply(const CoordTuple& t) const;

private:
    Kind kind_;
    std::vector<std::vector<unsigned>> sigma_;  // m permutations of [n]
    std::vector<unsigned> gamma_;               // permutation of [m]
};

/// Coordinate indices of H in ascending colexicographic order.
std::vector<std::size_t> direct_product_indices(const DirectProductSubset& h, unsigned n,
                                                unsigned m);

/// Generator (RREF basis) of the punctured code P_H(code). The dual family
/// requires r <= m-|K|, the Berman family requires r >= |K|.
gf2::BitMatrix puncture_code(const CodeSpec& spec, const DirectProductSubset& h);

/// v' with v' at coordinate a(i) equal to v at coordinate i.
gf2::BitVector apply_automorphism(const CoordinateAutomorphism& a, const gf2::BitVector& v,
                                  unsigned n, unsigned m);

/// All tuples of the same Hamming weight as i: the proven lower-bound set
/// for the orbit of i under the zero-fixing automorphism subgroup.
std::vector<CoordTuple> weight_class_orbit(const CoordTuple& i, unsigned n, unsigned m);

struct DoubleTransitivityCheck {
    std::uint64_t product = 0;  // (dmin - 1)(dmin_dual - 1)
    std::uint64_t bound = 0;    // N - 1
    bool passes = false;        // false certifies the code is not doubly transitive
};

/// Necessary condition for double transitivity; requires 1 <= r <= m-1.
DoubleTransitivityCheck double_transitivity_necessary_check(const CodeSpec& spec);

}  // namespace berman
