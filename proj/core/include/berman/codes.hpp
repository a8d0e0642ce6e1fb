#pragma once

#include <optional>
#include <string>

#include "berman/coord.hpp"
#include "berman/gf2.hpp"

namespace berman {

enum class Family { Berman, DualBerman };

std::string family_name(Family f);

/// Parameters naming one code of the family. Valid when n >= 2, m >= 1 and
/// 0 <= r <= m. The Berman code D_n(r,m) with r = m is the zero code.
struct CodeSpec {
    unsigned n = 2;
    unsigned r = 0;
    unsigned m = 1;
    Family family = Family::Berman;

    void validate() const;
    std::uint64_t length() const;
};

struct CodeParameters {
    std::uint64_t length = 0;
    std::uint64_t dimension = 0;
    /// Absent exactly for the Berman family with r = m (zero code).
    std::optional<std::uint64_t> min_distance;
};

CodeParameters parameters(const CodeSpec& spec);

/// Generator matrix whose rows are minimum-weight codewords; row count is
/// the code dimension. The Berman family with r = m yields a 0-row matrix.
gf2::BitMatrix generator_matrix(const CodeSpec& spec);

/// Patterned basis: the rows (Berman) or columns (dual Berman) of the
/// containment-order matrix selected by tuple weight.
std::vector<gf2::BitVector> patterned_basis(const CodeSpec& spec);

/// c_m(i'): support { i : i ⪯ i' }.
gf2::BitVector containment_row(const CoordTuple& i_prime, unsigned n);
/// d_m(j'): support { i : i ⪰ j' }.
gf2::BitVector containment_column(const CoordTuple& j_prime, unsigned n);

/// Membership by the recursive code definition.
bool is_codeword(const CodeSpec& spec, const gf2::BitVector& v);

/// message * G; message length must equal the code dimension.
gf2::BitVector encode(const CodeSpec& spec, const gf2::BitVector& message);

/// The n x n base factor of the containment-order matrix: first column
/// all ones, ones on the diagonal, zero elsewhere.
gf2::BitMatrix containment_base_matrix(unsigned n);

}  // namespace berman
