#pragma once

#include <cstdint>

namespace berman::dft {

/// GF(2^k) in a polynomial basis over a fixed irreducible modulus (the
/// lexicographically smallest irreducible of degree k). Elements are the
/// low k bits of a word, bit t being the coefficient of x^t.
class Field {
public:
    using Elem = std::uint32_t;

    static Field with_degree(unsigned k);

    unsigned degree() const { return k_; }
    std::uint64_t modulus() const { return modulus_; }
    std::uint32_t order() const { return (std::uint32_t(1) << k_) - 1; }  // |F*|

    static Elem add(Elem a, Elem b) { return a ^ b; }
    Elem mul(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const;
    Elem inverse(Elem a) const;

    /// A generator of the multiplicative group.
    Elem generator() const { return generator_; }
    /// Multiplicative order of a nonzero element.
    std::uint32_t element_order(Elem a) const;
    /// An element of multiplicative order d; d must divide 2^k - 1.
    Elem element_of_order(std::uint32_t d) const;

private:
    unsigned k_ = 0;
    std::uint64_t modulus_ = 0;
    Elem generator_ = 0;
};

/// Multiplicative order of a modulo odd n.
unsigned multiplicative_order_mod(unsigned a, unsigned n);

}  // namespace berman::dft
