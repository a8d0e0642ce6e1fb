#include "berman/coord.hpp"

#include <stdexcept>

namespace berman {

std::size_t coord_index(const CoordTuple& t, unsigned n) {
    std::size_t index = 0;
    std::size_t stride = 1;
    for (unsigned entry : t) {
        if (entry >= n) throw std::out_of_range("tuple entry out of range");
        index += entry * stride;
        stride *= n;
    }
    return index;
}

CoordTuple coord_tuple(std::size_t index, unsigned n, unsigned m) {
    CoordTuple t(m);
    for (unsigned k = 0; k < m; ++k) {
        t[k] = static_cast<unsigned>(index % n);
        index /= n;
    }
    if (index != 0) throw std::out_of_range("index out of range");
    return t;
}

unsigned tuple_weight(const CoordTuple& t) {
    unsigned w = 0;
    for (unsigned entry : t)
        if (entry != 0) ++w;
    return w;
}

bool tuple_contains(const CoordTuple& outer, const CoordTuple& inner) {
    if (outer.size() != inner.size()) throw std::invalid_argument("tuple length mismatch");
    for (std::size_t k = 0; k < outer.size(); ++k)
        if (inner[k] != 0 && inner[k] != outer[k]) return false;
    return true;
}

std::uint64_t checked_pow(std::uint64_t n, unsigned m) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (result > UINT64_MAX / n) throw std::overflow_error("n^m overflows 64 bits");
        result *= n;
    }
    return result;
}

}  // namespace berman
