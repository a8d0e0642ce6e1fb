#include "berman/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

namespace berman {

namespace {

void check_permutation(const std::vector<unsigned>& p, std::size_t domain) {
    if (p.size() != domain) throw std::invalid_argument("permutation has wrong domain size");
    std::vector<bool> seen(domain, false);
    for (unsigned x : p) {
        if (x >= domain || seen[x]) throw std::invalid_argument("not a permutation");
        seen[x] = true;
    }
}

}  // namespace

CoordinateAutomorphism CoordinateAutomorphism::per_coordinate(
    std::vector<std::vector<unsigned>> sigma) {
    if (sigma.empty()) throw std::invalid_argument("need at least one coordinate permutation");
    for (const auto& s : sigma) check_permutation(s, sigma.front().size());
    CoordinateAutomorphism a;
    a.kind_ = Kind::PerCoordinate;
    a.sigma_ = std::move(sigma);
    return a;
}

CoordinateAutomorphism CoordinateAutomorphism::position_permutation(std::vector<unsigned> gamma) {
    check_permutation(gamma, gamma.size());
    CoordinateAutomorphism a;
    a.kind_ = Kind::PositionPermutation;
    a.gamma_ = std::move(gamma);
    return a;
}

CoordinateAutomorphism CoordinateAutomorphism::inverse() const {
    CoordinateAutomorphism a;
    a.kind_ = kind_;
    if (kind_ == Kind::PerCoordinate) {
        a.sigma_.resize(sigma_.size());
        for (std::size_t k = 0; k < sigma_.size(); ++k) {
            a.sigma_[k].resize(sigma_[k].size());
            for (unsigned x = 0; x < sigma_[k].size(); ++x) a.sigma_[k][sigma_[k][x]] = x;
        }
    } else {
        a.gamma_.resize(gamma_.size());
        for (unsigned k = 0; k < gamma_.size(); ++k) a.gamma_[gamma_[k]] = k;
    }
    return a;
}

CoordTuple CoordinateAutomorphism::apply(const CoordTuple& t) const {
    if (kind_ == Kind::PerCoordinate) {
        if (t.size() != sigma_.size()) throw std::invalid_argument("tuple length mismatch");
        CoordTuple out(t.size());
        for (std::size_t k = 0; k < t.size(); ++k) out[k] = sigma_[k][t[k]];
        return out;
    }
    if (t.size() != gamma_.size()) throw std::invalid_argument("tuple length mismatch");
    CoordTuple out(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) out[k] = t[gamma_[k]];
    return out;
}

std::vector<std::size_t> direct_product_indices(const DirectProductSubset& h, unsigned n,
                                                unsigned m) {
    if (h.positions.size() != h.values.size())
        throw std::invalid_argument("positions/values length mismatch");
    std::vector<bool> fixed(m, false);
    for (std::size_t k = 0; k < h.positions.size(); ++k) {
        if (h.positions[k] >= m) throw std::out_of_range("position out of range");
        if (h.values[k] >= n) throw std::out_of_range("value out of range");
        if (fixed[h.positions[k]]) throw std::invalid_argument("duplicate position");
        fixed[h.positions[k]] = true;
    }
    std::vector<std::size_t> indices;
    const std::size_t length = checked_pow(n, m);
    for (std::size_t idx = 0; idx < length; ++idx) {
        CoordTuple t = coord_tuple(idx, n, m);
        bool match = true;
        for (std::size_t k = 0; k < h.positions.size(); ++k)
            if (t[h.positions[k]] != h.values[k]) {
                match = false;
                break;
            }
        if (match) indices.push_back(idx);
    }
    return indices;
}

gf2::BitMatrix puncture_code(const CodeSpec& spec, const DirectProductSubset& h) {
    spec.validate();
    const unsigned k = static_cast<unsigned>(h.positions.size());
    if (spec.family == Family::DualBerman && spec.r + k > spec.m)
        throw std::invalid_argument("dual Berman puncturing requires r <= m - |K|");
    if (spec.family == Family::Berman && spec.r < k)
        throw std::invalid_argument("Berman puncturing requires r >= |K|");
    std::vector<std::size_t> keep = direct_product_indices(h, spec.n, spec.m);
    gf2::BitMatrix restricted = generator_matrix(spec).restrict_columns(keep);
    return rank_and_rref(restricted).rref;
}

gf2::BitVector apply_automorphism(const CoordinateAutomorphism& a, const gf2::BitVector& v,
                                  unsigned n, unsigned m) {
    if (v.size() != checked_pow(n, m)) throw std::invalid_argument("vector length mismatch");
    gf2::BitVector out(v.size());
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (!v.get(idx)) continue;
        out.set(coord_index(a.apply(coord_tuple(idx, n, m)), n), true);
    }
    return out;
}

std::vector<CoordTuple> weight_class_orbit(const CoordTuple& i, unsigned n, unsigned m) {
    if (i.size() != m) throw std::invalid_argument("tuple length mismatch");
    const unsigned w = tuple_weight(i);
    if (w == 0) throw std::invalid_argument("the zero tuple has no nonzero-weight class");
    std::vector<CoordTuple> orbit;
    const std::size_t length = checked_pow(n, m);
    for (std::size_t idx = 0; idx < length; ++idx) {
        CoordTuple t = coord_tuple(idx, n, m);
        if (tuple_weight(t) == w) orbit.push_back(std::move(t));
    }
    return orbit;
}

DoubleTransitivityCheck double_transitivity_necessary_check(const CodeSpec& spec) {
    spec.validate();
    if (spec.r == 0 || spec.r == spec.m)
        throw std::invalid_argument("check requires a nontrivial code (1 <= r <= m-1)");
    CodeSpec dual = spec;
    dual.family = spec.family == Family::Berman ? Family::DualBerman : Family::Berman;
    std::uint64_t dmin = *parameters(spec).min_distance;
    std::uint64_t dmin_dual = *parameters(dual).min_distance;
    DoubleTransitivityCheck out;
    out.product = (dmin - 1) * (dmin_dual - 1);
    out.bound = spec.length() - 1;
    out.passes = out.product >= out.bound;
    return out;
}

}  // namespace berman
