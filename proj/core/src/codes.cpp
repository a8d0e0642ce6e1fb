#include "berman/codes.hpp"

#include <stdexcept>

namespace berman {

namespace {

// C(m,w)(n-1)^w summed over a weight range. Every partial term is bounded
// by n^m, so __int128 intermediates cannot overflow once n^m fits in 64 bits.
std::uint64_t weight_class_sum(unsigned n, unsigned m, unsigned w_lo, unsigned w_hi) {
    unsigned __int128 total = 0;
    for (unsigned w = w_lo; w <= w_hi && w <= m; ++w) {
        unsigned __int128 term = 1;
        for (unsigned i = 0; i < w; ++i) {
            term = term * (m - i) / (i + 1);  // binomial, exact at each step
        }
        for (unsigned i = 0; i < w; ++i) term *= (n - 1);
        total += term;
    }
    return static_cast<std::uint64_t>(total);
}

}  // namespace

std::string family_name(Family f) { return f == Family::Berman ? "berman" : "dual"; }

void CodeSpec::validate() const {
    if (n < 2) throw std::invalid_argument("code parameter n must be at least 2");
    if (m < 1) throw std::invalid_argument("code parameter m must be at least 1");
    if (r > m) throw std::invalid_argument("code parameter r must satisfy 0 <= r <= m");
    checked_pow(n, m);
}

std::uint64_t CodeSpec::length() const { return checked_pow(n, m); }

CodeParameters parameters(const CodeSpec& spec) {
    spec.validate();
    CodeParameters p;
    p.length = spec.length();
    if (spec.family == Family::DualBerman) {
        p.dimension = weight_class_sum(spec.n, spec.m, 0, spec.r);
        p.min_distance = checked_pow(spec.n, spec.m - spec.r);
    } else {
        p.dimension = weight_class_sum(spec.n, spec.m, spec.r + 1, spec.m);
        if (spec.r <= spec.m - 1 && spec.r + 1 < 64)
            p.min_distance = std::uint64_t(1) << (spec.r + 1);
        else
            p.min_distance = std::nullopt;  // zero code
    }
    return p;
}

gf2::BitMatrix generator_matrix(const CodeSpec& spec) {
    spec.validate();
    const unsigned n = spec.n, r = spec.r, m = spec.m;
    const std::size_t length = spec.length();

    if (spec.family == Family::Berman) {
        if (r == m) return gf2::BitMatrix(0, length);
        if (r == 0) {
            // (1 | I): each row is a weight-2 parity pair with position 0.
            gf2::BitMatrix g(length - 1, length);
            for (std::size_t i = 0; i + 1 < length; ++i) {
                g.set(i, 0, true);
                g.set(i, i + 1, true);
            }
            return g;
        }
        const std::size_t block = length / n;
        gf2::BitMatrix sub = generator_matrix({n, r - 1, m - 1, Family::Berman});
        gf2::BitMatrix last = generator_matrix({n, r, m - 1, Family::Berman});
        gf2::BitMatrix g((n - 1) * sub.rows() + last.rows(), length);
        std::size_t out = 0;
        for (unsigned l = 0; l + 1 < n; ++l)
            for (std::size_t s = 0; s < sub.rows(); ++s, ++out) {
                gf2::BitVector v = sub.row(s);
                gf2::BitVector row(length);
                row.splice(l * block, v);
                row.splice((n - 1) * block, v);
                g.set_row(out, row);
            }
        for (std::size_t s = 0; s < last.rows(); ++s, ++out) {
            gf2::BitVector row(length);
            row.splice((n - 1) * block, last.row(s));
            g.set_row(out, row);
        }
        return g;
    }

    // Dual Berman family.
    if (r == 0) {
        gf2::BitMatrix h(1, length);
        for (std::size_t i = 0; i < length; ++i) h.set(0, i, true);
        return h;
    }
    if (r == m) return gf2::BitMatrix::identity(length);
    const std::size_t block = length / n;
    gf2::BitMatrix sub = generator_matrix({n, r - 1, m - 1, Family::DualBerman});
    gf2::BitMatrix last = generator_matrix({n, r, m - 1, Family::DualBerman});
    gf2::BitMatrix h((n - 1) * sub.rows() + last.rows(), length);
    std::size_t out = 0;
    for (unsigned l = 0; l + 1 < n; ++l)
        for (std::size_t s = 0; s < sub.rows(); ++s, ++out) {
            gf2::BitVector row(length);
            row.splice(l * block, sub.row(s));
            h.set_row(out, row);
        }
    for (std::size_t s = 0; s < last.rows(); ++s, ++out) {
        gf2::BitVector u = last.row(s);
        gf2::BitVector row(length);
        for (unsigned l = 0; l < n; ++l) row.splice(l * block, u);
        h.set_row(out, row);
    }
    return h;
}

gf2::BitVector containment_row(const CoordTuple& i_prime, unsigned n) {
    const unsigned m = static_cast<unsigned>(i_prime.size());
    gf2::BitVector v(checked_pow(n, m));
    std::vector<unsigned> support;
    for (unsigned k = 0; k < m; ++k)
        if (i_prime[k] != 0) support.push_back(k);
    // Every j ⪯ i' picks a subset of the support of i'.
    for (std::size_t mask = 0; mask < (std::size_t(1) << support.size()); ++mask) {
        CoordTuple j(m, 0);
        for (std::size_t b = 0; b < support.size(); ++b)
            if ((mask >> b) & 1u) j[support[b]] = i_prime[support[b]];
        v.set(coord_index(j, n), true);
    }
    return v;
}

gf2::BitVector containment_column(const CoordTuple& j_prime, unsigned n) {
    const unsigned m = static_cast<unsigned>(j_prime.size());
    gf2::BitVector v(checked_pow(n, m));
    std::vector<unsigned> free_positions;
    for (unsigned k = 0; k < m; ++k)
        if (j_prime[k] == 0) free_positions.push_back(k);
    // Every i ⪰ j' fixes the support of j' and chooses the rest freely.
    const std::size_t count = checked_pow(n, static_cast<unsigned>(free_positions.size()));
    for (std::size_t c = 0; c < count; ++c) {
        CoordTuple i = j_prime;
        std::size_t rest = c;
        for (unsigned k : free_positions) {
            i[k] = static_cast<unsigned>(rest % n);
            rest /= n;
        }
        v.set(coord_index(i, n), true);
    }
    return v;
}

std::vector<gf2::BitVector> patterned_basis(const CodeSpec& spec) {
    spec.validate();
    const std::size_t length = spec.length();
    std::vector<gf2::BitVector> basis;
    for (std::size_t idx = 0; idx < length; ++idx) {
        CoordTuple t = coord_tuple(idx, spec.n, spec.m);
        unsigned w = tuple_weight(t);
        if (spec.family == Family::Berman) {
            if (w >= spec.r + 1) basis.push_back(containment_row(t, spec.n));
        } else {
            if (w <= spec.r) basis.push_back(containment_column(t, spec.n));
        }
    }
    return basis;
}

bool is_codeword(const CodeSpec& spec, const gf2::BitVector& v) {
    spec.validate();
    if (v.size() != spec.length()) throw std::invalid_argument("codeword length mismatch");
    const unsigned n = spec.n, r = spec.r, m = spec.m;

    if (spec.family == Family::Berman) {
        if (r == m) return v.is_zero();
        if (r == 0) return (v.weight() % 2) == 0;
        const std::size_t block = v.size() / n;
        gf2::BitVector sum(block);
        for (unsigned l = 0; l < n; ++l) {
            gf2::BitVector part = v.slice(l * block, block);
            if (!is_codeword({n, r - 1, m - 1, Family::Berman}, part)) return false;
            sum ^= part;
        }
        return is_codeword({n, r, m - 1, Family::Berman}, sum);
    }

    if (r == m) return true;
    if (r == 0) {
        std::size_t w = v.weight();
        return w == 0 || w == v.size();
    }
    const std::size_t block = v.size() / n;
    gf2::BitVector u = v.slice((n - 1) * block, block);
    if (!is_codeword({n, r, m - 1, Family::DualBerman}, u)) return false;
    for (unsigned l = 0; l + 1 < n; ++l) {
        gf2::BitVector part = v.slice(l * block, block);
        part ^= u;
        if (!is_codeword({n, r - 1, m - 1, Family::DualBerman}, part)) return false;
    }
    return true;
}

gf2::BitVector encode(const CodeSpec& spec, const gf2::BitVector& message) {
    gf2::BitMatrix g = generator_matrix(spec);
    if (message.size() != g.rows()) throw std::invalid_argument("message length must equal code dimension");
    return g.mul_left(message);
}

gf2::BitMatrix containment_base_matrix(unsigned n) {
    gf2::BitMatrix a = gf2::BitMatrix::identity(n);
    for (unsigned i = 0; i < n; ++i) a.set(i, 0, true);
    return a;
}

}  // namespace berman
