#include "berman/decode.hpp"

#include <array>
#include <stdexcept>

namespace berman {

namespace {

void count(DecodeStats* stats, std::uint64_t bits) {
    if (stats != nullptr) stats->bit_ops += bits;
}

std::vector<std::size_t> diff_positions(const gf2::BitVector& a, const gf2::BitVector& b) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.get(i) != b.get(i)) out.push_back(i);
    return out;
}

gf2::BitVector dec_dual(unsigned n, unsigned r, unsigned m, const gf2::BitVector& y,
                        DecodeStats* stats) {
    const std::size_t length = y.size();
    if (r == 0) {
        // Repetition code: majority with strict threshold, ties to all-zero.
        count(stats, length);
        gf2::BitVector v(length);
        if (2 * y.weight() > length)
            for (std::size_t i = 0; i < length; ++i) v.set(i, true);
        return v;
    }
    if (r == m) return y;

    const std::size_t block = length / n;
    std::vector<gf2::BitVector> u(n);
    std::vector<gf2::BitVector> y_adj(n);
    gf2::BitVector y_last = y.slice((n - 1) * block, block);
    for (unsigned l = 0; l + 1 < n; ++l) {
        gf2::BitVector y_l = y.slice(l * block, block);
        gf2::BitVector y_tilde = y_l ^ y_last;
        count(stats, 2 * block);
        u[l] = dec_dual(n, r - 1, m - 1, y_tilde, stats);
        y_adj[l] = y_l ^ u[l];
        count(stats, block);
    }
    u[n - 1] = gf2::BitVector(block);
    y_adj[n - 1] = y_last;

    // Search for a candidate u within the guaranteed radius; the last
    // iteration doubles as the fallback.
    gf2::BitVector u_hat;
    const std::uint64_t radius = checked_pow(n, m - r);
    for (unsigned l = 0; l < n; ++l) {
        u_hat = dec_dual(n, r, m - 1, y_adj[l], stats);
        std::uint64_t total = 0;
        for (unsigned k = 0; k < n; ++k) {
            total += u_hat.distance(y_adj[k]);
            count(stats, block);
        }
        if (2 * total < radius) break;
    }

    gf2::BitVector v(length);
    for (unsigned l = 0; l < n; ++l) {
        gf2::BitVector part = u_hat ^ u[l];
        count(stats, block);
        v.splice(l * block, part);
    }
    return v;
}

gf2::BitVector dec_berman(unsigned n, unsigned r, unsigned m, const gf2::BitVector& y,
                          DecodeStats* stats) {
    const std::size_t length = y.size();
    if (r == m) return gf2::BitVector(length);
    if (r == 0) {
        count(stats, length);
        gf2::BitVector v = y;
        if (v.weight() % 2 != 0) v.flip(0);
        return v;
    }

    const std::size_t block = length / n;
    gf2::BitVector y_sum(block);
    std::vector<gf2::BitVector> y_blocks(n);
    for (unsigned l = 0; l < n; ++l) {
        y_blocks[l] = y.slice(l * block, block);
        y_sum ^= y_blocks[l];
        count(stats, block);
    }
    gf2::BitVector v_sum = dec_berman(n, r, m - 1, y_sum, stats);

    // Two candidates per block: from the block itself and from the
    // complementary estimate v_sum + y_sum + y_l.
    std::vector<std::array<gf2::BitVector, 2>> cand(n - 1);
    for (unsigned l = 0; l + 1 < n; ++l) {
        gf2::BitVector y_tilde = v_sum ^ y_sum ^ y_blocks[l];
        count(stats, 2 * block);
        cand[l][0] = dec_berman(n, r - 1, m - 1, y_blocks[l], stats);
        cand[l][1] = dec_berman(n, r - 1, m - 1, y_tilde, stats);
    }

    // Minimum distance decode y against the 2^(n-1) assembled codewords,
    // ties broken by ascending selector value.
    gf2::BitVector best;
    std::uint64_t best_distance = 0;
    bool have_best = false;
    for (std::uint64_t sel = 0; sel < (std::uint64_t(1) << (n - 1)); ++sel) {
        gf2::BitVector candidate(length);
        gf2::BitVector last = v_sum;
        for (unsigned l = 0; l + 1 < n; ++l) {
            const gf2::BitVector& part = cand[l][(sel >> l) & 1u];
            candidate.splice(l * block, part);
            last ^= part;
            count(stats, block);
        }
        candidate.splice((n - 1) * block, last);
        std::uint64_t dist = candidate.distance(y);
        count(stats, length);
        if (!have_best || dist < best_distance) {
            have_best = true;
            best_distance = dist;
            best = candidate;
        }
    }
    return best;
}

}  // namespace

DecodeResult decode_dual_berman(const CodeSpec& spec, const gf2::BitVector& y,
                                DecodeStats* stats) {
    spec.validate();
    if (spec.family != Family::DualBerman)
        throw std::invalid_argument("decode_dual_berman requires the dual Berman family");
    if (y.size() != spec.length()) throw std::invalid_argument("received word length mismatch");
    gf2::BitVector v = dec_dual(spec.n, spec.r, spec.m, y, stats);
    return DecodeResult{v, diff_positions(y, v)};
}

DecodeResult decode_berman(const CodeSpec& spec, const gf2::BitVector& y, DecodeStats* stats) {
    spec.validate();
    if (spec.family != Family::Berman)
        throw std::invalid_argument("decode_berman requires the Berman family");
    if (y.size() != spec.length()) throw std::invalid_argument("received word length mismatch");
    gf2::BitVector v = dec_berman(spec.n, spec.r, spec.m, y, stats);
    return DecodeResult{v, diff_positions(y, v)};
}

gf2::BitVector md_oracle_decode(const CodeSpec& spec, const gf2::BitVector& y) {
    gf2::BitMatrix g = generator_matrix(spec);
    if (g.rows() > 20) throw std::invalid_argument("md_oracle_decode requires dimension <= 20");
    if (y.size() != g.cols()) throw std::invalid_argument("received word length mismatch");

    gf2::BitVector best(y.size());
    std::size_t best_distance = best.distance(y);
    // Gray-code walk over the codebook: one row XOR per step.
    gf2::BitVector current(y.size());
    std::uint64_t prev = 0;
    for (std::uint64_t iter = 1; iter < (std::uint64_t(1) << g.rows()); ++iter) {
        std::uint64_t gray = iter ^ (iter >> 1);
        std::uint64_t changed = gray ^ prev;
        prev = gray;
        unsigned bit = 0;
        while (((changed >> bit) & 1u) == 0) ++bit;
        current ^= g.row(bit);
        std::size_t dist = current.distance(y);
        if (dist < best_distance || (dist == best_distance && current.lex_less(best))) {
            best_distance = dist;
            best = current;
        }
    }
    return best;
}

}  // namespace berman
