#include "berman/rates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace berman::rates {

namespace {

BigInt binomial(unsigned m, unsigned w) {
    BigInt b = 1;
    for (unsigned i = 0; i < w; ++i) {
        b *= (m - i);
        b /= (i + 1);
    }
    return b;
}

BigInt weight_count(unsigned n, unsigned m, unsigned r_max) {
    BigInt total = 0;
    for (unsigned w = 0; w <= r_max && w <= m; ++w) {
        BigInt term = binomial(m, w);
        for (unsigned i = 0; i < w; ++i) term *= (n - 1);
        total += term;
    }
    return total;
}

BigInt int_pow(unsigned n, unsigned m) {
    BigInt p = 1;
    for (unsigned i = 0; i < m; ++i) p *= n;
    return p;
}

}  // namespace

RateModel RateModel::for_n(unsigned n) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    RateModel rm;
    rm.n = n;
    double p = double(n - 1) / n;
    rm.mu = p;
    rm.sigma2 = p * (1.0 - p);
    // rho = E|X - mu|^3 of the Bernoulli(p) position indicator; 0.4748 is
    // Shevtsova's universal Berry-Esseen constant.
    double rho = p * (1.0 - p) * ((1.0 - p) * (1.0 - p) + p * p);
    rm.kappa = 0.4748 * rho / std::pow(rm.sigma2, 1.5);
    return rm;
}

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double q_inverse(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("q_inverse requires p in (0,1)");
    double lo = -40.0, hi = 40.0;
    // Q is strictly decreasing; bisect to 1e-10 absolute.
    while (hi - lo > 1e-10) {
        double mid = 0.5 * (lo + hi);
        if (q_function(mid) > p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

BigRat exact_rate(unsigned n, unsigned r, unsigned m, Family family) {
    if (n < 2 || m < 1 || r > m) throw std::invalid_argument("invalid rate parameters");
    BigRat dual_rate(weight_count(n, m, r), int_pow(n, m));
    if (family == Family::DualBerman) return dual_rate;
    return BigRat(1) - dual_rate;
}

double exact_rate_double(unsigned n, unsigned r, unsigned m, Family family) {
    return static_cast<double>(exact_rate(n, r, m, family));
}

double gaussian_rate_approx(unsigned n, unsigned r, unsigned m) {
    RateModel rm = RateModel::for_n(n);
    double x = (double(r) - double(m) * rm.mu) / std::sqrt(double(m) * rm.sigma2);
    return 1.0 - q_function(x);
}

SelectedRate select_r_for_target_rate(unsigned n, unsigned m, double target, Family family) {
    if (!(target > 0.0 && target < 1.0))
        throw std::invalid_argument("target rate must lie in (0,1)");
    RateModel rm = RateModel::for_n(n);
    SelectedRate out;
    double best = 2.0;
    for (unsigned r = 0; r <= m; ++r) {
        double rate = exact_rate_double(n, r, m, family);
        double gap = std::abs(rate - target);
        if (gap < best) {
            best = gap;
            out.r = r;
            out.achieved_rate = rate;
        }
    }
    // Diagnostic from the Gaussian model; for the Berman family the rate
    // is 1 - R_n(r,m), so the matching tail level flips.
    double level = family == Family::DualBerman ? 1.0 - target : target;
    out.gaussian_r = double(m) * rm.mu + q_inverse(level) * std::sqrt(double(m) * rm.sigma2);
    return out;
}

RateChangeReport rate_change_bounds(unsigned n, unsigned r, unsigned m, unsigned k) {
    if (k < 1) throw std::invalid_argument("rate_change_bounds requires k >= 1");
    if (r > m) throw std::invalid_argument("rate_change_bounds requires r <= m");
    RateModel rm = RateModel::for_n(n);
    RateChangeReport rep;
    rep.kappa = rm.kappa;

    BigRat dual_diff = exact_rate(n, r, m, Family::DualBerman) -
                       exact_rate(n, r, m + k, Family::DualBerman);
    BigRat berman_diff = exact_rate(n, r, m, Family::Berman) -
                         exact_rate(n, r + k, m + k, Family::Berman);

    rep.dual_difference = static_cast<double>(dual_diff);
    rep.berman_difference = static_cast<double>(berman_diff);

    double sqrt_m = std::sqrt(double(m));
    double denom = std::sqrt(8.0 * std::numbers::pi * rm.sigma2);
    rep.dual_bound = 2.0 * rm.kappa / sqrt_m + (double(k) / sqrt_m) * (1.0 + rm.mu) / denom;
    rep.berman_bound = 2.0 * rm.kappa / sqrt_m + (double(k) / sqrt_m) * (rm.mu + 2.0) / denom;

    rep.dual_nonnegative = dual_diff >= 0;
    rep.berman_nonnegative = berman_diff >= 0;
    rep.dual_within_bound = rep.dual_difference <= rep.dual_bound;
    rep.berman_within_bound = rep.berman_difference <= rep.berman_bound;
    return rep;
}

}  // namespace berman::rates
