#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "berman/codes.hpp"

namespace berman::rates {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Gaussian model of the weight distribution of [n]^m tuples: each
/// position is nonzero with probability (n-1)/n.
struct RateModel {
    unsigned n;
    double mu;      // (n-1)/n
    double sigma2;  // (n-1)/n^2
    double kappa;   // Berry-Esseen constant 0.4748 * rho / sigma^3

    static RateModel for_n(unsigned n);
};

/// Standard normal tail Q(x), and its inverse by bisection.
double q_function(double x);
double q_inverse(double p);

/// Exact code rate as a rational: sum_{w<=r} C(m,w)(n-1)^w / n^m for the
/// dual family, one minus that for the Berman family.
BigRat exact_rate(unsigned n, unsigned r, unsigned m, Family family);
double exact_rate_double(unsigned n, unsigned r, unsigned m, Family family);

/// 1 - Q((r - m mu)/sqrt(m sigma^2)): the Gaussian approximation of the
/// dual-family rate.
double gaussian_rate_approx(unsigned n, unsigned r, unsigned m);

struct SelectedRate {
    unsigned r = 0;           // argmin of |exact rate - target|
    double achieved_rate = 0;
    double gaussian_r = 0;    // diagnostic: m*mu + Qinv(1-target)*sqrt(m sigma^2)
};

/// The r in {0..m} whose exact rate is closest to the target, ties broken
/// toward smaller r.
SelectedRate select_r_for_target_rate(unsigned n, unsigned m, double target, Family family);

struct RateChangeReport {
    double dual_difference = 0;    // R(r,m) - R(r,m+k)
    double dual_bound = 0;         // 2k/sqrt(m) terms, dual flavour
    double berman_difference = 0;  // rate D(r,m) - rate D(r+k,m+k)
    double berman_bound = 0;
    bool dual_nonnegative = false;
    bool dual_within_bound = false;
    bool berman_nonnegative = false;
    bool berman_within_bound = false;
    double kappa = 0;
};

/// Exact rate-change differences against the closed-form Gaussian bounds.
RateChangeReport rate_change_bounds(unsigned n, unsigned r, unsigned m, unsigned k);

}  // namespace berman::rates
