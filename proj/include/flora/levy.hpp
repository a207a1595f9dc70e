#ifndef FLORA_LEVY_HPP
#define FLORA_LEVY_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <flora/core.hpp>

namespace flora
{

/// Tail exponent and minimum-step cutoff of the Levy step distribution.
///
/// `s0` only marks where the power-law tail is considered valid (it is used by tail
/// diagnostics); samples are never truncated at it.
struct levy_params {
    double lambda = 1.5;
    double s0 = 0.01;

    void validate() const
    {
        if (!(lambda > 1.0 && lambda <= 2.0)) {
            throw std::invalid_argument("levy_params: lambda must lie in (1, 2], got " + std::to_string(lambda));
        }
        if (!(s0 > 0.0)) {
            throw std::invalid_argument("levy_params: s0 must be positive");
        }
    }
};

/// Standard deviation of the numerator normal in Mantegna's construction.
inline double mantegna_sigma(double lambda)
{
    levy_params{lambda}.validate();
    const double num = std::tgamma(1.0 + lambda) * std::sin(std::numbers::pi * lambda / 2.0);
    const double den = std::tgamma((1.0 + lambda) / 2.0) * lambda * std::pow(2.0, (lambda - 1.0) / 2.0);
    return std::pow(num / den, 1.0 / lambda);
}

namespace detail
{
inline double mantegna_draw(double sigma_u, double inv_lambda, rng &r)
{
    const double u = r.normal(sigma_u);
    const double v = r.normal();
    return u / std::pow(std::abs(v), inv_lambda);
}
} // namespace detail

/// Signed, symmetric step whose magnitude has survival function ~ s^-lambda.
inline double sample_levy_step(const levy_params &params, rng &r)
{
    params.validate();
    return detail::mantegna_draw(mantegna_sigma(params.lambda), 1.0 / params.lambda, r);
}

/// `d` independent steps.
inline std::vector<double> sample_levy_vector(std::size_t d, const levy_params &params, rng &r)
{
    if (d == 0) {
        throw std::invalid_argument("sample_levy_vector: dimension must be positive");
    }
    params.validate();
    const double sigma = mantegna_sigma(params.lambda);
    const double inv_lambda = 1.0 / params.lambda;
    std::vector<double> out(d);
    for (auto &v : out) {
        v = detail::mantegna_draw(sigma, inv_lambda, r);
    }
    return out;
}

} // namespace flora

#endif
