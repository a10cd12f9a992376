#pragma once

#include <functional>
#include <memory>

namespace secrecy {

/// Full experiment configuration. SNRs are linear; rates are in bits per
/// channel use.
struct ChannelParams {
    double lambda_x = 1.0; ///< inverse mean of Bob's channel gain
    double lambda_y = 1.0; ///< inverse mean of Eve's channel gain
    double rho_x = 1.0;    ///< Bob's receiver SNR
    double rho_y = 1.0;    ///< Eve's receiver SNR
    double rate_s = 0.0;   ///< secrecy rate
    double rate_d = 0.0;   ///< dummy (randomization) rate

    /// Throws InvalidParameter unless scales/SNRs are positive and rates are
    /// non-negative (all finite).
    void validate() const;

    /// 2^R_S - 1
    double s() const;
    /// 2^(R_d + R_S) - 1
    double t() const;
};

double db_to_linear(double db);
double linear_to_db(double linear);

struct Support {
    double lo;
    double hi;
};

/// One-dimensional continuous distribution.
///
/// Implementations must provide cdf, pdf and support. The density derivative
/// defaults to a central difference with step max(1e-6, 1e-6 |x|); the
/// quantile defaults to bisection on the cdf to 1e-12 absolute.
class Marginal {
public:
    virtual ~Marginal() = default;

    virtual double cdf(double x) const = 0;
    virtual double pdf(double x) const = 0;
    virtual double pdf_derivative(double x) const;
    /// u must lie in (0, 1).
    virtual double quantile(double u) const;
    virtual Support support() const = 0;
};

using MarginalPtr = std::shared_ptr<const Marginal>;

enum class Axis { positive, negative };

/// Exponential law with the given rate, either on [0, inf) or mirrored onto
/// (-inf, 0].
class ExponentialMarginal final : public Marginal {
public:
    ExponentialMarginal(double rate, Axis axis);

    double cdf(double x) const override;
    double pdf(double x) const override;
    double pdf_derivative(double x) const override;
    double quantile(double u) const override;
    Support support() const override;

    double rate() const noexcept { return rate_; }
    Axis axis() const noexcept { return axis_; }

private:
    double rate_;
    Axis axis_;
};

/// User-supplied marginal backed by cdf/pdf callables.
class FunctionMarginal final : public Marginal {
public:
    using Fn = std::function<double(double)>;

    FunctionMarginal(Fn cdf, Fn pdf, Support support);

    double cdf(double x) const override { return cdf_(x); }
    double pdf(double x) const override { return pdf_(x); }
    Support support() const override { return support_; }

private:
    Fn cdf_;
    Fn pdf_;
    Support support_;
};

/// Law of factor * W for a non-zero factor.
class ScaledMarginal final : public Marginal {
public:
    ScaledMarginal(MarginalPtr base, double factor);

    double cdf(double x) const override;
    double pdf(double x) const override;
    double pdf_derivative(double x) const override;
    double quantile(double u) const override;
    Support support() const override;

private:
    MarginalPtr base_;
    double factor_;
};

MarginalPtr exponential_marginal(double rate, Axis axis);

/// The reduced problem: outage events are statements about
/// Xt = rho_x X on [0, inf) and Yt = -2^R_S rho_y Y on (-inf, 0], together with
/// the thresholds s and t >= s.
struct TransformedPair {
    MarginalPtr xt;
    MarginalPtr yt;
    double s = 0.0;
    double t = 0.0;
};

/// Rayleigh fading: both gains exponential with the scales in params.
TransformedPair transform(const ChannelParams& params);

/// Arbitrary gain marginals; lambda_x/lambda_y of params are ignored.
TransformedPair transform(MarginalPtr gain_x, MarginalPtr gain_y, const ChannelParams& params);

/// Pair of exponential marginals given directly by their transformed rates.
TransformedPair exponential_pair(double rate_xt, double rate_yt, double s, double t);
inline TransformedPair exponential_pair(double rate_xt, double rate_yt, double s) {
    return exponential_pair(rate_xt, rate_yt, s, s);
}

} // namespace secrecy
