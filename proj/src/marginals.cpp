#include "secrecy/marginals.hpp"

#include "secrecy/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace secrecy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double v, const char* name) {
    if (!(std::isfinite(v) && v > 0.0)) {
        throw InvalidParameter(std::string(name) + " must be positive and finite");
    }
}

void require_non_negative(double v, const char* name) {
    if (!(std::isfinite(v) && v >= 0.0)) {
        throw InvalidParameter(std::string(name) + " must be non-negative and finite");
    }
}

void validate_snr_and_rates(const ChannelParams& p) {
    require_positive(p.rho_x, "rho_x");
    require_positive(p.rho_y, "rho_y");
    require_non_negative(p.rate_s, "rate_s");
    require_non_negative(p.rate_d, "rate_d");
}

} // namespace

void ChannelParams::validate() const {
    require_positive(lambda_x, "lambda_x");
    require_positive(lambda_y, "lambda_y");
    validate_snr_and_rates(*this);
}

double ChannelParams::s() const { return std::exp2(rate_s) - 1.0; }

double ChannelParams::t() const { return std::exp2(rate_d + rate_s) - 1.0; }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double Marginal::pdf_derivative(double x) const {
    const double h = std::max(1e-6, 1e-6 * std::abs(x));
    return (pdf(x + h) - pdf(x - h)) / (2.0 * h);
}

double Marginal::quantile(double u) const {
    if (!(u > 0.0 && u < 1.0)) {
        throw InvalidParameter("quantile level must lie in (0, 1)");
    }
    const Support sup = support();
    double lo = std::isfinite(sup.lo) ? sup.lo : std::min(-1.0, sup.hi - 1.0);
    double hi = std::isfinite(sup.hi) ? sup.hi : std::max(1.0, sup.lo + 1.0);
    for (double step = 1.0; !std::isfinite(sup.lo) && cdf(lo) > u; step *= 2.0) {
        lo -= step;
        if (!std::isfinite(lo)) {
            throw NumericFailure("quantile bracket escaped to -inf", u);
        }
    }
    for (double step = 1.0; !std::isfinite(sup.hi) && cdf(hi) < u; step *= 2.0) {
        hi += step;
        if (!std::isfinite(hi)) {
            throw NumericFailure("quantile bracket escaped to +inf", u);
        }
    }
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (cdf(mid) < u) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

ExponentialMarginal::ExponentialMarginal(double rate, Axis axis) : rate_(rate), axis_(axis) {
    require_positive(rate, "exponential rate");
}

double ExponentialMarginal::cdf(double x) const {
    if (axis_ == Axis::positive) {
        return x <= 0.0 ? 0.0 : -std::expm1(-rate_ * x);
    }
    return x >= 0.0 ? 1.0 : std::exp(rate_ * x);
}

double ExponentialMarginal::pdf(double x) const {
    if (axis_ == Axis::positive) {
        return x < 0.0 ? 0.0 : rate_ * std::exp(-rate_ * x);
    }
    return x > 0.0 ? 0.0 : rate_ * std::exp(rate_ * x);
}

double ExponentialMarginal::pdf_derivative(double x) const {
    if (axis_ == Axis::positive) {
        return x < 0.0 ? 0.0 : -rate_ * rate_ * std::exp(-rate_ * x);
    }
    return x > 0.0 ? 0.0 : rate_ * rate_ * std::exp(rate_ * x);
}

double ExponentialMarginal::quantile(double u) const {
    if (!(u > 0.0 && u < 1.0)) {
        throw InvalidParameter("quantile level must lie in (0, 1)");
    }
    if (axis_ == Axis::positive) {
        return -std::log1p(-u) / rate_;
    }
    return std::log(u) / rate_;
}

Support ExponentialMarginal::support() const {
    return axis_ == Axis::positive ? Support{0.0, kInf} : Support{-kInf, 0.0};
}

FunctionMarginal::FunctionMarginal(Fn cdf, Fn pdf, Support support)
    : cdf_(std::move(cdf)), pdf_(std::move(pdf)), support_(support) {
    if (!cdf_ || !pdf_) {
        throw InvalidParameter("function marginal needs both cdf and pdf");
    }
    if (!(support_.lo < support_.hi)) {
        throw InvalidParameter("function marginal support must be a non-empty interval");
    }
}

ScaledMarginal::ScaledMarginal(MarginalPtr base, double factor)
    : base_(std::move(base)), factor_(factor) {
    if (!base_) {
        throw InvalidParameter("scaled marginal needs a base distribution");
    }
    if (!(std::isfinite(factor) && factor != 0.0)) {
        throw InvalidParameter("scale factor must be finite and non-zero");
    }
}

double ScaledMarginal::cdf(double x) const {
    const double w = x / factor_;
    return factor_ > 0.0 ? base_->cdf(w) : 1.0 - base_->cdf(w);
}

double ScaledMarginal::pdf(double x) const { return base_->pdf(x / factor_) / std::abs(factor_); }

double ScaledMarginal::pdf_derivative(double x) const {
    return base_->pdf_derivative(x / factor_) / (factor_ * std::abs(factor_));
}

double ScaledMarginal::quantile(double u) const {
    if (!(u > 0.0 && u < 1.0)) {
        throw InvalidParameter("quantile level must lie in (0, 1)");
    }
    if (factor_ > 0.0) {
        return factor_ * base_->quantile(u);
    }
    // 1 - u rounds to 1 for tiny u; fall back to bisection on our own cdf.
    return 1.0 - u < 1.0 ? factor_ * base_->quantile(1.0 - u) : Marginal::quantile(u);
}

Support ScaledMarginal::support() const {
    const Support b = base_->support();
    return factor_ > 0.0 ? Support{factor_ * b.lo, factor_ * b.hi}
                         : Support{factor_ * b.hi, factor_ * b.lo};
}

MarginalPtr exponential_marginal(double rate, Axis axis) {
    return std::make_shared<const ExponentialMarginal>(rate, axis);
}

TransformedPair transform(const ChannelParams& params) {
    params.validate();
    const double scale_y = std::exp2(params.rate_s) * params.rho_y;
    return {exponential_marginal(params.lambda_x / params.rho_x, Axis::positive),
            exponential_marginal(params.lambda_y / scale_y, Axis::negative), params.s(), params.t()};
}

TransformedPair transform(MarginalPtr gain_x, MarginalPtr gain_y, const ChannelParams& params) {
    validate_snr_and_rates(params);
    const double scale_y = std::exp2(params.rate_s) * params.rho_y;
    return {std::make_shared<const ScaledMarginal>(std::move(gain_x), params.rho_x),
            std::make_shared<const ScaledMarginal>(std::move(gain_y), -scale_y), params.s(),
            params.t()};
}

TransformedPair exponential_pair(double rate_xt, double rate_yt, double s, double t) {
    require_non_negative(s, "s");
    if (!(std::isfinite(t) && t >= s)) {
        throw InvalidParameter("t must be finite and not below s");
    }
    return {exponential_marginal(rate_xt, Axis::positive),
            exponential_marginal(rate_yt, Axis::negative), s, t};
}

} // namespace secrecy
