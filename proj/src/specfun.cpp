#include "masi/specfun.hpp"
#include "masi/errors.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace masi {

namespace {

constexpr double kAlphaMin = 1e-3;
constexpr double kAlphaMax = 1.0 - 1e-3;

// Half-width of the window around t = 1 in which f_alpha is evaluated by
// interpolation instead of the raw quotient (0/0 at t = 1).
constexpr double kAlphaWindow = 1e-4;

// t^a - 1 without cancellation near t = 1.
double pow_minus_one(double t, double a) {
    if (t > 0.5 && t < 2.0) {
        return std::expm1(a * std::log1p(t - 1.0));
    }
    return std::pow(t, a) - 1.0;
}

double eval_wyd_direct(double t, double alpha) {
    const double num = alpha * (1.0 - alpha) * (t - 1.0) * (t - 1.0);
    return num / (pow_minus_one(t, alpha) * pow_minus_one(t, 1.0 - alpha));
}

double eval_wyd(double t, double alpha) {
    if (t == 0.0) {
        return alpha * (1.0 - alpha);
    }
    if (t == 1.0) {
        return 1.0;
    }
    if (std::abs(t - 1.0) < kAlphaWindow) {
        // Linear interpolation through (1, f(1)) and the window edge on t's side.
        const double edge = t > 1.0 ? 1.0 + kAlphaWindow : 1.0 - kAlphaWindow;
        const double slope = (eval_wyd_direct(edge, alpha) - 1.0) / (edge - 1.0);
        return 1.0 + slope * (t - 1.0);
    }
    return eval_wyd_direct(t, alpha);
}

void require_nonneg(double v, const char* what) {
    if (!(v >= 0.0)) {
        throw std::domain_error(std::string(what) + " must be nonnegative");
    }
}

} // namespace

MonotoneFunctionSpec MonotoneFunctionSpec::wy() {
    return {MonotoneFamily::WignerYanase, 0.0, 0.25};
}

MonotoneFunctionSpec MonotoneFunctionSpec::sld() {
    return {MonotoneFamily::Sld, 0.0, 0.5};
}

MonotoneFunctionSpec MonotoneFunctionSpec::wyd(double alpha) {
    if (!(alpha >= kAlphaMin && alpha <= kAlphaMax)) {
        throw std::domain_error("wyd alpha must lie in [1e-3, 1-1e-3]");
    }
    return {MonotoneFamily::WydAlpha, alpha, alpha * (1.0 - alpha)};
}

MonotoneFunctionSpec MonotoneFunctionSpec::parse(const std::string& id) {
    if (id == "wy") return wy();
    if (id == "sld") return sld();
    if (id.rfind("wyd:", 0) == 0) {
        const std::string arg = id.substr(4);
        std::size_t pos = 0;
        double alpha = 0.0;
        try {
            alpha = std::stod(arg, &pos);
        } catch (const std::exception&) {
            throw ParseError("invalid alpha in spec id '" + id + "'");
        }
        if (pos != arg.size()) {
            throw ParseError("invalid alpha in spec id '" + id + "'");
        }
        return wyd(alpha);
    }
    throw ParseError("unknown function spec '" + id + "' (expected wy, sld or wyd:<alpha>)");
}

std::string MonotoneFunctionSpec::name() const {
    switch (family_) {
        case MonotoneFamily::WignerYanase: return "wy";
        case MonotoneFamily::Sld: return "sld";
        case MonotoneFamily::WydAlpha: {
            char buf[48];
            std::snprintf(buf, sizeof(buf), "wyd:%.17g", alpha_);
            return buf;
        }
    }
    return "?";
}

double eval_f(const MonotoneFunctionSpec& spec, double t) {
    require_nonneg(t, "eval_f argument");
    switch (spec.family()) {
        case MonotoneFamily::WignerYanase: {
            const double s = std::sqrt(t) + 1.0;
            return 0.25 * s * s;
        }
        case MonotoneFamily::Sld:
            return 0.5 * (t + 1.0);
        case MonotoneFamily::WydAlpha:
            return eval_wyd(t, spec.alpha());
    }
    throw std::logic_error("unreachable");
}

double eval_mean(const MonotoneFunctionSpec& spec, double x, double y) {
    require_nonneg(x, "eval_mean argument");
    require_nonneg(y, "eval_mean argument");
    if (x == y) {
        return x;
    }
    const double hi = std::max(x, y);
    const double lo = std::min(x, y);
    if (lo == 0.0) {
        return hi * spec.f_zero();
    }
    return hi * eval_f(spec, lo / hi);
}

double eval_tilde(const MonotoneFunctionSpec& spec, double t) {
    require_nonneg(t, "eval_tilde argument");
    const double d = t - 1.0;
    return 0.5 * ((t + 1.0) - d * d * spec.f_zero() / eval_f(spec, t));
}

double eval_tilde_mean(const MonotoneFunctionSpec& spec, double x, double y) {
    require_nonneg(x, "eval_tilde_mean argument");
    require_nonneg(y, "eval_tilde_mean argument");
    if (x == y) {
        return x;
    }
    const double hi = std::max(x, y);
    const double lo = std::min(x, y);
    if (lo == 0.0) {
        return 0.0;
    }
    return hi * eval_tilde(spec, lo / hi);
}

} // namespace masi
