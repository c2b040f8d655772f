#pragma once

#include <string>

namespace masi {

enum class MonotoneFamily {
    WignerYanase, ///< f(t) = (sqrt(t)+1)^2/4
    Sld,          ///< f(t) = (t+1)/2, generator of the arithmetic mean
    WydAlpha,     ///< f_a(t) = a(1-a)(t-1)^2 / ((t^a-1)(t^{1-a}-1)), a in (0,1)
};

/// A regular (f(0) > 0) normalized symmetric operator-monotone function.
///
/// Each spec carries its scalar function f, the operator mean it generates
/// m^f(x,y) = x f(y/x), and its non-regular partner f~ defined by
/// f~(t) = [(t+1) - (t-1)^2 f(0)/f(t)] / 2.
class MonotoneFunctionSpec {
public:
    static MonotoneFunctionSpec wy();
    static MonotoneFunctionSpec sld();
    static MonotoneFunctionSpec wyd(double alpha);

    /// Parses "wy", "sld" or "wyd:<alpha>". Throws ParseError on anything else.
    static MonotoneFunctionSpec parse(const std::string& id);

    MonotoneFamily family() const { return family_; }
    double alpha() const { return alpha_; }
    double f_zero() const { return f_zero_; }

    /// Canonical identifier, e.g. "wyd:0.25".
    std::string name() const;

private:
    MonotoneFunctionSpec(MonotoneFamily family, double alpha, double f_zero)
        : family_(family), alpha_(alpha), f_zero_(f_zero) {}

    MonotoneFamily family_;
    double alpha_;
    double f_zero_;
};

/// f(t) for t >= 0. Throws std::domain_error for negative t.
double eval_f(const MonotoneFunctionSpec& spec, double t);

/// The operator mean m^f(x,y) = x f(y/x) for x, y >= 0.
///
/// Boundary conventions: m^f(x,x) = x, m^f(x,0) = x f(0), m^f(0,0) = 0.
/// Arguments are canonicalized so the result is bit-for-bit symmetric.
double eval_mean(const MonotoneFunctionSpec& spec, double x, double y);

/// The non-regular partner f~(t). f~(0) = 0 and f~(1) = 1.
double eval_tilde(const MonotoneFunctionSpec& spec, double t);

/// The mean generated by f~: m^{f~}(x,y) = x f~(y/x), with m^{f~}(x,0) = 0.
///
/// Satisfies m_a(x,y) - m^{f~}(x,y) = (f(0)/2) (x-y)^2 / m^f(x,y).
double eval_tilde_mean(const MonotoneFunctionSpec& spec, double x, double y);

} // namespace masi
