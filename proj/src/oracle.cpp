#include "renorm/oracle.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <functional>
#include <limits>

namespace renorm {

namespace {

constexpr double kTolerance = 1e-10;

using boost::math::quadrature::exp_sinh;
using boost::math::quadrature::gauss_kronrod;

double halfLine(exp_sinh<double> &integrator, const std::function<double(double)> &f, double *error) {
    double err = 0;
    const double v = integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), kTolerance, &err);
    if (error)
        *error = err;
    return v;
}

class Quadrature {
public:
    Quadrature(Model model, double eps) : model_(model), eps_(eps) {}

    double value(const Ipw &t, double c, double *error = nullptr) {
        const double j = t.root().loops;
        auto content = [&](double y) {
            double v = 1;
            for (const auto &child : t.children())
                v *= value(child, y);
            return v;
        };
        if (model_ == Model::Iterated) {
            // y = c e^s
            auto f = [&](double s) {
                const double y = c * std::exp(s);
                if (!std::isfinite(y))
                    return 0.0;
                return std::pow(y, -j * eps_) * content(y);
            };
            return halfLine(integrator_, f, error);
        }
        // y = e^t, split at t = ln c
        const double t0 = std::log(c);
        auto g = [&](double tt) {
            const double y = std::exp(tt);
            if (!std::isfinite(y))
                return 0.0;
            const double measure =
                tt < 0 ? std::exp(tt * (1 - j * eps_)) / (y + c) : std::exp(-tt * j * eps_) / (1 + c / y);
            return measure * content(y + c);
        };
        double e1 = 0, e2 = 0;
        const double lower = halfLine(integrator_, [&](double s) { return g(t0 - s); }, &e1);
        const double upper = halfLine(integrator_, [&](double s) { return g(t0 + s); }, &e2);
        if (error)
            *error = e1 + e2;
        return lower + upper;
    }

private:
    Model model_;
    double eps_;
    exp_sinh<double> integrator_;
};

double barValue(const Ipw &t, double eps, double c, double *error) {
    const double j = t.root().loops;
    auto f = [&](double y) {
        double v = std::pow(y, -1 - j * eps);
        for (const auto &child : t.children())
            v *= barValue(child, eps, y, nullptr);
        return v;
    };
    double err = 0;
    const double v = gauss_kronrod<double, 15>::integrate(f, 1.0, c, 15, 1e-13, &err);
    if (error)
        *error = err;
    return -v;
}

void checkShape(const Word &w) {
    if (w.depth() > 3)
        throw OracleError("numeric oracle supports depth <= 3, got " + std::to_string(w.depth()));
    for (const auto &t : w.factors())
        if (t.maxDegree() != 0)
            throw OracleError("numeric oracle supports logarithmic letters only");
}

OracleResult finish(double value, double error) {
    if (!std::isfinite(value))
        throw OracleError("quadrature did not converge");
    return {value, error, 1e-6};
}

} // namespace

OracleResult numericOracle(const Word &w, Model model, double eps, double c) {
    checkShape(w);
    if (!(eps > 0) || !(c > 0))
        throw OracleError("numeric oracle needs eps > 0 and c > 0");
    Quadrature q(model, eps);
    double value = 1, error = 0;
    try {
        for (const auto &t : w.factors()) {
            double e = 0;
            const double v = q.value(t, c, &e);
            error = std::abs(value) * e + std::abs(v) * error;
            value *= v;
        }
    } catch (const std::exception &ex) {
        throw OracleError(std::string("quadrature failed: ") + ex.what());
    }
    return finish(value, error);
}

OracleResult numericBarOracle(const Word &w, double eps, double c) {
    checkShape(w);
    if (!(eps >= 0) || !(c > 0))
        throw OracleError("bar oracle needs eps >= 0 and c > 0");
    double value = 1, error = 0;
    try {
        for (const auto &t : w.factors()) {
            double e = 0;
            const double v = barValue(t, eps, c, &e);
            error = std::abs(value) * e + std::abs(v) * error;
            value *= v;
        }
    } catch (const std::exception &ex) {
        throw OracleError(std::string("quadrature failed: ") + ex.what());
    }
    return finish(value, error);
}

} // namespace renorm
