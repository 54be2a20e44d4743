#pragma once

#include <stdexcept>

#include "renorm/toymodel.hpp"

// Direct numerical quadrature of the model integrals, independent of the
// closed forms.

namespace renorm {

struct OracleResult {
    double value = 0;
    /// Error estimate reported by the outermost quadrature.
    double error = 0;
    /// Requested relative tolerance.
    double tolerance = 1e-6;
};

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Value of a word by nested adaptive quadrature. Depth at most 3,
/// logarithmic letters only, eps > 0 and c > 0.
OracleResult numericOracle(const Word &w, Model model, double eps, double c);

/// The iterated integral bar[w](c) by nested quadrature over [1, c]; also
/// valid at eps = 0.
OracleResult numericBarOracle(const Word &w, double eps, double c);

} // namespace renorm
