#include "qgraph/amplitudes.hpp"

#include <cmath>
#include <stdexcept>

namespace qgraph {

AmplitudePair delta_amplitudes(int d, double alpha, std::complex<double> k) {
    if (d < 1) throw std::invalid_argument("delta_amplitudes: degree must be positive");
    if (!std::isfinite(alpha)) throw std::invalid_argument("delta_amplitudes: alpha must be finite");
    const std::complex<double> ik = std::complex<double>(0.0, 1.0) * k;
    const std::complex<double> den = ik * static_cast<double>(d) - alpha;
    if (den == std::complex<double>(0.0, 0.0))
        throw std::domain_error("delta_amplitudes: singular coupling (ikd == alpha)");
    return {(alpha - static_cast<double>(d - 2) * ik) / den, 2.0 * ik / den};
}

RationalAmplitudePair nk_amplitudes(int d) {
    if (d < 1) throw std::invalid_argument("nk_amplitudes: degree must be positive");
    return {make_rational(2 - d, d), make_rational(2, d)};
}

}  // namespace qgraph
