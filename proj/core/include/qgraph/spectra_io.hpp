#pragma once

#include <string>
#include <vector>

#include "qgraph/spectra.hpp"

namespace qgraph {

/// 12-significant-digit decimal rendering, locale-independent; identical
/// inputs always produce identical text.
std::string format_value(double v);

/// CSV with header "kl,t2", one row per sample.
std::string spectrum_csv(const Spectrum& s);

/// CSV with header "kl,delta", then one trailing "# crossing,<kl>" comment
/// line per crossing abscissa.
std::string difference_csv(const std::vector<DifferencePoint>& d,
                           const std::vector<double>& crossings);

/// CSV with header "lo,hi,max_t2_inside,threshold".
std::string bands_csv(const std::vector<Band>& bands);

/// CSV with header "re_kl,im_kl,width,residual".
std::string poles_csv(const std::vector<Resonance>& poles);

}  // namespace qgraph
