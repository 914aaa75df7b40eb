#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

struct SpectrumSample {
    double kl = 0.0;
    double t2 = 0.0;
    bool refined = false;  // inserted by adaptive refinement, not the base grid
};

/// Transmission-coefficient samples with strictly increasing kl.
struct Spectrum {
    std::vector<SpectrumSample> samples;
};

struct SweepOptions {
    bool adaptive = false;
    int jobs = 1;                  // evaluation worker threads
    double jump_threshold = 0.05;  // |t2 step| that triggers refinement
    double min_spacing = 1e-6;     // refinement stops below this spacing
};

/// Samples |T|^2 on a uniform n_base-point grid over [lo, hi] (endpoints
/// included). With adaptive refinement, midpoints are inserted wherever the
/// t2 step exceeds the threshold or a resonance-pole projection falls inside
/// the interval, until local spacing drops under min_spacing. The coupling
/// singularity at k = 0 is evaluated one ulp-scale nudge off the point.
/// Deterministic for fixed inputs regardless of the worker count.
Spectrum sweep(const ScatteringGraph& g, double lo, double hi, int n_base,
               const SweepOptions& opts = {});

struct DifferencePoint {
    double kl = 0.0;
    double delta = 0.0;
};

/// Pointwise t2 difference; the spectra must share the exact grid.
std::vector<DifferencePoint> difference(const Spectrum& a, const Spectrum& b);

/// Sign-change abscissas of the difference data. With a live evaluator the
/// crossings are bisection-refined to 1e-6; otherwise linearly interpolated
/// from the data alone.
std::vector<double> zero_crossings(const std::vector<DifferencePoint>& d,
                                   const std::function<double(double)>& delta_at = {});

struct Band {
    double lo = 0.0;
    double hi = 0.0;
    double max_t2_inside = 0.0;
    double threshold = 0.0;
};

/// Maximal intervals where t2 stays at or below tau. Endpoints interior to
/// the sweep are refined by bisection on t2 = tau (live evaluator when given,
/// data interpolation otherwise); bands narrower than 1e-3 are dropped.
std::vector<Band> suppression_bands(const Spectrum& s, double tau,
                                    const std::function<double(double)>& t2_at = {});

struct Peak {
    double kl = 0.0;
    double t2 = 0.0;
    double fwhm = 0.0;
};

/// Local maxima of |T|^2 above min_height in [lo, hi], located on an adaptive
/// pole-seeded sweep so that narrow resonances are not skipped, then refined
/// by ternary search; fwhm is found by bisection on t2 = t2_peak / 2.
std::vector<Peak> find_peaks(const ScatteringGraph& g, double lo, double hi, double min_height);

struct Strip {
    double re_lo = 0.0;
    double re_hi = 0.0;
    double im_max = 0.0;
};

struct Resonance {
    std::complex<double> kl;       // pole position, Im < 0
    double width = 0.0;            // 2 |Im kl|
    std::complex<double> z_root;   // |z| > 1 denominator root behind it
    double residual = 0.0;         // |den(z_root)| on max-normalized coefficients
};

/// Resonance poles from the exact reduced denominator: roots with |z| > 1 map
/// to kl = -i Log z shifted into [0, 2pi). Roots on the unit circle (within
/// 1e-12) are real-axis features, not resonances, and are skipped. Requires a
/// Neumann-Kirchhoff graph. Results sorted by Re(kl).
std::vector<Resonance> find_poles(const ScatteringGraph& g, const Strip& strip);

}  // namespace qgraph
