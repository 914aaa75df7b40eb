#include "qgraph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "qgraph/roots.hpp"
#include "qgraph/solver.hpp"

namespace qgraph {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::function<double(double)> t2_evaluator(const ScatteringGraph& g) {
    return [&g](double kl) {
        try {
            return coefficient(transmission(g, std::complex<double>(kl, 0.0)));
        } catch (const std::domain_error&) {
            // Coupling singularity (k = 0 for Neumann-Kirchhoff); the
            // coefficient extends continuously, so sample a nudge away.
            return coefficient(transmission(g, std::complex<double>(kl + 1e-9, 0.0)));
        }
    };
}

std::vector<double> evaluate_batch(const std::function<double(double)>& f,
                                   const std::vector<double>& xs, int jobs) {
    std::vector<double> out(xs.size());
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(xs.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = static_cast<std::size_t>(w); i < xs.size();
                 i += static_cast<std::size_t>(workers)) {
                out[i] = f(xs[i]);
            }
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

// Re(kl) of every resonance pole, replicated 2pi-periodically into [lo, hi].
// Empty when the graph has no exact form or a root fails to certify.
std::vector<double> pole_projections(const ScatteringGraph& g, double lo, double hi) {
    std::vector<Resonance> poles;
    try {
        poles = find_poles(g, {lo, hi, std::numeric_limits<double>::infinity()});
    } catch (const std::exception&) {
        return {};
    }
    std::vector<double> xs;
    xs.reserve(poles.size());
    for (const auto& p : poles) xs.push_back(p.kl.real());
    std::sort(xs.begin(), xs.end());
    return xs;
}

bool projection_inside(const std::vector<double>& projections, double a, double b) {
    auto it = std::upper_bound(projections.begin(), projections.end(), a);
    return it != projections.end() && *it < b;
}

}  // namespace

Spectrum sweep(const ScatteringGraph& g, double lo, double hi, int n_base,
               const SweepOptions& opts) {
    if (!(lo < hi)) throw std::invalid_argument("sweep: range must satisfy lo < hi");
    if (n_base < 2) throw std::invalid_argument("sweep: need at least two base samples");
    if (opts.jobs < 1) throw std::invalid_argument("sweep: jobs must be positive");

    auto f = t2_evaluator(g);
    std::vector<double> xs(static_cast<std::size_t>(n_base));
    const double step = (hi - lo) / static_cast<double>(n_base - 1);
    for (int i = 0; i < n_base; ++i) xs[static_cast<std::size_t>(i)] = lo + step * i;
    xs.back() = hi;
    std::vector<double> ys = evaluate_batch(f, xs, opts.jobs);

    Spectrum s;
    s.samples.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) s.samples.push_back({xs[i], ys[i], false});
    if (!opts.adaptive) return s;

    const std::vector<double> projections = pole_projections(g, lo, hi);
    for (int round = 0; round < 64; ++round) {
        std::vector<double> mids;
        for (std::size_t i = 0; i + 1 < s.samples.size(); ++i) {
            const auto& a = s.samples[i];
            const auto& b = s.samples[i + 1];
            if (b.kl - a.kl <= opts.min_spacing) continue;
            const bool jump = std::abs(b.t2 - a.t2) > opts.jump_threshold;
            if (jump || projection_inside(projections, a.kl, b.kl)) {
                mids.push_back(0.5 * (a.kl + b.kl));
            }
        }
        if (mids.empty()) break;
        std::vector<double> vals = evaluate_batch(f, mids, opts.jobs);
        std::vector<SpectrumSample> merged;
        merged.reserve(s.samples.size() + mids.size());
        std::size_t j = 0;
        for (const auto& sample : s.samples) {
            while (j < mids.size() && mids[j] < sample.kl) {
                merged.push_back({mids[j], vals[j], true});
                ++j;
            }
            merged.push_back(sample);
        }
        s.samples = std::move(merged);
    }
    return s;
}

std::vector<DifferencePoint> difference(const Spectrum& a, const Spectrum& b) {
    if (a.samples.size() != b.samples.size()) {
        throw std::invalid_argument("difference: spectra have different grids");
    }
    std::vector<DifferencePoint> d;
    d.reserve(a.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        if (a.samples[i].kl != b.samples[i].kl) {
            throw std::invalid_argument("difference: spectra have different grids");
        }
        d.push_back({a.samples[i].kl, a.samples[i].t2 - b.samples[i].t2});
    }
    return d;
}

namespace {

double refine_crossing(double a, double fa, double b, double fb,
                       const std::function<double(double)>& f) {
    if (!f) return a - fa * (b - a) / (fb - fa);
    while (b - a > 1e-6) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

std::vector<double> zero_crossings(const std::vector<DifferencePoint>& d,
                                   const std::function<double(double)>& delta_at) {
    std::vector<double> out;
    // A crossing needs nonzero flanks of opposite sign; a run of exact zeros
    // between them locates the crossing itself, while zeros touched from one
    // sign only (tangencies, endpoint runs) are not crossings.
    std::size_t prev = d.size();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i].delta == 0.0) continue;
        if (prev != d.size() && (d[i].delta < 0.0) != (d[prev].delta < 0.0)) {
            if (i == prev + 1) {
                out.push_back(refine_crossing(d[prev].kl, d[prev].delta, d[i].kl, d[i].delta,
                                              delta_at));
            } else {
                out.push_back(0.5 * (d[prev + 1].kl + d[i - 1].kl));
            }
        }
        prev = i;
    }
    return out;
}

namespace {

// Abscissa where t2 crosses `level` between samples a (one side) and b
// (other side). Bisection against the live evaluator when available.
double refine_level(const SpectrumSample& a, const SpectrumSample& b, double level,
                    const std::function<double(double)>& f) {
    if (!f) {
        const double span = b.t2 - a.t2;
        if (span == 0.0) return 0.5 * (a.kl + b.kl);
        return a.kl + (level - a.t2) / span * (b.kl - a.kl);
    }
    double lo = a.kl;
    double hi = b.kl;
    bool lo_below = a.t2 <= level;
    while (hi - lo > 1e-9) {
        const double m = 0.5 * (lo + hi);
        const bool below = f(m) <= level;
        if (below == lo_below) {
            lo = m;
        } else {
            hi = m;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<Band> suppression_bands(const Spectrum& s, double tau,
                                    const std::function<double(double)>& t2_at) {
    if (!(tau > 0.0)) throw std::invalid_argument("suppression_bands: tau must be positive");
    std::vector<Band> bands;
    const auto& ss = s.samples;
    std::size_t i = 0;
    while (i < ss.size()) {
        if (ss[i].t2 > tau) {
            ++i;
            continue;
        }
        std::size_t j = i;
        double peak_inside = ss[i].t2;
        while (j + 1 < ss.size() && ss[j + 1].t2 <= tau) {
            ++j;
            peak_inside = std::max(peak_inside, ss[j].t2);
        }
        Band band;
        band.threshold = tau;
        band.max_t2_inside = peak_inside;
        band.lo = (i == 0) ? ss.front().kl : refine_level(ss[i - 1], ss[i], tau, t2_at);
        band.hi = (j + 1 == ss.size()) ? ss.back().kl : refine_level(ss[j + 1], ss[j], tau, t2_at);
        if (band.hi < band.lo) std::swap(band.lo, band.hi);
        if (band.hi - band.lo >= 1e-3) bands.push_back(band);
        i = j + 1;
    }
    return bands;
}

namespace {

// Ternary search for the maximum of f on [lo, hi], assuming the bracket holds
// a single local maximum.
double refine_maximum(double lo, double hi, const std::function<double(double)>& f) {
    for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(hi)); ++it) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (f(m1) < f(m2)) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    return 0.5 * (lo + hi);
}

double half_level_edge(const Spectrum& s, std::size_t peak_index, double peak_kl, double half,
                       bool rightward, const std::function<double(double)>& f) {
    const auto& ss = s.samples;
    std::size_t i = peak_index;
    while (true) {
        if (rightward) {
            if (i + 1 >= ss.size()) return ss.back().kl;  // never drops below half: clamp
            ++i;
        } else {
            if (i == 0) return ss.front().kl;
            --i;
        }
        if (ss[i].t2 < half) break;
    }
    double inside = peak_kl;
    double outside = ss[i].kl;
    while (std::abs(outside - inside) > 1e-12) {
        const double m = 0.5 * (inside + outside);
        if (f(m) >= half) {
            inside = m;
        } else {
            outside = m;
        }
    }
    return 0.5 * (inside + outside);
}

}  // namespace

std::vector<Peak> find_peaks(const ScatteringGraph& g, double lo, double hi, double min_height) {
    if (!(lo < hi)) throw std::invalid_argument("find_peaks: range must satisfy lo < hi");
    SweepOptions opts;
    opts.adaptive = true;
    Spectrum s = sweep(g, lo, hi, 2001, opts);
    auto f = t2_evaluator(g);

    std::vector<Peak> peaks;
    const auto& ss = s.samples;
    for (std::size_t i = 1; i + 1 < ss.size(); ++i) {
        if (ss[i].t2 < min_height) continue;
        if (!(ss[i - 1].t2 < ss[i].t2 && ss[i].t2 >= ss[i + 1].t2)) continue;
        Peak p;
        p.kl = refine_maximum(ss[i - 1].kl, ss[i + 1].kl, f);
        p.t2 = f(p.kl);
        if (p.t2 < min_height) continue;
        const double half = 0.5 * p.t2;
        const double left = half_level_edge(s, i, p.kl, half, false, f);
        const double right = half_level_edge(s, i, p.kl, half, true, f);
        p.fwhm = right - left;
        // Neighbouring sample triples can resolve to the same maximum; on a
        // noise-flat top the duplicates can sit a few refined spacings apart.
        if (!peaks.empty() && std::abs(peaks.back().kl - p.kl) < 1e-4) {
            if (p.t2 > peaks.back().t2) peaks.back() = p;
            continue;
        }
        peaks.push_back(p);
    }
    return peaks;
}

std::vector<Resonance> find_poles(const ScatteringGraph& g, const Strip& strip) {
    if (!(strip.re_lo <= strip.re_hi) || !(strip.im_max >= 0.0)) {
        throw std::invalid_argument("find_poles: malformed strip");
    }
    const RationalFunction t = transmission_rational(g);
    const Polynomial& den = t.denominator();
    std::vector<Resonance> out;
    for (const auto& root : roots(den)) {
        const double az = std::abs(root.value);
        // Unit-circle roots are real-axis features and |z| < 1 roots sit in
        // the upper half plane; neither is a resonance.
        if (az <= 1.0 + 1e-12) continue;
        const double width = 2.0 * std::log(az);
        if (0.5 * width > strip.im_max) continue;
        double re = std::arg(root.value);
        if (re < 0.0) re += kTwoPi;  // principal position in [0, 2pi)
        const double residual = std::abs(den.eval_normalized(root.value));
        // Poles repeat 2pi-periodically in Re(kl); emit every copy in range.
        const double first = re + kTwoPi * std::ceil((strip.re_lo - re) / kTwoPi);
        for (double x = first; x <= strip.re_hi; x += kTwoPi) {
            Resonance r;
            r.kl = {x, -0.5 * width};
            r.width = width;
            r.z_root = root.value;
            r.residual = residual;
            out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end(), [](const Resonance& a, const Resonance& b) {
        if (a.kl.real() != b.kl.real()) return a.kl.real() < b.kl.real();
        return a.width < b.width;
    });
    return out;
}

}  // namespace qgraph
