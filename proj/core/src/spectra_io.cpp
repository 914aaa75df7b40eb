#include "qgraph/spectra_io.hpp"

#include <cstdio>

namespace qgraph {

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string spectrum_csv(const Spectrum& s) {
    std::string out = "kl,t2\n";
    for (const SpectrumSample& p : s.samples) {
        out += format_value(p.kl);
        out += ',';
        out += format_value(p.t2);
        out += '\n';
    }
    return out;
}

std::string difference_csv(const std::vector<DifferencePoint>& d,
                           const std::vector<double>& crossings) {
    std::string out = "kl,delta\n";
    for (const DifferencePoint& p : d) {
        out += format_value(p.kl);
        out += ',';
        out += format_value(p.delta);
        out += '\n';
    }
    for (double c : crossings) {
        out += "# crossing,";
        out += format_value(c);
        out += '\n';
    }
    return out;
}

std::string bands_csv(const std::vector<Band>& bands) {
    std::string out = "lo,hi,max_t2_inside,threshold\n";
    for (const Band& b : bands) {
        out += format_value(b.lo);
        out += ',';
        out += format_value(b.hi);
        out += ',';
        out += format_value(b.max_t2_inside);
        out += ',';
        out += format_value(b.threshold);
        out += '\n';
    }
    return out;
}

std::string poles_csv(const std::vector<Resonance>& poles) {
    std::string out = "re_kl,im_kl,width,residual\n";
    for (const Resonance& p : poles) {
        out += format_value(p.kl.real());
        out += ',';
        out += format_value(p.kl.imag());
        out += ',';
        out += format_value(p.width);
        out += ',';
        out += format_value(p.residual);
        out += '\n';
    }
    return out;
}

}  // namespace qgraph
