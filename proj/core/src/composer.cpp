#include "qgraph/composer.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

#include "qgraph/catalog.hpp"
#include "qgraph/graph_io.hpp"

namespace qgraph {

namespace {

void require_two_lead(const ScatteringGraph& g, const char* who) {
    if (!validate(g).ok())
        throw std::invalid_argument(std::string(who) + ": operand must be a connected two-lead graph");
}

/// Copies src into dest with labels prefixed; returns the index offset.
int append_graph(ScatteringGraph& dest, const ScatteringGraph& src, const std::string& prefix) {
    const int offset = dest.vertex_count();
    for (const auto& v : src.vertices()) dest.add_vertex(prefix + v.label, v.alpha);
    for (const auto& e : src.edges()) dest.add_edge(offset + e.u, offset + e.v, e.mult);
    return offset;
}

}  // namespace

ScatteringGraph series(const ScatteringGraph& a, const ScatteringGraph& b) {
    require_two_lead(a, "series");
    require_two_lead(b, "series");
    ScatteringGraph out;
    const int oa = append_graph(out, a, "a.");
    const int ob = append_graph(out, b, "b.");
    // lead-for-edge swap at the junction keeps both degrees unchanged
    out.add_edge(oa + a.exit(), ob + b.entrance());
    out.set_leads(oa + a.entrance(), ob + b.exit());
    return out;
}

ScatteringGraph parallel(const ScatteringGraph& a, const ScatteringGraph& b) {
    require_two_lead(a, "parallel");
    require_two_lead(b, "parallel");
    ScatteringGraph out;
    const int hub_in = out.add_vertex("in");
    const int hub_out = out.add_vertex("out");
    const int oa = append_graph(out, a, "a.");
    const int ob = append_graph(out, b, "b.");
    out.add_edge(hub_in, oa + a.entrance());
    out.add_edge(hub_in, ob + b.entrance());
    out.add_edge(hub_out, oa + a.exit());
    out.add_edge(hub_out, ob + b.exit());
    out.set_leads(hub_in, hub_out);
    return out;
}

Circuit Circuit::leaf_of(ScatteringGraph g) {
    Circuit c;
    c.kind = Kind::leaf;
    c.graph = std::move(g);
    return c;
}

Circuit Circuit::series_of(std::vector<Circuit> children) {
    if (children.size() < 2)
        throw std::invalid_argument("circuit: series needs at least two operands");
    Circuit c;
    c.kind = Kind::series;
    c.children = std::move(children);
    return c;
}

Circuit Circuit::parallel_of(Circuit a, Circuit b) {
    Circuit c;
    c.kind = Kind::parallel;
    c.children.push_back(std::move(a));
    c.children.push_back(std::move(b));
    return c;
}

ScatteringGraph build_circuit(const Circuit& c) {
    switch (c.kind) {
        case Circuit::Kind::leaf:
            return c.graph;
        case Circuit::Kind::series: {
            if (c.children.size() < 2)
                throw std::invalid_argument("circuit: series needs at least two operands");
            ScatteringGraph acc = build_circuit(c.children[0]);
            for (size_t i = 1; i < c.children.size(); ++i)
                acc = series(acc, build_circuit(c.children[i]));
            return acc;
        }
        case Circuit::Kind::parallel:
            if (c.children.size() != 2)
                throw std::invalid_argument("circuit: parallel needs exactly two operands");
            return parallel(build_circuit(c.children[0]), build_circuit(c.children[1]));
    }
    throw std::logic_error("circuit: unreachable");
}

namespace {

class CircuitParser {
public:
    explicit CircuitParser(const std::string& text) : text_(text) {}

    Circuit parse() {
        Circuit c = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return c;
    }

private:
    Circuit parse_expr() {
        skip_ws();
        const std::string token = read_token();
        skip_ws();
        const bool call = pos_ < text_.size() && text_[pos_] == '(';
        if (call && (token == "S" || token == "P")) {
            ++pos_;  // consume '('
            std::vector<Circuit> children;
            children.push_back(parse_expr());
            skip_ws();
            while (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                children.push_back(parse_expr());
                skip_ws();
            }
            if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
            ++pos_;
            if (token == "S") return Circuit::series_of(std::move(children));
            if (children.size() != 2) fail("P takes exactly two operands");
            return Circuit::parallel_of(std::move(children[0]), std::move(children[1]));
        }
        if (call) fail("only S(...) and P(...) are operators");
        if (token.empty()) fail("expected a graph name");
        if (token[0] == '@') return Circuit::leaf_of(load_graph_file(token.substr(1)));
        return Circuit::leaf_of(build_named(token));
    }

    std::string read_token() {
        size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != ',')
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("circuit '" + text_ + "': " + why + " at position " +
                                    std::to_string(pos_));
    }

    const std::string& text_;
    size_t pos_ = 0;
};

}  // namespace

Circuit parse_circuit(const std::string& text) { return CircuitParser(text).parse(); }

ScatteringGraph build_circuit(const std::string& text) { return build_circuit(parse_circuit(text)); }

}  // namespace qgraph
