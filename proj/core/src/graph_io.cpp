#include "qgraph/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qgraph {

std::string graph_to_json(const ScatteringGraph& g) {
    nlohmann::ordered_json doc;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : g.vertices())
        doc["vertices"].push_back({{"id", v.label}, {"alpha", v.alpha}});
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges())
        doc["edges"].push_back({{"u", g.vertex(e.u).label},
                                {"v", g.vertex(e.v).label},
                                {"mult", e.mult}});
    if (g.has_leads())
        doc["leads"] = {{"entrance", g.vertex(g.entrance()).label},
                        {"exit", g.vertex(g.exit()).label}};
    return doc.dump(2) + "\n";
}

ScatteringGraph graph_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("graph document parse error: ") + e.what());
    }
    ScatteringGraph g;
    try {
        if (!doc.contains("vertices") || !doc["vertices"].is_array())
            throw std::runtime_error("graph document: missing vertices array");
        for (const auto& v : doc["vertices"])
            g.add_vertex(v.at("id").get<std::string>(), v.value("alpha", 0.0));
        if (doc.contains("edges")) {
            for (const auto& e : doc["edges"]) {
                const std::string u = e.at("u").get<std::string>();
                const std::string v = e.at("v").get<std::string>();
                const int ui = g.find_vertex(u);
                const int vi = g.find_vertex(v);
                if (ui < 0) throw std::runtime_error("graph document: unknown vertex " + u);
                if (vi < 0) throw std::runtime_error("graph document: unknown vertex " + v);
                g.add_edge(ui, vi, e.value("mult", 1));
            }
        }
        if (doc.contains("leads")) {
            const std::string ent = doc["leads"].at("entrance").get<std::string>();
            const std::string ext = doc["leads"].at("exit").get<std::string>();
            const int ei = g.find_vertex(ent);
            const int xi = g.find_vertex(ext);
            if (ei < 0) throw std::runtime_error("graph document: unknown lead vertex " + ent);
            if (xi < 0) throw std::runtime_error("graph document: unknown lead vertex " + ext);
            g.set_leads(ei, xi);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("graph document: ") + e.what());
    }
    return g;
}

ScatteringGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return graph_from_json(buf.str());
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

}  // namespace qgraph
