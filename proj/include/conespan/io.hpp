#pragma once

// Text point files and JSON graph documents. Point files carry one point
// per line as two whitespace-separated decimals; '#' starts a comment and
// a '# label <role>' comment assigns the role to the next point. Doubles
// render with shortest-exact decimals so parse(render(s)) is lossless.

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#include <json.hpp>

#include "conespan/constructions.hpp"
#include "conespan/graph.hpp"

namespace conespan {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Shortest decimal string that round-trips to the same double.
inline std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

inline std::string render_points(const LabeledPointSet& s) {
    std::map<int, std::string> role_of;
    for (const auto& [name, id] : s.labels) role_of[id] = name;
    std::string out;
    for (const Point& p : s.points) {
        auto it = role_of.find(p.id);
        if (it != role_of.end()) {
            out += "# label " + it->second + "\n";
        }
        out += format_double(p.x) + " " + format_double(p.y) + "\n";
    }
    return out;
}

inline LabeledPointSet parse_points(const std::string& document) {
    std::vector<std::pair<double, double>> coords;
    std::map<std::string, int> labels;
    std::string pending_label;

    std::istringstream in(document);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') {
            std::istringstream cs(line.substr(pos + 1));
            std::string word, role;
            if (cs >> word && word == "label" && cs >> role) {
                pending_label = role;
            }
            continue;
        }
        std::istringstream ls(line);
        double x = 0.0, y = 0.0;
        std::string extra;
        if (!(ls >> x >> y)) {
            throw ParseError("malformed point on line " + std::to_string(line_no));
        }
        if (ls >> extra) {
            throw ParseError("trailing content on line " + std::to_string(line_no));
        }
        if (!pending_label.empty()) {
            labels[pending_label] = static_cast<int>(coords.size());
            pending_label.clear();
        }
        coords.emplace_back(x, y);
    }

    LabeledPointSet out;
    try {
        out.points = PointSet(std::move(coords));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    out.labels = std::move(labels);
    return out;
}

inline nlohmann::json graph_to_json(const ConeGraph& g,
                                    const std::map<std::string, int>& labels = {}) {
    nlohmann::json j;
    j["family"] = family_name(g.family);
    j["k"] = g.sys.k;
    j["n"] = g.points.size();
    nlohmann::json pts = nlohmann::json::array();
    for (const Point& p : g.points) pts.push_back({p.x, p.y});
    j["points"] = std::move(pts);
    if (!labels.empty()) j["labels"] = labels;
    nlohmann::json edges = nlohmann::json::array();
    for (const DirectedEdge& e : g.edges) {
        edges.push_back({{"src", e.src},
                         {"dst", e.dst},
                         {"cone", e.cone_at_src},
                         {"euclid", e.euclid},
                         {"projective", e.projective}});
    }
    j["edges"] = std::move(edges);
    j["tie_events"] = g.tie_events;
    return j;
}

struct GraphDocument {
    ConeGraph graph;
    std::map<std::string, int> labels;
};

inline GraphDocument graph_from_json(const nlohmann::json& j) {
    GraphDocument doc;
    const auto family = family_from_name(j.at("family").get<std::string>());
    if (!family) throw ParseError("unknown graph family: " + j.at("family").get<std::string>());
    doc.graph.family = *family;
    doc.graph.sys = ConeSystem(j.at("k").get<int>());
    std::vector<std::pair<double, double>> coords;
    for (const auto& p : j.at("points")) {
        coords.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    }
    try {
        doc.graph.points = PointSet(std::move(coords));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    for (const auto& e : j.at("edges")) {
        DirectedEdge d;
        d.src = e.at("src").get<int>();
        d.dst = e.at("dst").get<int>();
        d.cone_at_src = e.at("cone").get<int>();
        d.euclid = e.at("euclid").get<double>();
        d.projective = e.at("projective").get<double>();
        if (d.src < 0 || d.src >= doc.graph.points.size() || d.dst < 0 ||
            d.dst >= doc.graph.points.size()) {
            throw ParseError("edge endpoint out of range");
        }
        if (d.cone_at_src < 1 || d.cone_at_src > doc.graph.sys.k) {
            throw ParseError("edge cone index out of range");
        }
        doc.graph.edges.push_back(d);
    }
    doc.graph.tie_events = j.value("tie_events", 0L);
    if (j.contains("labels")) {
        for (const auto& [name, id] : j.at("labels").items()) {
            doc.labels[name] = id.get<int>();
        }
    }
    return doc;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failure: " + path);
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    if (!out) throw IoError("write failure: " + path);
}

}  // namespace conespan
