#include "bookx/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "bookx/error.hpp"

namespace bookx {

namespace {

Edge edge_from_json(const nlohmann::json& pair) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
        throw InputError("edge must be a pair of integers");
    return Edge{pair[0].get<int>(), pair[1].get<int>()};
}

int int_field(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
        throw InputError(std::string("missing integer field '") + key + "'");
    return j[key].get<int>();
}

}  // namespace

std::string graph_to_text(const ConvexGraph& g) {
    std::ostringstream out;
    out << "n " << g.n() << " sides=" << (g.allow_sides() ? 1 : 0) << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

ConvexGraph graph_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw InputError("empty graph file");
    std::istringstream header(line);
    std::string tag, sides;
    int n = 0;
    if (!(header >> tag >> n >> sides) || tag != "n" || (sides != "sides=0" && sides != "sides=1"))
        throw InputError("graph header must read 'n <n> sides=<0|1>'");
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        int u = 0, v = 0;
        std::string rest;
        if (!(row >> u >> v) || (row >> rest)) throw InputError("bad edge line: " + line);
        if (u >= v) throw InputError("edge lines need i < j: " + line);
        edges.push_back({u, v});
    }
    return ConvexGraph(n, std::move(edges), sides == "sides=1");
}

nlohmann::json graph_to_json(const ConvexGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.n()}, {"allow_sides", g.allow_sides()}, {"edges", std::move(edges)}};
}

ConvexGraph graph_from_json(const nlohmann::json& j) {
    const int n = int_field(j, "n");
    bool sides = false;
    if (j.contains("allow_sides")) {
        if (!j["allow_sides"].is_boolean()) throw InputError("allow_sides must be boolean");
        sides = j["allow_sides"].get<bool>();
    }
    if (!j.contains("edges") || !j["edges"].is_array()) throw InputError("missing 'edges' array");
    std::vector<Edge> edges;
    for (const auto& pair : j["edges"]) edges.push_back(edge_from_json(pair));
    return ConvexGraph(n, std::move(edges), sides);
}

nlohmann::json drawing_to_json(const BookDrawing& d) {
    nlohmann::json pages = nlohmann::json::array();
    for (const auto& page : d.pages()) {
        nlohmann::json edges = nlohmann::json::array();
        for (const Edge& e : page) edges.push_back({e.u, e.v});
        pages.push_back(std::move(edges));
    }
    return {{"n", d.n()}, {"k", d.k()}, {"pages", std::move(pages)}};
}

BookDrawing drawing_from_json(const nlohmann::json& j) {
    const int n = int_field(j, "n");
    const int k = int_field(j, "k");
    if (!j.contains("pages") || !j["pages"].is_array()) throw InputError("missing 'pages' array");
    std::vector<std::vector<Edge>> pages;
    for (const auto& page : j["pages"]) {
        if (!page.is_array()) throw InputError("each page must be an array of edges");
        auto& out = pages.emplace_back();
        for (const auto& pair : page) out.push_back(edge_from_json(pair));
    }
    return BookDrawing::from_pages(n, k, pages);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << contents;
}

namespace {

nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

bool looks_like_json(const std::string& text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && text[pos] == '{';
}

}  // namespace

ConvexGraph read_graph_file(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    return looks_like_json(text) ? graph_from_json(parse_json(text)) : graph_from_text(text);
}

BookDrawing read_drawing_file(const std::filesystem::path& path) {
    return drawing_from_json(parse_json(read_text_file(path)));
}

}  // namespace bookx
