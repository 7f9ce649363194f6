#include "distblock/serialization.hpp"

#include <fstream>
#include <sstream>

#include "distblock/errors.hpp"
#include "distblock/t6_family.hpp"

namespace distblock::jsonio {

json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw InvalidSpecError("expected a rational (string or integer), got: " + j.dump());
}

json matrix_to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(rational_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw InvalidSpecError("matrix JSON must be an array of arrays");
    const std::size_t rows = j.size();
    std::size_t cols = rows == 0 ? 0 : j[0].size();
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw InvalidSpecError("matrix JSON rows have inconsistent lengths");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j[i][c]);
    }
    return m;
}

json spec_to_json(const MultipartiteSpec& spec) { return json(spec.parts); }

json graph_to_json(const graphs::MultiBlockGraph& g) {
    json blocks = json::array();
    for (const auto& blk : g.blocks) blocks.push_back(json{{"parts", blk.parts}});
    return json{{"vertex_count", g.vertex_count}, {"blocks", std::move(blocks)}};
}

graphs::MultiBlockGraph graph_from_json(const json& j) {
    graphs::MultiBlockGraph g;
    try {
        g.vertex_count = j.at("vertex_count").get<graphs::VertexId>();
        for (const auto& jb : j.at("blocks")) {
            graphs::BlockPlacement blk;
            blk.parts = jb.at("parts").get<std::vector<std::vector<graphs::VertexId>>>();
            g.blocks.push_back(std::move(blk));
        }
    } catch (const json::exception& e) {
        throw InvalidSpecError(std::string("bad graph JSON: ") + e.what());
    }
    graphs::require_valid(g);
    return g;
}

json verdict_to_json(const singularity::SingularityVerdict& v,
                     const MultipartiteSpec& spec) {
    auto part = [](const singularity::Verdict& p) {
        json out{{"zero", p.zero}, {"case", p.case_name()}};
        if (p.l) {
            out["witness"] = {{"l", *p.l}, {"tail", p.tail}};
            out["l_bound_ok"] = p.l_bound_ok;
        }
        return out;
    };
    return json{{"spec", spec.parts}, {"det", part(v.det)}, {"cof", part(v.cof)}};
}

namespace {

graphs::MultiBlockGraph parse_tree_shortcut(const std::string& body) {
    std::vector<std::pair<graphs::VertexId, graphs::VertexId>> edges;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        auto dash = tok.find('-');
        if (dash == std::string::npos)
            throw InvalidSpecError("tree edge must look like 'u-v': " + tok);
        try {
            edges.emplace_back(std::stoi(tok.substr(0, dash)),
                               std::stoi(tok.substr(dash + 1)));
        } catch (const std::exception&) {
            throw InvalidSpecError("bad tree edge: " + tok);
        }
    }
    if (edges.empty()) throw InvalidSpecError("tree shortcut needs at least one edge");
    return graphs::tree_graph(edges);
}

graphs::MultiBlockGraph parse_star_shortcut(const std::string& body) {
    auto x = body.rfind('x');
    if (x == std::string::npos)
        throw InvalidSpecError("star_of_blocks needs '<spec>x<b>': " + body);
    auto spec = MultipartiteSpec::parse(body.substr(0, x));
    int b = 0;
    try {
        b = std::stoi(body.substr(x + 1));
    } catch (const std::exception&) {
        throw InvalidSpecError("bad block count in star_of_blocks: " + body);
    }
    return graphs::star_of_blocks(spec, b);
}

graphs::MultiBlockGraph parse_t6_shortcut(const std::string& body) {
    auto comma = body.find(',');
    if (comma == std::string::npos)
        throw InvalidSpecError("t6_tn needs '<n>,<b>': " + body);
    try {
        t6family::T6TnSpec spec(std::stol(body.substr(0, comma)),
                                std::stol(body.substr(comma + 1)));
        return t6family::as_graph(spec);
    } catch (const std::invalid_argument&) {
        throw InvalidSpecError("bad t6_tn parameters: " + body);
    }
}

}  // namespace

graphs::MultiBlockGraph parse_graph_argument(const std::string& arg) {
    if (arg.empty()) throw InvalidSpecError("empty graph argument");
    if (arg.front() == '{') {
        try {
            return graph_from_json(json::parse(arg));
        } catch (const json::exception& e) {
            throw InvalidSpecError(std::string("bad graph JSON: ") + e.what());
        }
    }
    if (arg.starts_with("tree:")) return parse_tree_shortcut(arg.substr(5));
    if (arg.starts_with("star_of_blocks:")) return parse_star_shortcut(arg.substr(15));
    if (arg.starts_with("t6_tn:")) return parse_t6_shortcut(arg.substr(6));
    if (arg.ends_with(".json")) {
        std::ifstream in(arg);
        if (!in) throw InvalidSpecError("cannot open graph file: " + arg);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw InvalidSpecError("bad JSON in " + arg + ": " + e.what());
        }
        return graph_from_json(j);
    }
    return graphs::single_block(MultipartiteSpec::parse(arg));
}

std::string digest(const std::string& canonical) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace distblock::jsonio
