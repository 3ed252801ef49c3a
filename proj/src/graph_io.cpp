#include "influmax/graph_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace influmax {

namespace {

std::string_view next_token(std::string_view& rest) {
    std::size_t b = rest.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        rest = {};
        return {};
    }
    std::size_t e = rest.find_first_of(" \t\r", b);
    std::string_view tok = rest.substr(b, e == std::string_view::npos ? rest.size() - b : e - b);
    rest = e == std::string_view::npos ? std::string_view{} : rest.substr(e);
    return tok;
}

NodeId parse_node(std::string_view tok, std::size_t line_no) {
    NodeId value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": expected node id, got '" +
                         std::string(tok) + "'");
    }
    return value;
}

double parse_prob(std::string_view tok, std::size_t line_no) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": expected probability, got '" +
                         std::string(tok) + "'");
    }
    if (!(value >= 0.0 && value <= 1.0)) {
        throw ValidationError("line " + std::to_string(line_no) + ": probability " +
                              std::string(tok) + " outside [0,1]");
    }
    return value;
}

}  // namespace

EdgeList load_snap_edgelist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");

    EdgeList edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view rest(line);
        std::string_view u_tok = next_token(rest);
        if (u_tok.empty() || u_tok.front() == '#') continue;

        std::string_view v_tok = next_token(rest);
        if (v_tok.empty()) {
            throw ParseError("line " + std::to_string(line_no) + ": missing target node");
        }
        EdgeSpec e;
        e.u = parse_node(u_tok, line_no);
        e.v = parse_node(v_tok, line_no);
        std::string_view p_tok = next_token(rest);
        if (!p_tok.empty()) {
            e.p = parse_prob(p_tok, line_no);
            std::string_view extra = next_token(rest);
            if (!extra.empty()) {
                throw ParseError("line " + std::to_string(line_no) + ": trailing tokens");
            }
        }
        edges.push_back(e);
    }
    return edges;
}

void write_edgelist(const Graph& g, const std::string& path, bool with_probs) {
    std::FILE* out = std::fopen(path.c_str(), "w");
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto targets = g.out_neighbors(u);
        auto probs = g.out_probs(u);
        for (std::size_t i = 0; i < targets.size(); ++i) {
            if (with_probs) {
                std::fprintf(out, "%u %u %.17g\n", u, targets[i], probs[i]);
            } else {
                std::fprintf(out, "%u %u\n", u, targets[i]);
            }
        }
    }
    std::fclose(out);
}

}  // namespace influmax
