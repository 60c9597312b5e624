#include "bipaths/bgf.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace bipaths {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

/// Calls fn(line_number, tokens) for every non-blank, non-comment line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0, pos = 0;
    for (;;) {
        ++line_no;
        const std::size_t nl = text.find('\n', pos);
        const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
        const auto tokens = tokenize(text.substr(pos, end - pos));
        if (!tokens.empty() && tokens.front().text.front() != '#') fn(line_no, tokens);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

Error located(ErrorCode code, std::size_t line, std::size_t column, const std::string& msg) {
    return Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + msg);
}

Sign parse_sign(const Token& tok, std::size_t line) {
    if (tok.text == "-") return Sign::Minus;
    if (tok.text == "+") return Sign::Plus;
    throw ParseError(line, tok.column, "expected '-' or '+', got '" + std::string(tok.text) + "'");
}

}  // namespace

bool is_valid_name(std::string_view name) noexcept {
    return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

Instance parse_instance(std::string_view text) {
    Instance inst;
    std::unordered_map<std::string, VertexId> ids;

    const auto lookup = [&](const Token& tok, std::size_t line) {
        auto it = ids.find(std::string(tok.text));
        if (it == ids.end())
            throw located(ErrorCode::UnknownVertex, line, tok.column,
                          "undeclared vertex '" + std::string(tok.text) + "'");
        return it->second;
    };

    for_each_line(text, [&](std::size_t line, const std::vector<Token>& toks) {
        const std::string_view kw = toks[0].text;
        if (kw == "v") {
            if (toks.size() != 2) throw ParseError(line, toks[0].column, "expected 'v <name>'");
            const Token& name = toks[1];
            if (!is_valid_name(name.text))
                throw ParseError(line, name.column, "invalid name '" + std::string(name.text) + "'");
            if (ids.count(std::string(name.text)))
                throw located(ErrorCode::DuplicateVertex, line, name.column,
                              "vertex '" + std::string(name.text) + "' declared twice");
            ids.emplace(std::string(name.text), inst.graph.add_vertex());
            inst.names.emplace_back(name.text);
        } else if (kw == "e") {
            if (toks.size() != 5)
                throw ParseError(line, toks[0].column, "expected 'e <u> <sign> <v> <sign>'");
            const VertexId u = lookup(toks[1], line);
            const Sign su = parse_sign(toks[2], line);
            const VertexId v = lookup(toks[3], line);
            const Sign sv = parse_sign(toks[4], line);
            if (u == v)
                throw located(ErrorCode::LoopRejected, line, toks[3].column,
                              "loop at '" + std::string(toks[1].text) + "'");
            inst.graph.add_edge(u, su, v, sv);
        } else if (kw == "x") {
            if (toks.size() < 2) throw ParseError(line, toks[0].column, "expected 'x <name>...'");
            for (std::size_t i = 1; i < toks.size(); ++i) inst.x.push_back(lookup(toks[i], line));
        } else {
            throw ParseError(line, toks[0].column, "unknown directive '" + std::string(kw) + "'");
        }
    });
    inst.x = normalized(std::move(inst.x));
    return inst;
}

Instance read_instance(std::istream& in) {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_instance(text);
}

void write_instance(std::ostream& out, const Instance& inst) {
    for (VertexId v = 0; v < inst.graph.num_vertices(); ++v) out << "v " << inst.name(v) << '\n';
    for (const auto& e : inst.graph.edges())
        out << "e " << inst.name(e.u) << ' ' << to_char(e.sign_u) << ' ' << inst.name(e.v) << ' '
            << to_char(e.sign_v) << '\n';
    if (!inst.x.empty()) {
        out << 'x';
        for (VertexId v : inst.x) out << ' ' << inst.name(v);
        out << '\n';
    }
}

std::string to_bgf(const Instance& inst) {
    std::ostringstream os;
    write_instance(os, inst);
    return os.str();
}

EdgeList parse_edge_list(std::string_view text) {
    EdgeList list;
    std::unordered_map<std::string, VertexId> ids;
    const auto intern = [&](const Token& tok, std::size_t line) {
        if (!is_valid_name(tok.text))
            throw ParseError(line, tok.column, "invalid name '" + std::string(tok.text) + "'");
        auto [it, fresh] = ids.emplace(std::string(tok.text), static_cast<VertexId>(list.names.size()));
        if (fresh) list.names.emplace_back(tok.text);
        return it->second;
    };

    for_each_line(text, [&](std::size_t line, const std::vector<Token>& toks) {
        if (toks[0].text == "terminals:") {
            for (std::size_t i = 1; i < toks.size(); ++i) list.x.push_back(intern(toks[i], line));
            return;
        }
        if (toks.size() > 2)
            throw ParseError(line, toks[2].column, "expected '<u> <v>' or '<u>'");
        const VertexId u = intern(toks[0], line);
        if (toks.size() == 1) return;
        const VertexId v = intern(toks[1], line);
        if (u == v)
            throw located(ErrorCode::LoopRejected, line, toks[1].column,
                          "loop at '" + std::string(toks[0].text) + "'");
        list.pairs.emplace_back(u, v);
    });
    list.x = normalized(std::move(list.x));
    return list;
}

Instance convert(const EdgeList& list, ConvertMode mode) {
    Instance inst;
    inst.names = list.names;
    inst.x = list.x;
    if (mode == ConvertMode::Digraph) {
        inst.graph = from_digraph(Digraph{list.names.size(), list.pairs});
    } else {
        Multigraph g(list.names.size());
        for (auto [u, v] : list.pairs) g.add_edge(u, v);
        inst.graph = from_undirected(g);
    }
    return inst;
}

}  // namespace bipaths
