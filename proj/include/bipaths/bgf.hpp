#pragma once

// BGF, a line-oriented text format for bidirected instances:
//
//   # comment
//   v <name>                        declare a vertex (ids in declaration order)
//   e <u> <sign_u> <v> <sign_v>     edge; sign is '-' or '+'
//   x <name> [<name> ...]           add terminals
//
// Names match [A-Za-z0-9_]+. Parallel edges are allowed.

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bipaths/bigraph.hpp"

namespace bipaths {

struct Instance {
    BidirectedMultigraph graph;
    VertexSet x;
    std::vector<std::string> names;

    const std::string& name(VertexId v) const { return names.at(v); }
};

/// Throws ParseError (with line and column), LoopRejected, UnknownVertex or
/// DuplicateVertex; the message of the latter three carries "line:column".
Instance parse_instance(std::string_view text);
Instance read_instance(std::istream& in);

void write_instance(std::ostream& out, const Instance& inst);
std::string to_bgf(const Instance& inst);

/// Plain edge list used by `convert`: "<u> <v>" per line, a lone "<u>"
/// declares an isolated vertex, "terminals: <names...>" adds terminals, '#'
/// starts a comment.
/// Vertices are numbered by first appearance.
struct EdgeList {
    std::vector<std::string> names;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    VertexSet x;
};

/// Throws ParseError or LoopRejected.
EdgeList parse_edge_list(std::string_view text);

enum class ConvertMode { Digraph, Undirected };

/// Reduces an arc or edge list to a bidirected instance.
Instance convert(const EdgeList& list, ConvertMode mode);

bool is_valid_name(std::string_view name) noexcept;

}  // namespace bipaths
