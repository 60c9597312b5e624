#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "bipaths/bgf.hpp"
#include "bipaths/solver.hpp"

namespace bipaths {

/// Highlights drawn on top of the plain instance.
struct DotOverlay {
    std::optional<PackingResult> packing;
    std::optional<Certificate> certificate;
    std::optional<VertexSet> hitting_set;
};

/// Undirected DOT graph. Every edge is written "u -- v" in declaration
/// orientation with label "<sign_u><sign_v>"; terminals are boxes. Packed
/// paths get one colour and class "pathN" each, certificate vertices carry
/// role="S"|"T"|"ST" and edges outside B_{S,T} are dashed, hitting-set
/// vertices carry hitting="true".
void write_dot(std::ostream& out, const Instance& inst, const DotOverlay& overlay = {});
std::string to_dot(const Instance& inst, const DotOverlay& overlay = {});

}  // namespace bipaths
