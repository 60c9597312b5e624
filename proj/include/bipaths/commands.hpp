#pragma once

// Subcommands of the `bipaths` tool, callable from tests. Each writes its
// report to `out` and returns the process exit code.

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bipaths/bgf.hpp"
#include "bipaths/generate.hpp"
#include "bipaths/solver.hpp"

namespace bipaths {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int parse = 2;
inline constexpr int internal = 3;
}  // namespace exit_code

int exit_code_for(ErrorCode code) noexcept;

enum class OutputFormat { Human, Machine };

struct CommandOptions {
    OutputFormat format = OutputFormat::Human;
    /// Path-count guard for the exhaustive cross-check in `verify`.
    std::size_t limit = 100'000;
    unsigned jobs = 1;
};

/// "a -[e0]+ b +[e3]- c": sign at the left vertex, edge id, sign at the right.
std::string format_path(const Instance& inst, const SignedPath& p);
/// "{a,b}"
std::string format_set(const Instance& inst, const VertexSet& s);

int cmd_solve(const Instance& inst, const CommandOptions& opts, std::ostream& out);
int cmd_certify(const Instance& inst, const CommandOptions& opts, std::ostream& out);
int cmd_hitting_set(const Instance& inst, std::size_t k, const CommandOptions& opts,
                    std::ostream& out);

/// Solves each file, checks the certificate and packing, and cross-checks
/// against the exhaustive oracles where they fit. Files are processed by
/// `opts.jobs` workers; reports keep input order.
int cmd_verify(const std::vector<std::string>& files, const CommandOptions& opts, std::ostream& out);

std::string cmd_convert(std::string_view text, ConvertMode mode);
std::string cmd_generate(const GeneratorParams& params);

enum class Overlay { None, Paths, Certificate, HittingSet };

/// `k` is only used by the hitting-set overlay.
std::string cmd_export_dot(const Instance& inst, Overlay overlay, std::size_t k = 1);

}  // namespace bipaths
