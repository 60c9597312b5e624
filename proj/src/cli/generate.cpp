#include "bipaths/generate.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace bipaths {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r < limit) return r % bound;
    }
}

SignWeights parse_sign_weights(std::string_view text) {
    if (text == "mixed" || text == "uniform") return {1, 1, 1, 1};
    if (text == "--") return {1, 0, 0, 0};
    if (text == "-+") return {0, 1, 0, 0};
    if (text == "+-") return {0, 0, 1, 0};
    if (text == "++") return {0, 0, 0, 1};

    std::vector<std::string_view> parts;
    for (std::size_t pos = 0;;) {
        const std::size_t comma = text.find(',', pos);
        parts.push_back(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (parts.size() != 4)
        throw Error(ErrorCode::InvalidParameter, "bad sign distribution '" + std::string(text) + "'");
    SignWeights w{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (parts[i].empty() || parts[i].size() > 9 ||
            parts[i].find_first_not_of("0123456789") != std::string_view::npos)
            throw Error(ErrorCode::InvalidParameter, "bad weight '" + std::string(parts[i]) + "'");
        w[i] = static_cast<std::uint32_t>(std::stoul(std::string(parts[i])));
    }
    if (w[0] + w[1] + w[2] + w[3] == 0)
        throw Error(ErrorCode::InvalidParameter, "sign weights are all zero");
    return w;
}

Instance generate_instance(const GeneratorParams& p) {
    if (p.vertices == 0) throw Error(ErrorCode::InvalidParameter, "need at least one vertex");
    if (!(p.x_fraction >= 0.0 && p.x_fraction <= 1.0))
        throw Error(ErrorCode::InvalidParameter, "x fraction must lie in [0, 1]");
    if (p.edges > 0 && p.vertices < 2)
        throw Error(ErrorCode::InvalidParameter, "loop-free edges need two vertices");
    const std::uint64_t total = std::accumulate(p.signs.begin(), p.signs.end(), std::uint64_t{0});
    if (total == 0) throw Error(ErrorCode::InvalidParameter, "sign weights are all zero");

    std::mt19937_64 rng(p.seed);
    Instance inst;
    inst.graph = BidirectedMultigraph(p.vertices);
    for (std::size_t v = 0; v < p.vertices; ++v) inst.names.push_back("v" + std::to_string(v));

    for (std::size_t i = 0; i < p.edges; ++i) {
        const auto u = static_cast<VertexId>(uniform_below(rng, p.vertices));
        auto v = static_cast<VertexId>(uniform_below(rng, p.vertices - 1));
        if (v >= u) ++v;
        std::uint64_t pick = uniform_below(rng, total);
        std::size_t kind = 0;
        while (pick >= p.signs[kind]) pick -= p.signs[kind++];
        const Sign su = kind < 2 ? Sign::Minus : Sign::Plus;
        const Sign sv = kind % 2 == 0 ? Sign::Minus : Sign::Plus;
        inst.graph.add_edge(u, su, v, sv);
    }

    // The small epsilon keeps products such as 0.3 * 10 from rounding up.
    const auto count = static_cast<std::size_t>(
        std::ceil(p.x_fraction * static_cast<double>(p.vertices) - 1e-9));
    std::vector<VertexId> order(p.vertices);
    std::iota(order.begin(), order.end(), 0u);
    for (std::size_t i = 0; i < count; ++i) {
        const auto j = i + static_cast<std::size_t>(uniform_below(rng, p.vertices - i));
        std::swap(order[i], order[j]);
    }
    inst.x = normalized(VertexSet(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count)));
    return inst;
}

}  // namespace bipaths
