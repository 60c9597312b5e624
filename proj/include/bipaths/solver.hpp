#pragma once

// Maximum packings of disjoint X-paths, their dual certificates (S, T), and
// hitting sets of size at most 2k - 2, all derived from one maximum matching
// of the auxiliary graph.

#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "bipaths/auxgraph.hpp"
#include "bipaths/bigraph.hpp"

namespace bipaths {

struct PackingResult {
    std::size_t k = 0;
    /// Pairwise disjoint X-paths, each starting at its smaller endpoint,
    /// ordered by first vertex.
    std::vector<SignedPath> paths;
};

struct Certificate {
    VertexSet s;
    VertexSet t;
    std::size_t value = 0;
};

struct HittingSet {
    VertexSet y;
    std::size_t k = 0;
};

/// Packing and certificate computed from a single matching run.
struct Solution {
    PackingResult packing;
    Certificate certificate;
};

/// Throws UnknownVertex if X is not a subset of V(g), and
/// InternalDualityMismatch if the certificate fails to match the packing.
Solution solve(const BidirectedMultigraph& g, const VertexSet& x);

PackingResult max_disjoint_x_paths(const BidirectedMultigraph& g, const VertexSet& x);
Certificate certificate(const BidirectedMultigraph& g, const VertexSet& x);

/// (S, T) read off a vertex set U of H: T from copy-1 membership, S from
/// copy-2 membership, so that U = p(T x {1}) u p(S x {2}).
Certificate certificate_from_barrier(const AuxiliaryGraph& aux, const VertexSet& u);
/// U = p(T x {1}) u p(S x {2}).
VertexSet barrier_from_pair(const AuxiliaryGraph& aux, const VertexSet& s, const VertexSet& t);

enum class CertificateCheck {
    Ok,
    SideConditionViolated,
    ValueMismatch,
    ClaimMismatch,
    UnknownVertex,
};

std::string_view to_string(CertificateCheck c) noexcept;

/// Recomputes the dual value; no solving.
CertificateCheck check_certificate(const BidirectedMultigraph& g, const VertexSet& x,
                                   const Certificate& cert, std::size_t claimed_k);
inline bool verify_certificate(const BidirectedMultigraph& g, const VertexSet& x,
                               const Certificate& cert, std::size_t claimed_k) {
    return check_certificate(g, x, cert, claimed_k) == CertificateCheck::Ok;
}

/// gamma_{S,T}(v), sorted. Throws SideConditionViolated.
std::vector<AuxVertex> gamma_image(const BidirectedMultigraph& g, const VertexSet& x,
                                   const VertexSet& s, const VertexSet& t, VertexId v);

/// Compares the gamma-images of the components of B_{S,T} (minus singleton
/// S cap T components) with the components of H - U, and checks
/// |gamma(C)| = |V(C) cap (X u S u T)| + 2 |V(C) \ (X u S u T)| per component.
bool verify_component_correspondence(const BidirectedMultigraph& g, const VertexSet& x,
                                     const VertexSet& s, const VertexSet& t);

/// Either k disjoint X-paths or Y with |Y| <= 2k - 2 meeting every X-path.
/// Throws InvalidK for k = 0.
std::variant<HittingSet, PackingResult> hitting_set(const BidirectedMultigraph& g,
                                                    const VertexSet& x, std::size_t k);

/// Y = (S cap T) u union of Z(C), where Z(C) is V(C) cap (X u S u T) minus
/// its minimum element.
VertexSet hitting_set_from_certificate(const BidirectedMultigraph& g, const VertexSet& x,
                                       const Certificate& cert);

/// Backtracking search over sign-alternating simple paths. Independent of the
/// matching pipeline; exponential in the worst case.
bool has_x_path(const BidirectedMultigraph& g, const VertexSet& x);

}  // namespace bipaths
