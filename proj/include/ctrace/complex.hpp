#pragma once

#include "ctrace/matrix.hpp"
#include "ctrace/profile.hpp"

#include <string>
#include <vector>

namespace ctrace::spaces {

/// A simplex as its sorted list of vertex labels.
using Simplex = std::vector<std::string>;

/// Finite simplicial complex given by vertices and facets; faces are the
/// downward closure. Construction validates and normalizes (facets sorted,
/// deduplicated); malformed input throws InputError:
///   - empty facet list, or an empty facet
///   - a facet referencing an unknown vertex
///   - a vertex appearing in no facet
/// Facets are capped at 20 vertices to keep the closure enumerable.
class SimplicialComplex {
public:
    SimplicialComplex(std::vector<std::string> vertices, std::vector<Simplex> facets);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Simplex>& facets() const { return facets_; }

    int dimension() const { return static_cast<int>(faces_.size()) - 1; }

    /// All k-simplices in lexicographic order of sorted vertex labels;
    /// empty for k < 0 or k > dimension().
    const std::vector<Simplex>& simplices(int k) const;
    long long simplex_count(int k) const;

    /// Matrix of the coboundary delta^k: C^k -> C^{k+1} with the
    /// alternating-face sign convention; shape (#(k+1)-simplices) x
    /// (#k-simplices). Throws InputError for k < 0.
    qlinalg::QMatrix coboundary(int k) const;

    /// Betti data b_k = dim ker delta^k - rank delta^{k-1}, with labels
    /// "h{k}_{i}" (degree-0 label "1" when b_0 = 1).
    CohomologyProfile cohomology() const;

    long long euler_characteristic() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Simplex> facets_;
    std::vector<std::vector<Simplex>> faces_; // faces_[k] = sorted k-simplices
};

} // namespace ctrace::spaces
