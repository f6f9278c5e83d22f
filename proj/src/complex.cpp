#include "ctrace/complex.hpp"

#include "ctrace/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ctrace::spaces {

namespace {
constexpr std::size_t kMaxFacetSize = 20;
} // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices,
                                     std::vector<Simplex> facets)
    : vertices_(std::move(vertices)) {
    if (facets.empty())
        throw InputError("a simplicial complex needs at least one facet");

    std::set<std::string> vertex_set(vertices_.begin(), vertices_.end());
    if (vertex_set.size() != vertices_.size())
        throw InputError("duplicate vertex labels");
    for (const auto& v : vertices_)
        if (v.empty())
            throw InputError("empty vertex label");

    std::set<Simplex> normalized;
    std::set<std::string> used;
    for (auto& facet : facets) {
        std::set<std::string> labels(facet.begin(), facet.end());
        if (labels.empty())
            throw InputError("empty facet");
        if (labels.size() > kMaxFacetSize)
            throw InputError("facet has " + std::to_string(labels.size()) +
                             " vertices; at most " + std::to_string(kMaxFacetSize) +
                             " are supported");
        for (const auto& v : labels) {
            if (!vertex_set.count(v))
                throw InputError("facet references unknown vertex \"" + v + "\"");
            used.insert(v);
        }
        normalized.emplace(labels.begin(), labels.end());
    }
    for (const auto& v : vertices_)
        if (!used.count(v))
            throw InputError("vertex \"" + v + "\" appears in no facet");
    facets_.assign(normalized.begin(), normalized.end());

    // Downward closure, one sorted face list per dimension.
    std::size_t max_size = 0;
    for (const auto& f : facets_)
        max_size = std::max(max_size, f.size());
    std::vector<std::set<Simplex>> by_dim(max_size);
    for (const auto& facet : facets_) {
        const std::size_t m = facet.size();
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (1u << i))
                    face.push_back(facet[i]);
            by_dim[face.size() - 1].insert(std::move(face));
        }
    }
    faces_.reserve(by_dim.size());
    for (auto& dim_set : by_dim)
        faces_.emplace_back(dim_set.begin(), dim_set.end());
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
    static const std::vector<Simplex> kEmpty;
    if (k < 0 || k >= static_cast<int>(faces_.size()))
        return kEmpty;
    return faces_[k];
}

long long SimplicialComplex::simplex_count(int k) const {
    return static_cast<long long>(simplices(k).size());
}

qlinalg::QMatrix SimplicialComplex::coboundary(int k) const {
    if (k < 0)
        throw InputError("coboundary degree must be non-negative");
    const auto& domain = simplices(k);
    const auto& codomain = simplices(k + 1);

    std::map<Simplex, std::size_t> col_of;
    for (std::size_t j = 0; j < domain.size(); ++j)
        col_of.emplace(domain[j], j);

    qlinalg::QMatrix delta(codomain.size(), domain.size());
    for (std::size_t row = 0; row < codomain.size(); ++row) {
        const Simplex& tau = codomain[row];
        int sign = 1;
        for (std::size_t i = 0; i < tau.size(); ++i, sign = -sign) {
            Simplex face;
            face.reserve(tau.size() - 1);
            for (std::size_t j = 0; j < tau.size(); ++j)
                if (j != i)
                    face.push_back(tau[j]);
            delta.at(row, col_of.at(face)) = qlinalg::Rational(sign);
        }
    }
    return delta;
}

CohomologyProfile SimplicialComplex::cohomology() const {
    std::map<int, std::vector<std::string>> entries;
    std::size_t prev_rank = 0; // rank of delta^{k-1}
    for (int k = 0; k <= dimension(); ++k) {
        const std::size_t rank_k = coboundary(k).rank();
        const long long kernel_dim = simplex_count(k) - static_cast<long long>(rank_k);
        const long long b = kernel_dim - static_cast<long long>(prev_rank);
        prev_rank = rank_k;
        if (b <= 0)
            continue;
        std::vector<std::string> labels;
        if (k == 0 && b == 1) {
            labels = {"1"};
        } else {
            for (long long i = 1; i <= b; ++i)
                labels.push_back("h" + std::to_string(k) + "_" + std::to_string(i));
        }
        entries[k] = std::move(labels);
    }
    return CohomologyProfile("complex", std::move(entries));
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (int k = 0; k <= dimension(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * simplex_count(k);
    return chi;
}

} // namespace ctrace::spaces
