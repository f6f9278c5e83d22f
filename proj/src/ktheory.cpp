#include "ctrace/ktheory.hpp"

#include "ctrace/errors.hpp"

#include <algorithm>

namespace ctrace::ktheory {

namespace {

const char* kBottNote = "dimensions repeat with period 2 in degrees >= 1";

/// X has the rational cohomology of S^3: b_0 = b_3 = 1 and nothing else.
bool is_rational_s3(const spaces::CohomologyProfile& space) {
    return space.total_dim() == 2 && space.betti(0) == 1 && space.betti(3) == 1;
}

} // namespace

long long KProfile::dim(int j) const {
    if (j < 0)
        throw InputError("K-theory degree must be non-negative, got " + std::to_string(j));
    return j % 2 == 0 ? even_dim : odd_dim;
}

KProfile rational_k_theory(const unitary::AlgebraSpec& spec) {
    if (!spec.dd_trivial && !is_rational_s3(spec.space))
        throw UnsupportedCaseError(
            "nonzero Dixmier-Douady class is supported only over a rational S^3; space \"" +
            spec.space.name() + "\" is not one");

    KProfile k{0, 0, spec.dd_trivial, spec, kBottNote};
    if (spec.dd_trivial) {
        for (const auto& [degree, labels] : spec.space.entries()) {
            if (degree % 2 == 0)
                k.even_dim += static_cast<long long>(labels.size());
            else
                k.odd_dim += static_cast<long long>(labels.size());
        }
    }
    return k;
}

std::vector<int> SigmaImage::hit_degrees() const {
    std::vector<int> out;
    out.reserve(hits.size());
    for (const auto& h : hits)
        out.push_back(h.k_degree);
    return out;
}

SigmaImage sigma_image(const unitary::PiProfile& pi, const KProfile& k) {
    if (!pi.spec().same_as(k.spec))
        throw InputError("pi profile and K profile were built from different algebra specs");

    SigmaImage image;
    for (int d : pi.degrees()) {
        SigmaHit hit;
        hit.k_degree = d + 1;
        for (const auto& e : pi.at_degree(d))
            hit.labels.push_back(e.label());
        hit.target_dim = k.dim(d + 1);
        image.hits.push_back(std::move(hit));
    }
    return image;
}

std::map<int, qlinalg::QMatrix> induced_endomorphism(const spaces::CohomologyEndomorphism& f,
                                                     const unitary::AlgebraSpec& spec) {
    const spaces::CohomologyEndomorphism endo = spaces::validate_endomorphism(spec.space, f);
    const unitary::PiProfile pi = rational_homotopy(spec);

    // Index of a cohomology label within its degree's basis.
    auto label_index = [&](int degree, const std::string& label) -> std::size_t {
        const auto& labels = spec.space.labels(degree);
        const auto it = std::find(labels.begin(), labels.end(), label);
        return static_cast<std::size_t>(it - labels.begin());
    };

    std::map<int, qlinalg::QMatrix> out;
    for (int d : pi.degrees()) {
        const std::vector<unitary::BigradedElement> block = pi.at_degree(d);
        qlinalg::QMatrix m(block.size(), block.size());
        for (std::size_t col = 0; col < block.size(); ++col) {
            const auto& src = block[col];
            const int k = -src.cohomology_degree;
            const auto& fk = endo.blocks.at(k);
            const std::size_t src_idx = label_index(k, src.cohomology_label);
            for (std::size_t row = 0; row < block.size(); ++row) {
                const auto& dst = block[row];
                if (dst.generator_index != src.generator_index ||
                    dst.cohomology_degree != src.cohomology_degree)
                    continue;
                const std::size_t dst_idx = label_index(k, dst.cohomology_label);
                m.at(row, col) = fk.at(dst_idx, src_idx);
            }
        }
        out.emplace(d, std::move(m));
    }
    return out;
}

} // namespace ctrace::ktheory
