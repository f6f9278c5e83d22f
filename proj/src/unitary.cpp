#include "ctrace/unitary.hpp"

#include "ctrace/errors.hpp"

#include <algorithm>
#include <set>

namespace ctrace::unitary {

AlgebraSpec::AlgebraSpec(spaces::CohomologyProfile space_, int n_, bool dd_trivial_)
    : space(std::move(space_)), n(n_), dd_trivial(dd_trivial_) {
    if (n < 1)
        throw InputError("matrix size n must be >= 1, got " + std::to_string(n));
    if (space.betti(0) < 1)
        throw InputError("space \"" + space.name() + "\" has no degree-0 cohomology");
}

bool AlgebraSpec::same_as(const AlgebraSpec& other) const {
    return space == other.space && n == other.n && dd_trivial == other.dd_trivial;
}

std::string BigradedElement::label() const {
    return cohomology_label + "⊗s_" + std::to_string(generator_degree());
}

std::string BigradedElement::pretty_label() const {
    if (cohomology_label == "1")
        return "s_" + std::to_string(generator_degree());
    return label();
}

PiProfile::PiProfile(AlgebraSpec spec, std::vector<BigradedElement> elements)
    : spec_(std::move(spec)), elements_(std::move(elements)) {
    for (const auto& e : elements_) {
        if (e.total_degree() < 0)
            throw InputError("bigraded element " + e.label() + " has negative total degree");
        if (e.cohomology_degree > 0 || e.generator_index < 1)
            throw InputError("malformed bigraded element " + e.label());
    }
}

long long PiProfile::dim(int total_degree) const {
    long long d = 0;
    for (const auto& e : elements_)
        if (e.total_degree() == total_degree)
            ++d;
    return d;
}

std::map<int, long long> PiProfile::dims() const {
    std::map<int, long long> out;
    for (const auto& e : elements_)
        ++out[e.total_degree()];
    return out;
}

std::vector<BigradedElement> PiProfile::at_degree(int total_degree) const {
    std::vector<BigradedElement> out;
    for (const auto& e : elements_)
        if (e.total_degree() == total_degree)
            out.push_back(e);
    return out;
}

std::vector<int> PiProfile::degrees() const {
    std::vector<int> out;
    for (const auto& [d, count] : dims())
        out.push_back(d);
    return out;
}

graded::GradedSpace unitary_generators(int n) {
    if (n < 1)
        throw InputError("unitary generators need n >= 1, got " + std::to_string(n));
    graded::GradedSpace out;
    for (int j = 1; j <= n; ++j)
        out.add(2 * j - 1, "s_" + std::to_string(2 * j - 1));
    return out;
}

PiProfile rational_homotopy(const AlgebraSpec& spec) {
    // Enumerate pairs (cohomology class of degree k, generator s_{2j-1}) and
    // keep the non-negative total degrees. Canonical order: total degree
    // ascending, then cohomology degree descending (p = 0 first), then
    // generator index, then the class's position in the profile.
    struct Keyed {
        BigradedElement element;
        std::size_t label_index;
    };
    std::vector<Keyed> keyed;
    for (int j = 1; j <= spec.n; ++j) {
        const int q = 2 * j - 1;
        for (const auto& [k, labels] : spec.space.entries()) {
            if (q - k < 0)
                continue;
            for (std::size_t i = 0; i < labels.size(); ++i)
                keyed.push_back({BigradedElement{labels[i], -k, j}, i});
        }
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.element.total_degree() != b.element.total_degree())
            return a.element.total_degree() < b.element.total_degree();
        if (a.element.cohomology_degree != b.element.cohomology_degree)
            return a.element.cohomology_degree > b.element.cohomology_degree;
        if (a.element.generator_index != b.element.generator_index)
            return a.element.generator_index < b.element.generator_index;
        return a.label_index < b.label_index;
    });

    std::vector<BigradedElement> elements;
    elements.reserve(keyed.size());
    for (auto& k : keyed)
        elements.push_back(std::move(k.element));
    return PiProfile(spec, std::move(elements));
}

BasedFreeSplit based_free_split(const AlgebraSpec& spec) {
    if (spec.space.betti(0) != 1)
        throw InputError("based/free split needs a connected pointed space (b_0 = 1), got b_0 = " +
                         std::to_string(spec.space.betti(0)));
    const PiProfile total = rational_homotopy(spec);
    std::vector<BigradedElement> based, free_part;
    for (const auto& e : total.elements()) {
        if (e.cohomology_degree < 0)
            based.push_back(e);
        else
            free_part.push_back(e);
    }
    return BasedFreeSplit{PiProfile(spec, std::move(based)), PiProfile(spec, std::move(free_part))};
}

long long pi_zero_dimension(const AlgebraSpec& spec) {
    return rational_homotopy(spec).dim(0);
}

graded::GradedSpace exterior_homology(int n) {
    if (n < 1)
        throw InputError("exterior algebra needs n >= 1, got " + std::to_string(n));
    if (n > 24)
        throw InputError("exterior algebra basis for n > 24 is not enumerable here");

    // Bucket the 2^n generator subsets by degree, subsets in mask order.
    std::map<int, std::vector<std::string>> by_degree;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int degree = 0;
        std::string label;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j)))
                continue;
            const int q = 2 * j + 1;
            degree += q;
            label += "g_" + std::to_string(q);
        }
        if (label.empty())
            label = "1";
        by_degree[degree].push_back(std::move(label));
    }
    graded::GradedSpace out;
    for (const auto& [degree, labels] : by_degree)
        for (const auto& label : labels)
            out.add(degree, label);
    return out;
}

graded::GradedSpace hurewicz_image(int n) {
    if (n < 1)
        throw InputError("hurewicz image needs n >= 1, got " + std::to_string(n));
    graded::GradedSpace out;
    for (int j = 1; j <= n; ++j)
        out.add(2 * j - 1, "g_" + std::to_string(2 * j - 1));
    return out;
}

} // namespace ctrace::unitary
