#pragma once

#include "ctrace/graded.hpp"
#include "ctrace/profile.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ctrace::unitary {

/// The input data: a space X (as a cohomology profile), the matrix size n of
/// the bundle fibers, and whether the Dixmier-Douady class of the bundle is
/// trivial. Construction validates n >= 1 and b_0(X) >= 1.
struct AlgebraSpec {
    AlgebraSpec(spaces::CohomologyProfile space, int n, bool dd_trivial = true);

    spaces::CohomologyProfile space;
    int n;
    bool dd_trivial;

    /// Same cohomology data (labels included), same n, same dd flag.
    bool same_as(const AlgebraSpec& other) const;
};

/// A basis element of the bigraded rational homotopy: a cohomology class of
/// degree p <= 0 paired with an odd generator s_{2j-1}.
struct BigradedElement {
    std::string cohomology_label;
    int cohomology_degree = 0; // p <= 0
    int generator_index = 1;   // j >= 1

    int generator_degree() const { return 2 * generator_index - 1; } // q, odd
    int total_degree() const { return cohomology_degree + generator_degree(); }

    /// Canonical label "c⊗s_q"; the "1⊗" prefix is kept here and elided only
    /// in pretty-printed tables.
    std::string label() const;
    /// Display label with "1⊗" elided.
    std::string pretty_label() const;

    friend bool operator==(const BigradedElement& a, const BigradedElement& b) {
        return a.cohomology_label == b.cohomology_label &&
               a.cohomology_degree == b.cohomology_degree &&
               a.generator_index == b.generator_index;
    }
};

/// Bigraded homotopy profile: basis elements in canonical order (total degree
/// ascending, then cohomology degree descending, then generator index), all
/// of non-negative total degree.
class PiProfile {
public:
    PiProfile(AlgebraSpec spec, std::vector<BigradedElement> elements);

    const AlgebraSpec& spec() const { return spec_; }
    const std::vector<BigradedElement>& elements() const { return elements_; }

    long long dim(int total_degree) const;
    std::map<int, long long> dims() const;
    std::vector<BigradedElement> at_degree(int total_degree) const;
    std::vector<int> degrees() const; // ascending, nonzero dimensions only

private:
    AlgebraSpec spec_;
    std::vector<BigradedElement> elements_;
};

/// <s_1, s_3, ..., s_{2n-1}> with |s_{2j-1}| = 2j-1. Throws InputError for
/// n < 1.
graded::GradedSpace unitary_generators(int n);

/// The main computation: H^*(X;Q) (degrees negated) ⊗̃ <s_1, ..., s_{2n-1}>,
/// with full bidegree data on every element.
PiProfile rational_homotopy(const AlgebraSpec& spec);

struct BasedFreeSplit {
    PiProfile based; // cohomology degree < 0 (reduced-cohomology part)
    PiProfile free;  // cohomology degree 0 (constant-maps section image)
};

/// Splits along the evaluation fibration. Requires b_0(X) = 1; throws
/// InputError otherwise.
BasedFreeSplit based_free_split(const AlgebraSpec& spec);

/// Dimension of the profile in total degree 0 (the rationalized component
/// count of the section space).
long long pi_zero_dimension(const AlgebraSpec& spec);

/// Exterior algebra on generators g_1, g_3, ..., g_{2n-1}: the rational
/// homology of U_n. Basis labels are the generator products ("1", "g_1",
/// "g_1g_3", ...); the Poincare polynomial is prod_j (1 + t^{2j-1}).
graded::GradedSpace exterior_homology(int n);

/// Image of the Hurewicz map on the generator span: dimension 1 in each
/// degree 1, 3, ..., 2n-1 (the generators themselves), 0 elsewhere.
graded::GradedSpace hurewicz_image(int n);

} // namespace ctrace::unitary
