#pragma once

#include "ctrace/matrix.hpp"
#include "ctrace/unitary.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ctrace::ktheory {

/// Z+-graded rational K-theory dimensions. Bott periodicity pins
/// dim(j) = dim(j+2) for j >= 1, so only the even/odd values are stored;
/// here dim(0) coincides with the even value in both supported branches.
struct KProfile {
    long long even_dim = 0;
    long long odd_dim = 0;
    bool dd_trivial = true;
    unitary::AlgebraSpec spec;
    std::string stable_period_note;

    /// j >= 0; throws InputError on negative degrees.
    long long dim(int j) const;
};

/// Rational K-theory of the algebra. Trivial Dixmier-Douady class: the
/// even/odd Betti sums of X in every degree. Nontrivial class: supported only
/// when X has the rational cohomology of S^3, where everything vanishes;
/// anything else throws UnsupportedCaseError.
KProfile rational_k_theory(const unitary::AlgebraSpec& spec);

/// One K-degree of the stabilization image: the candidate generators landing
/// there (canonical labels, profile order) and the target dimension.
struct SigmaHit {
    int k_degree = 0;
    std::vector<std::string> labels;
    long long target_dim = 0;
};

/// Candidate image of the stabilization map: every homotopy class of total
/// degree d is recorded under K-degree d+1.
struct SigmaImage {
    std::vector<SigmaHit> hits; // ascending k_degree

    std::vector<int> hit_degrees() const;
};

/// Throws InputError when pi and k were built from different specs.
SigmaImage sigma_image(const unitary::PiProfile& pi, const KProfile& k);

/// The action induced on the bigraded homotopy basis by a cohomology
/// endomorphism: per total degree, a matrix over that degree's basis block
/// (canonical order). The map acts by the degree-|p| block on the cohomology
/// factor and the identity on the generator factor, so it is block-diagonal
/// across generator indices. Throws InputError on shape mismatches.
std::map<int, qlinalg::QMatrix> induced_endomorphism(const spaces::CohomologyEndomorphism& f,
                                                     const unitary::AlgebraSpec& spec);

} // namespace ctrace::ktheory
