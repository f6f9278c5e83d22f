#pragma once

#include "ctrace/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace ctrace::spaces {

/// Labeled description of H^*(X; Q): for each non-negative degree a list of
/// basis labels, so b_k is the list length. Degrees with no classes are not
/// stored. Labels are unique across the whole profile.
class CohomologyProfile {
public:
    CohomologyProfile(std::string space_name, std::map<int, std::vector<std::string>> entries);

    const std::string& name() const { return name_; }
    const std::map<int, std::vector<std::string>>& entries() const { return entries_; }

    long long betti(int degree) const;
    const std::vector<std::string>& labels(int degree) const; // empty list for absent degrees
    int max_degree() const; // -1 for the empty profile
    long long total_dim() const;

    /// Per-degree dimensions agree (labels and names ignored).
    bool same_betti(const CohomologyProfile& other) const;

    friend bool operator==(const CohomologyProfile& a, const CohomologyProfile& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::string name_;
    std::map<int, std::vector<std::string>> entries_;
};

CohomologyProfile point_space();
CohomologyProfile sphere_space(int k);    // k >= 1: {0: ["1"], k: ["x_k"]}
CohomologyProfile cp_space(int m);        // m >= 1: {2i: ["c^i"]}, i = 0..m

/// Kunneth product over Q: b_k(result) = sum_i b_i(a) * b_{k-i}(b),
/// labels composed as "u⊗v".
CohomologyProfile kunneth(const CohomologyProfile& a, const CohomologyProfile& b);

/// Parses a builtin-space expression: `point`, `sphere(3)`, `cp(2)`,
/// `product(sphere(1), sphere(1))` (nesting allowed). Also accepts
/// space-separated parameters ("sphere 3"). Syntax errors throw ParseError;
/// unknown names and invalid parameters throw InputError.
CohomologyProfile builtin_space(const std::string& expression);

/// Degreewise linear map on a profile's labeled basis: one square matrix per
/// degree, size b_k. Degrees absent from `blocks` act as the identity;
/// validate_endomorphism fills them in explicitly.
struct CohomologyEndomorphism {
    std::map<int, qlinalg::QMatrix> blocks;
};

/// Checks every block against the profile's Betti numbers and fills identity
/// blocks for unlisted degrees. Throws InputError on any shape mismatch or on
/// blocks for degrees the profile does not have.
CohomologyEndomorphism validate_endomorphism(const CohomologyProfile& space,
                                             const CohomologyEndomorphism& raw);

CohomologyEndomorphism identity_endomorphism(const CohomologyProfile& space);

/// Degreewise composition (f after g). Both must already be validated
/// against the same profile.
CohomologyEndomorphism compose(const CohomologyEndomorphism& f, const CohomologyEndomorphism& g);

} // namespace ctrace::spaces
