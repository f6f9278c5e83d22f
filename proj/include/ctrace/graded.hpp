#pragma once

#include "ctrace/profile.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace ctrace::graded {

/// Laurent polynomial over the integers, stored degree -> coefficient with
/// zero coefficients dropped. Used for Poincare series bookkeeping.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(int degree, std::int64_t coeff = 1);
    static LaurentPoly one() { return monomial(0, 1); }

    std::int64_t coeff(int degree) const;
    void add(int degree, std::int64_t coeff);
    const std::map<int, std::int64_t>& coeffs() const { return coeffs_; }

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Terms of degree >= 0 only.
    LaurentPoly nonnegative_part() const;

    /// e.g. "t^-3 + 1 + 2t + t^5"; "0" for the zero polynomial.
    std::string str() const;

private:
    std::map<int, std::int64_t> coeffs_;
};

/// Z-graded vector space with a labeled basis: finitely many nonzero degrees,
/// labels unique across the whole space.
class GradedSpace {
public:
    GradedSpace() = default;

    /// Throws InputError on a duplicate or empty label.
    void add(int degree, const std::string& label);

    long long dim(int degree) const;
    const std::vector<std::string>& labels(int degree) const;
    const std::map<int, std::vector<std::string>>& basis() const { return basis_; }
    long long total_dim() const;
    bool empty() const { return basis_.empty(); }

    std::map<int, long long> dims() const;

    friend bool operator==(const GradedSpace& a, const GradedSpace& b) {
        return a.basis_ == b.basis_;
    }

private:
    std::map<int, std::vector<std::string>> basis_;
    std::set<std::string> label_set_;
};

/// Places degree-k cohomology classes in degree -k, labels preserved.
GradedSpace negate_grading(const spaces::CohomologyProfile& profile);

/// Graded tensor product: |v⊗w| = |v| + |w|; labels composed "v⊗w".
GradedSpace tensor(const GradedSpace& v, const GradedSpace& w);

/// Tensor product restricted to non-negative total degree (degree 0 kept).
GradedSpace truncated_tensor(const GradedSpace& v, const GradedSpace& w);

/// Coefficient of t^d = dimension in degree d.
LaurentPoly poincare_series(const GradedSpace& v);

} // namespace ctrace::graded
