#include "ctrace/graded.hpp"

#include "ctrace/errors.hpp"

#include <set>
#include <sstream>

namespace ctrace::graded {

LaurentPoly LaurentPoly::monomial(int degree, std::int64_t coeff) {
    LaurentPoly p;
    p.add(degree, coeff);
    return p;
}

std::int64_t LaurentPoly::coeff(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? 0 : it->second;
}

void LaurentPoly::add(int degree, std::int64_t coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = coeffs_.emplace(degree, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly out = *this;
    for (const auto& [d, c] : other.coeffs_)
        out.add(d, c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    LaurentPoly out;
    for (const auto& [d1, c1] : coeffs_)
        for (const auto& [d2, c2] : other.coeffs_)
            out.add(d1 + d2, c1 * c2);
    return out;
}

LaurentPoly LaurentPoly::nonnegative_part() const {
    LaurentPoly out;
    for (const auto& [d, c] : coeffs_)
        if (d >= 0)
            out.add(d, c);
    return out;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : coeffs_) {
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        const std::int64_t a = c < 0 ? -c : c;
        if (d == 0) {
            os << a;
        } else {
            if (a != 1)
                os << a;
            os << "t";
            if (d != 1)
                os << "^" << d;
        }
    }
    return os.str();
}

void GradedSpace::add(int degree, const std::string& label) {
    if (label.empty())
        throw InputError("empty basis label in graded space");
    if (!label_set_.insert(label).second)
        throw InputError("duplicate basis label in graded space: \"" + label + "\"");
    basis_[degree].push_back(label);
}

long long GradedSpace::dim(int degree) const {
    auto it = basis_.find(degree);
    return it == basis_.end() ? 0 : static_cast<long long>(it->second.size());
}

const std::vector<std::string>& GradedSpace::labels(int degree) const {
    static const std::vector<std::string> kEmpty;
    auto it = basis_.find(degree);
    return it == basis_.end() ? kEmpty : it->second;
}

long long GradedSpace::total_dim() const {
    long long total = 0;
    for (const auto& [d, ls] : basis_)
        total += static_cast<long long>(ls.size());
    return total;
}

std::map<int, long long> GradedSpace::dims() const {
    std::map<int, long long> out;
    for (const auto& [d, ls] : basis_)
        out[d] = static_cast<long long>(ls.size());
    return out;
}

GradedSpace negate_grading(const spaces::CohomologyProfile& profile) {
    GradedSpace out;
    for (const auto& [degree, labels] : profile.entries())
        for (const auto& label : labels)
            out.add(-degree, label);
    return out;
}

GradedSpace tensor(const GradedSpace& v, const GradedSpace& w) {
    GradedSpace out;
    for (const auto& [dv, lv] : v.basis())
        for (const auto& [dw, lw] : w.basis())
            for (const auto& a : lv)
                for (const auto& b : lw)
                    out.add(dv + dw, a + "⊗" + b);
    return out;
}

GradedSpace truncated_tensor(const GradedSpace& v, const GradedSpace& w) {
    GradedSpace out;
    for (const auto& [dv, lv] : v.basis())
        for (const auto& [dw, lw] : w.basis()) {
            if (dv + dw < 0)
                continue;
            for (const auto& a : lv)
                for (const auto& b : lw)
                    out.add(dv + dw, a + "⊗" + b);
        }
    return out;
}

LaurentPoly poincare_series(const GradedSpace& v) {
    LaurentPoly p;
    for (const auto& [d, ls] : v.basis())
        p.add(d, static_cast<std::int64_t>(ls.size()));
    return p;
}

} // namespace ctrace::graded
