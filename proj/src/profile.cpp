#include "ctrace/profile.hpp"

#include "ctrace/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ctrace::spaces {

CohomologyProfile::CohomologyProfile(std::string space_name,
                                     std::map<int, std::vector<std::string>> entries)
    : name_(std::move(space_name)), entries_(std::move(entries)) {
    std::set<std::string> seen;
    for (auto it = entries_.begin(); it != entries_.end();) {
        if (it->first < 0)
            throw InputError("cohomology profile degree must be non-negative, got " +
                             std::to_string(it->first));
        if (it->second.empty()) {
            it = entries_.erase(it);
            continue;
        }
        for (const auto& label : it->second) {
            if (label.empty())
                throw InputError("empty basis label in cohomology profile");
            if (!seen.insert(label).second)
                throw InputError("duplicate basis label in cohomology profile: \"" + label + "\"");
        }
        ++it;
    }
}

long long CohomologyProfile::betti(int degree) const {
    auto it = entries_.find(degree);
    return it == entries_.end() ? 0 : static_cast<long long>(it->second.size());
}

const std::vector<std::string>& CohomologyProfile::labels(int degree) const {
    static const std::vector<std::string> kEmpty;
    auto it = entries_.find(degree);
    return it == entries_.end() ? kEmpty : it->second;
}

int CohomologyProfile::max_degree() const {
    return entries_.empty() ? -1 : entries_.rbegin()->first;
}

long long CohomologyProfile::total_dim() const {
    long long total = 0;
    for (const auto& [deg, labels] : entries_)
        total += static_cast<long long>(labels.size());
    return total;
}

bool CohomologyProfile::same_betti(const CohomologyProfile& other) const {
    if (entries_.size() != other.entries_.size())
        return false;
    for (const auto& [deg, labels] : entries_)
        if (other.betti(deg) != static_cast<long long>(labels.size()))
            return false;
    return true;
}

CohomologyProfile point_space() {
    return CohomologyProfile("point", {{0, {"1"}}});
}

CohomologyProfile sphere_space(int k) {
    if (k < 1)
        throw InputError("sphere(k) requires k >= 1, got " + std::to_string(k));
    return CohomologyProfile("sphere(" + std::to_string(k) + ")",
                             {{0, {"1"}}, {k, {"x_" + std::to_string(k)}}});
}

CohomologyProfile cp_space(int m) {
    if (m < 1)
        throw InputError("cp(m) requires m >= 1, got " + std::to_string(m));
    std::map<int, std::vector<std::string>> entries;
    entries[0] = {"1"};
    entries[2] = {"c"};
    for (int i = 2; i <= m; ++i)
        entries[2 * i] = {"c^" + std::to_string(i)};
    return CohomologyProfile("cp(" + std::to_string(m) + ")", std::move(entries));
}

CohomologyProfile kunneth(const CohomologyProfile& a, const CohomologyProfile& b) {
    std::map<int, std::vector<std::string>> entries;
    for (const auto& [da, la] : a.entries())
        for (const auto& [db, lb] : b.entries())
            for (const auto& u : la)
                for (const auto& v : lb)
                    entries[da + db].push_back(u + "⊗" + v);
    return CohomologyProfile("product(" + a.name() + ", " + b.name() + ")", std::move(entries));
}

namespace {

// Recursive-descent parser for builtin expressions:
//   expr := IDENT | IDENT '(' arg (',' arg)* ')'
//   arg  := expr | INTEGER
// Whitespace may separate tokens; "sphere 3" is treated like "sphere(3)".
struct BuiltinParser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eof() {
        skip_ws();
        return pos == text.size();
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos)
            throw ParseError("expected a builtin name at position " + std::to_string(pos) +
                             " in \"" + text + "\"");
        return text.substr(start, pos - start);
    }

    bool peek_integer() {
        skip_ws();
        if (pos >= text.size())
            return false;
        if (std::isdigit(static_cast<unsigned char>(text[pos])))
            return true;
        return text[pos] == '-' && pos + 1 < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos + 1]));
    }

    int integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-')
            ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            throw ParseError("expected an integer at position " + std::to_string(pos) + " in \"" +
                             text + "\"");
        return std::stoi(text.substr(start, pos - start));
    }

    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    CohomologyProfile expr() {
        const std::string name = ident();

        std::vector<int> int_args;
        std::vector<CohomologyProfile> space_args;
        if (consume('(')) {
            do {
                if (peek_integer())
                    int_args.push_back(integer());
                else
                    space_args.push_back(expr());
            } while (consume(','));
            if (!consume(')'))
                throw ParseError("expected ')' in builtin expression \"" + text + "\"");
        } else {
            // bare parameters: "sphere 3"
            while (peek_integer())
                int_args.push_back(integer());
        }
        return make(name, int_args, space_args);
    }

    static CohomologyProfile make(const std::string& name, const std::vector<int>& int_args,
                                  std::vector<CohomologyProfile> space_args) {
        if (name == "point") {
            if (!int_args.empty() || !space_args.empty())
                throw InputError("point takes no parameters");
            return point_space();
        }
        if (name == "sphere") {
            if (int_args.size() != 1 || !space_args.empty())
                throw InputError("sphere takes exactly one integer parameter");
            return sphere_space(int_args[0]);
        }
        if (name == "cp") {
            if (int_args.size() != 1 || !space_args.empty())
                throw InputError("cp takes exactly one integer parameter");
            return cp_space(int_args[0]);
        }
        if (name == "product") {
            if (space_args.size() != 2 || !int_args.empty())
                throw InputError("product takes exactly two space parameters");
            return kunneth(space_args[0], space_args[1]);
        }
        throw InputError("unknown builtin space \"" + name + "\"");
    }
};

} // namespace

CohomologyProfile builtin_space(const std::string& expression) {
    BuiltinParser parser{expression};
    CohomologyProfile result = parser.expr();
    if (!parser.eof())
        throw ParseError("trailing characters in builtin expression \"" + expression + "\"");
    return result;
}

CohomologyEndomorphism validate_endomorphism(const CohomologyProfile& space,
                                             const CohomologyEndomorphism& raw) {
    CohomologyEndomorphism out;
    for (const auto& [degree, block] : raw.blocks) {
        const long long b = space.betti(degree);
        if (b == 0)
            throw InputError("endomorphism block given for degree " + std::to_string(degree) +
                             " where the space has no cohomology");
        if (block.rows() != static_cast<std::size_t>(b) ||
            block.cols() != static_cast<std::size_t>(b))
            throw InputError("endomorphism block at degree " + std::to_string(degree) + " is " +
                             std::to_string(block.rows()) + "x" + std::to_string(block.cols()) +
                             ", expected " + std::to_string(b) + "x" + std::to_string(b));
        out.blocks.emplace(degree, block);
    }
    for (const auto& [degree, labels] : space.entries())
        if (!out.blocks.count(degree))
            out.blocks.emplace(degree, qlinalg::QMatrix::identity(labels.size()));
    return out;
}

CohomologyEndomorphism identity_endomorphism(const CohomologyProfile& space) {
    return validate_endomorphism(space, CohomologyEndomorphism{});
}

CohomologyEndomorphism compose(const CohomologyEndomorphism& f, const CohomologyEndomorphism& g) {
    if (f.blocks.size() != g.blocks.size())
        throw InputError("cannot compose endomorphisms over different profiles");
    CohomologyEndomorphism out;
    for (const auto& [degree, fb] : f.blocks) {
        auto it = g.blocks.find(degree);
        if (it == g.blocks.end())
            throw InputError("cannot compose endomorphisms over different profiles");
        out.blocks.emplace(degree, fb * it->second);
    }
    return out;
}

} // namespace ctrace::spaces
