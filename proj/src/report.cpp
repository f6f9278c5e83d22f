#include "ctrace/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace ctrace::cli {

const char* const kNoteDegreeZero =
    "total degree 0 is a rationalized component count: its classes track pi_0 of the "
    "section space, while positive degrees describe the identity component of the "
    "unitary group";

const char* const kNoteSigmaCandidates =
    "sigma hits are candidate image generators: the listed classes are known to map "
    "non-trivially for matrix algebras and for X = S^3; nontriviality over arbitrary "
    "spaces is not established here";

const char* const kNoteDdBranches =
    "rational K-theory branches on the Dixmier-Douady class: a trivial class yields the "
    "even/odd Betti sums of X in every degree, while a nonzero class over a rational "
    "S^3 forces all rational K-groups to vanish; both statements are kept explicit "
    "behind the dd flag";

std::string render_json(const nlohmann::json& doc) {
    return doc.dump(2) + "\n";
}

namespace {

using nlohmann::json;

json space_json(const spaces::CohomologyProfile& space) {
    json betti = json::object();
    json labels = json::object();
    for (const auto& [degree, ls] : space.entries()) {
        betti[std::to_string(degree)] = ls.size();
        labels[std::to_string(degree)] = ls;
    }
    return json{{"name", space.name()}, {"betti", betti}, {"labels", labels}};
}

json pi_blocks_json(const unitary::PiProfile& pi) {
    json blocks = json::array();
    for (int d : pi.degrees()) {
        json basis = json::array();
        for (const auto& e : pi.at_degree(d))
            basis.push_back(json{{"c", e.cohomology_label},
                                 {"p", e.cohomology_degree},
                                 {"j", e.generator_index},
                                 {"q", e.generator_degree()}});
        blocks.push_back(json{{"total_degree", d}, {"dim", pi.dim(d)}, {"basis", basis}});
    }
    return blocks;
}

json matrix_json(const qlinalg::QMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

struct Style {
    bool color = false;
    std::string bold(const std::string& s) const {
        return color ? "\033[1m" + s + "\033[0m" : s;
    }
};

std::string describe_element(const unitary::BigradedElement& e) {
    std::ostringstream os;
    os << e.pretty_label() << " (p=" << e.cohomology_degree << ", q=" << e.generator_degree()
       << ")";
    return os.str();
}

void render_pi_table(std::ostream& os, const unitary::PiProfile& pi, const Style& style,
                     const std::string& heading) {
    os << style.bold(heading) << "\n";
    os << "  total  dim  basis\n";
    if (pi.elements().empty()) {
        os << "  (empty)\n";
        return;
    }
    for (int d : pi.degrees()) {
        std::string basis;
        for (const auto& e : pi.at_degree(d)) {
            if (!basis.empty())
                basis += ", ";
            basis += describe_element(e);
        }
        os << "  " << std::setw(5) << d << "  " << std::setw(3) << pi.dim(d) << "  " << basis
           << "\n";
    }
}

} // namespace

nlohmann::json Report::to_json() const {
    json doc;
    doc["space"] = space_json(space);
    if (n)
        doc["n"] = *n;
    if (pi)
        doc["pi"] = pi_blocks_json(*pi);
    if (split)
        doc["split"] = json{{"based", pi_blocks_json(split->based)},
                            {"free", pi_blocks_json(split->free)}};
    if (k)
        doc["k"] = json{{"even", k->even_dim}, {"odd", k->odd_dim}, {"dd_trivial", k->dd_trivial}};
    if (sigma) {
        json hits = json::array();
        for (const auto& h : sigma->hits)
            hits.push_back(json{{"k_degree", h.k_degree},
                                {"labels", h.labels},
                                {"target_dim", h.target_dim}});
        doc["sigma"] = hits;
    }
    if (endo) {
        json blocks = json::array();
        for (const auto& [d, m] : *endo) {
            json basis = json::array();
            for (const auto& e : pi->at_degree(d))
                basis.push_back(e.label());
            blocks.push_back(json{{"total_degree", d}, {"basis", basis}, {"matrix", matrix_json(m)}});
        }
        doc["endo"] = blocks;
    }
    doc["notes"] = notes;
    return doc;
}

std::string Report::to_text(bool color) const {
    const Style style{color};
    std::ostringstream os;

    os << style.bold("space: ") << space.name();
    if (n)
        os << "    n: " << *n;
    os << "\n";

    if (!pi || endo) {
        // Space summary belongs to cohomology-style reports.
        os << style.bold("cohomology of X (rational)") << "\n";
        os << "  degree  dim  basis\n";
        for (const auto& [degree, labels] : space.entries()) {
            std::string joined;
            for (const auto& l : labels) {
                if (!joined.empty())
                    joined += ", ";
                joined += l;
            }
            os << "  " << std::setw(6) << degree << "  " << std::setw(3) << labels.size() << "  "
               << joined << "\n";
        }
    }

    if (pi && !endo)
        render_pi_table(os, *pi, style, "homotopy of the unitary group (bigraded basis)");

    if (split) {
        render_pi_table(os, split->based, style, "based part (reduced-cohomology classes)");
        render_pi_table(os, split->free, style, "free part (constant-maps section image)");
    }

    if (k) {
        os << style.bold("rational K-theory (Z+-graded)") << "\n";
        os << "  even degrees (0, 2, 4, ...): dim " << k->even_dim << "\n";
        os << "  odd degrees  (1, 3, 5, ...): dim " << k->odd_dim << "\n";
        os << "  dd class: " << (k->dd_trivial ? "trivial" : "nonzero") << "\n";
        os << "  (" << k->stable_period_note << ")\n";
    }

    if (sigma) {
        os << style.bold("stabilization image candidates (K-degree = total degree + 1)") << "\n";
        os << "  k-degree  target dim  hit by\n";
        for (const auto& h : sigma->hits) {
            std::string joined;
            for (std::size_t i = 0; i < h.labels.size(); ++i) {
                if (i)
                    joined += ", ";
                // Pretty mode: elide the "1⊗" prefix.
                const std::string& l = h.labels[i];
                joined += l.rfind("1⊗", 0) == 0 ? l.substr(std::string("1⊗").size()) : l;
            }
            os << "  " << std::setw(8) << h.k_degree << "  " << std::setw(10) << h.target_dim
               << "  " << joined;
            if (h.target_dim == 0)
                os << "  (target vanishes)";
            os << "\n";
        }
    }

    if (endo) {
        os << style.bold("induced action on the bigraded homotopy basis") << "\n";
        for (const auto& [d, m] : *endo) {
            os << "  total degree " << d << ", basis [";
            const auto block = pi->at_degree(d);
            for (std::size_t i = 0; i < block.size(); ++i)
                os << (i ? ", " : "") << block[i].pretty_label();
            os << "]:\n";
            for (std::size_t i = 0; i < m.rows(); ++i) {
                os << "    [";
                for (std::size_t j = 0; j < m.cols(); ++j)
                    os << (j ? " " : " ") << std::setw(4) << m.at(i, j).str();
                os << " ]\n";
            }
        }
    }

    if (!notes.empty()) {
        os << style.bold("notes:") << "\n";
        for (const auto& note : notes)
            os << "  - " << note << "\n";
    }
    return os.str();
}

} // namespace ctrace::cli
