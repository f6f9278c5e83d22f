#pragma once

#include "ctrace/ktheory.hpp"
#include "ctrace/unitary.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ctrace::cli {

/// Everything a command computed, ready to render. Tables are mutually
/// consistent by construction (sigma degrees are pi degrees shifted by one;
/// split parts partition pi).
struct Report {
    explicit Report(spaces::CohomologyProfile space_) : space(std::move(space_)) {}

    spaces::CohomologyProfile space;
    std::optional<int> n;
    std::optional<unitary::PiProfile> pi;
    std::optional<unitary::BasedFreeSplit> split;
    std::optional<ktheory::KProfile> k;
    std::optional<ktheory::SigmaImage> sigma;
    std::optional<std::map<int, qlinalg::QMatrix>> endo;
    std::vector<std::string> notes;

    /// Canonical machine form: keys sorted, dimensions as integers, rationals
    /// as "p/q" strings. Parsing and re-dumping reproduces the bytes.
    nlohmann::json to_json() const;

    /// Human tables; "1⊗" prefixes elided. ANSI styling only when `color`.
    std::string to_text(bool color) const;
};

/// Note strings attached to reports (stable across releases; JSON consumers
/// key on them).
extern const char* const kNoteDegreeZero;
extern const char* const kNoteSigmaCandidates;
extern const char* const kNoteDdBranches;

/// Canonical serialization used everywhere (2-space indent + final newline).
std::string render_json(const nlohmann::json& doc);

} // namespace ctrace::cli
