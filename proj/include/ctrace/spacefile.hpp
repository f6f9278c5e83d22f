#pragma once

#include "ctrace/complex.hpp"
#include "ctrace/profile.hpp"

#include <json.hpp>

#include <string>

namespace ctrace::spaces {

/// Space description, one of:
///   {"complex": {"vertices": [...], "facets": [[...], ...]}}
///   {"profile": {"0": ["1"], "3": ["x_3"]}}
///   {"builtin": "sphere", "params": [3]}
/// Builtin params may be integers or nested space descriptions (for
/// product); a builtin name with no params may be a full expression such as
/// "product(sphere(1),sphere(1))". Structural problems throw ParseError,
/// semantic ones InputError.
CohomologyProfile load_space(const nlohmann::json& doc);
CohomologyProfile load_space_file(const std::string& path);

/// Endomorphism description: {"degree_blocks": {"3": [[2]]}} — per
/// cohomology degree a square matrix with integer or "p/q" string entries;
/// unlisted degrees act as the identity. The result is validated against
/// `space` (shape mismatches throw InputError).
CohomologyEndomorphism load_endomorphism(const nlohmann::json& doc, const CohomologyProfile& space);
CohomologyEndomorphism load_endomorphism_file(const std::string& path,
                                              const CohomologyProfile& space);

} // namespace ctrace::spaces
