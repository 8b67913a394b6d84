#pragma once

#include <string>

#include "hitbox/hit.hpp"

namespace hitbox {

/// Reads a fixture from JSON text. Fields: P, D, S, optional G_order,
/// G_label, name, notes and parametrization {curve, psi_t, psi_x, phi},
/// where psi_t and psi_x are [num, den] in V and phi is [num, den] in T, X.
/// D is recomputed from P and S and must match. Every rejection is a
/// ValidationError naming the file and field.
HitData parse_fixture(const std::string& json_text, const std::string& origin = "<fixture>");

/// Resolves `path`, `path.json`, or a bundled fixture of that name, then
/// parses it.
HitData load_fixture(const std::string& path);

/// Path of a fixture shipped with the sources.
std::string bundled_fixture(const std::string& name);

}  // namespace hitbox
