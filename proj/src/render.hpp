#pragma once

#include <string>

#include "fusion_table.hpp"
#include "genfun.hpp"
#include "modular.hpp"
#include "oblade.hpp"
#include "paths.hpp"
#include "profiles.hpp"

namespace su3f {

enum class Format { Text, Json, Tsv, Svg };

// "text" | "json" | "tsv" | "svg".  Throws std::invalid_argument otherwise.
Format parse_format(const std::string& name);

// Annotated decomposition in subscript style (text), or JSON/TSV.
std::string render_product(const AnnotatedDecomposition& d, Format f);

// One fusion matrix with its alcove legend.
std::string render_matrix(const FusionTable& t, Weight w, Format f);

// Full-table export (JSON nested arrays with legend, or nonzero-entry TSV).
std::string render_table(const FusionTable& t, Format f);

// Per-level new-coupling rows for the pair, k_min..min(k_max, level).
std::string render_thresholds(Weight lam, Weight mu, int level, Format f);

// Image triple with its multiplicity and first level.
std::string render_psi(const Triple& t, Format f);

// Coupling pictographs of the triple (coordinates, edges, thresholds).
std::string render_oblades(const Triple& t, Format f);

// One pictograph as a deterministic 400x400 line drawing.
std::string render_oblade_svg(const OBlade& o);

// Entry-sum rows k=0..max_level with formula comparisons.
std::string render_paths(int max_level, Format f);

// Identity report lines for one level (text only).
std::string render_identity_report(const IdentityReport& r);

// Numeric-oracle report for one level.
std::string render_verlinde(int level, Format f);

}  // namespace su3f
