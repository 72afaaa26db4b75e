#pragma once

#include <string>
#include <vector>

#include "wittflag/rep_types.hpp"

namespace wittflag {

// A table as rendered by the CLI and diffed against the golden files in
// tables/: one row per line, cells tab-separated, weights printed as signed
// fundamental-weight coordinate tuples.
struct Table {
  std::string name;
  std::vector<std::string> header;                 // column names
  std::vector<std::vector<std::string>> rows;
};

std::string render_tsv(const Table& t);

// Condition/Witt survey of the exceptional types G2, F4, E6, E7, E8: one row
// per W-equivalence class of connected (or empty) proper subsets. Mark column:
// "sc" (single cell), "ob" (orbit basis), "ext" (neither condition but the
// ring is still exterior), "x" (documented non-exterior case), "?" (open).
Table table_results_connected(const Limits& limits = {});

// Types of the fundamental representations for every simple type of rank <= 8
// ("x" complex, "o" quaternionic, "*" real).
Table table_types();

// The F_4 fixed-cone table: one row per class of subsets where the sign test
// fails; columns are the duality images [H]omega_i, the Hilbert basis of the
// fixed monoid, freeness, and the relation when not free.
Table table_f4_cone();

// The F_4 orbit table: intersections of the Weyl orbits of the fundamental
// weights with the fixed monoid, for the same subset classes.
Table table_f4_orbits();

// Dispatch by name: results-connected, types, f4-cone, f4-orbits.
// Throws std::invalid_argument for unknown names.
Table make_table(const std::string& name, const Limits& limits = {});

std::vector<std::string> table_names();

}  // namespace wittflag
