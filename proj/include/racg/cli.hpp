#pragma once

#include <string>
#include <vector>

#include "racg/complexes.hpp"

namespace racg::cli {

// Built-in complexes.  Fixed names plus "simplexN" for N = 1..16.
std::vector<std::string> catalog_names();
bool is_catalog_name(const std::string& name);
FlagComplex catalog_complex(const std::string& name); // throws input_error

// {"m": <int>, "edges": [[i,j], ...]} with optional "faces" (vertex lists).
// A faces list must already describe a flag complex; with flag_completion
// set, the flag completion of its 1-skeleton is taken instead of failing.
FlagComplex complex_from_json(const std::string& text, bool flag_completion = false);

// Catalog name, or a path to a JSON file.
FlagComplex resolve_complex(const std::string& name_or_path, bool flag_completion = false);

// Entry point behind the binary: args are argv[1..].  Returns the exit code.
int run(const std::vector<std::string>& args);

} // namespace racg::cli
