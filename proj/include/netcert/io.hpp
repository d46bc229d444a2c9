#pragma once

#include <string>

#include "netcert/realization.hpp"

namespace netcert {

// Self-describing JSON document: scenario, dims, encoding_strings,
// observables (per party: edge parties in order, central party last),
// state as vector or density, complex entries as [re, im], matrices
// row-major. Serialization is deterministic, so write/read/write round
// trips are byte-identical.
std::string realization_to_json(const Realization& real);
Realization realization_from_json(const std::string& text);

void write_realization(const Realization& real, const std::string& path);
Realization read_realization(const std::string& path);

// Shortest text that parses back to exactly x, capped at 12 significant
// digits for display output.
std::string format_double(double x);

}  // namespace netcert
