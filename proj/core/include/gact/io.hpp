#pragma once

#include <string>
#include <string_view>

#include "gact/config.hpp"
#include "gact/galois.hpp"
#include "gact/group.hpp"
#include "gact/independence.hpp"
#include "gact/structure.hpp"

namespace gact {

// JSON text with sorted keys and two-space indentation. Writers are
// deterministic, so equal values serialize to identical bytes. Readers throw
// Errc::InvalidArgument on malformed input.

std::string to_json(const FiniteGroup& g);
GroupPtr group_from_json(std::string_view text);

/// {"signature", "group", "universe", "relations": {"R": [[i, j], ...]},
/// "action": {name: perm}}; graph edges are listed once with i < j.
std::string to_json(const GStructure& m);
GStructure structure_from_json(std::string_view text);

/// Every ordered pair of term indices with its entry.
std::string to_json(const Configuration& q);
Configuration configuration_from_json(std::string_view text);

std::string to_json(const AxiomReport& r);
std::string to_json(const GaloisReport& r);

/// A built-in group name such as "z2" or "s3", else a path to a group file.
GroupPtr load_group(std::string_view name_or_path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace gact
