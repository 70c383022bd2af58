#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "superdet/chartab.hpp"
#include "superdet/detfact.hpp"
#include "superdet/group.hpp"
#include "superdet/partition.hpp"
#include "superdet/regrep.hpp"
#include "superdet/sct.hpp"

namespace superdet::io {

using Json = nlohmann::ordered_json;

/// Reads a whole file; InvalidInput if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Group file: {"name", "cayley_table"} or {"name", "degree", "permutations"},
/// plus an optional "labels" array. Parse errors carry the line and column.
FiniteGroup parse_group(std::string_view text, std::string_view source = "<input>");
FiniteGroup load_group(const std::filesystem::path& path);

/// Partition file: {"parts": [[int]]} over element indices.
GPartition parse_partition(std::string_view text, std::size_t order,
                           std::string_view source = "<input>");
GPartition load_partition(const std::filesystem::path& path, std::size_t order);

/// [re, im] rounded to 12 decimal places (no negative zero).
Json complex_json(Complex z);
Json complex_vector_json(const std::vector<Complex>& v);

Json to_json(const CharacterTable& table);
Json to_json(const SuperTheory& theory);
Json to_json(const LinearFactorization& factorization, const VerificationReport& report);
Json to_json(const RegularRep& rep);
Json to_json(const GPartition& partition);

}  // namespace superdet::io
