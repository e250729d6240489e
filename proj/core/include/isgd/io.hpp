#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isgd/action.hpp"
#include "isgd/globalize.hpp"
#include "isgd/semigroupoid.hpp"

namespace isgd {

/// Contents of a `.isgd` file.
struct StructureFile {
  SemigroupoidTable table;
  std::optional<std::vector<ArrowId>> declared_inverse;
};

/// Contents of a `.pact` file.
struct ActionFile {
  std::string structure_ref;  // value of the `structure = ...` header
  PartialAction action;
};

/// Throws ParseError with a line/column position.
StructureFile parse_structure(std::string_view text);
/// `structure` is the already-loaded structure the header refers to.
ActionFile parse_action(std::string_view text, StructurePtr structure);
/// Reads only the `structure = ...` header.
std::string read_structure_ref(std::string_view text);

std::string print_structure(const SemigroupoidTable& table,
                            const std::optional<std::vector<ArrowId>>& inverse = std::nullopt);
std::string print_structure(const InverseSemigroupoid& isg);
std::string print_action(const PartialAction& action, std::string_view structure_ref);

/// Reads and validates a structure file into an inverse semigroupoid.
/// Throws std::runtime_error on IO failure, ParseError, ValidationError.
StructurePtr load_structure(const std::filesystem::path& path);
/// Loads an action file and the structure it names (relative to the file).
ActionFile load_action(const std::filesystem::path& path);
std::string read_file(const std::filesystem::path& path);

/// Graphviz rendering of the underlying graph.
std::string structure_dot(const InverseSemigroupoid& isg);
/// Graphviz rendering of D: one cluster per class, edges for the generating relation.
std::string globalization_dot(const Globalization& glob);
/// Human-readable classes, families, eta tables and i.
std::string globalization_table(const Globalization& glob);
/// Stable JSON document; see README for the schema.
std::string globalization_json(const Globalization& glob);

std::string format_seed(const PartialAction& action, Seed p);

}  // namespace isgd
