#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "curvenbhd/rootsys.hpp"

namespace curvenbhd {

struct TableEntry {
  Root root;
  std::string coords_e;
  std::string coords_simple;
  /// Only populated for cosmall rows.
  std::vector<int> delta_set;

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

/// Rank-instantiated classification of cosmall roots for a classical type.
/// Long and short lists are filled only when the type has two root lengths.
struct CosmallTable {
  DynkinType dynkin;
  std::vector<TableEntry> simple;
  std::vector<TableEntry> long_roots;
  std::vector<TableEntry> short_roots;
  std::vector<TableEntry> cosmall;

  friend bool operator==(const CosmallTable&, const CosmallTable&) = default;
};

/// Coordinates of a root of a classical type in the standard basis e_1..e_n
/// (n = rank+1 for A, rank otherwise).
std::vector<int> ambient_coordinates(const RootSystem& rs, const Root& root);
/// "e1-e3", "2e2", "e1+e4".
std::string format_ambient(const std::vector<int>& coords);

/// Throws InputError for F4 and G2.
CosmallTable emit_table(const DynkinType& dynkin);

std::string render_text(const CosmallTable& table);

void to_json(nlohmann::json& j, const CosmallTable& table);
void from_json(const nlohmann::json& j, CosmallTable& table);

}  // namespace curvenbhd
