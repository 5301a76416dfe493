#include "curvenbhd/table.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "curvenbhd/cosmall.hpp"
#include "curvenbhd/literals.hpp"

namespace curvenbhd {
namespace {

// e-coordinates of the i-th simple root (1-based).
std::vector<int> ambient_simple(const DynkinType& t, int i) {
  const int n = t.family == Family::A ? t.rank + 1 : t.rank;
  std::vector<int> v(n, 0);
  const int l = t.rank;
  if (i < l || t.family == Family::A) {
    v[i - 1] = 1;
    v[i] = -1;
    return v;
  }
  switch (t.family) {
    case Family::B: v[l - 1] = 1; break;
    case Family::C: v[l - 1] = 2; break;
    case Family::D:
      v[l - 2] = 1;
      v[l - 1] = 1;
      break;
    default: throw InputError("no standard coordinates for " + t.name());
  }
  return v;
}

TableEntry make_entry(const RootSystem& rs, const Root& r) {
  return TableEntry{r, format_ambient(ambient_coordinates(rs, r)), format_simple_expansion(r.coeffs), {}};
}

}  // namespace

std::vector<int> ambient_coordinates(const RootSystem& rs, const Root& root) {
  const DynkinType& t = rs.dynkin();
  if (!t.is_classical()) throw InputError("no standard coordinates for " + t.name());
  rs.require_root(root);
  std::vector<int> out;
  for (int i = 1; i <= t.rank; ++i) {
    auto s = ambient_simple(t, i);
    if (out.empty()) out.assign(s.size(), 0);
    for (std::size_t k = 0; k < s.size(); ++k) out[k] += root.coeffs[i - 1] * s[k];
  }
  return out;
}

std::string format_ambient(const std::vector<int>& coords) {
  std::string out;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    int c = coords[k];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
      c = -c;
    } else if (!out.empty()) {
      out += '+';
    }
    if (c != 1) out += std::to_string(c);
    out += 'e' + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

CosmallTable emit_table(const DynkinType& dynkin) {
  if (!dynkin.is_classical()) throw InputError("tables exist only for classical types, not " + dynkin.name());
  const RootSystem rs(dynkin);
  CosmallTable table;
  table.dynkin = dynkin;
  for (int i = 1; i <= rs.rank(); ++i) table.simple.push_back(make_entry(rs, rs.simple_root(i)));
  for (const Root& r : rs.positive_roots()) {
    if (rs.two_lengths()) (rs.is_long(r) ? table.long_roots : table.short_roots).push_back(make_entry(rs, r));
    if (is_cosmall(rs, r)) {
      TableEntry e = make_entry(rs, r);
      e.delta_set = delta_set(rs, r);
      table.cosmall.push_back(std::move(e));
    }
  }
  return table;
}

std::string render_text(const CosmallTable& table) {
  std::ostringstream os;
  const DynkinType& t = table.dynkin;
  const int ambient = t.family == Family::A ? t.rank + 1 : t.rank;
  os << "Type " << t.name() << " (l = " << ambient << ", simple roots b1..b" << t.rank << ")\n";

  std::size_t w_e = 8, w_s = 8;
  for (const auto* list : {&table.simple, &table.long_roots, &table.short_roots, &table.cosmall}) {
    for (const auto& e : *list) {
      w_e = std::max(w_e, e.coords_e.size());
      w_s = std::max(w_s, e.coords_simple.size());
    }
  }
  auto section = [&](const char* title, const std::vector<TableEntry>& rows, bool with_delta) {
    if (rows.empty()) return;
    os << '\n' << title << '\n';
    for (const auto& e : rows) {
      os << "  " << std::left << std::setw(static_cast<int>(w_e)) << e.coords_e << " = ";
      if (!with_delta) {
        os << e.coords_simple << '\n';
        continue;
      }
      os << std::setw(static_cast<int>(w_s)) << e.coords_simple << "  Delta = {";
      for (std::size_t k = 0; k < e.delta_set.size(); ++k) os << (k ? ", " : "") << 'b' << e.delta_set[k];
      os << "}\n";
    }
  };
  section("Simple", table.simple, false);
  section("Long", table.long_roots, false);
  section("Short", table.short_roots, false);
  section("Cosmall", table.cosmall, true);
  return os.str();
}

namespace {

nlohmann::json entry_json(const TableEntry& e, bool with_delta) {
  nlohmann::json j{{"root", format_coeffs(e.root.coeffs)}, {"coords_e", e.coords_e}, {"coords_simple", e.coords_simple}};
  if (with_delta) j["delta_set"] = e.delta_set;
  return j;
}

std::vector<TableEntry> entries_from(const nlohmann::json& arr) {
  std::vector<TableEntry> out;
  for (const auto& j : arr) {
    TableEntry e;
    e.root.coeffs = parse_coeffs(j.at("root").get<std::string>(), "root");
    e.coords_e = j.at("coords_e").get<std::string>();
    e.coords_simple = j.at("coords_simple").get<std::string>();
    if (j.contains("delta_set")) e.delta_set = j.at("delta_set").get<std::vector<int>>();
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

void to_json(nlohmann::json& j, const CosmallTable& table) {
  auto list = [](const std::vector<TableEntry>& rows, bool with_delta) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : rows) arr.push_back(entry_json(e, with_delta));
    return arr;
  };
  j = nlohmann::json{{"dynkin", table.dynkin.name()},
                     {"rank", table.dynkin.rank},
                     {"simple", list(table.simple, false)},
                     {"long", list(table.long_roots, false)},
                     {"short", list(table.short_roots, false)},
                     {"cosmall", list(table.cosmall, true)}};
}

void from_json(const nlohmann::json& j, CosmallTable& table) {
  table.dynkin = DynkinType::parse(j.at("dynkin").get<std::string>());
  if (j.at("rank").get<int>() != table.dynkin.rank) throw InputError("table rank disagrees with its Dynkin type");
  table.simple = entries_from(j.at("simple"));
  table.long_roots = entries_from(j.at("long"));
  table.short_roots = entries_from(j.at("short"));
  table.cosmall = entries_from(j.at("cosmall"));
}

}  // namespace curvenbhd
