#include "curvenbhd/serialize.hpp"

#include "curvenbhd/literals.hpp"

namespace curvenbhd {

CurveReport curve_report(const RootSystem& rs, const WeylElement& w, const Degree& d,
                         const ParabolicSubset& parabolic) {
  CurveReport r;
  r.dynkin = rs.dynkin();
  r.parabolic = parabolic;
  r.w = reduced_word(rs, w);
  r.degree = d.coeffs();
  r.greedy = greedy_decomposition(rs, d, parabolic).parts;
  r.z_word = reduced_word(rs, z_P_d(rs, d, parabolic));
  const SchubertClass cls = curve_neighborhood(rs, w, d, parabolic);
  r.rep_word = reduced_word(rs, cls.rep());
  r.rep_length = cls.dimension();
  return r;
}

GreedyReport greedy_report(const RootSystem& rs, const Degree& d, const ParabolicSubset& parabolic) {
  GreedyReport r;
  r.dynkin = rs.dynkin();
  r.parabolic = parabolic;
  r.degree = d.coeffs();
  r.maximal_roots = maximal_roots(rs, d, parabolic);
  auto g = greedy_decomposition(rs, d, parabolic);
  r.parts = std::move(g.parts);
  r.residual = g.residual.coeffs();
  return r;
}

HeckeReport hecke_report(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
  const WeylElement p = hecke_product(rs, u, v);
  return HeckeReport{rs.dynkin(), reduced_word(rs, u), reduced_word(rs, v), reduced_word(rs, p), length(rs, p)};
}

void to_json(nlohmann::json& j, const DynkinType& t) { j = t.name(); }
void from_json(const nlohmann::json& j, DynkinType& t) { t = DynkinType::parse(j.get<std::string>()); }

void to_json(nlohmann::json& j, const ParabolicSubset& p) { j = p.members(); }
void from_json(const nlohmann::json& j, ParabolicSubset& p) { p = ParabolicSubset(j.get<std::vector<int>>()); }

void to_json(nlohmann::json& j, const Root& r) { j = format_coeffs(r.coeffs); }
void from_json(const nlohmann::json& j, Root& r) { r.coeffs = parse_coeffs(j.get<std::string>(), "root"); }

namespace {

template <typename T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
  else j[key] = nullptr;
}

template <typename T>
std::optional<T> get_optional(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

void to_json(nlohmann::json& j, const CosmallReport& r) {
  j = nlohmann::json{{"dynkin", r.dynkin},
                     {"parabolic", r.parabolic},
                     {"root", r.root},
                     {"coords_simple", format_simple_expansion(r.root.coeffs)},
                     {"is_cosmall", r.is_cosmall},
                     {"delta_set", r.delta_set}};
  put_optional(j, "cosmall_witness", r.cosmall_witness);
  put_optional(j, "is_P_cosmall", r.is_P_cosmall);
  put_optional(j, "P_cosmall_witness", r.P_cosmall_witness);
}

void from_json(const nlohmann::json& j, CosmallReport& r) {
  r.dynkin = j.at("dynkin").get<DynkinType>();
  r.parabolic = j.at("parabolic").get<ParabolicSubset>();
  r.root = j.at("root").get<Root>();
  r.is_cosmall = j.at("is_cosmall").get<bool>();
  r.delta_set = j.at("delta_set").get<std::vector<int>>();
  r.cosmall_witness = get_optional<Root>(j, "cosmall_witness");
  r.is_P_cosmall = get_optional<bool>(j, "is_P_cosmall");
  r.P_cosmall_witness = get_optional<Root>(j, "P_cosmall_witness");
}

void to_json(nlohmann::json& j, const CurveReport& r) {
  j = nlohmann::json{{"dynkin", r.dynkin},         {"parabolic", r.parabolic}, {"w", r.w},
                     {"degree", r.degree},         {"greedy", r.greedy},       {"z_word", r.z_word},
                     {"rep_word", r.rep_word},     {"rep_length", r.rep_length}};
}

void from_json(const nlohmann::json& j, CurveReport& r) {
  r.dynkin = j.at("dynkin").get<DynkinType>();
  r.parabolic = j.at("parabolic").get<ParabolicSubset>();
  r.w = j.at("w").get<Word>();
  r.degree = j.at("degree").get<Coeffs>();
  r.greedy = j.at("greedy").get<std::vector<Root>>();
  r.z_word = j.at("z_word").get<Word>();
  r.rep_word = j.at("rep_word").get<Word>();
  r.rep_length = j.at("rep_length").get<int>();
}

void to_json(nlohmann::json& j, const GreedyReport& r) {
  j = nlohmann::json{{"dynkin", r.dynkin}, {"parabolic", r.parabolic}, {"degree", r.degree},
                     {"maximal_roots", r.maximal_roots}, {"parts", r.parts}, {"residual", r.residual}};
}

void from_json(const nlohmann::json& j, GreedyReport& r) {
  r.dynkin = j.at("dynkin").get<DynkinType>();
  r.parabolic = j.at("parabolic").get<ParabolicSubset>();
  r.degree = j.at("degree").get<Coeffs>();
  r.maximal_roots = j.at("maximal_roots").get<std::vector<Root>>();
  r.parts = j.at("parts").get<std::vector<Root>>();
  r.residual = j.at("residual").get<Coeffs>();
}

void to_json(nlohmann::json& j, const HeckeReport& r) {
  j = nlohmann::json{{"dynkin", r.dynkin}, {"u", r.u}, {"v", r.v}, {"product", r.product}, {"length", r.length}};
}

void from_json(const nlohmann::json& j, HeckeReport& r) {
  r.dynkin = j.at("dynkin").get<DynkinType>();
  r.u = j.at("u").get<Word>();
  r.v = j.at("v").get<Word>();
  r.product = j.at("product").get<Word>();
  r.length = j.at("length").get<int>();
}

}  // namespace curvenbhd
