#pragma once

#include <nlohmann/json.hpp>

#include "curvenbhd/cosmall.hpp"
#include "curvenbhd/curves.hpp"

namespace curvenbhd {

/// Output of a curve-neighborhood query, with Weyl elements as reduced words.
struct CurveReport {
  DynkinType dynkin;
  ParabolicSubset parabolic;
  Word w;
  Coeffs degree;
  std::vector<Root> greedy;
  Word z_word;
  Word rep_word;
  int rep_length = 0;

  friend bool operator==(const CurveReport&, const CurveReport&) = default;
};

CurveReport curve_report(const RootSystem& rs, const WeylElement& w, const Degree& d,
                         const ParabolicSubset& parabolic);

struct GreedyReport {
  DynkinType dynkin;
  ParabolicSubset parabolic;
  Coeffs degree;
  std::vector<Root> maximal_roots;
  std::vector<Root> parts;
  Coeffs residual;

  friend bool operator==(const GreedyReport&, const GreedyReport&) = default;
};

GreedyReport greedy_report(const RootSystem& rs, const Degree& d, const ParabolicSubset& parabolic);

struct HeckeReport {
  DynkinType dynkin;
  Word u;
  Word v;
  Word product;
  int length = 0;

  friend bool operator==(const HeckeReport&, const HeckeReport&) = default;
};

HeckeReport hecke_report(const RootSystem& rs, const WeylElement& u, const WeylElement& v);

void to_json(nlohmann::json& j, const DynkinType& t);
void from_json(const nlohmann::json& j, DynkinType& t);
void to_json(nlohmann::json& j, const ParabolicSubset& p);
void from_json(const nlohmann::json& j, ParabolicSubset& p);
void to_json(nlohmann::json& j, const Root& r);
void from_json(const nlohmann::json& j, Root& r);
void to_json(nlohmann::json& j, const CosmallReport& r);
void from_json(const nlohmann::json& j, CosmallReport& r);
void to_json(nlohmann::json& j, const CurveReport& r);
void from_json(const nlohmann::json& j, CurveReport& r);
void to_json(nlohmann::json& j, const GreedyReport& r);
void from_json(const nlohmann::json& j, GreedyReport& r);
void to_json(nlohmann::json& j, const HeckeReport& r);
void from_json(const nlohmann::json& j, HeckeReport& r);

}  // namespace curvenbhd
