#include "wfp/serialize.hpp"

#include <json.hpp>

namespace wfp {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kIndent = 2;

ordered_json bivector_node(const Bivector& b) {
  ordered_json node;
  node["coords"] = {"x", "y", "z", "t"};
  node["k"] = b.conformal() ? ordered_json(b.conformal()->to_string()) : ordered_json(nullptr);
  ordered_json matrix = ordered_json::array();
  for (std::size_t i = 0; i < kNumCoords; ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < kNumCoords; ++j) row.push_back(b(i, j).to_string());
    matrix.push_back(std::move(row));
  }
  node["matrix"] = std::move(matrix);
  return node;
}

std::string bracket_name(std::size_t i, std::size_t j) {
  return std::string{'{', var_name(kCoords[i]), ',', var_name(kCoords[j]), '}'};
}

}  // namespace

std::string bivector_to_json(const Bivector& b) { return bivector_node(b).dump(kIndent); }

Bivector bivector_from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bivector JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix")) {
    throw std::invalid_argument("bivector JSON: expected an object with \"matrix\"");
  }
  if (doc.contains("coords") && doc["coords"] != ordered_json({"x", "y", "z", "t"})) {
    throw std::invalid_argument("bivector JSON: coords must be [\"x\",\"y\",\"z\",\"t\"]");
  }
  const auto& matrix = doc["matrix"];
  if (!matrix.is_array() || matrix.size() != kNumCoords) {
    throw std::invalid_argument("bivector JSON: matrix must be 4x4");
  }
  ExprMatrix4 m;
  for (std::size_t i = 0; i < kNumCoords; ++i) {
    if (!matrix[i].is_array() || matrix[i].size() != kNumCoords) {
      throw std::invalid_argument("bivector JSON: matrix must be 4x4");
    }
    for (std::size_t j = 0; j < kNumCoords; ++j) {
      if (!matrix[i][j].is_string()) {
        throw std::invalid_argument("bivector JSON: matrix entries must be strings");
      }
      m[i][j] = parse(matrix[i][j].get<std::string>());
    }
  }
  std::optional<Expr> k;
  if (doc.contains("k") && !doc["k"].is_null()) {
    if (!doc["k"].is_string()) throw std::invalid_argument("bivector JSON: k must be a string");
    k = parse(doc["k"].get<std::string>());
  }
  return Bivector(std::move(m), std::move(k));
}

std::string jacobi_to_json(const Bivector& b) {
  const auto jac = jacobiator(b);
  ordered_json doc;
  bool poisson = true;
  ordered_json components = ordered_json::object();
  ordered_json witness = nullptr;
  for (std::size_t n = 0; n < jac.size(); ++n) {
    components[triple_name(kTriples[n])] = jac[n].to_string();
    if (poisson && !jac[n].is_zero()) {
      poisson = false;
      witness = {{"triple", triple_name(kTriples[n])}, {"value", jac[n].to_string()}};
    }
  }
  doc["poisson"] = poisson;
  doc["jacobiator"] = std::move(components);
  doc["witness"] = std::move(witness);
  return doc.dump(kIndent);
}

std::string linear_part_to_json(const StructureConstants& sc) {
  ordered_json relations = ordered_json::object();
  for (std::size_t i = 0; i < kNumCoords; ++i) {
    for (std::size_t j = i + 1; j < kNumCoords; ++j) {
      Expr value;
      for (std::size_t l = 0; l < kNumCoords; ++l) {
        value += sc.table[i][j][l] * Expr::variable(kCoords[l]);
      }
      relations[bracket_name(i, j)] = value.to_string();
    }
  }
  ordered_json doc;
  doc["relations"] = std::move(relations);
  doc["dropped_constants"] = sc.dropped;
  return doc.dump(kIndent);
}

std::string catalogue_to_json() {
  ordered_json models = ordered_json::array();
  for (ModelName name : kAllModels) {
    const ModelSpec spec = model_symbolic(name);
    ordered_json node;
    node["name"] = std::string(model_name(name));
    node["uses_s"] = spec.uses_s;
    node["casimirs"] = {{"c1", spec.casimirs.c1.to_string()},
                        {"c2", spec.casimirs.c2.to_string()}};
    node["coordinate_casimir"] = spec.coordinate_casimir
                                     ? ordered_json(std::string(1, var_name(*spec.coordinate_casimir)))
                                     : ordered_json(nullptr);
    node["expected_bivector"] = bivector_node(*spec.expected_bivector);
    node["expected_bivector_source"] = spec.expected_is_derived ? "derived" : "transcribed";
    if (spec.expected_leaf_coefficient && spec.leaf_chart) {
      node["leaf_coefficient"] = {
          {"numerator", spec.expected_leaf_coefficient->numerator.to_string()},
          {"denominator", spec.expected_leaf_coefficient->denominator.to_string()},
          {"chart", {std::string(1, var_name(spec.leaf_chart->first)),
                     std::string(1, var_name(spec.leaf_chart->second))}}};
    } else {
      node["leaf_coefficient"] = nullptr;
    }
    ordered_json locus = ordered_json::array();
    for (const auto& e : spec.critical_locus) locus.push_back(e.to_string());
    node["critical_locus"] = std::move(locus);
    models.push_back(std::move(node));
  }
  ordered_json doc;
  doc["schema_version"] = std::string(kSchemaVersion);
  doc["models"] = std::move(models);
  return doc.dump(kIndent);
}

}  // namespace wfp
