#include "finrep/json_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <utility>

namespace finrep {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
}

long long require_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ParseError(field + ": expected an integer");
  return j.get<long long>();
}

std::vector<int> int_list(const json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field + ": expected an array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(static_cast<int>(require_int(j[i], field + "[" + std::to_string(i) + "]")));
  return out;
}

GroupPtr parse_h(const json& jh) {
  if (!jh.is_object()) throw ParseError("h: expected an object");
  const int keys = static_cast<int>(jh.contains("table")) + jh.contains("cyclic") +
                   jh.contains("units_mod");
  if (keys != 1) throw ParseError("h: expected exactly one of table, cyclic, units_mod");
  try {
    if (jh.contains("cyclic"))
      return share(cyclic_group(static_cast<int>(require_int(jh["cyclic"], "h.cyclic"))));
    if (jh.contains("units_mod"))
      return share(units_group(static_cast<int>(require_int(jh["units_mod"], "h.units_mod"))));
    const json& jt = jh["table"];
    if (!jt.is_array()) throw ParseError("h.table: expected an array of rows");
    std::vector<std::vector<int>> rows;
    for (std::size_t r = 0; r < jt.size(); ++r)
      rows.push_back(int_list(jt[r], "h.table[" + std::to_string(r) + "]"));
    return share(group_from_table(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("h: ") + e.what());
  }
}

ActionHom parse_action(const json& j, int h_size, int rank) {
  if (!j.contains("action")) return ActionHom::trivial(h_size, rank);
  const json& ja = j["action"];
  if (!ja.is_object() || !ja.contains("per_element"))
    throw ParseError("action: expected an object with per_element");
  const json& jp = ja["per_element"];
  if (!jp.is_array() || static_cast<int>(jp.size()) != h_size)
    throw ParseError("action.per_element: expected one matrix per element of h (" +
                     std::to_string(h_size) + ")");
  ActionHom t;
  for (int e = 0; e < h_size; ++e) {
    const std::string field = "action.per_element[" + std::to_string(e) + "]";
    const json& jm = jp[e];
    if (!jm.is_array() || static_cast<int>(jm.size()) != rank)
      throw ParseError(field + ": expected a " + std::to_string(rank) + "x" +
                       std::to_string(rank) + " integer matrix");
    AutomorphismMat m;
    for (int r = 0; r < rank; ++r) {
      const std::string row_field = field + "[" + std::to_string(r) + "]";
      if (!jm[r].is_array() || static_cast<int>(jm[r].size()) != rank)
        throw ParseError(row_field + ": expected " + std::to_string(rank) + " integers");
      std::vector<long long> row;
      for (int c = 0; c < rank; ++c)
        row.push_back(require_int(jm[r][c], row_field + "[" + std::to_string(c) + "]"));
      m.mat.push_back(std::move(row));
    }
    t.per_element.push_back(std::move(m));
  }
  return t;
}

CMat mat_from_json(const json& jm, int dim, const std::string& field) {
  if (!jm.is_array() || static_cast<int>(jm.size()) != dim)
    throw ParseError(field + ": expected " + std::to_string(dim) + " rows");
  CMat out(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& jr = jm[r];
    if (!jr.is_array() || static_cast<int>(jr.size()) != dim)
      throw ParseError(field + "[" + std::to_string(r) + "]: expected " + std::to_string(dim) +
                       " entries");
    for (int c = 0; c < dim; ++c) {
      const json& je = jr[c];
      if (!je.is_array() || je.size() != 2 || !je[0].is_number() || !je[1].is_number())
        throw ParseError(field + "[" + std::to_string(r) + "][" + std::to_string(c) +
                         "]: expected [re, im]");
      out(r, c) = Complex(je[0].get<double>(), je[1].get<double>());
    }
  }
  return out;
}

json mat_to_json(const CMat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

SemidirectPtr parse_group_definition(const std::string& text, std::int64_t limit) {
  const json j = parse_text(text);
  if (!j.is_object()) throw ParseError("group definition: top level must be an object");
  if (!j.contains("abelian") || !j["abelian"].is_object() || !j["abelian"].contains("orders"))
    throw ParseError("group definition: missing abelian.orders");

  FiniteAbelianGroup a;
  try {
    a = make_abelian(int_list(j["abelian"]["orders"], "abelian.orders"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("abelian.orders: ") + e.what());
  }
  if (!j.contains("h")) throw ParseError("group definition: missing h");
  GroupPtr h = parse_h(j["h"]);
  ActionHom t = parse_action(j, h->size, a.rank());

  const std::int64_t order = static_cast<std::int64_t>(h->size) * a.size();
  if (order > limit)
    throw ParseError("group of order " + std::to_string(order) + " exceeds the size limit " +
                     std::to_string(limit));
  try {
    return make_semidirect(std::move(h), std::move(a), std::move(t));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("action: ") + e.what());
  }
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

SemidirectPtr load_group_definition(const std::string& path, std::int64_t limit) {
  return parse_group_definition(read_file(path), limit);
}

MatrixRep parse_rep(const std::string& text, const GroupPtr& group, double tol) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("dim") || !j.contains("mats"))
    throw ParseError("representation: expected an object with dim and mats");
  const int dim = static_cast<int>(require_int(j["dim"], "dim"));
  if (dim <= 0) throw ParseError("dim: must be positive");
  const json& jm = j["mats"];
  if (!jm.is_array() || static_cast<int>(jm.size()) != group->size)
    throw ParseError("mats: expected one matrix per group element (" +
                     std::to_string(group->size) + ")");
  std::vector<CMat> mats;
  mats.reserve(jm.size());
  for (std::size_t g = 0; g < jm.size(); ++g)
    mats.push_back(mat_from_json(jm[g], dim, "mats[" + std::to_string(g) + "]"));
  try {
    return make_rep(group, std::move(mats), tol);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("representation: ") + e.what());
  }
}

MatrixRep load_rep(const std::string& path, const GroupPtr& group, double tol) {
  return parse_rep(read_file(path), group, tol);
}

std::string rep_to_json(const MatrixRep& rep) {
  json j;
  j["dim"] = rep.dim;
  json mats = json::array();
  for (const CMat& m : rep.mats) mats.push_back(mat_to_json(m));
  j["mats"] = std::move(mats);
  return dump(j);
}

std::string pvm_to_json(const ProjectionValuedMeasure& p, double tol) {
  json j;
  j["orders"] = p.abelian.orders;
  j["dim"] = p.dim;
  json atoms = json::object();
  for (int chi : p.support(tol)) atoms[std::to_string(chi)] = mat_to_json(p.atoms[chi]);
  j["atoms"] = std::move(atoms);
  return dump(j);
}

ProjectionValuedMeasure parse_pvm(const std::string& text, double tol) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("orders") || !j.contains("dim") || !j.contains("atoms"))
    throw ParseError("measure: expected an object with orders, dim, atoms");
  FiniteAbelianGroup a;
  try {
    a = make_abelian(int_list(j["orders"], "orders"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("orders: ") + e.what());
  }
  const int dim = static_cast<int>(require_int(j["dim"], "dim"));
  if (dim <= 0) throw ParseError("dim: must be positive");
  if (!j["atoms"].is_object()) throw ParseError("atoms: expected an object");

  ProjectionValuedMeasure p{a, dim, std::vector<CMat>(a.size(), CMat::Zero(dim, dim))};
  for (const auto& [key, value] : j["atoms"].items()) {
    int chi = -1;
    try {
      std::size_t used = 0;
      chi = std::stoi(key, &used);
      if (used != key.size()) chi = -1;
    } catch (const std::exception&) {
      chi = -1;
    }
    if (chi < 0 || chi >= a.size())
      throw ParseError("atoms: key '" + key + "' is not a character index below " +
                       std::to_string(a.size()));
    p.atoms[chi] = mat_from_json(value, dim, "atoms[" + key + "]");
  }
  try {
    verify_pvm(p, tol);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("measure: ") + e.what());
  }
  return p;
}

std::string report_to_json(const ClassificationReport& report, const CompletenessResult& check) {
  json j;
  j["group_order"] = report.group_order;
  j["sum_dim_sq"] = report.sum_dim_sq;
  json entries = json::array();
  for (const ClassificationEntry& ent : report.entries) {
    json je;
    je["orbit"] = ent.orbit;
    je["orbit_rep"] = ent.orbit_rep;
    je["orbit_size"] = ent.orbit_size;
    je["stabilizer_order"] = ent.stabilizer.table->size;
    je["stalk_dim"] = ent.stalk_dim;
    je["stalk_label"] = ent.stalk_label;
    je["dim"] = ent.induced.dim;
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  j["hom_matrix"] = report.hom_matrix;
  j["oracle_match"] = report.oracle_match;
  j["pass"] = check.ok;
  j["failures"] = check.failures;
  return dump(j);
}

}  // namespace finrep
