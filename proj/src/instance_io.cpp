#include "gnbg/instance_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace gnbg {

using nlohmann::json;

namespace {

json vector_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw std::runtime_error("instance file: field '" + field + "': " + why);
}

const json& get(const json& j, const std::string& field, const std::string& scope) {
  const auto it = j.find(field);
  if (it == j.end()) fail(scope + field, "missing");
  return *it;
}

double get_number(const json& j, const std::string& field, const std::string& scope) {
  const json& v = get(j, field, scope);
  if (!v.is_number()) fail(scope + field, "expected a number");
  return v.get<double>();
}

Eigen::VectorXd get_vector(const json& j, const std::string& field,
                           const std::string& scope, Eigen::Index expected) {
  const json& v = get(j, field, scope);
  if (!v.is_array()) fail(scope + field, "expected an array");
  if (static_cast<Eigen::Index>(v.size()) != expected)
    fail(scope + field, "expected " + std::to_string(expected) + " entries, got " +
                            std::to_string(v.size()));
  Eigen::VectorXd out(expected);
  for (Eigen::Index i = 0; i < expected; ++i) {
    if (!v[static_cast<std::size_t>(i)].is_number())
      fail(scope + field, "entry " + std::to_string(i) + " is not a number");
    out[i] = v[static_cast<std::size_t>(i)].get<double>();
  }
  return out;
}

Eigen::MatrixXd get_matrix(const json& j, const std::string& field,
                           const std::string& scope, Eigen::Index d) {
  const json& v = get(j, field, scope);
  if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != d)
    fail(scope + field, "expected " + std::to_string(d) + " rows");
  Eigen::MatrixXd out(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const json& row = v[static_cast<std::size_t>(i)];
    const std::string row_name = scope + field + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d)
      fail(row_name, "expected " + std::to_string(d) + " entries");
    for (Eigen::Index c = 0; c < d; ++c) {
      if (!row[static_cast<std::size_t>(c)].is_number())
        fail(row_name, "entry " + std::to_string(c) + " is not a number");
      out(i, c) = row[static_cast<std::size_t>(c)].get<double>();
    }
  }
  return out;
}

}  // namespace

void write_instance(const Instanced& inst, std::ostream& os) {
  json doc;
  doc["schema"] = kInstanceSchema;
  doc["instance_id"] = inst.instance_id;
  doc["seed"] = inst.seed;
  doc["dim"] = inst.dim;
  doc["lower"] = vector_to_json(inst.lower);
  doc["upper"] = vector_to_json(inst.upper);
  json comps = json::array();
  for (const Componentd& c : inst.components) {
    json jc;
    jc["floor"] = c.floor;
    jc["center"] = vector_to_json(c.center);
    jc["h_diag"] = vector_to_json(c.h_diag);
    jc["lambda"] = c.lambda;
    jc["mu"] = json::array({c.mu[0], c.mu[1]});
    jc["omega"] = json::array({c.omega[0], c.omega[1], c.omega[2], c.omega[3]});
    jc["theta"] = matrix_to_json(c.theta);
    jc["rotation"] = matrix_to_json(c.rotation);
    comps.push_back(std::move(jc));
  }
  doc["components"] = std::move(comps);
  os << doc.dump(2) << '\n';
}

void write_instance(const Instanced& inst, const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
  write_instance(inst, os);
  if (!os.good()) throw std::runtime_error("write failed: " + path.string());
}

Instanced read_instance(std::istream& is) {
  json doc;
  try {
    doc = json::parse(is);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("instance file: ") + e.what());
  }
  if (!doc.is_object()) throw std::runtime_error("instance file: top level must be an object");
  const json& schema = get(doc, "schema", "");
  if (!schema.is_string() || schema.get<std::string>() != kInstanceSchema)
    fail("schema", std::string("expected \"") + kInstanceSchema + "\"");

  Instanced inst;
  const json& jdim = get(doc, "dim", "");
  if (!jdim.is_number_integer() || jdim.get<std::int64_t>() < 1)
    fail("dim", "expected a positive integer");
  inst.dim = jdim.get<Eigen::Index>();
  const json& jid = get(doc, "instance_id", "");
  if (!jid.is_number_integer()) fail("instance_id", "expected an integer");
  inst.instance_id = jid.get<int>();
  const json& jseed = get(doc, "seed", "");
  if (!jseed.is_number_unsigned() && !jseed.is_number_integer())
    fail("seed", "expected an integer");
  inst.seed = jseed.get<std::uint64_t>();
  inst.lower = get_vector(doc, "lower", "", inst.dim);
  inst.upper = get_vector(doc, "upper", "", inst.dim);

  const json& jcomps = get(doc, "components", "");
  if (!jcomps.is_array() || jcomps.empty())
    fail("components", "expected a non-empty array");
  for (std::size_t k = 0; k < jcomps.size(); ++k) {
    const std::string scope = "components[" + std::to_string(k) + "].";
    const json& jc = jcomps[k];
    if (!jc.is_object()) fail("components[" + std::to_string(k) + "]", "expected an object");
    Componentd c;
    c.floor = get_number(jc, "floor", scope);
    c.center = get_vector(jc, "center", scope, inst.dim);
    c.h_diag = get_vector(jc, "h_diag", scope, inst.dim);
    c.lambda = get_number(jc, "lambda", scope);
    const Eigen::VectorXd mu = get_vector(jc, "mu", scope, 2);
    c.mu = {mu[0], mu[1]};
    const Eigen::VectorXd om = get_vector(jc, "omega", scope, 4);
    c.omega = {om[0], om[1], om[2], om[3]};
    c.theta = get_matrix(jc, "theta", scope, inst.dim);
    c.rotation = get_matrix(jc, "rotation", scope, inst.dim);
    inst.components.push_back(std::move(c));
  }

  validate(inst);
  return inst;
}

Instanced read_instance(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path.string());
  return read_instance(is);
}

}  // namespace gnbg
