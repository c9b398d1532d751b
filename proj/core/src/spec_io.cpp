// Copyright 2026 The ncgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ncg/spec_io.hpp"

#include <fstream>
#include <sstream>

namespace ncg::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t size_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

void expect_array(const Json& j, std::size_t len, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  if (j.size() != len) {
    fail(where, "expected " + std::to_string(len) + " entries, found " + std::to_string(j.size()));
  }
}

mpq_class rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return mpq_class(mpz_class(j.dump(), 10));
  if (!j.is_string()) fail(where, "expected an exact rational string such as \"3/4\"");
  try {
    return Scalar::parse_rational(j.get<std::string>()).re();
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

std::vector<Matrix> actions_from_json(const Json& j, std::size_t count, std::size_t dim,
                                      const std::string& where) {
  expect_array(j, count, where);
  std::vector<Matrix> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(matrix_from_json(j[i], dim, dim, where + "/" + std::to_string(i)));
  }
  return out;
}

Json module_to_json(const Bimodule& m, std::size_t algebra_dim) {
  Json out;
  out["dim"] = m.dim();
  Json left = Json::array();
  Json right = Json::array();
  for (std::size_t i = 0; i < algebra_dim; ++i) {
    left.push_back(to_json(m.left(i)));
    right.push_back(to_json(m.right(i)));
  }
  out["left"] = std::move(left);
  out["right"] = std::move(right);
  return out;
}

Bimodule module_from_json(const Json& j, std::size_t algebra_dim, const std::string& where) {
  std::size_t dim = size_from_json(member(j, "dim", where), where + "/dim");
  auto left = actions_from_json(member(j, "left", where), algebra_dim, dim, where + "/left");
  auto right = actions_from_json(member(j, "right", where), algebra_dim, dim, where + "/right");
  return Bimodule(dim, std::move(left), std::move(right));
}

}  // namespace

Json to_json(const Scalar& s) {
  if (s.is_real()) return rational_to_string(s.re());
  Json out;
  out["re"] = rational_to_string(s.re());
  out["im"] = rational_to_string(s.im());
  return out;
}

Scalar scalar_from_json(const Json& j, const std::string& where) {
  if (j.is_object()) {
    for (const auto& [key, _] : j.items()) {
      if (key != "re" && key != "im") fail(where, "unexpected key \"" + key + "\" in scalar");
    }
    mpq_class re = j.contains("re") ? rational_from_json(j["re"], where + "/re") : mpq_class(0);
    mpq_class im = j.contains("im") ? rational_from_json(j["im"], where + "/im") : mpq_class(0);
    return Scalar(re, im);
  }
  return Scalar(rational_from_json(j, where));
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vector vector_from_json(const Json& j, std::size_t len, const std::string& where) {
  expect_array(j, len, where);
  Vector out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) out.push_back(scalar_from_json(j[k], where + "/" + std::to_string(k)));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& x : m.row(r)) row.push_back(to_json(x));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  expect_array(j, rows, where);
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::string at = where + "/" + std::to_string(r);
    expect_array(j[r], cols, at);
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = scalar_from_json(j[r][c], at + "/" + std::to_string(c));
  }
  return out;
}

Json to_json(const SpecFile& spec) {
  const Calculus& c = spec.calculus;
  const Algebra& a = c.algebra;
  const std::size_t n = a.dim();
  Json out;
  out["field"] = kFieldTag;

  Json alg;
  alg["dim"] = n;
  alg["basis"] = a.labels();
  alg["unit"] = to_json(a.unit());
  Json mul = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < n; ++k) row.push_back(to_json(a.product(i, k)));
    mul.push_back(std::move(row));
  }
  alg["mul"] = std::move(mul);
  out["algebra"] = std::move(alg);

  out["one_forms"] = module_to_json(c.one_forms, n);
  out["two_forms"] = module_to_json(c.two_forms, n);
  out["d0"] = to_json(c.d0);
  out["d1"] = to_json(c.d1);
  out["wedge"] = to_json(c.wedge);
  out["metric"] = to_json(spec.metric);
  if (spec.frame) {
    Json frame = Json::array();
    for (const auto& v : *spec.frame) frame.push_back(to_json(v));
    out["frame"] = std::move(frame);
  }
  return out;
}

SpecFile spec_from_json(const Json& j) {
  if (!j.is_object()) fail("", "spec must be a JSON object");
  const Json& field = member(j, "field", "");
  if (!field.is_string() || field.get<std::string>() != kFieldTag) {
    fail("/field", std::string("expected \"") + kFieldTag + "\"");
  }

  const Json& alg = member(j, "algebra", "");
  const std::size_t n = size_from_json(member(alg, "dim", "/algebra"), "/algebra/dim");
  if (n == 0) fail("/algebra/dim", "algebra must be nonzero");
  const Json& basis = member(alg, "basis", "/algebra");
  expect_array(basis, n, "/algebra/basis");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (!basis[i].is_string()) fail("/algebra/basis/" + std::to_string(i), "expected a label string");
    labels.push_back(basis[i].get<std::string>());
  }
  Vector unit = vector_from_json(member(alg, "unit", "/algebra"), n, "/algebra/unit");
  const Json& mul = member(alg, "mul", "/algebra");
  expect_array(mul, n, "/algebra/mul");
  std::vector<std::vector<Vector>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string at = "/algebra/mul/" + std::to_string(i);
    expect_array(mul[i], n, at);
    for (std::size_t k = 0; k < n; ++k) {
      table[i].push_back(vector_from_json(mul[i][k], n, at + "/" + std::to_string(k)));
    }
  }
  auto algebra = Algebra::create(std::move(labels), std::move(unit), std::move(table));
  if (!algebra) fail("/algebra", algebra.failure().code + ": " + algebra.failure().message);

  SpecFile spec;
  Calculus& c = spec.calculus;
  c.algebra = std::move(algebra).value();
  c.one_forms = module_from_json(member(j, "one_forms", ""), n, "/one_forms");
  c.two_forms = module_from_json(member(j, "two_forms", ""), n, "/two_forms");
  const std::size_t m = c.one_forms.dim();
  const std::size_t w = c.two_forms.dim();
  c.d0 = matrix_from_json(member(j, "d0", ""), m, n, "/d0");
  c.d1 = matrix_from_json(member(j, "d1", ""), w, m, "/d1");
  c.wedge = matrix_from_json(member(j, "wedge", ""), w, m * m, "/wedge");
  spec.metric = matrix_from_json(member(j, "metric", ""), n, m * m, "/metric");
  if (j.contains("frame")) spec.frame = frame_from_json(j["frame"], c);
  return spec;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(what + ": invalid JSON: " + e.what());
  }
}

SpecFile load_spec(const std::filesystem::path& path) {
  return spec_from_json(parse_json(read_file(path), path.string()));
}

Matrix metric_from_json(const Json& j, const Calculus& c) {
  const Json& body = j.is_object() ? member(j, "metric", "") : j;
  const std::size_t m = c.one_forms.dim();
  return matrix_from_json(body, c.algebra.dim(), m * m, "/metric");
}

std::vector<Vector> frame_from_json(const Json& j, const Calculus& c) {
  const Json& body = j.is_object() ? member(j, "frame", "") : j;
  if (!body.is_array() || body.empty()) fail("/frame", "expected a nonempty array of one-forms");
  std::vector<Vector> out;
  for (std::size_t k = 0; k < body.size(); ++k) {
    out.push_back(vector_from_json(body[k], c.one_forms.dim(), "/frame/" + std::to_string(k)));
  }
  return out;
}

Json to_json(const ConnectionArtifact& a) {
  Json out;
  Json table = Json::array();
  for (const auto& row : a.table) {
    Json jrow = Json::array();
    for (const auto& entry : row) {
      Json values = Json::array();
      for (const auto& v : entry) values.push_back(to_json(v));
      jrow.push_back(std::move(values));
    }
    table.push_back(std::move(jrow));
  }
  out["table"] = std::move(table);
  out["nabla"] = to_json(a.nabla.values);
  Json checks;
  checks["torsion_zero"] = a.torsion_zero;
  checks["compatibility"] = a.compatibility;
  checks["route_equality"] = a.route_equality;
  out["checks"] = std::move(checks);
  return out;
}

Connection connection_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  return Connection{matrix_from_json(member(j, "nabla", ""), rows, cols, "/nabla")};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ncg::io
