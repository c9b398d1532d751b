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

#ifndef NCG_SPEC_IO_HPP
#define NCG_SPEC_IO_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncg/calculus.hpp"
#include "ncg/connection.hpp"

namespace ncg::io {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input. The message starts with the JSON path
/// of the offending value.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kFieldTag = "Q(i)";

/// Everything a spec file carries.
struct SpecFile {
  Calculus calculus;
  Matrix metric;  // dim A x (dim E)^2, plain tensor basis
  std::optional<std::vector<Vector>> frame;
};

// Scalars are "a" or "a/b" strings, or {"re": ..., "im": ...}. Plain JSON
// integers are accepted on input.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const std::string& where);

Json to_json(const Vector& v);
Vector vector_from_json(const Json& j, std::size_t len, const std::string& where);

/// Row-major array of rows.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);

Json to_json(const SpecFile& spec);
SpecFile spec_from_json(const Json& j);

/// Reads a whole file; throws InputError if it cannot be opened.
std::string read_file(const std::filesystem::path& path);
Json parse_json(const std::string& text, const std::string& what);

SpecFile load_spec(const std::filesystem::path& path);

/// A metric override file: either {"metric": [[...]]} or a bare matrix.
Matrix metric_from_json(const Json& j, const Calculus& c);
/// A frame override file: either {"frame": [[...]]} or a bare list.
std::vector<Vector> frame_from_json(const Json& j, const Calculus& c);

/// The connection artifact written by `connect`.
struct ConnectionArtifact {
  /// table[p][q][r] = (nabla_{X_p} X_q)(z_r), an element of A.
  std::vector<std::vector<std::vector<Vector>>> table;
  Connection nabla;
  bool torsion_zero = false;
  bool compatibility = false;
  bool route_equality = false;
};

Json to_json(const ConnectionArtifact& a);
/// Reads only the "nabla" block, checked against the expected shape.
Connection connection_from_json(const Json& j, std::size_t rows, std::size_t cols);

/// Canonical serialization: two-space indent plus a trailing newline.
std::string dump(const Json& j);

}  // namespace ncg::io

#endif  // NCG_SPEC_IO_HPP
