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

#include "commands.hpp"

#include <gmp.h>

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "ncg/builders.hpp"
#include "ncg/calculus.hpp"
#include "ncg/connection.hpp"
#include "ncg/metric.hpp"
#include "ncg/spec_io.hpp"

#ifndef NCGEOM_VERSION
#define NCGEOM_VERSION "0.0.0"
#endif

namespace ncgeom::cli {

namespace fs = std::filesystem;
using ncg::io::Json;

namespace {

struct InputRecord {
  std::string role;
  std::string path;
  std::string sha256;
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void input(std::string role, const fs::path& path, const std::string& bytes) {
    inputs_.push_back({std::move(role), path.string(), sha256_hex(bytes)});
  }
  void check(ncg::CheckItem item) { checks_.items.push_back(std::move(item)); }
  void pass(std::string name) { checks_.pass(std::move(name)); }
  void fail_check(std::string name, std::string code, std::string witness) {
    checks_.add(std::move(name), std::move(code), std::move(witness));
  }
  Json& summary() { return summary_; }

  void error(int exit_code, std::string code, std::string message) {
    if (error_) return;
    exit_code_ = exit_code;
    error_ = ncg::Failure{std::move(code), std::move(message)};
  }
  void error(const ncg::Failure& f) { error(kExitMath, f.code, f.message); }
  bool failed() const { return error_.has_value(); }
  int exit_code() const { return exit_code_; }

  Json to_json() const {
    Json out;
    out["command"] = command_;
    out["version"] = NCGEOM_VERSION;
    Json versions;
    versions["ncgeom"] = NCGEOM_VERSION;
    versions["gmp"] = gmp_version;
    versions["nlohmann_json"] = std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                std::to_string(NLOHMANN_JSON_VERSION_PATCH);
    out["versions"] = std::move(versions);
    Json inputs = Json::array();
    for (const auto& in : inputs_) {
      Json j;
      j["role"] = in.role;
      j["path"] = in.path;
      j["sha256"] = in.sha256;
      inputs.push_back(std::move(j));
    }
    out["inputs"] = std::move(inputs);
    out["status"] = status();
    out["exit_code"] = exit_code_;
    out["summary"] = summary_.is_null() ? Json::object() : summary_;
    Json checks = Json::array();
    for (const auto& item : checks_.items) {
      Json j;
      j["name"] = item.name;
      j["passed"] = item.passed;
      j["code"] = item.code;
      j["witness"] = item.witness;
      checks.push_back(std::move(j));
    }
    out["checks"] = std::move(checks);
    if (error_) {
      Json e;
      e["code"] = error_->code;
      e["message"] = error_->message;
      out["error"] = std::move(e);
    } else {
      out["error"] = nullptr;
    }
    return out;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << command_;
    for (const auto& in : inputs_) os << " " << in.path;
    os << "\n";
    for (const auto& item : checks_.items) {
      os << (item.passed ? "  pass  " : "  FAIL  ") << item.name;
      if (!item.passed) os << "  [" << item.code << "] " << item.witness;
      os << "\n";
    }
    for (const auto& [key, value] : summary_.items()) {
      if (value.is_object()) continue;
      os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    if (error_) os << "error: " << error_->code << ": " << error_->message << "\n";
    os << "status: " << status() << "\n";
    return os.str();
  }

  std::string render(bool json) const { return json ? ncg::io::dump(to_json()) : to_text(); }

 private:
  std::string status() const {
    switch (exit_code_) {
      case kExitOk: return "ok";
      case kExitMath: return "math_failure";
      default: return "input_error";
    }
  }

  std::string command_;
  std::vector<InputRecord> inputs_;
  ncg::CheckList checks_;
  Json summary_ = Json::object();
  std::optional<ncg::Failure> error_;
  int exit_code_ = kExitOk;
};

Result finish(const Report& report, bool json) { return {report.exit_code(), report.render(json), {}}; }

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ncg::io::InputError(path.string() + ": cannot write file");
  out << text;
  if (!out) throw ncg::io::InputError(path.string() + ": write failed");
}

/// Loads the spec and applies --metric / --frame overrides.
std::optional<ncg::io::SpecFile> load(const fs::path& path, const Options& opts, Report& report) {
  try {
    std::string bytes = ncg::io::read_file(path);
    report.input("spec", path, bytes);
    ncg::io::SpecFile spec = ncg::io::spec_from_json(ncg::io::parse_json(bytes, path.string()));
    if (opts.metric) {
      std::string m = ncg::io::read_file(*opts.metric);
      report.input("metric", *opts.metric, m);
      spec.metric = ncg::io::metric_from_json(ncg::io::parse_json(m, opts.metric->string()), spec.calculus);
    }
    if (opts.frame) {
      std::string f = ncg::io::read_file(*opts.frame);
      report.input("frame", *opts.frame, f);
      spec.frame = ncg::io::frame_from_json(ncg::io::parse_json(f, opts.frame->string()), spec.calculus);
    }
    return spec;
  } catch (const ncg::io::InputError& e) {
    report.error(kExitInput, "input_error", e.what());
    return std::nullopt;
  }
}

struct Analysis {
  std::optional<ncg::TamenessCertificate> cert;
  std::optional<ncg::FramePresentation> frame;
  std::optional<ncg::Geometry> geo;
};

/// Calculus axioms, tameness, frame and metric. Returns false after
/// recording the first failure.
bool analyse(const ncg::io::SpecFile& spec, Report& report, Analysis& out) {
  const ncg::Calculus& c = spec.calculus;
  Json& summary = report.summary();
  summary["tame"] = false;
  summary["metric_valid"] = false;

  ncg::CheckList axioms = ncg::validate_calculus(c);
  for (const auto& item : axioms.items) report.check(item);
  if (const auto* bad = axioms.first_failure()) {
    report.error(kExitMath, bad->code, bad->witness);
    return false;
  }

  auto cert = ncg::build_symmetry(c);
  if (!cert) {
    report.fail_check("tameness", cert.failure().code, cert.failure().message);
    report.error(cert.failure());
    return false;
  }
  for (const auto& item : cert->conditions.items) report.check(item);
  out.cert = std::move(cert).value();
  summary["tame"] = true;

  auto frame = ncg::frame_presentation(c, *out.cert, spec.frame);
  if (!frame) {
    report.fail_check("frame_splitting", frame.failure().code, frame.failure().message);
    report.error(frame.failure());
    return false;
  }
  report.pass("frame_splitting");
  if (frame->idempotent_check) {
    report.pass("frame_idempotent");
  } else {
    report.fail_check("frame_idempotent", "NotIdempotent", "s_j(Phi_k) is not an idempotent matrix");
    report.error(kExitMath, "NotIdempotent", "frame matrix is not idempotent");
    return false;
  }
  out.frame = std::move(frame).value();

  auto geo = ncg::Geometry::create(c, *out.cert, spec.metric);
  if (!geo) {
    report.fail_check("metric_valid", geo.failure().code, geo.failure().message);
    report.error(geo.failure());
    return false;
  }
  report.pass("metric_valid");
  auto square = ncg::metric_square(*geo);
  if (!square) {
    report.fail_check("metric_square", square.failure().code, square.failure().message);
    report.error(square.failure());
    return false;
  }
  report.pass("metric_square");
  summary["metric_valid"] = true;

  Json dims;
  dims["algebra"] = c.algebra.dim();
  dims["one_forms"] = c.one_forms.dim();
  dims["two_forms"] = c.two_forms.dim();
  dims["tensor_square"] = out.cert->ee.dim();
  dims["central_one_forms"] = out.cert->central_basis.size();
  dims["vector_fields"] = geo->fields().size();
  summary["dims"] = std::move(dims);
  out.geo = std::move(geo).value();
  return true;
}

/// First central generator theta_j on which the torsion does not vanish.
std::string torsion_witness(const ncg::Geometry& geo, const ncg::Connection& nabla) {
  auto t = ncg::torsion(geo.calculus(), geo.cert(), nabla);
  if (!t) return t.failure().code + ": " + t.failure().message;
  const auto& z = geo.cert().central_basis;
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (!ncg::is_zero(t->apply(z[j]))) return "T(theta_" + std::to_string(j + 1) + ") != 0";
  }
  return {};
}

void record_verdict(Report& report, const std::string& name, bool passed, const std::string& code,
                    const std::string& witness) {
  if (passed) report.pass(name);
  else report.fail_check(name, code, witness);
}

template <class F>
Result guarded(Report& report, bool json, F&& body) {
  try {
    body();
  } catch (const ncg::io::InputError& e) {
    report.error(kExitInput, "input_error", e.what());
  } catch (const ncg::ContractError& e) {
    report.error(kExitInput, "contract_violation", e.what());
  } catch (const std::runtime_error& e) {
    report.error(kExitMath, "solver_error", e.what());
  }
  return finish(report, json);
}

}  // namespace

Result cmd_gen(const std::string& preset, int n, const Options& opts) {
  Report report("gen");
  ncg::Preset p;
  try {
    p = ncg::make_preset(preset, n);
  } catch (const std::invalid_argument& e) {
    report.error(kExitInput, "input_error", e.what());
    return finish(report, opts.json);
  }
  ncg::io::SpecFile spec{p.calculus, p.metric, std::nullopt};
  if (opts.seed != 0) {
    spec.metric = ncg::constant_metric(p.chevalley, ncg::seeded_coefficients(p.chevalley, opts.seed));
  }
  std::string text = ncg::io::dump(ncg::io::to_json(spec));
  report.summary()["preset"] = p.name;
  report.summary()["n"] = n;
  report.summary()["seed"] = opts.seed;
  report.summary()["sha256"] = sha256_hex(text);
  if (!opts.out) return {kExitOk, text, report.render(opts.json)};
  try {
    write_file(*opts.out, text);
  } catch (const ncg::io::InputError& e) {
    report.error(kExitInput, "input_error", e.what());
    return finish(report, opts.json);
  }
  report.summary()["out"] = opts.out->string();
  return finish(report, opts.json);
}

Result cmd_check(const fs::path& path, const Options& opts) {
  Report report("check");
  return guarded(report, opts.json, [&] {
    auto spec = load(path, opts, report);
    if (!spec) return;
    Analysis a;
    analyse(*spec, report, a);
  });
}

Result cmd_connect(const fs::path& path, const Options& opts) {
  Report report("connect");
  std::string artifact_text;
  Result r = guarded(report, opts.json, [&] {
    auto spec = load(path, opts, report);
    if (!spec) return;
    Analysis a;
    if (!analyse(*spec, report, a)) return;
    const ncg::Geometry& geo = *a.geo;

    auto nabla0 = ncg::nabla_zero(spec->calculus, *a.cert, *a.frame);
    if (!nabla0) {
      report.error(nabla0.failure());
      return;
    }
    auto koszul = ncg::levi_civita_koszul(geo);
    if (!koszul) {
      report.fail_check("koszul_route", koszul.failure().code, koszul.failure().message);
      report.error(koszul.failure());
      return;
    }
    report.pass("koszul_route");
    auto direct = ncg::levi_civita_direct(geo, *nabla0);
    if (!direct) {
      report.fail_check("direct_route", direct.failure().code, direct.failure().message);
      report.error(direct.failure());
      return;
    }
    report.pass("direct_route");

    const ncg::Connection& lc = direct->nabla;
    ncg::io::ConnectionArtifact art;
    art.nabla = lc;
    art.route_equality = koszul->nabla == lc;
    auto tv = ncg::check_torsionless_cov(geo, lc);
    auto cv = ncg::check_compat_cov(geo, lc);
    art.torsion_zero = tv.covariant && tv.form;
    art.compatibility = cv.covariant && cv.form;
    const auto& z = geo.cert().central_basis;
    ncg::CovariantTable table = ncg::covariant_table(geo, lc);
    for (const auto& row : table) {
      auto& out_row = art.table.emplace_back();
      for (const auto& entry : row) {
        auto& values = out_row.emplace_back();
        for (const auto& zr : z) values.push_back(entry.apply(zr));
      }
    }
    record_verdict(report, "route_equality", art.route_equality, "RoutesDiffer",
                   "Koszul and direct connections differ");
    record_verdict(report, "torsion_zero", art.torsion_zero, "TorsionNonzero", tv.witness);
    record_verdict(report, "compatibility", art.compatibility, "NotCompatible", cv.witness);

    bool in_fields = true;
    for (const auto& row : koszul->in_fields)
      for (bool b : row) in_fields = in_fields && b;
    Json& s = report.summary();
    s["unknowns"] = direct->unknowns;
    s["equations"] = direct->equations;
    s["kernel_dim"] = direct->kernel_dim;
    s["table_in_vector_fields"] = in_fields;
    s["route_equality"] = art.route_equality;
    s["torsion_zero"] = art.torsion_zero;
    s["compatibility"] = art.compatibility;

    artifact_text = ncg::io::dump(ncg::io::to_json(art));
    if (opts.out) {
      write_file(*opts.out, artifact_text);
      s["out"] = opts.out->string();
    }
    s["artifact_sha256"] = sha256_hex(artifact_text);
    if (!(art.route_equality && art.torsion_zero && art.compatibility)) {
      report.error(kExitMath, "LeviCivitaCheckFailed", "artifact checks are not all true");
    }
  });
  r = finish(report, opts.json);
  if (!opts.out && !artifact_text.empty()) {
    r.err = std::move(r.out);
    r.out = std::move(artifact_text);
  }
  return r;
}

Result cmd_verify(const fs::path& path, const fs::path& connection, const Options& opts) {
  Report report("verify");
  return guarded(report, opts.json, [&] {
    auto spec = load(path, opts, report);
    if (!spec) return;
    Analysis a;
    if (!analyse(*spec, report, a)) return;
    const ncg::Geometry& geo = *a.geo;

    std::string bytes = ncg::io::read_file(connection);
    report.input("connection", connection, bytes);
    ncg::Connection nabla = ncg::io::connection_from_json(
        ncg::io::parse_json(bytes, connection.string()), geo.ee().dim(), geo.form_dim());

    auto leibniz = ncg::check_leibniz(spec->calculus, geo.cert(), nabla);
    record_verdict(report, "leibniz", !leibniz, leibniz ? leibniz->code : "",
                   leibniz ? leibniz->message : "");
    auto tv = ncg::check_torsionless_cov(geo, nabla);
    const std::string tw = tv.form ? std::string() : torsion_witness(geo, nabla);
    record_verdict(report, "torsion_covariant", tv.covariant, "TorsionNonzero", tv.witness);
    record_verdict(report, "torsion_form", tv.form, "TorsionNonzero", tw);
    record_verdict(report, "torsion_routes_agree", tv.agree(), "RoutesDisagree",
                   "covariant and form verdicts differ");
    auto cv = ncg::check_compat_cov(geo, nabla);
    record_verdict(report, "compatibility_covariant", cv.covariant, "NotCompatible", cv.witness);
    record_verdict(report, "compatibility_form", cv.form, "NotCompatible", cv.witness);
    record_verdict(report, "compatibility_routes_agree", cv.agree(), "RoutesDisagree",
                   "covariant and form verdicts differ");

    Json& s = report.summary();
    s["leibniz"] = !leibniz;
    s["torsion_zero"] = tv.covariant && tv.form;
    s["compatibility"] = cv.covariant && cv.form;
    if (leibniz) report.error(*leibniz);
    else if (!tv.form || !tv.covariant) report.error(kExitMath, "TorsionNonzero", tv.form ? tv.witness : tw);
    else if (!cv.form || !cv.covariant) report.error(kExitMath, "NotCompatible", cv.witness);
  });
}

}  // namespace ncgeom::cli
