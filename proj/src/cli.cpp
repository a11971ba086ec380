#include "jordan/cli.hpp"

#include <chrono>
#include <cstdlib>

#include "jordan/parallel.hpp"
#include "jordan/sampling.hpp"

namespace jordan {
namespace cli {

namespace {

ModeRequest mode_from_string(const std::string& s) {
  if (s == "exact") return ModeRequest::Exact;
  if (s == "numeric") return ModeRequest::Numeric;
  if (s == "auto") return ModeRequest::Auto;
  fail(ErrorKind::ParseError, "mode must be exact, numeric or auto (got \"" + s + "\")");
}

const char* mode_request_name(ModeRequest m) {
  switch (m) {
    case ModeRequest::Exact: return "exact";
    case ModeRequest::Numeric: return "numeric";
    case ModeRequest::Auto: return "auto";
  }
  return "?";
}

int precision_bits() {
  // only 53-bit doubles are implemented; other requests clamp
  if (const char* env = std::getenv("JORDAN_PRECISION_BITS")) {
    long v = std::atol(env);
    if (v != 0 && v != 53) return 53;
  }
  return 53;
}

bool is_known_operation(const std::string& op) {
  return op == "additive" || op == "multiplicative" || op == "both" || op == "classify" ||
         op == "ad-spectrum" || op == "Ad-spectrum" || op == "lie-closure";
}

Json request_echo(const TaskRequest& r) {
  Json echo{{"operation", r.operation},
            {"mode", mode_request_name(r.mode)},
            {"tolerance", r.tolerance}};
  if (r.matrix) echo["matrix"] = matrix_to_json(*r.matrix);
  if (r.lie) {
    echo["lie"] = lie_to_json(*r.lie);
    echo["target"] = r.target;
    echo["seed"] = r.seed;
    echo["samples"] = r.samples;
  }
  return echo;
}

int exit_for_error(const Error& e, const std::string& operation) {
  switch (e.kind()) {
    case ErrorKind::NotInvertible:
      return (operation == "multiplicative" || operation == "both") ? kSingular : kInvalidInput;
    case ErrorKind::ExactModeUnavailable: return kExactUnavailable;
    default: return kInvalidInput;
  }
}

struct ClosureSampleResult {
  uint64_t seed = 0;
  int attempts = 0;
  bool pass = false;
  Json detail;
};

void run_closure_suite(const TaskRequest& r, const LieStructure& L, bool algebra, Json& out,
                       bool& all_pass) {
  std::vector<ClosureSampleResult> results(r.samples);
  parallel_for(r.samples, [&](int i) {
    uint64_t sample_seed = r.seed + uint64_t(i);
    Rng rng(sample_seed);
    ClosureSampleResult& res = results[i];
    res.seed = sample_seed;
    if (r.mode == ModeRequest::Numeric) {
      SquareMatrix m = algebra ? algebra_sample(L, rng) : group_sample(L, rng);
      VerificationReport rep = algebra
                                   ? closure_check_algebra(m, L, ModeRequest::Numeric, r.tolerance)
                                   : closure_check_group(m, L, ModeRequest::Numeric, r.tolerance);
      res.pass = rep.all_pass();
      res.detail = verification_to_json(rep);
    } else {
      SquareMatrix m = algebra ? algebra_sample_exact(L, rng, 500, &res.attempts)
                               : group_sample_exact(L, rng, 4, 500, &res.attempts);
      VerificationReport rep = algebra
                                   ? closure_check_algebra(m, L, ModeRequest::Exact, r.tolerance)
                                   : closure_check_group(m, L, ModeRequest::Exact, r.tolerance);
      res.pass = rep.all_pass();
      res.detail = verification_to_json(rep);
    }
  });
  Json samples = Json::array();
  int failures = 0;
  for (const auto& res : results) {
    failures += res.pass ? 0 : 1;
    all_pass = all_pass && res.pass;
    samples.push_back(Json{{"seed", res.seed},
                           {"attempts", res.attempts},
                           {"pass", res.pass},
                           {"checks", res.detail["checks"]}});
  }
  out[algebra ? "algebra_closure" : "group_closure"] =
      Json{{"structure", L.name()},
           {"samples", r.samples},
           {"failures", failures},
           {"results", std::move(samples)}};
}

}  // namespace

TaskRequest parse_request(const nlohmann::json& j, const std::string& operation_override) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "request must be a JSON object");
  TaskRequest r;
  try {
    if (!operation_override.empty())
      r.operation = operation_override;
    else if (j.contains("operation"))
      r.operation = j.at("operation").get<std::string>();
    else
      fail(ErrorKind::ParseError, "request needs an \"operation\"");
    if (j.contains("mode")) r.mode = mode_from_string(j.at("mode").get<std::string>());
    if (j.contains("tolerance")) {
      if (j.at("tolerance").is_string())
        r.tolerance = std::stod(j.at("tolerance").get<std::string>());
      else
        r.tolerance = j.at("tolerance").get<double>();
    }
    if (j.contains("matrix")) r.matrix = matrix_from_json(j.at("matrix"));
    if (j.contains("lie")) r.lie = lie_from_json(j.at("lie"));
    if (j.contains("target")) r.target = j.at("target").get<std::string>();
    if (j.contains("seed")) r.seed = j.at("seed").get<uint64_t>();
    if (j.contains("samples")) r.samples = j.at("samples").get<int>();
    if (j.contains("timing")) r.timing = j.at("timing").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("malformed request: ") + e.what());
  }
  if (!is_known_operation(r.operation))
    fail(ErrorKind::ParseError, "unknown operation \"" + r.operation + "\"");
  if (r.tolerance <= 0) fail(ErrorKind::ParseError, "tolerance must be positive");
  if (r.samples < 1) fail(ErrorKind::ParseError, "samples must be >= 1");
  if (r.target != "algebra" && r.target != "group" && r.target != "both")
    fail(ErrorKind::ParseError, "target must be algebra, group or both");
  return r;
}

TaskOutcome run_request(const TaskRequest& r) {
  auto started = std::chrono::steady_clock::now();
  Json report;
  report["schema_version"] = "1.0";
  report["request"] = request_echo(r);
  int exit_code = kOk;
  NumericOptions opts;
  opts.tolerance = r.tolerance;

  try {
    auto need_matrix = [&]() -> const SquareMatrix& {
      if (!r.matrix) fail(ErrorKind::ParseError, "operation needs a \"matrix\"");
      return *r.matrix;
    };
    if (r.operation == "classify") {
      ClassificationReport c = classify_operator(need_matrix(), r.mode, opts);
      report["mode_used"] = mode_name(c.mode);
      report["result"] = Json{{"classification", classification_to_json(c)}};
    } else if (r.operation == "additive" || r.operation == "multiplicative" ||
               r.operation == "both") {
      const SquareMatrix& m = need_matrix();
      VerificationReport merged;
      Mode used = Mode::Exact;
      AdditiveDecomposition da;
      bool have_additive = false;
      if (r.operation != "multiplicative") {
        da = additive_jordan(m, r.mode, opts);
        have_additive = true;
        used = da.source.mode;
        // attach as soon as it exists so a later singular-input error
        // still reports the additive result
        report["result"]["additive"] = additive_to_json(da);
        VerificationReport v = verify_additive(m, da, r.tolerance);
        for (auto& c : v.checks) merged.add("additive." + c.name, c.pass, c.residual);
      }
      if (r.operation != "additive") {
        MultiplicativeDecomposition dm = multiplicative_jordan(m, r.mode, opts);
        used = dm.source.mode;
        report["result"]["multiplicative"] = multiplicative_to_json(dm);
        VerificationReport v = verify_multiplicative(m, dm, r.tolerance);
        for (auto& c : v.checks) merged.add("multiplicative." + c.name, c.pass, c.residual);
        if (have_additive && !dm.elliptic.is_float() && !da.elliptic.is_float()) {
          // S = E + H = e*h (proof of the multiplicative theorem)
          SquareMatrix lhs = da.elliptic + da.hyperbolic;
          SquareMatrix rhs = dm.elliptic * dm.hyperbolic;
          merged.add("semisimple_parts_agree", same_matrix(lhs, rhs, r.tolerance),
                     frobenius_norm(lhs - rhs));
        }
      }
      report["mode_used"] = mode_name(used);
      if (used == Mode::Numeric) report["precision_bits"] = precision_bits();
      report["verification"] = verification_to_json(merged);
      exit_code = merged.all_pass() ? kOk : kVerificationFailed;
    } else if (r.operation == "ad-spectrum" || r.operation == "Ad-spectrum") {
      const SquareMatrix& m = need_matrix();
      VerificationReport v = r.operation == "ad-spectrum" ? ad_spectrum_check(m, r.mode, opts)
                                                          : Ad_spectrum_check(m, r.mode, opts);
      Mode used = classify_operator(m, r.mode, opts).mode;
      report["mode_used"] = mode_name(used);
      if (used == Mode::Numeric) report["precision_bits"] = precision_bits();
      report["verification"] = verification_to_json(v);
      exit_code = v.all_pass() ? kOk : kVerificationFailed;
    } else if (r.operation == "lie-closure") {
      if (!r.lie) fail(ErrorKind::ParseError, "lie-closure needs a \"lie\" structure");
      Json result;
      bool all_pass = true;
      if (r.target != "group") run_closure_suite(r, *r.lie, true, result, all_pass);
      if (r.target != "algebra") run_closure_suite(r, *r.lie, false, result, all_pass);
      report["mode_used"] = r.mode == ModeRequest::Numeric ? "numeric" : "exact";
      report["result"] = std::move(result);
      report["verification"] = Json{{"passed", all_pass}};
      exit_code = all_pass ? kOk : kVerificationFailed;
    }
  } catch (const Error& e) {
    exit_code = exit_for_error(e, r.operation);
    report["error"] = Json{{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
  }

  if (r.timing) {
    auto elapsed = std::chrono::steady_clock::now() - started;
    report["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  } else {
    report["timing_ms"] = nullptr;
  }
  report["exit_code"] = exit_code;
  return {exit_code, std::move(report)};
}

}  // namespace cli
}  // namespace jordan
