#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jordan/cli.hpp"

namespace {

struct CommonFlags {
  std::string input, output;
  std::string mode = "auto";
  std::string tolerance = "1e-9";
  uint64_t seed = 1;
  int samples = 100;
  bool timing = false;
  std::string family;
  int n = 0, p = -1, q = -1;
  std::string target = "both";
};

void attach(CLI::App* cmd, CommonFlags& f, bool lie) {
  cmd->add_option("--input", f.input, "request JSON path (default: standard input)");
  cmd->add_option("--output", f.output, "report path (default: standard output)");
  cmd->add_option("--mode", f.mode, "exact | numeric | auto")->default_str("auto");
  cmd->add_option("--tolerance", f.tolerance, "numeric tolerance")->default_str("1e-9");
  cmd->add_option("--seed", f.seed, "base seed for randomized suites");
  cmd->add_option("--samples", f.samples, "sample count for randomized suites");
  cmd->add_flag("--timing", f.timing, "include wall-clock timing in the report");
  if (lie) {
    cmd->add_option("--family", f.family, "sl | so | sp (overrides request JSON)");
    cmd->add_option("--n", f.n, "matrix size for sl/sp");
    cmd->add_option("--p", f.p, "positive signature for so");
    cmd->add_option("--q", f.q, "negative signature for so");
    cmd->add_option("--target", f.target, "algebra | group | both")->default_str("both");
  }
}

int run(const std::string& operation, const CommonFlags& f) {
  nlohmann::json request_json;
  bool need_stdin = f.input.empty();
  if (operation == "lie-closure" && !f.family.empty()) need_stdin = false;
  if (need_stdin) {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    std::string text = buf.str();
    if (!text.empty()) {
      request_json = nlohmann::json::parse(text, nullptr, false);
      if (request_json.is_discarded()) {
        std::cerr << "error: standard input is not valid JSON\n";
        return jordan::cli::kInvalidInput;
      }
    } else {
      request_json = nlohmann::json::object();
    }
  } else if (!f.input.empty()) {
    std::ifstream in(f.input);
    if (!in) {
      std::cerr << "error: cannot open " << f.input << "\n";
      return jordan::cli::kInvalidInput;
    }
    request_json = nlohmann::json::parse(in, nullptr, false);
    if (request_json.is_discarded()) {
      std::cerr << "error: " << f.input << " is not valid JSON\n";
      return jordan::cli::kInvalidInput;
    }
  } else {
    request_json = nlohmann::json::object();
  }

  // flags override the request document
  request_json["mode"] = f.mode;
  request_json["tolerance"] = f.tolerance;
  if (f.timing) request_json["timing"] = true;
  request_json["seed"] = f.seed;
  request_json["samples"] = f.samples;
  if (operation == "lie-closure") {
    request_json["target"] = f.target;
    if (!f.family.empty()) {
      nlohmann::json lie{{"family", f.family}};
      if (f.family == "so") {
        lie["p"] = f.p;
        lie["q"] = f.q;
      } else {
        lie["n"] = f.n;
      }
      request_json["lie"] = lie;
    }
  }

  jordan::cli::TaskOutcome outcome;
  try {
    jordan::cli::TaskRequest request = jordan::cli::parse_request(request_json, operation);
    outcome = jordan::cli::run_request(request);
  } catch (const jordan::Error& e) {
    outcome.exit_code = jordan::cli::kInvalidInput;
    outcome.report = jordan::Json{
        {"schema_version", "1.0"},
        {"error", jordan::Json{{"kind", error_kind_name(e.kind())}, {"message", e.what()}}},
        {"exit_code", jordan::cli::kInvalidInput}};
  }

  std::string text = outcome.report.dump(2);
  text.push_back('\n');
  if (f.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(f.output);
    if (!out) {
      std::cerr << "error: cannot write " << f.output << "\n";
      return jordan::cli::kInvalidInput;
    }
    out << text;
  }
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "jordan: additive (E+H+N) and multiplicative (e*h*u) Jordan decompositions via witness "
      "polynomials, with Lie-closure verification suites"};
  app.require_subcommand(1);

  const std::vector<std::string> operations = {"additive",    "multiplicative", "both",
                                               "classify",    "ad-spectrum",    "Ad-spectrum",
                                               "lie-closure"};
  std::map<std::string, CommonFlags> flags;
  for (const auto& op : operations) {
    CLI::App* cmd = app.add_subcommand(op, "run the " + op + " operation");
    attach(cmd, flags[op], op == "lie-closure");
  }

  CLI11_PARSE(app, argc, argv);
  for (const auto& op : operations)
    if (app.got_subcommand(op)) return run(op, flags[op]);
  return jordan::cli::kInvalidInput;
}
