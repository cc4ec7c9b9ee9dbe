// trisq -- three-square decompositions and universality checks for mixed
// sums of squares and triangular numbers.
//
// Subcommands: decompose, exceptions, check, verify. Output is either a
// human-readable text rendering (--output text) or a stream of line-delimited
// JSON records (--output records); the records carry the full result and the
// text is derived from them.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "trisq/catalog.hpp"
#include "trisq/solver.hpp"
#include "trisq/three_squares.hpp"
#include "trisq/verify.hpp"

using json = nlohmann::ordered_json;
using namespace trisq;

namespace {

// Exit codes: 0 success, 1 domain error (ineligible/no-match, reported only
// under --strict), 2 usage error, 3 verification failure.
enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kVerificationFailure = 3 };

struct GlobalOptions {
  std::string output = "text";
  u64 bound_ceiling = 100'000'000;
  bool strict = false;
  unsigned threads = 1;
};

struct Session {
  GlobalOptions global;
  int worst = kOk;

  // Error records keep the stream flowing; they fail the process only under
  // --strict.
  void error_record() {
    if (global.strict) worst = std::max(worst, static_cast<int>(kDomainError));
  }
  // An explicitly requested comparison that did not match always fails.
  void no_match() { worst = std::max(worst, static_cast<int>(kDomainError)); }
  void verification_failure() { worst = std::max(worst, static_cast<int>(kVerificationFailure)); }

  ScanOptions scan_options() const {
    ScanOptions opts;
    opts.bound_ceiling = global.bound_ceiling;
    opts.threads = global.threads;
    return opts;
  }
};

std::string set_text(const std::vector<u64>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

json indices_json(const std::optional<Representation>& rep) {
  if (!rep) return nullptr;
  return json(rep->indices);
}

json verdict_json(const UniversalityVerdict& verdict) {
  json result;
  result["verdict"] = to_string(verdict.status);
  if (!verdict.finite_checks.empty()) {
    json checks = json::array();
    for (const FiniteCheck& check : verdict.finite_checks) {
      checks.push_back({{"target", check.target}, {"indices", indices_json(check.witness)}});
    }
    result["finite_checks"] = std::move(checks);
  }
  if (!verdict.residue_checks.empty()) {
    json checks = json::array();
    for (const ResidueCheck& check : verdict.residue_checks) {
      checks.push_back({{"relation", check.relation},
                        {"value", check.value},
                        {"modulus", check.modulus},
                        {"holds", check.holds}});
    }
    result["residue_checks"] = std::move(checks);
  }
  if (!verdict.side_conditions.empty()) {
    json conditions = json::array();
    for (const SideCondition& condition : verdict.side_conditions) {
      conditions.push_back({{"condition", condition.condition}, {"holds", condition.holds}});
    }
    result["side_conditions"] = std::move(conditions);
  }
  return result;
}

// --- text renderings (derived from the record json) -------------------------

void render_decompose(const json& record) {
  const json& input = record["input"];
  if (record["status"] == "ok") {
    const json& result = record["result"];
    std::cout << input["n"] << " = ";
    bool first = true;
    for (const auto& root : result["roots"]) {
      if (!first) std::cout << " + ";
      std::cout << root << "^2";
      first = false;
    }
    std::cout << "  [" << result["case"].get<std::string>() << "]\n";
  } else {
    const json& witness = record["result"]["witness"];
    std::cout << input["n"] << ": " << record["error"].get<std::string>() << " (4^"
              << witness["pow4"] << " * (8*" << witness["m"] << " + 7))\n";
  }
}

void render_exceptions(const json& record) {
  const json& input = record["input"];
  const json& result = record["result"];
  std::cout << "E(" << input["form"].get<std::string>() << ") up to " << input["bound"] << ": "
            << set_text(result["exceptions"].get<std::vector<u64>>());
  if (result.contains("match")) {
    std::cout << "  expected " << set_text(input["expect"].get<std::vector<u64>>())
              << (result["match"].get<bool>() ? ": match" : ": MISMATCH");
  }
  std::cout << "\n";
}

void render_check(const json& record) {
  const json& input = record["input"];
  const json& result = record["result"];
  if (input.contains("form")) {
    std::cout << input["form"].get<std::string>();
  } else if (input.contains("tri_coeffs")) {
    std::cout << "triangular coefficients " << input["tri_coeffs"].dump();
  } else {
    std::cout << "odd-square coefficients " << input["odd_coeffs"].dump();
  }
  std::cout << ": " << result["verdict"].get<std::string>() << "\n";
  if (result.contains("finite_checks")) {
    for (const auto& check : result["finite_checks"]) {
      std::cout << "  target " << check["target"] << ": ";
      if (check["indices"].is_null()) {
        std::cout << "no representation\n";
      } else {
        std::cout << "indices " << check["indices"].dump() << "\n";
      }
    }
  }
  if (result.contains("residue_checks")) {
    for (const auto& check : result["residue_checks"]) {
      std::cout << "  " << check["relation"].get<std::string>() << ": R(" << check["value"]
                << ", " << check["modulus"] << ") = " << (check["holds"].get<bool>() ? "true" : "false")
                << "\n";
    }
  }
  if (result.contains("side_conditions")) {
    for (const auto& condition : result["side_conditions"]) {
      std::cout << "  " << condition["condition"].get<std::string>() << ": "
                << (condition["holds"].get<bool>() ? "true" : "false") << "\n";
    }
  }
}

void render_verify(const json& record) {
  const json& input = record["input"];
  const json& result = record["result"];
  std::cout << "verify " << input["suite"].get<std::string>() << " (bound " << input["bound"]
            << "): " << (result["passed"].get<bool>() ? "pass" : "FAIL");
  if (result.contains("checked")) {
    std::cout << "  [" << result["failures"] << " failures / " << result["checked"]
              << " checks]";
    if (result["failures"].get<u64>() > 0) {
      std::cout << "  first: " << result["first_counterexample"].get<std::string>();
    }
  }
  std::cout << "\n";
  if (result.contains("forms")) {
    for (const auto& row : result["forms"]) {
      std::cout << "  " << row["form"].get<std::string>() << ": found "
                << set_text(row["found"].get<std::vector<u64>>()) << " expected "
                << set_text(row["expected"].get<std::vector<u64>>())
                << (row["match"].get<bool>() ? "  ok" : "  MISMATCH") << "\n";
    }
  }
}

void emit(Session& session, const json& record) {
  if (session.global.output == "records") {
    std::cout << record.dump() << "\n";
    return;
  }
  const std::string command = record["command"].get<std::string>();
  if (command == "decompose") {
    render_decompose(record);
  } else if (command == "exceptions") {
    render_exceptions(record);
  } else if (command == "check") {
    render_check(record);
  } else {
    render_verify(record);
  }
}

// --- commands ---------------------------------------------------------------

void run_decompose(Session& session, const std::vector<u64>& inputs) {
  for (u64 n : inputs) {
    json record;
    record["command"] = "decompose";
    record["input"] = {{"n", n}};
    try {
      const ThreeSquareDecomp d = decompose(n);
      record["result"] = {{"eligible", true},
                          {"roots", d.roots},
                          {"case", d.case_tag}};
      record["status"] = "ok";
    } catch (const IneligibleNumberError& e) {
      record["result"] = {{"eligible", false},
                          {"witness", {{"pow4", e.pow4()}, {"m", e.m()}}}};
      record["status"] = "error";
      record["error"] = "not a sum of three or fewer squares";
      session.error_record();
    }
    emit(session, record);
  }
}

void run_exceptions(Session& session, const std::string& form_text, u64 bound,
                    const std::optional<std::vector<u64>>& expect) {
  const MixedForm form = parse_form(form_text);
  json record;
  record["command"] = "exceptions";
  record["input"] = {{"form", form_text}, {"bound", bound}};
  if (expect) record["input"]["expect"] = *expect;
  const ExceptionReport report = exception_set(form, bound, session.scan_options());
  record["result"] = {{"exceptions", report.exceptions},
                      {"count", report.exceptions.size()}};
  record["status"] = "ok";
  if (expect) {
    std::vector<u64> expected = *expect;
    std::sort(expected.begin(), expected.end());
    std::vector<u64> truncated;
    for (u64 e : expected) {
      if (e <= bound) truncated.push_back(e);
    }
    const bool match = report.exceptions == truncated;
    record["result"]["match"] = match;
    if (!match) session.no_match();
  }
  emit(session, record);
}

void run_check(Session& session, const std::string& form_text, const std::vector<u64>& tri_coeffs,
               const std::vector<u64>& odd_coeffs) {
  json record;
  record["command"] = "check";
  UniversalityVerdict verdict;
  if (!form_text.empty()) {
    record["input"] = {{"form", form_text}};
    verdict = asymptotically_universal(parse_form(form_text));
  } else if (!tri_coeffs.empty()) {
    record["input"] = {{"tri_coeffs", tri_coeffs}};
    verdict = kane_triangular_universal(tri_coeffs);
  } else {
    record["input"] = {{"odd_coeffs", odd_coeffs}};
    verdict = kane_odd_square_check(odd_coeffs);
  }
  record["result"] = verdict_json(verdict);
  record["status"] = "ok";  // a negative verdict is an answer, not an error
  emit(session, record);
}

json battery_json(const BatteryResult& battery) {
  json result = {{"passed", battery.passed()},
                 {"checked", battery.checked},
                 {"failures", battery.failures}};
  if (!battery.passed()) result["first_counterexample"] = battery.first_counterexample;
  return result;
}

void run_verify(Session& session, const std::string& suite, std::optional<u64> bound_arg) {
  json record;
  record["command"] = "verify";
  bool passed = true;
  json result;
  u64 bound = 0;
  if (suite == "identities") {
    bound = bound_arg.value_or(1000);
    const BatteryResult battery = verify_identities(bound);
    result = battery_json(battery);
    passed = battery.passed();
  } else if (suite == "legendre-scan") {
    bound = bound_arg.value_or(10000);
    const BatteryResult battery = verify_legendre_scan(bound);
    result = battery_json(battery);
    passed = battery.passed();
  } else if (suite == "ewell") {
    bound = bound_arg.value_or(10000);
    const BatteryResult battery = verify_ewell(bound);
    result = battery_json(battery);
    passed = battery.passed();
  } else if (suite == "kane-consistency") {
    bound = bound_arg.value_or(100000);
    const BatteryResult battery = verify_kane_consistency(10, bound, session.scan_options());
    result = battery_json(battery);
    passed = battery.passed();
  } else {  // remark8 (validated by CLI11)
    bound = bound_arg.value_or(100000);
    const ConjecturedSetReport report = verify_conjectured_sets(bound, session.scan_options());
    passed = report.passed();
    json rows = json::array();
    for (const ConjecturedSetRow& row : report.rows) {
      rows.push_back({{"form", row.form},
                      {"expected", row.expected},
                      {"found", row.found},
                      {"match", row.match}});
    }
    result = {{"passed", passed}, {"forms", std::move(rows)}};
  }
  record["input"] = {{"suite", suite}, {"bound", bound}};
  record["result"] = std::move(result);
  record["status"] = passed ? "ok" : "error";
  if (!passed) {
    record["error"] = "verification failed";
    session.verification_failure();
  }
  emit(session, record);
}

std::vector<u64> parse_expect_set(const std::string& text) {
  std::string trimmed;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) trimmed.push_back(ch);
  }
  if (trimmed.size() < 2 || trimmed.front() != '{' || trimmed.back() != '}') {
    throw CLI::ValidationError("--expect", "expected a set like \"{1,2,3}\" or \"{}\"");
  }
  std::vector<u64> values;
  std::string body = trimmed.substr(1, trimmed.size() - 2);
  if (body.empty()) return values;
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t comma = body.find(',', start);
    const std::string item = body.substr(start, comma - start);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw CLI::ValidationError("--expect", "malformed set element '" + item + "'");
    }
    values.push_back(std::stoull(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sums of three squares and mixed square/triangular forms"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  Session session;
  app.add_option("--output", session.global.output, "Output mode")
      ->check(CLI::IsMember({"text", "records"}))
      ->capture_default_str();
  app.add_option("--bound-ceiling", session.global.bound_ceiling,
                 "Upper limit accepted for scan bounds")
      ->capture_default_str();
  app.add_flag("--strict", session.global.strict,
               "Exit nonzero when a query yields a domain error record");
  app.add_option("--threads", session.global.threads, "Range partitioning degree for scans")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  // decompose
  std::vector<u64> decompose_inputs;
  CLI::App* cmd_decompose =
      app.add_subcommand("decompose", "Write n as a sum of three or fewer squares");
  cmd_decompose->add_option("n", decompose_inputs, "Nonnegative integers up to 2^62")
      ->required()
      ->check(CLI::Range(u64{0}, kMaxInput));

  // exceptions
  std::string exceptions_form;
  u64 exceptions_bound = 0;
  std::string expect_text;
  CLI::App* cmd_exceptions =
      app.add_subcommand("exceptions", "Scan a form for unrepresented integers");
  cmd_exceptions->add_option("--form", exceptions_form, "Form text, e.g. \"s+2s+3t\"")->required();
  cmd_exceptions->add_option("--bound", exceptions_bound, "Scan bound")->required();
  cmd_exceptions->add_option("--expect", expect_text,
                             "Conjectured exception set, e.g. \"{2}\"; compared below the bound");

  // check
  std::string check_form;
  std::vector<u64> tri_coeffs;
  std::vector<u64> odd_coeffs;
  CLI::App* cmd_check = app.add_subcommand("check", "Decide universality properties");
  CLI::Option* opt_form =
      cmd_check->add_option("--form", check_form, "Ternary form for the asymptotic criteria");
  CLI::Option* opt_tri = cmd_check->add_option("--tri-coeffs", tri_coeffs,
                                               "Coefficients b_i of a triangular form")
                             ->delimiter(',');
  CLI::Option* opt_odd =
      cmd_check
          ->add_option("--odd-coeffs", odd_coeffs,
                       "Coefficients b_i of an odd-index diagonal square form")
          ->delimiter(',');
  opt_form->excludes(opt_tri)->excludes(opt_odd);
  opt_tri->excludes(opt_odd);

  // verify
  std::string suite;
  std::optional<u64> verify_bound;
  CLI::App* cmd_verify = app.add_subcommand("verify", "Run a verification battery");
  cmd_verify->add_option("suite", suite, "Battery name")
      ->required()
      ->check(CLI::IsMember({"identities", "legendre-scan", "ewell", "remark8",
                             "kane-consistency"}));
  cmd_verify->add_option("--bound", verify_bound, "Battery bound (suite-specific default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*cmd_decompose) {
      run_decompose(session, decompose_inputs);
    } else if (*cmd_exceptions) {
      std::optional<std::vector<u64>> expect;
      if (!expect_text.empty()) expect = parse_expect_set(expect_text);
      run_exceptions(session, exceptions_form, exceptions_bound, expect);
    } else if (*cmd_check) {
      if (check_form.empty() && tri_coeffs.empty() && odd_coeffs.empty()) {
        std::cerr << "check: one of --form, --tri-coeffs, --odd-coeffs is required\n";
        return kUsageError;
      }
      run_check(session, check_form, tri_coeffs, odd_coeffs);
    } else if (*cmd_verify) {
      run_verify(session, suite, verify_bound);
    }
  } catch (const ParseError& e) {
    std::cerr << "form syntax error: " << e.what() << "\n";
    return kUsageError;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsageError;
  } catch (const std::length_error& e) {
    std::cerr << "scan too large: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return session.worst;
}
