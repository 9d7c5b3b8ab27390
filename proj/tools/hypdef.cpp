#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hypdef/error.hpp"
#include "hypdef/field_expr.hpp"
#include "hypdef/verify.hpp"

using namespace hypdef;

namespace {

struct Flags {
  std::string suite;
  std::string config_path;
  std::string format = "json";
  std::map<std::string, std::string> values;  // flag name -> raw text, command line only
};

// [suite.<name>] entries from the TOML file, overridden by flags given on the command line.
std::map<std::string, std::string> config_values(const std::string& path, const std::string& suite) {
  std::map<std::string, std::string> out;
  if (path.empty()) return out;
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_config(in);
  } catch (const CLI::Error& e) {
    throw ConfigError(std::string("bad config file: ") + e.what());
  }
  for (const auto& it : items) {
    if (it.name == "++" || it.name == "--") continue;  // section markers
    if (it.parents.size() != 2 || it.parents[0] != "suite" || it.parents[1] != suite) continue;
    if (it.inputs.size() != 1) throw ConfigError("config key '" + it.name + "' needs a single value");
    std::string v = it.inputs.front();
    if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front()) v = v.substr(1, v.size() - 2);
    out[it.name] = v;
  }
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "' expects a number, got '" + v + "'");
  }
}

VerifyConfig build_config(const std::map<std::string, std::string>& kv) {
  VerifyConfig c;
  for (const auto& [k, v] : kv) {
    if (k == "seed") c.seed = static_cast<std::uint64_t>(to_double(k, v));
    else if (k == "samples") c.samples = static_cast<int>(to_double(k, v));
    else if (k == "tol") c.tol = to_double(k, v);
    else if (k == "tau") c.tau = parse_complex(v);
    else if (k == "b1") c.b1 = parse_complex(v);
    else if (k == "b2") c.b2 = parse_complex(v);
    else if (k == "k1") c.k1 = to_double(k, v);
    else if (k == "k2") c.k2 = to_double(k, v);
    else if (k == "alpha") c.alpha = to_double(k, v);
    else if (k == "eps") c.eps = to_double(k, v);
    else if (k == "field") c.field = v;
    else if (k != "format") throw ConfigError("unknown key '" + k + "'");
  }
  if (c.tau.imag() <= 0.0) throw ConfigError("tau needs a positive imaginary part");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformation calculus checks for hyperbolic 3-manifolds"};
  app.require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a report");

  Flags f;
  verify->add_option("suite", f.suite, "Suite name")->required();
  verify->add_option("--config", f.config_path, "TOML file with [suite.<name>] sections");
  verify->add_option("--format", f.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  for (const char* key : {"seed", "samples", "tol", "tau", "b1", "b2", "k1", "k2", "alpha", "eps", "field"}) {
    verify->add_option_function<std::string>(
        std::string("--") + key, [&f, key](const std::string& v) { f.values[key] = v; }, key);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::vector<CheckReport> reports;
  try {
    auto kv = config_values(f.config_path, f.suite);
    for (const auto& [k, v] : f.values) kv[k] = v;
    if (kv.count("format") && verify->count("--format") == 0) f.format = kv["format"];
    if (f.format != "json" && f.format != "text") throw ConfigError("format must be json or text");
    reports = run_suite(f.suite, build_config(kv));
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::cout << (f.format == "json" ? emit_json(reports) : emit_text(reports));
  if (!std::cout) {
    std::cerr << "error: failed to write report\n";
    return 1;
  }
  return exit_code(reports);
}
