// stabcoh: command-line front end for the stable cohomology verifications.
//
//   stabcoh verify-all --max-degree 24 --jobs 4 --format json --out report.json
//   stabcoh hilbert Htilde --max-degree 7
//   stabcoh tor | generators | exactness
//   stabcoh h1 data/b3.json --certify

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "stabcoh/report.hpp"

namespace {

using namespace stabcoh;

constexpr int kUsageError = 2;

struct Options {
  int max_degree = DegreeBound::kDefault;
  unsigned jobs = 1;
  std::string format;
  std::string out;
};

int usage_error(const std::string& message) {
  std::cerr << "usage error: " << message << "\n";
  return kUsageError;
}

void emit(const Options& opt, const std::string& body) {
  if (opt.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + opt.out);
  f << body;
}

int emit_report(const Options& opt, const VerificationReport& report) {
  const std::string format = opt.format.empty() ? "json" : opt.format;
  if (format == "json")
    emit(opt, report.to_json().dump(2) + "\n");
  else if (format == "csv")
    emit(opt, report.to_csv());
  else
    emit(opt, report.to_text());
  if (!opt.out.empty()) {
    std::ofstream timing(opt.out + ".timing.json", std::ios::binary);
    timing << report.timing_json().dump(2) << "\n";
  }
  return report.all_pass() ? 0 : 1;
}

int run_hilbert(const Options& opt, const std::string& label) {
  Coefficients c;
  try {
    c = parse_coefficients(label);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  if (opt.max_degree < 0) return usage_error("--max-degree must be >= 0");
  // twisted entries in cohomological degree k need internal degree k + 1
  const int bound = opt.max_degree % 2 == 0 ? opt.max_degree + 2 : opt.max_degree + 1;
  const StableCohomology sc{DegreeBound(bound), opt.jobs};
  const StableCohomologyTable table = sc.table(c, opt.max_degree);

  const std::string format = opt.format.empty() ? "text" : opt.format;
  std::ostringstream os;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["coefficients"] = to_string(c);
    j["max_degree"] = opt.max_degree;
    nlohmann::ordered_json dims = nlohmann::ordered_json::array();
    for (const auto& [k, v] : table.dims) dims.push_back(v);
    j["dims"] = std::move(dims);
    os << j.dump() << "\n";
  } else if (format == "csv") {
    os << "cohomological_degree,dim\n";
    for (const auto& [k, v] : table.dims) os << k << ',' << v << '\n';
  } else {
    os << "H*_st(" << to_string(c) << ")\n";
    for (const auto& [k, v] : table.dims) os << k << '\t' << v << '\n';
  }
  emit(opt, os.str());
  return 0;
}

int run_h1(const Options& opt, const std::string& path, bool certify) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return 1;
  }
  try {
    const nlohmann::json doc = nlohmann::json::parse(in);
    const GroupInput input = parse_group_input(doc);
    const auto z1 = cocycle_space(input.presentation, input.representation);
    const auto b1 = coboundary_space(input.representation);
    std::ostringstream os;
    os << (z1.size() - b1.size()) << "\n";
    if (certify) {
      auto dump = [&](const char* name, const std::vector<VectorQ>& basis) {
        os << name << " (dim " << basis.size() << ")\n";
        for (const auto& v : basis) {
          os << " ";
          for (const auto& x : v.to_dense()) os << ' ' << x.get_str();
          os << "\n";
        }
      };
      dump("Z1", z1);
      dump("B1", b1);
    }
    emit(opt, os.str());
    return 0;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of stable twisted cohomology of mapping class groups"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--max-degree", opt.max_degree, "Internal degree bound")
      ->envname("MMM_DEGREE_BOUND");
  app.add_option("--jobs", opt.jobs, "Worker threads for per-degree work")->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", opt.out, "Write output to this file instead of stdout");

  auto* verify = app.add_subcommand("verify-all", "Run every check and emit a report");
  auto* hilbert = app.add_subcommand("hilbert", "Dimension table of a stable cohomology");
  std::string label;
  hilbert->add_option("coefficients", label, "Q | H | Htilde | HtildeDual")->required();
  auto* tor_cmd = app.add_subcommand("tor", "Tor dimensions of H*_st(H~_Q) against exterior powers");
  int j_max = 4;
  tor_cmd->add_option("--j-max", j_max, "Largest homological index")->check(CLI::NonNegativeNumber);
  auto* generators = app.add_subcommand("generators", "Generators and syzygies of H^odd_st(H~_Q)");
  auto* exactness = app.add_subcommand("exactness", "Cartan identity and exactness of the p_D resolution");
  auto* h1 = app.add_subcommand("h1", "dim H^1 of a presented group with a matrix representation");
  std::string input_file;
  bool certify = false;
  h1->add_option("input", input_file, "JSON presentation file")->required();
  h1->add_flag("--certify", certify, "Also print bases of Z^1 and B^1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*hilbert) return run_hilbert(opt, label);
    if (*h1) return run_h1(opt, input_file, certify);

    if (opt.max_degree < 2 || opt.max_degree % 2 != 0)
      return usage_error("--max-degree must be an even integer >= 2, got " + std::to_string(opt.max_degree));
    if (*verify) return emit_report(opt, verify_all(opt.max_degree, opt.jobs));

    const StableCohomology sc{DegreeBound(opt.max_degree), opt.jobs};
    VerificationReport report;
    report.degree_bound = opt.max_degree;
    if (*tor_cmd) report.checks.push_back(check_tor(sc, j_max));
    if (*generators) report.checks.push_back(check_generators(sc));
    if (*exactness) {
      report.checks.push_back(check_cartan(sc.forms(), opt.jobs));
      report.checks.push_back(check_resolution(sc.forms(), opt.jobs));
    }
    return emit_report(opt, report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
