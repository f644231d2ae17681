// Command-line front end over the C interface.
//
// Exit status: 0 success, 1 a verification or relation check failed,
// 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wakimoto/wakimoto.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string chi;
  std::string cutoff = "4";
  int charge_window = 3;
  std::string excursion = "2";
  std::uint64_t seed = 0;
  std::string output = "json";
  int r = 0;
  std::vector<std::string> xs;
  std::string max_weight = "4";
  bool ambient = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ChiDeleter {
  void operator()(wkm_chi* c) const { wkm_chi_free(c); }
};
using ChiHandle = std::unique_ptr<wkm_chi, ChiDeleter>;

std::string read_chi_source(const std::string& source) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') return source;
  std::ifstream in(source);
  if (!in) throw UsageError("cannot read chi file '" + source + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ChiHandle load_chi(const std::string& source) {
  if (source.empty()) throw UsageError("--chi is required");
  const std::string text = read_chi_source(source);
  wkm_chi* raw = nullptr;
  if (wkm_chi_parse(text.c_str(), &raw) != WKM_OK) throw UsageError(std::string("chi: ") + wkm_last_error());
  return ChiHandle(raw);
}

wkm_config make_config(const Options& o) {
  if (o.charge_window < 0) throw UsageError("--charge-window must be >= 0");
  wkm_config cfg;
  wkm_config_default(&cfg);
  cfg.weight_cutoff = o.cutoff.c_str();
  cfg.excursion = o.excursion.c_str();
  cfg.charge_lo = -o.charge_window;
  cfg.charge_hi = o.charge_window;
  cfg.seed = o.seed;
  return cfg;
}

// Takes ownership of the returned string, or raises on a failed call.
std::string take(wkm_status status, char*& text) {
  if (status != WKM_OK) {
    const std::string msg = wkm_last_error();
    if (status == WKM_ERR_INTERNAL) throw std::runtime_error(msg);
    throw UsageError(msg);
  }
  std::string out(text);
  wkm_string_free(text);
  return out;
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_checks(const Json& doc) {
  for (const auto& c : doc["checks"]) {
    std::cout << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
    if (!c["detail"].get<std::string>().empty()) std::cout << "  (" << c["detail"].get<std::string>() << ")";
    std::cout << "\n";
    for (const auto& o : c["offending"]) std::cout << "    offending: " << o.get<std::string>() << "\n";
  }
}

void print_text(const std::string& command, const Json& doc) {
  if (command == "schur") {
    std::cout << doc["value"].get<std::string>() << "\n";
  } else if (command == "classify") {
    std::cout << doc["verdict"].get<std::string>() << " (case " << doc["case"].get<std::string>() << ")\n";
    for (const auto& [k, v] : doc["data"].items()) std::cout << "  " << k << " = " << scalar_text(v) << "\n";
  } else if (command == "verify") {
    std::cout << "case " << doc["case"].get<std::string>() << ", cutoff " << doc["cfg"]["weight_cutoff"].get<std::string>()
              << ", excursion " << doc["cfg"]["excursion"].get<std::string>() << "\n";
    print_checks(doc);
  } else if (command == "enumerate") {
    for (const auto& s : doc["states"]) {
      std::cout << s["weight"].get<std::string>() << "\t" << s["charge"].get<int>() << "\t"
                << s["state"].get<std::string>() << "\n";
    }
    std::cout << doc["count"].get<std::size_t>() << " states\n";
  } else if (command == "probe-wakimoto") {
    std::cout << "basis vectors: " << doc["basis_size"].get<std::size_t>() << "\n"
              << "all cyclic: " << doc["all_cyclic"].dump() << "\n"
              << "non-cyclic witnesses: " << doc["non_cyclic_witnesses"].size() << "\n";
    for (const auto& w : doc["non_cyclic_witnesses"]) std::cout << "    " << w.get<std::string>() << "\n";
    std::cout << "singular candidates: " << doc["singular_candidates"].size() << "\n"
              << "reducible evidence: " << doc["reducible_evidence"].dump() << " (classifier: "
              << doc["classifier_verdict"].get<std::string>() << ")\n";
  } else if (command == "relations") {
    for (const char* suite : {"clifford", "superalgebra", "weyl", "random_superalgebra"}) {
      std::cout << (doc[suite]["passed"].get<bool>() ? "PASS " : "FAIL ") << suite << "\n";
    }
    std::cout << "seed " << doc["seed"].get<std::uint64_t>() << "\n";
  }
}

int run(const std::string& command, const Options& o) {
  std::string out;
  int code = 0;
  if (command == "schur") {
    std::vector<const char*> xs;
    for (const auto& x : o.xs) xs.push_back(x.c_str());
    char* text = nullptr;
    out = take(wkm_schur(o.r, xs.data(), xs.size(), &text), text);
  } else if (command == "enumerate") {
    char* text = nullptr;
    out = take(wkm_enumerate(o.max_weight.c_str(), o.ambient ? 1 : 0, &text), text);
  } else {
    const ChiHandle chi = load_chi(o.chi);
    const wkm_config cfg = make_config(o);
    char* text = nullptr;
    int passed = 1;
    if (command == "classify") {
      out = take(wkm_classify(chi.get(), &text), text);
    } else if (command == "verify") {
      out = take(wkm_verify(chi.get(), &cfg, &text, &passed), text);
    } else if (command == "probe-wakimoto") {
      out = take(wkm_probe_wakimoto(chi.get(), &cfg, &text), text);
    } else if (command == "relations") {
      out = take(wkm_relations(chi.get(), &cfg, &text, &passed), text);
    }
    if (!passed) code = kExitCheckFailed;
  }
  if (o.output == "text") {
    print_text(command, Json::parse(out));
  } else {
    std::cout << out;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification of critical-level Wakimoto modules"};
  app.set_version_flag("--version", std::string(wkm_version()));
  app.require_subcommand(1);

  Options o;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", o.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_chi = [&](CLI::App* sub) {
    sub->add_option("--chi", o.chi, "chi as inline JSON or a path to a JSON file")->required();
  };
  auto add_cfg = [&](CLI::App* sub) {
    sub->add_option("--cutoff", o.cutoff, "weight cutoff (rational string)");
    sub->add_option("--charge-window", o.charge_window, "charge window Q, meaning [-Q, Q]");
    sub->add_option("--excursion", o.excursion, "extra weight for intermediate vectors (rational string)");
    sub->add_option("--seed", o.seed, "seed for randomized checks");
  };

  auto* classify = app.add_subcommand("classify", "decide irreducibility and print the certificate");
  add_chi(classify);
  add_cfg(classify);
  add_output(classify);

  auto* verify = app.add_subcommand("verify", "replay the certificate on the truncated module");
  add_chi(verify);
  add_cfg(verify);
  add_output(verify);

  auto* schur = app.add_subcommand("schur", "evaluate S_r(x_1, x_2, ...)");
  schur->add_option("--r", o.r, "degree")->required()->check(CLI::NonNegativeNumber);
  schur->add_option("--xs", o.xs, "comma-separated rationals x_1,x_2,...")->delimiter(',');
  schur->add_option("--seed", o.seed, "unused; accepted for uniformity");
  add_output(schur);

  auto* enumerate = app.add_subcommand("enumerate", "list Clifford Fock basis states");
  enumerate->add_option("--max-weight", o.max_weight, "weight bound (rational string)");
  enumerate->add_flag("--ambient", o.ambient, "enumerate all of F instead of Ker Psi-(1/2)");
  add_output(enumerate);

  auto* probe = app.add_subcommand("probe-wakimoto", "cyclicity and singular-vector probe on the Weyl side");
  add_chi(probe);
  add_cfg(probe);
  add_output(probe);

  auto* relations = app.add_subcommand("relations", "run the relation suites for one chi");
  add_chi(relations);
  add_cfg(relations);
  add_output(relations);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
