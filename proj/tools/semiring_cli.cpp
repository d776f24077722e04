#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semiring/census.hpp"
#include "semiring/codec.hpp"
#include "semiring/constructions.hpp"
#include "semiring/deciders.hpp"
#include "semiring/ideals.hpp"
#include "semiring/localization.hpp"
#include "semiring/payloads.hpp"
#include "semiring/verifier.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace semiring;

namespace {

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

std::size_t size_cap_from_env() {
  const char* v = std::getenv("SEMIRING_SIZE_CAP");
  if (v == nullptr || *v == '\0') return kDefaultSizeCap;
  std::size_t pos = 0;
  unsigned long long cap = 0;
  try {
    cap = std::stoull(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != std::string(v).size() || cap == 0)
    throw input_error("SEMIRING_SIZE_CAP: expected a positive integer, got '" + std::string(v) + "'");
  return static_cast<std::size_t>(cap);
}

void check_output_path(const std::string& path, const char* flag) {
  const fs::path p(path);
  const fs::path parent = p.parent_path();
  if (!parent.empty() && !fs::is_directory(parent))
    throw input_error(std::string(flag) + ": directory '" + parent.string() + "' does not exist");
}

/// Loads a semiring file and rejects it unless it satisfies the axioms.
FiniteSemiring load_valid(const std::string& path, std::size_t cap) {
  FiniteSemiring s = read_semiring_file(path);
  if (s.order() > cap)
    throw size_error(path + ": order " + std::to_string(s.order()) + " exceeds size cap " +
                     std::to_string(cap));
  const auto r = verify_axioms(s, 1);
  if (!r.ok) {
    std::string tuple;
    for (elem e : r.violations.front().witness) tuple += (tuple.empty() ? "" : ",") + std::to_string(e);
    throw input_error(path + ": not a semiring, " + r.violations.front().axiom + " fails at (" + tuple + ")");
  }
  return s;
}

void emit(const json& j, const std::string& out) {
  if (out.empty()) std::cout << j.dump(2) << "\n";
  else write_text_file(out, j.dump(2) + "\n");
}

std::vector<std::string> split_claims(const std::string& list) {
  std::vector<std::string> ids;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) ids.push_back(item);
  return ids;
}

const char* kFamilies =
    "Construction specs (family:param,param):\n"
    "  boolean            the Boolean semiring\n"
    "  chain:K            {0 < ... < K-1} with max and min\n"
    "  hu | lagrassa      the three-element examples\n"
    "  zn:N               integers modulo N\n"
    "  xn:N               {-inf, 0, ..., N} with max and truncated +\n"
    "  bni:N,I[,canonical|literal]  B(N,I); canonical is the default\n";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite commutative semiring toolkit"};
  app.require_subcommand(1);
  app.footer(kFamilies);

  int code = kOk;

  std::string spec, in_file, out_file, prop_name, at, stats_file, reps_dir, resume_file, suite, claims,
      report_file;
  bool only_primes = false, only_maximal = false, only_nil = false, up_to_iso = false, long_run = false;
  std::size_t order = 0, max_order = kCensusDefaultMaxOrder;
  unsigned jobs = 0;
  std::string filter;

  auto* construct = app.add_subcommand("construct", "Build a named semiring");
  construct->add_option("spec", spec, "family:params, e.g. bni:4,1,canonical")->required();
  construct->add_option("-o,--output", out_file, "Output file (default stdout)");

  auto* classify = app.add_subcommand("classify", "Classify every element and decide every property");
  classify->add_option("file", in_file)->required()->check(CLI::ExistingFile);

  auto* check = app.add_subcommand("check", "Decide one property; exit 1 if it fails");
  check->add_option("property", prop_name)->required();
  check->add_option("file", in_file)->required()->check(CLI::ExistingFile);

  auto* ideals = app.add_subcommand("ideals", "List ideals, primes, maximals and nil radical");
  ideals->add_option("file", in_file)->required()->check(CLI::ExistingFile);
  auto* fp = ideals->add_flag("--primes", only_primes, "Only the prime ideals");
  auto* fm = ideals->add_flag("--maximal", only_maximal, "Only the maximal ideals");
  auto* fn = ideals->add_flag("--nil", only_nil, "Only the intersection of the primes");
  fp->excludes(fm)->excludes(fn);
  fm->excludes(fn);

  auto* idsemi = app.add_subcommand("idsemiring", "Write the semiring of ideals");
  idsemi->add_option("file", in_file)->required()->check(CLI::ExistingFile);
  idsemi->add_option("-o,--output", out_file)->required();

  auto* localize_cmd = app.add_subcommand("localize", "Localize at MC(S) or at a prime ideal");
  localize_cmd->add_option("file", in_file)->required()->check(CLI::ExistingFile);
  localize_cmd->add_option("--at", at, "mc, or prime:K with K an index from `ideals`")->required();
  localize_cmd->add_option("-o,--output", out_file)->required();

  auto* census = app.add_subcommand("census", "Enumerate semirings of a given order");
  census->add_option("--order", order)->required()->check(CLI::Range(1, 5));
  census->add_flag("--up-to-iso", up_to_iso, "One canonical representative per isomorphism class");
  census->add_option("--filter", filter, "Keep only semirings with this property");
  census->add_option("--stats", stats_file, "Write per-property statistics of the classes");
  census->add_option("--reps", reps_dir, "Write each listed semiring into this directory");
  census->add_option("--resume", resume_file, "Checkpoint file, resumed when present");
  census->add_flag("--long-run", long_run, "Allow order 5");
  census->add_option("--jobs", jobs, "Worker threads (default: all cores)");

  auto* verify = app.add_subcommand("verify", "Run the claim suite");
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember({"paper"}));
  verify->add_option("--claims", claims, "Comma-separated claim ids (default: all)");
  verify->add_option("--max-order", max_order, "Largest census order used")
      ->check(CLI::Range(std::size_t{1}, kCensusDefaultMaxOrder));
  verify->add_option("--report", report_file)->required();
  verify->add_option("--jobs", jobs, "Worker threads (default: all cores)");

  auto* encode_cmd = app.add_subcommand("encode", "Print the canonical compact encoding");
  encode_cmd->add_option("file", in_file)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const std::size_t cap = size_cap_from_env();

    if (*construct) {
      if (!out_file.empty()) check_output_path(out_file, "--output");
      const auto c = construct_named(parse_family_spec(spec), cap);
      emit(to_json(c.semiring), out_file);
      if (!c.axioms.ok) {
        const auto& v = c.axioms.violations.front();
        std::string tuple;
        for (elem e : v.witness) tuple += (tuple.empty() ? "" : ",") + std::to_string(e);
        std::cerr << spec << ": tables fail " << v.axiom << " at (" << tuple << ")\n";
        code = kFails;
      } else {
        std::cerr << spec << ": order " << c.semiring.order() << ", axioms ok\n";
      }
    } else if (*classify) {
      emit(classification_json(load_valid(in_file, cap)), "");
    } else if (*check) {
      const Property p = parse_property(prop_name);
      const auto v = decide(p, load_valid(in_file, cap));
      emit(verdict_json(v), "");
      if (!v.holds) {
        std::cerr << property_name(p) << " fails at element " << v.witnesses.front().element << "\n";
        code = kFails;
      }
    } else if (*ideals) {
      const auto s = load_valid(in_file, cap);
      const auto lat = all_ideals(s);
      json j;
      if (only_primes || only_maximal) {
        auto& arr = j[only_primes ? "primes" : "maximals"] = json::array();
        for (auto k : only_primes ? lat.primes : lat.maximals)
          arr.push_back(element_set_json(lat.ideals[k].elements));
      } else if (only_nil) {
        j["nil"] = element_set_json(lat.nil);
      } else {
        j = lattice_json(lat, order_props(s, lat));
      }
      emit(j, "");
    } else if (*idsemi) {
      check_output_path(out_file, "--output");
      const auto id = ideal_semiring(load_valid(in_file, cap), {}, cap);
      write_text_file(out_file, to_json(id.semiring).dump(2) + "\n");
      json j;
      j["order"] = id.semiring.order();
      auto& arr = j["ideals"] = json::array();
      for (const auto& i : id.lattice.ideals) arr.push_back(element_set_json(i.elements));
      emit(j, "");
    } else if (*localize_cmd) {
      check_output_path(out_file, "--output");
      const auto s = load_valid(in_file, cap);
      std::optional<LocalizedSemiring> loc;
      if (at == "mc") {
        loc = total_quotient(s).localized;
      } else if (at.starts_with("prime:")) {
        std::size_t k = 0, pos = 0;
        try {
          k = std::stoul(at.substr(6), &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos == 0 || pos != at.size() - 6) throw input_error("--at: expected prime:K, got '" + at + "'");
        const auto lat = all_ideals(s);
        if (k >= lat.ideals.size())
          throw input_error("--at: ideal index " + std::to_string(k) + " out of range [0," +
                            std::to_string(lat.ideals.size()) + ")");
        loc = localize_at_prime(s, lat.ideals[k].elements).localized;
      } else {
        throw input_error("--at: expected mc or prime:K, got '" + at + "'");
      }
      write_text_file(out_file, to_json(loc->quotient).dump(2) + "\n");
      emit(localization_json(*loc), "");
    } else if (*census) {
      CensusOptions opts;
      opts.up_to_iso = up_to_iso;
      opts.long_run = long_run;
      opts.jobs = jobs;
      if (!filter.empty()) opts.filter = parse_property(filter);
      if (!stats_file.empty()) check_output_path(stats_file, "--stats");
      if (!resume_file.empty()) {
        check_output_path(resume_file, "--resume");
        opts.checkpoint = resume_file;
      }
      if (!reps_dir.empty()) fs::create_directories(reps_dir);
      const auto list = enumerate_semirings(order, opts);
      json j;
      j["order"] = order;
      j["up_to_iso"] = up_to_iso;
      j["filter"] = filter.empty() ? json(nullptr) : json(std::string(property_name(*opts.filter)));
      j["count"] = list.size();
      auto& arr = j["semirings"] = json::array();
      for (const auto& s : list) arr.push_back(encode(s));
      emit(j, "");
      if (!reps_dir.empty())
        for (std::size_t k = 0; k < list.size(); ++k)
          write_text_file(fs::path(reps_dir) / ("order" + std::to_string(order) + "_" + std::to_string(k) + ".json"),
                          to_json(list[k]).dump(2) + "\n");
      if (!stats_file.empty()) {
        CensusOptions sopts = opts;
        sopts.checkpoint.clear();
        write_text_file(stats_file, to_json(census_stats(order, sopts)).dump(2) + "\n");
      }
      std::cerr << "order " << order << ": " << list.size() << " semirings\n";
    } else if (*verify) {
      check_output_path(report_file, "--report");
      SuiteConfig cfg;
      if (verify->count("--claims") > 0) cfg.claims = split_claims(claims);
      cfg.scale.max_order = max_order;
      cfg.scale.jobs = jobs;
      const auto r = run_suite(cfg);
      const json report = to_json(r, cfg);
      write_text_file(report_file, report.dump(2) + "\n");
      emit(report["summary"], "");
      std::cerr << r.reports.size() << " claims: " << r.verified << " verified, " << r.counterexamples
                << " counterexample, " << r.mixed << " mixed\n";
      if (r.expected_verify_failures > 0) code = kFails;
    } else if (*encode_cmd) {
      std::cout << encode(read_semiring_file(in_file)) << "\n";
    }
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const size_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
