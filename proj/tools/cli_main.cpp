#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "equichain/json_io.hpp"
#include "equichain/solvability.hpp"
#include "equichain/subdivision.hpp"

namespace {

using namespace equichain;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitBudget = 5;
constexpr int kExitNonexistence = 10;
constexpr int kExitInternal = 70;

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("EQUICHAIN_BUDGET")) {
    try {
      std::size_t used = 0;
      const unsigned long long parsed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return parsed;
    } catch (const std::exception&) {
      throw ParseError(std::string("EQUICHAIN_BUDGET is not an unsigned integer: ") + env);
    }
  }
  return 1'000'000;
}

Int fubini(int m) {
  // Ordered set partitions of m elements: a(m) = sum_k C(m,k) a(m-k).
  std::vector<Int> a{Int(1)};
  for (int i = 1; i <= m; ++i) {
    const std::vector<Int> row = pascal_row(i);
    Int acc = 0;
    for (int k = 1; k <= i; ++k) {
      acc += row[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(i - k)];
    }
    a.push_back(acc);
  }
  return a.back();
}

void guard_facet_budget(int n, int rounds, std::uint64_t budget) {
  Int estimate = 1;
  const Int per_round = fubini(n + 1);
  for (int r = 0; r < rounds; ++r) {
    estimate *= per_round;
    if (estimate > budget) {
      throw BudgetExceeded("subdivision would have " + estimate.str() +
                           " or more facets, over the budget of " +
                           std::to_string(budget));
    }
  }
}

void emit(const json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << dump_canonical(doc);
  } else {
    save_json(out_path, doc);
  }
}

Complex complex_by_name(const std::string& name, int n) {
  if (name == "disk") return build_disk(n);
  if (name == "annulus") return build_annulus(n);
  if (name == "output") return build_output_complex(n);
  throw std::invalid_argument("cannot rebuild a complex named \"" + name +
                              "\"; known names: disk, annulus, output");
}

json verdict_to_json(const TaskVerdict& v) {
  json j;
  j["dimension"] = v.dimension;
  j["g"] = int_to_json(v.g);
  j["impossible"] = v.impossible;
  j["statement"] = v.statement;
  return j;
}

int run_solvable(int n, std::optional<int> t) {
  json payload;
  payload["n"] = n;
  payload["t"] = t ? json(*t) : json(nullptr);
  if (n == 0) {
    if (t) throw std::invalid_argument("t-resilient verdict requires n >= 1");
    payload["g"] = nullptr;
    payload["diophantine_feasible"] = false;
    payload["diophantine_witness"] = nullptr;
    payload["map_exists"] = false;
    json wf;
    wf["dimension"] = 0;
    wf["g"] = nullptr;
    wf["impossible"] = true;
    wf["statement"] =
        "one process cannot break symmetry: its single output bit violates "
        "either the not-all-0 or the not-all-1 requirement";
    payload["wait_free"] = std::move(wf);
    payload["t_resilient"] = nullptr;
    emit(make_document("solvability", payload), "");
    return kExitNonexistence;
  }
  const RenamingVerdict v = renaming_verdict(n, t);
  const auto dio = solve_diophantine(n);
  payload["g"] = int_to_json(v.wait_free.g);
  payload["diophantine_feasible"] = dio.has_value();
  if (dio) {
    json w = json::array();
    for (const Int& x : *dio) w.push_back(int_to_json(x));
    payload["diophantine_witness"] = std::move(w);
  } else {
    payload["diophantine_witness"] = nullptr;
  }
  payload["map_exists"] = !v.wait_free.impossible;
  payload["wait_free"] = verdict_to_json(v.wait_free);
  payload["t_resilient"] = v.t_resilient ? verdict_to_json(*v.t_resilient) : json(nullptr);
  emit(make_document("solvability", payload), "");
  const bool impossible = t ? v.t_resilient->impossible : v.wait_free.impossible;
  return impossible ? kExitNonexistence : kExitOk;
}

int run_search(int n, const std::string& out_path) {
  if (n < 1) throw std::invalid_argument("search requires n >= 1");
  const Certificate cert = search_equivariant_map(n);
  emit(make_document("certificate", certificate_to_json(cert)), out_path);
  return cert.kind == Certificate::Kind::existence ? kExitOk : kExitNonexistence;
}

int verify_map_document(const json& doc) {
  ChainMapTable m = map_from_json(doc);
  const Complex source = complex_by_name(m.source(), m.n());
  const Complex target = complex_by_name(m.target(), m.n());
  const std::vector<VerificationReport> reports = verify_all(m, source, target);
  bool ok = true;
  for (const VerificationReport& r : reports) ok = ok && r.pass;
  json payload;
  payload["n"] = m.n();
  payload["source"] = m.source();
  payload["target"] = m.target();
  payload["verifications"] = verifications_to_json(reports);
  payload["all_pass"] = ok;
  emit(make_document("verification", payload), "");
  return ok ? kExitOk : kExitVerificationFail;
}

int verify_certificate_document(const json& doc) {
  const Certificate cert = certificate_from_json(doc);
  json payload;
  payload["n"] = cert.n;
  payload["kind"] = cert.kind == Certificate::Kind::existence ? "existence" : "nonexistence";
  bool ok = true;
  if (cert.kind == Certificate::Kind::existence) {
    if (!cert.witness) throw ParseError("existence certificate without a witness map");
    ChainMapTable m = *cert.witness;
    const Complex source = complex_by_name(m.source(), m.n());
    const Complex target = complex_by_name(m.target(), m.n());
    const std::vector<VerificationReport> reports = verify_all(m, source, target);
    for (const VerificationReport& r : reports) ok = ok && r.pass;
    payload["verifications"] = verifications_to_json(reports);
    if (cert.g != 1) {
      ok = false;
      payload["consistency"] = "existence certificate with g = " + cert.g.str();
    }
  } else {
    if (!cert.infeasibility) throw ParseError("nonexistence certificate without a witness");
    const ReducedSystem sys = build_reduced_system(cert.n, false);
    const std::vector<Int>& y = cert.infeasibility->combination;
    const Int& mod = cert.infeasibility->modulus;
    std::string failure;
    if (y.size() != sys.lhs.rows) {
      failure = "combination length does not match the system";
    } else {
      for (std::size_t c = 0; c < sys.lhs.cols && failure.empty(); ++c) {
        Int acc = 0;
        for (std::size_t r = 0; r < sys.lhs.rows; ++r) acc += y[r] * sys.lhs.at(r, c);
        const bool zero = mod == 0 ? acc == 0 : acc % mod == 0;
        if (!zero) failure = "combination does not annihilate column " + std::to_string(c);
      }
      if (failure.empty()) {
        Int rhs = 0;
        for (std::size_t r = 0; r < sys.lhs.rows; ++r) rhs += y[r] * sys.rhs[r];
        const bool nonzero = mod == 0 ? rhs != 0 : rhs % mod != 0;
        if (!nonzero) failure = "combination does not contradict the right-hand side";
      }
    }
    ok = failure.empty();
    payload["witness_check"] = ok ? json("pass") : json(failure);
    if (cert.g <= 1) {
      ok = false;
      payload["consistency"] = "nonexistence certificate with g = " + cert.g.str();
    }
  }
  payload["all_pass"] = ok;
  emit(make_document("verification", payload), "");
  return ok ? kExitOk : kExitVerificationFail;
}

int run_verify(const std::string& map_path) {
  const json doc = load_json(map_path);
  if (doc.contains("witness_map")) return verify_certificate_document(doc);
  return verify_map_document(doc);
}

int run_wind(const std::string& chain_path, int n) {
  const Chain c = chain_from_json(load_json(chain_path));
  const WindingOracle oracle(n);
  const Int w = oracle.winding(c);
  json payload;
  payload["n"] = n;
  payload["q"] = c.q();
  payload["winding"] = int_to_json(w);
  emit(make_document("winding", payload), "");
  return kExitOk;
}

int run_wsb(int n, int rounds, bool exhaustive, const std::string& coloring_path,
            std::optional<std::uint64_t> budget_flag) {
  if (n < 1) throw std::invalid_argument("weak symmetry breaking needs n >= 1");
  const std::uint64_t budget = resolve_budget(budget_flag);
  guard_facet_budget(n, rounds, budget);
  const SubdividedComplex s = chromatic_subdivide(n, rounds);
  json payload;
  payload["n"] = n;
  payload["rounds"] = rounds;
  if (exhaustive) {
    const Int g = binomial_gcd(n);
    const std::vector<BinaryColoring> colorings = enumerate_symmetric_colorings(s, budget);
    std::map<long long, long long> histogram;
    // The congruence lives on the homological side: the winding of the
    // boundary image is always 1 modulo g, which already rules out count 0.
    // The raw facet count is reported but not congruent in general — opposite
    // orientations can cancel in the signed class while both remain facets.
    bool congruent = true;
    bool any_decision = false;
    long long min_count = -1;
    for (const BinaryColoring& b : colorings) {
      const long long count = monochromatic_count(s, b);
      ++histogram[count];
      congruent = congruent && (boundary_image_winding(s, b) - 1) % g == 0;
      any_decision = any_decision || count == 0;
      if (min_count < 0 || count < min_count) min_count = count;
    }
    payload["colorings"] = static_cast<std::uint64_t>(colorings.size());
    json counts = json::array();
    for (const auto& [count, multiplicity] : histogram) {
      counts.push_back(json::array({count, multiplicity}));
    }
    payload["counts"] = std::move(counts);
    payload["min_count"] = min_count;
    payload["modulus"] = int_to_json(g);
    payload["windings_congruent_to_one"] = congruent;
    payload["any_decision"] = any_decision;
    emit(make_document("wsb-exhaustive", payload), "");
    return congruent && !any_decision ? kExitOk : kExitVerificationFail;
  }
  const BinaryColoring b = coloring_from_json(load_json(coloring_path));
  const WsbReport report = wsb_decision_check(s, b);
  payload["symmetric"] = report.symmetry.pass;
  payload["symmetry_detail"] = report.symmetry.detail;
  payload["monochromatic_count"] = report.mono_count;
  payload["decision"] = report.decision;
  payload["boundary_winding"] = int_to_json(boundary_image_winding(s, b));
  emit(make_document("wsb-coloring", payload), "");
  return kExitOk;
}

int run_subdivide(int n, int rounds, const std::string& out_path,
                  std::optional<std::uint64_t> budget_flag) {
  guard_facet_budget(n, rounds, resolve_budget(budget_flag));
  const SubdividedComplex s = chromatic_subdivide(n, rounds);
  json payload = subdivision_to_json(s);
  payload["facet_count"] = static_cast<std::uint64_t>(s.facets().size());
  emit(make_document("subdivision", payload), out_path);
  return kExitOk;
}

int run_homology(const std::string& name, int n) {
  const Complex k = complex_by_name(name, n);
  json payload;
  payload["complex"] = name;
  payload["n"] = n;
  json groups = json::array();
  for (int q = 0; q <= k.dim(); ++q) {
    const HomologyGroup h = reduced_betti(k, q);
    json g;
    g["q"] = q;
    g["rank"] = h.rank;
    json torsion = json::array();
    for (const Int& t : h.torsion) torsion.push_back(int_to_json(t));
    g["torsion"] = std::move(torsion);
    groups.push_back(std::move(g));
  }
  payload["reduced"] = std::move(groups);
  emit(make_document("homology", payload), "");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact equivariant chain-map engine for weak symmetry breaking"};
  app.require_subcommand(1);

  int n = 0;
  int rounds = 0;
  int t_value = 0;
  bool has_t = false;
  bool exhaustive = false;
  std::string out_path, map_path, chain_path, coloring_path, complex_name;
  std::uint64_t budget_value = 0;
  bool has_budget = false;

  CLI::App* solvable = app.add_subcommand("solvable", "decide map existence from the gcd");
  solvable->add_option("--n", n, "dimension (processes minus one)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  solvable->add_option("--t", t_value, "resilience parameter")->check(CLI::PositiveNumber);

  CLI::App* search = app.add_subcommand("search", "construct or refute the chain map");
  search->add_option("--n", n, "dimension")->required()->check(CLI::NonNegativeNumber);
  search->add_option("--out", out_path, "certificate output path");

  CLI::App* verify = app.add_subcommand("verify", "verify a map or certificate document");
  verify->add_option("--map", map_path, "path to the document")->required();

  CLI::App* wind = app.add_subcommand("wind", "winding number of a cycle in the annulus");
  wind->add_option("--chain", chain_path, "path to the chain document")->required();
  wind->add_option("--n", n, "dimension")->required()->check(CLI::PositiveNumber);

  CLI::App* wsb = app.add_subcommand("wsb", "weak symmetry breaking on a subdivision");
  wsb->add_option("--n", n, "dimension")->required()->check(CLI::NonNegativeNumber);
  wsb->add_option("--rounds", rounds, "subdivision rounds")
      ->required()
      ->check(CLI::NonNegativeNumber);
  wsb->add_flag("--exhaustive", exhaustive, "enumerate all symmetric colorings");
  wsb->add_option("--coloring", coloring_path, "path to one coloring document");
  wsb->add_option("--budget-facets", budget_value, "enumeration budget");

  CLI::App* subdivide = app.add_subcommand("subdivide", "emit a chromatic subdivision");
  subdivide->add_option("--n", n, "dimension")->required()->check(CLI::NonNegativeNumber);
  subdivide->add_option("--rounds", rounds, "subdivision rounds")
      ->required()
      ->check(CLI::NonNegativeNumber);
  subdivide->add_option("--out", out_path, "output path");
  subdivide->add_option("--budget-facets", budget_value, "facet budget");

  CLI::App* homology = app.add_subcommand("homology", "reduced homology of a named complex");
  homology->add_option("--complex", complex_name, "disk | annulus | output")->required();
  homology->add_option("--n", n, "dimension")->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
    has_t = solvable->count("--t") > 0;
    has_budget = wsb->count("--budget-facets") > 0 || subdivide->count("--budget-facets") > 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solvable->parsed()) {
      return run_solvable(n, has_t ? std::optional<int>(t_value) : std::nullopt);
    }
    if (search->parsed()) return run_search(n, out_path);
    if (verify->parsed()) return run_verify(map_path);
    if (wind->parsed()) return run_wind(chain_path, n);
    if (wsb->parsed()) {
      if (exhaustive == !coloring_path.empty()) {
        std::cerr << "equichain: wsb needs exactly one of --exhaustive or --coloring\n";
        return kExitUsage;
      }
      return run_wsb(n, rounds, exhaustive, coloring_path,
                     has_budget ? std::optional<std::uint64_t>(budget_value) : std::nullopt);
    }
    if (subdivide->parsed()) {
      return run_subdivide(n, rounds, out_path,
                           has_budget ? std::optional<std::uint64_t>(budget_value)
                                      : std::nullopt);
    }
    if (homology->parsed()) return run_homology(complex_name, n);
    std::cerr << "equichain: no verb selected\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "equichain: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "equichain: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "equichain: " << e.what() << "\n";
    return kExitIo;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "equichain: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "equichain: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "equichain: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
