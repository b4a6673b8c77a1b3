// Copyright 2026 The gfcode Authors
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

// gfcode: build, verify, bound and search graph family codes.
//
// Exit codes: 0 success or pass, 1 verification failure (or a search that
// proves a claim wrong), 2 usage or capability error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfcode/bounds.hpp"
#include "gfcode/constructions.hpp"
#include "gfcode/errors.hpp"
#include "gfcode/factorization.hpp"
#include "gfcode/io/family_json.hpp"
#include "gfcode/predicates.hpp"
#include "gfcode/registry.hpp"
#include "gfcode/search.hpp"
#include "gfcode/verify.hpp"

namespace {

using gfcode::Cardinality;
using gfcode::GraphFamily;
using gfcode::LabeledGraph;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Globals {
  unsigned threads = 0;
  std::uint64_t budget_nodes = 100'000'000;
  std::uint64_t time_ms = 0;
  std::uint64_t seed = 1;
  bool json = false;
};

gfcode::Predicate load_predicate(const std::string& text) {
  return gfcode::parse_predicate(text, [](const std::string& f) { return gfcode::io::read_pattern(f); });
}

Json magnitude_json(const gfcode::Magnitude& m) {
  Json j;
  if (m.exact) {
    j["value"] = m.exact->to_string();
    if (auto e = m.exact->exact_log2()) j["log2"] = *e;
  } else {
    j["log2"] = m.log2_value.to_string();
  }
  return j;
}

Json report_json(const gfcode::BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["predicate"] = r.predicate;
  j["lower"] = magnitude_json(r.lower.value);
  j["lower"]["provenance"] = r.lower.provenance;
  j["upper"] = magnitude_json(r.upper.value);
  j["upper"]["provenance"] = r.upper.provenance;
  j["tight"] = r.tight;
  return j;
}

Json verify_json(const gfcode::VerifyReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["mode"] = gfcode::to_string(r.mode);
  j["pairs_checked"] = r.pairs_checked;
  if (r.witness) {
    j["witness"]["first"] = r.witness->first;
    j["witness"]["second"] = r.witness->second;
    j["witness"]["difference"] = gfcode::io::to_hex(r.witness->difference);
  }
  return j;
}

std::string edge_list(const LabeledGraph& g) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& e : g.edges()) {
    out << (first ? "" : ",") << e.first << "-" << e.second;
    first = false;
  }
  out << "}";
  return out.str();
}

void print_verify(const gfcode::VerifyReport& r, const Globals& g, const std::string& what) {
  if (g.json) {
    std::cout << verify_json(r).dump(2) << "\n";
    return;
  }
  std::cout << what << ": " << (r.pass ? "PASS" : "FAIL") << " (" << gfcode::to_string(r.mode)
            << ", " << r.pairs_checked << " checked)\n";
  if (r.witness)
    std::cout << "witness: (" << r.witness->first << ", " << r.witness->second
              << ") difference " << edge_list(r.witness->difference) << "\n";
}

// Seeded sampling for families too large to certify exhaustively.
gfcode::VerifyReport sample_linear(const gfcode::LinearFamily& fam, const gfcode::Predicate& pred,
                                   bool dual, std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int r = fam.rank();
  gfcode::VerifyReport report;
  report.mode = dual ? gfcode::VerifyMode::kDual : gfcode::VerifyMode::kLinear;
  for (std::uint64_t s = 0; s < samples; ++s) {
    LabeledGraph g(fam.order());
    for (const auto& v : fam.basis().vectors())
      if (rng() & 1u) g ^= v;
    if (g.edgeless()) continue;
    ++report.pairs_checked;
    if (pred(g) == dual) {
      report.pass = false;
      report.witness = gfcode::Witness{0, s, g};
      return report;
    }
  }
  (void)r;
  return report;
}

int run_build(const std::string& name, const gfcode::BuildParams& params, const std::string& out,
              bool basis, const Globals& g) {
  const gfcode::BuiltFamily built = gfcode::build_family(name, params);
  if (basis) {
    if (!built.linear && !(built.affine)) throw gfcode::capability_error(name + " has no basis form");
    const auto& lin = built.linear ? *built.linear : built.affine->directions;
    GraphFamily b(lin.order(), lin.provenance());
    for (const auto& v : lin.basis().vectors()) b.push_back(v);
    b.set_claimed_size(Cardinality(static_cast<std::uint64_t>(lin.rank())));
    if (!out.empty()) gfcode::io::write_family(out, b, "basis");
  } else {
    if (!built.family)
      throw gfcode::capability_error(name + ": " + built.size.to_short_string() +
                                     " members exceed the enumeration budget; use --basis");
    if (!out.empty()) gfcode::io::write_family(out, *built.family);
  }
  if (g.json) {
    Json j;
    j["family"] = name;
    j["n"] = built.linear ? built.linear->order() : built.family ? built.family->order() : built.affine->order();
    j["size"] = built.family ? std::to_string(built.family->size()) : built.size.to_string();
    j["claimed_size"] = built.size.to_string();
    j["predicate"] = built.predicate.name();
    j["role"] = built.dual ? "dual" : "good";
    if (built.linear) j["rank"] = built.linear->rank();
    if (!out.empty()) j["out"] = out;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << name << ": size "
              << (built.family ? std::to_string(built.family->size()) : built.size.to_short_string())
              << ", claimed_size " << built.size.to_short_string() << ", "
              << (built.dual ? "dual of " : "good for ") << built.predicate.name();
    if (built.linear) std::cout << ", rank " << built.linear->rank();
    std::cout << (out.empty() ? "" : ", written to " + out) << "\n";
  }
  if (built.family && built.family->size() != built.size.to_u64().value_or(0)) return kExitFail;
  return kExitOk;
}

int run_verify(const std::string& pred_text, const std::string& file, const std::string& family,
               const gfcode::BuildParams& params, bool dual_flag, std::uint64_t samples,
               const Globals& g) {
  const gfcode::Predicate pred = load_predicate(pred_text);
  const gfcode::VerifyOptions opts{g.threads};
  gfcode::VerifyReport report;
  std::string what;
  if (!file.empty()) {
    const auto doc = gfcode::io::read_document(file);
    what = file;
    if (doc.role == "basis") {
      gfcode::LinearFamily lin(doc.family.order(), doc.family.members(), doc.family.provenance());
      report = dual_flag ? gfcode::verify_dual_linear(lin, pred, opts)
                         : gfcode::verify_linear_family(lin, pred, opts);
    } else {
      report = dual_flag ? gfcode::verify_dual_family(doc.family, pred, opts)
                         : gfcode::verify_family(doc.family, pred, opts);
    }
  } else {
    const gfcode::BuiltFamily built = gfcode::build_family(family, params);
    const bool dual = dual_flag || built.dual;
    what = family;
    const gfcode::LinearFamily* lin = built.linear ? &*built.linear : built.affine ? &built.affine->directions : nullptr;
    if (lin && lin->rank() > gfcode::kSpanEnumerationLimit) {
      if (samples == 0)
        throw gfcode::capability_error(family + ": rank " + std::to_string(lin->rank()) +
                                       " is beyond exact verification; pass --sample N");
      report = sample_linear(*lin, pred, dual, samples, g.seed);
      what += " (sampled, seed " + std::to_string(g.seed) + ")";
    } else if (lin) {
      report = dual ? gfcode::verify_dual_linear(*lin, pred, opts) : gfcode::verify_linear_family(*lin, pred, opts);
    } else {
      report = dual ? gfcode::verify_dual_family(*built.family, pred, opts)
                    : gfcode::verify_family(*built.family, pred, opts);
    }
  }
  print_verify(report, g, what);
  return report.pass ? kExitOk : kExitFail;
}

int run_bound(const std::string& pred, int n, const Globals& g) {
  const gfcode::BoundReport r = gfcode::bound_report(pred, n);
  if (g.json) {
    std::cout << report_json(r).dump(2) << "\n";
    return kExitOk;
  }
  const bool dual = pred.rfind("d:", 0) == 0;
  const char* sym = dual ? "D" : "M";
  std::cout << "n=" << n << " " << pred << "\n"
            << "  " << sym << " ≥ " << r.lower.value.to_string() << "  (" << r.lower.provenance << ")\n"
            << "  " << sym << " ≤ " << r.upper.value.to_string() << "  (" << r.upper.provenance << ")\n"
            << "  " << (r.tight ? "tight" : "not tight") << "\n";
  return kExitOk;
}

int run_search(const std::string& pred_text, int n, const std::string& mode, int max_rank,
               const std::string& out, std::optional<std::uint64_t> claim, const Globals& g) {
  const gfcode::Predicate pred = load_predicate(pred_text);
  const gfcode::SearchOptions opts{g.budget_nodes, g.time_ms};
  gfcode::SearchResult result;
  if (mode == "good") {
    result = gfcode::max_good_family(n, pred, opts);
  } else if (mode == "dual") {
    result = gfcode::max_dual_family(n, pred, opts);
  } else {
    result = gfcode::max_linear_family(n, pred, max_rank, opts);
  }
  const gfcode::VerifyOptions vopts{g.threads};
  bool certified = true;
  if (result.certificate.size() >= 2)
    certified = mode == "dual" ? gfcode::verify_dual_family(result.certificate, pred, vopts).pass
                               : gfcode::verify_family(result.certificate, pred, vopts).pass;
  if (!out.empty()) gfcode::io::write_family(out, result.certificate);
  if (g.json) {
    Json j;
    j["n"] = n;
    j["predicate"] = pred.name();
    j["mode"] = mode;
    j["optimum"] = result.optimum;
    j["status"] = gfcode::to_string(result.status);
    j["explored"] = result.explored;
    j["certificate_verified"] = certified;
    if (mode == "linear") j["rank"] = result.basis.size();
    j["certificate"] = gfcode::io::to_json(result.certificate);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "search " << mode << " " << pred.name() << " n=" << n << ": optimum "
              << result.optimum << " (" << gfcode::to_string(result.status) << ", "
              << result.explored << " nodes)";
    if (mode == "linear") std::cout << ", rank " << result.basis.size();
    std::cout << "\ncertificate " << (certified ? "verified" : "FAILED verification") << ":\n";
    for (std::size_t i = 0; i < result.certificate.size(); ++i)
      std::cout << "  " << edge_list(result.certificate[i]) << "\n";
  }
  if (!certified) return kExitFail;
  if (claim && result.status == gfcode::SearchStatus::kExact && result.optimum < *claim) return kExitFail;
  return kExitOk;
}

int run_table(const std::string& range, const Globals& g) {
  int a = 0, b = 0;
  char dot1 = 0, dot2 = 0;
  std::istringstream in(range);
  if (!(in >> a >> dot1 >> dot2 >> b) || dot1 != '.' || dot2 != '.')
    throw std::domain_error("table: --range must look like a..b");
  if (a < 3 || b > 14 || a > b) throw std::domain_error("table: need 3 <= a <= b <= 14");
  Json rows = Json::array();
  for (int n = a; n <= b; ++n)
    for (const auto& r : gfcode::table_rows(n)) {
      if (g.json) {
        rows.push_back(report_json(r));
        continue;
      }
      std::cout << "n=" << n << "  " << r.predicate;
      std::cout << std::string(r.predicate.size() < 14 ? 14 - r.predicate.size() : 1, ' ');
      std::cout << r.lower.value.to_string() << " vs " << r.upper.value.to_string() << "  "
                << (r.tight ? "tight" : "not tight") << "  [" << r.lower.provenance << " / "
                << r.upper.provenance << "]\n";
    }
  if (g.json) std::cout << rows.dump(2) << "\n";
  return kExitOk;
}

int run_factorize(int m, const std::string& out, const Globals& g) {
  const gfcode::OneFactorization f = gfcode::starter_factorization(m);
  gfcode::validate(f);
  const bool perfect = gfcode::verify_p1f(f);
  GraphFamily fam(m, gfcode::Provenance{"starter-1-factorization", {{"m", std::to_string(m)}}});
  for (const auto& mt : f.matchings) fam.push_back(mt);
  if (!out.empty()) gfcode::io::write_family(out, fam, "factorization");
  if (g.json) {
    Json j;
    j["m"] = m;
    j["matchings"] = f.matchings.size();
    j["perfect"] = perfect;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "starter 1-factorization of K_" << m << ": " << f.matchings.size()
              << " matchings, " << (perfect ? "perfect" : "not perfect") << "\n";
    for (std::size_t i = 0; i < f.matchings.size(); ++i)
      std::cout << "  M_" << i << " " << edge_list(f.matchings[i]) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gfcode: graph families with constrained symmetric differences"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads for verification (0 = all cores)")->capture_default_str();
  app.add_option("--budget-nodes", g.budget_nodes, "Search node budget")->capture_default_str();
  app.add_option("--time-ms", g.time_ms, "Search wall-clock limit in ms (0 = none)")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for sampled verification")->capture_default_str();
  app.add_flag("--json", g.json, "Machine-readable output");

  gfcode::BuildParams params;
  int n = 0, k = 0, p = 0, r = 0;
  std::string host_file;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--n", n, "Vertex count");
    sub->add_option("--k", k, "Hamming parameter (n = 2^k - 1)");
    sub->add_option("--p", p, "Odd prime");
    sub->add_option("--r", r, "Clique size for clique-agreement");
    sub->add_option("--host", host_file, "Host graph file for dual-subgraph");
  };

  std::string family, out, pred, file, mode = "good", range = "3..10";
  bool basis = false, dual = false;
  int max_rank = -1, m = 0;
  std::uint64_t samples = 0, claim = 0;

  std::string family_help = "Construction name:";
  for (const auto& e : gfcode::registry()) family_help += std::string("\n  ") + e.name + " " + e.params + ": " + e.summary;

  auto* build = app.add_subcommand("build", "Construct a family and write it as JSON");
  build->add_option("--family", family, family_help)->required();
  add_params(build);
  build->add_option("--out", out, "Output file");
  build->add_flag("--basis", basis, "Write the GF(2) basis (role basis) instead of all members");

  auto* verify = app.add_subcommand("verify", "Certify a family against a predicate");
  verify->add_option("--pred", pred, "Predicate: connected, 2conn, 3conn, kconn:<k>, hampath, hamcycle, star, k3, oddcycle, sub:<file>, indsub:<file>")->required();
  verify->add_option("file", file, "Family file");
  verify->add_option("--family", family, "Verify a registered construction instead of a file");
  add_params(verify);
  verify->add_flag("--dual", dual, "Require that no difference satisfies the predicate");
  verify->add_option("--sample", samples, "Random members to check when exact verification is out of reach");

  auto* bound = app.add_subcommand("bound", "Print the known lower and upper bounds");
  std::string bound_help = "Predicate:";
  for (const auto& s : gfcode::bound_predicates()) bound_help += " " + s;
  bound->add_option("--pred", pred, bound_help)->required();
  bound->add_option("--n", n, "Vertex count")->required();

  auto* search = app.add_subcommand("search", "Exact extremal search for tiny n");
  search->add_option("--pred", pred, "Predicate")->required();
  search->add_option("--n", n, "Vertex count")->required();
  search->add_option("--mode", mode, "good | dual | linear")->check(CLI::IsMember({"good", "dual", "linear"}))->capture_default_str();
  search->add_option("--max-rank", max_rank, "Rank limit for linear mode (-1 = none)");
  search->add_option("--out", out, "Certificate output file");
  auto* claim_opt = search->add_option("--claim", claim, "Exit 1 if the exact optimum is below this size");

  auto* table = app.add_subcommand("table", "Bound table: construction size against upper bound");
  table->add_option("--range", range, "Vertex range a..b with 3 <= a <= b <= 14")->capture_default_str();

  auto* factorize = app.add_subcommand("factorize", "Starter 1-factorization of K_m");
  factorize->add_option("--m", m, "Even order m >= 4")->required();
  factorize->add_option("--out", out, "Output file (role factorization)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto collect = [&](CLI::App* sub) {
    if (sub->count("--n")) params.n = n;
    if (sub->count("--k")) params.k = k;
    if (sub->count("--p")) params.p = p;
    if (sub->count("--r")) params.r = r;
    if (sub->count("--host")) params.host = gfcode::io::read_pattern(host_file);
  };

  try {
    if (build->parsed()) {
      collect(build);
      return run_build(family, params, out, basis, g);
    }
    if (verify->parsed()) {
      collect(verify);
      if (file.empty() == family.empty()) throw std::domain_error("verify: give a file or --family, not both");
      return run_verify(pred, file, family, params, dual, samples, g);
    }
    if (bound->parsed()) return run_bound(pred, n, g);
    if (search->parsed())
      return run_search(pred, n, mode, max_rank, out,
                        claim_opt->count() ? std::optional<std::uint64_t>(claim) : std::nullopt, g);
    if (table->parsed()) return run_table(range, g);
    if (factorize->parsed()) return run_factorize(m, out, g);
  } catch (const gfcode::capability_error& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
