// Command-line front end: catalog, schemes, fusion enumeration, desirability
// verdicts and certificate checking.
#include "fusionlab/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace fusionlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUndesirable = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitUsage = 64;

struct Options {
  std::string key;
  bool json = false;
  bool table = false;
  bool timing = false;
  std::size_t budget = FusionBudget{}.max_partitions;
  double time_limit = FusionBudget{}.time_limit_seconds;
  std::size_t threads = 0;  // 0: FUSIONLAB_THREADS or 1
  std::string expect;
  std::string lemma;
  std::string cert;
  std::size_t claim_limit = kDefaultClaimLimit;
};

std::size_t env_threads() {
  const char* v = std::getenv("FUSIONLAB_THREADS");
  if (!v || !*v) return 1;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1) throw CLI::ValidationError("FUSIONLAB_THREADS", "must be a positive integer");
  return static_cast<std::size_t>(n);
}

FusionBudget budget_of(const Options& o) {
  FusionBudget b;
  b.max_partitions = o.budget;
  b.time_limit_seconds = o.time_limit;
  b.threads = o.threads ? o.threads : env_threads();
  return b;
}

std::string blocks_text(const FusionPartition& p) { return canonical_form(p); }

std::string block_text(const std::vector<ClassId>& b) {
  std::ostringstream s;
  s << "{";
  for (std::size_t i = 0; i < b.size(); ++i) s << (i ? "," : "") << b[i];
  s << "}";
  return s.str();
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_group_list(const Options& o) {
  if (o.json) {
    Json a = Json::array();
    for (const auto& e : catalog_entries()) a.push_back({{"key", e.key}, {"order", e.order}, {"exponent", e.exponent}, {"description", e.description}});
    print_json(a);
    return kExitOk;
  }
  for (const auto& e : catalog_entries()) std::cout << e.key << "\t" << e.order << "\t" << e.description << "\n";
  return kExitOk;
}

int cmd_group_show(const Options& o) {
  auto g = catalog(o.key);
  if (o.json) {
    auto j = group_json(g);
    if (o.table) j["table"] = g.table();
    print_json(j);
    return kExitOk;
  }
  std::cout << "group " << g.name() << "\norder " << g.order() << "\nexponent " << g.exponent() << "\nabelian "
            << (g.is_abelian() ? "yes" : "no") << "\norders";
  for (const auto& [order, count] : order_census(g)) std::cout << " " << order << "x" << count;
  std::cout << "\n";
  if (o.table) {
    for (Element a = 0; a < g.order(); ++a) {
      for (Element b = 0; b < g.order(); ++b) std::cout << (b ? " " : "") << g.mul(a, b);
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_scheme_show(const Options& o) {
  auto s = scheme_from_group(catalog(o.key));
  if (o.json) {
    print_json(scheme_json(s));
    return kExitOk;
  }
  std::cout << "size " << s.size() << "\nrank " << s.rank() << "\nthin " << (s.is_thin() ? "yes" : "no") << "\nsymmetric "
            << (s.is_symmetric() ? "yes" : "no") << "\n";
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = 0; y < s.size(); ++y) std::cout << (y ? " " : "") << s.color(x, y);
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_fusion_enumerate(const Options& o) {
  auto s = scheme_from_group(catalog(o.key));
  auto e = enumerate_symmetric_fusions(s, budget_of(o));
  if (o.json) {
    Json parts = Json::array();
    for (const auto& p : e.partitions) parts.push_back(canonical_form(p));
    print_json({{"group", o.key}, {"complete", e.complete}, {"count", e.partitions.size()}, {"partitions", parts}});
  } else {
    for (const auto& p : e.partitions) std::cout << canonical_form(p) << "\n";
    std::cout << e.partitions.size() << " symmetric fusions" << (e.complete ? "" : " (incomplete: budget exhausted)") << "\n";
  }
  return e.complete ? kExitOk : kExitUnknown;
}

void print_witness_text(const AssociationScheme& s, const FusionPartition& p, const std::vector<ClassId>& block,
                        const IntegralityCertificate& cert) {
  std::cout << "fusion " << blocks_text(p) << "\nfailing block " << block_text(block) << " (valency " << fused_valency(s, block)
            << ")\nchar poly " << factored_string(cert.char_poly) << "\nmin poly " << factored_string(min_poly_symmetric(cert.char_poly))
            << "\nresidual " << factored_string(cert.residual) << "\n";
}

int cmd_check(const Options& o) {
  if (!o.expect.empty() && o.expect != "desirable" && o.expect != "undesirable")
    throw CLI::ValidationError("--expect", "must be desirable or undesirable");
  auto g = catalog(o.key);
  auto v = check_desirable(g, budget_of(o), o.claim_limit);
  if (o.json) {
    print_json(certificate_json(o.key, v));
  } else {
    std::cout << o.key << ": " << to_string(v.kind) << "\n";
    if (v.order_violation) std::cout << "element " << v.order_violation->element << " has order " << v.order_violation->order << "\n";
    if (v.witness) print_witness_text(scheme_from_group(g), v.witness->partition, v.witness->failing_block, v.witness->certificate);
    if (v.kind == DesirabilityVerdict::Kind::Desirable) std::cout << v.fusions_examined << " symmetric fusions, all integral\n";
    if (v.kind == DesirabilityVerdict::Kind::Unknown) std::cout << v.reason << " after " << v.nodes_examined << " search nodes\n";
  }
  if (v.kind == DesirabilityVerdict::Kind::Unknown) return kExitUnknown;
  if (o.expect == "desirable" && v.kind == DesirabilityVerdict::Kind::Undesirable) return kExitUndesirable;
  if (o.expect == "undesirable" && v.kind == DesirabilityVerdict::Kind::Desirable) return kExitUndesirable;
  return kExitOk;
}

int cmd_witness(const Options& o) {
  const WitnessFixture* fixture = nullptr;
  for (const auto& w : witness_fixtures())
    if (w.id == o.lemma) fixture = &w;
  if (!fixture) throw CLI::ValidationError("--lemma", "no stored witness for " + o.lemma);
  if (fixture->group_key != o.key) throw CLI::ValidationError("--lemma", "witness " + o.lemma + " belongs to " + fixture->group_key);
  auto g = catalog(o.key);
  auto resolved = resolve_witness(*fixture, g, budget_of(o));
  auto r = verify_witness(g, resolved.partition, resolved.failing_block);
  if (o.json) {
    auto j = report_json(r);
    j["witness_id"] = o.lemma;
    j["source"] = resolved.source == ResolvedWitness::Source::Verbatim ? "verbatim" : "searched";
    print_json(j);
  } else {
    std::cout << o.key << " witness " << o.lemma << (resolved.source == ResolvedWitness::Source::Searched ? " (recovered by search)" : "")
              << "\n";
    if (!resolved.note.empty()) std::cout << "note " << resolved.note << "\n";
    std::cout << "fusion " << blocks_text(r.partition) << "\nfailing block " << block_text(r.failing_block) << " (valency " << r.valency
              << ")\nchar poly " << factored_string(r.char_poly) << "\nmin poly " << factored_string(r.min_poly) << "\nresidual "
              << factored_string(r.residual) << "\n"
              << (r.non_integral ? "non-integral" : "integral") << "\n";
  }
  return r.non_integral ? kExitOk : kExitFailed;
}

int cmd_regression_suite(const Options& o) {
  auto report = regression_suite(budget_of(o));
  if (o.json) {
    print_json(suite_json(report, o.timing));
  } else {
    for (const auto& i : report.items) {
      std::cout << (i.passed ? "PASS " : "FAIL ") << i.name << ": expected " << i.expected << ", got " << i.actual;
      if (!i.detail.empty()) std::cout << " (" << i.detail << ")";
      if (o.timing) std::cout << " " << i.elapsed_ms << " ms";
      std::cout << "\n";
    }
    std::cout << report.passed() << "/" << report.items.size() << " passed\n";
  }
  return report.all_passed() ? kExitOk : kExitFailed;
}

int cmd_verify(const Options& o) {
  std::ifstream in(o.cert);
  if (!in) throw CLI::ValidationError("--cert", "cannot open " + o.cert);
  Json cert;
  try {
    cert = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw CertificateFormatError(std::string("not JSON: ") + e.what());
  }
  auto c = verify_certificate(cert, budget_of(o));
  if (o.json)
    print_json({{"group", cert.at("group")}, {"verdict", c.verdict}, {"verified", c.ok}, {"message", c.message}});
  else
    std::cout << (c.ok ? "verified" : "rejected") << ": " << c.message << "\n";
  if (c.verdict == "unknown") return kExitUnknown;
  return c.ok ? kExitOk : kExitFailed;
}

void add_budget(CLI::App* cmd, Options& o) {
  cmd->add_option("--budget", o.budget, "search nodes before giving up")->check(CLI::PositiveNumber);
  cmd->add_option("--time-limit", o.time_limit, "seconds before giving up")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", o.threads, "parallel width (default FUSIONLAB_THREADS or 1)")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusionlab: symmetric fusions and integrality of group schemes"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto* group = app.add_subcommand("group", "group catalog")->require_subcommand(1);
  auto* list = group->add_subcommand("list", "catalog keys");
  list->add_flag("--json", o.json);
  list->callback([&] { action = [&] { return cmd_group_list(o); }; });
  auto* show = group->add_subcommand("show", "order, exponent and element orders");
  show->add_option("key", o.key)->required();
  show->add_flag("--table", o.table, "print the Cayley table");
  show->add_flag("--json", o.json);
  show->callback([&] { action = [&] { return cmd_group_show(o); }; });

  auto* scheme = app.add_subcommand("scheme", "group schemes")->require_subcommand(1);
  auto* sshow = scheme->add_subcommand("show", "color matrix of the regular-action scheme");
  sshow->add_option("key", o.key)->required();
  sshow->add_flag("--json", o.json);
  sshow->callback([&] { action = [&] { return cmd_scheme_show(o); }; });

  auto* fusion = app.add_subcommand("fusion", "fusion schemes")->require_subcommand(1);
  auto* enumerate = fusion->add_subcommand("enumerate", "all symmetric fusions in canonical order");
  enumerate->add_option("key", o.key)->required();
  enumerate->add_flag("--json", o.json);
  add_budget(enumerate, o);
  enumerate->callback([&] { action = [&] { return cmd_fusion_enumerate(o); }; });

  auto* check = app.add_subcommand("check", "desirability verdict with certificate");
  check->add_option("key", o.key)->required();
  check->add_flag("--json", o.json);
  check->add_option("--claim-limit", o.claim_limit, "largest order for which a desirable verdict is claimed");
  check->add_option("--expect", o.expect, "desirable or undesirable; mismatch exits 2");
  add_budget(check, o);
  check->callback([&] { action = [&] { return cmd_check(o); }; });

  auto* witness = app.add_subcommand("witness", "replay a stored non-integral witness");
  witness->add_option("key", o.key)->required();
  witness->add_option("--lemma", o.lemma, "stored witness id, 3.1 .. 3.7")->required();
  witness->add_flag("--json", o.json);
  add_budget(witness, o);
  witness->callback([&] { action = [&] { return cmd_witness(o); }; });

  auto* suite = app.add_subcommand("paper-suite", "run the witness and verdict regression suite");
  suite->add_flag("--json", o.json);
  suite->add_flag("--timing", o.timing, "include per-item timing");
  add_budget(suite, o);
  suite->callback([&] { action = [&] { return cmd_regression_suite(o); }; });

  auto* verify = app.add_subcommand("verify", "re-check a JSON certificate from scratch");
  verify->add_option("--cert", o.cert, "certificate file")->required();
  verify->add_flag("--json", o.json);
  add_budget(verify, o);
  verify->callback([&] { action = [&] { return cmd_verify(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  try {
    return action();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CatalogMiss& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}
