#include "ospchar/cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "ospchar/algebra/errors.hpp"
#include "ospchar/algebra/format.hpp"
#include "ospchar/characters/characters.hpp"
#include "ospchar/identities/identities.hpp"
#include "ospchar/tableaux/tableaux.hpp"

namespace ospchar::cli {
namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  std::string family;
  std::string method;
  int n = 0;
  int m = 0;
  std::string lambda;
  std::string format = "text";
  bool count_only = false;

  std::string identity;
  int r = 0;
  int l = 0;
  int n1 = 0;
  int n2 = 0;
  std::string variant;
  std::uint64_t seed = 20240607;
  bool symbolic = false;
  std::string file;

  SuiteBounds bounds;
  bool json = false;
  unsigned threads = 0;
};

Family require_family(const std::string& s) {
  auto f = parse_family(s);
  if (!f) throw PreconditionError("unknown family '" + s + "'");
  return *f;
}

Alphabet alphabet_for(Family f, const VarList& x, const VarList& y) {
  switch (f) {
    case Family::Schur: return Alphabet::ssyt(x);
    case Family::Hook: return Alphabet::super(x, y);
    case Family::Symplectic: return Alphabet::symplectic(x);
    case Family::Orthosymplectic: return Alphabet::orthosymplectic(x, y);
    case Family::OddSymplectic: return Alphabet::odd_symplectic(x);
  }
  throw PreconditionError("unknown family");
}

ojson request_json(const CharacterRequest& req) {
  return ojson{{"family", family_name(req.family)},
               {"n", req.n},
               {"m", req.m},
               {"lambda", req.lambda.to_string()}};
}

int do_compute(const Options& o, std::ostream& out) {
  auto method = parse_method(o.method);
  if (!method) throw PreconditionError("unknown method '" + o.method + "'");
  CharacterRequest req{require_family(o.family), *method, Partition::parse(o.lambda), o.n, o.m};
  const auto p = compute(req);
  if (o.format == "json") {
    auto j = request_json(req);
    j["method"] = method_name(req.method);
    j["polynomial"] = ojson::parse(to_json(p));
    j["text"] = p.to_string();
    out << j.dump() << "\n";
  } else {
    out << p.to_string() << "\n";
  }
  return kOk;
}

int do_enumerate(const Options& o, std::ostream& out) {
  CharacterRequest req{require_family(o.family), Method::Tableau, Partition::parse(o.lambda), o.n, o.m};
  validate(req);
  auto ring = request_ring(req);
  auto x = named_block(ring, "x", static_cast<std::size_t>(req.n));
  VarList y{ring, {}};
  if (req.family == Family::Hook || req.family == Family::Orthosymplectic)
    y = named_block(ring, "y", static_cast<std::size_t>(req.m));
  TableauEnumerator en(alphabet_for(req.family, x, y), req.lambda);
  if (o.count_only) {
    out << en.count() << "\n";
    return kOk;
  }
  if (o.format == "json") {
    auto j = request_json(req);
    auto list = ojson::array();
    en.for_each([&](const Tableau& t) {
      list.push_back(ojson{{"tableau", t.to_string(en.alphabet())},
                           {"weight", monomial_to_string(t.weight(en.alphabet()), *ring)}});
    });
    j["count"] = list.size();
    j["tableaux"] = std::move(list);
    out << j.dump() << "\n";
  } else {
    en.for_each([&](const Tableau& t) { out << t.to_string(en.alphabet()) << "\n"; });
  }
  return kOk;
}

VerificationReport dispatch_verify(const Options& o, const CLI::App& sub) {
  const auto& id = o.identity;
  auto lambda = [&] { return Partition::parse(o.lambda); };
  auto need = [&](std::initializer_list<const char*> flags) {
    for (const char* f : flags) {
      if (sub.get_option(f)->count() == 0) {
        throw PreconditionError("identity '" + id + "' requires " + f);
      }
    }
  };
  if (id == "supersymmetry") {
    need({"--n", "--m"});
    return verify_supersymmetry(lambda(), o.n, o.m);
  }
  if (id == "lemma-evaluation") {
    need({"--n", "--l"});
    return verify_lemma_evaluation(o.n, o.l);
  }
  if (id == "lemma-separate") {
    need({"--n1", "--n2"});
    return verify_lemma_separate(lambda(), o.n1, o.n2);
  }
  if (id == "cauchy-binet") {
    need({"--m", "--n"});
    return verify_cauchy_binet(o.m, o.n, o.seed, o.symbolic);
  }
  if (id == "lemma-ind") {
    need({"--n", "--r", "--variant"});
    if (o.variant != "sp" && o.variant != "spo") throw PreconditionError("lemma-ind variant must be sp or spo");
    return verify_lemma_ind(lambda(), o.n, o.r, o.variant == "sp" ? IndVariant::Sp : IndVariant::Spo);
  }
  if (id == "lemma-pq") {
    need({"--n", "--variant"});
    if (o.variant != "p" && o.variant != "q") throw PreconditionError("lemma-pq variant must be p or q");
    return verify_lemma_pq(o.n, o.variant == "p" ? PqVariant::P : PqVariant::Q);
  }
  if (id == "bkw-general") {
    need({"--n", "--m", "--r"});
    return verify_bkw_general(o.n, o.m, o.r);
  }
  if (id == "bkw-original") {
    need({"--n", "--m", "--r"});
    return verify_bkw_original(o.n, o.m, o.r);
  }
  if (id == "agreement") {
    need({"--family", "--n"});
    return verify_agreement(require_family(o.family), lambda(), o.n, o.m);
  }
  if (id == "odd-specialization") {
    need({"--n"});
    return verify_odd_specialization(lambda(), o.n);
  }
  if (id == "sp-denominator") {
    need({"--n"});
    return verify_sp_denominator(o.n);
  }
  if (id == "okada-denominator") {
    need({"--n"});
    return verify_okada_denominator(o.n);
  }
  if (id == "golden") {
    need({"--file"});
    std::ifstream in(o.file);
    if (!in) throw PreconditionError("cannot open golden file '" + o.file + "'");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("golden file is not valid JSON: ") + e.what());
    }
    return verify_golden(j, o.file);
  }
  throw PreconditionError("unknown identity '" + id + "'");
}

void print_reports(const std::vector<VerificationReport>& reports, bool json, std::ostream& out) {
  if (json) {
    out << to_json(reports).dump() << "\n";
    return;
  }
  for (const auto& r : reports) out << to_text(r) << "\n";
}

void diagnose(std::ostream& err, std::string_view prefix, std::string msg) {
  for (char& c : msg)
    if (c == '\n' || c == '\r') c = ' ';
  err << prefix << msg << "\n";
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return true;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact characters of classical groups and Lie superalgebras", "ospchar"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json"};

  auto* compute_cmd = app.add_subcommand("compute", "Evaluate a character by one method");
  compute_cmd->add_option("--family", o.family, "schur|hook|symplectic|orthosymplectic|odd_symplectic")->required();
  compute_cmd->add_option("--method", o.method, "tableau|jt|det|det_equiv|weyl|okada|sp_schur_sum|single_y")
      ->required();
  compute_cmd->add_option("--n", o.n, "size of X")->required()->check(CLI::NonNegativeNumber);
  compute_cmd->add_option("--m", o.m, "size of Y")->check(CLI::NonNegativeNumber);
  compute_cmd->add_option("--lambda", o.lambda, "partition, e.g. 3,2,2 (empty for the empty partition)");
  compute_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* enum_cmd = app.add_subcommand("enumerate", "List the tableaux of a family");
  enum_cmd->add_option("--family", o.family)->required();
  enum_cmd->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--m", o.m)->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--lambda", o.lambda);
  enum_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));
  enum_cmd->add_flag("--count", o.count_only, "print only the number of tableaux");

  auto* verify_cmd = app.add_subcommand("verify", "Check one identity instance");
  verify_cmd->add_option("--identity", o.identity)->required();
  verify_cmd->add_option("--family", o.family);
  verify_cmd->add_option("--lambda", o.lambda);
  verify_cmd->add_option("--n", o.n);
  verify_cmd->add_option("--m", o.m);
  verify_cmd->add_option("--r", o.r);
  verify_cmd->add_option("--l", o.l);
  verify_cmd->add_option("--n1", o.n1);
  verify_cmd->add_option("--n2", o.n2);
  verify_cmd->add_option("--variant", o.variant);
  verify_cmd->add_option("--seed", o.seed);
  verify_cmd->add_flag("--symbolic", o.symbolic);
  verify_cmd->add_option("--file", o.file);
  verify_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* suite_cmd = app.add_subcommand("suite", "Run every identity over a bounded grid");
  suite_cmd->add_option("--max-n", o.bounds.max_n)->required()->check(CLI::PositiveNumber);
  suite_cmd->add_option("--max-m", o.bounds.max_m)->required()->check(CLI::PositiveNumber);
  suite_cmd->add_option("--max-weight", o.bounds.max_weight)->required()->check(CLI::PositiveNumber);
  suite_cmd->add_flag("--json", o.json);
  suite_cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    diagnose(err, "error: ", e.what());
    return kUsage;
  }

  try {
    if (*compute_cmd) return do_compute(o, out);
    if (*enum_cmd) return do_enumerate(o, out);
    if (*verify_cmd) {
      std::vector<VerificationReport> reports{dispatch_verify(o, *verify_cmd)};
      print_reports(reports, o.format == "json", out);
      return all_passed(reports) ? kOk : kFailed;
    }
    auto reports = run_suite(o.bounds, o.threads);
    print_reports(reports, o.json, out);
    return all_passed(reports) ? kOk : kFailed;
  } catch (const PreconditionError& e) {
    diagnose(err, "error: ", e.what());
    return kUsage;
  } catch (const ParseError& e) {
    diagnose(err, "error: ", e.what());
    return kUsage;
  } catch (const RingMismatch& e) {
    diagnose(err, "error: ", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    diagnose(err, "internal error: ", e.what());
    return kFailed;
  }
}

}  // namespace ospchar::cli
