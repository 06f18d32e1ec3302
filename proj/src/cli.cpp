#include "modseries/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "modseries/covers.hpp"
#include "modseries/modforms.hpp"
#include "modseries/series_document.hpp"
#include "modseries/tate.hpp"
#include "modseries/verify.hpp"

namespace modseries::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  Exponent terms = 0;
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, Options& opts, Exponent default_terms, bool with_terms = true) {
  opts.terms = default_terms;
  if (with_terms) cmd->add_option("--terms", opts.terms, "number of coefficients")->capture_default_str();
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

ordered_json report_json(const VerificationReport& r) {
  ordered_json j;
  j["check"] = r.check;
  j["location"] = r.location;
  j["status"] = r.passed() ? "pass" : "fail";
  j["compared_through"] = r.compared_through;
  j["requested_through"] = r.requested_through;
  if (r.mismatch)
    j["mismatch"] = {{"order", r.mismatch->order},
                     {"expected", r.mismatch->expected},
                     {"actual", r.mismatch->actual}};
  else
    j["mismatch"] = nullptr;
  j["notes"] = r.notes;
  return j;
}

int cmd_verify(const std::string& suite_name, const Options& opts, std::ostream& out) {
  const auto suite = verify::parse_suite(suite_name);
  if (!suite) throw UsageError("unknown suite '" + suite_name + "'");
  if (opts.terms < verify::kMinTerms)
    throw UsageError("verify needs --terms >= " + std::to_string(verify::kMinTerms));
  const auto reports = verify::run_suite(*suite, opts.terms);
  const auto failed = std::count_if(reports.begin(), reports.end(),
                                    [](const auto& r) { return !r.passed(); });
  if (opts.json()) {
    ordered_json j;
    j["suite"] = suite_name;
    j["terms"] = opts.terms;
    j["passed"] = failed == 0;
    j["reports"] = ordered_json::array();
    for (const auto& r : reports) j["reports"].push_back(report_json(r));
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << (r.passed() ? "PASS  " : "FAIL  ") << r.check << "  [" << r.location << "]\n";
      if (r.mismatch)
        out << "      order " << r.mismatch->order << ": expected " << r.mismatch->expected
            << ", got " << r.mismatch->actual << "\n";
      else if (r.compared_through > 0)
        out << "      compared through order " << r.compared_through << "\n";
      for (const auto& n : r.notes) out << "      " << n << "\n";
    }
    out << reports.size() << " checks, " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitFailed;
}

const std::map<std::string, std::function<PuiseuxSeries(Exponent)>>& expansions() {
  // --terms counts coefficient slots starting at the leading exponent.
  static const std::map<std::string, std::function<PuiseuxSeries(Exponent)>> table{
      {"h", [](Exponent t) { return PuiseuxSeries::lift(modforms::hauptmodul_h(t - 1), 1); }},
      {"j", [](Exponent t) { return PuiseuxSeries::lift(modforms::j_expansion(t - 1), 1); }},
      {"euler", [](Exponent t) { return PuiseuxSeries::lift(modforms::euler_kernel(t), 1); }},
      {"q-in-hinv", [](Exponent t) { return PuiseuxSeries::lift(modforms::q_in_hinv(t + 1), 1); }},
      {"alpha", [](Exponent t) { return PuiseuxSeries::lift(tate::deuring_alpha(t), 1); }},
      {"tate-q",
       [](Exponent t) {
         const auto inv = weierstrass_invariants(tate::deuring_curve(std::max<Exponent>(t + 2, 2)));
         return PuiseuxSeries::lift(tate::tate_parameter(inv.j, t + 1), 1);
       }},
      {"lambda", [](Exponent t) { return PuiseuxSeries::lift(tate::legendre_lambda(t), 1); }},
  };
  return table;
}

int cmd_expand(const std::string& object, const Options& opts, std::ostream& out) {
  const auto& table = expansions();
  const auto it = table.find(object);
  if (it == table.end()) throw UsageError("unknown object '" + object + "'");
  if (opts.terms < 1) throw UsageError("expand needs --terms >= 1");
  const PuiseuxSeries s = it->second(opts.terms);
  const SeriesDocument doc = SeriesDocument::from_series(s);
  if (opts.json()) {
    out << doc.to_json() << "\n";
    return kExitOk;
  }
  out << object << " = " << s.to_string() << "\n";
  for (const auto& [e, c] : doc.coefficients) out << "  " << e << "\t" << c << "\n";
  return kExitOk;
}

int cmd_invariants(const std::string& group, long level, const Options& opts, std::ostream& out) {
  covers::GroupKind kind;
  try {
    kind = covers::parse_group_kind(group);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (level < 1) throw UsageError("level must be >= 1");
  const auto inv = covers::congruence_invariants(kind, level);
  const std::vector<std::pair<std::string, long>> rows{
      {"level", inv.level}, {"index", inv.index}, {"cusps", inv.cusps},
      {"nu2", inv.nu2},     {"nu3", inv.nu3},     {"genus", inv.genus}};
  if (opts.json()) {
    ordered_json j;
    j["group"] = covers::to_string(kind);
    for (const auto& [k, v] : rows) j[k] = v;
    out << j.dump() << "\n";
  } else {
    out << "group\t" << covers::to_string(kind) << "\n";
    for (const auto& [k, v] : rows) out << k << "\t" << v << "\n";
  }
  return kExitOk;
}

int cmd_torsion(long n, const Options& opts, std::ostream& out) {
  if (n < 1 || n > 4) throw UsageError("torsion level exponent n must be in 1..4");
  if (opts.terms < 1) throw UsageError("torsion needs --terms >= 1");
  const auto res = tate::torsion_parameters(static_cast<unsigned>(n), opts.terms);
  const auto& gen = res.parameters.at(1);
  const auto& cert = res.certificate;
  const std::string m = gen.monomial_exponent.get_str();
  if (opts.json()) {
    ordered_json j;
    j["n"] = n;
    j["constant"] = gen.constant.to_string();
    j["constant_rational"] = gen.constant.is_rational();
    j["monomial_exponent"] = m;
    j["unit"] = ordered_json::parse(SeriesDocument::from_series(gen.unit).to_json());
    j["q_unit"] = ordered_json::parse(SeriesDocument::from_series(res.decomposition.unit).to_json());
    j["representatives"] = res.parameters.size();
    j["certificate"] = {{"unit_constant_one", cert.unit_constant_one},
                        {"exponent_on_lattice", cert.exponent_on_lattice},
                        {"generator_power_back", cert.generator_power_back},
                        {"constant_power_back", cert.constant_power_back},
                        {"ok", cert.ok()}};
    out << j.dump() << "\n";
  } else {
    const auto yes = [](bool b) { return b ? "yes" : "no"; };
    out << "q = " << res.decomposition.constant.to_string() << " * pi * u\n";
    out << "u = " << res.decomposition.unit.to_string() << "\n";
    out << "q^(" << m << ") = " << gen.constant.to_string() << " * pi^(" << m << ") * u^(" << m
        << ")\n";
    out << "u^(" << m << ") = " << gen.unit.to_string() << "\n";
    out << "representatives: " << res.parameters.size()
        << " (q^(b/3^n) for b in Z/3^n, and eta)\n";
    out << "certificate:\n"
        << "  unit constant term 1: " << yes(cert.unit_constant_one) << "\n"
        << "  exponent in (1/3^n)Z: " << yes(cert.exponent_on_lattice) << "\n"
        << "  unit power-back: " << yes(cert.generator_power_back) << "\n"
        << "  constant power-back: " << yes(cert.constant_power_back) << "\n";
  }
  return cert.ok() ? kExitOk : kExitFailed;
}

ProjectivePoint parse_point(const std::string& text) {
  if (text == "inf") return ProjectivePoint::infinity();
  try {
    return parse_rat(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("fiber point must be a rational number or 'inf', got '" + text + "'");
  }
}

int cmd_ramification(const std::string& point, const Options& opts, std::ostream& out) {
  const ProjectivePoint y = parse_point(point);
  const auto profile = covers::ramification_profile(covers::branch_map(), y);
  const auto mult = profile.multiplicities();
  if (opts.json()) {
    ordered_json j;
    j["point"] = y.to_string();
    j["profile"] = mult;
    j["points"] = ordered_json::array();
    for (const auto& p : profile.points) {
      std::string where = p.at_infinity ? "inf"
                          : std::holds_alternative<Rat>(p.where)
                              ? std::get<Rat>(p.where).get_str()
                              : std::get<Polynomial>(p.where).to_string();
      j["points"].push_back({{"where", where}, {"multiplicity", p.multiplicity}, {"count", p.count}});
    }
    out << j.dump() << "\n";
  } else {
    out << "fiber over " << y.to_string() << ":\n";
    for (const auto& p : profile.points) out << "  " << p.describe() << "\n";
    out << "profile {";
    for (std::size_t i = 0; i < mult.size(); ++i) out << (i ? "," : "") << mult[i];
    out << "}\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact formal-series computations for the level-3 Hauptmodul and the Deuring curve",
               "modseries"};
  app.require_subcommand(1);

  Options verify_opts, expand_opts, invariants_opts, torsion_opts, ramification_opts;
  std::string suite, object, group, point;
  long level = 0, n = 0;

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "all | identity | tate | covers | torsion | legendre")->required();
  add_common(verify_cmd, verify_opts, verify::kDefaultTerms);

  auto* expand_cmd = app.add_subcommand("expand", "print a series expansion");
  expand_cmd->add_option("object", object, "h | j | euler | q-in-hinv | alpha | tate-q | lambda")->required();
  add_common(expand_cmd, expand_opts, 10);

  auto* invariants_cmd = app.add_subcommand("invariants", "congruence subgroup invariants");
  invariants_cmd->add_option("group", group, "full | gamma0 | gamma1")->required();
  invariants_cmd->add_option("level", level, "level N >= 1")->required();
  add_common(invariants_cmd, invariants_opts, 0, false);

  auto* torsion_cmd = app.add_subcommand("torsion", "3^n-torsion parameters of the Tate curve");
  torsion_cmd->add_option("n", n, "1..4")->required();
  add_common(torsion_cmd, torsion_opts, 10);

  auto* ramification_cmd = app.add_subcommand("ramification", "fiber of the branch map");
  ramification_cmd->add_option("point", point, "0 | 1728 | inf (any rational)")->required();
  add_common(ramification_cmd, ramification_opts, 0, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "modseries: " << e.what() << "\n" << "run 'modseries --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(suite, verify_opts, out);
    if (*expand_cmd) return cmd_expand(object, expand_opts, out);
    if (*invariants_cmd) return cmd_invariants(group, level, invariants_opts, out);
    if (*torsion_cmd) return cmd_torsion(n, torsion_opts, out);
    if (*ramification_cmd) return cmd_ramification(point, ramification_opts, out);
  } catch (const UsageError& e) {
    err << "modseries: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "modseries: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace modseries::cli
