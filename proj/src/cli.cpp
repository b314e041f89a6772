#include "tdual/cli.hpp"

#include "tdual/errors.hpp"
#include "tdual/gamma_point.hpp"
#include "tdual/group_cohomology.hpp"
#include "tdual/rep_ring_k.hpp"
#include "tdual/seifert.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <functional>
#include <numeric>
#include <ostream>

namespace tdual::cli {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Serialization

void to_json(json& j, const ComputationResult& r) {
  j = json{{"command", r.command},
           {"inputs", r.inputs},
           {"result", r.result},
           {"warnings", r.warnings}};
}

void from_json(const json& j, ComputationResult& r) {
  j.at("command").get_to(r.command);
  r.inputs = j.at("inputs");
  r.result = j.at("result");
  j.at("warnings").get_to(r.warnings);
}

std::string ComputationResult::serialize() const { return json(*this).dump(2) + "\n"; }

ComputationResult ComputationResult::parse(const std::string& text) {
  return json::parse(text).get<ComputationResult>();
}

json integer_to_json(const Integer& x) {
  if (auto small = to_int64(x)) return *small;
  return x.str();
}

json group_to_json(const FgAbGroup& g) {
  json torsion = json::array();
  for (const Integer& d : g.torsion()) torsion.push_back(integer_to_json(d));
  return {{"free_rank", g.free_rank()}, {"torsion", torsion}};
}

FgAbGroup group_from_json(const json& j) {
  std::vector<Integer> torsion;
  for (const json& d : j.at("torsion"))
    torsion.emplace_back(d.is_string() ? Integer(d.get<std::string>())
                                       : Integer(d.get<std::int64_t>()));
  return FgAbGroup(j.at("free_rank").get<std::size_t>(), std::move(torsion));
}

namespace {

// ---------------------------------------------------------------------------
// Argument helpers

struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t parse_int64(const std::string& token, const std::string& what) {
  std::int64_t v = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last)
    throw ArgumentError(what + ": '" + token + "' is not an integer");
  return v;
}

Integer parse_integer(const std::string& token, const std::string& what) {
  std::size_t i = (!token.empty() && (token[0] == '-' || token[0] == '+')) ? 1 : 0;
  if (i == token.size()) throw ArgumentError(what + ": '" + token + "' is not an integer");
  for (std::size_t k = i; k < token.size(); ++k)
    if (token[k] < '0' || token[k] > '9')
      throw ArgumentError(what + ": '" + token + "' is not an integer");
  Integer v(token.substr(i));
  return token[0] == '-' ? Integer(-v) : v;
}

std::vector<std::int64_t> parse_list(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_int64(text.substr(start, comma - start), what));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<Integer> parse_integer_list(const std::string& text, const std::string& what) {
  std::vector<Integer> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_integer(text.substr(start, comma - start), what));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void require_order_arg(std::int64_t n, const std::string& flag) {
  if (n < 1) throw ValidationError(flag + " must be >= 1, got " + std::to_string(n));
}

// Reduces a residue argument and records a warning when it changed.
std::int64_t normalize_residue(std::int64_t value, std::int64_t n, const std::string& name,
                               std::vector<std::string>& warnings) {
  const std::int64_t r = mod_floor(value, n);
  if (r != value)
    warnings.push_back(name + " = " + std::to_string(value) + " normalized to " +
                       std::to_string(r) + " mod " + std::to_string(n));
  return r;
}

json gamma_pair_json(const GammaPointPair& p) { return {{"n", p.n}, {"q", p.q}, {"s", p.s}}; }

json h2_json(const H2Element& x) {
  return {{"free", integer_to_json(x.free_part)}, {"torsion", x.torsion}};
}

json seifert_pair_json(const SeifertPair& p) {
  return {{"genus", p.base.genus}, {"cones", p.base.cone_orders}, {"e", integer_to_json(p.e)},
          {"chi", p.chi},          {"f", integer_to_json(p.f)},   {"a", p.a}};
}

json invariants_json(const ClassificationInvariants& inv) {
  return {{"c1", h2_json(inv.c1)}, {"pushforward", h2_json(inv.pushforward)}};
}

// Residue lists normalized per cone point, with warnings for changed entries.
std::vector<std::int64_t> normalize_residues(const std::vector<std::int64_t>& values,
                                             const std::vector<std::int64_t>& orders,
                                             const std::string& name,
                                             std::vector<std::string>& warnings) {
  if (values.size() != orders.size())
    throw ValidationError("--" + name + " has " + std::to_string(values.size()) +
                          " entries, --cones has " + std::to_string(orders.size()));
  std::vector<std::int64_t> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    require_order_arg(orders[i], "cone order " + std::to_string(i + 1));
    out[i] = normalize_residue(values[i], orders[i], name + "_" + std::to_string(i + 1),
                               warnings);
  }
  return out;
}

SeifertBase parse_base(std::int64_t genus, const std::string& cones) {
  SeifertBase base{genus, parse_list(cones, "--cones")};
  if (auto why = seifert_base_violation(base)) throw ValidationError(*why);
  return base;
}

ComputationResult started(std::string command) {
  ComputationResult r;
  r.command = std::move(command);
  return r;
}

const char* kUncompletedWarning =
    "algebraic (uncompleted) value; the completed groups are only established for "
    "coprime q";

}  // namespace

const std::vector<std::string>& subcommand_table() {
  static const std::vector<std::string> table = {
      "tdual gamma-point", "tdual seifert",  "cohomology bgamma",
      "cohomology seifert-base", "h3 gamma-point", "h3 seifert",
      "ktheory gamma-dual", "chern seifert",  "thom"};
  return table;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact calculator for topological T-duality over Gamma-points and "
               "Seifert-fibered 2-orbispaces",
               "tdualcalc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // Raw option storage; each leaf subcommand installs `action`.
  std::int64_t n = 0, q = 0, s = 0, q0 = 0, q1 = 0, genus = 0;
  int degree = 0;
  bool oracle = false, via_mv = false;
  std::string cones, chi, a, phi, e_text = "0", f_text = "0", c_text = "0";
  std::function<ComputationResult()> action;

  auto add_cones = [&](CLI::App* sub) {
    sub->add_option("--genus", genus, "Genus of the base surface")->default_val(0);
    sub->add_option("--cones", cones, "Comma-separated cone orders n1,n2,...");
  };

  // tdual ...
  CLI::App* tdual_cmd = app.add_subcommand("tdual", "Compute the T-dual pair");
  tdual_cmd->require_subcommand(1);
  {
    CLI::App* sub = tdual_cmd->add_subcommand("gamma-point", "Pair (n, q, s) over [*/Z/n]");
    sub->add_option("--n", n, "Group order")->required();
    sub->add_option("--q", q, "Character residue (c_1 of E)")->required();
    sub->add_option("--s", s, "Residue of h in H^3(E)")->required();
    sub->callback([&] {
      action = [&] {
        ComputationResult r = started("tdual gamma-point");
        require_order_arg(n, "--n");
        const auto pair = GammaPointPair::normalized(n, normalize_residue(q, n, "q", r.warnings),
                                                     normalize_residue(s, n, "s", r.warnings));
        r.inputs = gamma_pair_json(pair);
        const GammaPointPair dual = tdualize_gamma_point(pair);
        r.result = {{"dual", gamma_pair_json(dual)},
                    {"c1", character_to_chern(Character(n, pair.q))},
                    {"dual_c1", character_to_chern(Character(n, dual.q))},
                    {"h3", group_to_json(h3_total_space(n, pair.q).group)},
                    {"dual_h3", group_to_json(h3_total_space(n, dual.q).group)}};
        return r;
      };
    });
  }
  {
    CLI::App* sub = tdual_cmd->add_subcommand("seifert", "Pair over a Seifert base");
    add_cones(sub);
    sub->add_option("--e", e_text, "Free component of c_1(E)");
    sub->add_option("--chi", chi, "Comma-separated torsion components of c_1(E)");
    sub->add_option("--f", f_text, "Free component of pi_!(h)");
    sub->add_option("--a", a, "Comma-separated torsion components of pi_!(h)");
    sub->callback([&] {
      action = [&] {
        ComputationResult r = started("tdual seifert");
        SeifertBase base = parse_base(genus, cones);
        auto chi_v = normalize_residues(parse_list(chi, "--chi"), base.cone_orders, "chi",
                                        r.warnings);
        auto a_v =
            normalize_residues(parse_list(a, "--a"), base.cone_orders, "a", r.warnings);
        const SeifertPair pair{base, parse_integer(e_text, "--e"), std::move(chi_v),
                               parse_integer(f_text, "--f"), std::move(a_v)};
        r.inputs = seifert_pair_json(pair);
        const SeifertPair dual = tdualize_seifert(pair);
        r.result = {{"dual", seifert_pair_json(dual)},
                    {"invariants", invariants_json(classification_invariants(pair))},
                    {"dual_invariants", invariants_json(classification_invariants(dual))},
                    {"h3", group_to_json(h3_total(pair))},
                    {"dual_h3", group_to_json(h3_total(dual))}};
        return r;
      };
    });
  }

  // cohomology ...
  CLI::App* coh_cmd = app.add_subcommand("cohomology", "Integral cohomology groups");
  coh_cmd->require_subcommand(1);
  {
    CLI::App* sub = coh_cmd->add_subcommand("bgamma", "H^d(BZ/n, Z)");
    sub->add_option("--n", n, "Group order")->required();
    sub->add_option("--degree", degree, "Cohomological degree")->required();
    sub->add_flag("--oracle", oracle, "Recompute from the bar complex and compare");
    sub->callback([&] {
      action = [&] {
        ComputationResult r = started("cohomology bgamma");
        require_order_arg(n, "--n");
        if (degree < 0) throw ValidationError("--degree must be >= 0");
        r.inputs = {{"n", n}, {"degree", degree}, {"oracle", oracle}};
        const CyclicGroup g(n);
        const FgAbGroup closed = cohomology_bgamma(g, degree);
        r.result = {{"group", group_to_json(closed)}};
        if (oracle) {
          const FgAbGroup bar = cohomology_bgamma_oracle(g, degree);
          r.result["oracle"] = group_to_json(bar);
          if (!groups_isomorphic(closed, bar))
            throw ValidationError("bar-complex oracle disagrees: closed form " +
                                  closed.to_string() + ", bar complex " + bar.to_string());
          r.result["agrees"] = true;
        }
        return r;
      };
    });
  }
  {
    CLI::App* sub = coh_cmd->add_subcommand("seifert-base", "H^l(B, Z) of a Seifert base");
    add_cones(sub);
    sub->add_option("--degree", degree, "Cohomological degree")->required();
    sub->callback([&] {
      action = [&] {
        ComputationResult r = started("cohomology seifert-base");
        const SeifertBase base = parse_base(genus, cones);
        if (degree < 0) throw ValidationError("--degree must be >= 0");
        r.inputs = {{"genus", base.genus}, {"cones", base.cone_orders}, {"degree", degree}};
        r.result = {{"group", group_to_json(cohomology_base(base, degree))}};
        return r;
      };
    });
  }

  // h3 ...
  CLI::App* h3_cmd = app.add_subcommand("h3", "Degree-3 cohomology of the total space");
  h3_cmd->require_subcommand(1);
  {
    CLI::App* sub = h3_cmd->add_subcommand("gamma-point", "H^3(E) for E over [*/Z/n]");
    sub->add_option("--n", n, "Group order")->required();
    sub->add_option("--q", q, "Character residue")->required();
    sub->callback([&] {
      action = [&] {
        ComputationResult r = started("h3 gamma-point");
        require_order_arg(n, "--n");
        const std::int64_t qn = normalize_residue(q, n, "q", r.warnings);
        r.inputs = {{"n", n}, {"q", qn}};
        const GammaPointH3 h3 = h3_total_space(n, qn);
        r.result = {{"group", group_to_json(h3.group)}, {"generator", h3.generator}};
        return r;
      };
    });
  }
  {
    CLI::App* sub = h3_cmd->add_subcommand("seifert", "H^3(E) for E over a Seifert base");
    add_cones(sub);
    sub->add_option("--chi", chi, "Comma-separated torsion components of c_1(E)");
    sub->callback([&] {
      action = [&] {
        ComputationResult r = started("h3 seifert");
        SeifertBase base = parse_base(genus, cones);
        auto chi_v = normalize_residues(parse_list(chi, "--chi"), base.cone_orders, "chi",
                                        r.warnings);
        r.inputs = {{"genus", base.genus}, {"cones", base.cone_orders}, {"chi", chi_v}};
        const std::vector<std::int64_t> zeros(chi_v.size(), 0);
        const SeifertPair pair{std::move(base), 0, std::move(chi_v), 0, zeros};
        r.result = {{"group", group_to_json(h3_total(pair))}};
        return r;
      };
    });
  }

  // ktheory ...
  CLI::App* k_cmd = app.add_subcommand("ktheory", "Twisted Borel K-theory");
  k_cmd->require_subcommand(1);
  {
    CLI::App* sub =
        k_cmd->add_subcommand("gamma-dual", "K^*(E^, H^) for the dual of (n, q, 0)");
    sub->add_option("--n", n, "Group order")->required();
    sub->add_option("--q", q, "Character residue of the original bundle")->required();
    sub->add_flag("--via-mv", via_mv, "Use the full Mayer-Vietoris block matrix");
    sub->callback([&] {
      action = [&] {
        ComputationResult r = started("ktheory gamma-dual");
        require_order_arg(n, "--n");
        const std::int64_t qn = normalize_residue(q, n, "q", r.warnings);
        r.inputs = {{"n", n}, {"q", qn}, {"via_mv", via_mv}};
        const KGroups k = via_mv ? borel_k_via_mv(n, qn) : borel_k_of_dual(n, qn);
        const bool coprime = std::gcd(n, qn) == 1;
        r.result = {{"K0", group_to_json(k.k0)},
                    {"K1", group_to_json(k.k1)},
                    {"model", "algebraic (uncompleted)"},
                    {"method", via_mv ? "mayer-vietoris block matrix"
                                      : "kernel/cokernel of ([-q]-1)"},
                    {"coprime", coprime},
                    {"matches_untwisted", k == k_untwisted_free_quotient()}};
        if (!coprime) r.warnings.emplace_back(kUncompletedWarning);
        return r;
      };
    });
  }

  // chern ...
  CLI::App* chern_cmd = app.add_subcommand("chern", "First Chern class from construction data");
  chern_cmd->require_subcommand(1);
  {
    CLI::App* sub = chern_cmd->add_subcommand("seifert", "c_1(E) over a Seifert base");
    add_cones(sub);
    sub->add_option("--c", c_text, "Degree of the clutching map at the smooth point");
    sub->add_option("--phi", phi, "Comma-separated clutching degrees at the cone points");
    sub->callback([&] {
      action = [&] {
        ComputationResult r = started("chern seifert");
        SeifertBase base = parse_base(genus, cones);
        SeifertConstruction con{base, parse_integer(c_text, "--c"),
                                parse_integer_list(phi, "--phi")};
        json degrees = json::array();
        for (const Integer& d : con.phi_degrees) degrees.push_back(integer_to_json(d));
        r.inputs = {{"genus", base.genus},
                    {"cones", base.cone_orders},
                    {"c", integer_to_json(con.c)},
                    {"phi", degrees}};
        const ChernClass c1 = chern_from_construction(con);
        r.result = {{"e", integer_to_json(c1.e)},
                    {"chi", c1.chi},
                    {"degenerate_kernel", c1.degenerate_kernel}};
        if (c1.degenerate_kernel)
          r.warnings.emplace_back(
              "c + sum deg(phi_i)/n_i = 0: the solvable subgroup is trivial, e = 0");
        return r;
      };
    });
  }

  // thom
  {
    CLI::App* sub = app.add_subcommand("thom", "Thom class of L_0 + L_1 over [*/Z/n]");
    sub->add_option("--n", n, "Group order")->required();
    sub->add_option("--q0", q0, "Character residue of L_0")->required();
    sub->add_option("--q1", q1, "Character residue of L_1")->required();
    sub->callback([&] {
      action = [&] {
        ComputationResult r = started("thom");
        require_order_arg(n, "--n");
        const std::int64_t a0 = normalize_residue(q0, n, "q0", r.warnings);
        const std::int64_t a1 = normalize_residue(q1, n, "q1", r.warnings);
        r.inputs = {{"n", n}, {"q0", a0}, {"q1", a1}};
        r.result = thom_exists(n, a0, a1);
        return r;
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  if (!action) {
    err << "error: no subcommand selected\n";
    return kParseError;
  }
  try {
    out << action().serialize();
    return kSuccess;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const OracleGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kOracleRefused;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationFailure;
  }
}

}  // namespace tdual::cli
