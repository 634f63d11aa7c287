#include "mobkit/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <functional>
#include <ostream>
#include <sstream>

#include "mobkit/arith.hpp"
#include "mobkit/dirichlet.hpp"
#include "mobkit/finfield.hpp"
#include "mobkit/inclexcl.hpp"
#include "mobkit/intpoly.hpp"
#include "mobkit/permgroup.hpp"
#include "mobkit/poset.hpp"
#include "mobkit/serialize.hpp"

namespace mobkit::cli {

namespace {

using serialize::Json;

inline constexpr int kFormatVersion = 1;
inline constexpr unsigned kMaxDerangementN = 100'000;
inline constexpr std::uint64_t kDefaultZetaTerms = 1'000'000;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  Json inputs = Json::object();
  Json result = Json::object();
  std::string plain;
};

BigInt parse_integer(const std::string& text, const std::string& name) {
  BigInt v;
  std::string digits = text;
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  if (digits.empty() || digits.find_first_not_of("-0123456789") != std::string::npos ||
      v.set_str(digits, 10) != 0) {
    throw UsageError(name + " must be an integer, got '" + text + "'");
  }
  return v;
}

std::uint64_t parse_small(const std::string& text, const std::string& name) {
  const BigInt v = parse_integer(text, name);
  if (v < 0) throw DomainError(name + " must be nonnegative, got " + v.get_str());
  if (!v.fits_ulong_p()) throw CapError(name + " = " + v.get_str() + " is too large");
  return v.get_ui();
}

unsigned parse_unsigned(const std::string& text, const std::string& name) {
  const auto v = parse_small(text, name);
  if (v > 0xffffffffull) throw CapError(name + " = " + std::to_string(v) + " is too large");
  return static_cast<unsigned>(v);
}

double parse_real(const std::string& text, const std::string& name) {
  double v = 0;
  const char* first = text.data();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(name + " must be a real number, got '" + text + "'");
  }
  return v;
}

finfield::Rep parse_modulus(const std::string& text) {
  finfield::Rep rep;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto v = parse_small(item, "modulus coefficient");
    if (v > 0xffffffffull) throw DomainError("modulus coefficient too large");
    rep.push_back(static_cast<finfield::Residue>(v));
  }
  if (rep.empty()) throw UsageError("modulus must be a comma-separated coefficient list");
  return rep;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

std::vector<std::string> split_generators(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) out.push_back(item);
  if (out.empty()) out.push_back("()");
  return out;
}

Json residues_json(const finfield::Rep& rep) {
  Json out = Json::array();
  for (auto r : rep) out.push_back(r);
  return out;
}

Outcome group_outcome(const permgroup::PermSet& group) {
  Outcome o;
  Json elements = Json::array();
  std::vector<std::string> lines{"order: " + std::to_string(group.size())};
  for (const auto& p : group) {
    elements.push_back(p.to_cycle_string());
    lines.push_back(p.to_cycle_string());
  }
  o.result = Json{{"degree", group.degree()}, {"order", group.size()}, {"elements", std::move(elements)}};
  o.plain = join(lines, "\n");
  return o;
}

permgroup::PermSet named_group(const std::string& name, unsigned degree) {
  if (degree > permgroup::kMaxGenerateDegree) {
    throw CapError("group degree " + std::to_string(degree) + " exceeds cap " +
                   std::to_string(permgroup::kMaxGenerateDegree));
  }
  return name == "Sn" ? permgroup::symmetric_group(degree) : permgroup::alternating_group(degree);
}

std::string identity_line(const permgroup::IdentityCheck& check) {
  std::string line = check.identity + ": " + (check.holds ? "holds" : "fails") + " (" +
                     std::to_string(check.tuples_checked) + " tuples)";
  if (check.counterexample) {
    std::vector<std::string> pts;
    for (unsigned x : *check.counterexample) pts.push_back(std::to_string(x));
    line += "; first failure at " + join(pts, " ") + ", right side is " + check.counterexample_value;
  }
  return line;
}

Json identity_json(const permgroup::IdentityCheck& check) {
  Json out{{"identity", check.identity}, {"holds", check.holds}, {"tuples_checked", check.tuples_checked}};
  if (check.counterexample) {
    out["counterexample"] = *check.counterexample;
    out["counterexample_value"] = check.counterexample_value;
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

std::string format_double(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mobius inversion toolkit: arithmetic functions, cyclotomic and finite-field "
               "polynomials, posets, inclusion-exclusion, zeta bounds and permutation groups.",
               "mobkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  bool plain = false;
  auto* json_flag = app.add_flag("--json", json, "Emit a JSON envelope");
  auto* plain_flag = app.add_flag("--plain", plain, "Emit plain text (default)");
  json_flag->excludes(plain_flag);

  std::string command;
  std::function<Outcome()> action;
  const auto on = [&](CLI::App* sub, std::function<Outcome()> fn) {
    sub->callback([&, sub, fn] {
      command = sub->get_name();
      action = fn;
    });
  };

  std::string a1, a2, a3;
  std::string file, values_file;
  std::string modulus_a, modulus_b, gens, gen, ambient = "An", convention = "right-first";
  std::string n_terms_text = std::to_string(kDefaultZetaTerms);
  bool verify = false;

  const auto unary = [&](const char* name, const char* help, const char* arg, std::function<Outcome()> fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option(arg, a1, arg)->required();
    on(sub, std::move(fn));
    return sub;
  };

  unary("mobius", "Mobius function mu(N)", "N", [&] {
    const BigInt n = parse_integer(a1, "N");
    const int mu = arith::mobius(n);
    return Outcome{{{"N", n.get_str()}}, {{"value", mu}}, std::to_string(mu)};
  });
  unary("phi", "Euler totient phi(N)", "N", [&] {
    const BigInt n = parse_integer(a1, "N");
    const BigInt phi = arith::euler_phi(n);
    return Outcome{{{"N", n.get_str()}}, {{"value", phi.get_str()}}, phi.get_str()};
  });
  unary("divisors", "Divisors of N in increasing order", "N", [&] {
    const BigInt n = parse_integer(a1, "N");
    std::vector<std::string> ds;
    for (const auto& d : arith::divisors(n)) ds.push_back(d.get_str());
    return Outcome{{{"N", n.get_str()}}, {{"divisors", ds}}, join(ds, " ")};
  });

  {
    auto* sub = unary("cyclotomic", "Cyclotomic polynomial Phi_N", "N", [&] {
      const BigInt n = parse_integer(a1, "N");
      const auto f = intpoly::cyclotomic(n);
      Outcome o{{{"N", n.get_str()}, {"verify", verify}},
                {{"coefficients", serialize::to_json(f)}, {"degree", f.degree()}, {"text", f.to_string()}},
                f.to_string()};
      if (verify) {
        const bool ok = intpoly::verify_product_identity(n);
        o.result["product_identity"] = ok;
        o.plain += std::string("\nproduct of Phi_d over d | N equals x^N - 1: ") + (ok ? "true" : "false");
      }
      return o;
    });
    sub->add_flag("--verify", verify, "Also check the product of Phi_d over d | N against x^N - 1");
  }

  {
    auto* sub = app.add_subcommand("count-irreducible", "Number of monic irreducibles of degree N over F_Q");
    sub->add_option("Q", a1, "Field size (a prime power)")->required();
    sub->add_option("N", a2, "Degree")->required();
    on(sub, [&] {
      const BigInt q = parse_integer(a1, "Q");
      const BigInt n = parse_integer(a2, "N");
      const BigInt count = finfield::count_irreducible(q, n);
      return Outcome{{{"Q", q.get_str()}, {"N", n.get_str()}}, {{"count", count.get_str()}}, count.get_str()};
    });
  }

  {
    auto* sub = app.add_subcommand("enumerate-irreducible",
                                   "List monic irreducibles of degree N over F_{P^M} in lexicographic order");
    sub->add_option("P", a1, "Characteristic")->required();
    sub->add_option("M", a2, "Extension degree of the coefficient field")->required();
    sub->add_option("N", a3, "Polynomial degree")->required();
    on(sub, [&] {
      const auto p = parse_small(a1, "P");
      const auto m = parse_unsigned(a2, "M");
      const auto n = parse_unsigned(a3, "N");
      const auto field = finfield::make_field(p, m);
      const auto polys = finfield::enumerate_irreducible(field, n);
      Json list = Json::array();
      std::vector<std::string> lines;
      for (const auto& f : polys) {
        list.push_back(serialize::to_json(f));
        lines.push_back(f.to_string());
      }
      return Outcome{{{"P", p}, {"M", m}, {"N", n}},
                     {{"field", serialize::field_to_json(*field)},
                      {"degree", n},
                      {"count", polys.size()},
                      {"polynomials", std::move(list)}},
                     join(lines, "\n")};
    });
  }

  {
    auto* sub = app.add_subcommand(
        "verify-field", "Check x^(q^N) - x against the product of irreducibles of degree dividing N over F_{P^M}");
    sub->add_option("P", a1, "Characteristic")->required();
    sub->add_option("M", a2, "Extension degree of the coefficient field")->required();
    sub->add_option("N", a3, "Degree")->required();
    on(sub, [&] {
      const auto p = parse_small(a1, "P");
      const auto m = parse_unsigned(a2, "M");
      const auto n = parse_unsigned(a3, "N");
      const auto field = finfield::make_field(p, m);
      const BigInt q(static_cast<unsigned long>(field->q()));
      const bool product = finfield::verify_xqn_factorization(field, n);
      BigInt weighted = 0;
      Json counts = Json::array();
      for (const auto& d : arith::divisors(BigInt(n))) {
        const BigInt formula = finfield::count_irreducible(q, d);
        const auto listed = finfield::enumerate_irreducible(field, static_cast<unsigned>(d.get_ui())).size();
        counts.push_back(Json{{"degree", d.get_ui()}, {"formula", formula.get_str()}, {"enumerated", listed}});
        weighted += d * formula;
      }
      BigInt qn;
      mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), n);
      const bool degree_identity = weighted == qn;
      return Outcome{{{"P", p}, {"M", m}, {"N", n}},
                     {{"field", serialize::field_to_json(*field)},
                      {"xqn_factorization", product},
                      {"degree_identity", degree_identity},
                      {"counts", std::move(counts)}},
                     std::string("x^(q^N) - x factorization: ") + (product ? "true" : "false") +
                         "\nq^N = sum over d | N of d I(d): " + (degree_identity ? "true" : "false")};
    });
  }

  {
    auto* sub = app.add_subcommand("find-generator", "Least generator of the multiplicative group of F_{P^M}");
    sub->add_option("P", a1, "Characteristic")->required();
    sub->add_option("M", a2, "Extension degree")->required();
    on(sub, [&] {
      const auto p = parse_small(a1, "P");
      const auto m = parse_unsigned(a2, "M");
      const auto field = finfield::make_field(p, m);
      const auto g = finfield::find_generator(field);
      return Outcome{{{"P", p}, {"M", m}},
                     {{"field", serialize::field_to_json(*field)},
                      {"generator", g.to_string()},
                      {"coeffs", residues_json(g.rep())},
                      {"index", g.index()},
                      {"order", g.order()}},
                     g.to_string()};
    });
  }

  {
    auto* sub = app.add_subcommand("field-iso", "Isomorphism between two models of F_{P^M}");
    sub->add_option("P", a1, "Characteristic")->required();
    sub->add_option("M", a2, "Extension degree")->required();
    sub->add_option("--modulus-a", modulus_a,
                    "Source modulus as ascending comma-separated coefficients (default: lex-least)");
    sub->add_option("--modulus-b", modulus_b,
                    "Target modulus as ascending comma-separated coefficients (default: lex-least)");
    on(sub, [&] {
      const auto p = parse_small(a1, "P");
      const auto m = parse_unsigned(a2, "M");
      const auto model = [&](const std::string& text) {
        if (text.empty()) return finfield::make_field(p, m);
        auto f = finfield::make_field_with_modulus(p, parse_modulus(text));
        if (f->m() != m) throw DomainError("modulus degree " + std::to_string(f->m()) + " is not M = " + std::to_string(m));
        return f;
      };
      const auto iso = finfield::find_isomorphism(model(modulus_a), model(modulus_b));
      return Outcome{{{"P", p}, {"M", m}, {"modulus_a", modulus_a}, {"modulus_b", modulus_b}},
                     {{"source", serialize::field_to_json(*iso.source())},
                      {"target", serialize::field_to_json(*iso.target())},
                      {"theta", iso.theta().to_string()},
                      {"theta_coeffs", residues_json(iso.theta().rep())}},
                     "w -> " + iso.theta().to_string()};
    });
  }

  {
    auto* sub = app.add_subcommand("poset-mobius", "Mobius function of a poset file on every pair x <= y");
    sub->add_option("FILE", file, "Poset JSON file")->required();
    on(sub, [&] {
      const auto p = serialize::poset_from_json(serialize::parse_file(file));
      const auto mu = poset::mobius_function(p);
      std::vector<std::string> order;
      std::vector<std::string> lines;
      for (std::size_t x : p->topo_order()) {
        order.push_back(p->label(x));
        for (std::size_t y : p->topo_order()) {
          if (p->leq(x, y)) lines.push_back("mu(" + p->label(x) + ", " + p->label(y) + ") = " + mu.at(x, y).get_str());
        }
      }
      return Outcome{{{"file", file}}, {{"elements", order}, {"mobius", serialize::to_json(mu)}}, join(lines, "\n")};
    });
  }

  {
    auto* sub = app.add_subcommand("poset-invert", "Recover f from g(x) = sum over y <= x of f(y)");
    sub->add_option("FILE", file, "Poset JSON file")->required();
    sub->add_option("VALUESFILE", values_file, "JSON object of g values")->required();
    on(sub, [&] {
      const auto p = serialize::poset_from_json(serialize::parse_file(file));
      const auto g = serialize::values_from_json(serialize::parse_file(values_file));
      const auto f = poset::mobius_invert(g, p);
      std::vector<std::string> lines;
      for (std::size_t x : p->topo_order()) lines.push_back(p->label(x) + ": " + f.at(p->label(x)).get_str());
      return Outcome{{{"file", file}, {"values_file", values_file}}, {{"f", serialize::to_json(f, *p)}},
                     join(lines, "\n")};
    });
  }

  unary("derangements", "Number of fixed-point-free permutations of N points", "N", [&] {
    const auto n = parse_small(a1, "N");
    if (n > kMaxDerangementN) {
      throw CapError("derangements: N = " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxDerangementN));
    }
    const BigInt d = inclexcl::count_derangements(static_cast<unsigned>(n));
    return Outcome{{{"N", n}}, {{"value", d.get_str()}}, d.get_str()};
  });

  {
    auto* sub = app.add_subcommand("inclusion-exclusion", "Union size of a set family by inclusion-exclusion");
    sub->add_option("FILE", file, "Set family JSON file")->required();
    on(sub, [&] {
      const auto fam = serialize::set_family_from_json(serialize::parse_file(file));
      const auto size = inclexcl::union_size_ie(fam);
      return Outcome{{{"file", file}},
                     {{"union_size", size},
                      {"direct_union_size", inclexcl::union_size_direct(fam)},
                      {"indicator_identity", inclexcl::verify_indicator_identity(fam)}},
                     std::to_string(size)};
    });
  }

  {
    auto* sub = app.add_subcommand("prob-union", "Probability of a union of events by inclusion-exclusion");
    sub->add_option("FILE", file, "Probability space JSON file")->required();
    on(sub, [&] {
      const auto space = serialize::prob_space_from_json(serialize::parse_file(file));
      const Rational pr = inclexcl::prob_union_ie(space);
      return Outcome{{{"file", file}},
                     {{"probability", serialize::to_json(pr)},
                      {"direct_probability", serialize::to_json(inclexcl::prob_union_direct(space))}},
                     serialize::to_json(pr).get<std::string>()};
    });
  }

  const auto zeta_args = [&](CLI::App* sub) {
    sub->add_option("RE", a1, "Real part of z (> 1)")->required();
    sub->add_option("IM", a2, "Imaginary part of z")->required();
    sub->add_option("--n-terms", n_terms_text, "Truncation index N")->capture_default_str();
  };
  const auto zeta_inputs = [&] {
    return Json{{"re_z", parse_real(a1, "RE")}, {"im_z", parse_real(a2, "IM")},
                {"N", parse_small(n_terms_text, "--n-terms")}};
  };

  {
    auto* sub = app.add_subcommand("zeta", "Truncated zeta sum with its error bounds");
    zeta_args(sub);
    on(sub, [&] {
      const Json in = zeta_inputs();
      const auto s = dirichlet::zeta_truncated({in["re_z"].get<double>(), in["im_z"].get<double>()},
                                               in["N"].get<std::uint64_t>());
      Json result = serialize::to_json(s);
      result["error_bound"] = s.error_bound();
      return Outcome{in, result,
                     format_double(s.partial_sum().real()) + " " + (std::signbit(s.partial_sum().imag()) ? "-" : "+") +
                         " " + format_double(std::abs(s.partial_sum().imag())) + "i\nerror bound: " +
                         format_double(s.error_bound())};
    });
  }

  {
    auto* sub = app.add_subcommand("zeta-bounds", "Check (s-1)/s < |zeta(z)| < s/(s-1), s = Re z");
    zeta_args(sub);
    on(sub, [&] {
      const Json in = zeta_inputs();
      const auto r = dirichlet::verify_zeta_bounds({in["re_z"].get<double>(), in["im_z"].get<double>()},
                                                   in["N"].get<std::uint64_t>());
      return Outcome{in, serialize::to_json(r),
                     "bounds: " + format_double(r.lower_bound) + " < |zeta(z)| < " + format_double(r.upper_bound) +
                         "\n|zeta(z)| in [" + format_double(r.abs_zeta.lo) + ", " + format_double(r.abs_zeta.hi) +
                         "]\nverdict: " + dirichlet::to_string(r.verdict) +
                         "\n|1/zeta(z)| <= zeta(Re z): " + dirichlet::to_string(r.reciprocal_verdict)};
    });
  }

  {
    auto* sub = unary("perm-identities", "Check (abc) = (bc)(ac) and (ab)(cd) = (acd)(acb) on all tuples", "N", [&] {
      const auto n = parse_unsigned(a1, "N");
      const auto conv =
          convention == "left-first" ? permgroup::Convention::kLeftFirst : permgroup::Convention::kRightFirst;
      const auto r = permgroup::verify_threecycle_identities(n, conv);
      Json identities = Json::array({identity_json(r.three_cycle), identity_json(r.double_transposition)});
      return Outcome{{{"N", n}, {"convention", convention}},
                     {{"convention", convention},
                      {"holds", r.holds()},
                      {"identities", std::move(identities)},
                      {"swapped_factors", identity_json(r.double_transposition_swapped)}},
                     identity_line(r.three_cycle) + "\n" + identity_line(r.double_transposition) + "\n" +
                         "both hold: " + (r.holds() ? "true" : "false")};
    });
    sub->add_option("--convention", convention, "Product order: right-first applies the right factor first")
        ->check(CLI::IsMember({"right-first", "left-first"}))
        ->capture_default_str();
  }

  {
    auto* sub = unary("perm-generate", "Group generated by permutations in cycle notation", "N", [&] {
      const auto n = parse_unsigned(a1, "N");
      permgroup::PermSet set(n);
      std::vector<std::string> parsed;
      for (const auto& text : split_generators(gens)) {
        const auto p = permgroup::Permutation::parse_cycles(n, text);
        set.insert(p);
        parsed.push_back(p.to_cycle_string());
      }
      auto o = group_outcome(permgroup::generate_group(set));
      o.inputs = Json{{"N", n}, {"gens", parsed}};
      return o;
    });
    sub->add_option("--gens", gens, "Generators separated by ';', e.g. \"(1 2 3);(1 2)\"")->required();
  }

  {
    auto* sub = unary("normal-closure", "Normal closure of one permutation in A_N or S_N", "N", [&] {
      const auto n = parse_unsigned(a1, "N");
      const auto g = permgroup::Permutation::parse_cycles(n, gen);
      if (n > permgroup::kMaxClosureDegree) {
        throw CapError("normal_closure: degree " + std::to_string(n) + " exceeds cap " +
                       std::to_string(permgroup::kMaxClosureDegree));
      }
      auto o = group_outcome(permgroup::normal_closure(permgroup::PermSet(n, {g}), named_group(ambient, n)));
      o.inputs = Json{{"N", n}, {"gen", g.to_cycle_string()}, {"ambient", ambient}};
      return o;
    });
    sub->add_option("--gen", gen, "Permutation in cycle notation")->required();
    sub->add_option("--ambient", ambient, "Ambient group")
        ->check(CLI::IsMember({"An", "Sn"}))
        ->capture_default_str();
  }

  {
    auto* sub = app.add_subcommand("solvable", "Whether S_N or A_N has a derived series ending in the identity");
    sub->add_option("GROUP", a1, "Sn or An")->required()->check(CLI::IsMember({"Sn", "An"}));
    sub->add_option("N", a2, "Degree")->required();
    on(sub, [&] {
      const auto n = parse_unsigned(a2, "N");
      const auto series = permgroup::derived_series(named_group(a1, n));
      std::vector<std::size_t> orders;
      for (const auto& g : series) orders.push_back(g.size());
      const bool solvable = series.back().size() == 1;
      std::vector<std::string> order_text;
      for (auto k : orders) order_text.push_back(std::to_string(k));
      return Outcome{{{"group", a1}, {"N", n}},
                     {{"solvable", solvable}, {"derived_series_orders", orders}},
                     std::string(solvable ? "true" : "false") + "\nderived series orders: " + join(order_text, " ")};
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsageError;
  }

  try {
    const Outcome o = action();
    if (json) {
      const Json envelope{{"command", command},
                          {"inputs", o.inputs},
                          {"result", o.result},
                          {"format_version", kFormatVersion}};
      out << envelope.dump(2) << "\n";
    } else {
      out << o.plain << "\n";
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace mobkit::cli
