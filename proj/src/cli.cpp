#include "kummer/cli.hpp"

#include "kummer/cyclotomic.hpp"
#include "kummer/divisors.hpp"
#include "kummer/errors.hpp"
#include "kummer/geometry.hpp"
#include "kummer/integer.hpp"
#include "kummer/json_io.hpp"
#include "kummer/oracle.hpp"
#include "kummer/periods.hpp"
#include "kummer/sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>

namespace kummer::cli {

namespace {

struct Config {
  int lambda = 0;
  std::string format = "text";
  bool allow_large = false;
  std::string coeffs, coeffs2;
  long k = 1;
  std::string xi, modulus, q;
  std::optional<int> shift;
  SearchBudget budget;
  long q_max = 0;
  std::string c1, c2;
  std::string a_axis, b_axis, x0;
};

// Flattened "key: value" lines carrying the same content as the JSON form.
void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
  auto scalar = [](const Json& v) -> std::string {
    if (v.is_null()) return "none";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  auto is_flat = [](const Json& arr) {
    return std::all_of(arr.begin(), arr.end(), [](const Json& v) { return v.is_primitive(); });
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix + it.key();
    const Json& v = it.value();
    if (v.is_object()) {
      render_text(v, key + ".", out);
    } else if (v.is_array() && is_flat(v)) {
      out << key << ": [";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
      out << "]\n";
    } else if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_object()) {
          render_text(v[i], key + "[" + std::to_string(i) + "].", out);
        } else if (v[i].is_array()) {
          out << key << "[" << i << "]: " << v[i].dump() << "\n";
        } else {
          out << key << "[" << i << "]: " << scalar(v[i]) << "\n";
        }
      }
    } else {
      out << key << ": " << scalar(v) << "\n";
    }
  }
}

void emit(const Config& cfg, const Json& j, std::ostream& out) {
  if (cfg.format == "json") {
    out << j.dump() << "\n";
  } else {
    render_text(j, "", out);
  }
}

void check_lambda(const Config& cfg) {
  require_valid_lambda(cfg.lambda);
  require(cfg.allow_large || cfg.lambda <= kDefaultLambdaCap,
          "lambda > " + std::to_string(kDefaultLambdaCap) + " needs --allow-large");
}

CyclotomicInteger subject(const Config& cfg, const std::string& text, const char* flag) {
  require(!text.empty(), std::string("missing ") + flag);
  return parse_cyclotomic(cfg.lambda, text);
}

mpz_class prime_q(const Config& cfg) {
  require(!cfg.q.empty(), "missing --q");
  mpz_class q = parse_integer(cfg.q);
  require(is_prime(q), "q must be prime, got " + q.get_str());
  return q;
}

IdealPrimeDivisor select_divisor(const Config& cfg) {
  const mpz_class q = prime_q(cfg);
  const auto all = prime_divisors_of(q, cfg.lambda);
  if (!cfg.xi.empty()) {
    const mpz_class xi = mod_floor(parse_integer(cfg.xi), q);
    require(all.front().f() == 1, "--xi selects a divisor only when f = 1");
    for (const auto& p : all)
      if (p.xi() == xi) return p;
    throw InputError("xi=" + xi.get_str() + " is not a nontrivial lambda-th root of unity mod " + q.get_str());
  }
  const int shift = cfg.shift.value_or(0);
  require(shift >= 0 && shift < static_cast<int>(all.size()),
          "--shift must be in [0, " + std::to_string(all.size()) + ")");
  return all[static_cast<std::size_t>(shift)];
}

Json line_json(const geometry::Line& l) { return {{"a", to_json(l.a)}, {"b", to_json(l.b)}, {"c", to_json(l.c)}}; }
Json point_json(const geometry::Point& p) { return Json::array({to_json(p.x), to_json(p.y)}); }

geometry::Circle parse_circle(const std::string& text, const char* flag) {
  require(!text.empty(), std::string("missing ") + flag);
  std::vector<geometry::Rational> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(geometry::parse_rational(text.substr(start, comma == std::string::npos ? comma : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  require(parts.size() == 3, std::string(flag) + " expects cx,cy,r^2");
  return geometry::make_circle(parts[0], parts[1], parts[2]);
}

// --- commands ---------------------------------------------------------------

int cmd_norm(const Config& cfg, std::ostream& out) {
  check_lambda(cfg);
  const auto g = subject(cfg, cfg.coeffs, "--coeffs");
  const mpz_class n = norm(g);
  ensure(n == norm_via_resultant(g), "norm disagrees with the resultant");
  emit(cfg, Json{{"coeffs", coeffs_json(g)}, {"norm", to_json(n)}}, out);
  return kExitOk;
}

int cmd_mul(const Config& cfg, std::ostream& out) {
  check_lambda(cfg);
  const auto g = subject(cfg, cfg.coeffs, "--coeffs");
  const auto h = subject(cfg, cfg.coeffs2, "--coeffs2");
  emit(cfg, Json{{"product", coeffs_json(g * h)}}, out);
  return kExitOk;
}

int cmd_conj(const Config& cfg, std::ostream& out) {
  check_lambda(cfg);
  const auto g = subject(cfg, cfg.coeffs, "--coeffs");
  emit(cfg, Json{{"k", cfg.k}, {"conjugate", coeffs_json(conjugate(g, cfg.k))}}, out);
  return kExitOk;
}

int cmd_eval(const Config& cfg, std::ostream& out) {
  check_lambda(cfg);
  const auto g = subject(cfg, cfg.coeffs, "--coeffs");
  require(!cfg.xi.empty() && !cfg.modulus.empty(), "eval needs --xi and --modulus");
  const mpz_class v = evaluate_mod(g, parse_integer(cfg.xi), parse_integer(cfg.modulus));
  emit(cfg, Json{{"value", to_json(v)}}, out);
  return kExitOk;
}

int cmd_periods(const Config& cfg, std::ostream& out) {
  check_lambda(cfg);
  const PeriodSystem ps = period_system(cfg.lambda, prime_q(cfg));
  const CongruenceAssignment a = congruence_assignment(ps);
  Json cosets = Json::array();
  for (const auto& c : ps.cosets) cosets.push_back(c);
  Json poly = Json::array();
  for (const auto& c : period_polynomial(ps)) poly.push_back(to_json(c));
  Json u = Json::array();
  for (const auto& x : a.u) u.push_back(to_json(x));
  emit(cfg,
       Json{{"lambda", ps.lambda}, {"q", to_json(ps.q)}, {"f", ps.f}, {"e", ps.e}, {"gamma", ps.gamma},
            {"cosets", cosets}, {"periodPolynomial", poly}, {"u", u}},
       out);
  return kExitOk;
}

int cmd_divisors(const Config& cfg, std::ostream& out) {
  check_lambda(cfg);
  const mpz_class q = prime_q(cfg);
  const auto all = prime_divisors_of(q, cfg.lambda);
  Json list = Json::array();
  for (const auto& p : all) list.push_back(divisor_json(p));
  Json j{{"lambda", cfg.lambda}, {"q", to_json(q)}, {"f", all.front().f()}, {"e", all.front().e()}, {"divisors", list}};
  if (q == cfg.lambda)
    j["note"] = "ramified: lambda is a unit times (1-a)^" + std::to_string(cfg.lambda - 1);
  else if (all.front().e() == 1)
    j["note"] = "actual prime: " + q.get_str();
  emit(cfg, j, out);
  return kExitOk;
}

int cmd_divides(const Config& cfg, std::ostream& out) {
  check_lambda(cfg);
  const auto g = subject(cfg, cfg.coeffs, "--coeffs");
  const auto p = select_divisor(cfg);
  const bool d = divides(p, g);
  Json j{{"divisor", divisor_json(p)}, {"divides", d}};
  if (p.f() == 1) {
    const bool d1 = divides_def1(p, g);
    ensure(d1 == d, "substitution and period tests disagree");
    j["substitutionTest"] = d1;
  }
  emit(cfg, j, out);
  return kExitOk;
}

int cmd_valuation(const Config& cfg, std::ostream& out) {
  check_lambda(cfg);
  const auto g = subject(cfg, cfg.coeffs, "--coeffs");
  const auto p = select_divisor(cfg);
  emit(cfg, Json{{"divisor", divisor_json(p)}, {"valuation", valuation(p, g)}}, out);
  return kExitOk;
}

int cmd_factor(const Config& cfg, std::ostream& out) {
  check_lambda(cfg);
  const auto fac = factor(subject(cfg, cfg.coeffs, "--coeffs"));
  Json entries = Json::array();
  for (const auto& e : fac.entries) {
    Json d = divisor_json(e.divisor);
    d["multiplicity"] = e.multiplicity;
    entries.push_back(std::move(d));
  }
  emit(cfg, Json{{"norm", to_json(fac.norm)}, {"entries", entries}}, out);
  return kExitOk;
}

Json search_json(const IdealPrimeDivisor& p, const SearchResult& r) {
  Json j{{"divisor", divisor_json(p)},
         {"outcome", to_string(r.outcome)},
         {"generator", r.generator ? coeffs_json(*r.generator) : Json(nullptr)}};
  if (r.generator) {
    j["polynomial"] = format_polynomial(*r.generator);
    j["index"] = r.index;
  } else {
    j["note"] = "bounded evidence: no generator within budget, not a proof of non-principality";
  }
  j["enumerated"] = r.enumerated;
  j["spaceSize"] = to_json(r.space_size);
  return j;
}

int cmd_search(const Config& cfg, std::ostream& out) {
  check_lambda(cfg);
  const auto p = select_divisor(cfg);
  require(p.kind() == IdealPrimeDivisor::Kind::General, "the lambda divisor is generated by 1-a; nothing to search");
  emit(cfg, search_json(p, search_generator(p, cfg.budget)), out);
  return kExitOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  check_lambda(cfg);
  const auto g = subject(cfg, cfg.coeffs, "--coeffs");
  const mpz_class q = prime_q(cfg);
  const auto checks = brute_force_divisor_check(q, cfg.lambda, g, cfg.budget);
  Json records = Json::array();
  bool all_agree = true;
  for (const auto& c : checks) {
    all_agree = all_agree && c.agree;
    records.push_back(Json{{"divisor", divisor_json(c.divisor)},
                           {"divides", c.divides},
                           {"valuation", c.valuation < 0 ? Json("infinite") : Json(c.valuation)},
                           {"tested", c.tested},
                           {"agree", c.agree},
                           {"generator", c.generator ? coeffs_json(*c.generator) : Json(nullptr)}});
  }
  emit(cfg, Json{{"lambda", cfg.lambda}, {"q", to_json(q)}, {"coeffs", coeffs_json(g)}, {"records", records},
                 {"agree", all_agree}},
       out);
  return all_agree ? kExitOk : kExitInternalError;
}

int cmd_sweep(const Config& cfg, std::ostream& out) {
  check_lambda(cfg);
  require(cfg.q_max >= 2, "--qmax must be >= 2");
  const auto rows = sweep_table(cfg.lambda, cfg.q_max, cfg.budget);
  out << (cfg.format == "json" ? format_sweep_jsonl(cfg.lambda, cfg.budget, rows)
                               : format_sweep_text(cfg.lambda, cfg.budget, rows));
  return kExitOk;
}

int cmd_radical_axis(const Config& cfg, std::ostream& out) {
  const auto c1 = parse_circle(cfg.c1, "--c1");
  const auto c2 = parse_circle(cfg.c2, "--c2");
  const auto axis = geometry::radical_axis(c1, c2);
  const auto chord = geometry::common_chord_line(c1, c2);
  Json chord_json = nullptr;
  bool agree = true;
  if (chord) {
    agree = chord->line == axis;
    ensure(agree, "common chord and radical axis disagree");
    chord_json = Json{{"line", line_json(chord->line)},
                      {"foot", point_json(chord->foot)},
                      {"halfChordSq", to_json(chord->half_chord_sq)}};
  }
  emit(cfg, Json{{"radicalAxis", line_json(axis)}, {"commonChord", chord_json}, {"agree", agree}}, out);
  return kExitOk;
}

int cmd_chord(const Config& cfg, std::ostream& out) {
  require(!cfg.a_axis.empty() && !cfg.b_axis.empty() && !cfg.x0.empty(), "chord needs --a, --b and --x0");
  const auto c = geometry::chord_configuration(geometry::parse_rational(cfg.a_axis), geometry::parse_rational(cfg.b_axis),
                                               geometry::parse_rational(cfg.x0));
  Json section = nullptr;
  if (c.kind != geometry::ChordKind::Tangent) {
    section = geometry::verify_section_relation(c);
    ensure(section.get<bool>(), "section relation failed");
  }
  const bool power = geometry::verify_chord_power_relation(c);
  const bool carrier = geometry::endpoints_on_carrier_conic(c);
  ensure(power && carrier, "chord relations failed");
  emit(cfg,
       Json{{"kind", to_string(c.kind)},
            {"A", point_json(c.A)},
            {"B", point_json(c.B)},
            {"O", point_json(c.O)},
            {"OPrime", point_json(c.O_prime)},
            {"halfChordSq", to_json(c.half_chord_sq)},
            {"carrier", c.kind == geometry::ChordKind::Ideal ? "supplementary conic" : "ellipse"},
            {"sectionRelation", section},
            {"chordPowerRelation", power},
            {"onCarrierConic", carrier}},
       out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Ideal prime divisors of cyclotomic integers, with exact oracles"};
  app.name("kummer");
  app.require_subcommand(1);
  std::function<int(const Config&, std::ostream&)> action;

  auto common = [&](CLI::App* sub, bool needs_lambda) {
    if (needs_lambda) sub->add_option("--lambda", cfg.lambda, "odd prime exponent")->required();
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--allow-large", cfg.allow_large, "lift the lambda <= 31 guard");
  };
  auto budget = [&](CLI::App* sub) {
    sub->add_option("--support", cfg.budget.max_support, "max nonzero coefficients");
    sub->add_option("--bound", cfg.budget.coeff_bound, "max |coefficient|");
    sub->add_option("--max-candidates", cfg.budget.max_candidates, "enumeration cap");
  };
  auto divisor_opts = [&](CLI::App* sub) {
    sub->add_option("--q", cfg.q, "rational prime")->required();
    sub->add_option("--shift", cfg.shift, "conjugate index in [0, e)");
    sub->add_option("--xi", cfg.xi, "root of unity mod q (f = 1)");
  };
  auto command = [&](const char* name, const char* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* s = command("norm", "norm of a cyclotomic integer", cmd_norm);
  common(s, true);
  s->add_option("--coeffs", cfg.coeffs, "a0,a1,...,a_{lambda-1}")->required();

  s = command("mul", "product of two cyclotomic integers", cmd_mul);
  common(s, true);
  s->add_option("--coeffs", cfg.coeffs)->required();
  s->add_option("--coeffs2", cfg.coeffs2)->required();

  s = command("conj", "substitute alpha -> alpha^k", cmd_conj);
  common(s, true);
  s->add_option("--coeffs", cfg.coeffs)->required();
  s->add_option("--k", cfg.k)->required();

  s = command("eval", "evaluate at alpha = xi modulo an integer", cmd_eval);
  common(s, true);
  s->add_option("--coeffs", cfg.coeffs)->required();
  s->add_option("--xi", cfg.xi)->required();
  s->add_option("--modulus", cfg.modulus)->required();

  s = command("periods", "Gauss periods and congruence roots for q", cmd_periods);
  common(s, true);
  s->add_option("--q", cfg.q)->required();

  s = command("divisors", "ideal prime divisors of q", cmd_divisors);
  common(s, true);
  s->add_option("--q", cfg.q)->required();

  s = command("divides", "congruence divisibility test", cmd_divides);
  common(s, true);
  divisor_opts(s);
  s->add_option("--coeffs", cfg.coeffs)->required();

  s = command("valuation", "multiplicity of a divisor", cmd_valuation);
  common(s, true);
  divisor_opts(s);
  s->add_option("--coeffs", cfg.coeffs)->required();

  s = command("factor", "ideal prime factorization", cmd_factor);
  common(s, true);
  s->add_option("--coeffs", cfg.coeffs)->required();

  s = command("search", "bounded search for an actual generator", cmd_search);
  common(s, true);
  divisor_opts(s);
  budget(s);

  s = command("verify", "oracle agreement report for the divisors of q", cmd_verify);
  common(s, true);
  s->add_option("--q", cfg.q)->required();
  s->add_option("--coeffs", cfg.coeffs)->required();
  budget(s);

  s = command("sweep", "divisor census for all primes q <= qmax", cmd_sweep);
  common(s, true);
  s->add_option("--qmax", cfg.q_max, "largest prime q to include")->required();
  budget(s);

  CLI::App* geo = app.add_subcommand("geometry", "radical axis and chord constructions");
  geo->require_subcommand(1);
  CLI::App* ra = geo->add_subcommand("radical-axis", "line of two circles");
  ra->callback([&] { action = cmd_radical_axis; });
  common(ra, false);
  ra->add_option("--c1", cfg.c1, "cx,cy,r^2")->required();
  ra->add_option("--c2", cfg.c2, "cx,cy,r^2")->required();
  CLI::App* ch = geo->add_subcommand("chord", "secant x = x0 of x^2/a^2 + y^2/b^2 = 1");
  ch->callback([&] { action = cmd_chord; });
  common(ch, false);
  ch->add_option("--a", cfg.a_axis)->required();
  ch->add_option("--b", cfg.b_axis)->required();
  ch->add_option("--x0", cfg.x0)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    return action(cfg, out);
  } catch (const ContractViolation& e) {
    err << "internal error (please report): " << e.what() << "\n";
    return kExitInternalError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error (please report): " << e.what() << "\n";
    return kExitInternalError;
  }
}

}  // namespace kummer::cli
