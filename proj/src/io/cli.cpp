#include "mgb/io/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "mgb/arith.hpp"
#include "mgb/errors.hpp"
#include "mgb/gb_field.hpp"
#include "mgb/gb_integer.hpp"
#include "mgb/groebner_fan.hpp"
#include "mgb/io/format.hpp"
#include "mgb/io/parser.hpp"
#include "mgb/modular_pipeline.hpp"
#include "mgb/poly_ops.hpp"
#include "mgb/prime_class.hpp"

namespace mgb {

namespace {

using json = nlohmann::ordered_json;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string file;
  bool json = false;
  std::string order, sigma, tau, primes;
  std::vector<std::string> polys;
  unsigned threads = 1;
  bool pauer = false;
  // modular-gb
  unsigned prime_bits = 31;
  std::size_t max_primes = 64;
  std::string verify = "cheap";
  std::uint64_t seed = 1;
};

std::string read_all(const std::string& file, std::istream& in) {
  std::ostringstream buf;
  if (file == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(file, std::ios::binary);
    if (!f) throw Usage("cannot read '" + file + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

template <class V>
std::vector<Polynomial<V>> descending(std::vector<Polynomial<V>> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

template <class V>
json poly_list(const std::vector<Polynomial<V>>& fs, const Names& names) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(format_poly(f, names));
  return a;
}

json tuple_json(const LtTuple& t, const Names& names) {
  json a = json::array();
  for (const auto& e : t.entries) a.push_back(format_pp(e, names));
  return a;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

class Runner {
 public:
  Runner(const Common& c, std::ostream& out, const ParsedInput& in) : c_(c), out_(out), in_(in) {}

  TermOrdering order_or(const std::string& text, const std::optional<TermOrdering>& directive,
                        const TermOrdering& fallback) const {
    if (!text.empty()) return parse_order(text, in_.ring.names);
    return directive.value_or(fallback);
  }

  std::vector<Integer> primes() const {
    if (!c_.primes.empty()) return parse_prime_list(c_.primes);
    if (in_.primes.empty()) throw Usage("no primes given (use --primes or a 'primes' directive)");
    return in_.primes;
  }

  std::vector<std::uint64_t> small_primes() const {
    std::vector<std::uint64_t> out;
    for (const auto& p : primes()) {
      if (!p.fits_ulong_p() || p >= (Integer(1) << 62)) throw DomainError("prime " + p.get_str() + " exceeds 2^62");
      out.push_back(p.get_ui());
    }
    return out;
  }

  std::vector<QPoly> extra_polys() const {
    std::vector<QPoly> out = in_.polys;
    for (const auto& t : c_.polys) out.push_back(parse_poly(t, in_.ring));
    if (out.empty()) throw Usage("no polynomial given (use --poly or a 'poly' directive)");
    return out;
  }

  std::vector<ZPoly> integral(const std::vector<QPoly>& fs) const {
    std::vector<ZPoly> out;
    for (const auto& f : fs) {
      ZPoly z;
      for (const auto& t : f.terms) {
        if (t.coeff.get_den() != 1) {
          throw DomainError("strong bases need integer coefficients, got " + format_poly(f, in_.ring.names));
        }
        z.terms.push_back({t.pp, t.coeff.get_num()});
      }
      out.push_back(std::move(z));
    }
    return out;
  }

  json gb(const Ideal& I) {
    const Names& n = I.ring.names;
    auto o = order_or(c_.order, std::nullopt, I.ring.order);
    if (I.ring.kind == CoefficientKind::Modular) {
      PrimeField f(I.ring.modulus);
      FpRing r(f, o);
      std::vector<FpPoly> gens;
      for (const auto& g : I.gens) gens.push_back(r.resort(reduce_mod_p(g, f)));
      auto G = descending(buchberger_reduced(r, gens).elements);
      text(format_list(G, n));
      return {{"basis", poly_list(G, n)}};
    }
    auto G = descending(buchberger_reduced(I.ring.qring(o), I.gens_under(o)).elements);
    text(format_list(G, n));
    return {{"basis", poly_list(G, n)}, {"den", den(G).get_str()}};
  }

  json strong(const Ideal& I) {
    const Names& n = I.ring.names;
    auto o = order_or(c_.order, std::nullopt, I.ring.order);
    ZRing zr(IntegerRing{}, o);
    auto B = strong_gb(zr, integral(I.gens_under(o)));
    auto G = descending(B.elements);
    Integer l = B.elements.empty() ? Integer(1) : lcm_sigma(B);
    text(format_list(G, n));
    text("lcm of leading coefficients: " + l.get_str());
    return {{"basis", poly_list(G, n)}, {"lcm", l.get_str()}};
  }

  json nf(const Ideal& I) {
    const Names& n = I.ring.names;
    auto o = order_or(c_.order, std::nullopt, I.ring.order);
    json rows = json::array();
    auto fs = extra_polys();
    if (I.ring.kind == CoefficientKind::Modular) {
      PrimeField f(I.ring.modulus);
      FpRing r(f, o);
      std::vector<FpPoly> gens;
      for (const auto& g : I.gens) gens.push_back(r.resort(reduce_mod_p(g, f)));
      auto G = buchberger_reduced(r, gens).elements;
      for (const auto& p : fs) rows.push_back(emit_nf(p, normal_form(r, r.resort(reduce_mod_p(p, f)), G), n));
    } else if (I.ring.kind == CoefficientKind::Integer) {
      ZRing zr(IntegerRing{}, o);
      auto B = strong_gb(zr, integral(I.gens_under(o)));
      for (const auto& z : integral(fs)) rows.push_back(emit_nf(z, strong_normal_form(zr, zr.resort(z), B.elements), n));
    } else {
      QRing r = I.ring.qring(o);
      auto G = buchberger_reduced(r, I.gens_under(o)).elements;
      for (const auto& p : fs) rows.push_back(emit_nf(p, normal_form(r, r.resort(p), G), n));
    }
    return {{"normal_forms", rows}};
  }

  template <class A, class B>
  json emit_nf(const A& f, const B& r, const Names& n) {
    text(format_poly(f, n) + " -> " + format_poly(r, n));
    return {{"poly", format_poly(f, n)}, {"normal_form", format_poly(r, n)}};
  }

  json classify(const Ideal& I) {
    const Names& n = I.ring.names;
    auto sigma = order_or(c_.sigma.empty() ? c_.order : c_.sigma, in_.sigma, I.ring.order);
    json rows = json::array();
    if (c_.pauer) {
      ZRing zr(IntegerRing{}, sigma);
      std::vector<ZPoly> F;
      for (const auto& g : I.gens_under(sigma)) F.push_back(prim(g));
      for (const auto& p : primes()) {
        auto v = pauer_lucky(zr, F, p);
        std::string line = p.get_str() + ": " + to_string(v.status);
        json row = {{"prime", p.get_str()}, {"status", to_string(v.status)}};
        if (v.coefficient) {
          line += " (leading coefficient " + v.coefficient->get_str() + ")";
          row["coefficient"] = v.coefficient->get_str();
        }
        text(line);
        rows.push_back(row);
      }
      return {{"sigma", format_order(sigma, n)}, {"primes", rows}};
    }
    PrimeClassifier pc(I);
    Integer d = pc.den_sigma(sigma);
    text("den = " + format_factorization(d));
    for (const auto& p : primes()) {
      auto v = pc.classify(sigma, p);
      std::string line = p.get_str() + ": " + to_string(v.status);
      json row = {{"prime", p.get_str()}, {"status", to_string(v.status)}};
      if (v.witness) {
        // The full element can be enormous; --json carries it.
        line += " (witness with leading term " + format_pp(v.witness->lt(), n) + ", den " +
                den(*v.witness).get_str() + ")";
        row["witness"] = format_poly(*v.witness, n);
      }
      text(line);
      rows.push_back(row);
    }
    return {{"sigma", format_order(sigma, n)}, {"den", d.get_str()}, {"primes", rows}};
  }

  json detect(const Ideal& I) {
    const Names& n = I.ring.names;
    auto sigma = order_or(c_.sigma, in_.sigma, I.ring.order);
    if (c_.tau.empty() && !in_.tau) throw Usage("detect-bad needs --tau or a 'tau' directive");
    auto tau = order_or(c_.tau, in_.tau, I.ring.order);
    PrimeClassifier pc(I);
    auto vs = pc.detect_tau_bad(sigma, tau, small_primes(), c_.threads);
    json rows = json::array();
    for (const auto& v : vs) {
      std::string line = v.prime.get_str() + ": " + to_string(v.status) + " " + format_tuple(v.tuple->entries, n);
      json row = {{"prime", v.prime.get_str()}, {"status", to_string(v.status)}, {"tuple", tuple_json(*v.tuple, n)}};
      if (v.beaten_by) {
        line += " precedes " + format_tuple(v.beaten_by->entries, n) + " of " + v.beaten_by_prime->get_str();
        row["beaten_by"] = tuple_json(*v.beaten_by, n);
        row["beaten_by_prime"] = v.beaten_by_prime->get_str();
      }
      text(line);
      rows.push_back(row);
    }
    return {{"sigma", format_order(sigma, n)}, {"tau", format_order(tau, n)}, {"primes", rows}};
  }

  json rad_check(const Ideal& I) {
    auto sigma = order_or(c_.sigma.empty() ? c_.order : c_.sigma, in_.sigma, I.ring.order);
    auto r = check_rad_identity(I, sigma);
    text("rad(den) = " + r.rad_den.get_str() + ", rad(lcm) = " + r.rad_lcm.get_str() +
         (r.equal ? ", equal" : ", DIFFERENT"));
    return {{"rad_den", r.rad_den.get_str()}, {"rad_lcm", r.rad_lcm.get_str()}, {"equal", r.equal}};
  }

  json fan(const Ideal& I, bool full) {
    const Names& n = I.ring.names;
    FanOptions opts = FanOptions::from_env();
    opts.threads = c_.threads;
    Fan f = enumerate_fan(I, opts);
    Integer d = f.universal_denominator();
    if (!full) {
      text(format_factorization(d));
      return {{"cones", str(f.cones.size())}, {"delta", d.get_str()}, {"factorization", format_factorization(d)}};
    }
    json cones = json::array();
    for (std::size_t k = 0; k < f.cones.size(); ++k) {
      const auto& c = f.cones[k];
      std::vector<std::size_t> nb;
      for (const auto& e : f.edges) {
        if (e.from == k) nb.push_back(e.to);
      }
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      std::string adj;
      json jn = json::array();
      for (auto x : nb) {
        adj += (adj.empty() ? "" : ", ") + std::to_string(x);
        jn.push_back(str(x));
      }
      auto G = descending(c.elements);
      text("cone " + std::to_string(k) + ": " + format_list(G, n) + " den " + c.den.get_str() + " neighbours " + adj);
      cones.push_back({{"index", str(k)}, {"basis", poly_list(G, n)}, {"den", c.den.get_str()}, {"neighbours", jn}});
    }
    text("cones: " + std::to_string(f.cones.size()));
    text("Delta: " + format_factorization(d));
    return {{"cones", cones}, {"delta", d.get_str()}, {"factorization", format_factorization(d)}};
  }

  json modular(const Ideal& I) {
    const Names& n = I.ring.names;
    auto tau = order_or(c_.order.empty() ? c_.tau : c_.order, in_.tau, I.ring.order);
    ModularOptions o;
    if (!c_.sigma.empty() || in_.sigma) o.sigma = order_or(c_.sigma, in_.sigma, I.ring.order);
    if (c_.prime_bits < 3 || c_.prime_bits > 62) throw Usage("--prime-bits must lie in [3, 62]");
    o.prime_bits = c_.prime_bits;
    o.max_primes = c_.max_primes;
    o.verify = c_.verify == "full" ? VerifyMode::Full : VerifyMode::Cheap;
    o.seed = c_.seed;
    o.threads = c_.threads;
    if (!c_.primes.empty() || !in_.primes.empty()) o.primes = small_primes();
    auto res = modular_gb(I, tau, o);
    auto G = descending(res.basis);
    text(format_list(G, n));
    json ledger = json::array();
    for (const auto& p : res.primes) {
      std::string line = "  " + str(p.prime) + " " + to_string(p.fate);
      json row = {{"prime", str(p.prime)}, {"fate", to_string(p.fate)}};
      if (p.tuple) row["tuple"] = tuple_json(*p.tuple, n);
      if (p.beaten_by) {
        line += " " + format_tuple(p.tuple->entries, n) + " precedes " + format_tuple(p.beaten_by->entries, n) +
                " of " + str(*p.beaten_by_prime);
        row["beaten_by"] = tuple_json(*p.beaten_by, n);
        row["beaten_by_prime"] = str(*p.beaten_by_prime);
      }
      text(line);
      ledger.push_back(row);
    }
    std::ostringstream secs;
    secs.precision(3);
    secs << std::fixed << res.seconds;
    text("primes: " + std::to_string(res.primes.size()) + ", reconstructions: " +
         std::to_string(res.reconstructions) + ", seconds: " + secs.str());
    return {{"basis", poly_list(G, n)},
            {"primes", ledger},
            {"reconstructions", std::to_string(res.reconstructions)},
            {"seconds", secs.str()}};
  }

 private:
  void text(const std::string& line) {
    if (!c_.json) out_ << line << "\n" << std::flush;
  }

  const Common& c_;
  std::ostream& out_;
  const ParsedInput& in_;
};

json error_json(const std::string& kind, const std::string& message) {
  return {{"schema", 1}, {"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner bases over QQ with modular reduction and bad-prime detection", "mgb"};
  app.require_subcommand(1);
  Common c;
  auto file_opts = [&](CLI::App* s) {
    s->add_option("file", c.file, "Input file, '-' for stdin")->required();
    s->add_flag("--json", c.json, "Machine-readable output");
  };
  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis");
  auto* sgb = app.add_subcommand("strong-gb", "Minimal strong Groebner basis over ZZ");
  auto* nf = app.add_subcommand("nf", "Normal form modulo the ideal");
  auto* cls = app.add_subcommand("classify", "Sigma-good/bad (or Pauer-lucky) primes");
  auto* det = app.add_subcommand("detect-bad", "Certify tau-bad primes from modular tuples");
  auto* rad = app.add_subcommand("rad-check", "Compare rad(den) with rad(lcm) of a minimal strong basis");
  auto* fan = app.add_subcommand("fan", "Enumerate the Groebner fan");
  auto* ud = app.add_subcommand("universal-denominator", "Universal denominator with its factorization");
  auto* mod = app.add_subcommand("modular-gb", "Modular reduced Groebner basis");
  for (auto* s : {gb, sgb, nf, cls, det, rad, fan, ud, mod}) file_opts(s);
  for (auto* s : {gb, sgb, nf, cls, rad, mod}) s->add_option("--order", c.order, "Term ordering");
  nf->add_option("--poly", c.polys, "Polynomial to reduce (repeatable)");
  for (auto* s : {cls, det, rad, mod}) s->add_option("--sigma", c.sigma, "Ordering sigma");
  det->add_option("--tau", c.tau, "Ordering tau");
  mod->add_option("--tau", c.tau, "Target ordering (same as --order)");
  for (auto* s : {cls, det, mod}) s->add_option("--primes", c.primes, "Comma-separated primes");
  cls->add_flag("--pauer", c.pauer, "Classify Pauer-luckiness of the primitive generators");
  for (auto* s : {det, fan, ud, mod}) s->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  mod->add_option("--prime-bits", c.prime_bits, "Bit size of generated primes");
  mod->add_option("--max-primes", c.max_primes, "Give up after this many primes");
  mod->add_option("--verify", c.verify, "Verification mode")->check(CLI::IsMember({"cheap", "full"}));
  mod->add_option("--seed", c.seed, "Prime generator seed");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << "\n" << grammar_help();
    return 2;
  }

  try {
    ParsedInput parsed = parse_input(read_all(c.file, in));
    Runner r(c, out, parsed);
    json results = json::array();
    std::string name = app.get_subcommands().front()->get_name();
    for (std::size_t k = 0; k < parsed.ideals.size(); ++k) {
      const Ideal& I = parsed.ideals[k];
      if (parsed.ideals.size() > 1 && !c.json) out << "ideal " << k << ":\n";
      json one;
      if (name == "gb") one = r.gb(I);
      else if (name == "strong-gb") one = r.strong(I);
      else if (name == "nf") one = r.nf(I);
      else if (name == "classify") one = r.classify(I);
      else if (name == "detect-bad") one = r.detect(I);
      else if (name == "rad-check") one = r.rad_check(I);
      else if (name == "fan") one = r.fan(I, true);
      else if (name == "universal-denominator") one = r.fan(I, false);
      else one = r.modular(I);
      results.push_back(one);
    }
    if (c.json) {
      json doc = {{"schema", 1}, {"command", name}, {"ring", parsed.ring.coefficient_name()}, {"results", results}};
      out << doc.dump(2) << "\n";
    }
    return 0;
  } catch (const ParseError& e) {
    if (c.json) out << error_json(to_string(e.kind()), e.what()).dump(2) << "\n";
    err << "mgb: " << e.what() << "\n\n" << grammar_help();
    return 2;
  } catch (const Usage& e) {
    if (c.json) out << error_json("usage", e.what()).dump(2) << "\n";
    err << "mgb: " << e.what() << "\n\n" << grammar_help();
    return 2;
  } catch (const FanBudgetExceeded& e) {
    if (c.json) out << error_json("budget", e.what()).dump(2) << "\n";
    err << "mgb: " << e.what() << " (" << e.cones_found() << " cones found; raise MGB_BUDGET)\n";
    return 1;
  } catch (const BadPrimeError& e) {
    if (c.json) out << error_json("bad_prime", e.what()).dump(2) << "\n";
    err << "mgb: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    if (c.json) out << error_json("domain", e.what()).dump(2) << "\n";
    err << "mgb: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace mgb
