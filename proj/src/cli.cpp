#include "lfsrcyc/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "lfsrcyc/errors.hpp"
#include "lfsrcyc/factor.hpp"
#include "lfsrcyc/oracle.hpp"
#include "lfsrcyc/structure.hpp"
#include "lfsrcyc/text.hpp"

namespace lfsrcyc {

namespace {

struct CliConfig {
  std::uint64_t p = 0;
  unsigned m = 1;
  std::string modulus;
  std::string format = "table";
  std::uint64_t oracle_cap = kDefaultOracleCap;
  std::uint64_t factor_cap = kDefaultFactorCap;
  std::uint64_t seed = kDefaultFactorSeed;
  std::string poly;
  std::string state1;
  std::string state2;

  bool records() const { return format == "records"; }
};

Field make_field(const CliConfig& cfg) {
  if (cfg.p < 2 || !is_prime_u64(cfg.p)) throw DomainError("--p must be a prime, got " + std::to_string(cfg.p));
  if (cfg.modulus.empty()) return cfg.m == 1 ? Field::prime(cfg.p) : Field::extension(cfg.p, cfg.m);
  std::string text = cfg.modulus;
  std::replace(text.begin(), text.end(), 't', 'x');
  const Poly mod = parse_poly(text, Field::prime(cfg.p));
  if (mod.degree() != static_cast<int>(cfg.m)) {
    throw DomainError("--modulus must have degree " + std::to_string(cfg.m));
  }
  std::vector<std::uint32_t> cs;
  for (const GFElem& c : mod.coeffs()) cs.push_back(c.coeffs()[0]);
  return Field::extension(cfg.p, cfg.m, std::move(cs));
}

Poly register_poly(const CliConfig& cfg, const Field& field) {
  const Poly f = parse_poly(cfg.poly, field);
  if (f.degree() < 1) throw DomainError("polynomial must have positive degree");
  if (!f.is_monic()) throw DomainError("characteristic polynomial must be monic");
  if (f.coeff(0).is_zero()) throw DomainError("f(0) = 0 is not allowed");
  return f;
}

std::string join_exponents(const std::vector<unsigned>& exps) {
  std::string s;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(exps[i]);
  }
  return s;
}

std::string power_text(const Field& field, int n) {
  return std::to_string(field.q()) + "^" + std::to_string(n);
}

int cmd_factor(const CliConfig& cfg, std::ostream& out) {
  const Field field = make_field(cfg);
  const Poly f = parse_poly(cfg.poly, field);
  if (f.degree() < 1) throw DomainError("polynomial must have positive degree");
  if (f.coeff(0).is_zero()) throw DomainError("f(0) = 0 is not allowed");
  const FactoredPoly fp = factorize(f, cfg.seed);
  if (cfg.records()) {
    if (!fp.unit.is_one()) out << "unit " << render_element(fp.unit) << "\n";
    for (std::size_t i = 0; i < fp.factors.size(); ++i) {
      const auto& [g, b] = fp.factors[i];
      out << "factor " << i << " poly=" << render_poly(g) << " mult=" << b << " degree=" << g.degree() << "\n";
    }
    return kExitOk;
  }
  out << "field " << field.describe() << "\n";
  out << "f = " << render_poly(f) << "\n";
  if (!fp.unit.is_one()) out << "unit " << render_element(fp.unit) << "\n";
  out << std::left << std::setw(32) << "factor" << std::setw(6) << "mult" << "degree\n";
  for (const auto& [g, b] : fp.factors) {
    out << std::setw(32) << render_poly(g) << std::setw(6) << b << g.degree() << "\n";
  }
  return kExitOk;
}

StructureOptions structure_options(const CliConfig& cfg) {
  StructureOptions opts;
  opts.factor_cap = cfg.factor_cap;
  opts.seed = cfg.seed;
  return opts;
}

int cmd_analyze(const CliConfig& cfg, std::ostream& out) {
  const Field field = make_field(cfg);
  const Poly f = register_poly(cfg, field);
  const CycleStructure cs = enumerate_cycles(f, structure_options(cfg));
  std::uint64_t total = 0;
  for (const CycleClass& c : cs.cycles) total += c.period;
  if (cfg.records()) {
    for (std::size_t i = 0; i < cs.per_factor.size(); ++i) {
      const FactorCycleSet& fc = cs.per_factor[i];
      out << "factor " << i << " g=" << render_poly(fc.g) << " b=" << fc.b << " n=" << fc.n << " e=" << fc.e
          << " t=" << fc.t << " sigma=" << fc.sigma << "\n";
    }
    for (std::size_t i = 0; i < cs.cycles.size(); ++i) {
      const CycleClass& c = cs.cycles[i];
      out << "cycle " << i << " exps=" << join_exponents(c.factor_exponents) << " period=" << c.period
          << " state=" << render_state(c.representative) << "\n";
    }
    out << "total cycles=" << cs.cycles.size() << " states=" << total << "\n";
    return kExitOk;
  }
  out << "field " << field.describe() << "\n";
  out << "f = " << render_poly(f) << "\n\n";
  out << std::left << std::setw(24) << "factor" << std::setw(4) << "b" << std::setw(4) << "n" << std::setw(12) << "e"
      << std::setw(12) << "t" << "sigma\n";
  for (const FactorCycleSet& fc : cs.per_factor) {
    out << std::setw(24) << render_poly(fc.g) << std::setw(4) << fc.b << std::setw(4) << fc.n << std::setw(12) << fc.e
        << std::setw(12) << fc.t << fc.sigma << "\n";
  }
  out << "\n" << std::setw(8) << "index" << std::setw(12) << "exponents" << std::setw(12) << "period" << "state\n";
  for (std::size_t i = 0; i < cs.cycles.size(); ++i) {
    const CycleClass& c = cs.cycles[i];
    out << std::setw(8) << i << std::setw(12) << join_exponents(c.factor_exponents) << std::setw(12) << c.period
        << render_state(c.representative) << "\n";
  }
  out << "\n" << cs.cycles.size() << " cycles, periods sum to " << total << " = " << power_text(field, f.degree())
      << "\n";
  return kExitOk;
}

int cmd_states(const CliConfig& cfg, std::ostream& out) {
  const Field field = make_field(cfg);
  const Poly f = register_poly(cfg, field);
  for (const CycleClass& c : enumerate_cycles(f, structure_options(cfg)).cycles) {
    out << render_state(c.representative) << "\n";
  }
  return kExitOk;
}

State parse_register_state(const std::string& text, const Poly& f) {
  State s = parse_state(text, f.field());
  if (s.size() != static_cast<std::size_t>(f.degree())) {
    throw DomainError("state " + text + " has " + std::to_string(s.size()) + " entries, expected " +
                      std::to_string(f.degree()));
  }
  return s;
}

int cmd_same_cycle(const CliConfig& cfg, std::ostream& out) {
  const Field field = make_field(cfg);
  const Poly f = register_poly(cfg, field);
  const State v1 = parse_register_state(cfg.state1, f);
  const State v2 = parse_register_state(cfg.state2, f);
  const BlockMatrixP P = build_P(factorize(f, cfg.seed));
  const SameCycleResult r = same_cycle(P, v1, v2);
  if (r.same) {
    out << "YES ℓ=" << r.shift << "\n";
  } else {
    out << "NO\n";
  }
  if (!cfg.records()) {
    for (std::size_t i = 0; i < r.component_periods.size(); ++i) {
      out << "  component " << i << ": period " << r.component_periods[i];
      if (i < r.component_shifts.size()) {
        out << ", shift " << r.component_shifts[i];
      } else {
        out << ", target not on this cycle";
      }
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_oracle_check(const CliConfig& cfg, std::ostream& out) {
  const Field field = make_field(cfg);
  const Poly f = register_poly(cfg, field);
  const BruteCyclePartition brute = brute_partition(f, cfg.oracle_cap);
  StructureOptions opts = structure_options(cfg);
  opts.canonical_state_cap = std::max(opts.canonical_state_cap, cfg.oracle_cap);
  const CycleStructure cs = enumerate_cycles(f, opts);
  std::multiset<std::pair<State, std::uint64_t>> expected, actual;
  for (const BruteCycle& c : brute.cycles) expected.emplace(c.representative, c.period);
  for (const CycleClass& c : cs.cycles) actual.emplace(c.representative, c.period);
  const bool ok = expected == actual;
  out << (ok ? "PASS" : "FAIL") << " cycles=" << cs.cycles.size() << " oracle_cycles=" << brute.cycles.size()
      << " states=" << brute.visited_count << "\n";
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Cycle structure of linear feedback shift registers over finite fields", "lfsrcyc"};
  app.option_defaults()->always_capture_default();
  app.add_option("--p", cfg.p, "Field characteristic")->required();
  app.add_option("--m", cfg.m, "Extension degree")->check(CLI::PositiveNumber);
  app.add_option("--modulus", cfg.modulus, "Irreducible modulus of GF(p^m) over GF(p), e.g. x^2+x+1");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "records"}));
  app.add_option("--oracle-cap", cfg.oracle_cap, "Largest state count brute force may walk")
      ->check(CLI::PositiveNumber);
  app.add_option("--factor-cap", cfg.factor_cap, "Largest trial divisor for integer factorization")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed of the factorization PRNG");
  app.require_subcommand(1);

  auto* factor = app.add_subcommand("factor", "Factor a polynomial into irreducibles");
  factor->add_option("f", cfg.poly, "Polynomial")->required();
  auto* analyze = app.add_subcommand("analyze", "Per-factor data and every cycle with its period and state");
  analyze->add_option("f", cfg.poly, "Characteristic polynomial")->required();
  auto* states = app.add_subcommand("states", "One representative state per cycle");
  states->add_option("f", cfg.poly, "Characteristic polynomial")->required();
  auto* same = app.add_subcommand("same-cycle", "Decide whether two states lie on one cycle");
  same->add_option("f", cfg.poly, "Characteristic polynomial")->required();
  same->add_option("v1", cfg.state1, "First state, e.g. (1,0,2)")->required();
  same->add_option("v2", cfg.state2, "Second state")->required();
  auto* check = app.add_subcommand("oracle-check", "Compare the cycle enumeration against brute force");
  check->add_option("f", cfg.poly, "Characteristic polynomial")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    if (*factor) return cmd_factor(cfg, out);
    if (*analyze) return cmd_analyze(cfg, out);
    if (*states) return cmd_states(cfg, out);
    if (*same) return cmd_same_cycle(cfg, out);
    return cmd_oracle_check(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    err << "raise --oracle-cap or --factor-cap, or use a smaller input\n";
    return kExitResource;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NotFoundError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace lfsrcyc
