#pragma once

// Command-line front door.  Every command is a pure function of its arguments
// (and, for randomized commands, a mandatory seed), writes to the given
// streams, ends its output with exactly one newline, and returns the process
// exit code:
//   0 ok, 2 parse error, 3 type/level error, 4 undecided, 5 resource cap.
//
// Prime ideals on the command line use a small bracket syntax,
//   <type1 a=[gen, gen, ...]>   or   <type2 b=[gen, gen, ...]>
// with generators written in the expression language of the functor's level;
// the standalone token `p` inside a generator is replaced by the value of
// --p before parsing.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "nakaoka/axioms.hpp"
#include "nakaoka/contains.hpp"
#include "nakaoka/express_t.hpp"
#include "nakaoka/ghost.hpp"
#include "nakaoka/parser.hpp"
#include "nakaoka/rng.hpp"
#include "nakaoka/spectra.hpp"

namespace nakaoka {
namespace cli {

namespace clidetail {

inline FunctorSpec functor_by_name(const std::string& tag, std::uint32_t p) {
  if (tag == "burnside") return make_functor(FunctorKind::Burnside, p);
  if (tag == "modp-burnside") return make_functor(FunctorKind::ModPBurnside, p);
  if (tag == "free-fixed") return make_functor(FunctorKind::FreeFixed, p);
  if (tag == "free-underlying") return make_functor(FunctorKind::FreeUnderlying, p);
  if (tag == "ru") return make_functor(FunctorKind::RU, p);
  if (tag == "fixed-point-zmodp") return make_functor(FunctorKind::FixedPoint, p, FPKind::ZModP);
  if (tag == "fixed-point-swap")
    return make_functor(FunctorKind::FixedPoint, p, FPKind::SwapPoly);
  if (tag == "fixed-point-cyclic")
    return make_functor(FunctorKind::FixedPoint, p, FPKind::CyclicPoly);
  throw ParseError("unknown functor '" + tag + "'", 0);
}

inline std::vector<std::uint64_t> parse_window(const std::string& csv) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < csv.size()) {
    std::size_t j = csv.find(',', i);
    if (j == std::string::npos) j = csv.size();
    std::string tok = csv.substr(i, j - i);
    if (tok.empty()) throw ParseError("empty window entry", i);
    for (char c : tok)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("window entries must be non-negative integers", i);
    out.push_back(std::stoull(tok));
    i = j + 1;
  }
  if (out.empty()) throw ParseError("empty window", 0);
  return out;
}

inline std::vector<std::uint32_t> parse_prime_list(const std::string& csv) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t v : parse_window(csv)) {
    if (v == 0) throw ParseError("p must be a prime", 0);
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

// Replace every standalone `p` token by the decimal value of the group prime.
inline std::string subst_p_token(const std::string& src, std::uint32_t p) {
  auto wordish = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  std::string out;
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src[i] == 'p' && (i == 0 || !wordish(src[i - 1])) &&
        (i + 1 == src.size() || !wordish(src[i + 1])))
      out += std::to_string(p);
    else
      out += src[i];
  }
  return out;
}

inline std::string trim(std::string s) {
  auto sp = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
  while (!s.empty() && sp(s.front())) s.erase(s.begin());
  while (!s.empty() && sp(s.back())) s.pop_back();
  return s;
}

struct DslPrime {
  bool type1 = true;
  std::vector<std::string> gens;
};

inline DslPrime parse_prime_dsl(const std::string& raw) {
  std::string s = trim(raw);
  if (s.size() < 2 || s.front() != '<' || s.back() != '>')
    throw ParseError("prime must be written <type1 a=[...]> or <type2 b=[...]>", 0);
  std::string inner = trim(s.substr(1, s.size() - 2));
  DslPrime out;
  if (inner.rfind("type1", 0) == 0)
    out.type1 = true;
  else if (inner.rfind("type2", 0) == 0)
    out.type1 = false;
  else
    throw ParseError("prime must start with type1 or type2", 1);
  std::string rest = trim(inner.substr(5));
  const std::string key = out.type1 ? "a=" : "b=";
  if (rest.rfind(key, 0) != 0)
    throw ParseError("expected '" + key + "[...]' after the prime kind", 1);
  rest = trim(rest.substr(2));
  if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
    throw ParseError("prime generators must be bracketed", 1);
  std::string body = trim(rest.substr(1, rest.size() - 2));
  if (body.empty()) return out;
  std::size_t i = 0;
  while (i <= body.size()) {
    std::size_t j = body.find(',', i);
    if (j == std::string::npos) j = body.size();
    std::string gen = trim(body.substr(i, j - i));
    if (gen.empty()) throw ParseError("empty prime generator", i + 1);
    out.gens.push_back(gen);
    i = j + 1;
    if (j == body.size()) break;
  }
  return out;
}

inline long long small_const(const Coeff& c) {
  std::string s = c.str();
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("constant generator out of range: " + s, 0);
  }
}

struct SplitGens {
  std::uint64_t q = 0;  // gcd of the constant generators
  std::vector<MultiPoly> polys;
};

inline void take(SplitGens& sg, const MultiPoly& f) {
  if (f.is_zero()) return;
  if (f.is_constant()) {
    long long v = small_const(f.constant_value());
    sg.q = std::gcd(sg.q, static_cast<std::uint64_t>(v < 0 ? -v : v));
  } else {
    sg.polys.push_back(f);
  }
}

inline SymPrime1 sym_from(const SplitGens& sg) {
  if (sg.polys.empty()) {
    if (sg.q == 0) return SymPrime1::zero_ideal();
    return SymPrime1::rational(sg.q);
  }
  if (sg.polys.size() == 1) {
    if (sg.q == 0) return SymPrime1::principal(sg.polys[0]);
    return SymPrime1::maximal(sg.q, sg.polys[0]);
  }
  throw LevelError("a univariate prime takes at most one polynomial generator");
}

inline ZPrime z_from(const SplitGens& sg) {
  if (!sg.polys.empty()) throw LevelError("this level only accepts constant generators");
  if (sg.q == 0) return ZPrime::zero();
  return ZPrime::rational(sg.q);
}

// Parse one generator as an element of the given level and return the payload
// polynomial, rejecting components a prime generator cannot carry.
inline MultiPoly gen_poly(const Functor& F, Level lv, const std::string& text) {
  Elem z = parse_elem(F, lv, text);
  if (lv == Level::Bottom) return std::get<PolyElem>(z.pay).f;
  switch (F.spec().kind) {
    case FunctorKind::FreeFixed: {
      const auto& t = std::get<FFTop>(z.pay);
      if (!t.g1.is_zero())
        throw LevelError("fixed-level prime generators cannot carry a transfer part");
      return t.g0;
    }
    case FunctorKind::FreeUnderlying: {
      const auto& t = std::get<FUTop>(z.pay);
      if (!t.t.empty())
        throw LevelError("fixed-level prime generators cannot carry a transfer part");
      return t.h;
    }
    case FunctorKind::RU:
      return std::get<RUTop>(z.pay).w;
    default:
      return std::get<PolyElem>(z.pay).f;
  }
}

inline TambaraPrime build_prime(const FunctorSpec& spec, const std::string& text) {
  Functor F(spec);
  DslPrime dsl = parse_prime_dsl(text);
  SplitGens sg;
  const Level lv = dsl.type1 ? Level::Bottom : Level::Top;
  for (const std::string& g : dsl.gens)
    take(sg, gen_poly(F, lv, subst_p_token(g, spec.p)));

  if (dsl.type1) {
    switch (spec.kind) {
      case FunctorKind::Burnside:
      case FunctorKind::ModPBurnside:
      case FunctorKind::RU:
        return TambaraPrime::type1(spec, BottomPrime(z_from(sg)));
      case FunctorKind::FreeFixed:
        return TambaraPrime::type1(spec, BottomPrime(sym_from(sg)));
      case FunctorKind::FreeUnderlying: {
        const auto np = static_cast<std::size_t>(spec.p);
        GenIdeal base(np, static_cast<std::uint32_t>(sg.q), sg.polys,
                      specdetail::coord_names(np));
        // rotation-stable generators name an invariant prime; otherwise the
        // listed ideal is taken as the base of an orbit meet
        try {
          return TambaraPrime::type1(spec, BottomPrime(CpPrime::invariant(spec, base)));
        } catch (const LevelError&) {
          return TambaraPrime::type1(spec, BottomPrime(CpPrime::orbit_meet(spec, base)));
        }
      }
      default:
        throw UnsupportedError("type1 primes are not supported for this functor");
    }
  }

  switch (spec.kind) {
    case FunctorKind::Burnside:
    case FunctorKind::ModPBurnside:
      return TambaraPrime::type2(spec, PhiPrime(z_from(sg)));
    case FunctorKind::FreeFixed:
      return TambaraPrime::type2(
          spec, PhiPrime(GenIdeal(2, static_cast<std::uint32_t>(sg.q), sg.polys, {"x", "n"})));
    case FunctorKind::FreeUnderlying:
      return TambaraPrime::type2(spec, PhiPrime(sym_from(sg)));
    case FunctorKind::RU: {
      if (sg.polys.empty()) {
        if (sg.q == 0) return TambaraPrime::type2(spec, PhiPrime(RUPhiPrime::zero_ideal(spec.p)));
        return TambaraPrime::type2(spec, PhiPrime(RUPhiPrime::canonical(spec.p, sg.q)));
      }
      if (sg.polys.size() == 1 && sg.q != 0)
        return TambaraPrime::type2(spec,
                                   PhiPrime(RUPhiPrime::factor(spec.p, sg.q, sg.polys[0])));
      throw LevelError("a character-level prime takes a characteristic and at most one factor");
    }
    default:
      throw UnsupportedError("type2 primes are not supported for this functor");
  }
}

inline std::string outcome_token(CompareOutcome o) {
  switch (o) {
    case CompareOutcome::Equal: return "EQUAL";
    case CompareOutcome::LessThan: return "LESS-THAN";
    case CompareOutcome::GreaterThan: return "GREATER-THAN";
    case CompareOutcome::Incomparable: return "INCOMPARABLE";
    case CompareOutcome::Undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

}  // namespace clidetail

// ---------------------------------------------------------------------------
// the driver
// ---------------------------------------------------------------------------

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using namespace clidetail;

  CLI::App app{"exact arithmetic and spectra for cyclic-prime equivariant rings"};
  app.name("nakaoka");
  app.require_subcommand(1);

  // --- eval ---
  auto* c_eval = app.add_subcommand("eval", "evaluate an operation on parsed elements");
  std::string e_functor, e_op, e_level = "auto";
  std::uint32_t e_p = 2, e_k = 1;
  std::vector<std::string> e_exprs;
  c_eval->add_option("--functor", e_functor, "functor tag")->required();
  c_eval->add_option("--p", e_p, "group prime")->required();
  c_eval->add_option("--op", e_op, "add|sub|mul|res|tr|nm|conj")->required();
  c_eval->add_option("--level", e_level, "top|bottom (arithmetic ops; default top)");
  c_eval->add_option("--k", e_k, "rotation count for conj");
  c_eval->add_option("exprs", e_exprs, "expression(s)")->expected(1, 2);

  // --- axioms ---
  auto* c_ax = app.add_subcommand("axioms", "run the seeded law suite");
  std::string a_functor = "all", a_plist, a_format = "text";
  std::uint64_t a_trials = 200, a_seed = 0;
  c_ax->add_option("--functor", a_functor, "functor tag or 'all'");
  c_ax->add_option("--p", a_plist, "comma-separated primes")->required();
  c_ax->add_option("--trials", a_trials, "trials per law");
  c_ax->add_option("--seed", a_seed, "random seed")->required();
  c_ax->add_option("--format", a_format, "text|json");

  // --- spec ---
  auto* c_spec = app.add_subcommand("spec", "spectrum queries");
  c_spec->require_subcommand(1);

  auto* c_list = c_spec->add_subcommand("list", "windowed spectrum as a poset");
  std::string l_functor, l_window, l_format = "text";
  std::uint32_t l_p = 2;
  c_list->add_option("--functor", l_functor, "burnside|ru")->required();
  c_list->add_option("--p", l_p, "group prime")->required();
  c_list->add_option("--window", l_window, "comma-separated characteristics")->required();
  c_list->add_option("--format", l_format, "text|dot|json");

  auto* c_cont = c_spec->add_subcommand("contains", "compare two primes");
  std::string t_functor, t_a, t_b;
  std::uint32_t t_p = 2;
  c_cont->add_option("--functor", t_functor, "functor tag")->required();
  c_cont->add_option("--p", t_p, "group prime")->required();
  c_cont->add_option("--a", t_a, "first prime")->required();
  c_cont->add_option("--b", t_b, "second prime")->required();

  auto* c_dim = c_spec->add_subcommand("dim", "Krull dimension certificate");
  std::string d_functor;
  std::uint32_t d_p = 2;
  std::uint64_t d_q = 0;
  c_dim->add_option("--functor", d_functor, "functor tag")->required();
  c_dim->add_option("--p", d_p, "group prime")->required();
  c_dim->add_option("--q", d_q, "auxiliary characteristic (default: smallest prime != p)");

  auto* c_coop = c_spec->add_subcommand("coop", "induced map between the free spectra");
  std::string o_map, o_prime;
  std::uint32_t o_p = 2;
  c_coop->add_option("--map", o_map, "cores|cotr|conm|coc")->required();
  c_coop->add_option("--p", o_p, "group prime")->required();
  c_coop->add_option("--prime", o_prime, "source prime")->required();

  auto* c_clo = c_spec->add_subcommand("closure", "Zariski closure of window points");
  std::string z_functor, z_window, z_points;
  std::uint32_t z_p = 2;
  c_clo->add_option("--functor", z_functor, "burnside|ru")->required();
  c_clo->add_option("--p", z_p, "group prime")->required();
  c_clo->add_option("--window", z_window, "comma-separated characteristics")->required();
  c_clo->add_option("--points", z_points, "space-separated node labels")->required();

  // --- ghost ---
  auto* c_ghost = app.add_subcommand("ghost", "ghost construction");
  c_ghost->require_subcommand(1);

  auto* c_gmap = c_ghost->add_subcommand("map", "ghost coordinates of a top element");
  std::string g_functor, g_expr;
  std::uint32_t g_p = 2;
  c_gmap->add_option("--functor", g_functor, "functor tag")->required();
  c_gmap->add_option("--p", g_p, "group prime")->required();
  c_gmap->add_option("expr", g_expr, "top-level expression")->required();

  auto* c_gprobe = c_ghost->add_subcommand("probe", "kernel, commutation, and monad checks");
  std::string gp_functor;
  std::uint32_t gp_p = 2;
  std::uint64_t gp_trials = 200, gp_seed = 0;
  c_gprobe->add_option("--functor", gp_functor, "functor tag")->required();
  c_gprobe->add_option("--p", gp_p, "group prime")->required();
  c_gprobe->add_option("--trials", gp_trials, "sample count");
  c_gprobe->add_option("--seed", gp_seed, "random seed")->required();

  // --- fixedpoint ---
  auto* c_fp = app.add_subcommand("fixedpoint", "fixed-point functor checks");
  c_fp->require_subcommand(1);
  auto* c_fpc = c_fp->add_subcommand("check", "spectrum correspondence checks");
  std::string f_kind;
  std::uint32_t f_p = 2;
  std::uint64_t f_trials = 60, f_seed = 0;
  c_fpc->add_option("--kind", f_kind, "zmodp|swap|cyclic")->required();
  c_fpc->add_option("--p", f_p, "group prime")->required();
  c_fpc->add_option("--trials", f_trials, "sample count");
  c_fpc->add_option("--seed", f_seed, "random seed")->required();

  // --- express-t ---
  auto* c_ex = app.add_subcommand("express-t", "transfer classes in the generators");
  std::uint32_t x_p = 2, x_max = 8;
  bool x_list = false;
  c_ex->add_option("--p", x_p, "group prime (2 or 3)")->required();
  c_ex->add_option("--max-abs", x_max, "entry and degree bound");
  c_ex->add_flag("--list", x_list, "print one identity per orbit class");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    // ----- eval -----
    if (c_eval->parsed()) {
      Functor F(functor_by_name(e_functor, e_p));
      auto lvl_of = [&](const std::string& dflt) {
        std::string lv = e_level == "auto" ? dflt : e_level;
        if (lv == "top") return Level::Top;
        if (lv == "bottom") return Level::Bottom;
        throw ParseError("level must be top or bottom", 0);
      };
      auto need = [&](std::size_t n) {
        if (e_exprs.size() != n)
          throw ParseError("operation '" + e_op + "' takes " + std::to_string(n) +
                               " expression(s)",
                           0);
      };
      Elem result = F.zero(Level::Bottom);
      if (e_op == "add" || e_op == "sub" || e_op == "mul") {
        need(2);
        Level lv = lvl_of("top");
        Elem a = parse_elem(F, lv, e_exprs[0]);
        Elem b = parse_elem(F, lv, e_exprs[1]);
        result = e_op == "add" ? F.add(a, b) : e_op == "sub" ? F.sub(a, b) : F.mul(a, b);
      } else if (e_op == "res") {
        need(1);
        result = F.res(parse_elem(F, Level::Top, e_exprs[0]));
      } else if (e_op == "tr") {
        need(1);
        result = F.tr(parse_elem(F, Level::Bottom, e_exprs[0]));
      } else if (e_op == "nm") {
        need(1);
        result = F.nm(parse_elem(F, Level::Bottom, e_exprs[0]));
      } else if (e_op == "conj") {
        need(1);
        result = F.conj(parse_elem(F, lvl_of("bottom"), e_exprs[0]), e_k);
      } else {
        throw ParseError("unknown operation '" + e_op + "'", 0);
      }
      out << F.print(result) << "\n";
      return 0;
    }

    // ----- axioms -----
    if (c_ax->parsed()) {
      if (a_trials < 1) throw ParseError("trials must be at least 1", 0);
      std::vector<AxiomReport> reports;
      for (std::uint32_t p : parse_prime_list(a_plist)) {
        std::vector<FunctorSpec> specs;
        if (a_functor == "all")
          specs = catalog(p);
        else
          specs.push_back(functor_by_name(a_functor, p));
        for (const FunctorSpec& spec : specs)
          reports.push_back(check_axioms(spec, a_trials, a_seed));
      }
      bool all_ok = true;
      for (const AxiomReport& r : reports) all_ok = all_ok && r.ok();
      if (a_format == "json") {
        nlohmann::json j;
        j["results"] = nlohmann::json::array();
        for (const AxiomReport& r : reports) {
          nlohmann::json one;
          one["functor"] = r.fn.name();
          one["p"] = r.fn.p;
          one["trials"] = r.trials;
          one["checks"] = r.checks;
          one["ok"] = r.ok();
          one["laws"] = nlohmann::json::object();
          for (const auto& [law, count] : r.law_counts) one["laws"][law] = count;
          one["violations"] = r.violations;
          j["results"].push_back(one);
        }
        j["ok"] = all_ok;
        out << j.dump(2) << "\n";
      } else if (a_format == "text") {
        for (const AxiomReport& r : reports) {
          out << r.fn.name() << " p=" << r.fn.p << ": " << (r.ok() ? "PASS" : "FAIL")
              << " (trials=" << r.trials << ", checks=" << r.checks << ")\n";
          for (const std::string& v : r.violations) out << "  " << v << "\n";
        }
        out << (all_ok ? "all laws hold" : "violations found") << "\n";
      } else {
        throw ParseError("format must be text or json", 0);
      }
      return all_ok ? 0 : 1;
    }

    // ----- spec list -----
    if (c_list->parsed()) {
      SpecPoset S = [&] {
        auto w = parse_window(l_window);
        if (l_functor == "burnside") return spec_burnside(l_p, w);
        if (l_functor == "ru") return spec_ru(l_p, w);
        throw UnsupportedError(
            "spectrum enumeration is implemented for the pair and group-ring functors");
      }();
      if (l_format == "dot") {
        out << S.dot() << "\n";
      } else if (l_format == "json") {
        out << S.json() << "\n";
      } else if (l_format == "text") {
        out << "nodes: " << S.size() << "\n";
        for (std::size_t i = 0; i < S.size(); ++i)
          out << S.node(i).label << "  " << S.node(i).prime.str() << "\n";
        out << "hasse:\n";
        for (const auto& [i, j] : S.hasse_edges())
          out << S.node(i).label << " -> " << S.node(j).label << "\n";
      } else {
        throw ParseError("format must be text, dot, or json", 0);
      }
      return 0;
    }

    // ----- spec contains -----
    if (c_cont->parsed()) {
      FunctorSpec spec = functor_by_name(t_functor, t_p);
      TambaraPrime A = build_prime(spec, t_a);
      TambaraPrime B = build_prime(spec, t_b);
      CompareResult r = compare_primes(A, B);
      out << outcome_token(r.outcome) << "\n";
      const Functor& F = A.functor();
      if (r.outcome == CompareOutcome::LessThan && r.backward.witness)
        out << "strictness witness (in b, not in a): " << F.print(*r.backward.witness) << "\n";
      if (r.outcome == CompareOutcome::GreaterThan && r.forward.witness)
        out << "strictness witness (in a, not in b): " << F.print(*r.forward.witness) << "\n";
      if (r.outcome == CompareOutcome::Incomparable) {
        if (r.forward.witness)
          out << "witness (in a, not in b): " << F.print(*r.forward.witness) << "\n";
        if (r.backward.witness)
          out << "witness (in b, not in a): " << F.print(*r.backward.witness) << "\n";
      }
      if (r.outcome == CompareOutcome::Undecided) {
        if (!r.forward.note.empty()) out << "note: " << r.forward.note << "\n";
        if (!r.backward.note.empty()) out << "note: " << r.backward.note << "\n";
        return 4;
      }
      return 0;
    }

    // ----- spec dim -----
    if (c_dim->parsed()) {
      FunctorSpec spec = functor_by_name(d_functor, d_p);
      KrullCertificate cert = krull_certificate(spec, d_q);
      Functor F(spec);
      out << "dim = " << cert.dim << "\n";
      out << "upper bound: " << cert.upper_bound << "\n";
      out << "chain:\n";
      for (std::size_t i = 0; i < cert.chain.size(); ++i)
        out << "  [" << i << "] " << cert.chain[i].str() << "\n";
      if (!cert.witnesses.empty()) out << "witnesses:\n";
      for (std::size_t i = 0; i < cert.witnesses.size(); ++i)
        out << "  [" << i << "] " << F.print(cert.witnesses[i]) << "  (in [" << (i + 1)
            << "], not in [" << i << "])\n";
      for (const std::string& n : cert.notes) out << "note: " << n << "\n";
      out << "verified: " << (cert.verified ? "yes" : "no") << "\n";
      return cert.verified ? 0 : 1;
    }

    // ----- spec coop -----
    if (c_coop->parsed()) {
      CoopKind kind;
      if (o_map == "cores") kind = CoopKind::Cores;
      else if (o_map == "cotr") kind = CoopKind::Cotr;
      else if (o_map == "conm") kind = CoopKind::Conm;
      else if (o_map == "coc") kind = CoopKind::Coc;
      else throw ParseError("map must be cores, cotr, conm, or coc", 0);
      FunctorSpec src = kind == CoopKind::Cores
                            ? make_functor(FunctorKind::FreeFixed, o_p)
                            : make_functor(FunctorKind::FreeUnderlying, o_p);
      TambaraPrime P = build_prime(src, o_prime);
      out << coop_map(kind, P).str() << "\n";
      return 0;
    }

    // ----- spec closure -----
    if (c_clo->parsed()) {
      SpecPoset S = [&] {
        auto w = parse_window(z_window);
        if (z_functor == "burnside") return spec_burnside(z_p, w);
        if (z_functor == "ru") return spec_ru(z_p, w);
        throw UnsupportedError(
            "spectrum enumeration is implemented for the pair and group-ring functors");
      }();
      std::vector<std::size_t> pts;
      std::size_t i = 0;
      while (i < z_points.size()) {
        std::size_t j = z_points.find(' ', i);
        if (j == std::string::npos) j = z_points.size();
        std::string label = z_points.substr(i, j - i);
        if (!label.empty()) {
          auto idx = S.find(label);
          if (!idx) throw LevelError("no node labeled '" + label + "' in this window");
          pts.push_back(*idx);
        }
        i = j + 1;
      }
      if (pts.empty()) throw ParseError("no points given", 0);
      for (std::size_t k : S.closure(pts)) out << S.node(k).label << "\n";
      return 0;
    }

    // ----- ghost map -----
    if (c_gmap->parsed()) {
      FunctorSpec spec = functor_by_name(g_functor, g_p);
      Functor F(spec);
      Ghost G(spec);
      out << G.print(G.ghost_map(parse_elem(F, Level::Top, g_expr))) << "\n";
      return 0;
    }

    // ----- ghost probe -----
    if (c_gprobe->parsed()) {
      FunctorSpec spec = functor_by_name(gp_functor, gp_p);
      Functor T(spec);
      Ghost G(spec);
      KernelReport ker = ghost_kernel_probe(spec, gp_trials, gp_seed);
      SampleBounds sb;
      Rng rng(gp_seed + 1);
      std::uint64_t comm = 0, monad = 0;
      std::vector<std::string> comm_bad, monad_bad;
      auto flag = [&](std::vector<std::string>& sink, bool ok, const char* what) {
        if (!ok && sink.size() < 8) sink.push_back(what);
      };
      for (std::uint64_t i = 0; i < gp_trials; ++i) {
        Elem z = T.random_elem(rng, Level::Top, sb);
        Elem w = T.random_elem(rng, Level::Top, sb);
        Elem b = T.random_elem(rng, Level::Bottom, sb);
        flag(comm_bad, G.ghost_map(T.add(z, w)) == G.add(G.ghost_map(z), G.ghost_map(w)),
             "ghost map does not respect add");
        flag(comm_bad, G.ghost_map(T.mul(z, w)) == G.mul(G.ghost_map(z), G.ghost_map(w)),
             "ghost map does not respect mul");
        flag(comm_bad, G.ghost_map(T.tr(b)) == G.tr(b), "ghost map does not respect tr");
        flag(comm_bad, G.ghost_map(T.nm(b)) == G.nm(b), "ghost map does not respect nm");
        comm += 4;
        GhostTop gz = G.random_top(rng, sb);
        flag(monad_bad, G.mu(G.eta1(gz)) == gz, "monad unit (outer) fails");
        flag(monad_bad, G.mu(G.eta2(gz)) == gz, "monad unit (inner) fails");
        Ghost3Top g3 = G.random_g3(rng, sb);
        flag(monad_bad, G.mu(G.mu_outer(g3)) == G.mu(G.mu_inner(g3)),
             "monad associativity fails");
        monad += 3;
      }
      out << "functor: " << spec.name() << " p=" << spec.p << "\n";
      if (ker.kernel_is_transfer_image)
        out << "kernel: transfer image; p*K = 0 and K^2 = 0 hold exactly (" << ker.samples
            << " samples)\n";
      else
        out << "kernel: trivial on samples; ghost map injective (" << ker.samples
            << " samples)\n";
      out << "commutation: " << (comm_bad.empty() ? "PASS" : "FAIL") << " (" << comm
          << " checks)\n";
      out << "monad: " << (monad_bad.empty() ? "PASS" : "FAIL") << " (" << monad
          << " checks)\n";
      bool all_ok = ker.ok() && comm_bad.empty() && monad_bad.empty();
      for (const std::string& v : ker.violations) out << "  " << v << "\n";
      for (const std::string& v : comm_bad) out << "  " << v << "\n";
      for (const std::string& v : monad_bad) out << "  " << v << "\n";
      out << (all_ok ? "PASS" : "FAIL") << "\n";
      return all_ok ? 0 : 1;
    }

    // ----- fixedpoint check -----
    if (c_fpc->parsed()) {
      FPKind kind;
      if (f_kind == "zmodp") kind = FPKind::ZModP;
      else if (f_kind == "swap") kind = FPKind::SwapPoly;
      else if (f_kind == "cyclic") kind = FPKind::CyclicPoly;
      else throw ParseError("kind must be zmodp, swap, or cyclic", 0);
      FunctorSpec spec = make_functor(FunctorKind::FixedPoint, f_p, kind);
      FixedPointReport rep = fixed_point_spec(spec, f_seed, static_cast<std::uint32_t>(f_trials));
      out << "kind: " << f_kind << " p=" << f_p << "\n";
      out << "singleton: " << (rep.singleton ? "yes" : "no") << "\n";
      out << "checks: " << rep.checks << "\n";
      for (const std::string& v : rep.violations) out << "  " << v << "\n";
      out << (rep.ok() ? "PASS" : "FAIL") << "\n";
      return rep.ok() ? 0 : 1;
    }

    // ----- express-t -----
    if (c_ex->parsed()) {
      Functor U(make_functor(FunctorKind::FreeUnderlying, x_p));
      std::vector<Mono> reps;
      Mono v(x_p, 0);
      while (true) {
        if (mono_degree(v) <= x_max && U.canon_rot(v) == v) reps.push_back(v);
        std::size_t i = 0;
        for (; i < x_p; ++i) {
          if (++v[i] <= x_max) break;
          v[i] = 0;
        }
        if (i == x_p) break;
      }
      std::uint64_t ok_count = 0;
      std::vector<std::string> bad;
      for (const Mono& r : reps) {
        TExpression ex = express_t(x_p, r);
        bool good = U.eq(ex.evaluate(U), U.fu_t(r));
        std::string target = "t[";
        for (std::size_t i = 0; i < r.size(); ++i) {
          if (i) target += ",";
          target += std::to_string(r[i]);
        }
        target += "]";
        if (x_list) out << target << " = " << ex.str() << "\n";
        if (good)
          ++ok_count;
        else if (bad.size() < 8)
          bad.push_back(target + " does not re-expand");
      }
      for (const std::string& b : bad) out << b << "\n";
      out << "p = " << x_p << ": " << ok_count << " of " << reps.size()
          << " orbit classes with |v| <= " << x_max << " re-expand exactly\n";
      return bad.empty() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "parse error at position " << e.pos << ": " << e.what() << "\n";
    return 2;
  } catch (const UndecidedError& e) {
    err << "undecided: " << e.what() << "\n";
    return 4;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 5;
  } catch (const LevelError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  err << "no command\n";
  return 2;
}

}  // namespace cli
}  // namespace nakaoka
