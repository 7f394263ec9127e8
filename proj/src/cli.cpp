#include "hilbstab/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hilbstab/equivalence_engine.hpp"
#include "hilbstab/error.hpp"
#include "hilbstab/grothendieck_series.hpp"
#include "hilbstab/interval_engine.hpp"
#include "hilbstab/surface_spec.hpp"

namespace hilbstab::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kCaveat = "(valid for e \xE2\x89\xA5 e\xE2\x82\x80)";  // (valid for e ≥ e₀)

struct Options {
  std::string spec_path;
  std::string format = "text";
  bool assume_asymptotic = false;
  std::string e_min = "1";
  std::string e_max;
  std::string d;
  std::string d_prime;
  std::string e = "1";
  std::string n;
  std::int64_t horizon = 1000;
  unsigned n_max = 5;
};

bool machine(const Options& o) { return o.format == "machine"; }

std::optional<Integer> opt_integer(const std::string& s, const char* flag) {
  if (s.empty()) return std::nullopt;
  try {
    return parse_integer(s);
  } catch (const InvalidInput&) {
    throw InvalidInput(std::string(flag) + ": expected an integer, got '" + s + "'");
  }
}

std::string interval_str(const IntInterval& I) {
  if (I.empty()) return "empty";
  return "[" + I.lo.get_str() + ", " + I.hi.get_str() + "]";
}

ojson interval_json(const IntInterval& I) {
  return {{"lo", I.lo.get_str()}, {"hi", I.hi.get_str()}, {"empty", I.empty()}};
}

ojson surface_json(const SurfaceSpec& spec) {
  const auto& P = spec.surface;
  ojson degrees = ojson::array();
  for (const auto& d : P.surface.point_degrees) degrees.push_back(d.get_str());
  return {{"name", P.name},
          {"c1_sq", P.bundle.c1_sq.get_str()},
          {"c1_dot_K", P.bundle.c1_dot_K.get_str()},
          {"K_sq", P.surface.K_sq.get_str()},
          {"h2", P.surface.h2.get_str()},
          {"points", degrees}};
}

void surface_text(std::ostream& out, const SurfaceSpec& spec) {
  const auto& P = spec.surface;
  out << "surface: " << P.name << "\n";
  out << "c1^2 = " << P.bundle.c1_sq << ", c1.K = " << P.bundle.c1_dot_K
      << ", K^2 = " << P.surface.K_sq << ", h2 = " << P.surface.h2 << "\n";
  out << "points:";
  for (const auto& d : P.surface.point_degrees) out << " " << d;
  out << "\n";
}

std::vector<Integer> distinct(const std::vector<Integer>& v) {
  std::set<Integer> s(v.begin(), v.end());
  return {s.begin(), s.end()};
}

std::optional<Integer> pick_d_prime(const Options& o, const SurfaceSpec& spec) {
  if (auto dp = opt_integer(o.d_prime, "--d-prime")) {
    if (*dp < 1) throw InvalidInput("--d-prime must be positive");
    return dp;
  }
  if (!spec.blowup_cycles.empty()) {
    return *std::max_element(spec.blowup_cycles.begin(), spec.blowup_cycles.end());
  }
  return std::nullopt;
}

// Returns true (and reports) when the Kodaira guard blocks the pipeline.
bool blocked(const SurfaceSpec& spec, std::ostream& err) {
  const auto diag = kodaira_guard(spec.h0_omega_positive, spec.h0_pluricanonical_positive);
  if (diag.blocked) err << "blocked: " << diag.message << "\n";
  return diag.blocked;
}

// ---------------------------------------------------------------------------

int cmd_intervals(const Options& o, std::ostream& out, std::ostream& err) {
  const SurfaceSpec spec = parse_surface_spec(o.spec_path);
  if (spec.kind == SurfaceSpec::Kind::brauer_severi) {
    err << "Brauer-Severi surfaces follow the gcd(n, ind) rule directly; use 'classes'\n";
    return kInapplicable;
  }
  if (blocked(spec, err)) return kInapplicable;

  const Integer e_min = *opt_integer(o.e_min, "--e-min");
  const Integer e_max = o.e_max.empty() ? Integer(e_min + 9) : *opt_integer(o.e_max, "--e-max");
  if (e_min < 1 || e_max < e_min) throw InvalidInput("need 1 <= --e-min <= --e-max");
  const auto d_prime = pick_d_prime(o, spec);
  std::vector<Integer> degrees;
  if (auto d = opt_integer(o.d, "--d")) {
    if (*d < 1) throw InvalidInput("--d must be positive");
    degrees.push_back(*d);
  } else {
    degrees = distinct(spec.surface.surface.point_degrees);
  }
  const auto& P = spec.surface;

  int code = kOk;
  ojson tables = ojson::array();
  if (!machine(o)) surface_text(out, spec);
  for (const auto& d : degrees) {
    ojson rows = ojson::array();
    if (!machine(o)) {
      out << "\nd = " << d;
      if (d_prime) out << ", d' = " << *d_prime;
      out << "\n";
      out << std::setw(6) << "e" << "  " << std::left << std::setw(22) << "I_e" << std::setw(22)
          << "gap_e";
      if (d_prime) out << std::setw(22) << "I~_{e+1}" << "filled";
      out << std::right << "\n";
    }
    for (Integer e = e_min; e <= e_max; ++e) {
      const IntInterval I = interval_Ie(P, e, d);
      const IntInterval g = gap(P, e, d);
      std::optional<IntInterval> filler;
      if (d_prime) filler = interval_Ie_blowup(P, e + 1, d, *d_prime);
      const bool filled = filler && filler->covers(g);
      if (machine(o)) {
        ojson row{{"e", e.get_str()}, {"I_e", interval_json(I)}, {"gap_e", interval_json(g)}};
        if (filler) {
          row["blowup_next"] = interval_json(*filler);
          row["filled"] = filled;
        }
        rows.push_back(std::move(row));
      } else {
        out << std::setw(6) << e << "  " << std::left << std::setw(22) << interval_str(I)
            << std::setw(22) << interval_str(g);
        if (filler) out << std::setw(22) << interval_str(*filler) << (filled ? "yes" : "no");
        out << std::right << "\n";
      }
    }

    ojson coverage;
    std::string verdict;
    try {
      const CoverageVerdict v = gaps_coverable(P, d, d_prime);
      coverage = {{"applicable", true}, {"coverable", v.coverable},
                  {"reason", std::string(to_string(v.reason))}};
      std::ostringstream os;
      os << "coverage: " << (v.coverable ? "yes" : "no") << " (" << to_string(v.reason) << ")";
      if (v.reason == CoverageReason::blowup_fill && !v.coverable) {
        os << ", needs a blow-up cycle of degree d' >= " << 2 * d;
      }
      if (v.reason == CoverageReason::growing_gaps) {
        os << ", c1^2 + c1.K > 0 so the gaps grow with e";
        code = kInapplicable;
      }
      if (v.coverable) {
        try {
          const Integer n_star = coverage_threshold(P, d, d_prime, e_min, Integer(o.horizon));
          coverage["n_star"] = n_star.get_str();
          os << "\ncovered: every n in [" << n_star << ", " << o.horizon << "]";
        } catch (const HorizonError& ex) {
          coverage["n_star"] = nullptr;
          os << "\ncovered: " << ex.what();
          code = std::max(code, int(kHorizon));
        } catch (const Inapplicable& ex) {
          coverage["n_star"] = nullptr;
          os << "\ncovered: " << ex.what();
          code = kInapplicable;
        }
      }
      verdict = os.str();
    } catch (const Inapplicable& ex) {
      coverage = {{"applicable", false}, {"reason", ex.what()}};
      verdict = std::string("inapplicable: ") + ex.what() +
                "; I_e is nonempty for infinitely many e only when c1(L).K_X < 0";
      code = kInapplicable;
    }
    if (machine(o)) {
      tables.push_back({{"d", d.get_str()},
                        {"d_prime", d_prime ? ojson(d_prime->get_str()) : ojson(nullptr)},
                        {"rows", rows},
                        {"coverage", coverage}});
    } else {
      out << verdict << "\n";
    }
  }

  if (machine(o)) {
    out << ojson{{"command", "intervals"},
                 {"surface", surface_json(spec)},
                 {"conditional", !o.assume_asymptotic},
                 {"tables", tables},
                 {"exit_code", code}}
               .dump(2)
        << "\n";
  } else if (!o.assume_asymptotic) {
    out << kCaveat << "\n";
  }
  return code;
}

// ---------------------------------------------------------------------------

struct Pipeline {
  ClassPartition classes;
  std::string description;
};

Pipeline run_pipeline(const Options& o, const SurfaceSpec& spec) {
  const Integer e_min = *opt_integer(o.e_min, "--e-min");
  if (o.horizon < 1) throw InvalidInput("--horizon must be positive");
  const auto& degrees = spec.surface.surface.point_degrees;
  std::ostringstream desc;
  switch (spec.kind) {
    case SurfaceSpec::Kind::brauer_severi:
      desc << "gcd rule, ind = " << *spec.bs_index;
      return {brauer_severi_classes(*spec.bs_index, o.horizon), desc.str()};
    case SurfaceSpec::Kind::conic_bundle:
      desc << "conic bundle intervals I_(e,b), e >= " << e_min;
      return {conic_bundle_classes(*spec.conic, degrees, e_min, o.horizon), desc.str()};
    case SurfaceSpec::Kind::polarized: {
      auto d_prime = pick_d_prime(o, spec);
      if (!d_prime) d_prime = 2 * distinct(degrees).back();
      desc << "intervals I_e with blow-up fillers (d' = " << *d_prime << "), e >= " << e_min;
      return {polarized_classes(spec.surface, e_min, o.horizon, d_prime), desc.str()};
    }
  }
  throw std::logic_error("unreachable");
}

std::string shortfall(const ClassPartition& cp) {
  std::ostringstream os;
  os << "certificate needs horizon >= n0 + 2*period = " << cp.n0 + 2 * cp.period << ", have "
     << cp.horizon;
  return os.str();
}

int cmd_classes(const Options& o, std::ostream& out, std::ostream& err) {
  const SurfaceSpec spec = parse_surface_spec(o.spec_path);
  if (blocked(spec, err)) return kInapplicable;
  const Pipeline pl = run_pipeline(o, spec);
  const ClassPartition& cp = pl.classes;
  const int code = cp.certified ? kOk : kHorizon;
  const std::int64_t shown = std::min(cp.horizon, cp.n0 + cp.period - 1);
  const bool caveat = cp.conditional && !o.assume_asymptotic;

  if (machine(o)) {
    ojson labels = ojson::array();
    for (std::int64_t n = 0; n <= cp.horizon; ++n) labels.push_back(cp.label(n));
    out << ojson{{"command", "classes"},
                 {"surface", surface_json(spec)},
                 {"pipeline", pl.description},
                 {"horizon", cp.horizon},
                 {"n0", cp.n0},
                 {"period", cp.period},
                 {"certified", cp.certified},
                 {"conditional", caveat},
                 {"eventual_classes", cp.eventual_classes()},
                 {"labels", labels},
                 {"exit_code", code}}
               .dump(2)
        << "\n";
  } else {
    surface_text(out, spec);
    out << "pipeline: " << pl.description << "\n";
    out << "horizon: " << cp.horizon << "\n";
    out << "n0: " << cp.n0 << "\n";
    out << "period: " << cp.period << "\n";
    out << "certified: " << (cp.certified ? "yes" : "no") << "\n";
    out << "eventual classes:";
    for (auto c : cp.eventual_classes()) out << " " << label_str(c);
    out << "\n";
    out << "labels 0.." << shown << ":";
    for (std::int64_t n = 0; n <= shown; ++n) out << " " << label_str(cp.label(n));
    out << "\n";
    if (caveat) out << kCaveat << "\n";
  }
  if (!cp.certified) err << "uncertified: " << shortfall(cp) << "\n";
  return code;
}

// ---------------------------------------------------------------------------

int cmd_zeta(const Options& o, std::ostream& out, std::ostream& err) {
  const SurfaceSpec spec = parse_surface_spec(o.spec_path);
  if (!spec.surface.surface.char_zero) {
    err << "unsupported: rationality modulo L is only established in characteristic zero "
           "(weak factorization)\n";
    return kInapplicable;
  }
  if (blocked(spec, err)) return kInapplicable;
  const Pipeline pl = run_pipeline(o, spec);
  if (!pl.classes.certified) {
    err << "uncertified: " << shortfall(pl.classes) << "\n";
    return kHorizon;
  }
  const LabeledSeries s = zeta_series(pl.classes, pl.classes.horizon);
  const RationalSeries r = rationalize(s);
  const bool ok = verify_rational(r, s, s.horizon());
  const bool caveat = pl.classes.conditional && !o.assume_asymptotic;

  if (machine(o)) {
    ojson head = ojson::array(), tail = ojson::array();
    for (auto c : r.head) head.push_back(label_str(c));
    for (auto c : r.tail) tail.push_back(label_str(c));
    out << ojson{{"command", "zeta"},
                 {"surface", surface_json(spec)},
                 {"pipeline", pl.description},
                 {"rational_form", r.str()},
                 {"head", head},
                 {"tail_numerator", tail},
                 {"n0", r.n0},
                 {"period", r.p},
                 {"verified_through", s.horizon()},
                 {"verified", ok},
                 {"conditional", caveat}}
               .dump(2)
        << "\n";
  } else {
    surface_text(out, spec);
    out << "pipeline: " << pl.description << "\n";
    out << "zeta mod L: " << r.str() << "\n";
    out << "n0: " << r.n0 << "\n";
    out << "period: " << r.p << "\n";
    out << "verified through t^" << s.horizon() << ": " << (ok ? "yes" : "no") << "\n";
    if (caveat) out << kCaveat << "\n";
  }
  return ok ? kOk : kHorizon;
}

// ---------------------------------------------------------------------------

int cmd_goettsche(const Options& o, std::ostream& out, std::ostream&) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (unsigned n = 0; n <= o.n_max; ++n) {
    const ClassPoly c = goettsche_class(n);
    rows.emplace_back(c.str(), reduce_mod_L(c).str());
  }
  if (machine(o)) {
    ojson arr = ojson::array();
    for (unsigned n = 0; n <= o.n_max; ++n) {
      arr.push_back({{"n", n}, {"hilb", rows[n].first}, {"mod_L", rows[n].second}});
    }
    out << ojson{{"command", "goettsche"}, {"rows", arr}}.dump(2) << "\n";
    return kOk;
  }
  std::size_t w = std::string("[Hilb^n]").size();
  for (const auto& r : rows) w = std::max(w, r.first.size());
  out << std::left << std::setw(4) << "n" << std::setw(static_cast<int>(w) + 2) << "[Hilb^n]"
      << "mod L\n";
  for (unsigned n = 0; n <= o.n_max; ++n) {
    out << std::setw(4) << n << std::setw(static_cast<int>(w) + 2) << rows[n].first
        << rows[n].second << "\n";
  }
  out << std::right;
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_check(const Options& o, std::ostream& out, std::ostream&) {
  const SurfaceSpec spec = parse_surface_spec(o.spec_path);
  const auto& P = spec.surface;
  const Integer e = *opt_integer(o.e, "--e");
  const auto n_opt = opt_integer(o.n, "--n");
  if (!n_opt) throw InvalidInput("check: --n is required");
  const Integer& n = *n_opt;
  if (n < 0) throw InvalidInput("--n must be non-negative");
  Integer d = distinct(P.surface.point_degrees).front();
  if (auto dd = opt_integer(o.d, "--d")) d = *dd;

  const AssumptionReport rep = check_assumptions(P, e, d, n);
  const IntInterval I = interval_Ie(P, e, d);
  const IndexResult ind = index(P.surface.point_degrees);
  const auto kod = kodaira_guard(spec.h0_omega_positive, spec.h0_pluricanonical_positive);
  const bool inf = infinitely_nonempty(P, d);
  const auto from = nonempty_from(P, d);

  std::string combo;
  for (std::size_t i = 0; i < ind.combination.size(); ++i) {
    const auto& t = ind.combination[i];
    const Integer mag = abs(t.coeff);
    if (i == 0) {
      combo += (t.coeff < 0 ? "-" : "");
    } else {
      combo += (t.coeff < 0 ? " - " : " + ");
    }
    combo += mag.get_str() + "*" + t.degree.get_str();
  }

  if (machine(o)) {
    out << ojson{{"command", "check"},
                 {"surface", surface_json(spec)},
                 {"e", e.get_str()},
                 {"d", d.get_str()},
                 {"n", n.get_str()},
                 {"h0", rep.h0.get_str()},
                 {"genus", rep.genus.get_str()},
                 {"a2_holds", rep.a2_holds},
                 {"a5_holds", rep.a5_holds},
                 {"a1_a3_a4", "asymptotic-only"},
                 {"I_e", interval_json(I)},
                 {"in_I_e", I.contains(n)},
                 {"infinitely_nonempty", inf},
                 {"nonempty_from", from ? ojson(from->get_str()) : ojson(nullptr)},
                 {"index", ind.g.get_str()},
                 {"index_combination", combo},
                 {"kodaira_blocked", kod.blocked},
                 {"conditional", !o.assume_asymptotic}}
               .dump(2)
        << "\n";
  } else {
    surface_text(out, spec);
    out << "e = " << e << ", d = " << d << ", n = " << n << "\n";
    out << "h0(L^e) = " << rep.h0 << " (chi)\n";
    out << "p_a(|L^e|) = " << rep.genus << "\n";
    out << "assumption 2 (h0 >= n + 1 + 2d): " << (rep.a2_holds ? "holds" : "fails") << "\n";
    out << "assumption 5 (p_a <= n): " << (rep.a5_holds ? "holds" : "fails") << "\n";
    out << "assumptions 1, 3, 4: asymptotic-only\n";
    out << "I_e = " << interval_str(I) << (I.contains(n) ? " contains n" : " does not contain n")
        << "\n";
    out << "I_e nonempty for infinitely many e: " << (inf ? "yes" : "no");
    if (from) out << " (from e = " << *from << ")";
    out << "\n";
    out << "index: " << ind.g << " = " << combo << "\n";
    if (kod.blocked) out << "kodaira guard: " << kod.message << "\n";
    if (!o.assume_asymptotic) out << kCaveat << "\n";
  }
  return kod.blocked ? kInapplicable : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable-birational classes of Hilbert schemes of points on surfaces"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));
    sub->add_flag("--assume-asymptotic", o.assume_asymptotic,
                  "Suppress the e >= e0 validity marker");
  };
  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("spec", o.spec_path, "Surface spec (JSON)")->required();
  };

  auto* intervals = app.add_subcommand("intervals", "Tabulate I_e, gaps and blow-up fillers");
  add_spec(intervals);
  add_common(intervals);
  intervals->add_option("--e-min", o.e_min, "First tensor power");
  intervals->add_option("--e-max", o.e_max, "Last tensor power (default e-min + 9)");
  intervals->add_option("--d", o.d, "Degree of Q (default: each point degree)");
  intervals->add_option("--d-prime", o.d_prime, "Degree of the blow-up cycle");
  intervals->add_option("--horizon", o.horizon, "Coverage window");

  auto* classes = app.add_subcommand("classes", "Partition {Hilb^n} into stable-birational classes");
  add_spec(classes);
  add_common(classes);
  classes->add_option("--e-min", o.e_min, "First tensor power");
  classes->add_option("--horizon", o.horizon, "Largest n");
  classes->add_option("--d-prime", o.d_prime, "Degree of the blow-up cycle");

  auto* zeta = app.add_subcommand("zeta", "Rational form of the Hilbert zeta function mod L");
  add_spec(zeta);
  add_common(zeta);
  zeta->add_option("--e-min", o.e_min, "First tensor power");
  zeta->add_option("--horizon", o.horizon, "Largest n");
  zeta->add_option("--d-prime", o.d_prime, "Degree of the blow-up cycle");

  auto* goettsche = app.add_subcommand("goettsche", "Classes [Hilb^n] and their reductions mod L");
  add_common(goettsche);
  goettsche->add_option("--n-max", o.n_max, "Largest n")->check(CLI::Range(0u, 40u));

  auto* check = app.add_subcommand("check", "Numeric assumption checks for one (e, d, n)");
  add_spec(check);
  add_common(check);
  check->add_option("--e", o.e, "Tensor power");
  check->add_option("--d", o.d, "Degree of Q (default: smallest point degree)");
  check->add_option("--n", o.n, "Number of points")->required();

  std::vector<std::string> argv_store{"hilbstab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*intervals) return cmd_intervals(o, out, err);
    if (*classes) return cmd_classes(o, out, err);
    if (*zeta) return cmd_zeta(o, out, err);
    if (*goettsche) return cmd_goettsche(o, out, err);
    if (*check) return cmd_check(o, out, err);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Inapplicable& e) {
    err << "inapplicable: " << e.what() << "\n";
    return kInapplicable;
  } catch (const HorizonError& e) {
    err << "insufficient horizon: " << e.what() << "\n";
    return kHorizon;
  }
  return kUsage;
}

}  // namespace hilbstab::cli
