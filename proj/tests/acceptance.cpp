// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fail.
// Lines starting with "  note:" are diagnostics and do not affect the verdict.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "hilbstab/cli.hpp"
#include "hilbstab/equivalence_engine.hpp"
#include "hilbstab/error.hpp"
#include "hilbstab/grothendieck_series.hpp"
#include "hilbstab/interval_engine.hpp"
#include "hilbstab/surface_model.hpp"
#include "oracles.hpp"

using namespace hilbstab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Tuple {
  long c1_sq, c1_K, h2, e, d, d_prime;
};

// The shared random sweep: c1_sq, c1_dot_K in [-20, 20], h2 in [0, 5],
// e in [1, 50], d and d' in [1, 10], with c1^2 + c1.K even.
std::vector<Tuple> sweep(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Tuple> out;
  while (out.size() < count) {
    Tuple t{oracle::uniform(rng, -20, 20), oracle::uniform(rng, -20, 20),
            oracle::uniform(rng, 0, 5),    oracle::uniform(rng, 1, 50),
            oracle::uniform(rng, 1, 10),   oracle::uniform(rng, 1, 10)};
    if ((t.c1_sq + t.c1_K) % 2 == 0) out.push_back(t);
  }
  return out;
}

PolarizedSurface surface_of(const Tuple& t) {
  PolarizedSurface P;
  P.surface = SurfaceData{0, t.h2, {1}, true};
  P.bundle = LineBundleClass{t.c1_sq, t.c1_K, false};
  P.name = "sweep";
  return P;
}

std::string describe(const Tuple& t) {
  std::ostringstream os;
  os << "(c1_sq=" << t.c1_sq << ", c1_dot_K=" << t.c1_K << ", h2=" << t.h2 << ", e=" << t.e
     << ", d=" << t.d << ")";
  return os.str();
}

std::string show(const IntInterval& I) {
  return "[" + I.lo.get_str() + ", " + I.hi.get_str() + "]";
}

const std::vector<Tuple> kSweep = sweep(2000, 20240601);

// ---------------------------------------------------------------------------

Outcome blowup_consistency() {
  Outcome o;
  for (const auto& t : kSweep) {
    const auto P = surface_of(t);
    const IntInterval direct = interval_Ie_blowup(P, t.e, t.d, t.d_prime);
    const IntInterval composed = interval_Ie(blow_up(P, t.e, t.d_prime), 1, t.d);
    if (!(direct == composed)) {
      o.fail("mismatch at " + describe(t) + ": " + show(direct) + " vs " + show(composed));
    }
  }
  o.detail = o.pass ? std::to_string(kSweep.size()) + " tuples agree" : o.detail;
  return o;
}

Outcome width_and_gap() {
  Outcome o;
  long width_bad = 0, gap_bad = 0, gap_bad_h2_zero = 0, h2_zero = 0, corrected_bad = 0;
  std::optional<Tuple> first_gap_bad;
  for (const auto& t : kSweep) {
    const auto P = surface_of(t);
    const IntInterval I = interval_Ie(P, t.e, t.d);
    if (I.hi - I.lo != -t.e * t.c1_K + t.h2 - 2 * t.d - 1) ++width_bad;

    const IntInterval g = gap(P, t.e, t.d);
    const Integer width = g.hi - g.lo + 1;
    const Integer printed = gap_width_formula(P, t.e, t.d);
    if (width != printed) {
      ++gap_bad;
      if (!first_gap_bad) first_gap_bad = t;
    }
    if (t.h2 == 0) {
      ++h2_zero;
      if (width != printed) ++gap_bad_h2_zero;
    }
    if (width != printed - t.h2) ++corrected_bad;
  }
  if (width_bad) o.fail(std::to_string(width_bad) + " width identity failures");
  if (gap_bad) {
    o.fail("gap width formula disagrees with the interval endpoints on " +
           std::to_string(gap_bad) + "/" + std::to_string(kSweep.size()) +
           " tuples, first at " + describe(*first_gap_bad));
  }
  if (o.pass) o.detail = "both identities hold on the sweep";
  o.notes.push_back("width identity failures: " + std::to_string(width_bad));
  o.notes.push_back("gap formula failures with h2 = 0: " + std::to_string(gap_bad_h2_zero) +
                    "/" + std::to_string(h2_zero));
  o.notes.push_back("gap width = (2e+1)(c1^2+c1.K)/2 + 2d - h2 failures: " +
                    std::to_string(corrected_bad) + "/" + std::to_string(kSweep.size()));
  {
    // a smooth quintic in P^3 with L = O(1): K = H, h2 = 4
    PolarizedSurface Q;
    Q.surface = SurfaceData{5, 4, {1}, true};
    Q.bundle = LineBundleClass{5, 5, true};
    const IntInterval g = gap(Q, 1, 1);
    o.notes.push_back("quintic surface, e=1, d=1: gap " + show(g) + " has width " +
                      Integer(g.hi - g.lo + 1).get_str() + ", formula gives " +
                      gap_width_formula(Q, 1, 1).get_str());
  }
  return o;
}

Outcome del_pezzo_one() {
  Outcome o;
  const auto D1 = catalog("del_pezzo", {1});
  auto expect = [&](const IntInterval& got, long lo, long hi, const char* what) {
    if (got.lo != lo || got.hi != hi) {
      o.fail(std::string(what) + " = " + show(got) + ", expected [" + std::to_string(lo) + ", " +
             std::to_string(hi) + "]");
    }
  };
  expect(interval_Ie(D1, 3, 1), 4, 4, "I_3");
  expect(gap(D1, 3, 1), 5, 6, "gap_3");
  if (gap(D1, 3, 1).size() != 2) o.fail("gap_3 width is not 2d");
  expect(interval_Ie_blowup(D1, 8, 1, 2), 27, 28, "blow-up interval for e=8");
  if (!(interval_Ie_blowup(D1, 8, 1, 2) == gap(D1, 7, 1))) o.fail("blow-up interval for e=8 != gap_7");
  for (long e = 7; e <= 500; ++e) {
    if (!interval_Ie_blowup(D1, e + 1, 1, 2).covers(gap(D1, e, 1))) {
      o.fail("gap_" + std::to_string(e) + " not inside the blow-up interval for e+1");
      break;
    }
  }
  const auto w = uncovered_gap_witness(D1, 1, 1, 7, 500);
  if (!w) {
    o.fail("no uncovered witness for d' = 1");
  } else if (!gap(D1, w->e, 1).contains(w->n)) {
    o.fail("witness lies outside its gap");
  }
  if (o.pass) {
    o.detail = "I_3=[4,4], gap_3=[5,6], blow-up(8)=[27,28]=gap_7, fill holds for 7<=e<=500, d'=1 witness n=" +
               w->n.get_str() + " in gap_" + w->e.get_str();
  }
  return o;
}

Outcome projective_plane(const std::string& data_dir) {
  Outcome o;
  const auto P2 = catalog("projective_plane", {});
  std::vector<IntInterval> parts;
  for (long e = 3;; ++e) {
    const IntInterval I = interval_Ie(P2, e, 1);
    if (I.lo > 10000) break;
    parts.push_back(I);
  }
  const auto merged = merge_intervals(parts, 10000);
  if (merged.empty() || merged.front().first > 1 || merged.front().second != 10000 ||
      merged.size() != 1) {
    o.fail("union of I_e (e >= 3) does not cover [1, 10000]");
  }

  std::ostringstream out, err;
  const int code = cli::run({"classes", data_dir + "/p2.json", "--e-min", "3", "--horizon",
                             "10000", "--format", "machine"},
                            out, err);
  if (code != 0) {
    o.fail("classes exited with " + std::to_string(code) + ": " + err.str());
    return o;
  }
  const auto j = nlohmann::json::parse(out.str());
  if (j["eventual_classes"].size() != 1) o.fail("more than one eventual class");
  if (j["period"] != 1) o.fail("period " + j["period"].dump());
  if (j["certified"] != true) o.fail("not certified");
  if (o.pass) o.detail = "[1, 10000] covered; one eventual class, period 1, certified";
  return o;
}

Outcome trichotomy() {
  Outcome o;
  long neg_bad = 0, nonneg_bad = 0, corrected_bad = 0;
  std::string first_neg, first_nonneg;
  for (const auto& t : kSweep) {
    const auto P = surface_of(t);
    const long slack = t.h2 - 2 * t.d - 1;
    for (long e = 1; e <= 1000; ++e) {
      const bool nonempty = !interval_Ie(P, e, t.d).empty();
      bool claim_nonempty = false, claim_empty = false;
      if (t.c1_K < 0) {
        // e >= ceil(slack / -c1.K)
        claim_nonempty = e * (-t.c1_K) >= slack;
      } else if (t.c1_K > 0) {
        claim_empty = e * t.c1_K > slack;
      } else {
        claim_empty = true;
      }
      if ((claim_nonempty && !nonempty) || (claim_empty && nonempty)) {
        std::ostringstream os;
        os << describe(Tuple{t.c1_sq, t.c1_K, t.h2, e, t.d, t.d_prime}) << " has I_e "
           << show(interval_Ie(P, e, t.d));
        if (t.c1_K < 0) {
          if (!neg_bad++) first_neg = os.str();
        } else {
          if (!nonneg_bad++) first_nonneg = os.str();
        }
      }

      // nonempty iff e (-c1.K) >= 2d + 1 - h2
      if (nonempty != (e * (-t.c1_K) >= -slack)) ++corrected_bad;
    }
  }
  if (neg_bad) {
    o.fail(std::to_string(neg_bad) +
           " (tuple, e) pairs with c1_dot_K < 0 lie past the stated bound but have empty I_e, "
           "first at " + first_neg);
  }
  if (nonneg_bad) {
    o.fail(std::to_string(nonneg_bad) +
           " (tuple, e) pairs with c1_dot_K >= 0 lie past the stated bound but have nonempty "
           "I_e, first at " + first_nonneg);
  }
  if (o.pass) o.detail = "bounds hold for e <= 1000 on the sweep";
  o.notes.push_back("c1_dot_K < 0 failures: " + std::to_string(neg_bad) +
                    "; c1_dot_K >= 0 failures: " + std::to_string(nonneg_bad));
  o.notes.push_back("I_e nonempty iff e(-c1.K) >= 2d + 1 - h2, failures: " +
                    std::to_string(corrected_bad));
  {
    const auto D1 = catalog("del_pezzo", {1});
    o.notes.push_back("del Pezzo degree 1, d=1: stated bound ceil(-3/1) = -3, yet I_1 = " +
                      show(interval_Ie(D1, 1, 1)) + " and I_2 = " + show(interval_Ie(D1, 2, 1)) +
                      "; nonempty from e = " + nonempty_from(D1, 1)->get_str());
  }
  return o;
}

Outcome goettsche_suite() {
  Outcome o;
  const auto p = oracle::partition_numbers(20);
  for (unsigned n = 0; n <= 20; ++n) {
    if (partitions(n).size() != p[n].get_ui()) o.fail("partition count wrong at n=" + std::to_string(n));
  }
  const ClassPoly x = ClassPoly::x(), L = ClassPoly::L();
  if (!(goettsche_class(2) == ClassPoly::sym(2) + x * L)) o.fail("[Hilb^2] = " + goettsche_class(2).str());
  if (!(goettsche_class(3) == ClassPoly::sym(3) + x * x * L + x * L * L)) {
    o.fail("[Hilb^3] = " + goettsche_class(3).str());
  }
  for (unsigned n = 0; n <= 20; ++n) {
    if (!(reduce_mod_L(goettsche_class(n)) == ClassPoly::sym(n))) {
      o.fail("mod L reduction at n=" + std::to_string(n) + " is " +
             reduce_mod_L(goettsche_class(n)).str());
    }
  }
  if (o.pass) o.detail = "p(n) for n<=20, [Hilb^2], [Hilb^3], mod L = s_n for n<=20";
  return o;
}

Outcome zeta_round_trip() {
  Outcome o;
  auto round_trip = [&](const ClassPartition& cp, const char* name) -> std::optional<RationalSeries> {
    const auto s = zeta_series(cp, cp.horizon);
    const auto r = rationalize(s);
    const std::int64_t order = r.n0 + 5 * r.p;
    if (order > s.horizon()) {
      o.fail(std::string(name) + ": horizon below n0 + 5 period");
      return std::nullopt;
    }
    if (!verify_rational(r, s, order)) o.fail(std::string(name) + ": verification failed");
    return r;
  };
  const auto bs = round_trip(brauer_severi_classes(3, 100), "Brauer-Severi");
  const std::string expected = "1 + (c1*t + c1*t^2 + c3*t^3)/(1 - t^3)";
  if (bs && bs->str() != expected) o.fail("Brauer-Severi form is " + bs->str());
  const auto dp = round_trip(del_pezzo_classes(1, {1}, 1, 200, Integer(2)), "del Pezzo(1)");
  if (o.pass) {
    o.detail = "Brauer-Severi " + bs->str() + "; del Pezzo(1) n0=" + std::to_string(dp->n0) +
               " period=" + std::to_string(dp->p);
  }
  return o;
}

Outcome partition_oracle() {
  Outcome o;
  std::mt19937_64 rng(77);
  int configs = 0;
  while (configs < 100) {
    const long horizon = oracle::uniform(rng, 20, 200);
    std::vector<Relation> rels;
    std::vector<oracle::Edge> edges;
    // a few step families, each a run of widening intervals like I_e, plus noise
    const int families = static_cast<int>(oracle::uniform(rng, 1, 3));
    for (int f = 0; f < families; ++f) {
      const long step = oracle::uniform(rng, 1, 9);
      long lo = oracle::uniform(rng, 0, 30);
      long width = oracle::uniform(rng, 0, 3);
      while (lo <= horizon) {
        rels.push_back({step, IntInterval{lo, lo + width}});
        edges.push_back({step, lo, lo + width});
        lo += width + 1 + oracle::uniform(rng, 0, 3);
        width += oracle::uniform(rng, 0, 2);
      }
    }
    for (int k = static_cast<int>(oracle::uniform(rng, 0, 3)); k > 0; --k) {
      const long step = oracle::uniform(rng, 1, 15), lo = oracle::uniform(rng, 0, horizon);
      const long hi = lo + oracle::uniform(rng, 0, 20);
      rels.push_back({step, IntInterval{lo, hi}});
      edges.push_back({step, lo, hi});
    }
    ClassPartition cp;
    try {
      cp = partition(rels, horizon);
    } catch (const HorizonError&) {
      continue;
    }
    ++configs;
    if (cp.labels != oracle::closure_labels(edges, horizon)) {
      o.fail("labels differ from the closure oracle (horizon " + std::to_string(horizon) + ")");
    }
    // cofinal: the relation still applies at the top of the window
    long g = 0;
    for (const auto& e : edges) {
      if (e.hi >= horizon - e.step && e.lo <= horizon - e.step) g = std::gcd(g, e.step);
    }
    if (g != 0 && g % cp.period != 0) {
      o.fail("period " + std::to_string(cp.period) + " does not divide cofinal gcd " +
             std::to_string(g));
    }
  }
  if (o.pass) o.detail = "100 configurations agree with breadth-first closure";
  return o;
}

Outcome conic_bundle() {
  Outcome o;
  const auto cb = make_conic_bundle(9, 1, 1, 1);
  const IntInterval I = interval_conic(cb, 2, 2, 1);
  if (I.lo != 12 || I.hi != 15) o.fail("I_(2,2) = " + show(I));
  const Integer b = conic_b_bound(cb, 2, 1);
  if (b != 2) o.fail("b-bound(e=2, d=1) = " + b.get_str());

  const std::int64_t horizon = 2000;
  const auto cp = conic_bundle_classes(cb, {1}, 1, horizon);
  std::vector<IntInterval> domains;
  for (const auto& r : conic_relations(cb, {1}, 1, horizon)) domains.push_back(r.domain);
  const auto merged = merge_intervals(domains, horizon);
  bool covered = false;
  for (const auto& [lo, hi] : merged) {
    if (lo <= cp.n0 && hi == horizon) covered = true;
  }
  if (!covered) o.fail("stitched intervals do not cover [" + std::to_string(cp.n0) + ", 2000]");
  const Integer ind = index({1}).g;
  if (ind % cp.period != 0) o.fail("period does not divide the index");
  if (!cp.certified) o.fail("partition not certified");
  if (o.pass) {
    o.detail = "I_(2,2)=[12,15], b-bound=2, [" + std::to_string(cp.n0) +
               ", 2000] covered, period " + std::to_string(cp.period) + " | index " +
               ind.get_str();
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string data_dir = argc > 1 ? argv[1] : HILBSTAB_TEST_DATA;
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "blow-up consistency", 1.0, blowup_consistency},
      {2, "width and gap identities", 1.0, width_and_gap},
      {3, "del Pezzo degree 1", 1.0, del_pezzo_one},
      {4, "P2 coverage", 2.0, [&] { return projective_plane(data_dir); }},
      {5, "non-emptiness trichotomy", 0.0, trichotomy},
      {6, "Goettsche suite", 1.0, goettsche_suite},
      {7, "zeta round trip", 1.0, zeta_round_trip},
      {8, "partition engine vs closure oracle", 5.0, partition_oracle},
      {9, "conic bundle r=9", 2.0, conic_bundle},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      out.fail("took " + std::to_string(secs) + "s, budget " + std::to_string(c.budget_s) + "s");
    }
    if (!out.pass) ++failures;
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << secs;
    std::cout << "criterion " << c.id << " [" << c.name << "]: " << (out.pass ? "PASS" : "FAIL")
              << " (" << time.str() << "s) " << out.detail << "\n";
    for (const auto& n : out.notes) std::cout << "  note: " << n << "\n";
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed")
            << "\n";
  return failures ? 1 : 0;
}
