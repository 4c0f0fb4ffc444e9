// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "monospread/depth.hpp"
#include "monospread/error.hpp"
#include "monospread/ideal_io.hpp"
#include "monospread/lattice.hpp"
#include "monospread/laws.hpp"
#include "monospread/smooth.hpp"
#include "monospread/spread.hpp"
#include "support/oracles.hpp"
#include "support/random_ideals.hpp"

using namespace mspread;
using testing_support::Rng;
using testing_support::uniform;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

MonomialIdeal from_indices(std::size_t n, std::vector<std::vector<std::size_t>> rows) {
  std::vector<Monomial> gens;
  for (auto& r : rows) gens.push_back(Monomial::from_indices(n, r));
  return MonomialIdeal(n, gens);
}

Outcome worked_smooth_pairs() {
  Outcome o;
  const MonomialIdeal yes(3, {{1, 1, 1}, {0, 2, 1}});
  const SmoothVerdict v = check_smooth(yes);
  if (!is_smooth(v) || !verify_certificate(yes.generators(), 3, std::get<SmoothCertificate>(v)))
    o.fail("x1x2x3,x2^2x3 not certified");
  const auto tau = SmoothCertificate::from_permutation(3, 3, {1, 5, 6, 4, 2, 9, 7, 8, 3});
  if (!verify_certificate(yes.generators(), 3, tau)) o.fail("published relabeling rejected");
  const SmoothVerdict no = check_smooth(MonomialIdeal(3, {{3, 1, 2}, {1, 2, 3}}));
  if (is_smooth(no)) {
    o.fail("x1^3x2x3^2,x1x2^2x3^3 reported smooth");
  } else {
    const auto& w = std::get<SmoothWitness>(no);
    if (w.expected == w.found) o.fail("degenerate witness");
    o.detail = "witness j=" + std::to_string(w.j);
  }
  return o;
}

Outcome nested_columns() {
  Outcome o;
  if (!is_smooth(check_smooth(MonomialIdeal(3, {{1, 2, 2}, {0, 3, 3}})))) o.fail("x1x2^2x3^2,x2^3x3^3 not smooth");
  const SmoothVerdict no = check_smooth(MonomialIdeal(3, {{1, 1, 2}, {0, 3, 3}}));
  if (is_smooth(no)) {
    o.fail("x1x2x3^2,x2^3x3^3 reported smooth");
  } else {
    const auto& w = std::get<SmoothWitness>(no);
    if (w.j != 3 || w.expected != 2 || w.found != 1) o.fail("unexpected witness");
  }
  return o;
}

Outcome complete_intersections_under_spread() {
  Outcome o;
  const MonomialIdeal I(3, {{3, 0, 0}, {0, 1, 1}});
  if (!is_complete_intersection(I)) o.fail("x1^3,x2x3 not c.i.");
  if (is_complete_intersection(spread_ideal(I, 1)) || is_complete_intersection(spread_ideal(I, 2)))
    o.fail("small spreads are c.i.");
  for (std::size_t t = 3; t <= 5; ++t) {
    const MonomialIdeal s = spread_ideal(I, t);
    if (!is_complete_intersection(s)) o.fail("t=" + std::to_string(t) + " not c.i.");
    if (!same_generators(s, from_indices(s.ambient(), {{1, t + 1, 2 * t + 1}, {2, t + 3}})))
      o.fail("t=" + std::to_string(t) + " wrong generators");
  }
  const MonomialIdeal J(2, {{2, 1}, {0, 2}});
  const MonomialIdeal s2 = spread_ideal(J, 2);
  if (!same_generators(s2, from_indices(6, {{1, 3, 6}, {2, 4}})) || !is_complete_intersection(s2))
    o.fail("x1^2x2,x2^2 second spread");
  return o;
}

Outcome checker_vs_search() {
  Outcome o;
  Rng rng(1001);
  std::size_t smooth = 0;
  const int trials = 600;
  for (int trial = 0; trial < trials; ++trial) {
    const std::size_t n = uniform(rng, 1, 3);
    const auto set = testing_support::random_set(rng, n, uniform(rng, 1, 3), 3, 4);
    const bool fast = is_smooth(check_smooth(set, n));
    const bool slow = oracle::smooth_by_search(testing_support::to_rows(set), n);
    smooth += fast ? 1 : 0;
    if (fast != slow) o.fail("disagreement at trial " + std::to_string(trial));
  }
  if (o.passed) o.detail = std::to_string(trials) + " sets, " + std::to_string(smooth) + " smooth";
  return o;
}

Outcome closure_constructions() {
  Outcome o;
  Rng rng(1002);
  for (int trial = 0; trial < 250; ++trial) {
    const auto I = testing_support::random_complete_intersection(rng, uniform(rng, 1, 4), 4);
    if (!is_smooth(check_smooth(I))) o.fail("c.i. not smooth: " + to_string(I));
  }
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = uniform(rng, 1, 3);
    const auto I = testing_support::random_ideal(rng, n, uniform(rng, 1, 3), 3);
    const std::size_t extra = uniform(rng, 1, 2);
    std::vector<Exponent> e(n + extra, 0);
    for (std::size_t j = n; j < n + extra; ++j) e[j] = static_cast<Exponent>(uniform(rng, 1, 3));
    const auto J = adjoin_disjoint(I, Monomial(e), n + extra);
    if (is_smooth(check_smooth(I)) != is_smooth(check_smooth(J))) o.fail("disjoint adjoin changed verdict");
  }
  std::size_t power_cases = 0;
  while (power_cases < 150) {
    const std::size_t n = uniform(rng, 1, 3);
    const auto I = testing_support::random_ideal(rng, n, uniform(rng, 1, 3), 3);
    if (!is_smooth(check_smooth(I))) continue;
    std::vector<PurePower> powers;
    for (std::size_t j = 1; j <= n; ++j) {
      if (uniform(rng, 0, 1) == 0) continue;
      Degree need = 1;
      bool pure = false;
      for (const Monomial& u : I.generators()) {
        if (u[j - 1] == 0) continue;
        pure = pure || u.degree() == u[j - 1];
        Degree truncated = 0;
        for (std::size_t k = 0; k < j; ++k) truncated += u[k];
        need = std::max({need, truncated, static_cast<Degree>(u[j - 1] + 1)});
      }
      if (pure) continue;
      powers.emplace_back(j, static_cast<Exponent>(need + static_cast<Degree>(uniform(rng, 0, 2))));
    }
    if (powers.empty()) continue;
    if (!adjoin_pure_powers_condition(I, powers)) {
      o.fail("pure-power condition rejected a dominating choice");
      continue;
    }
    ++power_cases;
    if (!is_smooth(check_smooth(adjoin_pure_powers(I, powers)))) o.fail("pure powers broke smoothness");
  }
  std::size_t products = 0;
  while (products < 150) {
    const std::size_t n = uniform(rng, 1, 2);
    const std::size_t deg = uniform(rng, 1, 3);
    std::vector<Monomial> first;
    for (int k = 0; k < 3; ++k) {
      const Monomial u = testing_support::random_monomial(rng, n, 3);
      if (u.degree() == deg && std::find(first.begin(), first.end(), u) == first.end()) first.push_back(u);
    }
    if (first.empty() || !is_smooth(check_smooth(first, n))) continue;
    const std::size_t n2 = n + uniform(rng, 1, 2);
    std::vector<Monomial> second;
    for (int k = 0; k < 2; ++k) {
      std::vector<Exponent> e(n2, 0);
      for (std::size_t j = n; j < n2; ++j) e[j] = static_cast<Exponent>(uniform(rng, 0, 2));
      Monomial v(e);
      if (!v.is_unit() && std::find(second.begin(), second.end(), v) == second.end()) second.push_back(v);
    }
    if (second.empty() || !is_smooth(check_smooth(second, n2))) continue;
    ++products;
    if (!is_smooth(check_smooth(product_construct(first, n, second, n2), n2))) o.fail("product not smooth");
  }
  if (o.passed) o.detail = "250 c.i., 150 adjoins, 150 pure-power, 150 products";
  return o;
}

Outcome two_variable_test() {
  Outcome o;
  Rng rng(1003);
  std::size_t counts[3] = {0, 0, 0};
  std::size_t end_guard_refuted = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const auto I = testing_support::random_ideal(rng, 2, uniform(rng, 1, 4), 4);
    const T2Verdict v = check_smooth_T2(I);
    const bool smooth = is_smooth(check_smooth(I));
    ++counts[static_cast<int>(v)];
    if (v == T2Verdict::SufficientHolds && !smooth) o.fail("sufficient but not smooth: " + to_string(I));
    if (v == T2Verdict::NecessaryFails && smooth) o.fail("reported not smooth but is: " + to_string(I));
    if (!smooth) continue;
    // a > b ordering on x_1 exponents; totals along it
    std::vector<Monomial> g = I.generators();
    std::sort(g.begin(), g.end(), [](const Monomial& x, const Monomial& y) { return x[0] > y[0]; });
    const std::size_t m = g.size();
    for (std::size_t k = 1; k + 2 < m; ++k)
      if (g[k].degree() > g[k + 1].degree()) o.fail("inner chain broken on smooth " + to_string(I));
    if (m >= 2 && g[0][1] > 0 && g[0].degree() > g[1].degree()) o.fail("first step broken on smooth " + to_string(I));
    if (m >= 2 && g[m - 2][1] > 0 && g[m - 2].degree() > g[m - 1].degree())
      o.fail("last step broken on smooth " + to_string(I));
    if (m >= 2 && g[m - 1][0] > 0 && g[m - 2].degree() > g[m - 1].degree()) ++end_guard_refuted;
  }
  if (o.passed)
    o.detail = "600 ideals: " + std::to_string(counts[0]) + " sufficient, " + std::to_string(counts[1]) +
               " not smooth, " + std::to_string(counts[2]) + " indeterminate; " +
               std::to_string(end_guard_refuted) + " smooth ideals drop at the end with a_m > 0";
  return o;
}

Outcome lattice_replay() {
  Outcome o;
  const MonomialIdeal a(2, {{2, 2}, {0, 3}});
  if (!is_isomorphic(LcmLattice(a), LcmLattice(spread_ideal(a, 2))).has_value()) o.fail("isomorphic pair rejected");
  const MonomialIdeal b(2, {{4, 0}, {2, 1}, {0, 2}});
  if (is_isomorphic(LcmLattice(b), LcmLattice(spread_ideal(b, 2))).has_value()) o.fail("non-isomorphic pair accepted");
  return o;
}

Outcome delta_suite() {
  Outcome o;
  Rng rng(1004);
  std::size_t smooth = 0, ill_defined = 0;
  std::string first_ill;
  for (int trial = 0; trial < 250; ++trial) {
    const std::size_t n = uniform(rng, 1, 3);
    const auto I = testing_support::random_ideal(rng, n, uniform(rng, 1, 4), 3);
    try {
      if (!verify_delta(build_delta(I))) o.fail("delta failed verification: " + to_string(I));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::WellDefinednessViolation) throw;
      if (ill_defined++ == 0) first_ill = to_string(I);
    }
    if (is_smooth(check_smooth(I))) {
      ++smooth;
      if (!is_isomorphic(LcmLattice(I), LcmLattice(spread_ideal(I, n))).has_value())
        o.fail("smooth ideal changed lattice: " + to_string(I));
    }
  }
  if (ill_defined > 0) o.fail(std::to_string(ill_defined) + " ill-defined delta maps, first on " + first_ill);
  if (o.passed) o.detail = "250 ideals, " + std::to_string(smooth) + " smooth";
  return o;
}

Outcome betti_cross_check() {
  Outcome o;
  Rng rng(1005);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = uniform(rng, 1, 4);
    const auto I = testing_support::random_ideal(rng, n, uniform(rng, 1, 4), 3);
    const auto expected = oracle::taylor_betti(testing_support::to_rows(I.generators()));
    std::map<std::pair<std::size_t, oracle::Row>, std::size_t> got;
    const BettiTable table = multigraded_betti(I);
    for (const BettiEntry& e : table.entries())
      got[{e.i, testing_support::to_row(e.multidegree)}] = e.value;
    if (got != expected) o.fail("Betti mismatch: " + to_string(I));
  }
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = uniform(rng, 1, 5);
    if (trial % 2 == 0) {
      const MonomialIdeal I(n, {testing_support::random_monomial(rng, n, 3)});
      if (depth_quotient(I).value != n - 1) o.fail("principal depth: " + to_string(I));
    } else {
      const auto I = testing_support::random_complete_intersection(rng, n, 3);
      if (I.size() > 3) continue;
      if (depth_quotient(I).value != n - I.size()) o.fail("c.i. depth: " + to_string(I));
    }
  }
  return o;
}

Outcome invariant_laws() {
  Outcome o;
  Rng rng(1006);
  std::size_t sampled = 0, isomorphic = 0;
  while (sampled < 60) {
    const std::size_t n = uniform(rng, 1, 3);
    const auto I = testing_support::random_ideal(rng, n, uniform(rng, 1, 3), 3);
    if (I.ambient() * I.degree() > 6) continue;
    ++sampled;
    const LawsReport r = verify_spreading_laws(I, n, n + 1);
    isomorphic += r.lattice_isomorphic ? 1 : 0;
    for (const LawCheck& c : r.checks)
      if (!c.passed) o.fail(c.name + " on " + to_string(I));
    if (r.lattice_isomorphic) {
      const InvariantRow& at_n = r.spreads.front();
      const std::size_t shift = n * (r.d - 1);
      if (at_n.depth != r.base.depth + shift || at_n.sdepth_quotient != r.base.sdepth_quotient + shift ||
          at_n.sdepth_ideal != r.base.sdepth_ideal + shift)
        o.fail("equality missed on " + to_string(I));
    }
  }
  const MonomialIdeal witness(3, {{1, 1, 1}, {0, 2, 1}});
  const LawsReport smooth = verify_spreading_laws(witness, 3, 4);
  if (!smooth.smooth || !smooth.all_passed()) o.fail("smooth witness laws");
  for (const InvariantRow& row : smooth.spreads) {
    const std::size_t shift = row.t * smooth.d - smooth.n;
    if (row.depth != smooth.base.depth + shift || row.sdepth_quotient != smooth.base.sdepth_quotient + shift ||
        row.sdepth_ideal != smooth.base.sdepth_ideal + shift)
      o.fail("smooth shift at t=" + std::to_string(row.t));
  }
  const LawsReport strict = verify_spreading_laws(MonomialIdeal(2, {{4, 0}, {2, 1}, {0, 2}}), 2, 3);
  if (strict.lattice_isomorphic || !strict.all_passed() ||
      strict.spreads.front().depth >= strict.base.depth + strict.n * (strict.d - 1))
    o.fail("x1^4,x1^2x2,x2^2 should satisfy the depth bound strictly");
  const MonomialIdeal rough(2, {{2, 1}, {0, 2}});
  const std::size_t spread_depth = depth_quotient(spread_ideal(rough, 2, SpreadAmbient::Padded)).value;
  if (spread_depth != 4 || depth_quotient(rough).value + 4 != 4) o.fail("x1^2x2,x2^2 depth bound");
  if (o.passed) o.detail = std::to_string(sampled) + " ideals, " + std::to_string(isomorphic) + " lattice-isomorphic";
  return o;
}

Outcome cli_contract() {
  Outcome o;
  std::ostringstream out, err;
  if (cli::run({"verify-paper"}, out, err) != cli::kOk) o.fail("verify-paper failed");
  for (const auto& row : cli::replay_golden())
    if (!row.passed) o.fail("golden row: " + row.name);

  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(MONOSPREAD_FIXTURE_DIR)) {
    if (entry.path().extension() != ".ideal") continue;
    ++files;
    const std::string path = entry.path().string();
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    const MonomialIdeal I = parse_ideal(buf.str()).ideal;
    const std::string text = format_ideal(I);
    if (parse_ideal(text).ideal != I || format_ideal(parse_ideal(text).ideal) != text) o.fail("round trip: " + path);
    const std::vector<std::vector<std::string>> commands = {
        {"polarize", path},         {"check-smooth", path}, {"lattice", path},   {"lattice", "--dot", path},
        {"delta", path},            {"depth", path},        {"sdepth", path},    {"sdepth", "--ideal", path},
        {"spread", "-t", "2", path}};
    for (const auto& cmd : commands) {
      std::ostringstream o1, e1, o2, e2;
      const int c1 = cli::run(cmd, o1, e1);
      const int c2 = cli::run(cmd, o2, e2);
      if (c1 != c2 || o1.str() != o2.str() || e1.str() != e2.str()) o.fail("nondeterministic: " + cmd[0] + " " + path);
      if ((cmd[0] == "polarize" || cmd[0] == "spread") && c1 == cli::kOk) {
        const std::string printed = o1.str();
        if (format_ideal(parse_ideal(printed).ideal) != printed) o.fail("output round trip: " + cmd[0] + " " + path);
      }
    }
  }
  if (files == 0) o.fail("no fixtures found");
  if (o.passed) o.detail = std::to_string(files) + " fixtures";
  return o;
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"C1  smooth and non-smooth worked pairs", 1.0, worked_smooth_pairs},
      {"C2  nested versus broken column", 1.0, nested_columns},
      {"C3  complete intersections under spreading", 1.0, complete_intersections_under_spread},
      {"C4  checker agrees with exhaustive search", 60.0, checker_vs_search},
      {"C5  closure constructions stay smooth", 60.0, closure_constructions},
      {"C6  two-variable closed form is consistent", 30.0, two_variable_test},
      {"C7  lcm-lattice isomorphism replay", 1.0, lattice_replay},
      {"C8  delta map is a join-preserving surjection", 60.0, delta_suite},
      {"C9  Betti numbers match the Taylor complex", 120.0, betti_cross_check},
      {"C10 depth and Stanley depth spreading laws", 300.0, invariant_laws},
      {"C11 command line contract", 10.0, cli_contract},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) o.fail("over time budget");
    failures += o.passed ? 0 : 1;
    std::printf("%s  %-48s %7.3fs / %.0fs  %s\n", o.passed ? "PASS" : "FAIL", c.name, secs, c.budget_seconds,
                o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
