#include <algorithm>
#include <functional>
#include <sstream>

#include "cli.hpp"
#include "monospread/depth.hpp"
#include "monospread/error.hpp"
#include "monospread/lattice.hpp"
#include "monospread/laws.hpp"
#include "monospread/smooth.hpp"
#include "monospread/spread.hpp"

namespace mspread::cli {

namespace {

Monomial mono(std::initializer_list<Exponent> e) { return Monomial(std::vector<Exponent>(e)); }

MonomialIdeal ideal(std::size_t n, std::initializer_list<std::initializer_list<Exponent>> rows) {
  std::vector<Monomial> gens;
  for (const auto& r : rows) gens.push_back(mono(r));
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal from_indices(std::size_t ambient, std::initializer_list<std::initializer_list<std::size_t>> rows) {
  std::vector<Monomial> gens;
  for (const auto& r : rows) {
    std::vector<std::size_t> idx(r);
    gens.push_back(Monomial::from_indices(ambient, idx));
  }
  return MonomialIdeal(ambient, std::move(gens));
}

bool same_set(std::vector<Monomial> a, std::vector<Monomial> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool smooth_witness(const MonomialIdeal& I, std::size_t j, std::size_t expected, std::size_t found,
                    std::string& detail) {
  const SmoothVerdict v = check_smooth(I);
  if (is_smooth(v)) {
    detail = "checker answered YES";
    return false;
  }
  const auto& w = std::get<SmoothWitness>(v);
  std::ostringstream s;
  s << "witness i=" << w.i << " l=" << w.l << " j=" << w.j << " expected=" << w.expected << " found=" << w.found;
  detail = s.str();
  return (j == 0 || w.j == j) && (expected == 0 || w.expected == expected) && (found == 0 || w.found == found);
}

bool smooth_yes(const MonomialIdeal& I, std::string& detail) {
  const SmoothVerdict v = check_smooth(I);
  if (!is_smooth(v)) {
    detail = "checker answered NO";
    return false;
  }
  const auto& c = std::get<SmoothCertificate>(v);
  detail = "tau " + cycle_notation(c.tau);
  return verify_certificate(I.generators(), I.ambient(), c);
}

bool laws_hold(const LawsReport& r, std::string& detail) {
  std::size_t ok = 0;
  for (const LawCheck& c : r.checks) ok += c.passed ? 1 : 0;
  detail = std::to_string(ok) + "/" + std::to_string(r.checks.size()) + " law checks";
  return r.all_passed() && !r.checks.empty();
}

using Check = std::function<bool(std::string&)>;

std::vector<std::pair<std::string, Check>> rows() {
  std::vector<std::pair<std::string, Check>> out;

  out.emplace_back("smooth x1x2x3,x2^2x3 with certificate", [](std::string& d) {
    return smooth_yes(ideal(3, {{1, 1, 1}, {0, 2, 1}}), d);
  });
  out.emplace_back("published relabeling (2 5)(3 6 9) certifies x1x2x3,x2^2x3", [](std::string& d) {
    const MonomialIdeal I = ideal(3, {{1, 1, 1}, {0, 2, 1}});
    const auto cert = SmoothCertificate::from_permutation(3, 3, {1, 5, 6, 4, 2, 9, 7, 8, 3});
    d = "tau " + cycle_notation(cert.tau);
    return verify_certificate(I.generators(), 3, cert);
  });
  out.emplace_back("spread and polarization of x1x2x3,x2^2x3", [](std::string& d) {
    const MonomialIdeal I = ideal(3, {{1, 1, 1}, {0, 2, 1}});
    const MonomialIdeal s = spread_ideal(I, 3, SpreadAmbient::Padded);
    const MonomialIdeal p = polarize_ideal(I);
    d = to_string(s) + " / " + to_string(p);
    return same_generators(s, from_indices(9, {{1, 5, 9}, {2, 5, 9}})) &&
           same_generators(p, from_indices(9, {{1, 2, 3}, {2, 5, 3}}));
  });
  out.emplace_back("not smooth x1^3x2x3^2,x1x2^2x3^3", [](std::string& d) {
    const MonomialIdeal I = ideal(3, {{3, 1, 2}, {1, 2, 3}});
    const bool spread_ok = same_generators(
        spread_ideal(I, 3, SpreadAmbient::Padded),
        from_indices(18, {{1, 4, 7, 11, 15, 18}, {1, 5, 8, 12, 15, 18}}));
    return smooth_witness(I, 2, 1, 0, d) && spread_ok;
  });
  out.emplace_back("x1^3,x2x3 spreads: c.i. only from t=3", [](std::string& d) {
    const MonomialIdeal I = ideal(3, {{3, 0, 0}, {0, 1, 1}});
    bool ok = is_complete_intersection(I);
    ok = ok && !is_complete_intersection(spread_ideal(I, 1));
    ok = ok && !is_complete_intersection(spread_ideal(I, 2));
    ok = ok && same_generators(spread_ideal(I, 1), from_indices(5, {{1, 2, 3}, {2, 4}}));
    ok = ok && same_generators(spread_ideal(I, 2), from_indices(7, {{1, 3, 5}, {2, 5}}));
    for (std::size_t t = 3; t <= 5; ++t) {
      const MonomialIdeal s = spread_ideal(I, t);
      ok = ok && is_complete_intersection(s) &&
           same_generators(s, MonomialIdeal(s.ambient(), {Monomial::from_indices(s.ambient(), std::vector<std::size_t>{1, t + 1, 2 * t + 1}),
                                                         Monomial::from_indices(s.ambient(), std::vector<std::size_t>{2, t + 3})}));
    }
    d = "t=1..5";
    return ok;
  });
  out.emplace_back("x1^2x2,x2^2: second spread is a c.i.", [](std::string& d) {
    const MonomialIdeal I = ideal(2, {{2, 1}, {0, 2}});
    const MonomialIdeal s = spread_ideal(I, 2);
    d = to_string(s);
    return !is_complete_intersection(I) && is_complete_intersection(s) &&
           same_generators(s, from_indices(6, {{1, 3, 6}, {2, 4}}));
  });
  out.emplace_back("x1^2x2,x2^2: t-spread shape and not smooth", [](std::string& d) {
    const MonomialIdeal I = ideal(2, {{2, 1}, {0, 2}});
    bool ok = true;
    for (std::size_t t = 1; t <= 4; ++t) {
      const MonomialIdeal s = spread_ideal(I, t);
      ok = ok && same_generators(s, MonomialIdeal(s.ambient(), {Monomial::from_indices(s.ambient(), std::vector<std::size_t>{1, 1 + t, 2 + 2 * t}),
                                                               Monomial::from_indices(s.ambient(), std::vector<std::size_t>{2, 2 + t})}));
    }
    const T2Verdict v = check_smooth_T2(I);
    d = std::string(to_string(v));
    return ok && v == T2Verdict::NecessaryFails && !is_smooth(check_smooth(I));
  });
  out.emplace_back("squares x1^2,x2^2 spread to x1x2,x2x3", [](std::string& d) {
    const MonomialIdeal s = spread_ideal(ideal(2, {{2, 0}, {0, 2}}), 1);
    d = to_string(s);
    return same_generators(s, from_indices(3, {{1, 2}, {2, 3}}));
  });
  out.emplace_back("x1^2x2,x1x2^2,x2^3 passes the two-variable test", [](std::string& d) {
    const MonomialIdeal I = ideal(2, {{2, 1}, {1, 2}, {0, 3}});
    const T2Verdict v = check_smooth_T2(I);
    d = std::string(to_string(v));
    return v == T2Verdict::SufficientHolds && is_smooth(check_smooth(I));
  });
  out.emplace_back("product of x1^2x2,x1x2^2,x2^3 and x3^2,x3x4^2 is smooth", [](std::string& d) {
    const MonomialIdeal first = ideal(2, {{2, 1}, {1, 2}, {0, 3}});
    const std::vector<Monomial> second = {mono({0, 0, 2, 0}), mono({0, 0, 1, 2})};
    const std::vector<Monomial> prod = product_construct(first.generators(), 2, second, 4);
    const std::vector<Monomial> expected = {mono({2, 1, 2, 0}), mono({1, 2, 2, 0}), mono({0, 3, 2, 0}),
                                            mono({2, 1, 1, 2}), mono({1, 2, 1, 2}), mono({0, 3, 1, 2})};
    const bool smooth = is_smooth(check_smooth(prod, 4));
    d = std::to_string(prod.size()) + " products";
    return same_set(prod, expected) && smooth;
  });
  out.emplace_back("products x1x2,x2^2 times x3,x3^2 and pure-power closure", [](std::string& d) {
    const std::vector<Monomial> first = {mono({1, 1}), mono({0, 2})};
    const std::vector<Monomial> second = {mono({0, 0, 1}), mono({0, 0, 2})};
    const std::vector<Monomial> prod = product_construct(first, 2, second, 3);
    const std::vector<Monomial> expected = {mono({1, 1, 1}), mono({1, 1, 2}), mono({0, 2, 1}), mono({0, 2, 2})};
    const MonomialIdeal J(3, prod);
    const bool minimal_ok = same_generators(J, ideal(3, {{1, 1, 1}, {0, 2, 1}}));
    const std::vector<PurePower> powers = {{1, 2}, {2, 3}, {3, 4}};
    const bool cond = adjoin_pure_powers_condition(J, powers);
    const MonomialIdeal L = adjoin_pure_powers(J, powers);
    d = to_string(L);
    return same_set(prod, expected) && minimal_ok && cond && is_smooth(check_smooth(J)) &&
           is_smooth(check_smooth(L));
  });
  out.emplace_back("smooth x1x2^2x3^2,x2^3x3^3", [](std::string& d) {
    return smooth_yes(ideal(3, {{1, 2, 2}, {0, 3, 3}}), d);
  });
  out.emplace_back("not smooth x1x2x3^2,x2^3x3^3 at x3", [](std::string& d) {
    return smooth_witness(ideal(3, {{1, 1, 2}, {0, 3, 3}}), 3, 2, 1, d);
  });
  out.emplace_back("x1^2x2^2,x2^3: lattice survives the second spread", [](std::string& d) {
    const MonomialIdeal I = ideal(2, {{2, 2}, {0, 3}});
    const LcmLattice a(I);
    const LcmLattice b(spread_ideal(I, 2));
    d = std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " elements";
    return is_isomorphic(a, b).has_value() && !is_smooth(check_smooth(I)) &&
           check_smooth_T2(I) == T2Verdict::NecessaryFails;
  });
  out.emplace_back("x1^4,x1^2x2,x2^2: lattice changes under the second spread", [](std::string& d) {
    const MonomialIdeal I = ideal(2, {{4, 0}, {2, 1}, {0, 2}});
    const LcmLattice a(I);
    const LcmLattice b(spread_ideal(I, 2));
    d = std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " elements";
    return a.size() == 7 && b.size() == 8 && !is_isomorphic(a, b).has_value();
  });
  out.emplace_back("smooth x1x2x3,x2^2x3: invariants shift by td-n for t=3,4", [](std::string& d) {
    const LawsReport r = verify_spreading_laws(ideal(3, {{1, 1, 1}, {0, 2, 1}}), 3, 4);
    return r.smooth && r.lattice_isomorphic && laws_hold(r, d);
  });
  out.emplace_back("non-smooth x1^2x2,x2^2: upper bounds for t=2,3", [](std::string& d) {
    const MonomialIdeal I = ideal(2, {{2, 1}, {0, 2}});
    const LawsReport r = verify_spreading_laws(I, 2, 3);
    const bool depths = depth_quotient(I).value == 0 &&
                        depth_quotient(spread_ideal(I, 2, SpreadAmbient::Padded)).value == 4;
    return !r.smooth && depths && laws_hold(r, d);
  });
  return out;
}

}  // namespace

std::vector<GoldenRow> replay_golden() {
  std::vector<GoldenRow> result;
  for (auto& [name, check] : rows()) {
    GoldenRow row{name, false, {}};
    try {
      row.passed = check(row.detail);
    } catch (const std::exception& e) {
      row.detail = std::string("exception: ") + e.what();
    }
    result.push_back(std::move(row));
  }
  return result;
}

}  // namespace mspread::cli
