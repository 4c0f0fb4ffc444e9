#include "monospread/laws.hpp"

#include <algorithm>
#include <set>

#include "monospread/depth.hpp"
#include "monospread/error.hpp"
#include "monospread/lattice.hpp"
#include "monospread/sdepth.hpp"
#include "monospread/smooth.hpp"
#include "monospread/spread.hpp"

namespace mspread {

bool LawsReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.passed; });
}

namespace {

template <typename Fn>
auto with_context(const std::string& what, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooLarge) throw;
    throw Error(ErrorKind::TooLarge, what + ": " + e.what());
  }
}

InvariantRow measure(const MonomialIdeal& ideal, std::size_t t, const std::string& label) {
  InvariantRow row;
  row.t = t;
  row.ambient = ideal.ambient();
  row.depth = with_context("depth oracle on " + label, [&] { return depth_quotient(ideal).value; });
  row.sdepth_quotient =
      with_context("sdepth oracle (quotient) on " + label, [&] { return sdepth_quotient(ideal).value; });
  row.sdepth_ideal =
      with_context("sdepth oracle (ideal) on " + label, [&] { return sdepth_ideal(ideal).value; });
  return row;
}

long long as_signed(std::size_t v) { return static_cast<long long>(v); }

void add(LawsReport& report, std::string name, long long lhs, long long rhs, bool equality) {
  const bool passed = equality ? lhs == rhs : lhs <= rhs;
  report.checks.push_back({std::move(name), lhs, rhs, equality ? "==" : "<=", passed});
}

}  // namespace

LawsReport verify_spreading_laws(const MonomialIdeal& ideal, std::size_t t_first, std::size_t t_last) {
  const std::size_t n = ideal.ambient();
  const std::size_t d = ideal.degree();
  if (t_first < n || t_last < t_first) {
    throw Error(ErrorKind::BadParameter, "need n <= t_first <= t_last (n=" + std::to_string(n) +
                                             ", range " + std::to_string(t_first) + ".." +
                                             std::to_string(t_last) + ")");
  }
  LawsReport report;
  report.n = n;
  report.d = d;
  report.base = measure(ideal, 0, "T_n/I");

  std::set<std::size_t> params{n};
  for (std::size_t t = t_first; t <= t_last; ++t) params.insert(t);
  std::vector<MonomialIdeal> spreads;
  for (std::size_t t : params) {
    spreads.push_back(spread_ideal(ideal, t, SpreadAmbient::Padded));
    report.spreads.push_back(measure(spreads.back(), t, "spread t=" + std::to_string(t)));
  }

  report.lattice_isomorphic =
      with_context("lattice isomorphism", [&] {
        return is_isomorphic(LcmLattice(ideal), LcmLattice(spreads.front())).has_value();
      });
  report.smooth = is_smooth(check_smooth(ideal));

  const InvariantRow& base = report.base;
  const InvariantRow& at_n = report.spreads.front();
  const long long shift = as_signed(n * (d - 1));
  add(report, "depth(T_nd/I^sn) <= depth(T_n/I) + n(d-1)", as_signed(at_n.depth),
      as_signed(base.depth) + shift, false);
  add(report, "sdepth(T_nd/I^sn) <= sdepth(T_n/I) + n(d-1)", as_signed(at_n.sdepth_quotient),
      as_signed(base.sdepth_quotient) + shift, false);
  add(report, "sdepth(I^sn) <= sdepth(I) + n(d-1)", as_signed(at_n.sdepth_ideal),
      as_signed(base.sdepth_ideal) + shift, false);
  if (report.lattice_isomorphic) {
    add(report, "isomorphic lattices: depth equality", as_signed(at_n.depth), as_signed(base.depth) + shift,
        true);
    add(report, "isomorphic lattices: sdepth(T/I) equality", as_signed(at_n.sdepth_quotient),
        as_signed(base.sdepth_quotient) + shift, true);
    add(report, "isomorphic lattices: sdepth(I) equality", as_signed(at_n.sdepth_ideal),
        as_signed(base.sdepth_ideal) + shift, true);
  }

  for (std::size_t k = 1; k < report.spreads.size(); ++k) {
    const InvariantRow& lo = report.spreads[k - 1];
    const InvariantRow& hi = report.spreads[k];
    const long long step = as_signed((hi.t - lo.t) * d);
    const std::string tag = " t=" + std::to_string(lo.t) + "->" + std::to_string(hi.t);
    add(report, "depth transfer" + tag, as_signed(hi.depth), as_signed(lo.depth) + step, true);
    add(report, "sdepth(T/I) transfer" + tag, as_signed(hi.sdepth_quotient),
        as_signed(lo.sdepth_quotient) + step, true);
    add(report, "sdepth(I) transfer" + tag, as_signed(hi.sdepth_ideal), as_signed(lo.sdepth_ideal) + step,
        true);
  }

  if (report.smooth) {
    for (const InvariantRow& row : report.spreads) {
      const long long gap = as_signed(row.t * d) - as_signed(n);
      const std::string tag = " t=" + std::to_string(row.t);
      add(report, "smooth: depth shift td-n" + tag, as_signed(row.depth), as_signed(base.depth) + gap, true);
      add(report, "smooth: sdepth(T/I) shift td-n" + tag, as_signed(row.sdepth_quotient),
          as_signed(base.sdepth_quotient) + gap, true);
      add(report, "smooth: sdepth(I) shift td-n" + tag, as_signed(row.sdepth_ideal),
          as_signed(base.sdepth_ideal) + gap, true);
    }
  }
  return report;
}

}  // namespace mspread
