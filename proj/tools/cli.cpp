#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "monospread/depth.hpp"
#include "monospread/error.hpp"
#include "monospread/ideal_io.hpp"
#include "monospread/lattice.hpp"
#include "monospread/laws.hpp"
#include "monospread/sdepth.hpp"
#include "monospread/smooth.hpp"
#include "monospread/spread.hpp"

namespace mspread::cli {

namespace {

std::string render(const Monomial& u, bool pretty) {
  if (pretty) return to_string(u);
  std::string out = "[";
  for (std::size_t j = 0; j < u.ambient(); ++j) {
    if (j != 0) out += ' ';
    out += std::to_string(u[j]);
  }
  out += ']';
  return out;
}

MonomialIdeal load(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::SyntaxError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  ParsedIdeal parsed = parse_ideal(buf.str());
  for (const Monomial& u : parsed.dropped) {
    err << "warning: " << path << ": dropped redundant generator " << to_string(u) << "\n";
  }
  return std::move(parsed.ideal);
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) {
      throw Error(ErrorKind::BadParameter, "bad spreading range '" + text + "'");
    }
    return static_cast<std::size_t>(v);
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t t = number(text);
    return {t, t};
  }
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooLarge: return kTooLarge;
    case ErrorKind::InternalError:
    case ErrorKind::WellDefinednessViolation: return kInternal;
    default: return kUsage;
  }
}

void print_positions(std::ostream& out, const char* label, const std::vector<std::size_t>& pos) {
  out << label;
  for (std::size_t p : pos) out << ' ' << p;
  out << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spreading, polarization and lcm-lattices of monomial ideals", "monospread"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Render monomials as x1^2*x2 in reports");

  std::size_t t = 0;
  bool padded = false;
  std::string file;
  std::string file2;
  std::string range;
  bool dot = false;
  bool ideal_side = false;

  auto* spread = app.add_subcommand("spread", "Print I^{sigma^t} in ideal-file format");
  spread->add_option("-t", t, "Spreading parameter")->required();
  spread->add_flag("--padded", padded, "Use the ambient t*d (requires t >= n)");
  spread->add_option("file", file)->required();

  auto* polarize = app.add_subcommand("polarize", "Print the polarization I^p");
  polarize->add_option("file", file)->required();

  auto* smooth = app.add_subcommand("check-smooth", "Decide smooth spreadability");
  smooth->add_option("file", file)->required();

  auto* embed = app.add_subcommand("embed", "Print Phi_t(I^{sigma^n}) and the index map");
  embed->add_option("-t", t, "Target parameter t >= n")->required();
  embed->add_option("file", file)->required();

  auto* lattice = app.add_subcommand("lattice", "Print the lcm-lattice");
  lattice->add_flag("--dot", dot, "Emit a Graphviz Hasse diagram");
  lattice->add_option("file", file)->required();

  auto* iso = app.add_subcommand("iso", "Test two lcm-lattices for isomorphism");
  iso->add_option("file1", file)->required();
  iso->add_option("file2", file2)->required();

  auto* delta = app.add_subcommand("delta", "Build and verify delta: L_{I^{sigma^n}} -> L_I");
  delta->add_option("file", file)->required();

  auto* depth = app.add_subcommand("depth", "depth(T_n/I) from multigraded Betti numbers");
  depth->add_option("file", file)->required();

  auto* sdepth = app.add_subcommand("sdepth", "Stanley depth of T_n/I (or of I with --ideal)");
  sdepth->add_flag("--ideal", ideal_side, "Compute sdepth(I) instead of sdepth(T_n/I)");
  sdepth->add_option("file", file)->required();

  auto* laws = app.add_subcommand("verify-laws", "Check the depth/sdepth spreading laws");
  laws->add_option("-t", range, "Spreading range T1..T2 (each >= n)")->required();
  laws->add_option("file", file)->required();

  auto* golden = app.add_subcommand("verify-paper", "Replay the bundled worked examples");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (spread->parsed()) {
      const MonomialIdeal ideal = load(file, err);
      out << format_ideal(spread_ideal(ideal, t, padded ? SpreadAmbient::Padded : SpreadAmbient::Exact));
      return kOk;
    }
    if (polarize->parsed()) {
      out << format_ideal(polarize_ideal(load(file, err)));
      return kOk;
    }
    if (smooth->parsed()) {
      const MonomialIdeal ideal = load(file, err);
      const SmoothVerdict verdict = check_smooth(ideal);
      if (const auto* cert = std::get_if<SmoothCertificate>(&verdict)) {
        out << "YES\n";
        out << "n " << cert->n << " d " << cert->d << "\n";
        out << "tau " << cycle_notation(cert->tau) << "\n";
        return kOk;
      }
      const auto& w = std::get<SmoothWitness>(verdict);
      out << "NO\n";
      out << "witness i=" << w.i << " l=" << w.l << " j=" << w.j << " expected=" << w.expected
          << " found=" << w.found << "\n";
      print_positions(out, "positions_i", w.positions_i);
      print_positions(out, "positions_l", w.positions_l);
      if (pretty) {
        out << "generators " << to_string(ideal.generators()[w.i - 1]) << " "
            << to_string(ideal.generators()[w.l - 1]) << "\n";
      }
      return kNegative;
    }
    if (embed->parsed()) {
      const MonomialIdeal ideal = load(file, err);
      const auto [image, phi] = embed_spread(ideal, t);
      out << format_ideal(image);
      for (std::size_t j = 1; j <= phi.source_size(); ++j) out << "# phi " << j << " -> " << phi(j) << "\n";
      return kOk;
    }
    if (lattice->parsed()) {
      const LcmLattice l(load(file, err));
      if (dot) {
        out << hasse_dot(l);
        return kOk;
      }
      out << "elements " << l.size() << " atoms " << l.atom_count() << " edges " << l.edge_count() << "\n";
      for (std::size_t e = 0; e < l.size(); ++e) {
        out << "e" << e << " rank " << l.ranks()[e] << " " << render(l.element(e), pretty) << "\n";
      }
      return kOk;
    }
    if (iso->parsed()) {
      const LcmLattice a(load(file, err));
      const LcmLattice b(load(file2, err));
      const auto map = is_isomorphic(a, b);
      if (!map) {
        out << "NONISO\n";
        return kNegative;
      }
      out << "ISO\n";
      for (std::size_t e = 0; e < a.size(); ++e) {
        out << render(a.element(e), pretty) << " -> " << render(b.element((*map)[e]), pretty) << "\n";
      }
      return kOk;
    }
    if (delta->parsed()) {
      const LatticeMap map = build_delta(load(file, err));
      for (std::size_t e = 0; e < map.source.size(); ++e) {
        out << render(map.source.element(e), pretty) << " -> "
            << render(map.target.element(map.image[e]), pretty) << "\n";
      }
      const bool ok = verify_delta(map);
      out << "verdict " << (ok ? "join-preserving surjection" : "FAILED") << "\n";
      return ok ? kOk : kInternal;
    }
    if (depth->parsed()) {
      const DepthReport report = depth_quotient(load(file, err));
      out << "depth " << report.value << "\n";
      out << "projdim " << report.projective_dimension << "\n";
      out << "ambient " << report.ambient << "\n";
      for (const BettiEntry& e : report.betti.entries()) {
        out << "betti " << e.i << " " << render(e.multidegree, pretty) << " " << e.value << "\n";
      }
      return kOk;
    }
    if (sdepth->parsed()) {
      const MonomialIdeal ideal = load(file, err);
      const SdepthReport report = ideal_side ? sdepth_ideal(ideal) : sdepth_quotient(ideal);
      out << "sdepth " << report.value << "\n";
      out << "side " << (report.ideal_side ? "ideal" : "quotient") << "\n";
      out << "ambient " << report.ambient << "\n";
      for (const PosetInterval& iv : report.partition) {
        out << "interval " << render(iv.lower, pretty) << " " << render(iv.upper, pretty) << "\n";
      }
      return kOk;
    }
    if (laws->parsed()) {
      const auto [lo, hi] = parse_range(range);
      const LawsReport report = verify_spreading_laws(load(file, err), lo, hi);
      out << "n " << report.n << " d " << report.d << "\n";
      out << "lattice_isomorphic " << (report.lattice_isomorphic ? "yes" : "no") << "\n";
      out << "smooth " << (report.smooth ? "yes" : "no") << "\n";
      auto row = [&](const InvariantRow& r) {
        out << (r.t == 0 ? std::string("base") : "t=" + std::to_string(r.t)) << " ambient " << r.ambient
            << " depth " << r.depth << " sdepth_quotient " << r.sdepth_quotient << " sdepth_ideal "
            << r.sdepth_ideal << "\n";
      };
      row(report.base);
      for (const InvariantRow& r : report.spreads) row(r);
      for (const LawCheck& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.lhs << " " << c.relation << " " << c.rhs
            << "\n";
      }
      return report.all_passed() ? kOk : kInternal;
    }
    if (golden->parsed()) {
      const std::vector<GoldenRow> rows = replay_golden();
      std::size_t width = 0;
      for (const GoldenRow& r : rows) width = std::max(width, r.name.size());
      bool all = true;
      for (const GoldenRow& r : rows) {
        all = all && r.passed;
        out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.name;
        if (!r.detail.empty()) out << "  " << r.detail;
        out << "\n";
      }
      const auto passed = std::count_if(rows.begin(), rows.end(), [](const GoldenRow& r) { return r.passed; });
      out << passed << "/" << rows.size() << " rows passed\n";
      return all ? kOk : kInternal;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kUsage;
}

}  // namespace mspread::cli
