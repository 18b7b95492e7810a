#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "psigroups/catalog.hpp"
#include "psigroups/cp2.hpp"
#include "psigroups/error.hpp"
#include "psigroups/expr.hpp"
#include "psigroups/gt1.hpp"
#include "psigroups/omega.hpp"
#include "psigroups/psi_engine.hpp"
#include "psigroups/verify.hpp"

namespace psigroups::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

void print_psi(const FiniteGroup& g, std::ostream& out) {
  out << "psi(" << g.name() << ") = " << psi_brute(g) << '\n';
}

void print_omega(const FiniteGroup& g, std::ostream& out) {
  const auto f = omega_filtration(g);
  for (std::size_t i = 0; i < f.levels.size(); ++i) {
    out << "i=" << i << " set=" << f.levels[i].set_size
        << " gen=" << f.levels[i].subgroup_size << '\n';
  }
}

void print_cp2(const FiniteGroup& g, std::ostream& out) {
  const auto report = is_cp2_pairwise(g);
  out << "CP2: " << (report.is_cp2 ? "yes" : "no") << '\n';
  if (report.witness) {
    const auto& w = *report.witness;
    out << "witness: x=" << w.x << " y=" << w.y << " o(x)=" << w.order_x
        << " o(y)=" << w.order_y << " o(xy)=" << w.order_xy << '\n';
  }
}

void print_spectrum(const FiniteGroup& g, std::ostream& out) {
  bool first = true;
  for (const auto& [order, count] : order_spectrum(g)) {
    out << (first ? "" : " ") << order << ':' << count;
    first = false;
  }
  out << '\n';
}

void print_compare(const FiniteGroup& p, const FiniteGroup& q, std::ostream& out) {
  const auto c = predict_order(p, q);
  out << "P = " << p.name() << '\n';
  out << "Q = " << q.name() << '\n';
  out << "psi(P) = " << c.psi_p << '\n';
  out << "psi(Q) = " << c.psi_q << '\n';
  out << "relation: " << relation_symbol(c.relation) << '\n';
  out << "predicted: "
      << (c.predicted ? std::string(1, relation_symbol(*c.predicted)) : "none") << '\n';
  out << "theorem: " << c.theorem_note << '\n';
  for (const auto& h : c.hypotheses) {
    out << "hypothesis: " << (h.passed ? "pass " : "fail ") << h.description << '\n';
  }
  const auto bij = order_bijection(p, q);
  if (const auto* mismatch = std::get_if<SpectrumMismatch>(&bij)) {
    out << "bijection: no\n";
    out << "mismatch: order=" << mismatch->order << " P=" << mismatch->count_p
        << " Q=" << mismatch->count_q << '\n';
  } else {
    out << "bijection: yes\n";
  }
}

void print_report(const TheoremReport& r, bool show_findings, std::ostream& out) {
  out << std::left << std::setw(20) << r.id << std::setw(10) << status_name(r.status())
      << "checked=" << r.pairs_checked << " applicable=" << r.hypothesis_applicable
      << " violations=" << r.violations.size() << " findings=" << r.findings.size()
      << '\n';
  for (const auto& v : r.violations) {
    out << "  violation: " << v.subject << ": " << v.details << '\n';
  }
  if (show_findings) {
    for (const auto& f : r.findings) {
      out << "  finding: " << f.subject << ": " << f.details << '\n';
    }
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FiniteGroup import_group(const std::string& path, bool check_assoc) {
  return parse_group_table(read_file(path), std::filesystem::path(path).stem().string(),
                           check_assoc ? AssocCheck::kExhaustive : AssocCheck::kAuto);
}

}  // namespace

std::size_t max_order_from_env() {
  const char* raw = std::getenv("PSIGROUPS_MAX_ORDER");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxOrder;
  const std::string_view text(raw);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0 ||
      value > kHardMaxOrder) {
    throw DomainError("PSIGROUPS_MAX_ORDER must be an integer in [1, " +
                      std::to_string(kHardMaxOrder) + "]");
  }
  return value;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Element-order sums, Omega filtrations and CP2 tests for finite p-groups",
               "psigroups"};
  app.require_subcommand(1);

  std::string expr1, expr2, out_path, import_path;
  std::vector<std::uint64_t> primes;
  std::size_t verify_max_order = 256;
  std::vector<std::string> verify_imports;
  bool show_findings = false;
  bool check_assoc = false;

  auto* psi = app.add_subcommand("psi", "print psi(G)");
  psi->add_option("expr", expr1, "group expression")->required();
  auto* omega = app.add_subcommand("omega", "print the Omega filtration");
  omega->add_option("expr", expr1, "group expression")->required();
  auto* cp2 = app.add_subcommand("cp2", "pairwise CP2 test");
  cp2->add_option("expr", expr1, "group expression")->required();
  auto* spectrum = app.add_subcommand("spectrum", "print order:count pairs");
  spectrum->add_option("expr", expr1, "group expression")->required();
  auto* compare = app.add_subcommand("compare", "compare psi of two groups of equal order");
  compare->add_option("P", expr1, "group expression")->required();
  compare->add_option("Q", expr2, "group expression")->required();
  auto* verify = app.add_subcommand("verify", "run the theorem suites over a catalog");
  verify->add_option("--p", primes, "prime (repeatable)")->required();
  verify->add_option("--max-order", verify_max_order, "largest group order")
      ->capture_default_str();
  verify->add_option("--import", verify_imports, "extra GT1 group (repeatable)");
  verify->add_flag("--findings", show_findings, "list out-of-hypothesis findings");
  auto* exp = app.add_subcommand("export", "write a group as GT1");
  exp->add_option("expr", expr1, "group expression")->required();
  exp->add_option("--out", out_path, "output path")->required();
  auto* imp = app.add_subcommand("import", "run a subcommand on a GT1 file");
  imp->add_option("path", import_path, "GT1 file")->required();
  imp->add_flag("--check-assoc", check_assoc, "exhaustive associativity check");
  imp->require_subcommand(1);
  auto* imp_psi = imp->add_subcommand("psi", "print psi(G)");
  auto* imp_omega = imp->add_subcommand("omega", "print the Omega filtration");
  auto* imp_cp2 = imp->add_subcommand("cp2", "pairwise CP2 test");
  auto* imp_spectrum = imp->add_subcommand("spectrum", "print order:count pairs");

  // CLI11 consumes arguments from the back and excludes the program name.
  std::vector<std::string> reversed;
  for (std::size_t i = args.size(); i > 1; --i) reversed.push_back(args[i - 1]);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    const BuildOptions options{max_order_from_env()};
    auto build = [&](const std::string& text) { return build_group(text, options); };

    if (*psi) print_psi(build(expr1), out);
    if (*omega) print_omega(build(expr1), out);
    if (*cp2) print_cp2(build(expr1), out);
    if (*spectrum) print_spectrum(build(expr1), out);
    if (*compare) print_compare(build(expr1), build(expr2), out);
    if (*exp) {
      const std::string text = serialize_group(build(expr1));
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw Error("cannot write " + out_path);
      file << text;
      if (!file.flush()) throw Error("cannot write " + out_path);
    }
    if (*imp) {
      const FiniteGroup g = import_group(import_path, check_assoc);
      if (*imp_psi) print_psi(g, out);
      if (*imp_omega) print_omega(g, out);
      if (*imp_cp2) print_cp2(g, out);
      if (*imp_spectrum) print_spectrum(g, out);
    }
    if (*verify) {
      auto catalog = build_catalog(primes, verify_max_order, options.max_order);
      for (const auto& path : verify_imports) {
        add_to_catalog(catalog, import_group(path, false));
      }
      out << "catalog: primes=";
      for (std::size_t i = 0; i < catalog.primes.size(); ++i) {
        out << (i ? "," : "") << catalog.primes[i];
      }
      out << " max-order=" << catalog.max_order << " entries=" << catalog.entries.size()
          << '\n';
      const auto reports = verify_theorems(catalog);
      std::size_t violated = 0;
      for (const auto& r : reports) {
        print_report(r, show_findings, out);
        if (r.status() == ReportStatus::kViolated) ++violated;
      }
      out << "summary: " << reports.size() << " reports, " << violated << " violated\n";
      return violated == 0 ? kExitOk : kExitViolation;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace psigroups::cli
