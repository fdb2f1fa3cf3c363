//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
//
// Command-line front-end. A thin veneer: all logic lives in the library so
// every command is scriptable and testable headlessly. Exit code 0 on
// all-pass verification, nonzero otherwise (certify uses 2 for a clean
// "incomplete" verdict to distinguish it from hard errors).
//
//===----------------------------------------------------------------------===//

#include "CLI11.hpp"

#include "es4/bounds.hpp"
#include "es4/catalog.hpp"
#include "es4/enumeration.hpp"
#include "es4/simplex.hpp"
#include "es4/white3d.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace es4;

std::array<Int, 4> parse_v(const std::string& text) {
  std::istringstream is(text);
  std::array<Int, 4> v{};
  if (!(is >> v[0] >> v[1] >> v[2] >> v[3]))
    throw std::invalid_argument("expected four integers, got '" + text + "'");
  Int extra;
  if (is >> extra)
    throw std::invalid_argument("expected exactly four integers, got '" + text + "'");
  return v;
}

int run_enumerate(Int dmin, Int dmax, const std::string& algorithm, int jobs,
                  const std::string& store_dir) {
  AlgoMode mode = AlgoMode::Auto;
  if (algorithm == "a1")
    mode = AlgoMode::ForceA1;
  else if (algorithm == "a2")
    mode = AlgoMode::ForceA2;
  Store store{store_dir};
  const RangeSummary summary = enumerate_range(dmin, dmax, store, jobs, mode);
  std::size_t computed = 0, skipped = 0, errors = 0;
  for (const auto& item : summary.items) {
    if (item.skipped) {
      ++skipped;
      std::cout << "D " << item.determinant << " skipped (complete)\n";
    } else if (!item.error.empty()) {
      ++errors;
      std::cout << "D " << item.determinant << " ERROR: " << item.error << "\n";
    } else {
      ++computed;
      std::cout << "D " << item.determinant << " algo " << item.algo << " classes "
                << item.classes << " seconds " << item.seconds << "\n";
    }
  }
  std::cout << "enumerated [" << dmin << ", " << dmax << "]: " << computed
            << " computed, " << skipped << " skipped, " << errors << " errors\n";
  return errors == 0 ? 0 : 1;
}

int run_verify_catalog(const std::string& store_dir, Int dmax) {
  const VerificationReport cat = verify_catalog();
  std::cout << "catalog self-check: " << cat.summary() << "\n";
  bool ok = cat.pass();
  if (!store_dir.empty()) {
    const VerificationReport diff = diff_store(Store{store_dir}, dmax);
    std::cout << "store diff (D <= " << dmax << "): " << diff.summary() << "\n";
    ok = ok && diff.pass();
  }
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int run_width(const std::string& vtext, const std::string& tuple_text) {
  ResidueTuple t = vtext.empty() ? parse_tuple(tuple_text)
                                 : tuple_of_vrep(make_vrep(parse_v(vtext)));
  std::cout << "tuple " << render(t) << "\n";
  const WidthResult w = width(t);
  if (w.capped) {
    std::cout << "width >" << kDefaultWidthCap << " (cap " << kDefaultWidthCap << ")\n";
    return 0;
  }
  std::cout << "width " << w.width << "\n";
  std::cout << "certificate";
  for (Int l : w.certificate)
    std::cout << ' ' << l;
  std::cout << "\n";
  if (!vtext.empty()) {
    const IntAffine f = functional_from_certificate(VRepSimplex{parse_v(vtext)},
                                                    w.certificate);
    std::cout << "functional c=" << f.constant << " a=(" << f.coeffs[0] << ","
              << f.coeffs[1] << "," << f.coeffs[2] << "," << f.coeffs[3] << ")\n";
  }
  return 0;
}

int run_empty(const std::string& tuple_text) {
  const ResidueTuple t = parse_tuple(tuple_text);
  const Int k = first_nonempty_witness(t);
  if (k == 0)
    std::cout << "empty\n";
  else
    std::cout << "nonempty witness k=" << k << "\n";
  return 0;
}

int run_bounds(bool have_width, double w, bool five_point, bool have_lambda,
               double lambda, bool cap, const std::string& width_table,
               const std::string& lambda_table) {
  if (have_width) {
    const BoundEvaluation e = hollow3_volume_bound(w, five_point);
    std::cout.precision(12);
    std::cout << "bound " << e.value << " regime " << e.regime << "\n";
  }
  if (have_lambda) {
    std::cout.precision(12);
    std::cout << "bound " << eq8_bound(lambda) << "\n";
  }
  if (cap) {
    std::cout << "cap " << simplex_volume_cap() << "\n";
    std::cout.precision(12);
    std::cout << "branch-019 " << volume_cap_branch_019() << "\n";
    std::cout << "projecting-cap " << projecting_volume_cap() << "\n";
  }
  if (!width_table.empty()) {
    std::ofstream out(width_table);
    out << "w,general,five_point\n";
    out.precision(12);
    for (double x = 2.16; x <= 4.0 + 1e-12; x += 0.01)
      out << x << ',' << hollow3_volume_bound(x, false).value << ','
          << hollow3_volume_bound(x, true).value << "\n";
    std::cout << "wrote " << width_table << "\n";
  }
  if (!lambda_table.empty()) {
    std::ofstream out(lambda_table);
    out << "lambda,bound\n";
    out.precision(12);
    for (double x = 0.01; x <= 0.65 + 1e-12; x += 0.005)
      out << x << ',' << eq8_bound(x) << "\n";
    std::cout << "wrote " << lambda_table << "\n";
  }
  return 0;
}

int run_white3d(Int qmax) {
  bool ok = true;
  for (Int q = 1; q <= qmax; ++q) {
    const bool pass = crosscheck_white(q);
    ok = ok && pass;
    std::cout << "q " << q << " classes " << white_classes(q).size() << ' '
              << (pass ? "ok" : "FAIL") << "\n";
  }
  std::cout << "white3d q <= " << qmax << ": " << (ok ? "all ok" : "FAILURES") << "\n";
  return ok ? 0 : 1;
}

int run_certify(const std::string& store_dir, Int dmax) {
  const Store store{store_dir};
  const CertifyVerdict v = completeness_certificate(dmax, store);
  std::cout << v.text << "\n";
  if (const auto est = estimate_full_run(store)) {
    std::cout.precision(6);
    std::cout << "timing model: t(D) ~ " << est->c << " * D^" << est->alpha << " from "
              << est->samples << " samples; full run to D <= 7600 estimated "
              << est->total_seconds / 3600.0 << " CPU-hours\n";
  } else {
    std::cout << "timing model: insufficient samples for extrapolation\n";
  }
  return v.complete ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"empty lattice 4-simplex enumeration and verification toolkit"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate empty classes per determinant");
  Int dmin = 1, dmax = 1;
  std::string algorithm = "auto", store_dir;
  int jobs = 1;
  enumerate->add_option("--dmin", dmin, "first determinant")->required();
  enumerate->add_option("--dmax", dmax, "last determinant")->required();
  enumerate->add_option("--algorithm", algorithm, "auto|a1|a2")
      ->check(CLI::IsMember({"auto", "a1", "a2"}));
  enumerate->add_option("--jobs", jobs, "worker threads");
  enumerate->add_option("--store", store_dir, "store directory")->required();

  auto* verify = app.add_subcommand("verify-catalog", "check the embedded catalog");
  std::string verify_store;
  Int verify_dmax = 179;
  verify->add_option("--store", verify_store, "store directory to diff against");
  verify->add_option("--dmax", verify_dmax, "diff range");

  auto* width_cmd = app.add_subcommand("width", "width and certificate of a simplex");
  std::string vtext, tuple_text;
  width_cmd->add_option("--v", vtext, "four integers 'a b c d'");
  width_cmd->add_option("--tuple", tuple_text, "rendering 'D:u0 u1 u2 u3 u4'");

  auto* empty_cmd = app.add_subcommand("empty", "emptiness of a tuple");
  std::string empty_tuple;
  empty_cmd->add_option("--tuple", empty_tuple, "rendering 'D:u0 u1 u2 u3 u4'")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form volume bounds");
  double bw = 0, blambda = 0;
  bool five_point = false, want_cap = false;
  std::string width_table, lambda_table;
  auto* opt_w = bounds_cmd->add_option("--width", bw, "hollow 3-body width");
  bounds_cmd->add_flag("--five-point", five_point, "five-point body variant");
  auto* opt_l = bounds_cmd->add_option("--lambda", blambda, "barycentric parameter");
  bounds_cmd->add_flag("--cap", want_cap, "print the volume cap");
  bounds_cmd->add_option("--width-table", width_table, "CSV output of (w, bound)");
  bounds_cmd->add_option("--lambda-table", lambda_table, "CSV output of (lambda, bound)");

  auto* white_cmd = app.add_subcommand("white3d", "3-dimensional oracle crosscheck");
  Int qmax = 1;
  white_cmd->add_option("--qmax", qmax, "largest q")->required();

  auto* certify_cmd = app.add_subcommand("certify", "classification completeness certificate");
  std::string certify_store;
  Int certify_dmax = 0;
  certify_cmd->add_option("--store", certify_store, "store directory")->required();
  certify_cmd->add_option("--dmax", certify_dmax, "coverage")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(enumerate))
      return run_enumerate(dmin, dmax, algorithm, jobs, store_dir);
    if (app.got_subcommand(verify))
      return run_verify_catalog(verify_store, verify_dmax);
    if (app.got_subcommand(width_cmd)) {
      if (vtext.empty() == tuple_text.empty())
        throw std::invalid_argument("width: give exactly one of --v and --tuple");
      return run_width(vtext, tuple_text);
    }
    if (app.got_subcommand(empty_cmd))
      return run_empty(empty_tuple);
    if (app.got_subcommand(bounds_cmd)) {
      if (!*opt_w && !*opt_l && !want_cap && width_table.empty() && lambda_table.empty())
        throw std::invalid_argument("bounds: nothing to do");
      return run_bounds(!!*opt_w, bw, five_point, !!*opt_l, blambda, want_cap,
                        width_table, lambda_table);
    }
    if (app.got_subcommand(white_cmd))
      return run_white3d(qmax);
    if (app.got_subcommand(certify_cmd))
      return run_certify(certify_store, certify_dmax);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 1;
}
