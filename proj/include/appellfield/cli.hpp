// SPDX-License-Identifier: Apache-2.0
#pragma once

// Command-line front end.  run() parses argv and writes to the given streams,
// so the tool and the tests share one code path.
//
// Exit codes: 0 success, 1 verification failure, 2 flag, domain or I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "elliptic.hpp"
#include "error.hpp"
#include "fields.hpp"
#include "grid.hpp"
#include "hypergeom.hpp"
#include "jacobi.hpp"
#include "series_control.hpp"
#include "verify.hpp"

namespace appellfield::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

inline constexpr std::string_view undefined_psi_token = "psi=undefined(inside-charge)";

namespace detail {

struct BodyFlags {
  std::string body = "cyl";
  double R = 1, Z = 0.7, density = 1;
  std::string form = "lass_blitzer";
};

inline void add_body_flags(CLI::App& app, BodyFlags& f) {
  app.add_option("--body", f.body, "Charge distribution")->check(CLI::IsMember({"cyl", "tube", "disk"}));
  app.add_option("--R", f.R, "Radius");
  app.add_option("--Z", f.Z, "Half height (cylinder, tube)");
  app.add_option("--density", f.density, "rho0 (cyl) or sigma0 / sigma (tube, disk)");
  app.add_option("--form", f.form, "Disk formula")->check(CLI::IsMember({"lass_blitzer", "takahashi"}));
}

inline grid::Body make_body(const BodyFlags& f) {
  grid::Body b;
  if (f.body == "cyl")
    b = fields::CylinderSpec{f.R, f.Z, f.density};
  else if (f.body == "tube")
    b = fields::TubeSpec{f.R, f.Z, f.density};
  else
    b = fields::DiskSpec{f.R, f.density, grid::parse_disk_form(f.form)};
  std::visit([](const auto& s) { s.validate(); }, b);
  return b;
}

using Special = std::function<double(const std::vector<double>&, const SeriesControl&)>;

struct SpecialEntry {
  std::size_t min_args, max_args;
  const char* usage;
  Special fn;
};

inline long as_long(double v, const char* what) {
  if (v != std::floor(v) || std::fabs(v) > 1e15) throw domain_error(std::string(what) + " must be an integer");
  return static_cast<long>(v);
}

inline const std::map<std::string, SpecialEntry>& special_table() {
  using V = const std::vector<double>&;
  using C = const SeriesControl&;
  namespace el = elliptic;
  namespace ja = jacobi;
  namespace hy = hypergeom;
  static const std::map<std::string, SpecialEntry> t = {
      {"carlson_rc", {2, 2, "x y", [](V a, C) { return el::carlson_rc(a[0], a[1]); }}},
      {"carlson_rf", {3, 3, "x y z", [](V a, C) { return el::carlson_rf(a[0], a[1], a[2]); }}},
      {"carlson_rd", {3, 3, "x y z", [](V a, C) { return el::carlson_rd(a[0], a[1], a[2]); }}},
      {"carlson_rj", {4, 4, "x y z p", [](V a, C) { return el::carlson_rj(a[0], a[1], a[2], a[3]); }}},
      {"comp_k", {1, 1, "m", [](V a, C) { return el::comp_k(a[0]); }}},
      {"comp_e", {1, 1, "m", [](V a, C) { return el::comp_e(a[0]); }}},
      {"comp_pi", {2, 2, "n m", [](V a, C) { return el::comp_pi(a[0], a[1]); }}},
      {"ellip_f", {2, 2, "phi m", [](V a, C) { return el::ellip_f(a[0], a[1]); }}},
      {"ellip_e", {2, 2, "phi m", [](V a, C) { return el::ellip_e(a[0], a[1]); }}},
      {"ellip_pi", {3, 3, "n phi m", [](V a, C) { return el::ellip_pi(a[0], a[1], a[2]); }}},
      {"jacobi_am", {2, 2, "u m", [](V a, C) { return ja::jacobi_am(a[0], a[1]); }}},
      {"jacobi_sn", {2, 2, "u m", [](V a, C) { return ja::jacobi_sn(a[0], a[1]); }}},
      {"jacobi_cn", {2, 2, "u m", [](V a, C) { return ja::jacobi_cn(a[0], a[1]); }}},
      {"jacobi_dn", {2, 2, "u m", [](V a, C) { return ja::jacobi_dn(a[0], a[1]); }}},
      {"jacobi_sc", {2, 2, "u m", [](V a, C) { return ja::jacobi_sc(a[0], a[1]); }}},
      {"jacobi_zeta", {2, 2, "u m", [](V a, C) { return ja::jacobi_zeta(a[0], a[1]); }}},
      {"nome", {1, 1, "m", [](V a, C) { return ja::nome(a[0]); }}},
      {"theta", {3, 3, "i u m", [](V a, C c) { return ja::theta(static_cast<int>(as_long(a[0], "i")), a[1], a[2], c); }}},
      {"gauss_2f1", {4, 4, "a b c x", [](V a, C c) { return hy::gauss_2f1(a[0], a[1], a[2], a[3], c); }}},
      {"pfq_4f3",
       {8, 8, "a1 a2 a3 a4 b1 b2 b3 x",
        [](V a, C c) { return hy::pfq_4f3(a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7], c); }}},
      {"appell_f1",
       {6, 6, "alpha beta beta' gamma x y",
        [](V a, C c) { return hy::appell_f1(a[0], a[1], a[2], a[3], a[4], a[5], c); }}},
      {"appell_f2",
       {7, 7, "alpha beta beta' gamma gamma' x y",
        [](V a, C c) { return hy::appell_f2(a[0], a[1], a[2], a[3], a[4], a[5], a[6], c); }}},
      {"i_hyg", {3, 3, "m A theta", [](V a, C c) { return hy::i_hyg(a[0], a[1], a[2], c); }}},
      {"i_hyg_pi", {2, 2, "m A", [](V a, C c) { return hy::i_hyg_pi(a[0], a[1], c); }}},
      {"i_hyg_surface", {1, 1, "m", [](V a, C c) { return hy::i_hyg_surface(a[0], c); }}},
      {"di_hyg_dA", {3, 3, "m A theta", [](V a, C) { return hy::di_hyg_dA(a[0], a[1], a[2]); }}},
      {"di_hyg_dm", {3, 3, "m A theta", [](V a, C) { return hy::di_hyg_dm(a[0], a[1], a[2]); }}},
      {"lauricella_f11_triple",
       {3, 3, "m A s", [](V a, C c) { return hy::lauricella_f11_triple(a[0], a[1], a[2], c); }}},
      {"i_hyg_alt",
       {4, 4, "variant m A s",
        [](V a, C c) { return hy::i_hyg_alt(static_cast<int>(as_long(a[0], "variant")), a[1], a[2], a[3], c); }}},
      {"int_z_sc",
       {2, 3, "u m [branch]",
        [](V a, C c) { return ja::int_z_sc(a[0], a[1], a.size() > 2 ? as_long(a[2], "branch") : 0L, c); }}},
      {"int_z_sc_jump", {1, 1, "m", [](V a, C) { return jacobi::int_z_sc_jump(a[0]); }}},
  };
  return t;
}

inline std::string special_names() {
  std::string s;
  for (const auto& [name, e] : special_table()) s += "  " + name + " " + e.usage + "\n";
  return s;
}

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

inline int cmd_eval(const BodyFlags& bf, double r, double z, long branch, std::optional<std::string> quantity,
                    const SeriesControl& ctl, Streams io) {
  const grid::Body body = make_body(bf);
  const bool disk = std::holds_alternative<fields::DiskSpec>(body);
  const grid::Quantity q = quantity ? grid::parse_quantity(*quantity) : (disk ? grid::Quantity::phi : grid::Quantity::both);
  if (disk && q != grid::Quantity::phi) throw domain_error("eval: psi is not available for the disk");
  if (branch != 0 && !std::holds_alternative<fields::TubeSpec>(body))
    throw domain_error("eval: --branch applies to the tube only");
  const std::string units = disk ? "units=sigma*length" : (bf.body == "cyl" ? "units=rho0*length^2" : "units=sigma0*length");
  if (q != grid::Quantity::psi) {
    double phi;
    if (const auto* c = std::get_if<fields::CylinderSpec>(&body))
      phi = fields::phi_cyl(r, z, *c, ctl);
    else if (const auto* t = std::get_if<fields::TubeSpec>(&body))
      phi = fields::phi_tube(r, z, *t, ctl);
    else
      phi = fields::phi_disk(r, z, std::get<fields::DiskSpec>(body));
    io.out << "phi=" << grid::format_double(phi) << ' ' << units << " branch=0\n";
  }
  if (q != grid::Quantity::phi) {
    if (const auto* c = std::get_if<fields::CylinderSpec>(&body)) {
      if (fields::inside_closed_cylinder(r, z, c->R, c->Z))
        io.out << undefined_psi_token << '\n';
      else
        io.out << "psi=" << grid::format_double(fields::psi_cyl_value(r, z, *c)) << ' ' << units
               << "*length branch=0\n";
    } else {
      const auto& t = std::get<fields::TubeSpec>(body);
      io.out << "psi=" << grid::format_double(fields::psi_tube_value(r, z, t, branch)) << ' ' << units
             << "*length branch=" << branch << '\n';
    }
  }
  return exit_ok;
}

inline int cmd_grid(grid::GridSpec spec, const std::string& format, const std::string& out_path, unsigned threads,
                    const SeriesControl& ctl, Streams io) {
  spec.validate();
  const auto rows = grid::evaluate(spec, ctl, threads);
  auto emit = [&](std::ostream& os) {
    if (format == "json")
      grid::write_json(os, spec, rows);
    else
      grid::write_csv(os, rows);
  };
  if (out_path.empty() || out_path == "-") {
    emit(io.out);
    return exit_ok;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("grid: cannot open " + out_path);
  emit(f);
  f.close();
  if (!f) throw std::runtime_error("grid: write failed for " + out_path);
  return exit_ok;
}

inline int cmd_special(const std::string& name, const std::vector<double>& args, const SeriesControl& ctl, Streams io) {
  const auto& t = special_table();
  const auto it = t.find(name);
  if (it == t.end()) throw domain_error("special: unknown function '" + name + "'; known:\n" + special_names());
  const auto& e = it->second;
  if (args.size() < e.min_args || args.size() > e.max_args)
    throw domain_error("special: " + name + " expects arguments: " + e.usage);
  io.out << grid::format_double(e.fn(args, ctl)) << '\n';
  return exit_ok;
}

inline int cmd_verify(const std::string& suite, std::uint64_t seed, const std::vector<int>& only, Streams io) {
  verify::Options opt;
  opt.full = suite == "full";
  opt.seed = seed;
  std::vector<int> ids = only;
  if (ids.empty())
    for (int i = 1; i <= verify::criterion_count; ++i) ids.push_back(i);
  for (int id : ids)
    if (id < 1 || id > verify::criterion_count) throw domain_error("verify: criterion id must lie in 1..15");
  int failed = 0;
  for (int id : ids) {
    const auto r = verify::run(id, opt);
    io.out << verify::format(r) << '\n' << std::flush;
    if (!r.passed) ++failed;
  }
  io.out << (failed ? "FAILED " : "OK ") << (ids.size() - static_cast<std::size_t>(failed)) << '/' << ids.size()
         << " criteria passed\n";
  return failed ? exit_failed : exit_ok;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  detail::Streams io{out, err};
  CLI::App app{"Closed-form potentials of charged cylinders, tubes and disks, with verification", "appellfield"};
  app.require_subcommand(1);

  detail::BodyFlags eval_body;
  double er = 0, ez = 0;
  long ebranch = 0;
  std::optional<std::string> equantity;
  auto* eval = app.add_subcommand("eval", "phi and psi at one point");
  detail::add_body_flags(*eval, eval_body);
  eval->add_option("--r", er, "Radial coordinate")->required();
  eval->add_option("--z", ez, "Axial coordinate")->required();
  eval->add_option("--branch", ebranch, "Sheet index of the tube psi");
  eval->add_option("--quantity", equantity, "phi, psi or both")->check(CLI::IsMember({"phi", "psi", "both"}));

  detail::BodyFlags grid_body;
  grid::GridSpec gspec;
  std::string gquantity = "both", gformat = "csv", gout;
  std::vector<long> gbranches;
  unsigned gthreads = 0;
  auto* gridc = app.add_subcommand("grid", "phi and psi on a regular (r, z) grid");
  detail::add_body_flags(*gridc, grid_body);
  gridc->add_option("--r-min", gspec.r_min);
  gridc->add_option("--r-max", gspec.r_max);
  gridc->add_option("--z-min", gspec.z_min);
  gridc->add_option("--z-max", gspec.z_max);
  gridc->add_option("--nr", gspec.nr);
  gridc->add_option("--nz", gspec.nz);
  gridc->add_option("--quantity", gquantity)->check(CLI::IsMember({"phi", "psi", "both"}));
  gridc->add_option("--branch", gbranches, "Sheet index; repeat for several sheets")->allow_extra_args(false);
  gridc->add_option("--format", gformat)->check(CLI::IsMember({"csv", "json"}));
  gridc->add_option("--out", gout, "Output path; '-' or empty for standard output");
  gridc->add_option("--threads", gthreads, "Worker threads; 0 uses all cores");

  std::string sfn;
  std::vector<double> sargs;
  auto* special = app.add_subcommand("special", "Evaluate a special function by name");
  special->add_option("--fn", sfn, "Function name")->required();
  special->add_option("args", sargs, "Numeric arguments");
  special->footer("Functions:\n" + detail::special_names());

  std::string vsuite = "fast";
  std::uint64_t vseed = 42;
  std::vector<int> vonly;
  auto* verifyc = app.add_subcommand("verify", "Run the acceptance battery");
  verifyc->add_option("--suite", vsuite)->check(CLI::IsMember({"fast", "full"}));
  verifyc->add_option("--seed", vseed);
  verifyc->add_option("--only", vonly, "Run only these criterion ids")->allow_extra_args(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << e.what() << '\n';
      return exit_ok;
    }
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    const SeriesControl ctl = SeriesControl::from_environment();
    if (*eval) return detail::cmd_eval(eval_body, er, ez, ebranch, equantity, ctl, io);
    if (*gridc) {
      gspec.body = detail::make_body(grid_body);
      gspec.quantity = grid::parse_quantity(gquantity);
      if (!gbranches.empty()) gspec.branches = gbranches;
      return detail::cmd_grid(gspec, gformat, gout, gthreads, ctl, io);
    }
    if (*special) return detail::cmd_special(sfn, sargs, ctl, io);
    return detail::cmd_verify(vsuite, vseed, vonly, io);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace appellfield::cli
