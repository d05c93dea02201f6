// SPDX-License-Identifier: Apache-2.0
#pragma once

// Rectangular (r, z) grids of phi and psi with deterministic CSV and JSON output.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "fields.hpp"
#include "series_control.hpp"

namespace appellfield::grid {

enum class Quantity { phi, psi, both };

using Body = std::variant<fields::CylinderSpec, fields::TubeSpec, fields::DiskSpec>;

struct GridSpec {
  double r_min = 0, r_max = 3;
  double z_min = -3, z_max = 3;
  long nr = 61, nz = 121;
  Body body = fields::CylinderSpec{};
  Quantity quantity = Quantity::both;
  // One sheet of rows per entry; values other than 0 apply to the tube only.
  std::vector<long> branches{0};

  void validate() const {
    for (double v : {r_min, r_max, z_min, z_max})
      if (!std::isfinite(v)) throw domain_error("GridSpec: ranges must be finite");
    if (r_min < 0) throw domain_error("GridSpec: r_min must be >= 0");
    if (r_max < r_min || z_max < z_min) throw domain_error("GridSpec: empty range");
    if (nr < 2 || nz < 2) throw domain_error("GridSpec: nr and nz must be >= 2");
    if (branches.empty()) throw domain_error("GridSpec: at least one branch is required");
    std::visit([](const auto& b) { b.validate(); }, body);
    const bool is_tube = std::holds_alternative<fields::TubeSpec>(body);
    for (long b : branches)
      if (b != 0 && !is_tube) throw domain_error("GridSpec: nonzero branches apply to the tube only");
    if (std::holds_alternative<fields::DiskSpec>(body) && quantity != Quantity::phi)
      throw domain_error("GridSpec: psi is not available for the disk");
  }

  double r_at(long i) const { return i == nr - 1 ? r_max : r_min + (r_max - r_min) * static_cast<double>(i) / (nr - 1); }
  double z_at(long j) const { return j == nz - 1 ? z_max : z_min + (z_max - z_min) * static_cast<double>(j) / (nz - 1); }
};

// One output row; NaN marks an undefined or unrequested value.
struct GridRow {
  double r = 0, z = 0;
  double phi = std::numeric_limits<double>::quiet_NaN();
  double psi = std::numeric_limits<double>::quiet_NaN();
  long branch = 0;

  bool operator==(const GridRow& o) const {
    auto same = [](double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; };
    return same(r, o.r) && same(z, o.z) && same(phi, o.phi) && same(psi, o.psi) && branch == o.branch;
  }
};

// phi and psi at one point.  Points where a value is undefined (psi inside
// the charge, phi on the cylinder edge circle, psi on the tube sheet) give NaN.
inline GridRow evaluate_point(double r, double z, const GridSpec& spec, long branch, const SeriesControl& ctl) {
  GridRow row{r, z};
  row.branch = branch;
  const bool want_phi = spec.quantity != Quantity::psi;
  const bool want_psi = spec.quantity != Quantity::phi;
  auto guarded = [](auto&& fn) {
    try {
      return fn();
    } catch (const geometry_error&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };
  if (const auto* c = std::get_if<fields::CylinderSpec>(&spec.body)) {
    if (want_phi) row.phi = guarded([&] { return fields::phi_cyl(r, z, *c, ctl); });
    if (want_psi && !fields::inside_closed_cylinder(r, z, c->R, c->Z)) row.psi = fields::psi_cyl_value(r, z, *c);
  } else if (const auto* t = std::get_if<fields::TubeSpec>(&spec.body)) {
    if (want_phi) row.phi = fields::phi_tube(r, z, *t, ctl);
    if (want_psi) row.psi = guarded([&] { return fields::psi_tube_value(r, z, *t, branch); });
  } else {
    const auto& d = std::get<fields::DiskSpec>(spec.body);
    if (want_phi) row.phi = guarded([&] { return fields::phi_disk(r, z, d); });
  }
  return row;
}

// Rows ordered by branch, then z, then r.  Work is split across threads by
// z line; the result does not depend on the thread count.
inline std::vector<GridRow> evaluate(const GridSpec& spec, const SeriesControl& ctl = {}, unsigned threads = 0) {
  spec.validate();
  ctl.validate();
  const long lines = static_cast<long>(spec.branches.size()) * spec.nz;
  std::vector<GridRow> rows(static_cast<std::size_t>(lines * spec.nr));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<long>(threads, lines));
  auto work = [&](unsigned w, std::exception_ptr& err) {
    try {
      for (long line = w; line < lines; line += threads) {
        const long b = line / spec.nz, j = line % spec.nz;
        const long branch = spec.branches[static_cast<std::size_t>(b)];
        for (long i = 0; i < spec.nr; ++i)
          rows[static_cast<std::size_t>(line * spec.nr + i)] = evaluate_point(spec.r_at(i), spec.z_at(j), spec, branch, ctl);
      }
    } catch (...) {
      err = std::current_exception();
    }
  };
  std::vector<std::exception_ptr> errors(threads);
  if (threads == 1) {
    work(0, errors[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w, std::ref(errors[w]));
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

// ---------------------------------------------------------------------------
// Text formats.

// Shortest decimal that parses back to the same double; "nan", "inf", "-inf".
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw domain_error("grid: cannot parse number '" + std::string(s) + "'");
  return v;
}

inline constexpr std::string_view csv_header = "r,z,phi,psi,branch";

inline void write_csv(std::ostream& out, const std::vector<GridRow>& rows) {
  out << csv_header << '\n';
  for (const auto& row : rows) {
    out << format_double(row.r) << ',' << format_double(row.z) << ',' << format_double(row.phi) << ','
        << format_double(row.psi) << ',' << row.branch << '\n';
  }
}

inline std::vector<GridRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != csv_header) throw domain_error("grid: missing CSV header");
  std::vector<GridRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string_view> cells;
    std::string_view rest(line);
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest.remove_prefix(pos + 1))
      cells.push_back(rest.substr(0, pos));
    cells.push_back(rest);
    if (cells.size() != 5) throw domain_error("grid: CSV row must have 5 fields");
    GridRow row{parse_double(cells[0]), parse_double(cells[1]), parse_double(cells[2]), parse_double(cells[3])};
    const auto res = std::from_chars(cells[4].data(), cells[4].data() + cells[4].size(), row.branch);
    if (res.ec != std::errc{} || res.ptr != cells[4].data() + cells[4].size())
      throw domain_error("grid: bad branch field");
    rows.push_back(row);
  }
  return rows;
}

inline std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::phi: return "phi";
    case Quantity::psi: return "psi";
    default: return "both";
  }
}

inline Quantity parse_quantity(std::string_view s) {
  if (s == "phi") return Quantity::phi;
  if (s == "psi") return Quantity::psi;
  if (s == "both") return Quantity::both;
  throw domain_error("unknown quantity '" + std::string(s) + "' (expected phi, psi or both)");
}

inline std::string_view disk_form_name(fields::DiskForm f) {
  return f == fields::DiskForm::takahashi ? "takahashi" : "lass_blitzer";
}

inline fields::DiskForm parse_disk_form(std::string_view s) {
  if (s == "lass_blitzer") return fields::DiskForm::lass_blitzer;
  if (s == "takahashi") return fields::DiskForm::takahashi;
  throw domain_error("unknown disk form '" + std::string(s) + "' (expected lass_blitzer or takahashi)");
}

using json = nlohmann::json;

namespace detail {

// NaN is stored as null.
inline json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }
inline double number(const json& j) { return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>(); }

}  // namespace detail

inline json body_to_json(const Body& body) {
  json j;
  if (const auto* c = std::get_if<fields::CylinderSpec>(&body)) {
    j = {{"type", "cylinder"}, {"R", c->R}, {"Z", c->Z}, {"rho0", c->rho0}};
  } else if (const auto* t = std::get_if<fields::TubeSpec>(&body)) {
    j = {{"type", "tube"}, {"R", t->R}, {"Z", t->Z}, {"sigma0", t->sigma0}};
  } else {
    const auto& d = std::get<fields::DiskSpec>(body);
    j = {{"type", "disk"}, {"R", d.R}, {"sigma", d.sigma}, {"form", disk_form_name(d.form)}};
  }
  return j;
}

inline Body body_from_json(const json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "cylinder") return fields::CylinderSpec{j.at("R"), j.at("Z"), j.at("rho0")};
  if (type == "tube") return fields::TubeSpec{j.at("R"), j.at("Z"), j.at("sigma0")};
  if (type == "disk") return fields::DiskSpec{j.at("R"), j.at("sigma"), parse_disk_form(j.at("form").get<std::string>())};
  throw domain_error("grid: unknown body type '" + type + "'");
}

inline json spec_to_json(const GridSpec& s) {
  return {{"r_min", s.r_min},   {"r_max", s.r_max}, {"z_min", s.z_min},
          {"z_max", s.z_max},   {"nr", s.nr},       {"nz", s.nz},
          {"body", body_to_json(s.body)}, {"quantity", quantity_name(s.quantity)}, {"branches", s.branches}};
}

inline GridSpec spec_from_json(const json& j) {
  GridSpec s;
  s.r_min = j.at("r_min");
  s.r_max = j.at("r_max");
  s.z_min = j.at("z_min");
  s.z_max = j.at("z_max");
  s.nr = j.at("nr");
  s.nz = j.at("nz");
  s.body = body_from_json(j.at("body"));
  s.quantity = parse_quantity(j.at("quantity").get<std::string>());
  s.branches = j.at("branches").get<std::vector<long>>();
  return s;
}

inline json to_json(const GridSpec& spec, const std::vector<GridRow>& rows) {
  json out;
  out["meta"] = spec_to_json(spec);
  json arr = json::array();
  for (const auto& r : rows)
    arr.push_back({{"r", detail::number(r.r)},
                   {"z", detail::number(r.z)},
                   {"phi", detail::number(r.phi)},
                   {"psi", detail::number(r.psi)},
                   {"branch", r.branch}});
  out["rows"] = std::move(arr);
  return out;
}

inline void write_json(std::ostream& out, const GridSpec& spec, const std::vector<GridRow>& rows) {
  out << to_json(spec, rows).dump(1) << '\n';
}

struct GridData {
  GridSpec spec;
  std::vector<GridRow> rows;
};

inline GridData read_json(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw domain_error(std::string("grid: invalid JSON: ") + e.what());
  }
  GridData d;
  d.spec = spec_from_json(j.at("meta"));
  for (const auto& r : j.at("rows"))
    d.rows.push_back(GridRow{detail::number(r.at("r")), detail::number(r.at("z")), detail::number(r.at("phi")),
                             detail::number(r.at("psi")), r.at("branch").get<long>()});
  return d;
}

}  // namespace appellfield::grid
