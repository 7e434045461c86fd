#include "sumrules/report_json.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace sumrules {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json int_json(const Integer& n) {
  if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

ordered_json quad_json(const QuadPoly& p) {
  return ordered_json{{"c2", p.c2.str()}, {"c1", p.c1.str()}, {"c0", p.c0.str()}};
}

ordered_json witnesses_json(const std::vector<std::pair<Rational, Rational>>& ws) {
  ordered_json arr = ordered_json::array();
  for (const auto& [z, value] : ws) arr.push_back({z.str(), value.str()});
  return arr;
}

}  // namespace

std::string to_json(const CheckReport& report) {
  ordered_json j{{"kind", report.kind},
                 {"holds", report.holds},
                 {"residual", quad_json(report.residual)},
                 {"witnesses", witnesses_json(report.witnesses)},
                 {"notes", report.notes}};
  return j.dump();
}

std::string to_json(const FrameReport& report) {
  ordered_json j{{"kind", "frame"},
                 {"nu", report.nu.str()},
                 {"mult", int_json(report.mult)},
                 {"tight", report.tight},
                 {"s_xx", report.s_xx.str()},
                 {"s_yy", report.s_yy.str()},
                 {"s_xy_scaled", report.s_xy_scaled.str()},
                 {"frame_constant", nullptr},
                 {"predicted_constant", report.predicted_constant.str()},
                 {"unit", "4pi^2"},
                 {"notes", report.notes}};
  if (report.frame_constant) j["frame_constant"] = report.frame_constant->str();
  return j.dump();
}

std::string to_json(const RieszReport& report) {
  ordered_json samples = ordered_json::array();
  for (const auto& [z, r] : report.samples) samples.push_back({z.str(), r.str()});
  ordered_json j{{"kind", report.kind},
                 {"sigma", report.sigma},
                 {"holds", report.holds},
                 {"exact", report.exact},
                 {"constant_used", report.constant_used.str()},
                 {"samples", samples},
                 {"verdicts", report.verdicts},
                 {"notes", report.notes}};
  return j.dump();
}

std::string scan_to_json(const std::vector<ScanRecord>& records, const Rational& nu_max,
                         const Integer& n_max, const std::string& timestamp) {
  ordered_json root;
  root["command"] = "scan";
  if (!timestamp.empty()) root["generated_at"] = timestamp;
  root["nu_max"] = nu_max.str();
  root["n_max"] = int_json(n_max);
  ordered_json points = ordered_json::array();
  for (const ScanRecord& rec : records) {
    ordered_json gaps = ordered_json::array();
    for (const Integer& g : rec.gaps_checked) gaps.push_back(int_json(g));
    ordered_json violations = ordered_json::array();
    for (const Integer& v : rec.violations) violations.push_back(int_json(v));
    points.push_back({{"a", rec.point.a.str()},
                      {"b_sq", rec.point.b_sq.str()},
                      {"in_tau", rec.in_region},
                      {"gaps_checked", std::move(gaps)},
                      {"violations", std::move(violations)},
                      {"truncated", rec.truncated}});
  }
  root["points"] = std::move(points);
  return root.dump();
}

std::string scan_to_csv(const std::vector<ScanRecord>& records) {
  std::ostringstream out;
  out << "a,b_sq,in_tau,N,holds\n";
  for (const ScanRecord& rec : records) {
    for (const Integer& gap : rec.gaps_checked) {
      const bool violated =
          std::find(rec.violations.begin(), rec.violations.end(), gap) != rec.violations.end();
      out << rec.point.a.str() << ',' << rec.point.b_sq.str() << ','
          << (rec.in_region ? "true" : "false") << ',' << gap.get_str() << ','
          << (violated ? "false" : "true") << '\n';
    }
  }
  return out.str();
}

std::string scan_to_plot(const std::vector<ScanRecord>& records) {
  std::ostringstream out;
  out << "a,b_sq\n";
  for (const ScanRecord& rec : records) {
    if (rec.violations.empty()) continue;
    out << rec.point.a.to_double() << ',' << rec.point.b_sq.to_double() << '\n';
  }
  return out.str();
}

std::string spectrum_to_json(const Spectrum& s) {
  ordered_json levels = ordered_json::array();
  for (const Level& lvl : s.levels) {
    levels.push_back({{"value", lvl.value.str()}, {"mult", int_json(lvl.mult)}});
  }
  ordered_json j{{"unit", unit_to_string(s.unit)},
                 {"levels", std::move(levels)},
                 {"meta", s.meta}};
  return j.dump();
}

namespace {

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw ParseError("non-finite eigenvalue in spectrum data");
  mpq_class q(x);  // exact binary expansion
  return Rational(Integer(q.get_num()), Integer(q.get_den()));
}

Rational parse_level_value(const nlohmann::json& v, IngestMode mode) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) {
      return Rational(Integer(std::to_string(v.get<std::uint64_t>()), 10));
    }
    return Rational(Integer(std::to_string(v.get<std::int64_t>()), 10));
  }
  if (v.is_number_float()) {
    if (mode != IngestMode::floating) {
      throw ParseError("floating eigenvalue " + v.dump() + " in exact mode");
    }
    return rational_from_double(v.get<double>());
  }
  throw ParseError("eigenvalue must be a string or number, got " + v.dump());
}

Integer parse_level_mult(const nlohmann::json& v) {
  Integer mult;
  if (v.is_string()) {
    try {
      mult = Integer(v.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad multiplicity '" + v.get<std::string>() + "'");
    }
  } else if (v.is_number_integer()) {
    mult = Integer(std::to_string(v.is_number_unsigned()
                                      ? static_cast<std::int64_t>(v.get<std::uint64_t>())
                                      : v.get<std::int64_t>()),
                   10);
  } else {
    throw ParseError("multiplicity must be an integer or string, got " + v.dump());
  }
  if (sgn(mult) <= 0) throw ParseError("multiplicity must be positive");
  return mult;
}

}  // namespace

Spectrum load_spectrum(const std::string& json_text, IngestMode mode, const Rational& tol) {
  if (tol.sign() < 0) throw Error("merge tolerance must be nonnegative");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid spectrum JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("spectrum JSON must be an object");
  if (!j.contains("unit") || !j["unit"].is_string()) {
    throw ParseError("spectrum JSON needs a string 'unit' tag");
  }
  const Unit unit = unit_from_string(j["unit"].get<std::string>());
  if (!j.contains("levels") || !j["levels"].is_array()) {
    throw ParseError("spectrum JSON needs a 'levels' array");
  }
  if (j["levels"].empty()) throw EmptyInput("spectrum has no levels");

  std::vector<Level> raw;
  raw.reserve(j["levels"].size());
  for (const auto& entry : j["levels"]) {
    if (!entry.is_object() || !entry.contains("value") || !entry.contains("mult")) {
      throw ParseError("each level needs 'value' and 'mult' fields");
    }
    Level lvl{parse_level_value(entry["value"], mode), parse_level_mult(entry["mult"])};
    if (lvl.value.sign() < 0) {
      throw NegativeEigenvalue("eigenvalue " + lvl.value.str() + " is negative");
    }
    raw.push_back(std::move(lvl));
  }
  std::stable_sort(raw.begin(), raw.end(),
                   [](const Level& x, const Level& y) { return x.value < y.value; });

  std::vector<Level> levels;
  if (mode == IngestMode::exact) {
    for (std::size_t i = 1; i < raw.size(); ++i) {
      if (raw[i - 1].value == raw[i].value) {
        throw ParseError("duplicate level " + raw[i].value.str() +
                         " in exact mode; merge multiplicities in the source");
      }
    }
    levels = std::move(raw);
  } else {
    // Cluster values that agree within tol; the first (smallest) member of a
    // cluster is the representative.
    for (Level& lvl : raw) {
      if (!levels.empty() && lvl.value - levels.back().value <= tol) {
        levels.back().mult += lvl.mult;
      } else {
        levels.push_back(std::move(lvl));
      }
    }
  }

  std::string meta = j.value("meta", std::string());
  const bool was_approximate = meta.find("[approximate]") != std::string::npos;
  const bool approximate = (mode == IngestMode::floating) || was_approximate;
  if (mode == IngestMode::floating && !was_approximate) {
    meta += meta.empty() ? "[approximate]" : " [approximate]";
  }
  return make_spectrum(unit, std::move(levels), std::move(meta), approximate);
}

}  // namespace sumrules
