#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sumrules/errors.hpp"
#include "sumrules/frames.hpp"
#include "sumrules/rational.hpp"
#include "sumrules/report_json.hpp"
#include "sumrules/riesz.hpp"
#include "sumrules/spectrum.hpp"
#include "sumrules/sumrule.hpp"
#include "sumrules/torus.hpp"

namespace sumrules::cli {

namespace {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// parsing helpers
// ---------------------------------------------------------------------------

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

Rational parse_rat(const std::string& text, const std::string& what) {
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    throw ParseError("invalid " + what + ": '" + text + "'");
  }
}

long parse_long(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError("invalid " + what + ": '" + text + "'");
  }
}

DualVector parse_dual(const std::string& text, const std::string& what) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) {
    throw ParseError(what + " expects integer coordinates 'n,m': '" + text + "'");
  }
  return DualVector{parse_long(parts[0], what), parse_long(parts[1], what)};
}

std::vector<DualVector> parse_dual_list(const std::string& text, const std::string& what) {
  std::vector<DualVector> vecs;
  for (const std::string& part : split(text, ';')) vecs.push_back(parse_dual(part, what));
  if (vecs.empty()) throw ParseError(what + " list is empty");
  return vecs;
}

std::vector<Rational> parse_rat_list(const std::string& text, const std::string& what) {
  std::vector<Rational> vals;
  for (const std::string& part : split(text, ',')) vals.push_back(parse_rat(part, what));
  if (vals.empty()) throw ParseError(what + " list is empty");
  return vals;
}

std::vector<Integer> parse_index_list(const std::string& text, const std::string& what) {
  std::vector<Integer> vals;
  for (const std::string& part : split(text, ',')) {
    vals.push_back(to_integer(parse_rat(part, what), what));
  }
  if (vals.empty()) throw ParseError(what + " list is empty");
  return vals;
}

// "start:stop:step" inclusive of stop when the step lands on it exactly; a
// bare value denotes the one-point range.
std::vector<Rational> parse_grid_range(const std::string& text, const std::string& what) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) return {parse_rat(parts[0], what)};
  if (parts.size() != 3) {
    throw ParseError(what + " expects 'start:stop:step' or a single value: '" + text + "'");
  }
  const Rational start = parse_rat(parts[0], what + " start");
  const Rational stop = parse_rat(parts[1], what + " stop");
  const Rational step = parse_rat(parts[2], what + " step");
  if (step.sign() <= 0) throw ParseError(what + " step must be positive");
  if (stop < start) throw ParseError(what + " range is empty");
  std::vector<Rational> vals;
  for (Rational v = start; v <= stop; v += step) vals.push_back(v);
  return vals;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error("cannot open output file: " + out_path);
  f << text;
}

std::string iso_timestamp() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ordered_json int_json(const Integer& n) {
  if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

// ---------------------------------------------------------------------------
// verification sources
// ---------------------------------------------------------------------------

enum class SourceType { cross, torus, oscillator, file };

struct Source {
  SourceType type = SourceType::torus;
  CrossSpace space{CrossFamily::sphere, 2};
  TorusModuli mod{Rational(0), Rational(1)};
  Rational osc_a;
  std::optional<Spectrum> file_spectrum;
};

struct VerifyOpts {
  std::string kind;
  // source selection
  std::string cross_family;
  int dim = 0;
  std::string torus;
  std::string oscillator_a;
  std::string file;
  std::string mode = "exact";
  std::string tol = "0";
  // check parameters
  std::string lambda1;
  long nmax = -1;
  std::string n_list;
  std::string nu;
  std::string q;
  long levels = 1;
  std::string numax;
  std::string pset;
  long gap = 0;
  std::string z_list;
  std::string zmax;
  std::string volume;
  std::string a_param;
  std::string h_param = "0";
  std::string n0 = "1";
  long lmax = 50;
  // output
  std::string emit = "json";
  std::string out_path;
};

Source resolve_source(const VerifyOpts& o) {
  const int given = (o.cross_family.empty() ? 0 : 1) + (o.torus.empty() ? 0 : 1) +
                    (o.oscillator_a.empty() ? 0 : 1) + (o.file.empty() ? 0 : 1);
  if (given != 1) {
    throw UnsupportedParameter(
        "exactly one of --cross, --torus, --oscillator, --file selects the spectrum");
  }
  Source src;
  if (!o.cross_family.empty()) {
    if (o.dim <= 0) throw UnsupportedParameter("--cross needs --dim");
    src.type = SourceType::cross;
    src.space = make_cross(family_from_string(o.cross_family), o.dim);
  } else if (!o.torus.empty()) {
    src.type = SourceType::torus;
    const auto parts = split(o.torus, ',');
    if (parts.size() != 2) throw ParseError("--torus expects 'a,bsq': '" + o.torus + "'");
    src.mod = make_torus(parse_rat(parts[0], "torus a"), parse_rat(parts[1], "torus b^2"));
  } else if (!o.oscillator_a.empty()) {
    src.type = SourceType::oscillator;
    src.osc_a = parse_rat(o.oscillator_a, "oscillator a");
  } else {
    if (o.mode != "exact" && o.mode != "float") {
      throw UnsupportedParameter("--mode must be 'exact' or 'float'");
    }
    src.type = SourceType::file;
    const IngestMode mode = o.mode == "float" ? IngestMode::floating : IngestMode::exact;
    src.file_spectrum = load_spectrum(slurp(o.file), mode, parse_rat(o.tol, "tolerance"));
  }
  return src;
}

// Smallest spectrum of the source that contains at least `needed` modes. An
// explicit --numax overrides the automatic growth for torus sources.
Spectrum covering_count(const Source& src, const Integer& needed, const std::string& numax) {
  switch (src.type) {
    case SourceType::cross: {
      unsigned long l = 1;
      while (cross_counting(src.space, l) < needed) ++l;
      return cross_spectrum(src.space, l);
    }
    case SourceType::torus: {
      if (!numax.empty()) {
        return torus_spectrum(src.mod, parse_rat(numax, "nu_max")).spectrum;
      }
      Rational nu(4);
      for (;;) {
        Spectrum s = torus_spectrum(src.mod, nu).spectrum;
        if (total_count(s) >= needed) return s;
        nu = nu * Rational(2);
      }
    }
    case SourceType::oscillator: {
      unsigned long l = 4;
      for (;;) {
        Spectrum s = oscillator_spectrum(src.osc_a, l);
        if (total_count(s) >= needed) return s;
        l *= 2;
      }
    }
    case SourceType::file: {
      if (total_count(*src.file_spectrum) < needed) {
        throw InsufficientLevels("file spectrum has " + total_count(*src.file_spectrum).get_str() +
                                 " modes, but the check needs " + needed.get_str());
      }
      return *src.file_spectrum;
    }
  }
  throw Error("unreachable source type");
}

// Smallest spectrum whose top level reaches z (needed by the Riesz means).
Spectrum reaching_value(const Source& src, const Rational& z, const std::string& numax) {
  switch (src.type) {
    case SourceType::cross: {
      unsigned long l = 1;
      while (cross_eigenvalue(src.space, l) < z) ++l;
      return cross_spectrum(src.space, l);
    }
    case SourceType::torus: {
      if (!numax.empty()) {
        return torus_spectrum(src.mod, parse_rat(numax, "nu_max")).spectrum;
      }
      Rational nu = z.sign() > 0 ? z + Rational(2) : Rational(4);
      for (;;) {
        Spectrum s = torus_spectrum(src.mod, nu).spectrum;
        if (!s.levels.empty() && s.levels.back().value >= z) return s;
        nu = nu * Rational(2);
      }
    }
    case SourceType::oscillator: {
      unsigned long l = 4;
      for (;;) {
        Spectrum s = oscillator_spectrum(src.osc_a, l);
        if (s.levels.back().value >= z) return s;
        l *= 2;
      }
    }
    case SourceType::file: {
      if (src.file_spectrum->levels.back().value < z) {
        throw InsufficientLevels("file spectrum ends at " +
                                 src.file_spectrum->levels.back().value.str() +
                                 ", below the requested z");
      }
      return *src.file_spectrum;
    }
  }
  throw Error("unreachable source type");
}

int source_dim(const Source& src, const VerifyOpts& o) {
  switch (src.type) {
    case SourceType::cross:
      return src.space.dim;
    case SourceType::torus:
      return 2;
    case SourceType::oscillator:
      // The oscillator sum rule runs with coefficient a = (d+4)/d, d = 4/(a-1).
      return static_cast<int>(
          to_integer(Rational(4) / (src.osc_a - 1), "oscillator dimension").get_si());
    case SourceType::file:
      if (o.dim <= 0) throw UnsupportedParameter(o.kind + " with --file needs --dim");
      return o.dim;
  }
  throw Error("unreachable source type");
}

const TorusModuli& require_torus(const Source& src, const std::string& kind) {
  if (src.type != SourceType::torus) {
    throw UnsupportedParameter(kind + " needs a torus source (--torus a,bsq)");
  }
  return src.mod;
}

// The oscillator identity closes with shift h = 0, which the manifold form
// cannot express (its ambient Lambda_1 must be positive), so it runs through
// the generalized polynomial directly.
CheckReport oscillator_check(const Spectrum& s, const Rational& a, const Integer& n,
                             bool inequality) {
  if (sgn(n) <= 0) throw NotAGapIndex("N must be >= 1");
  if (!n.fits_ulong_p()) throw UnsupportedParameter("oscillator checks need N in machine range");
  const std::size_t nn = n.get_ui();
  const std::vector<Rational> lam = flatten(s, nn + 1);
  const Rational& lambda_n = lam[nn - 1];
  const Rational& lambda_next = lam[nn];
  if (!(lambda_n < lambda_next)) {
    throw NotAGapIndex("N=" + n.get_str() + " is not a gap index");
  }
  const std::vector<Rational> head(lam.begin(), lam.begin() + static_cast<std::ptrdiff_t>(nn));
  const QuadPoly p = generalized_p_poly(head, a, Rational(0));
  const QuadPoly q = q_poly(lambda_n, lambda_next, n);
  const QuadPoly residual = p - q;

  CheckReport r;
  r.kind = inequality ? "inequality" : "identity";
  r.residual = residual;
  r.witnesses.emplace_back(lambda_n, residual.eval(lambda_n));
  r.witnesses.emplace_back(lambda_next, residual.eval(lambda_next));
  if (inequality) {
    if (!residual.c2.is_zero()) throw Error("interval residual is not affine");
    r.holds = r.witnesses[0].second.sign() <= 0 && r.witnesses[1].second.sign() <= 0;
  } else {
    r.holds = residual.is_zero();
  }
  r.notes = "N=" + n.get_str() + " a=" + a.str() + " h=0 unit=" + unit_to_string(s.unit);
  return r;
}

// Cutoff large enough for the commutator checks: covers the first `levels`
// shells (plus the closing level for the sign bound) and every shifted vector
// p +- q with p in those shells.
Rational commutator_cutoff(const TorusModuli& mod, const DualVector& q, unsigned long levels,
                           bool extra_level) {
  const std::size_t need_levels = static_cast<std::size_t>(levels) + (extra_level ? 1 : 0);
  Rational nu(4);
  TorusSpectrum ts = torus_spectrum(mod, nu);
  while (ts.spectrum.levels.size() < need_levels) {
    nu = nu * Rational(2);
    ts = torus_spectrum(mod, nu);
  }
  Rational needed = ts.spectrum.levels[need_levels - 1].value;
  const DualVector neg_q{-q.n, -q.m};
  for (std::size_t i = 0; i < levels; ++i) {
    for (const DualVector& p : ts.shells[i]) {
      const Rational plus = norm_sq(mod, add(p, q));
      const Rational minus = norm_sq(mod, add(p, neg_q));
      if (plus > needed) needed = plus;
      if (minus > needed) needed = minus;
    }
  }
  return needed;
}

// ---------------------------------------------------------------------------
// verify subcommand
// ---------------------------------------------------------------------------

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
  static const std::set<std::string> kinds = {
      "identity", "inequality",    "condition",  "recurrence", "frame", "addition",
      "sumrule-exact", "sign-bound", "shifted", "riesz-mono", "weyl"};
  if (kinds.find(o.kind) == kinds.end()) {
    throw UnsupportedParameter("unknown check kind '" + o.kind +
                               "'; expected one of identity, inequality, condition, "
                               "recurrence, frame, addition, sumrule-exact, sign-bound, "
                               "shifted, riesz-mono, weyl");
  }
  if (o.emit != "json" && o.emit != "plot-data") {
    throw UnsupportedParameter("verify emits 'json' or 'plot-data'");
  }
  if (o.emit == "plot-data" && o.kind != "riesz-mono" && o.kind != "weyl") {
    throw UnsupportedParameter("plot-data output is only available for riesz-mono and weyl");
  }

  const Source src = resolve_source(o);
  std::optional<Rational> ambient;
  if (!o.lambda1.empty()) ambient = parse_rat(o.lambda1, "Lambda_1");

  std::vector<std::string> lines;
  bool all_hold = true;
  const auto add_report = [&](const CheckReport& r) {
    all_hold = all_hold && r.holds;
    lines.push_back(to_json(r));
  };

  if (o.kind == "identity" || o.kind == "inequality") {
    const bool want_identity = o.kind == "identity";
    std::vector<Integer> ns;
    if (!o.n_list.empty()) ns = parse_index_list(o.n_list, "gap index");
    const Integer cap = o.nmax >= 0 ? Integer(o.nmax) : Integer(12);
    const Integer needed =
        (ns.empty() ? cap : *std::max_element(ns.begin(), ns.end())) + 1;
    const Spectrum s = covering_count(src, needed, o.numax);
    if (ns.empty()) ns = gap_indices(s, cap);
    for (const Integer& n : ns) {
      if (src.type == SourceType::oscillator) {
        add_report(oscillator_check(s, src.osc_a, n, !want_identity));
      } else {
        const int d = source_dim(src, o);
        add_report(want_identity ? check_identity(s, d, n, ambient)
                                 : check_inequality(s, d, n, ambient));
      }
    }
  } else if (o.kind == "condition") {
    Rational a, h;
    if (src.type == SourceType::cross) {
      const CrossParameters p = cross_parameters(src.space);
      a = p.a;
      h = p.h;
    } else if (src.type == SourceType::oscillator) {
      a = src.osc_a;
      h = Rational(0);
    } else {
      if (o.a_param.empty()) {
        throw UnsupportedParameter("condition with this source needs --a (and optionally --h)");
      }
      a = parse_rat(o.a_param, "a");
      h = parse_rat(o.h_param, "h");
    }
    std::vector<Integer> ns;
    if (!o.n_list.empty()) ns = parse_index_list(o.n_list, "gap index");
    const Integer cap = o.nmax >= 0 ? Integer(o.nmax) : Integer(12);
    const Integer max_n = ns.empty() ? cap : *std::max_element(ns.begin(), ns.end());
    if (!max_n.fits_ulong_p() || sgn(max_n) <= 0) {
      throw UnsupportedParameter("condition checks need positive N in machine range");
    }
    const Spectrum s = covering_count(src, max_n + 1, o.numax);
    if (ns.empty()) ns = gap_indices(s, cap);
    std::vector<Rational> lam = flatten(s, static_cast<std::size_t>(max_n.get_ui()) + 1);
    if (a == Rational(1)) {
      if (!h.is_zero()) throw UnsupportedParameter("the shift h/(a-1) needs a != 1");
    } else if (!h.is_zero()) {
      const Rational shift = h / (a - Rational(1));
      for (Rational& v : lam) v += shift;
    }
    for (const Integer& n : ns) {
      const bool ok = check_gap_condition(lam, a, static_cast<std::size_t>(n.get_ui()));
      ordered_json j;
      j["kind"] = "gap-condition";
      j["n"] = int_json(n);
      j["holds"] = ok;
      j["notes"] = "a=" + a.str() + " h=" + h.str() + " unit=" + unit_to_string(s.unit);
      lines.push_back(j.dump());
      all_hold = all_hold && ok;
    }
  } else if (o.kind == "recurrence") {
    if (o.lmax < 1) throw UnsupportedParameter("--lmax must be >= 1");
    const unsigned long lmax = static_cast<unsigned long>(o.lmax);
    Rational a, h;
    std::vector<Rational> level_values;
    std::vector<Integer> reference;
    bool have_reference = false;
    if (src.type == SourceType::cross) {
      const CrossParameters p = cross_parameters(src.space);
      a = p.a;
      h = p.h;
      for (unsigned long l = 0; l <= lmax + 1; ++l) {
        level_values.push_back(cross_eigenvalue(src.space, l));
      }
      for (unsigned long l = 0; l <= lmax; ++l) {
        reference.push_back(cross_counting(src.space, l));
      }
      have_reference = true;
    } else if (src.type == SourceType::oscillator) {
      a = src.osc_a;
      h = Rational(0);
      const Spectrum s = oscillator_spectrum(a, lmax + 1);
      for (const Level& lvl : s.levels) level_values.push_back(lvl.value);
      const Integer k = to_integer(Rational(2) / (a - Rational(1)), "oscillator k");
      for (unsigned long l = 0; l <= lmax; ++l) {
        reference.push_back(binomial(l + k.get_ui(), k.get_ui()));
      }
      have_reference = true;
    } else {
      if (o.a_param.empty()) {
        throw UnsupportedParameter("recurrence with this source needs --a (and optionally --h)");
      }
      a = parse_rat(o.a_param, "a");
      h = parse_rat(o.h_param, "h");
      Spectrum s{Unit::absolute, {}, "", false};
      if (src.type == SourceType::torus) {
        Rational nu(4);
        for (;;) {
          s = torus_spectrum(src.mod, nu).spectrum;
          if (s.levels.size() >= lmax + 2) break;
          nu = nu * Rational(2);
        }
      } else {
        s = *src.file_spectrum;
        if (s.levels.size() < 2) throw InsufficientLevels("recurrence needs at least two levels");
      }
      const std::size_t take = std::min<std::size_t>(s.levels.size(), lmax + 2);
      for (std::size_t i = 0; i < take; ++i) level_values.push_back(s.levels[i].value);
    }
    const Rational n0 = parse_rat(o.n0, "seed count");
    ordered_json j;
    j["kind"] = "recurrence";
    j["a"] = a.str();
    j["h"] = h.str();
    try {
      const RecurrenceResult rr = recurrence_counts(level_values, a, h, n0);
      bool matches = true;
      if (have_reference) {
        matches = rr.counts.size() >= reference.size();
        for (std::size_t i = 0; matches && i < reference.size(); ++i) {
          matches = rr.counts[i].is_integer() &&
                    to_integer(rr.counts[i], "recurrence count") == reference[i];
        }
      }
      const bool ok = rr.all_integer && matches;
      ordered_json counts = ordered_json::array();
      for (const Rational& c : rr.counts) counts.push_back(c.str());
      j["counts"] = std::move(counts);
      j["all_integer"] = rr.all_integer;
      j["matches_closed_form"] = have_reference ? ordered_json(matches) : ordered_json(nullptr);
      j["holds"] = ok;
      j["notes"] = "n0=" + n0.str();
      all_hold = all_hold && ok;
    } catch (const GrowthConditionViolated& e) {
      j["counts"] = ordered_json::array();
      j["all_integer"] = false;
      j["matches_closed_form"] = nullptr;
      j["holds"] = false;
      j["notes"] = e.what();
      all_hold = false;
    }
    lines.push_back(j.dump());
  } else if (o.kind == "frame" || o.kind == "addition") {
    const TorusModuli& mod = require_torus(src, o.kind);
    if (o.nu.empty()) throw UnsupportedParameter(o.kind + " needs --nu");
    const Rational nu = parse_rat(o.nu, "nu");
    if (o.kind == "frame") {
      const FrameReport fr = frame_check(mod, nu);
      lines.push_back(to_json(fr));
      all_hold = all_hold && fr.tight;
    } else {
      const bool ok = addition_formula_check(mod, nu);
      ordered_json j;
      j["kind"] = "addition-formula";
      j["nu"] = nu.str();
      j["holds"] = ok;
      j["notes"] = "s_xx + s_yy == mult * nu in 4pi^2 units";
      lines.push_back(j.dump());
      all_hold = all_hold && ok;
    }
  } else if (o.kind == "sumrule-exact" || o.kind == "sign-bound") {
    const TorusModuli& mod = require_torus(src, o.kind);
    if (o.q.empty()) throw UnsupportedParameter(o.kind + " needs --q n,m");
    if (o.levels < 1) throw UnsupportedParameter("--levels must be >= 1");
    const DualVector q = parse_dual(o.q, "--q");
    const unsigned long levels = static_cast<unsigned long>(o.levels);
    const bool sign_bound = o.kind == "sign-bound";
    const Rational numax = o.numax.empty()
                               ? commutator_cutoff(mod, q, levels, sign_bound)
                               : parse_rat(o.numax, "nu_max");
    std::vector<Rational> zs;
    if (!o.z_list.empty()) zs = parse_rat_list(o.z_list, "z");
    add_report(sign_bound ? sign_bound_check(mod, q, levels, numax, zs)
                          : verify_sum_rule_identity(mod, q, levels, numax));
  } else if (o.kind == "shifted") {
    const TorusModuli& mod = require_torus(src, o.kind);
    if (o.pset.empty()) throw UnsupportedParameter("shifted needs --pset 'n,m;n,m;...'");
    if (o.gap < 1) throw UnsupportedParameter("shifted needs --gap N with N >= 1");
    const std::vector<DualVector> ps = parse_dual_list(o.pset, "--pset");
    std::vector<Rational> zs;
    if (!o.z_list.empty()) zs = parse_rat_list(o.z_list, "z");
    add_report(shifted_sumrule_check(mod, ps, Integer(o.gap), zs));
  } else {  // riesz-mono, weyl
    if (src.type == SourceType::oscillator) {
      throw UnsupportedParameter(o.kind + " needs a cross, torus, or file source");
    }
    const int d = source_dim(src, o);
    std::vector<Rational> zs;
    Spectrum s{Unit::absolute, {}, "", false};
    if (!o.z_list.empty()) {
      zs = parse_rat_list(o.z_list, "z");
      s = reaching_value(src, *std::max_element(zs.begin(), zs.end()), o.numax);
    } else {
      if (o.zmax.empty()) throw UnsupportedParameter(o.kind + " needs --zmax or --z");
      const Rational z_top = parse_rat(o.zmax, "z_max");
      s = reaching_value(src, z_top, o.numax);
      zs = default_z_grid(s, z_top);
    }
    RieszReport rr;
    PiScaled volume{Rational(1), 0};
    if (o.kind == "weyl") {
      if (o.volume.empty()) {
        throw UnsupportedParameter("weyl needs --volume (e.g. '1' or '4*pi')");
      }
      volume = PiScaled::parse(o.volume);
      rr = weyl_bound_check(s, d, ambient, volume, zs);
    } else {
      rr = r2_monotonicity_check(s, d, ambient, zs);
    }
    all_hold = all_hold && rr.holds;
    if (o.emit == "plot-data") {
      const Rational l1 = [&] {
        if (ambient) return *ambient;
        for (const Level& lvl : s.levels) {
          if (lvl.value.sign() > 0) return lvl.value;
        }
        throw Error("spectrum has no positive level");
      }();
      const Rational shift = Rational(d) * l1 / 4;
      const double pi = 3.14159265358979323846;
      double factor = 0.0;
      if (o.kind == "weyl") {
        const PiScaled c = weyl_constant(d);
        factor = c.coeff.to_double() * std::pow(pi, c.power) * volume.coeff.to_double() *
                 std::pow(pi, volume.power);
        if (s.unit == Unit::four_pi_squared) factor *= std::pow(2 * pi, d);
      }
      std::ostringstream plot;
      plot << "z,ratio\n" << std::setprecision(12);
      for (std::size_t i = 0; i < rr.samples.size(); ++i) {
        const Rational& z = rr.samples[i].first;
        const Rational& r2 = rr.samples[i].second;
        double ratio = 0.0;
        if (o.kind == "weyl") {
          const double bound =
              factor * std::pow((z + shift).to_double(), (4.0 + d) / 2.0);
          if (bound > 0) ratio = r2.to_double() / bound;
        } else {
          const Rational r1 = riesz_mean(s, 1, z);
          const Rational denom = Rational(2) * r1 * (z + shift);
          if (denom.sign() > 0) {
            ratio = (Rational(Integer(4 + d), Integer(2)) * r2 / denom).to_double();
          }
        }
        plot << z.to_double() << ',' << ratio << '\n';
      }
      lines.clear();
      lines.push_back(plot.str());
      std::string text;
      for (const std::string& l : lines) text += l;
      write_output(text, o.out_path, out);
      return all_hold ? 0 : 1;
    }
    lines.push_back(to_json(rr));
  }

  std::string text;
  for (const std::string& l : lines) {
    text += l;
    text += '\n';
  }
  write_output(text, o.out_path, out);
  return all_hold ? 0 : 1;
}

// ---------------------------------------------------------------------------
// scan subcommand
// ---------------------------------------------------------------------------

struct ScanOpts {
  std::string a_range;
  std::string bsq_range;
  bool arc = false;
  std::string numax = "12";
  long nmax = 6;
  std::string emit = "json";
  bool no_timestamp = false;
  std::string out_path;
};

int cmd_scan(const ScanOpts& o, std::ostream& out) {
  if (o.a_range.empty()) throw UnsupportedParameter("scan needs --a start:stop:step");
  const std::vector<Rational> as = parse_grid_range(o.a_range, "--a");
  std::vector<ScanPoint> grid;
  if (o.arc) {
    if (!o.bsq_range.empty()) {
      throw UnsupportedParameter("--arc derives b^2 = 1 - a^2; drop --bsq");
    }
    for (const Rational& a : as) grid.push_back(ScanPoint{a, Rational(1) - a * a});
  } else {
    if (o.bsq_range.empty()) throw UnsupportedParameter("scan needs --bsq or --arc");
    const std::vector<Rational> bs = parse_grid_range(o.bsq_range, "--bsq");
    for (const Rational& a : as) {
      for (const Rational& b : bs) grid.push_back(ScanPoint{a, b});
    }
  }
  if (grid.empty()) throw EmptyInput("scan grid is empty");
  if (o.nmax < 1) throw UnsupportedParameter("--nmax must be >= 1");
  const Rational numax = parse_rat(o.numax, "nu_max");

  const std::vector<ScanRecord> records = scan_moduli(grid, numax, Integer(o.nmax));
  std::string text;
  if (o.emit == "json") {
    text = scan_to_json(records, numax, Integer(o.nmax),
                        o.no_timestamp ? std::string() : iso_timestamp());
    text += '\n';
  } else if (o.emit == "csv") {
    text = scan_to_csv(records);
  } else if (o.emit == "plot-data") {
    text = scan_to_plot(records);
  } else {
    throw UnsupportedParameter("scan emits 'json', 'csv', or 'plot-data'");
  }
  write_output(text, o.out_path, out);
  return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// argument wiring
// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact verification toolkit for spectral sum rules", "sumrules"};
  app.require_subcommand(1);

  // --- spectrum ---
  auto* sp = app.add_subcommand("spectrum", "emit a spectrum as JSON");
  sp->require_subcommand(1);

  struct {
    std::string family;
    int dim = 0;
    long lmax = 8;
    std::string out_path;
  } sx;
  auto* sp_cross = sp->add_subcommand("cross", "compact rank one symmetric space");
  sp_cross->add_option("family", sx.family,
                       "sphere | real-projective | complex-projective | "
                       "quaternionic-projective | cayley")
      ->required();
  sp_cross->add_option("--dim", sx.dim, "real dimension")->required();
  sp_cross->add_option("--lmax", sx.lmax, "highest level (default 8)");
  sp_cross->add_option("--out", sx.out_path, "write to file instead of stdout");

  struct {
    std::string a, bsq, numax;
    std::string out_path;
  } st;
  auto* sp_torus = sp->add_subcommand("torus", "flat torus in 4pi^2 units");
  sp_torus->add_option("--a", st.a, "modulus a (rational, 0 <= a <= 1/2)")->required();
  sp_torus->add_option("--bsq", st.bsq, "modulus b^2 (rational, positive)")->required();
  sp_torus->add_option("--numax", st.numax, "enumerate squared norms up to this cutoff")
      ->required();
  sp_torus->add_option("--out", st.out_path, "write to file instead of stdout");

  struct {
    std::string a;
    long lmax = 8;
    std::string out_path;
  } so;
  auto* sp_osc = sp->add_subcommand("oscillator", "isotropic oscillator with closing sum rule");
  sp_osc->add_option("--a", so.a, "sum-rule coefficient a > 1 with 2/(a-1) integer")->required();
  sp_osc->add_option("--lmax", so.lmax, "highest level (default 8)");
  sp_osc->add_option("--out", so.out_path, "write to file instead of stdout");

  // --- verify ---
  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "run one check kind, JSONL reports");
  verify->add_option("kind", vo.kind,
                     "identity | inequality | condition | recurrence | frame | addition | "
                     "sumrule-exact | sign-bound | shifted | riesz-mono | weyl")
      ->required();
  verify->add_option("--cross", vo.cross_family, "cross space family source");
  verify->add_option("--dim", vo.dim, "dimension (cross source, or --file with riesz checks)");
  verify->add_option("--torus", vo.torus, "torus source 'a,bsq'");
  verify->add_option("--oscillator", vo.oscillator_a, "oscillator source, coefficient a");
  verify->add_option("--file", vo.file, "spectrum JSON file source");
  verify->add_option("--mode", vo.mode, "file ingestion: exact (default) or float");
  verify->add_option("--tol", vo.tol, "float-mode merge tolerance (rational, default 0)");
  verify->add_option("--lambda1", vo.lambda1, "ambient first positive eigenvalue override");
  verify->add_option("--nmax", vo.nmax, "check every gap index N <= nmax (default 12)");
  verify->add_option("--n", vo.n_list, "explicit comma-separated gap indices");
  verify->add_option("--nu", vo.nu, "eigenvalue selecting a shell (frame, addition)");
  verify->add_option("--q", vo.q, "dual lattice direction 'n,m' (sumrule-exact, sign-bound)");
  verify->add_option("--levels", vo.levels, "number of shells in the mode set J (default 1)");
  verify->add_option("--numax", vo.numax, "explicit enumeration cutoff (torus sources)");
  verify->add_option("--pset", vo.pset, "directions 'n,m;n,m;...' (shifted)");
  verify->add_option("--gap", vo.gap, "gap index N (shifted)");
  verify->add_option("--z", vo.z_list, "explicit comma-separated z samples");
  verify->add_option("--zmax", vo.zmax, "sample the default z grid up to this value");
  verify->add_option("--volume", vo.volume, "domain volume, rational times a pi power (weyl)");
  verify->add_option("--a", vo.a_param, "coefficient a (condition/recurrence on raw data)");
  verify->add_option("--shift", vo.h_param,
                     "shift h (condition/recurrence on raw data, default 0)");
  verify->add_option("--n0", vo.n0, "recurrence seed count (default 1)");
  verify->add_option("--lmax", vo.lmax, "recurrence level range (default 50)");
  verify->add_option("--emit", vo.emit, "json (default) or plot-data (riesz kinds)");
  verify->add_option("--out", vo.out_path, "write to file instead of stdout");

  // --- scan ---
  ScanOpts sc;
  auto* scan = app.add_subcommand("scan", "sum-rule inequality over a moduli grid");
  scan->add_option("--a", sc.a_range, "range 'start:stop:step' or single value")->required();
  scan->add_option("--bsq", sc.bsq_range, "range 'start:stop:step' or single value");
  scan->add_flag("--arc", sc.arc, "walk the boundary arc b^2 = 1 - a^2");
  scan->add_option("--numax", sc.numax, "enumeration cutoff per point (default 12)");
  scan->add_option("--nmax", sc.nmax, "check gap indices N <= nmax (default 6)");
  scan->add_option("--emit", sc.emit, "json (default), csv, or plot-data");
  scan->add_flag("--no-timestamp", sc.no_timestamp, "omit generated_at for byte-stable output");
  scan->add_option("--out", sc.out_path, "write to file instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("sumrules");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sp_cross->parsed()) {
      if (sx.lmax < 0) throw UnsupportedParameter("--lmax must be >= 0");
      const CrossSpace space = make_cross(family_from_string(sx.family), sx.dim);
      const Spectrum s = cross_spectrum(space, static_cast<unsigned long>(sx.lmax));
      write_output(spectrum_to_json(s) + "\n", sx.out_path, out);
      return 0;
    }
    if (sp_torus->parsed()) {
      const TorusModuli mod =
          make_torus(parse_rat(st.a, "torus a"), parse_rat(st.bsq, "torus b^2"));
      const Spectrum s = torus_spectrum(mod, parse_rat(st.numax, "nu_max")).spectrum;
      write_output(spectrum_to_json(s) + "\n", st.out_path, out);
      return 0;
    }
    if (sp_osc->parsed()) {
      if (so.lmax < 0) throw UnsupportedParameter("--lmax must be >= 0");
      const Spectrum s = oscillator_spectrum(parse_rat(so.a, "oscillator a"),
                                             static_cast<unsigned long>(so.lmax));
      write_output(spectrum_to_json(s) + "\n", so.out_path, out);
      return 0;
    }
    if (verify->parsed()) return cmd_verify(vo, out);
    if (scan->parsed()) return cmd_scan(sc, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no command selected\n";
  return 2;
}

}  // namespace sumrules::cli
