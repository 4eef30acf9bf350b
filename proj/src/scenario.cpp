#include "emberry/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "emberry/berry.hpp"
#include "emberry/bulk_modes.hpp"
#include "emberry/constants.hpp"
#include "emberry/em_core.hpp"
#include "emberry/emitter.hpp"
#include "emberry/errors.hpp"
#include "emberry/media.hpp"
#include "emberry/spp.hpp"

namespace emberry {

namespace {

using nlohmann::json;

std::string library_version_string = "emberry 0.1.0";

// 17 significant digits, deterministic across runs
std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

struct Errors {
  std::vector<std::string> items;
  void add(const std::string& s) { items.push_back(s); }
  void raise_if_any() const {
    if (items.empty()) return;
    std::string msg = "config error:";
    for (const auto& s : items) msg += "\n  - " + s;
    throw ConfigError(msg);
  }
};

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& where, Errors& errs) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      errs.add(where + ": unknown field \"" + it.key() + "\"");
}

double get_num(const json& obj, const std::string& key, Errors& errs,
               double fallback = 0.0) {
  if (!obj.contains(key)) {
    errs.add("missing required field \"" + key + "\"");
    return fallback;
  }
  if (!obj[key].is_number()) {
    errs.add("field \"" + key + "\" must be a number");
    return fallback;
  }
  return obj[key].get<double>();
}

struct MaterialSpec {
  MaterialModel model;
  PlasmaParams plasma;     // valid when kind is plasma/nonlocal
  bool has_plasma = false;
  std::string type;
};

MaterialSpec parse_material(const json& j, Errors& errs) {
  MaterialSpec out;
  if (!j.is_object()) {
    errs.add("\"material\" must be an object");
    return out;
  }
  check_keys(j, {"type", "omega_p_thz", "omega_c_thz", "b_tesla", "k_max_over_c", "eps_s"},
             "material", errs);
  const std::string type = j.value("type", "");
  out.type = type;
  if (type == "vacuum") {
    out.model = Vacuum{};
    return out;
  }
  if (type == "dielectric") {
    const double eps_s = get_num(j, "eps_s", errs, 1.0);
    out.model = Dielectric{eps_s};
    return out;
  }
  if (type == "plasma" || type == "nonlocal_plasma") {
    PlasmaParams p;
    p.omega_p = thz_to_rad(get_num(j, "omega_p_thz", errs));
    if (p.omega_p <= 0.0) errs.add("material: omega_p_thz must be > 0");
    if (j.contains("omega_c_thz") && j.contains("b_tesla"))
      errs.add("material: give omega_c_thz or b_tesla, not both");
    if (j.contains("b_tesla"))
      p.omega_c = cyclotron_from_bias(j["b_tesla"].get<double>());
    else if (j.contains("omega_c_thz"))
      p.omega_c = thz_to_rad(j["omega_c_thz"].get<double>());
    out.plasma = p;
    out.has_plasma = true;
    if (type == "plasma") {
      out.model = p;
    } else {
      // k_max in units of |omega_c|/c (value 100 reproduces the reference setup)
      const double mult = j.value("k_max_over_c", 100.0);
      if (mult <= 0.0) errs.add("material: k_max_over_c must be > 0");
      if (p.omega_c == 0.0) errs.add("material: nonlocal_plasma needs omega_c != 0");
      out.model = NonlocalParams{p, mult * std::abs(p.omega_c) / c0};
    }
    return out;
  }
  errs.add("material: unknown type \"" + type + "\"");
  return out;
}

class CsvWriter {
 public:
  explicit CsvWriter(const std::filesystem::path& path) : out_(path) {
    if (!out_) throw Error("cannot open output file " + path.string());
  }
  void header(const std::vector<std::string>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i)
      out_ << (i ? "," : "") << cols[i];
    out_ << "\n";
  }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      out_ << (i ? "," : "") << cells[i];
    out_ << "\n";
  }

 private:
  std::ofstream out_;
};

json grid_meta;  // filled by command handlers for the metadata file

// ---- command handlers ------------------------------------------------------

void run_bands(const json& cfg, const MaterialSpec& mat,
               const std::filesystem::path& out) {
  const double wp = mat.plasma.omega_p;
  const double k_lo = cfg.value("k_min_norm", 0.0) * wp / c0;
  const double k_hi = cfg["k_max_norm"].get<double>() * wp / c0;
  const int n = cfg["n_k"].get<int>();
  std::vector<std::string> pols = {"TM", "TE"};
  if (cfg.contains("polarizations"))
    pols = cfg["polarizations"].get<std::vector<std::string>>();

  CsvWriter csv(out);
  csv.header({"k_norm", "f_thz", "band", "polarization"});
  for (const std::string& pol : pols) {
    if (pol == "TM") {
      for (TmBand band : {TmBand::Lower, TmBand::Upper}) {
        for (int i = 0; i < n; ++i) {
          const double k = k_lo + (k_hi - k_lo) * i / double(n - 1);
          const auto s = solve_bulk_band(mat.model, k, band, Polarization::TM);
          csv.row({fmt(k * c0 / wp), fmt(rad_to_thz(s.omega)),
                   band == TmBand::Lower ? "lower" : "upper", "TM"});
        }
      }
    } else {
      for (int i = 0; i < n; ++i) {
        const double k = k_lo + (k_hi - k_lo) * i / double(n - 1);
        const auto s = solve_bulk_band(mat.model, k, TmBand::Lower, Polarization::TE);
        csv.row({fmt(k * c0 / wp), fmt(rad_to_thz(s.omega)), "te", "TE"});
      }
    }
  }
  grid_meta = {{"n_k", n}, {"k_min_norm", k_lo * c0 / wp}, {"k_max_norm", k_hi * c0 / wp}};
}

void run_berry_field(const json& cfg, const MaterialSpec& mat,
                     const std::filesystem::path& out) {
  const double wp = mat.plasma.omega_p;
  const double k_max = cfg["k_max_norm"].get<double>() * wp / c0;
  const int n = cfg["n"].get<int>();
  const std::string band_name = cfg.value("band", "upper");
  BandRef band{Polarization::TM, band_name == "lower" ? TmBand::Lower : TmBand::Upper};
  const bool local = mat.type == "plasma";

  KGrid grid{k_max, n};
  std::vector<Vec6c> ws(std::size_t(n) * n);
  const double nudge = 1e-6 * k_max;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec2 k = grid.point(i, j);
      if (k.norm() < nudge) k = Vec2(nudge, 0.0);
      ws[std::size_t(i) * n + j] = normalized_band_vector(mat.model, band, k);
    }

  const double step = 2.0 * k_max / (n - 1);
  CsvWriter csv(out);
  csv.header({"kx_norm", "ky_norm", "A_x", "A_y", "F_z"});
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) {
      const Vec2 kc = 0.5 * (grid.point(i, j) + grid.point(i + 1, j + 1));
      Vec2 a;
      if (local) {
        const double w = solve_bulk_band(mat.model, kc.norm(), band.tm, band.pol).omega;
        a = connection_tm_analytic(mat.plasma, kc, w);
      } else {
        a = connection_numeric(mat.model, band, kc, step / 16.0);
      }
      double fz;
      try {
        fz = plaquette_phase(ws[std::size_t(i) * n + j],
                             ws[std::size_t(i + 1) * n + j],
                             ws[std::size_t(i + 1) * n + j + 1],
                             ws[std::size_t(i) * n + j + 1]) /
             (step * step);
      } catch (const DegeneratePoint&) {
        fz = std::numeric_limits<double>::quiet_NaN();  // band-degeneracy cell
      }
      csv.row({fmt(kc(0) * c0 / wp), fmt(kc(1) * c0 / wp), fmt(a(0)), fmt(a(1)), fmt(fz)});
    }
  grid_meta = {{"n", n}, {"k_max_norm", k_max * c0 / wp}, {"band", band_name}};
}

void run_chern(const json& cfg, const MaterialSpec& mat,
               const std::filesystem::path& out, int threads) {
  const int nr = cfg.value("n_radial", 256);
  const int na = cfg.value("n_angular", 256);
  std::vector<std::string> bands = {"upper", "lower"};
  if (cfg.contains("bands")) bands = cfg["bands"].get<std::vector<std::string>>();

  const auto& np = std::get<NonlocalParams>(mat.model);
  json results = json::array();
  for (const std::string& name : bands) {
    const ChernResult r =
        chern_number(np, name == "lower" ? TmBand::Lower : TmBand::Upper, nr, na, threads);
    results.push_back({{"band", r.band},
                       {"value", r.value},
                       {"nearest_integer", r.nearest_integer},
                       {"deviation", r.deviation},
                       {"grid",
                        {{"k_outer", r.grid.k_outer},
                         {"n_radial", r.grid.n_radial},
                         {"n_angular", r.grid.n_angular}}}});
  }
  std::ofstream f(out);
  f << json{{"results", results}}.dump(2) << "\n";
  grid_meta = {{"n_radial", nr}, {"n_angular", na}};
}

void run_spp(const json& cfg, const MaterialSpec& mat,
             const std::filesystem::path& out) {
  const double wp = mat.plasma.omega_p;
  const double eps_s = cfg["eps_s"].get<double>();
  const double f_lo = cfg["f_min_thz"].get<double>();
  const double f_hi = cfg["f_max_thz"].get<double>();
  const int n = cfg["n_omega"].get<int>();

  const auto pts = spp_band(thz_to_rad(f_lo), thz_to_rad(f_hi), n, eps_s, mat.plasma);
  CsvWriter csv(out);
  csv.header({"f_thz", "k_spp_norm", "alpha_s_norm", "alpha_p_norm", "v_g_over_c", "in_gap"});
  for (const auto& pt : pts) {
    if (!pt.has_solution) continue;
    csv.row({fmt(rad_to_thz(pt.omega)), fmt(pt.k_spp * c0 / wp),
             fmt(pt.alpha_s * c0 / wp), fmt(pt.alpha_p * c0 / wp),
             fmt(pt.group_velocity / c0), pt.in_gap ? "1" : "0"});
  }
  grid_meta = {{"n_omega", n}, {"eps_s", eps_s}};
}

void run_confinement(const json& cfg, const MaterialSpec& mat,
                     const std::filesystem::path& out) {
  const double wp = mat.plasma.omega_p;
  const double w_lo = cfg["omega_min_over_omega_p"].get<double>() * wp;
  const double w_hi = cfg["omega_max_over_omega_p"].get<double>() * wp;
  const int n_w = cfg["n_omega"].get<int>();
  const double wc_lo = cfg["omega_c_min_over_omega_p"].get<double>() * wp;
  const double wc_hi = cfg["omega_c_max_over_omega_p"].get<double>() * wp;
  const int n_wc = cfg["n_omega_c"].get<int>();

  CsvWriter csv(out);
  csv.header({"omega_over_omega_p", "omega_c_over_omega_p", "alpha_p_norm"});
  for (int j = 0; j < n_wc; ++j) {
    const double wc = n_wc == 1 ? wc_lo : wc_lo + (wc_hi - wc_lo) * j / double(n_wc - 1);
    PlasmaParams p{wp, wc};
    for (int i = 0; i < n_w; ++i) {
      const double w = w_lo + (w_hi - w_lo) * i / double(n_w - 1);
      double alpha_norm = 0.0;
      try {
        alpha_norm = pec_limit_spp(w, p).alpha_p * c0 / wp;
      } catch (const BelowPlasmaFrequency&) {
        continue;  // no confined mode below the eps11 = 0 edge
      }
      csv.row({fmt(w / wp), fmt(wc / wp), fmt(alpha_norm)});
    }
  }
  grid_meta = {{"n_omega", n_w}, {"n_omega_c", n_wc}};
}

void run_qcheck(const json& cfg, const MaterialSpec& mat,
                const std::filesystem::path& out) {
  const double omega = thz_to_rad(cfg["f_thz"].get<double>());
  const double kr = cfg.value("kr", 2.3);
  std::vector<double> angles_deg = {1.0, 2.0, 3.0, 4.0};
  if (cfg.contains("delta_phi_deg"))
    angles_deg = cfg["delta_phi_deg"].get<std::vector<double>>();

  const double eff = tm_effective_eps(mat.plasma, omega);
  if (eff <= 0.0) throw EvanescentBranch("qcheck: eps_eff <= 0, no bulk propagation");
  const double k = std::sqrt(eff) * omega / c0;
  const double r = kr / k;

  CsvWriter csv(out);
  csv.header({"delta_phi_deg", "omega_t_peak", "a_phi_k_delta_phi", "q_max"});
  for (double deg : angles_deg) {
    const double dphi = deg * pi / 180.0;
    const double peak = q_peak_omega_t(mat.plasma, omega, dphi, r);
    const Vec2 a = connection_tm_analytic(mat.plasma, Vec2(k, 0.0), omega);
    const double akd = a(1) * k * dphi;  // azimuthal component at phi = 0
    const double qmax = q_similarity(mat.plasma, omega, dphi, peak / omega, r);
    csv.row({fmt(deg), fmt(peak), fmt(akd), fmt(qmax)});
  }
  grid_meta = {{"kr", kr}, {"f_thz", rad_to_thz(omega)}};
}

void run_emitter(const json& cfg, const std::filesystem::path& out) {
  const double f_thz = cfg.value("f_carrier_thz", 1.0);
  const double omega = thz_to_rad(f_thz);
  const double ratio = cfg.value("omega_over_big_omega", 16.0);
  const double big_omega = omega / ratio;
  const double dphi0 = cfg["dphi0"].get<double>();
  const double periods = cfg.value("periods", 32.0);
  const double n_phase = cfg.value("phase_winding", 1.0);  // g(phi) = n phi

  FarFieldModel model;
  model.g_phi = [n_phase](double phi) { return n_phase * phi; };
  model.dg_dphi = [n_phase](double) { return n_phase; };

  const auto trace = synthesize_vibration_trace(model, 1.0, omega, big_omega, dphi0,
                                                periods * 2.0 * pi / big_omega);
  const auto spec = vibration_spectrum(trace);
  CsvWriter csv(out);
  csv.header({"f_offset_over_Omega", "amplitude_rel_carrier_db"});
  for (std::size_t b = 1; b < spec.amplitude.size(); ++b) {
    const double offset = (double(b) - spec.carrier_bin) * spec.df / big_omega;
    const double rel = spec.amplitude[b] / spec.carrier_amplitude;
    const double db = rel > 0.0 ? 20.0 * std::log10(rel) : -400.0;
    csv.row({fmt(offset), fmt(db)});
  }
  grid_meta = {{"omega_over_big_omega", ratio}, {"periods", periods}};
}

void run_symmetry(const json& cfg, const MaterialSpec& mat,
                  const std::filesystem::path& out, unsigned seed) {
  const double omega = thz_to_rad(cfg["f_thz"].get<double>());
  const int n_samples = cfg.value("n_k_samples", 16);

  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Vec3> ks;
  for (int i = 0; i < n_samples; ++i) {
    Vec3 k(gauss(rng), gauss(rng), gauss(rng));
    ks.push_back(k.normalized() * omega / c0);
  }
  const SymmetryReport rep = classify_symmetry(mat.model, omega, ks);
  std::ofstream f(out);
  f << json{{"lossless", rep.lossless},
            {"tr_invariant", rep.tr_invariant},
            {"inversion_invariant", rep.inversion_invariant},
            {"reciprocal", rep.reciprocal},
            {"residuals",
             {{"lossless", rep.lossless_residual},
              {"tr", rep.tr_residual},
              {"inversion", rep.inversion_residual},
              {"reciprocity", rep.reciprocity_residual}}}}
           .dump(2)
    << "\n";
  grid_meta = {{"n_k_samples", n_samples}, {"f_thz", rad_to_thz(omega)}};
}

void run_geophase(const json& cfg, const std::filesystem::path& out) {
  std::vector<Vec3> path;
  for (const auto& v : cfg["path"]) {
    if (!v.is_array() || v.size() != 3) throw ConfigError("geophase: path entries must be [x,y,z]");
    path.emplace_back(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
  }
  const double solid = geodesic_polygon_solid_angle(path);
  std::ofstream f(out);
  f << json{{"solid_angle", solid},
            {"phase_plus", spherical_path_phase(path, +1)},
            {"phase_minus", spherical_path_phase(path, -1)}}
           .dump(2)
    << "\n";
  grid_meta = {{"n_vertices", path.size()}};
}

// ---- validation ------------------------------------------------------------

const std::set<std::string> known_commands = {
    "bands", "berry-field", "chern", "spp", "confinement",
    "qcheck", "emitter", "symmetry", "geophase"};

void validate_command_fields(const json& j, const std::string& cmd, Errors& errs) {
  static const std::map<std::string, std::set<std::string>> allowed = {
      {"bands", {"command", "material", "output", "k_min_norm", "k_max_norm", "n_k", "polarizations"}},
      {"berry-field", {"command", "material", "output", "band", "k_max_norm", "n"}},
      {"chern", {"command", "material", "output", "n_radial", "n_angular", "bands"}},
      {"spp", {"command", "material", "output", "eps_s", "f_min_thz", "f_max_thz", "n_omega"}},
      {"confinement",
       {"command", "material", "output", "omega_min_over_omega_p", "omega_max_over_omega_p",
        "n_omega", "omega_c_min_over_omega_p", "omega_c_max_over_omega_p", "n_omega_c"}},
      {"qcheck", {"command", "material", "output", "f_thz", "delta_phi_deg", "kr"}},
      {"emitter",
       {"command", "output", "f_carrier_thz", "omega_over_big_omega", "dphi0", "periods",
        "phase_winding"}},
      {"symmetry", {"command", "material", "output", "f_thz", "n_k_samples"}},
      {"geophase", {"command", "output", "path"}},
  };
  auto it = allowed.find(cmd);
  if (it != allowed.end()) check_keys(j, it->second, "scenario", errs);
}

void validate_physics(const json& j, const std::string& cmd, const MaterialSpec& mat,
                      Errors& errs) {
  const bool needs_plasma = cmd == "bands" || cmd == "berry-field" || cmd == "chern" ||
                            cmd == "spp" || cmd == "confinement" || cmd == "qcheck";
  if (needs_plasma && !mat.has_plasma)
    errs.add(cmd + ": material must be plasma or nonlocal_plasma");
  if (cmd == "chern" && mat.type != "nonlocal_plasma")
    errs.add("chern: requires a nonlocal_plasma material (integer invariants need the spatial cutoff)");

  auto check_resonance = [&](double f_thz) {
    const double w = thz_to_rad(f_thz);
    if (mat.has_plasma && std::abs(w - std::abs(mat.plasma.omega_c)) <= 1e-9 * w)
      errs.add("resonance singularity: omega equals |omega_c|");
  };
  if (cmd == "qcheck" && j.contains("f_thz") && j["f_thz"].is_number())
    check_resonance(j["f_thz"].get<double>());
  if (cmd == "symmetry" && j.contains("f_thz") && j["f_thz"].is_number())
    check_resonance(j["f_thz"].get<double>());

  auto check_min_int = [&](const char* key, int minimum) {
    if (j.contains(key) && j[key].is_number_integer() && j[key].get<int>() < minimum)
      errs.add(std::string(key) + " must be >= " + std::to_string(minimum));
  };
  check_min_int("n_k", 2);
  check_min_int("n", 4);
  check_min_int("n_radial", 16);
  check_min_int("n_angular", 16);
  check_min_int("n_omega", 2);
  check_min_int("n_omega_c", 1);
  check_min_int("n_k_samples", 1);
  if (cmd == "emitter" && j.contains("dphi0") && j["dphi0"].is_number() &&
      !(j["dphi0"].get<double>() > 0.0 && j["dphi0"].get<double>() <= 0.1))
    errs.add("emitter: dphi0 must be in (0, 0.1]");
}

json parse_and_validate(const std::string& text, MaterialSpec* mat_out) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config error: invalid JSON: ") + e.what());
  }
  Errors errs;
  if (!j.is_object()) {
    errs.add("top level must be a JSON object");
    errs.raise_if_any();
  }
  const std::string cmd = j.value("command", "");
  if (!known_commands.count(cmd)) errs.add("unknown command \"" + cmd + "\"");
  if (!j.contains("output") || !j["output"].is_string())
    errs.add("missing required field \"output\"");
  if (!errs.items.empty()) errs.raise_if_any();

  validate_command_fields(j, cmd, errs);

  MaterialSpec mat;
  const bool uses_material = cmd != "emitter" && cmd != "geophase";
  if (uses_material) {
    if (!j.contains("material"))
      errs.add("missing required field \"material\"");
    else
      mat = parse_material(j["material"], errs);
  }
  validate_physics(j, cmd, mat, errs);

  // required per-command numerics
  auto require = [&](std::initializer_list<const char*> keys) {
    for (const char* k : keys)
      if (!j.contains(k)) errs.add(cmd + ": missing required field \"" + std::string(k) + "\"");
  };
  if (cmd == "bands") require({"k_max_norm", "n_k"});
  if (cmd == "berry-field") require({"k_max_norm", "n"});
  if (cmd == "spp") require({"eps_s", "f_min_thz", "f_max_thz", "n_omega"});
  if (cmd == "confinement")
    require({"omega_min_over_omega_p", "omega_max_over_omega_p", "n_omega",
             "omega_c_min_over_omega_p", "omega_c_max_over_omega_p", "n_omega_c"});
  if (cmd == "qcheck") require({"f_thz"});
  if (cmd == "emitter") require({"dphi0"});
  if (cmd == "symmetry") require({"f_thz"});
  if (cmd == "geophase") require({"path"});

  errs.raise_if_any();
  if (mat_out) *mat_out = mat;
  return j;
}

}  // namespace

std::string library_version() { return library_version_string; }

Scenario validate_scenario(const std::string& json_text) {
  MaterialSpec mat;
  const json j = parse_and_validate(json_text, &mat);
  Scenario sc;
  sc.command = j["command"].get<std::string>();
  sc.output = j["output"].get<std::string>();
  sc.raw_json = j.dump(2);
  return sc;
}

RunResult run_scenario(const std::string& json_text,
                       const std::filesystem::path& out_dir, int threads,
                       unsigned seed) {
  RunResult res;
  const auto t0 = std::chrono::steady_clock::now();
  json j;
  MaterialSpec mat;
  try {
    j = parse_and_validate(json_text, &mat);
  } catch (const ConfigError& e) {
    res.exit_code = 2;
    res.message = e.what();
    return res;
  }

  const std::string cmd = j["command"].get<std::string>();
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path out = out_dir / j["output"].get<std::string>();
  grid_meta = json::object();

  try {
    if (cmd == "bands") run_bands(j, mat, out);
    else if (cmd == "berry-field") run_berry_field(j, mat, out);
    else if (cmd == "chern") run_chern(j, mat, out, threads);
    else if (cmd == "spp") run_spp(j, mat, out);
    else if (cmd == "confinement") run_confinement(j, mat, out);
    else if (cmd == "qcheck") run_qcheck(j, mat, out);
    else if (cmd == "emitter") run_emitter(j, out);
    else if (cmd == "symmetry") run_symmetry(j, mat, out, seed);
    else if (cmd == "geophase") run_geophase(j, out);
  } catch (const ConfigError& e) {
    res.exit_code = 2;
    res.message = e.what();
    return res;
  } catch (const Error& e) {
    res.exit_code = 3;
    res.message = std::string("numerical failure: ") + e.what();
    return res;
  }
  res.written.push_back(out);

  const double runtime =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const std::filesystem::path meta_path = out.string() + ".meta.json";
  std::ofstream meta(meta_path);
  meta << json{{"command", cmd},
               {"config", j},
               {"library_version", library_version_string},
               {"grid", grid_meta},
               {"runtime_seconds", runtime}}
              .dump(2)
       << "\n";
  res.written.push_back(meta_path);
  res.message = "ok";
  return res;
}

}  // namespace emberry
