#include "catmode/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "catmode/entanglement.hpp"
#include "catmode/errors.hpp"
#include "catmode/io.hpp"
#include "catmode/observables.hpp"
#include "catmode/oracle.hpp"
#include "catmode/phase.hpp"
#include "catmode/states.hpp"

namespace catmode::cli {

namespace {

using Row = std::vector<RowWriter::Cell>;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Settings {
  double alpha1 = 0.9;
  double alpha2 = 0.8;
  std::vector<int> m1{0};
  std::vector<int> m2{0};
  std::vector<std::string> phi{"0"};
  std::string sweep_alpha1;
  std::string sweep_alpha2;
  std::string sweep_phi;
  double rel_tol = SeriesConfig{}.rel_tol;
  int cutoff = -1;
  bool oracle = false;
  std::string format = "csv";
  std::string out_path;
  std::string preset;
  // pnd
  int qmax = -1;
  int q1max = -1;
  int q2max = -1;
  bool diagonal = false;
  // mandel
  std::string mode = "both";
  // delta-c
  int m_max = 10;
  std::vector<int> m_list;
  // verify
  std::string grid = "default";
};

// Values a preset supplies for options the user did not set explicitly.
struct Preset {
  std::string command;
  std::function<void(Settings&, const std::function<bool(const char*)>&)> apply;
};

const std::map<std::string, Preset>& presets() {
  static const std::map<std::string, Preset> table = {
      {"fig1",
       {"pnd",
        [](Settings& s, const auto& unset) {
          if (unset("--alpha1")) s.alpha1 = 0.9;
          if (unset("--alpha2")) s.alpha2 = 0.8;
          if (unset("--m1")) s.m1 = {2};
          if (unset("--m2")) s.m2 = {3};
          if (unset("--phi")) s.phi = {"pi"};
          if (unset("--qmax") && unset("--q1max") && unset("--q2max")) s.qmax = 20;
        }}},
      {"fig2",
       {"pnd",
        [](Settings& s, const auto& unset) {
          if (unset("--alpha1")) s.alpha1 = 0.9;
          if (unset("--alpha2")) s.alpha2 = 0.8;
          if (unset("--phi")) s.phi = {"0"};
          if (unset("--qmax") && unset("--q1max") && unset("--q2max")) s.qmax = 20;
          s.diagonal = true;
        }}},
      {"fig3",
       {"mandel",
        [](Settings& s, const auto& unset) {
          if (unset("--sweep-alpha1") && unset("--alpha1")) s.sweep_alpha1 = "0.01:3:0.01";
          if (unset("--sweep-alpha2") && unset("--alpha2")) s.sweep_alpha2 = "0.01:3:0.01";
          if (unset("--m1")) s.m1 = {2};
          if (unset("--m2")) s.m2 = {3};
          if (unset("--phi")) s.phi = {"pi"};
          if (unset("--mode")) s.mode = "1";
        }}},
      {"fig4",
       {"mandel",
        [](Settings& s, const auto& unset) {
          if (unset("--sweep-alpha1") && unset("--alpha1")) s.sweep_alpha1 = "0.01:3:0.01";
          if (unset("--sweep-alpha2") && unset("--alpha2")) s.sweep_alpha2 = "0.01:3:0.01";
          if (unset("--m1")) s.m1 = {2};
          if (unset("--m2")) s.m2 = {3};
          if (unset("--phi")) s.phi = {"pi"};
          if (unset("--mode")) s.mode = "2";
        }}},
      {"fig5",
       {"concurrence",
        [](Settings& s, const auto& unset) {
          if (unset("--sweep-alpha1") && unset("--alpha1")) s.sweep_alpha1 = "0.01:3:0.01";
          if (unset("--sweep-alpha2") && unset("--alpha2")) s.sweep_alpha2 = "0.01:3:0.01";
          if (unset("--m1")) s.m1 = {2};
          if (unset("--m2")) s.m2 = {3};
          if (unset("--phi")) s.phi = {"pi"};
        }}},
      {"fig6",
       {"concurrence",
        [](Settings& s, const auto& unset) {
          if (unset("--sweep-alpha1") && unset("--alpha1")) s.sweep_alpha1 = "0.01:3:0.01";
          if (unset("--alpha2")) s.alpha2 = 2.0;
          if (unset("--m1")) s.m1 = {0, 1, 2, 3, 4};
          if (unset("--m2")) s.m2 = {0, 1, 2, 3, 4};
          if (unset("--phi")) s.phi = {"pi"};
        }}},
      {"fig7",
       {"concurrence",
        [](Settings& s, const auto& unset) {
          if (unset("--alpha1")) s.alpha1 = 2.0;
          if (unset("--sweep-alpha2") && unset("--alpha2")) s.sweep_alpha2 = "0.01:3:0.01";
          if (unset("--m1")) s.m1 = {0, 1, 2, 3, 4};
          if (unset("--m2")) s.m2 = {0, 1, 2, 3, 4};
          if (unset("--phi")) s.phi = {"pi"};
        }}},
      {"fig8",
       {"concurrence",
        [](Settings& s, const auto& unset) {
          if (unset("--alpha1")) s.alpha1 = 0.9;
          if (unset("--alpha2")) s.alpha2 = 0.8;
          if (unset("--m1")) s.m1 = {0, 1, 2, 3, 4};
          if (unset("--m2")) s.m2 = {0, 1, 2, 3, 4};
          if (unset("--sweep-phi") && unset("--phi")) s.sweep_phi = "0:6.28:0.01";
        }}},
      {"fig9",
       {"delta-c",
        [](Settings& s, const auto& unset) {
          if (unset("--alpha1")) s.alpha1 = 0.9;
          if (unset("--alpha2")) s.alpha2 = 0.8;
          if (unset("--phi")) s.phi = {"pi"};
          if (unset("--m-max") && unset("--m")) s.m_max = 10;
        }}},
  };
  return table;
}

unsigned thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CATMODE_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

// Evaluates compute(0..count-1) in parallel chunks and hands results to emit in
// index order. The first failing index (in order) rethrows after all earlier
// results were emitted.
template <typename Result>
void ordered_parallel(std::size_t count, const std::function<Result(std::size_t)>& compute,
                      const std::function<void(const Result&)>& emit) {
  const unsigned threads = thread_count();
  const std::size_t chunk = std::max<std::size_t>(64, 16 * static_cast<std::size_t>(threads));
  for (std::size_t start = 0; start < count; start += chunk) {
    const std::size_t n = std::min(chunk, count - start);
    std::vector<std::optional<Result>> results(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next++;
        if (i >= n) return;
        try {
          results[i].emplace(compute(start + i));
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    if (threads <= 1 || n == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 1; t < std::min<std::size_t>(threads, n); ++t) pool.emplace_back(worker);
      worker();
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      emit(*results[i]);
    }
  }
}

double phase_value(const std::string& text) {
  const auto v = parse_phase(text);
  if (!v) throw UsageError("cannot parse phase '" + text + "'");
  return *v;
}

std::vector<double> phase_values(const Settings& s) {
  if (!s.sweep_phi.empty()) return parse_sweep(s.sweep_phi);
  std::vector<double> out;
  for (const auto& p : s.phi) out.push_back(phase_value(p));
  return out;
}

std::vector<double> alpha_values(const std::string& sweep, double fixed) {
  if (!sweep.empty()) return parse_sweep(sweep);
  return {fixed};
}

int single(const std::vector<int>& v, const char* name) {
  if (v.size() != 1) throw UsageError(std::string(name) + " takes exactly one value here");
  return v.front();
}

CatParams point_params(const Settings& s) {
  if (!s.sweep_alpha1.empty() || !s.sweep_alpha2.empty() || !s.sweep_phi.empty()) {
    throw UsageError("this subcommand does not take sweeps");
  }
  if (s.phi.size() != 1) throw UsageError("--phi takes exactly one value here");
  CatParams p{s.alpha1, s.alpha2, single(s.m1, "--m1"), single(s.m2, "--m2"), phase_value(s.phi[0])};
  p.validate();
  return p;
}

SeriesConfig series_config(const Settings& s) {
  SeriesConfig cfg;
  cfg.rel_tol = s.rel_tol;
  cfg.validate();
  return cfg;
}

FockCutoff cutoff_for(const Settings& s, const CatParams& p) {
  if (s.cutoff >= 0) return {s.cutoff, s.cutoff};
  return default_cutoff(p);
}

OutputFormat output_format(const Settings& s) {
  if (s.format == "csv") return OutputFormat::csv;
  if (s.format == "json") return OutputFormat::json;
  throw UsageError("--format must be csv or json");
}

void emit_state(std::ostream& out, const Settings& s, const TwoModeState& state) {
  if (output_format(s) == OutputFormat::csv) {
    write_state_csv(out, state);
    return;
  }
  RowWriter w(out, OutputFormat::json, {"n1", "n2", "re", "im"});
  const FockCutoff& c = state.cutoff();
  for (int n1 = 0; n1 <= c.n1_max; ++n1) {
    for (int n2 = 0; n2 <= c.n2_max; ++n2) {
      const cplx a = state.amp(n1, n2);
      if (std::abs(a) < 1e-16) continue;
      w.write({n1, n2, a.real(), a.imag()});
    }
  }
}

int cmd_state(const Settings& s, std::ostream& out) {
  const CatParams p = point_params(s);
  const FockCutoff cutoff = cutoff_for(s, p);
  const TwoModeState state = s.oracle ? oracle_state(p, cutoff) : build_pa2cat(p, cutoff, series_config(s));
  emit_state(out, s, state);
  return kExitOk;
}

int cmd_transform(const Settings& s, std::ostream& out, std::ostream& err) {
  const CatParams p = point_params(s);
  const TwoModeState state = build_parity_transformed(p, cutoff_for(s, p), series_config(s));
  err << "parity_eigen_residual " << format_number(parity_eigen_residual(state, p)) << '\n';
  emit_state(out, s, state);
  return kExitOk;
}

int cmd_pnd(const Settings& s, std::ostream& out) {
  const CatParams p = point_params(s);
  const SeriesConfig cfg = series_config(s);
  const FockCutoff def = cutoff_for(s, p);
  int q1 = s.qmax >= 0 ? s.qmax : def.n1_max;
  int q2 = s.qmax >= 0 ? s.qmax : def.n2_max;
  if (s.q1max >= 0) q1 = s.q1max;
  if (s.q2max >= 0) q2 = s.q2max;

  PndGrid grid;
  if (s.oracle) {
    const FockCutoff c{std::max(q1, def.n1_max), std::max(q2, def.n2_max)};
    grid = pnd_from_state(oracle_state(p, c));
  } else {
    grid = pnd_grid(p, q1, q2, cfg);
  }

  RowWriter w(out, output_format(s), {"q1", "q2", "p"});
  for (int a = 0; a <= q1; ++a) {
    for (int b = 0; b <= q2; ++b) {
      if (s.diagonal && a != b) continue;
      w.write({a, b, grid.at(a, b)});
    }
  }
  return kExitOk;
}

int cmd_mandel(const Settings& s, std::ostream& out) {
  const auto a1 = alpha_values(s.sweep_alpha1, s.alpha1);
  const auto a2 = alpha_values(s.sweep_alpha2, s.alpha2);
  if (!s.sweep_phi.empty() || s.phi.size() != 1) throw UsageError("mandel takes one --phi");
  const double phi = phase_value(s.phi[0]);
  const int m1 = single(s.m1, "--m1");
  const int m2 = single(s.m2, "--m2");
  std::vector<Mode> modes;
  if (s.mode == "1" || s.mode == "both") modes.push_back(Mode::one);
  if (s.mode == "2" || s.mode == "both") modes.push_back(Mode::two);
  if (modes.empty()) throw UsageError("--mode must be 1, 2 or both");
  const SeriesConfig cfg = series_config(s);

  RowWriter w(out, output_format(s), {"alpha1", "alpha2", "mode", "mean_n", "second_moment", "q"});
  ordered_parallel<std::vector<Row>>(
      a1.size() * a2.size(),
      [&](std::size_t i) {
        CatParams p{a1[i / a2.size()], a2[i % a2.size()], m1, m2, phi};
        p.validate();
        std::optional<TwoModeState> state;
        if (s.oracle) state.emplace(oracle_state(p, cutoff_for(s, p)));
        std::vector<Row> rows;
        for (Mode mode : modes) {
          const MandelReport r = s.oracle ? mandel_from_state(*state, mode) : mandel_q(p, mode, cfg);
          rows.push_back({p.alpha1.real(), p.alpha2.real(), static_cast<int>(mode), r.mean_n,
                          r.second_moment, r.q});
        }
        return rows;
      },
      [&](const std::vector<Row>& rows) {
        for (const Row& r : rows) w.write(r);
      });
  return kExitOk;
}

int cmd_concurrence(const Settings& s, std::ostream& out) {
  const auto a1 = alpha_values(s.sweep_alpha1, s.alpha1);
  const auto a2 = alpha_values(s.sweep_alpha2, s.alpha2);
  const auto phis = phase_values(s);
  if (s.m1.size() != s.m2.size()) throw UsageError("--m1 and --m2 must be given in pairs");
  const SeriesConfig cfg = series_config(s);
  const std::size_t per_pair = phis.size() * a1.size() * a2.size();

  RowWriter w(out, output_format(s),
              {"alpha1", "alpha2", "m1", "m2", "phi", "p1", "p2", "c_closed", "c_oracle"});
  ordered_parallel<Row>(
      s.m1.size() * per_pair,
      [&](std::size_t i) {
        const std::size_t pair = i / per_pair;
        std::size_t rest = i % per_pair;
        const double phi = phis[rest / (a1.size() * a2.size())];
        rest %= a1.size() * a2.size();
        CatParams p{a1[rest / a2.size()], a2[rest % a2.size()], s.m1[pair], s.m2[pair], phi};
        p.validate();
        const ConcurrenceReport r =
            s.oracle ? concurrence_report(p, cfg, cutoff_for(s, p)) : concurrence_closed(p, cfg);
        return Row{p.alpha1.real(), p.alpha2.real(), p.m1, p.m2, p.phi, r.p1, r.p2, r.c_closed,
                   r.c_oracle.value_or(std::nan(""))};
      },
      [&](const Row& r) { w.write(r); });
  return kExitOk;
}

int cmd_delta_c(const Settings& s, std::ostream& out) {
  CatParams base{s.alpha1, s.alpha2, 0, 0, 0.0};
  if (!s.sweep_phi.empty() || s.phi.size() != 1) throw UsageError("delta-c takes one --phi");
  base.phi = phase_value(s.phi[0]);
  base.validate();
  std::vector<int> ms = s.m_list;
  if (ms.empty()) {
    if (s.m_max < 0) throw UsageError("--m-max must be >= 0");
    for (int m = 0; m <= s.m_max; ++m) ms.push_back(m);
  }
  const SeriesConfig cfg = series_config(s);
  const double c0 = concurrence_closed(base, cfg).c_closed;

  RowWriter w(out, output_format(s), {"m", "c_m", "c_0", "delta_c"});
  ordered_parallel<Row>(
      ms.size(),
      [&](std::size_t i) {
        CatParams added = base;
        added.m1 = added.m2 = ms[i];
        const double cm = ms[i] == 0 ? c0 : concurrence_closed(added, cfg).c_closed;
        return Row{ms[i], cm, c0, delta_c(base, ms[i], cfg)};
      },
      [&](const Row& r) { w.write(r); });
  return kExitOk;
}

std::vector<CatParams> verify_grid(const Settings& s) {
  std::vector<double> alphas;
  std::vector<int> ms;
  std::vector<double> phis;
  if (s.grid == "default") {
    alphas = {0.1, 0.5, 0.9, 1.5, 2.5};
    ms = {0, 1, 2, 3};
    phis = {0.0, std::numbers::pi / 2, std::numbers::pi};
  } else if (s.grid == "quick") {
    alphas = {0.5, 1.5};
    ms = {0, 2};
    phis = {0.0, std::numbers::pi};
  } else if (s.grid == "point") {
    return {point_params(s)};
  } else {
    throw UsageError("--grid must be default, quick or point");
  }
  std::vector<CatParams> grid;
  for (double a1 : alphas)
    for (double a2 : alphas)
      for (int m1 : ms)
        for (int m2 : ms)
          for (double phi : phis) {
            CatParams p{a1, a2, m1, m2, phi};
            if (!p.is_degenerate()) grid.push_back(p);
          }
  return grid;
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto grid = verify_grid(s);
  const SeriesConfig cfg = series_config(s);
  std::size_t failures = 0;
  ordered_parallel<CrosscheckReport>(
      grid.size(), [&](std::size_t i) { return crosscheck(grid[i], cfg); },
      [&](const CrosscheckReport& r) {
        if (!r.pass) ++failures;
        out << to_json_line(r) << '\n';
      });
  if (failures > 0) {
    err << "verify: " << failures << " of " << grid.size() << " points failed\n";
    return kExitCrosscheckFailed;
  }
  return kExitOk;
}

void add_point_options(CLI::App* sub, Settings& s) {
  sub->add_option("--alpha1", s.alpha1, "|alpha1| (coherent amplitude of mode 1)");
  sub->add_option("--alpha2", s.alpha2, "|alpha2| (coherent amplitude of mode 2)");
  sub->add_option("--m1", s.m1, "photons added to mode 1");
  sub->add_option("--m2", s.m2, "photons added to mode 2");
  sub->add_option("--phi", s.phi, "relative phase: radians or 0, pi/2, pi, ...");
  sub->add_option("--rel-tol", s.rel_tol, "series relative tolerance");
  sub->add_option("--cutoff", s.cutoff, "Fock cutoff n_max for both modes");
  sub->add_flag("--oracle", s.oracle, "use the state-vector path");
  sub->add_option("--format", s.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", s.out_path, "output file (default stdout)");
  sub->add_option("--preset", s.preset, "figure preset fig1..fig9");
}

void add_sweep_options(CLI::App* sub, Settings& s) {
  sub->add_option("--sweep-alpha1", s.sweep_alpha1, "start:stop:step for |alpha1|");
  sub->add_option("--sweep-alpha2", s.sweep_alpha2, "start:stop:step for |alpha2|");
}

}  // namespace

std::vector<double> parse_sweep(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw UsageError("sweep must be start:stop:step, got '" + text + "'");
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, c1);
    const std::string b = text.substr(c1 + 1, c2 - c1 - 1);
    const std::string c = text.substr(c2 + 1);
    start = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    stop = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    step = std::stod(c, &used);
    if (used != c.size()) throw std::invalid_argument(c);
  } catch (const std::exception&) {
    throw UsageError("sweep must be start:stop:step, got '" + text + "'");
  }
  if (!(step > 0.0) || !(stop >= start)) {
    throw UsageError("sweep needs step > 0 and stop >= start, got '" + text + "'");
  }
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> values;
  values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Rounded to 12 decimals so 0.1 + 2 * 0.1 prints as 0.3.
    values.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
  }
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Photon-added two-mode cat states: distributions, Mandel Q, concurrence"};
  app.name("catmode");
  app.require_subcommand(1);
  Settings s;

  auto* state = app.add_subcommand("state", "number-basis amplitudes (n1,n2,re,im)");
  add_point_options(state, s);

  auto* pnd_cmd = app.add_subcommand("pnd", "photon-number distribution (q1,q2,p)");
  add_point_options(pnd_cmd, s);
  pnd_cmd->add_option("--qmax", s.qmax, "largest q for both modes");
  pnd_cmd->add_option("--q1max", s.q1max, "largest q1");
  pnd_cmd->add_option("--q2max", s.q2max, "largest q2");
  pnd_cmd->add_flag("--diagonal", s.diagonal, "emit only q1 = q2");

  auto* mandel = app.add_subcommand("mandel", "Mandel parameters over an |alpha| grid");
  add_point_options(mandel, s);
  add_sweep_options(mandel, s);
  mandel->add_option("--mode", s.mode, "1, 2 or both");

  auto* conc = app.add_subcommand("concurrence", "closed-form (and oracle) concurrence");
  add_point_options(conc, s);
  add_sweep_options(conc, s);
  conc->add_option("--sweep-phi", s.sweep_phi, "start:stop:step for phi (radians)");

  auto* dc = app.add_subcommand("delta-c", "entanglement difference vs added photons");
  add_point_options(dc, s);
  dc->add_option("--m-max", s.m_max, "largest m (sweep 0..m-max)");
  dc->add_option("--m", s.m_list, "explicit m values");

  auto* transform = app.add_subcommand("transform", "parity-transformed state amplitudes");
  add_point_options(transform, s);

  auto* verify = app.add_subcommand("verify", "closed form vs oracle crosscheck (JSON lines)");
  add_point_options(verify, s);
  verify->add_option("--grid", s.grid, "default, quick or point");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    if (!s.preset.empty()) {
      const auto it = presets().find(s.preset);
      if (it == presets().end()) throw UsageError("unknown preset '" + s.preset + "'");
      if (it->second.command != command) {
        throw UsageError("preset " + s.preset + " belongs to the '" + it->second.command +
                         "' subcommand");
      }
      it->second.apply(s, [sub](const char* name) { return sub->count(name) == 0; });
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!s.out_path.empty()) {
      file.open(s.out_path);
      if (!file) throw UsageError("cannot open --out file '" + s.out_path + "'");
      sink = &file;
    }

    int code = kExitOk;
    if (command == "state") code = cmd_state(s, *sink);
    else if (command == "pnd") code = cmd_pnd(s, *sink);
    else if (command == "mandel") code = cmd_mandel(s, *sink);
    else if (command == "concurrence") code = cmd_concurrence(s, *sink);
    else if (command == "delta-c") code = cmd_delta_c(s, *sink);
    else if (command == "transform") code = cmd_transform(s, *sink, err);
    else if (command == "verify") code = cmd_verify(s, *sink, err);
    sink->flush();
    return code;
  } catch (const DegenerateState& e) {
    err << "degenerate state: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const UndefinedMandel& e) {
    err << "undefined Mandel parameter: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const NonConvergence& e) {
    err << "series did not converge: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const TruncationOverflow& e) {
    err << "truncation overflow: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace catmode::cli
