#include "experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "dimerlab/cavity.hpp"
#include "dimerlab/collision.hpp"
#include "dimerlab/dissociation.hpp"
#include "dimerlab/fluorescence.hpp"
#include "dimerlab/gaussian_epr.hpp"
#include "dimerlab/superbeats.hpp"
#include "dimerlab/teleportation.hpp"

namespace dimerlab::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

// typed parameter access with unknown-key rejection
class Params {
  public:
    explicit Params(const std::map<std::string, std::string>& raw) : raw_(raw) {}

    double number(const std::string& key, double fallback) {
        used_.insert(key);
        const auto it = raw_.find(key);
        return it == raw_.end() ? fallback : to_number(key, it->second);
    }
    long integer(const std::string& key, long fallback) {
        used_.insert(key);
        const auto it = raw_.find(key);
        return it == raw_.end() ? fallback : to_integer(key, it->second);
    }
    std::string choice(const std::string& key, const std::string& fallback,
                       const std::set<std::string>& allowed) {
        used_.insert(key);
        const auto it = raw_.find(key);
        const std::string v = it == raw_.end() ? fallback : it->second;
        if (!allowed.count(v)) {
            std::string opts;
            for (const auto& a : allowed) opts += (opts.empty() ? "" : ", ") + a;
            throw config_error("field `" + key + "`: got `" + v + "`, expected one of: " + opts);
        }
        return v;
    }
    void finish() const {
        for (const auto& [key, value] : raw_)
            if (!used_.count(key)) throw config_error("unknown parameter `" + key + "`");
    }

  private:
    const std::map<std::string, std::string>& raw_;
    std::set<std::string> used_;
};

std::vector<double> linspace(double a, double b, std::size_t n) {
    if (n < 2 || !(b > a)) throw config_error("grid request needs n >= 2 and max > min");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    return out;
}

std::vector<CurveRecord> exp_epr_measures(Params& p) {
    TwoParticleGaussian state{p.number("dx_cm", 0.1), p.number("dx_rel", 2.0),
                              p.number("mass", 1.0), 0.0};
    const double t_max = p.number("t_max", 2.0);
    const auto n_t = static_cast<std::size_t>(p.integer("n_t", 81));
    const std::string base_name = p.choice("entropy_base", "e", {"e", "2"});
    p.finish();
    const EntropyBase base = base_name == "2" ? EntropyBase::Two : EntropyBase::E;

    CurveRecord rec{"measures", "EPR squeezing, Schmidt number and entropy vs free flight",
                    {"t", "s", "K", "S", "dx1_cond", "dp1_cond"}, {}};
    for (const double t : linspace(0.0, t_max, n_t)) {
        const auto st = free_evolve(state, t);
        const auto cw = conditional_variances(st);
        const double k = schmidt_number(st);
        rec.rows.push_back({t, squeezing_parameter(st), k, gaussian_ladder_entropy(k, base),
                            cw.dx, cw.dp});
    }
    return {rec};
}

std::vector<CurveRecord> exp_collision_scan(Params& p) {
    const DoubleDeltaPotential pot{p.number("strength", 2.0), p.number("a", 1.0)};
    const double sigma = p.number("sigma", 0.01);
    const double k_min = p.number("k_min", 0.5);
    const double k_max = p.number("k_max", 6.0);
    const auto n_points = static_cast<std::size_t>(p.integer("n_points", 60));
    const auto grid_n = static_cast<std::size_t>(p.integer("grid_n", 384));
    p.finish();

    const auto scan =
        wavepacket_entropy_scan(k_min, k_max, n_points, sigma, pot, Execution::Parallel, grid_n);

    CurveRecord rec{"scan", "single-particle entropy gain across the double-delta resonances",
                    {"k", "delta_s1_bits", "transmission"}, {}};
    for (std::size_t i = 0; i < scan.k.size(); ++i)
        rec.rows.push_back({scan.k[i], scan.delta_s1[i],
                            pot.strength == 0.0
                                ? 1.0
                                : scattering_amplitudes(scan.k[i], pot).transmission()});

    CurveRecord res{"resonances", "transmission resonances and entropy estimates",
                    {"k_res", "gamma", "log2_sigma_over_gamma"}, {}};
    for (std::size_t i = 0; i < scan.resonances.size(); ++i)
        res.rows.push_back({scan.resonances[i].k_res, scan.resonances[i].gamma,
                            scan.log2_sigma_over_gamma[i]});
    return {rec, res};
}

std::vector<CurveRecord> exp_raman_profile(Params& p) {
    RamanParams rp{p.number("omega_eff", 6.0), p.number("v", 1.0), p.number("k", 10.0),
                   p.number("delta_l0", 0.0), p.number("delta_l2", 0.0)};
    const double t = p.number("t", 8.0);
    const double theta = p.number("theta", 0.0);
    const auto n_r = static_cast<std::size_t>(p.integer("n_r", 400));
    p.finish();

    CurveRecord rec{"profile", "outgoing two-fragment radial amplitude behind the causal edge",
                    {"r", "re_psi", "im_psi", "radial_density"}, {}};
    const double r_max = rp.v * t;
    for (std::size_t i = 0; i < n_r; ++i) {
        const double r = r_max * (static_cast<double>(i) + 0.5) / static_cast<double>(n_r);
        const cplx a = raman_wavepacket(r, theta, t, rp);
        rec.rows.push_back({r, a.real(), a.imag(), std::norm(a) * r * r});
    }

    CurveRecord mom{"momentum", "radial momentum spread of the developed packet",
                    {"t", "momentum_spread"}, {{t, momentum_spread(rp, t)}}};
    return {rec, mom};
}

std::vector<CurveRecord> exp_trap_squeeze(Params& p) {
    TwoParticleGaussian state{p.number("dx_cm", 0.1), p.number("dx_rel", 0.8),
                              p.number("mass", 1.0), 0.0};
    const TrapParams trap = TrapParams::for_single_mass(
        state.mass, p.number("omega", 1.0), p.number("x0", 4.0), p.number("v_recede", 0.5));
    const double t_max = p.number("t_max", 2.0 * std::numbers::pi);
    const auto n_t = static_cast<std::size_t>(p.integer("n_t", 201));
    p.finish();

    CurveRecord rec{"squeeze", "breathing of the confined pair in the receding wells",
                    {"t", "s", "dx_cm", "dx_rel", "well_left", "well_right"}, {}};
    for (const double t : linspace(0.0, t_max, n_t)) {
        const auto evolved = harmonic_confinement_evolve(state, trap, t);
        const auto wells = receding_well_frame(trap, t);
        rec.rows.push_back({t, trap_squeezing(state, trap, t), evolved.dx_cm, evolved.dx_rel,
                            wells.first, wells.second});
    }
    return {rec};
}

std::vector<CurveRecord> exp_fluorescence(Params& p) {
    const auto parity = p.choice("parity", "u", {"u", "g"}) == "u" ? Parity::u : Parity::g;
    const auto spin = p.choice("spin", "singlet", {"singlet", "triplet"}) == "singlet"
                          ? MolecularSpin::singlet
                          : MolecularSpin::triplet;
    const auto dl = static_cast<int>(p.integer("delta_lambda", 1));
    const double ratio = p.number("gamma_over_xi_rate", 0.1);
    const double xi_max = p.number("xi_max", 30.0);
    const auto n = static_cast<std::size_t>(p.integer("n", 601));
    p.finish();

    const auto dicke = dicke_from_symmetry(parity, spin);
    const auto curve =
        ringing_curve(linspace(0.0, xi_max, n), dl, dicke.superradiant() ? 1 : -1, ratio);
    CurveRecord rec{"ringing", "cooperative emission rate of the receding pair",
                    {"xi", "rate_over_gamma", "population", "emitted"}, {}};
    for (std::size_t i = 0; i < curve.xi.size(); ++i)
        rec.rows.push_back({curve.xi[i], curve.rate[i], curve.population[i], curve.emitted[i]});
    return {rec};
}

std::vector<CurveRecord> exp_superbeats(Params& p) {
    SuperbeatParams sp;
    sp.coherence_amplitude = p.number("A", 0.5);
    sp.phi = p.number("phi", 0.0);
    sp.t_delay = p.number("t_delay", 0.0);
    sp.gamma = p.number("gamma", 1.0);
    sp.eps = p.number("eps", 50.0);
    sp.rho_pp = p.number("rho_pp", 0.5);
    sp.rho_mm = p.number("rho_mm", 0.5);
    const double gp = p.number("g_plus", 0.2);
    const double gm = p.number("g_minus", 0.2);
    const double gc = p.number("g_cross", 1.0);
    sp.g_plus = [gp](double) { return gp; };
    sp.g_minus = [gm](double) { return gm; };
    sp.g_cross = [gc](double) { return gc; };
    const double t_max = p.number("t_max", 5.0);
    const auto n = static_cast<std::size_t>(p.integer("n", 2048));
    p.finish();

    const auto curve =
        emission_rate_superbeats(linspace(sp.t_delay, sp.t_delay + t_max, n), sp);
    CurveRecord rec{"beats", "fine-structure beats on the cooperative decay envelope",
                    {"t", "rate", "population"}, {}};
    for (std::size_t i = 0; i < curve.t.size(); ++i)
        rec.rows.push_back({curve.t[i], curve.rate[i], curve.population[i]});
    return {rec};
}

std::vector<CurveRecord> exp_teleport(Params& p) {
    const std::string state = p.choice("state", "gaussian", {"gaussian", "cat"});
    const double sigma_in = p.number("sigma_in", 1.0);
    const double separation = p.number("separation", 6.0);
    const auto grid_n = static_cast<std::size_t>(p.integer("grid_n", 256));
    const double half_width = p.number("half_width", 12.0);
    const double se_min = p.number("s_e_min", 0.0);
    const double se_max = p.number("s_e_max", 2.0);
    const auto n_se = static_cast<std::size_t>(p.integer("n_se", 41));
    p.finish();

    const auto tmpl = make_grid_1d(grid_n, 0.0, half_width);
    ComplexGrid1D psi = tmpl;
    if (state == "gaussian") {
        psi = gaussian_packet(tmpl, 0.0, sigma_in);
    } else {
        const auto left = gaussian_packet(tmpl, -0.5 * separation, sigma_in);
        const auto right = gaussian_packet(tmpl, 0.5 * separation, sigma_in);
        for (std::size_t i = 0; i < psi.size(); ++i)
            psi.samples[i] = left.samples[i] + right.samples[i];
        psi.normalize();
    }

    const auto curve = fidelity_curve(psi, linspace(se_min, se_max, n_se));
    CurveRecord rec{"fidelity", "teleportation fidelity vs error squeezing",
                    {"s_e", "sigma", "fidelity"}, {}};
    for (std::size_t i = 0; i < curve.s_e.size(); ++i)
        rec.rows.push_back({curve.s_e[i], curve.sigma[i], curve.fidelity[i]});
    return {rec};
}

std::vector<CurveRecord> exp_cavity(Params& p) {
    CavityParams cp{p.number("g_eff", 1.0), p.number("eta", 0.1), p.number("nbar", 0.05),
                    p.number("nu", 1.0),
                    p.choice("convention", "half", {"half", "full"}) == "half"
                        ? RateConvention::HalfInversion
                        : RateConvention::FullInversion};
    const std::string state = p.choice("state", "bell", {"bell", "mixed"});
    const double gt_max = p.number("gt_max", 5.0);
    const auto n = static_cast<std::size_t>(p.integer("n", 101));
    p.finish();

    const auto rho0 = state == "bell" ? DimerDensity4::bell_psi_plus()
                                      : DimerDensity4::phase_averaged_mixture();
    const auto curve = temperature_curve(rho0, linspace(0.0, gt_max, n), cp);
    CurveRecord rec{"temperature", "cavity temperature enhancement vs transit decay",
                    {"gamma_t", "tc_over_t", "below_threshold"}, {}};
    for (std::size_t i = 0; i < curve.gamma_t.size(); ++i)
        rec.rows.push_back({curve.gamma_t[i], curve.tc_over_t[i],
                            static_cast<double>(curve.below_threshold[i])});
    return {rec};
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string serialize_config(const ExperimentConfig& cfg,
                             const std::map<std::string, std::string>& point_params) {
    std::ostringstream out;
    out << "[experiment]\nid = " << cfg.id << "\noutput = " << cfg.output << "\n";
    if (cfg.gnuplot) out << "gnuplot = true\n";
    out << "\n[params]\n";
    for (const auto& [key, value] : point_params) out << key << " = " << value << "\n";
    return out.str();
}

}  // namespace

std::vector<std::string> known_experiments() {
    return {"epr-measures", "collision-scan", "raman-profile", "trap-squeeze",
            "fluorescence", "superbeats",     "teleport",      "cavity"};
}

std::vector<CurveRecord> run_experiment(const std::string& id,
                                        const std::map<std::string, std::string>& params) {
    Params p(params);
    if (id == "epr-measures") return exp_epr_measures(p);
    if (id == "collision-scan") return exp_collision_scan(p);
    if (id == "raman-profile") return exp_raman_profile(p);
    if (id == "trap-squeeze") return exp_trap_squeeze(p);
    if (id == "fluorescence") return exp_fluorescence(p);
    if (id == "superbeats") return exp_superbeats(p);
    if (id == "teleport") return exp_teleport(p);
    if (id == "cavity") return exp_cavity(p);
    throw config_error("unknown experiment id `" + id + "`");
}

std::vector<std::string> write_records(const std::string& base, const ExperimentConfig& cfg,
                                       const std::map<std::string, std::string>& point_params,
                                       const std::vector<CurveRecord>& records) {
    std::vector<std::string> written;
    const fs::path base_path(base);
    std::error_code ec;
    if (base_path.has_parent_path()) fs::create_directories(base_path.parent_path(), ec);
    if (ec) throw io_error("cannot create output directory: " + ec.message());

    json meta;
    meta["artifact"] = "dimerlab";
    meta["version"] = kVersion;
    meta["experiment"] = cfg.id;
    meta["units"] = "dimensionless, hbar = 1";
    meta["params"] = point_params;
    meta["config"] = serialize_config(cfg, point_params);
    meta["curves"] = json::array();

    for (const auto& rec : records) {
        const std::string path = base + "_" + rec.name + ".csv";
        std::ofstream out(path, std::ios::binary);
        if (!out) throw io_error("cannot open output file: " + path);
        for (std::size_t c = 0; c < rec.columns.size(); ++c)
            out << (c ? "," : "") << rec.columns[c];
        out << "\n";
        for (const auto& row : rec.rows) {
            if (row.size() != rec.columns.size())
                throw io_error("record `" + rec.name + "`: ragged row");
            for (std::size_t c = 0; c < row.size(); ++c)
                out << (c ? "," : "") << format_double(row[c]);
            out << "\n";
        }
        if (!out.good()) throw io_error("write failure on " + path);
        written.push_back(path);
        meta["curves"].push_back({{"name", rec.name},
                                  {"tag", rec.tag},
                                  {"file", fs::path(path).filename().string()},
                                  {"columns", rec.columns},
                                  {"rows", rec.rows.size()}});
    }

    const std::string meta_path = base + ".meta.json";
    std::ofstream meta_out(meta_path, std::ios::binary);
    if (!meta_out) throw io_error("cannot open output file: " + meta_path);
    meta_out << meta.dump(2) << "\n";
    written.push_back(meta_path);

    if (cfg.gnuplot) {
        const std::string gp_path = base + ".gp";
        std::ofstream gp(gp_path, std::ios::binary);
        if (!gp) throw io_error("cannot open output file: " + gp_path);
        gp << "set datafile separator ','\nset key autotitle columnhead\nset grid\n";
        for (const auto& rec : records) {
            gp << "set title '" << cfg.id << ": " << rec.name << "'\n";
            gp << "plot '" << fs::path(base + "_" + rec.name + ".csv").filename().string()
               << "' using 1:2 with lines\npause -1\n";
        }
        written.push_back(gp_path);
    }
    return written;
}

std::vector<std::string> run_config(const ExperimentConfig& cfg) {
    const auto records = run_experiment(cfg.id, cfg.params);
    return write_records(cfg.output, cfg, cfg.params, records);
}

int sweep_config(const ExperimentConfig& cfg, std::size_t workers) {
    if (cfg.sweep.empty()) throw config_error("sweep requested but no [sweep] axes given");
    std::size_t n_points = 1;
    for (const auto& axis : cfg.sweep) n_points *= axis.values.size();
    if (n_points == 0) throw config_error("sweep axes produce no points");

    struct PointOutcome {
        std::map<std::string, std::string> params;
        std::vector<std::string> files;
        std::string error;
        bool ok = false;
    };
    std::vector<PointOutcome> outcomes(n_points);

    const auto point_params = [&](std::size_t idx) {
        auto params = cfg.params;
        for (const auto& axis : cfg.sweep) {
            params[axis.name] = axis.values[idx % axis.values.size()];
            idx /= axis.values.size();
        }
        return params;
    };

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < n_points; i = next.fetch_add(1)) {
            auto& outcome = outcomes[i];
            outcome.params = point_params(i);
            std::ostringstream stem;
            stem << cfg.output << "/point_" << std::setw(4) << std::setfill('0') << i;
            try {
                const auto records = run_experiment(cfg.id, outcome.params);
                outcome.files = write_records(stem.str(), cfg, outcome.params, records);
                outcome.ok = true;
            } catch (const std::exception& e) {
                outcome.error = e.what();
            }
        }
    };

    workers = std::max<std::size_t>(1, std::min(workers, n_points));
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i + 1 < workers; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    json index;
    index["artifact"] = "dimerlab";
    index["version"] = kVersion;
    index["experiment"] = cfg.id;
    index["axes"] = json::array();
    for (const auto& axis : cfg.sweep)
        index["axes"].push_back({{"name", axis.name}, {"values", axis.values}});
    index["points"] = json::array();
    std::size_t failed = 0;
    for (std::size_t i = 0; i < n_points; ++i) {
        const auto& o = outcomes[i];
        if (!o.ok) ++failed;
        json pt{{"index", i}, {"params", o.params}, {"status", o.ok ? "ok" : "failed"}};
        if (o.ok)
            pt["files"] = o.files;
        else
            pt["error"] = o.error;
        index["points"].push_back(pt);
    }

    std::error_code ec;
    fs::create_directories(cfg.output, ec);
    if (ec) throw io_error("cannot create sweep directory: " + ec.message());
    const std::string index_path = cfg.output + "/index.json";
    std::ofstream out(index_path, std::ios::binary);
    if (!out) throw io_error("cannot open output file: " + index_path);
    out << index.dump(2) << "\n";
    if (failed) std::fprintf(stderr, "sweep: %zu of %zu points failed\n", failed, n_points);
    return failed == n_points ? 3 : 0;
}

}  // namespace dimerlab::cli
