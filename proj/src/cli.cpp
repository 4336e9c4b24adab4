#include "qptf/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qptf/detect.hpp"
#include "qptf/io.hpp"
#include "qptf/properties.hpp"
#include "qptf/signal.hpp"
#include "qptf/tfd.hpp"

namespace qptf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> parse_reals(const std::string& text, std::size_t count,
                                const char* what) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string tok =
            text.substr(start, comma == std::string::npos ? comma : comma - start);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size())
                throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw CLI::ValidationError(what, "'" + tok + "' is not a number");
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (out.size() != count)
        throw CLI::ValidationError(what, "expected " + std::to_string(count) +
                                             " comma-separated numbers");
    return out;
}

ParamSet parse_lambda(const std::string& text) {
    const auto v = parse_reals(text, 5, "--lambda");
    try {
        return ParamSet(v[0], v[1], v[2], v[3], v[4]);
    } catch (const std::exception& ex) {
        throw CLI::ValidationError("--lambda", ex.what());
    }
}

struct SignalFlags {
    std::vector<std::string> lfm;
    std::string gaussian_pair;
    std::string in_path;
    double half_support = 10.0;
    std::size_t n = 1024;
    double snr_db = kInf;
    std::uint64_t seed = 1;
};

void add_signal_flags(CLI::App* sub, SignalFlags& sf) {
    sub->add_option("--lfm", sf.lfm,
                    "LFM component as a0,nu0,xi0 (repeat for multicomponent)");
    sub->add_option("--gaussian-pair", sf.gaussian_pair,
                    "two Gaussian envelope centers c1,c2");
    sub->add_option("--in", sf.in_path, "read the signal from a CSV file");
    sub->add_option("--half-support", sf.half_support,
                    "grid covers [-h, h] (default 10)");
    sub->add_option("--n", sf.n, "sample count (default 1024)");
    sub->add_option("--snr", sf.snr_db,
                    "additive noise level in dB; inf means no noise");
    sub->add_option("--seed", sf.seed, "noise seed (default 1)");
}

Signal build_signal(const SignalFlags& sf) {
    const int sources = static_cast<int>(!sf.lfm.empty()) +
                        static_cast<int>(!sf.gaussian_pair.empty()) +
                        static_cast<int>(!sf.in_path.empty());
    if (sources != 1)
        throw CLI::ValidationError(
            "signal", "give exactly one of --lfm, --gaussian-pair, --in");

    Signal f;
    if (!sf.in_path.empty()) {
        f = read_signal_csv(sf.in_path);
    } else if (!sf.gaussian_pair.empty()) {
        const auto c = parse_reals(sf.gaussian_pair, 2, "--gaussian-pair");
        f = make_gaussian_pair({c[0], c[1]}, sf.half_support, sf.n);
    } else {
        std::vector<LFMComponent> comps;
        for (const std::string& text : sf.lfm) {
            const auto v = parse_reals(text, 3, "--lfm");
            comps.push_back({cd{v[0], 0.0}, v[1], v[2]});
        }
        f = make_multicomponent(comps, sf.half_support, sf.n);
    }
    return add_awgn(f, sf.snr_db, sf.seed);
}

std::string default_outdir() {
    if (const char* env = std::getenv("QPTF_OUTDIR"); env && *env)
        return env;
    return ".";
}

std::string joined(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw io_error(dir + ": cannot create output directory");
}

void print_report(std::ostream& os, const DetectionReport& rep) {
    os << "kind=" << kind_name(rep.kind);
    if (rep.params)
        os << " lambda=" << format_double(rep.params->a) << ','
           << format_double(rep.params->b) << ',' << format_double(rep.params->c)
           << ',' << format_double(rep.params->d) << ','
           << format_double(rep.params->e);
    os << " detected=" << (rep.detected ? 1 : 0);
    if (rep.detected) {
        os << " slope=" << format_double(rep.line.slope)
           << " intercept=" << format_double(rep.line.intercept);
        if (rep.nu0_hat)
            os << " nu0_hat=" << format_double(*rep.nu0_hat);
        if (rep.xi0_hat)
            os << " xi0_hat=" << format_double(*rep.xi0_hat);
        os << " peak_ratio=" << format_double(rep.peak_ratio)
           << " n_ridges=" << rep.n_ridges
           << " fit_rmse=" << format_double(rep.fit_rmse);
    }
    os << '\n';
}

// ---- verify fixtures --------------------------------------------------

double shift_tolerance(PropertyId id) {
    switch (id) {
    case PropertyId::TIME_SHIFT_WD:
    case PropertyId::TIME_SHIFT_AF:
    case PropertyId::FREQ_SHIFT_WD:
    case PropertyId::FREQ_SHIFT_AF:
    case PropertyId::JOINT_SHIFT_WD:
    case PropertyId::JOINT_SHIFT_AF:
        return 1e-8;
    case PropertyId::CONJ_WD:
    case PropertyId::CONJ_AF:
    case PropertyId::SYMM_WD:
    case PropertyId::SYMM_AF:
        return 1e-10;
    default:
        return 1e-2; // quadrature-level identities at the reference grid
    }
}

// A lattice-aligned fixture for each property. The chirp-modulated Gaussian
// pair keeps boundary samples at underflow level, so shifted copies stay on
// the grid; parameter tuples are adjusted per property so the induced
// frequency offsets land on the frequency lattice.
VerifierFixture fixture_for(PropertyId id, const ParamSet& base, std::size_t n,
                            double h) {
    const Signal envelope = make_gaussian_pair({-2.0, 1.5}, h, n);
    const double pm = 0.3, qm = 0.7;

    VerifierFixture fx{chirp_modulate(envelope, pm, qm),
                       std::nullopt,
                       base,
                       0.0,
                       0.0,
                       std::nullopt};
    const double dt = fx.f.dt;
    const double dnu_wd =
        2.0 * 3.141592653589793238462643383279502884 /
        (static_cast<double>(n) * 2.0 * dt * std::abs(base.b));

    switch (id) {
    case PropertyId::TIME_SHIFT_WD:
    case PropertyId::JOINT_SHIFT_WD:
        // zero a+c makes the time shift's frequency offset vanish
        fx.params = ParamSet(base.a, base.b, -base.a, base.d, base.e);
        fx.t0 = 64.0 * dt;
        if (id == PropertyId::JOINT_SHIFT_WD)
            fx.u0 = 16.0 * base.b * dnu_wd;
        break;
    case PropertyId::FREQ_SHIFT_WD:
        fx.u0 = 16.0 * base.b * dnu_wd;
        break;
    case PropertyId::TIME_SHIFT_AF:
    case PropertyId::JOINT_SHIFT_AF:
        // a = c keeps the lag-outer map's frequency argument fixed
        fx.params = ParamSet(base.a, base.b, base.a, base.d, base.e);
        fx.t0 = 64.0 * dt;
        if (id == PropertyId::JOINT_SHIFT_AF)
            fx.u0 = 0.7;
        break;
    case PropertyId::FREQ_SHIFT_AF:
        fx.u0 = 0.7;
        break;
    case PropertyId::MOYAL_WD:
    case PropertyId::MOYAL_AF:
        fx.g = chirp_modulate(make_gaussian_pair({0.8, -1.2}, h, n), -0.2, 0.4);
        break;
    case PropertyId::AF_SLICE:
    case PropertyId::RECON_WD:
    case PropertyId::RECON_AF: {
        const double inv_s2 = 1.0 / std::sqrt(2.0);
        fx.analytic = [inv_s2, pm, qm](double t) {
            const double d1 = t + 2.0, d2 = t - 1.5;
            const double env =
                std::exp(-d1 * d1 * inv_s2) + std::exp(-d2 * d2 * inv_s2);
            return std::polar(env, pm * t * t + qm * t);
        };
        break;
    }
    default:
        break;
    }
    return fx;
}

// ---- subcommand bodies --------------------------------------------------

struct FigureFiles {
    std::string dir;
    int contour = 12;
    double snr_db = kInf;
    std::uint64_t seed = 1;
    std::vector<SweepRow> detections;

    void emit(const std::string& stem, TFKind kind,
              const std::optional<ParamSet>& params, const Signal& f) {
        const TFMap map = compute_tfd(kind, params, f);
        write_tfmap_csv(map, joined(dir, stem + ".csv"));
        write_heatmap(map, joined(dir, stem + ".pgm"), contour);
        SweepRow row;
        row.snr_db = snr_db;
        row.seed = seed;
        row.report = detect_from_map(map, 0.5);
        detections.push_back(std::move(row));
    }
};

int cmd_figure(const std::string& name, const std::optional<ParamSet>& lambda,
               const std::string& centers, std::size_t n, std::uint64_t seed,
               int contour, const std::string& outdir) {
    ensure_dir(outdir);

    const std::vector<LFMComponent> mono = {{cd{1.0, 0.0}, 0.1, 0.2}};
    const std::vector<LFMComponent> bi = {{cd{1.0, 0.0}, 0.1, 0.2},
                                          {cd{1.0, 0.0}, 0.3, 0.2}};
    const double h = 10.0;

    FigureFiles out;
    out.dir = outdir;
    out.contour = contour;
    out.seed = seed;

    if (name == "fig5" || name == "fig7") {
        const TFKind kind = (name == "fig5") ? TFKind::AQWD : TFKind::AQAF;
        const ParamSet lam(0, -1, 0, 2, 2);
        const Signal clean = make_multicomponent(mono, h, n);
        out.snr_db = kInf;
        out.emit(name + "_" + kind_name(kind) + "_clean", kind, lam, clean);
        const std::pair<const char*, double> snrs[] = {
            {"snr5", 5.0}, {"snr10", 10.0}, {"snrm5", -5.0}};
        for (const auto& [tag, db] : snrs) {
            out.snr_db = db;
            out.emit(name + "_" + kind_name(kind) + "_" + tag, kind, lam,
                     add_awgn(clean, db, seed));
        }
    } else if (name == "fig6" || name == "fig8") {
        const bool wd_side = (name == "fig6");
        const Signal noisy = add_awgn(make_multicomponent(mono, h, n), 10.0, seed);
        out.snr_db = 10.0;
        out.emit(name + (wd_side ? "_wd" : "_af"),
                 wd_side ? TFKind::WD : TFKind::AF, std::nullopt, noisy);
        out.emit(name + (wd_side ? "_qwd" : "_qaf"),
                 wd_side ? TFKind::QWD : TFKind::QAF, ParamSet(0, -2, 1, 2, 1),
                 noisy);
        out.emit(name + (wd_side ? "_aqwd" : "_aqaf"),
                 wd_side ? TFKind::AQWD : TFKind::AQAF, ParamSet(1, -2, 1, 2, 1),
                 noisy);
    } else if (name == "fig11" || name == "fig12") {
        const bool wd_side = (name == "fig11");
        const Signal noisy = add_awgn(make_multicomponent(bi, h, n), 5.0, seed);
        out.snr_db = 5.0;
        out.emit(name + (wd_side ? "_wd" : "_af"),
                 wd_side ? TFKind::WD : TFKind::AF, std::nullopt, noisy);
        out.emit(name + (wd_side ? "_qwd" : "_qaf"),
                 wd_side ? TFKind::QWD : TFKind::QAF, ParamSet(0, -2, 1, 0, 1),
                 noisy);
        out.emit(name + (wd_side ? "_aqwd_a" : "_aqaf_a"),
                 wd_side ? TFKind::AQWD : TFKind::AQAF, ParamSet(-2, 1, 1, -2, 1),
                 noisy);
        out.emit(name + (wd_side ? "_aqwd_b" : "_aqaf_b"),
                 wd_side ? TFKind::AQWD : TFKind::AQAF, ParamSet(0, -2, 1, 0, 1),
                 noisy);
    } else if (name == "fig1-gaussian") {
        if (!lambda)
            throw CLI::ValidationError("--lambda",
                                       "fig1-gaussian needs an explicit tuple");
        const auto c = parse_reals(centers, 2, "--centers");
        const Signal f = make_gaussian_pair({c[0], c[1]}, h, n);
        out.emit("fig1_wd", TFKind::WD, std::nullopt, f);
        out.emit("fig1_aqwd", TFKind::AQWD, *lambda, f);
    } else {
        throw CLI::ValidationError("--name", "unknown figure recipe '" + name + "'");
    }

    write_sweep_csv(out.detections, joined(outdir, name + "_detect.csv"));
    for (const SweepRow& row : out.detections)
        print_report(std::cout, row.report);
    return 0;
}

int cmd_verify(bool all, std::vector<std::string>& names,
               const std::string& lambda_text, std::size_t n, double h,
               const std::string& out_path, const std::string& outdir) {
    std::vector<PropertyId> props;
    if (all) {
        props = all_properties();
    } else {
        for (const std::string& name : names) {
            const auto id = property_from_name(name);
            if (!id)
                throw CLI::ValidationError("--property",
                                           "unknown property '" + name + "'");
            props.push_back(*id);
        }
    }
    if (props.empty())
        throw CLI::ValidationError("verify", "give --all or --property");

    const ParamSet base = parse_lambda(lambda_text);
    std::vector<ResidualReport> reports;
    bool ok = true;
    for (PropertyId id : props) {
        const ResidualReport rep = verify_property(id, fixture_for(id, base, n, h));
        const double tol = shift_tolerance(id);
        const bool pass = rep.rel_error <= tol;
        ok = ok && pass;
        std::cout << property_name(id);
        const std::string variant = rep.best_variant();
        if (!variant.empty())
            std::cout << " [" << variant << "]";
        std::cout << " rel_error=" << format_double(rep.rel_error)
                  << " tol=" << format_double(tol) << (pass ? " ok" : " FAIL")
                  << '\n';
        reports.push_back(rep);
    }

    ensure_dir(outdir);
    write_residual_csv(reports, out_path.empty() ? joined(outdir, "residuals.csv")
                                                 : out_path);
    return ok ? 0 : 1;
}

} // namespace

int dispatch(int argc, const char* const* argv) {
    CLI::App app{"quadratic-phase time-frequency analysis toolkit"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "synthesize a signal CSV");
    SignalFlags gen_sf;
    add_signal_flags(gen, gen_sf);
    std::string gen_out;
    gen->add_option("--out", gen_out, "output CSV path");

    // transform
    auto* tra = app.add_subcommand("transform", "compute one distribution map");
    SignalFlags tra_sf;
    add_signal_flags(tra, tra_sf);
    std::string tra_kind, tra_lambda, tra_csv, tra_pgm;
    int tra_contour = 0;
    int tra_threads = 0;
    tra->add_option("--kind", tra_kind, "wd|af|qwd|qaf|aqwd|aqaf")->required();
    tra->add_option("--lambda", tra_lambda, "parameter tuple A,B,C,D,E");
    tra->add_option("--out-csv", tra_csv, "map CSV path");
    tra->add_option("--out-pgm", tra_pgm, "heatmap PGM path");
    tra->add_option("--contour", tra_contour, "posterize heatmap to k levels");
    tra->add_option("--threads", tra_threads, "worker threads (0 = auto)");

    // detect
    auto* det = app.add_subcommand("detect", "ridge detection and estimation");
    SignalFlags det_sf;
    add_signal_flags(det, det_sf);
    std::string det_kind, det_lambda, det_from, det_out;
    double det_threshold = 0.5;
    det->add_option("--kind", det_kind, "map kind to analyze");
    det->add_option("--lambda", det_lambda, "parameter tuple A,B,C,D,E");
    det->add_option("--from-csv", det_from, "analyze an existing map CSV");
    det->add_option("--threshold", det_threshold, "ridge gate fraction (0,1]");
    det->add_option("--out", det_out, "write the report as a CSV row");

    // verify
    auto* ver = app.add_subcommand("verify", "run property verifiers");
    bool ver_all = false;
    std::vector<std::string> ver_props;
    std::string ver_lambda = "1,-2,1,2,1";
    std::size_t ver_n = 1024;
    double ver_h = 20.0;
    std::string ver_out;
    ver->add_flag("--all", ver_all, "verify every property");
    ver->add_option("--property", ver_props, "property name (repeatable)");
    ver->add_option("--lambda", ver_lambda, "base parameter tuple");
    ver->add_option("--n", ver_n, "fixture sample count");
    ver->add_option("--half-support", ver_h, "fixture half support");
    ver->add_option("--out", ver_out, "residual CSV path");

    // sweep
    auto* swe = app.add_subcommand("sweep", "detection over snr x seed x kind");
    SignalFlags swe_sf;
    add_signal_flags(swe, swe_sf);
    std::string swe_kinds = "wd,qwd,aqwd", swe_lambda;
    std::string swe_snrs = "10,5,-5";
    std::string swe_seeds = "1:20";
    std::string swe_out;
    swe->add_option("--kinds", swe_kinds, "comma list of map kinds");
    swe->add_option("--lambda", swe_lambda, "parameter tuple A,B,C,D,E");
    swe->add_option("--snrs", swe_snrs, "comma list of SNR dB values (inf ok)");
    swe->add_option("--seeds", swe_seeds, "comma list or first:last range");
    swe->add_option("--out", swe_out, "sweep CSV path");

    // figure
    auto* fig = app.add_subcommand("figure", "run a named figure recipe");
    std::string fig_name, fig_lambda, fig_centers = "0,4";
    std::size_t fig_n = 1024;
    std::uint64_t fig_seed = 1;
    int fig_contour = 12;
    fig->add_option("--name", fig_name,
                    "fig5|fig6|fig7|fig8|fig11|fig12|fig1-gaussian")
        ->required();
    fig->add_option("--lambda", fig_lambda, "tuple for fig1-gaussian");
    fig->add_option("--centers", fig_centers, "gaussian centers for fig1");
    fig->add_option("--n", fig_n, "sample count (default 1024)");
    fig->add_option("--seed", fig_seed, "noise seed (default 1)");
    fig->add_option("--contour", fig_contour, "heatmap levels (default 12)");

    std::string outdir = default_outdir();
    app.add_option("--outdir", outdir, "output directory (env QPTF_OUTDIR)");
    for (CLI::App* sub : {gen, tra, det, ver, swe, fig})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            const Signal f = build_signal(gen_sf);
            ensure_dir(outdir);
            write_signal_csv(f, gen_out.empty() ? joined(outdir, "signal.csv")
                                                : gen_out);
            return 0;
        }

        if (tra->parsed()) {
            const auto kind = kind_from_name(tra_kind);
            if (!kind)
                throw CLI::ValidationError("--kind", "unknown kind '" + tra_kind + "'");
            std::optional<ParamSet> params;
            if (!tra_lambda.empty())
                params = parse_lambda(tra_lambda);
            if (kind_requires_params(*kind) != params.has_value())
                throw CLI::ValidationError(
                    "--lambda", "this kind " +
                                    std::string(params ? "takes no" : "needs a") +
                                    " parameter tuple");
            const Signal f = build_signal(tra_sf);
            const TFMap map = compute_tfd(*kind, params, f, tra_threads);
            ensure_dir(outdir);
            write_tfmap_csv(map, tra_csv.empty()
                                     ? joined(outdir, tra_kind + ".csv")
                                     : tra_csv);
            write_heatmap(map,
                          tra_pgm.empty() ? joined(outdir, tra_kind + ".pgm")
                                          : tra_pgm,
                          tra_contour);
            return 0;
        }

        if (det->parsed()) {
            DetectionReport rep;
            double snr_db = det_sf.snr_db;
            std::uint64_t seed = det_sf.seed;
            if (!det_from.empty()) {
                rep = detect_from_map(read_tfmap_csv(det_from), det_threshold);
            } else {
                const auto kind = kind_from_name(det_kind);
                if (!kind)
                    throw CLI::ValidationError("--kind",
                                               "unknown kind '" + det_kind + "'");
                std::optional<ParamSet> params;
                if (!det_lambda.empty())
                    params = parse_lambda(det_lambda);
                rep = run_detection(build_signal(det_sf), params, *kind,
                                    det_threshold);
            }
            print_report(std::cout, rep);
            if (!det_out.empty()) {
                SweepRow row;
                row.snr_db = snr_db;
                row.seed = seed;
                row.report = rep;
                ensure_dir(outdir);
                write_sweep_csv({row}, det_out);
            }
            return rep.detected ? 0 : 1;
        }

        if (ver->parsed())
            return cmd_verify(ver_all, ver_props, ver_lambda, ver_n, ver_h,
                              ver_out, outdir);

        if (swe->parsed()) {
            std::vector<TFKind> kinds;
            std::size_t start = 0;
            while (start <= swe_kinds.size()) {
                const std::size_t comma = swe_kinds.find(',', start);
                const std::string tok = swe_kinds.substr(
                    start, comma == std::string::npos ? comma : comma - start);
                const auto kind = kind_from_name(tok);
                if (!kind)
                    throw CLI::ValidationError("--kinds",
                                               "unknown kind '" + tok + "'");
                kinds.push_back(*kind);
                if (comma == std::string::npos)
                    break;
                start = comma + 1;
            }

            std::vector<double> snrs;
            for (std::size_t pos = 0; pos <= swe_snrs.size();) {
                const std::size_t comma = swe_snrs.find(',', pos);
                const std::string tok = swe_snrs.substr(
                    pos, comma == std::string::npos ? comma : comma - pos);
                snrs.push_back(tok == "inf" ? kInf
                                            : parse_reals(tok, 1, "--snrs")[0]);
                if (comma == std::string::npos)
                    break;
                pos = comma + 1;
            }

            std::vector<std::uint64_t> seeds;
            if (const std::size_t colon = swe_seeds.find(':');
                colon != std::string::npos) {
                const auto lo = static_cast<std::uint64_t>(
                    std::stoull(swe_seeds.substr(0, colon)));
                const auto hi = static_cast<std::uint64_t>(
                    std::stoull(swe_seeds.substr(colon + 1)));
                if (hi < lo)
                    throw CLI::ValidationError("--seeds", "range is reversed");
                for (std::uint64_t s = lo; s <= hi; ++s)
                    seeds.push_back(s);
            } else {
                for (std::size_t pos = 0; pos <= swe_seeds.size();) {
                    const std::size_t comma = swe_seeds.find(',', pos);
                    seeds.push_back(static_cast<std::uint64_t>(std::stoull(
                        swe_seeds.substr(pos, comma == std::string::npos
                                                  ? comma
                                                  : comma - pos))));
                    if (comma == std::string::npos)
                        break;
                    pos = comma + 1;
                }
            }

            std::optional<ParamSet> params;
            if (!swe_lambda.empty())
                params = parse_lambda(swe_lambda);

            SignalFlags clean = swe_sf;
            clean.snr_db = kInf; // noise comes from the sweep itself
            const auto rows =
                snr_sweep(build_signal(clean), params, kinds, snrs, seeds);
            ensure_dir(outdir);
            write_sweep_csv(rows, swe_out.empty() ? joined(outdir, "sweep.csv")
                                                  : swe_out);
            return 0;
        }

        if (fig->parsed()) {
            std::optional<ParamSet> lambda;
            if (!fig_lambda.empty())
                lambda = parse_lambda(fig_lambda);
            return cmd_figure(fig_name, lambda, fig_centers, fig_n, fig_seed,
                              fig_contour, outdir);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace qptf
