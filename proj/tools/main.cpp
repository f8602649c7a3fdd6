// heckezeta: Selberg zeta functions of infinite-area Hecke triangle surfaces
// via transfer-operator determinants, periodic-orbit products and resonance
// scans. Subcommands: eval, scan, delta, orbits, spectrum, check, residue-rank.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hzeta/io.hpp"
#include "hzeta/parallel.hpp"
#include "hzeta/resonances.hpp"
#include "hzeta/zeta.hpp"

using namespace hzeta;

namespace {

// exit codes: 0 ok, 1 config, 2 numerical precondition, 3 check failure
constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kNumericalError = 2;
constexpr int kCheckFailure = 3;

Complex parse_complex(const std::string& text) {
    // forms: "a", "a+bi", "a-bi" (no spaces)
    std::string t = text;
    if (!t.empty() && (t.back() == 'i' || t.back() == 'I')) {
        t.pop_back();
        std::size_t split = std::string::npos;
        for (std::size_t k = 1; k < t.size(); ++k) {
            if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E')
                split = k;
        }
        if (split == std::string::npos)
            throw ConfigError("cannot parse complex number '" + text + "'");
        double re = std::stod(t.substr(0, split));
        std::string imtxt = t.substr(split);
        double im = imtxt == "+" ? 1.0 : imtxt == "-" ? -1.0 : std::stod(imtxt);
        return Complex(re, im);
    }
    return Complex(std::stod(t), 0.0);
}

std::pair<double, double> parse_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ConfigError("range must be lo:hi, got '" + text + "'");
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
}

// value +/- error with no more digits than the estimate supports
std::string fmt_result(const Complex& v, double err) {
    int digits = 17;
    if (err > 0.0) {
        digits = std::max(1, std::min(17, int(std::floor(-std::log10(err))) + 1));
    }
    char buf[96];
    if (std::fabs(v.imag()) < 1e-300) {
        std::snprintf(buf, sizeof(buf), "%.*g", digits, v.real());
    } else {
        std::snprintf(buf, sizeof(buf), "%.*g%+.*gi", digits, v.real(), digits, v.imag());
    }
    std::string out(buf);
    char ebuf[32];
    std::snprintf(ebuf, sizeof(ebuf), "%.2g", err);
    out += " +/- ";
    out += ebuf;
    return out;
}

struct Options {
    double lambda = 3.0;
    std::string s_text = "2";
    int basis = 32;
    int max_word_len = 12;
    int k_max = 25;
    std::string method = "auto";
    double tol = 1e-9;
    int threads = 0;
    std::string out_path;
    std::string config_path;

    ParabolicMethod parabolic_method() const {
        if (method == "direct") return ParabolicMethod::Direct;
        if (method == "continued") return ParabolicMethod::Continued;
        if (method == "auto") return ParabolicMethod::Auto;
        throw ConfigError("method must be direct, continued or auto");
    }
    SurfaceParams params() const { return SurfaceParams(lambda); }
    void validate() const {
        if (!(lambda > 2.0)) throw ConfigError("lambda must exceed 2");
        if (lambda < 2.05)
            std::cerr << "warning: disc radii grow like 1/(lambda-2); lambda = " << lambda
                      << " is close to the degenerate limit\n";
        if (basis < 4 || basis > 256) throw ConfigError("basis must lie in [4, 256]");
    }
};

void load_config(Options& opt) {
    if (opt.config_path.empty()) return;
    std::ifstream in(opt.config_path);
    if (!in) throw ConfigError("cannot read config file '" + opt.config_path + "'");
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string v) {
            v.erase(0, v.find_first_not_of(" \t"));
            auto e = v.find_last_not_of(" \t\r");
            v.erase(e == std::string::npos ? 0 : e + 1);
            return v;
        };
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "lambda") opt.lambda = std::stod(val);
        else if (key == "s") opt.s_text = val;
        else if (key == "basis") opt.basis = std::stoi(val);
        else if (key == "max_word_len") opt.max_word_len = std::stoi(val);
        else if (key == "k_max") opt.k_max = std::stoi(val);
        else if (key == "method") opt.method = val;
        else if (key == "tol") opt.tol = std::stod(val);
        else if (key == "threads") opt.threads = std::stoi(val);
        else if (key == "out") opt.out_path = val;
        else throw ConfigError("unknown config key '" + key + "'");
    }
}

SystemKind parse_system(const std::string& name) {
    if (name == "I") return SystemKind::I;
    if (name == "IJ+" || name == "IJplus") return SystemKind::IJplus;
    if (name == "IJ-" || name == "IJminus") return SystemKind::IJminus;
    if (name == "R") return SystemKind::R;
    if (name == "P") return SystemKind::P;
    throw ConfigError("unknown system '" + name + "' (expected P, R, I, IJ+ or IJ-)");
}

int run_checks(const std::string& which, const Options& opt, int n_max_inclusions);

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Selberg zeta function of infinite-area Hecke triangle surfaces"};
    app.require_subcommand(1);
    Options opt;

    app.add_option("--config", opt.config_path, "optional key = value config file");
    app.add_option("--lambda", opt.lambda, "Hecke parameter, lambda > 2");
    app.add_option("--basis", opt.basis, "per-disc basis size N (default 32)");
    app.add_option("--method", opt.method, "direct | continued | auto");
    app.add_option("--tol", opt.tol, "tolerance for iterative solvers");
    app.add_option("--threads", opt.threads, "worker threads (0 = all)");
    app.add_option("--max-word-len", opt.max_word_len, "word-length cap for orbit sums");
    app.add_option("--k-max", opt.k_max, "k truncation of the Euler products");
    app.add_option("--out", opt.out_path, "output CSV path");

    std::string which_str = "Z";
    auto* eval = app.add_subcommand("eval", "evaluate Z, Z+ or Z- at one point");
    eval->add_option("--s", opt.s_text, "spectral parameter, a+bi with no spaces");
    eval->add_option("--which", which_str, "Z | Z+ | Z-");

    double step = 0.05;
    auto* scan = app.add_subcommand("scan", "grid scan of Z over a rectangle");
    std::string re_range = "0.4:1.2", im_range = "-2:2";
    scan->add_option("--re", re_range, "real range lo:hi");
    scan->add_option("--im", im_range, "imag range lo:hi");
    scan->add_option("--step", step, "grid step");

    auto* delta_cmd = app.add_subcommand("delta", "locate the leading zero delta");

    std::string system_str = "I";
    double bound = 60.0;
    auto* orbits = app.add_subcommand("orbits", "enumerate periodic orbit classes to CSV");
    orbits->add_option("--system", system_str, "P | R | I | IJ+ | IJ-");
    orbits->add_option("--bound", bound, "norm bound");

    auto* spectrum = app.add_subcommand("spectrum", "primitive length spectrum to CSV");
    spectrum->add_option("--system", system_str, "P | R | I | IJ+ | IJ-");
    spectrum->add_option("--bound", bound, "norm bound");

    std::string check_which;
    int n_max_inclusions = 50;
    auto* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("suite", check_which, "inclusions | euler | traces | factorization")
        ->required();
    check->add_option("--n-max", n_max_inclusions, "parabolic depth for inclusions");

    std::string s0_text = "0.5";
    auto* rrank = app.add_subcommand("residue-rank", "residue rank at a continuation pole");
    rrank->add_option("--s0", s0_text, "pole (1-k)/2");

    auto* zeros = app.add_subcommand("zeros", "argument-principle zero search in a box");
    std::string zre = "0.0:0.45", zim = "0.1:2";
    zeros->add_option("--re", zre, "real range lo:hi");
    zeros->add_option("--im", zim, "imag range lo:hi");

    CLI11_PARSE(app, argc, argv);

    try {
        load_config(opt);
        opt.validate();
        SurfaceParams params = opt.params();

        if (eval->parsed()) {
            Complex s = parse_complex(opt.s_text);
            ZetaWhich w = which_str == "Z+" ? ZetaWhich::Zplus
                          : which_str == "Z-" ? ZetaWhich::Zminus
                                              : ZetaWhich::Z;
            if (which_str != "Z" && which_str != "Z+" && which_str != "Z-")
                throw ConfigError("--which must be Z, Z+ or Z-");
            ZetaValue v = zeta_operator(params, s, opt.basis, w, opt.parabolic_method());
            std::cout << which_str << "(" << opt.s_text << "; lambda=" << opt.lambda
                      << ") = " << fmt_result(v.value, v.error_estimate) << "\n";
        } else if (scan->parsed()) {
            auto [re_lo, re_hi] = parse_range(re_range);
            auto [im_lo, im_hi] = parse_range(im_range);
            GridResult g = scan_grid(params, Box{re_lo, re_hi, im_lo, im_hi}, step,
                                     opt.basis, opt.threads);
            if (opt.out_path.empty()) throw ConfigError("scan requires --out");
            write_grid_csv(opt.out_path, g);
            std::cout << "wrote " << g.points.size() << " grid points (" << g.n_re << " x "
                      << g.n_im << ") to " << opt.out_path << "\n";
        } else if (delta_cmd->parsed()) {
            DeltaResult d = find_delta(params, opt.basis, opt.tol);
            std::cout << "delta(lambda=" << opt.lambda << ") = "
                      << fmt_result(Complex(d.delta, 0.0), opt.tol)
                      << "  |lambda_max-1| = " << d.lambda_max_residual
                      << "  |Z(delta)| = " << d.z_abs << "\n";
        } else if (orbits->parsed() || spectrum->parsed()) {
            if (opt.out_path.empty()) throw ConfigError("orbit output requires --out");
            auto sys = build_system(parse_system(system_str), params);
            if (orbits->parsed()) {
                auto classes = periodic_classes(sys, opt.max_word_len, bound);
                write_orbits_csv(opt.out_path, sys, classes);
                std::cout << "wrote " << classes.size() << " classes to " << opt.out_path
                          << "\n";
            } else {
                auto lines = length_spectrum(sys, bound, opt.max_word_len);
                write_spectrum_csv(opt.out_path, lines);
                std::cout << "wrote " << lines.size() << " spectrum lines to "
                          << opt.out_path << "\n";
            }
        } else if (check->parsed()) {
            return run_checks(check_which, opt, n_max_inclusions);
        } else if (rrank->parsed()) {
            Complex s0 = parse_complex(s0_text);
            auto rep = residue_rank(params, s0, opt.basis);
            std::cout << "residue rank at s0 = " << s0.real() << ": strand a = "
                      << rep.rank_strand_a << ", strand b = " << rep.rank_strand_b
                      << ", total = " << rep.total << " (paper bound 2)\n";
            std::cout << "  leading singular values:";
            for (double sv : rep.singular_values) std::cout << " " << fmt_double(sv);
            std::cout << "\n";
        } else if (zeros->parsed()) {
            auto [rl, rh] = parse_range(zre);
            auto [il, ih] = parse_range(zim);
            auto zs = locate_zeros(params, Box{rl, rh, il, ih}, opt.basis);
            if (!opt.out_path.empty()) write_zeros_csv(opt.out_path, zs);
            std::cout << zs.size() << " zeros\n";
            for (const auto& z : zs)
                std::cout << "  " << fmt_double(z.s.real()) << " + " << fmt_double(z.s.imag())
                          << "i  (residual " << z.residual << ")\n";
        }
        return kOk;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const InvalidLambda& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const Error& e) {
        std::cerr << "numerical precondition failed: " << e.what() << "\n";
        return kNumericalError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    }
}

namespace {

int run_checks(const std::string& which, const Options& opt, int n_max_inclusions) {
    SurfaceParams params = opt.params();
    bool ok = true;
    auto report = [&](const std::string& name, bool good, const std::string& detail) {
        std::cout << (good ? "ok   " : "FAIL ") << name;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
        ok = ok && good;
    };

    if (which == "inclusions") {
        auto rep = inclusion_report(params, n_max_inclusions);
        for (const auto& c : rep.conditions)
            report(c.name, c.ok(), "margin " + fmt_double(c.margin));
    } else if (which == "euler") {
        for (double sr : {3.0, 4.0}) {
            ZetaValue zo = zeta_operator(params, Complex(sr, 0), opt.basis, ZetaWhich::Z,
                                         opt.parabolic_method());
            ZetaValue ze = zeta_euler(params, Complex(sr, 0), ZetaWhich::Z,
                                      opt.max_word_len + 2, opt.k_max);
            double diff = std::abs(zo.value - ze.value);
            report("operator vs euler at s = " + fmt_double(sr), diff < 1e-6,
                   "diff " + fmt_double(diff));
        }
        auto ts = trace_series(params, Complex(3.0, 0), opt.basis, 20);
        ZetaValue zo = zeta_operator(params, Complex(3.0, 0), opt.basis, ZetaWhich::Z);
        double d1 = std::abs(ts.matrix_path.value - zo.value);
        double d2 = std::abs(ts.orbit_path.value - zo.value);
        report("trace series vs determinant at s = 3", d1 < 1e-6 && d2 < 1e-6,
               "diffs " + fmt_double(d1) + ", " + fmt_double(d2));
    } else if (which == "traces") {
        Complex s(2.0, 0.0);
        auto sysP = build_system(SystemKind::IJplus, params);
        auto sysM = build_system(SystemKind::IJminus, params);
        auto sysI = build_system(SystemKind::I, params);
        OperatorMatrix mp = assemble_pm(params, s, opt.basis, +1, opt.parabolic_method());
        OperatorMatrix mm = assemble_pm(params, s, opt.basis, -1, opt.parabolic_method());
        for (int n = 1; n <= 4; ++n) {
            double dp = std::abs(mp.trace_power(n) - orbit_trace_sum(sysP, n, s));
            double dm = std::abs(mm.trace_power(n) - orbit_trace_sum(sysM, n, s));
            double df = std::abs(mp.trace_power(n) + mm.trace_power(n) -
                                 orbit_trace_sum(sysI, n, s));
            report("Tr L^" + std::to_string(n) + " vs orbit sums",
                   dp < 1e-7 && dm < 1e-7 && df < 1e-7,
                   "diffs " + fmt_double(dp) + ", " + fmt_double(dm) + ", " + fmt_double(df));
        }
    } else if (which == "factorization") {
        for (double sr : {2.5, 3.0, 4.0}) {
            Complex s(sr, 0.0);
            double cap = 4000.0;
            ZetaValue z = zeta_euler(params, s, ZetaWhich::Z, 16, opt.k_max, cap);
            ZetaValue zp =
                zeta_euler(params, s, ZetaWhich::Zplus, 8, opt.k_max, cap, std::sqrt(cap));
            ZetaValue zm =
                zeta_euler(params, s, ZetaWhich::Zminus, 8, opt.k_max, cap, std::sqrt(cap));
            double diff = std::abs(z.value - zp.value * zm.value);
            report("Z = Z+ Z- at s = " + fmt_double(sr), diff < 1e-8,
                   "diff " + fmt_double(diff));
        }
    } else {
        throw ConfigError("unknown check '" + which +
                          "' (expected inclusions, euler, traces or factorization)");
    }
    return ok ? kOk : kCheckFailure;
}

} // namespace
