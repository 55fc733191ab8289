#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "wb/arith.hpp"
#include "wb/bilinear.hpp"
#include "wb/gpfscan.hpp"
#include "wb/harman.hpp"
#include "wb/hyperbola.hpp"
#include "wb/rational.hpp"
#include "wb/sieve.hpp"
#include "wb/verify.hpp"

namespace {

// theta accepted as a fraction string ("7/32") or a decimal
double parse_theta(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return std::stod(s);
    double num = std::stod(s.substr(0, slash));
    double den = std::stod(s.substr(slash + 1));
    if (den == 0) throw CLI::ValidationError("theta", "zero denominator");
    return num / den;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

std::string f10(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerics workbench for Kloosterman sums, modular hyperbolas, "
                 "sieve functions, and the Harman exponent pipeline"};
    app.set_config("--config", "", "plain key=value config file; flags override");
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker cap (0 = available parallelism)");

    std::string out_path;

    // kloosterman m n c
    long long km = 0, kn = 0;
    unsigned long long kc = 1;
    auto* sc_k = app.add_subcommand("kloosterman", "S(m, n; c) with the Weil-Ramanujan bound");
    sc_k->add_option("m", km)->required();
    sc_k->add_option("n", kn)->required();
    sc_k->add_option("c", kc)->required();

    // tvalue M N alpha beta
    double tM = 1, tN = 1, ta = 0, tb = 0;
    auto* sc_t = app.add_subcommand("tvalue", "minimize t + M||alpha t|| + N||beta t||");
    sc_t->add_option("M", tM)->required();
    sc_t->add_option("N", tN)->required();
    sc_t->add_option("alpha", ta)->required();
    sc_t->add_option("beta", tb)->required();

    // hyperbola c lambda x_start x_len y_start y_len
    unsigned long long hc = 1, hl = 0;
    long long hxs = 0, hxl = 0, hys = 0, hyl = 0;
    double halpha = -1, hbeta = -1;
    bool have_alpha = false, have_beta = false;
    auto* sc_h = app.add_subcommand("hyperbola", "count points on xy = lambda (mod c) in a box");
    sc_h->add_option("c", hc)->required();
    sc_h->add_option("lambda", hl)->required();
    sc_h->add_option("x_start", hxs)->required();
    sc_h->add_option("x_len", hxl)->required();
    sc_h->add_option("y_start", hys)->required();
    sc_h->add_option("y_len", hyl)->required();
    sc_h->add_option("--alpha", halpha)->each([&](const std::string&) { have_alpha = true; });
    sc_h->add_option("--beta", hbeta)->each([&](const std::string&) { have_beta = true; });

    // bilinear
    unsigned long long bc = 1, bscalar = 1;
    double balpha = 0, bbeta = 0;
    long long bmlo = 1, bmlen = 8, bnlo = 1, bnlen = 8;
    auto* sc_b = app.add_subcommand("bilinear",
                                    "phase-sequence bilinear Kloosterman form, both routes");
    sc_b->add_option("c", bc)->required();
    sc_b->add_option("--scalar", bscalar);
    sc_b->add_option("--alpha", balpha);
    sc_b->add_option("--beta", bbeta);
    sc_b->add_option("--mlo", bmlo);
    sc_b->add_option("--mlen", bmlen);
    sc_b->add_option("--nlo", bnlo);
    sc_b->add_option("--nlen", bnlen);

    // dispersion H L ell1 ell2 a1 a2
    double dH = 16, dL = 16, da1 = 0, da2 = 0;
    unsigned long long de1 = 17, de2 = 16, dgrid = 0;
    auto* sc_d = app.add_subcommand("dispersion", "dispersion sequence Fourier profile");
    sc_d->add_option("H", dH)->required();
    sc_d->add_option("L", dL)->required();
    sc_d->add_option("ell1", de1)->required();
    sc_d->add_option("ell2", de2)->required();
    sc_d->add_option("a1", da1)->required();
    sc_d->add_option("a2", da2)->required();
    sc_d->add_option("--grid", dgrid, "grid size (power of two; default auto)");
    sc_d->add_option("--out", out_path);

    // sieve-table step umax
    double sstep = 1e-4, sumax = 10;
    unsigned long long sstride = 100;
    auto* sc_s = app.add_subcommand("sieve-table", "Buchstab omega and linear-sieve F, f");
    sc_s->add_option("step", sstep)->required();
    sc_s->add_option("umax", sumax)->required();
    sc_s->add_option("--stride", sstride, "emit every k-th node");
    sc_s->add_option("--out", out_path);

    // harman
    std::string theta_str = "7/32";
    unsigned long long hsamples = 10000000, hseed = 1;
    int hstrata = 64;
    auto* sc_hr = app.add_subcommand("harman", "G1..G6, deficit, budget, omega_bar");
    sc_hr->add_option("--theta", theta_str, "fraction (7/32) or decimal");
    sc_hr->add_option("--samples", hsamples);
    sc_hr->add_option("--seed", hseed);
    sc_hr->add_option("--strata", hstrata);
    sc_hr->add_option("--out", out_path);

    // fig2
    std::string f2_theta = "7/32";
    double f2step = 0.005;
    auto* sc_f2 = app.add_subcommand("fig2", "Type I / Type II boundary curves");
    sc_f2->add_option("--theta", f2_theta);
    sc_f2->add_option("--step", f2step);
    sc_f2->add_option("--out", out_path);

    // gpf-scan lo hi
    unsigned long long glo = 1, ghi = 100;
    std::string gsummary;
    auto* sc_g = app.add_subcommand("gpf-scan", "greatest prime factors of n^2+1");
    sc_g->add_option("lo", glo)->required();
    sc_g->add_option("hi", ghi)->required();
    sc_g->add_option("--out", out_path, "CSV path (default stdout)");
    sc_g->add_option("--summary", gsummary, "also write summary JSON here");

    // verify
    unsigned long long vsamples = 10000000, vseed = 1;
    bool vquick = false;
    auto* sc_v = app.add_subcommand("verify", "run every property suite");
    sc_v->add_option("--samples", vsamples);
    sc_v->add_option("--seed", vseed);
    sc_v->add_flag("--quick", vquick, "reduced scales");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sc_k) {
            wb::Modulus c(kc);
            wb::WeilMargin wm = wb::weil_bound_margin(km, kn, c);
            double s = wb::kloosterman_sum(km, kn, c);
            std::cout << "S(" << km << "," << kn << ";" << kc << ") = " << f10(s)
                      << "\nweil_bound = " << f10(wm.bound)
                      << "\n|S|/bound = " << f10(wm.abs_s / wm.bound) << "\n";
        } else if (*sc_t) {
            wb::ApproxResult r = wb::t_value(wb::ApproxTarget(tM, tN, ta, tb));
            std::cout << "t_star = " << r.t_star << "\nvalue = " << f10(r.value)
                      << "\nalpha_dist = " << f10(r.alpha_dist)
                      << "\nbeta_dist = " << f10(r.beta_dist) << "\n";
        } else if (*sc_h) {
            wb::Modulus c(hc);
            wb::Box box{hxs, hxl, hys, hyl};
            wb::u64 cnt = wb::count_points(c, hl, box);
            wb::CgBound cg = wb::cg_bound(c, hl, box,
                                          have_alpha ? std::optional<double>(halpha)
                                                     : std::nullopt,
                                          have_beta ? std::optional<double>(hbeta)
                                                    : std::nullopt);
            std::cout << "count = " << cnt << "\nT_term = " << f10(cg.t_term)
                      << "\ngcd_term = " << f10(cg.gcd_term) << "\nt_star = " << cg.t.t_star
                      << "\n";
        } else if (*sc_b) {
            wb::Modulus c(bc);
            wb::WindowedSequence a = wb::phase_sequence(balpha, bmlo, bmlen);
            wb::WindowedSequence b = wb::phase_sequence(bbeta, bnlo, bnlen);
            wb::cdouble direct = wb::bilinear_form_direct(a, b, bscalar, c);
            wb::cdouble dual = wb::bilinear_form_dual(a, b, bscalar, c);
            double ratio = wb::bound_ratio_prop35(balpha, bmlo, bmlen, bbeta, bnlo, bnlen,
                                                  bscalar, c);
            std::cout << "direct = " << f10(direct.real()) << " + " << f10(direct.imag())
                      << "i\ndual = " << f10(dual.real()) << " + " << f10(dual.imag())
                      << "i\nbound_ratio = " << f10(ratio) << "\n";
        } else if (*sc_d) {
            wb::DispersionSequence d(dH, dL, de1, de2, da1, da2,
                                     wb::SmoothWindow::bump(3.0, 2.5),
                                     wb::SmoothWindow::bump(3.0, 2.5));
            wb::WindowedSequence s = wb::dispersion_values(d);
            wb::u64 grid = dgrid;
            if (grid == 0) {
                grid = 1;
                while (grid < 2 * s.values.size()) grid <<= 1;
            }
            wb::FourierProfile p = wb::fourier_profile(s, grid, &d);
            std::ofstream file;
            std::ostream& os = open_out(file, out_path);
            os << "l1_norm = " << f10(p.l1_norm) << "\nl2_norm = " << f10(p.l2_norm)
               << "\ninside_mass = " << f10(p.inside_mass)
               << "\noutside_mass = " << f10(p.outside_mass)
               << "\noutside_fraction = "
               << f10(p.total_mass > 0 ? p.outside_mass / p.total_mass : 0.0) << "\n";
        } else if (*sc_s) {
            wb::SieveTable tab(sstep, sumax);
            std::ofstream file;
            std::ostream& os = open_out(file, out_path);
            tab.to_csv(os, sstride);
        } else if (*sc_hr) {
            wb::SieveTable tab(1e-4, 24.0);
            wb::HarmanConfig cfg;
            cfg.theta = parse_theta(theta_str);
            cfg.mc_samples = hsamples;
            cfg.seed = hseed;
            cfg.strata = hstrata;
            wb::HarmanReport rep = wb::harman_report(tab, cfg);
            std::ofstream file;
            std::ostream& os = open_out(file, out_path);
            wb::report_to_json(rep, os);
        } else if (*sc_f2) {
            std::ofstream file;
            std::ostream& os = open_out(file, out_path);
            wb::fig2_boundaries(parse_theta(f2_theta), 1.0, 1.4, f2step, os);
        } else if (*sc_g) {
            wb::ScanSummary s = wb::scan(glo, ghi,
                                         threads > 0 ? threads
                                                     : int(std::thread::hardware_concurrency()));
            std::ofstream file;
            std::ostream& os = open_out(file, out_path);
            wb::scan_to_csv(s, os);
            if (!gsummary.empty()) {
                std::ofstream js(gsummary);
                wb::scan_summary_json(s, js);
            }
        } else if (*sc_v) {
            wb::VerifyOptions opt;
            opt.harman_samples = vsamples;
            opt.seed = vseed;
            opt.quick = vquick;
            wb::Verifier v(opt);
            bool all = true;
            auto run = [&](const std::vector<wb::CheckResult>& rs) {
                for (const auto& r : rs) {
                    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
                    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
                    std::cout << "\n";
                    all = all && r.pass;
                }
            };
            for (int k = 1; k <= 11; ++k) run(v.criterion(k));
            run(v.properties());
            if (!all) return 2;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
