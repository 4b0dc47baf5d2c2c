#include "CLI11.hpp"
#include "json.hpp"

#include "rs/coset.hpp"
#include "rs/csvio.hpp"
#include "rs/eisenstein.hpp"
#include "rs/formdata.hpp"
#include "rs/gammafn.hpp"
#include "rs/iwasawa.hpp"
#include "rs/lseries.hpp"
#include "rs/minors.hpp"
#include "rs/parallel.hpp"
#include "rs/psi.hpp"
#include "rs/rng.hpp"
#include "rs/sieve.hpp"
#include "rs/spectral.hpp"
#include "rs/theta.hpp"
#include "rs/wedge.hpp"
#include "rs/whittaker.hpp"
#include "rs/zetafn.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

using rs::cplx;

struct OutputSink {
    std::string path = "-";
    std::string format = "csv";

    std::unique_ptr<std::ofstream> file;
    std::ostream& stream() {
        if (path == "-") return std::cout;
        if (!file) {
            file = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file) throw rs::domain_error("cannot open output file: " + path);
        }
        return *file;
    }

    // flat record: one header row and one value row, or a json object
    void record(const std::vector<std::pair<std::string, std::string>>& kv) {
        std::ostream& os = stream();
        if (format == "json") {
            nlohmann::json j = nlohmann::json::object();
            for (const auto& [k, v] : kv) j[k] = v;
            os << j.dump(2) << "\n";
        } else {
            std::vector<std::string> head, vals;
            for (const auto& [k, v] : kv) {
                head.push_back(k);
                vals.push_back(v);
            }
            rs::write_csv_row(os, head);
            rs::write_csv_row(os, vals);
        }
    }

    void table(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
        std::ostream& os = stream();
        if (format == "json") {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& row : rows) {
                nlohmann::json j = nlohmann::json::object();
                for (size_t i = 0; i < header.size(); ++i) j[header[i]] = row[i];
                arr.push_back(j);
            }
            os << arr.dump(2) << "\n";
        } else {
            rs::write_csv_row(os, header);
            for (const auto& row : rows) rs::write_csv_row(os, row);
        }
    }
};

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

std::vector<cplx> parse_complex_list(const std::string& text) {
    std::vector<cplx> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(rs::parse_complex(item));
    return out;
}

rs::Mat<double> parse_matrix(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line, ';'))
        if (!line.empty()) rows.push_back(parse_double_list(line));
    if (rows.empty()) throw rs::domain_error("empty matrix literal");
    rs::Mat<double> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw rs::domain_error("ragged matrix literal");
        for (size_t j = 0; j < rows[i].size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
    return m;
}

rs::Mat<int64_t> parse_int_matrix(const std::string& text) {
    rs::Mat<double> d = parse_matrix(text);
    rs::Mat<int64_t> m(d.rows, d.cols);
    for (size_t i = 0; i < d.a.size(); ++i) {
        m.a[i] = static_cast<int64_t>(std::llround(d.a[i]));
        if (std::abs(d.a[i] - static_cast<double>(m.a[i])) > 1e-9)
            throw rs::domain_error("matrix entries must be integers");
    }
    return m;
}

rs::IwasawaCoords coords_from_lists(int k, const std::string& ys, const std::string& xs) {
    std::vector<double> y = parse_double_list(ys);
    if (static_cast<int>(y.size()) != k - 1)
        throw rs::domain_error("need k-1 ratio entries");
    std::vector<double> x(static_cast<size_t>(k) * (k - 1) / 2, 0.0);
    if (!xs.empty()) {
        x = parse_double_list(xs);
        if (x.size() != static_cast<size_t>(k) * (k - 1) / 2)
            throw rs::domain_error("need k(k-1)/2 shear entries");
    }
    return rs::IwasawaCoords(k, std::move(x), std::move(y));
}

rs::CuspFormData form_from_cli(const std::string& file, const std::string& theta, int gl) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw rs::domain_error("cannot open form file: " + file);
        std::stringstream buf;
        buf << in.rdbuf();
        return rs::form_from_json(buf.str());
    }
    if (!theta.empty()) {
        std::vector<double> th = parse_double_list(theta);
        if (gl == 0) gl = static_cast<int>(th.size());
        return rs::make_isobaric_form(gl, th);
    }
    return rs::zeta_form();
}

std::string fd(double v) { return rs::format_double(v); }
std::string fc(cplx v) { return rs::format_complex(v); }

// quick invariant suites for `verify`
struct Check {
    std::string name;
    std::function<bool()> run;
};

std::vector<Check> make_checks() {
    using namespace rs;
    std::vector<Check> checks;

    checks.push_back({"iwasawa-roundtrip", [] {
        SplitMix64 g(11);
        for (int rep = 0; rep < 20; ++rep) {
            int k = 2 + static_cast<int>(g.uniform_int(0, 3));
            Mat<double> m(k, k);
            for (auto& v : m.a) v = g.uniform(-2.0, 2.0);
            if (std::abs(static_cast<double>(det_real(m))) < 0.05) continue;
            if (iwasawa_recompose_residual(m) > 1e-9) return false;
        }
        return true;
    }});
    checks.push_back({"shifted-exponents", [] {
        SplitMix64 g(12);
        for (int rep = 0; rep < 10; ++rep) {
            int n = 2 + static_cast<int>(g.uniform_int(0, 3));
            SpectralParams p{n, {}};
            for (int i = 0; i + 1 < n; ++i) p.nu.emplace_back(g.uniform(0.1, 1.0), g.uniform(-1.0, 1.0));
            std::vector<cplx> a = langlands_params(p);
            cplx sum = 0.0;
            for (cplx v : a) sum += v;
            if (std::abs(sum) > 1e-10) return false;
            SpectralParams q = langlands_inverse(n, a);
            for (int i = 0; i + 1 < n; ++i)
                if (std::abs(q.nu[i] - p.nu[i]) > 1e-10) return false;
        }
        return true;
    }});
    checks.push_back({"wedge-closed-form", [] {
        SplitMix64 g(13);
        IwasawaCoords z(5, std::vector<double>(10, 0.0), {1.3, 0.8, 1.7, 1.1});
        for (auto& v : z.x) v = g.uniform(-1.0, 1.0);
        for (int i = 1; i < 5; ++i) {
            double a = wedge_norm_sq(z, i), b = wedge_norm_closed_form(z, i);
            if (std::abs(a - b) > 1e-9 * std::abs(b)) return false;
        }
        return true;
    }});
    checks.push_back({"minor-square-identity", [] {
        SplitMix64 g(14);
        for (int rep = 0; rep < 20; ++rep) {
            Mat<bigint> m(3, 5);
            for (auto& v : m.a) v = bigint(g.uniform_int(-3, 3));
            bigint sum = 0;
            for (const bigint& d : bottom_minors(m, 3)) sum += d * d;
            Mat<bigint> gram = m * m.transpose();
            if (det_bareiss(gram) != sum) return false;
        }
        return true;
    }});
    checks.push_back({"coset-key-oracle", [] {
        auto pool = random_sl_pool(3, 24, 77);
        for (size_t i = 0; i < pool.size(); ++i)
            for (size_t j = i + 1; j < pool.size(); j += 3)
                if (same_coset(pool[i], pool[j], 1) != same_coset_oracle(pool[i], pool[j], 1))
                    return false;
        return true;
    }});
    checks.push_back({"block-completion", [] {
        SplitMix64 g(15);
        for (int rep = 0; rep < 30; ++rep) {
            Mat<int64_t> r(2, 4);
            for (auto& v : r.a) v = g.uniform_int(-4, 4);
            if (!bottom_block_primitive(r)) continue;
            Mat<int64_t> a = complete_bottom_block(r);
            if (det_bareiss(mat_int_to_big(a)) != 1) return false;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 4; ++j)
                    if (a(2 + i, j) != r(i, j)) return false;
        }
        return true;
    }});
    checks.push_back({"theta-reflection", [] {
        IwasawaCoords z(4, std::vector<double>(6, 0.1), {1.2, 0.9, 1.4});
        ThetaContext c = make_theta_context(z);
        ThetaContext d = make_theta_context(theta_dual_coords(z));
        for (double u : {0.9, 1.0, 1.25}) {
            double lhs = theta_value(c, u);
            double rhs = std::pow(u, -2.0) * theta_value(d, 1.0 / u);
            if (std::abs(lhs - rhs) > 1e-10 * std::abs(rhs)) return false;
        }
        return true;
    }});
    checks.push_back({"series-real-on-real", [] {
        IwasawaCoords z(4, std::vector<double>(6, 0.0), {1.1, 1.3, 0.8});
        cplx e = eisenstein_completed(z, cplx(0.7, 0.0));
        return std::abs(e.imag()) < 1e-9 * std::max(1.0, std::abs(e.real()));
    }});
    checks.push_back({"gamma-identities", [] {
        SplitMix64 g(16);
        for (int rep = 0; rep < 20; ++rep) {
            cplx z(g.uniform(0.2, 2.0), g.uniform(-3.0, 3.0));
            cplx refl = gamma_complex(z) * gamma_complex(1.0 - z);
            cplx target = PI / std::exp(log_sin_pi(z));
            if (std::abs(refl - target) > 1e-10 * std::abs(target)) return false;
            cplx lhs = gamma_complex(z) * gamma_complex(z + 0.5);
            cplx rhs = std::exp((1.0 - 2.0 * z) * std::log(2.0)) * std::sqrt(PI) * gamma_complex(2.0 * z);
            if (std::abs(lhs - rhs) > 1e-9 * std::abs(rhs)) return false;
        }
        return true;
    }});
    checks.push_back({"zeta-values", [] {
        if (std::abs(zeta(cplx(2.0, 0.0)) - PI * PI / 6.0) > 1e-12) return false;
        if (std::abs(zeta(cplx(-1.0, 0.0)) - cplx(-1.0 / 12.0)) > 1e-12) return false;
        if (std::abs(zeta(cplx(4.0, 0.0)) - std::pow(PI, 4) / 90.0) > 1e-12) return false;
        return true;
    }});
    checks.push_back({"eta-multiplicative", [] {
        cplx s(0.0, 1.3);
        cplx lhs = eta_sum(6, s), rhs = eta_sum(2, s) * eta_sum(3, s);
        return std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs);
    }});
    checks.push_back({"square-coefficients", [] {
        CuspFormData f = make_isobaric_form(2, {0.7, -0.7});
        std::vector<double> lam = rs_coefficients(f, 2000);
        for (double v : lam)
            if (v < -1e-10) return false;
        // multiplicativity spot check
        return std::abs(lam[5] - lam[1] * lam[2]) < 1e-10;
    }});
    checks.push_back({"scattering-modulus", [] {
        CuspFormData f = zeta_form();
        for (double t : {2.0, 3.5, 7.0}) {
            cplx c = c_ratio(f, cplx(0.5, t));
            if (std::abs(std::abs(c) - 1.0) > 1e-8) return false;
        }
        return true;
    }});
    checks.push_back({"cutoff-values", [] {
        for (double x : {0.5, 2.0, 10.0}) {
            double expect = x >= 1.0 ? 1.0 - 1.0 / x : 0.0;
            if (std::abs(mellin_cutoff(x) - expect) > 1e-4) return false;
        }
        return true;
    }});
    checks.push_back({"psi-normalization", [] {
        PsiFunction psi = make_psi(2, {cplx(0.0, 1.6), cplx(0.0, -1.6)});
        return std::abs(psi.tilde(cplx(0.0, 0.0)) - 1.0) < 1e-10;
    }});
    return checks;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk toolkit for symmetric-space lattice sums, profile integrals and square L-series"};
    app.set_config("--config");

    OutputSink sink;
    int threads = 0;
    uint64_t seed = 1;
    app.add_option("--threads", threads, "worker cap, 0 = hardware");
    app.add_option("--seed", seed, "seed for randomized subcommands");
    app.add_option("--out", sink.path, "output path, - for stdout");
    app.add_option("--format", sink.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.require_subcommand(1);

    // iwasawa
    auto* cmd_iw = app.add_subcommand("iwasawa", "coordinates of a real matrix");
    std::string iw_matrix;
    cmd_iw->add_option("--matrix", iw_matrix, "rows split by ';', entries by ','")->required();

    // coset
    auto* cmd_co = app.add_subcommand("coset", "bottom-row coset machinery");
    int co_n = 2, co_m = 1, co_bound = 2;
    int64_t co_cap = 10000000;
    std::string co_complete;
    bool co_keys = false;
    cmd_co->add_option("--n", co_n, "matrix size");
    cmd_co->add_option("--m", co_m, "bottom rows");
    cmd_co->add_option("--bound", co_bound, "entry bound");
    cmd_co->add_option("--cap", co_cap, "candidate cap");
    cmd_co->add_option("--complete", co_complete, "complete this m-by-n block");
    cmd_co->add_flag("--list-keys", co_keys, "emit one row per representative");

    // eisenstein
    auto* cmd_ei = app.add_subcommand("eisenstein", "degenerate series via the lattice sum");
    int ei_n = 2;
    std::string ei_y, ei_x, ei_s = "0.6+0.3i";
    bool ei_fe = false;
    int ei_coset_bound = 0;
    double ei_tol = 1e-8, ei_growth = 0.0;
    cmd_ei->add_option("--n", ei_n, "half dimension: the series lives on 2n");
    cmd_ei->add_option("--y", ei_y, "2n-1 ratio entries")->required();
    cmd_ei->add_option("--x", ei_x, "shear entries, default zero");
    cmd_ei->add_option("--s", ei_s, "spectral point a+bi");
    cmd_ei->add_flag("--check-fe", ei_fe, "compare against the reflected point");
    cmd_ei->add_option("--tol", ei_tol, "reflection residual tolerance");
    cmd_ei->add_option("--coset-bound", ei_coset_bound, "cross-check against the primitive-row sum");
    cmd_ei->add_option("--growth", ei_growth, "check the critical-line majorant at this height");

    // whittaker
    auto* cmd_wh = app.add_subcommand("whittaker", "degenerating profile integrals");
    int wh_gl = 2;
    std::string wh_nu, wh_y, wh_route = "stade";
    cmd_wh->add_option("--gl", wh_gl, "rank: 2 or 3");
    cmd_wh->add_option("--nu", wh_nu, "spectral parameters a+bi list")->required();
    cmd_wh->add_option("--y", wh_y, "ratio entries")->required();
    cmd_wh->add_option("--route", wh_route, "stade, direct or both")
        ->check(CLI::IsMember({"stade", "direct", "both"}));

    // lfun
    auto* cmd_lf = app.add_subcommand("lfun", "square L-series of a form");
    std::string lf_form, lf_theta, lf_s = "2+0i", lf_route = "exact";
    int lf_gl = 0;
    double lf_x = 1.0;
    int64_t lf_mmax = 100000, lf_coeffs = 0;
    cmd_lf->add_option("--form", lf_form, "JSON form file");
    cmd_lf->add_option("--theta", lf_theta, "angle list for a generated form");
    cmd_lf->add_option("--gl", lf_gl, "rank when using --theta");
    cmd_lf->add_option("--s", lf_s, "evaluation point a+bi");
    cmd_lf->add_option("--route", lf_route, "exact, dirichlet or afe")
        ->check(CLI::IsMember({"exact", "dirichlet", "afe"}));
    cmd_lf->add_option("--x", lf_x, "afe balance point");
    cmd_lf->add_option("--mmax", lf_mmax, "dirichlet cutoff");
    cmd_lf->add_option("--coeffs", lf_coeffs, "emit the first coefficients instead");

    // maass-selberg
    auto* cmd_ms = app.add_subcommand("maass-selberg", "truncated inner products");
    std::string ms_form, ms_theta, ms_r, ms_s;
    int ms_gl = 0;
    double ms_t = 8.0, ms_a = 2.0;
    bool ms_slope = false;
    cmd_ms->add_option("--form", ms_form, "JSON form file");
    cmd_ms->add_option("--theta", ms_theta, "angle list for a generated form");
    cmd_ms->add_option("--gl", ms_gl, "rank when using --theta");
    cmd_ms->add_option("--t", ms_t, "height of the diagonal point");
    cmd_ms->add_option("--a", ms_a, "truncation height, > 1");
    cmd_ms->add_option("--r", ms_r, "off-diagonal left parameter a+bi");
    cmd_ms->add_option("--s", ms_s, "off-diagonal right parameter a+bi");
    cmd_ms->add_flag("--slope", ms_slope, "report the refinement slope");

    // sieve
    auto* cmd_sv = app.add_subcommand("sieve", "prime windows and density checks");
    std::string sv_check = "primes", sv_theta;
    int sv_gl = 2;
    double sv_t = 10.0;
    int64_t sv_window = 100000;
    cmd_sv->add_option("--check", sv_check, "primes, good, eta, overlap or cluster")
        ->check(CLI::IsMember({"primes", "good", "eta", "overlap", "cluster"}));
    cmd_sv->add_option("--theta", sv_theta, "angle list for a generated form");
    cmd_sv->add_option("--gl", sv_gl, "rank");
    cmd_sv->add_option("--t", sv_t, "height");
    cmd_sv->add_option("--window", sv_window, "window start N, window is [N, 2N]");

    // psi
    auto* cmd_ps = app.add_subcommand("psi", "spectral cutoff and truncation weight");
    std::string ps_theta, ps_w, ps_y;
    int ps_gl = 2, ps_order = 4;
    double ps_r = 1.0, ps_cutoff = 0.0;
    cmd_ps->add_option("--theta", ps_theta, "angles, shifted exponents are i*theta");
    cmd_ps->add_option("--gl", ps_gl, "rank");
    cmd_ps->add_option("--order", ps_order, "squashing order");
    cmd_ps->add_option("--r", ps_r, "gamma ratio offset");
    cmd_ps->add_option("--w", ps_w, "evaluate the transform at a+bi");
    cmd_ps->add_option("--y", ps_y, "evaluate the inverse transform at y");
    cmd_ps->add_option("--cutoff", ps_cutoff, "evaluate the truncation weight at x");

    // zfr
    auto* cmd_zf = app.add_subcommand("zfr", "standard zero-free window width");
    double zf_t = 10.0, zf_lower = 1.0, zf_deriv = 1.0;
    int zf_gl = 2;
    cmd_zf->add_option("--t", zf_t, "height")->required();
    cmd_zf->add_option("--gl", zf_gl, "rank");
    cmd_zf->add_option("--lower-const", zf_lower, "lower bound constant")->required();
    cmd_zf->add_option("--deriv-const", zf_deriv, "derivative bound constant")->required();

    // verify
    auto* cmd_vf = app.add_subcommand("verify", "run invariant suites");
    std::string vf_which = "all";
    cmd_vf->add_option("suite", vf_which, "suite name or all");

    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (threads > 0) rs::max_threads() = threads;

    try {
        if (cmd_iw->parsed()) {
            rs::Mat<double> m = parse_matrix(iw_matrix);
            rs::IwasawaCoords z = rs::iwasawa_decompose(m);
            std::vector<std::pair<std::string, std::string>> kv;
            kv.emplace_back("k", std::to_string(z.k));
            for (size_t i = 0; i < z.y.size(); ++i)
                kv.emplace_back("y" + std::to_string(i + 1), fd(z.y[i]));
            for (int i = 1; i <= z.k; ++i)
                for (int j = i + 1; j <= z.k; ++j)
                    kv.emplace_back("x" + std::to_string(i) + std::to_string(j), fd(z.xat(i, j)));
            kv.emplace_back("residual", fd(rs::iwasawa_recompose_residual(m)));
            sink.record(kv);
            return 0;
        }

        if (cmd_co->parsed()) {
            if (!co_complete.empty()) {
                rs::Mat<int64_t> r = parse_int_matrix(co_complete);
                rs::Mat<int64_t> a = rs::complete_bottom_block(r);
                std::vector<std::vector<std::string>> rows;
                for (int i = 0; i < a.rows; ++i) {
                    std::vector<std::string> row;
                    for (int j = 0; j < a.cols; ++j) row.push_back(std::to_string(a(i, j)));
                    rows.push_back(row);
                }
                std::vector<std::string> head;
                for (int j = 0; j < a.cols; ++j) head.push_back("c" + std::to_string(j + 1));
                sink.table(head, rows);
                return 0;
            }
            rs::LatticeEnumSpec spec;
            spec.n = co_n;
            spec.m = co_m;
            spec.entry_bound = co_bound;
            spec.candidate_cap = co_cap;
            std::vector<rs::Mat<int64_t>> reps = rs::enumerate_coset_reps(spec);
            if (co_keys) {
                std::vector<std::vector<std::string>> rows;
                for (const auto& rep : reps)
                    rows.push_back({rs::coset_key(rep, co_m).to_string()});
                sink.table({"key"}, rows);
            } else {
                sink.record({{"n", std::to_string(co_n)},
                             {"m", std::to_string(co_m)},
                             {"bound", std::to_string(co_bound)},
                             {"classes", std::to_string(reps.size())}});
            }
            return 0;
        }

        if (cmd_ei->parsed()) {
            int k = 2 * ei_n;
            rs::IwasawaCoords z = coords_from_lists(k, ei_y, ei_x);
            cplx s = rs::parse_complex(ei_s);
            std::vector<std::pair<std::string, std::string>> kv;
            cplx val = rs::eisenstein_completed(z, s);
            kv.emplace_back("value", fc(val));
            bool ok = true;
            if (ei_fe) {
                double res = rs::eisenstein_fe_residual(z, s);
                kv.emplace_back("reflection_residual", fd(res));
                ok = ok && res <= ei_tol;
            }
            if (ei_coset_bound > 0) {
                cplx oracle = rs::eisenstein_coset_sum(z, s, ei_coset_bound);
                kv.emplace_back("primitive_sum", fc(oracle));
                kv.emplace_back("primitive_sum_rel_diff", fd(std::abs(oracle - val) / std::abs(val)));
            }
            if (ei_growth != 0.0) {
                rs::GrowthCheck gc = rs::eisenstein_growth_check(z, ei_growth);
                kv.emplace_back("growth_value", fd(gc.value));
                kv.emplace_back("growth_majorant", fd(gc.majorant));
                ok = ok && gc.pass;
            }
            sink.record(kv);
            return ok ? 0 : 1;
        }

        if (cmd_wh->parsed()) {
            rs::SpectralParams p{wh_gl, parse_complex_list(wh_nu)};
            std::vector<double> y = parse_double_list(wh_y);
            std::vector<std::pair<std::string, std::string>> kv;
            if (wh_route == "stade" || wh_route == "both") {
                rs::WhittakerEval e = rs::whittaker_stade(p, y);
                kv.emplace_back("completed", fc(e.completed));
                kv.emplace_back("value", fc(e.value));
            }
            if (wh_route == "direct" || wh_route == "both") {
                cplx d = rs::whittaker_direct(p, y);
                kv.emplace_back("direct", fc(d));
            }
            sink.record(kv);
            return 0;
        }

        if (cmd_lf->parsed()) {
            rs::CuspFormData f = form_from_cli(lf_form, lf_theta, lf_gl);
            if (lf_coeffs > 0) {
                std::vector<double> lam = rs::rs_coefficients(f, lf_coeffs);
                std::vector<std::vector<std::string>> rows;
                for (int64_t m = 1; m <= lf_coeffs; ++m)
                    rows.push_back({std::to_string(m), fd(lam[m - 1])});
                sink.table({"m", "coefficient"}, rows);
                return 0;
            }
            cplx s = rs::parse_complex(lf_s);
            cplx val;
            if (lf_route == "exact")
                val = rs::l_rs_exact(f, s);
            else if (lf_route == "dirichlet")
                val = rs::l_rs_dirichlet(f, s, lf_mmax);
            else {
                rs::AfeOptions opt;
                opt.x = lf_x;
                val = rs::afe_value(f, s, opt);
            }
            sink.record({{"s", fc(s)},
                         {"route", lf_route},
                         {"value", fc(val)},
                         {"gamma_factor", fc(rs::gamma_factor_rs(f, s))}});
            return 0;
        }

        if (cmd_ms->parsed()) {
            rs::CuspFormData f = form_from_cli(ms_form, ms_theta, ms_gl);
            std::vector<std::pair<std::string, std::string>> kv;
            if (!ms_r.empty() && !ms_s.empty()) {
                cplx val = rs::maass_selberg_truncated(f, rs::parse_complex(ms_r),
                                                       rs::parse_complex(ms_s), ms_a);
                kv.emplace_back("truncated", fc(val));
            } else {
                cplx lim = rs::maass_selberg_limit(f, ms_t, ms_a);
                kv.emplace_back("limit", fc(lim));
                if (ms_slope)
                    kv.emplace_back("slope", fd(rs::maass_selberg_richardson_slope(f, ms_t, ms_a)));
            }
            sink.record(kv);
            return 0;
        }

        if (cmd_sv->parsed()) {
            if (sv_check == "primes") {
                std::vector<int64_t> ps = rs::primes_in_window(sv_window);
                sink.record({{"window_lo", std::to_string(sv_window)},
                             {"window_hi", std::to_string(2 * sv_window)},
                             {"count", std::to_string(ps.size())}});
                return 0;
            }
            if (sv_check == "cluster") {
                double worst = 0.0;
                bool ok = rs::eta_failures_cluster(sv_t, sv_gl, sv_window, &worst);
                sink.record({{"pass", ok ? "1" : "0"}, {"worst_distance", fd(worst)}});
                return ok ? 0 : 1;
            }
            rs::DensityReport r;
            if (sv_check == "eta") {
                r = rs::eta_lower_density(sv_t, sv_gl, sv_window);
            } else {
                rs::CuspFormData f = form_from_cli("", sv_theta, sv_gl);
                r = sv_check == "good" ? rs::good_prime_density(f, sv_window)
                                       : rs::overlap_density(f, sv_t, sv_window);
            }
            sink.record({{"window_lo", std::to_string(r.window_lo)},
                         {"window_hi", std::to_string(r.window_hi)},
                         {"primes", std::to_string(r.prime_count)},
                         {"hits", std::to_string(r.hits)},
                         {"scaled", fd(r.scaled)},
                         {"threshold", fd(r.threshold)},
                         {"pass", r.pass ? "1" : "0"}});
            return r.pass ? 0 : 1;
        }

        if (cmd_ps->parsed()) {
            if (ps_cutoff > 0.0) {
                sink.record({{"x", fd(ps_cutoff)}, {"cutoff", fd(rs::mellin_cutoff(ps_cutoff))}});
                return 0;
            }
            std::vector<double> th = parse_double_list(ps_theta);
            if (static_cast<int>(th.size()) != ps_gl)
                throw rs::domain_error("psi: need gl angles");
            std::vector<cplx> alpha;
            for (double t : th) alpha.emplace_back(0.0, t);
            rs::PsiFunction psi = rs::make_psi(ps_gl, alpha, ps_r, ps_order);
            std::vector<std::pair<std::string, std::string>> kv;
            kv.emplace_back("normalization", fc(psi.tilde(cplx(0.0, 0.0))));
            if (!ps_w.empty()) kv.emplace_back("tilde", fc(psi.tilde(rs::parse_complex(ps_w))));
            if (!ps_y.empty()) {
                double y = std::stod(ps_y);
                kv.emplace_back("value", fd(psi.value(y)));
                kv.emplace_back("value_contour", fd(psi.value_contour(y)));
            }
            sink.record(kv);
            return 0;
        }

        if (cmd_zf->parsed()) {
            double w = rs::zero_free_region_width(zf_t, zf_gl, zf_lower, zf_deriv);
            sink.record({{"t", fd(zf_t)}, {"width", fd(w)}});
            return 0;
        }

        if (cmd_vf->parsed()) {
            int failures = 0;
            for (const Check& c : make_checks()) {
                if (vf_which != "all" && vf_which != c.name) continue;
                bool ok = false;
                std::string note;
                try {
                    ok = c.run();
                } catch (const std::exception& e) {
                    note = std::string(" (") + e.what() + ")";
                }
                std::cout << (ok ? "ok " : "FAIL ") << c.name << note << "\n";
                if (!ok) ++failures;
            }
            return failures == 0 ? 0 : 1;
        }
    } catch (const rs::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
