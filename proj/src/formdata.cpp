#include "rs/formdata.hpp"

#include "rs/spectral.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>

namespace rs {

CuspFormData make_isobaric_form(int n, std::vector<double> theta) {
    if (n < 1) throw domain_error("form: need n >= 1");
    if (static_cast<int>(theta.size()) != n) throw domain_error("form: need n angles");
    double mean = 0.0;
    for (double t : theta) mean += t;
    mean /= n;
    for (double& t : theta) t -= mean;
    CuspFormData f;
    f.n = n;
    f.theta = std::move(theta);
    if (n >= 2) {
        std::vector<cplx> alpha;
        alpha.reserve(n);
        for (double t : f.theta) alpha.emplace_back(0.0, t);
        f.nu = langlands_inverse(n, alpha).nu;
    }
    return f;
}

CuspFormData zeta_form() { return make_isobaric_form(1, {0.0}); }

std::vector<cplx> satake_params(const CuspFormData& f, int64_t p) {
    if (p < 2) throw domain_error("form: need p >= 2");
    auto it = f.satake.find(p);
    if (it != f.satake.end()) {
        if (static_cast<int>(it->second.size()) != f.n)
            throw domain_error("form: satake table entry has wrong length");
        return it->second;
    }
    if (static_cast<int>(f.theta.size()) != f.n)
        throw domain_error("form: no satake data at this prime");
    double lp = std::log(static_cast<double>(p));
    std::vector<cplx> a;
    a.reserve(f.n);
    for (double t : f.theta) a.push_back(std::exp(cplx(0.0, t * lp)));
    return a;
}

cplx hecke_eigenvalue(const CuspFormData& f, int64_t p) {
    cplx s = 0.0;
    for (const cplx& a : satake_params(f, p)) s += a;
    return s;
}

std::vector<double> rs_prime_powers(const CuspFormData& f, int64_t p, int kmax) {
    std::vector<cplx> a = satake_params(f, p);
    // power sums of the pair multiset {a_i * conj(a_j)} are |sum_i a_i^m|^2
    std::vector<double> q(kmax + 1, 0.0);
    std::vector<cplx> pw(a.size(), 1.0);
    for (int m = 1; m <= kmax; ++m) {
        cplx s = 0.0;
        for (size_t i = 0; i < a.size(); ++i) {
            pw[i] *= a[i];
            s += pw[i];
        }
        q[m] = std::norm(s);
    }
    std::vector<double> h(kmax + 1, 0.0);
    h[0] = 1.0;
    for (int k = 1; k <= kmax; ++k) {
        double acc = 0.0;
        for (int m = 1; m <= k; ++m) acc += q[m] * h[k - m];
        h[k] = acc / k;
    }
    return h;
}

std::vector<double> rs_coefficients(const CuspFormData& f, int64_t mmax) {
    if (mmax < 1) throw domain_error("form: need mmax >= 1");
    if (mmax > 50000000) throw domain_error("form: coefficient range too large");
    if (!f.hecke.empty()) {
        if (static_cast<int64_t>(f.hecke.size()) < mmax)
            throw domain_error("form: hecke table shorter than requested range");
        return std::vector<double>(f.hecke.begin(), f.hecke.begin() + mmax);
    }
    std::vector<int32_t> lpf(mmax + 1, 0);
    for (int64_t i = 2; i <= mmax; ++i) {
        if (lpf[i] == 0)
            for (int64_t j = i; j <= mmax; j += i)
                if (lpf[j] == 0) lpf[j] = static_cast<int32_t>(i);
    }
    std::map<int64_t, std::vector<double>> powers;
    auto prime_power_value = [&](int64_t p, int k) -> double {
        auto& h = powers[p];
        if (static_cast<int>(h.size()) <= k) h = rs_prime_powers(f, p, std::max(k, 4));
        return h[k];
    };
    std::vector<double> lam(mmax); // lam[m-1] = coefficient at m
    lam[0] = 1.0;
    for (int64_t m = 2; m <= mmax; ++m) {
        int64_t p = lpf[m], rest = m;
        int k = 0;
        while (rest % p == 0) {
            rest /= p;
            ++k;
        }
        lam[m - 1] = prime_power_value(p, k) * lam[rest - 1];
    }
    return lam;
}

std::vector<cplx> form_alpha(const CuspFormData& f) {
    if (static_cast<int>(f.theta.size()) == f.n) {
        std::vector<cplx> a;
        a.reserve(f.n);
        for (double t : f.theta) a.emplace_back(0.0, t);
        return a;
    }
    SpectralParams sp{f.n, f.nu};
    return langlands_params(sp);
}

std::vector<cplx> rs_gamma_shifts(const CuspFormData& f) {
    std::vector<cplx> a = form_alpha(f);
    std::vector<cplx> shifts;
    shifts.reserve(a.size() * a.size());
    for (const cplx& ai : a)
        for (const cplx& aj : a) shifts.push_back(ai + std::conj(aj));
    return shifts;
}

namespace {

cplx json_to_complex(const nlohmann::json& j) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2) return cplx(j[0].get<double>(), j[1].get<double>());
    throw domain_error("form: complex fields must be numbers or [re, im] pairs");
}

nlohmann::json complex_to_json(const cplx& z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

} // namespace

CuspFormData form_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CuspFormData f;
    f.n = j.at("n").get<int>();
    if (f.n < 1) throw domain_error("form: need n >= 1");
    if (j.contains("nu"))
        for (const auto& v : j["nu"]) f.nu.push_back(json_to_complex(v));
    if (j.contains("theta"))
        for (const auto& v : j["theta"]) f.theta.push_back(v.get<double>());
    if (j.contains("satake"))
        for (const auto& [key, val] : j["satake"].items()) {
            int64_t p = std::stoll(key);
            std::vector<cplx> a;
            for (const auto& v : val) a.push_back(json_to_complex(v));
            f.satake[p] = std::move(a);
        }
    if (j.contains("hecke"))
        for (const auto& v : j["hecke"]) f.hecke.push_back(v.get<double>());
    if (j.contains("petersson_norm")) f.petersson_norm = j["petersson_norm"].get<double>();
    if (!f.theta.empty() && static_cast<int>(f.theta.size()) != f.n)
        throw domain_error("form: theta length must equal n");
    if (!f.nu.empty() && static_cast<int>(f.nu.size()) != f.n - 1)
        throw domain_error("form: nu length must equal n - 1");
    return f;
}

std::string form_to_json(const CuspFormData& f) {
    nlohmann::json j;
    j["n"] = f.n;
    j["nu"] = nlohmann::json::array();
    for (const cplx& v : f.nu) j["nu"].push_back(complex_to_json(v));
    if (!f.theta.empty()) j["theta"] = f.theta;
    if (!f.satake.empty()) {
        nlohmann::json s = nlohmann::json::object();
        for (const auto& [p, a] : f.satake) {
            nlohmann::json row = nlohmann::json::array();
            for (const cplx& v : a) row.push_back(complex_to_json(v));
            s[std::to_string(p)] = row;
        }
        j["satake"] = s;
    }
    if (!f.hecke.empty()) j["hecke"] = f.hecke;
    j["petersson_norm"] = f.petersson_norm;
    return j.dump(2);
}

} // namespace rs
