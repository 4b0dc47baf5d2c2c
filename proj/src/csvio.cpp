#include "rs/csvio.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace rs {

std::string csv_field(const std::string& raw) {
    bool quote = raw.find_first_of(",\"\r\n") != std::string::npos;
    if (!quote) return raw;
    std::string out = "\"";
    for (char c : raw) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) os << ',';
        os << csv_field(fields[i]);
    }
    os << "\r\n";
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string format_complex(cplx v) {
    std::string out = format_double(v.real());
    if (v.imag() >= 0.0 || std::isnan(v.imag()))
        out += "+" + format_double(v.imag());
    else
        out += "-" + format_double(-v.imag());
    return out + "i";
}

cplx parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw domain_error("empty complex literal");

    auto to_double = [&](const std::string& part) -> double {
        try {
            size_t used = 0;
            double v = std::stod(part, &used);
            if (used != part.size()) throw std::invalid_argument("trailing junk");
            return v;
        } catch (const std::exception&) {
            throw domain_error("bad complex literal: " + text);
        }
    };

    bool has_i = s.back() == 'i' || s.back() == 'I';
    if (!has_i) return cplx(to_double(s), 0.0);
    s.pop_back();
    // split at the last sign that is not leading and not part of an exponent
    size_t split = std::string::npos;
    for (size_t i = s.size(); i-- > 1;) {
        if (s[i] != '+' && s[i] != '-') continue;
        char prev = s[i - 1];
        if (prev == 'e' || prev == 'E') continue;
        split = i;
        break;
    }
    auto parse_imag = [&](const std::string& part) -> double {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        return to_double(part);
    };
    if (split == std::string::npos) return cplx(0.0, parse_imag(s));
    return cplx(to_double(s.substr(0, split)), parse_imag(s.substr(split)));
}

} // namespace rs
