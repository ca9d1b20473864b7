#include "json_io.hpp"

#include <charconv>
#include <stdexcept>

namespace sextic::cli {

namespace {

double parse_double(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    const auto comma = text.find(',');
    if (comma != std::string_view::npos) {
        return Complex(parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1)));
    }
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        return Complex(parse_double(text), 0.0);
    }
}

bool all_exact(const std::vector<Scalar>& v) {
    for (const auto& s : v) {
        if (!std::holds_alternative<Rational>(s)) return false;
    }
    return true;
}

Complex as_complex(const Scalar& s) {
    if (const auto* r = std::get_if<Rational>(&s)) return {r->to_double(), 0.0};
    return std::get<Complex>(s);
}

std::vector<Rational> as_rationals(const std::vector<Scalar>& v) {
    std::vector<Rational> out;
    for (const auto& s : v) out.push_back(std::get<Rational>(s));
    return out;
}

std::vector<Complex> as_complexes(const std::vector<Scalar>& v) {
    std::vector<Complex> out;
    for (const auto& s : v) out.push_back(as_complex(s));
    return out;
}

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const CycNum& c) {
    if (c.is_rational()) return c.rational_part().to_string();
    json out = json::array();
    for (const auto& r : c.coords()) out.push_back(r.to_string());
    return out;
}

json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

std::vector<Scalar> parse_form_coeffs(const json& j) {
    const json& coeffs = j.is_object() ? j.at("coeffs") : j;
    if (!coeffs.is_array()) throw std::invalid_argument("form coefficients must be a JSON array");
    if (j.is_object() && j.contains("degree") && j.at("degree").get<int>() + 1 != static_cast<int>(coeffs.size())) {
        throw std::invalid_argument("form degree does not match the number of coefficients");
    }
    std::vector<Scalar> out;
    for (const auto& c : coeffs) {
        if (c.is_string()) {
            out.push_back(parse_scalar(c.get<std::string>()));
        } else if (c.is_number_integer()) {
            out.emplace_back(Rational(c.get<long>()));
        } else if (c.is_number()) {
            out.emplace_back(Complex(c.get<double>(), 0.0));
        } else if (c.is_array() && c.size() == 2) {
            out.emplace_back(Complex(c[0].get<double>(), c[1].get<double>()));
        } else {
            throw std::invalid_argument("unsupported coefficient: " + c.dump());
        }
    }
    return out;
}

json report_json(const DecompositionReport& r) {
    json reps = json::array();
    for (const auto& rep : r.reps) {
        reps.push_back({{"f1", form_json(rep.f1)}, {"f2", form_json(rep.f2)}, {"residual", rep.residual}});
    }
    return json{{"N", r.N},
                {"representations", reps},
                {"multiplicities", r.multiplicities},
                {"H", to_json(r.H)}};
}

json identity_json(const std::vector<IdentityCheck>& report) {
    json out = json::array();
    for (const auto& c : report) {
        out.push_back({{"id", c.id}, {"anchor", c.anchor}, {"method", c.method}, {"pass", c.pass}});
    }
    return out;
}

}  // namespace sextic::cli
