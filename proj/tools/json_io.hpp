#ifndef SEXTIC_TOOLS_JSON_IO_HPP
#define SEXTIC_TOOLS_JSON_IO_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "sextic/binary_form.hpp"
#include "sextic/decomp.hpp"
#include "sextic/identities.hpp"

namespace sextic::cli {

using json = nlohmann::ordered_json;

/// "3/2" or "-5" parse exactly; "re,im" parses as a complex number.
using Scalar = std::variant<Rational, Complex>;

/// Throws std::invalid_argument on malformed input.
Scalar parse_scalar(std::string_view text);
bool all_exact(const std::vector<Scalar>& v);
Complex as_complex(const Scalar& s);
/// Requires every entry to be exact.
std::vector<Rational> as_rationals(const std::vector<Scalar>& v);
std::vector<Complex> as_complexes(const std::vector<Scalar>& v);

json to_json(const Rational& r);
/// A rational string when the value is rational, else its 8 coordinates.
json to_json(const CycNum& c);
json to_json(const Complex& z);

template <class T>
json form_json(const BinaryForm<T>& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
    return json{{"degree", f.degree()}, {"coeffs", coeffs}};
}

/// {"degree": d, "coeffs": [...]} with entries as rational strings,
/// [re, im] pairs or numbers. Exact when every coefficient is.
std::vector<Scalar> parse_form_coeffs(const json& j);

json report_json(const DecompositionReport& r);
json identity_json(const std::vector<IdentityCheck>& report);

}  // namespace sextic::cli

#endif  // SEXTIC_TOOLS_JSON_IO_HPP
