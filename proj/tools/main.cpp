#include <cmath>
#include <cstdint>
#include <cstdio>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "sextic/classify.hpp"
#include "sextic/decomp.hpp"
#include "sextic/ecurve.hpp"
#include "sextic/families.hpp"
#include "sextic/identities.hpp"
#include "sextic/roots.hpp"

namespace {

using namespace sextic;
using cli::json;
using cli::Scalar;

enum ExitCode : int { kOk = 0, kUsage = 1, kNumeric = 2, kVerification = 3 };

class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct Config {
    double tol = 1e-9;
    std::string format = "json";
    int jobs = 1;
    std::uint64_t seed = RootOptions{}.seed;
};

std::string num(double v) {
    if (std::abs(v) < 5e-13) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string num(Complex z) {
    if (std::abs(z.imag()) < 5e-13 * std::max(1.0, std::abs(z.real()))) return num(z.real());
    if (std::abs(z.real()) < 5e-13 * std::abs(z.imag())) return (z.imag() < 0 ? "-" : "") + num(std::abs(z.imag())) + "i";
    return num(z.real()) + (z.imag() < 0 ? " - " : " + ") + num(std::abs(z.imag())) + "i";
}

std::string form_text(const BinaryForm<Complex>& f) {
    const double cut = 5e-13 * std::max(1.0, max_magnitude(f));
    std::string out;
    const int d = f.degree();
    for (int k = 0; k <= d; ++k) {
        Complex c = f[k];
        if (std::abs(c.real()) < cut) c.real(0.0);
        if (std::abs(c.imag()) < cut) c.imag(0.0);
        if (c == Complex(0.0, 0.0)) continue;
        std::string mono;
        if (d - k > 0) mono += "*x" + (d - k > 1 ? "^" + std::to_string(d - k) : "");
        if (k > 0) mono += "*y" + (k > 1 ? "^" + std::to_string(k) : "");
        out += (out.empty() ? "" : " + ") + ("(" + num(c) + ")") + mono;
    }
    return out.empty() ? "0" : out;
}

void emit(const Config& cfg, const json& j, const std::string& text) {
    if (cfg.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::vector<Scalar> parse_all(const std::vector<std::string>& items) {
    std::vector<Scalar> out;
    for (const auto& s : items) out.push_back(cli::parse_scalar(s));
    return out;
}

json read_stdin_json() {
    const std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("cannot parse JSON on stdin: ") + e.what());
    }
}

BinaryForm<Complex> complex_form(const std::vector<Scalar>& c) {
    return BinaryForm<Complex>(cli::as_complexes(c));
}

template <class Fn>
auto parallel_map(int jobs, std::size_t n, Fn fn) {
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> out(n);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    for (std::size_t start = 0; start < n; start += static_cast<std::size_t>(jobs)) {
        std::vector<std::future<R>> batch;
        const std::size_t stop = std::min(n, start + static_cast<std::size_t>(jobs));
        for (std::size_t i = start; i < stop; ++i) batch.push_back(std::async(std::launch::async, fn, i));
        for (std::size_t i = start; i < stop; ++i) out[i] = batch[i - start].get();
    }
    return out;
}

DecompOptions decomp_options(const Config& cfg) {
    DecompOptions opts;
    opts.tol = Tolerance{cfg.tol};
    opts.roots.seed = cfg.seed;
    return opts;
}

std::string join(const std::vector<int>& v) {
    std::string out;
    for (int x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
    return out;
}

// ---- decompose ----------------------------------------------------------

int cmd_decompose(const Config& cfg, const std::vector<std::string>& coeffs) {
    std::vector<Scalar> c;
    if (coeffs.empty()) {
        c = cli::parse_form_coeffs(read_stdin_json());
    } else {
        c = parse_all(coeffs);
    }
    if (c.size() != 7) throw UsageError("a binary sextic needs 7 coefficients, got " + std::to_string(c.size()));
    const auto report = rep_count(complex_form(c), decomp_options(cfg));
    std::ostringstream text;
    text << "N = " << report.N << "\n";
    text << "multiplicities = " << join(report.multiplicities) << "\n";
    text << "H = " << num(report.H) << (report.H_vanishes ? " (vanishes)" : "") << "\n";
    for (std::size_t i = 0; i < report.reps.size(); ++i) {
        const auto& r = report.reps[i];
        text << "rep " << i + 1 << ": f1 = " << form_text(r.f1) << "; f2 = " << form_text(r.f2) << "; residual " << num(r.residual)
             << "\n";
    }
    emit(cfg, cli::report_json(report), text.str());
    return kOk;
}

// ---- census -------------------------------------------------------------

std::vector<std::string> grid_values(const std::string& spec) {
    // start:stop:count, inclusive, evenly spaced.
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() != 3) throw UsageError("grid must be start:stop:count");
    const Scalar a = cli::parse_scalar(parts[0]);
    const Scalar b = cli::parse_scalar(parts[1]);
    long count = 0;
    try {
        count = std::stol(parts[2]);
    } catch (const std::exception&) {
        throw UsageError("grid count must be an integer");
    }
    if (count < 1) throw UsageError("grid count must be positive");
    std::vector<std::string> out;
    if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b)) {
        const Rational ra = std::get<Rational>(a);
        const Rational step = count == 1 ? Rational(0) : (std::get<Rational>(b) - ra) / Rational(count - 1);
        for (long k = 0; k < count; ++k) out.push_back((ra + step * Rational(k)).to_string());
    } else {
        const Complex ca = cli::as_complex(a);
        const Complex step = count == 1 ? Complex(0.0) : (cli::as_complex(b) - ca) / static_cast<double>(count - 1);
        for (long k = 0; k < count; ++k) {
            const Complex z = ca + step * static_cast<double>(k);
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g,%.17g", z.real(), z.imag());
            out.emplace_back(buf);
        }
    }
    return out;
}

int cmd_census(const Config& cfg, const std::string& family, std::vector<std::string> ts, const std::string& grid) {
    if (family != "A" && family != "B") throw UsageError("census family must be A or B");
    if (!grid.empty()) {
        const auto g = grid_values(grid);
        ts.insert(ts.end(), g.begin(), g.end());
    }
    if (ts.empty()) throw UsageError("census needs at least one --t value or a --grid");
    const auto values = parse_all(ts);
    const int generic = family == "A" ? 2 : 3;
    const auto opts = decomp_options(cfg);
    const auto reports = parallel_map(cfg.jobs, values.size(), [&](std::size_t i) {
        const Complex t = cli::as_complex(values[i]);
        return rep_count(family == "A" ? A_form(t) : B_form(t), opts);
    });
    json rows = json::array();
    std::ostringstream text;
    text << "family " << family << "\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto& r = reports[i];
        json tj = std::holds_alternative<Rational>(values[i]) ? cli::to_json(std::get<Rational>(values[i]))
                                                              : cli::to_json(std::get<Complex>(values[i]));
        const bool exceptional = r.N != generic;
        rows.push_back({{"t", tj}, {"N", r.N}, {"multiplicities", r.multiplicities}, {"exceptional", exceptional}});
        text << "t = " << (std::holds_alternative<Rational>(values[i]) ? std::get<Rational>(values[i]).to_string()
                                                                        : num(std::get<Complex>(values[i])))
             << "  N = " << r.N << "  multiplicities = " << join(r.multiplicities)
             << (exceptional ? "  exceptional" : "") << "\n";
    }
    emit(cfg, json{{"family", family}, {"rows", rows}}, text.str());
    return kOk;
}

// ---- verify -------------------------------------------------------------

int cmd_verify(const Config& cfg, long ramanujan_leading) {
    auto report = run_identity_suite(cfg.jobs);
    if (ramanujan_leading != 6) {
        for (auto& c : report) {
            if (c.id == "ramanujan") c = check_ramanujan(ramanujan_leading);
        }
    }
    std::ostringstream text;
    for (const auto& c : report) {
        text << (c.pass ? "pass " : "FAIL ") << c.id << " [" << c.method << "] " << c.anchor;
        if (!c.pass) text << " -- " << c.detail;
        text << "\n";
    }
    emit(cfg, cli::identity_json(report), text.str());
    return all_passed(report) ? kOk : kVerification;
}

// ---- family -------------------------------------------------------------

template <class T>
int print_family(const Config& cfg, FamilyName name, const std::vector<T>& params, const json& pj) {
    const auto fam = generate(name, params);
    json forms = json::object();
    std::ostringstream text;
    for (std::size_t i = 0; i < fam.forms.size(); ++i) {
        forms[fam.names[i]] = cli::form_json(fam.forms[i]);
        text << fam.names[i] << " = " << fam.forms[i] << "\n";
    }
    emit(cfg, json{{"family", family_name_string(name)}, {"params", pj}, {"forms", forms}}, text.str());
    return kOk;
}

int cmd_family(const Config& cfg, const std::string& name_text, const std::string& lambda,
               const std::vector<std::string>& extra) {
    FamilyName name;
    try {
        name = parse_family_name(name_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::vector<std::string> raw = extra;
    if (!lambda.empty()) raw.insert(raw.begin(), lambda);
    if (static_cast<int>(raw.size()) != family_param_count(name)) {
        throw UsageError(name_text + " takes " + std::to_string(family_param_count(name)) + " parameter(s)");
    }
    const auto params = parse_all(raw);
    json pj = json::array();
    for (const auto& p : params) {
        pj.push_back(std::holds_alternative<Rational>(p) ? cli::to_json(std::get<Rational>(p))
                                                         : cli::to_json(std::get<Complex>(p)));
    }
    if (cli::all_exact(params)) {
        std::vector<CycNum> v;
        for (const auto& r : cli::as_rationals(params)) v.emplace_back(r);
        return print_family(cfg, name, v, pj);
    }
    return print_family(cfg, name, cli::as_complexes(params), pj);
}

// ---- type-detect --------------------------------------------------------

json change_json(const LinearChange<Complex>& m) {
    return json::array({json::array({cli::to_json(m.a), cli::to_json(m.b)}),
                        json::array({cli::to_json(m.c), cli::to_json(m.d)})});
}

int cmd_type_detect(const Config& cfg, const std::vector<std::string>& coeffs, bool canonicalize) {
    std::vector<std::vector<Scalar>> forms;
    if (coeffs.empty()) {
        const json j = read_stdin_json();
        const json& arr = j.is_object() ? j.at("forms") : j;
        for (const auto& f : arr) forms.push_back(cli::parse_form_coeffs(f));
    } else {
        if (coeffs.size() != 12) throw UsageError("type-detect needs 12 coefficients (four quadratics)");
        const auto all = parse_all(coeffs);
        for (std::size_t i = 0; i < 4; ++i) forms.emplace_back(all.begin() + 3 * i, all.begin() + 3 * i + 3);
    }
    if (forms.size() != 4) throw UsageError("type-detect needs four quadratic forms");
    Quadruple q;
    for (std::size_t i = 0; i < 4; ++i) {
        if (forms[i].size() != 3) throw UsageError("type-detect expects quadratic forms");
        q[i] = complex_form(forms[i]);
    }
    bool rearranged = false;
    {
        const double equal = relative_residual(cube(q[0]) + cube(q[1]), cube(q[2]) + cube(q[3]));
        const double three = relative_residual(cube(q[0]), cube(q[1]) + cube(q[2]) + cube(q[3]));
        if (equal > 1e-9 && three <= 1e-9) {
            q = from_three_cubes(q);
            rearranged = true;
        }
    }
    const TypeTag tag = type_detect(q);
    const Complex lambda = std::sqrt(tag.T);
    json out{{"T", cli::to_json(tag.T)},
             {"lambda", cli::to_json(lambda)},
             {"flip", tag.flip},
             {"arrangement", tag.labels},
             {"rearranged", rearranged},
             {"residual", tag.residual}};
    std::ostringstream text;
    text << "T = " << num(tag.T) << "\n";
    text << "arrangement: " << tag.labels[0] << " + " << tag.labels[1] << " = T (" << tag.labels[2] << " + "
         << tag.labels[3] << ")" << (rearranged ? " [input read as a^3 = b^3 + c^3 + d^3]" : "") << "\n";
    if (canonicalize) {
        const auto c = canonicalize_type(q, lambda);
        out["M"] = change_json(c.M);
        out["canonical_residual"] = c.residual;
        text << "canonicalized at lambda = " << num(lambda) << ", residual " << (c.residual <= 1e-7 ? "<= 1e-7" : num(c.residual))
             << "\n";
    }
    emit(cfg, out, text.str());
    return kOk;
}

// ---- eb / curve-add -----------------------------------------------------

template <class S>
json sj(const S& v) {
    return cli::to_json(v);
}

template <class S>
std::string st(const S& v) {
    if constexpr (std::is_same_v<S, Complex>) {
        return num(v);
    } else {
        return v.to_string();
    }
}

template <class S>
int eb_forward_out(const Config& cfg, const std::vector<S>& v) {
    const EBParams<S> e{v[0], v[1], v[2]};
    const auto q = eb_forward(e);
    const auto h = curve_third_rep(e);
    json f = json::array();
    std::ostringstream text;
    text << "f =";
    for (const auto& x : q.f) {
        f.push_back(sj(x));
        text << " " << st(x);
    }
    text << "\np = " << st(q.p) << (q.degenerate ? " (degenerate: b = 0)" : "") << "\n";
    text << "third representation: h1 = " << st(h[0]) << ", h2 = " << st(h[1]) << "\n";
    emit(cfg, json{{"f", f}, {"p", sj(q.p)}, {"degenerate", q.degenerate}, {"third", {sj(h[0]), sj(h[1])}}},
         text.str());
    return kOk;
}

template <class S>
int eb_inverse_out(const Config& cfg, const std::vector<S>& v) {
    const auto e = eb_inverse<S>({v[0], v[1], v[2], v[3]});
    emit(cfg, json{{"a", sj(e.a)}, {"b", sj(e.b)}, {"mu", sj(e.mu)}},
         "a = " + st(e.a) + "\nb = " + st(e.b) + "\nmu = " + st(e.mu) + "\n");
    return kOk;
}

int cmd_eb(const Config& cfg, const std::string& mode, const std::vector<std::string>& values) {
    const auto v = parse_all(values);
    if (mode == "forward") {
        if (v.size() != 3) throw UsageError("eb forward needs a b mu");
        return cli::all_exact(v) ? eb_forward_out(cfg, cli::as_rationals(v)) : eb_forward_out(cfg, cli::as_complexes(v));
    }
    if (mode == "inverse") {
        if (v.size() != 4) throw UsageError("eb inverse needs f1 f2 f3 f4");
        return cli::all_exact(v) ? eb_inverse_out(cfg, cli::as_rationals(v)) : eb_inverse_out(cfg, cli::as_complexes(v));
    }
    throw UsageError("eb mode must be forward or inverse");
}

template <class S>
int curve_out(const Config& cfg, const std::vector<S>& v) {
    const auto p = curve_add<S>({v[0], v[1]}, {v[2], v[3]}, v[4]);
    const S lhs = p.X * p.X * p.X + p.Y * p.Y * p.Y;
    bool on_curve = false;
    if constexpr (std::is_same_v<S, Complex>) {
        on_curve = std::abs(lhs - v[4]) <= 1e-9 * std::max(1.0, std::abs(v[4]));
    } else {
        on_curve = lhs == v[4];
    }
    emit(cfg, json{{"X3", sj(p.X)}, {"Y3", sj(p.Y)}, {"on_curve", on_curve}},
         "X3 = " + st(p.X) + "\nY3 = " + st(p.Y) + "\non curve: " + (on_curve ? "yes" : "no") + "\n");
    return on_curve ? kOk : kNumeric;
}

int cmd_curve_add(const Config& cfg, const std::vector<std::string>& values) {
    const auto v = parse_all(values);
    if (v.size() != 5) throw UsageError("curve-add needs X1 Y1 X2 Y2 A");
    return cli::all_exact(v) ? curve_out(cfg, cli::as_rationals(v)) : curve_out(cfg, cli::as_complexes(v));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sums of two cubes of binary quadratic forms: decomposition, census and identities"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--tol", cfg.tol, "Relative tolerance for floating computations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for the randomized root-finder starts")->capture_default_str();

    std::vector<std::string> dec_coeffs;
    auto* dec = app.add_subcommand("decompose", "Count and construct representations p = f1^3 + f2^3");
    dec->add_option("coeffs", dec_coeffs, "7 coefficients of x^6 .. y^6 (JSON form on stdin if omitted)");

    std::string census_family;
    std::vector<std::string> census_t;
    std::string census_grid;
    auto* census = app.add_subcommand("census", "N over the normal forms A_t or B_t");
    census->add_option("--family", census_family, "A or B")->required();
    census->add_option("--t", census_t, "Parameter value (repeatable)");
    census->add_option("--grid", census_grid, "start:stop:count");

    long leading = 6;
    auto* verify = app.add_subcommand("verify", "Run the exact identity suite");
    verify->add_option("--ramanujan-leading", leading, "Replace 6 in Ramanujan's identity (negative control)");

    std::string fam_name;
    std::string fam_lambda;
    std::vector<std::string> fam_params;
    auto* family = app.add_subcommand("family", "Generate a named family and its common sum");
    family->add_option("name", fam_name, "R, N, F, p1, p2, p3, A, B, Q1, Q2, Naren, Young, YoungN, Hirschhorn, "
                                         "HirschhornN, Sandor, Vieta")
        ->required();
    family->add_option("--lambda", fam_lambda, "Family parameter");
    family->add_option("--param", fam_params, "Further parameters in order (repeatable)");

    std::vector<std::string> td_coeffs;
    bool td_canon = false;
    auto* td = app.add_subcommand("type-detect", "Find T with f_a + f_b = T (f_c + f_d)");
    td->add_option("coeffs", td_coeffs, "12 coefficients of four quadratics (JSON on stdin if omitted)");
    td->add_flag("--canonicalize", td_canon, "Also map the family to the reference family");

    std::string eb_mode;
    std::vector<std::string> eb_values;
    auto* eb = app.add_subcommand("eb", "Euler-Binet parameterization");
    eb->add_option("mode", eb_mode, "forward (a b mu) or inverse (f1 f2 f3 f4)")->required();
    eb->add_option("values", eb_values, "Values")->required();

    std::vector<std::string> ca_values;
    auto* ca = app.add_subcommand("curve-add", "Third chord point on X^3 + Y^3 = A");
    ca->add_option("values", ca_values, "X1 Y1 X2 Y2 A")->required();


    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*dec) return cmd_decompose(cfg, dec_coeffs);
        if (*census) return cmd_census(cfg, census_family, census_t, census_grid);
        if (*verify) return cmd_verify(cfg, leading);
        if (*family) return cmd_family(cfg, fam_name, fam_lambda, fam_params);
        if (*td) return cmd_type_detect(cfg, td_coeffs, td_canon);
        if (*eb) return cmd_eb(cfg, eb_mode, eb_values);
        if (*ca) return cmd_curve_add(cfg, ca_values);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kNumeric;
    }
    return kUsage;
}
