// Command-line front end: determinant identities, polynomial fitting from
// CSV samples, dyadic convergence studies, Taylor-coefficient estimation and
// scripted reproduction of the library's worked examples.
//
// Exit codes: 0 on success (including all internal cross-checks), 2 on usage
// or input errors, 3 on numeric failures (singular systems, failed checks).

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vander/analysis.hpp"
#include "vander/errors.hpp"
#include "vander/grid.hpp"
#include "vander/interp.hpp"
#include "vander/serialize.hpp"
#include "vander/vandermonde.hpp"

namespace {

using namespace vander;

// ---------------------------------------------------------------- output --

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot open output file '" + out_path + "'");
    f << text;
}

void emit_json(const json& j, const std::string& out_path) {
    emit_text(j.dump(2) + "\n", out_path);
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

void print_matrix(std::ostream& os, const std::string& name, const SquareMatrix& m) {
    const std::size_t n = m.order();
    std::vector<std::size_t> width(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            width[j] = std::max(width[j], m.at(i, j).str().size());
    os << name << " =\n";
    for (std::size_t i = 0; i < n; ++i) {
        os << "  [ ";
        for (std::size_t j = 0; j < n; ++j) {
            os << pad_left(m.at(i, j).str(), width[j]);
            if (j + 1 < n) os << "  ";
        }
        os << " ]\n";
    }
}

std::string vector_str(const std::vector<Scalar>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

json scalars_json(const std::vector<Scalar>& v) {
    json arr = json::array();
    for (const Scalar& s : v) arr.push_back(s.str());
    return arr;
}

// ------------------------------------------------------------------- det --

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\n' || c == '\t' || c == '\r') {
            if (!cur.empty()) parts.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) parts.push_back(std::move(cur));
    return parts;
}

struct DetOptions {
    std::string nodes;
    std::string nodes_file;
    std::string backend = "exact";
    std::string format = "json";
    std::string out;
};

void run_det(const DetOptions& opt) {
    std::string text = opt.nodes;
    if (!opt.nodes_file.empty()) {
        std::ifstream f(opt.nodes_file);
        if (!f) throw InvalidArgument("cannot read nodes file '" + opt.nodes_file + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    const Backend be = parse_backend(opt.backend);
    std::vector<Scalar> xs;
    for (const std::string& lit : split_list(text)) xs.push_back(Scalar::parse(lit, be));
    if (xs.empty()) throw InvalidArgument("no nodes given (use --nodes or --nodes-file)");
    NodeVector nodes(std::move(xs));

    const Scalar product = det_product(nodes);
    const Scalar det_asc = det_elimination(build_ascending(nodes));
    const Scalar det_desc = det_elimination(build_descending(nodes));
    const int sign = sign_relation(nodes.size());

    bool agree;
    if (be == Backend::exact) {
        agree = product == det_asc &&
                det_desc == (sign < 0 ? -det_asc : det_asc);
    } else {
        auto close = [](double x, double y) {
            return std::fabs(x - y) <= 1e-9 * std::max({1.0, std::fabs(x), std::fabs(y)});
        };
        agree = close(product.flt(), det_asc.flt()) &&
                close(det_desc.flt(), sign * det_asc.flt());
    }

    json report{{"agree", agree},
                {"backend", backend_name(be)},
                {"det_elimination_ascending", det_asc.str()},
                {"det_elimination_descending", det_desc.str()},
                {"det_product", product.str()},
                {"nodes", scalars_json(nodes.values())},
                {"order", nodes.size()},
                {"sign_relation", sign}};

    if (opt.format == "csv") {
        std::string csv = "field,value\n";
        csv += "order," + std::to_string(nodes.size()) + "\n";
        csv += "backend," + std::string(backend_name(be)) + "\n";
        csv += "det_product," + product.str() + "\n";
        csv += "det_elimination_ascending," + det_asc.str() + "\n";
        csv += "det_elimination_descending," + det_desc.str() + "\n";
        csv += "sign_relation," + std::to_string(sign) + "\n";
        csv += std::string("agree,") + (agree ? "true" : "false") + "\n";
        emit_text(csv, opt.out);
    } else {
        emit_json(report, opt.out);
    }

    if (!agree)
        throw CheckFailure("determinant cross-check failed: product formula " +
                           product.str() + ", elimination " + det_asc.str());
}

// ------------------------------------------------------------------- fit --

struct FitOptions {
    std::string input;
    std::string backend = "exact";
    std::string format = "json";
    std::string out;
    std::optional<long> degree;
    std::optional<double> tol;
};

void run_fit(const FitOptions& opt) {
    const Backend be = parse_backend(opt.backend);

    SampleSet samples = [&] {
        if (opt.input == "-") return read_samples_csv(std::cin, be);
        std::ifstream f(opt.input);
        if (!f) throw InvalidArgument("cannot read samples file '" + opt.input + "'");
        return read_samples_csv(f, be);
    }();

    if (opt.degree && samples.size() != static_cast<std::size_t>(*opt.degree) + 1)
        throw InvalidArgument("degree " + std::to_string(*opt.degree) + " needs " +
                              std::to_string(*opt.degree + 1) + " samples, got " +
                              std::to_string(samples.size()));

    Polynomial p = fit(samples);
    EffectiveDegree ed = opt.tol ? effective_degree(p, *opt.tol) : effective_degree(p);
    const double residual = node_residual(p, samples);

    double max_y = 1.0;
    for (const Scalar& y : samples.values())
        max_y = std::max(max_y, std::fabs(y.to_double()));
    const bool node_exact = p.backend() == Backend::exact ? residual == 0.0
                                                          : residual <= 1e-6 * max_y;

    json report{{"backend", backend_name(p.backend())},
                {"coefficients", scalars_json(p.descending())},
                {"degree_effective", ed.effective},
                {"degree_formal", ed.formal},
                {"display", polynomial_str(p)},
                {"node_exact", node_exact},
                {"node_residual", float_str(residual)}};

    if (opt.format == "csv") {
        std::string csv = "power,coefficient\n";
        for (std::size_t i = 0; i <= p.degree(); ++i)
            csv += std::to_string(p.degree() - i) + "," +
                   p.descending()[i].str() + "\n";
        emit_text(csv, opt.out);
    } else {
        emit_json(report, opt.out);
    }

    if (!node_exact)
        throw CheckFailure("fitted polynomial does not reproduce its samples: "
                           "max residual " +
                           float_str(residual));
}

// -------------------------------------------------------------- converge --

struct ConvergeOptions {
    std::string function;
    std::size_t n0 = 2;
    std::size_t levels = 3;
    std::size_t probes = 2000;
    std::optional<std::string> backend;
    std::string plot_dir;
    std::string format = "json";
    std::string out;
};

void run_converge(const ConvergeOptions& opt) {
    NamedFunction nf = lookup_function(opt.function);
    ScalarFn fn = nf.fn;
    if (opt.backend) {
        const Backend be = parse_backend(*opt.backend);
        if (be == Backend::exact && !nf.exact_capable)
            throw InvalidArgument("function '" + nf.id +
                                  "' cannot run on the exact backend (" +
                                  nf.description + ")");
        if (be == Backend::floating) fn = force_float(fn);
    }

    ConvergenceReport report =
        convergence_study(fn, nf.id, opt.n0, opt.levels, opt.probes);

    if (!opt.plot_dir.empty()) {
        std::filesystem::create_directories(opt.plot_dir);
        const Scalar zero{Rational(0)}, one{Rational(1)};
        for (const LevelRecord& rec : report.levels) {
            auto curve = error_curve(fn, rec.fitted, zero, one, opt.probes);
            std::ofstream f(std::filesystem::path(opt.plot_dir) /
                            ("level-" + std::to_string(rec.level) + ".csv"));
            f << "x,error\n";
            for (const auto& [x, err] : curve)
                f << float_str(x) << "," << float_str(err) << "\n";
        }
    }

    if (opt.format == "csv")
        emit_text(to_csv(report), opt.out);
    else
        emit_json(to_json(report), opt.out);
}

// ---------------------------------------------------------------- taylor --

struct TaylorOptions {
    std::string function;
    std::string degrees = "4,6,8,10";
    std::string format = "json";
    std::string out;
};

std::vector<std::size_t> parse_degrees(const std::string& text) {
    std::vector<std::size_t> out;
    for (const std::string& piece : split_list(text)) {
        long v = 0;
        try {
            v = std::stol(piece);
        } catch (...) {
            throw InvalidArgument("bad degree '" + piece + "'");
        }
        if (v < 1) throw InvalidArgument("degrees must be >= 1, got " + piece);
        out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) throw InvalidArgument("empty degrees list");
    return out;
}

TaylorComparison taylor_for(const std::string& id,
                            const std::vector<std::size_t>& degrees) {
    const double pi = std::numbers::pi;
    std::size_t max_deg = 0;
    for (std::size_t d : degrees) max_deg = std::max(max_deg, d);

    if (id == "sine") {
        for (std::size_t d : degrees)
            if (d < 2 || d % 2 != 0)
                throw InvalidArgument(
                    "sine estimation needs even degrees >= 2 (symmetric "
                    "partitions), got " +
                    std::to_string(d));
        std::vector<std::size_t> powers;
        for (std::size_t k = 1; k <= max_deg; k += 2) powers.push_back(k);
        return taylor_estimates(sin_fn(), "sine", Scalar(-pi), Scalar(pi), degrees,
                                powers, reference_sine(), /*magnitudes=*/true);
    }
    if (id == "log1p") {
        std::vector<std::size_t> powers;
        for (std::size_t k = 1; k <= std::min<std::size_t>(max_deg, 5); ++k)
            powers.push_back(k);
        return taylor_estimates(log1p_fn(), "log1p", Scalar(Rational(-3, 4)),
                                Scalar(Rational(3, 4)), degrees, powers,
                                reference_log1p(), /*magnitudes=*/false);
    }
    throw InvalidArgument("unknown function id '" + id +
                          "' (taylor supports: sine, log1p)");
}

void run_taylor(const TaylorOptions& opt) {
    const std::vector<std::size_t> degrees = parse_degrees(opt.degrees);
    TaylorComparison cmp = taylor_for(opt.function, degrees);

    if (opt.format == "csv") {
        emit_text(to_csv(cmp), opt.out);
        return;
    }
    json j = to_json(cmp);
    if (opt.function == "sine" &&
        std::find(degrees.begin(), degrees.end(), std::size_t{4}) != degrees.end()) {
        ClosedFormP4 closed = closed_form_check_p4();
        j["closed_form_p4"] = json{{"power1", float_str(closed.power1)},
                                   {"power3", float_str(closed.power3)}};
    }
    emit_json(j, opt.out);
}

// --------------------------------------------------------------- example --

struct ExampleOptions {
    std::string id;
    std::size_t probes = 2000;
    std::string format = "json";
    std::string out;
};

// Runs one exact interpolation sub-case and prints what a worked solution
// shows: the system matrix, its inverse, the data vector, the solution and
// the recovered polynomial.
json transcript_case(std::ostream& os, const std::string& title,
                     const std::vector<long>& num, const std::vector<long>& den,
                     const ScalarFn& f) {
    std::vector<Scalar> xs;
    for (std::size_t i = 0; i < num.size(); ++i)
        xs.push_back(Scalar(Rational(num[i], den[i])));
    NodeVector nodes(std::move(xs));
    SampleSet samples = sample(f, nodes);
    SquareMatrix A = build_descending(nodes);
    SquareMatrix Ainv = invert(A);
    Polynomial p = fit(samples);

    os << "-- " << title << ": nodes " << vector_str(nodes.values()) << "\n";
    print_matrix(os, "A", A);
    print_matrix(os, "A^-1", Ainv);
    os << "b = " << vector_str(samples.values()) << "\n";
    os << "solution (descending) = " << vector_str(p.descending()) << "\n";
    os << "P(x) = " << polynomial_str(p) << "\n";
    const double residual = node_residual(p, samples);
    os << "node check: max |P(x_i) - y_i| = " << float_str(residual) << "\n\n";
    if (residual != 0.0)
        throw CheckFailure("interpolation failed to reproduce its samples");

    return json{{"inverse", to_json(Ainv)},
                {"matrix", to_json(A)},
                {"nodes", scalars_json(nodes.values())},
                {"polynomial", to_json(p)},
                {"solution", scalars_json(p.descending())},
                {"title", title},
                {"values", scalars_json(samples.values())}};
}

json example_23(std::ostream& os) {
    os << "f(x) = x + 3 on [-1,4]: fits of increasing size recover the line "
          "with zero-padded higher coefficients\n\n";
    ScalarFn f = poly_fn(Polynomial({Scalar(Rational(1)), Scalar(Rational(3))}));
    json cases = json::array();
    cases.push_back(transcript_case(os, "two nodes", {-1, 1}, {1, 1}, f));
    cases.push_back(transcript_case(os, "two nodes, shifted", {0, 2}, {1, 1}, f));
    cases.push_back(transcript_case(os, "three nodes", {-1, 0, 1}, {1, 1, 1}, f));
    cases.push_back(transcript_case(os, "four nodes", {-1, 0, 1, 2}, {1, 1, 1, 1}, f));
    return json{{"cases", std::move(cases)},
                {"function", "x + 3 on [-1,4]"},
                {"id", "2.3"}};
}

json example_24(std::ostream& os) {
    os << "f(x) = x^4 + 2 on [-1,1]: under-sampling gives lower-degree "
          "interpolants; five nodes recover f exactly\n\n";
    ScalarFn f = poly_fn(Polynomial({Scalar(Rational(1)), Scalar(Rational(0)),
                                     Scalar(Rational(0)), Scalar(Rational(0)),
                                     Scalar(Rational(2))}));
    json cases = json::array();
    cases.push_back(transcript_case(os, "two nodes", {-1, 1}, {1, 1}, f));
    cases.push_back(transcript_case(os, "three nodes", {-1, 0, 1}, {1, 1, 1}, f));
    cases.push_back(
        transcript_case(os, "four nodes", {-1, -1, 1, 1}, {1, 3, 3, 1}, f));
    cases.push_back(
        transcript_case(os, "five nodes", {-1, -1, 0, 1, 1}, {1, 2, 1, 2, 1}, f));
    return json{{"cases", std::move(cases)},
                {"function", "x^4 + 2 on [-1,1]"},
                {"id", "2.4"}};
}

json example_25(std::ostream& os) {
    os << "unknown-degree probe for f on [0,4] with f(1)=4, f(2)=26, f(3)=86, "
          "f(4)=202, f(0)=2\n\n";
    Polynomial truth({Scalar(Rational(3)), Scalar(Rational(1)), Scalar(Rational(-2)),
                      Scalar(Rational(2))});
    ScalarFn f = poly_fn(truth);
    json cases = json::array();
    cases.push_back(transcript_case(os, "quadratic try, nodes 1..3", {1, 2, 3},
                                    {1, 1, 1}, f));
    cases.push_back(transcript_case(os, "quadratic try, nodes 2..4", {2, 3, 4},
                                    {1, 1, 1}, f));
    os << "the two quadratic solutions disagree, so f is not of degree 2\n\n";
    cases.push_back(transcript_case(os, "cubic try, nodes 1..4", {1, 2, 3, 4},
                                    {1, 1, 1, 1}, f));
    cases.push_back(transcript_case(os, "five nodes 0..4", {0, 1, 2, 3, 4},
                                    {1, 1, 1, 1, 1}, f));

    DegreeProbe quad = degree_probe(f, Scalar(Rational(0)), Scalar(Rational(4)), 2, 2);
    DegreeProbe cubic = degree_probe(f, Scalar(Rational(0)), Scalar(Rational(4)), 3, 2);
    os << "degree_probe(degree 2): consistent = " << (quad.consistent ? "true" : "false")
       << "\n";
    os << "degree_probe(degree 3): consistent = "
       << (cubic.consistent ? "true" : "false") << "\n\n";
    if (quad.consistent || !cubic.consistent)
        throw CheckFailure("degree probe did not detect the cubic degree");

    return json{{"cases", std::move(cases)},
                {"degree_probe",
                 json{{"degree2_consistent", quad.consistent},
                      {"degree3_consistent", cubic.consistent}}},
                {"function", "3x^3 + x^2 - 2x + 2 on [0,4], degree unknown a priori"},
                {"id", "2.5"}};
}

json example_26(std::ostream& os, std::size_t probes) {
    os << "degree-18 interpolation of |x| on [-1,1] through 19 nodes\n\n";
    json fits = json::object();
    for (const char* fixture : {"ex2.6-nodes", "ex2.6-nodes-symmetric"}) {
        NodeVector nodes = fixture_nodes(fixture);
        SampleSet samples = sample(abs_fn(), nodes);
        Polynomial p = fit(samples);
        const double residual = node_residual(p, samples);
        const double sup =
            sup_error(abs_fn(), p, Scalar(Rational(-1)), Scalar(Rational(1)), probes);

        os << "-- node set " << fixture << "\n";
        os << "P(x) ~= " << polynomial_str(p.to_float()) << "\n";
        os << "node check: max |P(x_i) - |x_i|| = " << float_str(residual) << "\n";
        os << "sup |f - P| over " << probes + 1
           << " probes: " << float_str(sup) << "\n\n";
        if (residual != 0.0)
            throw CheckFailure("degree-18 fit is not exact at its nodes");

        fits[fixture] = json{{"node_residual", float_str(residual)},
                             {"polynomial", to_json(p)},
                             {"float_coefficients",
                              scalars_json(p.to_float().descending())},
                             {"sup_error", float_str(sup)}};
    }
    return json{{"fits", std::move(fits)},
                {"function", "|x| on [-1,1]"},
                {"id", "2.6"},
                {"probes", probes}};
}

void print_taylor_table(std::ostream& os, const TaylorComparison& cmp) {
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> head{"power", cmp.magnitudes ? "|reference|" : "reference"};
    for (std::size_t d : cmp.degrees) head.push_back("P" + std::to_string(d));
    grid.push_back(std::move(head));
    for (const TaylorRow& row : cmp.rows) {
        std::vector<std::string> line{std::to_string(row.power),
                                      float_str(row.reference)};
        for (const auto& e : row.estimates) line.push_back(e ? float_str(*e) : "-");
        grid.push_back(std::move(line));
    }
    std::vector<std::size_t> width(grid[0].size(), 0);
    for (const auto& line : grid)
        for (std::size_t j = 0; j < line.size(); ++j)
            width[j] = std::max(width[j], line[j].size());
    for (const auto& line : grid) {
        os << "  ";
        for (std::size_t j = 0; j < line.size(); ++j)
            os << pad_left(line[j], width[j]) << (j + 1 < line.size() ? "  " : "");
        os << "\n";
    }
}

json example_27(std::ostream& os) {
    os << "sine interpolation: g(y) = sin(2*pi*y - pi) on [0,1], then "
          "Taylor-coefficient estimates for sin on [-pi,pi]\n\n";
    json fits = json::object();
    for (auto [fixture, label] :
         {std::pair{"ex2.7-n6", "n6"}, std::pair{"ex2.7-n8", "n8"}}) {
        NodeVector nodes = fixture_nodes(fixture);
        const double pi = std::numbers::pi;
        ScalarFn g = to_unit(DomainMap(Scalar(-pi), Scalar(pi)), sin_fn());
        SampleSet samples = sample(g, nodes);
        Polynomial p = fit(samples);
        os << "-- " << fixture << " (degree " << p.degree() << ")\n";
        os << "P(y) = " << polynomial_str(p) << "\n";
        os << "node residual: " << float_str(node_residual(p, samples)) << "\n\n";
        fits[label] = to_json(p);
    }

    TaylorComparison cmp = taylor_for("sine", {4, 6, 8, 10});
    os << "coefficient magnitudes vs true series 1/k!:\n";
    print_taylor_table(os, cmp);

    ClosedFormP4 closed = closed_form_check_p4();
    os << "\nclosed-form check, degree-4 fit: power-1 coefficient = 8/(3*pi) = "
       << float_str(closed.power1)
       << ", power-3 coefficient = -8/(3*pi^3) = " << float_str(closed.power3)
       << "\n";

    return json{{"closed_form_p4", json{{"power1", float_str(closed.power1)},
                                        {"power3", float_str(closed.power3)}}},
                {"fits", std::move(fits)},
                {"function", "sin"},
                {"id", "2.7"},
                {"taylor", to_json(cmp)}};
}

json example_28(std::ostream& os) {
    os << "ln(1+x) on [-3/4,3/4]: Taylor-coefficient estimates from uniform "
          "interpolation\n\n";
    json fits = json::object();
    for (std::size_t n : {4, 6, 8, 10}) {
        NodeVector nodes = fixture_nodes("ln-partition-" + std::to_string(n));
        SampleSet samples = sample(log1p_fn(), nodes);
        Polynomial p = fit(samples);
        os << "-- degree " << n << "\n";
        os << "P(x) = " << polynomial_str(p) << "\n\n";
        fits["n" + std::to_string(n)] = to_json(p);
    }

    TaylorComparison cmp = taylor_for("log1p", {4, 6, 8, 10});
    os << "signed coefficients vs true series (-1)^(k-1)/k:\n";
    print_taylor_table(os, cmp);
    os << "\n";

    return json{{"fits", std::move(fits)},
                {"function", "ln(1+x)"},
                {"id", "2.8"},
                {"taylor", to_json(cmp)}};
}

void run_example(const ExampleOptions& opt) {
    if (opt.format == "csv")
        throw InvalidArgument("example transcripts support json output only "
                              "(--out writes the JSON next to the transcript)");

    std::ostringstream transcript;
    json j;
    if (opt.id == "2.3") j = example_23(transcript);
    else if (opt.id == "2.4") j = example_24(transcript);
    else if (opt.id == "2.5") j = example_25(transcript);
    else if (opt.id == "2.6") j = example_26(transcript, opt.probes);
    else if (opt.id == "2.7") j = example_27(transcript);
    else if (opt.id == "2.8") j = example_28(transcript);
    else
        throw InvalidArgument("unknown example id '" + opt.id +
                              "' (known: 2.3, 2.4, 2.5, 2.6, 2.7, 2.8)");

    std::cout << transcript.str();
    if (!opt.out.empty()) emit_json(j, opt.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vandermonde-based polynomial fitting and analysis"};
    app.require_subcommand(1);

    DetOptions det_opt;
    CLI::App* det = app.add_subcommand(
        "det", "determinant of the node matrix, two ways, with cross-check");
    det->add_option("--nodes", det_opt.nodes, "comma-separated node list");
    det->add_option("--nodes-file", det_opt.nodes_file, "file with node list");
    det->add_option("--backend", det_opt.backend, "exact|float")
        ->check(CLI::IsMember({"exact", "float"}));
    det->add_option("--format", det_opt.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    det->add_option("--out", det_opt.out, "output path (default stdout)");

    FitOptions fit_opt;
    CLI::App* fitc = app.add_subcommand("fit", "interpolate samples from CSV");
    fitc->add_option("--input", fit_opt.input, "samples CSV path, or - for stdin")
        ->required();
    fitc->add_option("--degree", fit_opt.degree,
                     "expected degree (validates sample count = degree+1)");
    fitc->add_option("--tol", fit_opt.tol,
                     "zero tolerance for the effective-degree report");
    fitc->add_option("--backend", fit_opt.backend, "exact|float")
        ->check(CLI::IsMember({"exact", "float"}));
    fitc->add_option("--format", fit_opt.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    fitc->add_option("--out", fit_opt.out, "output path (default stdout)");

    ConvergeOptions conv_opt;
    CLI::App* conv = app.add_subcommand(
        "converge", "dyadic refinement study of a registry function on [0,1]");
    conv->add_option("--function", conv_opt.function,
                     "abs|log1p|runge|sine|poly:<coeffs>")
        ->required();
    conv->add_option("--n0", conv_opt.n0, "base segment count N_0")
        ->check(CLI::PositiveNumber);
    conv->add_option("--levels", conv_opt.levels, "max refinement level");
    conv->add_option("--probes", conv_opt.probes, "sup-scan probe count")
        ->check(CLI::PositiveNumber);
    conv->add_option("--backend", conv_opt.backend,
                     "exact|float (default: exact when the function allows it)")
        ->check(CLI::IsMember({"exact", "float"}));
    conv->add_option("--plot-dir", conv_opt.plot_dir,
                     "write per-level x,error CSV curves into this directory");
    conv->add_option("--format", conv_opt.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    conv->add_option("--out", conv_opt.out, "output path (default stdout)");

    TaylorOptions tay_opt;
    CLI::App* tay = app.add_subcommand(
        "taylor", "estimate Taylor coefficients at 0 from interpolation fits");
    tay->add_option("--function", tay_opt.function, "sine|log1p")->required();
    tay->add_option("--degrees", tay_opt.degrees, "fit degrees (default 4,6,8,10)");
    tay->add_option("--format", tay_opt.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    tay->add_option("--out", tay_opt.out, "output path (default stdout)");

    ExampleOptions ex_opt;
    CLI::App* ex = app.add_subcommand(
        "example", "replay a worked example end to end (transcript to stdout)");
    ex->add_option("id", ex_opt.id, "2.3|2.4|2.5|2.6|2.7|2.8")->required();
    ex->add_option("--probes", ex_opt.probes, "sup-scan probe count")
        ->check(CLI::PositiveNumber);
    ex->add_option("--format", ex_opt.format, "json (csv unsupported here)");
    ex->add_option("--out", ex_opt.out, "write the machine-readable JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (det->parsed()) run_det(det_opt);
        else if (fitc->parsed()) run_fit(fit_opt);
        else if (conv->parsed()) run_converge(conv_opt);
        else if (tay->parsed()) run_taylor(tay_opt);
        else if (ex->parsed()) run_example(ex_opt);
    } catch (const BackendMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
