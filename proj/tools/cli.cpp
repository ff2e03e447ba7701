#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "symtensor/roots.hpp"
#include "symtensor/tensor_json.hpp"

namespace symtensor::cli {

using nlohmann::json;

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json value_json(const RealValue& v) {
    if (v.is_exact()) {
        return v.exact->to_string();
    }
    return v.value;
}

json matrix_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c).to_string());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json transform_json(const ChangeOfVariables& p) {
    json rows = json::array();
    for (unsigned r = 0; r < p.dim(); ++r) {
        json row = json::array();
        for (unsigned c = 0; c < p.dim(); ++c) {
            if (p.is_exact()) {
                row.push_back(p.exact_matrix()(r, c).to_string());
            } else {
                row.push_back(p(r, c));
            }
        }
        rows.push_back(std::move(row));
    }
    return {{"exact", p.is_exact()}, {"matrix", std::move(rows)}};
}

struct Input {
    std::optional<BinaryCubic> cubic;
    std::optional<SymTensor3> tensor;
};

Input resolve_input(const std::string& positional, const std::string& cubic_flag) {
    Input in;
    try {
        if (!cubic_flag.empty()) {
            in.cubic = BinaryCubic::parse(cubic_flag);
            return in;
        }
        if (positional.empty()) {
            throw InputError("no input given: pass a tensor JSON path or --cubic a,b,c,d");
        }
        if (std::filesystem::exists(positional)) {
            in.tensor = load_tensor_file(positional);
            return in;
        }
        in.cubic = BinaryCubic::parse(positional);
    } catch (const DocumentError& e) {
        throw InputError(e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("'") + positional + cubic_flag + "': " + e.what());
    }
    return in;
}

SymTensor3 input_tensor(const Input& in) {
    return in.tensor ? *in.tensor : cubic_to_tensor(*in.cubic);
}

std::vector<double> parse_vector(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string field;
    while (std::getline(ss, field, ',')) {
        try {
            out.push_back(Rational::parse(field).to_double());
        } catch (const std::exception&) {
            try {
                std::size_t used = 0;
                out.push_back(std::stod(field, &used));
                if (used != field.size()) {
                    throw InputError("bad vector component '" + field + "'");
                }
            } catch (const std::logic_error&) {
                throw InputError("bad vector component '" + field + "'");
            }
        }
    }
    return out;
}

double parse_real(const std::string& text) {
    try {
        return Rational::parse(text).to_double();
    } catch (const std::exception&) {
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size()) {
            return v;
        }
    } catch (const std::logic_error&) {
    }
    throw InputError("bad number '" + text + "'");
}

json branch_json(const Branch& b) {
    json j{{"kind", b.kind == Branch::Kind::Direction ? "direction" : "zero_block"},
           {"pinned", b.pinned},
           {"multiplicity", b.multiplicity}};
    if (b.kind == Branch::Kind::Direction) {
        j["direction"] = b.direction;
    }
    return j;
}

struct Globals {
    double tol = kDefaultRootTolerance;
    bool json_output = false;
    std::string out_dir;
};

int cmd_charpoly(const std::string& cubic_text, bool closed, bool det, bool both, const Globals& g,
                 std::ostream& out) {
    BinaryCubic f;
    try {
        f = BinaryCubic::parse(cubic_text);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const bool use_closed = closed && !both;
    const CharPoly primary = use_closed ? charpoly_closed_form(f) : charpoly_det(f);
    std::optional<bool> check;
    if (both) {
        const CharPoly other = charpoly_closed_form(f);
        check = other.poly == primary.poly;
    }
    (void)det;
    const std::string method = both ? "both" : (use_closed ? "closed-form" : "det");
    if (g.json_output) {
        json j{{"cubic", f.to_string()},
               {"method", method},
               {"poly", primary.poly.to_string()},
               {"degenerate", primary.degenerate},
               {"alpha",
                {{"alpha2", primary.alpha[0].to_string()},
                 {"alpha4", primary.alpha[1].to_string()},
                 {"alpha6", primary.alpha[2].to_string()},
                 {"alpha8", primary.alpha[3].to_string()}}}};
        if (check) {
            j["check"] = *check ? "PASS" : "FAIL";
        }
        out << j.dump(2) << "\n";
    } else {
        out << (primary.degenerate ? "0 (degenerate)" : primary.poly.to_string()) << "\n";
        out << "alpha2 = " << primary.alpha[0] << ", alpha4 = " << primary.alpha[1]
            << ", alpha6 = " << primary.alpha[2] << ", alpha8 = " << primary.alpha[3] << "\n";
        if (check) {
            out << "det vs closed form: " << (*check ? "PASS" : "FAIL") << "\n";
        }
    }
    return check && !*check ? kCheckFailed : kSuccess;
}

EigenvalueReport eigen_report(const Input& in, std::optional<unsigned> unit_block, double tol) {
    if (in.cubic) {
        return eig_direct_sum(*in.cubic, unit_block.value_or(0), tol);
    }
    if (unit_block) {
        throw InputError("--unit-block applies only to --cubic input");
    }
    const SymTensor3& t = *in.tensor;
    if (t.dim() == 1 && t.at(1, 1, 1) == Rational(1)) {
        return eig_unit(1);
    }
    const auto shape = recognize_unit_direct_sum(t);
    if (!shape) {
        throw UnsupportedStructure("unsupported tensor shape: expected a 2-dimensional tensor or B ⊕ I_(k)");
    }
    return eig_direct_sum(shape->block, shape->k, tol);
}

int cmd_eig(const Input& in, std::optional<unsigned> unit_block, double tol, std::ostream& out) {
    out << report_to_json(eigen_report(in, unit_block, tol)).dump(2) << "\n";
    return kSuccess;
}

int cmd_center(const Input& in, std::ostream& out) {
    const SymTensor3 t = input_tensor(in);
    const CenterAlgebra z = center(t);
    json j = center_to_json(z);
    try {
        j["algebra_class"] = classify_algebra(z).to_string();
    } catch (const UnsupportedStructure&) {
        j["algebra_class"] = nullptr;
    }
    out << j.dump(2) << "\n";
    return kSuccess;
}

int cmd_classify(const Input& in, std::ostream& out) {
    BinaryCubic f;
    if (in.cubic) {
        f = *in.cubic;
    } else {
        if (in.tensor->dim() != 2) {
            throw UnsupportedStructure("classify requires a binary cubic (2-dimensional tensor)");
        }
        f = tensor_to_cubic(*in.tensor);
    }
    const CenterAlgebra z = center(f);
    json j{{"cubic", f.to_string()}, {"center", center_to_json(z)}};
    const CanonicalClass cls = classify_cubic(f);
    j["canonical_class"] = to_string(cls);
    j["algebra_class"] = z.dimension() == 2 ? json(classify_algebra(z).to_string()) : json(nullptr);
    if (cls == CanonicalClass::Zero) {
        j["transform"] = nullptr;
        j["canonical_coefficients"] = {"0", "0", "0", "0"};
        j["verified"] = true;
        out << j.dump(2) << "\n";
        return kSuccess;
    }
    const CanonicalTransform ct = canonical_transform(f);
    j["transform"] = transform_json(ct.transform);
    const BinaryCubic target = canonical_representative(cls);
    const std::array<Rational, 4> want{target.a, target.b, target.c, target.d};
    bool verified = true;
    json coeffs = json::array();
    if (ct.transform.is_exact()) {
        const BinaryCubic g = tensor_to_cubic(apply_change(cubic_to_tensor(f), ct.transform.exact_matrix()));
        const std::array<Rational, 4> got{g.a, g.b, g.c, g.d};
        for (std::size_t i = 0; i < 4; ++i) {
            coeffs.push_back(got[i].to_string());
            verified = verified && got[i] == want[i];
        }
        j["max_deviation"] = 0.0;
    } else {
        const RealSymTensor3 g = apply_change(cubic_to_tensor(f), ct.transform);
        const std::array<double, 4> got{g.at(1, 1, 1), g.at(1, 1, 2), g.at(1, 2, 2), g.at(2, 2, 2)};
        double worst = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            coeffs.push_back(got[i]);
            worst = std::max(worst, std::fabs(got[i] - want[i].to_double()));
        }
        verified = worst < 1e-9;
        j["max_deviation"] = worst;
    }
    j["canonical_coefficients"] = std::move(coeffs);
    j["verified"] = verified;
    out << j.dump(2) << "\n";
    return verified ? kSuccess : kCheckFailed;
}

json counterexample_json(const CounterexamplePair& pair, unsigned n) {
    return {{"n", n},
            {"verdict", pair.verdict},
            {"squares_equal", same_squares(pair.report1, pair.report2)},
            {"classes", {pair.class1.to_string(), pair.class2.to_string()}},
            {"report1", report_to_json(pair.report1)},
            {"report2", report_to_json(pair.report2)}};
}

int cmd_counterexample(long n, const Globals& g, std::ostream& out) {
    if (n < 2) {
        throw InputError("counterexample requires n >= 2");
    }
    const auto dim = static_cast<unsigned>(n);
    const CounterexamplePair pair = build_counterexample(dim);
    const json report = counterexample_json(pair, dim);
    if (!g.out_dir.empty()) {
        std::filesystem::create_directories(g.out_dir);
        const std::filesystem::path dir(g.out_dir);
        save_tensor_file(pair.t1, (dir / "T1.json").string());
        save_tensor_file(pair.t2, (dir / "T2.json").string());
        std::ofstream rep(dir / "report.json");
        rep << report.dump(2) << "\n";
    }
    if (g.json_output || g.out_dir.empty()) {
        out << report.dump(2) << "\n";
    } else {
        out << "T1 squares: " << squares_summary(pair.report1) << "  class " << pair.class1.to_string() << "\n";
        out << "T2 squares: " << squares_summary(pair.report2) << "  class " << pair.class2.to_string() << "\n";
        out << "verdict: " << (pair.verdict ? "true" : "false") << "\n";
    }
    return pair.verdict ? kSuccess : kCheckFailed;
}

int cmd_verify(const std::string& path, const std::string& lambda_text, const std::string& vector_text,
               double threshold, const Globals& g, std::ostream& out) {
    SymTensor3 t;
    try {
        t = load_tensor_file(path);
    } catch (const DocumentError& e) {
        throw InputError(e.what());
    }
    const double lambda = parse_real(lambda_text);
    const std::vector<double> x = parse_vector(vector_text);
    if (x.size() != t.dim()) {
        throw InputError("vector length " + std::to_string(x.size()) + " does not match tensor dimension " +
                         std::to_string(t.dim()));
    }
    const Residual r = residual(t, lambda, x);
    const bool pass = r.equation < threshold && r.normalization < threshold;
    if (g.json_output) {
        out << json{{"equation_residual", r.equation},
                    {"normalization_residual", r.normalization},
                    {"threshold", threshold},
                    {"pass", pass}}
                   .dump(2)
            << "\n";
    } else {
        out << "equation residual: " << format_double(r.equation) << "\n";
        out << "normalization residual: " << format_double(r.normalization) << "\n";
        out << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kSuccess : kCheckFailed;
}

}  // namespace

std::string squares_summary(const EigenvalueReport& report) {
    std::string s = "{";
    for (auto it = report.squares.rbegin(); it != report.squares.rend(); ++it) {
        if (s.size() > 1) {
            s += ", ";
        }
        s += (it->value.is_exact() ? it->value.exact->to_string() : format_double(it->value.value)) + ":" +
             std::to_string(it->multiplicity);
    }
    return s + "}";
}

json report_to_json(const EigenvalueReport& report) {
    json squares = json::array();
    for (const auto& s : report.squares) {
        json e{{"value", value_json(s.value)},
               {"approx", s.value.value},
               {"exact", s.value.is_exact()},
               {"multiplicity", s.multiplicity},
               {"snapped", s.snapped}};
        e["resultant_multiplicity"] = s.resultant_multiplicity ? json(*s.resultant_multiplicity) : json(nullptr);
        squares.push_back(std::move(e));
    }
    json pairs = json::array();
    for (const auto& p : report.pairs) {
        pairs.push_back({{"lambda", value_json(p.lambda)},
                         {"vector", p.vector},
                         {"residual", p.residual.equation},
                         {"norm_residual", p.residual.normalization},
                         {"branch", branch_json(p.branch)}});
    }
    return {{"dim", report.dim},
            {"class_count", report.class_count},
            {"snap_events", report.snap_events},
            {"summary", squares_summary(report)},
            {"squares", std::move(squares)},
            {"eigenpairs", std::move(pairs)}};
}

json center_to_json(const CenterAlgebra& z) {
    json basis = json::array();
    for (const auto& x : z.basis) {
        basis.push_back(matrix_json(x));
    }
    return {{"n", z.n}, {"dimension", z.dimension()}, {"basis", std::move(basis)}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact tools for third-order symmetric tensors: centers, canonical forms, "
                 "characteristic polynomials and Z-eigenvalues"};
    app.name(args.empty() ? "symtensor" : args.front());
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--tol", g.tol, "Relative tolerance for irrational root refinement")
        ->check(CLI::PositiveNumber);
    app.add_flag("--json", g.json_output, "Emit JSON where text is the default");
    app.add_option("--out", g.out_dir, "Output directory for generated files");

    std::string charpoly_cubic;
    bool closed = false;
    bool det = false;
    bool both = false;
    auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of a binary cubic a,b,c,d");
    charpoly->add_option("cubic", charpoly_cubic, "Coefficients a,b,c,d")->required();
    auto* closed_flag = charpoly->add_flag("--closed-form", closed, "Use the closed-form coefficients");
    auto* det_flag = charpoly->add_flag("--det", det, "Use the combination-resultant determinant (default)");
    auto* both_flag = charpoly->add_flag("--both", both, "Compute both and compare");
    closed_flag->excludes(det_flag)->excludes(both_flag);
    det_flag->excludes(both_flag);

    std::string eig_input;
    std::string eig_cubic;
    std::optional<unsigned> unit_block;
    auto* eig = app.add_subcommand("eig", "Z-eigenpairs of a 2-dimensional tensor or B ⊕ I_(k)");
    eig->add_option("input", eig_input, "Tensor JSON path or cubic a,b,c,d");
    eig->add_option("--cubic", eig_cubic, "Leading block as a,b,c,d");
    eig->add_option("--unit-block", unit_block, "Number k of appended unit coordinates");

    std::string center_input;
    std::string center_cubic;
    auto* center_cmd = app.add_subcommand("center", "Harrison center of a tensor");
    center_cmd->add_option("input", center_input, "Tensor JSON path or cubic a,b,c,d");
    center_cmd->add_option("--cubic", center_cubic, "Binary cubic a,b,c,d");

    std::string classify_input;
    std::string classify_cubic_text;
    auto* classify = app.add_subcommand("classify", "Canonical form of a binary cubic with its transform");
    classify->add_option("input", classify_input, "Cubic a,b,c,d or 2-dimensional tensor JSON path");
    classify->add_option("--cubic", classify_cubic_text, "Binary cubic a,b,c,d");

    long counter_n = 0;
    auto* counter = app.add_subcommand("counterexample", "Equal-eigenvalue, inequivalent tensor pair");
    counter->add_option("n", counter_n, "Dimension n >= 2")->required();

    std::string verify_path;
    std::string verify_lambda;
    std::string verify_vector;
    double threshold = 1e-8;
    auto* verify = app.add_subcommand("verify", "Residual of a candidate eigenpair");
    verify->add_option("tensor", verify_path, "Tensor JSON path")->required();
    verify->add_option("--lambda", verify_lambda, "Eigenvalue")->required();
    verify->add_option("--vector", verify_vector, "Eigenvector, comma separated")->required();
    verify->add_option("--threshold", threshold, "Pass threshold for both residual components");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (charpoly->parsed()) {
            return cmd_charpoly(charpoly_cubic, closed, det, both, g, out);
        }
        if (eig->parsed()) {
            return cmd_eig(resolve_input(eig_input, eig_cubic), unit_block, g.tol, out);
        }
        if (center_cmd->parsed()) {
            return cmd_center(resolve_input(center_input, center_cubic), out);
        }
        if (classify->parsed()) {
            return cmd_classify(resolve_input(classify_input, classify_cubic_text), out);
        }
        if (counter->parsed()) {
            return cmd_counterexample(counter_n, g, out);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_path, verify_lambda, verify_vector, threshold, g, out);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const UnsupportedStructure& e) {
        err << "error: " << e.what() << "\n";
        return kUnsupported;
    } catch (const DegenerateInput& e) {
        err << "error: " << e.what() << "\n";
        return kUnsupported;
    }
    err << "error: no subcommand\n";
    return kInputError;
}

}  // namespace symtensor::cli
