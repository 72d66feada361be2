// Command-line front end: exact genus and equivariant character
// computations on JSON fixed-point / Pontryagin data.
//
// Exit codes: 0 success (NON-RIGID findings included), 1 mathematical
// rejection, 2 usage or parse errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "genus/characters.hpp"
#include "genus/constructions.hpp"
#include "genus/elliptic.hpp"
#include "genus/genus_spec.hpp"
#include "genus/io.hpp"

namespace {

constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json load_json(const std::string& path) {
    try {
        if (path == "-") return nlohmann::json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open file: " + path);
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("JSON parse error: ") + e.what());
    }
}

genus::FixedPointData load_fixed_points(const std::string& path) {
    try {
        return genus::fixed_point_data_from_json(load_json(path));
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("bad fixed point data: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad fixed point data: ") + e.what());
    }
}

genus::PontryaginData load_pontryagin(const std::string& path) {
    try {
        return genus::pontryagin_data_from_json(load_json(path));
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("bad Pontryagin data: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad Pontryagin data: ") + e.what());
    }
}

int default_q_order() {
    if (const char* env = std::getenv("GENUS_Q_ORDER_DEFAULT")) {
        try {
            int n = std::stoi(env);
            if (n >= 1) return n;
        } catch (const std::exception&) {
        }
        throw UsageError("GENUS_Q_ORDER_DEFAULT must be a positive integer");
    }
    return 4;
}

// --spec values: signature | ahat | elliptic[:QORDER] | custom:DELTA,EPS
struct SpecChoice {
    bool elliptic = false;
    int q_order = 1;
    genus::GenusSpec<genus::Rational> constant;
};

SpecChoice parse_spec(const std::string& s) {
    SpecChoice c;
    if (s == "signature") {
        c.constant = genus::signature_spec();
    } else if (s == "ahat") {
        c.constant = genus::ahat_spec();
    } else if (s == "elliptic" || s.rfind("elliptic:", 0) == 0) {
        c.elliptic = true;
        if (s == "elliptic") {
            c.q_order = default_q_order();
        } else {
            try {
                c.q_order = std::stoi(s.substr(9));
            } catch (const std::exception&) {
                throw UsageError("bad q-order in --spec " + s);
            }
            if (c.q_order < 1) throw UsageError("q-order must be >= 1");
        }
    } else if (s.rfind("custom:", 0) == 0) {
        std::string body = s.substr(7);
        size_t comma = body.find(',');
        if (comma == std::string::npos)
            throw UsageError("--spec custom needs DELTA,EPS");
        try {
            c.constant.delta = genus::parse_rational(body.substr(0, comma));
            c.constant.eps = genus::parse_rational(body.substr(comma + 1));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("bad custom spec: ") + e.what());
        }
    } else {
        throw UsageError("unknown --spec: " + s);
    }
    return c;
}

std::vector<int> parse_weights(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw UsageError("bad weight list entry: '" + tok + "'");
        }
    }
    if (out.empty()) throw UsageError("empty weight list");
    return out;
}

void run_genus_eval(const std::string& spec_str, const std::string& file) {
    SpecChoice spec = parse_spec(spec_str);
    genus::PontryaginData data = load_pontryagin(file);
    if (spec.elliptic) {
        genus::GenusSpec<genus::QSeries> es = genus::universal_elliptic_spec(spec.q_order);
        std::cout << genus::format_series(genus::evaluate_genus(data, es)) << "\n";
    } else {
        std::cout << genus::format_rational(genus::evaluate_genus(data, spec.constant)) << "\n";
    }
}

void run_genus_log(const std::string& spec_str, int max_i) {
    SpecChoice spec = parse_spec(spec_str);
    std::string out;
    if (spec.elliptic) {
        genus::GenusSpec<genus::QSeries> es = genus::universal_elliptic_spec(spec.q_order);
        for (const genus::QSeries& v : genus::cp_coefficients(es, max_i)) {
            if (!out.empty()) out += ", ";
            out += genus::format_series(v);
        }
    } else {
        for (const genus::Rational& v : genus::cp_coefficients(spec.constant, max_i)) {
            if (!out.empty()) out += ", ";
            out += genus::format_rational(v);
        }
    }
    std::cout << out << "\n";
}

void run_equiv_char(const std::string& type, int q_order, const std::string& file,
                    bool check_rigidity, bool eval_at_one) {
    genus::FixedPointData data = load_fixed_points(file);
    genus::EquivariantCharacter ch;
    if (type == "signature") {
        ch = genus::signature_character(data);
    } else if (type == "ahat") {
        ch = genus::ahat_character(data);
    } else if (type == "elliptic") {
        ch = genus::elliptic_character(data, q_order);
    } else {
        throw UsageError("unknown --type: " + type);
    }

    genus::PolynomialityReport poly = genus::polynomiality_check(ch);
    for (int n = 0; n < ch.q_order; ++n) {
        std::string prefix = ch.q_order > 1 ? "q^" + std::to_string(n) + ": " : "";
        if (ch.polynomial_form) {
            std::cout << prefix << genus::format_laurent((*ch.polynomial_form)[n]) << "\n";
        } else {
            std::cout << prefix << genus::format_ratfunc(ch.per_q[n]) << "\n";
        }
    }
    if (!poly.pass) {
        std::cout << "NOT a Laurent polynomial: pole away from 0 at q-degree";
        for (int n : poly.failed_q) std::cout << " " << n;
        std::cout << "\n";
    }

    if (check_rigidity) {
        genus::RigidityReport rig = genus::rigidity_check(ch);
        if (!rig.is_character) {
            std::cout << "NOT A CHARACTER (polynomiality fails)\n";
        } else if (rig.is_rigid) {
            bool all_zero = true;
            for (const genus::LaurentPoly& p : *ch.polynomial_form)
                if (!p.is_zero()) all_zero = false;
            std::cout << (all_zero ? "RIGID (all coefficients 0)" : "RIGID") << "\n";
        } else {
            std::cout << "NON-RIGID, offending a_nk:\n";
            for (const auto& [n, k, c] : rig.offenders)
                std::cout << "  n=" << n << " k=" << k << " a=" << genus::format_rational(c)
                          << "\n";
        }
    }

    if (eval_at_one) {
        try {
            genus::QSeries v = genus::evaluate_at_one(ch);
            if (ch.q_order > 1)
                std::cout << "value at 1: " << genus::format_series(v) << "\n";
            else
                std::cout << "value at 1: " << genus::format_rational(v.coeff(0)) << "\n";
        } catch (const std::domain_error& e) {
            throw MathError(std::string("evaluation at 1: ") + e.what());
        }
    }
}

std::pair<std::string, int> split_file_index(const std::string& arg) {
    size_t colon = arg.rfind(':');
    if (colon == std::string::npos || colon + 1 >= arg.size())
        throw UsageError("expected FILE:INDEX, got '" + arg + "'");
    try {
        return {arg.substr(0, colon), std::stoi(arg.substr(colon + 1))};
    } catch (const std::exception&) {
        throw UsageError("bad index in '" + arg + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact elliptic genus and equivariant character computations"};
    app.require_subcommand(1);

    // genus eval / genus log
    CLI::App* genus_cmd = app.add_subcommand("genus", "Genus evaluation from Pontryagin data");
    genus_cmd->require_subcommand(1);
    std::string spec_str = "signature", pontryagin_file;
    int max_i = 3;
    CLI::App* eval_cmd = genus_cmd->add_subcommand("eval", "Evaluate a genus");
    eval_cmd->add_option("--spec", spec_str, "signature|ahat|elliptic[:QORDER]|custom:DELTA,EPS");
    eval_cmd->add_option("--pontryagin", pontryagin_file, "Pontryagin data JSON (- for stdin)")
        ->required();
    CLI::App* log_cmd = genus_cmd->add_subcommand("log", "Print phi[CP^{2i}]");
    log_cmd->add_option("--spec", spec_str, "signature|ahat|elliptic[:QORDER]|custom:DELTA,EPS");
    log_cmd->add_option("--max-i", max_i, "largest i");

    // equiv char
    CLI::App* equiv_cmd = app.add_subcommand("equiv", "Equivariant characters from fixed point data");
    equiv_cmd->require_subcommand(1);
    std::string char_type = "signature", data_file;
    int q_order = -1;
    bool check_rigidity = false, eval_at_one = false;
    CLI::App* char_cmd = equiv_cmd->add_subcommand("char", "Lefschetz fixed point character");
    char_cmd->add_option("--type", char_type, "signature|ahat|elliptic");
    char_cmd->add_option("--q-order", q_order, "q-series truncation order (elliptic)");
    char_cmd->add_option("--data", data_file, "fixed point data JSON (- for stdin)")->required();
    char_cmd->add_flag("--check-rigidity", check_rigidity, "report rigidity");
    char_cmd->add_flag("--eval-at-one", eval_at_one, "evaluate at lambda = 1");

    // construct subcommands
    CLI::App* construct_cmd = app.add_subcommand("construct", "Fixed point data generators");
    construct_cmd->require_subcommand(1);
    std::string weights_str;
    CLI::App* cpn_cmd = construct_cmd->add_subcommand("cpn", "Linear action on CP^n");
    cpn_cmd->add_option("--weights", weights_str, "rotation numbers a_0,...,a_n")->required();
    CLI::App* sphere_cmd = construct_cmd->add_subcommand("sphere", "Representation sphere");
    sphere_cmd->add_option("--weights", weights_str, "representation weights")->required();
    std::vector<std::string> files;
    CLI::App* product_cmd = construct_cmd->add_subcommand("product", "Product of two data sets");
    product_cmd->add_option("files", files, "A.json B.json")->expected(2);
    CLI::App* connect_cmd =
        construct_cmd->add_subcommand("connect-sum", "Equivariant connected sum");
    connect_cmd->add_option("files", files, "A.json:IDX B.json:IDX")->expected(2);
    long chern_k = 1, chern_mn = 0, chern_ms = 0;
    CLI::App* chern_cmd = construct_cmd->add_subcommand("check-chern", "Weight/Chern relation");
    chern_cmd->add_option("--k", chern_k, "principal isotropy order")->required();
    chern_cmd->add_option("--mn", chern_mn, "sum of weights at the north pole")->required();
    chern_cmd->add_option("--ms", chern_ms, "sum of weights at the south pole")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (eval_cmd->parsed()) {
            run_genus_eval(spec_str, pontryagin_file);
        } else if (log_cmd->parsed()) {
            if (max_i < 0) throw UsageError("--max-i must be >= 0");
            run_genus_log(spec_str, max_i);
        } else if (char_cmd->parsed()) {
            if (q_order < 0) q_order = default_q_order();
            run_equiv_char(char_type, q_order, data_file, check_rigidity, eval_at_one);
        } else if (cpn_cmd->parsed()) {
            std::cout << genus::to_json(genus::linear_cpn(parse_weights(weights_str))).dump(2)
                      << "\n";
        } else if (sphere_cmd->parsed()) {
            std::cout << genus::to_json(
                             genus::sphere_of_representation(parse_weights(weights_str)))
                             .dump(2)
                      << "\n";
        } else if (product_cmd->parsed()) {
            genus::FixedPointData a = load_fixed_points(files[0]);
            genus::FixedPointData b = load_fixed_points(files[1]);
            std::cout << genus::to_json(genus::product(a, b)).dump(2) << "\n";
        } else if (connect_cmd->parsed()) {
            auto [fa, ia] = split_file_index(files[0]);
            auto [fb, ib] = split_file_index(files[1]);
            genus::FixedPointData a = load_fixed_points(fa);
            genus::FixedPointData b = load_fixed_points(fb);
            std::cout << genus::to_json(genus::equivariant_connected_sum(a, ia, b, ib)).dump(2)
                      << "\n";
        } else if (chern_cmd->parsed()) {
            genus::ChernWeightReport rep =
                genus::chern_weight_relation(chern_k, chern_mn, chern_ms);
            std::cout << "c1 = " << genus::format_rational(rep.c1)
                      << (rep.integral ? " (integral)"
                                       : " (non-integral: no such equivariant bundle)")
                      << "\n";
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const genus::NonIsolatedFixedSet& e) {
        std::cerr << "non-isolated fixed set: " << e.what() << "\n";
        return kExitMath;
    } catch (const genus::GluingMismatch& e) {
        std::cerr << "gluing mismatch: " << e.what() << "\n";
        return kExitMath;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    }
    return 0;
}
