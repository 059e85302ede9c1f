#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ztri/analyze.hpp"
#include "ztri/generate.hpp"
#include "ztri/io.hpp"
#include "ztri/oracle.hpp"
#include "ztri/ultrametric.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitSingular = 4;
constexpr int kExitInfeasible = 5;

struct Options {
    double tol_abs = 1e-9;
    double tol_rel = 1e-9;
    bool oracle = false;
    std::size_t minor_budget = ztri::kDefaultMinorBudget;
    std::uint64_t seed = 0;

    ztri::Tolerance tol() const { return {tol_abs, tol_rel}; }
};

int run_analyze(const std::string& path, const Options& opt) {
    ztri::ParsedInput in = ztri::load_input(path, opt.tol());
    ztri::AnalyzeOptions ao;
    ao.tol = opt.tol();
    ao.minor_budget = opt.minor_budget;
    nlohmann::json rep = ztri::analyze_input(in, ao);
    std::cout << ztri::dump_json(rep);
    if (!rep["consistent"].get<bool>()) {
        std::cerr << "analyze: closed form disagrees with oracle beyond tolerance\n";
        return kExitInconsistent;
    }
    return kExitOk;
}

int run_invert(const std::string& path, const Options& opt) {
    ztri::ParsedInput in = ztri::load_input(path, opt.tol());
    ztri::AnalyzeOptions ao;
    ao.tol = opt.tol();
    nlohmann::json rep = ztri::analyze_input(in, ao);
    if (!rep["inverse"]["band"].is_null()) {
        std::cout << ztri::dump_json(rep["inverse"]["band"]);
        return kExitOk;
    }
    const double det = rep["determinant"]["oracle"].get<double>();
    if (std::abs(det) <= opt.tol().threshold(std::max(1.0, in.matrix.max_abs())))
        throw ztri::SingularMatrix("invert: matrix is singular");
    if (!opt.oracle) {
        std::cerr << "invert: no recognized closed-form structure; rerun with --oracle\n";
        return kExitParse;
    }
    std::cout << ztri::dump_json(ztri::matrix_to_json(ztri::lu_inverse(in.matrix)));
    return kExitOk;
}

int run_classify(const std::string& path, const Options& opt) {
    ztri::ParsedInput in = ztri::load_input(path, opt.tol());
    ztri::AnalyzeOptions ao;
    ao.tol = opt.tol();
    ao.minor_budget = opt.minor_budget;
    nlohmann::json rep = ztri::analyze_input(in, ao);
    std::cout << ztri::dump_json(rep["ls"]);
    if (rep["ls"]["agreement"].is_boolean() && !rep["ls"]["agreement"].get<bool>()) {
        std::cerr << "classify: predictor and oracle disagree\n";
        return kExitInconsistent;
    }
    return kExitOk;
}

int run_generate(const std::string& cls, std::size_t n, const Options& opt) {
    ztri::Generated g = ztri::generate_instance(ztri::gen_class_from_name(cls), n, opt.seed);
    nlohmann::json out{{"params", g.params}, {"matrix", ztri::matrix_to_json(g.matrix)}};
    std::cout << ztri::dump_json(out);
    return kExitOk;
}

int run_check_gum(const std::string& path, const Options& opt) {
    ztri::ParsedInput in = ztri::load_input(path, opt.tol());
    ztri::GumCertificate cert = ztri::gum_decompose(in.matrix, opt.tol());
    std::cout << ztri::dump_json(ztri::gum_certificate_to_json(cert));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structured analysis of inverse tridiagonal Z-matrices"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--tol-abs", opt.tol_abs, "absolute zero threshold")->check(CLI::PositiveNumber);
    app.add_option("--tol-rel", opt.tol_rel, "relative zero threshold")->check(CLI::PositiveNumber);
    app.add_flag("--oracle", opt.oracle, "allow dense LU fallbacks");
    app.add_option("--minor-budget", opt.minor_budget, "max minors to enumerate");
    app.add_option("--seed", opt.seed, "generator seed");

    std::string input, gen_class;
    std::size_t gen_n = 1;

    auto* analyze = app.add_subcommand("analyze", "full JSON analysis report");
    analyze->add_option("input", input, "matrix or parameter file")->required();
    auto* invert = app.add_subcommand("invert", "closed-form (or --oracle) inverse");
    invert->add_option("input", input, "matrix or parameter file")->required();
    auto* classify = app.add_subcommand("classify", "L_s class of the inverse");
    classify->add_option("input", input, "matrix or parameter file")->required();
    auto* generate = app.add_subcommand("generate", "random instance of a structure class");
    generate
        ->add_option("--class", gen_class,
                     "type_d | green_z | green_m | cyclops_z | g_cyclops | gum_block | gum_sum")
        ->required();
    generate->add_option("-n,--order", gen_n, "matrix order")->required();
    auto* check_gum = app.add_subcommand("check-gum", "ultrametric decomposition certificate");
    check_gum->add_option("input", input, "matrix or parameter file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitParse;
    }

    try {
        if (analyze->parsed()) return run_analyze(input, opt);
        if (invert->parsed()) return run_invert(input, opt);
        if (classify->parsed()) return run_classify(input, opt);
        if (generate->parsed()) return run_generate(gen_class, gen_n, opt);
        if (check_gum->parsed()) return run_check_gum(input, opt);
    } catch (const ztri::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ztri::SingularMatrix& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSingular;
    } catch (const ztri::InfeasibleSize& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconsistent;
    }
    return kExitParse;
}
