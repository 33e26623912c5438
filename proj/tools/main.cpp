#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "logkahler/jacobi.hpp"
#include "logkahler/quadrature.hpp"
#include "logkahler/schrodinger.hpp"
#include "logkahler/suites.hpp"

namespace lk = logkahler;

namespace {

// Relative output paths may be redirected wholesale via the
// environment; absolute paths are left alone.
std::filesystem::path resolve_out(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_absolute()) return p;
    if (const char* dir = std::getenv("LOGKAHLER_OUTDIR")) {
        return std::filesystem::path(dir) / p;
    }
    return p;
}

void write_text(const std::string& path, const std::string& text) {
    const auto target = resolve_out(path);
    std::ofstream out(target);
    out << text;
    if (!out.good()) {
        throw std::ios_base::failure("cannot write " + target.string());
    }
}

int verdict_exit(const std::vector<lk::Verdict>& verdicts) {
    for (const auto& v : verdicts) {
        if (v.status == lk::VerdictStatus::FAIL) return 1;
    }
    return 0;
}

void print_verdicts(const std::vector<lk::Verdict>& verdicts) {
    for (const auto& v : verdicts) {
        std::cout << v.claim << ": " << lk::to_string(v.status)
                  << "  residual=" << v.residual << "  tol=" << v.tolerance;
        if (!v.notes.empty()) std::cout << "\n  note: " << v.notes;
        std::cout << '\n';
    }
}

int run_metric(const std::vector<double>& theta) {
    const lk::NaturalPoint p(theta[0], theta[1]);
    const lk::Matrix2 h = lk::fisher_metric(p);
    const lk::Matrix2 hinv = lk::inverse_metric(p);
    const lk::Matrix2 oracle = lk::fisher_metric_oracle(p);
    const double dev = (h - oracle).cwiseAbs().maxCoeff();
    const double inv_res =
        (h * hinv - lk::Matrix2::Identity()).cwiseAbs().maxCoeff();
    std::cout << "h =\n" << h << "\nh^-1 =\n" << hinv
              << "\nquadrature deviation = " << dev
              << "\nh*h^-1 - I residual = " << inv_res << '\n';
    return dev <= 1e-8 && inv_res <= 1e-12 ? 0 : 1;
}

int run_flow(const std::string& gen, const std::vector<double>& start,
             double s_end, double step, const std::string& csv) {
    const auto curve = lk::integrate_flow(
        lk::JacobiElement::from_name(gen),
        lk::TangentState(start[0], start[1], start[2], start[3]), s_end, step);
    const lk::Vector4 end = curve.states.back();
    std::cout << "end state = (" << end(0) << ", " << end(1) << ", " << end(2)
              << ", " << end(3) << ")\n"
              << "observable drift = " << lk::conservation_report(curve)
              << '\n';
    if (!csv.empty()) {
        std::ostringstream os;
        lk::write_curve_csv(os, curve);
        write_text(csv, os.str());
    }
    return 0;
}

int run_schrodinger(const std::string& gen, const std::vector<double>& start,
                    double s_end, double step, bool literal,
                    const std::string& csv, const std::string& summary) {
    const auto curve = lk::integrate_flow(
        lk::JacobiElement::from_name(gen),
        lk::TangentState(start[0], start[1], start[2], start[3]), s_end, step);
    const lk::LogGrid grid = lk::LogGrid::uniform(-4.0, 4.0, 257);
    const lk::SchrodingerParams params =
        literal ? lk::SchrodingerParams::literal()
                : lk::SchrodingerParams::calibrated();
    const lk::ResidualField field = lk::schrodinger_residual(curve, grid,
                                                             params);
    nlohmann::ordered_json doc;
    doc["flags"] = {
        {"sign_z2_term", params.flags.sign_z2_term},
        {"include_potential_drift", params.flags.include_potential_drift},
        {"psi_prefactor_half", params.flags.psi_prefactor_half},
        {"base_velocity_from_curve", params.flags.base_velocity_from_curve}};
    doc["max_residual_eq23"] = field.max_eq23();
    doc["mean_residual_eq23"] = field.mean_eq23();
    doc["max_residual_eq21"] = field.max_eq21();
    doc["mean_residual_eq21"] = field.mean_eq21();
    std::cout << doc.dump(2) << '\n';
    if (!csv.empty()) {
        std::ostringstream os;
        lk::write_residual_csv(os, field);
        write_text(csv, os.str());
    }
    if (!summary.empty()) write_text(summary, doc.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical verification suite for the lognormal tangent "
                 "bundle: dual geometry, Kahler lift, algebra flows, and the "
                 "evolution-equation residuals"};
    app.require_subcommand(1);

    lk::RunConfig cfg;
    app.add_option("--seed", cfg.seed, "random state seed");
    app.add_option("--states", cfg.n_states, "random states per check");

    auto* metric = app.add_subcommand("metric", "closed-form metric vs "
                                                "quadrature oracle");
    std::vector<double> theta = {0.0, -0.5};
    metric->add_option("--theta", theta, "natural coordinates theta1 theta2")
        ->expected(2);

    auto* kahler = app.add_subcommand("kahler-check", "axioms of the lifted "
                                                      "structure");
    auto* pde = app.add_subcommand("pde-check", "flatness PDE family");
    auto* iso = app.add_subcommand("isometry-check", "translation holomorphy "
                                                     "and isometry");
    auto* fields = app.add_subcommand("fields", "symplectic gradients vs "
                                                "closed forms");

    auto* flow = app.add_subcommand("flow", "integrate an algebra flow");
    std::string gen = "Q";
    std::vector<double> start = {1.0, -1.0, 0.0, 0.0};
    double s_end = 1.0, step = 1e-3;
    std::string flow_csv;
    flow->add_option("--gen", gen, "generator F, G, H, P, Q or R");
    flow->add_option("--start", start, "theta1 theta2 thetadot1 thetadot2")
        ->expected(4);
    flow->add_option("--s-end", s_end, "flow parameter endpoint");
    flow->add_option("--step", step, "RK4 step");
    flow->add_option("--csv", flow_csv, "curve CSV output path");

    auto* schro = app.add_subcommand("schrodinger", "evolution-equation "
                                                    "residual field");
    std::string s_gen = "Q";
    std::vector<double> s_start = {0.0, -0.5, 0.0, 0.0};
    double s_send = 0.1, s_step = 1e-3;
    bool literal = false;
    std::string s_csv, s_summary;
    schro->add_option("--gen", s_gen, "generator name");
    schro->add_option("--start", s_start, "initial tangent state")->expected(4);
    schro->add_option("--s-end", s_send, "flow parameter endpoint");
    schro->add_option("--step", s_step, "RK4 step");
    schro->add_flag("--literal", literal,
                    "use the literal convention flags");
    schro->add_option("--csv", s_csv, "residual CSV output path");
    schro->add_option("--summary", s_summary, "JSON summary output path");

    auto* all = app.add_subcommand("report-all", "every claim verdict as "
                                                 "JSON");
    std::string out_path;
    all->add_option("--out", out_path, "verdict JSON output path");

    // Global --seed/--states may also appear after the subcommand name.
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (metric->parsed()) return run_metric(theta);
        if (flow->parsed()) return run_flow(gen, start, s_end, step, flow_csv);
        if (schro->parsed()) {
            return run_schrodinger(s_gen, s_start, s_send, s_step, literal,
                                   s_csv, s_summary);
        }

        std::vector<lk::Verdict> verdicts;
        if (kahler->parsed()) verdicts = lk::suite_kahler(cfg);
        if (pde->parsed()) verdicts = lk::suite_family(cfg);
        if (iso->parsed()) verdicts = lk::suite_translations(cfg);
        if (fields->parsed()) verdicts = lk::suite_fields(cfg);
        if (all->parsed()) {
            const auto doc = lk::emit_verdicts(lk::run_all_suites(cfg), cfg);
            const std::string text = doc.dump(2) + "\n";
            if (out_path.empty()) {
                std::cout << text;
            } else {
                write_text(out_path, text);
            }
            return lk::any_fail(doc) ? 1 : 0;
        }
        print_verdicts(verdicts);
        return verdict_exit(verdicts);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 4;
    } catch (const lk::FlowDomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 3;
    }
}
