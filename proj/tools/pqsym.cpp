// pqsym: command-line front end. Exit codes: 0 ok, 1 selftest failure,
// 2 invalid input, 3 mathematical precondition failed, 4 internal invariant.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pqsym/cli.hpp"

namespace {

using pqsym::io::json;

void emit(const json& j, const std::string& format)
{
    if (format == "text") std::cout << pqsym::cli::render_text(j);
    else std::cout << j.dump(2) << '\n';
}

int fail(const std::exception& e, const std::string& format)
{
    const int code = pqsym::cli::exit_code_for(e);
    const char* kind = code == 2 ? "validation" : code == 3 ? "precondition" : "invariant";
    if (format == "text") std::cerr << "error (" << kind << "): " << e.what() << '\n';
    else std::cerr << json{{"error", e.what()}, {"kind", kind}}.dump() << '\n';
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Flag enumeration, peak algebra and toric g computations with exact rationals"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    // poset
    auto* poset = app.add_subcommand("poset", "Invariants of a graded poset");
    std::string family, poset_file;
    pqsym::cli::PosetReports pr;
    bool all_reports = false;
    auto* fam_opt = poset->add_option("--family", family, "e.g. boolean:4, polygon:5, cube:3, chain:2*polygon:4, dual:X, hat0:X");
    auto* file_opt = poset->add_option("--file", poset_file, "Poset JSON file {name, elements, covers}");
    fam_opt->excludes(file_opt);
    poset->add_flag("--flag-f", pr.flag_f, "Flag f-vector");
    poset->add_flag("--flag-h", pr.flag_h, "Flag h-vector");
    poset->add_flag("--flag-k", pr.flag_k, "Flag k-vector");
    poset->add_flag("--eulerian", pr.eulerian, "Check the Eulerian property (nonzero exit if it fails)");
    poset->add_flag("--cd-index", pr.cd, "cd-index");
    poset->add_flag("--c2d-index", pr.c2d, "c-2d-index");
    poset->add_flag("--theta", pr.theta, "Theta-basis coordinates of F(P)");
    poset->add_flag("--g", pr.g, "Toric g-polynomial");
    poset->add_flag("--toric-h", pr.toric_h, "Toric h-vector");
    poset->add_flag("--cone", pr.cone, "Evaluate the eta and flag-h cone inequalities on the cd-index");
    poset->add_flag("--all", all_reports, "Every report except --cone");

    // qsym
    auto* qsym = app.add_subcommand("qsym", "Operations on a quasisymmetric element read from a file");
    std::string qsym_file, with_file, action = "convert", to_basis = "M";
    qsym->add_option("--file", qsym_file, "QSym JSON file {degree, basis, coeffs}")->required();
    qsym->add_option("--with", with_file, "Second operand for multiply");
    qsym->add_option("--action", action, "Operation")->check(CLI::IsMember(pqsym::cli::qsym_actions()));
    qsym->add_option("--to", to_basis, "Output basis")->check(CLI::IsMember({"M", "F", "K"}));

    // theta
    auto* theta = app.add_subcommand("theta", "The Stembridge map on the peak algebra in a fixed degree");
    int degree = -1, size = -1;
    pqsym::cli::ThetaReports tr;
    auto* deg_opt = theta->add_option("--degree", degree, "n (Theta_w with deg w = n)");
    auto* size_opt = theta->add_option("--size", size, "n+1");
    deg_opt->excludes(size_opt);
    theta->add_flag("--eta", tr.eta, "eta matrix (closed form)");
    theta->add_flag("--eta-bruteforce", tr.eta_bruteforce, "eta matrix by enumeration");
    theta->add_flag("--spectrum", tr.spectrum, "Eigenvalues in cd-word order");
    theta->add_flag("--omega", tr.omega, "Eigenvectors Omega_w in Theta coordinates");
    theta->add_flag("--walk", tr.walk, "Transition matrix of the peak-set walk");
    theta->add_flag("--peaks", tr.peaks, "Peak-set distribution of S_{n+1}");
    theta->add_option("--peaks-route", tr.peaks_route, "enumerate or theta")->check(CLI::IsMember({"enumerate", "theta"}));
    theta->add_flag("--cone", tr.cone, "eta-row and flag-h-row inequalities");

    // selftest
    auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
    std::string depth = "quick";
    selftest->add_option("--depth", depth, "quick or full")->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (poset->parsed()) {
            if (family.empty() == poset_file.empty()) throw pqsym::validation_error("give exactly one of --family or --file");
            const pqsym::GradedPoset p =
                family.empty() ? pqsym::io::poset_from_json(pqsym::io::read_json_file(poset_file)) : pqsym::io::parse_family(family);
            if (all_reports) {
                const bool cone = pr.cone;
                pr = {true, true, true, pr.eulerian, true, true, true, true, true, cone};
            }
            emit(pqsym::cli::cmd_poset(p, pr), format);
        } else if (qsym->parsed()) {
            const pqsym::QSym a = pqsym::io::qsym_from_json(pqsym::io::read_json_file(qsym_file));
            std::optional<pqsym::QSym> b;
            if (!with_file.empty()) b = pqsym::io::qsym_from_json(pqsym::io::read_json_file(with_file));
            emit(pqsym::cli::cmd_qsym(action, a, b, pqsym::parse_basis(to_basis)), format);
        } else if (theta->parsed()) {
            if (degree < 0 && size < 0) throw pqsym::validation_error("give --degree n or --size n+1");
            const int n = degree >= 0 ? degree : size - 1;
            emit(pqsym::cli::cmd_theta(n, tr), format);
        } else if (selftest->parsed()) {
            const auto results =
                pqsym::acceptance::run_all(depth == "full" ? pqsym::acceptance::Depth::full : pqsym::acceptance::Depth::quick);
            bool ok = true;
            for (const auto& r : results) ok = ok && r.pass;
            if (format == "text") {
                for (const auto& r : results) std::cout << pqsym::acceptance::format_line(r) << '\n';
            } else {
                std::cout << json{{"depth", depth}, {"pass", ok}, {"criteria", pqsym::cli::results_to_json(results)}}.dump(2) << '\n';
            }
            return ok ? 0 : 1;
        }
    } catch (const pqsym::validation_error& e) {
        return fail(e, format);
    } catch (const pqsym::precondition_error& e) {
        return fail(e, format);
    } catch (const pqsym::invariant_error& e) {
        return fail(e, format);
    } catch (const std::exception& e) {
        return fail(pqsym::invariant_error(e.what()), format);
    }
    return 0;
}
