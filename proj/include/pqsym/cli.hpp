#pragma once

// Command implementations behind the pqsym executable. Each returns a JSON
// report or throws one of the pqsym error types; argument parsing and exit
// codes live in the executable.

#include <optional>
#include <string>
#include <vector>

#include "acceptance.hpp"
#include "errors.hpp"
#include "peak.hpp"
#include "poset.hpp"
#include "qsym.hpp"
#include "serialize.hpp"
#include "stembridge.hpp"
#include "toricg.hpp"

namespace pqsym::cli {

using io::json;

inline constexpr int max_matrix_degree = 12;
inline constexpr int max_enumeration_size = 8;

inline int exit_code_for(const std::exception& e)
{
    if (dynamic_cast<const validation_error*>(&e)) return 2;
    if (dynamic_cast<const precondition_error*>(&e)) return 3;
    if (dynamic_cast<const invariant_error*>(&e)) return 4;
    return 4;
}

// poset ---------------------------------------------------------------------

struct PosetReports {
    bool flag_f = false, flag_h = false, flag_k = false;
    bool eulerian = false, cd = false, c2d = false, theta = false;
    bool g = false, toric_h = false, cone = false;
};

namespace detail {

inline void require_peak_member(const GradedPoset& p, const QSym& f)
{
    const Membership m = is_in_peak_algebra(f);
    if (!m.member) throw precondition_error(p.name() + " has F(P) outside the peak algebra: " + describe(m));
}

} // namespace detail

inline json cmd_poset(const GradedPoset& p, const PosetReports& r)
{
    json out = {{"name", p.name()}, {"rank", p.top_rank()}, {"elements", p.size()}};
    const int n = p.top_rank() - 1;
    const QSym f = qsym_of_poset(p);
    if (r.eulerian) {
        const auto v = eulerian_violation(p);
        out["eulerian"] = !v.has_value();
        if (v) {
            std::string msg = p.name() + " is not Eulerian: " + describe(p, *v);
            if (n >= 0) {
                const Membership m = is_in_peak_algebra(f);
                if (!m.member) msg += "; " + describe(m);
            }
            throw precondition_error(msg);
        }
    }
    if (r.flag_f || r.flag_h || r.flag_k) {
        if (n < 0) throw validation_error("flag vectors need rank >= 1");
        const auto fv = dense_component(f, n + 1);
        const auto hv = flag_h_from_f(fv);
        if (r.flag_f) out["flag_f"] = io::flag_vector_to_json(fv, n);
        if (r.flag_h) out["flag_h"] = io::flag_vector_to_json(hv, n);
        if (r.flag_k) out["flag_k"] = io::flag_vector_to_json(flag_k_from_h(hv), n);
    }
    if (r.g) out["g"] = io::polynomial_to_json(fg_poly_poset(p).g);
    if (r.toric_h) out["toric_h"] = io::rationals_to_json(toric_h(p));
    if (r.cd || r.c2d || r.theta || r.cone) {
        if (n < 0) throw validation_error("cd-index needs rank >= 1");
        detail::require_peak_member(p, f);
        const CdPolynomial cd = cd_index(f);
        if (r.cd) out["cd_index"] = io::cd_to_json(cd);
        if (r.c2d) out["c2d_index"] = io::cd_to_json(c2d_index(cd));
        if (r.theta) out["theta"] = io::cd_to_json(c2d_index(cd) * Rational(1, 2));
        if (r.cone) {
            if (n > max_matrix_degree) throw validation_error("cone check supports n <= 12");
            const ConeCheck c = cone_check(gorenstein_cone(n), cd);
            out["cone"] = {{"eta_ok", c.eta_ok}, {"h_ok", c.h_ok}, {"failing_eta_rows", c.failing_eta_rows},
                           {"failing_h_rows", c.failing_h_rows}};
        }
    }
    return out;
}

// qsym ----------------------------------------------------------------------

inline const std::vector<std::string>& qsym_actions()
{
    static const std::vector<std::string> all{"convert",    "multiply", "coproduct", "antipode", "membership", "projection",
                                              "theta",      "cd-index", "g",         "vartheta", "omega"};
    return all;
}

inline json cmd_qsym(const std::string& action, const QSym& a, const std::optional<QSym>& b, Basis to)
{
    if (action == "convert") return io::qsym_to_json_compact(a, to);
    if (action == "multiply") {
        if (!b) throw validation_error("multiply needs a second element (--with)");
        return io::qsym_to_json_compact(a * *b, to);
    }
    if (action == "coproduct") {
        json terms = json::array();
        for (const auto& [keys, c] : coproduct(a)) {
            json pair = json::array();
            for (const QKey& k : keys) pair.push_back({{"degree", k.degree}, {"subset", k.degree == 0 ? "" : k.subset().key()}});
            terms.push_back({{"left", pair[0]}, {"right", pair[1]}, {"coeff", to_string(c)}});
        }
        return {{"basis", "M"}, {"terms", terms}};
    }
    if (action == "antipode") return io::qsym_to_json_compact(antipode(a), to);
    if (action == "membership") {
        const Membership m = is_in_peak_algebra(a);
        json out = {{"member", m.member}};
        if (!m.member) out["violated"] = describe(m);
        return out;
    }
    if (action == "projection") return io::qsym_to_json_compact(eulerian_projection(a), to);
    if (action == "theta") return io::cd_to_json(theta_expansion(a));
    if (action == "cd-index") return io::cd_to_json(cd_index(a));
    if (action == "g") return io::polynomial_to_json(g_on_qsym(a));
    if (action == "vartheta") return io::qsym_to_json_compact(vartheta(a), to);
    if (action == "omega") return io::cd_to_json(omega_expansion(a));
    throw validation_error("unknown qsym action \"" + action + "\"");
}

// theta ---------------------------------------------------------------------

struct ThetaReports {
    bool eta = false, eta_bruteforce = false, spectrum = false, omega = false, walk = false;
    bool peaks = false, cone = false;
    std::string peaks_route = "enumerate";
};

inline json cmd_theta(int n, const ThetaReports& r)
{
    if (n < 0) throw validation_error("degree must be >= 0");
    const bool matrices = r.eta || r.eta_bruteforce || r.spectrum || r.omega || r.walk || r.cone;
    if (matrices && n > max_matrix_degree)
        throw validation_error("matrix reports support n <= " + std::to_string(max_matrix_degree) + ", got " + std::to_string(n));
    json out = {{"degree", n}, {"words", io::words_to_json(cd_words(n))}};
    if (r.eta) out["eta"] = eta_closedform(n).entries;
    if (r.eta_bruteforce) out["eta_bruteforce"] = eta_bruteforce(n).entries;
    if (r.spectrum || r.omega) {
        const auto pairs = spectrum(n);
        json eig = json::array();
        json vecs = json::object();
        for (const auto& pr : pairs) {
            eig.push_back(io::integer_to_json(pr.eigenvalue));
            vecs[pr.word.letters()] = io::cd_to_json(pr.vector);
        }
        if (r.spectrum) out["eigenvalues"] = eig;
        if (r.omega) out["omega"] = vecs;
    }
    if (r.walk) out["walk"] = io::matrix_to_json(walk_matrix(n));
    if (r.cone) {
        const GorensteinCone cone = gorenstein_cone(n);
        json eta_rows = json::object(), h_rows = json::object();
        for (const auto& row : cone.eta_rows) eta_rows[row.label] = row.coeffs;
        for (const auto& row : cone.h_rows) h_rows[row.label] = row.coeffs;
        out["cone"] = {{"eta_rows", eta_rows}, {"h_rows", h_rows}, {"eta_rows_are_sums_of_h_rows", eta_rows_are_sums_of_h_rows(cone)}};
    }
    if (r.peaks) {
        const int size = n + 1;
        if (r.peaks_route == "enumerate") {
            if (size > max_enumeration_size)
                throw validation_error("permutation enumeration supports n+1 <= " + std::to_string(max_enumeration_size));
            out["peaks"] = io::distribution_to_json(peak_distribution_enumerated(size));
        } else if (r.peaks_route == "theta") {
            if (n > max_matrix_degree) throw validation_error("Theta route supports n <= 12");
            out["peaks"] = io::distribution_to_json(peak_distribution_theta(size));
        } else {
            throw validation_error("peak route must be enumerate or theta");
        }
    }
    return out;
}

// selftest ------------------------------------------------------------------

inline json results_to_json(const std::vector<acceptance::Result>& results)
{
    json out = json::array();
    for (const auto& r : results)
        out.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"budget", r.budget}, {"detail", r.detail}});
    return out;
}

// text rendering ------------------------------------------------------------

inline std::string render_text(const json& j, const std::string& indent = "")
{
    std::string out;
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            const std::string key = k.empty() ? "{}" : k;
            if (v.is_object() && !v.empty()) out += indent + key + ":\n" + render_text(v, indent + "  ");
            else out += indent + key + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
        }
    } else if (j.is_array() && !j.empty() && j.front().is_array()) {
        for (const auto& row : j) out += indent + row.dump() + "\n";
    } else if (j.is_array() && !j.empty() && j.front().is_object()) {
        for (const auto& item : j) out += render_text(item, indent) + indent + "--\n";
    } else {
        out += indent + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
    }
    return out;
}

} // namespace pqsym::cli
