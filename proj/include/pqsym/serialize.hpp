#pragma once

// JSON interchange: poset files, QSym files, cd-polynomials, polynomials,
// matrices and distributions. Every number that can be non-integral is a
// rational string.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "combinat.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "peak.hpp"
#include "poset.hpp"
#include "qsym.hpp"
#include "rational.hpp"
#include "stembridge.hpp"
#include "toricg.hpp"

namespace pqsym::io {

using json = nlohmann::ordered_json;

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw validation_error(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Posets.

inline GradedPoset poset_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
        throw validation_error("poset file needs \"elements\" and \"covers\"");
    try {
        const std::string name = j.value("name", std::string("poset"));
        const auto labels = j.at("elements").get<std::vector<std::string>>();
        std::vector<GradedPoset::Cover> covers;
        for (const auto& c : j.at("covers")) {
            if (!c.is_array() || c.size() != 2) throw validation_error("each cover must be a [lower, upper] pair");
            covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
        }
        return GradedPoset(name, labels, covers);
    } catch (const json::exception& e) {
        throw validation_error(std::string("poset file: ") + e.what());
    }
}

inline json poset_to_json(const GradedPoset& p)
{
    json covers = json::array();
    for (const auto& [lo, hi] : p.covers()) covers.push_back({lo, hi});
    return {{"name", p.name()}, {"elements", p.labels()}, {"covers", covers}};
}

namespace detail {

inline int parse_parameter(const std::string& family, const std::string& text)
{
    if (text.empty() || text.size() > 3 || text.find_first_not_of("0123456789") != std::string::npos)
        throw validation_error("family \"" + family + "\" needs a small nonnegative integer parameter, got \"" + text + "\"");
    return std::stoi(text);
}

inline GradedPoset parse_factor(const std::string& spec)
{
    if (spec.rfind("dual:", 0) == 0) return dual(parse_factor(spec.substr(5)));
    if (spec.rfind("hat0:", 0) == 0) return adjoin_hat_below(parse_factor(spec.substr(5)));
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw validation_error("family \"" + spec + "\" must look like name:parameter");
    const std::string name = spec.substr(0, colon);
    const int k = parse_parameter(name, spec.substr(colon + 1));
    if (name == "chain") return chain_poset(k);
    if (name == "boolean") return boolean_poset(k);
    if (name == "polygon") return polygon_poset(k);
    if (name == "simplex" || name == "simplex_faces") return simplex_faces_poset(k);
    if (name == "cube" || name == "cube_faces") return cube_faces_poset(k);
    throw validation_error("unknown family \"" + name + "\" (chain, boolean, polygon, simplex, cube)");
}

} // namespace detail

/// "boolean:3", "polygon:5*chain:1", "dual:cube:3", "hat0:boolean:2".
/// '*' binds loosest and is left-associative.
inline GradedPoset parse_family(const std::string& spec)
{
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string part; std::getline(ss, part, '*');) parts.push_back(part);
    if (parts.empty() || spec.back() == '*') throw validation_error("empty family specification");
    GradedPoset p = detail::parse_factor(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) p = product(p, detail::parse_factor(parts[i]));
    return p;
}

// ---------------------------------------------------------------------------
// QSym files: {"degree": n+1, "basis": "M"|"F"|"K", "coeffs": {"1,3": "p/q"}}.

inline QSym qsym_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs"))
        throw validation_error("qsym file needs \"degree\" and \"coeffs\"");
    if (!j.at("degree").is_number_integer()) throw validation_error("\"degree\" must be an integer");
    const int degree = j.at("degree").get<int>();
    if (degree < 0 || degree > max_ambient + 1) throw validation_error("degree out of range");
    const Basis basis = parse_basis(j.value("basis", std::string("M")));
    if (!j.at("coeffs").is_object()) throw validation_error("\"coeffs\" must be an object");
    CoeffMap coeffs;
    for (const auto& [key, value] : j.at("coeffs").items()) {
        if (!value.is_string()) throw validation_error("coefficient of \"" + key + "\" must be a rational string");
        const Rational c = parse_rational(value.get<std::string>());
        if (degree == 0) {
            if (!key.empty()) throw validation_error("degree-0 element only has the key \"\"");
            coeffs[QKey{0, 0}] += c;
        } else {
            coeffs[key_of(parse_subset_key(key, degree - 1))] += c;
        }
    }
    return from_coefficients(coeffs, basis);
}

/// One homogeneous component per entry.
inline json qsym_to_json(const QSym& q, Basis basis = Basis::M)
{
    json out = json::array();
    for (int d : q.degrees()) {
        json coeffs = json::object();
        for (const auto& [k, c] : coefficients(q.component(d), basis))
            coeffs[d == 0 ? std::string() : k.subset().key()] = to_string(c);
        out.push_back({{"degree", d}, {"basis", basis_name(basis)}, {"coeffs", coeffs}});
    }
    return out;
}

/// A single component as an object when q is homogeneous; the array form otherwise.
inline json qsym_to_json_compact(const QSym& q, Basis basis = Basis::M)
{
    json arr = qsym_to_json(q, basis);
    if (arr.size() == 1) return arr[0];
    return arr;
}

// ---------------------------------------------------------------------------

inline json cd_to_json(const CdPolynomial& p)
{
    json out = json::object();
    for (const auto& [w, c] : p.terms()) out[w.letters()] = to_string(c);
    return out;
}

inline CdPolynomial cd_from_json(const json& j)
{
    if (!j.is_object()) throw validation_error("cd-polynomial must be an object");
    CdPolynomial out;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string()) throw validation_error("coefficient of \"" + key + "\" must be a rational string");
        out.add(CdWord(key == "1" ? std::string() : key), parse_rational(value.get<std::string>()));
    }
    return out;
}

inline json polynomial_to_json(const Polynomial& p)
{
    json out = json::array();
    for (const auto& c : p.coefficients()) out.push_back(to_string(c));
    return out;
}

inline json rationals_to_json(const std::vector<Rational>& v)
{
    json out = json::array();
    for (const auto& c : v) out.push_back(to_string(c));
    return out;
}

inline json integer_to_json(const Integer& z)
{
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

inline json words_to_json(const std::vector<CdWord>& words)
{
    json out = json::array();
    for (const auto& w : words) out.push_back(w.letters());
    return out;
}

inline json eta_to_json(const EtaMatrix& eta)
{
    return {{"degree", eta.n}, {"words", words_to_json(eta.words)}, {"matrix", eta.entries}};
}

inline json matrix_to_json(const Matrix& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(rationals_to_json(m.row(i)));
    return out;
}

inline json distribution_to_json(const PeakDistribution& d)
{
    json counts = json::object();
    for (const auto& [s, c] : d.counts) counts[s.key()] = integer_to_json(c);
    return counts;
}

inline json flag_vector_to_json(const std::vector<Rational>& v, int n)
{
    json out = json::object();
    for (std::uint64_t s = 0; s < v.size(); ++s) out[Subset(n, s).key()] = to_string(v[s]);
    return out;
}

} // namespace pqsym::io
