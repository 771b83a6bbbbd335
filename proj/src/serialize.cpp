#include "ti/serialize.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ti/errors.hpp"

namespace ti {

using nlohmann::json;

namespace {

json polynomial_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        json monomial = json::object();
        for (const auto& [var, exp] : mono.factors()) monomial[var.name()] = exp;
        terms.push_back({{"coeff", {{"re", to_string(coeff.re())}, {"im", to_string(coeff.im())}}},
                         {"monomial", monomial}});
    }
    return json{{"terms", terms}};
}

Polynomial polynomial_from(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
        throw parse_error("polynomial JSON: expected {\"terms\": [...]}");
    Polynomial::TermMap terms;
    for (const json& term : j.at("terms")) {
        const json& coeff = term.at("coeff");
        const GaussianComplex c(rational_from_string(coeff.at("re").get<std::string>()),
                                rational_from_string(coeff.at("im").get<std::string>()));
        std::vector<std::pair<Variable, int>> factors;
        for (const auto& [name, exp] : term.at("monomial").items()) {
            if (!exp.is_number_integer() || exp.get<int>() < 1)
                throw parse_error("polynomial JSON: exponent of " + name +
                                  " must be a positive integer");
            factors.emplace_back(Variable::from_name(name), exp.get<int>());
        }
        const Monomial mono = Monomial::from_factors(std::move(factors));
        if (!terms.emplace(mono, c).second)
            throw parse_error("polynomial JSON: duplicate monomial " + mono.str());
    }
    return Polynomial::from_terms(std::move(terms));
}

std::string triple_key(const std::array<int, 3>& pqr) {
    return std::to_string(pqr[0]) + "_" + std::to_string(pqr[1]) + "_" +
           std::to_string(pqr[2]);
}

std::array<int, 3> parse_triple(const std::string& key) {
    std::array<int, 3> out{};
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        if (pos >= key.size() || !std::isdigit(static_cast<unsigned char>(key[pos])))
            throw parse_error("moment JSON: bad entry key \"" + key + "\"");
        std::size_t used = 0;
        out[i] = std::stoi(key.substr(pos), &used);
        pos += used;
        if (i < 2) {
            if (pos >= key.size() || key[pos] != '_')
                throw parse_error("moment JSON: bad entry key \"" + key + "\"");
            ++pos;
        }
    }
    if (pos != key.size())
        throw parse_error("moment JSON: bad entry key \"" + key + "\"");
    return out;
}

json parse_text(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error(std::string(what) + ": malformed JSON");
    return j;
}

template <typename T, std::size_t N>
std::array<T, N> fixed_array(const json& j, const char* field) {
    if (!j.is_array() || j.size() != N)
        throw parse_error(std::string("voxel JSON: ") + field + " must have " +
                          std::to_string(N) + " entries");
    std::array<T, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = j.at(i).get<T>();
    return out;
}

} // namespace

std::string polynomial_to_json(const Polynomial& p) { return polynomial_json(p).dump(); }

Polynomial polynomial_from_json(const std::string& text) {
    try {
        return polynomial_from(parse_text(text, "polynomial"));
    } catch (const json::exception& e) {
        throw parse_error(std::string("polynomial JSON: ") + e.what());
    }
}

std::string invariants_to_json(const std::vector<NamedInvariant>& invs) {
    json out = json::array();
    for (const NamedInvariant& inv : invs)
        out.push_back({{"name", inv.name},
                       {"order", inv.order},
                       {"degree", inv.degree},
                       {"polynomial", polynomial_json(to_eta_names(inv.polynomial))}});
    return out.dump();
}

std::string invariants_to_text(const std::vector<NamedInvariant>& invs) {
    std::ostringstream out;
    for (const NamedInvariant& inv : invs)
        out << inv.name << " (order " << inv.order << ", degree " << inv.degree
            << "): " << to_eta_names(inv.polynomial).str() << "\n";
    return out.str();
}

std::string moment_tensor_to_json(const MomentTensor& t) {
    json entries = json::object();
    for (const auto& [pqr, value] : t.entries()) entries[triple_key(pqr)] = value;
    return json{{"kind", moment_kind_name(t.kind())},
                {"max_order", t.max_order()},
                {"entries", entries}}
        .dump();
}

MomentTensor moment_tensor_from_json(const std::string& text) {
    try {
        const json j = parse_text(text, "moment tensor");
        MomentTensor t(moment_kind_from_name(j.at("kind").get<std::string>()),
                       j.at("max_order").get<int>());
        for (const auto& [key, value] : j.at("entries").items()) {
            const auto pqr = parse_triple(key);
            if (!value.is_number())
                throw parse_error("moment JSON: entry " + key + " must be a number");
            try {
                t.set(pqr[0], pqr[1], pqr[2], value.get<double>());
            } catch (const domain_error& e) {
                throw parse_error(std::string("moment JSON: ") + e.what());
            }
        }
        return t;
    } catch (const json::exception& e) {
        throw parse_error(std::string("moment JSON: ") + e.what());
    }
}

VoxelGrid voxel_grid_from_json(const std::string& text) {
    try {
        const json j = parse_text(text, "voxel grid");
        VoxelGrid g;
        g.dims = fixed_array<int, 3>(j.at("dims"), "dims");
        g.spacing = fixed_array<double, 3>(j.at("spacing"), "spacing");
        g.origin = fixed_array<double, 3>(j.at("origin"), "origin");
        const json& values = j.at("values");
        if (!values.is_array()) throw parse_error("voxel JSON: values must be an array");
        g.values.reserve(values.size());
        for (const json& v : values) g.values.push_back(v.get<double>());
        g.validate();
        return g;
    } catch (const json::exception& e) {
        throw parse_error(std::string("voxel JSON: ") + e.what());
    }
}

VoxelGrid voxel_grid_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return voxel_grid_from_json(buffer.str());
}

std::string invariance_report_to_json(const InvarianceReport& r) {
    json invariants = json::array();
    for (const InvariantDeviation& d : r.invariants)
        invariants.push_back({{"name", d.name},
                              {"baseline", d.baseline},
                              {"max_abs_dev", d.max_abs_dev},
                              {"max_rel_dev", d.max_rel_dev},
                              {"pass", d.pass}});
    return json{{"seed", r.seed},
                {"trials", r.trials},
                {"tolerance", r.tolerance},
                {"degenerate", r.degenerate},
                {"all_pass", r.all_pass},
                {"invariants", invariants}}
        .dump(2);
}

std::string self_check_to_text(const SelfCheckReport& r) {
    std::ostringstream out;
    for (const SelfCheckEntry& e : r.checks) {
        out << (e.pass ? "[PASS] " : "[FAIL] ") << e.name;
        if (!e.pass) out << ": " << e.detail;
        out << "\n";
    }
    out << (r.all_pass ? "self-check passed"
                       : "self-check FAILED (" + std::to_string(r.failures()) + ")")
        << "\n";
    return out.str();
}

} // namespace ti
