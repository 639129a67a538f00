#include "pcalg/json_io.hpp"

#include <stdexcept>

namespace pcalg {

json rat_to_json(const Rat& q) {
    return rat_to_string(q);
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (!j.is_string()) throw std::invalid_argument("rational: expected \"p/q\" string");
    return rat_from_string(j.get<std::string>());
}

json weyl_to_json(const WeylElement& a) {
    json out = json::array();
    for (const auto& [key, c] : a.terms()) out.push_back({key.first, key.second, rat_to_json(c)});
    return out;
}

WeylElement weyl_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("weyl element: expected [[k,l,\"p/q\"],...]");
    WeylElement a;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument("weyl element: each term must be [k,l,\"p/q\"]");
        a.add_term(t[0].get<int>(), t[1].get<int>(), rat_from_json(t[2]));
    }
    return a;
}

json shift_to_json(const ShiftOp& a, long window) {
    json cols = json::object();
    for (long jcol = 1; jcol <= window; ++jcol) {
        json col = json::object();
        for (const auto& [row, c] : a.column(jcol)) col[std::to_string(row)] = rat_to_json(c);
        cols[std::to_string(jcol)] = std::move(col);
    }
    return json{{"columns", std::move(cols)}, {"probe_window", window}};
}

ShiftOp shift_from_json(const json& j) {
    if (j.is_object() && j.contains("gen")) {
        std::string gen = j.at("gen").get<std::string>();
        if (gen == "v") return ShiftOp::shift();
        if (gen == "1") return ShiftOp::identity();
        if (gen.rfind("v^", 0) == 0) return ShiftOp::shift_power(std::stoi(gen.substr(2)));
        throw std::invalid_argument("shift element: unknown generator '" + gen + "'");
    }
    if (j.is_object() && j.contains("columns")) {
        std::map<long, ShiftOp::Column> cols;
        for (const auto& [colkey, colval] : j.at("columns").items()) {
            ShiftOp::Column col;
            for (const auto& [rowkey, entry] : colval.items())
                col[std::stol(rowkey)] = rat_from_json(entry);
            cols[std::stol(colkey)] = std::move(col);
        }
        return ShiftOp::from_columns(std::move(cols));
    }
    throw std::invalid_argument("shift element: expected {\"gen\": ...} or {\"columns\": ...}");
}

json vpoly_to_json(const VPoly& u) {
    json coeffs = json::array();
    for (const auto& c : u) coeffs.push_back(rat_to_json(c));
    return json{{"coeffs", std::move(coeffs)}};
}

VPoly vpoly_from_json(const json& j) {
    const json& coeffs = j.is_object() ? j.at("coeffs") : j;
    if (!coeffs.is_array()) throw std::invalid_argument("u: expected {\"coeffs\": [...]}");
    VPoly u;
    for (const auto& c : coeffs) u.push_back(rat_from_json(c));
    return u;
}

json admissible_to_json(const AdmissiblePoly& f) {
    json coeffs = json::array();
    for (const auto& [key, c] : f.coeffs()) {
        json entry{{"sigma", key.sigma}, {"b", key.b}, {"coeff", rat_to_json(c)}};
        if (f.kind() == Kind::two) entry["i"] = key.i;
        coeffs.push_back(std::move(entry));
    }
    return json{{"kind", f.kind() == Kind::one ? "one" : "two"},
                {"n", f.vars()},
                {"r", f.order()},
                {"coeffs", std::move(coeffs)}};
}

namespace {

AdmissiblePoly multilinear_from_json(const json& j) {
    std::map<Perm, Rat> coeffs;
    int n = -1;
    for (const auto& [key, value] : j.items()) {
        json perm_json = json::parse(key); // keys look like "[1,2]"
        Perm sigma = perm_json.get<Perm>();
        if (n < 0) n = static_cast<int>(sigma.size());
        if (!is_permutation(sigma) || static_cast<int>(sigma.size()) != n)
            throw std::invalid_argument("multilinear polynomial: key '" + key +
                                        "' is not a permutation of 1..n");
        coeffs[sigma] = rat_from_json(value);
    }
    if (n < 1) throw std::invalid_argument("multilinear polynomial: no coefficients");
    return multilinear(n, coeffs);
}

} // namespace

AdmissiblePoly admissible_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("polynomial: expected a JSON object");
    if (!j.contains("kind")) return multilinear_from_json(j);
    std::string kind_str = j.at("kind").get<std::string>();
    Kind kind;
    if (kind_str == "one")
        kind = Kind::one;
    else if (kind_str == "two")
        kind = Kind::two;
    else
        throw std::invalid_argument("polynomial: kind must be \"one\" or \"two\"");
    AdmissiblePoly f(j.at("n").get<int>(), j.at("r").get<int>(), kind);
    for (const auto& entry : j.at("coeffs")) {
        Perm sigma = entry.at("sigma").get<Perm>();
        MultiIndex b = entry.at("b").get<MultiIndex>();
        Rat c = rat_from_json(entry.at("coeff"));
        if (kind == Kind::one)
            f.add_coeff(sigma, b, c);
        else
            f.add_coeff(sigma, b, entry.at("i").get<int>(), c);
    }
    return f;
}

json witness_to_json(const Witness<WeylAlgebra>& w) {
    json xs = json::array();
    for (const auto& x : w.xs) xs.push_back(weyl_to_json(x));
    return json{{"backend", "weyl"}, {"x", std::move(xs)}, {"u", vpoly_to_json(w.u)}};
}

json witness_to_json(const Witness<ShiftAlgebra>& w, long window) {
    json xs = json::array();
    for (const auto& x : w.xs) xs.push_back(shift_to_json(x, window));
    return json{{"backend", "shift"}, {"x", std::move(xs)}, {"u", vpoly_to_json(w.u)}};
}

json witness_to_json(const Witness<DirectProduct<WeylAlgebra>>& w) {
    json xs = json::array();
    for (const auto& x : w.xs) {
        json comps = json::array();
        for (const auto& c : x) comps.push_back(weyl_to_json(c));
        xs.push_back(json{{"components", std::move(comps)}});
    }
    return json{{"backend", "product"}, {"x", std::move(xs)}, {"u", vpoly_to_json(w.u)}};
}

Witness<WeylAlgebra> weyl_witness_from_json(const json& j) {
    Witness<WeylAlgebra> w;
    for (const auto& x : j.at("x")) w.xs.push_back(weyl_from_json(x));
    w.u = vpoly_from_json(j.at("u"));
    return w;
}

namespace {

json split_coeffs_to_json(const SplitCoeffs& lam) {
    json out = json::array();
    for (const auto& [key, c] : lam) {
        const auto& [tau, b, jpos] = key;
        out.push_back(json{{"tau", tau}, {"b", b}, {"j", jpos}, {"coeff", rat_to_json(c)}});
    }
    return out;
}

json gen_coeffs_to_json(const std::map<GenKey, Rat>& coeffs) {
    json out = json::array();
    for (const auto& [key, c] : coeffs) {
        json entry{{"sigma", key.sigma}, {"b", key.b}, {"coeff", rat_to_json(c)}};
        if (key.i > 0) entry["i"] = key.i;
        out.push_back(std::move(entry));
    }
    return out;
}

struct TraceStepToJson {
    json operator()(const BaseCaseStep& s) const {
        return json{{"kind", "base_case"},
                    {"poly_kind", s.kind == Kind::one ? "one" : "two"},
                    {"r", s.r},
                    {"lambda", rat_to_json(s.lambda)}};
    }
    json operator()(const SplitLastVarStep& s) const {
        return json{{"kind", "split_last_var"}, {"k", s.k}, {"lambda_prime", split_coeffs_to_json(s.lambda_prime)}};
    }
    json operator()(const TypeOneBranchStep&) const { return json{{"kind", "type_one_branch"}}; }
    json operator()(const TypeTwoBranchStep& s) const {
        return json{{"kind", "type_two_branch"}, {"mu", gen_coeffs_to_json(s.mu)}};
    }
    json operator()(const PiKSearchStep& s) const { return json{{"kind", "pi_k_search"}, {"k", s.k}}; }
};

} // namespace

json trace_to_json(const ReductionTrace& t) {
    json steps = json::array();
    for (const auto& step : t.steps) steps.push_back(std::visit(TraceStepToJson{}, step));
    return json{{"steps", std::move(steps)}};
}

} // namespace pcalg
