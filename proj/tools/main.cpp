// Command-line surface for the partially commutative polynomial library:
// normalization, evaluation, the image solver, independence and linear-system
// reports, and exhaustive identity checks.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
// soundness failure.

#include "pcalg/json_io.hpp"
#include "pcalg/linsys.hpp"
#include "pcalg/parser.hpp"
#include "pcalg/solver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace pcalg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

int infer_var_count(const ExprAST& ast) {
    int n = 0;
    if (ast.tag == ExprAST::Tag::ident && ast.name.size() >= 2 && ast.name[0] == 'X') {
        try {
            n = std::stoi(ast.name.substr(1));
        } catch (...) {
            n = 0;
        }
    }
    for (const auto& kid : ast.kids) n = std::max(n, infer_var_count(kid));
    return n;
}

PCPoly v_power_poly(int n, int k) {
    PCPoly out = PCPoly::unit(n);
    for (int i = 0; i < k; ++i) out = out * PCPoly::v(n);
    return out;
}

// ---- normalize ----

int run_normalize(const std::string& expr, int n_flag, bool as_json) {
    auto ast = parse_expression(expr);
    int n = n_flag > 0 ? n_flag : std::max(1, infer_var_count(ast));
    PCPoly f = ast_to_pcpoly(ast, n);
    if (as_json) {
        json terms = json::array();
        for (const auto& [m, c] : f.terms())
            terms.push_back({{"monomial", render(m)}, {"coeff", rat_to_json(c)}});
        std::cout << json{{"n", n}, {"normal_form", render(f)}, {"terms", terms}}.dump(2) << "\n";
    } else {
        std::cout << render(f) << "\n";
    }
    return kExitOk;
}

// ---- eval ----

struct Assignment {
    json x = json::array();
    VPoly u = vpoly_one();
    bool has_x = false;
};

Assignment load_assignment(const std::string& path) {
    Assignment a;
    json j = read_json_file(path);
    if (j.contains("x")) {
        a.x = j.at("x");
        a.has_x = true;
    }
    if (j.contains("u")) a.u = vpoly_from_json(j.at("u"));
    return a;
}

template <EvaluationAlgebra A, class ElemFromJson>
typename A::Element eval_in_backend(const A& alg, const std::string& expr,
                                    const std::optional<Assignment>& assign,
                                    const std::map<std::string, typename A::Element>& idents,
                                    ElemFromJson elem_from_json) {
    if (!assign || !assign->has_x) {
        // expression written directly in backend generators
        return ast_to_element(parse_expression(expr), alg, idents);
    }
    std::vector<typename A::Element> xs;
    for (const auto& xj : assign->x) xs.push_back(elem_from_json(xj));
    PCPoly f = parse_pcpoly(expr, static_cast<int>(xs.size()));
    return evaluate(alg, f, xs, assign->u);
}

int run_eval(const std::string& expr, const std::string& backend, const std::string& assign_path,
             long probe, bool as_json) {
    std::optional<Assignment> assign;
    if (!assign_path.empty()) assign = load_assignment(assign_path);

    json out;
    std::string rendered;
    if (backend == "weyl") {
        WeylAlgebra alg;
        std::map<std::string, WeylElement> idents{{"v", WeylElement::v()}, {"w", WeylElement::w()}};
        auto result = eval_in_backend(alg, expr, assign, idents,
                                      [](const json& j) { return weyl_from_json(j); });
        rendered = render(result);
        out = weyl_to_json(result);
    } else if (backend == "shift") {
        ShiftAlgebra alg(probe);
        std::map<std::string, ShiftOp> idents{{"v", ShiftOp::shift()}};
        auto result = eval_in_backend(alg, expr, assign, idents,
                                      [](const json& j) { return shift_from_json(j); });
        rendered = render(result, probe);
        out = shift_to_json(result, probe);
    } else if (backend == "product") {
        DirectProduct<WeylAlgebra> alg(std::vector<WeylAlgebra>{WeylAlgebra{}, WeylAlgebra{}});
        std::map<std::string, DirectProduct<WeylAlgebra>::Element> idents{
            {"v", alg.v()}, {"w", {WeylElement::w(), WeylElement::w()}}};
        auto result = eval_in_backend(alg, expr, assign, idents, [](const json& j) {
            DirectProduct<WeylAlgebra>::Element e;
            for (const auto& comp : j.at("components")) e.push_back(weyl_from_json(comp));
            if (e.size() != 2) throw std::invalid_argument("product element needs 2 components");
            return e;
        });
        rendered = "(" + render(result[0]) + ", " + render(result[1]) + ")";
        json comps = json::array();
        for (const auto& c : result) comps.push_back(weyl_to_json(c));
        out = json{{"components", comps}};
    } else {
        throw CLI::ValidationError("--backend must be weyl, shift or product");
    }

    if (as_json)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << rendered << "\n";
    return kExitOk;
}

// ---- solve ----

template <EvaluationAlgebra A, class WitnessJson>
int solve_and_verify(const A& alg, const AdmissiblePoly& f, const typename A::Element& target,
                     const std::string& trace_path, WitnessJson witness_json_out, bool as_json) {
    auto res = solve(f, target, alg);
    bool ok = alg.equal(evaluate(alg, expand(f), res.witness.xs, res.witness.u), target);
    json out = witness_json_out(res);
    out["verified"] = ok;
    if (!trace_path.empty()) {
        std::ofstream tf(trace_path);
        if (!tf) throw std::invalid_argument("cannot write trace file: " + trace_path);
        tf << trace_to_json(res.trace).dump(2) << "\n";
    }
    std::cout << out.dump(2) << "\n";
    if (!ok) {
        std::cerr << "verification failed: witness does not evaluate to the target\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

int run_solve(const std::string& poly_path, const std::string& target_expr,
              const std::string& backend, long probe, const std::string& trace_path, bool as_json) {
    AdmissiblePoly f = admissible_from_json(read_json_file(poly_path));
    if (backend == "weyl") {
        WeylAlgebra alg;
        std::map<std::string, WeylElement> idents{{"v", WeylElement::v()}, {"w", WeylElement::w()}};
        auto target = ast_to_element(parse_expression(target_expr), alg, idents);
        return solve_and_verify<WeylAlgebra>(
            alg, f, target, trace_path,
            [](const SolveResult<WeylAlgebra>& r) { return witness_to_json(r.witness); }, as_json);
    }
    if (backend == "shift") {
        ShiftAlgebra alg(probe);
        std::map<std::string, ShiftOp> idents{{"v", ShiftOp::shift()}};
        auto target = ast_to_element(parse_expression(target_expr), alg, idents);
        auto to_json = [probe](const SolveResult<ShiftAlgebra>& r) {
            return witness_to_json(r.witness, probe);
        };
        return solve_and_verify<ShiftAlgebra>(alg, f, target, trace_path, to_json, as_json);
    }
    if (backend == "product") {
        DirectProduct<WeylAlgebra> alg(std::vector<WeylAlgebra>{WeylAlgebra{}, WeylAlgebra{}});
        std::map<std::string, DirectProduct<WeylAlgebra>::Element> idents{
            {"v", alg.v()}, {"w", {WeylElement::w(), WeylElement::w()}}};
        auto target = ast_to_element(parse_expression(target_expr), alg, idents);
        return solve_and_verify<DirectProduct<WeylAlgebra>>(
            alg, f, target, trace_path,
            [](const SolveResult<DirectProduct<WeylAlgebra>>& r) { return witness_to_json(r.witness); },
            as_json);
    }
    throw CLI::ValidationError("--backend must be weyl, shift or product");
}

// ---- independence ----

int run_independence(int n, int r, const std::string& kind_str, bool as_json) {
    Kind kind = kind_str == "one" ? Kind::one : Kind::two;
    auto keys = generator_keys(n, r, kind);
    std::vector<PCPoly> gens;
    gens.reserve(keys.size());
    for (const auto& key : keys)
        gens.push_back(kind == Kind::one ? expand_generator(n, key.sigma, key.b)
                                         : expand_generator_marked(n, key.sigma, key.b, key.i));
    int got = independence_rank(gens);
    int expected = static_cast<int>(keys.size());
    bool ok = got == expected;
    if (as_json) {
        std::cout << json{{"n", n}, {"r", r},       {"kind", kind_str},
                          {"rank", got}, {"expected", expected}, {"independent", ok}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "rank " << got << " of " << expected << (ok ? " (independent)" : " (DEPENDENT)")
                  << "\n";
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

// ---- gen-system ----

Perm parse_sigma(const std::string& text, int n) {
    if (text.empty()) return identity_perm(n);
    Perm sigma;
    std::string token;
    for (char c : text + ",") {
        if (c == ',') {
            if (!token.empty()) sigma.push_back(std::stoi(token));
            token.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            token += c;
        } else if (c != ' ' && c != '[' && c != ']') {
            throw std::invalid_argument("bad --sigma, expected comma-separated images like 2,1");
        }
    }
    if (static_cast<int>(sigma.size()) != n || !is_permutation(sigma))
        throw std::invalid_argument("--sigma must be a permutation of 1.." + std::to_string(n));
    return sigma;
}

int run_gen_system(int n, int r, int kmax, const std::string& sigma_text, bool paper_example,
                   bool as_json) {
    if (paper_example) {
        std::cout << render_paper_example();
        return kExitOk;
    }
    Perm sigma = parse_sigma(sigma_text, n);
    auto m = gen_system(sigma, n, r, kmax);
    auto kernel = nullspace(m);
    if (as_json) {
        json rows = json::array();
        for (size_t i = 0; i < m.rows().size(); ++i) {
            json entries = json::array();
            for (size_t jcol = 0; jcol < m.columns().size(); ++jcol)
                entries.push_back(m.at(i, jcol).get_str());
            rows.push_back({{"k", m.rows()[i].k}, {"b", m.rows()[i].b}, {"entries", entries}});
        }
        json cols = json::array();
        for (const auto& c : m.columns()) cols.push_back({{"b", c.b}, {"i", c.i}});
        json kernel_json = json::array();
        for (const auto& vec : kernel) {
            json v = json::array();
            for (const auto& q : vec) v.push_back(rat_to_json(q));
            kernel_json.push_back(v);
        }
        std::cout << json{{"n", n},
                          {"r", r},
                          {"k_max", kmax},
                          {"columns", cols},
                          {"rows", rows},
                          {"rank", m.columns().size() - kernel.size()},
                          {"kernel", kernel_json}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << render_system_report(m);
    }
    return kExitOk;
}

// ---- verify-identities ----

struct IdentityReport {
    int checked = 0;
    int failed = 0;
    std::vector<std::string> lines;

    void record(const std::string& label, int instances, bool ok) {
        ++checked;
        if (!ok) ++failed;
        lines.push_back(label + ": " + (ok ? "PASS" : "FAIL") + " (" + std::to_string(instances) +
                        " instances)");
    }
};

void verify_rewrite(IdentityReport& rep, int n_max, int r_max) {
    for (int n = 1; n <= n_max; ++n) {
        for (int r = 0; r <= r_max; ++r) {
            int count = 0;
            bool ok = true;
            for (const auto& b : compositions(n, r)) {
                for (int i = 1; i <= n; ++i) {
                    PCPoly lhs = PCPoly::v(n) * x_power(n, i, b);
                    PCPoly rhs =
                        x_power(n, i, add_index(b, unit_index(n, i))) + x_power(n, i, b) * PCPoly::v(n);
                    ok = ok && lhs == rhs;
                    ++count;
                }
            }
            rep.record("4.3 n=" + std::to_string(n) + " r=" + std::to_string(r), count, ok);
        }
    }
}

void verify_marked_power(IdentityReport& rep, int n_max, int r_max, int k_max) {
    for (int n = 1; n <= n_max; ++n) {
        for (int r = 0; r <= r_max; ++r) {
            for (int k = 1; k <= k_max; ++k) {
                int count = 0;
                bool ok = true;
                for (const auto& b : compositions(n, r)) {
                    for (int i = 1; i <= n; ++i) {
                        PCPoly lhs = pi_k(x_power_marked(n, i, b), k);
                        PCPoly rhs(n);
                        for (int s = 1; s <= k; ++s) {
                            MultiIndex shift(static_cast<size_t>(n), 0);
                            shift[static_cast<size_t>(i - 1)] = s;
                            rhs += Rat(binomial(k, s)) *
                                   (x_power(n, i, add_index(b, shift)) * v_power_poly(n, k - s));
                        }
                        ok = ok && lhs == rhs;
                        ++count;
                    }
                }
                rep.record("4.4 n=" + std::to_string(n) + " r=" + std::to_string(r) +
                               " k=" + std::to_string(k),
                           count, ok);
            }
        }
    }
}

void verify_commute_past_word(IdentityReport& rep, int n_max, int r_max, int k_max) {
    for (int n = 2; n <= n_max; ++n) {
        for (int r = 0; r <= r_max; ++r) {
            for (int k = 1; k <= k_max; ++k) {
                int count = 0;
                bool ok = true;
                for (const auto& b : compositions(n, r)) {
                    for (int i = 1; i <= n - 1; ++i) {
                        std::vector<int> word;
                        for (int j = i + 1; j <= n; ++j) word.push_back(j);
                        for (int s = 1; s <= k; ++s) {
                            PCPoly lhs = v_power_poly(n, k - s) * word_power(n, word, b);
                            PCPoly rhs(n);
                            for (int t = s; t <= k; ++t) {
                                for (const auto& d : d_set(t - s, i + 1, n)) {
                                    std::vector<int> tail(d.begin() + i, d.end());
                                    Rat coef =
                                        Rat(binomial(k - s, t - s)) * Rat(multinomial(t - s, tail));
                                    rhs += coef * (word_power(n, word, add_index(b, d)) *
                                                   v_power_poly(n, k - t));
                                }
                            }
                            ok = ok && lhs == rhs;
                            ++count;
                        }
                    }
                }
                rep.record("4.5 n=" + std::to_string(n) + " r=" + std::to_string(r) +
                               " k=" + std::to_string(k),
                           count, ok);
            }
        }
    }
}

void verify_marked_word(IdentityReport& rep, int n_max, int r_max, int k_max) {
    for (int n = 1; n <= n_max; ++n) {
        for (int r = 0; r <= r_max; ++r) {
            for (int k = 1; k <= k_max; ++k) {
                int count = 0;
                bool ok = true;
                for (const auto& sigma : all_permutations(n)) {
                    for (const auto& b : compositions(n, r)) {
                        for (int i = 1; i <= n; ++i) {
                            PCPoly lhs = pi_k(expand_generator_marked(n, sigma, b, i), k);
                            PCPoly rhs(n);
                            for (int t = 1; t <= k; ++t)
                                rhs += Rat(binomial(k, t)) *
                                       (expand(p_poly(n, sigma, b, i, t)) * v_power_poly(n, k - t));
                            ok = ok && lhs == rhs;
                            ++count;
                        }
                    }
                }
                rep.record("4.6 n=" + std::to_string(n) + " r=" + std::to_string(r) +
                               " k=" + std::to_string(k),
                           count, ok);
            }
        }
    }
}

void verify_binomial(IdentityReport& rep, int n_max, int k_max) {
    const int n = std::max(3, n_max);
    for (int k = 1; k <= k_max; ++k) {
        int count = 0;
        bool ok = true;
        for (int s = 1; s <= k; ++s) {
            for (int t = s; t <= k; ++t) {
                for (int i = 1; i <= n - 2; ++i) {
                    for (int sp = 0; sp <= t - s; ++sp) {
                        for (const auto& d : d_set(t - s - sp, i + 2, n)) {
                            std::vector<int> tail(d.begin() + (i + 1), d.end());
                            Int lhs = binomial(k - s, sp) * binomial(k - s - sp, t - s - sp) *
                                      multinomial(t - s - sp, tail);
                            std::vector<int> with_sp;
                            with_sp.push_back(sp);
                            with_sp.insert(with_sp.end(), tail.begin(), tail.end());
                            Int rhs = binomial(k - s, t - s) * multinomial(t - s, with_sp);
                            ok = ok && lhs == rhs;
                            ++count;
                        }
                    }
                }
            }
        }
        rep.record("bin k=" + std::to_string(k), count, ok);
    }
}

int run_verify_identities(const std::string& lemma, int n, int r, int kmax, bool as_json) {
    IdentityReport rep;
    if (lemma == "4.3")
        verify_rewrite(rep, n, r);
    else if (lemma == "4.4")
        verify_marked_power(rep, n, r, kmax);
    else if (lemma == "4.5")
        verify_commute_past_word(rep, n, r, kmax);
    else if (lemma == "4.6")
        verify_marked_word(rep, n, r, kmax);
    else if (lemma == "bin")
        verify_binomial(rep, n, kmax);
    else if (lemma == "all") {
        verify_rewrite(rep, n, r);
        verify_marked_power(rep, n, r, kmax);
        verify_commute_past_word(rep, n, r, kmax);
        verify_marked_word(rep, n, r, kmax);
        verify_binomial(rep, n, kmax);
    } else {
        throw CLI::ValidationError("--lemma must be one of 4.3, 4.4, 4.5, 4.6, bin, all");
    }

    if (as_json) {
        std::cout << json{{"lemma", lemma}, {"groups", rep.lines}, {"failed", rep.failed}}.dump(2)
                  << "\n";
    } else {
        for (const auto& line : rep.lines) std::cout << line << "\n";
        std::cout << (rep.failed == 0 ? "all identities hold" : "FAILURES PRESENT") << "\n";
    }
    return rep.failed == 0 ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation with partially commutative polynomials and polynomial images"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string expr, backend = "weyl", assign_path, poly_path, target_expr, trace_path;
    std::string kind_str = "one", sigma_text, lemma = "all";
    int n_flag = 0, n = 3, r = 2, kmax = 3;
    long probe = 20;
    bool as_json = false, paper_example = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    auto* normalize = app.add_subcommand("normalize", "canonical form of an expression");
    normalize->add_option("expr", expr, "expression over X1..Xn, U, V")->required();
    normalize->add_option("--n", n_flag, "variable count (default: inferred)");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression in a backend");
    eval_cmd->add_option("expr", expr, "expression")->required();
    eval_cmd->add_option("--backend", backend, "weyl | shift | product")->required();
    eval_cmd->add_option("--assign", assign_path, "JSON assignment {x: [...], u: {coeffs}}");
    eval_cmd->add_option("--probe", probe, "probe window for the shift backend (default 20)");

    auto* solve_cmd = app.add_subcommand("solve", "produce a witness with f(x1..xn) = target");
    solve_cmd->add_option("--poly", poly_path, "polynomial JSON file")->required();
    solve_cmd->add_option("--target", target_expr, "target element expression")->required();
    solve_cmd->add_option("--backend", backend, "weyl | shift | product")->required();
    solve_cmd->add_option("--probe", probe, "probe window for the shift backend (default 20)");
    solve_cmd->add_option("--trace", trace_path, "write the reduction trace to this file");

    auto* indep = app.add_subcommand("independence", "rank of a generator family");
    indep->add_option("--n", n, "variable count")->required();
    indep->add_option("--r", r, "order")->required();
    indep->add_option("--kind", kind_str, "one | two")->required()
        ->check(CLI::IsMember({"one", "two"}));

    auto* gensys = app.add_subcommand("gen-system", "generate the linear system and its kernel");
    gensys->add_option("--n", n, "variable count");
    gensys->add_option("--r", r, "order");
    gensys->add_option("--kmax", kmax, "largest bracket depth k");
    gensys->add_option("--sigma", sigma_text, "permutation images, e.g. 2,1");
    gensys->add_flag("--paper-example", paper_example, "print the worked n=2, r=1 layout");

    auto* verify = app.add_subcommand("verify-identities", "exhaustive expansion-identity checks");
    verify->add_option("--lemma", lemma, "4.3 | 4.4 | 4.5 | 4.6 | bin | all");
    verify->add_option("--n", n, "max variable count (default 3)");
    verify->add_option("--r", r, "max order (default 2)");
    verify->add_option("--kmax", kmax, "max substitution depth (default 3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (normalize->parsed()) return run_normalize(expr, n_flag, as_json);
        if (eval_cmd->parsed()) return run_eval(expr, backend, assign_path, probe, as_json);
        if (solve_cmd->parsed())
            return run_solve(poly_path, target_expr, backend, probe, trace_path, as_json);
        if (indep->parsed()) return run_independence(n, r, kind_str, as_json);
        if (gensys->parsed())
            return run_gen_system(n, r, kmax, sigma_text, paper_example, as_json);
        if (verify->parsed()) return run_verify_identities(lemma, n, r, kmax, as_json);
    } catch (const InternalSoundnessError& e) {
        std::cerr << "internal soundness failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
