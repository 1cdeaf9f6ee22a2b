#pragma once

// Command-line driver. `run_command` is the whole CLI; tools/relcr_main.cpp
// only forwards argv.
//
// Exit codes: 0 verdict computed, 1 failed certificate or corpus check,
// 2 input error, 3 Inconclusive or budget exceeded.

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relcr/io.hpp"
#include "relcr/relcr.hpp"

namespace relcr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitUndecided = 3;

struct Options {
    std::string format = "text";
    std::string mode = "auto";
    std::string prefer = "i";
    std::optional<std::string> pool_file;
    std::optional<std::size_t> max_dim;
};

struct Output {
    Json report = Json::object();
    Json cert;
    int exit_code = kExitOk;
};

inline std::string rational_to_string(const Rational& r)
{
    return RationalField{}.to_string(r);
}

// ---------------------------------------------------------------------------
// Report pieces
// ---------------------------------------------------------------------------

template <ExactField F>
Json header(const std::string& command, const Problem<F>& p)
{
    return Json{{"command", command},
                {"field", p.tuple.field().spec().name()},
                {"dim", p.tuple.dim()},
                {"kind", to_string(p.tuple.kind())},
                {"generators", p.tuple.size()},
                {"h", p.h.describe()}};
}

template <ExactField F>
Json problem_json(const Problem<F>& p, const std::vector<Matrix<F>>& pool = {})
{
    auto j = problem_to_json(p.tuple, p.h);
    if (!pool.empty()) {
        Json arr = Json::array();
        for (const auto& g : pool) arr.push_back(matrix_to_json(g));
        j["pool"] = arr;
    }
    return j;
}

template <ExactField F>
Json subspace_summary(const Subspace<F>& s)
{
    return Json{{"dim", s.dim()}, {"basis", subspace_to_json(s)}};
}

inline std::string condition_name(FailedCondition c)
{
    return c == FailedCondition::SubmoduleInU ? "submodule inside U" : "submodule containing the complement";
}

inline Json one_based_classes(const std::vector<std::vector<std::size_t>>& classes)
{
    Json out = Json::array();
    for (const auto& c : classes) {
        Json a = Json::array();
        for (auto x : c) a.push_back(x + 1);
        out.push_back(a);
    }
    return out;
}

template <ExactField F>
std::vector<Matrix<F>> unflatten_all(const Subspace<F>& s, std::size_t n)
{
    std::vector<Matrix<F>> out;
    for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(Matrix<F>::unflatten(s.field(), n, s.basis_vector(i)));
    return out;
}

template <ExactField F>
Json matrices_json(const std::vector<Matrix<F>>& ms)
{
    Json a = Json::array();
    for (const auto& m : ms) a.push_back(matrix_to_json(m));
    return a;
}

inline void enforce_budget(std::size_t dim, const Options& o)
{
    if (o.max_dim && dim > *o.max_dim)
        throw BudgetExceeded("dimension " + std::to_string(dim) + " exceeds --max-dim-budget " +
                             std::to_string(*o.max_dim));
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

template <ExactField F>
Output cmd_check(const Problem<F>& p, const Options& o)
{
    auto pool = p.pool;
    if (o.pool_file) pool = parse_pool(read_text_file(*o.pool_file), p.tuple.field(), p.h);
    const bool search = o.mode == "search" || (o.mode == "auto" && !p.h.glu_coords());
    const auto mode = search ? CheckMode::CocharSearch : CheckMode::ModuleCriterion;
    const auto rep = check_relcr(p.tuple, p.h, mode, pool);
    Output out;
    out.report = header("check", p);
    auto& r = out.report;
    r["mode"] = to_string(rep.mode);
    r["verdict"] = to_string(rep.verdict);
    r["search_exhausted"] = rep.search_exhausted;
    if (rep.mode == CheckMode::CocharSearch) r["candidates_checked"] = rep.candidates_checked;
    if (rep.sigma) r["sigma"] = subspace_summary(*rep.sigma);
    if (rep.iota) r["iota"] = subspace_summary(*rep.iota);
    if (rep.sigma_semisimple) r["sigma_semisimple"] = *rep.sigma_semisimple;
    if (rep.radical_method) r["radical_method"] = to_string(*rep.radical_method);
    if (rep.direct_sum) r["direct_sum"] = *rep.direct_sum;
    if (rep.normalized_by_h) r["normalized_by_h"] = *rep.normalized_by_h;
    if (rep.destabilizer) {
        r["destabilizer"] = rep.destabilizer->lambda.describe();
        if (rep.destabilizer->witness) r["witness"] = subspace_summary(*rep.destabilizer->witness);
        if (rep.destabilizer->condition) r["failed_condition"] = condition_name(*rep.destabilizer->condition);
    }
    if (!rep.note.empty()) r["note"] = rep.note;

    out.cert = Json{{"type", "check"},
                    {"problem", problem_json(p, pool)},
                    {"mode", to_string(rep.mode)},
                    {"verdict", to_string(rep.verdict)},
                    {"search_exhausted", rep.search_exhausted},
                    {"destabilizer", rep.destabilizer ? cocharacter_to_json(rep.destabilizer->lambda) : Json(nullptr)}};
    if (rep.sigma) out.cert["sigma"] = subspace_to_json(*rep.sigma);
    if (rep.iota) out.cert["iota"] = subspace_to_json(*rep.iota);
    if (rep.verdict == Verdict::Inconclusive) out.exit_code = kExitUndecided;
    return out;
}

template <ExactField F>
Output cmd_irr(const Problem<F>& p, const Options&)
{
    const bool irr = is_rel_irreducible(p.tuple, p.h);
    const auto fr = detail::glu_frame(p.h, p.tuple.field());
    Output out;
    out.report = header("irr", p);
    out.report["irreducible"] = irr;
    out.report["sigma"] = subspace_summary(sigma(p.tuple, fr.u));
    out.report["iota"] = subspace_summary(iota(p.tuple, fr.ubar));
    if (irr && !fr.ubar.is_zero()) out.report["centralizer_dim"] = centralizer_dim(p.h, p.tuple);
    out.cert = Json{{"type", "irr"}, {"problem", problem_json(p)}, {"irreducible", irr}};
    return out;
}

template <ExactField F>
Output cmd_kraft(const Problem<F>& p, const Options&)
{
    const auto rad = radical(associative_closure(p.tuple));
    const auto basis = unflatten_all(rad.radical, p.tuple.dim());
    Output out;
    out.report = header("kraft", p);
    out.report["semisimple"] = rad.radical.is_zero();
    out.report["radical_dim"] = rad.radical.dim();
    out.report["radical_method"] = to_string(rad.method);
    if (!basis.empty()) out.report["radical_basis"] = matrices_json(basis);
    out.cert = Json{{"type", "kraft"},
                    {"problem", problem_json(p)},
                    {"semisimple", rad.radical.is_zero()},
                    {"radical", matrices_json(basis)}};
    return out;
}

template <ExactField F>
Output cmd_semisimplify(const Problem<F>& p, const Options& o)
{
    const auto pref =
        o.prefer == "ii" ? DestabilizerPreference::ConditionIIFirst : DestabilizerPreference::ConditionIFirst;
    const auto tr = semisimplify(p.tuple, p.h, pref);
    Output out;
    out.report = header("semisimplify", p);
    out.report["preference"] = o.prefer == "ii" ? "condition ii first" : "condition i first";
    out.report["steps"] = tr.steps.size();
    Json steps = Json::array();
    for (std::size_t i = 0; i < tr.steps.size(); ++i) {
        const auto& s = tr.steps[i];
        out.report["step " + std::to_string(i + 1)] = s.destabilizer.lambda.describe() + ", centralizer dim " +
                                                      std::to_string(s.before_dim) + " -> " +
                                                      std::to_string(s.after_dim);
        auto j = cocharacter_to_json(s.destabilizer.lambda);
        j["before_dim"] = s.before_dim;
        j["after_dim"] = s.after_dim;
        steps.push_back(j);
    }
    out.report["final"] = matrices_json(tr.final.entries());
    out.report["final_verdict"] = to_string(tr.final_report.verdict);
    out.cert = Json{{"type", "semisimplify"},
                    {"problem", problem_json(p)},
                    {"steps", steps},
                    {"final", matrices_json(tr.final.entries())}};
    return out;
}

template <ExactField F>
Output cmd_optimal(const Problem<F>& p, const Options&)
{
    const auto res = optimal_destabilizing_cocharacter(p.tuple, p.h);
    Output out;
    out.report = header("optimal", p);
    out.report["status"] = to_string(res.status);
    out.cert = Json{{"type", "optimal"}, {"problem", problem_json(p)}, {"status", to_string(res.status)}};
    if (res.result) {
        out.report["lambda"] = res.result->lambda_opt.describe();
        out.report["value"] = rational_to_string(res.result->value);
        out.report["parabolic_fingerprint"] = one_based_classes(res.result->parabolic_fingerprint);
        out.cert["weights"] = res.result->lambda_opt.weights();
        out.cert["value"] = rational_to_string(res.result->value);
    }
    if (!res.reason.empty()) out.report["reason"] = res.reason;
    return out;
}

inline Output cmd_oracle(const Problem<PrimeField>& p, const Options&)
{
    const auto& t = p.tuple;
    Output out;
    out.report = header("oracle", p);
    const auto lattice = submodule_lattice(t);
    out.report["submodules"] = lattice.size();
    const bool ss = brute_force_semisimple(t);
    out.report["brute_force_semisimple"] = ss;
    Json cert{{"type", "oracle"}, {"problem", problem_json(p)}, {"semisimple", ss}};
    try {
        out.report["kraft_agrees"] = is_semisimple_module(t) == ss;
    } catch (const RadicalUndecided&) {
        out.report["kraft_agrees"] = "undecided";
    }
    if (p.h.glu_coords()) {
        const bool rel = brute_force_relcr(t, p.h);
        out.report["brute_force_relcr"] = rel;
        auto rep = check_relcr_module(t, p.h);
        if (rep.verdict != Verdict::Inconclusive)
            out.report["module_criterion_agrees"] = (rep.verdict == Verdict::RelCR) == rel;
        cert["relcr"] = rel;
    }
    out.cert = cert;
    return out;
}

template <ExactField F>
Output cmd_oracle(const Problem<F>&, const Options&)
{
    throw InvalidInput("the oracle enumerates subspaces and needs a prime field");
}

// ---------------------------------------------------------------------------
// Certificate replay
// ---------------------------------------------------------------------------

namespace detail {

template <ExactField F>
WeightedCocharacter<F> cocharacter_from_json(const Json& problem, const Json& lam, const HSpec& h)
{
    if (!lam.is_object() || !lam.contains("weights") || !lam["weights"].is_array())
        throw InvalidInput("certificate cocharacter needs a weights array");
    std::vector<std::int64_t> w;
    for (const auto& x : lam["weights"]) {
        if (!x.is_number_integer()) throw InvalidInput("weights must be integers");
        w.push_back(x.get<std::int64_t>());
    }
    if (w.size() != h.dim()) throw InvalidInput("weight vector has the wrong length");
    std::optional<Matrix<F>> conj;
    if (lam.contains("conjugator") && !lam["conjugator"].is_null()) {
        auto pj = problem;
        pj["pool"] = Json::array({lam["conjugator"]});
        auto parsed = std::get<Problem<F>>(parse_problem(pj.dump()));
        conj = parsed.pool.at(0);
    }
    return make_cocharacter<F>(h, std::move(w), std::move(conj));
}

/// Empty string when the certificate replays, otherwise the reason.
template <ExactField F>
std::string replay(const Json& cert, const Problem<F>& p)
{
    const auto type = cert.value("type", std::string());
    const auto& t = p.tuple;
    const auto& h = p.h;
    if (type == "check") {
        const auto verdict = cert.value("verdict", std::string());
        if (verdict == "NotRelCR") {
            if (cert["destabilizer"].is_null()) return "NotRelCR certificate without a destabilizer";
            auto lambda = cocharacter_from_json<F>(cert["problem"], cert["destabilizer"], h);
            for (std::size_t i = 0; i < t.size(); ++i)
                if (classify_membership(lambda, t[i], t.kind()) == MembershipClass::NotInP)
                    return "generator " + std::to_string(i + 1) + " is not in P_lambda";
            if (exists_restoring_mu(lambda, t, h)) return "a restoring cocharacter exists for the destabilizer";
            return "";
        }
        if (verdict == "RelCR" && cert.value("mode", std::string()) == "module") {
            const auto fr = relcr::detail::glu_frame(h, t.field());
            const auto s = sigma(t, fr.u);
            const auto i = iota(t, fr.ubar);
            if (cert["sigma"] != subspace_to_json(s) || cert["iota"] != subspace_to_json(i))
                return "sigma or iota differs from the recomputed subspace";
            if (!relcr::detail::semisimple_on(t, s).first) return "sigma is not semisimple";
            if (!is_direct_complement(s, i)) return "sigma and iota do not form a direct sum";
            return "";
        }
        auto rep = check_relcr(t, h, cert.value("mode", std::string()) == "search" ? CheckMode::CocharSearch
                                                                                 : CheckMode::ModuleCriterion,
                               p.pool);
        return to_string(rep.verdict) == verdict ? "" : "recomputed verdict is " + to_string(rep.verdict);
    }
    if (type == "semisimplify") {
        auto cur = t;
        for (const auto& s : cert["steps"]) {
            auto lambda = cocharacter_from_json<F>(cert["problem"], s, h);
            if (!tuple_in_parabolic(lambda, cur)) return "a step's tuple is not in P_lambda";
            auto before = centralizer_dim(h, cur);
            cur = apply_limit(lambda, cur);
            auto after = centralizer_dim(h, cur);
            if (s.value("before_dim", std::size_t(0)) != before || s.value("after_dim", std::size_t(0)) != after ||
                after <= before)
                return "centralizer dimensions do not replay";
        }
        if (matrices_json(cur.entries()) != cert["final"]) return "final tuple differs";
        if (check_relcr_module(cur, h).verdict != Verdict::RelCR) return "final tuple is not RelCR";
        return "";
    }
    if (type == "optimal") {
        auto res = optimal_destabilizing_cocharacter(t, h);
        if (to_string(res.status) != cert.value("status", std::string())) return "status differs";
        if (!res.result) return "";
        auto lambda = cocharacter_from_json<F>(cert["problem"], cert, h);
        auto q = squared_quality(t, lambda.weights());
        if (!q || rational_to_string(*q) != cert.value("value", std::string())) return "value does not replay";
        if (lambda.weights() != res.result->lambda_opt.weights()) return "weights are not optimal";
        return "";
    }
    if (type == "irr") return is_rel_irreducible(t, h) == cert.value("irreducible", false) ? "" : "verdict differs";
    if (type == "kraft") {
        auto rad = radical(associative_closure(t));
        return matrices_json(unflatten_all(rad.radical, t.dim())) == cert["radical"] ? "" : "radical differs";
    }
    if (type == "oracle") {
        if constexpr (std::is_same_v<F, PrimeField>) {
            if (brute_force_semisimple(t) != cert.value("semisimple", false)) return "semisimplicity differs";
            if (cert.contains("relcr") && brute_force_relcr(t, h) != cert["relcr"].get<bool>())
                return "relative verdict differs";
            return "";
        }
        return "oracle certificate over a non-prime field";
    }
    return "unknown certificate type \"" + type + "\"";
}

} // namespace detail

inline Output cmd_verify_cert(const std::string& text)
{
    const std::string marker = "---cert---";
    auto pos = text.find(marker);
    auto body = pos == std::string::npos ? text : text.substr(pos + marker.size());
    auto j = parse_json_text(body);
    if (j.is_object() && j.contains("cert")) j = j["cert"];
    if (!j.is_object() || !j.contains("problem")) throw InvalidInput("not a certificate: missing \"problem\"");
    auto problem = parse_problem(j["problem"].dump());
    std::string reason;
    try {
        reason = std::visit([&](const auto& p) { return detail::replay(j, p); }, problem);
    } catch (const NotInH& e) {
        reason = e.what();
    } catch (const NotInP& e) {
        reason = e.what();
    }
    Output out;
    out.report = Json{{"command", "verify-cert"},
                      {"type", j.value("type", std::string())},
                      {"certificate", reason.empty() ? "valid" : "invalid"}};
    if (!reason.empty()) out.report["reason"] = reason;
    out.exit_code = reason.empty() ? kExitOk : kExitFailed;
    return out;
}

// ---------------------------------------------------------------------------
// Embedded corpus
// ---------------------------------------------------------------------------

namespace corpus {

inline const char* kUnipotentPair = R"json({"field": "Q", "dim": 3, "kind": "group",
 "generators": [[[1,1,0],[0,1,0],[0,0,1]], [[1,0,1],[0,1,0],[0,0,1]]],
 "h": {"type": "levi", "blocks": [{"coords": [2,3], "det_one": true}]}})json";
inline const char* kUnipotentE12 = R"json({"field": "Q", "dim": 3, "kind": "group",
 "generators": [[[1,1,0],[0,1,0],[0,0,1]]],
 "h": {"type": "levi", "blocks": [{"coords": [2,3], "det_one": true}]}})json";
inline const char* kUnipotentE13 = R"json({"field": "Q", "dim": 3, "kind": "group",
 "generators": [[[1,0,1],[0,1,0],[0,0,1]]],
 "h": {"type": "levi", "blocks": [{"coords": [2,3], "det_one": true}]}})json";
inline const char* kJordanGF3 = R"json({"field": "GF(3)", "dim": 2, "kind": "group",
 "generators": [[[1,1],[0,1]]], "h": {"type": "glu", "u": [2]}})json";
inline const char* kSwapGF3 = R"json({"field": "GF(3)", "dim": 2, "kind": "group",
 "generators": [[[0,1],[1,0]]], "h": {"type": "glu", "u": [2]}})json";
inline const char* kSwapGF2 = R"json({"field": "GF(2)", "dim": 2, "kind": "group",
 "generators": [[[0,1],[1,0]]], "h": {"type": "full_gl"}})json";
inline const char* kKempfE12 = R"json({"field": "Q", "dim": 2, "kind": "lie",
 "generators": [[[0,1],[0,0]]], "h": {"type": "full_gl"}})json";
inline const char* kKempfSymmetric = R"json({"field": "Q", "dim": 2, "kind": "lie",
 "generators": [[[0,1],[1,0]]], "h": {"type": "full_gl"}})json";

inline std::string jordan_block(std::size_t k)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < k; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < k; ++j) row.push_back(i == j || j == i + 1 ? 1 : 0);
        rows.push_back(row);
    }
    return Json{{"field", "GF(3)"}, {"dim", k}, {"kind", "group"}, {"generators", Json::array({rows})},
                {"h", {{"type", "full_gl"}}}}
        .dump();
}

template <ExactField F>
Problem<F> as(AnyProblem p)
{
    return std::get<Problem<F>>(std::move(p));
}

struct Case {
    std::string name;
    std::function<std::string()> run; ///< returns "" on success, else the mismatch
};

template <class T>
std::string expect_eq(const T& got, const T& want, const std::string& what)
{
    if (got == want) return "";
    std::ostringstream s;
    s << what << " mismatch";
    return s.str();
}

inline std::vector<Case> cases()
{
    std::vector<Case> out;
    auto search = [](const char* text) {
        const auto& p = as<RationalField>(parse_problem(text));
        return check_relcr_search(p.tuple, p.h, p.pool);
    };
    out.push_back({"unipotent pair in an SL block: K = <I+E12, I+E13> is RelCR", [=] {
                       auto r = search(kUnipotentPair);
                       if (r.verdict != Verdict::RelCR) return std::string("verdict ") + to_string(r.verdict);
                       return r.search_exhausted ? std::string() : std::string("search not exhausted");
                   }});
    auto destab = [=](const char* text, std::vector<std::int64_t> w) {
        return [=]() -> std::string {
            auto r = search(text);
            if (r.verdict != Verdict::NotRelCR) return "verdict " + to_string(r.verdict);
            if (r.destabilizer->lambda.weights() != w) return "destabilizer " + r.destabilizer->lambda.describe();
            return "";
        };
    };
    out.push_back({"unipotent pair in an SL block: <I+E12> is NotRelCR via (0,-1,1)", destab(kUnipotentE12, {0, -1, 1})});
    out.push_back({"unipotent pair in an SL block: <I+E13> is NotRelCR via (0,1,-1)", destab(kUnipotentE13, {0, 1, -1})});
    out.push_back({"jordan block over GF(3), U = span e2: NotRelCR", [] {
                       const auto& p = as<PrimeField>(parse_problem(kJordanGF3));
                       auto r = check_relcr_module(p.tuple, p.h);
                       if (r.verdict != Verdict::NotRelCR) return "verdict " + to_string(r.verdict);
                       if (!r.sigma->is_zero() || r.iota->dim() != 1) return std::string("sigma/iota certificate");
                       return std::string();
                   }});
    out.push_back({"swap over GF(3), U = span e2: RelCR and irreducible", [] {
                       const auto& p = as<PrimeField>(parse_problem(kSwapGF3));
                       auto r = check_relcr_module(p.tuple, p.h);
                       if (r.verdict != Verdict::RelCR) return "verdict " + to_string(r.verdict);
                       return is_rel_irreducible(p.tuple, p.h) ? std::string() : std::string("not irreducible");
                   }});
    out.push_back({"swap over GF(2) is not semisimple", [] {
                       const auto& p = as<PrimeField>(parse_problem(kSwapGF2));
                       return is_semisimple_module(p.tuple) ? std::string("semisimple") : std::string();
                   }});
    out.push_back({"swap over GF(3) is semisimple", [] {
                       const auto& p = as<PrimeField>(parse_problem(kSwapGF3));
                       return is_semisimple_module(p.tuple) ? std::string() : std::string("not semisimple");
                   }});
    for (std::size_t k = 2; k <= 5; ++k) {
        out.push_back({"jordan block J_" + std::to_string(k) + " over GF(3) semisimplifies in " +
                           std::to_string(k - 1) + " steps",
                       [k] {
                           const auto& p = as<PrimeField>(parse_problem(jordan_block(k)));
                           auto tr = semisimplify(p.tuple, p.h);
                           if (tr.steps.size() != k - 1) return "steps " + std::to_string(tr.steps.size());
                           if (!tr.final[0].is_identity()) return std::string("final is not the identity");
                           return replay_trace(tr, p.tuple, p.h) ? std::string() : std::string("trace replay");
                       }});
    }
    out.push_back({"optimal cocharacter of E12 is (1,-1) with value 2", [] {
                       const auto& p = as<RationalField>(parse_problem(kKempfE12));
                       auto r = optimal_destabilizing_cocharacter(p.tuple, p.h);
                       if (r.status != KempfStatus::Optimal) return "status " + to_string(r.status);
                       if (r.result->lambda_opt.weights() != std::vector<std::int64_t>{1, -1})
                           return "lambda " + r.result->lambda_opt.describe();
                       return r.result->value == 2 ? std::string() : "value " + rational_to_string(r.result->value);
                   }});
    out.push_back({"E12 + E21 is not unstable", [] {
                       const auto& p = as<RationalField>(parse_problem(kKempfSymmetric));
                       auto r = optimal_destabilizing_cocharacter(p.tuple, p.h);
                       return r.status == KempfStatus::NotUnstable ? std::string() : "status " + to_string(r.status);
                   }});
    return out;
}

} // namespace corpus

inline Output cmd_examples()
{
    Output out;
    out.report["command"] = "examples";
    std::size_t passed = 0;
    auto all = corpus::cases();
    for (const auto& c : all) {
        std::string msg;
        try {
            msg = c.run();
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        out.report[c.name] = msg.empty() ? "ok" : "FAIL (" + msg + ")";
        if (msg.empty()) ++passed;
    }
    out.report["passed"] = std::to_string(passed) + "/" + std::to_string(all.size());
    out.exit_code = passed == all.size() ? kExitOk : kExitFailed;
    return out;
}

// ---------------------------------------------------------------------------
// Driver
// ---------------------------------------------------------------------------

inline void emit(std::ostream& os, const std::string& format, const Output& o)
{
    if (format == "json") {
        Json j{{"report", o.report}};
        if (!o.cert.is_null()) j["cert"] = o.cert;
        os << j.dump(2) << "\n";
        return;
    }
    for (const auto& [k, v] : o.report.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    if (!o.cert.is_null()) os << "---cert---\n" << o.cert.dump(2) << "\n";
}

inline int run_command(const std::vector<std::string>& args, std::ostream& out = std::cout,
                       std::ostream& err = std::cerr)
{
    CLI::App app{"Relative complete reducibility of matrix tuples", "relcr"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-dim-budget", opt.max_dim, "Largest ambient dimension accepted");

    std::string file;
    auto add = [&](const std::string& name, const std::string& desc) {
        auto* sub = app.add_subcommand(name, desc);
        sub->add_option("file", file, "Problem file (JSON)")->required();
        return sub;
    };
    auto* check = add("check", "Decide relative complete reducibility");
    check->add_option("--mode", opt.mode, "auto, module or search")
        ->check(CLI::IsMember({"auto", "module", "search"}));
    check->add_option("--pool", opt.pool_file, "Conjugator pool file");
    auto* irr = add("irr", "Decide relative irreducibility");
    auto* kraft = add("kraft", "Decide semisimplicity of the module");
    auto* semi = add("semisimplify", "Degenerate to a relatively completely reducible limit");
    semi->add_option("--prefer", opt.prefer, "Failed condition to repair first: i or ii")
        ->check(CLI::IsMember({"i", "ii"}));
    auto* optimal = add("optimal", "Optimal destabilizing cocharacter for the null limit");
    auto* oracle = add("oracle", "Brute-force counterparts over a prime field");
    auto* verify = add("verify-cert", "Replay a certificate from a report");
    auto* examples = app.add_subcommand("examples", "Run the embedded example corpus");

    std::vector<const char*> argv{"relcr"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        Output result;
        if (examples->parsed()) {
            result = cmd_examples();
        } else if (verify->parsed()) {
            result = cmd_verify_cert(read_text_file(file));
        } else {
            std::string text = read_text_file(file);
            AnyProblem problem = [&] {
                try {
                    return parse_problem(text);
                } catch (const ProblemError& e) {
                    throw InvalidInput(file + ": " + e.what());
                }
            }();
            result = std::visit(
                [&](const auto& p) -> Output {
                    enforce_budget(p.tuple.dim(), opt);
                    if (check->parsed()) return cmd_check(p, opt);
                    if (irr->parsed()) return cmd_irr(p, opt);
                    if (kraft->parsed()) return cmd_kraft(p, opt);
                    if (semi->parsed()) return cmd_semisimplify(p, opt);
                    if (optimal->parsed()) return cmd_optimal(p, opt);
                    if (oracle->parsed()) return cmd_oracle(p, opt);
                    throw InvalidInput("no command");
                },
                problem);
        }
        emit(out, opt.format, result);
        return result.exit_code;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const RadicalUndecided& e) {
        err << "inconclusive: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

} // namespace relcr::cli
