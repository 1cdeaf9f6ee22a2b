#pragma once

// Problem files and JSON serialization.
//
// A problem is a JSON object:
//   {
//     "field": "GF(3)" | "Q",
//     "dim": 2,
//     "kind": "group" | "lie" | "assoc",
//     "generators": [ [[1,1],[0,1]] ],
//     "h": {"type": "glu", "u": [2]},
//     "pool": [ ... ]                       (optional conjugators)
//   }
// Coordinates are 1-based. Entries are integers or strings "a" / "a/b".
// HSpec forms: {"type":"full_gl"}, {"type":"glu","u":[...]},
// {"type":"levi","blocks":[{"coords":[...],"det_one":true}, [...]]}.

#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "relcr/cocharacter.hpp"
#include "relcr/generator_tuple.hpp"
#include "relcr/hspec.hpp"

namespace relcr {

using Json = nlohmann::ordered_json;

/// Malformed input, located in the source text (1-based line and column).
class ProblemError : public InvalidInput {
public:
    ProblemError(std::size_t line, std::size_t column, const std::string& msg)
        : InvalidInput("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column)
    {
    }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

using JsonPath = std::vector<std::variant<std::string, std::size_t>>;

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

/// Minimal scanner over already-valid JSON, used only to find where a value starts.
class JsonLocator {
public:
    explicit JsonLocator(const std::string& text) : s_(text) {}

    std::size_t find(const JsonPath& path) const
    {
        std::size_t pos = 0;
        std::size_t best = skip_ws(0);
        for (const auto& step : path) {
            pos = skip_ws(pos);
            auto next = child(pos, step);
            if (!next) break;
            pos = *next;
            best = skip_ws(pos);
        }
        return best;
    }

private:
    const std::string& s_;

    std::size_t skip_ws(std::size_t p) const
    {
        while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
        return p;
    }

    std::size_t skip_string(std::size_t p) const
    {
        ++p;
        while (p < s_.size() && s_[p] != '"') p += (s_[p] == '\\') ? 2 : 1;
        return p + 1;
    }

    std::size_t skip_value(std::size_t p) const
    {
        p = skip_ws(p);
        if (p >= s_.size()) return p;
        if (s_[p] == '"') return skip_string(p);
        if (s_[p] == '{' || s_[p] == '[') {
            int depth = 0;
            while (p < s_.size()) {
                char c = s_[p];
                if (c == '"') {
                    p = skip_string(p);
                    continue;
                }
                if (c == '{' || c == '[') ++depth;
                if (c == '}' || c == ']') {
                    if (--depth == 0) return p + 1;
                }
                ++p;
            }
            return p;
        }
        while (p < s_.size() && s_[p] != ',' && s_[p] != '}' && s_[p] != ']' &&
               !std::isspace(static_cast<unsigned char>(s_[p])))
            ++p;
        return p;
    }

    std::optional<std::size_t> child(std::size_t p, const std::variant<std::string, std::size_t>& step) const
    {
        if (p >= s_.size()) return std::nullopt;
        if (s_[p] == '{' && std::holds_alternative<std::string>(step)) {
            ++p;
            for (;;) {
                p = skip_ws(p);
                if (p >= s_.size() || s_[p] != '"') return std::nullopt;
                auto end = skip_string(p);
                auto key = s_.substr(p + 1, end - p - 2);
                p = skip_ws(end);
                if (p >= s_.size() || s_[p] != ':') return std::nullopt;
                p = skip_ws(p + 1);
                if (key == std::get<std::string>(step)) return p;
                p = skip_ws(skip_value(p));
                if (p >= s_.size() || s_[p] != ',') return std::nullopt;
                ++p;
            }
        }
        if (s_[p] == '[' && std::holds_alternative<std::size_t>(step)) {
            ++p;
            for (std::size_t i = 0;; ++i) {
                p = skip_ws(p);
                if (p >= s_.size() || s_[p] == ']') return std::nullopt;
                if (i == std::get<std::size_t>(step)) return p;
                p = skip_ws(skip_value(p));
                if (p >= s_.size() || s_[p] != ',') return std::nullopt;
                ++p;
            }
        }
        return std::nullopt;
    }
};

} // namespace detail

/// Parses JSON text; syntax errors become ProblemError with their position.
inline Json parse_json_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        std::string msg = e.what();
        auto cut = msg.find("syntax error");
        throw ProblemError(line, col, cut == std::string::npos ? msg : msg.substr(cut));
    }
}

template <ExactField F>
struct Problem {
    GeneratorTuple<F> tuple;
    HSpec h;
    std::vector<Matrix<F>> pool;
    Json options;
};

using AnyProblem = std::variant<Problem<PrimeField>, Problem<RationalField>>;

namespace detail {

class ProblemReader {
public:
    ProblemReader(const std::string& text, Json root) : text_(text), root_(std::move(root)) {}

    [[noreturn]] void fail(const JsonPath& path, const std::string& msg) const
    {
        auto [line, col] = line_column(text_, JsonLocator(text_).find(path));
        std::string where;
        for (const auto& p : path)
            where += std::holds_alternative<std::string>(p) ? "/" + std::get<std::string>(p)
                                                            : "/" + std::to_string(std::get<std::size_t>(p));
        throw ProblemError(line, col, (where.empty() ? "" : where + ": ") + msg);
    }

    const Json& at(const JsonPath& path) const
    {
        const Json* j = &root_;
        JsonPath done;
        for (const auto& p : path) {
            if (std::holds_alternative<std::string>(p)) {
                if (!j->is_object()) fail(done, "expected an object");
                auto it = j->find(std::get<std::string>(p));
                if (it == j->end()) fail(done, "missing field \"" + std::get<std::string>(p) + "\"");
                j = &*it;
            } else {
                if (!j->is_array() || std::get<std::size_t>(p) >= j->size()) fail(done, "expected an array");
                j = &(*j)[std::get<std::size_t>(p)];
            }
            done.push_back(p);
        }
        return *j;
    }

    bool has(const std::string& key) const { return root_.is_object() && root_.contains(key); }

    std::uint64_t positive_int(const JsonPath& path) const
    {
        const auto& j = at(path);
        if (!j.is_number_integer() || j.get<std::int64_t>() <= 0) fail(path, "expected a positive integer");
        return j.get<std::uint64_t>();
    }

    std::string string(const JsonPath& path) const
    {
        const auto& j = at(path);
        if (!j.is_string()) fail(path, "expected a string");
        return j.get<std::string>();
    }

    template <ExactField F>
    typename F::value_type scalar(const F& k, const JsonPath& path) const
    {
        const auto& j = at(path);
        try {
            if (j.is_number_integer()) {
                if (j.is_number_unsigned()) return k.from_fraction(BigInt(j.get<std::uint64_t>()), BigInt(1));
                return k.from_int(j.get<std::int64_t>());
            }
            if (j.is_string()) {
                static const std::regex re(R"(\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*)");
                std::smatch m;
                const auto s = j.get<std::string>();
                if (!std::regex_match(s, m, re)) fail(path, "malformed scalar \"" + s + "\"");
                BigInt num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
                BigInt den = 1;
                if (m[2].matched) den = BigInt(m[2].str().front() == '+' ? m[2].str().substr(1) : m[2].str());
                if (den == 0) fail(path, "zero denominator");
                return k.from_fraction(num, den);
            }
        } catch (const ProblemError&) {
            throw;
        } catch (const Error& e) {
            fail(path, e.what());
        }
        fail(path, "expected an integer or a string \"a/b\"");
    }

    template <ExactField F>
    Matrix<F> matrix(const F& k, std::size_t n, const JsonPath& path) const
    {
        const auto& j = at(path);
        if (!j.is_array() || j.size() != n) fail(path, "expected " + std::to_string(n) + " rows");
        Matrix<F> m(k, n, n);
        for (std::size_t r = 0; r < n; ++r) {
            auto rp = path;
            rp.emplace_back(r);
            if (!j[r].is_array() || j[r].size() != n) fail(rp, "expected a row of " + std::to_string(n) + " entries");
            for (std::size_t c = 0; c < n; ++c) {
                auto cp = rp;
                cp.emplace_back(c);
                m(r, c) = scalar(k, cp);
            }
        }
        return m;
    }

    std::vector<std::size_t> coords(std::size_t n, const JsonPath& path) const
    {
        const auto& j = at(path);
        if (!j.is_array()) fail(path, "expected an array of coordinates");
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < j.size(); ++i) {
            auto p = path;
            p.emplace_back(i);
            if (!j[i].is_number_integer() || j[i].get<std::int64_t>() < 1 ||
                j[i].get<std::uint64_t>() > n)
                fail(p, "coordinate must be an integer in 1.." + std::to_string(n));
            out.push_back(j[i].get<std::size_t>() - 1);
        }
        return out;
    }

    HSpec hspec(std::size_t n) const
    {
        const JsonPath hp{"h"};
        if (!at(hp).is_object()) fail(hp, "expected an object");
        const auto type = string({"h", "type"});
        try {
            if (type == "full_gl") return HSpec::full_gl(n);
            if (type == "glu") return HSpec::glu(n, coords(n, {"h", "u"}));
            if (type == "levi") {
                const auto& bl = at({"h", "blocks"});
                if (!bl.is_array()) fail({"h", "blocks"}, "expected an array of blocks");
                std::vector<HBlock> blocks;
                for (std::size_t i = 0; i < bl.size(); ++i) {
                    JsonPath bp{"h", "blocks", i};
                    if (bl[i].is_array()) {
                        blocks.push_back(HBlock{coords(n, bp), false});
                    } else if (bl[i].is_object()) {
                        auto cp = bp;
                        cp.emplace_back(std::string("coords"));
                        bool det_one = false;
                        if (bl[i].contains("det_one")) {
                            if (!bl[i]["det_one"].is_boolean()) fail(bp, "det_one must be a boolean");
                            det_one = bl[i]["det_one"].get<bool>();
                        }
                        blocks.push_back(HBlock{coords(n, cp), det_one});
                    } else {
                        fail(bp, "expected a block");
                    }
                }
                return HSpec::standard_levi(n, std::move(blocks));
            }
        } catch (const ProblemError&) {
            throw;
        } catch (const Error& e) {
            fail(hp, e.what());
        }
        fail({"h", "type"}, "unknown H type \"" + type + "\" (expected full_gl, glu or levi)");
    }

    template <ExactField F>
    Problem<F> problem(const F& k) const
    {
        const auto n = positive_int({"dim"});
        if (n > 64) fail({"dim"}, "dimension above 64 is not supported");
        const auto kind_s = string({"kind"});
        TupleKind kind;
        if (kind_s == "group") kind = TupleKind::Group;
        else if (kind_s == "lie") kind = TupleKind::Lie;
        else if (kind_s == "assoc") kind = TupleKind::Assoc;
        else fail({"kind"}, "unknown kind \"" + kind_s + "\" (expected group, lie or assoc)");
        const auto& gens = at({"generators"});
        if (!gens.is_array() || gens.empty()) fail({"generators"}, "expected a nonempty array of matrices");
        std::vector<Matrix<F>> entries;
        for (std::size_t i = 0; i < gens.size(); ++i) entries.push_back(matrix(k, n, {"generators", i}));
        if (kind == TupleKind::Group)
            for (std::size_t i = 0; i < entries.size(); ++i)
                if (!inverse(entries[i])) fail({"generators", i}, "group generator is not invertible");
        GeneratorTuple<F> t(k, n, kind, std::move(entries));
        auto h = hspec(n);
        std::vector<Matrix<F>> pool;
        if (has("pool")) {
            const auto& pj = at({"pool"});
            if (!pj.is_array()) fail({"pool"}, "expected an array of matrices");
            for (std::size_t i = 0; i < pj.size(); ++i) pool.push_back(pool_matrix(k, h, {"pool", i}));
        }
        Json options = has("options") ? at({"options"}) : Json::object();
        return Problem<F>{std::move(t), std::move(h), std::move(pool), std::move(options)};
    }

    template <ExactField F>
    Matrix<F> pool_matrix(const F& k, const HSpec& h, const JsonPath& path) const
    {
        auto g = matrix(k, h.dim(), path);
        if (!inverse(g)) fail(path, "conjugator is not invertible");
        try {
            require_in_h(h, g);
        } catch (const NotInH& e) {
            fail(path, e.what());
        }
        return g;
    }

    AnyProblem any_problem() const
    {
        if (!root_.is_object()) fail({}, "expected a JSON object");
        const auto f = string({"field"});
        static const std::regex gf(R"(\s*GF\(\s*(\d{1,10})\s*\)\s*)");
        std::smatch m;
        if (std::regex_match(f, m, gf)) {
            try {
                PrimeField k(static_cast<std::uint32_t>(std::stoull(m[1].str())));
                return problem(k);
            } catch (const ProblemError&) {
                throw;
            } catch (const Error& e) {
                fail({"field"}, e.what());
            } catch (const std::out_of_range&) {
                fail({"field"}, "characteristic out of range");
            }
        }
        if (f == "Q") return problem(RationalField{});
        fail({"field"}, "unknown field \"" + f + "\" (expected GF(p) or Q)");
    }

private:
    const std::string& text_;
    Json root_;
};

} // namespace detail

inline AnyProblem parse_problem(const std::string& text)
{
    return detail::ProblemReader(text, parse_json_text(text)).any_problem();
}

inline std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// A pool file is either an array of matrices or an object with a "pool" array.
template <ExactField F>
std::vector<Matrix<F>> parse_pool(const std::string& text, const F& k, const HSpec& h)
{
    auto root = parse_json_text(text);
    const bool bare = root.is_array();
    detail::ProblemReader r(text, root);
    if (!bare && !(root.is_object() && root.contains("pool") && root["pool"].is_array()))
        r.fail({}, "expected an array of matrices or an object with a \"pool\" array");
    const auto& arr = bare ? root : root["pool"];
    std::vector<Matrix<F>> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(r.pool_matrix(k, h, bare ? JsonPath{i} : JsonPath{std::string("pool"), i}));
    return out;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

template <ExactField F>
Json scalar_to_json(const F& k, const typename F::value_type& a)
{
    if constexpr (std::is_same_v<F, PrimeField>) {
        return a.value();
    } else {
        return k.to_string(a);
    }
}

template <ExactField F>
Json matrix_to_json(const Matrix<F>& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.field(), m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <ExactField F>
Json subspace_to_json(const Subspace<F>& s)
{
    return matrix_to_json(s.basis());
}

inline Json hspec_to_json(const HSpec& h)
{
    auto one_based = [](const std::vector<std::size_t>& c) {
        Json a = Json::array();
        for (auto x : c) a.push_back(x + 1);
        return a;
    };
    switch (h.kind()) {
    case HKind::FullGL: return Json{{"type", "full_gl"}};
    case HKind::GLU: return Json{{"type", "glu"}, {"u", one_based(h.blocks()[0].coords)}};
    case HKind::StandardLevi: {
        Json blocks = Json::array();
        for (const auto& b : h.blocks()) blocks.push_back(Json{{"coords", one_based(b.coords)}, {"det_one", b.det_one}});
        return Json{{"type", "levi"}, {"blocks", blocks}};
    }
    }
    return {};
}

template <ExactField F>
Json problem_to_json(const GeneratorTuple<F>& t, const HSpec& h)
{
    Json gens = Json::array();
    for (const auto& x : t.entries()) gens.push_back(matrix_to_json(x));
    return Json{{"field", t.field().spec().name()},
                {"dim", t.dim()},
                {"kind", to_string(t.kind())},
                {"generators", gens},
                {"h", hspec_to_json(h)}};
}

template <ExactField F>
Json cocharacter_to_json(const WeightedCocharacter<F>& l)
{
    return Json{{"weights", l.weights()},
                {"conjugator", l.conjugator() ? matrix_to_json(*l.conjugator()) : Json(nullptr)}};
}

} // namespace relcr
