#include "clusterkit/json_io.hpp"

#include <sstream>

namespace clusterkit {

namespace {

constexpr long long kSafe = 9007199254740992LL;  // 2^53

void require(bool cond, const std::string& where, const std::string& what) {
    if (!cond) throw input_error(where + ": " + what);
}

std::vector<int> intvec_from_json(const json& j, const std::string& where) {
    require(j.is_array(), where, "expected an array of integers");
    std::vector<int> v;
    v.reserve(j.size());
    for (const auto& x : j) {
        require(x.is_number_integer(), where, "expected an integer entry");
        v.push_back(x.get<int>());
    }
    return v;
}

json intvec_to_json(const std::vector<int>& v) {
    json a = json::array();
    for (int x : v) a.push_back(x);
    return a;
}

}  // namespace

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("malformed JSON input");
    return j;
}

json int_to_json(const Int& v) {
    if (v <= kSafe && v >= -kSafe) return json(static_cast<long long>(v));
    std::ostringstream os;
    os << v;
    return json(os.str());
}

Int int_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw input_error(where + ": bad integer string");
        }
    }
    throw input_error(where + ": expected an integer");
}

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix intmatrix_from_json(const json& j, const std::string& where) {
    require(j.is_array() && !j.empty(), where, "expected a nonempty array of rows");
    std::vector<std::vector<Int>> rows;
    std::size_t cols = 0;
    for (std::size_t r = 0; r < j.size(); ++r) {
        const json& row = j[r];
        std::string here = where + "[" + std::to_string(r) + "]";
        require(row.is_array(), here, "expected a row array");
        if (r == 0) cols = row.size();
        require(row.size() == cols, here, "ragged rows");
        std::vector<Int> entries;
        for (std::size_t c = 0; c < row.size(); ++c)
            entries.push_back(int_from_json(row[c], here + "[" + std::to_string(c) + "]"));
        rows.push_back(std::move(entries));
    }
    return IntMatrix::from_rows(rows);
}

json to_json(const ExchangeMatrix& e) {
    json d = json::array();
    for (const Int& x : e.D) d.push_back(int_to_json(x));
    return json{{"B", to_json(e.B)}, {"D", std::move(d)}};
}

ExchangeMatrix exchange_from_json(const json& j) {
    const json& bj = j.is_object() && j.contains("B") ? j["B"] : j;
    IntMatrix b = intmatrix_from_json(bj, "B");
    require(b.is_square(), "B", "exchange matrix must be square");
    if (j.is_object() && j.contains("D")) {
        const json& dj = j["D"];
        require(dj.is_array() && dj.size() == b.rows(), "D", "wrong length");
        std::vector<Int> d;
        for (std::size_t i = 0; i < dj.size(); ++i)
            d.push_back(int_from_json(dj[i], "D[" + std::to_string(i) + "]"));
        return ExchangeMatrix::make(std::move(b), std::move(d));
    }
    return ExchangeMatrix::make(std::move(b));
}

json to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [k, c] : p.terms())
        terms.push_back(json{{"x", intvec_to_json(k.x)}, {"y", intvec_to_json(k.y)},
                             {"c", int_to_json(c)}});
    return terms;
}

LaurentPoly laurent_from_json(const json& j, const std::string& where) {
    require(j.is_array(), where, "expected a term list");
    LaurentPoly p;
    bool first = true;
    for (std::size_t t = 0; t < j.size(); ++t) {
        std::string here = where + "[" + std::to_string(t) + "]";
        const json& term = j[t];
        require(term.is_object() && term.contains("y") && term.contains("c"), here,
                "term needs y and c");
        std::vector<int> y = intvec_from_json(term["y"], here + ".y");
        std::vector<int> x = term.contains("x") ? intvec_from_json(term["x"], here + ".x")
                                                : std::vector<int>(y.size(), 0);
        require(x.size() == y.size(), here, "x and y lengths differ");
        if (first) {
            p = LaurentPoly(y.size());
            first = false;
        }
        require(y.size() == p.rank(), here, "rank changed between terms");
        p.set_term(LTermKey{std::move(y), std::move(x)}, int_from_json(term["c"], here + ".c"));
    }
    return p;
}

json to_json(const YPolynomial& p) {
    json terms = json::array();
    for (const auto& [k, c] : p.terms())
        terms.push_back(json{{"y", intvec_to_json(k)}, {"c", int_to_json(c)}});
    return terms;
}

YPolynomial ypoly_from_json(const json& j, const std::string& where) {
    require(j.is_array(), where, "expected a term list");
    YPolynomial p;
    bool first = true;
    for (std::size_t t = 0; t < j.size(); ++t) {
        std::string here = where + "[" + std::to_string(t) + "]";
        const json& term = j[t];
        require(term.is_object() && term.contains("y") && term.contains("c"), here,
                "term needs y and c");
        std::vector<int> y = intvec_from_json(term["y"], here + ".y");
        if (first) {
            p = YPolynomial(y.size());
            first = false;
        }
        require(y.size() == p.rank(), here, "rank changed between terms");
        p.set_term(std::move(y), int_from_json(term["c"], here + ".c"));
    }
    return p;
}

json seed_to_json(const ClusterPattern& pattern, const Seed& s) {
    json vars = json::array();
    for (const auto& v : s.vars) vars.push_back(to_json(v));
    json d = json::array();
    for (const Int& x : pattern.root().D) d.push_back(int_to_json(x));
    return json{{"B", to_json(s.B)},   {"C", to_json(s.C)},       {"G", to_json(s.G)},
                {"D", std::move(d)},   {"path", intvec_to_json(s.path)},
                {"vars", std::move(vars)}};
}

Seed seed_from_json(const ClusterPattern& pattern, const json& j) {
    require(j.is_object(), "seed", "expected an object");
    for (const char* field : {"B", "C", "G", "path", "vars"})
        require(j.contains(field), "seed", std::string("missing field ") + field);
    Seed s;
    s.B = intmatrix_from_json(j["B"], "seed.B");
    s.C = intmatrix_from_json(j["C"], "seed.C");
    s.G = intmatrix_from_json(j["G"], "seed.G");
    s.path = intvec_from_json(j["path"], "seed.path");
    require(j["vars"].is_array(), "seed.vars", "expected an array");
    for (std::size_t i = 0; i < j["vars"].size(); ++i)
        s.vars.push_back(laurent_from_json(j["vars"][i], "seed.vars[" + std::to_string(i) + "]"));
    require(s.vars.size() == pattern.rank(), "seed.vars", "wrong rank");
    pattern.check_seed(s);
    return s;
}

json to_json(const LatticePolytope& p) {
    json pts = json::array();
    for (const auto& pt : p.points()) {
        json row = json::array();
        for (const Int& c : pt) row.push_back(int_to_json(c));
        pts.push_back(std::move(row));
    }
    return json{{"dim", p.dim()}, {"points", std::move(pts)}};
}

json to_json(const ClusterVariableId& id) {
    return json{{"g", intvec_to_json(id.g)}, {"F", to_json(id.F)}};
}

json to_json(const FInvariantReport& rep) {
    json d = json::array();
    for (const Int& x : rep.D) d.push_back(int_to_json(x));
    return json{{"value", int_to_json(rep.value)},
                {"left_part", int_to_json(rep.left_part)},
                {"right_part", int_to_json(rep.right_part)},
                {"vertex", intvec_to_json(rep.vertex_path)},
                {"D", std::move(d)}};
}

json to_json(const tau::Interval& m) { return json{{"a", m.a}, {"b", m.b}}; }

tau::Interval interval_from_json(const json& j, const std::string& where) {
    require(j.is_object() && j.contains("a") && j.contains("b"), where,
            "interval needs fields a and b");
    require(j["a"].is_number_integer() && j["b"].is_number_integer(), where,
            "interval endpoints must be integers");
    return tau::Interval{j["a"].get<int>(), j["b"].get<int>()};
}

json to_json(const tau::DecoratedModule& m) {
    json plus = json::array();
    for (const auto& [iv, k] : m.plus.mult)
        plus.push_back(json{{"a", iv.a}, {"b", iv.b}, {"m", k}});
    json minus = json::array();
    for (const auto& [v, k] : m.minus) minus.push_back(json{{"i", v}, {"m", k}});
    return json{{"plus", std::move(plus)}, {"minus", std::move(minus)}};
}

tau::DecoratedModule decorated_from_json(const json& j, const std::string& where) {
    require(j.is_object(), where, "expected an object");
    tau::DecoratedModule d;
    if (j.contains("plus")) {
        require(j["plus"].is_array(), where + ".plus", "expected an array");
        for (const auto& item : j["plus"]) {
            tau::Interval iv = interval_from_json(item, where + ".plus[]");
            int mult = item.contains("m") ? item["m"].get<int>() : 1;
            require(mult >= 1, where + ".plus[]", "multiplicity must be positive");
            d.plus.add(iv, mult);
        }
    }
    if (j.contains("minus")) {
        require(j["minus"].is_array(), where + ".minus", "expected an array");
        for (const auto& item : j["minus"]) {
            require(item.is_object() && item.contains("i"), where + ".minus[]",
                    "needs a vertex field i");
            int mult = item.contains("m") ? item["m"].get<int>() : 1;
            require(mult >= 1, where + ".minus[]", "multiplicity must be positive");
            d.minus[item["i"].get<int>()] += mult;
        }
    }
    return d;
}

}  // namespace clusterkit
