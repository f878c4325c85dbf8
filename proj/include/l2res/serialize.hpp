#pragma once

// JSON and plain-text renderings of ideals, labeled complexes, Betti tables,
// deletion records and bound tables.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "l2res/ideal.hpp"
#include "l2res/labeled.hpp"
#include "l2res/lsquared.hpp"
#include "l2res/text.hpp"

namespace l2res {

using Json = nlohmann::json;

// ---- ideals -----------------------------------------------------------------

inline Json to_json(const MonomialIdeal& ideal) {
    Json gens = Json::array();
    for (const auto& g : ideal.gens()) gens.push_back(to_string(g, ideal.vars()));
    return {{"vars", ideal.vars().names()}, {"gens", gens}};
}

inline MonomialIdeal ideal_from_json(const Json& j) {
    VariableTable vars(j.at("vars").get<std::vector<std::string>>());
    std::vector<Monomial> gens;
    for (const auto& g : j.at("gens")) gens.push_back(parse_monomial(g.get<std::string>(), vars));
    return MonomialIdeal(std::move(vars), std::move(gens));
}

// ---- complexes --------------------------------------------------------------

inline Json to_json(const SimplicialComplex& complex) {
    Json facets = Json::array();
    for (auto f : complex.facets()) facets.push_back(f.vertices());
    return {{"vertices", complex.vertex_set().vertices()}, {"facets", facets}};
}

inline Json to_json(const LabeledComplex& delta) {
    Json j = to_json(delta.complex());
    Json labels = Json::object();
    for (const auto& [v, m] : delta.labels()) labels[std::to_string(v)] = to_string(m, delta.vars());
    j["labels"] = labels;
    j["vars"] = delta.vars().names();
    return j;
}

/// Reads `{ "vertices": [...], "facets": [[...]...] }`. Listed vertices that
/// appear in no facet become singleton facets.
inline SimplicialComplex complex_from_json(const Json& j) {
    std::vector<Face> facets;
    for (const auto& f : j.at("facets")) facets.emplace_back(f.get<std::vector<VertexId>>());
    Face covered;
    for (auto f : facets) covered = covered | f;
    if (j.contains("vertices")) {
        for (auto v : j.at("vertices").get<std::vector<VertexId>>()) {
            if (v < 0 || v >= kMaxVertices) throw Error("vertex id " + std::to_string(v) + " outside [0, 64)");
            if (!covered.contains(v)) facets.push_back(Face::singleton(v));
        }
    }
    return SimplicialComplex(std::move(facets));
}

/// Labeled variant. Labels are parsed over the "vars" entry when present,
/// otherwise over `vars`.
inline LabeledComplex labeled_complex_from_json(const Json& j, const std::optional<VariableTable>& vars = std::nullopt) {
    if (!j.contains("labels")) throw Error("complex JSON has no \"labels\" object");
    VariableTable table;
    if (vars) {
        table = *vars;
    } else if (j.contains("vars")) {
        table = VariableTable(j.at("vars").get<std::vector<std::string>>());
    } else {
        throw Error("complex JSON has no \"vars\" and no variable table was supplied");
    }
    std::map<VertexId, Monomial> labels;
    for (const auto& [key, value] : j.at("labels").items()) {
        std::size_t used = 0;
        const int id = std::stoi(key, &used);
        if (used != key.size()) throw Error("label key '" + key + "' is not a vertex id");
        labels.emplace(id, parse_monomial(value.get<std::string>(), table));
    }
    return LabeledComplex(complex_from_json(j), labels, std::move(table));
}

// ---- Betti tables -----------------------------------------------------------

inline Json to_json(const BettiTable& table, const VariableTable& vars) {
    Json total = Json::object();
    for (std::size_t d = 0; d < table.total.size(); ++d) total[std::to_string(d)] = table.total[d];
    Json j{{"total", total}};
    if (table.graded) {
        Json graded = Json::array();
        for (const auto& e : *table.graded) {
            graded.push_back({{"d", e.d}, {"m", to_string(e.multidegree, vars)}, {"rank", e.rank}});
        }
        j["graded"] = graded;
    }
    return j;
}

inline BettiTable betti_from_json(const Json& j, const VariableTable& vars) {
    BettiTable table;
    for (const auto& [key, value] : j.at("total").items()) {
        const auto d = static_cast<std::size_t>(std::stoul(key));
        if (table.total.size() <= d) table.total.resize(d + 1, 0);
        table.total[d] = value.get<std::uint64_t>();
    }
    table.trim();
    if (j.contains("graded")) {
        table.graded.emplace();
        for (const auto& e : j.at("graded")) {
            table.graded->push_back(
                {e.at("d").get<int>(), parse_monomial(e.at("m").get<std::string>(), vars), e.at("rank").get<std::uint64_t>()});
        }
    }
    return table;
}

// ---- deletion records -------------------------------------------------------

inline Json to_json(const DeletionRecord& rec) {
    Json deleted = Json::array();
    for (const auto& p : rec.deleted) deleted.push_back({p.i, p.j});
    return {{"deleted", deleted}, {"s", rec.s}, {"t", rec.t}};
}

inline DeletionRecord deletion_record_from_json(const Json& j) {
    const auto t = j.at("t").get<std::vector<int>>();
    std::vector<PairVertex> deleted;
    for (const auto& p : j.at("deleted")) deleted.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    auto rec = make_deletion_record(static_cast<int>(t.size()), std::move(deleted));
    if (rec.t != t || rec.s != j.at("s").get<std::uint64_t>()) throw Error("deletion record fields are inconsistent");
    return rec;
}

// ---- plain text -------------------------------------------------------------

/// Rows of "label | v0 v1 ...", labels padded to a common width.
class TextTable {
public:
    void add_row(std::string label, std::vector<std::string> cells) { rows_.push_back({std::move(label), std::move(cells)}); }

    std::string str() const {
        std::size_t width = 0;
        for (const auto& r : rows_) width = std::max(width, r.label.size());
        std::ostringstream out;
        for (const auto& r : rows_) {
            out << r.label << std::string(width - r.label.size(), ' ') << " |";
            for (const auto& c : r.cells) out << ' ' << c;
            out << '\n';
        }
        return out.str();
    }

    std::string csv() const {
        std::ostringstream out;
        for (const auto& r : rows_) {
            out << r.label;
            for (const auto& c : r.cells) out << ',' << c;
            out << '\n';
        }
        return out.str();
    }

private:
    struct Row {
        std::string label;
        std::vector<std::string> cells;
    };
    std::vector<Row> rows_;
};

inline TextTable betti_text_table(const BettiTable& table, const std::string& row_label = "beta_d") {
    TextTable t;
    std::vector<std::string> header, values;
    const std::size_t columns = std::max<std::size_t>(table.total.size(), 1);
    for (std::size_t d = 0; d < columns; ++d) {
        header.push_back(std::to_string(d));
        values.push_back(std::to_string(table.at(static_cast<int>(d))));
    }
    t.add_row("d", header);
    t.add_row(row_label, values);
    return t;
}

inline TextTable bound_text_table(const BoundTable& table) {
    TextTable t;
    std::vector<std::string> d, largest, actual, a, b, beta;
    for (const auto& r : table.rows) {
        d.push_back(std::to_string(r.d));
        largest.push_back(std::to_string(r.taylor_largest));
        actual.push_back(std::to_string(r.taylor_actual));
        a.push_back(std::to_string(r.l2q));
        b.push_back(std::to_string(r.l2i));
        if (r.betti) beta.push_back(std::to_string(*r.betti));
    }
    const auto q = std::to_string(table.q);
    const auto s = std::to_string(table.s);
    t.add_row("d", d);
    t.add_row("Taylor, largest (" + std::to_string(num_pair_vertices(table.q)) + " vertices)", largest);
    t.add_row("Taylor(I^2) (" + s + " vertices)", actual);
    t.add_row("L^2_q (q=" + q + ")", a);
    t.add_row("L^2(I) (s=" + s + ")", b);
    if (table.has_betti) t.add_row("beta_d(I^2)", beta);
    return t;
}

inline Json to_json(const BoundTable& table) {
    Json rows = Json::array();
    for (const auto& r : table.rows) {
        Json row{{"d", r.d}, {"taylor_largest", r.taylor_largest}, {"taylor_actual", r.taylor_actual},
                 {"l2q", r.l2q}, {"l2i", r.l2i}};
        if (r.betti) row["betti"] = *r.betti;
        rows.push_back(row);
    }
    return {{"q", table.q}, {"s", table.s}, {"rows", rows}};
}

}  // namespace l2res
