#include "vander/serialize.hpp"

namespace vander {

json to_json(const Scalar& s) { return s.str(); }

json to_json(const SquareMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.order(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"backend", backend_name(m.backend())},
                {"order", m.order()},
                {"rows", std::move(rows)}};
}

json to_json(const Polynomial& p) {
    json coeffs = json::array();
    for (const Scalar& c : p.descending()) coeffs.push_back(c.str());
    return json{{"backend", backend_name(p.backend())},
                {"coefficients", std::move(coeffs)},
                {"degree", p.degree()},
                {"display", polynomial_str(p)}};
}

json to_json(const SampleSet& samples) {
    json xs = json::array(), ys = json::array();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        xs.push_back(samples.nodes()[i].str());
        ys.push_back(samples.values()[i].str());
    }
    return json{{"backend", backend_name(samples.backend())},
                {"x", std::move(xs)},
                {"y", std::move(ys)}};
}

json to_json(const ConvergenceReport& report) {
    json levels = json::array();
    for (const LevelRecord& rec : report.levels) {
        levels.push_back(json{{"backend", backend_name(rec.backend)},
                              {"degree", rec.degree},
                              {"fit", to_json(rec.fitted)},
                              {"level", rec.level},
                              {"node_count", rec.node_count},
                              {"residual", float_str(rec.residual)},
                              {"sup_error", float_str(rec.sup_error)}});
    }
    return json{{"base_count", report.base_count},
                {"function", report.function_id},
                {"levels", std::move(levels)},
                {"probe_count", report.probe_count}};
}

json to_json(const TaylorComparison& cmp) {
    json degrees = json::array();
    for (std::size_t d : cmp.degrees) degrees.push_back(d);
    json rows = json::array();
    for (const TaylorRow& row : cmp.rows) {
        json estimates = json::array(), errors = json::array();
        for (const auto& e : row.estimates)
            estimates.push_back(e ? json(float_str(*e)) : json(nullptr));
        for (const auto& e : row.abs_errors)
            errors.push_back(e ? json(float_str(*e)) : json(nullptr));
        rows.push_back(json{{"abs_errors", std::move(errors)},
                            {"estimates", std::move(estimates)},
                            {"power", row.power},
                            {"reference", float_str(row.reference)}});
    }
    return json{{"convention", cmp.magnitudes ? "magnitude" : "signed"},
                {"degrees", std::move(degrees)},
                {"function", cmp.function_id},
                {"rows", std::move(rows)}};
}

std::string to_csv(const ConvergenceReport& report) {
    std::string out = "level,node_count,degree,backend,sup_error,residual\n";
    for (const LevelRecord& rec : report.levels) {
        out += std::to_string(rec.level) + "," + std::to_string(rec.node_count) + "," +
               std::to_string(rec.degree) + "," +
               std::string(backend_name(rec.backend)) + "," +
               float_str(rec.sup_error) + "," + float_str(rec.residual) + "\n";
    }
    return out;
}

std::string to_csv(const TaylorComparison& cmp) {
    std::string out = "power,reference";
    for (std::size_t d : cmp.degrees)
        out += ",P" + std::to_string(d) + ",P" + std::to_string(d) + "_abs_error";
    out += "\n";
    for (const TaylorRow& row : cmp.rows) {
        out += std::to_string(row.power) + "," + float_str(row.reference);
        for (std::size_t d = 0; d < cmp.degrees.size(); ++d) {
            out += ",";
            if (row.estimates[d]) out += float_str(*row.estimates[d]);
            out += ",";
            if (row.abs_errors[d]) out += float_str(*row.abs_errors[d]);
        }
        out += "\n";
    }
    return out;
}

}  // namespace vander
