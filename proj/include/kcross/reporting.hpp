#pragma once

// Serialization of convergence tables (CSV, JSON, markdown) and of
// elimination runs (JSON).  Numeric table fields are rendered at a fixed
// significant-digit count so emitted artifacts are bit-stable across runs.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "asymptotics.hpp"
#include "elimination.hpp"

namespace kcross {

inline constexpr int kTableFloatDigits = 12;

inline std::string table_csv(int k, const std::vector<ConvergenceRow>& rows) {
    std::string out = "k,n,exact,approx,ratio\n";
    for (const auto& row : rows) {
        out += std::to_string(k);
        out += ',';
        out += std::to_string(row.n);
        out += ',';
        out += row.exact.get_str();
        out += ',';
        out += row.approx.str(kTableFloatDigits);
        out += ',';
        out += row.ratio.str(kTableFloatDigits);
        out += '\n';
    }
    return out;
}

// Floats are carried as strings so the JSON mirrors the CSV digit-for-digit.
inline nlohmann::json table_json(int k, const std::vector<ConvergenceRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        arr.push_back({{"k", k},
                       {"n", row.n},
                       {"exact", row.exact.get_str()},
                       {"approx", row.approx.str(kTableFloatDigits)},
                       {"ratio", row.ratio.str(kTableFloatDigits)}});
    }
    return arr;
}

inline std::string table_markdown(int k, const std::vector<ConvergenceRow>& rows) {
    std::string out = "| k | n | exact | approx | ratio |\n";
    out += "|---|---|-------|--------|-------|\n";
    for (const auto& row : rows) {
        out += "| " + std::to_string(k) + " | " + std::to_string(row.n) + " | " +
               row.exact.get_str() + " | " + row.approx.str(kTableFloatDigits) + " | " +
               row.ratio.str(kTableFloatDigits) + " |\n";
    }
    return out;
}

namespace detail {

inline nlohmann::json laurent_matrix_json(const LaurentMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m) {
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& entry : row) {
            nlohmann::json cell = nlohmann::json::object();
            for (const auto& [h, c] : entry.terms()) cell[std::to_string(h)] = c.str();
            cells.push_back(std::move(cell));
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

}  // namespace detail

// Full record of an elimination run: inputs, per-round snapshots, and the
// leading term of every final entry.
inline nlohmann::json elimination_json(const EliminationRun& run) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& step : run.steps)
        steps.push_back(
            {{"t", step.pivot}, {"matrix", detail::laurent_matrix_json(step.matrix)}});

    nlohmann::json leading = nlohmann::json::array();
    for (const auto& row : run.matrix) {
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& entry : row) {
            LeadingTerm lt = entry.leading_term();
            cells.push_back({{"order", lt.order}, {"coeff", lt.coeff.str()}});
        }
        leading.push_back(std::move(cells));
    }

    return {{"k", run.k},
            {"H", run.order_bound},
            {"steps", std::move(steps)},
            {"leading", std::move(leading)}};
}

}  // namespace kcross
