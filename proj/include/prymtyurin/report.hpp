// Report rendering: a run's results as stable JSON (big integers as decimal
// strings, fixed key order) or as a human-readable text block.  Reports are
// deterministic except for the trailing timing field.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "prymtyurin/engine.hpp"
#include "prymtyurin/numbers.hpp"
#include "prymtyurin/scenario.hpp"

namespace prymtyurin {

inline constexpr const char* kEngineVersion = "1.0.0";

namespace detail {

inline nlohmann::ordered_json json_checks(const ChecksSummary& checks) {
    nlohmann::ordered_json out;
    nlohmann::ordered_json reps = nlohmann::ordered_json::array();
    for (const IrreducibilityVerdict& verdict : checks.rep_verdicts) {
        reps.push_back({{"irreducible", verdict.irreducible},
                        {"trivial", verdict.trivial},
                        {"integer_valued", verdict.integer_valued}});
    }
    out["characters"] = std::move(reps);
    out["characters_ok"] = checks.reps_ok;
    out["isotypic"] = {{"fixed_dims_ok", checks.isotypic.fixed_dims_ok},
                       {"maximal", checks.isotypic.maximal},
                       {"method", checks.isotypic.method},
                       {"note", checks.isotypic.note}};
    out["criterion"] = {{"evaluated", checks.criterion_evaluated},
                        {"ok", checks.criterion_ok}};
    out["dimension_positive"] = checks.dimension_positive;
    const ProjectorVerdict& projector = checks.projector;
    out["projector"] = {{"evaluated", projector.evaluated},
                        {"square_identity", projector.square_identity},
                        {"commutes", projector.commutes},
                        {"rank", decimal(projector.rank)},
                        {"expected_rank", decimal(projector.expected_rank)},
                        {"rank_matches", projector.rank_matches},
                        {"skip_reason", projector.skip_reason}};
    return out;
}

}  // namespace detail

// `scenario` (optional) echoes the input; `timing_ms` < 0 omits the field.
inline nlohmann::ordered_json report_to_json(const PrymReport& report,
                                             const ScenarioDoc* scenario,
                                             double timing_ms = -1.0) {
    nlohmann::ordered_json out;
    out["engine_version"] = kEngineVersion;
    out["group_order"] = decimal(report.group_order);
    out["subgroup_order"] = decimal(report.subgroup_order);
    out["index"] = decimal(report.index);

    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    const auto& decomposition = report.correspondence.decomposition;
    for (std::size_t i = 0; i < decomposition.blocks.size(); ++i) {
        const DoubleCosetBlock& block = decomposition.blocks[i];
        blocks.push_back(
            {{"representative", block.representative.cycle_string()},
             {"cosets", decimal(block.coset_count)},
             {"elements", decimal(block.element_count)},
             {"coefficient",
              decimal(report.correspondence.coefficients[i])}});
    }
    out["double_cosets"] = std::move(blocks);
    out["b"] = decimal(report.correspondence.b);
    out["q"] = decimal(report.correspondence.q);
    out["character_dimension"] = decimal(report.correspondence.rep_dimension);
    out["dim_prym"] = decimal(report.dim_prym);
    out["genus_x"] = decimal(report.genus_x);
    out["genus_cover"] = decimal(report.genus_cover);
    out["criterion_residual"] = decimal(report.criterion_residual);
    out["checks"] = detail::json_checks(report.checks);
    out["notes"] = report.notes;
    out["valid"] = report.valid;
    if (scenario) out["scenario"] = emit_scenario(*scenario);
    if (timing_ms >= 0) out["timing_ms"] = timing_ms;
    return out;
}

inline std::string report_to_text(const PrymReport& report) {
    std::string out;
    const auto line = [&out](const std::string& text) { out += text + "\n"; };
    line("group order        " + decimal(report.group_order));
    line("subgroup order     " + decimal(report.subgroup_order));
    line("index              " + decimal(report.index));
    line("double cosets      " +
         std::to_string(report.correspondence.decomposition.blocks.size()));
    for (std::size_t i = 0;
         i < report.correspondence.decomposition.blocks.size(); ++i) {
        const DoubleCosetBlock& block =
            report.correspondence.decomposition.blocks[i];
        line("  block " + std::to_string(i + 1) + ": rep " +
             block.representative.cycle_string() + ", cosets " +
             decimal(block.coset_count) + ", coefficient " +
             decimal(report.correspondence.coefficients[i]));
    }
    line("b                  " + decimal(report.correspondence.b));
    line("q                  " + decimal(report.correspondence.q));
    line("dim                " + decimal(report.dim_prym));
    line("genus X            " + decimal(report.genus_x));
    line("genus Y            " + decimal(report.genus_cover));
    line("criterion residual " + decimal(report.criterion_residual) +
         (report.checks.criterion_evaluated ? "" : " (not evaluated)"));
    const IsotypicVerdict& isotypic = report.checks.isotypic;
    line(std::string("isotypic condition ") +
         (isotypic.holds() ? "holds" : "FAILS") + " (" + isotypic.method + ")");
    const ProjectorVerdict& projector = report.checks.projector;
    if (projector.evaluated) {
        line(std::string("matrix identities  ") +
             (projector.passes() ? "pass" : "FAIL") + " (square " +
             (projector.square_identity ? "ok" : "BAD") + ", commutes " +
             (projector.commutes ? "ok" : "BAD") + ", rank " +
             decimal(projector.rank) + "/" + decimal(projector.expected_rank) +
             ")");
    } else {
        line("matrix identities  skipped: " + projector.skip_reason);
    }
    for (const std::string& note : report.notes) line("note: " + note);
    line(std::string("verdict            ") +
         (report.valid ? "VALID" : "NOT VALID"));
    return out;
}

}  // namespace prymtyurin
