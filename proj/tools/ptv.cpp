// ptv: command-line front end for the presentation engine.
//
//   ptv check <scenario>      run a scenario file and report the results
//   ptv product ...           build a family instance, run it, compare the
//                             closed forms
//   ptv paper-table           recompute the built-in table of worked rows
//   ptv spectrum <scenario>   eigenvalue structure of the coset-space matrix
//
// Exit codes: 0 all requested checks pass; 1 a mathematical check fails;
// 2 unusable input; 3 resource limits or inconsistent engine state.

#include <cctype>
#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "prymtyurin/prymtyurin.hpp"

namespace pt = prymtyurin;

namespace {

struct CommonOptions {
    bool json = false;
    std::string out_path;
    std::size_t enumeration_bound = pt::kDefaultEnumerationBound;
    std::size_t matrix_bound = 4096;

    pt::EngineOptions engine() const { return {matrix_bound}; }
};

void add_common(CLI::App* cmd, CommonOptions& options) {
    cmd->add_flag("--json", options.json, "emit JSON instead of text");
    cmd->add_option("--out", options.out_path,
                    "write the report to this file instead of stdout");
    cmd->add_option("--enumeration-bound", options.enumeration_bound,
                    "largest group order enumerated element by element")
        ->capture_default_str();
    cmd->add_option("--matrix-bound", options.matrix_bound,
                    "largest coset space for explicit matrix certificates")
        ->capture_default_str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) pt::throw_input("cannot open scenario file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) pt::throw_input("cannot write to '" + out_path + "'");
    out << text;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
}

int run_check(const std::string& path, const CommonOptions& options,
              bool emit_scenario_only) {
    const pt::ScenarioDoc doc = pt::parse_scenario(read_file(path));
    if (emit_scenario_only) {
        write_output(pt::emit_scenario(doc), options.out_path);
        return 0;
    }
    const pt::PresentationInput input =
        pt::build_presentation(doc, options.enumeration_bound);
    const auto start = std::chrono::steady_clock::now();
    const pt::PrymReport report = pt::run_presentation(input, options.engine());
    if (options.json) {
        write_output(
            pt::report_to_json(report, &doc, elapsed_ms(start)).dump(2) + "\n",
            options.out_path);
    } else {
        write_output(pt::report_to_text(report), options.out_path);
    }
    return report.valid ? 0 : 1;
}

pt::Integer parse_genus(const std::string& text) {
    const std::string value = pt::detail::strip(text);
    if (value.empty()) pt::throw_input("empty genus in the factor list");
    for (const char c : value) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            pt::throw_input("genus '" + value + "' is not a nonnegative "
                            "decimal number");
        }
    }
    return pt::Integer(value);
}

pt::FamilySpec family_from_flags(const std::string& family, int n,
                                 const std::string& genera,
                                 const std::string& mixed) {
    pt::FamilySpec spec;
    spec.n = n;
    if (!mixed.empty()) {
        for (const std::string& item : pt::detail::split_list(mixed)) {
            const std::size_t colon = item.find(':');
            if (colon == std::string::npos) {
                pt::throw_input("--mixed entries look like kind:genus, got '" +
                                item + "'");
            }
            pt::FamilyFactor factor;
            factor.kind = pt::parse_family_kind(item.substr(0, colon));
            factor.genus = parse_genus(item.substr(colon + 1));
            spec.factors.push_back(factor);
        }
        return spec;
    }
    if (genera.empty()) {
        pt::throw_input("give the factor genera with --genera (for example "
                        "--genera 2,2) or use --mixed");
    }
    const pt::FamilyKind kind = pt::parse_family_kind(family);
    for (const std::string& item : pt::detail::split_list(genera)) {
        spec.factors.push_back({kind, parse_genus(item)});
    }
    return spec;
}

nlohmann::ordered_json closed_forms_json(const pt::ClosedFormExpectation& e) {
    return {{"group_order", pt::decimal(e.group_order)},
            {"subgroup_order", pt::decimal(e.subgroup_order)},
            {"index", pt::decimal(e.index)},
            {"double_cosets", pt::decimal(e.double_cosets)},
            {"b", pt::decimal(e.b)},
            {"q", pt::decimal(e.q)},
            {"dim_prym", pt::decimal(e.dim_prym)},
            {"genus_x", pt::decimal(e.genus_x)},
            {"genus_x_doubled_counts", pt::decimal(e.genus_x_doubled_counts)},
            {"genus_cover", pt::decimal(e.genus_cover)}};
}

int run_product(const std::string& family, int n, const std::string& genera,
                const std::string& mixed, const CommonOptions& options,
                bool emit_scenario_only) {
    const pt::FamilySpec spec = family_from_flags(family, n, genera, mixed);
    const std::vector<std::string> family_notes = pt::validate_family(spec);
    const pt::PresentationInput input =
        pt::family_presentation(spec, options.enumeration_bound);
    const pt::ScenarioDoc doc = pt::scenario_of_presentation(input);
    if (emit_scenario_only) {
        write_output(pt::emit_scenario(doc), options.out_path);
        return 0;
    }
    const auto start = std::chrono::steady_clock::now();
    const pt::PrymReport report = pt::run_presentation(input, options.engine());
    const pt::ClosedFormExpectation expected = pt::closed_form_expectation(spec);

    const bool matches = report.correspondence.b == expected.b &&
                         report.correspondence.q == expected.q &&
                         report.dim_prym == expected.dim_prym &&
                         report.genus_x == expected.genus_x &&
                         report.genus_cover == expected.genus_cover &&
                         report.index == expected.index;
    if (options.json) {
        nlohmann::ordered_json out =
            pt::report_to_json(report, &doc, elapsed_ms(start));
        out["closed_forms"] = closed_forms_json(expected);
        out["closed_forms_match"] = matches;
        out["family_notes"] = family_notes;
        write_output(out.dump(2) + "\n", options.out_path);
    } else {
        std::string text = pt::report_to_text(report);
        text += "closed forms       b " + pt::decimal(expected.b) + ", q " +
                pt::decimal(expected.q) + ", dim " +
                pt::decimal(expected.dim_prym) + ", genus X " +
                pt::decimal(expected.genus_x) + ", genus Y " +
                pt::decimal(expected.genus_cover) + "\n";
        text += std::string("closed forms match ") + (matches ? "yes" : "NO") +
                "\n";
        for (const std::string& note : family_notes) {
            text += "family note: " + note + "\n";
        }
        write_output(text, options.out_path);
    }
    return (report.valid && matches) ? 0 : 1;
}

int run_table(const std::string& filter, const CommonOptions& options) {
    const std::vector<pt::TableRow> rows =
        pt::reference_table(filter, options.enumeration_bound, options.engine());
    if (rows.empty()) {
        pt::throw_input("no table row matches filter '" + filter + "'");
    }
    bool all_match = true;
    for (const pt::TableRow& row : rows) {
        if (!row.matches_closed_forms) all_match = false;
    }
    if (options.json) {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const pt::TableRow& row : rows) {
            nlohmann::ordered_json factors = nlohmann::ordered_json::array();
            for (const pt::FamilyFactor& factor : row.spec.factors) {
                factors.push_back({{"kind", pt::family_kind_name(factor.kind)},
                                   {"genus", pt::decimal(factor.genus)}});
            }
            out.push_back(
                {{"label", row.label},
                 {"n", row.spec.n},
                 {"factors", std::move(factors)},
                 {"group_order", pt::decimal(row.report.group_order)},
                 {"index", pt::decimal(row.report.index)},
                 {"b", pt::decimal(row.report.correspondence.b)},
                 {"q", pt::decimal(row.report.correspondence.q)},
                 {"dim_prym", pt::decimal(row.report.dim_prym)},
                 {"genus_x", pt::decimal(row.report.genus_x)},
                 {"genus_cover", pt::decimal(row.report.genus_cover)},
                 {"criterion_residual",
                  pt::decimal(row.report.criterion_residual)},
                 {"valid", row.report.valid},
                 {"closed_forms", closed_forms_json(row.expected)},
                 {"matches_closed_forms", row.matches_closed_forms},
                 {"mismatches", row.mismatches}});
        }
        write_output(out.dump(2) + "\n", options.out_path);
    } else {
        const auto pad = [](std::string s, std::size_t width) {
            if (s.size() < width) s += std::string(width - s.size(), ' ');
            return s;
        };
        std::string text =
            pad("row", 46) + pad("order", 16) + pad("index", 7) +
            pad("b", 10) + pad("q", 6) + pad("dim", 5) + pad("g(X)", 6) +
            pad("g(Y)", 14) + pad("residual", 10) + "ok\n";
        for (const pt::TableRow& row : rows) {
            text += pad(row.label, 46) +
                    pad(pt::decimal(row.report.group_order), 16) +
                    pad(pt::decimal(row.report.index), 7) +
                    pad(pt::decimal(row.report.correspondence.b), 10) +
                    pad(pt::decimal(row.report.correspondence.q), 6) +
                    pad(pt::decimal(row.report.dim_prym), 5) +
                    pad(pt::decimal(row.report.genus_x), 6) +
                    pad(pt::decimal(row.report.genus_cover), 14) +
                    pad(pt::decimal(row.report.criterion_residual), 10) +
                    (row.matches_closed_forms ? "yes" : "NO") + "\n";
            for (const std::string& mismatch : row.mismatches) {
                text += "    mismatch: " + mismatch + "\n";
            }
        }
        write_output(text, options.out_path);
    }
    return all_match ? 0 : 1;
}

int run_spectrum(const std::string& path, const CommonOptions& options) {
    const pt::ScenarioDoc doc = pt::parse_scenario(read_file(path));
    const pt::PresentationInput input =
        pt::build_presentation(doc, options.enumeration_bound);
    const std::vector<pt::ClassFunction> chars = pt::validate_presentation(input);
    const pt::CorrespondenceData data =
        pt::correspondence_coefficients(input, chars);
    const pt::HeckeStructure structure = pt::hecke_structure(
        input, data.decomposition, data.coefficients, options.engine());
    if (!structure.built) pt::throw_resource(structure.skip_reason);

    const pt::IntMatrix& m = structure.matrix;
    const pt::Integer eigenvalue = data.b * data.q;
    const bool square_identity = (m * m == m.scaled(eigenvalue));
    const pt::Integer rank = pt::rank_fraction_free(m);
    const pt::Integer trace = m.trace();
    const pt::Integer scaled_rank = eigenvalue * rank;
    const bool trace_consistent = (trace == scaled_rank);
    const pt::Integer size(structure.size);
    const pt::Integer kernel_multiplicity = size - rank;

    if (options.json) {
        nlohmann::ordered_json out;
        out["engine_version"] = pt::kEngineVersion;
        out["size"] = pt::decimal(size);
        out["b"] = pt::decimal(data.b);
        out["q"] = pt::decimal(data.q);
        out["square_identity"] = square_identity;
        nlohmann::ordered_json eigenvalues = nlohmann::ordered_json::array();
        eigenvalues.push_back({{"value", pt::decimal(eigenvalue)},
                               {"multiplicity", pt::decimal(rank)}});
        eigenvalues.push_back(
            {{"value", "0"},
             {"multiplicity", pt::decimal(kernel_multiplicity)}});
        out["eigenvalues"] = std::move(eigenvalues);
        out["rank"] = pt::decimal(rank);
        out["trace"] = pt::decimal(trace);
        out["trace_consistent"] = trace_consistent;
        write_output(out.dump(2) + "\n", options.out_path);
    } else {
        std::string text;
        text += "matrix size     " + pt::decimal(size) + "\n";
        text += "square identity " +
                std::string(square_identity ? "holds: M^2 = " : "FAILS vs ") +
                pt::decimal(eigenvalue) + " M\n";
        text += "eigenvalue      " + pt::decimal(eigenvalue) +
                " with multiplicity " + pt::decimal(rank) + "\n";
        text += "eigenvalue      0 with multiplicity " +
                pt::decimal(kernel_multiplicity) + "\n";
        text += "trace           " + pt::decimal(trace) +
                (trace_consistent ? " (consistent)" : " (INCONSISTENT)") + "\n";
        write_output(text, options.out_path);
    }
    return (square_identity && trace_consistent) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for group-correspondence presentations of "
                 "products of Jacobians"};
    app.require_subcommand(1);

    CommonOptions check_options;
    std::string check_path;
    bool check_emit = false;
    CLI::App* check = app.add_subcommand(
        "check", "run a scenario file and report every computed invariant");
    check->add_option("scenario", check_path, "scenario file")->required();
    check->add_flag("--emit-scenario", check_emit,
                    "print the canonical form of the scenario and exit");
    add_common(check, check_options);

    CommonOptions product_options;
    std::string product_family = "sym";
    int product_n = 0;
    std::string product_genera;
    std::string product_mixed;
    bool product_emit = false;
    CLI::App* product = app.add_subcommand(
        "product",
        "build a family instance (factors of one degree), run it, and "
        "compare the closed forms");
    product->add_option("--family", product_family,
                        "factor kind: sym, alt-dt, or alt-3c")
        ->capture_default_str();
    product->add_option("--n", product_n, "degree of each factor cover")
        ->required();
    product->add_option("--genera", product_genera,
                        "comma-separated factor genera, e.g. 2,2");
    product->add_option("--mixed", product_mixed,
                        "per-factor kind:genus list, e.g. sym:3,alt-dt:3 "
                        "(overrides --family/--genera)");
    product->add_flag("--emit-scenario", product_emit,
                      "print the instance as a scenario file and exit");
    add_common(product, product_options);

    CommonOptions table_options;
    std::string table_filter;
    CLI::App* table = app.add_subcommand(
        "paper-table", "recompute the built-in table of worked family rows");
    table->add_option("--filter", table_filter,
                      "keep rows whose label contains this substring");
    add_common(table, table_options);

    CommonOptions spectrum_options;
    std::string spectrum_path;
    CLI::App* spectrum = app.add_subcommand(
        "spectrum",
        "eigenvalue structure of the coset-space matrix of a scenario");
    spectrum->add_option("scenario", spectrum_path, "scenario file")
        ->required();
    add_common(spectrum, spectrum_options);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) {
            return run_check(check_path, check_options, check_emit);
        }
        if (product->parsed()) {
            return run_product(product_family, product_n, product_genera,
                               product_mixed, product_options, product_emit);
        }
        if (table->parsed()) return run_table(table_filter, table_options);
        if (spectrum->parsed()) {
            return run_spectrum(spectrum_path, spectrum_options);
        }
    } catch (const pt::Error& error) {
        std::cerr << "error: " << error.what() << "\n";
        switch (error.kind()) {
            case pt::ErrorKind::Input: return 2;
            case pt::ErrorKind::Resource:
            case pt::ErrorKind::Engine: return 3;
        }
        return 3;
    } catch (const std::exception& error) {
        std::cerr << "internal error: " << error.what() << "\n";
        return 3;
    }
    return 2;
}
