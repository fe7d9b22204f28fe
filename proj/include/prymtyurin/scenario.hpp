// Scenario files: a small INI-style format describing one presentation.
//
//   [group]                     one required section
//   kind = symmetric            symmetric | alternating | explicit | product
//   n = 7                       symmetric / alternating
//   degree = 5                  explicit
//   generators = (1 2), (1 2 3 4 5)          explicit
//
//   [group.factor]              product groups: one section per factor,
//   kind = symmetric            in factor order (non-product factors only)
//   n = 3
//
//   [subgroup]                  one required section
//   kind = point-stabilizer     point-stabilizer | explicit | product
//   point = 3                   point-stabilizer
//   generators = (1 2)          explicit
//
//   [subgroup.factor]           product subgroups: one per group factor
//   kind = point-stabilizer
//   point = 3
//
//   [rep]                       one section per selected character
//   kind = standard             standard | perm-minus-trivial |
//                               outer-tensor | explicit
//   position = 1                outer-tensor: 1-based factor
//   inner = standard            outer-tensor: standard | perm-minus-trivial |
//                               explicit
//   values = 2, 0, -1           explicit: one value per conjugacy class
//
//   [signature]                 one required section
//   genus = 0
//   branch = (1 2) x 8          one 'branch' line per entry: element, count
//
// '#' or ';' start a comment (whole line, or after the value).  Keys are
// 'key = value'.  Integers are decimal strings of any size.
#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "prymtyurin/numbers.hpp"
#include "prymtyurin/permgroup.hpp"
#include "prymtyurin/permutation.hpp"
#include "prymtyurin/presentation.hpp"
#include "prymtyurin/subgroup.hpp"

namespace prymtyurin {

// A parsed scenario: everything is still symbolic (cycle words, not
// permutations) because element parsing needs the group's degree.
struct ScenarioDoc {
    GroupSpec group;
    SubgroupSpec subgroup;
    std::vector<RepSpec> reps;
    Integer quotient_genus{0};
    std::vector<std::pair<std::string, Integer>> branches;  // word, count

    bool operator==(const ScenarioDoc&) const = default;
};

namespace detail {

inline std::string strip(const std::string& text) {
    std::size_t first = 0;
    std::size_t last = text.size();
    while (first < last && std::isspace(static_cast<unsigned char>(text[first]))) {
        ++first;
    }
    while (last > first &&
           std::isspace(static_cast<unsigned char>(text[last - 1]))) {
        --last;
    }
    return text.substr(first, last - first);
}

inline std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::string current;
    for (const char c : text) {
        if (c == ',') {
            items.push_back(strip(current));
            current.clear();
        } else {
            current += c;
        }
    }
    const std::string tail = strip(current);
    if (!tail.empty() || !items.empty()) items.push_back(tail);
    return items;
}

[[noreturn]] inline void scenario_error(std::size_t line,
                                        const std::string& message) {
    throw_input("scenario line " + std::to_string(line) + ": " + message);
}

inline Integer parse_integer(const std::string& text, std::size_t line,
                             const std::string& what) {
    const std::string value = strip(text);
    if (value.empty()) scenario_error(line, what + " is empty");
    std::size_t at = (value[0] == '-' || value[0] == '+') ? 1 : 0;
    if (at == value.size()) scenario_error(line, what + " is not a number");
    for (; at < value.size(); ++at) {
        if (!std::isdigit(static_cast<unsigned char>(value[at]))) {
            scenario_error(line, what + " has a non-digit character '" +
                                      std::string(1, value[at]) + "'");
        }
    }
    return Integer(value);
}

inline int parse_small_int(const std::string& text, std::size_t line,
                           const std::string& what) {
    const Integer value = parse_integer(text, line, what);
    if (value < -1000000 || value > 1000000) {
        scenario_error(line, what + " is out of range: " + value.str());
    }
    return static_cast<int>(value);
}

inline Rational parse_rational(const std::string& text, std::size_t line,
                               const std::string& what) {
    const std::string value = strip(text);
    const std::size_t slash = value.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_integer(value, line, what));
    }
    const Integer numerator =
        parse_integer(value.substr(0, slash), line, what + " numerator");
    const Integer denominator =
        parse_integer(value.substr(slash + 1), line, what + " denominator");
    if (denominator == 0) scenario_error(line, what + " has denominator 0");
    return Rational(numerator, denominator);
}

struct ScenarioLine {
    std::size_t number = 0;
    std::string key;
    std::string value;
};

struct ScenarioSection {
    std::size_t number = 0;
    std::string name;
    std::vector<ScenarioLine> lines;

    const std::string* find(const std::string& key) const {
        for (const ScenarioLine& line : lines) {
            if (line.key == key) return &line.value;
        }
        return nullptr;
    }

    std::size_t line_of(const std::string& key) const {
        for (const ScenarioLine& line : lines) {
            if (line.key == key) return line.number;
        }
        return number;
    }

    const std::string& require(const std::string& key) const {
        const std::string* value = find(key);
        if (!value) {
            scenario_error(number, "section [" + name + "] is missing the '" +
                                       key + "' key");
        }
        return *value;
    }
};

inline std::vector<ScenarioSection> tokenize_scenario(const std::string& text) {
    std::vector<ScenarioSection> sections;
    std::size_t line_number = 0;
    std::size_t at = 0;
    while (at <= text.size()) {
        const std::size_t end = text.find('\n', at);
        std::string line = end == std::string::npos
                               ? text.substr(at)
                               : text.substr(at, end - at);
        at = end == std::string::npos ? text.size() + 1 : end + 1;
        ++line_number;

        const std::size_t comment = line.find_first_of("#;");
        if (comment != std::string::npos) line = line.substr(0, comment);
        line = strip(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                scenario_error(line_number, "unterminated section header");
            }
            ScenarioSection section;
            section.number = line_number;
            section.name = strip(line.substr(1, line.size() - 2));
            if (section.name.empty()) {
                scenario_error(line_number, "empty section name");
            }
            sections.push_back(std::move(section));
            continue;
        }
        const std::size_t equals = line.find('=');
        if (equals == std::string::npos) {
            scenario_error(line_number,
                           "expected 'key = value' or a [section] header");
        }
        if (sections.empty()) {
            scenario_error(line_number, "key outside of any section");
        }
        ScenarioLine entry;
        entry.number = line_number;
        entry.key = strip(line.substr(0, equals));
        entry.value = strip(line.substr(equals + 1));
        if (entry.key.empty()) scenario_error(line_number, "empty key");
        sections.back().lines.push_back(std::move(entry));
    }
    return sections;
}

inline GroupSpec parse_group_section(const ScenarioSection& section,
                                     bool factor_allowed) {
    GroupSpec spec;
    const std::string kind = strip(section.require("kind"));
    if (kind == "symmetric" || kind == "alternating") {
        spec.kind = kind == "symmetric" ? GroupSpec::Kind::Symmetric
                                        : GroupSpec::Kind::Alternating;
        spec.n = parse_small_int(section.require("n"), section.line_of("n"), "n");
    } else if (kind == "explicit") {
        spec.kind = GroupSpec::Kind::Explicit;
        spec.degree = parse_small_int(section.require("degree"),
                                      section.line_of("degree"), "degree");
        for (const std::string& word : split_list(section.require("generators"))) {
            if (word.empty()) {
                scenario_error(section.line_of("generators"),
                               "empty generator in the list");
            }
            spec.generator_words.push_back(word);
        }
    } else if (kind == "product") {
        if (!factor_allowed) {
            scenario_error(section.number,
                           "a product factor cannot itself be a product");
        }
        spec.kind = GroupSpec::Kind::Product;
        // factors are attached by the caller from [group.factor] sections
    } else {
        scenario_error(section.line_of("kind"),
                       "unknown group kind '" + kind +
                           "' (expected symmetric, alternating, explicit, or "
                           "product)");
    }
    return spec;
}

inline SubgroupSpec parse_subgroup_section(const ScenarioSection& section,
                                           bool factor_allowed) {
    SubgroupSpec spec;
    const std::string kind = strip(section.require("kind"));
    if (kind == "point-stabilizer") {
        spec.kind = SubgroupSpec::Kind::PointStabilizer;
        spec.point = parse_small_int(section.require("point"),
                                     section.line_of("point"), "point");
    } else if (kind == "explicit") {
        spec.kind = SubgroupSpec::Kind::Explicit;
        for (const std::string& word : split_list(section.require("generators"))) {
            if (word.empty()) {
                scenario_error(section.line_of("generators"),
                               "empty generator in the list");
            }
            spec.generator_words.push_back(word);
        }
    } else if (kind == "product") {
        if (!factor_allowed) {
            scenario_error(section.number,
                           "a product factor cannot itself be a product");
        }
        spec.kind = SubgroupSpec::Kind::Product;
    } else {
        scenario_error(section.line_of("kind"),
                       "unknown subgroup kind '" + kind +
                           "' (expected point-stabilizer, explicit, or "
                           "product)");
    }
    return spec;
}

inline RepSpec::Kind parse_rep_kind(const std::string& name, std::size_t line,
                                    bool inner) {
    if (name == "standard") return RepSpec::Kind::StandardSymmetric;
    if (name == "perm-minus-trivial") return RepSpec::Kind::PermMinusTrivial;
    if (name == "explicit") return RepSpec::Kind::ExplicitValues;
    if (name == "outer-tensor" && !inner) return RepSpec::Kind::OuterTensor;
    scenario_error(line, "unknown character kind '" + name + "' (expected " +
                             (inner ? "standard, perm-minus-trivial, or "
                                      "explicit"
                                    : "standard, perm-minus-trivial, "
                                      "outer-tensor, or explicit"));
}

inline RepSpec parse_rep_section(const ScenarioSection& section) {
    RepSpec spec;
    spec.kind = parse_rep_kind(strip(section.require("kind")),
                               section.line_of("kind"), false);
    if (spec.kind == RepSpec::Kind::OuterTensor) {
        spec.position = parse_small_int(section.require("position"),
                                        section.line_of("position"), "position");
        spec.inner_kind = parse_rep_kind(strip(section.require("inner")),
                                         section.line_of("inner"), true);
        if (spec.inner_kind == RepSpec::Kind::ExplicitValues) {
            for (const std::string& item :
                 split_list(section.require("values"))) {
                spec.values.push_back(parse_rational(
                    item, section.line_of("values"), "character value"));
            }
        }
    } else if (spec.kind == RepSpec::Kind::ExplicitValues) {
        for (const std::string& item : split_list(section.require("values"))) {
            spec.values.push_back(parse_rational(
                item, section.line_of("values"), "character value"));
        }
    }
    return spec;
}

}  // namespace detail

inline ScenarioDoc parse_scenario(const std::string& text) {
    const std::vector<detail::ScenarioSection> sections =
        detail::tokenize_scenario(text);

    ScenarioDoc doc;
    bool saw_group = false;
    bool saw_subgroup = false;
    bool saw_signature = false;
    for (const detail::ScenarioSection& section : sections) {
        if (section.name == "group") {
            if (saw_group) {
                detail::scenario_error(section.number,
                                       "duplicate [group] section");
            }
            saw_group = true;
            doc.group = detail::parse_group_section(section, true);
        } else if (section.name == "group.factor") {
            if (!saw_group || doc.group.kind != GroupSpec::Kind::Product) {
                detail::scenario_error(section.number,
                                       "[group.factor] requires a preceding "
                                       "[group] section with kind = product");
            }
            doc.group.factors.push_back(
                detail::parse_group_section(section, false));
        } else if (section.name == "subgroup") {
            if (saw_subgroup) {
                detail::scenario_error(section.number,
                                       "duplicate [subgroup] section");
            }
            saw_subgroup = true;
            doc.subgroup = detail::parse_subgroup_section(section, true);
        } else if (section.name == "subgroup.factor") {
            if (!saw_subgroup ||
                doc.subgroup.kind != SubgroupSpec::Kind::Product) {
                detail::scenario_error(section.number,
                                       "[subgroup.factor] requires a preceding "
                                       "[subgroup] section with kind = "
                                       "product");
            }
            doc.subgroup.factors.push_back(
                detail::parse_subgroup_section(section, false));
        } else if (section.name == "rep") {
            doc.reps.push_back(detail::parse_rep_section(section));
        } else if (section.name == "signature") {
            if (saw_signature) {
                detail::scenario_error(section.number,
                                       "duplicate [signature] section");
            }
            saw_signature = true;
            doc.quotient_genus =
                detail::parse_integer(section.require("genus"),
                                      section.line_of("genus"), "genus");
            for (const detail::ScenarioLine& line : section.lines) {
                if (line.key != "branch") continue;
                const std::size_t x = line.value.rfind(" x ");
                if (x == std::string::npos) {
                    detail::scenario_error(
                        line.number,
                        "branch entries look like '(1 2) x 8' (element, "
                        "count)");
                }
                const std::string word = detail::strip(line.value.substr(0, x));
                const Integer count = detail::parse_integer(
                    line.value.substr(x + 3), line.number, "branch count");
                doc.branches.emplace_back(word, count);
            }
        } else {
            detail::scenario_error(section.number, "unknown section [" +
                                                       section.name + "]");
        }
    }
    if (!saw_group) throw_input("scenario is missing the [group] section");
    if (!saw_subgroup) throw_input("scenario is missing the [subgroup] section");
    if (doc.reps.empty()) throw_input("scenario has no [rep] section");
    if (!saw_signature) {
        throw_input("scenario is missing the [signature] section");
    }
    if (doc.group.kind == GroupSpec::Kind::Product &&
        doc.group.factors.size() < 2) {
        throw_input("a product group needs at least two [group.factor] "
                    "sections");
    }
    if (doc.subgroup.kind == SubgroupSpec::Kind::Product &&
        doc.subgroup.factors.size() != doc.group.factors.size()) {
        throw_input("a product subgroup needs one [subgroup.factor] section "
                    "per group factor");
    }
    return doc;
}

// Build the runnable presentation a scenario describes.
inline PresentationInput build_presentation(
    const ScenarioDoc& doc, std::size_t bound = kDefaultEnumerationBound) {
    PermGroupPtr group = generate_group(doc.group, bound);
    Subgroup subgroup = Subgroup::build(group, doc.subgroup);
    GeometricSignature signature;
    signature.quotient_genus = doc.quotient_genus;
    for (const auto& [word, count] : doc.branches) {
        signature.branches.push_back(
            {Permutation::from_cycles(word, group->degree()), count});
    }
    return PresentationInput{std::move(group),   std::move(subgroup),
                             doc.reps,           std::move(signature),
                             doc.group,          doc.subgroup};
}

// Reconstruct the symbolic scenario of a presentation (used to echo family
// presentations as scenario files).
inline ScenarioDoc scenario_of_presentation(const PresentationInput& input) {
    ScenarioDoc doc;
    doc.group = input.group_spec;
    doc.subgroup = input.subgroup_spec;
    doc.reps = input.reps;
    doc.quotient_genus = input.signature.quotient_genus;
    for (const BranchEntry& entry : input.signature.branches) {
        doc.branches.emplace_back(entry.element.cycle_string(), entry.count);
    }
    return doc;
}

namespace detail {

inline std::string emit_group_section(const GroupSpec& spec,
                                      const std::string& header) {
    std::string out = "[" + header + "]\n";
    switch (spec.kind) {
        case GroupSpec::Kind::Symmetric:
        case GroupSpec::Kind::Alternating:
            out += std::string("kind = ") +
                   (spec.kind == GroupSpec::Kind::Symmetric ? "symmetric"
                                                            : "alternating") +
                   "\nn = " + std::to_string(spec.n) + "\n";
            break;
        case GroupSpec::Kind::Explicit: {
            out += "kind = explicit\ndegree = " + std::to_string(spec.degree) +
                   "\ngenerators = ";
            for (std::size_t i = 0; i < spec.generator_words.size(); ++i) {
                if (i) out += ", ";
                out += spec.generator_words[i];
            }
            out += "\n";
            break;
        }
        case GroupSpec::Kind::Product:
            out += "kind = product\n";
            break;
    }
    return out;
}

inline std::string emit_subgroup_section(const SubgroupSpec& spec,
                                         const std::string& header) {
    std::string out = "[" + header + "]\n";
    switch (spec.kind) {
        case SubgroupSpec::Kind::PointStabilizer:
            out += "kind = point-stabilizer\npoint = " +
                   std::to_string(spec.point) + "\n";
            break;
        case SubgroupSpec::Kind::Explicit: {
            out += "kind = explicit\ngenerators = ";
            for (std::size_t i = 0; i < spec.generator_words.size(); ++i) {
                if (i) out += ", ";
                out += spec.generator_words[i];
            }
            out += "\n";
            break;
        }
        case SubgroupSpec::Kind::Product:
            out += "kind = product\n";
            break;
    }
    return out;
}

inline std::string rep_kind_name(RepSpec::Kind kind) {
    switch (kind) {
        case RepSpec::Kind::StandardSymmetric: return "standard";
        case RepSpec::Kind::PermMinusTrivial: return "perm-minus-trivial";
        case RepSpec::Kind::OuterTensor: return "outer-tensor";
        case RepSpec::Kind::ExplicitValues: return "explicit";
    }
    throw_input("unknown character kind");
}

}  // namespace detail

// Canonical scenario text: parse(emit(doc)) == doc.
inline std::string emit_scenario(const ScenarioDoc& doc) {
    std::string out = detail::emit_group_section(doc.group, "group");
    for (const GroupSpec& factor : doc.group.factors) {
        out += "\n" + detail::emit_group_section(factor, "group.factor");
    }
    out += "\n" + detail::emit_subgroup_section(doc.subgroup, "subgroup");
    for (const SubgroupSpec& factor : doc.subgroup.factors) {
        out += "\n" + detail::emit_subgroup_section(factor, "subgroup.factor");
    }
    for (const RepSpec& rep : doc.reps) {
        out += "\n[rep]\nkind = " + detail::rep_kind_name(rep.kind) + "\n";
        if (rep.kind == RepSpec::Kind::OuterTensor) {
            out += "position = " + std::to_string(rep.position) + "\n";
            out += "inner = " + detail::rep_kind_name(rep.inner_kind) + "\n";
        }
        if (rep.kind == RepSpec::Kind::ExplicitValues ||
            (rep.kind == RepSpec::Kind::OuterTensor &&
             rep.inner_kind == RepSpec::Kind::ExplicitValues)) {
            out += "values = ";
            for (std::size_t i = 0; i < rep.values.size(); ++i) {
                if (i) out += ", ";
                out += decimal(rep.values[i]);
            }
            out += "\n";
        }
    }
    out += "\n[signature]\ngenus = " + doc.quotient_genus.str() + "\n";
    for (const auto& [word, count] : doc.branches) {
        out += "branch = " + word + " x " + count.str() + "\n";
    }
    return out;
}

}  // namespace prymtyurin
