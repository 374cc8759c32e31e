#pragma once

#include <memory>
#include <string>

#include "specseq/e2page.hpp"

namespace specseq {

// UTF-8 JSON formats; every document carries format_version and kind, and
// every loader re-verifies the mathematical invariants of what it reads
// (orthogonality for tables, the module axioms for modules).

std::string group_to_json(const FiniteGroup& g);
std::unique_ptr<FiniteGroup> group_from_json(const std::string& text);

std::string chartable_to_json(const CharacterTable& t);
// The group is rebuilt from the document; verification runs in the ctor.
struct LoadedCharTable {
    std::unique_ptr<FiniteGroup> group;
    std::unique_ptr<CharacterTable> table;
};
LoadedCharTable chartable_from_json(const std::string& text);

std::string module_to_json(const GradedMackeyModule& m, const std::string& name);
struct LoadedModule {
    std::string name;
    std::unique_ptr<FiniteGroup> group;
    GradedMackeyModule module;  // axiom-checked on load
};
// Throws std::runtime_error naming the failing field or axiom instance.
LoadedModule module_from_json(const std::string& text);
// Same parse but against an existing group instance (CLI workspace path).
GradedMackeyModule module_from_json_with_group(const std::string& text, const FiniteGroup& g, std::string* name_out,
                                               bool check = true);

std::string e2page_to_json(const E2Page& page);
std::string induction_report_to_json(const InductionReport& rep, const std::string& which, const std::string& group);
std::string vanishing_report_to_json(const VanishingReport& rep, const std::string& group);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace specseq
