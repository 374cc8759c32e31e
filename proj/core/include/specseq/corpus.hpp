#pragma once

#include <cstdint>
#include <ostream>

#include "specseq/io.hpp"

namespace specseq {

// The reproducible verification corpus. Each criterion runs over the preset
// group list with exact arithmetic and reports one pass/fail line.
struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string details;
};

struct CorpusOptions {
    std::vector<std::string> groups{"Z2", "Z3", "Z4", "Z6", "V4", "S3", "D4", "Q8", "A4"};
    std::uint64_t seed = 20240601;
};

std::vector<CriterionResult> run_corpus(const CorpusOptions& opt, std::ostream& log);
// true iff everything passed; prints one line per criterion
bool corpus_all_pass(const std::vector<CriterionResult>& results, std::ostream& out);

// Canonicalized transcript of every isomorphism-invariant output of the
// deterministic corpus slice, for the convention-independence criterion.
std::string corpus_invariant_transcript(const std::vector<std::string>& groups, const ChoicePolicy& policy);

}  // namespace specseq
