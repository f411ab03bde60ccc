#pragma once

#include <string>
#include <vector>

#include "tfl/edge_coloring.hpp"
#include "tfl/factors.hpp"
#include "tfl/graph.hpp"
#include "tfl/toughness.hpp"

namespace tfl {

enum class TheoremFlag { applies_holds, applies_violated, not_applicable, undecided };

const char* theorem_flag_str(TheoremFlag f);

// Full per-graph classification plus the theorem audits. The theorems are
// treated as falsifiable oracles: a VIOLATED row is what an implementation
// bug looks like.
struct ScanRecord {
    std::string graph6;
    int n = 0, m = 0, max_degree = 0;
    Decision chi_status = Decision::decided;
    int chi_value = 0;
    Decision critical_status = Decision::decided;
    bool is_critical = false;
    ToughnessCertificate tough;
    bool two_factor = false;
    bool barrier_witness = false;   // two_factor == false came with an (S,T) certificate
    bool matching_proof_only = false;

    TheoremFlag thm_1_1 = TheoremFlag::not_applicable;    // critical and 2*delta >= n
    TheoremFlag thm_1_2_k2 = TheoremFlag::not_applicable; // tau >= 2, n >= 3
    TheoremFlag thm_1_3 = TheoremFlag::not_applicable;    // critical, tau >= 3/2, 3*delta >= n
    TheoremFlag conj_2factor = TheoremFlag::not_applicable;  // every critical graph

    bool any_violated() const;
    bool any_undecided() const;
    std::string csv_row() const;

    static std::string csv_header();
};

ScanRecord scan_one(const Graph& g, std::uint64_t budget);

struct ScanSummary {
    int total = 0;
    int violated = 0;
    int undecided = 0;
    int critical = 0;
    int no_two_factor = 0;
};

// Worker-pool map over a corpus; output re-sequenced to input order, so the
// result is deterministic regardless of jobs.
std::vector<ScanRecord> scan_corpus(const std::vector<Graph>& graphs, std::uint64_t budget,
                                    int jobs);

ScanSummary summarize(const std::vector<ScanRecord>& records);

}  // namespace tfl
