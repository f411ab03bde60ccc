#include "tfl/scan.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace tfl {

const char* theorem_flag_str(TheoremFlag f) {
    switch (f) {
        case TheoremFlag::applies_holds: return "applies+holds";
        case TheoremFlag::applies_violated: return "applies+VIOLATED";
        case TheoremFlag::not_applicable: return "not-applicable";
        case TheoremFlag::undecided: return "undecided";
    }
    return "?";
}

bool ScanRecord::any_violated() const {
    for (TheoremFlag f : {thm_1_1, thm_1_2_k2, thm_1_3, conj_2factor})
        if (f == TheoremFlag::applies_violated) return true;
    return false;
}

bool ScanRecord::any_undecided() const {
    if (chi_status == Decision::undecided || critical_status == Decision::undecided ||
        tough.status == Decision::undecided)
        return true;
    for (TheoremFlag f : {thm_1_1, thm_1_2_k2, thm_1_3, conj_2factor})
        if (f == TheoremFlag::undecided) return true;
    return false;
}

std::string ScanRecord::csv_header() {
    return "graph6,n,m,delta,chi_prime,critical,toughness,two_factor,"
           "thm_1_1,thm_1_2_k2,thm_1_3,conj_2factor";
}

std::string ScanRecord::csv_row() const {
    std::ostringstream os;
    os << graph6 << ',' << n << ',' << m << ',' << max_degree << ',';
    if (chi_status == Decision::undecided)
        os << "undecided";
    else
        os << chi_value;
    os << ',';
    if (critical_status == Decision::undecided)
        os << "undecided";
    else
        os << (is_critical ? "yes" : "no");
    os << ',' << tough.value_str() << ',' << (two_factor ? "yes" : "no") << ','
       << theorem_flag_str(thm_1_1) << ',' << theorem_flag_str(thm_1_2_k2) << ','
       << theorem_flag_str(thm_1_3) << ',' << theorem_flag_str(conj_2factor);
    return os.str();
}

namespace {

TheoremFlag audit(bool applies_known, bool applies, bool holds) {
    if (!applies_known) return TheoremFlag::undecided;
    if (!applies) return TheoremFlag::not_applicable;
    return holds ? TheoremFlag::applies_holds : TheoremFlag::applies_violated;
}

}  // namespace

ScanRecord scan_one(const Graph& g, std::uint64_t budget) {
    ScanRecord r;
    r.graph6 = write_graph6(g);
    r.n = g.n();
    r.m = g.m();
    r.max_degree = g.max_degree();

    auto chi = chromatic_index(g, Budget(budget));
    r.chi_status = chi.status;
    r.chi_value = chi.value;

    auto crit = is_delta_critical(g, Budget(budget));
    r.critical_status = crit.status;
    r.is_critical = crit.is_critical;

    r.tough = toughness(g, Budget(budget));

    auto tf = find_two_factor(g, Budget(budget));
    r.two_factor = tf.has_factor();
    r.barrier_witness = tf.barrier.has_value();
    r.matching_proof_only = !r.two_factor && !r.barrier_witness;

    bool crit_known = crit.status == Decision::decided;
    bool tough_known = r.tough.status == Decision::decided;
    bool tau_ge = false, tau_ge_2 = false;
    if (tough_known) {
        tau_ge = r.tough.infinite || r.tough.value >= Rational(3, 2);
        tau_ge_2 = r.tough.infinite || r.tough.value >= Rational(2);
    }

    // rational comparisons, never floored: delta >= n/2 and delta >= n/3
    bool deg_half = 2 * r.max_degree >= r.n;
    bool deg_third = 3 * r.max_degree >= r.n;

    r.thm_1_1 = audit(crit_known, crit.is_critical && deg_half, r.two_factor);
    r.thm_1_2_k2 = audit(tough_known, tau_ge_2 && r.n >= 3, r.two_factor);
    // short-circuit applicability where one decided leg already rules it out
    if (crit_known && !crit.is_critical)
        r.thm_1_3 = TheoremFlag::not_applicable;
    else if (!deg_third)
        r.thm_1_3 = TheoremFlag::not_applicable;
    else
        r.thm_1_3 = audit(crit_known && tough_known, crit.is_critical && tau_ge && deg_third,
                          r.two_factor);
    r.conj_2factor = audit(crit_known, crit.is_critical, r.two_factor);
    return r;
}

std::vector<ScanRecord> scan_corpus(const std::vector<Graph>& graphs, std::uint64_t budget,
                                    int jobs) {
    std::vector<ScanRecord> records(graphs.size());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, std::max<std::size_t>(graphs.size(), 1));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= graphs.size()) break;
            records[i] = scan_one(graphs[i], budget);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return records;
}

ScanSummary summarize(const std::vector<ScanRecord>& records) {
    ScanSummary s;
    s.total = int(records.size());
    for (const auto& r : records) {
        if (r.any_violated()) ++s.violated;
        if (r.any_undecided()) ++s.undecided;
        if (r.critical_status == Decision::decided && r.is_critical) ++s.critical;
        if (!r.two_factor) ++s.no_two_factor;
    }
    return s;
}

}  // namespace tfl
