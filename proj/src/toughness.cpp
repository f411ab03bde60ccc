#include "tfl/toughness.hpp"

namespace tfl {

ToughnessCertificate toughness(const Graph& g, Budget budget) {
    ToughnessCertificate cert;
    int n = g.n();
    if (g.is_complete()) {
        cert.infinite = true;
        return cert;
    }

    bool have_best = false;
    Rational best{0};
    VertexSet best_cut;
    int best_cc = 0;

    // Increasing cut size; a cut of size s can do no better than s/(n-s),
    // so once that floor meets the incumbent we are done.
    for (int s = 0; s < n; ++s) {
        if (have_best && Rational(s, n - s) >= best) break;
        // all n-choose-s masks via Gosper's hack
        std::uint64_t mask = s == 0 ? 0 : (std::uint64_t(1) << s) - 1;
        std::uint64_t limit = std::uint64_t(1) << n;
        while (mask < limit) {
            if (!budget.tick()) {
                cert.status = Decision::undecided;
                if (have_best) cert.upper_bound = best;
                return cert;
            }
            int cc = component_count(g, VertexSet(VertexSet::full(n).bits & ~mask));
            if (cc >= 2) {
                Rational ratio(s, cc);
                if (!have_best || ratio < best) {
                    have_best = true;
                    best = ratio;
                    best_cut = VertexSet(mask);
                    best_cc = cc;
                }
            }
            if (s == 0) break;
            std::uint64_t c = mask & -mask;
            std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }

    cert.value = best;
    cert.cut = best_cut;
    cert.component_count = best_cc;
    return cert;
}

std::optional<bool> is_t_tough(const Graph& g, Rational t, Budget budget) {
    if (t < Rational(0)) throw std::invalid_argument("is_t_tough: t must be nonnegative");
    ToughnessCertificate cert = toughness(g, budget);
    if (cert.status == Decision::undecided) {
        // a witness cut below t already decides the question
        if (cert.upper_bound && *cert.upper_bound < t) return false;
        return std::nullopt;
    }
    if (cert.infinite) return true;
    return cert.value >= t;
}

}  // namespace tfl
