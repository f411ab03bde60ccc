#include "tfl/certify.hpp"

#include <stdexcept>

#include "tfl/edge_coloring.hpp"
#include "tfl/h_construction.hpp"
#include "tfl/toughness.hpp"

namespace tfl {

using nlohmann::json;

CertKind parse_cert_kind(const std::string& s) {
    if (s == "two_factor" || s == "two-factor") return CertKind::two_factor;
    if (s == "barrier") return CertKind::barrier;
    if (s == "toughness") return CertKind::toughness;
    if (s == "coloring") return CertKind::coloring;
    if (s == "h_construction" || s == "h-construction") return CertKind::h_construction;
    throw std::invalid_argument("unknown certificate kind: " + s);
}

namespace {

json set_to_json(VertexSet s) { return json(s.to_vector()); }

VertexSet set_from_json(const json& j) {
    VertexSet s;
    for (int v : j.get<std::vector<int>>()) s.add(v);
    return s;
}

const char* tier_str(BarrierTier t) {
    switch (t) {
        case BarrierTier::plain: return "plain";
        case BarrierTier::biased: return "biased";
        case BarrierTier::good_biased: return "good_biased";
    }
    return "?";
}

BarrierTier tier_from(const std::string& s) {
    if (s == "plain") return BarrierTier::plain;
    if (s == "biased") return BarrierTier::biased;
    if (s == "good_biased") return BarrierTier::good_biased;
    throw std::invalid_argument("unknown barrier tier: " + s);
}

json doc_skeleton(const Graph& g, const char* kind) {
    return json{{"schema", 1}, {"kind", kind}, {"graph6", write_graph6(g)}};
}

}  // namespace

json barrier_to_json(const BarrierCertificate& cert) {
    json j{{"S", set_to_json(cert.s)},
           {"T", set_to_json(cert.t)},
           {"delta", cert.delta},
           {"h", cert.classification.h},
           {"tier", tier_str(cert.tier)}};
    json odd = json::array(), even = json::array();
    for (const auto& d : cert.classification.odd)
        odd.push_back({{"vertices", set_to_json(d.vertices)}, {"edges_to_T", d.edges_to_t}});
    for (const auto& d : cert.classification.even)
        even.push_back({{"vertices", set_to_json(d.vertices)}, {"edges_to_T", d.edges_to_t}});
    j["odd_components"] = odd;
    j["even_components"] = even;
    return j;
}

BarrierCertificate barrier_from_json(const Graph& g, const json& j) {
    BarrierCertificate cert;
    cert.s = set_from_json(j.at("S"));
    cert.t = set_from_json(j.at("T"));
    cert.delta = delta_st(g, cert.s, cert.t);
    cert.classification = classify_components(g, cert.s, cert.t);
    cert.tier = tier_from(j.at("tier").get<std::string>());
    return cert;
}

namespace {

json certify_two_factor(const Graph& g, std::uint64_t budget) {
    json doc = doc_skeleton(g, "two_factor");
    auto res = find_two_factor(g, Budget(budget));
    doc["status"] = "decided";
    if (res.factor) {
        doc["result"] = {{"exists", true}, {"cycles", res.factor->cycles}};
    } else {
        json r{{"exists", false}};
        if (res.barrier)
            r["barrier"] = barrier_to_json(*res.barrier);
        else
            r["matching_proof_only"] = true;
        doc["result"] = r;
    }
    return doc;
}

json certify_barrier(const Graph& g, std::uint64_t budget, BarrierMode mode) {
    json doc = doc_skeleton(g, "barrier");
    auto res = find_barriers(g, mode, Budget(budget));
    doc["status"] = res.status == Decision::decided ? "decided" : "undecided";
    json arr = json::array();
    for (const auto& c : res.barriers) arr.push_back(barrier_to_json(c));
    doc["result"] = {{"barriers", arr}};
    return doc;
}

json certify_toughness(const Graph& g, std::uint64_t budget) {
    json doc = doc_skeleton(g, "toughness");
    auto cert = toughness(g, Budget(budget));
    if (cert.status == Decision::undecided) {
        doc["status"] = "undecided";
        json r;
        if (cert.upper_bound) r["upper_bound"] = cert.upper_bound->str();
        doc["result"] = r;
        return doc;
    }
    doc["status"] = "decided";
    if (cert.infinite) {
        doc["result"] = {{"value", "inf"}};
    } else {
        doc["result"] = {{"value", cert.value.str()},
                         {"cut", set_to_json(*cert.cut)},
                         {"component_count", cert.component_count}};
    }
    return doc;
}

json certify_coloring(const Graph& g, std::uint64_t budget) {
    json doc = doc_skeleton(g, "coloring");
    auto res = chromatic_index(g, Budget(budget));
    doc["status"] = res.status == Decision::decided ? "decided" : "undecided";
    json colors = json::array();
    for (std::size_t i = 0; i < res.witness.edges.size(); ++i)
        colors.push_back({{"u", res.witness.edges[i].first},
                          {"v", res.witness.edges[i].second},
                          {"color", res.witness.color[i]}});
    doc["result"] = {{"chi_prime", res.value},
                     {"max_degree", g.max_degree()},
                     {"palette", res.witness.palette},
                     {"colors", colors}};
    return doc;
}

json certify_h_construction(const Graph& g, std::uint64_t budget) {
    json doc = doc_skeleton(g, "h_construction");
    auto res = find_barriers(g, BarrierMode::good_biased, Budget(budget));
    if (res.status == Decision::undecided) {
        doc["status"] = "undecided";
        doc["result"] = json::object();
        return doc;
    }
    if (res.barriers.empty()) {
        doc["status"] = "decided";
        doc["result"] = {{"has_two_factor", true}};
        return doc;
    }
    const auto& cert = res.barriers.front();
    auto rb = build_h(g, cert);
    auto stats = compute_statistics(g, cert);
    auto hall = hall_matching(rb);
    auto counting = verify_claim_counting(g, cert);

    json stubs = json::array();
    for (const auto& [id, info] : rb.stubs)
        stubs.push_back({{"h_id", id},
                         {"component", set_to_json(info.component_vertices)},
                         {"i", info.i},
                         {"t_neighbors", info.t_neighbors}});
    json orig = json::array();
    for (int v : rb.orig_of) orig.push_back(v);

    json hall_j;
    if (hall.matching) {
        hall_j = {{"saturates_T", true}, {"matching", *hall.matching}};
    } else {
        hall_j = {{"saturates_T", false},
                  {"violating_B", set_to_json(*hall.violating)},
                  {"neighborhood", set_to_json(hall.violating_neighborhood)}};
    }

    doc["status"] = "decided";
    doc["result"] = {
        {"barrier", barrier_to_json(cert)},
        {"h_graph6", write_graph6(rb.h)},
        {"x_side", set_to_json(rb.x_side)},
        {"t_side", set_to_json(rb.t_side)},
        {"orig_of", orig},
        {"stubs", stubs},
        {"statistics",
         {{"T1", set_to_json(stats.t1)},
          {"T2", set_to_json(stats.t2)},
          {"m1", stats.m1},
          {"m2", stats.m2},
          {"m3", stats.m3},
          {"S0", set_to_json(stats.s0)},
          {"S1", set_to_json(stats.s1)},
          {"y_omega", stats.y_omega ? json(*stats.y_omega) : json(nullptr)}}},
        {"hall", hall_j},
        {"claim_counting",
         {{"identity_holds", counting.identity_holds},
          {"inequality_holds", counting.inequality_holds},
          {"degree_sum", counting.degree_sum},
          {"weighted_odd_sum", counting.weighted_odd_sum}}}};
    return doc;
}

}  // namespace

json certify(const Graph& g, CertKind kind, std::uint64_t budget, BarrierMode barrier_mode) {
    switch (kind) {
        case CertKind::two_factor: return certify_two_factor(g, budget);
        case CertKind::barrier: return certify_barrier(g, budget, barrier_mode);
        case CertKind::toughness: return certify_toughness(g, budget);
        case CertKind::coloring: return certify_coloring(g, budget);
        case CertKind::h_construction: return certify_h_construction(g, budget);
    }
    throw std::invalid_argument("bad kind");
}

VerifyOutcome verify_certificate(const json& doc, std::uint64_t budget) {
    auto fail = [](const std::string& msg) { return VerifyOutcome{false, msg}; };
    if (doc.value("schema", 0) != 1) return fail("unsupported schema");
    Graph g = parse_graph6(doc.at("graph6").get<std::string>());
    std::string kind = doc.at("kind").get<std::string>();
    bool undecided = doc.value("status", "decided") == std::string("undecided");
    const json& r = doc.at("result");

    if (kind == "two_factor") {
        if (r.at("exists").get<bool>()) {
            TwoFactor tf;
            tf.cycles = r.at("cycles").get<std::vector<std::vector<int>>>();
            if (!tf.valid(g)) return fail("cycles are not a valid 2-factor");
        } else {
            if (find_two_factor(g, Budget(budget)).has_factor())
                return fail("graph has a 2-factor but certificate claims none");
            if (r.contains("barrier")) {
                auto cert = barrier_from_json(g, r.at("barrier"));
                if (cert.delta > -2) return fail("claimed barrier has delta > -2");
                if (cert.delta != r.at("barrier").at("delta").get<int>())
                    return fail("barrier delta mismatch");
            }
        }
        return {};
    }
    if (kind == "barrier") {
        for (const auto& bj : r.at("barriers")) {
            auto cert = barrier_from_json(g, bj);
            if (cert.delta > -2) return fail("barrier delta > -2");
            if (cert.delta != bj.at("delta").get<int>()) return fail("delta mismatch");
            if (cert.classification.h != bj.at("h").get<int>()) return fail("h mismatch");
            if (cert.tier != BarrierTier::plain) {
                auto rep = verify_biased_properties(g, cert);
                if (!rep.all()) return fail("biased structural properties fail");
            }
        }
        return {};
    }
    if (kind == "toughness") {
        if (undecided) return {};
        if (r.at("value") == "inf") {
            if (!g.is_complete()) return fail("inf toughness on a non-complete graph");
            return {};
        }
        Rational claimed = Rational::parse(r.at("value").get<std::string>());
        VertexSet cut = set_from_json(r.at("cut"));
        int cc = component_count(g, g.vertices() - cut);
        if (cc < 2) return fail("cut leaves fewer than 2 components");
        if (cc != r.at("component_count").get<int>()) return fail("component count mismatch");
        if (Rational(cut.size(), cc) != claimed) return fail("cut does not achieve claimed value");
        auto re = toughness(g, Budget(budget));
        if (re.status == Decision::decided && !re.infinite && re.value != claimed)
            return fail("claimed value is not optimal");
        return {};
    }
    if (kind == "coloring") {
        EdgeColoring col;
        col.palette = r.at("palette").get<int>();
        for (const auto& cj : r.at("colors")) {
            col.edges.emplace_back(cj.at("u").get<int>(), cj.at("v").get<int>());
            col.color.push_back(cj.at("color").get<int>());
        }
        if (g.m() > 0 && !col.is_proper(g)) return fail("witness coloring is not proper");
        if (!undecided) {
            int chi = r.at("chi_prime").get<int>();
            int delta = g.max_degree();
            if (g.m() > 0 && (chi < delta || chi > delta + 1))
                return fail("chromatic index outside {max_degree, max_degree+1}");
            auto re = chromatic_index(g, Budget(budget));
            if (re.status == Decision::decided && re.value != chi)
                return fail("chromatic index mismatch on recomputation");
        }
        return {};
    }
    if (kind == "h_construction") {
        if (undecided || r.value("has_two_factor", false)) return {};
        auto cert = barrier_from_json(g, r.at("barrier"));
        if (!verify_biased_properties(g, cert).all())
            return fail("barrier is not structurally biased");
        auto rb = build_h(g, cert);
        if (write_graph6(rb.h) != r.at("h_graph6").get<std::string>())
            return fail("reconstructed H differs from certificate");
        auto counting = verify_claim_counting(g, cert);
        if (counting.identity_holds != r.at("claim_counting").at("identity_holds").get<bool>() ||
            counting.inequality_holds != r.at("claim_counting").at("inequality_holds").get<bool>())
            return fail("claim counting mismatch");
        auto hall = hall_matching(rb);
        bool saturates = hall.matching.has_value();
        if (saturates != r.at("hall").at("saturates_T").get<bool>())
            return fail("hall saturation mismatch");
        return {};
    }
    return fail("unknown certificate kind: " + kind);
}

}  // namespace tfl
