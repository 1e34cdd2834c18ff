#ifndef GRAPHDEX_VERIFIER_HPP
#define GRAPHDEX_VERIFIER_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphdex/closed_forms.hpp"
#include "graphdex/derived.hpp"
#include "graphdex/generators.hpp"
#include "graphdex/indices.hpp"

namespace graphdex {

using json = nlohmann::ordered_json;

enum class Verdict { Match, Mismatch };

inline std::string verdict_name(Verdict v) { return v == Verdict::Match ? "MATCH" : "MISMATCH"; }

// One (graph, kind, invariant) comparison: a closed-form value against the
// value measured on the explicitly constructed derived graph. kind "G" marks
// checks on the base graph itself.
struct VerificationRecord {
    std::string graph;
    std::string kind;
    std::string invariant;
    std::int64_t closed_value = 0;
    std::int64_t oracle_value = 0;
    Verdict verdict = Verdict::Match;
    std::string source;
    std::string note;

    bool operator==(const VerificationRecord&) const = default;
};

// Overall grade of one published formula across a whole size range.
struct FormulaClassification {
    std::string source;
    std::string family;  // "cycle", "star", or "both"
    std::string kind;
    std::string invariant;
    std::string published;    // formula as printed
    Verdict verdict = Verdict::Match;  // MATCH only if every size matched
    std::int64_t matches = 0;
    std::int64_t mismatches = 0;
    std::string replacement;  // closed form that does hold, when one exists
    std::string note;
};

struct SweepReport {
    json corpus;  // parameters that generated the record set
    std::vector<VerificationRecord> records;
    std::vector<FormulaClassification> classifications;  // empty for proposition sweeps
};

// Digit runs compare numerically, everything else bytewise, so C3 < C12 and
// R0002 < R0010 without zero-padding tricks.
inline bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        unsigned char ca = a[i], cb = b[j];
        if (std::isdigit(ca) && std::isdigit(cb)) {
            std::size_t i0 = i, j0 = j;
            while (i < a.size() && std::isdigit(static_cast<unsigned char>(a[i]))) ++i;
            while (j < b.size() && std::isdigit(static_cast<unsigned char>(b[j]))) ++j;
            std::string da = a.substr(i0, i - i0), db = b.substr(j0, j - j0);
            std::string ta = da.substr(da.find_first_not_of('0') == std::string::npos
                                           ? da.size() - 1
                                           : da.find_first_not_of('0'));
            std::string tb = db.substr(db.find_first_not_of('0') == std::string::npos
                                           ? db.size() - 1
                                           : db.find_first_not_of('0'));
            if (ta.size() != tb.size()) return ta.size() < tb.size();
            if (ta != tb) return ta < tb;
            if (da != db) return da < db;  // equal value, shorter zero-padding first
        } else {
            if (ca != cb) return ca < cb;
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

namespace detail {

inline int kind_rank(const std::string& k) {
    static const std::array<std::string, 7> order{"G", "L", "S", "T1", "T2", "T", "PL"};
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == k) return static_cast<int>(i);
    return static_cast<int>(order.size());
}

inline int invariant_rank(const std::string& s) {
    if (s == "F") return 0;
    if (s == "M1") return 1;
    if (s == "Fbar") return 2;
    return 3;
}

inline bool record_less(const VerificationRecord& a, const VerificationRecord& b) {
    if (a.graph != b.graph) return natural_less(a.graph, b.graph);
    if (int ra = kind_rank(a.kind), rb = kind_rank(b.kind); ra != rb) return ra < rb;
    if (int ra = invariant_rank(a.invariant), rb = invariant_rank(b.invariant); ra != rb)
        return ra < rb;
    if (a.source != b.source) return natural_less(a.source, b.source);
    return a.note < b.note;
}

}  // namespace detail

// Canonical record order: graph, kind, invariant, source. Applying this
// before serialization makes report bytes independent of production order.
inline void normalize(std::vector<VerificationRecord>& records) {
    std::sort(records.begin(), records.end(), detail::record_less);
}

inline bool all_match(const std::vector<VerificationRecord>& records) {
    for (const auto& r : records)
        if (r.verdict != Verdict::Match) return false;
    return true;
}

// Checks every closed form against the constructed derived graphs of g:
// for each kind, F (Prop1..6), M1 (Prop8) and Fbar (Prop9..14) against the
// measured values, plus the Prop7 identity evaluated on the derived graph's
// own report; finally Prop7 on g itself (kind "G").
inline std::vector<VerificationRecord> verify_propositions(const Graph& g,
                                                           const std::string& descriptor = "G") {
    std::vector<VerificationRecord> out;
    out.reserve(25);
    IndexReport base = report(g);

    auto add = [&](const std::string& kind, Invariant inv, std::int64_t closed,
                   std::int64_t oracle, const std::string& source) {
        out.push_back({descriptor, kind, invariant_name(inv), closed, oracle,
                       closed == oracle ? Verdict::Match : Verdict::Mismatch, source, ""});
    };

    add("G", Invariant::Fbar, fbar_identity(base.n, base.m1, base.f), base.f_coindex, "Prop7");

    for (DerivedKind kind : kAllKinds) {
        DerivedGraph d = construct(kind, g);
        std::string k = kind_name(kind);
        std::int64_t df = f_index(d.graph);
        std::int64_t dm1 = m1(d.graph);
        std::int64_t dfbar = f_coindex_direct(d.graph);
        add(k, Invariant::F, f_closed(kind, base), df, f_closed_source(kind));
        add(k, Invariant::M1, m1_closed(kind, base), dm1, "Prop8");
        add(k, Invariant::Fbar, fbar_closed(kind, base), dfbar, fbar_closed_source(kind));
        add(k, Invariant::Fbar, fbar_identity(d.graph.vertex_count(), dm1, df), dfbar, "Prop7");
    }
    return out;
}

namespace detail {

inline Graph example_graph(Family family, int n) {
    return family == Family::Cycle ? cycle(n) : star(n);
}

inline std::string family_name(Family f) { return f == Family::Cycle ? "cycle" : "star"; }

inline std::int64_t example_oracle(ExampleId id, DerivedKind kind, const Graph& g) {
    DerivedGraph d = construct(kind, g);
    return example_invariant(id) == Invariant::F ? f_index(d.graph) : f_coindex_direct(d.graph);
}

}  // namespace detail

// Evaluates every published example formula at every size in [lo, hi] against
// the construction oracle. One record per (size, example, kind); negative
// published values are annotated, never skipped.
inline std::vector<VerificationRecord> verify_examples(int lo, int hi) {
    if (lo < 3) throw SizeTooSmallError("examples range", lo, 3);
    if (hi < lo) throw GraphError("examples range is empty");
    std::vector<VerificationRecord> out;
    for (int n = lo; n <= hi; ++n) {
        for (ExampleId id : kAllExamples) {
            Family fam = example_family(id);
            Graph g = detail::example_graph(fam, n);
            std::string desc = family_descriptor({fam, n});
            for (DerivedKind kind : kAllKinds) {
                std::int64_t closed = example_formula(id, kind, n);
                std::int64_t oracle = detail::example_oracle(id, kind, g);
                out.push_back({desc, kind_name(kind), invariant_name(example_invariant(id)),
                               closed, oracle,
                               closed == oracle ? Verdict::Match : Verdict::Mismatch,
                               example_source(id), closed < 0 ? "negative value" : ""});
            }
        }
    }
    return out;
}

namespace detail {

struct Tally {
    std::int64_t matches = 0;
    std::int64_t mismatches = 0;
    bool negative = false;
};

inline FormulaClassification classify_one(const std::string& source, const std::string& family,
                                          DerivedKind kind, Invariant inv,
                                          const std::string& published,
                                          const std::string& replacement, const Tally& t) {
    FormulaClassification c;
    c.source = source;
    c.family = family;
    c.kind = kind_name(kind);
    c.invariant = invariant_name(inv);
    c.published = published;
    c.matches = t.matches;
    c.mismatches = t.mismatches;
    c.verdict = t.mismatches == 0 ? Verdict::Match : Verdict::Mismatch;
    if (c.verdict == Verdict::Mismatch) c.replacement = replacement;
    if (t.negative) c.note = "negative value at some sizes";
    return c;
}

}  // namespace detail

// verify_examples plus the per-formula roll-up demanded of a range report:
// a formula is MATCH only if it matched at every size.
inline SweepReport examples_report(int lo, int hi) {
    SweepReport rep;
    rep.corpus = json{{"families", {"cycle", "star"}}, {"range", {lo, hi}}};
    rep.records = verify_examples(lo, hi);

    std::map<std::pair<int, int>, detail::Tally> tally;  // (example, kind) -> counts
    for (const auto& r : rep.records) {
        int e = -1;
        for (ExampleId id : kAllExamples)
            if (example_source(id) == r.source) e = static_cast<int>(id);
        auto& t = tally[{e, detail::kind_rank(r.kind)}];
        (r.verdict == Verdict::Match ? t.matches : t.mismatches)++;
        if (r.note == "negative value") t.negative = true;
    }
    for (ExampleId id : kAllExamples) {
        for (DerivedKind kind : kAllKinds) {
            Invariant inv = example_invariant(id);
            std::string replacement = inv == Invariant::F ? f_closed_formula(kind)
                                                          : fbar_closed_formula(kind);
            rep.classifications.push_back(detail::classify_one(
                example_source(id), detail::family_name(example_family(id)), kind, inv,
                example_formula_text(id, kind), replacement,
                tally[{static_cast<int>(id), detail::kind_rank(kind_name(kind))}]));
        }
    }
    normalize(rep.records);
    return rep;
}

// Deterministic random-graph proposition sweep. Every graph has exactly n_max
// vertices; edge probabilities cycle through p_list; one sub-seed per graph is
// drawn from a master generator, so (count, n_max, p_list, seed) pins the
// whole corpus.
inline SweepReport sweep_random(int count, int n_max, const std::vector<double>& p_list,
                                std::uint64_t seed) {
    if (count < 1) throw SizeTooSmallError("sweep count", count, 1);
    if (n_max < 1) throw SizeTooSmallError("sweep n_max", n_max, 1);
    if (p_list.empty()) throw GraphError("sweep needs at least one probability");
    for (double p : p_list)
        if (!(p >= 0.0 && p <= 1.0)) throw InvalidProbabilityError(p);

    SweepReport rep;
    rep.corpus = json{{"count", count}, {"n_max", n_max}, {"p_list", p_list}, {"seed", seed}};
    std::mt19937_64 master(seed);
    for (int i = 0; i < count; ++i) {
        std::uint64_t sub_seed = master();
        double p = p_list[static_cast<std::size_t>(i) % p_list.size()];
        Graph g = random_graph(n_max, p, sub_seed);
        char desc[16];
        std::snprintf(desc, sizeof desc, "R%04d", i);
        auto recs = verify_propositions(g, desc);
        rep.records.insert(rep.records.end(), recs.begin(), recs.end());
    }
    normalize(rep.records);
    return rep;
}

// Fixed-scope errata audit: every published example formula over sizes 3..20
// for both families, plus the published M1 listing evaluated verbatim (its T1
// and T2 lines disagree with the degree facts). Each mismatching formula is
// paired with the closed form in the base-invariant basis that the oracle
// does confirm.
inline SweepReport errata_report() {
    constexpr int kLo = 3, kHi = 20;
    SweepReport rep = examples_report(kLo, kHi);
    rep.corpus = json{{"families", {"cycle", "star"}},
                      {"range", {kLo, kHi}},
                      {"published_m1_listing", true}};

    std::map<int, detail::Tally> tally;  // kind rank -> counts across both families
    for (int n = kLo; n <= kHi; ++n) {
        for (Family fam : {Family::Cycle, Family::Star}) {
            Graph g = detail::example_graph(fam, n);
            IndexReport base = report(g);
            std::string desc = family_descriptor({fam, n});
            for (DerivedKind kind : kAllKinds) {
                std::int64_t closed = m1_printed(kind, base);
                std::int64_t oracle = m1(construct(kind, g).graph);
                Verdict v = closed == oracle ? Verdict::Match : Verdict::Mismatch;
                rep.records.push_back({desc, kind_name(kind), "M1", closed, oracle, v, "Prop8",
                                       "as printed"});
                auto& t = tally[detail::kind_rank(kind_name(kind))];
                (v == Verdict::Match ? t.matches : t.mismatches)++;
            }
        }
    }
    for (DerivedKind kind : kAllKinds) {
        FormulaClassification c = detail::classify_one(
            "Prop8", "both", kind, Invariant::M1, m1_printed_formula(kind),
            m1_closed_formula(kind), tally[detail::kind_rank(kind_name(kind))]);
        c.note = c.verdict == Verdict::Mismatch ? "as printed; see replacement" : "as printed";
        rep.classifications.push_back(c);
    }
    normalize(rep.records);
    return rep;
}

// ---- serialization ----

inline json to_json(const VerificationRecord& r) {
    json j{{"graph", r.graph},
           {"kind", r.kind},
           {"invariant", r.invariant},
           {"closed_value", r.closed_value},
           {"oracle_value", r.oracle_value},
           {"verdict", verdict_name(r.verdict)},
           {"source", r.source}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline json to_json(const FormulaClassification& c) {
    json j{{"source", c.source},     {"family", c.family},
           {"kind", c.kind},         {"invariant", c.invariant},
           {"published", c.published}, {"verdict", verdict_name(c.verdict)},
           {"matches", c.matches},   {"mismatches", c.mismatches}};
    if (!c.replacement.empty()) j["replacement"] = c.replacement;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

// Per-source MATCH/MISMATCH counts, source keys in natural order.
inline json summarize(const std::vector<VerificationRecord>& records) {
    std::map<std::string, std::array<std::int64_t, 2>, decltype(&natural_less)> counts(
        &natural_less);
    for (const auto& r : records) ++counts[r.source][r.verdict == Verdict::Match ? 0 : 1];
    json j = json::object();
    for (const auto& [source, c] : counts) j[source] = json{{"MATCH", c[0]}, {"MISMATCH", c[1]}};
    return j;
}

inline json to_json(const SweepReport& rep) {
    json j{{"corpus", rep.corpus}, {"summary", summarize(rep.records)}};
    if (!rep.classifications.empty()) {
        j["classifications"] = json::array();
        for (const auto& c : rep.classifications) j["classifications"].push_back(to_json(c));
    }
    j["records"] = json::array();
    for (const auto& r : rep.records) j["records"].push_back(to_json(r));
    return j;
}

inline json to_json(const IndexReport& r) {
    return json{{"n", r.n},   {"m", r.m},           {"M1", r.m1},       {"M2", r.m2},
                {"F", r.f},   {"Fbar", r.f_coindex}, {"ReZG3", r.rezg3}, {"Xi4", r.xi4}};
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

inline std::string to_csv(const std::vector<VerificationRecord>& records) {
    std::string out = "graph,kind,invariant,source,closed,oracle,verdict\n";
    for (const auto& r : records) {
        out += detail::csv_field(r.graph) + ',' + detail::csv_field(r.kind) + ',' +
               detail::csv_field(r.invariant) + ',' + detail::csv_field(r.source) + ',' +
               std::to_string(r.closed_value) + ',' + std::to_string(r.oracle_value) + ',' +
               verdict_name(r.verdict) + '\n';
    }
    return out;
}

inline std::string to_csv(const IndexReport& r) {
    std::string out = "n,m,M1,M2,F,Fbar,ReZG3,Xi4\n";
    out += std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + std::to_string(r.m1) + ',' +
           std::to_string(r.m2) + ',' + std::to_string(r.f) + ',' + std::to_string(r.f_coindex) +
           ',' + std::to_string(r.rezg3) + ',' + std::to_string(r.xi4) + '\n';
    return out;
}

}  // namespace graphdex

#endif  // GRAPHDEX_VERIFIER_HPP
