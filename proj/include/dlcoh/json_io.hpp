#pragma once

// JSON forms of reports, traces and complexes (nlohmann/json).

#include "dlcoh/engine.hpp"

#include "json.hpp"

namespace dlcoh {

using json = nlohmann::json;

inline json bigint_to_json(const BigInt& v) {
    if (v.fits_int64())
        return json(v.to_int64());
    return json(v.to_string());
}

inline BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer())
        return BigInt(j.get<long long>());
    return BigInt(j.get<std::string>());
}

inline const char* variety_name(VarietyKind v) {
    return v == VarietyKind::Compactified ? "compactified" : "open_compact_support";
}

inline const char* coefficient_name(CoefficientKind k) {
    switch (k) {
        case CoefficientKind::StructureSheaf: return "structure_sheaf";
        case CoefficientKind::ModPm: return "mod_pm";
        case CoefficientKind::Zp: return "z_p";
        case CoefficientKind::CanonicalSheaf: return "canonical_sheaf";
    }
    return "?";
}

inline const char* rep_name(RepKind k) {
    switch (k) {
        case RepKind::Zero: return "zero";
        case RepKind::InducedTrivial: return "induced_trivial";
        case RepKind::InducedSteinberg: return "induced_steinberg";
    }
    return "?";
}

inline json trace_to_json(const RewriteTrace& t) {
    json steps = json::array();
    for (const auto& st : t.steps)
        steps.push_back({{"kind", kind_name(st.kind)},
                         {"position", st.position},
                         {"before", st.before.letters},
                         {"after", st.after.letters},
                         {"justification", st.justification}});
    return {{"start", t.start.letters},
            {"steps", steps},
            {"result", t.result.letters},
            {"completed", t.completed},
            {"budget_used", t.budget_used}};
}

inline RewriteKind kind_from_name(const std::string& name) {
    for (RewriteKind k : {RewriteKind::C, RewriteKind::K, RewriteKind::R,
                          RewriteKind::ContractLeft, RewriteKind::ContractRight})
        if (name == kind_name(k))
            return k;
    throw std::invalid_argument("unknown rewrite kind: " + name);
}

inline RewriteTrace trace_from_json(const json& j, int n) {
    RewriteTrace t;
    t.start = Word(j.at("start").get<std::vector<int>>(), n);
    for (const auto& js : j.at("steps")) {
        RewriteStep st;
        st.kind = kind_from_name(js.at("kind").get<std::string>());
        st.position = js.at("position").get<int>();
        st.before = Word(js.at("before").get<std::vector<int>>(), n);
        st.after = Word(js.at("after").get<std::vector<int>>(), n);
        st.justification = js.at("justification").get<std::string>();
        t.steps.push_back(std::move(st));
    }
    t.result = Word(j.at("result").get<std::vector<int>>(), n);
    t.completed = j.at("completed").get<bool>();
    t.budget_used = j.at("budget_used").get<std::size_t>();
    return t;
}

inline json report_to_json(const CohomologyReport& rep) {
    json coeff = {{"kind", coefficient_name(rep.coefficients.kind)}};
    if (rep.coefficients.kind == CoefficientKind::ModPm) {
        coeff["p"] = rep.coefficients.p;
        coeff["m"] = rep.coefficients.m;
    } else if (rep.coefficients.kind == CoefficientKind::Zp) {
        coeff["p"] = rep.coefficients.p;
    }
    json entries = json::object();
    for (const auto& [deg, desc] : rep.entries)
        entries[std::to_string(deg)] = {{"kind", rep_name(desc.kind)},
                                        {"parabolic", desc.parabolic.indices},
                                        {"dimension", bigint_to_json(desc.dimension)}};
    json out = {{"variety", variety_name(rep.variety)},
                {"word", rep.word.letters},
                {"n", rep.n},
                {"q", rep.q},
                {"coefficients", coeff},
                {"entries", entries},
                {"cross_checked", rep.cross_checked}};
    if (rep.trace)
        out["trace"] = trace_to_json(*rep.trace);
    if (!rep.notes.empty())
        out["notes"] = rep.notes;
    return out;
}

inline CohomologyReport report_from_json(const json& j) {
    CohomologyReport rep;
    std::string variety = j.at("variety").get<std::string>();
    if (variety == "compactified")
        rep.variety = VarietyKind::Compactified;
    else if (variety == "open_compact_support")
        rep.variety = VarietyKind::OpenCompactSupport;
    else
        throw std::invalid_argument("unknown variety: " + variety);
    rep.n = j.at("n").get<int>();
    rep.q = j.at("q").get<long long>();
    rep.word = Word(j.at("word").get<std::vector<int>>(), rep.n);

    const json& coeff = j.at("coefficients");
    std::string kind = coeff.at("kind").get<std::string>();
    if (kind == "structure_sheaf")
        rep.coefficients = CoefficientTag::structure_sheaf();
    else if (kind == "mod_pm")
        rep.coefficients =
            CoefficientTag::mod_pm(coeff.at("p").get<long long>(), coeff.at("m").get<long long>());
    else if (kind == "z_p")
        rep.coefficients = CoefficientTag::z_p(coeff.at("p").get<long long>());
    else if (kind == "canonical_sheaf")
        rep.coefficients = CoefficientTag::canonical_sheaf();
    else
        throw std::invalid_argument("unknown coefficient kind: " + kind);

    for (const auto& [key, val] : j.at("entries").items()) {
        RepDescription desc;
        std::string rk = val.at("kind").get<std::string>();
        desc.kind = rk == "induced_trivial"
                        ? RepKind::InducedTrivial
                        : (rk == "induced_steinberg" ? RepKind::InducedSteinberg : RepKind::Zero);
        desc.parabolic = GeneratorSet(val.at("parabolic").get<std::vector<int>>());
        desc.dimension = bigint_from_json(val.at("dimension"));
        rep.entries[std::stoi(key)] = std::move(desc);
    }
    rep.cross_checked = j.at("cross_checked").get<bool>();
    if (j.contains("trace"))
        rep.trace = trace_from_json(j.at("trace"), rep.n);
    if (j.contains("notes"))
        rep.notes = j.at("notes").get<std::vector<std::string>>();
    return rep;
}

inline json complex_to_json(const ChainComplex& cx) {
    json terms = json::array();
    for (const auto& term : cx.terms) {
        json blocks = json::array();
        for (const auto& b : term.blocks)
            blocks.push_back({{"positions", b.positions},
                              {"letters", b.subword.letters},
                              {"support", b.supp.indices},
                              {"cosets", b.cosets}});
        terms.push_back({{"degree", term.degree}, {"rank", term.rank}, {"blocks", blocks}});
    }
    json boundaries = json::array();
    for (std::size_t i = 0; i < cx.boundaries.size(); ++i) {
        const IntMatrix& d = cx.boundaries[i];
        json entries = json::array();
        for (int r = 0; r < d.rows; ++r)
            for (int c = 0; c < d.cols; ++c)
                if (!d.at(r, c).is_zero())
                    entries.push_back({r, c, bigint_to_json(d.at(r, c))});
        boundaries.push_back({{"index", static_cast<int>(i)},
                              {"rows", d.rows},
                              {"cols", d.cols},
                              {"entries", entries}});
    }
    json ring = {{"name", cx.ring.str()}, {"modular", cx.ring.modular}};
    if (cx.ring.modular) {
        ring["p"] = cx.ring.p;
        ring["m"] = cx.ring.m;
    }
    return {{"n", cx.n},
            {"q", cx.q},
            {"word", cx.word.letters},
            {"ring", ring},
            {"terms", terms},
            {"boundaries", boundaries}};
}

}  // namespace dlcoh
