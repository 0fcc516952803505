#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dlcoh/engine.hpp"
#include "dlcoh/json_io.hpp"

using namespace dlcoh;

namespace {

Word w_(std::initializer_list<int> letters, int n) {
    return Word(std::vector<int>(letters), n);
}

std::vector<Word> all_words(int n, int max_len) {
    std::vector<Word> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self) -> void {
        if (!cur.empty())
            out.push_back(Word(std::vector<int>(cur), n));
        if (static_cast<int>(cur.size()) == max_len)
            return;
        for (int s = 1; s < n; ++s) {
            cur.push_back(s);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

}  // namespace

TEST_CASE("structure sheaf reports") {
    auto full = structure_sheaf_cohomology(w_({1, 2}, 3), 3, 2);
    CHECK(full.nonzero_degree() == 0);
    CHECK(full.entry_at(0).kind == RepKind::InducedTrivial);
    CHECK(full.entry_at(0).dimension == BigInt(1));
    CHECK(full.entry_at(1).kind == RepKind::Zero);

    auto seven = structure_sheaf_cohomology(w_({1}, 3), 3, 2);
    CHECK(seven.entry_at(0).dimension == BigInt(7));

    // repeated letters change nothing in degree 0: the support decides
    auto rep = structure_sheaf_cohomology(w_({1, 2, 1}, 3), 3, 2);
    CHECK(rep.entry_at(0).dimension == BigInt(1));

    CHECK_THROWS_AS(structure_sheaf_cohomology(Word({}, 3), 3, 2), std::invalid_argument);
}

TEST_CASE("etale constant coefficient reports") {
    // w = [1] in rank 2 has full support, so degree 0 carries rank [G:G] = 1;
    // the rank-3 module ind_B 1 only shows up as the last complex term
    auto r = etale_constant_cohomology(w_({1}, 2), 2, 2, 2, 1);
    CHECK(r.nonzero_degree() == 0);
    CHECK(r.entry_at(0).dimension == BigInt(1));
    CHECK(r.coefficients.kind == CoefficientKind::ModPm);

    auto proper = etale_constant_cohomology(w_({1}, 3), 3, 2, 2, 1);
    CHECK(proper.entry_at(0).dimension == BigInt(7));

    auto full = etale_constant_cohomology(w_({1, 2}, 3), 3, 2, 2, 5);
    CHECK(full.entry_at(0).dimension == BigInt(1));

    auto zp = etale_constant_cohomology(w_({1}, 3), 3, 2, 2, kInfiniteM);
    CHECK(zp.coefficients.kind == CoefficientKind::Zp);
    CHECK(zp.entry_at(0).dimension == BigInt(7));

    // rejected: coefficients away from the defining characteristic
    CHECK_THROWS_AS(etale_constant_cohomology(w_({1}, 2), 2, 2, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(etale_constant_cohomology(w_({1}, 2), 2, 4, 3, 1), std::invalid_argument);
}

TEST_CASE("compact support reports") {
    auto r = compact_support_cohomology(w_({1}, 2), 2, 2, 2, 1);
    CHECK(r.nonzero_degree() == 1);
    CHECK(r.entry_at(1).kind == RepKind::InducedSteinberg);
    CHECK(r.entry_at(1).dimension == BigInt(2));

    auto r3 = compact_support_cohomology(w_({1}, 3), 3, 2, 2, 1);
    CHECK(r3.entry_at(1).dimension == BigInt(14));

    auto r12 = compact_support_cohomology(w_({1, 2}, 3), 3, 2, 2, 1);
    CHECK(r12.nonzero_degree() == 2);
    CHECK(r12.entry_at(2).dimension == BigInt(8));

    // the top degree is the F+ length of the input word, even non-reduced;
    // the dimension only sees the support
    auto rep = compact_support_cohomology(w_({1, 1}, 2), 2, 2, 2, 1);
    CHECK(rep.nonzero_degree() == 2);
    CHECK(rep.entry_at(2).dimension == BigInt(2));
    REQUIRE(rep.trace.has_value());
    CHECK(rep.trace->completed);
    CHECK(rep.trace->result == w_({1}, 2));
}

TEST_CASE("canonical sheaf reports and Serre pairing") {
    auto full = canonical_sheaf_cohomology(w_({1, 2}, 3), 3, 2);
    CHECK(full.nonzero_degree() == 2);
    CHECK(full.entry_at(2).kind == RepKind::InducedTrivial);
    CHECK(full.entry_at(2).dimension == BigInt(1));

    auto seven = canonical_sheaf_cohomology(w_({1}, 3), 3, 2);
    CHECK(seven.nonzero_degree() == 1);
    CHECK(seven.entry_at(1).dimension == BigInt(7));

    for (int n = 2; n <= 4; ++n)
        for (long long q : {2, 3})
            for (const auto& w : all_words(n, 4)) {
                auto omega = canonical_sheaf_cohomology(w, n, q);
                auto o = structure_sheaf_cohomology(w, n, q);
                CHECK(omega.entry_at(static_cast<int>(w.length())).dimension ==
                      o.entry_at(0).dimension);
                CHECK(omega.nonzero_degree() == static_cast<int>(w.length()));
            }
}

TEST_CASE("irreducible component counts") {
    CHECK(irreducible_components(w_({1, 2}, 3), 3, 2) == BigInt(1));
    CHECK(irreducible_components(w_({1}, 3), 3, 2) == BigInt(7));
    CHECK(irreducible_components(w_({2}, 4), 4, 2) == BigInt(105));

    // depends only on the support
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : all_words(n, 4)) {
            Word sorted_supp(support(w).indices, n);
            CHECK(irreducible_components(w, n, 2) == irreducible_components(sorted_supp, n, 2));
        }
}

TEST_CASE("report dimensions are invariant along rewrite traces") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : all_words(n, 5)) {
            auto trace = reduce_to_coxeter(w);
            for (const auto& st : trace.steps) {
                if (st.kind == RewriteKind::C || st.kind == RewriteKind::K ||
                    st.kind == RewriteKind::R) {
                    CHECK(structure_sheaf_cohomology(st.before, n, 2).entry_at(0).dimension ==
                          structure_sheaf_cohomology(st.after, n, 2).entry_at(0).dimension);
                } else {
                    // contraction: H0 stays, the compact-support degree drops by one
                    CHECK(structure_sheaf_cohomology(st.before, n, 2).entry_at(0).dimension ==
                          structure_sheaf_cohomology(st.after, n, 2).entry_at(0).dimension);
                    auto before = compact_support_cohomology(st.before, n, 2, 2, 1);
                    auto after = compact_support_cohomology(st.after, n, 2, 2, 1);
                    CHECK(before.nonzero_degree() == after.nonzero_degree() + 1);
                    CHECK(before.entry_at(before.nonzero_degree()).dimension ==
                          after.entry_at(after.nonzero_degree()).dimension);
                }
            }
        }
}

TEST_CASE("mod p^m ranks are independent of m, including Z_p") {
    for (int n = 2; n <= 3; ++n)
        for (const auto& w : all_words(n, 3)) {
            BigInt base = etale_constant_cohomology(w, n, 2, 2, 1).entry_at(0).dimension;
            for (long long m : {2, 3})
                CHECK(etale_constant_cohomology(w, n, 2, 2, m).entry_at(0).dimension == base);
            CHECK(etale_constant_cohomology(w, n, 2, 2, kInfiniteM).entry_at(0).dimension ==
                  base);

            BigInt top = compact_support_cohomology(w, n, 2, 2, 1)
                             .entry_at(static_cast<int>(w.length()))
                             .dimension;
            for (long long m : {2, 3})
                CHECK(compact_support_cohomology(w, n, 2, 2, m)
                          .entry_at(static_cast<int>(w.length()))
                          .dimension == top);
        }
}

TEST_CASE("spectral pages") {
    auto [e1, e2] = spectral_pages(w_({1, 2}, 3), 3, 2, 2, 1);
    CHECK(e1.page_index == 1);
    CHECK(e1.at(0, 0) == BigInt(1));
    CHECK(e1.at(1, 0) == BigInt(14));
    CHECK(e1.at(2, 0) == BigInt(21));
    CHECK(e1.at(0, 1) == BigInt(0));
    CHECK(e2.grid.size() == 1);
    CHECK(e2.at(2, 0) == BigInt(8));

    auto [f1, f2] = spectral_pages(w_({1}, 2), 2, 2, 2, 1);
    CHECK(f1.at(0, 0) == BigInt(1));
    CHECK(f1.at(1, 0) == BigInt(3));
    CHECK(f2.at(1, 0) == BigInt(2));

    // Euler characteristic of the E1 row telescopes to the top dimension
    for (long long q : {2, 3}) {
        auto [g1, g2] = spectral_pages(w_({2, 1}, 3), 3, q, q, 1);
        BigInt euler(0);
        for (int i = 0; i <= 2; ++i)
            euler += (i % 2 == 0) ? g1.at(i, 0) : -g1.at(i, 0);
        CHECK(euler == g2.at(2, 0));
    }

    CHECK_THROWS_AS(spectral_pages(w_({1, 1}, 2), 2, 2, 2, 1), std::invalid_argument);
}

TEST_CASE("cross_check") {
    CHECK(cross_check(w_({1, 2}, 3), 3, 2, 2, 1));
    CHECK(cross_check(w_({1}, 2), 2, 3, 3, 2));
    CHECK(cross_check(w_({1, 2, 3}, 4), 4, 2, 2, 1));
    // repeated letters route through the support reduction
    CHECK(cross_check(w_({1, 2, 1}, 3), 3, 2, 2, 1));
    CHECK_THROWS_AS(cross_check(w_({1}, 2), 2, 2, 3, 1), std::invalid_argument);
}

TEST_CASE("report JSON round-trips") {
    std::vector<CohomologyReport> reps = {
        structure_sheaf_cohomology(w_({1, 2}, 3), 3, 2),
        etale_constant_cohomology(w_({1}, 2), 2, 2, 2, 3),
        etale_constant_cohomology(w_({1}, 2), 2, 2, 2, kInfiniteM),
        compact_support_cohomology(w_({1, 2, 1}, 3), 3, 2, 2, 1),   // carries a trace
        canonical_sheaf_cohomology(w_({2}, 3), 3, 4),
    };
    reps[0].cross_checked = true;
    for (const auto& rep : reps) {
        json j = report_to_json(rep);
        CohomologyReport back = report_from_json(json::parse(j.dump()));
        CHECK(back == rep);
    }
}

TEST_CASE("complex JSON mirror") {
    ChainComplex cx = build_stseq(w_({1}, 2), 2, 2);
    json j = complex_to_json(cx);
    CHECK(j["n"] == 2);
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][1]["rank"] == 3);
    CHECK(j["boundaries"][0]["rows"] == 3);
    CHECK(j["boundaries"][0]["entries"].size() == 3);
}
