// Command line for the library: Weyl-group word reports, rewrite traces,
// cohomology reports with optional cross-check, complex export, and the
// built-in verification suite.
//
// Exit codes: 0 success, 1 verification/internal failure, 2 usage error,
// 3 enumeration bound exceeded, 4 rewrite budget exhausted.

#include "dlcoh/acceptance.hpp"
#include "dlcoh/json_io.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>

namespace {

using namespace dlcoh;

std::vector<int> parse_word_csv(const std::string& csv) {
    std::vector<int> letters;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t comma = csv.find(',', pos);
        std::string tok = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (!tok.empty())
            letters.push_back(std::stoi(tok));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return letters;
}

std::string one_line(const WeylElement& w) {
    std::string out;
    for (std::size_t i = 0; i < w.images.size(); ++i)
        out += (i ? "," : "") + std::to_string(w.images[i]);
    return out;
}

std::string set_str(const GeneratorSet& I) {
    std::string out = "{";
    for (std::size_t i = 0; i < I.indices.size(); ++i)
        out += (i ? "," : "") + std::to_string(I.indices[i]);
    return out + "}";
}

int cmd_weyl(int n, const std::string& word_csv, int bound, const std::string& format) {
    std::vector<int> letters = parse_word_csv(word_csv);
    WeylElement w = from_word(n, letters);
    GeneratorSet supp = support(w);
    auto mins = cmin(w, bound);
    bool in_min = std::count(mins.begin(), mins.end(), w) > 0;
    auto [reduced, chain] = gp_reduce(w, bound);

    bool height_defined = true;
    int ht = 0;
    try {
        ht = height(w, bound);
    } catch (const std::logic_error&) {
        height_defined = false;
    }

    if (format == "json") {
        json chain_json = json::array();
        for (const auto& st : chain.steps)
            chain_json.push_back(
                {{"generator", st.generator}, {"result", st.result.images}});
        json out = {{"n", n},
                    {"word", letters},
                    {"one_line", w.images},
                    {"length", length(w)},
                    {"support", supp.indices},
                    {"height", height_defined ? json(ht) : json(nullptr)},
                    {"in_cmin", in_min},
                    {"cmin_representative", reduced.images},
                    {"chain", chain_json}};
        std::cout << out.dump(2) << std::endl;
        return 0;
    }
    std::cout << "element " << one_line(w) << " (n=" << n << ")\n";
    std::cout << "length " << length(w) << "\n";
    std::cout << "support " << set_str(supp) << "\n";
    if (height_defined)
        std::cout << "height " << ht << "\n";
    else
        std::cout << "height undefined (no single-conjugation length drop)\n";
    std::cout << "in_cmin " << (in_min ? "yes" : "no") << "\n";
    std::cout << "cmin_representative " << one_line(reduced) << "\n";
    for (const auto& st : chain.steps)
        std::cout << "conjugate_by " << st.generator << " -> " << one_line(st.result) << "\n";
    return 0;
}

int cmd_reduce(int n, const std::string& word_csv, std::size_t budget,
               const std::string& format) {
    Word w(parse_word_csv(word_csv), n);
    if (w.empty()) {
        std::cerr << "reduce: the word must be nonempty" << std::endl;
        return 2;
    }
    RewriteTrace trace = reduce_to_coxeter(w, budget);
    if (format == "json")
        std::cout << trace_to_json(trace).dump(2) << std::endl;
    else {
        std::cout << trace_lines(trace);
        std::cout << "result " << word_str(trace.result) << (trace.completed ? "" : " (partial)")
                  << "\n";
    }
    return trace.completed ? 0 : 4;
}

int cmd_cohomology(int n, long long q, const std::string& word_csv, const std::string& coeff,
                   long long p, long long m, const std::string& variety, bool do_cross,
                   const std::string& format) {
    Word w(parse_word_csv(word_csv), n);
    CohomologyReport rep;
    if (coeff == "structure" || coeff == "canonical") {
        if (variety == "open") {
            std::cerr << "cohomology: " << coeff << " coefficients live on the compactification"
                      << std::endl;
            return 2;
        }
        if (do_cross) {
            std::cerr << "cohomology: --cross-check needs modp or zp coefficients" << std::endl;
            return 2;
        }
        rep = coeff == "structure" ? structure_sheaf_cohomology(w, n, q)
                                   : canonical_sheaf_cohomology(w, n, q);
    } else if (coeff == "modp" || coeff == "zp") {
        if (p <= 0) {
            std::cerr << "cohomology: --p is required for " << coeff << std::endl;
            return 2;
        }
        long long mm = coeff == "zp" ? kInfiniteM : m;
        if (coeff == "modp" && mm < 1) {
            std::cerr << "cohomology: --m must be >= 1 for modp" << std::endl;
            return 2;
        }
        rep = variety == "open" ? compact_support_cohomology(w, n, q, p, mm)
                                : etale_constant_cohomology(w, n, q, p, mm);
        if (do_cross)
            rep.cross_checked = cross_check(w, n, q, p, mm == kInfiniteM ? 1 : mm);
    } else {
        std::cerr << "cohomology: unknown --coeff " << coeff << std::endl;
        return 2;
    }

    if (format == "json") {
        std::cout << report_to_json(rep).dump(2) << std::endl;
    } else {
        std::cout << "variety " << variety_name(rep.variety) << "\n";
        std::cout << "word " << word_str(rep.word) << " n=" << n << " q=" << q << "\n";
        for (const auto& [deg, desc] : rep.entries)
            std::cout << "H^" << deg << " " << rep_name(desc.kind) << " parabolic "
                      << set_str(desc.parabolic) << " dimension " << desc.dimension.to_string()
                      << "\n";
        std::cout << "all other degrees vanish\n";
        if (do_cross)
            std::cout << "cross_checked " << (rep.cross_checked ? "true" : "false") << "\n";
    }
    if (do_cross && !rep.cross_checked)
        return 1;
    return 0;
}

int cmd_complex(int n, long long q, const std::string& word_csv, bool with_homology,
                long long bound, const std::string& format) {
    Word w(parse_word_csv(word_csv), n);
    ChainComplex cx = build_stseq(w, n, q, RingTag::integers(), bound);
    if (format == "json") {
        json out = complex_to_json(cx);
        if (with_homology) {
            HomologyResult h = homology(cx);
            json degrees = json::array();
            for (const auto& d : h.degrees) {
                json tors = json::array();
                for (const auto& t : d.torsion)
                    tors.push_back(bigint_to_json(t));
                degrees.push_back(
                    {{"degree", d.degree}, {"free_rank", d.free_rank}, {"torsion", tors}});
            }
            out["homology"] = {{"degrees", degrees},
                               {"d0_injective", h.d0_injective},
                               {"cokernel_rank", bigint_to_json(h.coker_rank)}};
        }
        std::cout << out.dump(2) << std::endl;
    } else {
        std::cout << complex_text(cx);
        if (with_homology) {
            HomologyResult h = homology(cx);
            for (const auto& d : h.degrees)
                std::cout << "H_" << d.degree << " free " << d.free_rank << " torsion "
                          << d.torsion.size() << "\n";
            std::cout << "d0_injective " << (h.d0_injective ? "yes" : "no") << "\n";
            std::cout << "cokernel_rank " << h.coker_rank.to_string() << "\n";
        }
    }
    return 0;
}

int cmd_verify(const std::string& scale, unsigned seed) {
    AcceptanceOptions opt;
    if (scale == "small")
        opt.scale = AcceptanceScale::Small;
    else if (scale == "full-desk")
        opt.scale = AcceptanceScale::FullDesk;
    else {
        std::cerr << "verify: unknown scale '" << scale << "' (small|full-desk)" << std::endl;
        return 2;
    }
    opt.seed = seed;
    opt.out = &std::cout;
    auto results = run_acceptance(opt);
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Weyl-word rewriting, flag counting and induced-module cohomology"};
    app.require_subcommand(1);

    int n = 2;
    long long q = 2, p = 0, m = 1, bound = dlcoh::kDefaultCosetBound;
    int rank_bound = dlcoh::kDefaultRankBound;
    std::size_t budget = dlcoh::kDefaultRewriteBudget;
    std::string word, coeff = "structure", variety = "compact", format = "text";
    std::string scale = "small";
    unsigned seed = 0;
    bool do_cross = false, with_homology = false;

    CLI::App* weyl = app.add_subcommand("weyl", "length, support, height, class reduction");
    weyl->add_option("--n", n, "rank (group is S_n)")->required();
    weyl->add_option("--word", word, "comma-separated letters, empty for the identity");
    weyl->add_option("--bound", rank_bound, "brute-force rank bound");
    weyl->add_option("--format", format, "text|json");

    CLI::App* reduce = app.add_subcommand("reduce", "rewrite a word to distinct letters");
    reduce->add_option("--n", n, "rank")->required();
    reduce->add_option("--word", word, "comma-separated letters")->required();
    reduce->add_option("--budget", budget, "step budget");
    reduce->add_option("--format", format, "text|json");

    CLI::App* coh = app.add_subcommand("cohomology", "structured cohomology report");
    coh->add_option("--n", n, "rank")->required();
    coh->add_option("--q", q, "prime power")->required();
    coh->add_option("--word", word, "comma-separated letters")->required();
    coh->add_option("--coeff", coeff, "structure|modp|zp|canonical");
    coh->add_option("--p", p, "coefficient characteristic");
    coh->add_option("--m", m, "exponent for modp");
    coh->add_option("--variety", variety, "compact|open");
    coh->add_flag("--cross-check", do_cross, "recompute via the induced-module complex");
    coh->add_option("--format", format, "text|json");

    CLI::App* cpx = app.add_subcommand("complex", "export the induced-module complex");
    cpx->add_option("--n", n, "rank")->required();
    cpx->add_option("--q", q, "prime power")->required();
    cpx->add_option("--word", word, "comma-separated distinct letters")->required();
    cpx->add_flag("--homology", with_homology, "append homology over Z");
    cpx->add_option("--bound", bound, "coset enumeration bound");
    cpx->add_option("--format", format, "text|json");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--scale", scale, "small|full-desk")->required();
    verify->add_option("--seed", seed, "seed for randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (weyl->parsed())
            return cmd_weyl(n, word, rank_bound, format);
        if (reduce->parsed())
            return cmd_reduce(n, word, budget, format);
        if (coh->parsed())
            return cmd_cohomology(n, q, word, coeff, p, m, variety, do_cross, format);
        if (cpx->parsed())
            return cmd_complex(n, q, word, with_homology, bound, format);
        if (verify->parsed())
            return cmd_verify(scale, seed);
    } catch (const dlcoh::BoundExceeded& e) {
        std::cerr << e.what() << std::endl;
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << std::endl;
        return 1;
    }
    return 2;
}
