#include "cli.hpp"

#include <charconv>
#include <optional>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "contin/contin.hpp"

namespace contin::cli {

namespace {

std::uint64_t parse_positive(const std::string& text, const std::string& what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || v == 0) {
        throw ValidationError("invalid " + what + " '" + text + "': expected a positive integer");
    }
    return v;
}

/// Alphabet from an explicit list, or from --lacunary l,s --low b_1,..,b_t.
struct AlphabetArgs {
    std::string lacunary;
    std::string low;

    bool lacunary_given() const { return !lacunary.empty() || !low.empty(); }

    Alphabet resolve(const std::optional<std::string>& explicit_list) const {
        if (!lacunary_given()) {
            if (!explicit_list) throw ValidationError("an alphabet is required");
            return parse_alphabet(*explicit_list);
        }
        if (explicit_list) throw ValidationError("give either an explicit alphabet or --lacunary/--low, not both");
        const auto ls = parse_uint_list(lacunary, "--lacunary value");
        if (ls.size() != 2) throw ValidationError("--lacunary expects 'l,s'");
        return Alphabet::lacunary(static_cast<unsigned>(ls[0]), static_cast<unsigned>(ls[1]),
                                  parse_uint_list(low, "--low letter"));
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--lacunary", lacunary, "Lacunary shape 'l,s' (with --low)");
        cmd->add_option("--low", low, "Low letters b_1,..,b_t of a lacunary alphabet");
    }
};

/// Splits the positionals [alphabet] parikh; --equi m replaces the Parikh vector.
std::pair<Alphabet, ParikhVector> resolve_class(const AlphabetArgs& alpha, const std::vector<std::string>& pos,
                                                std::uint64_t equi) {
    const std::size_t want = (alpha.lacunary_given() ? 0 : 1) + (equi ? 0 : 1);
    if (pos.size() != want) {
        throw ValidationError("expected " + std::to_string(want) + " positional argument(s), got " +
                              std::to_string(pos.size()));
    }
    std::optional<std::string> explicit_alphabet;
    if (!alpha.lacunary_given()) explicit_alphabet = pos.front();
    Alphabet alphabet = alpha.resolve(explicit_alphabet);
    ParikhVector parikh = equi ? ParikhVector::equipartitioned(alphabet.size(), static_cast<Count>(equi))
                               : parse_parikh(pos.back());
    require_aligned(alphabet, parikh);
    return {std::move(alphabet), std::move(parikh)};
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const auto m = parse_positive(text, "--m-range");
        return {m, m};
    }
    const auto lo = parse_positive(text.substr(0, dots), "--m-range start");
    const auto hi = parse_positive(text.substr(dots + 2), "--m-range end");
    if (hi < lo) throw ValidationError("--m-range end precedes start");
    return {lo, hi};
}

CensusOptions census_options(const RunConfig& cfg) {
    CensusOptions o;
    o.workers = cfg.workers;
    o.enumeration_limit = cfg.enumeration_limit;
    o.witness_top_k = cfg.witness_top_k;
    return o;
}

Word random_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len, Letter max_letter) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<Letter> letter(1, max_letter);
    std::vector<Letter> w(len(rng));
    for (auto& x : w) x = letter(rng);
    return Word(std::move(w));
}

/// Randomized identity checks between independent evaluation routes.
int run_selfcheck(const RunConfig& cfg, std::uint64_t cases, std::ostream& out) {
    std::mt19937_64 rng(cfg.seed);
    std::uint64_t reversal = 0, matrix = 0, split = 0, doubling = 0;
    for (std::uint64_t c = 0; c < cases; ++c) {
        const Word w = random_word(rng, 1, 12, 9);
        reversal += continuant(w) == continuant(w.reversed());
        matrix += continuant_matrix(w) == continuant(w);
        bool split_ok = true, doubling_ok = true;
        for (std::size_t j = 1; j < w.size(); ++j) {
            const auto sides = split_identity(w, j);
            split_ok = split_ok && sides.lhs == sides.rhs;
            const bool degenerate = w.size() == 2 && w[0] == 1 && w[1] == 1;
            doubling_ok = doubling_ok && (degenerate || doubling_bound_check(w, j));
        }
        split += split_ok;
        doubling += doubling_ok;
    }
    auto line = [&](const char* name, std::uint64_t ok) {
        out << (ok == cases ? "PASS " : "FAIL ") << name << ' ' << ok << '/' << cases << '\n';
    };
    out << "seed " << cfg.seed << '\n';
    line("reversal_invariance", reversal);
    line("matrix_agreement", matrix);
    line("split_identity", split);
    line("doubling_bound", doubling);
    return reversal == cases && matrix == cases && split == cases && doubling == cases ? exit_ok : exit_failure;
}

}  // namespace

PrecisionPolicy parse_precision(const std::string& text) {
    PrecisionPolicy p;
    const auto slash = text.find('/');
    p.initial_bits = static_cast<unsigned>(parse_positive(text.substr(0, slash), "--precision"));
    if (slash != std::string::npos) {
        p.max_bits = static_cast<unsigned>(parse_positive(text.substr(slash + 1), "--precision maximum"));
    } else {
        p.max_bits = std::max(p.max_bits, p.initial_bits);
    }
    if (p.initial_bits < 2 || p.max_bits < p.initial_bits) {
        throw ValidationError("--precision requires 2 <= initial <= max bits");
    }
    return p;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact regular continuants, extremal arrangements and multiplicity censuses", "contin"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string precision_text = "128/4096";
    std::string format_text = "plain";
    app.add_option("--workers", cfg.workers, "Worker threads (0: machine parallelism)")->envname("CONTIN_WORKERS");
    app.add_option("--limit", cfg.enumeration_limit, "Largest class size (up to reversal) to enumerate")
        ->envname("CONTIN_LIMIT")
        ->check(CLI::PositiveNumber);
    app.add_option("--precision", precision_text, "Certified-real bits, 'initial' or 'initial/max'")
        ->envname("CONTIN_PRECISION");
    app.add_option("--format", format_text, "json, csv or plain")->envname("CONTIN_FORMAT");
    app.add_option("--top-k", cfg.witness_top_k, "Multiplicities with witnesses in census reports")
        ->envname("CONTIN_TOP_K");
    app.add_option("--seed", cfg.seed, "Seed for randomized checks")->envname("CONTIN_SEED");

    std::string word_text;
    auto* cmd_continuant = app.add_subcommand("continuant", "Print K(w) for a comma-separated word");
    cmd_continuant->add_option("word", word_text, "Word, e.g. 2,1,1,2 (empty string: empty word)")->required();

    std::vector<std::string> wmax_pos;
    AlphabetArgs wmax_alpha;
    bool wmax_verify = false;
    std::uint64_t wmax_equi = 0;
    auto* cmd_wmax = app.add_subcommand("wmax", "Print the K-maximizing arrangement of a class");
    cmd_wmax->add_option("args", wmax_pos, "[alphabet] parikh");
    cmd_wmax->add_flag("--verify", wmax_verify, "Check against the brute-force argmax");
    cmd_wmax->add_option("--equi", wmax_equi, "Equipartitioned class with every count m");
    wmax_alpha.attach(cmd_wmax);

    std::vector<std::string> census_pos;
    AlphabetArgs census_alpha;
    std::uint64_t census_equi = 0;
    auto* cmd_census = app.add_subcommand("census", "Exact multiset of continuant values of a class");
    cmd_census->add_option("args", census_pos, "[alphabet] parikh");
    cmd_census->add_option("--equi", census_equi, "Equipartitioned class with every count m");
    census_alpha.attach(cmd_census);

    unsigned bt = 0, bl = 0, bs = 0;
    std::uint64_t bm = 1;
    bool find_admissible = false;
    auto* cmd_bounds = app.add_subcommand("bounds", "Counting bounds and admissibility thresholds");
    cmd_bounds->add_option("--t", bt, "Number of low letters t")->required();
    cmd_bounds->add_option("--l", bl, "Gap end l")->required();
    cmd_bounds->add_option("--s", bs, "Top letter s");
    cmd_bounds->add_option("--m", bm, "Occurrences per letter m");
    cmd_bounds->add_flag("--find-admissible", find_admissible, "Also search the least admissible s'");

    std::optional<std::string> explore_alphabet;
    AlphabetArgs explore_alpha;
    std::uint64_t target_mu = 0;
    std::string m_range;
    std::uint64_t budget = 0;
    auto* cmd_explore = app.add_subcommand("explore", "Search for words of large or exact multiplicity");
    cmd_explore->add_option("alphabet", explore_alphabet, "Alphabet, e.g. 1,2,3");
    cmd_explore->add_option("--target-mu", target_mu, "Target multiplicity");
    auto* range_opt = cmd_explore->add_option("--m-range", m_range, "Equipartitioned scan 'a..b'");
    auto* budget_opt = cmd_explore->add_option("--budget", budget, "Exact-multiplicity search class budget");
    range_opt->excludes(budget_opt);
    explore_alpha.attach(cmd_explore);

    std::uint64_t check_cases = 10000;
    auto* cmd_check = app.add_subcommand("selfcheck", "Randomized identity checks (uses --seed)");
    cmd_check->add_option("--cases", check_cases, "Number of random words");

    std::vector<std::string> raw = args;
    std::vector<char*> argv;
    std::string prog = "contin";
    argv.push_back(prog.data());
    for (auto& a : raw) argv.push_back(a.data());

    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp& e) {
            out << app.help();
            return exit_ok;
        } catch (const CLI::ParseError& e) {
            err << "error: " << e.what() << '\n';
            return exit_validation;
        }
        cfg.precision = parse_precision(precision_text);
        cfg.format = parse_output_format(format_text);
        const CensusOptions copts = census_options(cfg);

        if (*cmd_continuant) {
            const Word w = parse_word(word_text);
            const BigNat k = continuant(w);
            switch (cfg.format) {
                case OutputFormat::json:
                    out << nlohmann::ordered_json{{"word", format_word(w)}, {"value", to_decimal(k)}}.dump() << '\n';
                    break;
                case OutputFormat::csv:
                    out << "word,value\n" << csv_field(format_word(w)) << ',' << to_decimal(k) << '\n';
                    break;
                case OutputFormat::plain:
                    out << to_decimal(k) << '\n';
                    break;
            }
        } else if (*cmd_wmax) {
            const auto [alphabet, parikh] = resolve_class(wmax_alpha, wmax_pos, wmax_equi);
            const Word w = build_w_max(alphabet, parikh);
            std::optional<bool> verified;
            if (wmax_verify) verified = verify_wmax(alphabet, parikh, copts);
            switch (cfg.format) {
                case OutputFormat::json: {
                    nlohmann::ordered_json j{{"word", format_word(w)}, {"value", to_decimal(continuant(w))}};
                    if (verified) j["verified"] = *verified;
                    out << j.dump() << '\n';
                    break;
                }
                case OutputFormat::csv:
                    out << "word,value" << (verified ? ",verified" : "") << '\n'
                        << csv_field(format_word(w)) << ',' << to_decimal(continuant(w));
                    if (verified) out << ',' << (*verified ? "true" : "false");
                    out << '\n';
                    break;
                case OutputFormat::plain:
                    out << format_word(w) << '\n';
                    if (verified) out << "verified: " << (*verified ? "true" : "false") << '\n';
                    break;
            }
        } else if (*cmd_census) {
            const auto [alphabet, parikh] = resolve_class(census_alpha, census_pos, census_equi);
            out << render(run_census(alphabet, parikh, copts), cfg.format);
        } else if (*cmd_bounds) {
            if (bs == 0 && !find_admissible) throw ValidationError("bounds: give --s, --find-admissible, or both");
            if (bs != 0) out << render(bounds_report(bt, bl, bs, bm, cfg.precision), cfg.format);
            if (find_admissible) {
                const unsigned threshold = s0(bt, bl, cfg.precision);
                const unsigned admissible = smallest_admissible_s(bt, bl, cfg.precision);
                switch (cfg.format) {
                    case OutputFormat::json:
                        out << nlohmann::ordered_json{{"t", bt}, {"l", bl}, {"s0", threshold},
                                                      {"smallest_admissible_s", admissible}}
                                   .dump()
                            << '\n';
                        break;
                    case OutputFormat::csv:
                        out << "t,l,s0,smallest_admissible_s\n"
                            << bt << ',' << bl << ',' << threshold << ',' << admissible << '\n';
                        break;
                    case OutputFormat::plain:
                        out << "s0: " << threshold << "\nsmallest_admissible_s: " << admissible << '\n';
                        break;
                }
            }
        } else if (*cmd_explore) {
            const Alphabet alphabet = explore_alpha.resolve(explore_alphabet);
            if (!m_range.empty()) {
                const auto [lo, hi] = parse_range(m_range);
                std::vector<WitnessRecord> records;
                std::optional<LimitExceeded> stop;
                for (std::uint64_t m = lo; m <= hi && !stop; ++m) {
                    const auto parikh = ParikhVector::equipartitioned(alphabet.size(), static_cast<Count>(m));
                    try {
                        if (target_mu > 0) {
                            if (auto w = find_witness(alphabet, parikh, target_mu, copts)) records.push_back(*w);
                        } else {
                            auto entries = growing_multiplicity_scan(alphabet, m, m, copts);
                            records.push_back(entries.front().witness);
                        }
                    } catch (const LimitExceeded& e) {
                        stop = LimitExceeded("first infeasible m=" + std::to_string(m) + ": " + e.what(),
                                             e.class_size(), e.limit());
                    }
                }
                out << render(records, cfg.format);
                if (stop) {
                    err << "error: " << stop->what() << '\n';
                    return exit_limit;
                }
            } else if (budget_opt->count() > 0) {
                const auto result =
                    exact_multiplicity_search(alphabet, target_mu == 0 ? 2 : target_mu, budget, copts);
                out << render(result.records, cfg.format);
                err << "scanned " << result.classes_scanned << " classes over " << result.parikh_vectors_scanned
                    << " Parikh vectors; " << result.records.size() << " records"
                    << (result.budget_exhausted ? "; budget exhausted" : "") << '\n';
            } else {
                throw ValidationError("explore: give --m-range or --budget");
            }
        } else if (*cmd_check) {
            return run_selfcheck(cfg, check_cases, out);
        }
        return exit_ok;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return exit_validation;
    } catch (const LimitExceeded& e) {
        err << "error: " << e.what() << '\n';
        return exit_limit;
    } catch (const MemoryBudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return exit_limit;
    } catch (const PrecisionExhausted& e) {
        err << "error: " << e.what() << '\n';
        return exit_precision;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
}

}  // namespace contin::cli
