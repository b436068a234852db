#include "contin/report.hpp"

#include <sstream>

#include "contin/errors.hpp"

namespace contin {

using nlohmann::ordered_json;

OutputFormat parse_output_format(std::string_view name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "plain") return OutputFormat::plain;
    throw ValidationError("unknown output format '" + std::string(name) + "' (expected json, csv or plain)");
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

namespace {

ordered_json letters_json(std::span<const Letter> letters) {
    ordered_json out = ordered_json::array();
    for (auto x : letters) out.push_back(x);
    return out;
}

ordered_json counts_json(std::span<const Count> counts) {
    ordered_json out = ordered_json::array();
    for (auto x : counts) out.push_back(x);
    return out;
}

std::string spectrum_text(const std::map<std::uint64_t, std::uint64_t>& spectrum) {
    std::string out;
    for (const auto& [mu, count] : spectrum) {
        if (!out.empty()) out += ' ';
        out += std::to_string(mu) + ':' + std::to_string(count);
    }
    return out;
}

std::string rational_text(const Rational& q) { return q.get_str(10); }

std::string certified_text(const CertifiedReal& x) {
    return x.midpoint_decimal() + " +/- " + x.radius_decimal();
}

}  // namespace

ordered_json to_json(const CensusReport& r) {
    ordered_json out;
    out["n"] = r.length();
    out["alphabet"] = letters_json(r.alphabet.letters());
    out["parikh"] = counts_json(r.parikh.counts());
    out["N"] = to_decimal(r.class_size);
    out["P"] = to_decimal(r.distinct_values);
    ordered_json spectrum = ordered_json::array();
    for (const auto& [mu, count] : r.spectrum) spectrum.push_back({mu, count});
    out["spectrum"] = std::move(spectrum);
    out["max_multiplicity"] = r.max_multiplicity;
    out["max_value"] = to_decimal(r.max_value);
    out["min_value"] = to_decimal(r.min_value);
    ordered_json witnesses = ordered_json::array();
    for (const auto& group : r.witnesses) {
        ordered_json g;
        g["multiplicity"] = group.multiplicity;
        ordered_json values = ordered_json::array();
        for (const auto& vw : group.values) {
            ordered_json v;
            v["value"] = to_decimal(vw.value);
            ordered_json words = ordered_json::array();
            for (const auto& w : vw.words) words.push_back(format_word(w));
            v["words"] = std::move(words);
            values.push_back(std::move(v));
        }
        g["values"] = std::move(values);
        witnesses.push_back(std::move(g));
    }
    out["witnesses"] = std::move(witnesses);
    return out;
}

ordered_json to_json(const WitnessRecord& w) {
    ordered_json out;
    out["alphabet"] = letters_json(w.alphabet.letters());
    out["parikh"] = counts_json(w.parikh.counts());
    out["word"] = format_word(w.word);
    out["value"] = to_decimal(w.value);
    out["multiplicity"] = w.multiplicity;
    return out;
}

ordered_json to_json(const CertifiedReal& x) {
    ordered_json out;
    out["midpoint"] = x.midpoint_decimal();
    out["radius"] = x.radius_decimal();
    out["precision_bits"] = x.precision();
    return out;
}

ordered_json to_json(const BoundsReport& r) {
    ordered_json out;
    out["t"] = r.t;
    out["l"] = r.l;
    out["s"] = r.s;
    out["m"] = r.m;
    out["p_upper"] = to_decimal(r.p_upper);
    out["n_lower"] = to_decimal(r.n_lower);
    out["m0"] = r.m0;
    out["geometric_bound"] = r.geometric_bound;
    ordered_json f = to_json(r.f_value);
    f["exact"] = rational_text(r.f_exact);
    out["f"] = std::move(f);
    out["s0"] = r.s0;
    out["H"] = to_json(r.H_value);
    out["H_pow_m"] = to_json(r.H_pow_m);
    out["admissible"] = r.admissible;
    return out;
}

ordered_json to_json(const ScanEntry& e) {
    ordered_json out;
    out["m"] = e.m;
    out["max_multiplicity"] = e.max_multiplicity;
    out["witness"] = to_json(e.witness);
    return out;
}

std::string render(const CensusReport& r, OutputFormat format) {
    std::ostringstream os;
    switch (format) {
        case OutputFormat::json:
            os << to_json(r).dump(2) << '\n';
            break;
        case OutputFormat::csv:
            os << "n,alphabet,parikh,N,P,max_multiplicity,max_value,min_value,spectrum\n";
            os << r.length() << ',' << csv_field(format_word(r.alphabet.letters())) << ','
               << csv_field(format_list(r.parikh.counts())) << ',' << to_decimal(r.class_size) << ','
               << to_decimal(r.distinct_values) << ',' << r.max_multiplicity << ',' << to_decimal(r.max_value) << ','
               << to_decimal(r.min_value) << ',' << csv_field(spectrum_text(r.spectrum)) << '\n';
            break;
        case OutputFormat::plain:
            os << "alphabet: " << format_word(r.alphabet.letters()) << '\n'
               << "parikh: " << format_list(r.parikh.counts()) << '\n'
               << "n: " << r.length() << '\n'
               << "N: " << to_decimal(r.class_size) << '\n'
               << "P: " << to_decimal(r.distinct_values) << '\n'
               << "spectrum: " << spectrum_text(r.spectrum) << '\n'
               << "max_multiplicity: " << r.max_multiplicity << '\n'
               << "max_value: " << to_decimal(r.max_value) << '\n'
               << "min_value: " << to_decimal(r.min_value) << '\n';
            for (const auto& group : r.witnesses) {
                for (const auto& vw : group.values) {
                    os << "witness mu=" << group.multiplicity << " value=" << to_decimal(vw.value) << ':';
                    for (const auto& w : vw.words) os << ' ' << format_word(w);
                    os << '\n';
                }
            }
            break;
    }
    return os.str();
}

std::string render(const BoundsReport& r, OutputFormat format) {
    std::ostringstream os;
    switch (format) {
        case OutputFormat::json:
            os << to_json(r).dump(2) << '\n';
            break;
        case OutputFormat::csv:
            os << "t,l,s,m,p_upper,n_lower,m0,geometric_bound,f_exact,f_midpoint,f_radius,s0,H_midpoint,H_radius,"
                  "admissible\n";
            os << r.t << ',' << r.l << ',' << r.s << ',' << r.m << ',' << to_decimal(r.p_upper) << ','
               << to_decimal(r.n_lower) << ',' << r.m0 << ',' << (r.geometric_bound ? "true" : "false") << ','
               << rational_text(r.f_exact) << ',' << r.f_value.midpoint_decimal() << ','
               << r.f_value.radius_decimal() << ',' << r.s0 << ',' << r.H_value.midpoint_decimal() << ','
               << r.H_value.radius_decimal() << ',' << (r.admissible ? "true" : "false") << '\n';
            break;
        case OutputFormat::plain:
            os << "t: " << r.t << "\nl: " << r.l << "\ns: " << r.s << "\nm: " << r.m << '\n'
               << "p_upper: " << to_decimal(r.p_upper) << '\n'
               << "n_lower: " << to_decimal(r.n_lower) << '\n'
               << "m0: " << r.m0 << '\n'
               << "geometric_bound: " << (r.geometric_bound ? "true" : "false") << '\n'
               << "f: " << rational_text(r.f_exact) << " (" << certified_text(r.f_value) << ")\n"
               << "s0: " << r.s0 << '\n'
               << "H: " << certified_text(r.H_value) << '\n'
               << "H^m: " << certified_text(r.H_pow_m) << '\n'
               << "admissible: " << (r.admissible ? "true" : "false") << '\n';
            break;
    }
    return os.str();
}

std::string render(const std::vector<WitnessRecord>& records, OutputFormat format) {
    std::ostringstream os;
    switch (format) {
        case OutputFormat::json: {
            ordered_json arr = ordered_json::array();
            for (const auto& w : records) arr.push_back(to_json(w));
            os << arr.dump(2) << '\n';
            break;
        }
        case OutputFormat::csv:
            os << "alphabet,parikh,word,value,multiplicity\n";
            for (const auto& w : records) {
                os << csv_field(format_word(w.alphabet.letters())) << ',' << csv_field(format_list(w.parikh.counts()))
                   << ',' << csv_field(format_word(w.word)) << ',' << to_decimal(w.value) << ',' << w.multiplicity
                   << '\n';
            }
            break;
        case OutputFormat::plain:
            for (const auto& w : records) {
                os << format_word(w.word) << " value=" << to_decimal(w.value) << " mu=" << w.multiplicity
                   << " parikh=" << format_list(w.parikh.counts()) << '\n';
            }
            break;
    }
    return os.str();
}

std::string render(const std::vector<ScanEntry>& entries, OutputFormat format) {
    std::ostringstream os;
    switch (format) {
        case OutputFormat::json: {
            ordered_json arr = ordered_json::array();
            for (const auto& e : entries) arr.push_back(to_json(e));
            os << arr.dump(2) << '\n';
            break;
        }
        case OutputFormat::csv:
            os << "m,max_multiplicity,alphabet,parikh,word,value,multiplicity\n";
            for (const auto& e : entries) {
                const auto& w = e.witness;
                os << e.m << ',' << e.max_multiplicity << ',' << csv_field(format_word(w.alphabet.letters())) << ','
                   << csv_field(format_list(w.parikh.counts())) << ',' << csv_field(format_word(w.word)) << ','
                   << to_decimal(w.value) << ',' << w.multiplicity << '\n';
            }
            break;
        case OutputFormat::plain:
            for (const auto& e : entries) {
                os << "m=" << e.m << " max_mu=" << e.max_multiplicity << " witness=" << format_word(e.witness.word)
                   << " value=" << to_decimal(e.witness.value) << '\n';
            }
            break;
    }
    return os.str();
}

}  // namespace contin
