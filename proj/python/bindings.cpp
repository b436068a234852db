#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "contin/contin.hpp"

namespace py = pybind11;
using namespace contin;

namespace {

// Big integers cross the boundary as decimal text.
py::int_ to_py(const BigNat& v) {
    const std::string text = to_decimal(v);
    return py::reinterpret_steal<py::int_>(PyLong_FromString(text.c_str(), nullptr, 10));
}

PrecisionPolicy policy(unsigned max_bits) { return {std::min(128u, max_bits), max_bits}; }

std::vector<Letter> letters_of(const Word& w) { return {w.letters().begin(), w.letters().end()}; }
std::vector<Letter> letters_of(const CanonicalWord& w) { return {w.letters().begin(), w.letters().end()}; }

CensusOptions options(unsigned workers, std::uint64_t limit) {
    CensusOptions o;
    o.workers = workers;
    o.enumeration_limit = limit;
    return o;
}

py::dict record_dict(const WitnessRecord& r) {
    py::dict d;
    const auto a = r.alphabet.letters();
    const auto p = r.parikh.counts();
    d["alphabet"] = std::vector<Letter>(a.begin(), a.end());
    d["parikh"] = std::vector<Count>(p.begin(), p.end());
    d["word"] = letters_of(r.word);
    d["value"] = to_py(r.value);
    d["multiplicity"] = r.multiplicity;
    return d;
}

py::tuple interval(const CertifiedReal& x) {
    return py::make_tuple(mpfr_get_d(x.lower(), MPFR_RNDD), mpfr_get_d(x.upper(), MPFR_RNDU));
}

}  // namespace

PYBIND11_MODULE(_contin, m) {
    m.doc() = "Exact continuants, extremal arrangements, multiplicity censuses and counting bounds";

    auto base = py::register_exception<Error>(m, "ContinError", PyExc_RuntimeError);
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<LimitExceeded>(m, "LimitExceeded", base.ptr());
    py::register_exception<MemoryBudgetExceeded>(m, "MemoryBudgetExceeded", base.ptr());
    py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted", base.ptr());

    constexpr std::uint64_t default_limit = 100'000'000;

    m.def("continuant", [](const std::vector<Letter>& w) { return to_py(continuant(Word(w))); }, py::arg("word"));
    m.def(
        "continuant_matrix", [](const std::vector<Letter>& w) { return to_py(continuant_matrix(Word(w))); },
        py::arg("word"));
    m.def(
        "split_identity",
        [](const std::vector<Letter>& w, std::size_t j) {
            const auto s = split_identity(Word(w), j);
            return py::make_tuple(to_py(s.lhs), to_py(s.rhs));
        },
        py::arg("word"), py::arg("j"));
    m.def(
        "doubling_bound_check", [](const std::vector<Letter>& w, std::size_t j) { return doubling_bound_check(Word(w), j); },
        py::arg("word"), py::arg("j"));
    m.def(
        "generalized_fibonacci", [](std::uint64_t r, std::uint64_t j) { return to_py(generalized_fibonacci(r, j)); },
        py::arg("r"), py::arg("j"));
    m.def(
        "canonicalize", [](const std::vector<Letter>& w) { return letters_of(canonicalize(Word(w))); },
        py::arg("word"));

    m.def(
        "build_w_max",
        [](const std::vector<Letter>& a, const std::vector<Count>& p) {
            return letters_of(build_w_max(Alphabet(a), ParikhVector(p)));
        },
        py::arg("alphabet"), py::arg("parikh"));
    m.def(
        "verify_wmax",
        [](const std::vector<Letter>& a, const std::vector<Count>& p, unsigned workers, std::uint64_t limit) {
            py::gil_scoped_release release;
            return verify_wmax(Alphabet(a), ParikhVector(p), options(workers, limit));
        },
        py::arg("alphabet"), py::arg("parikh"), py::arg("workers") = 1, py::arg("limit") = default_limit);

    m.def(
        "exact_class_count", [](const std::vector<Count>& p) { return to_py(exact_class_count(ParikhVector(p))); },
        py::arg("parikh"));
    m.def(
        "enumerate_classes",
        [](const std::vector<Letter>& a, const std::vector<Count>& p, std::uint64_t limit) {
            std::vector<std::vector<Letter>> out;
            for (const auto& w : enumerate_classes(Alphabet(a), ParikhVector(p), limit)) out.push_back(letters_of(w));
            return out;
        },
        py::arg("alphabet"), py::arg("parikh"), py::arg("limit") = default_limit);
    m.def(
        "run_census_json",
        [](const std::vector<Letter>& a, const std::vector<Count>& p, unsigned workers, std::uint64_t limit) {
            CensusReport r = [&] {
                py::gil_scoped_release release;
                return run_census(Alphabet(a), ParikhVector(p), options(workers, limit));
            }();
            return to_json(r).dump();
        },
        py::arg("alphabet"), py::arg("parikh"), py::arg("workers") = 1, py::arg("limit") = default_limit);
    m.def(
        "multiplicity_of",
        [](const std::vector<Letter>& w, unsigned workers, std::uint64_t limit) {
            py::gil_scoped_release release;
            return multiplicity_of(Word(w), options(workers, limit));
        },
        py::arg("word"), py::arg("workers") = 1, py::arg("limit") = default_limit);

    m.def(
        "find_witness",
        [](const std::vector<Letter>& a, const std::vector<Count>& p, std::uint64_t target, unsigned workers,
           std::uint64_t limit) -> py::object {
            std::optional<WitnessRecord> r;
            {
                py::gil_scoped_release release;
                r = find_witness(Alphabet(a), ParikhVector(p), target, options(workers, limit));
            }
            if (!r) return py::none();
            return record_dict(*r);
        },
        py::arg("alphabet"), py::arg("parikh"), py::arg("target_mu"), py::arg("workers") = 1,
        py::arg("limit") = default_limit);

    m.def("p_upper_bound", [](unsigned s, std::uint64_t mm) { return to_py(p_upper_bound(s, mm)); }, py::arg("s"),
          py::arg("m"));
    m.def(
        "n_lower_bound",
        [](unsigned t, unsigned l, unsigned s, std::uint64_t mm) { return to_py(n_lower_bound(t, l, s, mm)); },
        py::arg("t"), py::arg("l"), py::arg("s"), py::arg("m"));
    m.def("m0", &m0, py::arg("s"));
    m.def("geometric_bound_holds", &geometric_bound_holds, py::arg("s"), py::arg("m"));
    m.def(
        "f_exact",
        [](unsigned t, unsigned l, unsigned s) {
            const Rational q = f_exact(t, l, s);
            return py::make_tuple(to_py(q.get_num()), to_py(q.get_den()));
        },
        py::arg("t"), py::arg("l"), py::arg("s"));
    m.def(
        "s0", [](unsigned t, unsigned l, unsigned max_bits) { return s0(t, l, policy(max_bits)); },
        py::arg("t"), py::arg("l"), py::arg("max_bits") = 4096);
    m.def(
        "H_interval", [](unsigned t, unsigned l, unsigned s, unsigned bits) { return interval(H_value(t, l, s, bits)); },
        py::arg("t"), py::arg("l"), py::arg("s"), py::arg("bits") = 128);
    m.def(
        "smallest_admissible_s",
        [](unsigned t, unsigned l, unsigned max_bits) { return smallest_admissible_s(t, l, policy(max_bits)); },
        py::arg("t"), py::arg("l"), py::arg("max_bits") = 4096);
    m.def(
        "stirling_brackets_factorial", [](std::uint64_t n) { return stirling_brackets_factorial(n); }, py::arg("n"));
}
