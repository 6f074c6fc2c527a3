#pragma once

#include <string_view>

namespace snipkit {

// Reason a computed indicator carries no number. Undefined values propagate;
// they are never replaced by sentinel zeros.
enum class Undef : unsigned char {
    none = 0,
    no_window_papers,    // denominator: journal has no papers in the cited window
    empty_subject_field, // nobody cites the journal inside the field window
    no_defined_cp,       // median requested over zero defined citation potentials
    zero_median_cp,      // normalization impossible: median citation potential is 0
    zero_rdcp,           // SNIP division by a zero relative citation potential
    zero_r_member,       // strict policy: a field member has r = 0
    undefined_input,     // propagated from an undefined operand
};

constexpr std::string_view undef_label(Undef reason) {
    switch (reason) {
        case Undef::none: return "";
        case Undef::no_window_papers: return "no_window_papers";
        case Undef::empty_subject_field: return "empty_subject_field";
        case Undef::no_defined_cp: return "no_defined_cp";
        case Undef::zero_median_cp: return "zero_median_cp";
        case Undef::zero_rdcp: return "zero_rdcp";
        case Undef::zero_r_member: return "zero_r_member";
        case Undef::undefined_input: return "undefined_input";
    }
    return "";
}

constexpr Undef undef_from_label(std::string_view label) {
    for (auto r : {Undef::no_window_papers, Undef::empty_subject_field, Undef::no_defined_cp,
                   Undef::zero_median_cp, Undef::zero_rdcp, Undef::zero_r_member,
                   Undef::undefined_input}) {
        if (undef_label(r) == label) return r;
    }
    return Undef::undefined_input;
}

// An indicator value, or the reason there is none.
struct Metric {
    double value = 0.0;
    Undef reason = Undef::none;

    bool defined() const { return reason == Undef::none; }

    static Metric of(double v) { return Metric{v, Undef::none}; }
    static Metric undefined(Undef r) { return Metric{0.0, r}; }
};

} // namespace snipkit
