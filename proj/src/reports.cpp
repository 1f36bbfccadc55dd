#include "onepl/reports.hpp"

namespace onepl {

Verdict settle(const std::vector<Hypothesis>& hypotheses, bool holds) {
    for (const auto& h : hypotheses)
        if (h.status == HypStatus::Unmet) return Verdict::Vacuous;
    return holds ? Verdict::Verified : Verdict::Counterexample;
}

IdentityReport make_identity(std::string name, std::int64_t lhs, std::int64_t rhs, bool holds,
                             std::vector<Hypothesis> hypotheses) {
    IdentityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.holds = holds;
    r.hypotheses = std::move(hypotheses);
    r.verdict = settle(r.hypotheses, holds);
    return r;
}

const char* to_string(HypStatus s) {
    switch (s) {
        case HypStatus::Met: return "met";
        case HypStatus::Unmet: return "unmet";
        case HypStatus::Assumed: return "assumed";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Verified: return "verified";
        case Verdict::Vacuous: return "vacuous";
        case Verdict::Counterexample: return "counterexample";
    }
    return "?";
}

}  // namespace onepl
