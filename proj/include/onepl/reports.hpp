#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "onepl/graph.hpp"

namespace onepl {

enum class HypStatus { Met, Unmet, Assumed };
enum class Verdict { Verified, Vacuous, Counterexample };

struct Hypothesis {
    std::string name;
    HypStatus status = HypStatus::Met;
};

// One checked relation. `holds` states whether the relation in `name` is
// satisfied (equality unless the name says otherwise, e.g. "..._ge_8").
struct IdentityReport {
    std::string name;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool holds = false;
    std::vector<Hypothesis> hypotheses;
    Verdict verdict = Verdict::Vacuous;
};

// verified iff every hypothesis is met or assumed and the relation holds;
// counterexample iff all met-or-assumed and it fails; vacuous otherwise.
Verdict settle(const std::vector<Hypothesis>& hypotheses, bool holds);

IdentityReport make_identity(std::string name, std::int64_t lhs, std::int64_t rhs, bool holds,
                             std::vector<Hypothesis> hypotheses);

struct BoundEntry {
    std::string key;
    std::int64_t value = 0;
};

struct BoundReport {
    std::int64_t n = 0;
    CliqueCensus census;
    std::string mode;  // "theorem" or "audit-4conn"
    std::vector<BoundEntry> thresholds;
    std::vector<BoundEntry> slack;  // threshold minus measured count
    std::vector<Hypothesis> hypotheses;
    Verdict verdict = Verdict::Vacuous;
};

const char* to_string(HypStatus s);
const char* to_string(Verdict v);

}  // namespace onepl
