#pragma once

#include <cstdint>
#include <iosfwd>

#include "qtwist/closedform.hpp"

namespace qtwist {

enum class Verdict { Pass, Fail, PaperDiscrepancy };

std::string verdict_name(Verdict v);

/// One verified identity instance. Fail is reserved for internal
/// inconsistency (the oracle's own laws breaking); paper-discrepancy marks a
/// stated closed form disagreeing with the oracle and carries its value.
struct CheckResult {
    std::string suite;
    std::string item;
    Verdict verdict = Verdict::Pass;
    std::string detail;
    double elapsed_ms = 0.0;

    std::string to_json() const;
};

/// Parameter grid shared by the suites. The defaults cover every formula
/// branch (including m + n = 0) at desk scale.
struct GridParams {
    int order = 3;
    std::uint64_t seed = 12345;
    std::vector<Deg> n_list = {{1, 1}, {0, 1}, {2, -1}};
    std::vector<Rational> c_list = {Rational(0), Rational(1), rat(-1, 2)};
    std::vector<Deg> m_list = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {-1, -1}, {2, -1}};
    int degree_window = 2;  // Lie-soundness window [-w, w]^2
    int hopf_window = 1;    // generator window for the Hopf-axiom suite
    int ladder_power = 3;   // maximum i/j in the conjugation identities
    int factorial_span = 4; // maximum r/s/m in the factorial identities
};

/// The x parameters with the smallest denominators solving x1 n1 + x2 n2 = 1.
std::pair<Rational, Rational> default_x(Deg n);

/// Context for a case over the default x rule.
TwistContext context_for(Case c, Deg n, int order);

/// All generators with degrees in [-w, w]^2; g/h skip (0,0); optionally
/// includes d1, d2.
std::vector<GenId> generator_window(int w, bool with_derivations = true);

std::vector<std::string> suite_names();

/// Runs one named suite over the grid. Unknown names throw.
std::vector<CheckResult> run_suite(const std::string& name, const GridParams& params);

struct Summary {
    std::vector<CheckResult> results;
    int passed = 0;
    int failed = 0;
    int discrepancies = 0;
};

Summary run_all(const GridParams& params);

/// Identity labels every full run must cover; each label is the prefix of at
/// least one emitted item. Guards the suite inventory against silent gaps.
const std::vector<std::string>& identity_manifest();

void write_table(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace qtwist
