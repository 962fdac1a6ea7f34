// Shared helpers for the verification suites (internal to src/).
#pragma once

#include <algorithm>
#include <chrono>
#include <optional>

#include "qtwist/verify.hpp"

namespace qtwist::suites {

using Clock = std::chrono::steady_clock;

inline std::string deg_str(Deg d) {
    return "(" + std::to_string(d.m1) + "," + std::to_string(d.m2) + ")";
}

class Recorder {
public:
    explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

    template <class Fn>
    void item(const std::string& name, Verdict on_mismatch, Fn&& fn) {
        CheckResult r;
        r.suite = suite_;
        r.item = name;
        auto t0 = Clock::now();
        std::optional<std::string> mismatch;
        try {
            mismatch = fn();
        } catch (const std::exception& e) {
            mismatch = std::string("exception: ") + e.what();
            on_mismatch = Verdict::Fail;
        }
        r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        if (mismatch) {
            r.verdict = on_mismatch;
            r.detail = *mismatch;
        }
        results_.push_back(std::move(r));
    }

    void add(const std::string& name, Verdict v, const std::string& detail, double ms) {
        results_.push_back({suite_, name, v, detail, ms});
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::string suite_;
    std::vector<CheckResult> results_;
};

template <class S>
std::optional<std::string> sdiff(const S& lhs, const S& rhs) {
    int at = first_mismatch(lhs, rhs);
    if (at < 0) return std::nullopt;
    return "t^" + std::to_string(at) + ": lhs = " + lhs[at].to_string() +
           " ; rhs = " + rhs[at].to_string();
}

inline std::optional<std::string> udiff(const UElt& lhs, const UElt& rhs) {
    if (lhs == rhs) return std::nullopt;
    return "lhs = " + lhs.to_string() + " ; rhs = " + rhs.to_string();
}

inline LaurentQ qp(long e) { return LaurentQ::q_pow(e); }

inline UElt gen_u(GenKind k, Deg m) { return UElt::gen(GenId::make(k, m)); }

inline std::string family_name(GenKind k) {
    if (k == GenKind::D1) return "d1";
    if (k == GenKind::D2) return "d2";
    return std::string(1, kind_letter(k));
}

// m-degrees exercised by a context-dependent suite: the grid list plus -n
// (the branch point), minus duplicates.
inline std::vector<Deg> suite_degrees(const GridParams& p, Deg n) {
    std::vector<Deg> out = p.m_list;
    if (std::find(out.begin(), out.end(), -n) == out.end()) out.push_back(-n);
    return out;
}

// Graded sample generators for one context, plus d, d1, d2.
inline std::vector<GenId> suite_generators(const GridParams& p, Deg n) {
    std::vector<GenId> gens;
    for (GenKind k : {GenKind::E, GenKind::F, GenKind::G, GenKind::H})
        for (Deg m : suite_degrees(p, n)) {
            if ((k == GenKind::G || k == GenKind::H) && m.is_zero()) continue;
            gens.push_back(GenId::make(k, m));
        }
    gens.push_back(GenId::d());
    gens.push_back(GenId::d1());
    gens.push_back(GenId::d2());
    return gens;
}

constexpr Case kAllCases[] = {Case::G, Case::E, Case::D, Case::H, Case::F, Case::DF};

std::vector<CheckResult> suite_liealg(const GridParams& p);
std::vector<CheckResult> suite_lemma21(const GridParams& p);
std::vector<CheckResult> suite_lemma24(const GridParams& p);
std::vector<CheckResult> suite_cocycle(const GridParams& p);
std::vector<CheckResult> suite_hopf(const GridParams& p);
std::vector<CheckResult> suite_lemma31(const GridParams& p);
std::vector<CheckResult> suite_lemma32(const GridParams& p);
std::vector<CheckResult> suite_lemma33(const GridParams& p);
std::vector<CheckResult> suite_lemma41(const GridParams& p);
std::vector<CheckResult> suite_lemma42(const GridParams& p);
std::vector<CheckResult> suite_lemma43(const GridParams& p);
std::vector<CheckResult> suite_lemma51(const GridParams& p);
std::vector<CheckResult> suite_lemma52(const GridParams& p);
std::vector<CheckResult> suite_lemma53(const GridParams& p);
std::vector<CheckResult> suite_theorem(Case c, const GridParams& p);
std::vector<CheckResult> suite_transport(const GridParams& p);
std::vector<CheckResult> suite_noncocomm(const GridParams& p);
std::vector<CheckResult> suite_restriction(const GridParams& p);

}  // namespace qtwist::suites
