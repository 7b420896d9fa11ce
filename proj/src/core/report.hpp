#ifndef FIBMAP_CORE_REPORT_HPP
#define FIBMAP_CORE_REPORT_HPP

#include <string>
#include <vector>

namespace fibmap::report {

// certified: the computation itself proves the claim (exact arithmetic,
//            or a witness that is a proof, e.g. an explicit progression).
// bounded:   a finite re-verification of a statement quantified over all d;
//            honest evidence, not a proof.
// conjecture: spot-check of an open conjecture; failures are reported
//            separately and never fail the core run.
enum class CheckKind { certified, bounded, conjecture };

struct Check {
    std::string id;
    std::string claim;
    std::string observed;
    std::string expected;
    bool pass = false;
    CheckKind kind = CheckKind::certified;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    bool core_passed() const;          // every non-conjecture check passes
    bool conjecture_failed() const;
    std::size_t failures() const;

    std::string render_text() const;
    std::string render_csv() const;
    std::string render_json() const;
    std::string render(const std::string& format) const;  // text|csv|json|md
};

const char* kind_name(CheckKind k);

}  // namespace fibmap::report

#endif
