#include "core/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "core/errors.hpp"

namespace fibmap::report {

const char* kind_name(CheckKind k) {
    switch (k) {
        case CheckKind::certified: return "certified";
        case CheckKind::bounded: return "bounded";
        case CheckKind::conjecture: return "conjecture";
    }
    return "?";
}

bool SuiteReport::core_passed() const {
    for (const auto& c : checks)
        if (c.kind != CheckKind::conjecture && !c.pass) return false;
    return true;
}

bool SuiteReport::conjecture_failed() const {
    for (const auto& c : checks)
        if (c.kind == CheckKind::conjecture && !c.pass) return true;
    return false;
}

std::size_t SuiteReport::failures() const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (!c.pass) ++n;
    return n;
}

std::string SuiteReport::render_text() const {
    std::ostringstream os;
    os << "suite " << suite << "\n";
    for (const auto& c : checks) {
        os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << " (" << kind_name(c.kind)
           << "): " << c.claim << "\n";
        if (!c.pass || c.observed != c.expected)
            os << "         observed: " << c.observed << "\n         expected: " << c.expected
               << "\n";
    }
    os << (core_passed() ? "OK" : "FAILED") << ": " << checks.size() - failures() << "/"
       << checks.size() << " checks passed";
    if (conjecture_failed()) os << " (conjecture failures present)";
    os << "\n";
    return os.str();
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

}  // namespace

std::string SuiteReport::render_csv() const {
    std::ostringstream os;
    os << "suite,id,kind,pass,claim,observed,expected\n";
    for (const auto& c : checks)
        os << suite << ',' << csv_escape(c.id) << ',' << kind_name(c.kind) << ','
           << (c.pass ? 1 : 0) << ',' << csv_escape(c.claim) << ',' << csv_escape(c.observed)
           << ',' << csv_escape(c.expected) << '\n';
    return os.str();
}

std::string SuiteReport::render_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["core_passed"] = core_passed();
    j["conjecture_failed"] = conjecture_failed();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"id", c.id},
                               {"kind", kind_name(c.kind)},
                               {"pass", c.pass},
                               {"claim", c.claim},
                               {"observed", c.observed},
                               {"expected", c.expected}});
    return j.dump(2) + "\n";
}

std::string SuiteReport::render(const std::string& format) const {
    if (format == "text" || format == "md") return render_text();
    if (format == "csv") return render_csv();
    if (format == "json") return render_json();
    throw InvalidArgument("unknown report format: " + format);
}

}  // namespace fibmap::report
