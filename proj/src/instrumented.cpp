#include "sbv/instrumented.hpp"

#include <ostream>

namespace sbv {

std::ostream& operator<<(std::ostream& os, const Tracked& v) { return os << v.value(); }

namespace {
thread_local TraceSession* g_current = nullptr;
}

TraceSession::TraceSession() { g_current = this; }

TraceSession::~TraceSession() {
    if (g_current == this) g_current = nullptr;
}

TraceSession* TraceSession::current() { return g_current; }

AuditReport audit_subtractions(const SubtractionTrace& trace,
                               std::span<const OperandRule> policy) {
    AuditReport report;
    report.events_checked = trace.events.size();
    for (std::size_t k = 0; k < trace.events.size(); ++k) {
        const auto& ev = trace.events[k];
        bool allowed = false;
        for (const auto& rule : policy) {
            if (rule.matches(ev.lhs, ev.rhs)) {
                allowed = true;
                break;
            }
        }
        if (!allowed) report.violations.push_back({k, ev.lhs, ev.rhs});
    }
    report.pass = report.violations.empty();
    return report;
}

std::vector<OperandRule> decompose_policy() {
    return {
        OperandRule{Provenance::node, Provenance::node, true},
        OperandRule{Provenance::one, Provenance::node, false},
    };
}

std::vector<OperandRule> solve_policy() {
    auto rules = decompose_policy();
    rules.push_back(OperandRule{Provenance::data, std::nullopt, false});
    rules.push_back(OperandRule{std::nullopt, Provenance::data, false});
    rules.push_back(OperandRule{Provenance::derived, std::nullopt, false});
    rules.push_back(OperandRule{std::nullopt, Provenance::derived, false});
    return rules;
}

} // namespace sbv
