#pragma once

#include "sbv/scalar.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace sbv {

// Input provenance of an instrumented value. Tags propagate one level only:
// the result of any arithmetic op is `derived`.
enum class Provenance : std::uint8_t {
    one,      // the literal constant 1
    constant, // any other constant (integer ratios, binomials)
    node,     // node t_k (index = k, 0-based)
    data,     // right-hand-side entry b_k (index = k, 0-based)
    derived,  // result of an arithmetic operation
};

struct Tag {
    Provenance kind = Provenance::constant;
    std::int32_t index = -1;
};

struct SubtractionEvent {
    Tag lhs, rhs; // operands of lhs - rhs
};

struct SubtractionTrace {
    std::vector<SubtractionEvent> events;
};

struct OpCounts {
    std::uint64_t adds = 0, subs = 0, muls = 0, divs = 0;
    std::uint64_t total() const { return adds + subs + muls + divs; }
};

// Activates recording for the current thread; recording stops when the
// session is destroyed. Sessions do not nest.
class TraceSession {
public:
    TraceSession();
    ~TraceSession();
    TraceSession(const TraceSession&) = delete;
    TraceSession& operator=(const TraceSession&) = delete;

    const SubtractionTrace& trace() const { return trace_; }
    const OpCounts& counts() const { return counts_; }

    static TraceSession* current();

    void record_sub(const Tag& lhs, const Tag& rhs) {
        ++counts_.subs;
        trace_.events.push_back({lhs, rhs});
    }
    void record_add() { ++counts_.adds; }
    void record_mul() { ++counts_.muls; }
    void record_div() { ++counts_.divs; }

private:
    SubtractionTrace trace_;
    OpCounts counts_;
};

// Instrumented double: performs exactly the same IEEE arithmetic as a plain
// double (observation never alters a result) while reporting every operation
// to the active TraceSession.
class Tracked {
public:
    Tracked() = default;
    static Tracked node(double v, std::int32_t k) { return Tracked(v, {Provenance::node, k}); }
    static Tracked data(double v, std::int32_t k) { return Tracked(v, {Provenance::data, k}); }
    static Tracked constant(double v) { return Tracked(v, {Provenance::constant, -1}); }
    static Tracked one() { return Tracked(1.0, {Provenance::one, -1}); }

    double value() const { return v_; }
    const Tag& tag() const { return tag_; }

    Tracked operator-() const { return Tracked(-v_, derived()); }

    friend Tracked operator+(const Tracked& a, const Tracked& b) {
        if (auto* s = TraceSession::current()) s->record_add();
        return Tracked(a.v_ + b.v_, derived());
    }
    friend Tracked operator-(const Tracked& a, const Tracked& b) {
        if (auto* s = TraceSession::current()) s->record_sub(a.tag_, b.tag_);
        return Tracked(a.v_ - b.v_, derived());
    }
    friend Tracked operator*(const Tracked& a, const Tracked& b) {
        if (auto* s = TraceSession::current()) s->record_mul();
        return Tracked(a.v_ * b.v_, derived());
    }
    friend Tracked operator/(const Tracked& a, const Tracked& b) {
        if (auto* s = TraceSession::current()) s->record_div();
        return Tracked(a.v_ / b.v_, derived());
    }

    Tracked& operator+=(const Tracked& o) { return *this = *this + o; }
    Tracked& operator-=(const Tracked& o) { return *this = *this - o; }
    Tracked& operator*=(const Tracked& o) { return *this = *this * o; }
    Tracked& operator/=(const Tracked& o) { return *this = *this / o; }

    friend bool operator==(const Tracked& a, const Tracked& b) { return a.v_ == b.v_; }
    friend auto operator<=>(const Tracked& a, const Tracked& b) { return a.v_ <=> b.v_; }

private:
    Tracked(double v, Tag t) : v_(v), tag_(t) {}
    static Tag derived() { return {Provenance::derived, -1}; }

    double v_ = 0.0;
    Tag tag_{Provenance::constant, -1};
};

std::ostream& operator<<(std::ostream& os, const Tracked& v);

template <>
struct scalar_traits<Tracked> {
    static constexpr bool exact = false;
    static Tracked from_ratio(long long num, long long den) {
        if (num == 1 && den == 1) return Tracked::one();
        return Tracked::constant(static_cast<double>(num) / static_cast<double>(den));
    }
    static Tracked from_rational(const Rational& r) {
        if (r == Rational(1)) return Tracked::one();
        return Tracked::constant(r.to_double());
    }
    static double to_double(const Tracked& v) { return v.value(); }
    static Tracked zero() { return Tracked::constant(0.0); }
    static Tracked one() { return Tracked::one(); }
};

// One admissible operand-pair shape for a subtraction. A null provenance
// matches anything. `lhs_index_greater` additionally requires both operands
// to carry indices with lhs.index > rhs.index (the t_i - t_j, i > j form).
struct OperandRule {
    std::optional<Provenance> lhs;
    std::optional<Provenance> rhs;
    bool lhs_index_greater = false;

    bool matches(const Tag& l, const Tag& r) const {
        if (lhs && l.kind != *lhs) return false;
        if (rhs && r.kind != *rhs) return false;
        if (lhs_index_greater && !(l.index > r.index)) return false;
        return true;
    }
};

struct AuditViolation {
    std::size_t event_index;
    Tag lhs, rhs;
};

struct AuditReport {
    bool pass = true;
    std::size_t events_checked = 0;
    std::vector<AuditViolation> violations;
};

AuditReport audit_subtractions(const SubtractionTrace& trace,
                               std::span<const OperandRule> policy);

// t_i - t_j with i > j, and 1 - t_k: the only subtractions the decomposition
// may perform.
std::vector<OperandRule> decompose_policy();

// Factor application additionally subtracts quantities carrying right-hand-
// side data (the data entries themselves and values derived from them).
std::vector<OperandRule> solve_policy();

} // namespace sbv
