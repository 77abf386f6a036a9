#pragma once

#include "sbv/errors.hpp"
#include "sbv/instrumented.hpp"
#include "sbv/scalar.hpp"

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sbv {

enum class Parity { odd, even };

inline const char* to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

// Interpolation nodes 0 < t_1 < t_2 < ... < t_{n+1} < 1, strictly. The open
// interval and the strict ordering are checked on construction; exact 0 and 1
// are rejected with no tolerance.
template <Scalar S>
class NodeSet {
public:
    explicit NodeSet(std::vector<S> nodes) : nodes_(std::move(nodes)) {
        if (nodes_.empty()) throw node_error("node set is empty");
        const S zero = scalar_traits<S>::zero();
        const S one = scalar_traits<S>::one();
        for (std::size_t k = 0; k < nodes_.size(); ++k) {
            if (!(zero < nodes_[k]) || !(nodes_[k] < one))
                throw node_error("node " + std::to_string(k + 1) + " is outside (0,1)");
        }
        for (std::size_t k = 0; k + 1 < nodes_.size(); ++k) {
            if (!(nodes_[k] < nodes_[k + 1])) {
                std::ostringstream os;
                os << "nodes " << k + 1 << " and " << k + 2 << " are not strictly increasing ("
                   << nodes_[k] << " then " << nodes_[k + 1] << ")";
                throw node_error(os.str());
            }
        }
    }

    std::size_t size() const { return nodes_.size(); }
    std::size_t degree() const { return nodes_.size() - 1; }
    Parity parity() const { return degree() % 2 == 1 ? Parity::odd : Parity::even; }

    const S& operator[](std::size_t k) const { return nodes_[k]; }
    const std::vector<S>& values() const { return nodes_; }

    auto begin() const { return nodes_.begin(); }
    auto end() const { return nodes_.end(); }

private:
    std::vector<S> nodes_;
};

inline NodeSet<double> to_double_nodes(const NodeSet<Rational>& nodes) {
    std::vector<double> v;
    v.reserve(nodes.size());
    for (const auto& t : nodes) v.push_back(t.to_double());
    return NodeSet<double>(std::move(v));
}

// Wraps nodes with provenance tags for the subtraction audit.
inline NodeSet<Tracked> to_tracked_nodes(const NodeSet<double>& nodes) {
    std::vector<Tracked> v;
    v.reserve(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k)
        v.push_back(Tracked::node(nodes[k], static_cast<std::int32_t>(k)));
    return NodeSet<Tracked>(std::move(v));
}

inline std::vector<Tracked> to_tracked_data(const std::vector<double>& b) {
    std::vector<Tracked> v;
    v.reserve(b.size());
    for (std::size_t k = 0; k < b.size(); ++k)
        v.push_back(Tracked::data(b[k], static_cast<std::int32_t>(k)));
    return v;
}

} // namespace sbv
